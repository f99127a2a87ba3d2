import pytest

from motivic.errors import MissingBasePolynomialError, WeightRuleError
from motivic.laurent import ONE, parse_poly, q_power, self_dual_convert
from motivic.spaces import Affine, ConeOverPlucker, Grass, Product
from motivic.weights import (CompFactor, ConstantModule, FilteredHodgeObject,
                             ICModule, PointModule, StalkTable, e_ic_X,
                             e_of_object, ec_ic_X, ec_of_object,
                             ec_vanishing_cycles, ic_stalk_table,
                             link_hodge_twists, milnor_fibre_stalk_table,
                             phi4_restricted_object, twist_bookkeeping_check,
                             vanishing_cycle_object)

CONE = ConeOverPlucker(Grass(2, 6))


def test_vanishing_cycle_object_shape():
    obj = vanishing_cycle_object()
    assert obj.weights() == [14, 15, 16]
    assert obj.kinds_palindromic()
    assert obj.ambient_shift == 15
    kinds = [type(f.kind).__name__ for f in obj.factors]
    assert kinds == ["PointModule", "ICModule", "PointModule"]
    assert [f.twist for f in obj.factors] == [-7, -3, -8]
    assert len(obj.assumptions) == 1


def test_weight_rules():
    # point module: twist -k has weight 2k
    assert CompFactor("origin", PointModule(), 0, -7, 14).weight == 14
    with pytest.raises(WeightRuleError):
        CompFactor("origin", PointModule(), 0, -7, 15)
    # IC on a 9-dimensional space with twist -3 has weight 9 + 6
    CompFactor("X", ICModule(CONE), 0, -3, 15)
    with pytest.raises(WeightRuleError):
        CompFactor("X", ICModule(CONE), 0, -3, 14)
    # constant module on C^3 with twist -4 has weight 3 + 8
    CompFactor("S4", ConstantModule(Affine(3)), 3, -4, 11)
    with pytest.raises(WeightRuleError):
        CompFactor("S4", ConstantModule(Affine(3)), 3, -4, 12)


def test_weights_strictly_increasing():
    f1 = CompFactor("origin", PointModule(), 0, -7, 14)
    with pytest.raises(ValueError):
        FilteredHodgeObject(factors=(f1, f1))


def test_stalk_tables():
    t = milnor_fibre_stalk_table()
    assert t.degree_map() == {-9: ((1, -3),), -5: ((1, -5),), 0: ((1, -8),)}
    assert t.e_poly() == -q_power(3) - q_power(5) + q_power(8)
    assert ic_stalk_table().e_poly() == -(ONE + q_power(2) + q_power(4))
    with pytest.raises(ValueError):
        StalkTable.of({0: [(0, -1)]})


def test_link_twists_consistent_with_ic_stalks():
    link = link_hodge_twists()
    # IC stalk in degree k carries the twist of the link in degree k + 9
    for k, cells in ic_stalk_table().degree_map().items():
        assert cells == ((1, link[k + 9]),)


def test_ic_polynomials():
    assert e_ic_X() == parse_poly("-(1 + (x*y)^2 + (x*y)^4)")
    assert ec_ic_X() == parse_poly("-((x*y)^5 + (x*y)^7 + (x*y)^9)")
    assert int(e_ic_X().eval_at(1, 1)) == -3


def test_routes_agree_and_match_quoted():
    for route in ("stalk-stratum", "weight-filtration"):
        e, e_c = ec_vanishing_cycles(route)
        assert e == parse_poly("(x*y)^3 * ((x*y)^5 - (x*y)^2 - 1)")
        assert e_c == parse_poly("(x*y)^7 * (1 - (x*y)^3 - (x*y)^5)")
    with pytest.raises(ValueError):
        ec_vanishing_cycles("nope")


def test_route_self_duality_and_euler():
    e, e_c = ec_vanishing_cycles("stalk-stratum")
    assert self_dual_convert(e, 15) == e_c
    assert self_dual_convert(e_c, 15) == e
    assert int(e.eval_at(1, 1)) == -1


def test_weight_filtration_route_decomposition():
    obj = vanishing_cycle_object()
    assert ec_of_object(obj) == \
        q_power(7) + q_power(3) * ec_ic_X() + q_power(8)
    assert e_of_object(obj) == \
        q_power(7) + q_power(3) * e_ic_X() + q_power(8)


def test_ec_of_object_pieces():
    single = FilteredHodgeObject(
        factors=(CompFactor("origin", PointModule(), 0, -7, 14),))
    assert ec_of_object(single, {}) == q_power(7)
    shifted = FilteredHodgeObject(
        factors=(CompFactor("S", ConstantModule(Affine(3)), 3, 0, 3),))
    assert ec_of_object(shifted, {}) == -q_power(3)
    missing = FilteredHodgeObject(
        factors=(CompFactor("Y", ICModule(CONE), 0, -3, 15),))
    with pytest.raises(MissingBasePolynomialError):
        ec_of_object(missing, {})


def test_phi4_restricted_object():
    obj = phi4_restricted_object()
    assert obj.weights() == [11, 12, 13]
    assert obj.kinds_palindromic()
    ic = obj.factors[1]
    assert ic.kind == ICModule(Product(Affine(3), CONE))
    pieces = [ec_of_object(FilteredHodgeObject(factors=(f,)), {})
              for f in obj.factors if f.support == "S4"]
    assert pieces == [-q_power(7), -q_power(8)]


def test_json_serialisation():
    d = vanishing_cycle_object().to_json_dict()
    assert set(d) == {"factors", "assumptions"}
    assert d["factors"][0] == {"support": "origin", "kind": "point",
                               "shift": 0, "twist": -7, "weight": 14}
    assert d["factors"][1]["kind"] == "IC(cone(grass(2,6)))"
    assert len(d["assumptions"]) == 1
    assert vanishing_cycle_object().to_json_dict() == d


def test_twist_bookkeeping():
    rec = twist_bookkeeping_check(4)
    assert rec["dim"] == 36 and rec["twist"] == 12
    assert rec["lemma13_l"] == 9 and rec["residual"] == "[3](3)"
    assert rec["embed_dim"] == 18
    rec1 = twist_bookkeeping_check(1)
    assert rec1["dim"] == 3 and rec1["twist"] == 0 and rec1["trivial"]
    rec3 = twist_bookkeeping_check(3)
    assert rec3["dim"] == 21 and rec3["twist"] == 6
    assert rec3["hilb_dim"] == 9 and rec3["trivial"]
    rec5 = twist_bookkeeping_check(5)
    assert rec5 == {"m": 5, "dim": 55, "twist": 20}
    with pytest.raises(ValueError):
        twist_bookkeeping_check(0)


def test_ordinary_e_of_constant_module_rejected():
    obj = FilteredHodgeObject(
        factors=(CompFactor("S", ConstantModule(Affine(3)), 3, 0, 3),))
    with pytest.raises(ValueError):
        e_of_object(obj, {})
