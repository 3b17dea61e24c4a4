from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import naive_factor, naive_prime_power
from steiner6.groups import (
    FAMILIES, MATHIEU_ORDERS, catalog_for_degree, is_3homogeneous_psl2, make_group, order_of,
    psl2_order, psl2_tower, psl2_tower_orders, sl_order,
)


@pytest.mark.parametrize("family, kw, order", [
    ("AGL1", {"q": 8}, 56),
    ("AGammaL1", {"q": 8}, 168),
    ("AGammaL1", {"q": 32}, 4960),
    ("SLd2", {"d": 3}, 8 * 168),
    ("A7_affine", {}, 40320),
    ("Alt", {"v": 8}, 20160),
    ("PSL2", {"q": 7}, 168),
    ("PGL2", {"q": 7}, 336),
    ("PSL2", {"q": 8}, 504),
    ("PGammaL2", {"q": 8}, 1512),
    ("PSigmaL2", {"q": 9}, 720),
    ("PGammaL2", {"q": 9}, 1440),
    ("M11_on12", {}, 7920),
])
def test_orders(family, kw, order):
    g = make_group(family, **kw)
    assert g.order == order == order_of(g)


def test_sl_order():
    assert sl_order(3) == 168
    assert sl_order(2) == 6


@pytest.mark.parametrize("v, factors", [
    (11, {2: 4, 3: 2, 5: 1, 11: 1}),
    (12, {2: 6, 3: 3, 5: 1, 11: 1}),
    (22, {2: 7, 3: 2, 5: 1, 7: 1, 11: 1}),
    (23, {2: 7, 3: 2, 5: 1, 7: 1, 11: 1, 23: 1}),
    (24, {2: 10, 3: 3, 5: 1, 7: 1, 11: 1, 23: 1}),
])
def test_mathieu_factorizations(v, factors):
    assert naive_factor(MATHIEU_ORDERS[v]) == factors
    assert make_group("Mathieu", v=v).degree == v


def test_mathieu_transitivity_consistency():
    # M_{v-1} is a point stabilizer of M_v for v in 12, 23, 24
    for v in (12, 23, 24):
        assert MATHIEU_ORDERS[v] == v * MATHIEU_ORDERS[v - 1]


def test_29_not_dividing_agammal_32():
    assert 4960 % 29 != 0


def test_19_not_dividing_m23():
    assert MATHIEU_ORDERS[23] % 19 == 12


def test_unknown_family():
    with pytest.raises(ValueError):
        make_group("Suzuki", q=8)
    with pytest.raises(ValueError):
        make_group("PSL2", q=10)


def test_families_constructible():
    kw = {"AGL1": {"q": 8}, "AGammaL1": {"q": 8}, "SLd2": {"d": 4}, "A7_affine": {}, "Alt": {"v": 9},
          "PSL2": {"q": 16}, "PGL2": {"q": 17}, "PSigmaL2": {"q": 25}, "PGammaL2": {"q": 27},
          "Mathieu": {"v": 24}, "M11_on12": {}}
    assert set(kw) == set(FAMILIES)
    for fam, k in kw.items():
        g = make_group(fam, **k)
        assert g.two_point_stab_order * g.degree * (g.degree - 1) == g.order
        assert g.name


def test_3homogeneous_rule():
    assert is_3homogeneous_psl2(8) and is_3homogeneous_psl2(7) and is_3homogeneous_psl2(11)
    assert not is_3homogeneous_psl2(5) and not is_3homogeneous_psl2(9)
    with pytest.raises(ValueError):
        is_3homogeneous_psl2(3)


def test_tower_q9():
    assert [g.family for g in psl2_tower(9)] == ["PSL2", "PGL2", "PSigmaL2", "PGammaL2"]
    assert psl2_tower_orders(9) == [360, 720, 1440]


def test_tower_q8():
    assert [g.family for g in psl2_tower(8)] == ["PSL2", "PSigmaL2"]
    assert psl2_tower_orders(8) == [504, 1512]


@given(st.integers(4, 2000).filter(lambda q: naive_prime_power(q) is not None))
def test_tower_orders_divide_pgammal(q):
    p, e = naive_prime_power(q)
    top = (q + 1) * q * (q - 1) * e
    assert psl2_order(q) * (2 if q % 2 else 1) == (q + 1) * q * (q - 1)
    for o in psl2_tower_orders(q):
        assert top % o == 0 and o % psl2_order(q) == 0
    for g in psl2_tower(q):
        assert g.params["p"] == p and g.params["e"] == e
        assert top % g.order == 0


def test_prime_power_roundtrip_through_groups():
    for p in [x for x in range(2, 101) if naive_prime_power(x) == (x, 1)]:
        for e in range(1, 21):
            g = make_group("PGammaL2", q=p**e)
            assert (g.params["p"], g.params["e"]) == (p, e)
            assert g.degree == p**e + 1


def test_catalog_v8():
    fams = [g.family for g in catalog_for_degree(8)]
    assert fams == ["AGL1", "AGammaL1", "SLd2", "Alt", "PSL2", "PGL2"]


def test_catalog_v12_has_both_m11_actions():
    fams = [g.family for g in catalog_for_degree(12)]
    assert "Mathieu" in fams and "M11_on12" in fams
    for g in catalog_for_degree(12):
        if g.family.startswith("P"):
            assert g.params["three_homogeneous"] == (g.family == "PGL2" or is_3homogeneous_psl2(11))


def test_catalog_q13_psl_not_3_homogeneous():
    rows = {g.family: g.params["three_homogeneous"] for g in catalog_for_degree(14) if g.family.endswith("L2")}
    assert rows == {"PSL2": False, "PGL2": True}


def test_catalog_degree_error():
    with pytest.raises(ValueError):
        catalog_for_degree(3)


def test_alt_order_formula():
    for v in range(5, 30):
        assert make_group("Alt", v=v).order == factorial(v) // 2
