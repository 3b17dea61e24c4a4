from fractions import Fraction

import pytest

from oracles import binom, falling6
from steiner6.cases import (
    AXIOMS, affine_sl_divisor_data, block_stab_status, eliminate_affine_case1, eliminate_affine_case2,
    eliminate_affine_case3, gate_holds, lhs_v2_set, main_theorem_mismatches, min_rhs_v2,
    required_block_stab_order, run_full_suite,
)
from steiner6.design import DesignParams
from steiner6.groups import make_group


@pytest.fixture(scope="module")
def suite():
    return {c.case_id: c for c in run_full_suite()}


def test_suite_shape(suite):
    assert len(suite) == 116
    assert not main_theorem_mismatches(list(suite.values()))
    opens = sorted(cid for cid, c in suite.items() if c.verdict == "open")
    assert opens == ["almost-simple.psl2.p2.condB", "almost-simple.psl2.p3.condB"]


def test_axioms_referenced_exist(suite):
    for c in suite.values():
        if c.axiom is not None:
            assert c.axiom in AXIOMS


def test_affine_v8():
    c1, c2, *_ = eliminate_affine_case1()
    assert c1.witnesses == {"v": 8, "k_max": 6} == c2.witnesses


@pytest.mark.parametrize("k, b", [(7, 129456), (8, 32364), (9, 10788)])
def test_affine_v32(suite, k, b):
    w = suite[f"affine.1.v32.k{k}"].witnesses
    assert b * binom(k, 6) == binom(32, 6)
    assert w == {"b": b, "group_order": 4960, "prime": 29}


def test_affine_v32_stabilizer_not_integral():
    g = make_group("AGammaL1", q=32)
    ok, val = block_stab_status(g, DesignParams(6, 32, 7, 1))
    assert not ok and val == Fraction(4960, 129456)


def test_required_stab_validation():
    g = make_group("AGammaL1", q=32)
    with pytest.raises(ValueError):
        required_block_stab_order(g, DesignParams(5, 32, 7, 1))
    with pytest.raises(ValueError):
        required_block_stab_order(g, DesignParams(6, 33, 7, 1))


@pytest.mark.parametrize("k, target", [(7, 35), (8, 70)])
def test_affine_case2_only_d3(k, target):
    data = affine_sl_divisor_data(k, 64)
    assert data["binom_k_4"] == target == binom(k, 4)
    brute = [d for d in range(3, 200) if target % (2**d - 3) == 0]
    assert brute == [3]
    assert data["d_matches"] == 1 and data["d_largest_match"] == 3


def test_affine_case2_dmax_validation():
    with pytest.raises(ValueError):
        eliminate_affine_case2(3)


def test_affine_case3():
    c = eliminate_affine_case3()
    assert c.witnesses == {"lambda_1": Fraction(1001, 2)}
    assert binom(15, 5) == 3003


def test_mathieu_candidates_all_covered(suite):
    pairs = {(c.params.v, c.params.k) for cid, c in suite.items() if cid.startswith("mathieu.")}
    assert pairs == {(11, 7), (12, 7), (22, 7), (22, 8), (23, 7), (23, 8), (24, 7), (24, 8)}


def test_m23_k7_two_stage(suite):
    c = suite["mathieu.v23.k7"]
    # divisibility passes first, so the order argument is needed
    assert c.rule == "order-divisor"
    assert c.witnesses == {"b": 14421, "group_order": 10200960, "prime": 19}
    assert binom(23, 6) // 7 == 14421 and 14421 % 19 == 0


def test_m24_k8_lambda5(suite):
    assert suite["mathieu.v24.k8"].witnesses["lambda_5"] == Fraction(19, 3)


def test_m11_on_12(suite):
    w = suite["m11-on-12.v12.k7"].witnesses
    assert w["lambda_5"] == Fraction(7, 2)
    assert w["lambda_4"] == Fraction(28, 3)


def test_sweeps_k7_q11(suite):
    for cid in ("almost-simple.psl2.N=G.k7", "almost-simple.psl2.N<G.p>3.k7"):
        (sol,) = suite[cid].solutions
        assert sol.q == 11 and sol.killed_by == "divcond"
    assert falling6(7) == 5040


def test_disabling_divcond_breaks_theorem():
    probs = main_theorem_mismatches(run_full_suite(disabled_filters=("divcond",)))
    assert len(probs) == 2


def test_gate_and_valuations():
    assert falling6(21) // (17 * 16) == 21 * 20 * 19 * 18 == 143640
    assert 2 * (17 * 16) ** 2 == 147968
    assert gate_holds(21, 2000)
    assert not gate_holds(20, 20)
    assert min_rhs_v2(3000) == 4
    assert lhs_v2_set(2, 3, 60, 1) == {3}
    assert lhs_v2_set(3, 2, 60, 2) == {1}
