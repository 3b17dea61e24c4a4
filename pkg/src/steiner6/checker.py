"""Independent re-evaluation of certificates.

Each rule recomputes every witness from the certificate's own inputs
(params, group, config) and compares for exact equality, then re-tests the
violated condition. A certificate passes iff ``check_certificate`` returns
no problems.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from sympy import factorint

from .cases import (
    AXIOMS, E_CHECKED_TO, RHS_V2_CHECKED_TO, SL_D_MAX, gate_holds, gate_witnesses, lhs_v2_set, min_rhs_v2,
)
from .certificates import EliminationCertificate
from .groups import make_group
from .residual import SearchBounds, residual_certificate, search_residual
from .solver import PslCaseInput, candidate_qs, q_range, solve_psl_equation

AXIOM_WITNESSES = {
    "affine-subspace-k-le-8": {"k_upper": 8},
    # k > 6 and v > k force v >= 8
    "kantor-6-transitive": {"v_min": 8},
}


def _group_order(group: dict) -> int:
    kw = {key: group[key] for key in ("q", "d", "v") if key in group}
    if group["family"] == "Mathieu":
        kw = {"v": group["degree"]}
    return make_group(group["family"], **kw).order


def _lam(t, v, k, s) -> Fraction:
    return Fraction(comb(v - s, t - s), comb(k - s, t - s))


def _expect(cert, expected: dict, problems: list[str]) -> None:
    if dict(cert.witnesses) != expected:
        problems.append(f"witnesses {dict(cert.witnesses)} != recomputed {expected}")


def _check_cameron(cert, problems):
    v = cert.group["degree"]
    k = 6
    while (k - 3) * (k - 4) <= v - 5:
        k += 1
    _expect(cert, {"v": v, "k_max": k}, problems)
    if k > 6:
        problems.append(f"k_max {k} leaves non-trivial k")


def _check_tits(cert, problems):
    t, v, k = cert.params.t, cert.params.v, cert.params.k
    rhs = (t + 1) * (k - t + 1)
    _expect(cert, {"tits_rhs": rhs}, problems)
    if v >= rhs:
        problems.append("Tits bound holds")


def _check_order_divisor(cert, problems):
    p = cert.params
    b = Fraction(comb(p.v, 6), comb(p.k, 6))
    if b.denominator != 1:
        problems.append("b is not an integer")
        return
    b = b.numerator
    order = _group_order(cert.group)
    if cert.group.get("degree") != p.v:
        problems.append("group degree differs from v")
    bad = [r for r in factorint(b) if order % r]
    if not bad:
        problems.append("every prime of b divides |G|")
        return
    _expect(cert, {"b": b, "group_order": order, "prime": max(bad)}, problems)


def _check_divcond(cert, problems):
    p = cert.params
    bad = {}
    for s in range(p.t + 1):
        val = p.lam * _lam(p.t, p.v, p.k, s)
        if val.denominator != 1:
            bad[f"lambda_{s}"] = val
    if not bad:
        problems.append("all lambda_s integral")
    _expect(cert, bad, problems)


def _check_integrality(cert, problems):
    p = cert.params
    if len(cert.witnesses) != 1:
        problems.append("integrality certificate must carry exactly one lambda_s")
        return
    (name,) = cert.witnesses
    s = int(name.removeprefix("lambda_"))
    val = p.lam * _lam(p.t, p.v, p.k, s)
    _expect(cert, {name: val}, problems)
    if val.denominator == 1:
        problems.append(f"{name} is an integer")


def _check_sl_divisor(cert, problems):
    w = cert.witnesses
    k, d_max = w.get("k"), SL_D_MAX
    if k not in (7, 8):
        problems.append("k must be 7 or 8")
        return
    target = comb(k, 4)
    d = 3
    while 2**d - 3 <= target:
        d += 1
    matches = [dd for dd in range(3, max(d, d_max) + 1) if target % (2**dd - 3) == 0]
    _expect(cert, {"k": k, "binom_k_4": target, "d_max": d_max, "d_threshold": d,
                   "d_matches": len(matches), "d_largest_match": max(matches, default=0)}, problems)
    if any(dd > 3 for dd in matches):
        problems.append("some d > 3 satisfies the divisor condition")


def _check_axiom(cert, problems):
    if cert.axiom not in AXIOMS:
        problems.append(f"unknown axiom {cert.axiom!r}")
        return
    _expect(cert, AXIOM_WITNESSES.get(cert.axiom, {}), problems)


def _check_gate_common(cert, problems) -> tuple[dict, dict]:
    w = dict(cert.witnesses)
    expected = gate_witnesses()
    if not gate_holds(expected["k_gate"], expected["gate_checked_to"]):
        problems.append("gate inequality fails in checked range")
    if not expected["gate_lhs"] < expected["gate_rhs"]:
        problems.append("gate inequality fails at k_gate")
    return w, expected


def _check_gate_2adic(cert, problems):
    w, expected = _check_gate_common(cert, problems)
    # q = 2^e with e >= 3, or q = 3^e with e even
    families = {2: (3, 1), 3: (2, 2)}
    p = w.get("p")
    if p not in families:
        problems.append(f"no 2-adic family for p={p}")
        return
    e_lo, e_step = families[p]
    lhs = lhs_v2_set(p, e_lo, E_CHECKED_TO, e_step)
    expected.update({"rhs_v2_min": min_rhs_v2(RHS_V2_CHECKED_TO),
                     "rhs_v2_checked_to": RHS_V2_CHECKED_TO,
                     "p": p, "e_lo": e_lo, "e_hi": E_CHECKED_TO, "e_step": e_step,
                     "lhs_v2": min(lhs)})
    _expect(cert, expected, problems)
    if len(lhs) != 1 or min(lhs) >= expected["rhs_v2_min"]:
        problems.append("no 2-adic contradiction")


def _check_gate_involution(cert, problems):
    _, expected = _check_gate_common(cert, problems)
    _expect(cert, expected, problems)
    if cert.axiom != "involution-fixes-block":
        problems.append("involution gate must cite involution-fixes-block")


def _check_gate_parity(cert, problems):
    _, expected = _check_gate_common(cert, problems)
    expected["n"] = 2
    _expect(cert, expected, problems)


def _check_sweep(cert, problems):
    case = PslCaseInput.from_config(cert.config["case"])
    filters = tuple(cert.config["filters"])
    sols = solve_psl_equation(case, filters)
    q_lo, q_hi = q_range(case.k, case.rhs)
    survivors = [s for s in sols if s.survives]
    rhs = 1
    for i in range(6):
        rhs *= case.k - i
    rhs *= case.extra_rhs_factor
    _expect(cert, {"k": case.k, "rhs": rhs, "q_lo": q_lo, "q_hi": q_hi,
                   "prime_powers_scanned": len(candidate_qs(case)),
                   "solutions": len(sols), "survivors": len(survivors)}, problems)
    if list(cert.solutions) != sols:
        problems.append("recorded solutions differ from a fresh solve")
    for s in cert.solutions:
        if not s.holds():
            problems.append(f"solution q={s.q} does not satisfy the equation")
    want = "survives" if survivors else "eliminated"
    if cert.verdict != want:
        problems.append(f"verdict {cert.verdict} but sweep says {want}")


def _check_open(cert, problems):
    if cert.verdict != "open":
        problems.append("condition (B) must stay open")
    if cert.witnesses.get("p") not in (2, 3) or set(cert.witnesses) != {"p"}:
        problems.append("condition (B) is only open for p in {2, 3}")
    elif str(cert.witnesses["p"]) != cert.group.get("p"):
        problems.append("witness p disagrees with the group record")


def _check_residual(cert, problems):
    fresh = residual_certificate(search_residual(SearchBounds.from_config(cert.config)))
    _expect(cert, dict(fresh.witnesses), problems)
    if list(cert.solutions) != fresh.solutions:
        problems.append("recorded hits differ from a fresh search")


RULES = {
    "cameron-t6": _check_cameron,
    "tits": _check_tits,
    "order-divisor": _check_order_divisor,
    "divcond": _check_divcond,
    "integrality": _check_integrality,
    "affine-sl-divisor": _check_sl_divisor,
    "axiom": _check_axiom,
    "gate-2adic": _check_gate_2adic,
    "gate-involution": _check_gate_involution,
    "gate-parity": _check_gate_parity,
    "psl-sweep": _check_sweep,
    "open-condition-b": _check_open,
    "residual-summary": _check_residual,
}


def check_certificate(cert: EliminationCertificate) -> list[str]:
    """Problems found on re-evaluation; empty means the certificate is sound."""
    fn = RULES.get(cert.rule)
    if fn is None:
        return [f"{cert.case_id}: unknown rule {cert.rule!r}"]
    problems: list[str] = []
    try:
        fn(cert, problems)
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        problems.append(f"malformed certificate: {exc!r}")
    return [f"{cert.case_id}: {msg}" for msg in problems]


def check_all(certs) -> list[str]:
    out = []
    for cert in certs:
        out += check_certificate(cert)
    return out
