"""Exhaustive solver for the block-orbit equation of PSL(2,q) acting on q+1 points.

For fixed k the equation

    m * n_eff * (q-2)(q-3)(q-4) = k(k-1)(k-2)(k-3)(k-4)(k-5) * extra

has finitely many solutions (q, m): q is squeezed between Cameron's bound
q - 4 >= (k-4)(k-5) and (q-2)(q-3)(q-4) <= K * extra.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .certificates import DiophantineSolution
from .design import DesignParams, divisibility_admissible
from .groups import is_3homogeneous_psl2, pgammal2_order, psl2_order
from .numtheory import decompose_prime_power, falling, valuation

FILTERS = ("divcond", "lagrange", "3hom", "involution", "2adic")

# restrictions on q = p^e a case may impose
P_RESTRICTIONS = ("any", "odd>3", "2", "3")
E_RESTRICTIONS = ("any", "pow2")
LAGRANGE_GROUPS = ("PSL2", "PGammaL2")


@dataclass(frozen=True)
class PslCaseInput:
    """One variant of the equation; q and m are the unknowns.

    ``n_eff=None`` means n = gcd(2, q-1), decided per q as for G = PSL(2,q).
    """

    k: int
    n_eff: int | None = None
    extra_rhs_factor: int = 1
    p_restriction: str = "any"
    e_restriction: str = "any"
    lagrange_group: str = "PSL2"

    def __post_init__(self):
        if self.k < 7:
            raise ValueError(f"k must be >= 7, got {self.k}")
        if self.n_eff not in (None, 1, 2):
            raise ValueError(f"n_eff must be 1, 2 or None, got {self.n_eff}")
        if self.extra_rhs_factor < 1:
            raise ValueError("extra_rhs_factor must be positive")
        if self.p_restriction not in P_RESTRICTIONS:
            raise ValueError(f"bad p restriction {self.p_restriction!r}")
        if self.e_restriction not in E_RESTRICTIONS:
            raise ValueError(f"bad e restriction {self.e_restriction!r}")
        if self.lagrange_group not in LAGRANGE_GROUPS:
            raise ValueError(f"bad lagrange group {self.lagrange_group!r}")

    @property
    def rhs(self) -> int:
        return falling(self.k, 6) * self.extra_rhs_factor

    def to_config(self) -> dict:
        return {
            "k": self.k,
            "n_eff": self.n_eff,
            "extra_rhs_factor": self.extra_rhs_factor,
            "p_restriction": self.p_restriction,
            "e_restriction": self.e_restriction,
            "lagrange_group": self.lagrange_group,
        }

    @classmethod
    def from_config(cls, d: dict) -> PslCaseInput:
        return cls(**{key: d[key] for key in (
            "k", "n_eff", "extra_rhs_factor", "p_restriction", "e_restriction", "lagrange_group")})


def q_range(k: int, rhs: int) -> tuple[int, int]:
    """Inclusive [q_lo, q_hi] outside of which no solution can exist."""
    q_lo = max(5, (k - 4) * (k - 5) + 4)
    q_hi = q_lo - 1
    while (q_hi - 1) * (q_hi - 2) * (q_hi - 3) <= rhs:
        q_hi += 1
    return q_lo, q_hi


def _q_allowed(case: PslCaseInput, p: int, e: int) -> bool:
    r = case.p_restriction
    if r == "odd>3" and p <= 3:
        return False
    if r in ("2", "3") and p != int(r):
        return False
    if case.e_restriction == "pow2" and e & (e - 1):
        return False
    return True


def candidate_qs(case: PslCaseInput) -> list[int]:
    """Prime powers in the search window that the case's restrictions admit."""
    q_lo, q_hi = q_range(case.k, case.rhs)
    out = []
    for q in range(q_lo, q_hi + 1):
        pp = decompose_prime_power(q)
        if pp is not None and _q_allowed(case, pp.p, pp.e):
            out.append(q)
    return out


def _passes(name: str, sol: DiophantineSolution, case: PslCaseInput) -> bool:
    q, m = sol.q, sol.m
    if name == "divcond":
        return divisibility_admissible(DesignParams(6, q + 1, sol.k, 1))
    if name == "lagrange":
        order = psl2_order(q) if case.lagrange_group == "PSL2" else pgammal2_order(q)
        return order % m == 0
    if name == "3hom":
        return is_3homogeneous_psl2(q)
    if name == "involution":
        # an involution of PSL(2,q), q odd, fixes some block, so the stabilizer is nontrivial
        return not (q % 2 == 1 and m == 1)
    if name == "2adic":
        if q % 2 == 0 and m * sol.n_eff == 1:
            lhs = (q - 2) * (q - 3) * (q - 4)
            return valuation(lhs, 2) >= valuation(case.rhs, 2)
        return True
    raise AssertionError(name)


def solve_psl_equation(case: PslCaseInput, filters=()) -> list[DiophantineSolution]:
    """All (q, m) solving the case equation, ascending in q, with filter verdicts.

    Filters run in the given order; the first that rejects a solution is
    recorded as ``killed_by`` and later filters are not consulted.
    """
    filters = tuple(filters)
    for name in filters:
        if name not in FILTERS:
            raise ValueError(f"unknown filter {name!r}; expected one of {FILTERS}")
    rhs = case.rhs
    out = []
    for q in candidate_qs(case):
        n = case.n_eff if case.n_eff is not None else gcd(2, q - 1)
        lhs_unit = n * (q - 2) * (q - 3) * (q - 4)
        if rhs % lhs_unit:
            continue
        sol = DiophantineSolution(q=q, k=case.k, m=rhs // lhs_unit, n_eff=n,
                                  extra_rhs_factor=case.extra_rhs_factor)
        passed: list[str] = []
        killed = None
        for name in filters:
            if _passes(name, sol, case):
                passed.append(name)
            else:
                killed = name
                break
        out.append(DiophantineSolution(sol.q, sol.k, sol.m, sol.n_eff, sol.extra_rhs_factor,
                                       tuple(passed), killed))
    return out
