"""Counting identities, divisibility conditions and the Tits/Cameron bounds for t-designs."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt

# (t, k, v) attaining equality in Cameron's bound
CAMERON_EQUALITY_TRIPLES = frozenset({(3, 4, 8), (3, 6, 22), (3, 12, 112), (4, 7, 23), (5, 8, 24)})


@dataclass(frozen=True)
class DesignParams:
    t: int
    v: int
    k: int
    lam: int = 1

    def __post_init__(self):
        for name in ("t", "v", "k", "lam"):
            val = getattr(self, name)
            if not isinstance(val, int) or isinstance(val, bool) or val < 1:
                raise ValueError(f"{name} must be a positive integer, got {val!r}")
        if not self.t <= self.k <= self.v:
            raise ValueError(f"need t <= k <= v, got t={self.t}, k={self.k}, v={self.v}")

    @property
    def nontrivial(self) -> bool:
        return self.t < self.k < self.v

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.t, self.v, self.k, self.lam)


@dataclass(frozen=True)
class DerivedCounts:
    b: Fraction
    r: Fraction
    lambda_s: dict[int, Fraction]


@dataclass(frozen=True)
class BoundReport:
    tits_holds: bool
    cameron_holds: bool
    cameron_equality: bool
    equality_triple_known: bool
    k_max_t6: int | None = None


def lambda_s(params: DesignParams, s: int) -> Fraction:
    """Number of blocks through a fixed s-subset, as an exact rational."""
    t, v, k, lam = params.as_tuple()
    if not 0 <= s <= t:
        raise ValueError(f"s must lie in [0, {t}], got {s}")
    return Fraction(lam * comb(v - s, t - s), comb(k - s, t - s))


def block_count(params: DesignParams) -> Fraction:
    return lambda_s(params, 0)


def derived_counts(params: DesignParams) -> DerivedCounts:
    lams = {s: lambda_s(params, s) for s in range(params.t + 1)}
    return DerivedCounts(b=lams[0], r=lams[1], lambda_s=lams)


def divisibility_check(params: DesignParams) -> list[tuple[int, bool, int, int]]:
    """(s, passes, lam*C(v-s,t-s), C(k-s,t-s)) for s = 1..t, ascending."""
    t, v, k, lam = params.as_tuple()
    out = []
    for s in range(1, t + 1):
        num = lam * comb(v - s, t - s)
        den = comb(k - s, t - s)
        out.append((s, num % den == 0, num, den))
    return out


def non_integral_lambdas(params: DesignParams) -> dict[int, Fraction]:
    """Every lambda_s (s = 0..t) that fails to be an integer."""
    out = {}
    for s in range(params.t + 1):
        val = lambda_s(params, s)
        if val.denominator != 1:
            out[s] = val
    return out


def divisibility_admissible(params: DesignParams) -> bool:
    return not non_integral_lambdas(params)


def k_max_t6(v: int) -> int | None:
    """Largest k with (k-4)(k-5) <= v-5, i.e. floor(sqrt(v - 19/4) + 9/2).

    Returns None when no k qualifies (v < 5).
    """
    if v < 5:
        return None
    k = (9 + isqrt(4 * v - 19)) // 2
    # guard the closed form against off-by-one
    while (k - 3) * (k - 4) <= v - 5:
        k += 1
    while (k - 4) * (k - 5) > v - 5:
        k -= 1
    return k


def k_candidates_t6(v: int) -> list[int]:
    """Block sizes 7 <= k allowed by Cameron's bound for a Steiner 6-design on v points."""
    kmax = k_max_t6(v)
    if kmax is None:
        return []
    return list(range(7, kmax + 1))


def tits_rhs(params: DesignParams) -> int:
    return (params.t + 1) * (params.k - params.t + 1)


def check_bounds(params: DesignParams) -> BoundReport:
    if not params.nontrivial:
        raise ValueError(f"bounds apply to non-trivial designs only, got {params.as_tuple()}")
    t, v, k, _ = params.as_tuple()
    tits = v >= tits_rhs(params)
    if t > 2:
        lhs, rhs = v - t + 1, (k - t + 2) * (k - t + 1)
        cameron, equality = lhs >= rhs, lhs == rhs
    else:
        cameron, equality = True, False
    return BoundReport(
        tits_holds=tits,
        cameron_holds=cameron,
        cameron_equality=equality,
        equality_triple_known=equality and (t, k, v) in CAMERON_EQUALITY_TRIPLES,
        k_max_t6=k_max_t6(v) if t == 6 else None,
    )
