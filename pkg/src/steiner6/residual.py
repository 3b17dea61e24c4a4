"""Bounded search of (q-2)(q-3)(q-4) * 6c = k(k-1)...(k-5) * s with q = p^(s^u).

These are the parameter sets left open for G = PGammaL(2, p^e), p in {2, 3},
e = s^u an odd prime power. The search is exhaustive inside its bounds;
any hit is reported, never raised.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from sympy import primerange

from .certificates import DiophantineSolution, EliminationCertificate
from .design import DesignParams, divisibility_admissible
from .numtheory import falling, iroot

DEFAULT_C_SET = (1, 2, 4, 5)


@dataclass(frozen=True)
class SearchBounds:
    s_max: int = 1000
    u_max: int = 2
    p_set: tuple[int, ...] = (2, 3)
    c_set: tuple[int, ...] = DEFAULT_C_SET
    q_bit_limit: int = 65536

    def __post_init__(self):
        if self.s_max < 7:
            raise ValueError(f"s_max must be >= 7, got {self.s_max}")
        if self.u_max < 1:
            raise ValueError(f"u_max must be >= 1, got {self.u_max}")
        if not self.p_set or not set(self.p_set) <= {2, 3}:
            raise ValueError(f"p_set must be a nonempty subset of {{2, 3}}, got {self.p_set}")
        if not self.c_set or min(self.c_set) < 1:
            raise ValueError(f"c values must be positive, got {self.c_set}")
        if self.q_bit_limit < 1:
            raise ValueError("q_bit_limit must be positive")
        object.__setattr__(self, "p_set", tuple(sorted(set(self.p_set))))
        object.__setattr__(self, "c_set", tuple(sorted(set(self.c_set))))

    @classmethod
    def free_c(cls, c_max: int, **kw) -> SearchBounds:
        """Every c in 1..c_max instead of the fixed set {1, 2, 4, 5}."""
        return cls(c_set=tuple(range(1, c_max + 1)), **kw)

    def to_config(self) -> dict:
        return {
            "s_max": self.s_max,
            "u_max": self.u_max,
            "p_set": list(self.p_set),
            "c_set": list(self.c_set),
            "q_bit_limit": self.q_bit_limit,
        }

    @classmethod
    def from_config(cls, d: dict) -> SearchBounds:
        return cls(s_max=d["s_max"], u_max=d["u_max"], p_set=tuple(d["p_set"]),
                   c_set=tuple(d["c_set"]), q_bit_limit=d["q_bit_limit"])


@dataclass(frozen=True)
class Cell:
    p: int
    s: int
    u: int
    c: int
    status: str  # "searched" or "skipped"
    hit_k: int | None = None

    def key(self) -> tuple[int, int, int, int]:
        return (self.s, self.u, self.c, self.p)


@dataclass
class ResidualResult:
    bounds: SearchBounds
    cells: list[Cell] = field(default_factory=list)
    hits: list[DiophantineSolution] = field(default_factory=list)

    @property
    def searched(self) -> int:
        return sum(c.status == "searched" for c in self.cells)

    @property
    def skipped(self) -> int:
        return sum(c.status == "skipped" for c in self.cells)

    @property
    def survivors(self) -> list[DiophantineSolution]:
        return [h for h in self.hits if h.survives]


def six_product_root(K: int) -> int | None:
    """k >= 6 with k(k-1)...(k-5) == K, or None.

    For k >= 6, (k-5)^6 < k(k-1)...(k-5) < k^6, so r = floor(K^(1/6)) lies in
    [k-5, k-1]; the window r+3 +- 4 therefore contains k.
    """
    if K < 720:
        return None
    centre = iroot(K, 6) + 3
    for k in range(max(6, centre - 4), centre + 5):
        if falling(k, 6) == K:
            return k
    return None


def iter_cells(bounds: SearchBounds):
    """(p, s, u, c) with s prime, 6c < s <= s_max, in canonical order."""
    for s in primerange(7, bounds.s_max + 1):
        for u in range(1, bounds.u_max + 1):
            for c in bounds.c_set:
                if s <= 6 * c:
                    continue
                for p in bounds.p_set:
                    yield p, s, u, c


def q_too_large(p: int, exponent: int, bit_limit: int) -> bool:
    if p == 2:
        return exponent + 1 > bit_limit
    # cheap reject before building a huge power
    if exponent * math.log2(p) > bit_limit + 2:
        return True
    return (p**exponent).bit_length() > bit_limit


def residual_lhs(q: int, c: int) -> int:
    return (q - 2) * (q - 3) * (q - 4) * 6 * c


def search_residual(bounds: SearchBounds | None = None,
                    root_finder=six_product_root) -> ResidualResult:
    bounds = bounds or SearchBounds()
    result = ResidualResult(bounds)
    for p, s, u, c in iter_cells(bounds):
        exponent = s**u
        if q_too_large(p, exponent, bounds.q_bit_limit):
            result.cells.append(Cell(p, s, u, c, "skipped"))
            continue
        q = p**exponent
        L = residual_lhs(q, c)
        k = root_finder(L // s) if L % s == 0 else None
        result.cells.append(Cell(p, s, u, c, "searched", k))
        if k is None:
            continue
        result.hits.append(_filtered_hit(q, k, p, s, u, c))
    return result


def _filtered_hit(q: int, k: int, p: int, s: int, u: int, c: int) -> DiophantineSolution:
    passed = []
    killed = None
    if k <= 6:
        return DiophantineSolution(q=q, k=k, m=6 * c, n_eff=1, extra_rhs_factor=s,
                                   killed_by="nontrivial", aux={"p": p, "s": s, "u": u, "c": c})
    if q - 4 >= (k - 4) * (k - 5):
        passed.append("cameron")
    else:
        killed = "cameron"
    if killed is None:
        if k < q + 1 and divisibility_admissible(DesignParams(6, q + 1, k, 1)):
            passed.append("divcond")
        else:
            killed = "divcond"
    return DiophantineSolution(q=q, k=k, m=6 * c, n_eff=1, extra_rhs_factor=s,
                               passed_filters=tuple(passed), killed_by=killed,
                               aux={"p": p, "s": s, "u": u, "c": c})


def residual_certificate(result: ResidualResult) -> EliminationCertificate:
    b = result.bounds
    return EliminationCertificate(
        case_id="residual.search",
        params=None,
        group={"family": "PGammaL2", "p": ",".join(map(str, b.p_set)), "e": "odd prime power"},
        verdict="open",
        violated_condition="",
        rule="residual-summary",
        witnesses={
            "s_max": b.s_max,
            "u_max": b.u_max,
            "q_bit_limit": b.q_bit_limit,
            "cells_searched": result.searched,
            "cells_skipped": result.skipped,
            "hits": len(result.hits),
            "survivors": len(result.survivors),
        },
        paper_anchor='open cases: "c=1, 2, 4 or 5"',
        config=b.to_config(),
        solutions=list(result.hits),
        note="exhaustive within bounds; hits are findings, not failures",
    )
