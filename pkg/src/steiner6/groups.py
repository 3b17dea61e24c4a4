"""Orders and degrees of the finite 3-homogeneous permutation groups.

No permutations are ever built; every entry is (family, degree, order) data
plus the two-point stabilizer order |G_xy| = |G| / (v (v - 1)).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial, gcd, prod

from .numtheory import PrimePower, decompose_prime_power

FAMILIES = (
    "AGL1", "AGammaL1", "SLd2", "A7_affine", "Alt",
    "PSL2", "PGL2", "PSigmaL2", "PGammaL2", "Mathieu", "M11_on12",
)

# Atlas orders, keyed by degree
MATHIEU_ORDERS = {
    11: 7920,
    12: 95040,
    22: 443520,
    23: 10200960,
    24: 244823040,
}
M11_ORDER = MATHIEU_ORDERS[11]
A7_ORDER = factorial(7) // 2


@dataclass(frozen=True)
class GroupSpec:
    family: str
    degree: int
    order: int
    two_point_stab_order: int
    params: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def name(self) -> str:
        p = self.params
        if self.family in ("AGL1", "AGammaL1"):
            return f"{self.family}({p['q']})"
        if self.family == "SLd2":
            return f"AGL({p['d']},2)"
        if self.family == "A7_affine":
            return "2^4:A7"
        if self.family == "Alt":
            return f"A{self.degree}"
        if self.family.endswith("L2"):
            return f"{self.family}({p['q']})"
        if self.family == "Mathieu":
            return f"M{self.degree}"
        return "M11 on 12"

    def to_dict(self) -> dict:
        return {"family": self.family, "degree": self.degree, **self.params}


def sl_order(d: int, q: int = 2) -> int:
    return prod(q**d - q**i for i in range(d))


def psl2_order(q: int) -> int:
    return (q + 1) * q * (q - 1) // gcd(2, q - 1)


def pgammal2_order(q: int) -> int:
    return (q + 1) * q * (q - 1) * _pp(q).e


def _pp(q: int) -> PrimePower:
    pp = decompose_prime_power(q)
    if pp is None:
        raise ValueError(f"{q} is not a prime power")
    return pp


def _order(family: str, **kw) -> tuple[int, int]:
    """(degree, order) for a family and its defining parameter."""
    if family == "AGL1":
        q = kw["q"]
        return q, q * (q - 1)
    if family == "AGammaL1":
        q = kw["q"]
        return q, q * (q - 1) * _pp(q).e
    if family == "SLd2":
        d = kw["d"]
        return 2**d, 2**d * sl_order(d)
    if family == "A7_affine":
        return 16, 16 * A7_ORDER
    if family == "Alt":
        v = kw["v"]
        return v, factorial(v) // 2
    if family in ("PSL2", "PGL2", "PSigmaL2", "PGammaL2"):
        q = kw["q"]
        pp = _pp(q)
        base = (q + 1) * q * (q - 1)
        n = gcd(2, q - 1)
        return q + 1, {
            "PSL2": base // n,
            "PGL2": base,
            "PSigmaL2": base // n * pp.e,
            "PGammaL2": base * pp.e,
        }[family]
    if family == "Mathieu":
        v = kw["v"]
        return v, MATHIEU_ORDERS[v]
    if family == "M11_on12":
        return 12, M11_ORDER
    raise ValueError(f"unknown group family {family!r}")


def make_group(family: str, **kw) -> GroupSpec:
    degree, order = _order(family, **kw)
    params = dict(kw)
    if family.endswith("L2") and family.startswith("P"):
        pp = _pp(kw["q"])
        params.update(p=pp.p, e=pp.e)
    return GroupSpec(family, degree, order, order // (degree * (degree - 1)), params)


def order_of(spec: GroupSpec) -> int:
    """Exact group order, recomputed from the family formula."""
    kw = {k: v for k, v in spec.params.items() if k in ("q", "d", "v")}
    return _order(spec.family, **kw)[1]


def is_3homogeneous_psl2(q: int) -> bool:
    if q <= 3:
        raise ValueError(f"need q > 3, got {q}")
    return q % 2 == 0 or q % 4 == 3


def psl2_tower(q: int) -> list[GroupSpec]:
    """Distinct groups PSL(2,q) <= G <= PGammaL(2,q) carried by the catalog."""
    pp = _pp(q)
    out = [make_group("PSL2", q=q)]
    if q % 2:
        out.append(make_group("PGL2", q=q))
    if pp.e > 1:
        out.append(make_group("PSigmaL2", q=q))
        if q % 2:
            out.append(make_group("PGammaL2", q=q))
    return out


def psl2_tower_orders(q: int) -> list[int]:
    """|G| = (q+1) q (q-1)/n * a for every divisor a of n*e."""
    pp = _pp(q)
    n = gcd(2, q - 1)
    base = psl2_order(q)
    return [base * a for a in range(1, n * pp.e + 1) if (n * pp.e) % a == 0]


def catalog_for_degree(v: int) -> list[GroupSpec]:
    if v < 4:
        raise ValueError(f"degree must be >= 4, got {v}")
    out: list[GroupSpec] = []
    if v == 8:
        out += [make_group("AGL1", q=8), make_group("AGammaL1", q=8)]
    if v == 32:
        out.append(make_group("AGammaL1", q=32))
    if v & (v - 1) == 0:
        out.append(make_group("SLd2", d=v.bit_length() - 1))
    if v == 16:
        out.append(make_group("A7_affine"))
    if v >= 5:
        out.append(make_group("Alt", v=v))
    q = v - 1
    if q > 3 and decompose_prime_power(q) is not None:
        for g in psl2_tower(q):
            # PGL-containing groups are 3-transitive; below PSigmaL the PSL rule decides
            g.params["three_homogeneous"] = g.family in ("PGL2", "PGammaL2") or is_3homogeneous_psl2(q)
            out.append(g)
    if v in MATHIEU_ORDERS:
        out.append(make_group("Mathieu", v=v))
    if v == 12:
        out.append(make_group("M11_on12"))
    return out
