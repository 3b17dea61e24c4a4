"""Certificate records and their canonical JSON-lines encoding.

Integers and rationals in witnesses, solutions and aux data are written as
decimal strings ("129456", "1001/2") so that nothing passes through a float.
Keys are emitted in a fixed order; ``loads(dumps(c)) == c`` for every
certificate the engine produces.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .design import DesignParams

Exact = Union[int, Fraction]

VERDICTS = ("eliminated", "survives", "open")
CONDITIONS = (
    "divisibility", "integrality", "bound", "order-divisor",
    "equation-unsolvable", "valuation", "axiom-rule",
)

CERT_FIELDS = (
    "case_id", "params", "group", "verdict", "violated_condition", "rule",
    "witnesses", "paper_anchor", "axiom", "config", "solutions", "note",
)


@dataclass(frozen=True)
class DiophantineSolution:
    """A solution of m * n_eff * (q-2)(q-3)(q-4) = k(k-1)...(k-5) * extra_rhs_factor."""

    q: int
    k: int
    m: int
    n_eff: int
    extra_rhs_factor: int
    passed_filters: tuple[str, ...] = ()
    killed_by: str | None = None
    aux: dict = field(default_factory=dict, compare=True, hash=False)

    def holds(self) -> bool:
        q, k = self.q, self.k
        lhs = self.m * self.n_eff * (q - 2) * (q - 3) * (q - 4)
        rhs = k * (k - 1) * (k - 2) * (k - 3) * (k - 4) * (k - 5) * self.extra_rhs_factor
        return lhs == rhs

    @property
    def survives(self) -> bool:
        return self.killed_by is None

    def to_json(self) -> dict:
        return {
            "q": str(self.q),
            "k": str(self.k),
            "m": str(self.m),
            "n_eff": str(self.n_eff),
            "extra_rhs_factor": str(self.extra_rhs_factor),
            "passed_filters": list(self.passed_filters),
            "killed_by": self.killed_by,
            "aux": {name: str(val) for name, val in self.aux.items()},
        }

    @classmethod
    def from_json(cls, d: dict) -> DiophantineSolution:
        return cls(
            q=int(d["q"]),
            k=int(d["k"]),
            m=int(d["m"]),
            n_eff=int(d["n_eff"]),
            extra_rhs_factor=int(d["extra_rhs_factor"]),
            passed_filters=tuple(d["passed_filters"]),
            killed_by=d["killed_by"],
            aux={name: int(val) for name, val in d["aux"].items()},
        )


@dataclass
class EliminationCertificate:
    case_id: str
    params: DesignParams | None
    group: dict
    verdict: str
    violated_condition: str
    rule: str
    witnesses: dict[str, Exact] = field(default_factory=dict)
    paper_anchor: str = ""
    axiom: str | None = None
    config: dict = field(default_factory=dict)
    solutions: list[DiophantineSolution] = field(default_factory=list)
    note: str = ""

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.violated_condition and self.violated_condition not in CONDITIONS:
            raise ValueError(f"bad condition {self.violated_condition!r}")
        if self.verdict == "eliminated" and not self.violated_condition:
            raise ValueError(f"{self.case_id}: eliminated without a violated condition")

    def to_json(self) -> dict:
        body = {
            "case_id": self.case_id,
            "params": None if self.params is None else dict(
                t=self.params.t, v=self.params.v, k=self.params.k, lam=self.params.lam),
            "group": self.group,
            "verdict": self.verdict,
            "violated_condition": self.violated_condition,
            "rule": self.rule,
            "witnesses": {name: _enc(val) for name, val in self.witnesses.items()},
            "paper_anchor": self.paper_anchor,
            "axiom": self.axiom,
            "config": self.config,
            "solutions": [s.to_json() for s in self.solutions],
            "note": self.note,
        }
        return {key: body[key] for key in CERT_FIELDS}

    @classmethod
    def from_json(cls, d: dict) -> EliminationCertificate:
        unknown = set(d) - set(CERT_FIELDS)
        if unknown:
            raise ValueError(f"unknown certificate fields {sorted(unknown)}")
        p = d["params"]
        return cls(
            case_id=d["case_id"],
            params=None if p is None else DesignParams(p["t"], p["v"], p["k"], p["lam"]),
            group=d["group"],
            verdict=d["verdict"],
            violated_condition=d["violated_condition"],
            rule=d["rule"],
            witnesses={name: _dec(val) for name, val in d["witnesses"].items()},
            paper_anchor=d["paper_anchor"],
            axiom=d["axiom"],
            config=d["config"],
            solutions=[DiophantineSolution.from_json(s) for s in d["solutions"]],
            note=d["note"],
        )


def _enc(val: Exact) -> str:
    if isinstance(val, bool) or not isinstance(val, (int, Fraction)):
        raise TypeError(f"witness values must be exact numbers, got {val!r}")
    return str(val)


def _dec(s: str) -> Exact:
    if "/" in s:
        return Fraction(s)
    return int(s)


def dumps(cert: EliminationCertificate) -> str:
    # config dicts are written with sorted keys; top level keeps CERT_FIELDS order
    body = cert.to_json()
    body["config"] = {k: body["config"][k] for k in sorted(body["config"])}
    return json.dumps(body, separators=(",", ":"), ensure_ascii=True)


def loads(line: str) -> EliminationCertificate:
    return EliminationCertificate.from_json(json.loads(line))


def dump_lines(certs) -> str:
    return "".join(dumps(c) + "\n" for c in certs)


def load_lines(text: str) -> list[EliminationCertificate]:
    return [loads(line) for line in text.splitlines() if line.strip()]


def table_row(cert: EliminationCertificate) -> str:
    """One human-readable line, e.g. ``affine.1.v32 k=7 eliminated divisor 29``."""
    base = cert.case_id.rsplit(".k", 1)[0] if cert.params is not None else cert.case_id
    parts = [base]
    if cert.params is not None:
        parts.append(f"k={cert.params.k}")
    parts.append(cert.verdict)
    if cert.rule == "order-divisor":
        parts.append(f"divisor {cert.witnesses['prime']}")
    elif cert.violated_condition:
        parts.append(cert.violated_condition)
    extras = [f"{name}={val}" for name, val in cert.witnesses.items() if name != "prime"]
    if extras:
        parts.append("[" + ", ".join(extras) + "]")
    return " ".join(parts)
