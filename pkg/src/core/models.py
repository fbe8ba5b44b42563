from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class Verdict(str, Enum):
    MDS = "MDS"
    AMDS = "AMDS"
    NMDS = "NMDS"
    OTHER = "other"


class Extendability(str, Enum):
    OPTIMAL = "optimal"
    ALMOST = "almost"
    NEITHER = "neither"


class SearchTarget(str, Enum):
    MDS = "mds"
    AMDS = "amds"
    DUAL_AMDS = "dual-amds"
    NMDS = "nmds"


def _witness_out(w: tuple[int, ...] | None) -> list[int] | None:
    return None if w is None else [int(x) for x in w]


def _witness_in(w: Any) -> tuple[int, ...] | None:
    return None if w is None else tuple(int(x) for x in w)


@dataclass(slots=True)
class Classification:
    n: int
    k: int
    d: int
    d_dual: int
    verdict: Verdict

    @property
    def singleton_defect(self) -> int:
        return self.n - self.k + 1 - self.d

    @property
    def params(self) -> str:
        return f"[{self.n},{self.k},{self.d}]"

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "d_dual": self.d_dual,
            "verdict": self.verdict.value,
            "singleton_defect": self.singleton_defect,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Classification":
        return cls(
            n=int(data["n"]),
            k=int(data["k"]),
            d=int(data["d"]),
            d_dual=int(data["d_dual"]),
            verdict=Verdict(data["verdict"]),
        )


@dataclass(slots=True)
class ConditionReport:
    """Resultado de um criterio teorico.

    `conditions` guarda as condicoes universais (com testemunha em `witnesses`
    quando falham) e as flags de caso; `overall` segue a estrutura literal do
    enunciado e `exact` a caracterizacao necessaria e suficiente.
    """

    name: str
    conditions: dict[str, bool]
    witnesses: dict[str, tuple[int, ...] | None]
    overall: bool
    exact: bool
    notes: list[str] = field(default_factory=list)

    @property
    def literal_matches_exact(self) -> bool:
        return self.overall == self.exact

    def failed(self) -> list[str]:
        return [name for name, w in self.witnesses.items() if w is not None]

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "conditions": dict(self.conditions),
            "witnesses": {k: _witness_out(v) for k, v in self.witnesses.items()},
            "overall": self.overall,
            "exact": self.exact,
            "literal_matches_exact": self.literal_matches_exact,
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ConditionReport":
        return cls(
            name=str(data["name"]),
            conditions={str(k): bool(v) for k, v in data.get("conditions", {}).items()},
            witnesses={str(k): _witness_in(v) for k, v in data.get("witnesses", {}).items()},
            overall=bool(data["overall"]),
            exact=bool(data.get("exact", data["overall"])),
            notes=[str(n) for n in data.get("notes", [])],
        )


@dataclass(slots=True)
class CoveringReport:
    delta: int
    tau: int
    pi: int
    k: int
    rho: int
    u_distance: int
    theorem2_holds: bool
    rl_mds: bool
    extension_mds: bool

    @property
    def predicted_rho(self) -> int | None:
        return self.k if self.theorem2_holds else None

    @property
    def deep_hole(self) -> bool:
        return self.u_distance == self.rho

    @property
    def triple(self) -> tuple[int, int, int]:
        return self.delta, self.tau, self.pi

    def to_dict(self) -> dict[str, Any]:
        return {
            "delta": self.delta,
            "tau": self.tau,
            "pi": self.pi,
            "k": self.k,
            "rho": self.rho,
            "predicted_rho": self.predicted_rho,
            "u_distance": self.u_distance,
            "deep_hole": self.deep_hole,
            "theorem2_holds": self.theorem2_holds,
            "rl_mds": self.rl_mds,
            "extension_mds": self.extension_mds,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "CoveringReport":
        return cls(
            delta=int(data["delta"]),
            tau=int(data["tau"]),
            pi=int(data["pi"]),
            k=int(data["k"]),
            rho=int(data["rho"]),
            u_distance=int(data["u_distance"]),
            theorem2_holds=bool(data["theorem2_holds"]),
            rl_mds=bool(data["rl_mds"]),
            extension_mds=bool(data["extension_mds"]),
        )


@dataclass(slots=True)
class ExtendabilityReport:
    alpha: tuple[int, ...]
    verdict: Extendability
    predicted_dual_distance: int
    measured_dual_distance: int
    original_dual_distance: int
    all_nonzero: bool
    no_zero_pair_sum: bool
    zero_pair: tuple[int, int] | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "alpha": list(self.alpha),
            "verdict": self.verdict.value,
            "predicted_dual_distance": self.predicted_dual_distance,
            "measured_dual_distance": self.measured_dual_distance,
            "original_dual_distance": self.original_dual_distance,
            "conditions": {
                "all_nonzero": self.all_nonzero,
                "no_zero_pair_sum": self.no_zero_pair_sum,
            },
            "zero_pair": None if self.zero_pair is None else list(self.zero_pair),
        }


@dataclass(slots=True)
class TripleSummary:
    """Uma linha da varredura (delta, tau, pi): criterios e oraculo."""

    delta: int
    tau: int
    pi: int
    cond1: bool
    cond2: bool
    cond3: bool
    cond4: bool
    dual_amds: bool
    dual_amds_exact: bool
    c2_amds: bool
    c2_amds_exact: bool
    nmds: bool | None
    verdict: Verdict
    d: int
    d_dual: int

    @property
    def triple(self) -> tuple[int, int, int]:
        return self.delta, self.tau, self.pi

    @property
    def theorem2(self) -> bool:
        return self.cond1 and self.cond2 and self.cond3 and self.cond4

    def matches(self, target: SearchTarget | None, n_total: int, k: int) -> bool:
        if target is None:
            return True
        if target is SearchTarget.MDS:
            return self.verdict is Verdict.MDS
        if target is SearchTarget.AMDS:
            return self.d == n_total - k
        if target is SearchTarget.DUAL_AMDS:
            return self.d_dual == k
        return self.verdict is Verdict.NMDS

    def to_dict(self) -> dict[str, Any]:
        return {
            "delta": self.delta,
            "tau": self.tau,
            "pi": self.pi,
            "cond1": self.cond1,
            "cond2": self.cond2,
            "cond3": self.cond3,
            "cond4": self.cond4,
            "theorem2": self.theorem2,
            "dual_amds": self.dual_amds,
            "dual_amds_exact": self.dual_amds_exact,
            "c2_amds": self.c2_amds,
            "c2_amds_exact": self.c2_amds_exact,
            "nmds": self.nmds,
            "verdict": self.verdict.value,
            "d": self.d,
            "d_dual": self.d_dual,
        }


@dataclass(slots=True)
class SearchReport:
    q: int
    alpha: tuple[int, ...]
    k: int
    target: SearchTarget | None
    triples: list[TripleSummary]
    tool_version: str
    warnings: list[str] = field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def n_total(self) -> int:
        return len(self.alpha) + 3

    @property
    def counts(self) -> dict[str, int]:
        out = {v.value: 0 for v in Verdict}
        for t in self.triples:
            out[t.verdict.value] += 1
        return out

    @property
    def matches(self) -> list[TripleSummary]:
        return [t for t in self.triples if t.matches(self.target, self.n_total, self.k)]

    def to_dict(self, include_timing: bool = False) -> dict[str, Any]:
        data: dict[str, Any] = {
            "params": {
                "q": self.q,
                "alpha": list(self.alpha),
                "k": self.k,
                "target": None if self.target is None else self.target.value,
            },
            "counts": self.counts,
            "matches": [list(t.triple) for t in self.matches],
            "triples": [t.to_dict() for t in self.triples],
            "tool_version": self.tool_version,
            "warnings": list(self.warnings),
        }
        if include_timing:
            data["elapsed_seconds"] = round(self.elapsed_seconds, 3)
        return data
