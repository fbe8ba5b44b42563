from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from typing import Any

from .errors import WorkbenchError


class OutputFormat(str, Enum):
    HUMAN = "human"
    JSON = "json"
    CSV = "csv"


def env_int(name: str, default: int) -> int:
    """Le a variavel no momento da chamada (depois do load_dotenv da CLI)."""
    raw = os.getenv(name, "")
    try:
        return int(raw) if raw.strip() else default
    except ValueError as exc:
        raise WorkbenchError(f"Variavel {name} invalida: '{raw}'") from exc


@dataclass(slots=True)
class RunConfig:
    """Configuracao de uma execucao da CLI (env/.env sobrescritos por flags)."""

    p: int | None = None
    m: int = 1
    modulus: tuple[int, ...] | None = None
    output: OutputFormat = OutputFormat.HUMAN
    workers: int = 1
    budget: int = 10_000_000
    enum_limit: int = 10_000_000
    field_bound: int = 1 << 16
    debug: bool = False
    timing: bool = False

    def __post_init__(self) -> None:
        if self.budget <= 0:
            raise WorkbenchError(f"Orcamento deve ser positivo: {self.budget}")
        if self.enum_limit <= 0:
            raise WorkbenchError(f"Limite de enumeracao deve ser positivo: {self.enum_limit}")
        if self.workers < 1:
            raise WorkbenchError(f"workers deve ser >= 1: {self.workers}")
        if self.m < 1:
            raise WorkbenchError(f"Grau de extensao invalido: {self.m}")

    @classmethod
    def from_env(cls) -> "RunConfig":
        return cls(
            workers=env_int("RLWB_WORKERS", 1),
            budget=env_int("RLWB_BUDGET", 10_000_000),
            enum_limit=env_int("RLWB_ENUM_LIMIT", 10_000_000),
            field_bound=env_int("RLWB_FIELD_BOUND", 1 << 16),
            debug=bool(env_int("RLWB_DEBUG", 0)),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "p": self.p,
            "m": self.m,
            "modulus": None if self.modulus is None else list(self.modulus),
            "output": self.output.value,
            "workers": self.workers,
            "budget": self.budget,
            "enum_limit": self.enum_limit,
            "field_bound": self.field_bound,
            "debug": self.debug,
            "timing": self.timing,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "RunConfig":
        modulus = data.get("modulus")
        return cls(
            p=None if data.get("p") is None else int(data["p"]),
            m=int(data.get("m", 1)),
            modulus=None if modulus is None else tuple(int(c) for c in modulus),
            output=OutputFormat(data.get("output", "human")),
            workers=int(data.get("workers", 1)),
            budget=int(data.get("budget", 10_000_000)),
            enum_limit=int(data.get("enum_limit", 10_000_000)),
            field_bound=int(data.get("field_bound", 1 << 16)),
            debug=bool(data.get("debug", False)),
            timing=bool(data.get("timing", False)),
        )
