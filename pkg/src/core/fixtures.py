"""Corpus de regressao com os exemplos numericos publicados.

Configuracoes sobre GF(8) e GF(9) sao escritas em potencias de um primitivo
nao especificado; cada uma e avaliada para todos os primitivos do corpo
canonico e o corpus registra quais reproduzem o resultado.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from .. import __version__
from .code import classify
from .construct import ConstructionParams, c2_generator
from .covering import verify_covering
from .criteria import theorem2_mds
from .extendable import theorem5_verdict
from .gf import FieldSpec, make_field, primitive_elements
from .models import SearchTarget, Verdict
from .search import search_triples
from .storage import FIXTURES_SCHEMA, default_fixtures_path, save_json

logger = logging.getLogger(__name__)

# None = elemento 0; inteiro e = g^e
PowerSpec = Sequence[int | None]

EXAMPLE1_SETS: dict[tuple[int, ...], tuple[int, int, int]] = {
    (0, 1, 2): (0, 3, 2),
    (0, 1, 3): (0, 2, 3),
    (0, 2, 3): (0, 1, 1),
    (1, 2, 3): (0, 0, 0),
}

EXAMPLE4_CONFIGS: tuple[dict[str, Any], ...] = (
    {"alpha": (None, 0, 1, 3), "k": 3, "triple": (6, 5, 2), "params": (7, 3, 5)},
    {"alpha": (None, 0, 1, 3), "k": 4, "triple": (6, 6, None), "params": (7, 4, 4)},
    {"alpha": (None, 0, 1, 2, 3), "k": 3, "triple": (None, 4, 1), "params": (8, 3, 6)},
)

COVERING_GF9: dict[str, Any] = {"alpha": (None, 0, 1, 2), "k": 3, "triple": (6, 5, 0)}
COVERING_GF8: dict[str, Any] = {"alpha": (None, 0, 1, 2), "k": 3, "triple": (2, 2, 5)}


def from_powers(field: FieldSpec, g: int, spec: PowerSpec) -> tuple[int, ...]:
    return tuple(0 if e is None else field.pow(g, e) for e in spec)


def params_from_powers(field: FieldSpec, g: int, config: dict[str, Any]) -> ConstructionParams:
    delta, tau, pi = from_powers(field, g, config["triple"])
    return ConstructionParams(
        field, from_powers(field, g, config["alpha"]), config["k"], delta, tau, pi
    )


def example1() -> list[dict[str, Any]]:
    field = make_field(2, 2)
    out = []
    for alpha in EXAMPLE1_SETS:
        report = search_triples(field, alpha, 3, SearchTarget.MDS)
        out.append(
            {
                "alpha": list(alpha),
                "mds_triples": [list(t.triple) for t in report.matches],
                "params": sorted({f"[{len(alpha) + 3},3,{t.d}]" for t in report.matches}),
            }
        )
    return out


def example4() -> list[dict[str, Any]]:
    field = make_field(2, 3)
    out = []
    for i, config in enumerate(EXAMPLE4_CONFIGS):
        hits = []
        for g in primitive_elements(field):
            result = classify(c2_generator(params_from_powers(field, g.value, config)))
            if result.verdict is Verdict.MDS and (result.n, result.k, result.d) == config["params"]:
                hits.append(g.value)
        out.append({"config": i, "params": list(config["params"]), "primitive_hits": hits})
    return out


def covering_examples() -> dict[str, Any]:
    gf9, gf8, gf5 = make_field(3, 2), make_field(2, 3), make_field(5)
    data: dict[str, Any] = {}
    for name, field, config in (("gf9", gf9, COVERING_GF9), ("gf8", gf8, COVERING_GF8)):
        rows = []
        for g in primitive_elements(field):
            params = params_from_powers(field, g.value, config)
            report = verify_covering(params)
            rows.append({"g": g.value, **report.to_dict()})
        data[name] = rows
    data["gf5"] = [
        {"delta": d, "rho": verify_covering(ConstructionParams(gf5, (1, 2, 3, 4), 3, d)).rho}
        for d in range(gf5.q)
    ]
    return data


def build_corpus() -> dict[str, Any]:
    gf5, gf7, gf8 = make_field(5), make_field(7), make_field(2, 3)
    ex2 = ConstructionParams(gf5, (1, 2, 3), 3, 2, 0, 1)
    ex3 = search_triples(gf7, (2, 3, 5), 3, SearchTarget.MDS)
    corpus = {
        "schema": FIXTURES_SCHEMA,
        "tool_version": __version__,
        "example1": example1(),
        "example2": {
            "theorem2": theorem2_mds(ex2).overall,
            "classification": classify(c2_generator(ex2)).to_dict(),
        },
        "example3": {
            "mds_count": len(ex3.matches),
            "mds_triples": [list(t.triple) for t in ex3.matches],
        },
        "example4": example4(),
        "covering": covering_examples(),
        "theorem5": [
            theorem5_verdict(gf5, (1, 2, 3, 4)).to_dict(),
            theorem5_verdict(gf8, tuple(range(1, 8))).to_dict(),
            theorem5_verdict(gf5, (0, 1, 2, 3)).to_dict(),
        ],
    }
    logger.info("Corpus de exemplos montado (%d secoes)", len(corpus) - 2)
    return corpus


def write_corpus(path: str | Path | None = None) -> Path:
    target = Path(path) if path else default_fixtures_path()
    logger.info("Gravando corpus de exemplos em %s", target)
    return save_json(target, build_corpus())
