from __future__ import annotations

import logging
import time
from collections.abc import Sequence

from .. import __version__
from ..infra.cancel_token import CancelToken
from .code import classify
from .construct import ConstructionParams, c2_generator
from .criteria import theorem2_witnesses, theorem_c2_amds, theorem_dual_amds
from .gf import FieldElement, FieldSpec
from .models import SearchReport, SearchTarget, TripleSummary
from .sweep import sweep_triples

logger = logging.getLogger(__name__)


def summarize_triple(params: ConstructionParams, enum_limit: int | None = None) -> TripleSummary:
    """Criterios teoricos e classificacao por forca bruta de um unico C2."""
    witnesses = theorem2_witnesses(params)
    dual_report = theorem_dual_amds(params)
    c2_report = theorem_c2_amds(params)
    cond = {name: witnesses[name] is None for name in ("cond1", "cond2", "cond3", "cond4")}
    nmds = None
    if cond["cond1"] and cond["cond2"]:
        nmds = not (cond["cond3"] and cond["cond4"])
    result = classify(c2_generator(params), enum_limit)
    return TripleSummary(
        delta=params.delta,
        tau=params.tau,
        pi=params.pi,
        cond1=cond["cond1"],
        cond2=cond["cond2"],
        cond3=cond["cond3"],
        cond4=cond["cond4"],
        dual_amds=dual_report.overall,
        dual_amds_exact=dual_report.exact,
        c2_amds=c2_report.overall,
        c2_amds_exact=c2_report.exact,
        nmds=nmds,
        verdict=result.verdict,
        d=result.d,
        d_dual=result.d_dual,
    )


def search_triples(
    field: FieldSpec,
    alpha: Sequence[FieldElement | int],
    k: int,
    target: SearchTarget | None = None,
    workers: int = 1,
    token: CancelToken | None = None,
    enum_limit: int | None = None,
) -> SearchReport:
    """Varre as q^3 triplas (delta, tau, pi) para um alpha e k fixos."""
    base = ConstructionParams(field, tuple(field.coerce_all(alpha)), k)
    started = time.perf_counter()
    triples = sweep_triples(base, lambda p: summarize_triple(p, enum_limit), workers, token)
    triples.sort(key=lambda t: t.triple)
    report = SearchReport(
        q=field.q,
        alpha=base.alpha,
        k=k,
        target=target,
        triples=triples,
        tool_version=__version__,
        warnings=base.warnings(),
        elapsed_seconds=time.perf_counter() - started,
    )
    logger.info(
        "Busca concluida em %.2fs: %s (%d casam com o alvo)",
        report.elapsed_seconds,
        report.counts,
        len(report.matches),
    )
    return report
