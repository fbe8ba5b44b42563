"""Extensao otima de GRS_3 via o gerador [G : I_k]."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from itertools import combinations

from ..infra.cancel_token import CancelToken
from .code import LinearCode, dual_distance
from .construct import ConstructionParams, grs
from .criteria import theorem2_mds
from .errors import ParameterError
from .gf import FieldElement, FieldSpec
from .matrix import MatrixGF
from .models import Extendability, ExtendabilityReport
from .sweep import parallel_map

logger = logging.getLogger(__name__)

PREDICTED_DUAL_DISTANCE = {
    Extendability.OPTIMAL: 4,
    Extendability.ALMOST: 3,
    Extendability.NEITHER: 2,
}


def augment_identity(C: LinearCode) -> LinearCode:
    return LinearCode(C.generator.hstack(MatrixGF.identity(C.field, C.k)))


def _zero_pair(field: FieldSpec, vals: Sequence[int]) -> tuple[int, int] | None:
    for a, b in combinations(vals, 2):
        if field.add(a, b) == 0:
            return a, b
    return None


def theorem5_verdict(
    field: FieldSpec, alpha: Sequence[FieldElement | int]
) -> ExtendabilityReport:
    vals = tuple(field.coerce_all(alpha))
    if len(set(vals)) != len(vals):
        raise ParameterError(f"alpha com pontos repetidos: {list(vals)}")
    if len(vals) < 4:
        raise ParameterError(f"Extensao de GRS_3 exige n >= 4, recebido n={len(vals)}")

    all_nonzero = 0 not in vals
    pair = _zero_pair(field, vals)
    if not all_nonzero:
        verdict = Extendability.NEITHER
    elif pair is None:
        verdict = Extendability.OPTIMAL
    else:
        verdict = Extendability.ALMOST

    code = grs(field, vals, None, 3)
    measured = dual_distance(augment_identity(code))
    report = ExtendabilityReport(
        alpha=vals,
        verdict=verdict,
        predicted_dual_distance=PREDICTED_DUAL_DISTANCE[verdict],
        measured_dual_distance=int(measured),
        original_dual_distance=int(dual_distance(code)),
        all_nonzero=all_nonzero,
        no_zero_pair_sum=pair is None,
        zero_pair=pair,
    )
    if report.measured_dual_distance != report.predicted_dual_distance:
        logger.warning("d^perp medido difere do previsto para alpha=%s", vals)
    return report


def theorem2_reduction(field: FieldSpec, alpha: Sequence[FieldElement | int]) -> bool:
    """Teorema 2 com k = 3 e (delta, tau, pi) = (0, 0, 0)."""
    params = ConstructionParams(field, tuple(field.coerce_all(alpha)), 3, 0, 0, 0)
    return theorem2_mds(params).overall


def alpha_subsets(
    field: FieldSpec, n_min: int = 4, n_max: int | None = None, include_zero: bool = False
) -> list[tuple[int, ...]]:
    pool = list(range(0 if include_zero else 1, field.q))
    top = min(len(pool), 6) if n_max is None else min(n_max, len(pool))
    return [s for n in range(n_min, top + 1) for s in combinations(pool, n)]


def sweep_extendable(
    field: FieldSpec,
    n_min: int = 4,
    n_max: int | None = None,
    include_zero: bool = False,
    workers: int = 1,
    token: CancelToken | None = None,
) -> list[ExtendabilityReport]:
    subsets = alpha_subsets(field, n_min, n_max, include_zero)
    logger.info("Varredura de extensao: GF(%d), %d conjuntos alpha", field.q, len(subsets))
    return parallel_map(lambda s: theorem5_verdict(field, s), subsets, workers, token)
