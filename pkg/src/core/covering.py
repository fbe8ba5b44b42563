"""Raio de cobertura de RL^perp e o vetor u como buraco profundo."""

from __future__ import annotations

import logging
from collections.abc import Sequence

from ..infra.cancel_token import CancelToken
from .code import LinearCode, covering_radius, distance_to_code, dual
from .construct import ConstructionParams, c2_generator, roth_lempel, theorem1_u
from .criteria import mds_bruteforce, roth_lempel_mds, theorem2_mds
from .gf import FieldElement, FieldSpec
from .models import CoveringReport
from .sweep import parallel_map, sweep_triples

logger = logging.getLogger(__name__)


def roth_lempel_dual(params: ConstructionParams) -> LinearCode:
    return dual(roth_lempel(params.field, params.alpha, params.delta, params.k))


def _report(params: ConstructionParams, rl_perp: LinearCode, budget: int | None) -> CoveringReport:
    rho = covering_radius(rl_perp, budget)
    u = theorem1_u(params)
    report = CoveringReport(
        delta=params.delta,
        tau=params.tau,
        pi=params.pi,
        k=params.k,
        rho=rho,
        u_distance=distance_to_code(u, rl_perp, budget=budget),
        theorem2_holds=theorem2_mds(params).overall,
        rl_mds=roth_lempel_mds(params.field, params.alpha, params.delta, params.k),
        extension_mds=mds_bruteforce(c2_generator(params)),
    )
    if report.theorem2_holds and not (report.rho == params.k and report.deep_hole):
        logger.warning("Cobertura diverge do previsto em %s: %s", params.triple, report)
    return report


def verify_covering(params: ConstructionParams, budget: int | None = None) -> CoveringReport:
    return _report(params, roth_lempel_dual(params), budget)


def sweep_covering(
    field: FieldSpec,
    alpha: Sequence[FieldElement | int],
    k: int,
    workers: int = 1,
    token: CancelToken | None = None,
    budget: int | None = None,
) -> list[CoveringReport]:
    """verify_covering para todas as triplas; RL^perp so depende de delta."""
    base = ConstructionParams(field, tuple(field.coerce_all(alpha)), k)

    def prepare(delta: int) -> LinearCode:
        code = roth_lempel_dual(base.with_triple(delta, 0, 0))
        covering_radius(code, budget)
        return code

    duals = dict(zip(range(field.q), parallel_map(prepare, range(field.q), workers, token)))
    reports = sweep_triples(
        base, lambda p: _report(p, duals[p.delta], budget), workers=workers, token=token
    )
    reports.sort(key=lambda r: r.triple)
    return reports
