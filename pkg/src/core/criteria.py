"""Predicados teoricos sobre (alpha, k, delta, tau, pi) e o oraculo por menores.

Somas sobre pares (sum_{i<j} a_i a_j) sao sobre pares nao ordenados e valem 0
para conjuntos com menos de dois elementos. Os subconjuntos sao varridos em
ordem lexicografica de indices, entao a testemunha reportada e sempre a
primeira que viola a condicao.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from itertools import combinations

from .code import LinearCode
from .construct import ConstructionParams
from .errors import CorollaryNotApplicable, ParameterError
from .gf import FieldElement, FieldSpec
from .matrix import det_value
from .models import ConditionReport

logger = logging.getLogger(__name__)

THEOREM2_CONDITIONS = ("cond1", "cond2", "cond3", "cond4")


@dataclass(frozen=True, slots=True)
class SetCheck:
    ok: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok


def e1(field: FieldSpec, vals: Sequence[int]) -> int:
    return field.sum(vals)


def e2(field: FieldSpec, vals: Sequence[int]) -> int:
    acc = 0
    for i, x in enumerate(vals):
        for y in vals[i + 1 :]:
            acc = field.add(acc, field.mul(x, y))
    return acc


def h2(field: FieldSpec, vals: Sequence[int]) -> int:
    """sum a_i^2 + sum_{i<j} a_i a_j."""
    return field.add(field.sum([field.mul(x, x) for x in vals]), e2(field, vals))


def first_subset(
    alpha: Sequence[int], size: int, predicate: Callable[[tuple[int, ...]], bool]
) -> tuple[int, ...] | None:
    for idx in combinations(range(len(alpha)), size):
        vals = tuple(alpha[i] for i in idx)
        if predicate(vals):
            return vals
    return None


def _check_t(S: Sequence[int], t: int) -> None:
    if not 1 <= t <= len(S):
        raise ParameterError(f"t={t} fora de 1..{len(S)}")


def is_ntd_set(
    field: FieldSpec, S: Sequence[FieldElement | int], t: int, delta: FieldElement | int
) -> SetCheck:
    """Nenhum t-subconjunto de S soma delta?"""
    vals = field.coerce_all(S)
    _check_t(vals, t)
    d = field.coerce(delta)
    witness = first_subset(vals, t, lambda sub: field.sum(sub) == d)
    return SetCheck(witness is None, witness)


def is_ntd_set_mitm(
    field: FieldSpec, S: Sequence[FieldElement | int], t: int, delta: FieldElement | int
) -> bool:
    """Mesmo predicado por encontro no meio: somas das metades combinadas."""
    vals = field.coerce_all(S)
    _check_t(vals, t)
    d = field.coerce(delta)
    half = len(vals) // 2
    left, right = vals[:half], vals[half:]
    right_sums: dict[int, set[int]] = {}
    for size in range(0, min(t, len(right)) + 1):
        right_sums[size] = {field.sum(sub) for sub in combinations(right, size)}
    for size in range(0, min(t, len(left)) + 1):
        need = t - size
        if need not in right_sums:
            continue
        for sub in combinations(left, size):
            if field.sub(d, field.sum(sub)) in right_sums[need]:
                return False
    return True


def roth_lempel_mds(
    field: FieldSpec, alpha: Sequence[FieldElement | int], delta: FieldElement | int, k: int
) -> bool:
    """RL(alpha, delta, k) e MDS sse alpha e um (n, k-1, delta)-conjunto."""
    return bool(is_ntd_set(field, alpha, k - 1, delta))


# --- Theorem 2 -------------------------------------------------------------


def theorem2_witnesses(params: ConstructionParams) -> dict[str, tuple[int, ...] | None]:
    f, k, alpha = params.field, params.k, params.alpha
    delta, tau, pi = params.triple
    return {
        "cond1": first_subset(alpha, k - 1, lambda I: e1(f, I) == delta),
        "cond2": first_subset(alpha, k - 2, lambda J: e1(f, J) == tau),
        "cond3": first_subset(
            alpha, k - 1, lambda I: f.add(e2(f, I), pi) == f.mul(tau, e1(f, I))
        ),
        "cond4": first_subset(
            alpha,
            k - 2,
            lambda J: f.add(pi, f.mul(delta, e1(f, J))) == f.add(f.mul(tau, delta), h2(f, J)),
        ),
    }


def theorem2_mds(params: ConstructionParams) -> ConditionReport:
    witnesses = theorem2_witnesses(params)
    conditions = {name: witnesses[name] is None for name in THEOREM2_CONDITIONS}
    overall = all(conditions.values())
    logger.debug("theorem2 %s: %s", params.triple, conditions)
    return ConditionReport(
        name="theorem2_mds",
        conditions=conditions,
        witnesses=witnesses,
        overall=overall,
        exact=overall,
        notes=params.warnings(),
    )


def _any_failure(witnesses: dict[str, tuple[int, ...] | None], names: Sequence[str]) -> bool:
    return any(witnesses[n] is not None for n in names)


def theorem_dual_amds(params: ConstructionParams) -> ConditionReport:
    """C2^perp AMDS: casos (1) e (2) literais, mais a forma exata d^perp = k."""
    f, k, alpha = params.field, params.k, params.alpha
    _, tau, pi = params.triple
    witnesses = theorem2_witnesses(params)
    witnesses["pi_avoids_h2"] = first_subset(alpha, k - 2, lambda J: h2(f, J) == pi)
    witnesses["no_dependent_k_minus_1"] = first_subset(
        alpha, k - 2, lambda J: e1(f, J) == tau and h2(f, J) == pi
    )
    not_mds = _any_failure(witnesses, THEOREM2_CONDITIONS)
    case1 = witnesses["cond2"] is None and _any_failure(witnesses, ("cond1", "cond3", "cond4"))
    case2 = witnesses["pi_avoids_h2"] is None and not_mds
    exact = witnesses["no_dependent_k_minus_1"] is None and not_mds
    conditions = {name: w is None for name, w in witnesses.items()}
    conditions.update(case1=case1, case2=case2)
    notes = params.warnings()
    if (case1 or case2) != exact:
        notes.append("estrutura literal difere da caracterizacao exata")
    return ConditionReport(
        name="theorem_dual_amds",
        conditions=conditions,
        witnesses=witnesses,
        overall=case1 or case2,
        exact=exact,
        notes=notes,
    )


def theorem_c2_amds(params: ConstructionParams) -> ConditionReport:
    """C2 AMDS: casos (1) e (2) literais, mais a forma exata d = n + 3 - k."""
    f, n, k, alpha = params.field, params.n, params.k, params.alpha
    delta, tau, pi = params.triple
    a = e1(f, alpha)
    b = f.sub(f.mul(a, a), e2(f, alpha))
    rhs = f.sub(f.sub(pi, b), f.mul(delta, f.sub(tau, a)))
    witnesses = theorem2_witnesses(params)
    witnesses["parity_condition"] = first_subset(alpha, n + 1 - k, lambda J: h2(f, J) == rhs)
    witnesses["no_low_weight_word"] = first_subset(
        alpha,
        k - 1,
        lambda I: e1(f, I) == delta and f.add(e2(f, I), pi) == f.mul(tau, e1(f, I)),
    )
    not_mds = _any_failure(witnesses, THEOREM2_CONDITIONS)
    case1 = witnesses["cond1"] is None and _any_failure(witnesses, ("cond2", "cond3", "cond4"))
    case2 = witnesses["parity_condition"] is None and not_mds
    exact = witnesses["no_low_weight_word"] is None and not_mds
    conditions = {name: w is None for name, w in witnesses.items()}
    conditions.update(case1=case1, case2=case2)
    notes = params.warnings()
    if (case1 or case2) != exact:
        notes.append("estrutura literal difere da caracterizacao exata")
    return ConditionReport(
        name="theorem_c2_amds",
        conditions=conditions,
        witnesses=witnesses,
        overall=case1 or case2,
        exact=exact,
        notes=notes,
    )


def corollary_nmds(params: ConstructionParams) -> ConditionReport:
    witnesses = theorem2_witnesses(params)
    for name in ("cond1", "cond2"):
        if witnesses[name] is not None:
            raise CorollaryNotApplicable(
                f"Hipotese do corolario falha em {name}: subconjunto {list(witnesses[name])}"
            )
    overall = _any_failure(witnesses, ("cond3", "cond4"))
    return ConditionReport(
        name="corollary_nmds",
        conditions={name: witnesses[name] is None for name in THEOREM2_CONDITIONS},
        witnesses=witnesses,
        overall=overall,
        exact=overall,
        notes=params.warnings(),
    )


# --- oraculo -----------------------------------------------------------------


def singular_minor(C: LinearCode) -> tuple[int, ...] | None:
    """Primeiro conjunto de k colunas com determinante nulo, se houver."""
    rows = C.generator.to_lists()
    k = C.k
    for cols in combinations(range(C.n), k):
        minor = [[row[c] for c in cols] for row in rows]
        if det_value(C.field, minor) == 0:
            return cols
    return None


def mds_bruteforce(C: LinearCode) -> bool:
    witness = singular_minor(C)
    if witness is not None:
        logger.debug("%r nao e MDS: colunas %s singulares", C, witness)
    return witness is None
