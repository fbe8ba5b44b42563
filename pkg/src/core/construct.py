"""Construtores das familias de codigos: GRS, Roth-Lempel, C2, o vetor u de
extensao e a matriz de paridade explicita de C2."""

from __future__ import annotations

import dataclasses
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from .code import LinearCode
from .errors import ParameterError
from .gf import FieldElement, FieldSpec, field_from_dict, field_to_dict
from .matrix import MatrixGF, cramer_unit_solution, vandermonde

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class ConstructionParams:
    """(alpha, k, delta, tau, pi) sobre um corpo; alpha com n pontos distintos."""

    field: FieldSpec
    alpha: tuple[int, ...]
    k: int
    delta: int = 0
    tau: int = 0
    pi: int = 0

    def __post_init__(self) -> None:
        f = self.field
        try:
            alpha = tuple(f.coerce_all(self.alpha))
            triple = [f.coerce(x) for x in (self.delta, self.tau, self.pi)]
        except ValueError as exc:
            raise ParameterError(str(exc)) from exc
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "delta", triple[0])
        object.__setattr__(self, "tau", triple[1])
        object.__setattr__(self, "pi", triple[2])
        if len(set(alpha)) != len(alpha):
            raise ParameterError(f"alpha com pontos repetidos: {list(alpha)}")
        if len(alpha) > f.q:
            raise ParameterError(f"n={len(alpha)} excede q={f.q}")
        if self.k < 3:
            raise ParameterError(f"k deve ser >= 3, recebido {self.k}")
        if len(alpha) < self.k:
            raise ParameterError(f"n={len(alpha)} menor que k={self.k}")

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def triple(self) -> tuple[int, int, int]:
        return self.delta, self.tau, self.pi

    @property
    def out_of_stated_range(self) -> bool:
        """Fora de 4 <= k+1 <= n <= q (os exemplos com k = n = 3 caem aqui)."""
        return not (4 <= self.k + 1 <= self.n <= self.field.q)

    def warnings(self) -> list[str]:
        if self.out_of_stated_range:
            return [f"parametros fora da faixa 4 <= k+1 <= n <= q (n={self.n}, k={self.k})"]
        return []

    def with_triple(self, delta: int, tau: int, pi: int) -> ConstructionParams:
        return dataclasses.replace(self, delta=delta, tau=tau, pi=pi)

    def to_dict(self) -> dict[str, Any]:
        return {
            "field": field_to_dict(self.field),
            "alpha": list(self.alpha),
            "k": self.k,
            "delta": self.delta,
            "tau": self.tau,
            "pi": self.pi,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ConstructionParams":
        return cls(
            field=field_from_dict(data["field"]),
            alpha=tuple(int(a) for a in data["alpha"]),
            k=int(data["k"]),
            delta=int(data.get("delta", 0)),
            tau=int(data.get("tau", 0)),
            pi=int(data.get("pi", 0)),
        )


def _columns(field: FieldSpec, k: int, cols: Sequence[dict[int, int]]) -> MatrixGF:
    """Matriz k x len(cols); cada coluna dada por {linha: valor}."""
    block = np.zeros((k, len(cols)), dtype=np.int64)
    for j, entries in enumerate(cols):
        for row, value in entries.items():
            block[row, j] = value
    return MatrixGF(field, block)


def grs(
    field: FieldSpec,
    alpha: Sequence[FieldElement | int],
    v: Sequence[FieldElement | int] | None,
    k: int,
) -> LinearCode:
    """GRS_k(alpha, v): gerador diag(v) aplicado as colunas da Vandermonde."""
    n = len(alpha)
    if not 1 <= k <= n:
        raise ParameterError(f"GRS exige 1 <= k <= n, recebido k={k}, n={n}")
    scalars = [1] * n if v is None else field.coerce_all(v)
    if len(scalars) != n:
        raise ParameterError("v deve ter o mesmo comprimento de alpha")
    if any(s == 0 for s in scalars):
        raise ParameterError(f"v com entrada nula: {scalars}")
    try:
        base = vandermonde(field, alpha, k)
    except ValueError as exc:
        raise ParameterError(str(exc)) from exc
    return LinearCode(base.scale_columns(scalars))


def roth_lempel_generator(
    field: FieldSpec, alpha: Sequence[FieldElement | int], delta: FieldElement | int, k: int
) -> MatrixGF:
    if k < 3:
        raise ParameterError(f"Roth-Lempel exige k >= 3, recebido {k}")
    if len(alpha) < k:
        raise ParameterError(f"Roth-Lempel exige n >= k (n={len(alpha)}, k={k})")
    try:
        base = vandermonde(field, alpha, k)
    except ValueError as exc:
        raise ParameterError(str(exc)) from exc
    d = field.coerce(delta)
    tail = _columns(field, k, [{k - 1: 1}, {k - 2: 1, k - 1: d}])
    return base.hstack(tail)


def roth_lempel(
    field: FieldSpec, alpha: Sequence[FieldElement | int], delta: FieldElement | int, k: int
) -> LinearCode:
    """RL(alpha, delta, k, n+2): Vandermonde mais e_{k-1} e (0,..,1,delta)."""
    return LinearCode(roth_lempel_generator(field, alpha, delta, k))


def c2_matrix(params: ConstructionParams) -> MatrixGF:
    f, k = params.field, params.k
    base = vandermonde(f, params.alpha, k)
    tail = _columns(
        f,
        k,
        [
            {k - 1: 1},
            {k - 2: 1, k - 1: params.delta},
            {k - 3: 1, k - 2: params.tau, k - 1: params.pi},
        ],
    )
    return base.hstack(tail)


def c2_generator(params: ConstructionParams) -> LinearCode:
    if params.out_of_stated_range:
        logger.debug("C2 fora da faixa declarada: n=%d k=%d", params.n, params.k)
    return LinearCode(c2_matrix(params))


def _sums(field: FieldSpec, alpha: Sequence[int]) -> tuple[int, int]:
    """(a, e2) = (soma dos alpha_i, soma dos produtos alpha_i alpha_j, i < j)."""
    a = field.sum(alpha)
    e2 = 0
    for i, x in enumerate(alpha):
        for y in alpha[i + 1 :]:
            e2 = field.add(e2, field.mul(x, y))
    return a, e2


def moment_sums(field: FieldSpec, alpha: Sequence[int]) -> tuple[int, int]:
    """(sum w_i a_i^n, sum w_i a_i^(n+1)) com w de cramer_unit_solution."""
    w = [x.value for x in cramer_unit_solution(field, alpha)]
    n = len(alpha)
    first = field.sum([field.mul(wi, field.pow(ai, n)) for wi, ai in zip(w, alpha)])
    second = field.sum([field.mul(wi, field.pow(ai, n + 1)) for wi, ai in zip(w, alpha)])
    return first, second


def theorem1_u(params: ConstructionParams) -> list[FieldElement]:
    """Vetor u com (G1 | G1 u^T) = G2."""
    f, n, k = params.field, params.n, params.k
    w = cramer_unit_solution(f, params.alpha)
    head = [f.mul(f.pow(ai, n + 2 - k), wi.value) for ai, wi in zip(params.alpha, w)]
    a, e2 = _sums(f, params.alpha)
    tail_tau = f.sub(params.tau, a)
    u_n1 = f.add(f.sub(params.pi, f.mul(tail_tau, params.delta)), f.sub(e2, f.mul(a, a)))
    return [FieldElement(f, v) for v in (*head, u_n1, tail_tau)]


def c2_parity(params: ConstructionParams) -> MatrixGF:
    """H (n+3-k) x (n+3) com G2 H^T = 0."""
    f, n, k = params.field, params.n, params.k
    delta, tau, pi = params.triple
    w = [x.value for x in cramer_unit_solution(f, params.alpha)]
    a, e2 = _sums(f, params.alpha)
    b = f.sub(f.mul(a, a), e2)
    if logger.isEnabledFor(logging.DEBUG):
        moments = moment_sums(f, params.alpha)
        if moments != (a, b):
            logger.error("Identidade de momentos falhou: %s != %s", moments, (a, b))

    rows = n + 3 - k
    H = np.zeros((rows, n + 3), dtype=np.int64)
    for j in range(rows):
        for i, ai in enumerate(params.alpha):
            H[j, i] = f.mul(w[i], f.pow(ai, j))
    minus_one = f.neg(1)
    tau_a = f.sub(tau, a)
    H[n - k, n] = minus_one
    H[n + 1 - k, n] = f.sub(delta, a)
    H[n + 1 - k, n + 1] = minus_one
    H[n + 2 - k, n] = f.sub(f.sub(pi, b), f.mul(delta, tau_a))
    H[n + 2 - k, n + 1] = tau_a
    H[n + 2 - k, n + 2] = minus_one
    return MatrixGF(f, H)
