"""Algebra linear densa e exata sobre GF(q).

Eliminacao, posto, espaco nulo e determinante rodam sobre `galois.FieldArray`;
as entradas ficam guardadas como inteiros canonicos. Inclui tambem as matrizes
de Vandermonde (comum e generalizada), os polinomios homogeneos completos
P_{r,l} e o fator D da fatoracao do determinante de Vandermonde generalizado.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import MatrixError
from .gf import FieldElement, FieldSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class MatrixGF:
    field: FieldSpec
    entries: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.entries, dtype=np.int64)
        if arr.ndim != 2:
            raise MatrixError(f"Matriz deve ser 2D, recebido shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= self.field.q):
            raise MatrixError(f"Entradas fora de GF({self.field.q})")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @classmethod
    def from_rows(
        cls, field: FieldSpec, rows: Sequence[Sequence[FieldElement | int]], ncols: int | None = None
    ) -> MatrixGF:
        data = [field.coerce_all(r) for r in rows]
        if not data:
            return cls(field, np.zeros((0, ncols or 0), dtype=np.int64))
        widths = {len(r) for r in data}
        if len(widths) != 1:
            raise MatrixError("Linhas com comprimentos diferentes")
        return cls(field, np.array(data, dtype=np.int64).reshape(len(data), widths.pop()))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> MatrixGF:
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> MatrixGF:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @property
    def rows(self) -> int:
        return int(self.entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self.entries.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def element(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.field, int(self.entries[i, j]))

    def to_lists(self) -> list[list[int]]:
        return self.entries.tolist()

    def transpose(self) -> MatrixGF:
        return MatrixGF(self.field, self.entries.T)

    def select_columns(self, idx: Sequence[int]) -> MatrixGF:
        return MatrixGF(self.field, self.entries[:, list(idx)])

    def hstack(self, other: MatrixGF) -> MatrixGF:
        self._check_field(other)
        if self.rows != other.rows:
            raise MatrixError(f"hstack com {self.rows} e {other.rows} linhas")
        return MatrixGF(self.field, np.hstack([self.entries, other.entries]))

    def vstack(self, other: MatrixGF) -> MatrixGF:
        self._check_field(other)
        if self.cols != other.cols:
            raise MatrixError(f"vstack com {self.cols} e {other.cols} colunas")
        return MatrixGF(self.field, np.vstack([self.entries, other.entries]))

    def scale_columns(self, factors: Sequence[FieldElement | int]) -> MatrixGF:
        vals = np.array(self.field.coerce_all(factors), dtype=np.int64)
        if vals.size != self.cols:
            raise MatrixError("Numero de fatores difere do numero de colunas")
        return MatrixGF(self.field, self.field.mul_arrays(self.entries, vals[None, :]))

    def __matmul__(self, other: MatrixGF) -> MatrixGF:
        self._check_field(other)
        if self.cols != other.rows:
            raise MatrixError(f"Produto {self.shape} x {other.shape} incompativel")
        return MatrixGF(self.field, self.field.matmul_arrays(self.entries, other.entries))

    def is_zero(self) -> bool:
        return not bool(self.entries.any())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixGF):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash((self.field, self.entries.shape, self.entries.tobytes()))

    def _check_field(self, other: MatrixGF) -> None:
        if other.field != self.field:
            raise MatrixError(f"Matrizes sobre corpos distintos: {self.field!r} e {other.field!r}")


# --- eliminacao --------------------------------------------------------------


def row_reduce(M: MatrixGF) -> tuple[np.ndarray, list[int]]:
    """Forma escalonada reduzida (galois) e as colunas pivo."""
    if M.rows == 0 or M.cols == 0:
        return M.entries.copy(), []
    f = M.field
    reduced = f.ints(f.array(M.entries).row_reduce())
    pivots = [int(np.flatnonzero(row)[0]) for row in reduced if row.any()]
    return reduced, pivots


def rref(M: MatrixGF) -> MatrixGF:
    """RREF sem as linhas nulas (forma canonica do espaco linha)."""
    reduced, pivots = row_reduce(M)
    return MatrixGF(M.field, reduced[: len(pivots)])


def rank(M: MatrixGF) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    return int(np.linalg.matrix_rank(M.field.array(M.entries)))


def null_space(M: MatrixGF) -> MatrixGF:
    """Base (nas linhas) de {v : M v^T = 0}."""
    f = M.field
    if M.cols == 0:
        return MatrixGF.zeros(f, 0, 0)
    if M.rows == 0 or not M.entries.any():
        return MatrixGF.identity(f, M.cols)
    if rank(M) == M.cols:
        return MatrixGF.zeros(f, 0, M.cols)
    basis = f.ints(f.array(M.entries).null_space())
    return MatrixGF(f, basis.reshape(-1, M.cols))


def det_value(field: FieldSpec, rows: Sequence[Sequence[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    if any(len(r) != n for r in rows):
        raise MatrixError("Determinante de matriz nao quadrada")
    return int(np.linalg.det(field.array(rows)))


def determinant(M: MatrixGF) -> FieldElement:
    if M.rows != M.cols:
        raise MatrixError(f"Determinante exige matriz quadrada, recebido {M.shape}")
    return FieldElement(M.field, det_value(M.field, M.to_lists()))


# --- Vandermonde -------------------------------------------------------------


def _distinct_points(field: FieldSpec, points: Sequence[FieldElement | int]) -> list[int]:
    vals = field.coerce_all(points)
    if len(set(vals)) != len(vals):
        raise MatrixError(f"Pontos repetidos: {vals}")
    return vals


def _power_rows(field: FieldSpec, vals: Sequence[int], exponents: Sequence[int]) -> np.ndarray:
    return np.array([[field.pow(a, e) for a in vals] for e in exponents], dtype=np.int64).reshape(
        len(exponents), len(vals)
    )


def vandermonde(field: FieldSpec, points: Sequence[FieldElement | int], nrows: int) -> MatrixGF:
    """Linha i = potencias i-esimas dos pontos (0^0 = 1)."""
    if nrows < 1:
        raise MatrixError(f"nrows deve ser >= 1: {nrows}")
    vals = _distinct_points(field, points)
    return MatrixGF(field, _power_rows(field, vals, range(nrows)))


def generalized_vandermonde(
    field: FieldSpec, exponents: Sequence[int], points: Sequence[FieldElement | int]
) -> MatrixGF:
    vals = _distinct_points(field, points)
    exps = [int(e) for e in exponents]
    if len(exps) != len(vals) - 1:
        raise MatrixError(f"Esperados {len(vals) - 1} expoentes, recebidos {len(exps)}")
    if any(e < 1 for e in exps) or any(b <= a for a, b in zip(exps, exps[1:])):
        raise MatrixError(f"Expoentes devem ser positivos e estritamente crescentes: {exps}")
    return MatrixGF(field, _power_rows(field, vals, [0, *exps]))


def homogeneous_value(field: FieldSpec, r: int, values: Sequence[int]) -> int:
    """P_{r,l}: soma de todos os monomios de grau r em l variaveis."""
    if r < 0:
        return 0
    if r == 0:
        return 1
    # dp[s] = P_{s, j} para a coluna j corrente
    dp = [1] + [0] * r
    for x in values:
        for s in range(1, r + 1):
            dp[s] = field.add(field.mul(x, dp[s - 1]), dp[s])
    return dp[r]


@lru_cache(maxsize=4096)
def _homogeneous_cached(field: FieldSpec, r: int, values: tuple[int, ...]) -> int:
    return homogeneous_value(field, r, values)


def homogeneous_poly(
    field: FieldSpec, r: int, values: Sequence[FieldElement | int]
) -> FieldElement:
    vals = tuple(field.coerce_all(values))
    if not vals:
        raise MatrixError("P_{r,l} exige l >= 1")
    return FieldElement(field, _homogeneous_cached(field, r, vals))


def gvand_factor(
    field: FieldSpec, exponents: Sequence[int], points: Sequence[FieldElement | int]
) -> FieldElement:
    """D tal que det(V_{k_1..k_m}) = D * det(V): det[P_{k_j - i, i+1}(x_1..x_{i+1})]."""
    gv = generalized_vandermonde(field, exponents, points)
    vals = field.coerce_all(points)
    exps = [int(e) for e in exponents]
    m = len(exps)
    rows = [
        [_homogeneous_cached(field, k - i, tuple(vals[: i + 1])) for i in range(1, m + 1)]
        for k in exps
    ]
    logger.debug("gvand_factor: expoentes=%s pontos=%s (GV %s)", exps, vals, gv.shape)
    return FieldElement(field, det_value(field, rows))


def cramer_unit_solution(
    field: FieldSpec, points: Sequence[FieldElement | int]
) -> list[FieldElement]:
    """w com V(points) w = (0, ..., 0, 1)^T, w_i = 1 / prod_{j != i}(a_i - a_j)."""
    vals = _distinct_points(field, points)
    out = []
    for i, ai in enumerate(vals):
        denom = field.prod([field.sub(ai, aj) for j, aj in enumerate(vals) if j != i])
        out.append(FieldElement(field, field.inv(denom)))
    return out
