"""Codigos lineares: dual, distancia minima, classificacao, extensao por u,
raio de cobertura e buracos profundos."""

from __future__ import annotations

import logging
import math
import threading
from collections.abc import Iterator, Sequence
from itertools import combinations, permutations

import numpy as np

from .errors import BudgetExceededError, CodeError
from .gf import FieldElement, FieldSpec
from .matrix import MatrixGF, null_space, rank, row_reduce
from .models import Classification, Verdict
from .state import env_int

logger = logging.getLogger(__name__)

INFINITE_DISTANCE = math.inf
ENUM_LIMIT_DEFAULT = 10_000_000
BUDGET_DEFAULT = 10_000_000
_CHUNK = 1 << 14


def enum_limit_from_env() -> int:
    return env_int("RLWB_ENUM_LIMIT", ENUM_LIMIT_DEFAULT)


def budget_from_env() -> int:
    return env_int("RLWB_BUDGET", BUDGET_DEFAULT)


class LinearCode:
    """Codigo [n, k] dado por uma matriz geradora de posto cheio.

    O gerador informado e mantido (a escolha de G importa em [G : I_k]); a forma
    canonica RREF serve apenas para comparar espacos linha. Distancia, dual e
    tabela de lideres de classe sao calculados sob demanda e gravados uma vez.
    """

    __slots__ = ("field", "generator", "_canonical", "_lock", "_distance", "_dual", "_cosets")

    def __init__(self, generator: MatrixGF) -> None:
        reduced, pivots = row_reduce(generator)
        canonical = MatrixGF(generator.field, reduced[: len(pivots)])
        if len(pivots) < generator.rows:
            logger.debug(
                "Gerador %s com posto %d; usando a forma reduzida", generator.shape, len(pivots)
            )
            generator = canonical
        self.field: FieldSpec = generator.field
        self.generator = generator
        self._canonical = canonical
        self._lock = threading.Lock()
        self._distance: int | float | None = None
        self._dual: LinearCode | None = None
        self._cosets: np.ndarray | None = None

    @classmethod
    def from_rows(
        cls, field: FieldSpec, rows: Sequence[Sequence[FieldElement | int]], ncols: int | None = None
    ) -> LinearCode:
        return cls(MatrixGF.from_rows(field, rows, ncols))

    @property
    def n(self) -> int:
        return self.generator.cols

    @property
    def k(self) -> int:
        return self.generator.rows

    def canonical(self) -> MatrixGF:
        return self._canonical

    def _store(self, attr: str, value: object) -> object:
        with self._lock:
            if getattr(self, attr) is None:
                setattr(self, attr, value)
            return getattr(self, attr)

    def __repr__(self) -> str:
        return f"LinearCode([{self.n}, {self.k}] sobre GF({self.field.q}))"


def same_code(a: LinearCode, b: LinearCode) -> bool:
    """Mesmo conjunto de palavras (formas canonicas iguais)."""
    return a.field == b.field and a.n == b.n and a.canonical() == b.canonical()


def iter_codewords(C: LinearCode, include_zero: bool = False) -> Iterator[np.ndarray]:
    """Palavras-codigo em blocos (mensagens em ordem crescente na base q)."""
    f, k = C.field, C.k
    total = f.q**k
    G = C.generator.entries
    place = np.array([f.q**i for i in range(k)], dtype=np.int64)
    for lo in range(0 if include_zero else 1, total, _CHUNK):
        idx = np.arange(lo, min(total, lo + _CHUNK), dtype=np.int64)
        msgs = (idx[:, None] // place[None, :]) % f.q
        yield f.matmul_arrays(msgs, G)


def smallest_dependent_columns(M: MatrixGF) -> tuple[int | float, tuple[int, ...] | None]:
    """Menor conjunto de colunas linearmente dependentes (ordem lexicografica)."""
    top = min(M.cols, M.rows + 1)
    for w in range(1, top + 1):
        for cols in combinations(range(M.cols), w):
            if rank(M.select_columns(cols)) < w:
                return w, cols
    return INFINITE_DISTANCE, None


def distance_by_enumeration(C: LinearCode) -> int | float:
    if C.k == 0:
        return INFINITE_DISTANCE
    best = C.n
    for block in iter_codewords(C):
        best = min(best, int(np.count_nonzero(block, axis=1).min()))
        if best == 1:
            break
    return best


def distance_by_dependency(C: LinearCode) -> int | float:
    """d = menor numero de colunas dependentes da matriz de paridade."""
    if C.k == 0:
        return INFINITE_DISTANCE
    if C.k == C.n:
        return 1
    return smallest_dependent_columns(dual(C).generator)[0]


def dual_distance(C: LinearCode) -> int | float:
    """d(C^perp) lido direto das dependencias entre colunas do gerador de C."""
    return smallest_dependent_columns(C.generator)[0]


def minimum_distance(C: LinearCode, enum_limit: int | None = None) -> int | float:
    if C._distance is not None:
        return C._distance
    limit = enum_limit_from_env() if enum_limit is None else enum_limit
    if C.field.q**C.k <= limit:
        logger.debug("%r: distancia por enumeracao (q^k=%d)", C, C.field.q**C.k)
        d = distance_by_enumeration(C)
    else:
        logger.debug("%r: distancia por dependencia de colunas", C)
        d = distance_by_dependency(C)
    return C._store("_distance", d)  # type: ignore[return-value]


def dual(C: LinearCode) -> LinearCode:
    if C._dual is not None:
        return C._dual
    D = LinearCode(null_space(C.generator))
    return C._store("_dual", D)  # type: ignore[return-value]


def classify(C: LinearCode, enum_limit: int | None = None) -> Classification:
    if C.k == 0 or C.k == C.n:
        raise CodeError(f"Classificacao indefinida para k={C.k}, n={C.n}")
    n, k = C.n, C.k
    d = int(minimum_distance(C, enum_limit))
    d_dual = int(minimum_distance(dual(C), enum_limit))
    if d == n - k + 1:
        verdict = Verdict.MDS
    elif d == n - k:
        verdict = Verdict.NMDS if d_dual == k else Verdict.AMDS
    else:
        verdict = Verdict.OTHER
    return Classification(n=n, k=k, d=d, d_dual=d_dual, verdict=verdict)


def _vector(C: LinearCode, v: Sequence[FieldElement | int], what: str) -> np.ndarray:
    vals = C.field.coerce_all(v)
    if len(vals) != C.n:
        raise CodeError(f"{what} com comprimento {len(vals)}, esperado {C.n}")
    return np.array(vals, dtype=np.int64)


def extend_with_u(C: LinearCode, u: Sequence[FieldElement | int]) -> LinearCode:
    """Codigo [n+1, k] com gerador (G | G u^T)."""
    vec = _vector(C, u, "Vetor u")
    if not vec.any():
        raise CodeError("Vetor u nao pode ser nulo")
    column = C.generator @ MatrixGF(C.field, vec[:, None])
    return LinearCode(C.generator.hstack(column))


def classical_extension(C: LinearCode) -> LinearCode:
    return extend_with_u(C, [C.field.neg(1)] * C.n)


# --- cobertura -----------------------------------------------------------------


def _coset_weights(C: LinearCode, budget: int) -> np.ndarray:
    """Peso do lider de cada classe lateral, indexado pela sindrome (base q)."""
    f, n = C.field, C.n
    H = dual(C).generator.entries
    r = H.shape[0]
    size = f.q**r
    if size > budget:
        raise BudgetExceededError(f"Tabela de sindromes com {size} entradas excede {budget}")
    place = np.array([f.q**i for i in range(r)], dtype=np.int64)
    weights = np.full(size, -1, dtype=np.int64)
    weights[0] = 0
    remaining = size - 1
    evaluations = 0
    for w in range(1, n + 1):
        if remaining == 0:
            break
        count = (f.q - 1) ** w
        idx = np.arange(count, dtype=np.int64)
        base = np.array([(f.q - 1) ** t for t in range(w)], dtype=np.int64)
        values = (idx[:, None] // base[None, :]) % (f.q - 1) + 1
        for support in combinations(range(n), w):
            evaluations += count
            if evaluations > budget:
                raise BudgetExceededError(f"Busca de lideres excede o orcamento ({budget})")
            synd = f.matmul_arrays(values, H[:, list(support)].T)
            keys = synd @ place
            fresh = np.unique(keys[weights[keys] < 0])
            if fresh.size:
                weights[fresh] = w
                remaining -= int(fresh.size)
                if remaining == 0:
                    break
    if remaining:
        raise CodeError("Sindromes sem lider: matriz de paridade sem posto cheio")  # pragma: no cover
    logger.debug("%r: tabela de %d sindromes, %d avaliacoes", C, size, evaluations)
    return weights


def coset_weights(C: LinearCode, budget: int | None = None) -> np.ndarray:
    if C._cosets is not None:
        return C._cosets
    table = _coset_weights(C, budget_from_env() if budget is None else budget)
    return C._store("_cosets", table)  # type: ignore[return-value]


def syndrome_index(C: LinearCode, v: Sequence[FieldElement | int]) -> int:
    vec = _vector(C, v, "Vetor")
    H = dual(C).generator
    synd = (H @ MatrixGF(C.field, vec[:, None])).entries[:, 0]
    return int(sum(int(s) * C.field.q**i for i, s in enumerate(synd)))


def distance_to_code(
    v: Sequence[FieldElement | int],
    C: LinearCode,
    enum_limit: int | None = None,
    budget: int | None = None,
) -> int:
    vec = _vector(C, v, "Vetor")
    limit = enum_limit_from_env() if enum_limit is None else enum_limit
    if C._cosets is None and C.field.q**C.k <= limit:
        best = int(np.count_nonzero(vec))
        for block in iter_codewords(C, include_zero=True):
            best = min(best, int(np.count_nonzero(block != vec[None, :], axis=1).min()))
            if best == 0:
                break
        return best
    return int(coset_weights(C, budget)[syndrome_index(C, vec)])


def covering_radius(C: LinearCode, budget: int | None = None) -> int:
    return int(coset_weights(C, budget).max())


def is_deep_hole(v: Sequence[FieldElement | int], C: LinearCode, budget: int | None = None) -> bool:
    return distance_to_code(v, C, budget=budget) == covering_radius(C, budget)


# --- equivalencia monomial (smoke test para comprimentos pequenos) -----------


def _scaling_match(f: FieldSpec, A: np.ndarray, B: np.ndarray) -> bool:
    """Existe r_i, c_j nao nulos com B_ij = A_ij * c_j / r_i?"""
    if not np.array_equal(A != 0, B != 0):
        return False
    rows, cols = A.shape
    r: list[int | None] = [None] * rows
    c: list[int | None] = [None] * cols
    for start in range(rows):
        if r[start] is not None:
            continue
        r[start] = 1
        stack = [("r", start)]
        while stack:
            kind, i = stack.pop()
            if kind == "r":
                for j in np.flatnonzero(A[i]):
                    j = int(j)
                    want = f.mul(f.div(int(B[i, j]), int(A[i, j])), r[i])  # type: ignore[arg-type]
                    if c[j] is None:
                        c[j] = want
                        stack.append(("c", j))
                    elif c[j] != want:
                        return False
            else:
                for i2 in np.flatnonzero(A[:, i]):
                    i2 = int(i2)
                    want = f.div(f.mul(int(A[i2, i]), c[i]), int(B[i2, i]))  # type: ignore[arg-type]
                    if r[i2] is None:
                        r[i2] = want
                        stack.append(("r", i2))
                    elif r[i2] != want:
                        return False
    return True


def monomially_equivalent(a: LinearCode, b: LinearCode, max_length: int = 8) -> bool:
    """Busca exaustiva por permutacao de colunas + escala diagonal."""
    if a.field != b.field or a.n != b.n or a.k != b.k:
        return False
    if a.n > max_length:
        raise BudgetExceededError(f"Equivalencia monomial limitada a n <= {max_length}")
    k = a.k
    f = a.field
    _, pivots_b = row_reduce(b.generator)
    order_b = pivots_b + [c for c in range(b.n) if c not in pivots_b]
    target, _ = row_reduce(b.generator.select_columns(order_b))
    B = target[:k, k:]
    for perm in permutations(range(a.n)):
        reduced, pivots = row_reduce(a.generator.select_columns(perm))
        if pivots != list(range(k)):
            continue
        if _scaling_match(f, reduced[:k, k:], B):
            logger.debug("Equivalencia encontrada com permutacao %s", perm)
            return True
    return False
