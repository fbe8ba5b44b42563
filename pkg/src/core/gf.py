"""Aritmetica exata em GF(p^m) com representacao canonica.

Cada elemento e um inteiro em [0, q) cuja expansao na base p da os coeficientes
c0 + c1*x + ... + c_{m-1}*x^{m-1} (a representacao inteira do galois). O modulo
canonico e o menor polinomio monico irredutivel (pela codificacao sum c_i p^i) e
o primitivo canonico e o menor elemento de ordem q - 1. O corpo e uma classe
`galois.GF`; as tabelas log/antilog dos escalares sao tiradas dela na construcao.
"""

from __future__ import annotations

import logging
import math
import re
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import galois
import numpy as np

from .errors import FieldError, FieldZeroDivisionError
from .state import env_int

logger = logging.getLogger(__name__)

FIELD_BOUND_DEFAULT = 1 << 16
_SMALL_TABLE_LIMIT = 256
_POWER_RE = re.compile(r"^\s*g\s*(?:\^\s*(?P<exp>[+-]?\d+))?\s*$", re.IGNORECASE)

ArithOp = Literal["add", "sub", "mul", "div", "neg", "inv", "pow"]


def field_bound() -> int:
    return env_int("RLWB_FIELD_BOUND", FIELD_BOUND_DEFAULT)


def is_prime(p: int) -> bool:
    return p >= 2 and bool(galois.is_prime(p))


def prime_power(q: int) -> tuple[int, int]:
    """Decompoe q = p^m. Levanta FieldError se q nao for potencia de primo."""
    if q < 2:
        raise FieldError(f"Ordem de corpo invalida: {q}")
    if not galois.is_prime_power(q):
        raise FieldError(f"{q} nao e potencia de primo")
    primes, exponents = galois.factors(q)
    return int(primes[0]), int(exponents[0])


# --- polinomios sobre GF(p), coeficientes do grau 0 para cima ---------------


def _to_poly(coeffs: Sequence[int], p: int) -> galois.Poly:
    return galois.Poly(list(reversed([int(c) % p for c in coeffs])), field=galois.GF(p))


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    if len(coeffs) < 2:
        return False
    poly = _to_poly(coeffs, p)
    return poly.degree >= 1 and bool(poly.is_irreducible())


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    # "min" = primeiro na ordem lexicografica = menor codificacao sum c_i p^i
    poly = galois.irreducible_poly(p, m, method="min")
    return tuple(int(c) for c in poly.coeffs[::-1])


def encode_poly(coeffs: Sequence[int], p: int) -> int:
    return sum(int(c) * p**i for i, c in enumerate(coeffs))


def parse_modulus(text: str) -> tuple[int, ...]:
    """Le 'c0,c1,...,cm' (inteiros) vindo da linha de comando ou de JSON."""
    try:
        return tuple(int(c) for c in str(text).split(",") if c.strip())
    except ValueError as exc:
        raise FieldError(f"Modulo invalido: '{text}' (esperado c0,c1,...,cm inteiros)") from exc


class FieldSpec:
    """GF(p^m) imutavel apoiado numa classe `galois.GF`."""

    __slots__ = ("p", "m", "q", "modulus", "primitive", "gf", "_exp", "_log", "_neg", "_add")

    def __init__(self, p: int, m: int, modulus: tuple[int, ...] | None) -> None:
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        if modulus is None:
            self.gf = galois.GF(p)
        else:
            self.gf = galois.GF(self.q, irreducible_poly=_to_poly(modulus, p))
        q = self.q

        self.primitive = int(np.min(self.ints(self.gf.primitive_elements)))
        exponents = np.arange(q - 1, dtype=np.int64)
        cycle = self.ints(self.array(np.full(q - 1, self.primitive)) ** exponents)
        self._exp = cycle.tolist() * 2
        log = np.zeros(q, dtype=np.int64)
        log[cycle] = exponents
        self._log = log.tolist()

        values = np.arange(q, dtype=np.int64)
        self._neg = self.ints(-self.array(values)).tolist()
        self._add: list[list[int]] | None = None
        if q <= _SMALL_TABLE_LIMIT:
            self._add = self.add_arrays(values[:, None], values[None, :]).tolist()

    # --- ponte com o galois ------------------------------------------------

    def array(self, values: object) -> galois.FieldArray:
        return self.gf(np.array(values, dtype=np.int64))

    @staticmethod
    def ints(values: object) -> np.ndarray:
        return np.asarray(np.asarray(values).view(np.ndarray), dtype=np.int64)

    # --- identidade ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.q})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus or ())})"

    # --- conversao -------------------------------------------------------

    def coerce(self, x: FieldElement | int) -> int:
        """Aceita FieldElement deste corpo ou inteiro canonico; devolve a codificacao."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldError(f"Elemento de {x.field!r} usado em {self!r}")
            return x.value
        try:
            v = int(x)
        except (TypeError, ValueError) as exc:
            raise FieldError(f"Elemento invalido: {x!r}") from exc
        if not 0 <= v < self.q:
            raise FieldError(f"Elemento fora do corpo GF({self.q}): {v}")
        return v

    def coerce_all(self, xs: Sequence[FieldElement | int]) -> list[int]:
        return [self.coerce(x) for x in xs]

    def element(self, x: FieldElement | int) -> FieldElement:
        return FieldElement(self, self.coerce(x))

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, v) for v in range(self.q)]

    def digits(self, v: int) -> list[int]:
        """Coeficientes c0..c_{m-1} do elemento."""
        return [int(c) for c in self.gf(self.coerce(v)).vector()[::-1]]

    def label(self, v: int) -> str:
        """Rotulo em potencia do primitivo canonico: '0', 'g^0', 'g^5'..."""
        if v == 0:
            return "0"
        return f"g^{self._log[v]}"

    def describe(self, v: int) -> str:
        return f"{v} ({self.label(v)})"

    # --- escalares (inteiros canonicos) -----------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        if self._add is not None:
            return self._add[a][b]
        return int(self.gf(a) + self.gf(b))

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldZeroDivisionError("Inversao de zero")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise FieldZeroDivisionError("Divisao por zero")
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise FieldZeroDivisionError("Potencia negativa de zero")
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def power_of_primitive(self, k: int) -> int:
        return self._exp[k % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise FieldZeroDivisionError("Logaritmo de zero")
        return self._log[a]

    def sum(self, values: Sequence[int]) -> int:
        acc = 0
        for v in values:
            acc = self.add(acc, v)
        return acc

    def prod(self, values: Sequence[int]) -> int:
        acc = 1
        for v in values:
            acc = self.mul(acc, v)
        return acc

    # --- vetorizado --------------------------------------------------------

    def add_arrays(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.ints(self.array(a) + self.array(b))

    def neg_arrays(self, a: np.ndarray) -> np.ndarray:
        return self.ints(-self.array(a))

    def sub_arrays(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.ints(self.array(a) - self.array(b))

    def mul_arrays(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.ints(self.array(a) * self.array(b))

    def matmul_arrays(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if 0 in a.shape or 0 in b.shape:
            return np.zeros((*a.shape[:-1], b.shape[-1]), dtype=np.int64)
        return self.ints(self.array(a) @ self.array(b))


@dataclass(frozen=True, slots=True)
class FieldElement:
    field: FieldSpec
    value: int

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.field.q:
            raise FieldError(f"Elemento fora do corpo GF({self.field.q}): {self.value}")

    def _other(self, other: FieldElement | int) -> int:
        return self.field.coerce(other)

    def __add__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    def __sub__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __mul__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    def __truediv__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.field, self.field.pow(self.value, int(e)))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return self.field.label(self.value)

    def __repr__(self) -> str:
        return f"FieldElement({self.value}, {self.field.label(self.value)}, q={self.field.q})"


def element_arith(
    a: FieldElement, b: FieldElement | None, op: ArithOp, e: int | None = None
) -> FieldElement:
    """Despacha uma operacao de corpo pelo nome."""
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    if op == "pow":
        if e is None:
            raise FieldError("pow exige expoente")
        return a**e
    if b is None:
        raise FieldError(f"Operacao '{op}' exige dois operandos")
    if a.field != b.field:
        raise FieldError(f"Corpos distintos: {a.field!r} e {b.field!r}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise FieldError(f"Operacao desconhecida: {op}")


@lru_cache(maxsize=64)
def _build_field(p: int, m: int, modulus: tuple[int, ...] | None) -> FieldSpec:
    spec = FieldSpec(p, m, modulus)
    logger.info(
        "Corpo GF(%d) montado (modulo=%s, primitivo=%d)", spec.q, modulus, spec.primitive
    )
    return spec


def make_field(
    p: int,
    m: int = 1,
    modulus_override: Sequence[int] | None = None,
    bound: int | None = None,
) -> FieldSpec:
    """Devolve GF(p^m) canonico (ou com o modulo informado, se irredutivel)."""
    if not is_prime(p):
        raise FieldError(f"Caracteristica nao e primo: {p}")
    if m < 1:
        raise FieldError(f"Grau de extensao invalido: {m}")
    limit = field_bound() if bound is None else bound
    if p**m > limit:
        raise FieldError(f"GF({p}^{m}) excede o limite de tabelas ({limit})")

    modulus: tuple[int, ...] | None
    if modulus_override is not None and m == 1:
        raise FieldError(f"Corpo primo GF({p}) nao aceita modulo: {list(modulus_override)}")
    if m == 1:
        modulus = None
    elif modulus_override is not None:
        coeffs = [int(c) % p for c in modulus_override]
        if len(coeffs) != m + 1 or coeffs[-1] != 1:
            raise FieldError(f"Modulo deve ser monico de grau {m}: {list(modulus_override)}")
        if not is_irreducible(coeffs, p):
            raise FieldError(f"Modulo redutivel sobre GF({p}): {coeffs}")
        modulus = tuple(coeffs)
    else:
        modulus = smallest_irreducible(p, m)
    return _build_field(p, m, modulus)


def field_from_order(q: int, bound: int | None = None) -> FieldSpec:
    p, m = prime_power(q)
    return make_field(p, m, bound=bound)


def primitive_elements(f: FieldSpec) -> list[FieldElement]:
    """Todos os elementos de ordem q-1, em ordem crescente de codificacao."""
    order = f.q - 1
    values = sorted(f.power_of_primitive(k) for k in range(order) if math.gcd(k, order) == 1)
    return [FieldElement(f, v) for v in values]


def parse_element(f: FieldSpec, text: str) -> int:
    """Le '5', 'g', 'g^3' ou 'g^-1' (potencia do primitivo canonico)."""
    raw = text.strip()
    match = _POWER_RE.match(raw)
    if match:
        exp = match.group("exp")
        return f.power_of_primitive(int(exp) if exp is not None else 1)
    try:
        value = int(raw)
    except ValueError as exc:
        raise FieldError(f"Elemento invalido: '{text}'") from exc
    return f.coerce(value)


def parse_elements(f: FieldSpec, text: str) -> list[int]:
    return [parse_element(f, tok) for tok in text.split(",") if tok.strip()]


def field_to_dict(f: FieldSpec) -> dict[str, object]:
    return {
        "p": f.p,
        "m": f.m,
        "q": f.q,
        "modulus": None if f.modulus is None else list(f.modulus),
        "primitive": f.primitive,
    }


def field_from_dict(data: dict[str, object], bound: int | None = None) -> FieldSpec:
    if not isinstance(data, dict) or "p" not in data:
        raise FieldError("Corpo invalido: esperado objeto com 'p' (e opcionalmente 'm', 'modulus')")
    raw_modulus = data.get("modulus")
    try:
        p = int(data["p"])  # type: ignore[arg-type]
        m = int(data.get("m", 1))  # type: ignore[arg-type]
        q = int(data["q"]) if "q" in data else None  # type: ignore[arg-type]
        if raw_modulus is None:
            modulus = None
        elif isinstance(raw_modulus, list):
            modulus = [int(c) for c in raw_modulus]
        else:
            modulus = list(parse_modulus(str(raw_modulus)))
    except FieldError:
        raise
    except (TypeError, ValueError) as exc:
        raise FieldError(f"Corpo invalido: {data!r}") from exc
    field = make_field(p, m, modulus_override=modulus, bound=bound)
    if q is not None and q != field.q:
        raise FieldError(f"Tamanho de corpo inconsistente: q={q} vs GF({field.q})")
    return field
