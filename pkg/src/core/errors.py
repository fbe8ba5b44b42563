from __future__ import annotations


class WorkbenchError(ValueError):
    """Erro base de entrada invalida na bancada."""


class FieldError(WorkbenchError):
    """Corpo mal definido ou operacao entre corpos distintos."""


class FieldZeroDivisionError(FieldError, ZeroDivisionError):
    """Divisao ou inversao por zero em GF(q)."""


class MatrixError(WorkbenchError):
    """Dimensoes incompativeis, pontos repetidos ou expoentes fora de ordem."""


class CodeError(WorkbenchError):
    """Operacao invalida sobre um codigo linear."""


class ParameterError(WorkbenchError):
    """Parametros de construcao (alpha, k, delta, tau, pi) invalidos."""


class CorollaryNotApplicable(WorkbenchError):
    """A hipotese do corolario NMDS nao vale para estes parametros."""


class BudgetExceededError(WorkbenchError):
    """Busca exaustiva recusada por exceder o orcamento configurado."""
