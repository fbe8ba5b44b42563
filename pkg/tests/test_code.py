from __future__ import annotations

import pytest

from oracles import all_codewords, brute_covering_radius, min_weight
from src.core.code import (
    LinearCode,
    classical_extension,
    classify,
    covering_radius,
    distance_by_dependency,
    distance_by_enumeration,
    distance_to_code,
    dual,
    dual_distance,
    extend_with_u,
    is_deep_hole,
    iter_codewords,
    minimum_distance,
    monomially_equivalent,
    same_code,
)
from src.core.construct import grs, roth_lempel
from src.core.errors import BudgetExceededError, CodeError, WorkbenchError
from src.core.gf import make_field
from src.core.models import Verdict

HEXACODE = [[1, 1, 1, 0, 0, 1], [1, 2, 3, 0, 1, 0], [1, 3, 2, 1, 0, 0]]


def _mk_code(q: int, rows: list[list[int]]) -> LinearCode:
    p = {4: 2, 8: 2, 9: 3}.get(q, q)
    m = {4: 2, 8: 3, 9: 2}.get(q, 1)
    return LinearCode.from_rows(make_field(p, m), rows)


def test_grs_completo_e_mds() -> None:
    f = make_field(7)
    result = classify(grs(f, range(7), None, 3))
    assert result.verdict is Verdict.MDS
    assert result.params == "[7,3,5]"
    assert result.d_dual == 4
    assert result.singleton_defect == 0


def test_dual_anula_gerador_e_e_involucao() -> None:
    C = grs(make_field(3, 2), [0, 1, 2, 3, 4, 5], [1, 2, 4, 1, 8, 7], 3)
    D = dual(C)
    assert D.k == C.n - C.k
    assert (C.generator @ D.generator.transpose()).is_zero()
    assert same_code(dual(D), C)


def test_gerador_com_posto_deficiente_usa_forma_reduzida() -> None:
    C = _mk_code(5, [[1, 2, 3], [2, 4, 1], [0, 1, 1]])
    assert C.k == 2
    assert same_code(C, _mk_code(5, [[1, 2, 3], [0, 1, 1]]))


@pytest.mark.parametrize("q", [4, 5, 8])
def test_distancias_concordam(q: int) -> None:
    f = make_field(*{4: (2, 2), 5: (5, 1), 8: (2, 3)}[q])
    codes = [
        grs(f, range(q), None, 2),
        roth_lempel(f, range(1, 4), 1, 3),
        roth_lempel(f, range(q), 0, 3),
    ]
    for C in codes:
        expected = min_weight(C)
        assert distance_by_enumeration(C) == expected
        assert distance_by_dependency(C) == expected
        assert minimum_distance(C, enum_limit=1) == expected
        assert dual_distance(C) == minimum_distance(dual(C))


def test_iter_codewords_conta_todas_as_palavras() -> None:
    C = grs(make_field(5), [1, 2, 3, 4], None, 2)
    assert sum(block.shape[0] for block in iter_codewords(C)) == 24
    assert sum(block.shape[0] for block in iter_codewords(C, include_zero=True)) == 25


def test_classify_recusa_k_extremos() -> None:
    f = make_field(5)
    with pytest.raises(CodeError):
        classify(grs(f, [1, 2, 3], None, 3))


def test_classify_nmds_e_amds() -> None:
    f = make_field(5)
    # RL com delta = 1 + 2: contem um [5,3,2]
    result = classify(roth_lempel(f, [1, 2, 3], 3, 3))
    assert result.d == 2
    assert result.verdict in (Verdict.AMDS, Verdict.NMDS)
    assert (result.verdict is Verdict.NMDS) == (result.d_dual == 3)


def test_extensao_classica_de_rs() -> None:
    f = make_field(5)
    C = classical_extension(grs(f, [1, 2, 3, 4], None, 2))
    assert C.generator.to_lists()[0][-1] == 1
    assert C.generator.to_lists()[1][-1] == 0
    result = classify(C)
    assert result.verdict is Verdict.MDS
    assert result.d == 4


def test_extend_with_u_valida_vetor() -> None:
    C = grs(make_field(5), [1, 2, 3], None, 2)
    with pytest.raises(CodeError):
        extend_with_u(C, [0, 0, 0])
    with pytest.raises(CodeError):
        extend_with_u(C, [1, 2])


def test_raio_de_cobertura_de_rs() -> None:
    C = grs(make_field(5), range(5), None, 2)
    assert covering_radius(C) == 3
    assert brute_covering_radius(C) == 3


def test_raio_de_cobertura_bate_com_forca_bruta() -> None:
    f = make_field(2, 2)
    for delta in range(4):
        C = dual(roth_lempel(f, [0, 1, 2], delta, 3))
        assert covering_radius(C) == brute_covering_radius(C)


def test_distancia_ao_codigo_por_enumeracao_e_por_sindrome() -> None:
    f = make_field(5)
    v = [1, 0, 3, 0, 2]
    by_enum = distance_to_code(v, grs(f, range(5), None, 2))
    by_table = distance_to_code(v, grs(f, range(5), None, 2), enum_limit=1)
    words = all_codewords(grs(f, range(5), None, 2))
    expected = int(min((w != v).sum() for w in words))
    assert by_enum == by_table == expected


def test_buraco_profundo() -> None:
    C = grs(make_field(5), range(5), None, 2)
    # x^2 avaliado nos pontos: polinomio de grau k, buraco profundo classico
    assert is_deep_hole([0, 1, 4, 4, 1], C)
    assert not is_deep_hole([0, 1, 2, 3, 4], C)


def test_orcamento_de_cobertura() -> None:
    C = grs(make_field(5), range(5), None, 2)
    with pytest.raises(BudgetExceededError):
        covering_radius(C, budget=10)


def test_hexacodigo_equivalente_a_roth_lempel() -> None:
    f = make_field(2, 2)
    hexa = LinearCode.from_rows(f, HEXACODE)
    assert classify(hexa).params == "[6,3,4]"
    assert monomially_equivalent(hexa, roth_lempel(f, [0, 1, 2, 3], 0, 3))
    assert not monomially_equivalent(hexa, roth_lempel(f, [0, 1, 2, 3], 1, 3))


def test_equivalencia_respeita_limite() -> None:
    f = make_field(3, 2)
    C = grs(f, range(9), None, 3)
    with pytest.raises(BudgetExceededError):
        monomially_equivalent(C, C)


def test_limites_lidos_do_ambiente_na_chamada(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("RLWB_BUDGET", "10")
    with pytest.raises(BudgetExceededError):
        covering_radius(grs(make_field(5), range(5), None, 2))
    monkeypatch.setenv("RLWB_ENUM_LIMIT", "1")
    C = grs(make_field(7), range(7), None, 3)
    assert minimum_distance(C) == 5
    monkeypatch.setenv("RLWB_BUDGET", "dez")
    with pytest.raises(WorkbenchError):
        covering_radius(grs(make_field(5), range(5), None, 2))
