from __future__ import annotations

import pytest

from oracles import slow
from src.core.construct import ConstructionParams, c2_generator, grs
from src.core.errors import ParameterError
from src.core.extendable import (
    alpha_subsets,
    augment_identity,
    sweep_extendable,
    theorem2_reduction,
    theorem5_verdict,
)
from src.core.gf import make_field
from src.core.models import Extendability


def test_gf8_sem_zero_e_otimo() -> None:
    report = theorem5_verdict(make_field(2, 3), range(1, 8))
    assert report.verdict is Extendability.OPTIMAL
    assert report.measured_dual_distance == 4
    assert report.zero_pair is None


def test_gf5_par_simetrico_e_quase() -> None:
    report = theorem5_verdict(make_field(5), (1, 2, 3, 4))
    assert report.verdict is Extendability.ALMOST
    assert report.measured_dual_distance == 3
    assert report.zero_pair == (1, 4)
    assert report.to_dict()["conditions"] == {"all_nonzero": True, "no_zero_pair_sum": False}


def test_zero_em_alpha_nao_estende() -> None:
    report = theorem5_verdict(make_field(5), (0, 1, 2, 3))
    assert report.verdict is Extendability.NEITHER
    assert report.measured_dual_distance == 2


def test_gf11_otimo() -> None:
    report = theorem5_verdict(make_field(11), (1, 2, 3, 4, 5))
    assert report.verdict is Extendability.OPTIMAL
    assert report.measured_dual_distance == report.predicted_dual_distance == 4


def test_exige_quatro_pontos_distintos() -> None:
    with pytest.raises(ParameterError):
        theorem5_verdict(make_field(7), (1, 2, 4))
    with pytest.raises(ParameterError):
        theorem5_verdict(make_field(7), (1, 2, 2, 4))


@pytest.mark.parametrize(("p", "m"), [(7, 1), (2, 3), (3, 2)])
def test_varredura_previsto_igual_medido(p: int, m: int) -> None:
    f = make_field(p, m)
    reports = sweep_extendable(f, 4, 5, include_zero=True, workers=2)
    assert len(reports) == len(alpha_subsets(f, 4, 5, include_zero=True))
    for r in reports:
        assert r.measured_dual_distance == r.predicted_dual_distance, r.alpha
        assert theorem2_reduction(f, r.alpha) == (r.verdict is Extendability.OPTIMAL)


def test_gerador_aumentado_e_c2_com_colunas_invertidas() -> None:
    f = make_field(7)
    alpha = (1, 2, 4, 5)
    n = len(alpha)
    augmented = augment_identity(grs(f, alpha, None, 3)).generator
    c2 = c2_generator(ConstructionParams(f, alpha, 3)).generator
    assert augmented == c2.select_columns([*range(n), n + 2, n + 1, n])


def test_alpha_subsets_padrao() -> None:
    f = make_field(5)
    subsets = alpha_subsets(f)
    assert subsets == [(1, 2, 3, 4)]
    assert len(alpha_subsets(f, include_zero=True)) == 5 + 1


@slow
@pytest.mark.parametrize("q", [5, 7, 8, 9])
def test_varredura_completa_sem_zero(q: int) -> None:
    from src.core.gf import field_from_order

    f = field_from_order(q)
    for r in sweep_extendable(f, 4, min(q - 1, 6)):
        assert r.all_nonzero
        assert r.measured_dual_distance == r.predicted_dual_distance, r.alpha
