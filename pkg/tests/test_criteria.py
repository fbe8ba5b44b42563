from __future__ import annotations

from itertools import combinations, product

import pytest

from oracles import slow
from src.core.code import classify
from src.core.construct import ConstructionParams, c2_generator, roth_lempel
from src.core.criteria import (
    corollary_nmds,
    is_ntd_set,
    is_ntd_set_mitm,
    mds_bruteforce,
    roth_lempel_mds,
    singular_minor,
    theorem2_mds,
    theorem_c2_amds,
    theorem_dual_amds,
)
from src.core.errors import CorollaryNotApplicable, ParameterError
from src.core.gf import make_field
from src.core.models import SearchTarget, Verdict
from src.core.search import search_triples


def _mk_params(q: int, alpha: tuple[int, ...], k: int, triple=(0, 0, 0)) -> ConstructionParams:
    p, m = {4: (2, 2), 8: (2, 3), 9: (3, 2)}.get(q, (q, 1))
    return ConstructionParams(make_field(p, m), alpha, k, *triple)


def _all(base: ConstructionParams):
    for triple in product(range(base.field.q), repeat=3):
        yield base.with_triple(*triple)


def test_ntd_set_com_testemunha() -> None:
    f = make_field(7)
    check = is_ntd_set(f, (1, 2, 4), 2, 3)
    assert not check
    assert check.witness == (1, 2)
    assert is_ntd_set(f, (1, 2, 4), 2, 0)
    with pytest.raises(ParameterError):
        is_ntd_set(f, (1, 2, 4), 4, 0)


@pytest.mark.parametrize(("p", "m"), [(7, 1), (2, 3), (3, 2)])
def test_mitm_concorda_com_busca_direta(p: int, m: int) -> None:
    f = make_field(p, m)
    for S in [(0, 1, 2, 3, 5), (1, 2, 4, 6), tuple(range(1, f.q))]:
        for t in range(1, len(S) + 1):
            for delta in range(f.q):
                assert is_ntd_set_mitm(f, S, t, delta) == is_ntd_set(f, S, t, delta).ok


def test_roth_lempel_mds_bate_com_menores() -> None:
    f = make_field(7)
    for alpha in [(1, 2, 4), (0, 1, 3, 5), (2, 3, 5, 6)]:
        for delta in range(7):
            expected = mds_bruteforce(roth_lempel(f, alpha, delta, 3))
            assert roth_lempel_mds(f, alpha, delta, 3) == expected


def test_exemplo_gf5_mds_6_3_4() -> None:
    params = _mk_params(5, (1, 2, 3), 3, (2, 0, 1))
    report = theorem2_mds(params)
    assert report.overall
    assert report.failed() == []
    assert report.notes
    assert classify(c2_generator(params)).params == "[6,3,4]"


def test_testemunha_da_primeira_condicao_violada() -> None:
    report = theorem2_mds(_mk_params(5, (1, 2, 3), 3, (3, 0, 1)))
    assert not report.conditions["cond1"]
    assert report.witnesses["cond1"] == (1, 2)
    assert "cond1" in report.failed()


def test_exemplo_gf7_tem_28_triplas_mds() -> None:
    report = search_triples(make_field(7), (2, 3, 5), 3, SearchTarget.MDS)
    triples = [t.triple for t in report.matches]
    assert len(triples) == 28
    assert (3, 0, 2) in triples
    assert all(t.theorem2 for t in report.matches)


@pytest.mark.parametrize(
    ("alpha", "triple"),
    [((0, 1, 2), (0, 3, 2)), ((0, 1, 3), (0, 2, 3)), ((0, 2, 3), (0, 1, 1)), ((1, 2, 3), (0, 0, 0))],
)
def test_exemplo_gf4_tripla_unica(alpha: tuple[int, ...], triple: tuple[int, int, int]) -> None:
    report = search_triples(make_field(2, 2), alpha, 3, SearchTarget.MDS)
    assert [t.triple for t in report.matches] == [triple]


@pytest.mark.parametrize(
    ("q", "alpha", "k"),
    [
        (4, (0, 1, 2, 3), 3),
        (5, (1, 2, 3), 3),
        (5, (0, 1, 2, 4), 4),
        (7, (1, 2, 4, 6), 3),
        (8, (0, 1, 2, 3), 3),
        (9, (0, 1, 3, 4), 3),
    ],
)
def test_teorema2_igual_ao_oraculo_de_menores(q: int, alpha: tuple[int, ...], k: int) -> None:
    for params in _all(_mk_params(q, alpha, k)):
        report = theorem2_mds(params)
        assert report.overall == mds_bruteforce(c2_generator(params)), params.triple


def _check_amds_forms(params: ConstructionParams) -> None:
    result = classify(c2_generator(params))
    n_total = params.n + 3
    dual_report = theorem_dual_amds(params)
    c2_report = theorem_c2_amds(params)
    assert dual_report.exact == (result.d_dual == params.k)
    assert c2_report.exact == (result.d == n_total - params.k)
    if dual_report.overall:
        assert dual_report.exact
    if c2_report.overall and params.field.p == 2:
        assert c2_report.exact
    if dual_report.overall != dual_report.exact:
        assert dual_report.notes


@pytest.mark.parametrize(
    ("q", "alpha"),
    [(4, (0, 1, 2)), (4, (1, 2, 3)), (5, (1, 2, 3)), (5, (0, 2, 3, 4)), (7, (2, 3, 5))],
)
def test_formas_amds_contra_classificacao(q: int, alpha: tuple[int, ...]) -> None:
    for params in _all(_mk_params(q, alpha, 3)):
        _check_amds_forms(params)


@slow
@pytest.mark.parametrize("q", [4, 5, 7])
@pytest.mark.parametrize("n", [3, 4])
def test_formas_amds_varredura_completa(q: int, n: int) -> None:
    pool = range(q)
    for alpha in combinations(pool, n):
        for params in _all(_mk_params(q, alpha, 3)):
            _check_amds_forms(params)


def test_contraexemplo_da_forma_literal_dual() -> None:
    params = _mk_params(5, (1, 2, 3), 3, (0, 1, 4))
    report = theorem_dual_amds(params)
    assert report.exact
    assert not report.overall
    assert not report.literal_matches_exact
    assert classify(c2_generator(params)).d_dual == 3


def test_corolario_nmds() -> None:
    with pytest.raises(CorollaryNotApplicable):
        corollary_nmds(_mk_params(5, (1, 2, 3), 3, (3, 0, 0)))
    with pytest.raises(CorollaryNotApplicable):
        corollary_nmds(_mk_params(5, (1, 2, 3), 3, (2, 1, 0)))
    base = _mk_params(7, (2, 3, 5), 3)
    checked = 0
    for params in _all(base):
        try:
            report = corollary_nmds(params)
        except CorollaryNotApplicable:
            continue
        checked += 1
        verdict = classify(c2_generator(params)).verdict
        assert report.overall == (verdict is Verdict.NMDS)
        assert (not report.overall) == (verdict is Verdict.MDS)
    assert checked == 16 * 7


def test_menor_singular() -> None:
    params = _mk_params(5, (1, 2, 3), 3, (3, 0, 1))
    witness = singular_minor(c2_generator(params))
    assert witness == (0, 1, 4)
    assert not mds_bruteforce(c2_generator(params))
