from __future__ import annotations

from itertools import product

import pytest

from oracles import slow
from src.core.code import extend_with_u
from src.core.construct import (
    ConstructionParams,
    c2_generator,
    c2_matrix,
    c2_parity,
    grs,
    moment_sums,
    roth_lempel,
    theorem1_u,
)
from src.core.criteria import e1, h2
from src.core.errors import ParameterError
from src.core.gf import make_field
from src.core.matrix import rank


def _mk_params(q: int, alpha: tuple[int, ...], k: int, triple=(0, 0, 0)) -> ConstructionParams:
    p, m = {4: (2, 2), 8: (2, 3), 9: (3, 2)}.get(q, (q, 1))
    return ConstructionParams(make_field(p, m), alpha, k, *triple)


def test_parametros_validados() -> None:
    f = make_field(5)
    with pytest.raises(ParameterError):
        ConstructionParams(f, (1, 1, 2), 3)
    with pytest.raises(ParameterError):
        ConstructionParams(f, (1, 2, 3), 2)
    with pytest.raises(ParameterError):
        ConstructionParams(f, (1, 2), 3)
    with pytest.raises(ParameterError):
        ConstructionParams(f, (1, 2, 3), 3, delta=7)


def test_faixa_declarada() -> None:
    assert _mk_params(5, (1, 2, 3), 3).out_of_stated_range
    assert _mk_params(5, (1, 2, 3), 3).warnings()
    assert not _mk_params(5, (1, 2, 3, 4), 3).out_of_stated_range
    assert _mk_params(5, (1, 2, 3, 4), 3).warnings() == []


def test_params_dict() -> None:
    params = _mk_params(9, (0, 1, 4, 8), 3, (2, 5, 7))
    assert ConstructionParams.from_dict(params.to_dict()) == params
    assert params.with_triple(1, 1, 1).triple == (1, 1, 1)
    assert params.triple == (2, 5, 7)


def test_colunas_de_cauda_do_c2() -> None:
    G = c2_matrix(_mk_params(5, (1, 2, 3), 3, (2, 0, 1))).to_lists()
    tail = [[row[j] for row in G] for j in (3, 4, 5)]
    assert tail == [[0, 0, 1], [0, 1, 2], [1, 0, 1]]
    assert [row[0] for row in G] == [1, 1, 1]


def test_roth_lempel_forma() -> None:
    C = roth_lempel(make_field(7), [2, 3, 5], 4, 3)
    assert C.n == 5 and C.k == 3
    G = C.generator.to_lists()
    assert [row[3] for row in G] == [0, 0, 1]
    assert [row[4] for row in G] == [0, 1, 4]
    with pytest.raises(ParameterError):
        roth_lempel(make_field(7), [2, 3], 4, 3)


def test_grs_rejeita_escala_nula() -> None:
    f = make_field(5)
    with pytest.raises(ParameterError):
        grs(f, [1, 2, 3], [1, 0, 1], 2)
    with pytest.raises(ParameterError):
        grs(f, [1, 2], None, 3)
    with pytest.raises(ParameterError):
        grs(f, [1, 1, 2], None, 2)


@pytest.mark.parametrize(
    ("q", "alpha", "k"),
    [(5, (1, 2, 3, 4), 3), (4, (0, 1, 2), 3), (8, (0, 1, 2, 3, 4), 4), (9, (0, 1, 3, 4), 3)],
)
def test_u_estende_roth_lempel_em_c2(q: int, alpha: tuple[int, ...], k: int) -> None:
    base = _mk_params(q, alpha, k)
    f = base.field
    triples = list(product(range(q), repeat=3))[:: max(1, q**3 // 60)]
    for triple in triples:
        params = base.with_triple(*triple)
        rl = roth_lempel(f, params.alpha, params.delta, k)
        extended = extend_with_u(rl, theorem1_u(params))
        assert extended.generator == c2_generator(params).generator


@pytest.mark.parametrize(
    ("q", "alpha", "k"),
    [(5, (1, 2, 3), 3), (7, (1, 2, 4, 6), 3), (8, (0, 1, 2, 5, 7), 4), (9, (0, 1, 2, 4), 3)],
)
def test_paridade_explicita(q: int, alpha: tuple[int, ...], k: int) -> None:
    base = _mk_params(q, alpha, k)
    for triple in [(0, 0, 0), (1, 2, 3), (q - 1, 1, 0), (2, q - 1, q - 1)]:
        params = base.with_triple(*triple)
        H = c2_parity(params)
        G = c2_generator(params).generator
        assert H.shape == (params.n + 3 - k, params.n + 3)
        assert rank(H) == params.n + 3 - k
        assert (G @ H.transpose()).is_zero()


def test_identidade_dos_momentos() -> None:
    f = make_field(3, 2)
    alpha = [0, 1, 2, 5, 7]
    assert moment_sums(f, alpha) == (e1(f, alpha), h2(f, alpha))


def test_identidade_dos_momentos_aleatoria() -> None:
    import numpy as np

    rng = np.random.default_rng(11)
    for p, m in [(7, 1), (2, 3), (3, 2), (13, 1)]:
        f = make_field(p, m)
        for _ in range(250):
            size = int(rng.integers(2, min(f.q, 7) + 1))
            alpha = rng.choice(f.q, size=size, replace=False).tolist()
            assert moment_sums(f, alpha) == (e1(f, alpha), h2(f, alpha))


@slow
@pytest.mark.parametrize("q", [4, 5, 7])
def test_u_estende_e_paridade_na_varredura_completa(q: int) -> None:
    from itertools import combinations

    for n in (3, 4):
        for alpha in combinations(range(q), n):
            base = _mk_params(q, alpha, 3)
            f = base.field
            for triple in product(range(q), repeat=3):
                params = base.with_triple(*triple)
                rl = roth_lempel(f, params.alpha, params.delta, 3)
                G2 = c2_generator(params).generator
                assert extend_with_u(rl, theorem1_u(params)).generator == G2
                assert (G2 @ c2_parity(params).transpose()).is_zero()
