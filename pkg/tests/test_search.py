from __future__ import annotations

import pytest

from src.core.fixtures import EXAMPLE4_CONFIGS, example1, example4
from src.core.gf import make_field
from src.core.models import SearchTarget, Verdict
from src.core.search import search_triples
from src.core.sweep import all_triples, parallel_map
from src.infra.cancel_token import CancelToken, SweepCancelled


def test_busca_mds_gf5() -> None:
    report = search_triples(make_field(5), (1, 2, 3), 3, SearchTarget.MDS)
    assert len(report.triples) == 125
    assert sum(report.counts.values()) == 125
    assert (2, 0, 1) in [t.triple for t in report.matches]
    assert [t.triple for t in report.matches] == [t.triple for t in report.triples if t.theorem2]
    assert report.warnings


def test_alvos_de_busca() -> None:
    report = search_triples(make_field(2, 2), (0, 1, 2), 3, SearchTarget.DUAL_AMDS)
    assert report.matches == [t for t in report.triples if t.d_dual == 3]
    for t in report.triples:
        assert t.dual_amds_exact == (t.d_dual == 3)
        assert t.c2_amds_exact == (t.d == 3)
        if t.nmds is not None:
            assert t.nmds == (t.verdict is Verdict.NMDS)
        else:
            assert not (t.cond1 and t.cond2)


def test_busca_sem_alvo_devolve_tudo() -> None:
    report = search_triples(make_field(2, 2), (1, 2, 3), 3)
    assert len(report.matches) == 64
    data = report.to_dict()
    assert "elapsed_seconds" not in data
    assert data["params"]["target"] is None
    assert "elapsed_seconds" in report.to_dict(include_timing=True)


def test_busca_paralela_deterministica() -> None:
    f = make_field(5)
    serial = search_triples(f, (1, 2, 4), 3, workers=1)
    parallel = search_triples(f, (1, 2, 4), 3, workers=4)
    assert [t.to_dict() for t in serial.triples] == [t.to_dict() for t in parallel.triples]


def test_cancelamento() -> None:
    token = CancelToken()
    token.cancel()
    with pytest.raises(SweepCancelled):
        search_triples(make_field(5), (1, 2, 3), 3, token=token)
    with pytest.raises(SweepCancelled):
        parallel_map(lambda x: x, range(10), workers=3, token=token)


def test_parallel_map_preserva_ordem() -> None:
    assert parallel_map(lambda x: x * x, range(50), workers=4) == [x * x for x in range(50)]
    assert all_triples(make_field(2, 2))[:2] == [(0, 0, 0), (0, 0, 1)]


def test_callback_de_cancelamento_tardio_roda_na_hora() -> None:
    token = CancelToken()
    calls: list[int] = []
    token.register_cancel_callback(lambda: calls.append(1))
    token.cancel()
    token.cancel()
    token.register_cancel_callback(lambda: calls.append(2))
    assert calls == [1, 2]
    assert token.is_cancelled()


def test_exemplo_gf4_via_fixture() -> None:
    rows = {tuple(r["alpha"]): r for r in example1()}
    assert rows[(1, 2, 3)]["mds_triples"] == [[0, 0, 0]]
    assert rows[(0, 1, 2)]["params"] == ["[6,3,4]"]


def test_exemplos_gf8_reproduzidos_pelo_primitivo_canonico() -> None:
    results = example4()
    assert len(results) == len(EXAMPLE4_CONFIGS)
    for row in results:
        assert 2 in row["primitive_hits"]


def test_parallel_map_remove_callback_ao_terminar() -> None:
    token = CancelToken()
    for _ in range(3):
        assert parallel_map(lambda x: x + 1, range(20), workers=2, token=token) == list(range(1, 21))
    assert token.pending_callbacks == 0
    search_triples(make_field(2, 2), (0, 1, 2), 3, workers=2, token=token)
    assert token.pending_callbacks == 0


def test_registrar_e_remover_callback() -> None:
    token = CancelToken()
    calls: list[int] = []

    def cb() -> None:
        calls.append(1)

    token.register_cancel_callback(cb)
    assert token.pending_callbacks == 1
    token.unregister_cancel_callback(cb)
    token.unregister_cancel_callback(cb)
    assert token.pending_callbacks == 0
    token.cancel()
    assert calls == []
