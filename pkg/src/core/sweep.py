"""Execucao paralela de varreduras com ordem de saida deterministica."""

from __future__ import annotations

import concurrent.futures
import logging
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import TypeVar

from ..infra.cancel_token import CancelToken, SweepCancelled
from .construct import ConstructionParams
from .gf import FieldSpec

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def all_triples(field: FieldSpec) -> list[tuple[int, int, int]]:
    """(delta, tau, pi) em ordem lexicografica."""
    return list(product(range(field.q), repeat=3))


def parallel_map(
    fn: Callable[[T], R],
    items: Iterable[T],
    workers: int = 1,
    token: CancelToken | None = None,
) -> list[R]:
    """Aplica fn a cada item; o resultado segue a ordem de entrada."""
    token = token or CancelToken()
    token.raise_if_cancelled()
    batch: Sequence[T] = list(items)

    def task(item: T) -> R:
        token.raise_if_cancelled()
        return fn(item)

    if workers <= 1 or len(batch) <= 1:
        return [task(item) for item in batch]

    with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="sweep") as pool:
        def stop() -> None:
            pool.shutdown(wait=False, cancel_futures=True)

        token.register_cancel_callback(stop)
        try:
            return list(pool.map(task, batch))
        except concurrent.futures.CancelledError as exc:
            raise SweepCancelled("Varredura cancelada") from exc
        finally:
            token.unregister_cancel_callback(stop)


def sweep_triples(
    base: ConstructionParams,
    evaluate: Callable[[ConstructionParams], R],
    workers: int = 1,
    token: CancelToken | None = None,
) -> list[R]:
    triples = all_triples(base.field)
    logger.info(
        "Varredura de %d triplas sobre GF(%d), n=%d, k=%d, workers=%d",
        len(triples),
        base.field.q,
        base.n,
        base.k,
        workers,
    )
    return parallel_map(lambda t: evaluate(base.with_triple(*t)), triples, workers, token)
