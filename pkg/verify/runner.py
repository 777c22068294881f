#!/usr/bin/env python3
"""
Property Suite Runner
---------------------
Executa o registro de propriedades sobre a enumeração, dividida em shards
contíguos do laço externo. Com jobs > 1 os shards rodam num pool de
processos; a fusão é feita na ordem dos shards, então o relatório não
depende do número de workers.
"""

import asyncio
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from concurrent.futures.process import BrokenProcessPool
from functools import partial
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from tqdm import tqdm

from bundles.errors import VerifyResourceError

from .config import EnumBounds, get_settings, triple_bounds
from .enumeration import bundle_domain
from .properties import PROPERTIES, _dominates, _quotient, _rank_condition
from .report import FailureRecord, PropertyResult, VerifyReport

logger = logging.getLogger(__name__)

SHARDS_PER_JOB = 4
SMALL_TRIPLE_RANK = 2
RESOURCE_ERRORS = (MemoryError, RecursionError, BrokenProcessPool)


def _small_triple_bounds(triples: EnumBounds) -> EnumBounds:
    rank = min(triples.max_rank, SMALL_TRIPLE_RANK)
    return triples.model_copy(
        update={"max_rank": rank, "max_abs_degree": rank * (triples.max_abs_slope or 0)}
    )


def outer_domain(domain: str, bounds: EnumBounds, triples: EnumBounds) -> Sequence:
    """Sequência sobre a qual os shards são cortados."""
    if domain == "once":
        return (bounds,)
    if domain in ("singles", "pairs"):
        return bundle_domain(bounds)
    if domain == "small_triples":
        return bundle_domain(_small_triple_bounds(triples))
    if domain in ("triples", "key_triples"):
        return bundle_domain(triples)
    raise ValueError(f"unknown property domain {domain!r}")


def domain_items(
    domain: str, bounds: EnumBounds, triples: EnumBounds, start: int, stop: int
) -> Iterator[Tuple]:
    outer = outer_domain(domain, bounds, triples)
    if domain in ("once", "singles"):
        for item in outer[start:stop]:
            yield (item,)
    elif domain == "pairs":
        for first in outer[start:stop]:
            for second in outer:
                yield first, second
    elif domain in ("small_triples", "triples"):
        for first in outer[start:stop]:
            for second in outer:
                for third in outer:
                    yield first, second, third
    else:
        for e_bundle in outer[start:stop]:
            if e_bundle.is_zero:
                continue
            for f_bundle in outer:
                if f_bundle.is_zero or not _rank_condition(e_bundle, f_bundle):
                    continue
                for q_bundle in outer:
                    yield e_bundle, f_bundle, q_bundle


def run_shard(
    name: str,
    bounds: EnumBounds,
    triples: EnumBounds,
    start: int,
    stop: int,
    failure_limit: int,
) -> PropertyResult:
    """
    Avalia uma propriedade sobre o intervalo [start, stop) do laço externo.

    Exceções de domínio levantadas por uma checagem contam como falha da
    propriedade; exaustão de recursos é propagada.
    """
    entry = PROPERTIES[name]
    applies = entry.get("applies")
    check = entry["check"]
    checked = 0
    failures: List[FailureRecord] = []
    for item in domain_items(entry["domain"], bounds, triples, start, stop):
        if applies is not None and not applies(*item):
            continue
        checked += 1
        try:
            detail = check(*item)
        except RESOURCE_ERRORS:
            raise
        except Exception as e:
            detail = f"{type(e).__name__}: {e}"
        if detail is not None and len(failures) < failure_limit:
            failures.append(FailureRecord(inputs=[str(x) for x in item], detail=detail))
    return PropertyResult(checked=checked, failures=failures)


def shard_ranges(length: int, jobs: int) -> List[Tuple[int, int]]:
    count = max(1, min(length, jobs * SHARDS_PER_JOB)) if jobs > 1 else 1
    size, extra = divmod(length, count)
    ranges, start = [], 0
    for index in range(count):
        stop = start + size + (1 if index < extra else 0)
        ranges.append((start, stop))
        start = stop
    return ranges


async def run_property_async(
    name: str,
    bounds: EnumBounds,
    triples: EnumBounds,
    jobs: int,
    failure_limit: int,
    executor: Optional[ProcessPoolExecutor],
    semaphore: asyncio.Semaphore,
    progress: bool = False,
) -> PropertyResult:
    """Roda todos os shards de uma propriedade e funde na ordem dos shards."""
    entry = PROPERTIES[name]
    ranges = shard_ranges(len(outer_domain(entry["domain"], bounds, triples)), jobs)
    loop = asyncio.get_running_loop()
    bar = tqdm(total=len(ranges), desc=name, disable=not progress, file=sys.stderr, leave=False)

    async def one(start: int, stop: int) -> PropertyResult:
        async with semaphore:
            job = partial(run_shard, name, bounds, triples, start, stop, failure_limit)
            if executor is None:
                result = job()
            else:
                result = await loop.run_in_executor(executor, job)
            bar.update(1)
            return result

    try:
        results = await asyncio.gather(*(one(start, stop) for start, stop in ranges))
    finally:
        bar.close()
    merged = PropertyResult()
    for result in results:
        merged = merged.merge(result)
    merged = merged.capped(failure_limit)
    if merged.failures:
        logger.warning("property %s failed on %d instance(s)", name, len(merged.failures))
    else:
        logger.info("property %s passed on %d instance(s)", name, merged.checked)
    return merged


async def run_property_suite_async(
    bounds: EnumBounds,
    jobs: int = 1,
    triples: Optional[EnumBounds] = None,
    properties: Optional[Iterable[str]] = None,
    failure_limit: Optional[int] = None,
    progress: bool = False,
) -> VerifyReport:
    """
    Executa a suíte completa (ou as propriedades pedidas) de forma assíncrona.

    Args:
        bounds: Limites da enumeração de fibrados e pares
        jobs: Número de processos; 1 roda tudo no processo atual
        triples: Domínio inteiro das triplas (padrão vindo das configurações)
        properties: Subconjunto de nomes do registro
        failure_limit: Contraexemplos guardados por propriedade
        progress: Mostra barras tqdm no stderr

    Raises:
        VerifyResourceError: Memória, recursão ou pool de processos esgotados
        KeyError: Nome de propriedade desconhecido
    """
    settings = get_settings()
    triples = triples or triple_bounds()
    limit = failure_limit if failure_limit is not None else settings.failure_limit
    names = list(properties) if properties is not None else list(PROPERTIES)
    for name in names:
        if name not in PROPERTIES:
            raise KeyError(f"unknown property {name!r}")

    jobs = max(1, jobs)
    semaphore = asyncio.Semaphore(jobs)
    executor = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    logger.info("running %d properties with %d job(s) on %s", len(names), jobs, bounds)
    report = VerifyReport()
    try:
        for name in names:
            report.properties[name] = await run_property_async(
                name, bounds, triples, jobs, limit, executor, semaphore, progress
            )
    except RESOURCE_ERRORS as e:
        logger.error("💥 verification ran out of resources: %s", e, exc_info=True)
        raise VerifyResourceError(f"{type(e).__name__}: {e}") from e
    finally:
        if executor is not None:
            executor.shutdown(cancel_futures=True)
        _quotient.cache_clear()
        _rank_condition.cache_clear()
        _dominates.cache_clear()
    return report


def run_property_suite(
    bounds: EnumBounds,
    jobs: int = 1,
    triples: Optional[EnumBounds] = None,
    properties: Optional[Iterable[str]] = None,
    failure_limit: Optional[int] = None,
    progress: bool = False,
) -> VerifyReport:
    """Wrapper síncrono de run_property_suite_async."""
    return asyncio.run(
        run_property_suite_async(bounds, jobs, triples, properties, failure_limit, progress)
    )
