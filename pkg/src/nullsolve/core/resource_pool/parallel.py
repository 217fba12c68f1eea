"""Utilities for parallel execution of search partitions."""
import asyncio
import logging
from concurrent.futures import Future
from typing import Any, Awaitable, Callable, List, Optional, Sequence, Tuple, TypeVar, Union

from nullsolve.core.resource_pool.manager import get_resource_pool_manager

logger = logging.getLogger(__name__)

Task = Union[Awaitable[Any], Tuple[Callable[..., Any], Tuple, dict]]
C = TypeVar("C")
R = TypeVar("R")


def cpu_bound(func: Callable[..., R]) -> Callable[..., R]:
    """Mark *func* so execute_parallel sends it to the process pool."""
    func._cpu_bound = True  # type: ignore[attr-defined]
    return func


async def execute_parallel(*tasks: Task) -> List[Any]:
    """
    Execute multiple tasks in parallel.

    Args:
        *tasks: Tasks to execute.
            - Awaitable: Will be awaited directly
            - (func, args, kwargs): Will be executed with the given arguments

    Returns:
        List of results in the order of the tasks
    """
    aws = []
    for task in tasks:
        if isinstance(task, tuple) and len(task) == 3 and callable(task[0]):
            func, args, kwargs = task
            aws.append(_execute_func(func, args, kwargs))
        else:
            aws.append(task)

    results = []
    for result in await asyncio.gather(*aws, return_exceptions=True):
        if isinstance(result, BaseException):
            raise result
        results.append(result)
    return results


async def _execute_func(func: Callable[..., Any], args: Tuple, kwargs: dict) -> Any:
    """
    Execute a function with the given arguments.

    Functions marked with @cpu_bound (or partials of them) go to the process
    pool, everything else to the thread pool.
    """
    target = getattr(func, "func", func)
    if getattr(target, "_cpu_bound", False):
        pool = get_resource_pool_manager().get_process_pool()
    else:
        pool = get_resource_pool_manager().get_thread_pool()

    future = pool.submit(func, *args, **kwargs)
    return await _future_to_awaitable(future)


async def _future_to_awaitable(future: Future) -> Any:
    """Convert a concurrent.futures.Future to an awaitable."""
    loop = asyncio.get_running_loop()
    done_event = asyncio.Event()

    def _on_future_done(fut):
        loop.call_soon_threadsafe(done_event.set)

    future.add_done_callback(_on_future_done)
    await done_event.wait()
    return future.result()


def first_hit(func: Callable[[C], Optional[R]], chunks: Sequence[C]) -> Optional[R]:
    """
    Return func's result on the earliest chunk that yields one.

    Chunks must be ordered so that every result from an earlier chunk beats
    every result from a later one. With more than one worker, chunks run in
    waves of ``worker_count``; the minimum of the first wave containing a hit
    is returned, so the answer never depends on the worker count.
    """
    workers = get_resource_pool_manager().worker_count
    if workers <= 1 or len(chunks) <= 1:
        for chunk in chunks:
            result = func(chunk)
            if result is not None:
                return result
        return None

    logger.debug(f"Searching {len(chunks)} partitions on {workers} workers")
    for start in range(0, len(chunks), workers):
        wave = chunks[start:start + workers]
        results = asyncio.run(execute_parallel(*[(func, (chunk,), {}) for chunk in wave]))
        hits = [r for r in results if r is not None]
        if hits:
            return min(hits)  # type: ignore[type-var]
    return None

