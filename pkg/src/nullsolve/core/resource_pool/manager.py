"""
Resource-pool manager for exhaustive-search workers (Python 3.11+).

• ProcessPoolExecutor  – resizable at runtime, for CPU-heavy partitions.
• ThreadPoolExecutor   – resizable at runtime, for light fan-out.
• Public helpers:
      - get_process_pool()
      - get_thread_pool()
      - worker_count
      - reload_config()               ← re-reads limits from the configuration service
"""

from __future__ import annotations

import logging
import threading
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from typing import Any

logger = logging.getLogger(__name__)

# --------------------------------------------------------------------------- #
# Configuration source
# --------------------------------------------------------------------------- #

def _fetch_limits() -> dict[str, Any]:
    """
    Read pool sizes from the configuration service.

    Returns
    -------
    {
        'cpu_pool':      4,      # processes
        'thread_pool':   4,      # threads
    }
    """
    from nullsolve.apps.configuration import services

    workers = max(1, int(services.get("search_workers", 1)))
    return {"cpu_pool": workers, "thread_pool": workers}

# --------------------------------------------------------------------------- #
# Resource-pool manager (singleton)
# --------------------------------------------------------------------------- #

class ResourcePoolManager:
    _instance: "ResourcePoolManager | None" = None
    _global_lock = threading.Lock()

    def __new__(cls) -> "ResourcePoolManager":
        with cls._global_lock:
            if cls._instance is None:
                cls._instance = super().__new__(cls)
                cls._instance._init()
            return cls._instance

    # ---- life-cycle ------------------------------------------------------- #

    def _init(self) -> None:
        self._lock = threading.Lock()
        self._process_pool: ProcessPoolExecutor | None = None
        self._thread_pool:  ThreadPoolExecutor  | None = None
        self._workers = 1
        self.reload_config(warm=True)

    def close(self) -> None:
        with self._lock:
            if self._process_pool:
                self._process_pool.shutdown(cancel_futures=True)
                self._process_pool = None
            if self._thread_pool:
                self._thread_pool.shutdown(cancel_futures=True)
                self._thread_pool = None

    # ---- public API ------------------------------------------------------- #

    @property
    def worker_count(self) -> int:
        return self._workers

    def get_process_pool(self) -> ProcessPoolExecutor:
        with self._lock:
            if self._process_pool is None:
                self._process_pool = ProcessPoolExecutor(max_workers=self._workers)
            return self._process_pool

    def get_thread_pool(self) -> ThreadPoolExecutor:
        with self._lock:
            if self._thread_pool is None:
                self._thread_pool = ThreadPoolExecutor(max_workers=self._workers)
            return self._thread_pool

    # ---- dynamic resizing ------------------------------------------------- #

    def reload_config(self, warm: bool = False) -> None:
        """
        Re-read limits and resize pools on the fly.

        Pools are created lazily, so a resize only replaces executors that
        already exist. *warm* skips shutting down the replaced executors.
        """
        limits = _fetch_limits()
        new_size = limits["cpu_pool"]

        with self._lock:
            if new_size == self._workers:
                return
            logger.info(f"Resizing search pools from {self._workers} to {new_size} workers")
            self._workers = new_size

            if self._process_pool:
                old = self._process_pool
                self._process_pool = ProcessPoolExecutor(max_workers=new_size)
                if not warm:
                    old.shutdown(cancel_futures=False)

            if self._thread_pool:
                old_threads = self._thread_pool
                self._thread_pool = ThreadPoolExecutor(max_workers=limits["thread_pool"])
                if not warm:
                    old_threads.shutdown(cancel_futures=False)


# convenience alias for callers
def get_resource_pool_manager() -> ResourcePoolManager:
    return ResourcePoolManager()
