"""Worker pools for partitioned exhaustive search."""

from nullsolve.core.resource_pool.manager import ResourcePoolManager, get_resource_pool_manager
from nullsolve.core.resource_pool.parallel import cpu_bound, execute_parallel, first_hit

__all__ = [
    'ResourcePoolManager',
    'get_resource_pool_manager',
    'cpu_bound',
    'execute_parallel',
    'first_hit',
]
