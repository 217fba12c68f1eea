import logging

from django.dispatch import receiver

from .signals import configuration_changed

logger = logging.getLogger(__name__)


# Cache invalidation handler
@receiver(configuration_changed)
def invalidate_config_cache(sender, key, value, **kwargs):
    """Clear configuration cache when a configuration changes."""
    from . import services

    services._CACHE.pop(key, None)
    logger.debug(f"Configuration changed: {key} = {value}")


@receiver(configuration_changed)
def handle_log_level_change(sender, key, value, **kwargs):
    """Update logging configuration when log_level changes."""
    if key == "log_level" and value:
        logging.getLogger("nullsolve").setLevel(str(value).upper())
        logger.info(f"Set log level to {value}")


@receiver(configuration_changed)
def handle_search_workers_change(sender, key, value, **kwargs):
    """Resize the search pools when search_workers changes."""
    if key != "search_workers":
        return

    from nullsolve.core.resource_pool.manager import ResourcePoolManager

    # Only resize a manager that already exists; creating one here would spawn pools.
    if ResourcePoolManager._instance is not None:
        ResourcePoolManager._instance.reload_config()
        logger.info(f"Search pools resized to {value} workers")
