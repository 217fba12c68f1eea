import logging
import os
import threading
from typing import Any, Dict, List, Optional

from .models import ConfigurationEntry

logger = logging.getLogger(__name__)

# In-memory registry of configuration entries
_ENTRIES: Dict[str, ConfigurationEntry] = {}
_LOCK = threading.RLock()

# Simple cache to avoid repeated type conversions
_CACHE: Dict[str, Any] = {}

DEFAULTS: List[Dict[str, Any]] = [
    {
        'key': 'ppa_step_cap',
        'default_value': '0',
        'value_type': ConfigurationEntry.TYPE_INTEGER,
        'description': 'Maximum path-following steps; 0 means 2^(m+4)',
        'env_variable': 'NULLSOLVE_STEP_CAP',
    },
    {
        'key': 'brute_force_max_vars',
        'default_value': '24',
        'value_type': ConfigurationEntry.TYPE_INTEGER,
        'description': 'Largest variable count the exhaustive search accepts',
        'env_variable': 'NULLSOLVE_BRUTE_CAP',
    },
    {
        'key': 'graph_oracle_max_vars',
        'default_value': '12',
        'value_type': ConfigurationEntry.TYPE_INTEGER,
        'description': 'Largest variable count for full End-of-the-Line graph enumeration',
        'env_variable': 'NULLSOLVE_ORACLE_CAP',
    },
    {
        'key': 'term_enumeration_cap',
        'default_value': str(1 << 20),
        'value_type': ConfigurationEntry.TYPE_INTEGER,
        'description': 'Largest number of term tuples enumerated per block',
        'env_variable': 'NULLSOLVE_TERM_CAP',
    },
    {
        'key': 'oracle_max_column_types',
        'default_value': '64',
        'value_type': ConfigurationEntry.TYPE_INTEGER,
        'description': 'Largest column space size for the exact F(d,Q) oracle',
        'env_variable': 'NULLSOLVE_ORACLE_COLUMNS',
    },
    {
        'key': 'search_workers',
        'default_value': '1',
        'value_type': ConfigurationEntry.TYPE_INTEGER,
        'description': 'Worker processes for exhaustive search; 1 runs inline',
        'env_variable': 'NULLSOLVE_SEARCH_WORKERS',
    },
    {
        'key': 'search_chunk_bits',
        'default_value': '16',
        'value_type': ConfigurationEntry.TYPE_INTEGER,
        'description': 'Exhaustive search partitions hold 2^bits candidates',
        'env_variable': 'NULLSOLVE_CHUNK_BITS',
    },
    {
        'key': 'log_level',
        'default_value': 'WARNING',
        'value_type': ConfigurationEntry.TYPE_STRING,
        'description': 'Logging level for the application',
        'env_variable': 'NULLSOLVE_LOG_LEVEL',
    },
]


def _entry(key: str) -> Optional[ConfigurationEntry]:
    if not _ENTRIES:
        initialize()
    return _ENTRIES.get(key)


def get(key: str, default: Any = None) -> Any:
    """
    Get a configuration value by key.

    Args:
        key: The configuration key
        default: Default value if configuration doesn't exist

    Returns:
        The typed configuration value
    """
    if key in _CACHE:
        return _CACHE[key]

    with _LOCK:
        entry = _entry(key)
        if entry is None:
            return default
        value = entry.get_typed_value()
        _CACHE[key] = value
        return value


def set(key: str, value: Any, value_type: Optional[str] = None,
        description: Optional[str] = None,
        env_variable: Optional[str] = None,
        default_value: Optional[Any] = None) -> bool:
    """
    Set a configuration value, creating the entry if needed.

    Args:
        key: The configuration key
        value: The value to set
        value_type: The value type (only used for new entries)
        description: Description (optional)
        env_variable: Environment variable name for override
        default_value: Default value

    Returns:
        True if successful, False otherwise
    """
    _CACHE.pop(key, None)

    try:
        with _LOCK:
            entry = _entry(key)
            if entry is None:
                entry = ConfigurationEntry(key=key, value_type=value_type or ConfigurationEntry.TYPE_STRING)
                _ENTRIES[key] = entry
            if description is not None:
                entry.description = description
            if env_variable is not None:
                entry.env_variable = env_variable
            if default_value is not None:
                entry.default_value = entry._to_storage_format(default_value)
            entry.set_typed_value(value)
        entry.publish()
        return True
    except (TypeError, ValueError) as e:
        logger.error(f"Error setting configuration '{key}': {e}")
        return False


def get_all() -> Dict[str, Any]:
    """
    Get all configuration values.

    Returns:
        Dictionary of configuration keys and their typed values
    """
    with _LOCK:
        if not _ENTRIES:
            initialize()
        result = {}
        for key in sorted(_ENTRIES):
            value = _ENTRIES[key].get_typed_value()
            result[key] = value
            _CACHE[key] = value
        return result


def load_from_environment() -> List[str]:
    """
    Load configuration values from environment variables.

    Returns:
        List of keys that were updated from environment variables
    """
    updated_keys = []

    for entry in list(_ENTRIES.values()):
        if not entry.is_env_overridable or entry.env_variable not in os.environ:
            continue

        env_value = os.environ[entry.env_variable]
        old_value = entry.set_typed_value(env_value)
        _CACHE.pop(entry.key, None)
        if old_value != entry.get_typed_value():  # Only publish if value changed
            updated_keys.append(entry.key)
            entry.publish()
            logger.info(f"Configuration '{entry.key}' updated from environment variable '{entry.env_variable}'")

    return updated_keys


def ensure_defaults() -> List[str]:
    """
    Ensure default configurations exist.

    Returns:
        List of keys that were created
    """
    created_keys = []
    for config_data in DEFAULTS:
        if config_data['key'] in _ENTRIES:
            continue
        _ENTRIES[config_data['key']] = ConfigurationEntry(**config_data)
        created_keys.append(config_data['key'])
        logger.debug(f"Created default configuration '{config_data['key']}'")
    return created_keys


def reset() -> None:
    """Drop every entry and cached value; the next access re-initializes."""
    with _LOCK:
        _ENTRIES.clear()
        _CACHE.clear()


def initialize() -> None:
    """Initialize the configuration service."""
    # Connect signal receivers
    from . import receivers  # noqa: F401

    with _LOCK:
        ensure_defaults()
        load_from_environment()
        _CACHE.clear()

    logger.debug("Configuration service initialized")
