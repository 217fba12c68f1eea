import json
from dataclasses import dataclass
from typing import Any, Optional

from .signals import configuration_changed


@dataclass
class ConfigurationEntry:
    """A typed configuration property with an optional environment override."""

    # Type constants
    TYPE_STRING = 'string'
    TYPE_INTEGER = 'integer'
    TYPE_FLOAT = 'float'
    TYPE_BOOLEAN = 'boolean'
    TYPE_JSON = 'json'
    TYPE_LIST = 'list'

    key: str
    default_value: Optional[str] = None
    value_type: str = TYPE_STRING
    description: str = ''
    env_variable: Optional[str] = None
    value: Optional[str] = None

    @property
    def is_env_overridable(self) -> bool:
        return bool(self.env_variable)

    def get_typed_value(self) -> Any:
        """Get the value converted to its specified type."""
        if self.value is None:
            return self.get_typed_default_value()
        return self._convert_value(self.value, self.value_type)

    def get_typed_default_value(self) -> Any:
        """Get the default value converted to its specified type."""
        if self.default_value is None:
            return None
        return self._convert_value(self.default_value, self.value_type)

    def set_typed_value(self, value: Any) -> Any:
        """Set the value, converting it to string for storage. Returns the old value."""
        old_value = self.get_typed_value()
        self.value = self._to_storage_format(value)
        return old_value

    def _to_storage_format(self, value: Any) -> Optional[str]:
        """Convert any value to string format for storage."""
        if value is None:
            return None

        if self.value_type == self.TYPE_INTEGER:
            return str(int(value))
        elif self.value_type == self.TYPE_FLOAT:
            return str(float(value))
        elif self.value_type == self.TYPE_BOOLEAN:
            if isinstance(value, str):
                return str(value.lower() in ('true', 'yes', '1', 't', 'y')).lower()
            return str(bool(value)).lower()
        elif self.value_type == self.TYPE_JSON:
            return json.dumps(value)
        elif self.value_type == self.TYPE_LIST:
            if isinstance(value, list):
                return ",".join(str(item) for item in value)
            return str(value)
        return str(value)

    @staticmethod
    def _convert_value(value_str: Optional[str], value_type: str) -> Any:
        """Convert string value to the appropriate type."""
        if value_str is None:
            return None

        try:
            if value_type == ConfigurationEntry.TYPE_INTEGER:
                return int(value_str)
            elif value_type == ConfigurationEntry.TYPE_FLOAT:
                return float(value_str)
            elif value_type == ConfigurationEntry.TYPE_BOOLEAN:
                return value_str.lower() in ('true', 'yes', '1', 't', 'y')
            elif value_type == ConfigurationEntry.TYPE_JSON:
                return json.loads(value_str)
            elif value_type == ConfigurationEntry.TYPE_LIST:
                if not value_str:
                    return []
                return [item.strip() for item in value_str.split(',')]
            return value_str
        except (TypeError, ValueError):
            # If conversion fails, return original string
            return value_str

    def publish(self) -> None:
        """Notify receivers that this entry's value changed."""
        configuration_changed.send(
            sender=self.__class__,
            key=self.key,
            value=self.get_typed_value(),
            value_type=self.value_type,
        )

    def __str__(self) -> str:
        return f"{self.key}: {self.get_typed_value()}"
