from django.dispatch import Signal

# Signal sent when a configuration value changes.
# Receivers get: key, value, value_type.
configuration_changed = Signal()
