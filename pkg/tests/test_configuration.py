import logging

from nullsolve.apps.configuration import services
from nullsolve.apps.configuration.signals import configuration_changed


class TestConfigurationService:
    def test_defaults(self):
        assert services.get('brute_force_max_vars') == 24
        assert services.get('ppa_step_cap') == 0
        assert services.get('log_level') == 'WARNING'

    def test_unknown_key(self):
        assert services.get('no_such_key', 'fallback') == 'fallback'

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv('NULLSOLVE_STEP_CAP', '77')
        services.reset()
        assert services.get('ppa_step_cap') == 77

    def test_set_publishes_the_change(self):
        seen = []

        def listener(sender, key, value, **kwargs):
            seen.append((key, value))

        configuration_changed.connect(listener)
        try:
            assert services.set('search_chunk_bits', '5')
        finally:
            configuration_changed.disconnect(listener)
        assert seen == [('search_chunk_bits', 5)]
        assert services.get('search_chunk_bits') == 5

    def test_bad_integer_is_refused(self):
        assert not services.set('brute_force_max_vars', 'many')
        assert services.get('brute_force_max_vars') == 24

    def test_log_level_receiver(self):
        logger = logging.getLogger('nullsolve')
        before = logger.level
        try:
            services.set('log_level', 'debug')
            assert logger.level == logging.DEBUG
        finally:
            logger.setLevel(before)

    def test_new_entries(self):
        services.set('trace_width', 3, value_type='integer')
        assert services.get('trace_width') == 3

    def test_get_all(self):
        values = services.get_all()
        assert values['oracle_max_column_types'] == 64
        assert values['search_workers'] == 1
        assert list(values) == sorted(values)
