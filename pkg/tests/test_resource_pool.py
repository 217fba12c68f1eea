import pytest

from nullsolve.apps.configuration import services as config
from nullsolve.core.resource_pool import first_hit, get_resource_pool_manager


def _first_multiple_of_seven(chunk):
    start, stop = chunk
    return next((n for n in range(start, stop) if n % 7 == 0 and n > 0), None)


CHUNKS = [(0, 4), (4, 8), (8, 12), (12, 16), (16, 20)]


@pytest.fixture
def two_workers():
    get_resource_pool_manager()
    config.set('search_workers', 2)
    yield get_resource_pool_manager()
    config.set('search_workers', 1)


def test_inline_search():
    assert first_hit(_first_multiple_of_seven, CHUNKS) == 7
    assert first_hit(_first_multiple_of_seven, CHUNKS[:1]) is None


def test_workers_follow_configuration(two_workers):
    assert two_workers.worker_count == 2


def test_answer_does_not_depend_on_worker_count(two_workers):
    assert first_hit(_first_multiple_of_seven, CHUNKS) == 7
    assert first_hit(_first_multiple_of_seven, CHUNKS[2:]) == 14
    assert first_hit(_first_multiple_of_seven, [(15, 20), (20, 21)]) is None
