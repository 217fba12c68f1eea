import pytest

from nullsolve.core.arith import binom, binom_row, is_prime, next_prime_above, require_prime
from nullsolve.core.exceptions import NotAPrime


@pytest.mark.parametrize("n, expected", [(0, False), (1, False), (2, True), (3, True), (4, False), (97, True), (91, False)])
def test_is_prime(n, expected):
    assert is_prime(n) is expected


def test_require_prime_rejects_composites():
    with pytest.raises(NotAPrime):
        require_prime(9)


@pytest.mark.parametrize("n, expected", [(0, 2), (2, 3), (3, 5), (4, 5), (13, 17)])
def test_next_prime_above(n, expected):
    assert next_prime_above(n) == expected


def test_binomials_extend_to_negative_arguments():
    assert binom_row(5, 3) == [1, 5, 10, 10]
    assert binom(-1, 3) == -1
    assert binom(-2, 2) == 3
    assert binom(4, -1) == 0
