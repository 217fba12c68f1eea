"""Small exact integer helpers: primality, binomials."""
from typing import List

from nullsolve.core.exceptions import NotAPrime


def is_prime(n: int) -> bool:
    """Trial division; moduli in this package are desk-scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def require_prime(p: int) -> int:
    if not is_prime(p):
        raise NotAPrime(f"{p} is not a prime")
    return p


def next_prime_above(n: int) -> int:
    """Smallest prime strictly greater than n."""
    candidate = max(2, n + 1)
    while not is_prime(candidate):
        candidate += 1
    return candidate


def binom_row(t: int, d: int) -> List[int]:
    """Return ``[C(t,0), ..., C(t,d)]`` for any integer t (falling-factorial form)."""
    row = [1]
    for k in range(1, d + 1):
        # row[-1] * (t-k+1) == k * C(t,k), so the division is exact for negative t too
        row.append(row[-1] * (t - k + 1) // k)
    return row


def binom(t: int, k: int) -> int:
    if k < 0:
        return 0
    return binom_row(t, k)[k]
