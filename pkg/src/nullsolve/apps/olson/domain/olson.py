"""
Olson-type problems: reductions, extremal sequences and closed-form bounds.

F(d, Q) is the largest m for which some n x m matrix has no nonempty column
subset J with sum over J of a_ij mod p^{d_i} in Q_i for every i.
"""
import logging
from typing import List, Sequence, Set

from nullsolve.apps.covering.domain.covering import card_p, kappa, r_zero_set, sigma
from nullsolve.apps.covering.domain.models import ResidueSet
from nullsolve.apps.nullstellensatz.domain.lift import expand_to_unit_monomials
from nullsolve.apps.nullstellensatz.domain.models import UnitSumPoly
from nullsolve.apps.olson.domain.models import OlsonInstance
from nullsolve.core.arith import require_prime
from nullsolve.core.exceptions import ColumnSumNotDivisible, PreconditionViolated, RangeViolation

logger = logging.getLogger(__name__)


def constraint_polys(inst: OlsonInstance) -> List[UnitSumPoly]:
    """f_i = sum_j a_ij x_j as unit monomials, coefficients reduced mod p^{d_i}."""
    return [expand_to_unit_monomials(row, inst.modulus(i)) for i, row in enumerate(inst.a)]


def reduce_even_sum(inst: OlsonInstance) -> OlsonInstance:
    """
    Replace the last row by the column sums divided by p and lower its
    exponent by one. Every solution of the result solves the original,
    because the other rows already vanish mod p^{d_n}.
    """
    if inst.n == 0:
        raise PreconditionViolated("the even-sum reduction needs at least one row")
    if any(qi.elems != frozenset({0}) for qi in inst.q):
        raise PreconditionViolated("the even-sum reduction needs Q_i = {0} for every row")
    if inst.d[-1] < 1:
        raise PreconditionViolated("the last exponent must be positive")

    sums = [sum(col) for col in zip(*inst.a)] if inst.m else []
    bad = [j for j, s in enumerate(sums, start=1) if s % inst.p]
    if bad:
        raise ColumnSumNotDivisible(f"column {bad[0]} sums to {sums[bad[0] - 1]}, not divisible by {inst.p}")

    p = inst.p
    d = inst.d[:-1] + (inst.d[-1] - 1,)
    rows = inst.a[:-1] + (tuple(s // p for s in sums),)
    q = tuple(ResidueSet(p, di, frozenset({0})) for di in d)
    reduced = OlsonInstance(p, d, rows, q, inst.m)
    logger.debug(f"Even-sum reduction: exponents {inst.d} -> {d}")
    return reduced


def extremal_sequence(rs: Sequence[Set[int]], p: int, d: Sequence[int]) -> OlsonInstance:
    """
    The instance with no solution of length sum sigma(R_i): row i is -1 on its
    own block of sigma(R_i) consecutive columns, with target the R_i-zero set.
    """
    require_prime(p)
    if len(rs) != len(d):
        raise RangeViolation(f"{len(rs)} digit sets for {len(d)} exponents")
    widths = [sigma(r, p) for r in rs]
    m = sum(widths)
    rows = []
    start = 0
    for width in widths:
        rows.append(tuple(-1 if start <= j < start + width else 0 for j in range(m)))
        start += width
    q = tuple(r_zero_set(r, p, di) for r, di in zip(rs, d))
    return OlsonInstance(p, tuple(d), tuple(rows), q, m)


def olson_value(p: int, d: Sequence[int]) -> int:
    """F(d, {0}) = sum (p^{d_i} - 1)."""
    return sum(p ** di - 1 for di in d)


def alon_friedland_kalai_bound(p: int, d: Sequence[int], q: Sequence[ResidueSet]) -> int:
    """sum (p^{d_i} - card_p(Q_i)); any m above it guarantees a solution."""
    return sum(p ** di - card_p(qi) for di, qi in zip(d, q))


def kappa_bound(p: int, d: Sequence[int], q: Sequence[ResidueSet]) -> int:
    """sum kappa(Z_{p^{d_i}} minus Q_i); any m above it guarantees a solution."""
    return sum(kappa(qi.complement()) for qi in q)
