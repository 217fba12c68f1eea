"""
Lifting integer-valued polynomials through coefficient-1 monomial sums.

For f = p_1 + ... + p_k, Psi_r(f) is the r-th elementary symmetric polynomial
of the p_i. On {0,1}^m every p_i is 0 or 1, so Psi_r(f)(s) = C(f(s), r), and
for h = sum alpha_r C(x, r) the lift Psi^h(f) = sum alpha_r Psi_r(f) satisfies
Psi^h(f)(s) = h(f(s)).
"""
import logging
from functools import partial
from typing import List, Optional, Sequence, Tuple

import numpy as np

from nullsolve.apps.configuration import services as config
from nullsolve.apps.covering.domain.ivpoly import IVPoly, evaluate, to_binomial_basis
from nullsolve.apps.covering.domain.models import CoveringFamily, ResidueSet
from nullsolve.apps.nullstellensatz.domain.models import (
    IntMultiPoly, Monomial, UnitSumPoly, bits_to_code, code_to_bits, full_mask
)
from nullsolve.core.arith import binom, require_prime
from nullsolve.core.exceptions import (
    CapExceeded,
    DegreeBoundViolated,
    FullCoefficientZero,
    NoSolution,
    RangeViolation,
    VerificationFailed,
    ZeroUnitViolated,
)
from nullsolve.core.resource_pool import cpu_bound, first_hit

logger = logging.getLogger(__name__)


def expand_to_unit_monomials(coefs: Sequence[int], modulus: int) -> UnitSumPoly:
    """sum a_j x_j as unit monomials, each a_j reduced into [0, modulus)."""
    if modulus < 1:
        raise RangeViolation(f"modulus must be positive, got {modulus}")
    terms: List[Monomial] = []
    for j, a in enumerate(coefs, start=1):
        terms.extend([Monomial.of(j)] * (a % modulus))
    return UnitSumPoly(len(coefs), tuple(terms))


def elementary_lifts(f: UnitSumPoly, top: int) -> List[IntMultiPoly]:
    """
    [Psi_0(f), ..., Psi_top(f)].

    Identical monomials are grouped: a monomial M with multiplicity c
    contributes C(c, t) * M * E_{r-t} to E_r for every t >= 1.
    """
    lifts = [IntMultiPoly.constant(f.m, 1)] + [IntMultiPoly(f.m) for _ in range(top)]
    for mask, count in sorted(f.grouped().items()):
        updated = list(lifts)
        for r in range(1, top + 1):
            acc = lifts[r]
            for t in range(1, min(count, r) + 1):
                if lifts[r - t].is_zero():
                    continue
                acc = acc + lifts[r - t].times_monomial(mask).scale(binom(count, t))
            updated[r] = acc
        lifts = updated
    return lifts


def psi_r(f: UnitSumPoly, r: int) -> IntMultiPoly:
    if r < 0:
        raise RangeViolation(f"r must be nonnegative, got {r}")
    if r > len(f):
        return IntMultiPoly(f.m)
    return elementary_lifts(f, r)[r]


def psi_h(f: UnitSumPoly, h: IVPoly) -> IntMultiPoly:
    """sum alpha_r Psi_r(f); equals h(f(s)) at every s in {0,1}^m."""
    top = min(h.degree, len(f))
    lifts = elementary_lifts(f, top)
    result = IntMultiPoly(f.m)
    for r, alpha in enumerate(h.coeffs[:top + 1]):
        if alpha:
            result = result + lifts[r].scale(alpha)
    return result


def _variable_count(fs: Sequence[UnitSumPoly], m: Optional[int]) -> int:
    counts = {f.m for f in fs}
    if m is not None:
        counts.add(m)
    if len(counts) != 1:
        raise RangeViolation(f"constraints disagree on the variable count: {sorted(counts)}")
    return counts.pop()


def main_polynomial_factors(
        fs: Sequence[UnitSumPoly],
        families: Sequence[CoveringFamily],
        p: int,
        m: Optional[int] = None
) -> Tuple[List[IntMultiPoly], int]:
    """
    The lifted factors Psi^h(f_i) mod p, one per h in each family, and the
    constant c = product of h(0) mod p.

    Raises DegreeBoundViolated unless m > sum deg(f_i) * total_degree(H_i).
    """
    require_prime(p)
    if len(fs) != len(families):
        raise RangeViolation(f"{len(fs)} constraints but {len(families)} covering families")
    m = _variable_count(fs, m)

    bound = sum(f.degree * family.total_degree for f, family in zip(fs, families))
    if m <= bound:
        raise DegreeBoundViolated(f"m = {m} does not exceed sum deg(f_i) * deg(H_i) = {bound}")

    factors = []
    c = 1
    for i, (f, family) in enumerate(zip(fs, families), start=1):
        for h in family:
            h0 = evaluate(h, 0)
            if h0 % p == 0:
                raise ZeroUnitViolated(f"constraint {i}: {h} vanishes mod {p} at 0")
            c = c * h0 % p
            factors.append(psi_h(f, to_binomial_basis(h)).mod(p))
    logger.debug(f"{len(factors)} lifted factors, bound {bound} < m = {m}, c = {c}")
    return factors, c


def build_main_polynomial(
        fs: Sequence[UnitSumPoly],
        families: Sequence[CoveringFamily],
        p: int,
        m: Optional[int] = None
) -> Tuple[IntMultiPoly, int]:
    """
    prod Psi^h(f_i) - c * prod (1 - x_j) over F_p.

    The result vanishes at 0, has degree m and a nonzero coefficient on
    x_1...x_m, and is nonzero only at nonzero s satisfying every
    constraint covered by the families. Families that also vanish on part
    of Q_i may lose some solutions; exact covers keep all of them.
    """
    factors, c = main_polynomial_factors(fs, families, p, m)
    m = _variable_count(fs, m)
    product = IntMultiPoly.constant(m, 1)
    for factor in factors:
        product = (product * factor).mod(p)
    f = (product - IntMultiPoly.one_minus_all(m).scale(c)).mod(p)
    logger.info(f"Main polynomial over F_{p}: m = {m}, {len(f.coeffs)} monomials")
    return f, c


def solve_explicit_cn(f: IntMultiPoly, m: int, p: int = 2) -> Tuple[int, ...]:
    """
    A point s with f(s) != 0, by fixing x_1, ..., x_m in turn.

    Each step keeps the coefficient of the product of the remaining variables
    nonzero: x_j = 0 when that already holds, otherwise x_j = 1.
    """
    g = f.mod(p)
    if g.coefficient(full_mask(m)) == 0:
        raise FullCoefficientZero(f"coefficient of x1...x{m} is 0 mod {p}")

    bits = []
    for j in range(1, m + 1):
        rest = full_mask(m) & ~full_mask(j)
        zero = g.substitute(j, 0).mod(p)
        if zero.coefficient(rest):
            bits.append(0)
            g = zero
        else:
            bits.append(1)
            g = g.substitute(j, 1).mod(p)

    s = tuple(bits)
    if f.evaluate(bits_to_code(s), p) == 0:
        raise VerificationFailed(f"explicit solver returned {s} with f(s) = 0")
    return s


# --------------------------------------------------------------------------- #
# Exhaustive search
# --------------------------------------------------------------------------- #

Constraint = Tuple[UnitSumPoly, int, Tuple[int, ...]]


@cpu_bound
def _scan_range(constraints: Sequence[Constraint], bounds: Tuple[int, int]) -> Optional[int]:
    """Smallest code in [start, stop) satisfying every constraint, or None."""
    start, stop = bounds
    codes = np.arange(start, stop, dtype=np.int64)
    ok = np.ones(codes.shape, dtype=bool)
    for f, modulus, allowed in constraints:
        ok &= np.isin(f.evaluate_batch(codes, modulus), allowed)
        if not ok.any():
            return None
    hits = np.flatnonzero(ok)
    return int(codes[hits[0]]) if hits.size else None


def partition_codes(m: int, start: int = 1) -> List[Tuple[int, int]]:
    """Contiguous code ranges covering [start, 2^m), 2^search_chunk_bits wide."""
    width = 1 << max(1, config.get('search_chunk_bits', 16))
    total = 1 << m
    return [(lo, min(lo + width, total)) for lo in range(start, total, width)]


def check_search_cap(m: int) -> None:
    cap = config.get('brute_force_max_vars', 24)
    if m > cap:
        raise CapExceeded(f"exhaustive search over 2^{m} points exceeds the cap of 2^{cap}")


def brute_force_cn(
        fs: Sequence[UnitSumPoly],
        qs: Sequence[ResidueSet],
        m: Optional[int] = None
) -> Tuple[int, ...]:
    """
    Smallest nonzero s (by code sum s_j 2^(j-1)) with f_i(s) mod p^{d_i} in Q_i.

    Raises NoSolution when none exists and CapExceeded above the configured
    variable count.
    """
    if len(fs) != len(qs):
        raise RangeViolation(f"{len(fs)} constraints but {len(qs)} target sets")
    m = _variable_count(fs, m)
    check_search_cap(m)

    constraints = tuple((f, q.modulus, q.sorted()) for f, q in zip(fs, qs))
    chunks = partition_codes(m)
    logger.info(f"Exhaustive search: m = {m}, {len(constraints)} constraints, {len(chunks)} partitions")
    code = first_hit(partial(_scan_range, constraints), chunks)
    if code is None:
        raise NoSolution(f"no nonzero s in {{0,1}}^{m} satisfies the constraints")
    return code_to_bits(code, m)
