"""
Integer-valued univariate polynomials.

Two representations are used throughout:

* ``IVPoly`` – coefficients alpha_r in the binomial basis C(x, r); integer
  coefficients make every value at an integer an integer.
* ``FactoredIVP`` – ``prod(T - q_i) / p**delta``, the shape every covering
  construction produces.
"""
from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Sequence, Tuple, Union

from nullsolve.core.arith import binom_row
from nullsolve.core.exceptions import NonIntegralResult, RangeViolation

logger = logging.getLogger(__name__)


def _normalize(coeffs: Sequence[int]) -> Tuple[int, ...]:
    """Strip trailing zero coefficients, keeping at least one entry."""
    n = len(coeffs)
    while n > 1 and coeffs[n - 1] == 0:
        n -= 1
    return tuple(int(c) for c in coeffs[:n]) or (0,)


@dataclass(frozen=True)
class IVPoly:
    """sum(alpha_r * C(x, r)) with integer alpha_r."""

    coeffs: Tuple[int, ...] = field(default=(0,))

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    @property
    def degree(self) -> int:
        """Largest r with alpha_r != 0; the zero polynomial has degree 0."""
        return len(self.coeffs) - 1

    @property
    def value_at_zero(self) -> int:
        return self.coeffs[0]

    @classmethod
    def constant(cls, c: int) -> "IVPoly":
        return cls((c,))

    def __str__(self) -> str:
        parts = [f"{a}*C(x,{r})" for r, a in enumerate(self.coeffs) if a]
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class FactoredIVP:
    """prod(T - q_i) / p**delta, integer-valued when p**delta divides every product."""

    roots: Tuple[int, ...]
    p: int
    delta: int = 0

    def __post_init__(self):
        object.__setattr__(self, "roots", tuple(int(q) for q in self.roots))
        if self.delta < 0:
            raise RangeViolation(f"delta must be nonnegative, got {self.delta}")

    @property
    def degree(self) -> int:
        return len(self.roots)

    @property
    def value_at_zero(self) -> int:
        return eval_factored(self, 0)

    @classmethod
    def checked(cls, roots: Sequence[int], p: int, delta: int) -> "FactoredIVP":
        """Build and verify that p**delta divides the product at every integer."""
        h = cls(tuple(roots), p, delta)
        if not h.is_integer_valued():
            raise NonIntegralResult(
                f"p^{delta} does not divide prod(T - q) for every T (p={p}, roots={h.roots})"
            )
        return h

    def is_integer_valued(self) -> bool:
        return min_product_valuation(self.roots, self.p) >= self.delta

    def __str__(self) -> str:
        factors = "".join(f"(T{-q:+d})" if q else "T" for q in self.roots) or "1"
        return f"{factors}/{self.p}^{self.delta}" if self.delta else factors


Poly = Union[IVPoly, FactoredIVP]


def min_product_valuation(roots: Sequence[int], p: int) -> int:
    """
    min over all integers T of v_p(prod(T - q_i)).

    v_p(prod(T - q)) = sum over j >= 1 of #{q : q = T mod p^j}, so the minimum
    is a cheapest root-to-leaf walk down the trie of residue classes. A class
    with a root-free child contributes nothing below it.
    """

    def walk(qs: Sequence[int], modulus: int) -> int:
        next_modulus = modulus * p
        buckets = defaultdict(list)
        for q in qs:
            buckets[q % next_modulus].append(q)
        if len(buckets) < p:
            return 0
        return min(len(b) + walk(b, next_modulus) for b in buckets.values())

    if not roots:
        return 0
    return walk(list(roots), 1)


def eval_binomial(h: IVPoly, t: int) -> int:
    """sum(alpha_r * C(t, r)), exact for every integer t."""
    row = binom_row(t, h.degree)
    return sum(a * b for a, b in zip(h.coeffs, row))


def eval_factored(h: FactoredIVP, t: int) -> int:
    """prod(t - q_i) / p**delta as an exact integer."""
    product = 1
    for q in h.roots:
        product *= t - q
    quotient, remainder = divmod(product, h.p ** h.delta)
    if remainder:
        raise NonIntegralResult(f"{h} is not integral at T={t}")
    return quotient


def evaluate(h: Poly, t: int) -> int:
    if isinstance(h, FactoredIVP):
        return eval_factored(h, t)
    return eval_binomial(h, t)


def to_binomial_basis(h: FactoredIVP) -> IVPoly:
    """Gregory-Newton: alpha_r is the r-th forward difference of h at 0."""
    values = [eval_factored(h, t) for t in range(h.degree + 1)]
    coeffs = []
    while values:
        coeffs.append(values[0])
        values = [b - a for a, b in zip(values, values[1:])]
    return IVPoly(tuple(coeffs))


def is_unit_at_zero(h: Poly, p: int) -> bool:
    """True iff p does not divide h(0)."""
    return evaluate(h, 0) % p != 0
