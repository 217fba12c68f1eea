"""
Multilinear polynomials on {0,1}^m.

A monomial is a set of variable indices stored as a bitmask (bit j-1 for
x_j). A point s in {0,1}^m is stored the same way, so a monomial evaluates to
1 at s exactly when ``s & mask == mask``. Since x^t = x on {0,1}, products of
monomials are bitwise ORs.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple

import numpy as np

from nullsolve.core.exceptions import RangeViolation


def bits_to_code(bits: Sequence[int]) -> int:
    """(s_1, ..., s_m) -> sum s_j * 2^(j-1)."""
    code = 0
    for j, bit in enumerate(bits):
        if bit:
            code |= 1 << j
    return code


def code_to_bits(code: int, m: int) -> Tuple[int, ...]:
    return tuple((code >> j) & 1 for j in range(m))


def full_mask(m: int) -> int:
    return (1 << m) - 1


@dataclass(frozen=True, order=True)
class Monomial:
    """Product of the variables whose bits are set; the empty monomial is 1."""

    mask: int = 0

    def __post_init__(self):
        if self.mask < 0:
            raise RangeViolation(f"monomial mask must be nonnegative, got {self.mask}")

    @classmethod
    def of(cls, *variables: int) -> "Monomial":
        """Monomial from 1-based variable indices."""
        mask = 0
        for j in variables:
            if j < 1:
                raise RangeViolation(f"variable indices start at 1, got {j}")
            mask |= 1 << (j - 1)
        return cls(mask)

    @property
    def vars(self) -> Tuple[int, ...]:
        return tuple(j + 1 for j in range(self.mask.bit_length()) if (self.mask >> j) & 1)

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    def fits(self, m: int) -> bool:
        return self.mask >> m == 0

    def evaluate(self, code: int) -> int:
        return 1 if code & self.mask == self.mask else 0

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.mask | other.mask)

    def __str__(self) -> str:
        return "*".join(f"x{j}" for j in self.vars) or "1"


@dataclass(frozen=True)
class UnitSumPoly:
    """
    A sum of coefficient-1 monomials; repeated monomials encode integer
    coefficients. Its value at s counts the terms equal to 1 there.
    """

    m: int
    terms: Tuple[Monomial, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if self.m < 0:
            raise RangeViolation(f"variable count must be nonnegative, got {self.m}")
        for t in self.terms:
            if not t.fits(self.m):
                raise RangeViolation(f"monomial {t} uses a variable beyond x{self.m}")

    @property
    def degree(self) -> int:
        return max((t.degree for t in self.terms), default=0)

    def grouped(self) -> Dict[int, int]:
        """mask -> multiplicity."""
        return dict(Counter(t.mask for t in self.terms))

    def evaluate(self, code: int) -> int:
        return sum(t.evaluate(code) for t in self.terms)

    def evaluate_batch(self, codes: np.ndarray, modulus: int) -> np.ndarray:
        """Values mod ``modulus`` at every code in ``codes`` (int64 array)."""
        values = np.zeros(codes.shape, dtype=np.int64)
        for mask, count in self.grouped().items():
            values += (count % modulus) * ((codes & mask) == mask)
        return values % modulus

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return " + ".join(str(t) for t in self.terms) or "0"


@dataclass
class IntMultiPoly:
    """Multilinear polynomial with integer coefficients, keyed by monomial mask."""

    m: int
    coeffs: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {mask: int(c) for mask, c in self.coeffs.items() if c}

    @classmethod
    def constant(cls, m: int, c: int) -> "IntMultiPoly":
        return cls(m, {0: c})

    @classmethod
    def from_monomials(cls, m: int, monomials: Iterable[Monomial]) -> "IntMultiPoly":
        return cls(m, dict(Counter(t.mask for t in monomials)))

    @classmethod
    def one_minus_all(cls, m: int) -> "IntMultiPoly":
        """prod over j of (1 - x_j)."""
        full = full_mask(m)
        coeffs = {}
        sub = full
        while True:
            coeffs[sub] = -1 if sub.bit_count() % 2 else 1
            if sub == 0:
                break
            sub = (sub - 1) & full
        return cls(m, coeffs)

    @property
    def degree(self) -> int:
        return max((mask.bit_count() for mask in self.coeffs), default=0)

    def coefficient(self, monomial: int) -> int:
        return self.coeffs.get(monomial, 0)

    def monomials(self) -> Iterator[Tuple[Monomial, int]]:
        for mask in sorted(self.coeffs):
            yield Monomial(mask), self.coeffs[mask]

    def is_zero(self) -> bool:
        return not self.coeffs

    def _combine(self, other: "IntMultiPoly", sign: int) -> "IntMultiPoly":
        out = dict(self.coeffs)
        for mask, c in other.coeffs.items():
            out[mask] = out.get(mask, 0) + sign * c
        return IntMultiPoly(max(self.m, other.m), out)

    def __add__(self, other: "IntMultiPoly") -> "IntMultiPoly":
        return self._combine(other, 1)

    def __sub__(self, other: "IntMultiPoly") -> "IntMultiPoly":
        return self._combine(other, -1)

    def __neg__(self) -> "IntMultiPoly":
        return self.scale(-1)

    def __mul__(self, other: "IntMultiPoly") -> "IntMultiPoly":
        out: Dict[int, int] = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                key = a | b
                out[key] = out.get(key, 0) + ca * cb
        return IntMultiPoly(max(self.m, other.m), out)

    def scale(self, c: int) -> "IntMultiPoly":
        return IntMultiPoly(self.m, {mask: c * v for mask, v in self.coeffs.items()})

    def times_monomial(self, monomial: int) -> "IntMultiPoly":
        out: Dict[int, int] = {}
        for mask, c in self.coeffs.items():
            key = mask | monomial
            out[key] = out.get(key, 0) + c
        return IntMultiPoly(self.m, out)

    def mod(self, p: int) -> "IntMultiPoly":
        """Coefficients reduced into [0, p)."""
        return IntMultiPoly(self.m, {mask: c % p for mask, c in self.coeffs.items()})

    def substitute(self, var: int, value: int) -> "IntMultiPoly":
        """Fix x_var (1-based) to 0 or 1."""
        bit = 1 << (var - 1)
        out: Dict[int, int] = {}
        for mask, c in self.coeffs.items():
            if mask & bit:
                if not value:
                    continue
                mask ^= bit
            out[mask] = out.get(mask, 0) + c
        return IntMultiPoly(self.m, out)

    def evaluate(self, code: int, modulus: Optional[int] = None) -> int:
        total = sum(c for mask, c in self.coeffs.items() if code & mask == mask)
        return total % modulus if modulus else total

    def evaluate_batch(self, codes: np.ndarray, modulus: Optional[int] = None) -> np.ndarray:
        """Vectorised ``evaluate``; without a modulus the sums must fit in int64."""
        values = np.zeros(codes.shape, dtype=np.int64)
        for mask, c in self.coeffs.items():
            values += (c % modulus if modulus else c) * ((codes & mask) == mask)
            if modulus:
                values %= modulus
        return values

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMultiPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __str__(self) -> str:
        parts = []
        for monomial, c in self.monomials():
            if monomial.mask == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(str(monomial))
            else:
                parts.append(f"{c}*{monomial}")
        return " + ".join(parts) or "0"
