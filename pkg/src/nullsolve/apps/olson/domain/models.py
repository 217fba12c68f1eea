"""Domain model for Olson-type subset problems."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from nullsolve.apps.covering.domain.models import ResidueSet
from nullsolve.core.arith import require_prime
from nullsolve.core.exceptions import RangeViolation, ZeroMissing


@dataclass(frozen=True)
class OlsonInstance:
    """
    Find a nonempty J with sum over j in J of a_ij mod p^{d_i} in Q_i for every i.

    Entries are arbitrary integers; they are reduced only when a constraint is
    checked.
    """

    p: int
    d: Tuple[int, ...]
    a: Tuple[Tuple[int, ...], ...]
    q: Tuple[ResidueSet, ...]
    m: int = -1

    def __post_init__(self):
        require_prime(self.p)
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))
        object.__setattr__(self, "a", tuple(tuple(int(x) for x in row) for row in self.a))
        object.__setattr__(self, "q", tuple(self.q))

        n = len(self.d)
        if len(self.a) != n or len(self.q) != n:
            raise RangeViolation(f"{n} exponents, {len(self.a)} rows and {len(self.q)} target sets")
        widths = {len(row) for row in self.a}
        if self.m < 0:
            if len(widths) > 1:
                raise RangeViolation(f"rows have different lengths {sorted(widths)}")
            object.__setattr__(self, "m", widths.pop() if widths else 0)
        elif widths - {self.m}:
            raise RangeViolation(f"rows must have {self.m} entries")

        if any(x < 0 for x in self.d):
            raise RangeViolation(f"exponents must be nonnegative, got {self.d}")
        if any(x < y for x, y in zip(self.d, self.d[1:])):
            raise RangeViolation(f"exponents must be nonincreasing, got {self.d}")
        for i, (di, qi) in enumerate(zip(self.d, self.q), start=1):
            if (qi.p, qi.d) != (self.p, di):
                raise RangeViolation(f"Q_{i} is mod {qi.p}^{qi.d}, expected {self.p}^{di}")
            if 0 not in qi.elems:
                raise ZeroMissing(f"Q_{i} = {qi} does not contain 0")

    @property
    def n(self) -> int:
        return len(self.d)

    def modulus(self, i: int) -> int:
        """p^{d_i}, 0-based row index."""
        return self.p ** self.d[i]

    def column(self, j: int) -> Tuple[int, ...]:
        """Column j, 1-based."""
        return tuple(row[j - 1] for row in self.a)

    def residues(self, subset: Iterable[int]) -> List[int]:
        """sum over J of a_ij mod p^{d_i}, per row."""
        cols = list(subset)
        return [sum(row[j - 1] for j in cols) % self.modulus(i) for i, row in enumerate(self.a)]

    def is_solution(self, subset: Sequence[int]) -> bool:
        cols = list(subset)
        if not cols or len(set(cols)) != len(cols) or any(not 1 <= j <= self.m for j in cols):
            return False
        return all(r in qi.elems for r, qi in zip(self.residues(cols), self.q))

    def complements(self) -> List[ResidueSet]:
        """Z_{p^{d_i}} minus Q_i, the sets a covering must hit."""
        return [qi.complement() for qi in self.q]


def subset_from_bits(bits: Sequence[int]) -> Tuple[int, ...]:
    """1-based indices of the set bits."""
    return tuple(j for j, bit in enumerate(bits, start=1) if bit)
