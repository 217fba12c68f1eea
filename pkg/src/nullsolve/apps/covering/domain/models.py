"""Domain models for residue sets and covering families."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, Tuple

from nullsolve.apps.covering.domain.ivpoly import FactoredIVP, is_unit_at_zero
from nullsolve.core.arith import require_prime
from nullsolve.core.exceptions import RangeViolation, ZeroUnitViolated


@dataclass(frozen=True)
class ResidueSet:
    """A subset of Z_{p^d}, stored as canonical representatives in [0, p^d)."""

    p: int
    d: int
    elems: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        require_prime(self.p)
        if self.d < 0:
            raise RangeViolation(f"exponent must be nonnegative, got {self.d}")
        object.__setattr__(self, "elems", frozenset(int(e) for e in self.elems))
        modulus = self.modulus
        bad = sorted(e for e in self.elems if not 0 <= e < modulus)
        if bad:
            raise RangeViolation(f"elements {bad} are outside [0, {modulus})")

    @classmethod
    def from_integers(cls, p: int, d: int, values: Iterable[int]) -> "ResidueSet":
        """Reduce arbitrary integers to their canonical residues."""
        modulus = p ** d
        return cls(p, d, frozenset(v % modulus for v in values))

    @classmethod
    def full(cls, p: int, d: int) -> "ResidueSet":
        return cls(p, d, frozenset(range(p ** d)))

    @property
    def modulus(self) -> int:
        return self.p ** self.d

    def complement(self) -> "ResidueSet":
        return ResidueSet(self.p, self.d, frozenset(range(self.modulus)) - self.elems)

    def sorted(self) -> Tuple[int, ...]:
        return tuple(sorted(self.elems))

    def __contains__(self, value: object) -> bool:
        return isinstance(value, int) and value % self.modulus in self.elems

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.elems)

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.sorted()) + f"}} mod {self.p}^{self.d}"


@dataclass(frozen=True)
class CoveringFamily:
    """Integer-valued polynomials, each a p-unit at 0, meant to cover a ResidueSet."""

    p: int
    d: int
    polys: Tuple[FactoredIVP, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "polys", tuple(self.polys))
        for h in self.polys:
            if not is_unit_at_zero(h, self.p):
                raise ZeroUnitViolated(f"{h} is divisible by {self.p} at 0")

    @property
    def total_degree(self) -> int:
        return sum(h.degree for h in self.polys)

    def __len__(self) -> int:
        return len(self.polys)

    def __iter__(self) -> Iterator[FactoredIVP]:
        return iter(self.polys)
