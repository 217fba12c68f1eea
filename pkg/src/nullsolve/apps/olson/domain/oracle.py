"""
Exact F(d, Q) for tiny parameters.

A column multiset is bad when none of its nonempty sub-multisets sums into
Q_1 x ... x Q_n. Dropping a column from a bad multiset leaves it bad, so the
bad multisets of size m + 1 are exactly the bad extensions of those of size
m. The search grows them level by level and stops at the first empty level.
"""
import logging
from itertools import product
from typing import Dict, List, Sequence, Tuple

from nullsolve.apps.configuration import services as config
from nullsolve.apps.covering.domain.models import ResidueSet
from nullsolve.core.arith import require_prime
from nullsolve.core.exceptions import CapExceeded, RangeViolation, ZeroMissing

logger = logging.getLogger(__name__)


class ColumnSpace:
    """Z_{p^{d_1}} x ... x Z_{p^{d_n}}, indexed in mixed radix."""

    def __init__(self, p: int, d: Sequence[int]):
        self.moduli = [p ** di for di in d]
        self.vectors: List[Tuple[int, ...]] = list(product(*[range(q) for q in self.moduli]))
        self.index: Dict[Tuple[int, ...], int] = {v: i for i, v in enumerate(self.vectors)}
        self.size = len(self.vectors)

    def add(self, u: int, v: int) -> int:
        a, b = self.vectors[u], self.vectors[v]
        return self.index[tuple((x + y) % q for x, y, q in zip(a, b, self.moduli))]

    def translations(self) -> List[List[int]]:
        """translations[c][s] = index of s + c."""
        return [[self.add(s, c) for s in range(self.size)] for c in range(self.size)]


def _shift(sums: int, table: List[int]) -> int:
    """Bitset of {s + c : s in sums} given the translation table of c."""
    out = 0
    while sums:
        low = sums & -sums
        out |= 1 << table[low.bit_length() - 1]
        sums ^= low
    return out


def F_exact(p: int, d: Sequence[int], q: Sequence[ResidueSet], m_cap: int = 12) -> int:
    """
    Largest m (at most m_cap) for which some n x m matrix has no valid
    nonempty J. Raises CapExceeded when the column space exceeds
    ``oracle_max_column_types`` or bad matrices still exist at m_cap.
    """
    require_prime(p)
    if len(d) != len(q):
        raise RangeViolation(f"{len(d)} exponents but {len(q)} target sets")
    for i, (di, qi) in enumerate(zip(d, q), start=1):
        if (qi.p, qi.d) != (p, di):
            raise RangeViolation(f"Q_{i} is mod {qi.p}^{qi.d}, expected {p}^{di}")
        if 0 not in qi.elems:
            raise ZeroMissing(f"Q_{i} = {qi} does not contain 0")

    space = ColumnSpace(p, d)
    limit = config.get('oracle_max_column_types', 64)
    if space.size > limit:
        raise CapExceeded(f"column space has {space.size} types, the oracle handles at most {limit}")

    target = 0
    for idx, vec in enumerate(space.vectors):
        if all(x in qi.elems for x, qi in zip(vec, q)):
            target |= 1 << idx
    tables = space.translations()

    # (largest column used, bitset of nonempty subset sums)
    level: Dict[Tuple[int, int], None] = {(0, 0): None}
    m = 0
    while level:
        if m > m_cap:
            raise CapExceeded(f"bad matrices with {m} columns remain; raise m_cap above {m_cap}")
        following: Dict[Tuple[int, int], None] = {}
        for last, sums in level:
            for c in range(last, space.size):
                grown = sums | (1 << c) | _shift(sums, tables[c])
                if not grown & target:
                    following[(c, grown)] = None
        logger.debug(f"F oracle: {len(following)} bad states with {m + 1} columns")
        level = following
        m += 1
    return m - 1
