"""
Residue-set coverings by integer-valued polynomials.

A family H covers B (a subset of Z_{p^d}) when every b in B has some h in H
with p | h(b), and every h is a p-unit at 0. The total degree of the cheapest
such family is the price of B; kappa(B) is the constructive upper bound and
``build_kappa_covering`` produces a family that attains it.
"""
from __future__ import annotations

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from nullsolve.apps.covering.domain.ivpoly import FactoredIVP, Poly, evaluate
from nullsolve.apps.covering.domain.models import CoveringFamily, ResidueSet
from nullsolve.core.arith import require_prime
from nullsolve.core.exceptions import (
    CoversZero,
    EmptySet,
    NotAResidueSystem,
    NotDistinctModP,
    RangeViolation,
    ZeroInSet,
    ZeroMissing,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KappaLevel:
    """One step of the kappa recursion: k elements of B_{r+1} divisible by p^r."""

    r: int
    k: int
    level_set: Tuple[int, ...]  # B_{r+1}, residues mod p^{r+1}


def kappa_levels(b: ResidueSet) -> List[KappaLevel]:
    """The recursion behind kappa, top level first."""
    p = b.p
    levels = []
    current = sorted(b.elems)
    for r in range(b.d - 1, -1, -1):
        low = p ** r
        k = sum(1 for x in current if x % low == 0)
        levels.append(KappaLevel(r, k, tuple(current)))
        counts = Counter(x % low for x in current)
        # strictly more than k occurrences survive
        current = sorted(c for c, n in counts.items() if n > k)
    return levels


def kappa(b: ResidueSet) -> int:
    """sum(k_r * p^r) over the kappa recursion; |B| when d = 1."""
    return sum(level.k * b.p ** level.r for level in kappa_levels(b))


def card_p(q: ResidueSet) -> int:
    """Number of distinct residues mod p among the elements of q."""
    if not q.elems:
        raise EmptySet("card_p of an empty set")
    return len({x % q.p for x in q.elems})


def residue_system_cover(q: Sequence[int], p: int, r: int) -> FactoredIVP:
    """
    prod(T - q_i) / p^delta for a complete residue system q mod p^r.

    delta = 1 + p + ... + p^(r-1); p | h(T) exactly when T = q_i mod p^(r+1).
    """
    require_prime(p)
    if r < 0:
        raise RangeViolation(f"r must be nonnegative, got {r}")
    low = p ** r
    if len(q) != low or len({x % low for x in q}) != low:
        raise NotAResidueSystem(f"{tuple(q)} is not a complete residue system mod {p}^{r}")
    zero_lifts = [x for x in q if x % (low * p) == 0]
    if zero_lifts:
        raise CoversZero(f"{zero_lifts[0]} is 0 mod {p}^{r + 1}")
    delta = (low - 1) // (p - 1)
    return FactoredIVP.checked(tuple(q), p, delta)


def alon_cover(q_prime: ResidueSet) -> FactoredIVP:
    """
    prod over q not in Q' of (T - q), divided by p^delta with
    delta = sum_{r<d} (p^r - 1); p | h(T) exactly when T mod p^d is outside Q'.
    """
    p, d = q_prime.p, q_prime.d
    if 0 not in q_prime.elems:
        raise ZeroMissing(f"{q_prime} does not contain 0")
    if len({x % p for x in q_prime.elems}) != len(q_prime):
        raise NotDistinctModP(f"{q_prime} has two elements congruent mod {p}")
    roots = sorted(q_prime.complement().elems)
    delta = sum(p ** r - 1 for r in range(d))
    return FactoredIVP.checked(tuple(roots), p, delta)


def build_kappa_covering(b: ResidueSet) -> CoveringFamily:
    """
    A family covering B with total degree kappa(B).

    At each level the k elements divisible by p^(r-1) each get a residue
    system polynomial whose class-0 lift is that element and whose other lifts
    are the t-th unused occurrences of B in each class (the class
    representative itself once B runs out). The residues left uncovered are
    exactly those occurring more than k times, handled one level down.
    """
    if 0 in b.elems:
        raise ZeroInSet(f"0 is in {b}; no p-unit at 0 can cover it")

    p = b.p
    polys: List[FactoredIVP] = []
    for level in kappa_levels(b):
        low = p ** level.r
        by_class = defaultdict(list)
        for x in level.level_set:
            by_class[x % low].append(x)
        for t, anchor in enumerate(by_class.get(0, [])):
            system = [anchor]
            for c in range(1, low):
                occurrences = by_class.get(c, [])
                system.append(occurrences[t] if t < len(occurrences) else c)
            polys.append(residue_system_cover(system, p, level.r))

    family = CoveringFamily(p, b.d, tuple(polys))
    logger.debug(f"kappa covering of {b}: {len(family)} polynomials, degree {family.total_degree}")
    return family


def covers(family: CoveringFamily, b: ResidueSet) -> bool:
    """Every canonical b has some h in the family with p | h(b)."""
    if (family.p, family.d) != (b.p, b.d):
        raise RangeViolation(f"family is mod {family.p}^{family.d}, set is mod {b.p}^{b.d}")
    return all(any(evaluate(h, x) % b.p == 0 for h in family.polys) for x in b.elems)


def covered_set(h: Poly, p: int, d: int) -> ResidueSet:
    """Canonical residues T in [0, p^d) with p | h(T)."""
    return ResidueSet(p, d, frozenset(t for t in range(p ** d) if evaluate(h, t) % p == 0))


def modp_covering(q: ResidueSet) -> CoveringFamily:
    """The d = 1 family {T - q : q not in Q}; its price is |F_p minus Q|."""
    if q.d != 1:
        raise RangeViolation("the linear covering only applies modulo a prime")
    if 0 not in q.elems:
        raise ZeroMissing(f"{q} does not contain 0")
    polys = tuple(FactoredIVP((c,), q.p, 0) for c in q.complement().sorted())
    return CoveringFamily(q.p, 1, polys)


def alon_bound(b: ResidueSet) -> int:
    """p^d - card_p of the complement of B."""
    if 0 in b.elems:
        raise ZeroInSet(f"0 is in {b}")
    return b.modulus - card_p(b.complement())


def build_alon_covering(b: ResidueSet) -> CoveringFamily:
    """Single-polynomial covering of degree alon_bound(B)."""
    if 0 in b.elems:
        raise ZeroInSet(f"0 is in {b}")
    if not b.elems:
        return CoveringFamily(b.p, b.d, ())
    smallest = {}
    for x in b.complement().sorted():
        smallest.setdefault(x % b.p, x)
    h = alon_cover(ResidueSet(b.p, b.d, frozenset(smallest.values())))
    return CoveringFamily(b.p, b.d, (h,))


def price_upper_bound(b: ResidueSet) -> int:
    """The better of the kappa and Alon bounds."""
    return min(kappa(b), alon_bound(b))


# --------------------------------------------------------------------------- #
# R-zero sets
# --------------------------------------------------------------------------- #

def digits(c: int, p: int, d: int) -> Tuple[int, ...]:
    """Base-p digits (c^(0), ..., c^(d-1)) of c mod p^d, least significant first."""
    c %= p ** d
    out = []
    for _ in range(d):
        c, digit = divmod(c, p)
        out.append(digit)
    return tuple(out)


def _check_positions(r_set: Iterable[int], d: int) -> Tuple[int, ...]:
    positions = tuple(sorted(set(r_set)))
    if any(not 0 <= r < d for r in positions):
        raise RangeViolation(f"digit positions {positions} are not all in [0, {d})")
    return positions


def sigma(r_set: Iterable[int], p: int) -> int:
    """(p - 1) * sum of p^r over r in R."""
    positions = set(r_set)
    if any(r < 0 for r in positions):
        raise RangeViolation(f"digit positions {sorted(positions)} must be nonnegative")
    return (p - 1) * sum(p ** r for r in positions)


def r_zero_set(r_set: Iterable[int], p: int, d: int) -> ResidueSet:
    """Residues mod p^d whose base-p digits vanish at every position in R."""
    require_prime(p)
    positions = _check_positions(r_set, d)
    members = frozenset(
        c for c in range(p ** d)
        if all((c // p ** r) % p == 0 for r in positions)
    )
    return ResidueSet(p, d, members)
