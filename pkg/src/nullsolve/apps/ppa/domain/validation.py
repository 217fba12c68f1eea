"""Instance checks for general-form polynomials."""
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from nullsolve.apps.configuration import services as config
from nullsolve.apps.ppa.domain.models import GeneralFormPoly, TermTuple
from nullsolve.apps.ppa.domain.pairing import full_occurrences
from nullsolve.core.exceptions import CapExceeded, InvalidInstance, MalformedNode

logger = logging.getLogger(__name__)

BLOCK_DEGREE = "block-degree"
UNPAIRED = "unpaired"
DUPLICATE = "duplicate"
NOT_FULL = "not-full"
NO_LEFTOVER = "no-leftover"
BAD_TUPLE = "bad-tuple"


@dataclass(frozen=True)
class Certificate:
    """Why an instance is rejected: an offending block, or offending occurrences."""

    kind: str
    detail: str
    block: Optional[int] = None
    occurrences: Tuple[TermTuple, ...] = field(default_factory=tuple)

    def __str__(self) -> str:
        return self.detail


@dataclass(frozen=True)
class Validation:
    certificate: Optional[Certificate] = None

    @property
    def ok(self) -> bool:
        return self.certificate is None

    def raise_for_certificate(self) -> None:
        if self.certificate is not None:
            raise InvalidInstance(str(self.certificate), self.certificate)


def _block_sizes_within_cap(inst: GeneralFormPoly) -> None:
    cap = config.get('term_enumeration_cap', 1 << 20)
    for i, block in enumerate(inst.blocks, start=1):
        if inst.block_degree(i) < inst.m:
            continue
        size = 1
        for poly in block:
            size *= len(poly)
        if size > cap:
            raise CapExceeded(f"block {i} has {size} term tuples, the cap is {cap}")


def validate_instance(inst: GeneralFormPoly) -> Validation:
    """
    Check the degree condition of every block and that the full-monomial
    pairing is an involution over exactly the full occurrences with one
    leftover. Failures come back as a certificate, not an exception.
    """
    for i in range(1, inst.k + 1):
        degree = inst.block_degree(i)
        if degree > inst.m:
            return Validation(Certificate(
                BLOCK_DEGREE, f"block {i} has degree {degree} > {inst.m}", block=i
            ))

    listed: List[TermTuple] = [t for pair in inst.full_pairs for t in pair]
    if inst.leftover is not None:
        listed.append(inst.leftover)
    for t in listed:
        try:
            inst.check_tuple(t)
        except MalformedNode as e:
            return Validation(Certificate(BAD_TUPLE, str(e), occurrences=(t,)))

    _block_sizes_within_cap(inst)
    occurrences = full_occurrences(inst)
    occurrence_set = set(occurrences)

    for t in listed:
        if t not in occurrence_set:
            return Validation(Certificate(
                NOT_FULL, f"{t} is not an occurrence of x1...x{inst.m}", occurrences=(t,)
            ))
    for pair in inst.full_pairs:
        if pair[0] == pair[1]:
            return Validation(Certificate(DUPLICATE, f"{pair[0]} is paired with itself", occurrences=pair))
    counts = Counter(listed)
    repeated = sorted(t for t, c in counts.items() if c > 1)
    if repeated:
        return Validation(Certificate(
            DUPLICATE, f"{repeated[0]} appears {counts[repeated[0]]} times in the pairing",
            occurrences=(repeated[0],)
        ))

    unmatched = [t for t in occurrences if t not in counts]
    if inst.leftover is not None:
        unmatched.append(inst.leftover)
    if len(unmatched) >= 2:
        first, second = sorted(unmatched)[:2]
        return Validation(Certificate(
            UNPAIRED, f"occurrences {first} and {second} of x1...x{inst.m} are both unmatched",
            occurrences=(first, second)
        ))
    if inst.leftover is None:
        return Validation(Certificate(NO_LEFTOVER, "the pairing leaves no full-monomial occurrence unmatched"))

    logger.debug(f"Instance valid: m = {inst.m}, {inst.k} blocks, {len(occurrences)} full occurrences")
    return Validation()
