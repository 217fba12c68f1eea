"""
Acceptance checks.

Every check takes a seeded ``random.Random`` and returns a short summary, or
raises VerificationFailed. Trial counts follow the acceptance criteria, so a
full run takes a few minutes; ``--only`` picks single checks.
"""
import logging
import random
import time
from dataclasses import dataclass
from itertools import chain, combinations
from typing import Callable, List, Optional, Sequence

import numpy as np

from nullsolve.apps.covering.domain.covering import (
    build_kappa_covering, covered_set, covers, kappa, r_zero_set, residue_system_cover, sigma
)
from nullsolve.apps.covering.domain.ivpoly import IVPoly, eval_binomial, is_unit_at_zero
from nullsolve.apps.covering.domain.models import ResidueSet
from nullsolve.apps.graphs.application import divisible_subgraph
from nullsolve.apps.graphs.domain.graphs import has_divisible_subgraph, is_divisible_subgraph, simple_graphs, threshold
from nullsolve.apps.graphs.domain.models import Graph
from nullsolve.apps.nullstellensatz.domain.lift import psi_h, solve_explicit_cn
from nullsolve.apps.nullstellensatz.domain.models import IntMultiPoly, Monomial, UnitSumPoly, bits_to_code, full_mask
from nullsolve.apps.olson.application import solve_olson
from nullsolve.apps.olson.domain.models import OlsonInstance, subset_from_bits
from nullsolve.apps.olson.domain.olson import extremal_sequence, kappa_bound
from nullsolve.apps.olson.domain.oracle import F_exact
from nullsolve.apps.ppa.application.path_service import get_path_service, path_edge_bound
from nullsolve.apps.ppa.application.reductions import general_form_from_olson
from nullsolve.apps.ppa.domain.models import LEAF, GeneralFormPoly, Term, TermTuple, Vector
from nullsolve.apps.ppa.domain.oracle import enumerate_graph
from nullsolve.apps.ppa.domain.pairing import all_terms, incident_edges, mate
from nullsolve.core.exceptions import NoSolution, NullsolveError, VerificationFailed

logger = logging.getLogger(__name__)

KAPPA_EXAMPLE = (1, 2, 5, 6, 12, 20, 40, 42, 50, 51, 52, 56, 69, 70, 87, 95, 100, 101, 102, 112)

WORKED_EXAMPLE = GeneralFormPoly(
    2,
    (((Monomial.of(1),), (Monomial.of(2), Monomial())),),
    (),
    TermTuple(1, (1, 1)),
)
WORKED_PATH = "w -> (1,1,1) -> (1,1) -> (1,1,2) -> (1,0)"


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise VerificationFailed(message)


def _subsets(items: Sequence[int]):
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


def check_kappa_example(rng: random.Random) -> str:
    value = kappa(ResidueSet(5, 3, frozenset(KAPPA_EXAMPLE)))
    _require(value == 56, f"kappa of the example set is {value}, expected 56")
    return "kappa = 56"


def check_lift_identity(rng: random.Random, trials: int = 1000) -> str:
    for _ in range(trials):
        m = rng.randint(1, 10)
        terms = tuple(
            Monomial.of(*rng.sample(range(1, m + 1), rng.randint(0, m)))
            for _ in range(rng.randint(0, 12))
        )
        f = UnitSumPoly(m, terms)
        h = IVPoly(tuple(rng.randint(-5, 5) for _ in range(rng.randint(1, 6))))
        codes = np.arange(1 << m, dtype=np.int64)
        table = np.array([eval_binomial(h, v) for v in range(len(f) + 1)], dtype=np.int64)
        expected = table[f.evaluate_batch(codes, len(f) + 1)]
        wrong = np.flatnonzero(psi_h(f, h).evaluate_batch(codes) != expected)
        _require(not wrong.size, f"Psi^h(f) differs from h(f) at code {wrong[:1]} for f = {f}, h = {h}")
    return f"{trials} random (f, h) pairs"


def check_cover_patterns(rng: random.Random) -> str:
    count = 0
    for p in (2, 3):
        for r in range(0, 3):
            low = p ** r
            system = [low] + list(range(1, low))
            h = residue_system_cover(system, p, r)
            expected = {x % (low * p) for x in system}
            hit = covered_set(h, p, r + 1)
            _require(set(hit.elems) == expected, f"residue-system cover {h} hits {hit}, expected {sorted(expected)}")
            _require(is_unit_at_zero(h, p), f"{h} vanishes mod {p} at 0")
            count += 1
    return f"{count} residue-system covers"


def check_kappa_coverings(rng: random.Random) -> str:
    count = 0
    for p, d in ((2, 2), (2, 3), (3, 2)):
        nonzero = range(1, p ** d)
        for chosen in _subsets(nonzero):
            b = ResidueSet(p, d, frozenset(chosen))
            family = build_kappa_covering(b)
            _require(covers(family, b), f"kappa covering misses part of {b}")
            _require(family.total_degree == kappa(b), f"kappa covering of {b} has the wrong degree")
            count += 1
    return f"{count} sets covered at degree kappa"


def check_olson_closed_forms(rng: random.Random) -> str:
    for p, d in ((2, 1), (3, 1), (2, 2)):
        value = F_exact(p, (d,), (ResidueSet(p, d, frozenset({0})),))
        _require(value == p ** d - 1, f"F({p}^{d}) = {value}, expected {p ** d - 1}")
    settings = 0
    for positions in _subsets(range(2)):
        q = r_zero_set(positions, 2, 2)
        value = F_exact(2, (2,), (q,))
        _require(value == sigma(positions, 2), f"F for R = {positions} is {value}, expected {sigma(positions, 2)}")
        inst = extremal_sequence([set(positions)], 2, (2,))
        try:
            subset = solve_olson(inst)
        except NoSolution:
            settings += 1
            continue
        raise VerificationFailed(f"extremal instance for R = {positions} has solution {subset}")
    return f"Olson values and {settings} R-zero settings"


def _random_target(rng: random.Random, p: int, d: int) -> ResidueSet:
    others = [x for x in range(1, p ** d) if rng.random() < 0.4]
    return ResidueSet(p, d, frozenset([0] + others))


UPPER_BOUND_SETTINGS = (
    (2, (1,)), (2, (2,)), (2, (3,)), (3, (1,)), (3, (2,)),
    (2, (1, 1)), (2, (1, 2)), (2, (2, 3)), (3, (1, 1)), (3, (1, 2)),
)


def check_upper_bound(rng: random.Random, trials: int = 200) -> str:
    count = 0
    for p, d in UPPER_BOUND_SETTINGS:
        for _ in range(trials):
            q = tuple(_random_target(rng, p, di) for di in d)
            m = kappa_bound(p, d, q) + 1
            rows = tuple(tuple(rng.randrange(p ** di) for _ in range(m)) for di in d)
            inst = OlsonInstance(p, d, rows, q, m)
            subset = solve_olson(inst)
            _require(inst.is_solution(subset), f"{subset} does not solve {inst}")
            count += 1
    return f"{count} instances above the kappa bound solved"


def check_divisible_threshold(rng: random.Random) -> str:
    for n in range(2, 7):
        bound = threshold(n, 2, 1)
        path = Graph(n, tuple((v, v + 1) for v in range(1, n)))
        _require(path.size == bound and not has_divisible_subgraph(path, 1), f"a path on {n} vertices has a cycle")
        for graph in simple_graphs(n, n):
            _require(has_divisible_subgraph(graph, 1), f"{graph} has {n} edges but no cycle")
    three, four, five = (Graph(2, ((1, 2),) * k) for k in (3, 4, 5))
    _require(not has_divisible_subgraph(three, 2), "3 parallel edges have a 4-divisible subgraph")
    _require(has_divisible_subgraph(four, 2), "4 parallel edges have no 4-divisible subgraph")
    _require(has_divisible_subgraph(five, 2), "5 parallel edges have no 4-divisible subgraph")
    return "f(n, 2) = n - 1 for n <= 6; two vertices need 4 parallel edges mod 4"


def _check_pairing(inst: GeneralFormPoly) -> None:
    census = enumerate_graph(inst)
    odd = census.odd_nodes()
    _require(len(odd) % 2 == 0, f"{len(odd)} odd-degree nodes")
    nodes = [LEAF] + [Term(t) for t in all_terms(inst)] + [Vector.from_code(c, inst.m) for c in range(1 << inst.m)]
    for node in nodes:
        unmatched = 0
        for edge in incident_edges(inst, node):
            partner = mate(inst, node, edge)
            if partner is None:
                unmatched += 1
            else:
                _require(mate(inst, node, partner) == edge, f"mate is not an involution at {node}")
        _require(unmatched == census.degree(node) % 2, f"{node} has {unmatched} unmatched edges")
    result = get_path_service().follow(inst, step_cap=path_edge_bound(inst))
    _require(census.degree(Vector(result.s)) % 2 == 1, f"path ended at even vector {result.s}")


def _random_olson(rng: random.Random, m: int) -> OlsonInstance:
    d = rng.choice((1, 2))
    n = rng.choice((1, 2)) if d == 1 else 1
    q = tuple(_random_target(rng, 2, d) for _ in range(n))
    m = max(m, kappa_bound(2, (d,) * n, q) + 1)
    rows = tuple(tuple(rng.randrange(2 ** d) for _ in range(m)) for _ in range(n))
    return OlsonInstance(2, (d,) * n, rows, q, m)


def check_path_following(rng: random.Random, trials: int = 50) -> str:
    result = get_path_service().follow(WORKED_EXAMPLE)
    _require(result.render_path() == WORKED_PATH, f"worked example path is {result.render_path()}")
    _check_pairing(WORKED_EXAMPLE)
    for k in range(trials):
        inst = _random_olson(rng, 2 + k % 11)
        general, _ = general_form_from_olson(inst)
        if general.m <= 6:
            _check_pairing(general)
            continue
        result = get_path_service().follow(general, step_cap=path_edge_bound(general))
        _require(general.value(bits_to_code(result.s)) == 1, f"path ended at a zero {result.s} of m = {general.m}")
        _require(inst.is_solution(subset_from_bits(result.s)), f"{result.s} does not solve {inst}")
    return f"{trials + 1} instances followed, m up to 12"


def check_explicit_solver(rng: random.Random, trials: int = 500) -> str:
    for _ in range(trials):
        m = rng.randint(1, 16)
        coeffs = {rng.randrange(1 << m): 1 for _ in range(rng.randint(0, 20))}
        coeffs[full_mask(m)] = 1
        f = IntMultiPoly(m, coeffs)
        s = solve_explicit_cn(f, m)
        _require(f.evaluate(bits_to_code(s), 2) == 1, f"explicit solver returned a zero of {f}")
    return f"{trials} explicit polynomials"


def check_end_to_end(rng: random.Random, trials: int = 50) -> str:
    for k in range(trials):
        d = 1 + k % 2
        n = rng.randint(2, 4) if d == 1 else rng.randint(2, 3)
        size = threshold(n, 2, d) + 1
        graph = Graph(n, tuple(tuple(rng.sample(range(1, n + 1), 2)) for _ in range(size)))
        for engine in ("ppa", "brute"):
            subset = divisible_subgraph(graph, d, engine)
            _require(is_divisible_subgraph(graph, subset, 2 ** d), f"{engine} returned {subset} on {graph}")
    return f"{trials} graphs through the ppa reduction, 2^d in (2, 4)"


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


CHECKS: List[Callable[[random.Random], str]] = [
    check_kappa_example,
    check_lift_identity,
    check_cover_patterns,
    check_kappa_coverings,
    check_olson_closed_forms,
    check_upper_bound,
    check_divisible_threshold,
    check_path_following,
    check_explicit_solver,
    check_end_to_end,
]


def run_checks(seed: int = 0, only: Optional[Sequence[str]] = None) -> List[CheckResult]:
    results = []
    for check in CHECKS:
        name = check.__name__[len("check_"):]
        if only and name not in only:
            continue
        start = time.monotonic()
        try:
            detail = check(random.Random(seed))
            results.append(CheckResult(name, True, detail))
        except NullsolveError as e:
            logger.error(f"Check {name} failed: {e}", exc_info=True)
            results.append(CheckResult(name, False, str(e)))
        logger.info(f"Check {name} took {time.monotonic() - start:.2f}s")
    return results
