import random
from pathlib import Path

import pytest

from nullsolve.apps.covering.domain.models import ResidueSet
from nullsolve.apps.nullstellensatz.domain.models import Monomial
from nullsolve.apps.olson.domain.models import OlsonInstance
from nullsolve.apps.olson.domain.olson import kappa_bound
from nullsolve.apps.ppa.application import follow_path, get_path_service
from nullsolve.apps.ppa.application.path_service import path_edge_bound
from nullsolve.apps.ppa.application.reductions import expand_general_form, general_form_from_olson
from nullsolve.apps.ppa.domain.models import LEAF, Edge, GeneralFormPoly, Term, TermTuple, Vector
from nullsolve.apps.ppa.domain.oracle import enumerate_graph
from nullsolve.apps.ppa.domain.pairing import all_terms, incident_edges, is_edge, mate, term_monomial
from nullsolve.apps.ppa.domain.validation import (
    BAD_TUPLE, BLOCK_DEGREE, DUPLICATE, NO_LEFTOVER, NOT_FULL, UNPAIRED, validate_instance
)
from nullsolve.apps.ppa.infrastructure.formats import format_general_form, parse_general_form
from nullsolve.apps.ppa.infrastructure.trace import format_step, replay_trace
from nullsolve.core.exceptions import (
    CapExceeded, InvalidInstance, MalformedNode, NotIncident, ParseError, StepCapExceeded, VerificationFailed
)
from nullsolve.core.instance_files import read_text

X1 = Monomial.of(1)
X2 = Monomial.of(2)
X1X2 = Monomial.of(1, 2)
ONE = Monomial()


def general(m, blocks, leftover, pairs=()):
    return GeneralFormPoly(m, blocks, pairs, leftover)


# f = x1 * (x2 + 1)
WORKED = general(2, (((X1,), (X2, ONE)),), TermTuple(1, (1, 1)))
# f = x1 * x2
PRODUCT = general(2, (((X1,), (X2,)),), TermTuple(1, (1, 1)))
# f = x1
SINGLE = general(1, (((X1,),),), TermTuple(1, (1,)))
# three full occurrences, two of them paired through w
THREE_BLOCKS = general(
    2,
    (((X1,), (X2,)), ((X1X2, X1),), ((X1, ONE), (X2,))),
    TermTuple(3, (1, 1)),
    ((TermTuple(1, (1, 1)), TermTuple(2, (1,))),),
)


def random_olson(rng, m):
    d = rng.choice((1, 2))
    n = rng.choice((1, 2)) if d == 1 else 1
    q = tuple(
        ResidueSet(2, d, frozenset({0} | {x for x in range(1, 2 ** d) if rng.random() < 0.3}))
        for _ in range(n)
    )
    m = max(m, kappa_bound(2, (d,) * n, q) + 1)
    rows = tuple(tuple(rng.randrange(2 ** d) for _ in range(m)) for _ in range(n))
    return OlsonInstance(2, (d,) * n, rows, q, m)


def olson_corpus(count=52):
    rng = random.Random(2)
    return [general_form_from_olson(random_olson(rng, 2 + k % 11))[0] for k in range(count)]


OLSON_CORPUS = olson_corpus()
# every node of these is visited, so m stays small
CORPUS = [WORKED, PRODUCT, SINGLE, THREE_BLOCKS] + [inst for inst in OLSON_CORPUS if inst.m <= 6]
FOLLOW_CORPUS = [WORKED, PRODUCT, SINGLE, THREE_BLOCKS] + [
    pytest.param(inst, marks=pytest.mark.slow) if inst.m > 8 else inst for inst in OLSON_CORPUS
]


def all_nodes(inst):
    return (
        [LEAF]
        + [Term(t) for t in all_terms(inst)]
        + [Vector.from_code(c, inst.m) for c in range(1 << inst.m)]
    )


class TestEdges:
    def test_term_monomial(self):
        assert term_monomial(WORKED, TermTuple(1, (1, 1))) == X1X2
        assert term_monomial(WORKED, TermTuple(1, (1, 2))) == X1

    def test_vector_edges(self):
        assert is_edge(WORKED, Term(TermTuple(1, (1, 1))), Vector((1, 1)))
        assert not is_edge(WORKED, Term(TermTuple(1, (1, 2))), Vector((0, 1)))
        assert is_edge(WORKED, Vector((1, 0)), Term(TermTuple(1, (1, 2))))

    def test_leaf_edges(self):
        assert is_edge(WORKED, Term(TermTuple(1, (1, 1))), LEAF)
        assert not is_edge(WORKED, Term(TermTuple(1, (1, 2))), LEAF)

    def test_same_side_is_never_an_edge(self):
        assert not is_edge(WORKED, Vector((1, 1)), LEAF)

    def test_malformed_nodes(self):
        with pytest.raises(MalformedNode):
            is_edge(WORKED, Term(TermTuple(1, (1, 3))), Vector((1, 1)))
        with pytest.raises(MalformedNode):
            is_edge(WORKED, Term(TermTuple(1, (1, 1))), Vector((1, 1, 0)))


class TestMate:
    def test_zero_factor_pairs_its_monomials(self):
        edge = Edge(TermTuple(1, (1, 1)), Vector((1, 1)))
        assert mate(WORKED, Vector((1, 1)), edge) == Edge(TermTuple(1, (1, 2)), Vector((1, 1)))

    def test_term_flips_smallest_missing_variable(self):
        edge = Edge(TermTuple(1, (1, 2)), Vector((1, 1)))
        assert mate(WORKED, Term(TermTuple(1, (1, 2))), edge) == Edge(TermTuple(1, (1, 2)), Vector((1, 0)))

    def test_full_term_joins_leaf_and_all_ones(self):
        t = TermTuple(1, (1, 1))
        assert mate(WORKED, Term(t), Edge(t, LEAF)) == Edge(t, Vector((1, 1)))
        assert mate(WORKED, Term(t), Edge(t, Vector((1, 1)))) == Edge(t, LEAF)

    def test_unmatched_edges(self):
        assert mate(WORKED, LEAF, Edge(TermTuple(1, (1, 1)), LEAF)) is None
        assert mate(WORKED, Vector((1, 0)), Edge(TermTuple(1, (1, 2)), Vector((1, 0)))) is None

    def test_leaf_follows_the_full_pairing(self):
        edge = Edge(TermTuple(1, (1, 1)), LEAF)
        assert mate(THREE_BLOCKS, LEAF, edge) == Edge(TermTuple(2, (1,)), LEAF)

    def test_not_incident(self):
        with pytest.raises(NotIncident):
            mate(WORKED, Vector((0, 1)), Edge(TermTuple(1, (1, 1)), Vector((0, 1))))
        with pytest.raises(NotIncident):
            mate(WORKED, Vector((1, 1)), Edge(TermTuple(1, (1, 2)), Vector((1, 0))))

    @pytest.mark.parametrize("inst", CORPUS)
    def test_involution_and_leftovers(self, inst):
        census = enumerate_graph(inst)
        for node in all_nodes(inst):
            unmatched = 0
            edges = incident_edges(inst, node)
            incident = set(edges)
            for edge in edges:
                partner = mate(inst, node, edge)
                if partner is None:
                    unmatched += 1
                    continue
                assert partner in incident
                assert mate(inst, node, partner) == edge
            assert unmatched == census.degree(node) % 2, node


class TestEnumerateGraph:
    def test_worked_example(self):
        assert enumerate_graph(WORKED).odd_nodes() == [LEAF, Vector((1, 0))]

    def test_product(self):
        assert enumerate_graph(PRODUCT).odd_nodes() == [LEAF, Vector((1, 1))]

    @pytest.mark.parametrize("inst", CORPUS)
    def test_odd_nodes_are_the_leaf_and_the_nonzero_points(self, inst):
        odd = enumerate_graph(inst).odd_nodes()
        assert len(odd) % 2 == 0
        assert odd[0] == LEAF
        nonzero = [Vector.from_code(c, inst.m) for c in range(1 << inst.m) if inst.value(c)]
        assert [node for node in odd if isinstance(node, Vector)] == nonzero

    def test_cap(self):
        from nullsolve.apps.configuration import services as config

        config.set('graph_oracle_max_vars', 1)
        with pytest.raises(CapExceeded):
            enumerate_graph(WORKED)


class TestValidation:
    def test_worked_example_is_valid(self):
        assert validate_instance(WORKED).ok

    def test_block_degree(self):
        inst = general(2, (((X1X2,), (X1X2,)),), TermTuple(1, (1, 1)))
        certificate = validate_instance(inst).certificate
        assert (certificate.kind, certificate.block) == (BLOCK_DEGREE, 1)

    def test_two_unpaired_occurrences(self):
        inst = general(2, (((X1,), (X2,)), ((X1X2,),)), None)
        certificate = validate_instance(inst).certificate
        assert certificate.kind == UNPAIRED
        assert certificate.occurrences == (TermTuple(1, (1, 1)), TermTuple(2, (1,)))

    def test_pairing_without_leftover(self):
        inst = general(2, (((X1,), (X2,)), ((X1X2,),)), None, ((TermTuple(1, (1, 1)), TermTuple(2, (1,))),))
        assert validate_instance(inst).certificate.kind == NO_LEFTOVER

    def test_leftover_must_be_full(self):
        assert validate_instance(general(2, WORKED.blocks, TermTuple(1, (1, 2)))).certificate.kind == NOT_FULL

    def test_leftover_must_exist(self):
        assert validate_instance(general(2, WORKED.blocks, TermTuple(1, (1, 3)))).certificate.kind == BAD_TUPLE

    def test_self_pair(self):
        t = TermTuple(1, (1, 1))
        inst = general(2, THREE_BLOCKS.blocks, TermTuple(3, (1, 1)), ((t, t),))
        assert validate_instance(inst).certificate.kind == DUPLICATE

    def test_certificate_raises(self):
        inst = general(2, (((X1X2,), (X1X2,)),), TermTuple(1, (1, 1)))
        with pytest.raises(InvalidInstance) as e:
            validate_instance(inst).raise_for_certificate()
        assert e.value.certificate.block == 1


class TestFollowPath:
    def test_worked_example(self):
        result = follow_path(WORKED)
        assert result.s == (1, 0)
        assert result.length == 4
        assert result.render_path() == "w -> (1,1,1) -> (1,1) -> (1,1,2) -> (1,0)"

    def test_single_variable(self):
        result = follow_path(SINGLE)
        assert result.s == (1,)

    def test_invalid_instance(self):
        with pytest.raises(InvalidInstance):
            follow_path(general(2, (((X1X2,), (X1X2,)),), TermTuple(1, (1, 1))))

    def test_step_cap(self):
        with pytest.raises(StepCapExceeded):
            follow_path(WORKED, step_cap=2)

    def test_step_cap_from_configuration(self):
        from nullsolve.apps.configuration import services as config

        config.set('ppa_step_cap', 3)
        with pytest.raises(StepCapExceeded):
            follow_path(WORKED)

    @pytest.mark.parametrize("inst", FOLLOW_CORPUS)
    def test_terminal_vector_is_odd(self, inst):
        result = follow_path(inst, step_cap=path_edge_bound(inst))
        code = Vector(result.s).code
        assert inst.value(code) == 1
        assert expand_general_form(inst).evaluate(code, 2) == 1
        if inst.m <= 6:
            assert enumerate_graph(inst).degree(Vector(result.s)) % 2 == 1

    def test_corpus_size(self):
        assert len(OLSON_CORPUS) >= 50
        assert max(inst.m for inst in OLSON_CORPUS) == 12

    def test_edge_bound_counts_every_edge(self):
        for inst in CORPUS:
            edges = sum(len(incident_edges(inst, Term(t))) for t in all_terms(inst))
            assert edges <= path_edge_bound(inst)


class TestOlsonReduction:
    def test_shape(self):
        inst = OlsonInstance(2, (1,), ((1, 1),), (ResidueSet(2, 1, frozenset({0})),), 2)
        reduced, families = general_form_from_olson(inst)
        assert reduced.k == 2
        assert reduced.leftover == TermTuple(2, (1, 1))
        assert reduced.block(2) == ((X1, ONE), (X2, ONE))
        assert [family.total_degree for family in families] == [1]

    def test_nonzero_points_are_solutions(self):
        inst = OlsonInstance(2, (2,), ((1, 3, 2, 1),), (ResidueSet(2, 2, frozenset({0})),), 4)
        reduced, _ = general_form_from_olson(inst)
        f = expand_general_form(reduced)
        for code in range(1, 16):
            subset = [j for j in range(1, 5) if (code >> (j - 1)) & 1]
            assert (f.evaluate(code, 2) == 1) == inst.is_solution(subset)


class TestTrace:
    def test_worked_trace(self, data_file):
        lines = []
        get_path_service().follow(WORKED, on_step=lambda k, step: lines.append("TRACE " + format_step(k, step)))
        assert lines == read_text(data_file("worked.trace")).splitlines()

    def test_replay(self, data_file):
        assert replay_trace(WORKED, read_text(data_file("worked.trace")).splitlines()) == 4

    def test_tampered_replay(self, data_file):
        lines = read_text(data_file("worked.trace")).splitlines()
        lines[2] = "TRACE 2 v(1,1) via t(1,1,1)-v(1,1) -> t(1,1,1)-v(1,1)"
        with pytest.raises(VerificationFailed):
            replay_trace(WORKED, lines)

    def test_truncated_replay(self, data_file):
        lines = read_text(data_file("worked.trace")).splitlines()[:3]
        with pytest.raises(VerificationFailed):
            replay_trace(WORKED, lines)

    def test_garbage_line(self):
        with pytest.raises(ParseError):
            replay_trace(WORKED, ["TRACE 0 w via nowhere"])


class TestGeneralFormFormat:
    def test_worked_file(self, data_file):
        assert parse_general_form(read_text(data_file("worked.genpoly"))) == WORKED

    def test_round_trip(self):
        assert parse_general_form(format_general_form(THREE_BLOCKS)) == THREE_BLOCKS

    def test_round_trip_of_bundled_file(self, data_file):
        text = Path(data_file("worked.genpoly")).read_text()
        inst = parse_general_form(text)
        assert parse_general_form(format_general_form(inst)) == inst

    def test_variable_out_of_range(self):
        with pytest.raises(ParseError) as e:
            parse_general_form("genpoly 2 1\nblock 2\nx1\nx3\nleftover: 1 1 1\n")
        assert (e.value.line, e.value.column) == (4, 1)

    def test_bad_token_column(self):
        with pytest.raises(ParseError) as e:
            parse_general_form("genpoly 2 1\nblock 1\nx1 + y\nleftover: 1 1\n")
        assert (e.value.line, e.value.column) == (3, 6)

    def test_missing_leftover(self):
        with pytest.raises(ParseError) as e:
            parse_general_form("genpoly 2 1\nblock 1\nx1*x2\n")
        assert e.value.line == 4
