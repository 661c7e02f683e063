import pytest

from ucclab import ArgumentError, PreconditionError, ResourceLimitError
from ucclab import VerificationError
from ucclab.generators import GridSpec, canonical_swap_map, generate
from ucclab.graph import BipartiteGraph, StableSetCollection
from ucclab.graph import maximal_stable_sets
from ucclab.symmetry import CLASS_SIZES_DIFFER, DEGREES_DIFFER, EXHAUSTED
from ucclab.symmetry import FOUND, VertexBijection
from ucclab.symmetry import brute_force_swap_automorphisms
from ucclab.symmetry import find_swap_automorphism, is_automorphism
from ucclab.symmetry import is_swap_automorphism, membership_counts_invariant
from ucclab.symmetry import rare_pair_via_swap


def single_edge():
    return BipartiteGraph(['x'], ['y'], [('x', 'y')])


def path():
    return BipartiteGraph(['a', 'c'], ['b', 'd'],
                          [('a', 'b'), ('b', 'c'), ('c', 'd')])


def identity(graph):
    return VertexBijection(graph, range(len(graph)))


def no_swap_graph():
    # a path on five vertices with both ends in Y, next to a path on three
    # vertices with both ends in X: degree multisets agree, no swap exists
    return BipartiteGraph(['a', 'b', 'c', 'd'], ['1', '2', '3', '4'],
                          [('a', '1'), ('a', '3'), ('b', '1'), ('b', '4'),
                           ('c', '2'), ('d', '2')])


# swap witnesses of the families that come without an explicit map
def flip_first_bit(graph):
    return VertexBijection.from_labels(graph, dict(
        (label, str(1 - int(label[0])) + label[1:]) for label in graph.labels))


def crown_exchange(graph):
    return VertexBijection.from_labels(graph, dict(
        (label, {'u': 'v', 'v': 'u'}[label[0]] + label[1:])
        for label in graph.labels))


def rotate_by_one(graph):
    n = len(graph)
    return VertexBijection.from_labels(graph, dict(
        (label, str((int(label) + 1) % n)) for label in graph.labels))


class TestVertexBijection:

    def test_not_a_bijection(self):
        with pytest.raises(ArgumentError):
            VertexBijection(path(), [0, 0, 1, 2])

    def test_wrong_length(self):
        with pytest.raises(ArgumentError):
            VertexBijection(path(), [0, 1, 2])

    def test_from_labels(self):
        f = VertexBijection.from_labels(single_edge(), {'x': 'y', 'y': 'x'})
        assert f.table == (1, 0)
        assert f.label_map() == {'x': 'y', 'y': 'x'}

    def test_partial_label_map(self):
        with pytest.raises(ArgumentError):
            VertexBijection.from_labels(single_edge(), {'x': 'y'})


class TestIsAutomorphism:

    def test_identity(self):
        for graph in (single_edge(), path(), generate(GridSpec('grid', m=3, n=3))):
            assert is_automorphism(graph, identity(graph))

    def test_single_edge_swap(self):
        graph = single_edge()
        f = VertexBijection(graph, [1, 0])
        assert is_automorphism(graph, f)
        assert is_swap_automorphism(graph, f)

    def test_identity_does_not_swap(self):
        graph = single_edge()
        assert not is_swap_automorphism(graph, identity(graph))

    def test_exchanging_a_and_b_breaks_the_path(self):
        graph = path()
        f = VertexBijection.from_labels(
            graph, {'a': 'b', 'b': 'a', 'c': 'c', 'd': 'd'})
        assert not is_automorphism(graph, f)

    def test_cylinder_and_torus_row_shift(self):
        for spec in (GridSpec('cylinder', m=4, n=2), GridSpec('torus', m=4, n=4)):
            graph = generate(spec)
            assert is_swap_automorphism(graph, canonical_swap_map(spec, graph))


class TestFindSwapAutomorphism:

    def test_single_edge(self):
        result = find_swap_automorphism(single_edge())
        assert result.status == FOUND
        assert result.bijection.label_map() == {'x': 'y', 'y': 'x'}

    def test_star(self):
        star = BipartiteGraph(['x'], ['y1', 'y2'], [('x', 'y1'), ('x', 'y2')])
        result = find_swap_automorphism(star)
        assert not result.exists
        assert result.status == CLASS_SIZES_DIFFER

    def test_degree_multisets_differ(self):
        graph = BipartiteGraph(['a', 'b'], ['c', 'd'], [('a', 'c'), ('a', 'd')])
        assert find_swap_automorphism(graph).status == DEGREES_DIFFER

    def test_exhausted(self):
        graph = no_swap_graph()
        result = find_swap_automorphism(graph)
        assert result.status == EXHAUSTED
        assert brute_force_swap_automorphisms(graph) == []

    def test_grid(self):
        graph = generate(GridSpec('grid', m=2, n=3))
        result = find_swap_automorphism(graph)
        assert result.exists
        assert is_swap_automorphism(graph, result.bijection)

    def test_agrees_with_brute_force(self):
        for n in (2, 3):
            for pattern in range(1 << (n * n)):
                edges = [('x%d' % i, 'y%d' % j) for i in range(n)
                         for j in range(n) if (pattern >> (i * n + j)) & 1]
                graph = BipartiteGraph(['x%d' % i for i in range(n)],
                                       ['y%d' % j for j in range(n)], edges)
                result = find_swap_automorphism(graph)
                assert result.exists == bool(brute_force_swap_automorphisms(graph))
                if result.exists:
                    assert is_swap_automorphism(graph, result.bijection)

    def test_budget(self):
        graph = generate(GridSpec('cylinder', m=4, n=2))
        with pytest.raises(ResourceLimitError) as e:
            find_swap_automorphism(graph, budget=1)
        assert e.value.cap_name == 'search_budget'

    @pytest.mark.parametrize('spec, witness', [
        (GridSpec('hypercube', d=3), flip_first_bit),
        (GridSpec('hypercube', d=4), flip_first_bit),
        (GridSpec('crown', n=3), crown_exchange),
        (GridSpec('crown', n=5), crown_exchange),
        (GridSpec('moebius', n=6), rotate_by_one),
        (GridSpec('moebius', n=10), rotate_by_one),
    ])
    def test_families_without_explicit_map(self, spec, witness):
        graph = generate(spec)
        assert is_swap_automorphism(graph, witness(graph))
        result = find_swap_automorphism(graph)
        assert result.exists
        assert is_swap_automorphism(graph, result.bijection)


class TestRarePairViaSwap:

    def test_single_edge(self):
        graph = single_edge()
        assert rare_pair_via_swap(graph, VertexBijection(graph, [1, 0])) == (0, 1)

    @pytest.mark.parametrize('spec', [
        GridSpec('cylinder', m=4, n=2),
        GridSpec('cylinder', m=6, n=3),
        GridSpec('torus', m=4, n=4),
    ])
    def test_canonical_maps(self, spec):
        graph = generate(spec)
        f = canonical_swap_map(spec, graph)
        stable_sets = maximal_stable_sets(graph)
        a, b = rare_pair_via_swap(graph, f, stable_sets=stable_sets)
        assert b == f(a)
        assert 2 * stable_sets.membership_count(a) <= len(stable_sets)
        assert 2 * stable_sets.membership_count(b) <= len(stable_sets)
        assert membership_counts_invariant(graph, f, stable_sets=stable_sets)

    def test_not_a_swap(self):
        graph = single_edge()
        with pytest.raises(PreconditionError):
            rare_pair_via_swap(graph, identity(graph))

    def test_edgeless(self):
        graph = BipartiteGraph(['x'], ['y'], [])
        with pytest.raises(ArgumentError):
            rare_pair_via_swap(graph, VertexBijection(graph, [1, 0]))

    @pytest.mark.parametrize('sets', [[0b01], [0b10]], ids=['x', 'y'])
    def test_inconsistent_counts_are_refused(self, sets):
        # forged collections where no X vertex, or the image, is rare
        graph = single_edge()
        with pytest.raises(VerificationError):
            rare_pair_via_swap(graph, VertexBijection(graph, [1, 0]),
                               stable_sets=StableSetCollection(graph, sets))
