import networkx as nx
import pytest

from ucclab import ArgumentError
from ucclab.generators import GridSpec, canonical_swap_map
from ucclab.generators import degree_two_neighbor_rare_check, generate
from ucclab.symmetry import is_swap_automorphism


def labels_of(graph, vertices):
    return set(graph.label(v) for v in vertices)


def coordinates(label):
    i, j = label.strip('()').split(',')
    return int(i), int(j)


def product_adjacent(kind, m, n, u, v):
    """Independent adjacency rule of grid, cylinder and torus."""
    (i, j), (k, l) = u, v
    cyclic_i = kind in ('cylinder', 'torus')
    cyclic_j = kind == 'torus'
    di = (i - k) % m if cyclic_i else abs(i - k)
    dj = (j - l) % n if cyclic_j else abs(j - l)
    step_i = di in ((1, m - 1) if cyclic_i else (1,))
    step_j = dj in ((1, n - 1) if cyclic_j else (1,))
    return (step_i and j == l) or (step_j and i == k)


class TestGenerate:

    def test_smallest_grid(self):
        graph = generate(GridSpec('grid', m=2, n=2))
        assert labels_of(graph, graph.x_vertices) == set(['(0,0)', '(1,1)'])
        assert labels_of(graph, graph.y_vertices) == set(['(0,1)', '(1,0)'])
        assert graph.number_of_edges() == 4

    def test_cylinder(self):
        graph = generate(GridSpec('cylinder', m=4, n=2))
        assert len(graph) == 8
        assert all(graph.degree(v) == 3 for v in range(len(graph)))
        assert nx.is_bipartite(graph.to_networkx())

    @pytest.mark.parametrize('kind, m, n', [
        ('grid', 3, 4), ('cylinder', 6, 3), ('torus', 4, 6)])
    def test_edges_follow_adjacency_rule(self, kind, m, n):
        graph = generate(GridSpec(kind, m=m, n=n))
        for u in range(len(graph)):
            for v in range(u + 1, len(graph)):
                expected = product_adjacent(kind, m, n,
                                            coordinates(graph.label(u)),
                                            coordinates(graph.label(v)))
                assert graph.has_edge(u, v) == expected

    def test_classes_by_coordinate_parity(self):
        graph = generate(GridSpec('torus', m=4, n=4))
        for v in graph.x_vertices:
            assert sum(coordinates(graph.label(v))) % 2 == 0
        for v in graph.y_vertices:
            assert sum(coordinates(graph.label(v))) % 2 == 1

    def test_odd_cylinder_refused(self):
        with pytest.raises(ArgumentError) as e:
            GridSpec('cylinder', m=3, n=2)
        assert 'even' in str(e.value)

    @pytest.mark.parametrize('m, n', [(3, 4), (4, 5), (5, 5), (4, 2)])
    def test_torus_refused(self, m, n):
        with pytest.raises(ArgumentError):
            GridSpec('torus', m=m, n=n)

    def test_unknown_kind(self):
        with pytest.raises(ArgumentError):
            GridSpec('petersen', n=10)

    def test_hypercube(self):
        graph = generate(GridSpec('hypercube', d=3))
        assert len(graph) == 8
        assert graph.number_of_edges() == 12
        assert '000' in labels_of(graph, graph.x_vertices)
        assert generate(GridSpec('hypercube', d=1)).number_of_edges() == 1

    def test_crown(self):
        graph = generate(GridSpec('crown', n=3))
        # K_{3,3} minus a perfect matching is a 6-cycle
        assert graph.number_of_edges() == 6
        assert not graph.has_edge(graph.index('u0'), graph.index('v0'))

    def test_moebius(self):
        graph = generate(GridSpec('moebius', n=6))
        assert graph.number_of_edges() == 9
        assert (graph.n_x, graph.n_y) == (3, 3)

    @pytest.mark.parametrize('n', [4, 8, 7])
    def test_moebius_refused(self, n):
        with pytest.raises(ArgumentError):
            GridSpec('moebius', n=n)


class TestCanonicalSwapMap:

    def test_cylinder_row_shift(self):
        spec = GridSpec('cylinder', m=4, n=3)
        f = canonical_swap_map(spec)
        mapping = f.label_map()
        for i in range(4):
            for j in range(3):
                assert mapping['(%d,%d)' % (i, j)] == '(%d,%d)' % ((i + 1) % 4, j)
        assert is_swap_automorphism(f.graph, f)

    def test_torus(self):
        f = canonical_swap_map(GridSpec('torus', m=4, n=4))
        assert f.label_map()['(3,2)'] == '(0,2)'
        assert is_swap_automorphism(f.graph, f)

    def test_grid_reflection(self):
        f = canonical_swap_map(GridSpec('grid', m=2, n=3))
        assert f.label_map()['(0,2)'] == '(1,2)'
        assert is_swap_automorphism(f.graph, f)
        g = canonical_swap_map(GridSpec('grid', m=3, n=4))
        assert g.label_map()['(1,0)'] == '(1,3)'
        assert is_swap_automorphism(g.graph, g)

    def test_odd_grid(self):
        with pytest.raises(ArgumentError):
            canonical_swap_map(GridSpec('grid', m=3, n=3))

    def test_no_map_for_hypercube(self):
        with pytest.raises(ArgumentError):
            canonical_swap_map(GridSpec('hypercube', d=2))


class TestDegreeTwoNeighbors:

    def test_four_cycle(self):
        graph = generate(GridSpec('grid', m=2, n=2))
        report = degree_two_neighbor_rare_check(graph)
        assert len(report.degree_two) == 4
        assert report.holds and not report.vacuous

    def test_corners_of_three_by_three(self):
        graph = generate(GridSpec('grid', m=3, n=3))
        report = degree_two_neighbor_rare_check(graph)
        assert labels_of(graph, report.degree_two) == \
            set(['(0,0)', '(0,2)', '(2,0)', '(2,2)'])
        assert labels_of(graph, report.checked) == \
            set(['(0,1)', '(1,0)', '(1,2)', '(2,1)'])
        # 10 maximal stable sets, each corner neighbor lies in 4 of them
        assert report.holds

    def test_cylinder_is_vacuous(self):
        report = degree_two_neighbor_rare_check(
            generate(GridSpec('cylinder', m=4, n=2)))
        assert report.vacuous and report.holds
