import numpy as np
import pytest

from gbgc import (
    CoarsenConfig,
    GraphValidationError,
    Partition,
    adaptive_coarsen,
    build_coarse_graph,
    build_projection,
    erdos_renyi,
    laplacian,
)
from gbgc.coarse import superedge_graph


def identity_partition(g):
    return Partition.from_member_groups(g, [[v] for v in range(g.n)])


def test_projection_identity(k3):
    c = build_projection(identity_partition(k3), 3)
    assert c.column_of == [0, 1, 2]
    assert c.ball_sizes() == [1, 1, 1]


def test_projection_one_ball(k3):
    part = Partition.from_member_groups(k3, [[0, 1, 2]])
    c = build_projection(part, 3)
    assert c.column_of == [0, 0, 0]
    assert c.ball_sizes() == [3]
    ind = c.indicator_matrix()
    assert (ind.T @ ind).tolist() == [[3.0]]


def test_projection_barbell(barbell):
    part = adaptive_coarsen(barbell, CoarsenConfig(ablation="no_init"))
    c = build_projection(part, 6)
    assert c.column_of == [0, 0, 0, 1, 1, 1]


def test_projection_size_mismatch(k3):
    part = Partition.from_member_groups(k3, [[0, 1, 2]])
    with pytest.raises(GraphValidationError):
        build_projection(part, 4)


def test_coarse_identity_is_original(k3):
    cg = build_coarse_graph(k3, build_projection(identity_partition(k3), 3))
    assert cg.superedges == list(k3.edges)
    assert np.array_equal(cg.projected_laplacian, laplacian(k3))


def test_coarse_one_ball_k2(k2):
    part = Partition.from_member_groups(k2, [[0, 1]])
    cg = build_coarse_graph(k2, build_projection(part, 2))
    assert cg.supernode_count == 1
    assert cg.superedges == []
    assert cg.projected_laplacian.tolist() == [[0.0]]


def test_coarse_barbell(barbell):
    part = adaptive_coarsen(barbell, CoarsenConfig(ablation="no_init"))
    cg = build_coarse_graph(barbell, build_projection(part, 6))
    assert cg.superedges == [(0, 1)]
    assert cg.projected_laplacian.tolist() == [[1.0, -1.0], [-1.0, 1.0]]


def test_coarse_laplacian_identities_random():
    for seed in range(8):
        g = erdos_renyi(50 + 17 * seed, 4.0, seed=seed)
        part = adaptive_coarsen(g, CoarsenConfig())
        c = build_projection(part, g.n)
        cg = build_coarse_graph(g, c)
        lap = cg.projected_laplacian

        assert np.array_equal(lap, lap.T)
        assert np.all(lap.sum(axis=1) == 0.0)  # exact integer row sums

        degrees = g.degrees
        for a, ball in enumerate(part.balls):
            expected = sum(degrees[v] for v in ball.members) - 2 * ball.internal_edge_count
            assert lap[a, a] == expected

        cross_edges = sum(
            1 for u, v in g.edges if part.assignment[u] != part.assignment[v]
        )
        off_diag_total = -sum(
            lap[a, b] for a in range(cg.supernode_count) for b in range(a + 1, cg.supernode_count)
        )
        assert off_diag_total == cross_edges

        # superedge exists exactly where the off-diagonal entry is nonzero
        for a in range(cg.supernode_count):
            for b in range(a + 1, cg.supernode_count):
                assert ((a, b) in cg.superedges) == (lap[a, b] != 0)

        assert cg.supernode_count < g.n or all(b.size == 1 for b in part.balls)
        assert len(cg.superedges) <= g.edge_count


def test_coarse_matches_dense_congruence(barbell):
    # independent dense path: indicator matrix times Laplacian
    part = adaptive_coarsen(barbell, CoarsenConfig(ablation="no_init"))
    c = build_projection(part, 6)
    cg = build_coarse_graph(barbell, c)
    ind = c.indicator_matrix()
    dense = ind.T @ laplacian(barbell) @ ind
    assert np.allclose(cg.projected_laplacian, dense, atol=0)


def test_superedge_graph(barbell):
    part = adaptive_coarsen(barbell, CoarsenConfig(ablation="no_init"))
    cg = build_coarse_graph(barbell, build_projection(part, 6))
    g2 = superedge_graph(cg)
    assert g2.n == 2 and g2.edges == ((0, 1),)
