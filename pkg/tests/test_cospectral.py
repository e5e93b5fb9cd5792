from __future__ import annotations

import numpy as np
import pytest

from generators import mirror_pair, random_graph, structured_graph
from glwalk import (
    Adjacency,
    Graph,
    GroupSign,
    HamiltonianSpec,
    InvolutionSearchLimitError,
    LoopPerturbed,
    WalkCountOverflowError,
    closed_walk_counts,
    complete_bipartite,
    cospectrality,
    cycle_graph,
    eigendecompose,
    find_involution_pairing,
    hamiltonian_matrix,
    localization_mass,
    path_graph,
    sign_pattern,
    spectral_projectors,
    verify_involution,
)
from glwalk.cospectral import PROJECTOR_DIAG_TOL, parse_permutation
from oracles import walk_count_oracle


def _adjacency_projectors(g: Graph):
    return spectral_projectors(eigendecompose(g.adjacency_matrix(with_loops=False)))


def test_walk_counts_p3_endpoint() -> None:
    counts = closed_walk_counts(path_graph(3), 0, 6)
    assert counts == walk_count_oracle(path_graph(3), 0, 6)
    assert counts[:3] == [0, 1, 0]  # closed 2-walks equal the degree
    assert counts[3] == 2


def test_walk_counts_p4_interior() -> None:
    assert closed_walk_counts(path_graph(4), 1, 2)[1] == 2


def test_walk_counts_k24() -> None:
    counts = closed_walk_counts(complete_bipartite(2, 4), 0, 4)
    assert counts[3] == 32
    assert counts == walk_count_oracle(complete_bipartite(2, 4), 0, 4)


def test_walk_counts_validation() -> None:
    with pytest.raises(ValueError):
        closed_walk_counts(path_graph(3), 0, 0)
    with pytest.raises(IndexError):
        closed_walk_counts(path_graph(3), 7, 2)


def test_walk_counts_loop_weights_ignored() -> None:
    bare = path_graph(4)
    weighted = Graph(n=4, edges=bare.edges, loop_weights={0: 99.0})
    assert closed_walk_counts(weighted, 0, 8) == closed_walk_counts(bare, 0, 8)


def test_walk_count_overflow_reported() -> None:
    # K_30 counts grow like 29^k; (A^k)_{xx} passes 2^128 before k=90
    n = 30
    dense = Graph(n=n, edges=frozenset((i, j) for i in range(n) for j in range(i + 1, n)))
    with pytest.raises(WalkCountOverflowError) as err:
        closed_walk_counts(dense, 0, 90)
    assert 1 <= err.value.length <= 90


def test_cospectrality_path6_endpoints_infinite() -> None:
    result = cospectrality(path_graph(6), 0, 5)
    assert result.infinite
    assert result.projector_cospectral
    assert result.first_divergence is None


def test_cospectrality_p4_order_one() -> None:
    result = cospectrality(path_graph(4), 0, 1)
    assert result.order == 1
    assert not result.projector_cospectral
    assert result.first_divergence is not None
    assert result.first_divergence.length == 2
    assert (result.first_divergence.count_u, result.first_divergence.count_v) == (1, 2)


def test_cospectrality_k24_part_pair_infinite() -> None:
    assert cospectrality(complete_bipartite(2, 4), 0, 1).infinite


def test_cospectrality_rejects_equal_vertices() -> None:
    with pytest.raises(ValueError):
        cospectrality(path_graph(3), 1, 1)


def test_sign_pattern_p2() -> None:
    # adjacency-model Hamiltonian H = -A: the symmetric eigenvector comes first
    h = hamiltonian_matrix(HamiltonianSpec(Adjacency(), path_graph(2)))
    pattern = sign_pattern(spectral_projectors(eigendecompose(h)), 0, 1)
    assert pattern.signs == (GroupSign.PLUS, GroupSign.MINUS)
    assert pattern.consistent


def test_sign_pattern_p6_endpoints_never_mixed() -> None:
    pattern = sign_pattern(_adjacency_projectors(path_graph(6)), 0, 5)
    assert pattern.consistent
    assert set(pattern.signs) <= {GroupSign.PLUS, GroupSign.MINUS}


def test_sign_pattern_p4_has_mixed_group() -> None:
    pattern = sign_pattern(_adjacency_projectors(path_graph(4)), 0, 1)
    assert GroupSign.MIXED in pattern.signs


def test_sign_pattern_null_group() -> None:
    # one edge plus two isolated vertices: the zero eigenspace never touches
    # the edge pair, so its group classifies as NULL for (0, 1)
    g = Graph(n=4, edges=frozenset({(0, 1)}))
    pattern = sign_pattern(_adjacency_projectors(g), 0, 1)
    assert pattern.signs == (GroupSign.MINUS, GroupSign.NULL, GroupSign.PLUS)


def test_localization_mass_p2() -> None:
    masses = localization_mass(_adjacency_projectors(path_graph(2)), 0, 1)
    assert np.allclose(masses, [1.0, 1.0], atol=1e-12)


def test_localization_mass_concentrates_under_large_loops() -> None:
    spec = HamiltonianSpec(LoopPerturbed(0, 5, -143.0), path_graph(6))
    dec = eigendecompose(hamiltonian_matrix(spec))
    projectors = spectral_projectors(dec)
    masses = localization_mass(projectors, 0, 5)
    eigenvalues = np.array([p.eigenvalue for p in projectors])
    top_two = np.argsort(-np.abs(eigenvalues))[:2]
    assert masses[top_two].sum() >= 2.0 - 0.05


def test_localization_mass_edgeless() -> None:
    projectors = _adjacency_projectors(Graph(n=3))
    masses = localization_mass(projectors, 0, 1)
    assert len(masses) == 1
    assert masses[0] == pytest.approx(2.0, abs=1e-12)


def test_verify_involution() -> None:
    p6 = path_graph(6)
    assert verify_involution(p6, (5, 4, 3, 2, 1, 0))
    assert verify_involution(p6, tuple(range(6)))
    assert not verify_involution(path_graph(3), (1, 2, 0))  # 3-cycle, not an involution
    assert not verify_involution(p6, (1, 0, 2, 3, 4, 5))  # involution but not automorphism
    with pytest.raises(ValueError):
        verify_involution(p6, (0, 0, 1, 2, 3, 4))


def test_find_involution_p6_reversal() -> None:
    assert find_involution_pairing(path_graph(6), 0, 5) == (5, 4, 3, 2, 1, 0)


def test_find_involution_k24_swaps_the_pair() -> None:
    k24 = complete_bipartite(2, 4)
    sigma = find_involution_pairing(k24, 0, 1)
    assert sigma is not None
    assert sigma[0] == 1 and sigma[1] == 0
    assert verify_involution(k24, sigma)


def test_find_involution_p4_none_for_mismatched_orbit() -> None:
    assert find_involution_pairing(path_graph(4), 0, 1) is None


def test_find_involution_capacity_error() -> None:
    with pytest.raises(InvolutionSearchLimitError):
        find_involution_pairing(path_graph(17), 0, 16)


def test_parse_permutation() -> None:
    assert parse_permutation("5,4,3,2,1,0", 6) == (5, 4, 3, 2, 1, 0)
    with pytest.raises(ValueError):
        parse_permutation("0,1", 3)
    with pytest.raises(ValueError):
        parse_permutation("0,0,1", 3)
    with pytest.raises(ValueError):
        parse_permutation("a,b", 2)


def _projector_diagonals_agree(g: Graph, u: int, v: int) -> bool:
    return all(
        abs(p.matrix[u, u] - p.matrix[v, v]) <= PROJECTOR_DIAG_TOL
        for p in _adjacency_projectors(g)
    )


def test_walk_cutoff_agrees_with_projector_witness() -> None:
    graphs = [path_graph(n) for n in range(2, 8)]
    graphs += [cycle_graph(n) for n in range(3, 8)]
    graphs += [complete_bipartite(a, b) for a in (1, 2, 3) for b in (1, 2, 3, 4)]
    rng = np.random.default_rng(71)
    graphs += [random_graph(rng, n_max=10, allow_loops=False) for _ in range(40)]
    for g in graphs:
        for u in range(g.n):
            for v in range(u + 1, g.n):
                assert cospectrality(g, u, v).infinite == _projector_diagonals_agree(g, u, v)


def _per_eigenvector_signs_hold(g: Graph, u: int, v: int) -> bool:
    """Basis-independent form of the per-eigenvector sign property.

    A degeneracy group admits an eigenbasis with psi(u) = +-psi(v) iff its
    projector diagonals at u and v agree; a rank-1 group additionally must
    classify as PLUS, MINUS, or NULL (a single eigenvector has one sign).
    Degenerate groups may mix a plus and a minus direction (cycles do this),
    which the group-level pattern reports as MIXED even though a signed
    eigenbasis still exists.
    """
    projectors = _adjacency_projectors(g)
    pattern = sign_pattern(projectors, u, v)
    for p, sign in zip(projectors, pattern.signs):
        if abs(p.matrix[u, u] - p.matrix[v, v]) > PROJECTOR_DIAG_TOL:
            return False
        if p.rank == 1 and sign is GroupSign.MIXED:
            return False
    return True


def test_involution_implies_infinite_implies_sign_property() -> None:
    rng = np.random.default_rng(73)
    found = 0
    for _ in range(60):
        g = structured_graph(rng, n_max=10) if rng.random() < 0.6 else random_graph(
            rng, n_max=10, allow_loops=False
        )
        if g.n < 2:
            continue
        u, v = mirror_pair(g, rng)
        sigma = find_involution_pairing(g, u, v)
        result = cospectrality(g, u, v)
        if sigma is not None:
            found += 1
            assert verify_involution(g, sigma)
            assert result.infinite
        if result.infinite:
            assert _per_eigenvector_signs_hold(g, u, v)
            # with a simple relevant spectrum the group-level pattern is clean too
            if all(p.rank == 1 for p in _adjacency_projectors(g)):
                assert sign_pattern(_adjacency_projectors(g), u, v).consistent
    assert found >= 10  # the implication chain must not be vacuous


def test_closed_two_walks_equal_degree() -> None:
    rng = np.random.default_rng(79)
    for _ in range(20):
        g = random_graph(rng, n_max=10, allow_loops=False)
        deg = g.degree_vector()
        for x in range(g.n):
            assert closed_walk_counts(g, x, 2)[1] == int(deg[x])


def test_integer_counts_match_float_powers() -> None:
    rng = np.random.default_rng(83)
    for _ in range(15):
        g = random_graph(rng, n_max=8, allow_loops=False)
        a = g.adjacency_matrix(with_loops=False)
        for x in range(g.n):
            counts = closed_walk_counts(g, x, 12)
            power = np.eye(g.n)
            for k in range(1, 13):
                power = power @ a
                assert counts[k - 1] == round(float(power[x, x]))
