"""Generator matrices on oriented-match bases and their module structure."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from fusionkit.diagrams import canonical_key
from fusionkit.module_action import (
    ActionMatrices,
    action_matrices,
    build_basis,
    isotypic_census,
    verify_sl2,
)
from fusionkit.ring import fuse_many, weight_multiplicities


def test_build_basis_examples():
    assert build_basis((1, 1), 1).dim == 1
    assert build_basis((1, 1), 2).dim == 4
    for w in range(4):
        assert build_basis((w,), max(w, 1)).dim == w + 1


def test_build_basis_rejects_weights_above_level():
    with pytest.raises(ValueError, match="alcove"):
        build_basis((3,), 2)


def test_basis_order_groups_matches_with_ascending_downs():
    basis = build_basis((1, 1), 2)
    keys = [(canonical_key(o.base), o.downs) for o in basis.elements]
    assert keys == [("1,1|", 0), ("1,1|", 1), ("1,1|", 2), ("1,1|1-2", 0)]
    assert basis.blocks() == [(0, 3), (3, 4)]


def test_action_matrix_entries_on_a_weight_two_block():
    basis = build_basis((1, 1), 2)
    mats = action_matrices(basis)
    # block of the arcless match: a0, a1, a2 with H = diag(2, 0, -2)
    assert np.array_equal(np.diag(mats.h)[:3], [2, 0, -2])
    assert mats.f[1, 0] == 1 and mats.f[2, 1] == 1
    assert mats.e[0, 1] == 2 and mats.e[1, 2] == 2
    # E a1 = 2 a0
    vec = np.zeros(4, dtype=np.int64)
    vec[1] = 1
    assert np.array_equal(mats.e @ vec, np.array([2, 0, 0, 0]))
    # the single-arc block is the trivial module
    assert mats.e[3, 3] == mats.f[3, 3] == mats.h[3, 3] == 0


def test_matrices_are_block_diagonal():
    basis = build_basis((2, 1, 1), 3)
    mats = action_matrices(basis)
    blocks = basis.blocks()
    mask = np.zeros((basis.dim, basis.dim), dtype=bool)
    for start, stop in blocks:
        mask[start:stop, start:stop] = True
    for mat in (mats.e, mats.f, mats.h):
        assert not np.any(mat[~mask])


def test_highest_weight_vectors_have_block_weight():
    basis = build_basis((2, 2), 3)
    mats = action_matrices(basis)
    for start, _ in basis.blocks():
        assert mats.h[start, start] == basis.elements[start].base.mu
    for start, stop in basis.blocks():
        assert int(np.trace(mats.h[start:stop, start:stop])) == 0


def test_verify_sl2_accepts_built_matrices():
    for ws, level in [((1, 1), 1), ((1, 1), 2), ((2, 2), 2), ((2, 1, 2), 3)]:
        assert verify_sl2(action_matrices(build_basis(ws, level)))


def test_verify_sl2_detects_corruption():
    mats = action_matrices(build_basis((1, 1), 2))
    mats.e[0, 1] += 1
    assert verify_sl2(mats) is False


def test_isotypic_census_examples():
    assert isotypic_census(build_basis((1, 1), 1)) == {0: 1}
    assert isotypic_census(build_basis((1, 1), 2)) == {0: 1, 2: 1}
    assert isotypic_census(build_basis((1, 1, 1), 1)) == {1: 1}


def test_module_structure_matches_fusion_product():
    for r in range(1, 4):
        for ws in itertools.product(range(1, 4), repeat=r):
            for level in range(max(ws), 6):
                basis = build_basis(ws, level)
                fused = fuse_many(ws, level)
                assert isotypic_census(basis) == fused.coeffs, (ws, level)
                assert basis.dim == fused.total_dim(), (ws, level)

                census: dict[int, int] = {}
                for o in basis.elements:
                    census[o.weight] = census.get(o.weight, 0) + 1
                assert census == weight_multiplicities(fused), (ws, level)

                assert verify_sl2(action_matrices(basis)), (ws, level)


def test_action_matrices_json_roundtrip():
    mats = action_matrices(build_basis((2, 1), 3))
    assert ActionMatrices.from_json_dict(mats.to_json_dict()) == mats
    triples = mats.to_json_dict()["e"]
    assert triples == sorted(triples)
