"""Dimension formulas, kernel profiles, and the stratum census."""

from __future__ import annotations

import itertools

import pytest

from fusionkit.bracketing import BracketTree, satisfies_truncation
from fusionkit.diagrams import LowerMatch, enumerate_lcm
from fusionkit.geometry import (
    ComponentCensus,
    component_census,
    dim_m,
    dim_z,
    hw_from_rank,
    kernel_profile,
    nl_condition,
)
from fusionkit.ring import fuse_many, weight_multiplicities


# ----------------------------------------------------------- dimension formulas


def test_dim_m_examples():
    assert dim_m(1, 2) == 2
    assert dim_m(0, 7) == 0
    assert dim_m(3, 3) == 0


def test_dim_m_errors():
    with pytest.raises(ValueError):
        dim_m(3, 2)
    with pytest.raises(ValueError):
        dim_m(-1, 2)


def test_dim_z_examples():
    assert dim_z(1, 1, 2) == 2
    assert dim_z(0, 0, 9) == 0
    with pytest.raises(ValueError):
        dim_z(3, 1, 2)


def test_dim_formulas_sweep():
    for w in range(21):
        for v in range(w + 1):
            assert dim_m(v, w) == 2 * v * (w - v)
            assert dim_m(v, w) == dim_m(w - v, w)
            assert dim_z(v, v, w) == dim_m(v, w)
        for v1 in range(w + 1):
            for v2 in range(w + 1):
                assert dim_z(v1, v2, w) == v1 * (w - v1) + v2 * (w - v2)


def test_hw_from_rank():
    assert hw_from_rank(4, 1) == 2
    assert hw_from_rank(5, 0) == 5
    with pytest.raises(ValueError):
        hw_from_rank(3, 2)


# -------------------------------------------------------------- kernel profiles


def test_kernel_profile_examples():
    profile = kernel_profile(LowerMatch((1, 1, 1), ((2, 3),)))
    assert profile.dimker == (1, 2, 2)
    assert profile.rank == (0, 0, 1)

    empty = kernel_profile(LowerMatch((2, 3), ()))
    assert empty.dimker == (2, 5)
    assert empty.rank == (0, 0)

    for n in range(1, 4):
        full = LowerMatch((n, n), tuple((i, 2 * n + 1 - i) for i in range(1, n + 1)))
        profile = kernel_profile(full)
        assert profile.dimker == (n, n)
        assert profile.rank == (0, n)


def test_kernel_profile_invariants():
    for ws in [(2, 2), (1, 2, 1), (2, 1, 2, 1)]:
        prefix = list(itertools.accumulate(ws))
        for m in enumerate_lcm(ws):
            profile = kernel_profile(m)
            for i in range(len(ws)):
                assert profile.dimker[i] + profile.rank[i] == prefix[i]
            assert all(a <= b for a, b in zip(profile.rank, profile.rank[1:]))


# ------------------------------------------------------- kernel/rank inequality


def test_nl_condition_examples():
    assert nl_condition(LowerMatch((1, 1), ((1, 2),)), 1) is True
    assert nl_condition(LowerMatch((1, 1), ()), 1) is False
    assert nl_condition(LowerMatch((1, 1, 1), ((2, 3),)), 1) is False


def test_nl_condition_equals_left_comb_budget():
    # For a single box the budget has no operations to constrain, while the
    # kernel inequality still enforces w1 <= l; the predicates agree wherever
    # the factors fit the level, and for r >= 2 at every level.
    for r in range(1, 5):
        for ws in itertools.product(range(1, 4), repeat=r):
            tree = BracketTree.left_comb(r)
            for m in enumerate_lcm(ws):
                for level in range(max(ws) if r == 1 else 1, 6):
                    assert nl_condition(m, level) == satisfies_truncation(m, level, tree), (
                        ws,
                        m.arcs,
                        level,
                    )


def test_nl_condition_single_box_enforces_alcove():
    assert nl_condition(LowerMatch((2,), ()), 1) is False
    assert nl_condition(LowerMatch((2,), ()), 2) is True


# ----------------------------------------------------------------------- census


def test_component_census_examples():
    truncated = component_census((1, 1), 1)
    assert truncated.per_mu == {0: 1}
    assert truncated.total_dim == 1
    assert truncated.total_components == 1

    full = component_census((1, 1), None)
    assert full.per_mu == {0: 1, 2: 1}
    assert full.total_dim == 4

    assert component_census((2, 2), 2).total_dim == 1


def test_component_census_labels_in_canonical_order():
    census = component_census((2, 2), None)
    assert census.labels == ("2,2|", "2,2|1-4,2-3", "2,2|2-3")


def test_component_census_rejects_weights_above_level():
    with pytest.raises(ValueError, match="alcove"):
        component_census((3, 1), 2)


def test_component_census_matches_fusion_dimension():
    for ws in [(1, 1), (2, 2), (2, 1, 2), (1, 1, 1, 1)]:
        for level in range(max(ws), 6):
            census = component_census(ws, level)
            fused = fuse_many(ws, level)
            assert census.per_mu == fused.coeffs, (ws, level)
            assert census.total_dim == fused.total_dim()

            oriented: dict[int, int] = {}
            for label_mu, count in census.per_mu.items():
                for k in range(-label_mu, label_mu + 1, 2):
                    oriented[k] = oriented.get(k, 0) + count
            assert oriented == weight_multiplicities(fused)


def test_untruncated_census_dimension_is_product():
    for r in range(1, 5):
        for ws in itertools.product(range(1, 4), repeat=r):
            expected = 1
            for w in ws:
                expected *= w + 1
            assert component_census(ws, None).total_dim == expected, ws


def test_pair_highest_weight_window():
    for w1, w2 in itertools.product(range(1, 5), repeat=2):
        for level in range(max(w1, w2), 7):
            census = component_census((w1, w2), level)
            for mu in range(w1 + w2 + 1):
                inside = (
                    abs(w1 - w2) <= mu <= min(w1 + w2, 2 * level - w1 - w2)
                    and (mu + w1 + w2) % 2 == 0
                )
                assert census.per_mu.get(mu, 0) == (1 if inside else 0), (w1, w2, level, mu)


def test_component_census_json_roundtrip():
    census = component_census((2, 1, 2), 3)
    assert ComponentCensus.from_json_dict(census.to_json_dict()) == census
