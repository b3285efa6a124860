"""Discrete shadows of the varieties behind the diagram combinatorics.

Only dimension formulas and kernel/rank bookkeeping are modelled: a stratum
of the tensor-product variety is identified with its lower-match label, and
the nilpotent endomorphism it parametrizes is read off combinatorially --
restricted to the first i boxes, its rank is the number of arcs closed there
and its kernel takes up the rest.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass

from .bracketing import BracketTree, _check_level, satisfies_truncation
from .diagrams import (
    BoxConfig,
    LowerMatch,
    arc_census,
    canonical_key,
    enumerate_lcm,
)


def _check_dims(*values) -> tuple[int, ...]:
    out = []
    for v in values:
        v = operator.index(v)
        if v < 0:
            raise ValueError(f"dimensions must be nonnegative, got {v}")
        out.append(v)
    return tuple(out)


def dim_m(v, w) -> int:
    """Dimension 2v(w-v) of the pair variety over the Grassmannian Gr(v, w)."""
    v, w = _check_dims(v, w)
    if v > w:
        raise ValueError(f"need v <= w, got v={v}, w={w}")
    return 2 * v * (w - v)


def dim_z(v1, v2, w) -> int:
    """Dimension v1(w-v1) + v2(w-v2) of the triple variety."""
    v1, v2, w = _check_dims(v1, v2, w)
    if v1 > w or v2 > w:
        raise ValueError(f"need v1, v2 <= w, got v1={v1}, v2={v2}, w={w}")
    return v1 * (w - v1) + v2 * (w - v2)


def hw_from_rank(w, u) -> int:
    """Highest weight w - 2u carried by the fiber over a rank-u endomorphism."""
    w, u = _check_dims(w, u)
    if 2 * u > w:
        raise ValueError(f"rank {u} too large: 2*{u} > {w} leaves no module")
    return w - 2 * u


@dataclass(frozen=True)
class KernelProfile:
    """Prefix kernel dimensions and ranks of the endomorphism labelled by a match.

    Entry i-1 refers to the restriction to the first i boxes:
    ``dimker[i-1] + rank[i-1] = w1 + ... + wi`` and ``rank`` is the running
    count of arcs closed within the prefix.
    """

    sizes: tuple[int, ...]
    dimker: tuple[int, ...]
    rank: tuple[int, ...]


def kernel_profile(m: LowerMatch) -> KernelProfile:
    census = arc_census(m)
    sizes = m.boxes.sizes
    dimker = []
    prefix = 0
    for i, w in enumerate(sizes):
        prefix += w
        dimker.append(prefix - census.c[i])
    return KernelProfile(sizes=sizes, dimker=tuple(dimker), rank=census.c)


def nl_condition(m: LowerMatch, level) -> bool:
    """The kernel/rank inequalities: dimker_i <= l + rank_{i-1} for all prefixes."""
    level = _check_level(level)
    profile = kernel_profile(m)
    for i in range(len(profile.sizes)):
        bound = level + (profile.rank[i - 1] if i > 0 else 0)
        if profile.dimker[i] > bound:
            return False
    return True


@dataclass(frozen=True)
class ComponentCensus:
    """Component counts of the (truncated) variety, bucketed by highest weight."""

    per_mu: dict
    total_components: int
    total_dim: int
    labels: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "per_mu": {str(k): v for k, v in sorted(self.per_mu.items())},
            "total_components": self.total_components,
            "total_dim": self.total_dim,
            "labels": list(self.labels),
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "ComponentCensus":
        return cls(
            per_mu={int(k): v for k, v in obj["per_mu"].items()},
            total_components=obj["total_components"],
            total_dim=obj["total_dim"],
            labels=tuple(obj["labels"]),
        )


def component_census(boxes, level: int | None = None, tree: BracketTree | None = None) -> ComponentCensus:
    """Census of strata, truncated at ``level`` or untruncated when it is None.

    The truncation uses the left-comb budget by default.  ``total_dim`` adds
    mu+1 per stratum, which is the dimension of the module the census indexes.
    """
    boxes = BoxConfig.coerce(boxes)
    matches = enumerate_lcm(boxes)
    if level is not None:
        level = _check_level(level)
        for w in boxes.sizes:
            if w > level:
                raise ValueError(f"highest weight {w} lies outside the level alcove 0..{level}")
        if tree is None:
            tree = BracketTree.left_comb(boxes.count)
        matches = [m for m in matches if satisfies_truncation(m, level, tree)]
    per_mu: dict[int, int] = {}
    for m in matches:
        per_mu[m.mu] = per_mu.get(m.mu, 0) + 1
    return ComponentCensus(
        per_mu=dict(sorted(per_mu.items())),
        total_components=len(matches),
        total_dim=sum(m.mu + 1 for m in matches),
        labels=tuple(canonical_key(m) for m in matches),
    )
