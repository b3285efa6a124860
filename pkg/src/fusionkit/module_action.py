"""The sl2-module carried by the span of truncation-passing oriented matches.

The basis splits into blocks, one per underlying match b: the mu(b)+1
orientations of b span a copy of the irreducible V_mu(b), graded by
weight mu - 2*downs.  Within a block the generators act by the standard
highest-weight normalization

    H a_k = (mu - 2k) a_k,   F a_k = a_{k+1},   E a_k = k(mu - k + 1) a_{k-1},

so E, F, H are block-diagonal integer matrices and (b, downs=0) is the
highest-weight vector of its block.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bracketing import BracketTree, _check_level, satisfies_truncation
from .diagrams import (
    BoxConfig,
    OrientedLowerMatch,
    canonical_key,
    enumerate_lcm,
    orientations,
)


@dataclass(frozen=True)
class ModuleBasis:
    """Ordered basis of oriented matches: canonical match order, then downs."""

    boxes: BoxConfig
    level: int
    tree: BracketTree
    elements: tuple[OrientedLowerMatch, ...]

    @property
    def dim(self) -> int:
        return len(self.elements)

    def blocks(self) -> list[tuple[int, int]]:
        """(start, stop) index ranges of the per-match blocks, in order."""
        out = []
        start = 0
        while start < len(self.elements):
            stop = start + self.elements[start].base.mu + 1
            out.append((start, stop))
            start = stop
        return out


def build_basis(boxes, level, tree: BracketTree | None = None) -> ModuleBasis:
    boxes = BoxConfig.coerce(boxes)
    level = _check_level(level)
    for w in boxes.sizes:
        if w > level:
            raise ValueError(f"highest weight {w} lies outside the level alcove 0..{level}")
    if tree is None:
        tree = BracketTree.left_comb(boxes.count)
    elements: list[OrientedLowerMatch] = []
    for m in enumerate_lcm(boxes):
        if satisfies_truncation(m, level, tree):
            elements.extend(orientations(m))
    return ModuleBasis(boxes=boxes, level=level, tree=tree, elements=tuple(elements))


@dataclass(eq=False)
class ActionMatrices:
    """Integer matrices of E, F, H on a module basis (columns act on kets)."""

    e: np.ndarray
    f: np.ndarray
    h: np.ndarray
    labels: tuple[tuple[str, int], ...]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ActionMatrices):
            return NotImplemented
        return (
            self.labels == other.labels
            and np.array_equal(self.e, other.e)
            and np.array_equal(self.f, other.f)
            and np.array_equal(self.h, other.h)
        )

    def to_json_dict(self) -> dict:
        def triples(mat: np.ndarray) -> list[list[int]]:
            rows, cols = np.nonzero(mat)
            return [[int(r), int(c), int(mat[r, c])] for r, c in zip(rows, cols)]

        return {
            "size": int(self.e.shape[0]),
            "basis": [[key, downs] for key, downs in self.labels],
            "e": triples(self.e),
            "f": triples(self.f),
            "h": triples(self.h),
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "ActionMatrices":
        n = obj["size"]

        def dense(triples) -> np.ndarray:
            mat = np.zeros((n, n), dtype=np.int64)
            for r, c, v in triples:
                mat[r, c] = v
            return mat

        return cls(
            e=dense(obj["e"]),
            f=dense(obj["f"]),
            h=dense(obj["h"]),
            labels=tuple((key, downs) for key, downs in obj["basis"]),
        )


def action_matrices(basis: ModuleBasis) -> ActionMatrices:
    n = basis.dim
    e = np.zeros((n, n), dtype=np.int64)
    f = np.zeros((n, n), dtype=np.int64)
    h = np.zeros((n, n), dtype=np.int64)
    for start, stop in basis.blocks():
        mu = basis.elements[start].base.mu
        for k in range(mu + 1):
            idx = start + k
            h[idx, idx] = mu - 2 * k
            if k < mu:
                f[idx + 1, idx] = 1
            if k > 0:
                e[idx - 1, idx] = k * (mu - k + 1)
    labels = tuple((canonical_key(o.base), o.downs) for o in basis.elements)
    return ActionMatrices(e=e, f=f, h=h, labels=labels)


def isotypic_census(basis: ModuleBasis) -> dict[int, int]:
    """Multiplicity of each highest weight: one copy of V_mu per block."""
    out: dict[int, int] = {}
    for start, _ in basis.blocks():
        mu = basis.elements[start].base.mu
        out[mu] = out.get(mu, 0) + 1
    return dict(sorted(out.items()))


def verify_sl2(matrices: ActionMatrices) -> bool:
    """Exact check of [E,F] = H, [H,E] = 2E, [H,F] = -2F."""
    e, f, h = matrices.e, matrices.f, matrices.h
    return (
        np.array_equal(e @ f - f @ e, h)
        and np.array_equal(h @ e - e @ h, 2 * e)
        and np.array_equal(h @ f - f @ h, -2 * f)
    )
