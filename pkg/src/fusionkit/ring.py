"""Exact arithmetic in the representation ring of sl2 and its level quotient.

Elements are integer combinations of classes of the simple modules V_k
(highest weight k, dimension k+1), stored sparsely by weight.  The plain
product decomposes V_i (x) V_j = V_|i-j| + V_|i-j|+2 + ... + V_i+j; at level
``l`` the fusion product cuts the same string off at min(i+j, 2l-i-j), and the
level quotient divides out the ideal generated by [V_{l+1}].  Everything is
exact: integer coefficients throughout, rational pivots only inside the
quotient reduction, which always lands back in integers.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from typing import Iterator, Mapping

from .bracketing import BracketTree, _check_level
from .diagrams import _as_weight


class RingElement:
    """An integer linear combination of simple-module classes, keyed by weight."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        data: dict[int, int] = {}
        if coeffs:
            for k, c in coeffs.items():
                k = _as_weight(int(k) if isinstance(k, str) else k)
                c = operator.index(c)
                if c != 0:
                    data[k] = c
        self._coeffs = data

    @classmethod
    def zero(cls) -> "RingElement":
        return cls()

    @classmethod
    def unit(cls) -> "RingElement":
        return cls({0: 1})

    @classmethod
    def simple(cls, k: int) -> "RingElement":
        return cls({k: 1})

    def coeff(self, k: int) -> int:
        return self._coeffs.get(k, 0)

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(sorted(self._coeffs.items()))

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._coeffs.items()))

    def max_weight(self) -> int | None:
        return max(self._coeffs) if self._coeffs else None

    def total_dim(self) -> int:
        return sum(c * (k + 1) for k, c in self._coeffs.items())

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self._coeffs.values())

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, RingElement):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: "RingElement") -> "RingElement":
        if not isinstance(other, RingElement):
            return NotImplemented
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, 0) + c
        return RingElement(out)

    def __neg__(self) -> "RingElement":
        return RingElement({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: "RingElement") -> "RingElement":
        if not isinstance(other, RingElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RingElement):
            return ring_mul(self, other)
        if isinstance(other, int):
            return RingElement({k: c * other for k, c in self._coeffs.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"RingElement({self.coeffs!r})"

    def format_text(self) -> str:
        """Readable sum, e.g. ``"V0 + 2·V2"``; the zero element prints ``"0"``."""
        if not self._coeffs:
            return "0"
        terms = []
        for k, c in self.items():
            terms.append(f"V{k}" if c == 1 else f"{c}·V{k}")
        return " + ".join(terms)

    def to_json_dict(self) -> dict:
        return {"coeffs": {str(k): c for k, c in self.items()}}

    @classmethod
    def from_json_dict(cls, obj: dict) -> "RingElement":
        return cls({int(k): v for k, v in obj["coeffs"].items()})


def tensor_cg(i, j) -> RingElement:
    """Decomposition of V_i (x) V_j: weight string |i-j|, |i-j|+2, ..., i+j."""
    i = _as_weight(i)
    j = _as_weight(j)
    return RingElement({k: 1 for k in range(abs(i - j), i + j + 1, 2)})


def _check_alcove(w: int, level: int) -> None:
    if w > level:
        raise ValueError(f"highest weight {w} lies outside the level alcove 0..{level}")


def fuse_pair(i, j, level) -> RingElement:
    """Level fusion of two simples: the weight string cut at min(i+j, 2l-i-j)."""
    i = _as_weight(i)
    j = _as_weight(j)
    level = _check_level(level)
    _check_alcove(i, level)
    _check_alcove(j, level)
    top = min(i + j, 2 * level - i - j)
    return RingElement({k: 1 for k in range(abs(i - j), top + 1, 2)})


def ring_mul(x: RingElement, y: RingElement) -> RingElement:
    """Bilinear extension of :func:`tensor_cg`; commutative, unit [V_0]."""
    acc: dict[int, int] = {}
    for i, ci in x._coeffs.items():
        for j, cj in y._coeffs.items():
            c = ci * cj
            for k in range(abs(i - j), i + j + 1, 2):
                acc[k] = acc.get(k, 0) + c
    return RingElement(acc)


def _fuse_elements(x: RingElement, y: RingElement, level: int) -> RingElement:
    acc: dict[int, int] = {}
    for i, ci in x._coeffs.items():
        for j, cj in y._coeffs.items():
            c = ci * cj
            top = min(i + j, 2 * level - i - j)
            for k in range(abs(i - j), top + 1, 2):
                acc[k] = acc.get(k, 0) + c
    return RingElement(acc)


def fuse_many(ws, level, tree: BracketTree | None = None) -> RingElement:
    """Fold the pair fusion over a bracketing tree (default: left comb).

    The result does not depend on the tree; that associativity is one of the
    verified properties rather than an assumption of the implementation.
    """
    ws = [_as_weight(w) for w in ws]
    level = _check_level(level)
    for w in ws:
        _check_alcove(w, level)
    if not ws:
        return RingElement.unit()
    if tree is None:
        tree = BracketTree.left_comb(len(ws))
    if tree.num_leaves != len(ws) or tree.lo != 1:
        raise ValueError(
            f"bracketing covers leaves {tree.lo}..{tree.hi} but there are {len(ws)} factors"
        )

    def fold(node: BracketTree) -> RingElement:
        if node.is_leaf:
            return RingElement.simple(ws[node.lo - 1])
        left, right = node.children
        return _fuse_elements(fold(left), fold(right), level)

    return fold(tree)


def quotient_reduce(x: RingElement, level) -> RingElement:
    """Reduce to the canonical representative supported on weights 0..l.

    Works in the span of [V_0]..[V_M] (M the top weight of ``x``), row-reduces
    the ideal slice spanned by [V_{l+1}]·[V_j] for j = 0..M-l-1 with the
    highest weight of each row as the pivot, and eliminates every coordinate
    of ``x`` above l.  The pivots land exactly on weights l+1..M, so the
    representative is unique and the arithmetic, though rational inside the
    elimination, returns integers.
    """
    level = _check_level(level)
    top = x.max_weight()
    if top is None or top <= level:
        return x

    width = top + 1
    gens = [ring_mul(RingElement.simple(level + 1), RingElement.simple(j)) for j in range(top - level)]
    rows = [[Fraction(g.coeff(k)) for k in range(width)] for g in gens]

    # Row reduce, pivoting each row on its highest-weight nonzero column.
    pivots: dict[int, list[Fraction]] = {}
    for row in rows:
        for col in range(width - 1, -1, -1):
            if row[col] == 0:
                continue
            if col in pivots:
                factor = row[col]
                row[:] = [a - factor * b for a, b in zip(row, pivots[col])]
            else:
                inv = Fraction(1) / row[col]
                pivots[col] = [a * inv for a in row]
                break

    vec = [Fraction(x.coeff(k)) for k in range(width)]
    for col in sorted(pivots, reverse=True):
        if vec[col] != 0:
            factor = vec[col]
            vec = [a - factor * b for a, b in zip(vec, pivots[col])]

    out: dict[int, int] = {}
    for k, a in enumerate(vec):
        if a != 0:
            if a.denominator != 1 or k > level:
                raise AssertionError("quotient reduction left a non-integral or high term")
            out[k] = int(a)
    return RingElement(out)


def dim_hom_tensor(ws, mu) -> int:
    """Multiplicity of V_mu in the plain tensor product of the given simples."""
    mu = _as_weight(mu)
    acc = RingElement.unit()
    for w in ws:
        acc = ring_mul(acc, RingElement.simple(_as_weight(w)))
    return acc.coeff(mu)


def dim_hom_fusion(ws, mu, level, tree: BracketTree | None = None) -> int:
    """Multiplicity of V_mu in the level fusion product under ``tree``."""
    mu = _as_weight(mu)
    return fuse_many(ws, level, tree).coeff(mu)


def weight_multiplicities(x: RingElement) -> dict[int, int]:
    """Dimensions of the weight spaces of an effective element.

    Weight k appears once in each V_mu with mu >= |k| and mu = k (mod 2).
    """
    if not x.is_effective():
        raise ValueError(f"weight census needs nonnegative coefficients, got {x.coeffs}")
    out: dict[int, int] = {}
    for mu, c in x.items():
        for k in range(-mu, mu + 1, 2):
            out[k] = out.get(k, 0) + c
    return dict(sorted(out.items()))
