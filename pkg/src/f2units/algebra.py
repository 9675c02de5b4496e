"""Arithmetic of the group algebra over the two-element field.

An element is a subset of the group, stored as an integer bitmask: bit i set
means basis element i has coefficient 1. Addition is XOR; multiplication is
convolution through the group table, accelerated by per-generator byte
translation tables cached on the group.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .errors import (
    BadCosetsError,
    BadIndexError,
    GroupMismatchError,
    NoSolutionError,
    NotAUnitError,
    ParseError,
)
from .groups import GroupTable, SubgroupSet


@dataclass(frozen=True)
class AlgebraElement:
    """A sum of group elements with coefficients in the two-element field."""

    group: GroupTable
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask < (1 << self.group.order):
            raise ValueError(f"mask {self.mask:#x} out of range for order {self.group.order}")

    def support(self) -> tuple[int, ...]:
        """Indices of the group elements with coefficient 1."""
        return tuple(i for i in range(self.group.order) if (self.mask >> i) & 1)

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        return ga_add(self, other)

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        return ga_mul(self, other)

    def is_zero(self) -> bool:
        return self.mask == 0

    def is_one(self) -> bool:
        return self.mask == 1

    def __repr__(self) -> str:
        return f"AlgebraElement({self.group.name}, {render_element(self)!r})"


def zero(group: GroupTable) -> AlgebraElement:
    return AlgebraElement(group, 0)


def one(group: GroupTable) -> AlgebraElement:
    return AlgebraElement(group, 1)


def basis(group: GroupTable, i: int) -> AlgebraElement:
    """The group element at index i, viewed in the algebra."""
    if not 0 <= i < group.order:
        raise BadIndexError(f"element index {i} out of range")
    return AlgebraElement(group, 1 << i)


def from_indices(group: GroupTable, ids) -> AlgebraElement:
    m = 0
    for i in ids:
        if not 0 <= i < group.order:
            raise BadIndexError(f"element index {i} out of range")
        m ^= 1 << i
    return AlgebraElement(group, m)


def _same_group(x: AlgebraElement, y: AlgebraElement) -> GroupTable:
    if x.group is not y.group:
        raise GroupMismatchError(
            f"operands live in different groups: {x.group.name} vs {y.group.name}"
        )
    return x.group


def ga_add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(_same_group(x, y), x.mask ^ y.mask)


def _conv_tables(g: GroupTable) -> list[list[list[int]]]:
    """tables[j][c][v]: right-multiplication by basis j of the byte v at chunk c."""
    tabs = g._conv_tables
    if tabs is None:
        n = g.order
        nchunks = (n + 7) // 8
        mul = g.mul
        tabs = []
        for j in range(n):
            chunks = []
            for c in range(nchunks):
                base = c * 8
                width = min(8, n - base)
                arr = [0] * 256
                for v in range(1, 1 << width):
                    low = v & -v
                    arr[v] = arr[v ^ low] ^ (1 << mul[base + low.bit_length() - 1][j])
                chunks.append(arr)
            tabs.append(chunks)
        g._conv_tables = tabs
    return tabs


def ga_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    g = _same_group(x, y)
    tabs = _conv_tables(g)
    acc = 0
    ym = y.mask
    while ym:
        j = (ym & -ym).bit_length() - 1
        ym &= ym - 1
        tj = tabs[j]
        xm = x.mask
        c = 0
        while xm:
            byte = xm & 0xFF
            if byte:
                acc ^= tj[c][byte]
            xm >>= 8
            c += 1
    return AlgebraElement(g, acc)


def augmentation(x: AlgebraElement) -> int:
    """Sum of the coefficients in the two-element field: 0 or 1."""
    return bin(x.mask).count("1") & 1


def ga_involute(sigma, x: AlgebraElement) -> AlgebraElement:
    """Apply an anti-automorphism coefficientwise: the weight at g moves to sigma(g)."""
    if sigma.group is not x.group:
        raise GroupMismatchError("involution defined on a different group")
    perm = sigma.perm
    m = x.mask
    out = 0
    while m:
        i = (m & -m).bit_length() - 1
        m &= m - 1
        out |= 1 << perm[i]
    return AlgebraElement(x.group, out)


def ga_inverse(x: AlgebraElement) -> AlgebraElement:
    """Invert a normalized element by repeated squaring.

    In a 2-group algebra over F2 every augmentation-1 element x satisfies
    x^(2^k) = 1 for some k, so x^(2^k - 1) is the inverse. If the squares
    never reach 1 the element is not a unit (this also flags non-2-groups
    fed in as raw tables).
    """
    if augmentation(x) == 0:
        raise NotAUnitError("augmentation 0: not a unit")
    if x.mask == 1:
        return x
    squares = []
    s = x
    for _ in range(x.group.order + 2):
        squares.append(s)
        s = ga_mul(s, s)
        if s.mask == 1:
            return reduce(ga_mul, squares)
    raise NotAUnitError("repeated squaring never reached 1: not a unit")


def annihilator_solve(target: AlgebraElement, w: AlgebraElement) -> AlgebraElement:
    """Solve w * z = target for z, or raise NoSolutionError.

    Left multiplication by w is a linear map over F2; we Gauss-eliminate its
    columns with lowest-index-first pivoting, so the returned z is canonical
    (free coordinates are zero).
    """
    g = _same_group(target, w)
    n = g.order
    pivots: dict[int, tuple[int, int]] = {}
    for j in range(n):
        col = ga_mul(w, basis(g, j)).mask
        sel = 1 << j
        while col:
            row = (col & -col).bit_length() - 1
            if row in pivots:
                pcol, psel = pivots[row]
                col ^= pcol
                sel ^= psel
            else:
                pivots[row] = (col, sel)
                break
    t = target.mask
    sel = 0
    while t:
        row = (t & -t).bit_length() - 1
        if row not in pivots:
            raise NoSolutionError(
                "target is not in the image of multiplication by w",
                rank=len(pivots),
                augmented_rank=len(pivots) + 1,
            )
        pcol, psel = pivots[row]
        t ^= pcol
        sel ^= psel
    return AlgebraElement(g, sel)


def coset_split(
    x: AlgebraElement, a_sub: SubgroupSet, b: int
) -> tuple[AlgebraElement, AlgebraElement]:
    """Write x = x1 + x2*b with x1, x2 supported on an index-2 subgroup."""
    g = x.group
    if a_sub.group is not g:
        raise GroupMismatchError("subgroup belongs to a different group")
    if 2 * a_sub.order != g.order:
        raise BadIndexError(f"subgroup has index {g.order // a_sub.order}, want 2")
    members = a_sub.member_set()
    if b in members:
        raise BadIndexError("split element lies inside the subgroup")
    binv = g.inv[b]
    x1 = 0
    x2 = 0
    m = x.mask
    while m:
        i = (m & -m).bit_length() - 1
        m &= m - 1
        if i in members:
            x1 |= 1 << i
        else:
            x2 |= 1 << g.mul[i][binv]
    return AlgebraElement(g, x1), AlgebraElement(g, x2)


def quadrant_split(
    x: AlgebraElement, c_sub: SubgroupSet, a: int, b: int
) -> tuple[AlgebraElement, AlgebraElement, AlgebraElement, AlgebraElement]:
    """Write x = x0 + x1*a + x2*b + x3*ab with each part supported on c_sub.

    Requires the four cosets of c_sub by 1, a, b, ab to partition the group.
    """
    g = x.group
    if c_sub.group is not g:
        raise GroupMismatchError("subgroup belongs to a different group")
    members = c_sub.members
    ab = g.mul[a][b]
    reps = (0, a, b, ab)
    seen: dict[int, tuple[int, int]] = {}
    for which, r in enumerate(reps):
        for c in members:
            el = g.mul[c][r]
            if el in seen:
                raise BadCosetsError(f"cosets overlap at element {g.labels[el]}")
            seen[el] = (which, c)
    if len(seen) != g.order:
        raise BadCosetsError("cosets do not cover the group")
    parts = [0, 0, 0, 0]
    m = x.mask
    while m:
        i = (m & -m).bit_length() - 1
        m &= m - 1
        which, c = seen[i]
        parts[which] |= 1 << c
    out = tuple(AlgebraElement(g, p) for p in parts)
    return out[0], out[1], out[2], out[3]


# ---------------------------------------------------------------------------
# text rendering


def render_element(x: AlgebraElement) -> str:
    """Canonical display: labels of the support joined by ' + ', or '0'."""
    if x.mask == 0:
        return "0"
    return " + ".join(x.group.labels[i] for i in x.support())


def parse_element(group: GroupTable, text: str) -> AlgebraElement:
    """Inverse of render_element; accepts any order and repeated terms (which cancel)."""
    s = text.strip()
    if s == "0":
        return zero(group)
    index = {lab: i for i, lab in enumerate(group.labels)}
    m = 0
    for term in s.split("+"):
        lab = term.strip()
        if lab not in index:
            raise ParseError(f"unknown element label {lab!r} for group {group.name}")
        m ^= 1 << index[lab]
    return AlgebraElement(group, m)
