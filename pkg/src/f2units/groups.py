"""Finite groups as explicit multiplication tables.

Element 0 is always the identity. Constructors emit a documented canonical
element ordering (base-subgroup elements first, then their coset, in
generator-word order) so downstream reports are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import (
    BadSquareElementError,
    GroupAxiomViolationError,
    NoComplementError,
    NotAbelianError,
    NotASubgroupError,
)


class GroupTable:
    """A finite group given by its full multiplication table.

    Attributes:
        order: number of elements.
        mul: tuple of tuples, ``mul[i][j]`` = index of the product.
        inv: tuple of inverse indices.
        labels: display string per element; ``labels[0] == "1"``.
        generators: indices of a generating set.
        family: constructor family name ("cyclic", "dihedral", ...).
        name: short display name ("Q8", "D8xC2", ...).
    """

    def __init__(
        self,
        mul: Sequence[Sequence[int]],
        labels: Sequence[str] | None = None,
        generators: Sequence[int] = (),
        family: str = "table",
        name: str | None = None,
    ):
        table = tuple(tuple(int(x) for x in row) for row in mul)
        inv = _validate_table(table)
        self.order = len(table)
        self.mul = table
        self.inv = inv
        self.labels = tuple(labels) if labels is not None else tuple(
            "1" if i == 0 else f"g{i}" for i in range(self.order)
        )
        if len(self.labels) != self.order:
            raise GroupAxiomViolationError(
                f"{len(self.labels)} labels for order {self.order}"
            )
        self.generators = tuple(int(x) for x in generators)
        self.family = family
        self.name = name or f"G{self.order}"
        self._conv_tables: list[list[list[int]]] | None = None  # lazy, see algebra

    def elements(self) -> range:
        return range(self.order)

    def label(self, i: int) -> str:
        return self.labels[i]

    def is_abelian(self) -> bool:
        n = self.order
        mul = self.mul
        return all(mul[i][j] == mul[j][i] for i in range(n) for j in range(i))

    def is_two_group(self) -> bool:
        return self.order & (self.order - 1) == 0

    def conjugate(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return self.mul[self.mul[g][x]][self.inv[g]]

    def __repr__(self) -> str:
        return f"GroupTable({self.name}, order={self.order})"


def _validate_table(mul: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Check all group axioms exhaustively; return the inverse array."""
    n = len(mul)
    if n == 0:
        raise GroupAxiomViolationError("empty table")
    for i, row in enumerate(mul):
        if len(row) != n:
            raise GroupAxiomViolationError(f"row {i} has length {len(row)}, want {n}")
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise GroupAxiomViolationError(
                    f"entry mul[{i}][{j}] = {v} out of range", witness=(i, j, v)
                )
    for i in range(n):
        if mul[0][i] != i or mul[i][0] != i:
            raise GroupAxiomViolationError(
                f"element 0 is not an identity at {i}", witness=(0, i, mul[0][i])
            )
    inv = []
    for i in range(n):
        found = None
        for j in range(n):
            if mul[i][j] == 0 and mul[j][i] == 0:
                found = j
                break
        if found is None:
            raise GroupAxiomViolationError(f"element {i} has no inverse", witness=(i,))
        inv.append(found)
    for i in range(n):
        for j in range(n):
            ij = mul[i][j]
            for k in range(n):
                if mul[ij][k] != mul[i][mul[j][k]]:
                    raise GroupAxiomViolationError(
                        f"associativity fails at ({i},{j},{k})", witness=(i, j, k)
                    )
    return tuple(inv)


@dataclass(frozen=True)
class SubgroupSet:
    """A subgroup as a sorted tuple of element indices."""

    group: GroupTable
    members: tuple[int, ...]

    @staticmethod
    def from_members(group: GroupTable, members: Iterable[int]) -> SubgroupSet:
        ms = tuple(sorted(set(int(x) for x in members)))
        member_set = set(ms)
        if 0 not in member_set:
            raise NotASubgroupError("member set does not contain the identity")
        for x in ms:
            if group.inv[x] not in member_set:
                raise NotASubgroupError(f"missing inverse of element {x}")
            for y in ms:
                if group.mul[x][y] not in member_set:
                    raise NotASubgroupError(f"not closed: {x}*{y} escapes")
        return SubgroupSet(group, ms)

    @property
    def order(self) -> int:
        return len(self.members)

    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.member_set()

    def is_abelian(self) -> bool:
        mul = self.group.mul
        ms = self.members
        return all(mul[a][b] == mul[b][a] for a in ms for b in ms)

    def labels(self) -> tuple[str, ...]:
        return tuple(self.group.labels[i] for i in self.members)


# ---------------------------------------------------------------------------
# constructors


def make_cyclic(n: int) -> GroupTable:
    """Cyclic group of order n, generator at index 1."""
    if n < 1:
        raise ValueError(f"cyclic order must be >= 1, got {n}")
    mul = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["1"] + ["a" if i == 1 else f"a{i}" for i in range(1, n)]
    gens = [1] if n > 1 else []
    return GroupTable(mul, labels, gens, family="cyclic", name=f"C{n}")


def make_dihedral(n: int) -> GroupTable:
    """Dihedral group of order n (n even, n >= 4): rotations first, then reflections."""
    if n < 4 or n % 2:
        raise ValueError(f"dihedral order must be even and >= 4, got {n}")
    m = n // 2
    mul = [[0] * n for _ in range(n)]
    for i in range(m):
        for j in range(m):
            mul[i][j] = (i + j) % m
            mul[i][m + j] = m + (i + j) % m
            mul[m + i][j] = m + (i - j) % m
            mul[m + i][m + j] = (i - j) % m
    labels = ["1"] + ["r" if i == 1 else f"r{i}" for i in range(1, m)]
    labels += ["s"] + ["rs" if i == 1 else f"r{i}s" for i in range(1, m)]
    return GroupTable(mul, labels, [1, m], family="dihedral", name=f"D{n}")


def make_quaternion(n: int) -> GroupTable:
    """Generalized quaternion group of order n (a power of 2, n >= 8).

    Index layout: a^i at i for i < n/2, then a^i*b at n/2 + i, with
    b^2 = a^(n/4) and b^-1 a b = a^-1.
    """
    if n < 8 or n & (n - 1):
        raise ValueError(f"quaternion order must be a power of 2 and >= 8, got {n}")
    m = n // 2
    half = m // 2
    mul = [[0] * n for _ in range(n)]
    for i in range(m):
        for j in range(m):
            mul[i][j] = (i + j) % m
            mul[i][m + j] = m + (i + j) % m
            mul[m + i][j] = m + (i - j) % m
            mul[m + i][m + j] = (i - j + half) % m
    labels = ["1"] + ["a" if i == 1 else f"a{i}" for i in range(1, m)]
    labels += ["b"] + ["ab" if i == 1 else f"a{i}b" for i in range(1, m)]
    return GroupTable(mul, labels, [1, m], family="quaternion", name=f"Q{n}")


def make_direct_product(g1: GroupTable, g2: GroupTable) -> GroupTable:
    """Componentwise product; index of (x, y) is x*|g2| + y."""
    n1, n2 = g1.order, g2.order
    n = n1 * n2
    mul = [[0] * n for _ in range(n)]
    for x1 in range(n1):
        for y1 in range(n2):
            i = x1 * n2 + y1
            row1 = g1.mul[x1]
            row2 = g2.mul[y1]
            for x2 in range(n1):
                base = row1[x2] * n2
                for y2 in range(n2):
                    mul[i][x2 * n2 + y2] = base + row2[y2]
    labels = [
        f"({g1.labels[x]},{g2.labels[y]})" for x in range(n1) for y in range(n2)
    ]
    labels[0] = "1"
    gens = [x * n2 for x in g1.generators] + list(g2.generators)
    return GroupTable(
        mul, labels, gens, family="direct_product", name=f"{g1.name}x{g2.name}"
    )


def make_inverting_extension(a_group: GroupTable, t: int) -> GroupTable:
    """Extend abelian A by an element b with b^2 = t and b^-1 a b = a^-1.

    Index layout: A at 0..|A|-1 (same order as a_group), then a_i*b at
    |A| + i. b itself sits at index |A| and has order exactly 4.
    """
    if not a_group.is_abelian():
        raise NotAbelianError("inverting extension needs an abelian base")
    na = a_group.order
    if not 0 < t < na:
        raise BadSquareElementError(f"square element index {t} out of range or identity")
    if a_group.mul[t][t] != 0:
        raise BadSquareElementError(f"square element {a_group.labels[t]} is not an involution")
    amul = a_group.mul
    ainv = a_group.inv
    n = 2 * na
    mul = [[0] * n for _ in range(n)]
    for i in range(na):
        for j in range(na):
            mul[i][j] = amul[i][j]
            mul[i][na + j] = na + amul[i][j]
            mul[na + i][j] = na + amul[i][ainv[j]]
            mul[na + i][na + j] = amul[amul[i][ainv[j]]][t]
    labels = list(a_group.labels) + [
        "b" if i == 0 else f"{a_group.labels[i]}*b" for i in range(na)
    ]
    gens = list(a_group.generators) + [na]
    return GroupTable(
        mul,
        labels,
        gens,
        family="inverting_extension",
        name=f"Ext({a_group.name},{a_group.labels[t]})",
    )


# ---------------------------------------------------------------------------
# subgroup machinery


def subgroup_closure(g: GroupTable, gens: Iterable[int]) -> SubgroupSet:
    """Smallest subgroup containing gens."""
    members = _closure(list(g.elements()), lambda x, y: g.mul[x][y], 0, gens)
    return SubgroupSet(g, tuple(sorted(members)))


def _closure(
    ids: Sequence[int],
    mul_fn: Callable[[int, int], int],
    identity: int,
    gens: Iterable[int],
) -> set[int]:
    """Closure of gens under mul_fn; inverses come for free in a finite group."""
    seen = {identity}
    gen_list = [x for x in gens]
    queue = [identity]
    while queue:
        x = queue.pop()
        for gn in gen_list:
            y = mul_fn(x, gn)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def center(g: GroupTable) -> SubgroupSet:
    mul = g.mul
    n = g.order
    members = tuple(
        x for x in range(n) if all(mul[x][y] == mul[y][x] for y in range(n))
    )
    return SubgroupSet(g, members)


def commutator_subgroup(g: GroupTable) -> SubgroupSet:
    mul = g.mul
    inv = g.inv
    comms = set()
    for x in range(g.order):
        for y in range(g.order):
            comms.add(mul[mul[inv[x]][inv[y]]][mul[x][y]])
    return subgroup_closure(g, comms)


def is_normal(g: GroupTable, s: SubgroupSet) -> bool:
    members = s.member_set()
    return all(g.conjugate(x, h) in members for x in range(g.order) for h in members)


def element_order(g: GroupTable, x: int) -> int:
    k = 1
    y = x
    while y != 0:
        y = g.mul[y][x]
        k += 1
    return k


def order_multiset(g: GroupTable) -> dict[int, int]:
    """Element-order histogram, a cheap family fingerprint at these sizes."""
    hist: dict[int, int] = {}
    for x in g.elements():
        k = element_order(g, x)
        hist[k] = hist.get(k, 0) + 1
    return hist


def coset_representatives(
    g: GroupTable, sub_members: Iterable[int], within: Iterable[int]
) -> list[int]:
    """Smallest-index representatives of the right cosets of a subgroup."""
    sub = list(sub_members)
    covered: set[int] = set()
    reps = []
    for x in sorted(within):
        if x in covered:
            continue
        reps.append(x)
        covered.update(g.mul[h][x] for h in sub)
    return reps


# ---------------------------------------------------------------------------
# complements in finite abelian groups


def complement_generators(
    ids: Sequence[int],
    mul_fn: Callable[[int, int], int],
    identity: int,
    factor: Iterable[int],
) -> tuple[list[int], set[int]]:
    """Find a complement of ``factor`` inside the abelian group on ``ids``.

    Generators are chosen by depth-first search in the canonical order of
    ``ids`` with strictly increasing positions, so the first complement found
    has the lexicographically smallest generator sequence. Raises
    NoComplementError when the factor is not a direct factor.
    """
    order = len(ids)
    factor_set = set(factor)
    if order % len(factor_set):
        raise NoComplementError("factor order does not divide ambient order")
    target = order // len(factor_set)
    pos = {x: i for i, x in enumerate(ids)}
    for x in factor_set:
        if x not in pos:
            raise NotASubgroupError("factor is not contained in the ambient group")
    for i, x in enumerate(ids):
        for y in ids[: i + 1]:
            if mul_fn(x, y) != mul_fn(y, x):
                raise NotAbelianError("complement search requires an abelian ambient group")

    def dfs(members: set[int], gens: list[int], start: int) -> list[int] | None:
        if len(members) == target:
            return gens
        for idx in range(start, order):
            c = ids[idx]
            if c in members or c in factor_set:
                continue
            grown = _closure(ids, mul_fn, identity, gens + [c])
            if len(grown) > target:
                continue
            if any(x in factor_set for x in grown if x != identity):
                continue
            found = dfs(grown, gens + [c], idx + 1)
            if found is not None:
                return found
        return None

    gens = dfs({identity}, [], 0)
    if gens is None:
        raise NoComplementError(
            f"no complement of a factor of order {len(factor_set)} "
            f"in an ambient group of order {order}"
        )
    return gens, _closure(ids, mul_fn, identity, gens)


def find_complement_subgroup(ambient: SubgroupSet, factor: SubgroupSet) -> SubgroupSet:
    """Complement of ``factor`` in an abelian subgroup of a table group."""
    if ambient.group is not factor.group:
        raise NotASubgroupError("ambient and factor live in different groups")
    g = ambient.group
    gens, members = complement_generators(
        ambient.members, lambda x, y: g.mul[x][y], 0, factor.members
    )
    return SubgroupSet(g, tuple(sorted(members)))
