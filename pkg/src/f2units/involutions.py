"""Order-2 anti-automorphisms of a group and the hypothesis bundles they need.

Two involutions are provided: the classical one (every group element goes to
its inverse) and the "odot" one (central elements are fixed, everything else
is multiplied by the commutator generator). The odot map is only an
anti-automorphism under specific structural hypotheses, so it is constructible
only through a validated OdotForm.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadOrderError,
    CenterQuotientNotKleinError,
    CommutatorNotOrderTwoError,
    HypothesisViolationError,
    NotAbelianSubgroupError,
    NotInvertingError,
    WrongIndexError,
)
from .groups import (
    GroupTable,
    SubgroupSet,
    center,
    commutator_subgroup,
    coset_representatives,
    element_order,
    subgroup_closure,
)


@dataclass(frozen=True)
class AntiAutomorphism:
    """A permutation of group elements intended to reverse products.

    Use validate_involution to check the defining laws; the module's own
    constructors only emit maps that pass it.
    """

    group: GroupTable
    perm: tuple[int, ...]
    name: str = "sigma"

    def __call__(self, i: int) -> int:
        return self.perm[i]


def classical_involution(g: GroupTable) -> AntiAutomorphism:
    """The map sending every group element to its inverse."""
    return AntiAutomorphism(g, g.inv, name="classical")


def validate_involution(sigma: AntiAutomorphism) -> bool:
    """True iff sigma is self-inverse and reverses every product."""
    g = sigma.group
    perm = sigma.perm
    n = g.order
    if len(perm) != n or sorted(perm) != list(range(n)):
        return False
    if any(perm[perm[i]] != i for i in range(n)):
        return False
    mul = g.mul
    return all(
        perm[mul[x][y]] == mul[perm[y]][perm[x]] for x in range(n) for y in range(n)
    )


# ---------------------------------------------------------------------------
# hypothesis bundle: abelian index-2 subgroup inverted by an order-4 element


@dataclass(frozen=True)
class InvertingExtensionForm:
    """A group with an abelian index-2 subgroup A and b of order 4 inverting A.

    ``transversal`` holds the smallest-index representatives of the cosets of
    the two-element subgroup generated by b*b inside A; there are |A|/2 of
    them and downstream reports record the choice.
    """

    group: GroupTable
    a_sub: SubgroupSet
    b: int
    transversal: tuple[int, ...]

    @property
    def b_squared(self) -> int:
        g = self.group
        return g.mul[self.b][self.b]


def make_inverting_form(
    g: GroupTable, a_gens, b: int
) -> InvertingExtensionForm:
    """Validate the hypotheses and fix the coset transversal, or raise."""
    a_sub = subgroup_closure(g, a_gens)
    if not a_sub.is_abelian():
        raise NotAbelianSubgroupError("the designated subgroup is not abelian")
    if 2 * a_sub.order != g.order:
        raise WrongIndexError(
            f"subgroup has index {g.order // a_sub.order}, need index 2"
        )
    if b in a_sub:
        raise BadOrderError("the twisting element must lie outside the subgroup")
    if element_order(g, b) != 4:
        raise BadOrderError(
            f"the twisting element has order {element_order(g, b)}, need 4"
        )
    binv = g.inv[b]
    for a in a_sub.members:
        if g.mul[g.mul[binv][a]][b] != g.inv[a]:
            raise NotInvertingError(
                f"conjugation by the twisting element does not invert {g.labels[a]}"
            )
    bsq = g.mul[b][b]
    transversal = tuple(coset_representatives(g, (0, bsq), a_sub.members))
    return InvertingExtensionForm(g, a_sub, b, transversal)


def detect_inverting_form(g: GroupTable) -> InvertingExtensionForm:
    """Search the group for a valid (subgroup, twisting element) pair.

    Index-2 subgroups are the kernels of the nonzero linear functionals on
    the quotient by squares and commutators; candidates are tried in a fixed
    canonical order so detection is deterministic.
    """
    squares = {g.mul[x][x] for x in range(g.order)}
    comms = {
        g.mul[g.mul[g.inv[x]][g.inv[y]]][g.mul[x][y]]
        for x in range(g.order)
        for y in range(g.order)
    }
    n_sub = subgroup_closure(g, squares | comms)
    n_members = n_sub.member_set()
    quotient = g.order // n_sub.order
    if quotient < 2:
        raise WrongIndexError("no index-2 subgroup: the group is generated by squares")
    coset_of: dict[int, int] = {}
    coset_vec: dict[int, int] = {}
    for x in range(g.order):
        if x in coset_of:
            continue
        rep = x
        for h in n_members:
            coset_of[g.mul[h][rep]] = rep
    basis_dim = 0
    coset_vec[coset_of[0]] = 0
    for x in range(g.order):
        rep = coset_of[x]
        if rep in coset_vec:
            continue
        known = list(coset_vec.items())
        bit = 1 << basis_dim
        basis_dim += 1
        for kr, vec in known:
            coset_vec[coset_of[g.mul[kr][rep]]] = vec | bit
    candidates = []
    for f in range(1, 1 << basis_dim):
        members = tuple(
            x
            for x in range(g.order)
            if bin(f & coset_vec[coset_of[x]]).count("1") % 2 == 0
        )
        candidates.append(members)
    for members in sorted(set(candidates)):
        sub = SubgroupSet(g, members)
        if not sub.is_abelian():
            continue
        member_set = sub.member_set()
        for b in range(g.order):
            if b in member_set or element_order(g, b) != 4:
                continue
            try:
                return make_inverting_form(g, members, b)
            except HypothesisViolationError:
                continue
    raise NotInvertingError(
        "no abelian index-2 subgroup inverted by an order-4 element was found"
    )


# ---------------------------------------------------------------------------
# hypothesis bundle: center of index 4 with Klein quotient, commutator order 2


@dataclass(frozen=True)
class OdotForm:
    """A group whose center C has Klein quotient and whose commutator
    subgroup is {1, e}; a and b are representatives of the two independent
    nontrivial cosets of C."""

    group: GroupTable
    c_sub: SubgroupSet
    a: int
    b: int
    e: int


def make_odot_form(g: GroupTable, prefer_large_reps: bool = False) -> OdotForm:
    """Auto-detect the center and commutator, validate, pick coset reps.

    With prefer_large_reps the largest-index representatives are chosen
    instead of the smallest; the decomposition is verified for both choices
    since neither is canonical.
    """
    c_sub = center(g)
    c_members = c_sub.member_set()
    if 4 * c_sub.order != g.order:
        raise CenterQuotientNotKleinError(
            f"center has index {g.order // c_sub.order if c_sub.order else '?'}, need 4"
        )
    for x in range(g.order):
        if g.mul[x][x] not in c_members:
            raise CenterQuotientNotKleinError(
                f"square of {g.labels[x]} falls outside the center"
            )
    comm = commutator_subgroup(g)
    if comm.order != 2:
        raise CommutatorNotOrderTwoError(
            f"commutator subgroup has order {comm.order}, need 2"
        )
    e = comm.members[1]
    if e not in c_members or g.mul[e][e] != 0:
        raise HypothesisViolationError("commutator generator must be a central involution")
    outside = [x for x in range(g.order) if x not in c_members]
    if prefer_large_reps:
        outside = outside[::-1]
    a = outside[0]
    coset_a = {g.mul[c][a] for c in c_members}
    b = next(x for x in outside if x not in coset_a)
    comm_ab = g.mul[g.mul[g.inv[a]][g.inv[b]]][g.mul[a][b]]
    if comm_ab != e:
        raise HypothesisViolationError(
            "chosen coset representatives do not realize the commutator generator"
        )
    return OdotForm(g, c_sub, a, b, e)


def odot_involution(form: OdotForm) -> AntiAutomorphism:
    """Fix central elements; multiply every other element by the commutator
    generator. An anti-automorphism of order 2 under the form's hypotheses."""
    g = form.group
    c_members = form.c_sub.member_set()
    e = form.e
    perm = tuple(i if i in c_members else g.mul[i][e] for i in range(g.order))
    sigma = AntiAutomorphism(g, perm, name="odot")
    if not validate_involution(sigma):
        raise HypothesisViolationError(
            "constructed map fails the anti-automorphism laws"
        )
    return sigma
