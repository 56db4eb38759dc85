"""The symmetric group on three letters and its rational group algebra.

Conventions, fixed once for the whole package:

* Basis order of the group algebra is ``[id, t12, t13, t23, c1, c2]``,
  where ``t_ij`` swaps i and j, ``c1`` is the cycle 1->2->3->1 and
  ``c2 = c1 * c1``.  All coordinate input and output uses this order.
* ``compose(p, q)`` applies ``q`` first: ``compose(p, q)(k) == p(q(k))``.
* The translation action of a permutation ``s`` sends a basis permutation
  ``r`` to ``compose(inverse(s), r)``, extended linearly.

Two different closures appear when working with subspaces of the group
algebra.  Orbit spans are closed under the translation action above, while
the annihilator subspaces of slot-permutation identities (see
:mod:`nalg.algebras`) are closed under *right multiplication* instead.
The two do not coincide in general, so both ``orbit_span`` and
``right_ideal`` are exposed; the identity-propagation facts checked by the
test suite go through ``right_ideal``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .linalg import Subspace, span


@dataclass(frozen=True)
class Perm3:
    """A permutation of {1, 2, 3}, stored as the image triple (p(1), p(2), p(3))."""

    images: tuple[int, int, int]

    def __post_init__(self):
        if sorted(self.images) != [1, 2, 3]:
            raise ValueError(f"not a permutation of 1..3: {self.images!r}")

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Perm3") -> "Perm3":
        return compose(self, other)


def compose(p: Perm3, q: Perm3) -> Perm3:
    """Composition with ``q`` applied first: compose(p, q)(k) = p(q(k))."""
    return Perm3((p(q(1)), p(q(2)), p(q(3))))


def inverse(p: Perm3) -> Perm3:
    img = [0, 0, 0]
    for k in (1, 2, 3):
        img[p(k) - 1] = k
    return Perm3((img[0], img[1], img[2]))


def sign(p: Perm3) -> Fraction:
    """+1 on the identity and the 3-cycles, -1 on the transpositions."""
    inversions = sum(
        1
        for a in (1, 2, 3)
        for b in (1, 2, 3)
        if a < b and p(a) > p(b)
    )
    return Fraction(-1) if inversions % 2 else Fraction(1)


IDENTITY = Perm3((1, 2, 3))
T12 = Perm3((2, 1, 3))
T13 = Perm3((3, 2, 1))
T23 = Perm3((1, 3, 2))
C1 = Perm3((2, 3, 1))
C2 = Perm3((3, 1, 2))

PERMS: tuple[Perm3, ...] = (IDENTITY, T12, T13, T23, C1, C2)
PERM_NAMES: tuple[str, ...] = ("id", "t12", "t13", "t23", "c1", "c2")
_PERM_INDEX = {p: i for i, p in enumerate(PERMS)}

#: Subgroups in the fixed numbering: {id}, {id,t12}, {id,t23}, {id,t13},
#: the alternating group, and the whole group.
SUBGROUPS: dict[int, tuple[Perm3, ...]] = {
    1: (IDENTITY,),
    2: (IDENTITY, T12),
    3: (IDENTITY, T23),
    4: (IDENTITY, T13),
    5: (IDENTITY, C1, C2),
    6: PERMS,
}


@dataclass(frozen=True)
class GroupAlgElem:
    """An element of the rational group algebra, as six coordinates in the
    fixed basis order [id, t12, t13, t23, c1, c2]."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != 6:
            raise ValueError("group-algebra elements have exactly six coordinates")
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @classmethod
    def zero(cls) -> "GroupAlgElem":
        return cls((0, 0, 0, 0, 0, 0))

    @classmethod
    def from_perm(cls, p: Perm3) -> "GroupAlgElem":
        coords = [Fraction(0)] * 6
        coords[_PERM_INDEX[p]] = Fraction(1)
        return cls(tuple(coords))

    def __add__(self, other: "GroupAlgElem") -> "GroupAlgElem":
        return GroupAlgElem(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "GroupAlgElem") -> "GroupAlgElem":
        return GroupAlgElem(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "GroupAlgElem":
        return GroupAlgElem(tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, GroupAlgElem):
            return ga_multiply(self, other)
        return GroupAlgElem(tuple(a * Fraction(other) for a in self.coords))

    def __rmul__(self, other):
        return GroupAlgElem(tuple(Fraction(other) * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)


def ga_multiply(u: GroupAlgElem, v: GroupAlgElem) -> GroupAlgElem:
    """Group-algebra product: the bilinear extension of ``compose``."""
    out = [Fraction(0)] * 6
    for i, a in enumerate(u.coords):
        if not a:
            continue
        for j, b in enumerate(v.coords):
            if b:
                out[_PERM_INDEX[compose(PERMS[i], PERMS[j])]] += a * b
    return GroupAlgElem(tuple(out))


def action(p: Perm3, v: GroupAlgElem) -> GroupAlgElem:
    """Translation action: each basis permutation r moves to compose(inverse(p), r)."""
    pinv = inverse(p)
    out = [Fraction(0)] * 6
    for i, a in enumerate(v.coords):
        if a:
            out[_PERM_INDEX[compose(pinv, PERMS[i])]] += a
    return GroupAlgElem(tuple(out))


def orbit(v: GroupAlgElem) -> list[GroupAlgElem]:
    """The six translates of ``v``, one per permutation in basis order.

    Duplicates are kept so the action's structure stays visible; use
    ``orbit_span`` for the subspace they generate.
    """
    return [action(p, v) for p in PERMS]


def orbit_span(v: GroupAlgElem) -> Subspace:
    return span((e.coords for e in orbit(v)), 6)


def right_ideal(v: GroupAlgElem) -> Subspace:
    """Span of the right translates v * s over all permutations s."""
    return span(((v * GroupAlgElem.from_perm(p)).coords for p in PERMS), 6)


def _signed_subgroup_sum(i: int) -> GroupAlgElem:
    total = GroupAlgElem.zero()
    for p in SUBGROUPS[i]:
        total = total + sign(p) * GroupAlgElem.from_perm(p)
    return total


def _inverse_subgroup_sum(i: int) -> GroupAlgElem:
    total = GroupAlgElem.zero()
    for p in SUBGROUPS[i]:
        total = total + GroupAlgElem.from_perm(inverse(p))
    return total


def _special_table() -> dict[str, GroupAlgElem]:
    table: dict[str, GroupAlgElem] = {}
    for i in range(1, 7):
        table[f"a{i}"] = _signed_subgroup_sum(i)
        table[f"u{i}"] = _inverse_subgroup_sum(i)
    table["V"] = table["a6"]
    table["W"] = table["u6"]
    # Single-generator family: one vector per subgroup (the generator for
    # the order-2 subgroups, the alternating sum a5 for the even subgroup,
    # and V for the whole group).
    for name, elem in zip(
        ("v1", "v2", "v3", "v4"),
        (IDENTITY, T12, T23, T13),
    ):
        table[name] = GroupAlgElem.from_perm(elem)
    table["v5"] = table["a5"]
    table["v6"] = table["V"]
    return table


_SPECIAL = _special_table()


def special_vector(name: str) -> GroupAlgElem:
    """Named vectors: V and W (the alternating and full symmetrizing sums),
    a1..a6 (signed subgroup sums), u1..u6 (sums of subgroup inverses), and
    v1..v6 (the single-generator family)."""
    try:
        return _SPECIAL[name]
    except KeyError:
        raise ValueError(f"unknown special vector {name!r}") from None


def _act_by(u: GroupAlgElem, v: GroupAlgElem) -> GroupAlgElem:
    """Apply a group-algebra element through the translation action."""
    total = GroupAlgElem.zero()
    for i, a in enumerate(u.coords):
        if a:
            total = total + a * action(PERMS[i], v)
    return total


_E_TRIVIAL = Fraction(1, 6) * special_vector("W")
_E_SIGN = Fraction(1, 6) * special_vector("V")
_E_STANDARD = GroupAlgElem.from_perm(IDENTITY) - _E_TRIVIAL - _E_SIGN


def maschke_multiplicities(s: Subspace) -> tuple[int, int, int]:
    """Multiplicities (trivial, sign, standard) of the three irreducible
    components of an invariant subspace of the group algebra.

    ``s`` must be closed under the translation action; a ValueError is
    raised otherwise.  The multiplicities are ranks of the images of ``s``
    under the three central idempotents (the standard component has
    dimension 2 per copy, so its rank is halved).
    """
    if s.ambient_dim != 6:
        raise ValueError("expected a subspace of the 6-dimensional group algebra")
    elems = [GroupAlgElem(row) for row in s.basis]
    for e in elems:
        for p in PERMS:
            if not s.contains(action(p, e).coords):
                raise ValueError("subspace is not invariant under the translation action")
    m_trivial = span([_act_by(_E_TRIVIAL, e).coords for e in elems], 6).dim
    m_sign = span([_act_by(_E_SIGN, e).coords for e in elems], 6).dim
    standard_rank = span([_act_by(_E_STANDARD, e).coords for e in elems], 6).dim
    m_standard, remainder = divmod(standard_rank, 2)
    if remainder or m_trivial + m_sign + standard_rank != s.dim:
        raise ArithmeticError("isotypic ranks do not add up; invariance check is broken")
    return (m_trivial, m_sign, m_standard)


def ga_from_coords(coords: Iterable) -> GroupAlgElem:
    return GroupAlgElem(tuple(coords))
