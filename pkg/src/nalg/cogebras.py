"""Finite-dimensional cogebras over the rationals given by costructure
constants, with the arrow-reversed versions of the slot-permutation
invariance checks, counits, the flip, and derived Lie cogebras.

Slot permutations act on output tensor cubes with the same convention as
in :mod:`nalg.algebras`: the permutation operator of ``s`` places the
factor with index s^{-1}(k) into slot k.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .linalg import Subspace, Vec, as_vec, kernel
from .sym3 import SUBGROUPS, GroupAlgElem, Perm3, PERMS, inverse, sign


@dataclass(frozen=True)
class Cogebra:
    """A cogebra by costructure constants.

    ``coproducts[(k, i, j)]`` is the coefficient of ``e_i (x) e_j`` in the
    coproduct of ``e_k``; absent entries are zero.  ``counit``, when given,
    holds the functional's coordinates and must satisfy the counit axiom
    on every basis element (checked on construction).
    """

    dim: int
    coproducts: Mapping[tuple[int, int, int], Fraction]
    counit: Vec | None = None
    basis: tuple[str, ...] | None = None
    name: str | None = None

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be at least 1")
        table: dict[tuple[int, int, int], Fraction] = {}
        for (k, i, j), c in self.coproducts.items():
            if not all(1 <= t <= self.dim for t in (k, i, j)):
                raise ValueError(f"index out of range in coproduct entry ({k}, {i}, {j})")
            c = Fraction(c)
            if c:
                table[(k, i, j)] = c
        object.__setattr__(self, "coproducts", table)
        if self.basis is not None:
            names = tuple(str(n) for n in self.basis)
            if len(names) != self.dim:
                raise ValueError("basis-name count differs from dimension")
            object.__setattr__(self, "basis", names)
        if self.counit is not None:
            eps = as_vec(self.counit)
            if len(eps) != self.dim:
                raise ValueError("counit length differs from dimension")
            object.__setattr__(self, "counit", eps)
            for k in range(1, self.dim + 1):
                left = [Fraction(0)] * self.dim
                right = [Fraction(0)] * self.dim
                for (kk, i, j), c in table.items():
                    if kk == k:
                        left[j - 1] += c * eps[i - 1]
                        right[i - 1] += c * eps[j - 1]
                expect = [Fraction(0)] * self.dim
                expect[k - 1] = Fraction(1)
                if left != expect or right != expect:
                    raise ValueError("declared counit fails the counit axiom")

    def comultiply(self, x: Sequence) -> dict[tuple[int, int], Fraction]:
        """Coordinates of the coproduct of ``x`` on the tensor square,
        indexed by ordered pairs; zero entries omitted."""
        x = as_vec(x)
        if len(x) != self.dim:
            raise ValueError("vector length differs from cogebra dimension")
        out: dict[tuple[int, int], Fraction] = defaultdict(Fraction)
        for (k, i, j), c in self.coproducts.items():
            xk = x[k - 1]
            if xk:
                out[(i, j)] += c * xk
        return {key: c for key, c in out.items() if c}

    def basis_names(self) -> tuple[str, ...]:
        if self.basis is not None:
            return self.basis
        return tuple(f"e{i}" for i in range(1, self.dim + 1))


@dataclass(frozen=True)
class CubeMap:
    """A linear map into the triple tensor power: ``entries[(k, i1, i2, i3)]``
    is the coordinate of the image of ``e_k`` on e_i1 (x) e_i2 (x) e_i3."""

    dim: int
    entries: Mapping[tuple[int, int, int, int], Fraction]

    def __post_init__(self):
        table: dict[tuple[int, int, int, int], Fraction] = {}
        for key, c in self.entries.items():
            if not all(1 <= t <= self.dim for t in key):
                raise ValueError(f"index out of range in cube entry {key}")
            c = Fraction(c)
            if c:
                table[key] = c
        object.__setattr__(self, "entries", table)

    def is_zero(self) -> bool:
        return not self.entries

    def __add__(self, other: "CubeMap") -> "CubeMap":
        out = dict(self.entries)
        for key, c in other.entries.items():
            out[key] = out.get(key, Fraction(0)) + c
        return CubeMap(self.dim, out)

    def __sub__(self, other: "CubeMap") -> "CubeMap":
        out = dict(self.entries)
        for key, c in other.entries.items():
            out[key] = out.get(key, Fraction(0)) - c
        return CubeMap(self.dim, out)

    def scale(self, factor) -> "CubeMap":
        f = Fraction(factor)
        return CubeMap(self.dim, {k: f * c for k, c in self.entries.items()})

    def phi(self, v) -> "CubeMap":
        """Apply the slot-permutation operator of ``v`` on the output side."""
        if isinstance(v, Perm3):
            v = GroupAlgElem.from_perm(v)
        out: dict[tuple[int, int, int, int], Fraction] = defaultdict(Fraction)
        for pos, coeff in enumerate(v.coords):
            if not coeff:
                continue
            sinv = inverse(PERMS[pos])
            p1, p2, p3 = sinv(1), sinv(2), sinv(3)
            for (k, m1, m2, m3), c in self.entries.items():
                mm = (m1, m2, m3)
                out[(k, mm[p1 - 1], mm[p2 - 1], mm[p3 - 1])] += coeff * c
        return CubeMap(self.dim, out)


def coassoc_left(C: Cogebra) -> CubeMap:
    """(coproduct (x) id) after the coproduct."""
    by_out: dict[int, list[tuple[int, int, Fraction]]] = defaultdict(list)
    for (a, i, j), c in C.coproducts.items():
        by_out[a].append((i, j, c))
    out: dict[tuple[int, int, int, int], Fraction] = defaultdict(Fraction)
    for (k, a, b), c1 in C.coproducts.items():
        for i, j, c2 in by_out.get(a, ()):
            out[(k, i, j, b)] += c1 * c2
    return CubeMap(C.dim, out)


def coassoc_right(C: Cogebra) -> CubeMap:
    """(id (x) coproduct) after the coproduct."""
    by_out: dict[int, list[tuple[int, int, Fraction]]] = defaultdict(list)
    for (a, i, j), c in C.coproducts.items():
        by_out[a].append((i, j, c))
    out: dict[tuple[int, int, int, int], Fraction] = defaultdict(Fraction)
    for (k, a, b), c1 in C.coproducts.items():
        for i, j, c2 in by_out.get(b, ()):
            out[(k, a, i, j)] += c1 * c2
    return CubeMap(C.dim, out)


def _check_index(i: int, low: int = 1) -> None:
    if i not in range(low, 7):
        raise ValueError(f"subgroup index must be in {low}..6, got {i}")


def gi_cocheck(C: Cogebra, i: int) -> bool:
    """Arrow-reversed invariance check: the signed sum over the subgroup of
    slot-permuted coassociativity defects vanishes on every basis element."""
    _check_index(i)
    defect = coassoc_left(C) - coassoc_right(C)
    total = CubeMap(C.dim, {})
    for p in SUBGROUPS[i]:
        total = total + defect.phi(p).scale(sign(p))
    return total.is_zero()


def gi_bang_cocheck(C: Cogebra, i: int, *, literal: bool = False) -> bool:
    """Coassociativity plus the mirror slot symmetry of the iterated
    coproduct for index i (2..6).

    The defining display sums the inverse slot permutations over the
    subgroup and equates the sum with the iterated coproduct itself; read
    literally that forces |G|*x == x already for a grouplike element, so
    by default the check uses the normalized (averaged) reading, which is
    equivalent to invariance of the iterated coproduct under every slot
    permutation in the subgroup.  Pass ``literal=True`` for the
    unnormalized displayed equality.
    """
    _check_index(i, low=2)
    if not gi_cocheck(C, 1):
        return False
    iterated = coassoc_right(C)
    total = CubeMap(C.dim, {})
    for p in SUBGROUPS[i]:
        total = total + iterated.phi(inverse(p))
    if literal:
        return total == iterated
    return total == iterated.scale(len(SUBGROUPS[i]))


def flip(C: Cogebra) -> Cogebra:
    """Swap the two tensor factors of every coproduct."""
    out = {(k, j, i): c for (k, i, j), c in C.coproducts.items()}
    return Cogebra(C.dim, out, counit=C.counit, basis=C.basis)


def lie_cogebra_from(C: Cogebra) -> Cogebra:
    """Antisymmetrized coproduct (the coproduct minus its flip, no counit)."""
    out: dict[tuple[int, int, int], Fraction] = defaultdict(Fraction)
    for (k, i, j), c in C.coproducts.items():
        out[(k, i, j)] += c
        out[(k, j, i)] -= c
    return Cogebra(C.dim, out, counit=None, basis=C.basis)


def is_lie_cogebra(C: Cogebra) -> bool:
    """Co-anticommutativity plus the co-Jacobi identity: the iterated
    coproduct summed over the three even slot rotations vanishes."""
    for (k, i, j), c in C.coproducts.items():
        if C.coproducts.get((k, j, i), Fraction(0)) != -c:
            return False
    iterated = coassoc_right(C)
    total = CubeMap(C.dim, {})
    for p in SUBGROUPS[5]:
        total = total + iterated.phi(p)
    return total.is_zero()


def coannihilator(C: Cogebra) -> Subspace:
    """All group-algebra vectors whose slot permutation kills the
    coassociativity defect; the mirror of the algebra annihilator."""
    defect = coassoc_left(C) - coassoc_right(C)
    permuted = [defect.phi(p) for p in PERMS]
    support: set[tuple[int, int, int, int]] = set()
    for pt in permuted:
        support.update(pt.entries.keys())
    rows = [
        tuple(pt.entries.get(key, Fraction(0)) for pt in permuted)
        for key in sorted(support)
    ]
    return kernel(rows, 6)


@dataclass(frozen=True)
class CogebraReport:
    """Aggregated results of the arrow-reversed checks for one cogebra."""

    gi_coassoc: Mapping[int, bool]
    gi_bang_co: Mapping[int, bool]
    is_coassociative: bool
    is_lie_coadmissible: bool
    is_3_power_coassociative: bool
    has_counit: bool
    coannihilator_dim: int
    coannihilator_basis: tuple[GroupAlgElem, ...]


def classify_cogebra(C: Cogebra) -> CogebraReport:
    gi = {i: gi_cocheck(C, i) for i in range(1, 7)}
    bang = {i: gi_bang_cocheck(C, i) for i in range(2, 7)}
    defect = coassoc_left(C) - coassoc_right(C)
    full_sum = CubeMap(C.dim, {})
    for p in PERMS:
        full_sum = full_sum + defect.phi(p)
    co_ann = coannihilator(C)
    return CogebraReport(
        gi_coassoc=gi,
        gi_bang_co=bang,
        is_coassociative=gi[1],
        is_lie_coadmissible=gi[6],
        is_3_power_coassociative=full_sum.is_zero(),
        has_counit=C.counit is not None,
        coannihilator_dim=co_ann.dim,
        coannihilator_basis=tuple(GroupAlgElem(row) for row in co_ann.basis),
    )
