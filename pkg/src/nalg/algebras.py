"""Finite-dimensional algebras over the rationals given by structure
constants, together with the slot-permutation invariance checks on their
associators.

The checks are indexed by the six subgroups of the symmetric group on
three letters: index 1 is plain associativity, 2 is the Vinberg
(left-symmetric) identity, 3 is the pre-Lie (right-symmetric) identity,
4 equates a triple product with its reversal, 5 is the generalized Jacobi
condition, and 6 is Lie-admissibility.  Every identity is decided exactly
by evaluating on all basis triples, which suffices by multilinearity.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .linalg import Subspace, Vec, as_vec, kernel
from .sym3 import SUBGROUPS, GroupAlgElem, Perm3, PERMS, special_vector


def basis_vec(dim: int, j: int) -> Vec:
    coords = [Fraction(0)] * dim
    coords[j - 1] = Fraction(1)
    return tuple(coords)


@dataclass(frozen=True)
class Algebra:
    """An algebra by structure constants.

    ``products[(i, j, k)]`` is the coefficient of ``e_k`` in ``e_i * e_j``;
    absent entries are zero.  ``unit``, when given, must be a two-sided
    unit (checked on construction).  ``basis`` holds optional basis names
    used by the file format; ``name`` is a free label.
    """

    dim: int
    products: Mapping[tuple[int, int, int], Fraction]
    unit: Vec | None = None
    basis: tuple[str, ...] | None = None
    name: str | None = None

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be at least 1")
        table: dict[tuple[int, int, int], Fraction] = {}
        for (i, j, k), c in self.products.items():
            if not all(1 <= t <= self.dim for t in (i, j, k)):
                raise ValueError(f"index out of range in product entry ({i}, {j}, {k})")
            c = Fraction(c)
            if c:
                table[(i, j, k)] = c
        object.__setattr__(self, "products", table)
        if self.basis is not None:
            names = tuple(str(n) for n in self.basis)
            if len(names) != self.dim:
                raise ValueError("basis-name count differs from dimension")
            object.__setattr__(self, "basis", names)
        if self.unit is not None:
            u = as_vec(self.unit)
            if len(u) != self.dim:
                raise ValueError("unit length differs from dimension")
            object.__setattr__(self, "unit", u)
            for j in range(1, self.dim + 1):
                ej = basis_vec(self.dim, j)
                if self.multiply(u, ej) != ej or self.multiply(ej, u) != ej:
                    raise ValueError("declared unit is not a two-sided unit")

    def multiply(self, x: Sequence, y: Sequence) -> Vec:
        """Bilinear extension of the structure constants."""
        x = as_vec(x)
        y = as_vec(y)
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector length differs from algebra dimension")
        out = [Fraction(0)] * self.dim
        for (i, j, k), c in self.products.items():
            xi = x[i - 1]
            if xi:
                yj = y[j - 1]
                if yj:
                    out[k - 1] += c * xi * yj
        return tuple(out)

    def basis_names(self) -> tuple[str, ...]:
        if self.basis is not None:
            return self.basis
        return tuple(f"e{i}" for i in range(1, self.dim + 1))


@dataclass(frozen=True)
class TrilinearMap:
    """A trilinear map into the algebra: ``entries[(i, j, k, l)]`` is the
    coefficient of ``e_l`` in T(e_i, e_j, e_k).  Zero entries are dropped,
    so equality of maps is equality of the stored tables."""

    dim: int
    entries: Mapping[tuple[int, int, int, int], Fraction]

    def __post_init__(self):
        table: dict[tuple[int, int, int, int], Fraction] = {}
        for key, c in self.entries.items():
            if not all(1 <= t <= self.dim for t in key):
                raise ValueError(f"index out of range in trilinear entry {key}")
            c = Fraction(c)
            if c:
                table[key] = c
        object.__setattr__(self, "entries", table)

    def get(self, i: int, j: int, k: int, l: int) -> Fraction:
        return self.entries.get((i, j, k, l), Fraction(0))

    def is_zero(self) -> bool:
        return not self.entries

    def __add__(self, other: "TrilinearMap") -> "TrilinearMap":
        out = dict(self.entries)
        for key, c in other.entries.items():
            out[key] = out.get(key, Fraction(0)) + c
        return TrilinearMap(self.dim, out)

    def __sub__(self, other: "TrilinearMap") -> "TrilinearMap":
        out = dict(self.entries)
        for key, c in other.entries.items():
            out[key] = out.get(key, Fraction(0)) - c
        return TrilinearMap(self.dim, out)

    def scale(self, factor) -> "TrilinearMap":
        f = Fraction(factor)
        return TrilinearMap(self.dim, {k: f * c for k, c in self.entries.items()})

    def evaluate(self, x: Sequence, y: Sequence, z: Sequence) -> Vec:
        x = as_vec(x)
        y = as_vec(y)
        z = as_vec(z)
        out = [Fraction(0)] * self.dim
        for (i, j, k, l), c in self.entries.items():
            p = x[i - 1]
            if not p:
                continue
            p *= y[j - 1]
            if not p:
                continue
            p *= z[k - 1]
            if p:
                out[l - 1] += c * p
        return tuple(out)


def left_assoc_map(A: Algebra) -> TrilinearMap:
    """(x1 x2) x3 as a trilinear map."""
    by_left: dict[int, list[tuple[int, int, Fraction]]] = defaultdict(list)
    for (m, k, l), c in A.products.items():
        by_left[m].append((k, l, c))
    out: dict[tuple[int, int, int, int], Fraction] = defaultdict(Fraction)
    for (i, j, m), c1 in A.products.items():
        for k, l, c2 in by_left.get(m, ()):
            out[(i, j, k, l)] += c1 * c2
    return TrilinearMap(A.dim, out)


def right_assoc_map(A: Algebra) -> TrilinearMap:
    """x1 (x2 x3) as a trilinear map."""
    by_right: dict[int, list[tuple[int, int, Fraction]]] = defaultdict(list)
    for (i, m, l), c in A.products.items():
        by_right[m].append((i, l, c))
    out: dict[tuple[int, int, int, int], Fraction] = defaultdict(Fraction)
    for (j, k, m), c1 in A.products.items():
        for i, l, c2 in by_right.get(m, ()):
            out[(i, j, k, l)] += c1 * c2
    return TrilinearMap(A.dim, out)


def associator(A: Algebra) -> TrilinearMap:
    """(x1 x2) x3 - x1 (x2 x3)."""
    return left_assoc_map(A) - right_assoc_map(A)


def phi_precompose(T: TrilinearMap, v) -> TrilinearMap:
    """Precompose with the slot-permutation operator of ``v``.

    For a permutation s the operator feeds the factor with index
    s^{-1}(k) into slot k; a group-algebra element acts as the linear
    combination of its permutations.  The homomorphism law
    ``phi_precompose(phi_precompose(T, p), q) ==
    phi_precompose(T, compose(p, q))`` holds with the package's
    composition convention.
    """
    if isinstance(v, Perm3):
        v = GroupAlgElem.from_perm(v)
    out: dict[tuple[int, int, int, int], Fraction] = defaultdict(Fraction)
    for pos, coeff in enumerate(v.coords):
        if not coeff:
            continue
        s = PERMS[pos]
        s1, s2, s3 = s(1), s(2), s(3)
        for (m1, m2, m3, l), c in T.entries.items():
            mm = (m1, m2, m3)
            out[(mm[s1 - 1], mm[s2 - 1], mm[s3 - 1], l)] += coeff * c
    return TrilinearMap(T.dim, out)


def is_sigma3_assoc_for(A: Algebra, v: GroupAlgElem) -> bool:
    """True iff the associator vanishes after slot permutation by ``v``."""
    return phi_precompose(associator(A), v).is_zero()


def _check_index(i: int, low: int = 1) -> None:
    if i not in range(low, 7):
        raise ValueError(f"subgroup index must be in {low}..6, got {i}")


def gi_check(A: Algebra, i: int) -> bool:
    """Signed subgroup sum of slot-permuted associators vanishes.

    Index 1: associative.  2: Vinberg.  3: pre-Lie.  4: triple-product
    reversal identity.  5: generalized Jacobi.  6: Lie-admissible.
    """
    _check_index(i)
    return is_sigma3_assoc_for(A, special_vector(f"a{i}"))


def annihilator(A: Algebra) -> Subspace:
    """All group-algebra vectors v whose slot permutation kills the
    associator: the exact solution set of the linear system with the six
    coordinates of v as unknowns, one equation per tensor coordinate.
    The result is closed under right multiplication by every permutation.
    """
    T = associator(A)
    permuted = [phi_precompose(T, p) for p in PERMS]
    support: set[tuple[int, int, int, int]] = set()
    for pt in permuted:
        support.update(pt.entries.keys())
    rows = [
        tuple(pt.entries.get(key, Fraction(0)) for pt in permuted)
        for key in sorted(support)
    ]
    return kernel(rows, 6)


def annihilator_elements(A: Algebra) -> tuple[GroupAlgElem, ...]:
    return tuple(GroupAlgElem(row) for row in annihilator(A).basis)


def commutator_algebra(A: Algebra) -> Algebra:
    """The bracket algebra [x, y] = xy - yx (no unit)."""
    out: dict[tuple[int, int, int], Fraction] = defaultdict(Fraction)
    for (i, j, k), c in A.products.items():
        out[(i, j, k)] += c
        out[(j, i, k)] -= c
    return Algebra(A.dim, out, unit=None, basis=A.basis)


def jacobi_check(A: Algebra) -> bool:
    """Antisymmetry of the product plus the Jacobi identity on all basis triples."""
    for (i, j, k), c in A.products.items():
        if A.products.get((j, i, k), Fraction(0)) != -c:
            return False
    n = A.dim
    zero = tuple([Fraction(0)] * n)
    es = [basis_vec(n, i) for i in range(1, n + 1)]
    for x, y, z in itertools.product(es, repeat=3):
        total = [Fraction(0)] * n
        for a, b, c3 in ((x, y, z), (y, z, x), (z, x, y)):
            inner = A.multiply(a, b)
            outer = A.multiply(inner, c3)
            for t in range(n):
                total[t] += outer[t]
        if tuple(total) != zero:
            return False
    return True


def power_assoc_check(A: Algebra) -> bool:
    """A(x, x, x) = 0 for all x; equivalent (characteristic zero) to the
    full symmetrization of the associator vanishing, which is what is
    evaluated here."""
    return is_sigma3_assoc_for(A, special_vector("W"))


def gi_bang_check(A: Algebra, i: int) -> bool:
    """Associativity plus the triple-product slot symmetries for index i.

    For index 2 triple products are symmetric in the first two factors,
    for 3 in the last two, for 4 under reversal, for 5 under both cyclic
    rotations (each asserted separately), and for 6 under every slot
    permutation.
    """
    _check_index(i, low=2)
    if not gi_check(A, 1):
        return False
    L = left_assoc_map(A)
    return all(phi_precompose(L, p) == L for p in SUBGROUPS[i][1:])


def is_commutative(A: Algebra) -> bool:
    return all(
        A.products.get((j, i, k), Fraction(0)) == c for (i, j, k), c in A.products.items()
    )


def is_antisymmetric(A: Algebra) -> bool:
    return all(
        A.products.get((j, i, k), Fraction(0)) == -c for (i, j, k), c in A.products.items()
    )


def is_algebra_morphism(images: Sequence[Sequence], source: Algebra, target: Algebra) -> bool:
    """Whether the linear map sending e_j to ``images[j-1]`` intertwines the
    products: f(x y) = f(x) f(y) on all basis pairs."""
    imgs = [as_vec(v) for v in images]
    if len(imgs) != source.dim or any(len(v) != target.dim for v in imgs):
        raise ValueError("morphism images must map the source basis into the target")
    for i in range(1, source.dim + 1):
        for j in range(1, source.dim + 1):
            prod = source.multiply(basis_vec(source.dim, i), basis_vec(source.dim, j))
            lhs = [Fraction(0)] * target.dim
            for k, c in enumerate(prod, start=1):
                if c:
                    for t in range(target.dim):
                        lhs[t] += c * imgs[k - 1][t]
            rhs = target.multiply(imgs[i - 1], imgs[j - 1])
            if tuple(lhs) != rhs:
                return False
    return True


@dataclass(frozen=True)
class ClassificationReport:
    """Aggregated results of all invariance checks for one algebra."""

    gi_assoc: Mapping[int, bool]
    gi_bang: Mapping[int, bool]
    is_associative: bool
    is_lie_admissible: bool
    is_3_power_associative: bool
    has_unit: bool
    annihilator_dim: int
    annihilator_basis: tuple[GroupAlgElem, ...]


def classify(A: Algebra) -> ClassificationReport:
    T = associator(A)
    gi = {
        i: phi_precompose(T, special_vector(f"a{i}")).is_zero() for i in range(1, 7)
    }
    bang = {i: gi_bang_check(A, i) for i in range(2, 7)}
    ann = annihilator(A)
    return ClassificationReport(
        gi_assoc=gi,
        gi_bang=bang,
        is_associative=gi[1],
        is_lie_admissible=gi[6],
        is_3_power_associative=phi_precompose(T, special_vector("W")).is_zero(),
        has_unit=A.unit is not None,
        annihilator_dim=ann.dim,
        annihilator_basis=tuple(GroupAlgElem(row) for row in ann.basis),
    )
