"""Named example algebras and cogebras with documented provenance.

Every instance is committed as a data file under ``nalg/data`` and is also
regenerable from scratch: the fixed instances are written out directly and
the searched instances come from exhaustive lexicographic searches over
small, fully documented candidate spaces (first hit wins), so regeneration
is deterministic.  ``regenerate`` rebuilds everything and compares it to
the stored files byte for byte, which doubles as a canary for accidental
convention changes.

Search spaces, per instance:

* ``vinberg2`` / ``prelie2`` / ``g4_2`` / ``g5_only``: all 2-dimensional
  tables with the 8 structure constants (ordered by (i, j, k)) ranging
  lexicographically over {-1, 0, 1}.  ``prelie2`` carries one extra
  condition: its tensor product with ``vinberg2`` must have a trivial
  slot-permutation annihilator.  Tiny tables are often degenerate enough
  that a tensor of two non-associative algebras still satisfies some
  slot identity (the first few pre-Lie hits do exactly that), and the
  designated pair exists to witness the opposite, jointly generic
  behavior.
* ``nonjacobi3``: 3-dimensional antisymmetric tables; the 9 constants for
  the pairs (1,2), (1,3), (2,3) times output index range over {-1, 0, 1}.
* ``g2bang3``: 3-dimensional strictly graded tables (products land only in
  strictly higher basis indices, so the candidate slots are (1,1,2),
  (1,1,3), (1,2,3), (2,1,3), (2,2,3)); constants range over {-1, 0, 1}.
  The full unrestricted 3-dimensional space (3**27 tables) is far beyond
  desk scale, so the restriction is part of the instance's definition.
* ``generic3``: 3-dimensional tables supported on the one-sided cyclic
  slots (1,2,3), (2,3,1), (3,1,2) plus the symmetry-breaking slot
  (2,1,1); constants range over {-1, 0, 1}.  This instance has a trivial
  slot-permutation annihilator, which no 2-dimensional algebra can have:
  the alternating sum of the six slot permutations is the triple
  antisymmetrizer, and that operator vanishes identically on a
  2-dimensional space, so every 2-dimensional algebra is Lie-admissible.
"""

from __future__ import annotations

import itertools
from dataclasses import replace
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from . import formats
from .algebras import (
    Algebra,
    annihilator,
    gi_bang_check,
    gi_check,
    is_antisymmetric,
    is_commutative,
    jacobi_check,
)
from .duality import dualize_algebra
from .products import tensor_algebras

_VALUES = (Fraction(-1), Fraction(0), Fraction(1))


def _mat2() -> Algebra:
    # Basis E11, E12, E21, E22 with E_ab * E_cd = [b == c] * E_ad.
    products = {
        (1, 1, 1): 1,
        (1, 2, 2): 1,
        (2, 3, 1): 1,
        (2, 4, 2): 1,
        (3, 1, 3): 1,
        (3, 2, 4): 1,
        (4, 3, 3): 1,
        (4, 4, 4): 1,
    }
    return Algebra(4, products, unit=(1, 0, 0, 1), basis=("E11", "E12", "E21", "E22"), name="mat2")


def _trunc_poly2() -> Algebra:
    # Polynomials modulo x**2: basis 1, x.
    products = {(1, 1, 1): 1, (1, 2, 2): 1, (2, 1, 2): 1}
    return Algebra(2, products, unit=(1, 0), basis=("1", "x"), name="trunc_poly2")


def _k1() -> Algebra:
    return Algebra(1, {(1, 1, 1): 1}, unit=(1,), basis=("1",), name="k1")


def _sl2() -> Algebra:
    # Bracket basis h, e, f: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
    products = {
        (1, 2, 2): 2,
        (2, 1, 2): -2,
        (1, 3, 3): -2,
        (3, 1, 3): 2,
        (2, 3, 1): 1,
        (3, 2, 1): -1,
    }
    return Algebra(3, products, basis=("h", "e", "f"), name="sl2")


_DIM2_SLOTS = tuple(itertools.product((1, 2), repeat=3))


def _dim2_candidates():
    for values in itertools.product(_VALUES, repeat=8):
        yield Algebra(2, dict(zip(_DIM2_SLOTS, values)), basis=("e1", "e2"))


def _first(candidates, predicate, name: str) -> Algebra:
    for A in candidates:
        if predicate(A):
            return replace(A, name=name)
    raise LookupError(f"search space for {name!r} contains no matching instance")


def _vinberg2() -> Algebra:
    return _first(
        _dim2_candidates(),
        lambda A: gi_check(A, 2) and not gi_check(A, 1),
        "vinberg2",
    )


def _prelie2() -> Algebra:
    v2 = _vinberg2()

    def jointly_generic(A: Algebra) -> bool:
        if not (gi_check(A, 3) and not gi_check(A, 1)):
            return False
        return annihilator(tensor_algebras(v2, A)).dim == 0

    return _first(_dim2_candidates(), jointly_generic, "prelie2")


def _g4_2() -> Algebra:
    return _first(
        _dim2_candidates(),
        lambda A: gi_check(A, 4) and not gi_check(A, 1),
        "g4_2",
    )


def _g5_only() -> Algebra:
    return _first(
        _dim2_candidates(),
        lambda A: gi_check(A, 5) and not gi_check(A, 1) and not is_antisymmetric(A),
        "g5_only",
    )


_GENERIC3_SLOTS = ((1, 2, 3), (2, 3, 1), (3, 1, 2), (2, 1, 1))


def _generic3_candidates():
    for values in itertools.product(_VALUES, repeat=4):
        yield Algebra(3, dict(zip(_GENERIC3_SLOTS, values)), basis=("e1", "e2", "e3"))


def _generic3() -> Algebra:
    return _first(
        _generic3_candidates(),
        lambda A: annihilator(A).dim == 0,
        "generic3",
    )


_ANTISYM_PAIRS = ((1, 2), (1, 3), (2, 3))
_ANTISYM_SLOTS = tuple((i, j, k) for (i, j) in _ANTISYM_PAIRS for k in (1, 2, 3))


def _antisym3_candidates():
    for values in itertools.product(_VALUES, repeat=9):
        table: dict[tuple[int, int, int], Fraction] = {}
        for (i, j, k), c in zip(_ANTISYM_SLOTS, values):
            if c:
                table[(i, j, k)] = c
                table[(j, i, k)] = -c
        yield Algebra(3, table, basis=("e1", "e2", "e3"))


def _nonjacobi3() -> Algebra:
    return _first(_antisym3_candidates(), lambda A: not jacobi_check(A), "nonjacobi3")


_GRADED3_SLOTS = ((1, 1, 2), (1, 1, 3), (1, 2, 3), (2, 1, 3), (2, 2, 3))


def _graded3_candidates():
    for values in itertools.product(_VALUES, repeat=5):
        yield Algebra(3, dict(zip(_GRADED3_SLOTS, values)), basis=("e1", "e2", "e3"))


def _g2bang3() -> Algebra:
    return _first(
        _graded3_candidates(),
        lambda A: gi_bang_check(A, 2) and not is_commutative(A),
        "g2bang3",
    )


_BUILDERS = {
    "mat2": _mat2,
    "trunc_poly2": _trunc_poly2,
    "k1": _k1,
    "vinberg2": _vinberg2,
    "prelie2": _prelie2,
    "g4_2": _g4_2,
    "sl2": _sl2,
    "g5_only": _g5_only,
    "g2bang3": _g2bang3,
    "nonjacobi3": _nonjacobi3,
    "generic3": _generic3,
}

ALGEBRA_NAMES: tuple[str, ...] = tuple(_BUILDERS)
COGEBRA_NAMES: tuple[str, ...] = tuple(f"dual_{n}" for n in ALGEBRA_NAMES)
NAMES: tuple[str, ...] = ALGEBRA_NAMES + COGEBRA_NAMES

#: Classification flags each algebra instance is committed to; the test
#: suite checks them against ``classify`` output exactly.
ADVERTISED: dict[str, dict] = {
    "mat2": {
        "gi_assoc": {1: True, 2: True, 3: True, 4: True, 5: True, 6: True},
        "gi_bang": {2: False, 3: False, 4: False, 5: False, 6: False},
        "is_3_power_associative": True,
        "has_unit": True,
        "annihilator_dim": 6,
    },
    "trunc_poly2": {
        "gi_assoc": {1: True, 2: True, 3: True, 4: True, 5: True, 6: True},
        "gi_bang": {2: True, 3: True, 4: True, 5: True, 6: True},
        "is_3_power_associative": True,
        "has_unit": True,
        "annihilator_dim": 6,
    },
    "k1": {
        "gi_assoc": {1: True, 2: True, 3: True, 4: True, 5: True, 6: True},
        "gi_bang": {2: True, 3: True, 4: True, 5: True, 6: True},
        "is_3_power_associative": True,
        "has_unit": True,
        "annihilator_dim": 6,
    },
    "vinberg2": {
        "gi_assoc": {1: False, 2: True, 3: False, 4: False, 5: False, 6: True},
        "gi_bang": {2: False, 3: False, 4: False, 5: False, 6: False},
        "is_3_power_associative": False,
        "has_unit": False,
        "annihilator_dim": 3,
    },
    "prelie2": {
        # The lexicographically first pre-Lie-not-associative table happens
        # to satisfy the index-2 and index-4 identities as well.
        "gi_assoc": {1: False, 2: True, 3: True, 4: True, 5: False, 6: True},
        "gi_bang": {2: False, 3: False, 4: False, 5: False, 6: False},
        "is_3_power_associative": False,
        "has_unit": False,
        "annihilator_dim": 5,
    },
    "g4_2": {
        "gi_assoc": {1: False, 2: False, 3: False, 4: True, 5: False, 6: True},
        "gi_bang": {2: False, 3: False, 4: False, 5: False, 6: False},
        "is_3_power_associative": False,
        "has_unit": False,
        "annihilator_dim": 3,
    },
    "sl2": {
        "gi_assoc": {1: False, 2: False, 3: False, 4: False, 5: True, 6: True},
        "gi_bang": {2: False, 3: False, 4: False, 5: False, 6: False},
        "is_3_power_associative": True,
        "has_unit": False,
        "annihilator_dim": 4,
    },
    "g5_only": {
        "gi_assoc": {1: False, 2: False, 3: False, 4: False, 5: True, 6: True},
        "gi_bang": {2: False, 3: False, 4: False, 5: False, 6: False},
        "is_3_power_associative": True,
        "has_unit": False,
        "annihilator_dim": 4,
    },
    "g2bang3": {
        "gi_assoc": {1: True, 2: True, 3: True, 4: True, 5: True, 6: True},
        "gi_bang": {2: True, 3: True, 4: True, 5: True, 6: True},
        "is_3_power_associative": True,
        "has_unit": False,
        "annihilator_dim": 6,
    },
    "nonjacobi3": {
        # Antisymmetric, so 3-power associativity is automatic even though
        # every signed subgroup identity fails.
        "gi_assoc": {1: False, 2: False, 3: False, 4: False, 5: False, 6: False},
        "gi_bang": {2: False, 3: False, 4: False, 5: False, 6: False},
        "is_3_power_associative": True,
        "has_unit": False,
        "annihilator_dim": 3,
    },
    "generic3": {
        "gi_assoc": {1: False, 2: False, 3: False, 4: False, 5: False, 6: False},
        "gi_bang": {2: False, 3: False, 4: False, 5: False, 6: False},
        "is_3_power_associative": False,
        "has_unit": False,
        "annihilator_dim": 0,
    },
}


def build(name: str):
    """Rebuild an instance from scratch (running its search if it has one)."""
    if name.startswith("dual_"):
        base = build(name[len("dual_"):])
        return replace(dualize_algebra(base), name=name)
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown catalog instance {name!r}") from None
    return builder()


def data_text(name: str) -> str:
    """The committed file contents for an instance."""
    if name not in NAMES:
        raise ValueError(f"unknown catalog instance {name!r}")
    return resources.files("nalg").joinpath("data", f"{name}.json").read_text("utf-8")


@lru_cache(maxsize=None)
def get(name: str):
    """Load an instance from its committed data file."""
    obj = formats.parse_document(data_text(name))
    return replace(obj, name=name)


def regenerate() -> dict[str, str]:
    """Re-run every builder and search and compare the result, serialized,
    against the committed data files.  Raises on any divergence."""
    report: dict[str, str] = {}
    divergent: list[str] = []
    for name in NAMES:
        expected = data_text(name)
        actual = formats.print_document(build(name))
        if actual == expected:
            report[name] = "ok"
        else:
            report[name] = "divergent"
            divergent.append(name)
    if divergent:
        raise ValueError(
            "regenerated instances diverge from committed data: " + ", ".join(divergent)
        )
    return report


def write_data_files(directory) -> None:
    """Write (or overwrite) the committed data files; maintenance helper for
    intentional convention changes."""
    from pathlib import Path

    target = Path(directory)
    target.mkdir(parents=True, exist_ok=True)
    for name in NAMES:
        (target / f"{name}.json").write_text(
            formats.print_document(build(name)), encoding="utf-8"
        )
