"""Dualization between finite-dimensional algebras and cogebras.

Dual bases are identified positionally (the functional f_i pairs with the
basis vector e_i), so dualizing transposes the structure constants:
``D[k][(i, j)] = C[(i, j)][k]``.  Units become counits by evaluation and
vice versa.  Both round trips are the identity on the stored data.
"""

from __future__ import annotations

from .algebras import Algebra
from .cogebras import Cogebra


def dualize_algebra(A: Algebra) -> Cogebra:
    """The cogebra on the dual space; the counit, when the algebra has a
    unit, is evaluation at that unit."""
    coproducts = {(k, i, j): c for (i, j, k), c in A.products.items()}
    return Cogebra(
        A.dim,
        coproducts,
        counit=A.unit,
        basis=A.basis,
        name=A.name,
    )


def dualize_cogebra(C: Cogebra) -> Algebra:
    """The algebra on the dual space; the unit, when the cogebra has a
    counit, has the counit's coordinates."""
    products = {(i, j, k): c for (k, i, j), c in C.coproducts.items()}
    return Algebra(
        C.dim,
        products,
        unit=C.counit,
        basis=C.basis,
        name=C.name,
    )
