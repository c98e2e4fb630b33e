"""Column group enhancement of the quandle counting invariant.

Each coloring uses a set of quandle labels; those labels generate a
subquandle, each of whose elements names a column of the quandle table,
hence a permutation. Recording the order of the permutation group
generated by these columns, one entry per coloring, gives a multiset of
cardinality Col_Q(d), packaged as a polynomial (orders as exponents,
multiplicities as coefficients).

Only defined for quandles: for a general biquandle it is ambiguous
which table's columns should act, so anything else is rejected.
"""

from __future__ import annotations

from .algebra import FiniteBiquandle, Quandle, column_permutation, group_order, subquandle_closure
from .coloring import colorings_with_loops
from .diagram import SemiarcDiagram
from .polynomial import ExponentPolynomial


def column_group_multiset(d: SemiarcDiagram, Q: FiniteBiquandle, cap: int | None = None) -> list[int]:
    """One subgroup order per coloring of d by the quandle Q."""
    if not Q.is_quandle():
        raise ValueError("column group enhancement is defined for quandles only")
    if not isinstance(Q, Quandle):
        Q = Quandle(Q.size, Q.over_table, Q.under_table)
    kwargs = {} if cap is None else {"cap": cap}
    order_of_subquandle: dict[frozenset[int], int] = {}
    out = []
    for coloring in colorings_with_loops(d, Q):
        labels = frozenset(coloring)
        if not labels:
            out.append(1)  # empty diagram: no columns act, trivial group
            continue
        sub = subquandle_closure(Q, labels)
        if sub not in order_of_subquandle:
            cols = [column_permutation(Q, y) for y in sorted(sub)]
            order_of_subquandle[sub] = group_order(cols, **kwargs)
        out.append(order_of_subquandle[sub])
    return out


def column_group_polynomial(d: SemiarcDiagram, Q: FiniteBiquandle,
                            cap: int | None = None) -> ExponentPolynomial:
    """The column group enhancement as a polynomial in u."""
    return ExponentPolynomial.from_multiset(column_group_multiset(d, Q, cap))
