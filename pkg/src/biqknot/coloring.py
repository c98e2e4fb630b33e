"""Coloring enumeration and counting for semiarc diagrams.

A coloring assigns a biquandle element to every semiarc so that each
crossing satisfies the convention relations (positive: u_out = u_in .v
o_in and o_out = o_in ." u_in; negative: the inverse pair). Enumeration
runs by worklist propagation, branching only when no crossing can
determine a new semiarc through the forward relations, the inverse
column maps, or the inverse of the sideways map. Bridge-style diagrams
therefore enumerate near-branchlessly.

For linear biquandles an independent route is available: the crossing
relations form an integer matrix mod n whose null space size comes out
of a Smith normal form over Z. Arithmetic is plain Python integers, so
intermediate entries can never overflow.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .algebra import FiniteBiquandle
from .diagram import SemiarcDiagram

Coloring = tuple[int, ...]

BRUTE_FORCE_GUARD = 10**7


def enumerate_colorings(d: SemiarcDiagram, Y: FiniteBiquandle) -> list[Coloring]:
    """All colorings of d's semiarcs by Y, lexicographically sorted.

    Free loops are not materialized; count_colorings folds them in as a
    factor of |Y| each.
    """
    m = d.semiarc_count
    if m == 0:
        return [()]

    # orient each crossing as (p, q, r, s) with relations r = p .v q, s = q ." p
    oriented = []
    for c in d.crossings:
        if c.sign > 0:
            oriented.append((c.u_in, c.o_in, c.u_out, c.o_out))
        else:
            oriented.append((c.u_out, c.o_out, c.u_in, c.o_in))

    incident: list[list[int]] = [[] for _ in range(m)]
    for ci, quad in enumerate(oriented):
        for s in set(quad):
            incident[s].append(ci)

    def propagate(assign: list[int], queue: list[int]) -> bool:
        while queue:
            ci = queue.pop()
            p, q, r, s = oriented[ci]
            vp, vq, vr, vs = assign[p], assign[q], assign[r], assign[s]
            derived: list[tuple[int, int]] = []
            if vp and vq:
                derived = [(r, Y.under(vp, vq)), (s, Y.over(vq, vp))]
            elif vp and vs:
                vq = Y.over_col_inv(vp, vs)
                derived = [(q, vq), (r, Y.under(vp, vq))]
            elif vq and vr:
                vp = Y.under_col_inv(vq, vr)
                derived = [(p, vp), (s, Y.over(vq, vp))]
            elif vr and vs:
                vp, vq = Y.sideways_inv(vs, vr)
                derived = [(p, vp), (q, vq)]
            else:
                continue
            for sem, val in derived:
                if assign[sem] == 0:
                    assign[sem] = val
                    queue.extend(incident[sem])
                elif assign[sem] != val:
                    return False
        return True

    # propagating slot pairs within the oriented quad (p, q, r, s)
    partner_pairs = ((0, 1), (0, 3), (1, 2), (2, 3))

    def pick_branch(assign: list[int]) -> int:
        # prefer a semiarc that completes a propagating pair at some
        # crossing, so the branch seeds a Wirtinger-style cascade
        best = None
        for quad in oriented:
            for i, j in partner_pairs:
                a, b = quad[i], quad[j]
                if assign[a] and not assign[b]:
                    best = b if best is None else min(best, b)
                elif assign[b] and not assign[a]:
                    best = a if best is None else min(best, a)
        if best is not None:
            return best
        return assign.index(0)

    out: list[Coloring] = []

    def search(assign: list[int], queue: list[int]) -> None:
        if not propagate(assign, queue):
            return
        if 0 not in assign:
            out.append(tuple(assign))
            return
        free = pick_branch(assign)
        for v in Y.elements():
            branch = assign.copy()
            branch[free] = v
            search(branch, list(incident[free]))

    search([0] * m, list(range(len(oriented))))
    out.sort()
    return out


def count_colorings(d: SemiarcDiagram, Y: FiniteBiquandle) -> int:
    """Col_Y(d): coloring count including a factor |Y| per free loop."""
    return len(enumerate_colorings(d, Y)) * Y.size**d.free_loops


def brute_force_colorings(d: SemiarcDiagram, Y: FiniteBiquandle) -> list[Coloring]:
    """Direct filter over all |Y|^semiarcs assignments (test oracle)."""
    if Y.size**d.semiarc_count > BRUTE_FORCE_GUARD:
        raise ValueError(f"brute force over {Y.size}^{d.semiarc_count} assignments refused")
    out = []
    for cand in itertools.product(Y.elements(), repeat=d.semiarc_count):
        if satisfies_relations(d, Y, cand):
            out.append(cand)
    return out


def satisfies_relations(d: SemiarcDiagram, Y: FiniteBiquandle, assign) -> bool:
    for c in d.crossings:
        if c.sign > 0:
            u, o = assign[c.u_in], assign[c.o_in]
            if assign[c.u_out] != Y.under(u, o) or assign[c.o_out] != Y.over(o, u):
                return False
        else:
            u, o = assign[c.u_out], assign[c.o_out]
            if assign[c.u_in] != Y.under(u, o) or assign[c.o_in] != Y.over(o, u):
                return False
    return True


def colorings_with_loops(d: SemiarcDiagram, Y: FiniteBiquandle) -> list[Coloring]:
    """Colorings with free-loop values materialized as trailing coordinates.

    Quivers and enhancements act on the full Hom set, so crossingless
    components contribute |Y| independent choices each, appended after
    the semiarc coordinates in sorted order.
    """
    base = enumerate_colorings(d, Y)
    if d.free_loops == 0:
        return base
    out = []
    for col in base:
        for extra in itertools.product(Y.elements(), repeat=d.free_loops):
            out.append(col + extra)
    out.sort()
    return out


# -- linear path: relation matrices and Smith normal form ----------------------


@dataclass(frozen=True)
class RelationMatrix:
    """Homogeneous crossing relations of a linear biquandle, mod n."""

    rows: tuple[tuple[int, ...], ...]
    modulus: int
    cols: int


def coloring_matrix(d: SemiarcDiagram, Y: FiniteBiquandle) -> RelationMatrix:
    """The 2-rows-per-crossing relation matrix for a linear biquandle.

    With x ." y = ax + by and x .v y = cx + dy mod n, a positive
    crossing contributes u_out - c*u_in - d*o_in = 0 and
    o_out - a*o_in - b*u_in = 0; a negative crossing contributes the
    same relations read through its inverse orientation.
    """
    if Y.linear_params is None:
        raise ValueError("coloring_matrix requires a biquandle built by make_linear_biquandle")
    n, a, b, c, dd = Y.linear_params
    rows = []
    for cr in d.crossings:
        if cr.sign > 0:
            p, q, r, s = cr.u_in, cr.o_in, cr.u_out, cr.o_out
        else:
            p, q, r, s = cr.u_out, cr.o_out, cr.u_in, cr.o_in
        row1 = [0] * d.semiarc_count
        row1[r] += 1
        row1[p] -= c
        row1[q] -= dd
        row2 = [0] * d.semiarc_count
        row2[s] += 1
        row2[q] -= a
        row2[p] -= b
        rows.append(tuple(v % n for v in row1))
        rows.append(tuple(v % n for v in row2))
    return RelationMatrix(tuple(rows), n, d.semiarc_count)


def snf_diagonal(rows) -> list[int]:
    """Nonzero diagonal of the Smith normal form of an integer matrix.

    Pivots are chosen by smallest nonzero absolute value to control
    entry growth; unbounded Python integers make the reduction exact
    regardless. The returned entries are positive and form a
    divisibility chain.
    """
    A = [list(r) for r in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    diag: list[int] = []
    t = 0
    while t < m and t < n:
        # locate smallest nonzero entry in the working submatrix
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(A[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            break
        _, bi, bj = best
        A[t], A[bi] = A[bi], A[t]
        for row in A:
            row[t], row[bj] = row[bj], row[t]
        while True:
            pivot = A[t][t]
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // pivot
                    for j in range(t, n):
                        A[i][j] -= q * A[t][j]
                    if A[i][t]:
                        A[t], A[i] = A[i], A[t]
                        done = False
                        break
            if not done:
                continue
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // pivot
                    for i in range(t, m):
                        A[i][j] -= q * A[i][t]
                    if A[t][j]:
                        for row in A:
                            row[t], row[j] = row[j], row[t]
                        done = False
                        break
            if done:
                break
        diag.append(abs(A[t][t]))
        t += 1
    # enforce the divisibility chain d1 | d2 | ...
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if b % a:
                g = math.gcd(a, b)
                diag[i], diag[i + 1] = g, a * b // g
                changed = True
    return diag


def count_solutions_snf(M: RelationMatrix) -> int:
    """Number of x in (Z/n)^cols with Mx = 0 mod n, via Smith normal form.

    With nonzero diagonal d_1..d_r over Z the count is
    n^(cols - r) * prod_i gcd(d_i, n).
    """
    if M.modulus < 1:
        raise ValueError("modulus must be >= 1")
    diag = snf_diagonal(M.rows)
    count = M.modulus ** (M.cols - len(diag))
    for dv in diag:
        count *= math.gcd(dv, M.modulus)
    return count


def count_solutions_bruteforce(M: RelationMatrix, guard: int = BRUTE_FORCE_GUARD) -> int:
    """Count null vectors by direct enumeration (oracle for the SNF path)."""
    n = M.modulus
    if n**M.cols > guard:
        raise ValueError(f"brute force over {n}^{M.cols} vectors refused")
    count = 0
    for vec in itertools.product(range(n), repeat=M.cols):
        if all(sum(cf * v for cf, v in zip(row, vec)) % n == 0 for row in M.rows):
            count += 1
    return count
