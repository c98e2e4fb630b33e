"""Coloring quivers: colorings as vertices, endomorphism actions as edges.

Given a diagram d, a finite biquandle Y and a set S of endomorphisms of
Y, the quiver has one vertex per coloring and, for every vertex v and
every f in S, one edge v -> f(v). Post-composition with an endomorphism
sends colorings to colorings, so every edge lands on a vertex. The
structure is a multidigraph: distinct endomorphisms agreeing on a vertex
contribute parallel edges, which keeps all out-degrees equal to |S|.

Free loops contribute unconstrained coordinates; they are materialized
here (appended after the semiarc coordinates) so the quiver is the full
Hom-set object.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .algebra import FiniteBiquandle, is_hom
from .coloring import Coloring, colorings_with_loops
from .diagram import SemiarcDiagram
from .polynomial import ExponentPolynomial

ISO_SIZE_GUARD = 2000


@dataclass(frozen=True)
class ColoringQuiver:
    vertices: tuple[Coloring, ...]
    edges: tuple[tuple[int, int, int], ...]  # (source, target, index into endos)
    endos: tuple[tuple[int, ...], ...]

    def out_degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for src, _, _ in self.edges:
            deg[src] += 1
        return deg

    def in_degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for _, dst, _ in self.edges:
            deg[dst] += 1
        return deg


def build_quiver(d: SemiarcDiagram, Y: FiniteBiquandle, S) -> ColoringQuiver:
    """The coloring quiver of d over Y with edge set S (endomorphisms of Y)."""
    endos = tuple(tuple(f) for f in S)
    for f in endos:
        if not is_hom(Y, Y, f):
            raise ValueError(f"{f} is not an endomorphism of the target biquandle")
    vertices = tuple(colorings_with_loops(d, Y))
    index = {v: i for i, v in enumerate(vertices)}
    edges = []
    for i, v in enumerate(vertices):
        for k, f in enumerate(endos):
            w = tuple(f[x - 1] for x in v)
            edges.append((i, index[w], k))
    return ColoringQuiver(vertices, tuple(edges), endos)


def in_degree_polynomial(q: ColoringQuiver) -> ExponentPolynomial:
    """The distribution of in-degrees, packaged as a polynomial in u."""
    return ExponentPolynomial.from_multiset(q.in_degrees())


def quivers_isomorphic(q1: ColoringQuiver, q2: ColoringQuiver) -> bool:
    """Directed-multigraph isomorphism, ignoring edge labels.

    Decided by iterated in/out-degree neighborhood refinement followed
    by backtracking on the refined classes; guarded to desk scale.
    """
    n1, n2 = len(q1.vertices), len(q2.vertices)
    if max(n1, n2) > ISO_SIZE_GUARD:
        raise ValueError(f"quiver isomorphism guarded to {ISO_SIZE_GUARD} vertices")
    if n1 != n2 or len(q1.edges) != len(q2.edges):
        return False
    a1 = _adjacency(q1, n1)
    a2 = _adjacency(q2, n2)
    col1 = _refine(a1, n1)
    col2 = _refine(a2, n2)
    if sorted(Counter(col1).values()) != sorted(Counter(col2).values()):
        return False
    if sorted(col1) != sorted(col2):
        return False
    return _backtrack(a1, a2, col1, col2, n1)


def _adjacency(q: ColoringQuiver, n: int):
    out_mult: list[dict[int, int]] = [dict() for _ in range(n)]
    in_mult: list[dict[int, int]] = [dict() for _ in range(n)]
    for src, dst, _ in q.edges:
        out_mult[src][dst] = out_mult[src].get(dst, 0) + 1
        in_mult[dst][src] = in_mult[dst].get(src, 0) + 1
    return out_mult, in_mult


def _refine(adj, n: int) -> list[int]:
    out_mult, in_mult = adj
    colors = [0] * n
    for _ in range(n):
        sigs = []
        for v in range(n):
            out_sig = sorted((mult, colors[w]) for w, mult in out_mult[v].items())
            in_sig = sorted((mult, colors[w]) for w, mult in in_mult[v].items())
            sigs.append((colors[v], tuple(out_sig), tuple(in_sig)))
        relabel = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [relabel[s] for s in sigs]
        if new == colors:
            break
        colors = new
    return colors


def _backtrack(a1, a2, col1, col2, n: int) -> bool:
    out1, in1 = a1
    out2, in2 = a2
    # order source vertices by ascending class size, then class id
    class_size = Counter(col1)
    order = sorted(range(n), key=lambda v: (class_size[col1[v]], col1[v], v))
    candidates = {c: [v for v in range(n) if col2[v] == c] for c in set(col2)}
    mapping = [-1] * n
    inverse = [-1] * n
    used = [False] * n

    def assign(v: int, w: int, value: bool):
        mapping[v] = w if value else -1
        inverse[w] = v if value else -1
        used[w] = value

    def rec(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in candidates[col1[v]]:
            if used[w]:
                continue
            ok = True
            for x, mult in out1[v].items():
                y = mapping[x]
                if y != -1 and out2[w].get(y, 0) != mult:
                    ok = False
                    break
            if ok:
                for x, mult in in1[v].items():
                    y = mapping[x]
                    if y != -1 and in2[w].get(y, 0) != mult:
                        ok = False
                        break
            if ok:
                for y, mult in out2[w].items():
                    x = inverse[y]
                    if x != -1 and out1[v].get(x, 0) != mult:
                        ok = False
                        break
            if ok:
                for y, mult in in2[w].items():
                    x = inverse[y]
                    if x != -1 and in1[v].get(x, 0) != mult:
                        ok = False
                        break
            if ok:
                assign(v, w, True)
                if rec(k + 1):
                    return True
                assign(v, w, False)
        return False

    return rec(0)
