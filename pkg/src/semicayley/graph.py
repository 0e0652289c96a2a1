"""Unitary Cayley graphs and exact invariants.

Adjacency is kept twice: sorted neighbour tuples for traversal and Python
ints as bitsets for the clique search and frontier expansion.
"""

from __future__ import annotations

import csv
import io
import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Callable, Iterable, Sequence

import numpy as np

from .core import SemiringTable, units as semiring_units
from .matrix import (GuardExceeded, Matrix, MatrixUnitSet, all_matrices_array,
                     encode_array, matrix_units)

MAX_VERTICES = 2 ** 16
MAX_CLIQUE_VERTICES = 2 ** 14
MAX_ALPHA_VERTICES = 2 ** 10


@total_ordering
class Infinity:
    """The value of a distance, diameter or girth that does not exist."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("inf")

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"


INF = Infinity()


@dataclass(frozen=True)
class Skipped:
    reason: str

    def __str__(self):
        return f"skipped({self.reason})"


class CayleyGraph:
    def __init__(self, vcount: int, neighbours: Sequence[Iterable[int]],
                 label: Callable[[int], str] | None = None, name: str = ""):
        self.vcount = vcount
        self.nbrs = tuple(tuple(sorted(ns)) for ns in neighbours)
        self.adj = tuple(sum(1 << w for w in ns) for ns in self.nbrs)
        self.label = label or str
        self.name = name
        self._cache: dict = {}

    def __repr__(self):
        return f"CayleyGraph({self.name!r}, vcount={self.vcount}, edges={self.edge_count})"

    def adjacent(self, x: int, y: int) -> bool:
        return bool(self.adj[x] >> y & 1)

    def degree(self, v: int) -> int:
        return len(self.nbrs[v])

    @property
    def edge_count(self) -> int:
        return sum(len(ns) for ns in self.nbrs) // 2

    def edges(self):
        for u, ns in enumerate(self.nbrs):
            for w in ns:
                if u < w:
                    yield u, w

    def check_simple(self) -> None:
        for u, ns in enumerate(self.nbrs):
            if u in ns:
                raise AssertionError(f"loop at {u}")
            for w in ns:
                if not self.adj[w] >> u & 1:
                    raise AssertionError(f"edge {u}-{w} is not symmetric")

    def induced(self, vertices: Sequence[int]) -> CayleyGraph:
        """Induced subgraph, relabelled 0..len(vertices)-1 in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        nb = [[pos[w] for w in self.nbrs[v] if w in pos] for v in vertices]
        label = self.label
        return CayleyGraph(len(vertices), nb, lambda i: label(vertices[i]),
                           f"{self.name}[induced]")

    def without(self, v: int) -> CayleyGraph:
        return self.induced([u for u in range(self.vcount) if u != v])

    def complement(self) -> CayleyGraph:
        full = (1 << self.vcount) - 1
        nb = []
        for v in range(self.vcount):
            bits = full & ~self.adj[v] & ~(1 << v)
            nb.append(_bits(bits))
        return CayleyGraph(self.vcount, nb, self.label, f"co-{self.name}")


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def build_graph(vcount: int, add: Callable[[int, int], int], units: Sequence[int],
                label: Callable[[int], str] | None = None, name: str = "",
                max_vertices: int = MAX_VERTICES) -> CayleyGraph:
    """Edge {x, x+u} for every vertex x and unit u with x+u != x."""
    if vcount > max_vertices:
        raise GuardExceeded(f"{vcount} vertices exceeds guard {max_vertices}")
    if not units:
        raise ValueError("unit list must be nonempty")
    nb: list[set[int]] = [set() for _ in range(vcount)]
    for x in range(vcount):
        for u in units:
            y = add(x, u)
            if y != x:
                nb[x].add(y)
                nb[y].add(x)
    return CayleyGraph(vcount, nb, label, name)


def cayley_graph(s: SemiringTable, max_vertices: int = MAX_VERTICES) -> CayleyGraph:
    us = semiring_units(s)
    return build_graph(s.n, s.plus, us.elements, lambda v: s.elems[v],
                       f"Gamma({s.name})", max_vertices)


def matrix_cayley_graph(s: SemiringTable, k: int, unit_set: MatrixUnitSet | None = None,
                        method: str = "auto",
                        max_vertices: int = MAX_VERTICES) -> CayleyGraph:
    """Gamma(M_k(S)) on the row-major base-|S| vertex ids."""
    N = s.n ** (k * k)
    if N > max_vertices:
        raise GuardExceeded(f"|S|^(k^2) = {N} vertices exceeds guard {max_vertices}")
    if unit_set is None:
        unit_set = matrix_units(s, k, method)
    addt = np.array(s.add)
    allm = all_matrices_array(s.n, k)
    src = np.arange(N)
    nb: list[set[int]] = [set() for _ in range(N)]
    for U in unit_set:
        dst = encode_array(addt[allm, np.array(U.entries)], s.n)
        moved = dst != src
        for x, y in zip(src[moved].tolist(), dst[moved].tolist()):
            nb[x].add(y)
            nb[y].add(x)

    def label(v: int) -> str:
        return Matrix.decode(v, s.n, k).pretty(s)

    g = CayleyGraph(N, nb, label, f"Gamma(M{k}({s.name}))")
    g.semiring, g.k = s, k
    return g


# distances ------------------------------------------------------------------

def bfs(g: CayleyGraph, src: int) -> list:
    dist: list = [INF] * g.vcount
    dist[src] = 0
    q = deque([src])
    while q:
        u = q.popleft()
        for w in g.nbrs[u]:
            if dist[w] is INF:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def distance(g: CayleyGraph, x: int, y: int):
    return bfs(g, x)[y]


def shortest_path(g: CayleyGraph, x: int, y: int) -> list[int] | None:
    parent = {x: None}
    q = deque([x])
    while q:
        u = q.popleft()
        if u == y:
            path = []
            while u is not None:
                path.append(u)
                u = parent[u]
            return path[::-1]
        for w in g.nbrs[u]:
            if w not in parent:
                parent[w] = u
                q.append(w)
    return None


def eccentricity(g: CayleyGraph, src: int):
    """Largest BFS layer index from src, or INF when some vertex is unreached."""
    seen = 1 << src
    frontier = seen
    depth = 0
    while True:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= g.adj[low.bit_length() - 1]
            f ^= low
        nxt &= ~seen
        if not nxt:
            break
        seen |= nxt
        frontier = nxt
        depth += 1
    return depth if seen.bit_count() == g.vcount else INF


def is_connected(g: CayleyGraph) -> bool:
    return g.vcount <= 1 or eccentricity(g, 0) is not INF


def diameter(g: CayleyGraph):
    if "diameter" not in g._cache:
        if not is_connected(g):
            g._cache["diameter"] = INF
        else:
            g._cache["diameter"] = max((eccentricity(g, v) for v in range(g.vcount)),
                                       default=0)
    return g._cache["diameter"]


def diameter_floyd(g: CayleyGraph):
    """All-pairs recomputation by Floyd-Warshall; an oracle for small graphs."""
    n = g.vcount
    d = np.full((n, n), np.inf)
    np.fill_diagonal(d, 0)
    for u, w in g.edges():
        d[u, w] = d[w, u] = 1
    for m in range(n):
        d = np.minimum(d, d[:, m:m + 1] + d[m:m + 1, :])
    top = d.max() if n else 0
    return INF if np.isinf(top) else int(top)


# girth ----------------------------------------------------------------------

def girth(g: CayleyGraph):
    if "girth" in g._cache:
        return g._cache["girth"]
    best = INF
    for root in range(g.vcount):
        dist = {root: 0}
        parent = {root: -1}
        q = deque([root])
        while q:
            u = q.popleft()
            du = dist[u]
            # cycles first seen at u have length >= 2*du + 1
            if best is not INF and 2 * du + 1 >= best:
                break
            for w in g.nbrs[u]:
                if w not in dist:
                    dist[w] = du + 1
                    parent[w] = u
                    q.append(w)
                elif w != parent[u]:
                    length = du + dist[w] + 1
                    if best is INF or length < best:
                        best = length
        if best == 3:
            break
    g._cache["girth"] = best
    return best


def has_triangle(g: CayleyGraph) -> bool:
    return any(g.adj[u] & g.adj[w] for u, w in g.edges())


# cliques ----------------------------------------------------------------------

def _max_clique(adj: Sequence[int], n: int) -> list[int]:
    """Branch and bound with greedy colouring bounds over bitsets."""
    if n == 0:
        return []
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    pos = {v: i for i, v in enumerate(order)}
    radj = []
    for v in order:
        bits = 0
        for w in _bits(adj[v]):
            bits |= 1 << pos[w]
        radj.append(bits)

    best: list[int] = [0]

    def colour_sort(P: int):
        out = []
        colour = 0
        Q = P
        while Q:
            colour += 1
            R = Q
            while R:
                low = R & -R
                v = low.bit_length() - 1
                R &= ~radj[v] & ~low
                Q &= ~low
                out.append((v, colour))
        return out

    def expand(C: list[int], P: int):
        for v, colour in reversed(colour_sort(P)):
            if len(C) + colour <= len(best):
                return
            C.append(v)
            NP = P & radj[v]
            if NP:
                expand(C, NP)
            elif len(C) > len(best):
                best[:] = C
            C.pop()
            P &= ~(1 << v)

    expand([], (1 << n) - 1)
    return sorted(order[i] for i in best)


def max_clique(g: CayleyGraph, guard: int = MAX_CLIQUE_VERTICES):
    if g.vcount > guard:
        return Skipped(f"{g.vcount} vertices > clique guard {guard}")
    if "max_clique" not in g._cache:
        g._cache["max_clique"] = _max_clique(g.adj, g.vcount)
    return g._cache["max_clique"]


def max_independent_set(g: CayleyGraph, guard: int = MAX_ALPHA_VERTICES):
    if g.vcount > guard:
        return Skipped(f"{g.vcount} vertices > independence guard {guard}")
    if "max_independent" not in g._cache:
        full = (1 << g.vcount) - 1
        co = [full & ~g.adj[v] & ~(1 << v) for v in range(g.vcount)]
        g._cache["max_independent"] = _max_clique(co, g.vcount)
    return g._cache["max_independent"]


def clique_number(g: CayleyGraph, guard: int = MAX_CLIQUE_VERTICES):
    c = max_clique(g, guard)
    return c if isinstance(c, Skipped) else len(c)


def independence_number(g: CayleyGraph, guard: int = MAX_ALPHA_VERTICES):
    c = max_independent_set(g, guard)
    return c if isinstance(c, Skipped) else len(c)


def is_clique(g: CayleyGraph, vs: Sequence[int]) -> bool:
    vs = list(vs)
    return len(set(vs)) == len(vs) and all(
        g.adjacent(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])


def is_independent(g: CayleyGraph, vs: Sequence[int]) -> bool:
    vs = list(vs)
    return len(set(vs)) == len(vs) and not any(
        g.adjacent(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])


def is_path(g: CayleyGraph, vs: Sequence[int]) -> bool:
    return all(g.adjacent(a, b) for a, b in zip(vs, vs[1:]))


def kwok_bound(nvertices: int, nedges: int, maxdegree: int) -> Fraction:
    """Upper bound n - e/Delta on the independence number."""
    if maxdegree < 1:
        raise ValueError("maximum degree must be at least 1")
    return Fraction(nvertices) - Fraction(nedges, maxdegree)


def kwok_parameters(g: CayleyGraph) -> tuple[int, int, int]:
    return g.vcount, g.edge_count, max((g.degree(v) for v in range(g.vcount)), default=0)


# reports ----------------------------------------------------------------------

ALL_INVARIANTS = ("connected", "diameter", "girth", "omega", "alpha", "degrees")


@dataclass
class InvariantReport:
    connected: bool | None = None
    diameter: object = None
    girth: object = None
    clique_number: object = None
    independence_number: object = None
    degree_min: int | None = None
    degree_max: int | None = None
    regular: bool | None = None

    def as_dict(self) -> dict:
        return {
            "connected": self.connected,
            "diameter": _jsonable(self.diameter),
            "girth": _jsonable(self.girth),
            "omega": _jsonable(self.clique_number),
            "alpha": _jsonable(self.independence_number),
            "degree_min": self.degree_min,
            "degree_max": self.degree_max,
            "regular": self.regular,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)


def _jsonable(v):
    if v is INF:
        return "inf"
    if isinstance(v, Skipped):
        return str(v)
    return v


def invariants(g: CayleyGraph, which: Iterable[str] = ALL_INVARIANTS,
               clique_guard: int = MAX_CLIQUE_VERTICES,
               alpha_guard: int = MAX_ALPHA_VERTICES) -> InvariantReport:
    which = set(which)
    unknown = which - set(ALL_INVARIANTS)
    if unknown:
        raise ValueError(f"unknown invariants: {sorted(unknown)}")
    rep = InvariantReport()
    if "connected" in which or "diameter" in which:
        rep.connected = is_connected(g)
    if "diameter" in which:
        rep.diameter = diameter(g)
    if "girth" in which:
        rep.girth = girth(g)
    if "omega" in which:
        rep.clique_number = clique_number(g, clique_guard)
    if "alpha" in which:
        rep.independence_number = independence_number(g, alpha_guard)
    if "degrees" in which:
        degs = [g.degree(v) for v in range(g.vcount)]
        rep.degree_min, rep.degree_max = min(degs), max(degs)
        rep.regular = rep.degree_min == rep.degree_max
    return rep


def to_dot(g: CayleyGraph) -> str:
    out = [f"graph {json.dumps(g.name or 'G')} {{"]
    for v in range(g.vcount):
        out.append(f"  {v} [label={json.dumps(g.label(v))}];")
    for u, w in g.edges():
        out.append(f"  {u} -- {w};")
    out.append("}")
    return "\n".join(out) + "\n"


def to_csv(g: CayleyGraph) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["source", "target"])
    w.writerows(g.edges())
    return buf.getvalue()
