"""Machine checks of the diameter, girth, clique and independence bounds for
unitary Cayley graphs of semirings and of their matrix semirings.

Each check returns a :class:`CheckReport`.  A report carries one clause per
statement of the theorem (the two cases, a "moreover" part, ...) and every
witness it emits has already been re-verified against the graph adjacency.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Sequence

import numpy as np

from . import graph as G
from .core import SemiringTable, profile, units
from .graph import INF, CayleyGraph, Skipped
from .matrix import (GuardExceeded, Matrix, all_matrices_array, cycle_power,
                     diag, identity, mat_add, mat_mul, perm_matrix, scalar_mul,
                     zero_matrix)


class HypothesisError(ValueError):
    """A witness constructor was called outside its theorem's hypotheses."""


class Status(str, Enum):
    APPLIES = "applies"
    FAILS = "fails"
    VACUOUS = "vacuous"


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class Hypothesis:
    status: Status
    reason: str = ""

    def as_dict(self):
        return {"status": self.status.value, "reason": self.reason}


@dataclass(frozen=True)
class WitnessSet:
    kind: str  # independent_set | clique | path | cycle
    members: tuple[int, ...]

    def verify(self, g: CayleyGraph) -> bool:
        if self.kind == "independent_set":
            return G.is_independent(g, self.members)
        if self.kind == "clique":
            return G.is_clique(g, self.members)
        if self.kind == "path":
            return len(self.members) >= 1 and G.is_path(g, self.members)
        if self.kind == "cycle":
            m = self.members
            return len(set(m)) == len(m) >= 3 and G.is_path(g, list(m) + [m[0]])
        raise ValueError(f"unknown witness kind {self.kind!r}")

    def as_dict(self):
        return {"kind": self.kind, "members": list(self.members)}


@dataclass
class CheckReport:
    theorem: str
    hypothesis: Hypothesis
    bound_expr: str = ""
    bound_value: object = None
    computed_value: object = None
    verdict: Verdict = Verdict.SKIPPED
    witnesses: list[WitnessSet] = field(default_factory=list)
    clauses: list[CheckReport] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        d = {
            "theorem": self.theorem,
            "hypothesis": self.hypothesis.as_dict(),
            "bound": {"expr": self.bound_expr, "value": _j(self.bound_value)},
            "computed": _j(self.computed_value),
            "verdict": self.verdict.value,
            "witnesses": [w.as_dict() for w in self.witnesses],
        }
        if self.clauses:
            d["clauses"] = [c.as_dict() for c in self.clauses]
        if self.notes:
            d["notes"] = list(self.notes)
        return d

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)

    def clause(self, name: str) -> CheckReport:
        for c in self.clauses:
            if c.theorem == name:
                return c
        raise KeyError(name)


def _j(v):
    if v is INF:
        return "inf"
    if isinstance(v, Skipped):
        return str(v)
    return v


def _clause(theorem, hyp, expr, bound, computed, holds, witnesses=(), notes=()):
    if hyp.status is not Status.APPLIES:
        verdict = Verdict.SKIPPED
    elif holds is None:
        verdict = Verdict.SKIPPED
    else:
        verdict = Verdict.PASS if holds else Verdict.FAIL
    return CheckReport(theorem, hyp, expr, bound, computed, verdict,
                       list(witnesses), notes=list(notes))


def _aggregate(theorem: str, clauses: list[CheckReport], top: Hypothesis | None = None,
               computed=None, witnesses=(), notes=()) -> CheckReport:
    verdicts = [c.verdict for c in clauses]
    if top is None:
        applied = [c for c in clauses if c.hypothesis.status is Status.APPLIES]
        top = (Hypothesis(Status.APPLIES) if applied
               else Hypothesis(Status.FAILS, "no clause applies"))
    if top.status is not Status.APPLIES:
        verdict = Verdict.SKIPPED
    elif Verdict.FAIL in verdicts:
        verdict = Verdict.FAIL
    elif Verdict.PASS in verdicts:
        verdict = Verdict.PASS
    else:
        verdict = Verdict.SKIPPED
    exprs = [f"{c.theorem}: {c.bound_expr}" for c in clauses
             if c.hypothesis.status is Status.APPLIES]
    return CheckReport(theorem, top, "; ".join(exprs),
                       [_j(c.bound_value) for c in clauses
                        if c.hypothesis.status is Status.APPLIES],
                       computed, verdict, list(witnesses), clauses, list(notes))


# hypotheses -------------------------------------------------------------------

def non_cancellation_witness(s: SemiringTable):
    """(x, y, z) with x+y = x+z and y != z, or None."""
    for x in range(s.n):
        seen = {}
        for y in range(s.n):
            t = s.add[x][y]
            if t in seen:
                return x, seen[t], y
            seen[t] = y
    return None


def cancellative_antiring_hypothesis(s: SemiringTable) -> Hypothesis:
    """Status of 'S is an entire additively cancellative antiring'.

    A finite additively cancellative semiring has (S, +) a group, so an
    antinegative one is trivial.  Nontrivial antirings therefore make the
    hypothesis vacuous; the reason names an explicit cancellation failure.
    """
    p = profile(s)
    if s.n == 1:
        return Hypothesis(Status.APPLIES, "trivial semiring")
    if not p.antinegative:
        return Hypothesis(Status.FAILS, "not an antiring")
    w = non_cancellation_witness(s)
    if w is None:
        raise AssertionError(
            f"{s.name}: finite nontrivial antiring that is additively cancellative")
    x, y, z = (s.elems[i] for i in w)
    return Hypothesis(
        Status.VACUOUS,
        "finite nontrivial antirings are never additively cancellative "
        f"(here {x}+{y} = {x}+{z}); holds in no finite model beyond the trivial one")


def units_sum_to_third_unit(s: SemiringTable):
    """(u, v, w) units with u+v = w and w not in {u, v}, or None."""
    us = units(s)
    for u in us:
        for v in us:
            w = s.add[u][v]
            if w in us and w != u and w != v:
                return u, v, w
    return None


def _entire_antiring(s: SemiringTable) -> bool:
    p = profile(s)
    return p.entire and p.antinegative


# graph access -------------------------------------------------------------------

@lru_cache(maxsize=32)
def _base_graph(s: SemiringTable) -> CayleyGraph:
    return G.cayley_graph(s)


@lru_cache(maxsize=16)
def _mat_graph(s: SemiringTable, k: int, max_vertices: int) -> CayleyGraph:
    if k == 1:
        return _base_graph(s)
    return G.matrix_cayley_graph(s, k, max_vertices=max_vertices)


def matrix_graph(s: SemiringTable, k: int,
                 max_vertices: int = G.MAX_VERTICES) -> CayleyGraph:
    return _mat_graph(s, k, max_vertices)


def _vid(s: SemiringTable, A: Matrix) -> int:
    return A.encode(s.n)


def _loop_erase(seq: list[int]) -> list[int]:
    out: list[int] = []
    where: dict[int, int] = {}
    for v in seq:
        if v in where:
            cut = where[v]
            for u in out[cut + 1:]:
                del where[u]
            out = out[:cut + 1]
        else:
            where[v] = len(out)
            out.append(v)
    return out


# diameter -------------------------------------------------------------------

def diam_base_bound_case1(s: SemiringTable) -> int:
    _, n = profile(s).one_index_period
    return 2 * (n - 1) * len(units(s))


def gamma_element(s: SemiringTable) -> int:
    """Sum over units u of (n-1)·u, n from the one-index period."""
    _, n = profile(s).one_index_period
    return s.sum(s.multiple(n - 1, u) for u in units(s))


def diam_path_witness(s: SemiringTable, k: int, A: Matrix, B: Matrix,
                      case: int | None = None,
                      g: CayleyGraph | None = None) -> WitnessSet:
    """Explicit A-B path in Gamma(M_k(S)) built from powers of the full cycle.

    Case 1 climbs both ends to A + gamma·J = B + gamma·J one scalar unit at a
    time; case 2 uses per-entry units u_ij, v_ij with A_ij+u_ij = B_ij+v_ij.
    Steps that leave the matrix unchanged are dropped and loops erased.
    """
    p = profile(s)
    us = units(s)
    if not p.antinegative:
        raise HypothesisError("path witness needs an antiring")
    if not G.is_connected(_base_graph(s)):
        raise HypothesisError("Gamma(S) is disconnected")
    if case is None:
        case = 2 if p.units_closed_under_addition else 1
    if case == 2 and not p.units_closed_under_addition:
        raise HypothesisError("units are not closed under addition")
    if A == B:
        return WitnessSet("path", (_vid(s, A),))
    powers = [perm_matrix(s, cycle_power(k, c)) for c in range(1, k + 1)]

    if case == 1:
        _, n = p.one_index_period
        steps = [u for u in us for _ in range(n - 1)]
        gam = gamma_element(s)

        def climb(X):
            out = [X]
            for P in powers:
                for u in steps:
                    X = mat_add(s, X, scalar_mul(s, u, P))
                    out.append(X)
            return out

        left, right = climb(A), climb(B)
        J_gamma = Matrix(((gam,) * k,) * k)
        if left[-1] != mat_add(s, A, J_gamma):
            raise AssertionError("cycle powers do not sum to the all-ones matrix")
        if left[-1] != right[-1]:
            raise HypothesisError(
                f"A + gamma·J != B + gamma·J for gamma = {s.elems[gam]}; "
                "the meeting point does not exist for this pair")
        bound = 2 * k * (n - 1) * len(us)
    elif case == 2:
        uv = {}
        for i in range(k):
            for j in range(k):
                a, b = A[i, j], B[i, j]
                pair = next(((u, v) for u in us for v in us
                             if s.add[a][u] == s.add[b][v]), None)
                if pair is None:
                    raise HypothesisError(
                        f"no units u, v with {s.elems[a]}+u = {s.elems[b]}+v")
                uv[i, j] = pair

        def climb(X, which):
            out = [X]
            for c, P in enumerate(powers, start=1):
                sig = cycle_power(k, c)
                D = diag(s, [uv[i, sig[i]][which] for i in range(k)])
                X = mat_add(s, X, mat_mul(s, D, P))
                out.append(X)
            return out

        left, right = climb(A, 0), climb(B, 1)
        if left[-1] != right[-1]:
            raise AssertionError("case-2 climbs failed to meet")
        bound = 2 * k
    else:
        raise ValueError("case must be 1 or 2")

    seq = [_vid(s, X) for X in left] + [_vid(s, X) for X in reversed(right[:-1])]
    dedup = [v for i, v in enumerate(seq) if i == 0 or v != seq[i - 1]]
    w = WitnessSet("path", tuple(_loop_erase(dedup)))
    if len(w.members) - 1 > bound:
        raise AssertionError(f"witness length {len(w.members) - 1} exceeds {bound}")
    if g is not None and not w.verify(g):
        raise AssertionError("path witness is not a path in the graph")
    return w


def _eccentric_pair(g: CayleyGraph):
    """A pair at maximum distance in a connected graph."""
    v = max(range(g.vcount), key=lambda x: (G.eccentricity(g, x), -x))
    d = G.bfs(g, v)
    return v, max(range(g.vcount), key=lambda w: (d[w], -w))


def _diam_clauses(s, k, g, diam, tag):
    p = profile(s)
    us = units(s)
    _, n = p.one_index_period
    out = []
    wit_pair = _eccentric_pair(g) if g.vcount > 1 else (0, 0)
    A = Matrix.decode(wit_pair[0], s.n, k)
    B = Matrix.decode(wit_pair[1], s.n, k)

    def witness(case):
        if not p.antinegative:
            return [], ["path witness needs an antiring; none emitted"]
        try:
            return [diam_path_witness(s, k, A, B, case, g)], []
        except HypothesisError as exc:
            return [], [f"no path witness: {exc}"]

    factor = "" if k == 1 else f"{k}·"
    b1 = 2 * k * (n - 1) * len(us)
    wits, notes = witness(1)
    out.append(_clause(
        f"{tag}(1)",
        Hypothesis(Status.APPLIES, f"m·1 = n·1 with (m, n) = {p.one_index_period}"),
        f"2·{factor}(n-1)·|S*| = 2·{factor}{n - 1}·{len(us)}", b1, diam,
        diam <= b1, wits, notes))
    if p.units_closed_under_addition:
        wits, notes = witness(2)
        out.append(_clause(f"{tag}(2)", Hypothesis(Status.APPLIES, "S* closed under +"),
                           f"2·{k}" if k > 1 else "2", 2 * k, diam, diam <= 2 * k,
                           wits, notes))
    else:
        u, v = next((u, v) for u in us for v in us if s.add[u][v] not in us)
        out.append(_clause(
            f"{tag}(2)",
            Hypothesis(Status.FAILS,
                       f"S* not closed under +: {s.elems[u]}+{s.elems[v]} = "
                       f"{s.elems[s.add[u][v]]}"),
            "2k", 2 * k, diam, None))
    return out


def check_diam_base(s: SemiringTable) -> CheckReport:
    g = _base_graph(s)
    if not G.is_connected(g):
        return CheckReport(
            "diamS", Hypothesis(Status.FAILS, "Gamma(S) is disconnected"),
            computed_value=INF, verdict=Verdict.SKIPPED)
    diam = G.diameter(g)
    clauses = _diam_clauses(s, 1, g, diam, "diamS")
    return _aggregate("diamS", clauses, Hypothesis(Status.APPLIES, "Gamma(S) connected"),
                      diam)


def check_diam_matrix(s: SemiringTable, k: int,
                      max_vertices: int = G.MAX_VERTICES) -> CheckReport:
    if k < 2:
        raise ValueError("k must be at least 2")
    g0 = _base_graph(s)
    if not G.is_connected(g0):
        return CheckReport(
            "diammatS", Hypothesis(Status.FAILS, "Gamma(S) is disconnected"),
            verdict=Verdict.SKIPPED)
    g = matrix_graph(s, k, max_vertices)
    diam = G.diameter(g)
    clauses = _diam_clauses(s, k, g, diam, "diammatS")
    d0 = G.diameter(g0)
    if _entire_antiring(s):
        # first-row matrices a(E_11+..+E_1k), b(E_11+..+E_1k) at base distance d0
        a, b = _eccentric_pair(g0)
        row = lambda x: Matrix(((x,) * k,) + ((s.zero,) * k,) * (k - 1))
        pa, pb = _vid(s, row(a)), _vid(s, row(b))
        d_ab = G.distance(g, pa, pb)
        path = G.shortest_path(g, pa, pb)
        wits = [WitnessSet("path", tuple(path))] if path else []
        clauses.append(_clause(
            "diammatS(moreover)", Hypothesis(Status.APPLIES, "entire antiring"),
            f"k·diam(Gamma(S)) = {k}·{d0}", k * d0, diam,
            diam >= k * d0 and d_ab >= k * d0, wits,
            [f"d(a·row, b·row) = {d_ab} for base pair at distance {d0}"]))
    else:
        clauses.append(_clause("diammatS(moreover)",
                               Hypothesis(Status.FAILS, "not an entire antiring"),
                               "k·diam(Gamma(S))", k * d0 if d0 is not INF else INF,
                               diam, None))
    return _aggregate("diammatS", clauses,
                      Hypothesis(Status.APPLIES, "Gamma(S) connected"), diam)


# girth ---------------------------------------------------------------------------

def four_cycle_witness(s: SemiringTable, k: int) -> WitnessSet:
    """P ~ 0 ~ I ~ I+P for the full-cycle permutation matrix P."""
    P = perm_matrix(s, cycle_power(k, 1))
    Z, I = zero_matrix(s, k), identity(s, k)
    return WitnessSet("cycle", tuple(_vid(s, X) for X in (P, Z, I, mat_add(s, I, P))))


def check_girth_matrix(s: SemiringTable, k: int,
                       max_vertices: int = G.MAX_VERTICES) -> CheckReport:
    if k < 2:
        raise ValueError("k must be at least 2")
    if s.n == 1:
        return CheckReport(
            "girth", Hypothesis(Status.VACUOUS,
                                "trivial semiring: M_k(S) is a single vertex and P = I = 0"),
            computed_value=INF, verdict=Verdict.SKIPPED)
    g = matrix_graph(s, k, max_vertices)
    gi = G.girth(g)
    w4 = four_cycle_witness(s, k)
    clauses = [_clause("girth(<=4)", Hypothesis(Status.APPLIES, "k >= 2"), "4", 4, gi,
                       gi <= 4 and w4.verify(g), [w4])]
    triple = units_sum_to_third_unit(s)
    if triple:
        u, v, w = triple
        tri = WitnessSet("cycle", tuple(_vid(s, X) for X in (
            zero_matrix(s, k), scalar_mul(s, u, identity(s, k)),
            scalar_mul(s, w, identity(s, k)))))
        clauses.append(_clause(
            "girth(1)",
            Hypothesis(Status.APPLIES,
                       f"{s.elems[u]}+{s.elems[v]} = {s.elems[w]} is a third unit"),
            "= 3", 3, gi, gi == 3 and tri.verify(g), [tri]))
    else:
        clauses.append(_clause("girth(1)",
                               Hypothesis(Status.FAILS, "no two units sum to a third unit"),
                               "= 3", 3, gi, None))
    hyp2 = cancellative_antiring_hypothesis(s)
    if triple and hyp2.status is Status.APPLIES:
        hyp2 = Hypothesis(Status.FAILS, "case (1) already applies")
    elif hyp2.status is Status.APPLIES and not profile(s).entire:
        hyp2 = Hypothesis(Status.FAILS, "not entire")
    clauses.append(_clause("girth(2)", hyp2, "= 4", 4, gi,
                           gi == 4 if hyp2.status is Status.APPLIES else None))
    return _aggregate("girth", clauses, Hypothesis(Status.APPLIES, "k >= 2"), gi)


def nat_window_graph(k: int, bound: int,
                     max_vertices: int = G.MAX_VERTICES) -> CayleyGraph:
    """Induced subgraph of Gamma(M_k(N_0)) on matrices with entries <= bound.

    Units of M_k(N_0) are the permutation matrices.  Vertex ids are row-major
    base-(bound+1) integers.
    """
    if k < 1 or bound < 1:
        raise ValueError("need k >= 1 and bound >= 1")
    base = bound + 1
    N = base ** (k * k)
    if N > max_vertices:
        raise GuardExceeded(f"window has {N} vertices, guard {max_vertices}")
    allm = all_matrices_array(base, k)
    ids = np.arange(N)
    weights = base ** np.arange(k * k - 1, -1, -1, dtype=np.int64)
    nb: list[set[int]] = [set() for _ in range(N)]
    for sig in permutations(range(k)):
        P = np.zeros((k, k), dtype=np.int64)
        P[np.arange(k), list(sig)] = 1
        tgt = allm + P
        inside = np.all(tgt <= bound, axis=(1, 2))
        dst = tgt[inside].reshape(-1, k * k) @ weights
        for x, y in zip(ids[inside].tolist(), dst.tolist()):
            nb[x].add(y)
            nb[y].add(x)

    def label(v):
        m = Matrix.decode(v, base, k)
        return "[" + "; ".join(" ".join(map(str, r)) for r in m.entries) + "]"

    return CayleyGraph(N, nb, label, f"Gamma(M{k}(N0))[<= {bound}]")


def nat_window_vertex(rows: Sequence[Sequence[int]], bound: int) -> int:
    return Matrix(rows).encode(bound + 1)


def nat_window_check(k: int, bound: int) -> CheckReport:
    """Evidence for the cancellative girth-4 case on a window of M_k(N_0)."""
    g = nat_window_graph(k, bound)
    gi = G.girth(g)
    notes = ["1+1 = 2 is not a unit of N_0 (units = {1})"]
    if k == 1:
        return CheckReport("natwindow", Hypothesis(Status.APPLIES, "k = 1: path graph"),
                           "inf", INF, gi, Verdict.PASS if gi is INF else Verdict.FAIL,
                           notes=notes)
    I = [[int(i == j) for j in range(k)] for i in range(k)]
    P = [[int(j == (i + 1) % k) for j in range(k)] for i in range(k)]
    IP = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(I, P)]
    Z = [[0] * k for _ in range(k)]
    cyc = WitnessSet("cycle", tuple(nat_window_vertex(m, bound) for m in (Z, P, IP, I)))
    ok = cyc.verify(g) and not G.has_triangle(g) and gi == 4
    return CheckReport("natwindow", Hypothesis(Status.APPLIES, "N_0 window"), "= 4", 4, gi,
                       Verdict.PASS if ok else Verdict.FAIL, [cyc], notes=notes)


# clique --------------------------------------------------------------------------

def lifted_clique(s: SemiringTable, k: int, base_clique: Sequence[int]) -> WitnessSet:
    I = identity(s, k)
    return WitnessSet("clique", tuple(_vid(s, scalar_mul(s, w, I)) for w in base_clique))


def check_clique(s: SemiringTable, k: int, max_vertices: int = G.MAX_VERTICES,
                 clique_guard: int = G.MAX_CLIQUE_VERTICES) -> CheckReport:
    if k < 2:
        raise ValueError("k must be at least 2")
    g0 = _base_graph(s)
    base = G.max_clique(g0, clique_guard)
    if isinstance(base, Skipped):
        return CheckReport("cn", Hypothesis(Status.APPLIES), verdict=Verdict.SKIPPED,
                           computed_value=base)
    g = matrix_graph(s, k, max_vertices)
    lifted = lifted_clique(s, k, base)
    lifted_ok = lifted.verify(g)
    top = G.max_clique(g, clique_guard)
    witnesses = [lifted]
    if isinstance(top, Skipped):
        omega = top
        holds = lifted_ok
        notes = [f"exact omega skipped; lifted clique of size {len(base)} verified: {lifted_ok}"]
    else:
        omega = len(top)
        holds = lifted_ok and omega >= len(base)
        witnesses.append(WitnessSet("clique", tuple(top)))
        notes = []
        if omega > len(base):
            notes.append(f"strict: omega(matrix) = {omega} > omega(base) = {len(base)}")
    ge = _clause("cn(>=)", Hypothesis(Status.APPLIES, "k >= 2"), "omega(Gamma(S))",
                 len(base), omega, holds, witnesses, notes)
    hyp = cancellative_antiring_hypothesis(s)
    if hyp.status is Status.APPLIES and not profile(s).entire:
        hyp = Hypothesis(Status.FAILS, "not entire")
    eq = _clause("cn(=)", hyp, "omega(Gamma(S))", len(base), omega,
                 (omega == len(base)) if hyp.status is Status.APPLIES
                 and not isinstance(omega, Skipped) else None)
    return _aggregate("cn", [ge, eq], Hypothesis(Status.APPLIES, "k >= 2"), omega)


# independence --------------------------------------------------------------------

def w0_closed_form(size: int, k: int) -> int:
    """Matrices with a zero row or column, by inclusion-exclusion."""
    no_zero = sum(math.comb(k, i) * (-1) ** i * (size ** (k - i) - 1) ** k
                  for i in range(k + 1))
    return size ** (k * k) - no_zero


def cycle_term_sum(nunits: int, k: int) -> int:
    """Term-by-term count of W_1 ∪ .. ∪ W_floor(k/2): sum C(k,2i)|S*|^(2ik)."""
    return sum(math.comb(k, 2 * i) * nunits ** (2 * i * k) for i in range(1, k // 2 + 1))


def cycle_term_printed(nunits: int, k: int) -> int:
    """((1+|S*|^(2k))^k + (1-|S*|^(2k))^k)/2 - 1, evaluated as written."""
    q = nunits ** (2 * k)
    return ((1 + q) ** k + (1 - q) ** k) // 2 - 1


def independence_lower_bound(size: int, nunits: int, k: int) -> int:
    return w0_closed_form(size, k) + cycle_term_printed(nunits, k)


def independence_upper_bound(size: int, nunits: int, k: int) -> int:
    return size ** (k * k) - math.factorial(k) * nunits ** k


@dataclass
class IndependenceWitness:
    witness: WitnessSet
    w0_enumerated: int
    w0_closed_form: int
    layer_sizes: list[int]
    cycle_sum: int
    cycle_printed: int
    verified: bool | None

    @property
    def forms_agree(self) -> bool:
        return self.cycle_sum == self.cycle_printed


def independence_lower_witness(s: SemiringTable, k: int,
                               max_vertices: int = G.MAX_VERTICES,
                               g: CayleyGraph | None = None) -> IndependenceWitness:
    """W0 (a zero row or column) plus sums of 2i distinct cycle powers with
    unit diagonals, for i = 1..floor(k/2)."""
    p = profile(s)
    if not (p.entire and p.antinegative):
        raise HypothesisError("needs a finite entire antiring")
    if s.n == 1:
        raise HypothesisError("trivial semiring: 0 = 1 and every layer collapses to 0")
    if k < 2:
        raise ValueError("k must be at least 2")
    N = s.n ** (k * k)
    if N > max_vertices:
        raise GuardExceeded(f"{N} matrices exceeds guard {max_vertices}")
    allm = all_matrices_array(s.n, k)
    nz = allm != s.zero
    zero_row = ~nz.any(axis=2)
    zero_col = ~nz.any(axis=1)
    w0 = np.nonzero(zero_row.any(axis=1) | zero_col.any(axis=1))[0].tolist()

    us = units(s).elements
    layers = []
    members = set(w0)
    for i in range(1, k // 2 + 1):
        layer = set()
        for exps in combinations(range(k), 2 * i):
            for diags in product(product(us, repeat=k), repeat=2 * i):
                ent = [[s.zero] * k for _ in range(k)]
                for c, d in zip(exps, diags):
                    for r in range(k):
                        ent[r][(r + c) % k] = d[r]
                layer.add(Matrix(ent).encode(s.n))
        layers.append(layer)
        members |= layer
    if g is None and N <= max_vertices:
        g = matrix_graph(s, k, max_vertices)
    w = WitnessSet("independent_set", tuple(sorted(members)))
    verified = w.verify(g) if g is not None else None
    return IndependenceWitness(
        w, len(w0), w0_closed_form(s.n, k), [len(x) for x in layers],
        cycle_term_sum(len(us), k), cycle_term_printed(len(us), k), verified)


def kwok_cross_check(g: CayleyGraph) -> tuple[int, dict]:
    """alpha <= max(n - deg(v), floor(n' - e'/Delta')) with v of maximum degree
    and primed quantities taken in the graph without v."""
    v = max(range(g.vcount), key=lambda x: (g.degree(x), -x))
    with_v = g.vcount - g.degree(v)
    h = g.without(v)
    n2, e2, d2 = G.kwok_parameters(h)
    rest = h.vcount if d2 == 0 else math.floor(G.kwok_bound(n2, e2, d2))
    return max(with_v, rest), {"vertex": v, "with_vertex": with_v,
                               "n'": n2, "e'": e2, "Delta'": d2, "without_vertex": rest}


def check_independence(s: SemiringTable, k: int, max_vertices: int = G.MAX_VERTICES,
                       alpha_guard: int = G.MAX_ALPHA_VERTICES) -> CheckReport:
    if k < 2:
        raise ValueError("k must be at least 2")
    p = profile(s)
    upper_hyp = cancellative_antiring_hypothesis(s)
    if s.n == 1:
        upper_hyp = Hypothesis(Status.VACUOUS,
                               "trivial semiring: the k! unit matrices coincide, "
                               "bound is degenerate")
        top = Hypothesis(Status.VACUOUS,
                         "trivial semiring: M_k(S) is one vertex; alpha = 1 and the "
                         "k!|S*|^k unit count collapses")
    elif not (p.entire and p.antinegative):
        top = Hypothesis(Status.FAILS, "not a finite entire antiring")
    else:
        top = Hypothesis(Status.APPLIES, "finite entire antiring")
    if top.status is not Status.APPLIES:
        upper = _clause("independence(upper)", upper_hyp, "|S|^(k^2) - k!|S*|^k",
                        independence_upper_bound(s.n, len(units(s)), k), None, None)
        return _aggregate("independence", [upper], top)

    g = matrix_graph(s, k, max_vertices)
    alpha = G.independence_number(g, alpha_guard)
    exact = not isinstance(alpha, Skipped)
    iw = independence_lower_witness(s, k, max_vertices, g)
    nunits = len(units(s))
    notes = [f"|W0| enumerated = {iw.w0_enumerated}, closed form = {iw.w0_closed_form}",
             f"layer sizes {iw.layer_sizes}; term-by-term sum = {iw.cycle_sum}, "
             f"printed closed form = {iw.cycle_printed}"]
    if not iw.forms_agree:
        notes.append("term-by-term and printed closed forms DISAGREE for this |S*|")
    wsize = len(iw.witness.members)
    clauses = [
        _clause("independence(witness)", top, "|W|", wsize, alpha,
                iw.verified and iw.w0_enumerated == iw.w0_closed_form
                and (not exact or alpha >= wsize),
                [iw.witness], notes),
        _clause("independence(lower)", top,
                "|S|^(k^2) - sum_i C(k,i)(-1)^i(|S|^(k-i)-1)^k "
                "+ ((1+|S*|^(2k))^k + (1-|S*|^(2k))^k)/2 - 1",
                independence_lower_bound(s.n, nunits, k), alpha,
                alpha >= independence_lower_bound(s.n, nunits, k) if exact else None),
        _clause("independence(lower,termwise)", top,
                "|W0| + sum_i C(k,2i)|S*|^(2ik)", iw.w0_closed_form + iw.cycle_sum,
                alpha, alpha >= iw.w0_closed_form + iw.cycle_sum if exact else None),
        _clause("independence(upper)", upper_hyp, "|S|^(k^2) - k!|S*|^k",
                independence_upper_bound(s.n, nunits, k), alpha,
                alpha <= independence_upper_bound(s.n, nunits, k)
                if exact and upper_hyp.status is Status.APPLIES else None),
    ]
    if exact and G.kwok_parameters(g)[2] >= 1:
        kb, detail = kwok_cross_check(g)
        clauses.append(_clause(
            "independence(kwok)", Hypothesis(Status.APPLIES, "exact alpha available"),
            "max(n - deg(v), floor(n' - e'/Delta'))", kb, alpha, alpha <= kb,
            notes=[json.dumps(detail, sort_keys=True)]))
    return _aggregate("independence", clauses, top, alpha)


# runner --------------------------------------------------------------------------

THEOREMS = ("diamS", "diammatS", "girth", "clique", "independence")


def run_check(name: str, s: SemiringTable, k: int = 2,
              max_vertices: int = G.MAX_VERTICES,
              clique_guard: int = G.MAX_CLIQUE_VERTICES,
              alpha_guard: int = G.MAX_ALPHA_VERTICES) -> CheckReport:
    if name == "diamS":
        return check_diam_base(s)
    if name == "diammatS":
        return check_diam_matrix(s, k, max_vertices)
    if name == "girth":
        return check_girth_matrix(s, k, max_vertices)
    if name == "clique":
        return check_clique(s, k, max_vertices, clique_guard)
    if name == "independence":
        return check_independence(s, k, max_vertices, alpha_guard)
    raise ValueError(f"unknown theorem {name!r}")


def check_all(s: SemiringTable, k: int = 2, **guards) -> list[CheckReport]:
    out = []
    for name in THEOREMS:
        try:
            out.append(run_check(name, s, k, **guards))
        except GuardExceeded as exc:
            out.append(CheckReport(name, Hypothesis(Status.APPLIES),
                                   computed_value=Skipped(str(exc)),
                                   verdict=Verdict.SKIPPED))
    return out
