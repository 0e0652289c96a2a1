"""Finite semirings given by addition and multiplication tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as cartesian
from typing import Callable, Sequence


class StructureError(ValueError):
    """A table is malformed (wrong shape, index out of range)."""


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[int, ...]

    def describe(self, elems: Sequence[str] | None = None) -> str:
        if elems is None:
            w = ", ".join(str(i) for i in self.witness)
        else:
            w = ", ".join(elems[i] for i in self.witness)
        return f"{self.axiom} fails at ({w})"


@dataclass(frozen=True)
class SemiringTable:
    name: str
    elems: tuple[str, ...]
    zero: int
    one: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "elems", tuple(self.elems))
        object.__setattr__(self, "add", tuple(tuple(r) for r in self.add))
        object.__setattr__(self, "mul", tuple(tuple(r) for r in self.mul))

    @property
    def n(self) -> int:
        return len(self.elems)

    def plus(self, a: int, b: int) -> int:
        return self.add[a][b]

    def times(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def index(self, name: str) -> int:
        try:
            return self.elems.index(name)
        except ValueError:
            raise KeyError(f"{name!r} is not an element of {self.name}") from None

    def multiple(self, m: int, a: int | None = None) -> int:
        """m·a under repeated addition (a defaults to one)."""
        a = self.one if a is None else a
        acc = self.zero
        for _ in range(m):
            acc = self.add[acc][a]
        return acc

    def sum(self, xs) -> int:
        acc = self.zero
        for x in xs:
            acc = self.add[acc][x]
        return acc

    def renamed(self, name: str) -> SemiringTable:
        return SemiringTable(name, self.elems, self.zero, self.one, self.add, self.mul)


def check_structure(s: SemiringTable) -> None:
    n = len(s.elems)
    if n < 1:
        raise StructureError("a semiring needs at least one element")
    if len(set(s.elems)) != n:
        raise StructureError("element names must be distinct")
    for label, idx in (("zero", s.zero), ("one", s.one)):
        if not (isinstance(idx, int) and 0 <= idx < n):
            raise StructureError(f"{label} index {idx!r} out of range 0..{n - 1}")
    for label, tab in (("add", s.add), ("mul", s.mul)):
        if len(tab) != n:
            raise StructureError(f"{label} table has {len(tab)} rows, expected {n}")
        for i, row in enumerate(tab):
            if len(row) != n:
                raise StructureError(
                    f"{label} row {i} has {len(row)} entries, expected {n}")
            for j, v in enumerate(row):
                if not (isinstance(v, int) and 0 <= v < n):
                    raise StructureError(
                        f"{label}[{i}][{j}] = {v!r} out of range 0..{n - 1}")


def validate(s: SemiringTable) -> list[Violation]:
    """Return every violated semiring axiom with a witness; empty means valid.

    Raises StructureError for malformed tables, which are not axiom failures.
    """
    check_structure(s)
    n, A, M, z, e = s.n, s.add, s.mul, s.zero, s.one
    out: list[Violation] = []
    R = range(n)
    for a in R:
        if A[z][a] != a or A[a][z] != a:
            out.append(Violation("additive identity", (a,)))
        if M[e][a] != a or M[a][e] != a:
            out.append(Violation("multiplicative identity", (a,)))
        if M[z][a] != z or M[a][z] != z:
            out.append(Violation("zero annihilates", (z, a)))
    for a, b in cartesian(R, R):
        if a < b and A[a][b] != A[b][a]:
            out.append(Violation("additive commutativity", (a, b)))
    for a, b, c in cartesian(R, R, R):
        if A[A[a][b]][c] != A[a][A[b][c]]:
            out.append(Violation("additive associativity", (a, b, c)))
        if M[M[a][b]][c] != M[a][M[b][c]]:
            out.append(Violation("multiplicative associativity", (a, b, c)))
        if M[a][A[b][c]] != A[M[a][b]][M[a][c]]:
            out.append(Violation("left distributivity", (a, b, c)))
        if M[A[a][b]][c] != A[M[a][c]][M[b][c]]:
            out.append(Violation("right distributivity", (a, b, c)))
    return out


def is_valid(s: SemiringTable) -> bool:
    try:
        return not validate(s)
    except StructureError:
        return False


@dataclass(frozen=True)
class UnitSet:
    elements: tuple[int, ...]
    inverse: dict[int, int] = field(compare=False)

    def __contains__(self, a: int) -> bool:
        return a in self.inverse

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@lru_cache(maxsize=256)
def units(s: SemiringTable) -> UnitSet:
    inv = {}
    for u in range(s.n):
        for v in range(s.n):
            if s.mul[u][v] == s.one and s.mul[v][u] == s.one:
                inv[u] = v
                break
    return UnitSet(tuple(sorted(inv)), inv)


@dataclass(frozen=True)
class SemiringProfile:
    commutative: bool
    entire: bool
    antinegative: bool
    additively_cancellative: bool
    units_closed_under_addition: bool
    one_index_period: tuple[int, int]

    @property
    def antiring(self) -> bool:
        return self.antinegative

    def as_dict(self) -> dict:
        return {
            "commutative": self.commutative,
            "entire": self.entire,
            "antinegative": self.antinegative,
            "additively_cancellative": self.additively_cancellative,
            "units_closed_under_addition": self.units_closed_under_addition,
            "one_index_period": list(self.one_index_period),
        }


def one_index_period(s: SemiringTable) -> tuple[int, int]:
    """Minimal (m, n), m < n, with m·1 = n·1: smallest n first, then smallest m."""
    seen: dict[int, int] = {}
    acc, i = s.zero, 0
    while True:
        i += 1
        acc = s.add[acc][s.one]
        if acc in seen:
            return seen[acc], i
        seen[acc] = i


@lru_cache(maxsize=256)
def profile(s: SemiringTable) -> SemiringProfile:
    n, A, M, z = s.n, s.add, s.mul, s.zero
    R = range(n)
    us = units(s)
    return SemiringProfile(
        commutative=all(M[a][b] == M[b][a] for a in R for b in R),
        entire=all(M[a][b] != z for a in R for b in R if a != z and b != z),
        antinegative=all(A[a][b] != z for a in R for b in R if (a, b) != (z, z)),
        additively_cancellative=all(len(set(A[x])) == n for x in R),
        units_closed_under_addition=all(A[u][v] in us for u in us for v in us),
        one_index_period=one_index_period(s),
    )


def _from_ops(name: str, elems: Sequence[str], zero: int, one: int,
              add: Callable[[int, int], int],
              mul: Callable[[int, int], int]) -> SemiringTable:
    R = range(len(elems))
    return SemiringTable(
        name, tuple(elems), zero, one,
        tuple(tuple(add(a, b) for b in R) for a in R),
        tuple(tuple(mul(a, b) for b in R) for a in R),
    )


def trivial() -> SemiringTable:
    return _from_ops("trivial", ["0"], 0, 0, lambda a, b: 0, lambda a, b: 0)


def boolean() -> SemiringTable:
    return _from_ops("boolean", ["0", "1"], 0, 1,
                     lambda a, b: a | b, lambda a, b: a & b)


def trunc(n: int) -> SemiringTable:
    """{0, 1, ..., n} with addition and multiplication truncated at n."""
    if n < 1:
        raise ValueError(f"trunc needs n >= 1, got {n}")
    return _from_ops(f"trunc{n}", [str(i) for i in range(n + 1)], 0, 1,
                     lambda a, b: min(a + b, n), lambda a, b: min(a * b, n))


def example_bounds(r: int) -> SemiringTable:
    """{0..r} ∪ {x, 1+x, .., (r-1)+x} with x+x = x·x = x and r absorbing for +.

    Elements are pairs (i, f) meaning i + f·x; any integer part reaching r
    collapses to the plain element r.
    """
    if r < 1:
        raise ValueError(f"example_bounds needs r >= 1, got {r}")
    pairs = [(i, 0) for i in range(r + 1)] + [(i, 1) for i in range(r)]
    names = [str(i) for i in range(r + 1)] + \
        ["x" if i == 0 else f"{i}+x" for i in range(r)]
    index = {p: k for k, p in enumerate(pairs)}

    def norm(i: int, f: int) -> int:
        return index[(r, 0)] if i >= r else index[(i, f)]

    def add(a, b):
        (i, f), (j, g) = pairs[a], pairs[b]
        return norm(i + j, f | g)

    def mul(a, b):
        (i, f), (j, g) = pairs[a], pairs[b]
        xpart = (i > 0 and g) or (j > 0 and f) or (f and g)
        return norm(i * j, int(bool(xpart)))

    return _from_ops(f"bounds{r}", names, 0, 1, add, mul)


def bool_x2() -> SemiringTable:
    """B[x]/(x^2): elements a + b·x with Boolean coefficients."""
    pairs = [(0, 0), (1, 0), (0, 1), (1, 1)]

    def add(p, q):
        (a, b), (c, d) = pairs[p], pairs[q]
        return pairs.index((a | c, b | d))

    def mul(p, q):
        (a, b), (c, d) = pairs[p], pairs[q]
        return pairs.index((a & c, (a & d) | (b & c)))

    return _from_ops("boolx2", ["0", "1", "x", "1+x"], 0, 1, add, mul)


def zmod(n: int) -> SemiringTable:
    if n < 1:
        raise ValueError(f"zmod needs n >= 1, got {n}")
    return _from_ops(f"z{n}", [str(i) for i in range(n)], 0, 1 % n,
                     lambda a, b: (a + b) % n, lambda a, b: (a * b) % n)


def product(s: SemiringTable, t: SemiringTable) -> SemiringTable:
    """Direct product S × T; element (a, b) has index a·|T| + b."""
    m = t.n

    def split(p):
        return divmod(p, m)

    def add(p, q):
        (a, b), (c, d) = split(p), split(q)
        return s.add[a][c] * m + t.add[b][d]

    def mul(p, q):
        (a, b), (c, d) = split(p), split(q)
        return s.mul[a][c] * m + t.mul[b][d]

    names = [f"({x},{y})" for x in s.elems for y in t.elems]
    return _from_ops(f"{s.name}x{t.name}", names,
                     s.zero * m + t.zero, s.one * m + t.one, add, mul)


def builtin(spec: str) -> SemiringTable:
    """Build a semiring from the mini-language

        boolean | trivial | boolx2 | trunc:<n> | bounds:<r> | zmod:<n>
        | product:<spec>,<spec>
    """
    table, rest = _parse_builtin(spec.strip())
    if rest:
        raise ValueError(f"trailing text in builtin spec: {rest!r}")
    return table


_SIMPLE = {"boolean": boolean, "trivial": trivial, "boolx2": bool_x2,
           "bool_x2": bool_x2}
_PARAM = {"trunc": trunc, "bounds": example_bounds, "zmod": zmod}


def _parse_builtin(text: str) -> tuple[SemiringTable, str]:
    head, sep, tail = text.partition(":")
    for word, ctor in _SIMPLE.items():
        if text.startswith(word) and (len(text) == len(word) or text[len(word)] == ","):
            return ctor(), text[len(word):]
    if not sep:
        raise ValueError(f"unknown builtin semiring {text!r}")
    if head == "product":
        left, rest = _parse_builtin(tail)
        if not rest.startswith(","):
            raise ValueError("product needs two comma-separated specs")
        right, rest = _parse_builtin(rest[1:])
        return product(left, right), rest
    if head in _PARAM:
        digits = ""
        while tail and tail[0].isdigit():
            digits, tail = digits + tail[0], tail[1:]
        if not digits:
            raise ValueError(f"{head} needs an integer parameter")
        return _PARAM[head](int(digits)), tail
    raise ValueError(f"unknown builtin semiring {head!r}")
