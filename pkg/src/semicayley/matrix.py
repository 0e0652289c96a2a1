"""Square matrices over a finite semiring and their units.

Vertex ids: a k×k matrix over a semiring with ``n`` elements is encoded as the
base-``n`` integer whose digits are its entries in row-major order, entry
(0, 0) being the most significant digit.  This encoding is shared with the
graph exports and the theorem witnesses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, permutations, product

import numpy as np

from .core import SemiringTable, profile, units

BRUTE_FORCE_GUARD = 2 ** 16


class GuardExceeded(RuntimeError):
    """A configured size guard would be exceeded."""


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class Matrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))
        if any(len(r) != len(self.entries) for r in self.entries):
            raise DimensionError("matrix must be square")

    @property
    def k(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def flat(self) -> tuple[int, ...]:
        return tuple(x for row in self.entries for x in row)

    def encode(self, n: int) -> int:
        v = 0
        for x in self.flat():
            v = v * n + x
        return v

    @classmethod
    def decode(cls, vid: int, n: int, k: int) -> Matrix:
        digits = []
        for _ in range(k * k):
            vid, d = divmod(vid, n)
            digits.append(d)
        if vid:
            raise ValueError("vertex id out of range")
        digits.reverse()
        return cls(tuple(tuple(digits[i * k:(i + 1) * k]) for i in range(k)))

    def pretty(self, s: SemiringTable) -> str:
        return "[" + "; ".join(" ".join(s.elems[x] for x in row)
                               for row in self.entries) + "]"


def _check_dims(A: Matrix, B: Matrix):
    if A.k != B.k:
        raise DimensionError(f"dimension mismatch: {A.k} vs {B.k}")


def mat_add(s: SemiringTable, A: Matrix, B: Matrix) -> Matrix:
    _check_dims(A, B)
    return Matrix(tuple(tuple(s.add[a][b] for a, b in zip(ra, rb))
                        for ra, rb in zip(A.entries, B.entries)))


def mat_mul(s: SemiringTable, A: Matrix, B: Matrix) -> Matrix:
    _check_dims(A, B)
    k = A.k
    cols = list(zip(*B.entries))
    return Matrix(tuple(
        tuple(s.sum(s.mul[a][b] for a, b in zip(A.entries[i], cols[j]))
              for j in range(k))
        for i in range(k)))


def scalar_mul(s: SemiringTable, c: int, A: Matrix) -> Matrix:
    return Matrix(tuple(tuple(s.mul[c][x] for x in row) for row in A.entries))


def transpose(A: Matrix) -> Matrix:
    return Matrix(tuple(zip(*A.entries)))


def zero_matrix(s: SemiringTable, k: int) -> Matrix:
    return Matrix(((s.zero,) * k,) * k)


def constant(s: SemiringTable, k: int, c: int) -> Matrix:
    return Matrix(((c,) * k,) * k)


def identity(s: SemiringTable, k: int) -> Matrix:
    return diag(s, [s.one] * k)


def e_ij(s: SemiringTable, k: int, i: int, j: int) -> Matrix:
    """1 at (i, j), zero elsewhere; indices are 0-based."""
    return Matrix(tuple(tuple(s.one if (r, c) == (i, j) else s.zero
                              for c in range(k)) for r in range(k)))


def diag(s: SemiringTable, ds) -> Matrix:
    ds = list(ds)
    k = len(ds)
    return Matrix(tuple(tuple(ds[r] if r == c else s.zero for c in range(k))
                        for r in range(k)))


def perm_matrix(s: SemiringTable, sigma) -> Matrix:
    """(P_sigma)[i][sigma[i]] = 1; sigma is a 0-based image tuple."""
    sigma = tuple(sigma)
    k = len(sigma)
    if sorted(sigma) != list(range(k)):
        raise ValueError(f"{sigma} is not a permutation of 0..{k - 1}")
    return Matrix(tuple(tuple(s.one if sigma[r] == c else s.zero for c in range(k))
                        for r in range(k)))


def cycle_power(k: int, c: int) -> tuple[int, ...]:
    """The c-th power of the full cycle (0 1 .. k-1): i -> i + c mod k."""
    return tuple((i + c) % k for i in range(k))


@dataclass(frozen=True)
class OrthDecomposition:
    parts: tuple[int, ...]


def orth_decompositions(s: SemiringTable, r: int) -> list[OrthDecomposition]:
    """Orthogonal decompositions of one with r nonzero parts.

    Parts are necessarily distinct (each is idempotent, so a repeated part
    would square to zero), hence r-subsets suffice.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    nonzero = [a for a in range(s.n) if a != s.zero]
    out = []
    for parts in combinations(nonzero, r):
        if s.sum(parts) != s.one:
            continue
        if all(s.mul[a][b] == s.zero for a in parts for b in parts if a != b):
            out.append(OrthDecomposition(parts))
    return out


class Provenance(str, Enum):
    THEOREM1 = "theorem1"
    BRUTE_FORCE = "brute_force"


@dataclass(frozen=True)
class MatrixUnitSet:
    k: int
    elements: frozenset
    inverse: dict = field(compare=False)
    provenance: Provenance = field(compare=False)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, A):
        return A in self.elements

    def __iter__(self):
        return iter(sorted(self.elements, key=lambda m: m.entries))


def theorem1_applies(s: SemiringTable) -> bool:
    p = profile(s)
    return p.commutative and p.antinegative


def _theorem1_candidates(s: SemiringTable, k: int):
    us = units(s)
    p = profile(s)
    perms = list(permutations(range(k)))
    pmats = [perm_matrix(s, sg) for sg in perms]
    diagonals = [diag(s, ds) for ds in product(us.elements, repeat=k)]
    combos = [(m, transpose(m)) for m in pmats]
    if not (p.entire and s.n > 1):
        # general orthogonal decompositions; entire antirings only have {1}
        r_max = min(math.factorial(k), s.n - 1)
        for r in range(2, r_max + 1):
            decs = orth_decompositions(s, r)
            if not decs:
                break
            for dec in decs:
                for chosen in permutations(range(len(perms)), r):
                    acc = zero_matrix(s, k)
                    acc_t = zero_matrix(s, k)
                    for a, idx in zip(dec.parts, chosen):
                        acc = mat_add(s, acc, scalar_mul(s, a, pmats[idx]))
                        acc_t = mat_add(s, acc_t, scalar_mul(s, a, transpose(pmats[idx])))
                    combos.append((acc, acc_t))
    I = identity(s, k)
    for D in diagonals:
        Dinv = diag(s, [us.inverse[D[i, i]] for i in range(k)])
        for Q, Qt in combos:
            U = mat_mul(s, D, Q)
            V = mat_mul(s, Qt, Dinv)
            if mat_mul(s, U, V) != I or mat_mul(s, V, U) != I:
                raise AssertionError(f"candidate unit {U} failed inverse check")
            yield U, V


def units_theorem1(s: SemiringTable, k: int) -> MatrixUnitSet:
    if not profile(s).commutative:
        raise ValueError("the structural unit enumeration needs a commutative semiring")
    if not profile(s).antinegative:
        raise ValueError("the structural unit enumeration needs an antiring")
    inv = dict(_theorem1_candidates(s, k))
    return MatrixUnitSet(k, frozenset(inv), inv, Provenance.THEOREM1)


def all_matrices_array(n: int, k: int, ids=None) -> np.ndarray:
    """Row-major entries of the given vertex ids (default: all), shape (N, k, k)."""
    if ids is None:
        ids = np.arange(n ** (k * k), dtype=np.int64)
    ids = np.asarray(ids, dtype=np.int64)
    digits = np.empty((len(ids), k * k), dtype=np.int64)
    rest = ids.copy()
    for pos in range(k * k - 1, -1, -1):
        rest, digits[:, pos] = np.divmod(rest, n)
    return digits.reshape(len(ids), k, k)


def encode_array(arr: np.ndarray, n: int) -> np.ndarray:
    k2 = arr.shape[-1] * arr.shape[-2]
    flat = arr.reshape(-1, k2)
    weights = n ** np.arange(k2 - 1, -1, -1, dtype=np.int64)
    return flat @ weights


def _batch_mul(addt: np.ndarray, mult: np.ndarray, A: np.ndarray, B: np.ndarray):
    """Products of stacked matrices, broadcasting A (..., k, k) with B (..., k, k)."""
    k = A.shape[-1]
    out = np.empty(np.broadcast_shapes(A.shape, B.shape), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            acc = mult[A[..., i, 0], B[..., 0, j]]
            for l in range(1, k):
                acc = addt[acc, mult[A[..., i, l], B[..., l, j]]]
            out[..., i, j] = acc
    return out


def units_brute_force(s: SemiringTable, k: int,
                      guard: int = BRUTE_FORCE_GUARD) -> MatrixUnitSet:
    N = s.n ** (k * k)
    if N > guard:
        raise GuardExceeded(f"|S|^(k^2) = {N} exceeds brute-force guard {guard}")
    addt, mult = np.array(s.add), np.array(s.mul)
    allm = all_matrices_array(s.n, k)
    I = np.array(identity(s, k).entries)
    inv = {}
    chunk = max(1, 2_000_000 // N)
    for start in range(0, N, chunk):
        U = allm[start:start + chunk, None]
        prod = _batch_mul(addt, mult, U, allm[None])
        hit = np.all(prod == I, axis=(-1, -2))
        for ui, vi in zip(*np.nonzero(hit)):
            u, v = allm[start + ui], allm[vi]
            if np.array_equal(_batch_mul(addt, mult, v, u), I):
                inv[Matrix(u.tolist())] = Matrix(v.tolist())
    return MatrixUnitSet(k, frozenset(inv), inv, Provenance.BRUTE_FORCE)


def matrix_units(s: SemiringTable, k: int, method: str = "auto",
                 guard: int = BRUTE_FORCE_GUARD) -> MatrixUnitSet:
    """Units of M_k(S).

    ``method="auto"`` takes the structural route for commutative antirings and
    brute force otherwise.
    """
    if method == "auto":
        method = "theorem1" if theorem1_applies(s) else "brute_force"
    if method == "theorem1":
        return units_theorem1(s, k)
    if method == "brute_force":
        return units_brute_force(s, k, guard)
    raise ValueError(f"unknown method {method!r}")


def is_invertible(s: SemiringTable, A: Matrix,
                  guard: int = BRUTE_FORCE_GUARD) -> tuple[bool, Matrix | None]:
    k = A.k
    if theorem1_applies(s):
        us = units_theorem1(s, k)
        return (True, us.inverse[A]) if A in us else (False, None)
    N = s.n ** (k * k)
    if N > guard:
        raise GuardExceeded(f"|S|^(k^2) = {N} exceeds brute-force guard {guard}")
    addt, mult = np.array(s.add), np.array(s.mul)
    allm = all_matrices_array(s.n, k)
    a = np.array(A.entries)
    I = np.array(identity(s, k).entries)
    right = np.all(_batch_mul(addt, mult, a[None], allm) == I, axis=(-1, -2))
    left = np.all(_batch_mul(addt, mult, allm, a[None]) == I, axis=(-1, -2))
    both = np.nonzero(right & left)[0]
    if len(both):
        return True, Matrix(allm[both[0]].tolist())
    return False, None
