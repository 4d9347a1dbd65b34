"""Brute-force model of the complete flag variety over a prime field.

A flag 0 < V_1 < ... < V_{n-1} < F_q^n is stored as an invertible n x n
matrix over F_q in a canonical coset-representative form: V_i is the span of
the first i columns, each column's lowest nonzero entry (largest row index)
is 1, and that pivot row is zero in all later columns.  Two matrices encode
the same flag exactly when their canonical forms coincide, so flag equality
is a matrix comparison.

The relative position of two flags is the permutation read off the incidence
profile r_ij = d_ij - d_{i-1,j} - d_{i,j-1} + d_{i-1,j-1} where
d_ij = dim(V_i meet V'_j).  Concretely, for canonical matrices it is the
pivot-row permutation of the canonicalized matrix inverse(F) * F', which is
the same data; the test suite checks the two computations against each other.

Relative position takes values in the symmetric group S_n, identified with
the Coxeter system A_{n-1} by sending generator i to the transposition
(i, i+1).  This pins an orientation (a position versus its inverse); the
orientation used here is validated by the count identities in the test suite
before any larger run.

Counting is plain exhaustive scanning, exact and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product
from typing import Sequence

from .coxeter import CoxeterSystem, Element, build_system

__all__ = ["Flag", "FlagSpace", "build_space", "canonical_cols"]

Matrix = tuple[tuple[int, ...], ...]  # tuple of columns, each a tuple of rows


@dataclass(frozen=True)
class Flag:
    """A complete flag, as the canonical column matrix described above."""

    cols: Matrix

    def __repr__(self):
        rows = len(self.cols[0])
        body = ";".join(
            " ".join(str(self.cols[j][i]) for j in range(len(self.cols)))
            for i in range(rows)
        )
        return f"Flag[{body}]"


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def canonical_cols(cols: Sequence[Sequence[int]], q: int) -> Matrix:
    """Column-reduce modulo upper-triangular change of basis.

    Processes columns left to right: clears the pivot rows of earlier columns,
    then scales the lowest remaining nonzero entry to 1.  Raises if the matrix
    is singular.
    """
    n = len(cols)
    work = [[c % q for c in col] for col in cols]
    pivots: list[int] = []
    for j in range(n):
        col = work[j]
        for jp in range(j):
            factor = col[pivots[jp]]
            if factor:
                prev = work[jp]
                for i in range(n):
                    if prev[i]:
                        col[i] = (col[i] - factor * prev[i]) % q
        pivot = -1
        for i in range(n - 1, -1, -1):
            if col[i]:
                pivot = i
                break
        if pivot < 0:
            raise ValueError("matrix is singular over F_q")
        inv = pow(col[pivot], q - 2, q)
        if inv != 1:
            for i in range(n):
                if col[i]:
                    col[i] = col[i] * inv % q
        pivots.append(pivot)
    return tuple(tuple(col) for col in work)


def _invert(cols: Matrix, q: int) -> tuple[tuple[int, ...], ...]:
    """Inverse matrix, returned as a tuple of rows for fast row-vector dots."""
    n = len(cols)
    # augmented Gauss-Jordan on rows of the matrix (cols transposed)
    a = [[cols[j][i] for j in range(n)] for i in range(n)]
    inv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        scale = pow(a[col][col], q - 2, q)
        a[col] = [x * scale % q for x in a[col]]
        inv[col] = [x * scale % q for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [(x - f * y) % q for x, y in zip(a[r], a[col])]
                inv[r] = [(x - f * y) % q for x, y in zip(inv[r], inv[col])]
    return tuple(tuple(row) for row in inv)


class FlagSpace:
    """All complete flags in F_q^n, with relative-position machinery.

    The Weyl group is the Coxeter system A_{n-1}; permutations are one-line
    tuples p with p[j-1] = image of j.  Immutable after construction; counts
    are pure scans.
    """

    def __init__(self, n: int, q: int):
        if not _is_prime(q):
            raise ValueError(f"q = {q} is not prime")
        if not 2 <= n <= q - 1:
            raise ValueError(
                f"need 2 <= n <= q - 1 (got n = {n}, q = {q}): "
                "no split regular semisimple element over F_q otherwise"
            )
        self.n = n
        self.q = q
        self.weyl: CoxeterSystem = build_system(f"A{n - 1}")

        self._perm_of: dict[Element, tuple[int, ...]] = {}
        self._elt_of: dict[tuple[int, ...], Element] = {}
        for w in self.weyl.elements:
            perm = list(range(1, n + 1))
            for g in w.word:
                perm[g - 1], perm[g] = perm[g], perm[g - 1]
            self._perm_of[w] = tuple(perm)
            self._elt_of[tuple(perm)] = w

        self.flags: list[Flag] = list(self._enumerate_flags())
        expected = 1
        for k in range(1, n):
            expected *= sum(q**i for i in range(k + 1))
        if len(self.flags) != expected:
            raise AssertionError("flag enumeration does not match the q-factorial")
        self._index = {f.cols: i for i, f in enumerate(self.flags)}
        if len(self._index) != len(self.flags):
            raise AssertionError("flag enumeration has duplicates")
        self._inv_rows = [_invert(f.cols, q) for f in self.flags]

    def _enumerate_flags(self):
        n, q = self.n, self.q
        for w in self.weyl.elements:
            perm = self._perm_of[w]
            pivots = [p - 1 for p in perm]  # pivot row of each column, 0-based
            free: list[list[int]] = []
            for j in range(n):
                taken = set(pivots[:j])
                free.append([i for i in range(pivots[j]) if i not in taken])
            slots = [(j, i) for j in range(n) for i in free[j]]
            for values in iter_product(range(q), repeat=len(slots)):
                cols = [[0] * n for _ in range(n)]
                for j in range(n):
                    cols[j][pivots[j]] = 1
                for (j, i), v in zip(slots, values):
                    cols[j][i] = v
                yield Flag(tuple(tuple(c) for c in cols))

    # -- basic maps ----------------------------------------------------------

    def permutation_of(self, w: Element) -> tuple[int, ...]:
        return self._perm_of[w]

    def element_of_permutation(self, perm: Sequence[int]) -> Element:
        return self._elt_of[tuple(perm)]

    @property
    def standard_flag(self) -> Flag:
        return self.coordinate_flag(self.weyl.identity)

    def coordinate_flag(self, w: Element) -> Flag:
        """The flag spanned by the permuted standard basis for w."""
        perm = self._perm_of[w]
        n = self.n
        cols = tuple(
            tuple(1 if i == perm[j] - 1 else 0 for i in range(n)) for j in range(n)
        )
        return Flag(cols)

    def flag_of_matrix(self, cols: Sequence[Sequence[int]]) -> Flag:
        """Canonicalize an arbitrary invertible matrix into a Flag."""
        return Flag(canonical_cols(cols, self.q))

    def default_torus(self) -> tuple[int, ...]:
        """diag(1, 2, ..., n): distinct nonzero residues since q > n."""
        return tuple(range(1, self.n + 1))

    def _check_torus(self, s: Sequence[int]):
        if len(s) != self.n:
            raise ValueError("diagonal length must equal n")
        residues = [x % self.q for x in s]
        if 0 in residues or len(set(residues)) != self.n:
            raise ValueError(
                "not regular semisimple: diagonal entries must be distinct "
                "and nonzero mod q"
            )

    def torus_fixed_flags(self, s: Sequence[int]) -> list[Flag]:
        """The flags stable under conjugation by diag(s): coordinate flags."""
        self._check_torus(s)
        return [self.coordinate_flag(w) for w in self.weyl.elements]

    def conjugate_flag(self, s: Sequence[int], f: Flag) -> Flag:
        """The flag of s B s^{-1} for B the stabilizer of f: the flag s.f."""
        self._check_torus(s)
        q = self.q
        scaled = [
            [s[i] * f.cols[j][i] % q for i in range(self.n)] for j in range(self.n)
        ]
        return self.flag_of_matrix(scaled)

    # -- relative position -----------------------------------------------------

    def relative_position(self, f1: Flag, f2: Flag) -> Element:
        """The permutation w with incidence profile r_ij = [i = w(j)]."""
        try:
            inv_rows = self._inv_rows[self._index[f1.cols]]
        except KeyError:
            raise ValueError("flag does not belong to this space") from None
        q, n = self.q, self.n
        rel = [
            tuple(sum(r * c for r, c in zip(row, col)) % q for row in inv_rows)
            for col in f2.cols
        ]
        reduced = canonical_cols(rel, q)
        perm = tuple(
            max(i for i in range(n) if col[i]) + 1 for col in reduced
        )
        return self._elt_of[perm]

    # -- exhaustive counts -------------------------------------------------------

    def count_Y_cell(self, s: Sequence[int], base: Flag, z: Element, w: Element) -> int:
        """#{F : pos(base, F) = z and pos(F, s.F) = w}, base torus-fixed."""
        self._check_torus(s)
        if self.conjugate_flag(s, base) != base:
            raise ValueError("base flag is not torus-fixed")
        count = 0
        for f in self.flags:
            if self.relative_position(base, f) != z:
                continue
            if self.relative_position(f, self.conjugate_flag(s, f)) == w:
                count += 1
        return count

    def count_Z(self, base: Flag, base2: Flag, w: Element) -> int:
        """#{F : pos(base, F) = pos(base, base2) and pos(base2, F) = w}."""
        z = self.relative_position(base, base2)
        count = 0
        for f in self.flags:
            if self.relative_position(base, f) != z:
                continue
            if self.relative_position(base2, f) == w:
                count += 1
        return count

    def count_Y_total(self, s: Sequence[int], w: Element) -> int:
        """#{F : pos(F, s.F) = w}."""
        self._check_torus(s)
        count = 0
        for f in self.flags:
            if self.relative_position(f, self.conjugate_flag(s, f)) == w:
                count += 1
        return count

    def __repr__(self):
        return f"FlagSpace(n={self.n}, q={self.q}, {len(self.flags)} flags)"


def build_space(n: int, q: int) -> FlagSpace:
    """Enumerate the complete flags of F_q^n (q prime, 2 <= n <= q - 1)."""
    return FlagSpace(n, q)
