"""Dense square matrices over a finite field.

Matrices and diagonal matrices are immutable values carrying their
field; every operation returns a new object, so they are safe to share
between parallel workers.  Determinants and inverses use closed-form
cofactor expansion up to 3x3 (the hot size here) and Gaussian
elimination above that.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .errors import BudgetError
from .field import GF


def check_permutation(perm, n: int) -> tuple:
    perm = tuple(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{perm} is not a permutation of 0..{n - 1}")
    return perm


class Matrix:
    __slots__ = ("gf", "n", "rows")

    def __init__(self, gf: GF, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n < 1 or any(len(r) != n for r in rows):
            raise ValueError("rows must form a non-empty square grid")
        for r in rows:
            for v in r:
                gf.validate(v)
        self.gf = gf
        self.n = n
        self.rows = rows

    @classmethod
    def identity(cls, gf: GF, n: int) -> "Matrix":
        return cls(gf, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix)
                and self.gf == other.gf and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.gf, self.rows))

    def __repr__(self) -> str:
        return f"Matrix({self.gf!r}, {[list(r) for r in self.rows]})"

    def __matmul__(self, other):
        gf = self.gf
        if isinstance(other, Diagonal):
            if other.gf != gf or len(other.entries) != self.n:
                raise ValueError("dimension or field mismatch")
            d = other.entries
            return Matrix(gf, [[gf.mul(v, d[j]) for j, v in enumerate(row)]
                               for row in self.rows])
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.gf != gf or other.n != self.n:
            raise ValueError("dimension or field mismatch")
        n = self.n
        bt = other.transpose().rows
        return Matrix(gf, [[_dot(gf, row, col) for col in bt] for row in self.rows])

    def apply(self, vec) -> tuple:
        """Matrix-vector product."""
        gf = self.gf
        vec = tuple(vec)
        if len(vec) != self.n:
            raise ValueError("vector length mismatch")
        return tuple(_dot(gf, row, vec) for row in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(self.gf, list(zip(*self.rows)))

    def det(self) -> int:
        gf, r, n = self.gf, self.rows, self.n
        if n == 1:
            return r[0][0]
        if n == 2:
            return gf.sub(gf.mul(r[0][0], r[1][1]), gf.mul(r[0][1], r[1][0]))
        if n == 3:
            m0 = gf.sub(gf.mul(r[1][1], r[2][2]), gf.mul(r[1][2], r[2][1]))
            m1 = gf.sub(gf.mul(r[1][0], r[2][2]), gf.mul(r[1][2], r[2][0]))
            m2 = gf.sub(gf.mul(r[1][0], r[2][1]), gf.mul(r[1][1], r[2][0]))
            return gf.add(gf.sub(gf.mul(r[0][0], m0), gf.mul(r[0][1], m1)),
                          gf.mul(r[0][2], m2))
        return self._det_eliminate()

    def _det_eliminate(self) -> int:
        gf, n = self.gf, self.n
        a = [list(row) for row in self.rows]
        det = 1
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col]), None)
            if pivot is None:
                return 0
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
                det = gf.neg(det)
            det = gf.mul(det, a[col][col])
            pinv = gf.inv(a[col][col])
            for r in range(col + 1, n):
                if a[r][col]:
                    f = gf.mul(a[r][col], pinv)
                    for c in range(col, n):
                        a[r][c] = gf.sub(a[r][c], gf.mul(f, a[col][c]))
        return det

    def inverse(self) -> "Matrix":
        gf, n = self.gf, self.n
        d = self.det()
        if d == 0:
            raise ValueError("matrix is singular")
        if n <= 3:
            dinv = gf.inv(d)
            r = self.rows
            if n == 1:
                return Matrix(gf, [[dinv]])
            if n == 2:
                return Matrix(gf, [[gf.mul(dinv, r[1][1]), gf.mul(dinv, gf.neg(r[0][1]))],
                                   [gf.mul(dinv, gf.neg(r[1][0])), gf.mul(dinv, r[0][0])]])
            adj = [[0] * 3 for _ in range(3)]
            for i in range(3):
                for j in range(3):
                    # cofactor of (j, i), transposed into (i, j)
                    rs = [k for k in range(3) if k != j]
                    cs = [k for k in range(3) if k != i]
                    minor = gf.sub(gf.mul(r[rs[0]][cs[0]], r[rs[1]][cs[1]]),
                                   gf.mul(r[rs[0]][cs[1]], r[rs[1]][cs[0]]))
                    if (i + j) % 2:
                        minor = gf.neg(minor)
                    adj[i][j] = gf.mul(dinv, minor)
            return Matrix(gf, adj)
        return self._inverse_eliminate()

    def _inverse_eliminate(self) -> "Matrix":
        gf, n = self.gf, self.n
        a = [list(row) + [1 if i == j else 0 for j in range(n)]
             for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col]), None)
            if pivot is None:
                raise ValueError("matrix is singular")
            a[col], a[pivot] = a[pivot], a[col]
            pinv = gf.inv(a[col][col])
            a[col] = [gf.mul(pinv, v) for v in a[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [gf.sub(v, gf.mul(f, w)) for v, w in zip(a[r], a[col])]
        return Matrix(gf, [row[n:] for row in a])

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        """The submatrix selected by the given row and column index sets."""
        rows = sorted(set(row_idx))
        cols = sorted(set(col_idx))
        if not rows or len(rows) != len(cols):
            raise ValueError("need non-empty index sets of equal size")
        if rows[0] < 0 or rows[-1] >= self.n or cols[0] < 0 or cols[-1] >= self.n:
            raise ValueError("index out of range")
        return Matrix(self.gf, [[self.rows[i][j] for j in cols] for i in rows])

    def is_mds(self) -> bool:
        """True iff every square submatrix of every order is non-singular."""
        n = self.n
        for row in self.rows:
            if 0 in row:
                return False
        idx = range(n)
        for size in range(2, n + 1):
            for rs in combinations(idx, size):
                for cs in combinations(idx, size):
                    if self.submatrix(rs, cs).det() == 0:
                        return False
        return True

    def is_involutory(self) -> bool:
        return self @ self == Matrix.identity(self.gf, self.n)

    def conjugate(self, perm) -> "Matrix":
        """Simultaneous row/column permutation P A P^T."""
        perm = check_permutation(perm, self.n)
        return Matrix(self.gf, [[self.rows[perm[i]][perm[j]] for j in range(self.n)]
                                for i in range(self.n)])

    def is_reducible(self) -> bool:
        """True iff some P A P^T is block upper triangular with a zero
        lower-left block, over all permutations and split points."""
        n = self.n
        if n == 1:
            raise ValueError("reducibility needs n >= 2")
        if n > 4:
            raise BudgetError("reducibility test enumerates n! permutations; n > 4 rejected")
        zeros = sum(row.count(0) for row in self.rows)
        if zeros < n - 1:
            return False
        for perm in permutations(range(n)):
            for k in range(1, n):
                if all(self.rows[perm[i]][perm[j]] == 0
                       for i in range(k, n) for j in range(k)):
                    return True
        return False

    def to_dict(self) -> dict:
        d = self.gf.to_dict()
        d["n"] = self.n
        d["rows"] = [list(r) for r in self.rows]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Matrix":
        gf = GF.from_dict(d)
        m = cls(gf, d["rows"])
        if "n" in d and int(d["n"]) != m.n:
            raise ValueError("declared n does not match the row grid")
        return m


class Diagonal:
    """A diagonal matrix stored as its diagonal."""

    __slots__ = ("gf", "entries")

    def __init__(self, gf: GF, entries):
        entries = tuple(entries)
        if not entries:
            raise ValueError("empty diagonal")
        for v in entries:
            gf.validate(v)
        self.gf = gf
        self.entries = entries

    @property
    def nonsingular(self) -> bool:
        return 0 not in self.entries

    def as_matrix(self) -> Matrix:
        n = len(self.entries)
        return Matrix(self.gf, [[self.entries[i] if i == j else 0 for j in range(n)]
                                for i in range(n)])

    def inverse(self) -> "Diagonal":
        return Diagonal(self.gf, [self.gf.inv(v) for v in self.entries])

    def scale(self, t: int) -> "Diagonal":
        return Diagonal(self.gf, [self.gf.mul(t, v) for v in self.entries])

    def __matmul__(self, other):
        gf = self.gf
        if isinstance(other, Diagonal):
            if other.gf != gf or len(other.entries) != len(self.entries):
                raise ValueError("dimension or field mismatch")
            return Diagonal(gf, [gf.mul(a, b) for a, b in zip(self.entries, other.entries)])
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.gf != gf or other.n != len(self.entries):
            raise ValueError("dimension or field mismatch")
        return Matrix(gf, [[gf.mul(self.entries[i], v) for v in row]
                           for i, row in enumerate(other.rows)])

    def __eq__(self, other) -> bool:
        return (isinstance(other, Diagonal)
                and self.gf == other.gf and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.gf, self.entries))

    def __repr__(self) -> str:
        return f"Diagonal({self.gf!r}, {list(self.entries)})"


def _dot(gf: GF, u, v) -> int:
    acc = 0
    for a, b in zip(u, v):
        acc = gf.add(acc, gf.mul(a, b))
    return acc
