"""Semi-involutory detection.

A non-singular matrix A is semi-involutory when A^{-1} = D1 A D2 for
non-singular diagonal D1, D2, or equivalently when ADA is non-singular
and diagonal for some diagonal D (the "associated diagonal").  Two
detectors are provided:

* `si_oracle` enumerates every non-singular diagonal and is therefore
  valid for any small field and size, at (q-1)^n cost;
* `si_check_3x3` decides the 3x3 case from the entries alone, by a
  three-branch case split on the zero pattern, and is what the bulk
  scans rely on.

The two must agree everywhere; the test suite compares them
exhaustively over GF(4) and on large samples over GF(8) and GF(16).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

import numpy as np

from ._tables import mul_table, nonzero_grid
from .errors import BudgetError, InternalMismatchError
from .matrix import Diagonal, Matrix

BRANCH_REDUCIBLE = "reducible-form"
BRANCH_SINGLE_ZERO = "single-zero"
BRANCH_NOWHERE_ZERO = "nowhere-zero"
BRANCH_ORACLE = "oracle-only"
BRANCH_NOT_SI = "not-si"

DEFAULT_BUDGET = 4096


@dataclass(frozen=True)
class SiVerdict:
    """Outcome of a semi-involutory check.

    `witness` is an associated diagonal (ADA diagonal and non-singular);
    it is present exactly when `si` is true.  For irreducible matrices
    `c` is the scalar with D1 = c D2 relative to that witness and
    `a` = c^{-1} satisfies (DA)^2 = aI.
    """

    si: bool
    branch: str
    witness: tuple | None = None
    c: int | None = None
    a: int | None = None

    def to_dict(self) -> dict:
        d = {"si": self.si, "branch": self.branch}
        if self.witness is not None:
            d["D"] = list(self.witness)
        if self.c is not None:
            d["c"] = self.c
        if self.a is not None:
            d["a"] = self.a
        return d


def _ada_coefficients(A: Matrix):
    """For each cell (i, j) the triple t_k = a_ik * a_kj, so that
    (ADA)_ij = sum_k t_k d_k."""
    gf, r, n = A.gf, A.rows, A.n
    return [[tuple(gf.mul(r[i][k], r[k][j]) for k in range(n))
             for j in range(n)] for i in range(n)]


def associated_diagonals(A: Matrix, budget: int = DEFAULT_BUDGET) -> list[tuple]:
    """All non-singular diagonals D with ADA diagonal and non-singular,
    in ascending lexicographic order of the diagonal entries.

    This is a literal exhaustive scan of (q-1)^n diagonals.  For
    characteristic 2 the scan is evaluated with lookup tables over the
    whole grid at once; the result is identical to the scalar loop.
    """
    gf, n = A.gf, A.n
    total = (gf.q - 1) ** n
    if total > budget:
        raise BudgetError(f"(q-1)^n = {total} exceeds the search budget {budget}")
    coeff = _ada_coefficients(A)
    cells = [(i, j) for i in range(n) for j in range(n)]
    if gf.p != 2:
        out = []
        for d in product(gf.elements(True), repeat=n):
            ok = True
            for i, j in cells:
                t = coeff[i][j]
                s = 0
                for k in range(n):
                    s = gf.add(s, gf.mul(t[k], d[k]))
                if (s != 0) if i != j else (s == 0):
                    ok = False
                    break
            if ok:
                out.append(d)
        return out
    mul = mul_table(gf)
    grid = nonzero_grid(gf.q, n)
    tmat = np.array([[coeff[i][j][k] for k in range(n)] for i, j in cells],
                    dtype=np.uint8)
    acc = np.zeros((len(cells), total), dtype=np.uint8)
    for k in range(n):
        acc ^= mul[tmat[:, k][:, None], grid[k][None, :]]
    mask = np.ones(total, dtype=bool)
    for row, (i, j) in enumerate(cells):
        mask &= (acc[row] == 0) if i != j else (acc[row] != 0)
    hits = np.flatnonzero(mask)
    return [tuple(int(grid[k][h]) for k in range(n)) for h in hits]


def _ada_diag(A: Matrix, d: tuple) -> tuple:
    gf = A.gf
    coeff = _ada_coefficients(A)
    out = []
    for i in range(A.n):
        s = 0
        for k in range(A.n):
            s = gf.add(s, gf.mul(coeff[i][i][k], d[k]))
        out.append(s)
    return tuple(out)


def _witness_scalars(A: Matrix, d: tuple) -> tuple:
    """(c, a) for an irreducible matrix relative to witness d.

    With ADA = D', the products d_i * D'_i agree on a single value s,
    and (DA)^2 = sI while A^{-1} = s^{-1} D A D.  The reported pair is
    therefore c = s^{-1} (so that A^{-1} = c D A D, equivalently
    D1 = c D2 for the derived pair) and a = c^{-1} = s."""
    gf = A.gf
    ss = {gf.mul(di, ai) for di, ai in zip(d, _ada_diag(A, d))}
    if len(ss) != 1:
        raise InternalMismatchError("associated scalar is not constant on an "
                                    "irreducible matrix")
    a = ss.pop()
    return gf.inv(a), a


def canonical_witness(A: Matrix, d: tuple) -> tuple:
    """Rescale a witness so that c = 1, i.e. A^{-1} = D A D exactly.

    Well-defined for irreducible matrices over characteristic 2, where
    witnesses form a single orbit under scalar multiplication and
    squaring is a bijection.  Returns (witness, c, a) = (d', 1, 1).
    """
    gf = A.gf
    c, _a = _witness_scalars(A, d)
    t = gf.sqrt(c)
    return tuple(gf.mul(t, di) for di in d), 1, 1


def _verify_witness(A: Matrix, d: tuple) -> None:
    prod = (A @ Diagonal(A.gf, d)) @ A
    for i, row in enumerate(prod.rows):
        for j, v in enumerate(row):
            if (v == 0) if i == j else (v != 0):
                raise InternalMismatchError("witness recheck failed: ADA is not "
                                            "non-singular diagonal")


def si_oracle(A: Matrix, budget: int = DEFAULT_BUDGET) -> SiVerdict:
    """Exhaustive-search semi-involutory test, valid for any small field.

    Scans all (q-1)^n non-singular diagonals and returns the
    lexicographically least witness.  Raises ValueError on a singular
    matrix and BudgetError when the scan would exceed `budget`.
    """
    if A.det() == 0:
        raise ValueError("singular matrix cannot be semi-involutory")
    wits = associated_diagonals(A, budget)
    if not wits:
        return SiVerdict(False, BRANCH_NOT_SI)
    d = wits[0]
    _verify_witness(A, d)
    c = a = None
    if A.n == 1 or not A.is_reducible():
        c, a = _witness_scalars(A, d)
    return SiVerdict(True, BRANCH_ORACLE, d, c, a)


def si_product_det(A: Matrix) -> int:
    """Determinant of the matrix of entry products

        [[a11*a21, a21*a22, a23*a31],
         [a11*a31, a21*a32, a31*a33],
         [a12*a31, a22*a32, a32*a33]]

    whose vanishing is the third condition for a nowhere-zero 3x3
    matrix to be semi-involutory."""
    if A.n != 3:
        raise ValueError("defined for 3x3 matrices only")
    gf, r = A.gf, A.rows
    x = [[gf.mul(r[0][0], r[1][0]), gf.mul(r[1][0], r[1][1]), gf.mul(r[1][2], r[2][0])],
         [gf.mul(r[0][0], r[2][0]), gf.mul(r[1][0], r[2][1]), gf.mul(r[2][0], r[2][2])],
         [gf.mul(r[0][1], r[2][0]), gf.mul(r[1][1], r[2][1]), gf.mul(r[2][1], r[2][2])]]
    return Matrix(gf, x).det()


def _cycle_products_equal(A: Matrix) -> bool:
    gf, r = A.gf, A.rows
    up = gf.mul(gf.mul(r[0][1], r[1][2]), r[2][0])
    down = gf.mul(gf.mul(r[0][2], r[1][0]), r[2][1])
    return up == down


def eigenvector_check(B: Matrix, D1: Diagonal, x) -> bool:
    """Whether x is an eigenvector of B D1, scanning all field elements
    as candidate eigenvalues."""
    gf = B.gf
    x = tuple(x)
    if all(v == 0 for v in x):
        raise ValueError("the zero vector is not an eigenvector")
    v = (B @ D1).apply(x)
    return any(all(vi == gf.mul(lam, xi) for vi, xi in zip(v, x))
               for lam in gf.elements())


def _block_form_si(A: Matrix) -> bool:
    """Branch for matrices with two or more zeros: up to permutation
    similarity (of A or its transpose, which preserves the property)
    A = [[B, x], [0 0, c]] with B 2x2 semi-involutory and x = 0 or x an
    eigenvector of B D1 for some valid D1."""
    gf = A.gf
    for M in (A, A.transpose()):
        for perm in permutations(range(3)):
            conj = M.conjugate(perm)
            r = conj.rows
            if r[2][0] != 0 or r[2][1] != 0:
                continue
            B = conj.submatrix((0, 1), (0, 1))
            wits = associated_diagonals(B)
            if not wits:
                continue
            x = (r[0][2], r[1][2])
            if x == (0, 0):
                return True
            if any(eigenvector_check(B, Diagonal(gf, w), x) for w in wits):
                return True
    return False


def si_check_3x3(A: Matrix) -> SiVerdict:
    """Entry-level semi-involutory test for 3x3 matrices.

    A non-singular A is semi-involutory exactly when one of three
    mutually exclusive cases holds, keyed by the number of zero
    entries:

    * no zeros: the two triangle products a12 a23 a31 and a13 a21 a32
      agree and `si_product_det` vanishes;
    * one zero: the zero sits on the diagonal, the complementary 2x2
      minor vanishes, and the triangle products agree;
    * two or more zeros: permutation-similar (possibly after a
      transpose) to a block form [[B, x], [0, c]] with B semi-involutory
      and x zero or an eigenvector of B D1.

    The returned witness is the canonical one with c = 1 when the
    matrix is irreducible, and the lexicographically least one
    otherwise.
    """
    if A.n != 3:
        raise ValueError("si_check_3x3 needs a 3x3 matrix")
    if A.det() == 0:
        return SiVerdict(False, BRANCH_NOT_SI)
    zeros = [(i, j) for i in range(3) for j in range(3) if A.rows[i][j] == 0]
    if not zeros:
        branch = BRANCH_NOWHERE_ZERO
        ok = _cycle_products_equal(A) and si_product_det(A) == 0
    elif len(zeros) == 1:
        branch = BRANCH_SINGLE_ZERO
        i, j = zeros[0]
        keep = [k for k in range(3) if k != i]
        ok = (i == j and _cycle_products_equal(A)
              and A.submatrix(keep, keep).det() == 0)
    else:
        branch = BRANCH_REDUCIBLE
        ok = _block_form_si(A)
    if not ok:
        return SiVerdict(False, BRANCH_NOT_SI)
    wits = associated_diagonals(A)
    if not wits:
        raise InternalMismatchError("branch conditions hold but no associated "
                                    "diagonal exists")
    d = wits[0]
    _verify_witness(A, d)
    if branch == BRANCH_REDUCIBLE or A.is_reducible():
        return SiVerdict(True, branch, d)
    if A.gf.p == 2:
        d, c, a = canonical_witness(A, d)
        return SiVerdict(True, branch, d, c, a)
    c, a = _witness_scalars(A, d)
    return SiVerdict(True, branch, d, c, a)


def associated_scalar(A: Matrix, D1: Diagonal, D2: Diagonal) -> int:
    """The non-zero c with D1 = c D2, given that A^{-1} = D1 A D2.

    Both preconditions are verified: the inverse identity is checked by
    multiplying back to the identity, and the entrywise ratios of the
    two diagonals must agree."""
    gf = A.gf
    if not (D1.nonsingular and D2.nonsingular):
        raise ValueError("diagonals must be non-singular")
    if (A @ ((D1 @ A) @ D2)) != Matrix.identity(gf, A.n):
        raise ValueError("A^{-1} = D1 A D2 does not hold")
    ratios = {gf.div(u, v) for u, v in zip(D1.entries, D2.entries)}
    if len(ratios) != 1:
        raise ValueError("D1 is not a scalar multiple of D2")
    return ratios.pop()
