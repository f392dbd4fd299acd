"""Small exact linear algebra helpers shared by the matrix-flavored modules.

Everything works over an arbitrary field given by duck-typed elements with
+, -, *, ``inverse()``/``is_zero()`` (CycScalar) or plain Fractions.
"""

from __future__ import annotations

from fractions import Fraction


def _is_zero(x):
    if isinstance(x, Fraction) or isinstance(x, int):
        return x == 0
    return x.is_zero()


def _inv(x):
    if isinstance(x, Fraction) or isinstance(x, int):
        return Fraction(1) / x
    return x.inverse()


class RowSpace:
    """An incremental row space in reduced echelon form over an exact field.

    Rows are lists of field elements of a fixed length.  ``add`` reduces a
    vector against the current basis and absorbs any nonzero remainder,
    returning True exactly when the vector added new content.
    """

    def __init__(self, width: int):
        self.width = width
        self.rows = []  # list of (pivot_index, row)

    def reduce(self, vec):
        vec = list(vec)
        for pivot, row in self.rows:
            c = vec[pivot]
            if _is_zero(c):
                continue
            for j in range(self.width):
                vec[j] = vec[j] - c * row[j]
        return vec

    def add(self, vec) -> bool:
        vec = self.reduce(vec)
        for pivot in range(self.width):
            if not _is_zero(vec[pivot]):
                inv = _inv(vec[pivot])
                row = [inv * v for v in vec]
                # back-substitute into existing rows to keep reduced form
                for k, (p, r) in enumerate(self.rows):
                    c = r[pivot]
                    if not _is_zero(c):
                        self.rows[k] = (p, [a - c * b for a, b in zip(r, row)])
                self.rows.append((pivot, row))
                self.rows.sort(key=lambda pr: pr[0])
                return True
        return False

    def contains(self, vec) -> bool:
        return all(_is_zero(c) for c in self.reduce(vec))

    @property
    def rank(self) -> int:
        return len(self.rows)


def matmul(A, B, add, mul, zero):
    """Dense matrix product with caller-supplied ring operations."""
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = zero
            for t in range(k):
                acc = add(acc, mul(A[i][t], B[t][j]))
            row.append(acc)
        out.append(row)
    return out
