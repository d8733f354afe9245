"""Modular linear algebra backing the certified quotient dimensions.

Nothing here is trusted on its own: every conclusion drawn from a mod-p
computation is an exact certificate.  A mod-p echelon of vectors that
are reductions of exact elements of a rational subspace R bounds
rank(R) from below (a nonvanishing minor mod p is a nonvanishing
rational minor); a mod-p-nonsingular Gram matrix of exact pairings
bounds the quotient dimension from below.  When the two bounds meet,
the dimension is exact.
"""

from __future__ import annotations

import numpy as np

# Primes just below 2^31; products stay within int64 during elimination.
PRIMES = (2147483647, 2147483629, 2147483587, 2147483579, 2147483563)


class ModPEchelon:
    """Dense row-echelon accumulator over F_p (normalized pivots).

    Rows are kept in non-reduced echelon form sorted by pivot column;
    insertion is a single left-to-right elimination sweep, which is
    sufficient because fill-in only appears to the right of the column
    being eliminated.
    """

    def __init__(self, dim: int, p: int):
        self.dim = dim
        self.p = p
        self._rows = np.zeros((max(dim, 1), max(dim, 1)), dtype=np.int64)
        self.nrows = 0
        self._pivrow = np.full(max(dim, 1), -1, dtype=np.int64)

    @property
    def rank(self) -> int:
        return self.nrows

    def insert_dense(self, vec: np.ndarray) -> bool:
        p = self.p
        vec = vec % p
        j = 0
        while True:
            nz = np.flatnonzero(vec[j:])
            if nz.size == 0:
                return False
            j += int(nz[0])
            r = int(self._pivrow[j])
            if r < 0:
                inv = pow(int(vec[j]), p - 2, p)
                self._rows[self.nrows, j:] = vec[j:] * inv % p
                self._pivrow[j] = self.nrows
                self.nrows += 1
                return True
            f = int(vec[j])
            vec[j:] = (vec[j:] - f * self._rows[r, j:]) % p
            j += 1

    def insert_sparse(self, entries: dict[int, int]) -> bool:
        vec = np.zeros(self.dim, dtype=np.int64)
        for i, c in entries.items():
            vec[i] = c % self.p
        return self.insert_dense(vec)

    def pivot_cols(self) -> list[int]:
        return [int(c) for c in np.flatnonzero(self._pivrow[: self.dim] >= 0)]

    def nonpivot_cols(self) -> list[int]:
        return [int(c) for c in np.flatnonzero(self._pivrow[: self.dim] < 0)]


def nonsingular_mod_p(matrix: list[list[int]], p: int) -> bool:
    """True iff the square integer matrix is invertible over F_p."""
    q = len(matrix)
    if q == 0:
        return True
    ech = ModPEchelon(q, p)
    for row in matrix:
        ech.insert_dense(np.array(row, dtype=np.int64))
    return ech.rank == q
