"""Dense exact linear algebra over F_p on degree-slice vectors.

Everything is canonical: a subspace is stored as its reduced row echelon
basis, so equality of subspaces is equality of matrices. Kernels,
intersections and membership all reduce to the three kernel primitives in
``_kernels``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from modinv import _kernels
from modinv.fp_arith import check_prime


class Subspace:
    """A subspace of F_p^n given by its reduced row echelon basis."""

    __slots__ = ("p", "ncols", "rows", "pivots")

    def __init__(self, p: int, ncols: int, rows, pivots, _canonical=False):
        if not _canonical:
            raise TypeError("use Subspace.span / zero / full")
        self.p = p
        self.ncols = ncols
        self.rows = rows
        self.pivots = pivots

    @classmethod
    def span(cls, p: int, ncols: int, rows: Iterable[Sequence[int]]) -> "Subspace":
        """Canonical span of the given rows; rows may be dependent or empty."""
        check_prime(p)
        mat = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError(f"row of length {len(r)} in ambient dimension {ncols}")
            mat.append([x % p for x in r])
        basis, pivots = _kernels.rref(mat, p)
        return cls(p, ncols, tuple(tuple(r) for r in basis), tuple(pivots), _canonical=True)

    @classmethod
    def zero(cls, p: int, ncols: int) -> "Subspace":
        check_prime(p)
        return cls(p, ncols, (), (), _canonical=True)

    @classmethod
    def full(cls, p: int, ncols: int) -> "Subspace":
        check_prime(p)
        rows = tuple(tuple(1 if j == i else 0 for j in range(ncols)) for i in range(ncols))
        return cls(p, ncols, rows, tuple(range(ncols)), _canonical=True)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def is_zero(self) -> bool:
        return not self.rows

    @property
    def is_full(self) -> bool:
        return len(self.rows) == self.ncols

    def complement(self) -> list[int]:
        """Non-pivot column indices: the canonical coset representatives."""
        pivot_set = set(self.pivots)
        return [c for c in range(self.ncols) if c not in pivot_set]

    def reduce(self, v: Sequence[int]) -> list[int]:
        """Canonical representative of v modulo this subspace."""
        if len(v) != self.ncols:
            raise ValueError("vector length does not match ambient dimension")
        return _kernels.reduce_row(v, self.rows, self.pivots, self.p)

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return all(self.contains(r) for r in other.rows)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace.span(self.p, self.ncols, list(self.rows) + list(other.rows))

    def intersect(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def _check_compatible(self, other: "Subspace"):
        if self.p != other.p:
            raise ValueError(f"prime mismatch: {self.p} vs {other.p}")
        if self.ncols != other.ncols:
            raise ValueError(f"ambient dimension mismatch: {self.ncols} vs {other.ncols}")

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.p, self.ncols, self.rows) == (other.p, other.ncols, other.rows)

    def __hash__(self):
        return hash((self.p, self.ncols, self.rows))

    def __repr__(self):
        return f"Subspace(p={self.p}, ncols={self.ncols}, dim={self.dim})"


def echelon(rows: Sequence[Sequence[int]], ncols: int, p: int) -> Subspace:
    """Canonical reduced row echelon span of the input rows."""
    return Subspace.span(p, ncols, rows)


def kernel(rows: Sequence[Sequence[int]], ncols: int, p: int) -> Subspace:
    """Null space {x : M x = 0} of the matrix whose rows are given.

    rank(M) + dim(kernel) = ncols.
    """
    check_prime(p)
    for r in rows:
        if len(r) != ncols:
            raise ValueError("matrix rows must all have length ncols")
    basis, pivots = _kernels.rref(list(rows), p)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    vectors = []
    for c in free:
        v = [0] * ncols
        v[c] = 1
        for row, pc in zip(basis, pivots):
            v[pc] = (-row[c]) % p
        vectors.append(v)
    return Subspace.span(p, ncols, vectors)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the kernel of the stacked-basis system."""
    a._check_compatible(b)
    if a.is_full:
        return b
    if b.is_full:
        return a
    if a.is_zero or b.is_zero:
        return Subspace.zero(a.p, a.ncols)
    p, n = a.p, a.ncols
    da, db = a.dim, b.dim
    # columns: da coefficients on a's basis, db on b's; one equation per coordinate
    system = []
    for i in range(n):
        row = [a.rows[j][i] for j in range(da)] + [(-b.rows[j][i]) % p for j in range(db)]
        system.append(row)
    coeffs = kernel(system, da + db, p)
    vectors = []
    for coeff in coeffs.rows:
        v = [0] * n
        for j in range(da):
            cj = coeff[j]
            if cj:
                row = a.rows[j]
                v = [(x + cj * y) % p for x, y in zip(v, row)]
        vectors.append(v)
    return Subspace.span(p, n, vectors)


def contains(a: Subspace, v: Sequence[int]) -> bool:
    """Membership of a vector in a subspace."""
    return a.contains(v)
