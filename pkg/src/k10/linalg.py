"""Exact linear algebra over ``CycNum``.

Vectors are tuples of CycNum, matrices are tuples of row tuples.  Matrices
act on column vectors, so column ``j`` of a map is the image of basis
vector ``j``.

Elimination is fraction-free (Gauss-Jordan with cross multiplication), so no
field inverse is taken until a canonical form is requested.  Most matrices
here are monomial or nearly so and the few inverses that remain are cached.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .cyclo import ONE, ZERO, CycNum, as_scalar

Vector = tuple
Matrix = tuple


def vec(values: Iterable) -> Vector:
    return tuple(as_scalar(v) for v in values)


def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vec(r) for r in rows)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def identity(n: int) -> Matrix:
    return tuple(unit_vector(n, i) for i in range(n))


def diagonal(entries: Sequence) -> Matrix:
    n = len(entries)
    return tuple(
        tuple(as_scalar(entries[i]) if i == j else ZERO for j in range(n)) for i in range(n)
    )


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def columns(m: Matrix) -> list[Vector]:
    return [tuple(col) for col in zip(*m)]


def from_columns(cols: Sequence[Vector]) -> Matrix:
    return tuple(zip(*cols))


def add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Vector) -> Vector:
    c = as_scalar(c)
    return tuple(c * a for a in v)


def is_zero(v: Vector) -> bool:
    return not any(v)


def matvec(m: Matrix, v: Vector) -> Vector:
    nz = [(j, x) for j, x in enumerate(v) if x]
    out = []
    for row in m:
        acc = ZERO
        for j, x in nz:
            a = row[j]
            if a:
                acc = acc + a * x
        out.append(acc)
    return tuple(out)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = columns(b)
    cols = [matvec(a, col) for col in bt]
    return from_columns(cols)


def is_diagonal(m: Matrix) -> bool:
    return all(not x for i, row in enumerate(m) for j, x in enumerate(row) if i != j)


def _cost(x: CycNum) -> int:
    return len(x._t)


def echelon(rows: Sequence[Vector], ncols: int | None = None) -> tuple[list[list], list[int]]:
    """Fraction-free Gauss-Jordan elimination.

    Returns the nonzero rows (each pivot column is zero outside its own row)
    and the list of pivot columns.  Rows are not normalized.
    """
    work = [list(r) for r in rows if any(r)]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        cand = [i for i in range(r, len(work)) if work[i][c]]
        if not cand:
            continue
        p = min(cand, key=lambda i: _cost(work[i][c]))
        work[r], work[p] = work[p], work[r]
        prow = work[r]
        pv = prow[c]
        for i in range(len(work)):
            if i != r:
                q = work[i][c]
                if q:
                    row = work[i]
                    work[i] = [pv * a - q * b if b else pv * a for a, b in zip(row, prow)]
        pivots.append(c)
        r += 1
        work = work[:r] + [w for w in work[r:] if any(w)]
    return work[:r], pivots


def rref(rows: Sequence[Vector], ncols: int | None = None) -> tuple[tuple[Vector, ...], tuple[int, ...]]:
    """Reduced row echelon form: the canonical basis of the row space."""
    ech, piv = echelon(rows, ncols)
    out = []
    for row, c in zip(ech, piv):
        inv = row[c].inverse()
        out.append(tuple(x * inv if x else ZERO for x in row))
    return tuple(out), tuple(piv)


def rank(rows: Sequence[Vector]) -> int:
    return len(echelon(rows)[1])


def nullspace(m: Sequence[Vector], ncols: int | None = None) -> list[Vector]:
    """Basis of {x : m x = 0}; vectors are scaled to avoid inverses."""
    if ncols is None:
        ncols = len(m[0])
    ech, piv = echelon(m, ncols)
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for f in free:
        involved = [(row, c) for row, c in zip(ech, piv) if row[f]]
        x = [ZERO] * ncols
        pivs = [row[c] for row, c in involved]
        total = ONE
        for p in pivs:
            total = total * p
        x[f] = total
        for k, (row, c) in enumerate(involved):
            others = ONE
            for j, p in enumerate(pivs):
                if j != k:
                    others = others * p
            x[c] = -(row[f] * others)
        basis.append(tuple(x))
    return basis


def solve(m: Sequence[Vector], b: Vector) -> tuple[Vector | None, list[Vector]]:
    """Solve m x = b.  Returns (particular solution or None, kernel basis)."""
    ncols = len(m[0])
    aug = [tuple(row) + (rhs,) for row, rhs in zip(m, b)]
    ech, piv = echelon(aug, ncols + 1)
    kernel = nullspace(m, ncols)
    if ncols in piv:
        return None, kernel
    x = [ZERO] * ncols
    for row, c in zip(ech, piv):
        if row[ncols]:
            x[c] = row[ncols] / row[c]
    return tuple(x), kernel


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    aug = [tuple(row) + unit_vector(n, i) for i, row in enumerate(m)]
    red, piv = rref(aug, n)
    if piv != tuple(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(row[n:]) for row in red)


class Subspace:
    """A subspace of F^n held by its reduced row echelon basis.

    Equality and hashing use the canonical basis, so two spans compare equal
    exactly when they are the same subspace.
    """

    __slots__ = ("n", "basis", "pivots", "_h")

    def __init__(self, vectors: Iterable[Vector], n: int | None = None):
        vectors = [tuple(v) for v in vectors]
        if n is None:
            if not vectors:
                raise ValueError("need ambient dimension for an empty span")
            n = len(vectors[0])
        self.n = n
        if vectors:
            self.basis, self.pivots = rref(vectors, n)
        else:
            self.basis, self.pivots = (), ()
        self._h = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: Vector) -> Vector:
        v = list(v)
        for row, c in zip(self.basis, self.pivots):
            a = v[c]
            if a:
                v = [x - a * y if y else x for x, y in zip(v, row)]
        return tuple(v)

    def __contains__(self, v: Vector) -> bool:
        return not any(self.reduce(v))

    def contains_space(self, other: "Subspace") -> bool:
        return all(v in self for v in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.basis + other.basis, self.n)

    def image(self, m: Matrix) -> "Subspace":
        return Subspace([matvec(m, v) for v in self.basis], self.n)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.basis == other.basis

    def __hash__(self):
        if self._h is None:
            self._h = hash((self.n, self.basis))
        return self._h

    def __repr__(self):
        return f"Subspace(dim={self.dim}, n={self.n})"
