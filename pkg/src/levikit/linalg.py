"""
Exact linear algebra over the rationals.

Scalars are ``fractions.Fraction``; vectors are tuples of fractions; ``Matrix`` is an
immutable dense row-major matrix. Subspaces are kept in reduced row echelon form so that
two subspaces are equal exactly when their basis matrices are identical.

Polynomials (minimal polynomials and their factorisations) are sympy ``Poly`` objects in
the variable ``t`` over ``QQ``.
"""

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import sympy
from sympy import Poly, QQ

from levikit.errors import (
    AssertionFailed,
    DimensionMismatch,
    IrrationalSpectrum,
    NotCommuting,
    NotInvariant,
    NotSemisimple,
)

Scalar = Union[Fraction, int]
Vector = Tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)

t = sympy.Symbol("t")


def as_fraction(value: Union[Scalar, str, sympy.Rational]) -> Fraction:
    """Convert an int, string, Fraction or sympy rational to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted")
    return Fraction(value)


def vector(values: Iterable[Union[Scalar, str]]) -> Vector:
    return tuple(as_fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"cannot add vectors of lengths {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"cannot subtract vectors of lengths {len(u)} and {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def scale(c: Scalar, v: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in v)


def is_zero(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)


def combine(coefficients: Sequence[Scalar], vectors: Sequence[Sequence[Fraction]], n: int) -> Vector:
    """Linear combination sum(c_i * v_i) in an n-dimensional space."""
    acc = [ZERO] * n
    for c, v in zip(coefficients, vectors):
        if c == 0:
            continue
        for k, a in enumerate(v):
            if a:
                acc[k] += c * a
    return tuple(acc)


class Matrix:
    """Immutable dense matrix with Fraction entries."""

    __slots__ = ("_rows", "_nrows", "_ncols")

    def __init__(self, rows: Iterable[Iterable[Union[Scalar, str]]], ncols: Optional[int] = None):
        data = tuple(vector(row) for row in rows)
        if data:
            width = len(data[0])
            if ncols is not None and ncols != width:
                raise DimensionMismatch(f"declared {ncols} columns, rows have {width}")
            if any(len(row) != width for row in data):
                raise DimensionMismatch("rows of unequal length")
        else:
            width = ncols or 0
        self._rows = data
        self._nrows = len(data)
        self._ncols = width

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[ZERO] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([unit_vector(n, i) for i in range(n)], ncols=n)

    @classmethod
    def diagonal(cls, values: Sequence[Union[Scalar, str]]) -> "Matrix":
        n = len(values)
        return cls(
            [[as_fraction(values[i]) if i == j else ZERO for j in range(n)] for i in range(n)],
            ncols=n,
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Fraction]], nrows: int) -> "Matrix":
        for col in columns:
            if len(col) != nrows:
                raise DimensionMismatch(f"column of length {len(col)} in a {nrows}-row matrix")
        return cls(
            [[col[i] for col in columns] for i in range(nrows)],
            ncols=len(columns),
        )

    @property
    def nrows(self) -> int:
        return self._nrows

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> Tuple[int, int]:
        return (self._nrows, self._ncols)

    @property
    def rows(self) -> Tuple[Vector, ...]:
        return self._rows

    def is_square(self) -> bool:
        return self._nrows == self._ncols

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self._rows[i][j]

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self._rows)

    def columns(self) -> Tuple[Vector, ...]:
        return tuple(self.column(j) for j in range(self._ncols))

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self._ncols:
            raise DimensionMismatch(f"vector of length {len(v)} for a {self.shape} matrix")
        return tuple(sum((a * b for a, b in zip(row, v) if a and b), ZERO) for row in self._rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self._ncols != other._nrows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        return Matrix(
            [[sum((a * b for a, b in zip(row, col) if a and b), ZERO) for col in cols] for row in self._rows],
            ncols=other._ncols,
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return Matrix([add(a, b) for a, b in zip(self._rows, other._rows)], ncols=self._ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix([sub(a, b) for a, b in zip(self._rows, other._rows)], ncols=self._ncols)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c: Scalar) -> "Matrix":
        return Matrix([scale(c, row) for row in self._rows], ncols=self._ncols)

    def is_zero(self) -> bool:
        return all(is_zero(row) for row in self._rows)

    def trace(self) -> Fraction:
        if not self.is_square():
            raise DimensionMismatch("trace of a non-square matrix")
        return sum((self._rows[i][i] for i in range(self._nrows)), ZERO)

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    def commutes_with(self, other: "Matrix") -> bool:
        return self.commutator(other).is_zero()

    def flatten(self) -> Vector:
        return tuple(a for row in self._rows for a in row)

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self._nrows
        reduced, pivots = rref(hstack(self, Matrix.identity(n)))
        if list(pivots[:n]) != list(range(n)):
            raise ValueError("matrix is singular")
        return Matrix([row[n:] for row in reduced.rows], ncols=n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.shape, self._rows))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(a) for a in row) + "]" for row in self._rows)
        return f"Matrix([{body}], ncols={self._ncols})"


def hstack(*blocks: Matrix) -> Matrix:
    nrows = blocks[0].nrows
    if any(b.nrows != nrows for b in blocks):
        raise DimensionMismatch("hstack of matrices with different row counts")
    return Matrix(
        [tuple(a for b in blocks for a in b.row(i)) for i in range(nrows)],
        ncols=sum(b.ncols for b in blocks),
    )


def vstack(*blocks: Matrix) -> Matrix:
    ncols = blocks[0].ncols
    if any(b.ncols != ncols for b in blocks):
        raise DimensionMismatch("vstack of matrices with different column counts")
    return Matrix([row for b in blocks for row in b.rows], ncols=ncols)


def rref(m: Matrix) -> Tuple[Matrix, Tuple[int, ...]]:
    """Reduced row echelon form and pivot columns (Gauss-Jordan, exact)."""
    rows: List[List[Fraction]] = [list(row) for row in m.rows]
    nrows, ncols = m.shape
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        lead = rows[r][c]
        if lead != 1:
            rows[r] = [a / lead for a in rows[r]]
        pivot_row = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], pivot_row)]
        pivots.append(c)
        r += 1
    return Matrix(rows, ncols=ncols), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


class Subspace:
    """A subspace of Q^n stored by its canonical (RREF) basis, one basis vector per row."""

    __slots__ = ("_ambient_dim", "_basis", "_pivots")

    def __init__(self, ambient_dim: int, basis: Matrix, pivots: Tuple[int, ...]):
        self._ambient_dim = ambient_dim
        self._basis = basis
        self._pivots = pivots

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Sequence[Union[Scalar, str]]]) -> "Subspace":
        rows = [vector(v) for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in a {ambient_dim}-dimensional space")
        reduced, pivots = rref(Matrix(rows, ncols=ambient_dim))
        basis = Matrix(reduced.rows[: len(pivots)], ncols=ambient_dim)
        return cls(ambient_dim, basis, pivots)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix([], ncols=ambient_dim), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim), tuple(range(ambient_dim)))

    @property
    def ambient_dim(self) -> int:
        return self._ambient_dim

    @property
    def basis(self) -> Matrix:
        return self._basis

    @property
    def pivots(self) -> Tuple[int, ...]:
        return self._pivots

    @property
    def dim(self) -> int:
        return len(self._pivots)

    @property
    def vectors(self) -> Tuple[Vector, ...]:
        return self._basis.rows

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self._ambient_dim

    def complement_coordinates(self) -> Tuple[int, ...]:
        """Coordinates that are not pivots; their unit vectors span a complement."""
        pivots = set(self._pivots)
        return tuple(c for c in range(self._ambient_dim) if c not in pivots)

    def reduce(self, v: Sequence[Fraction]) -> Vector:
        """Remainder of v modulo the subspace (zero at every pivot coordinate)."""
        if len(v) != self._ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in a {self._ambient_dim}-dimensional space")
        w = list(v)
        for b, p in zip(self._basis.rows, self._pivots):
            c = w[p]
            if c:
                w = [a - c * x for a, x in zip(w, b)]
        return tuple(w)

    def contains(self, v: Sequence[Fraction]) -> bool:
        return is_zero(self.reduce(v))

    def coordinates(self, v: Sequence[Fraction]) -> Optional[Vector]:
        """Coefficients of v in the canonical basis, or None when v is not in the subspace."""
        if not self.contains(v):
            return None
        return tuple(as_fraction(v[p]) for p in self._pivots)

    def from_coordinates(self, coords: Sequence[Fraction]) -> Vector:
        return combine(coords, self._basis.rows, self._ambient_dim)

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.vectors)

    def image_under(self, m: Matrix) -> "Subspace":
        return Subspace.span(m.nrows, [m.apply(v) for v in self.vectors])

    def is_invariant_under(self, m: Matrix) -> bool:
        return all(self.contains(m.apply(v)) for v in self.vectors)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._ambient_dim == other._ambient_dim and self._basis == other._basis

    def __hash__(self) -> int:
        return hash((self._ambient_dim, self._basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient_dim={self._ambient_dim}, basis={list(map(list, self.vectors))})"


def kernel(m: Matrix) -> Subspace:
    reduced, pivots = rref(m)
    ncols = m.ncols
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(reduced.rows, pivots):
            v[p] = -row[f]
        basis.append(v)
    return Subspace.span(ncols, basis)


def image(m: Matrix) -> Subspace:
    return Subspace.span(m.nrows, m.columns())


def _check_same_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(
            f"subspaces of {a.ambient_dim}- and {b.ambient_dim}-dimensional spaces"
        )


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same_ambient(a, b)
    return Subspace.span(a.ambient_dim, a.vectors + b.vectors)


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus: row-reduce [[a, a], [b, 0]]; rows with a zero left half give a ∩ b."""
    _check_same_ambient(a, b)
    n = a.ambient_dim
    if a.is_zero() or b.is_zero():
        return Subspace.zero(n)
    zero = zero_vector(n)
    stacked = Matrix(
        [tuple(v) + tuple(v) for v in a.vectors] + [tuple(v) + zero for v in b.vectors],
        ncols=2 * n,
    )
    reduced, pivots = rref(stacked)
    rows = [reduced.row(i)[n:] for i, p in enumerate(pivots) if p >= n]
    return Subspace.span(n, rows)


def sum_all(ambient_dim: int, spaces: Iterable[Subspace]) -> Subspace:
    vectors: List[Vector] = []
    for s in spaces:
        vectors.extend(s.vectors)
    return Subspace.span(ambient_dim, vectors)


def solve(a: Matrix, b: Sequence[Fraction]) -> Optional[Vector]:
    """Least-pivot solution of a·x = b (free variables zero), or None when inconsistent."""
    if len(b) != a.nrows:
        raise DimensionMismatch(f"right-hand side of length {len(b)} for a {a.shape} system")
    n = a.ncols
    augmented = Matrix([tuple(row) + (as_fraction(c),) for row, c in zip(a.rows, b)], ncols=n + 1)
    reduced, pivots = rref(augmented)
    if pivots and pivots[-1] == n:
        return None
    x = [ZERO] * n
    for row, p in zip(reduced.rows, pivots):
        x[p] = row[n]
    return tuple(x)


def restrict_matrix(m: Matrix, space: Subspace) -> Matrix:
    """Matrix of m on an m-invariant subspace, in the subspace's canonical basis."""
    columns = []
    for v in space.vectors:
        coords = space.coordinates(m.apply(v))
        if coords is None:
            raise NotInvariant("operator does not preserve the subspace")
        columns.append(coords)
    return Matrix.from_columns(columns, space.dim)


def _poly(coefficients_high_first: Sequence[Fraction]) -> Poly:
    return Poly.from_list([sympy.Rational(c.numerator, c.denominator) for c in coefficients_high_first], t, domain=QQ)


def min_poly(m: Matrix) -> Poly:
    """Monic minimal polynomial: lcm of the annihilators of the unit vectors (Krylov chains)."""
    if not m.is_square():
        raise DimensionMismatch("minimal polynomial of a non-square matrix")
    n = m.nrows
    result = Poly(1, t, domain=QQ)
    for j in range(n):
        chain = [unit_vector(n, j)]
        while True:
            nxt = m.apply(chain[-1])
            coeffs = solve(Matrix.from_columns(chain, n), nxt)
            if coeffs is not None:
                # t^k - sum_i c_i t^i annihilates e_j
                k = len(chain)
                high_first = [ONE] + [-coeffs[i] for i in range(k - 1, -1, -1)]
                result = result.lcm(_poly(high_first))
                break
            chain.append(nxt)
    result = result.monic()
    if not evaluate_polynomial(result, m).is_zero():
        raise AssertionFailed("the minimal polynomial annihilates m")
    return result


def evaluate_polynomial(p: Poly, m: Matrix) -> Matrix:
    """p(m) by Horner's rule."""
    n = m.nrows
    acc = Matrix.zeros(n, n)
    identity = Matrix.identity(n)
    for c in p.all_coeffs():
        acc = acc @ m + identity.scale(as_fraction(c))
    return acc


def rational_eigenvalues(m: Matrix) -> List[Fraction]:
    """Distinct rational roots of the minimal polynomial, ascending."""
    _, factors = min_poly(m).factor_list()
    roots = []
    for factor, _ in factors:
        if factor.degree() == 1:
            a, b = factor.all_coeffs()
            roots.append(-as_fraction(b) / as_fraction(a))
    return sorted(roots)


def is_semisimple_rational(m: Matrix) -> bool:
    """True iff m is diagonalisable over Q.

    Raises IrrationalSpectrum when the minimal polynomial is squarefree but has an
    irreducible factor of degree > 1 (diagonalisable only over an extension field).
    """
    p = min_poly(m)
    if not p.is_sqf:
        return False
    _, factors = p.factor_list()
    for factor, _ in factors:
        if factor.degree() > 1:
            raise IrrationalSpectrum(
                f"minimal polynomial {p.as_expr()} has the irreducible factor {factor.as_expr()}"
            )
    return True


def rational_eigen_decomposition(m: Matrix) -> List[Tuple[Fraction, Subspace]]:
    if not is_semisimple_rational(m):
        raise NotSemisimple(f"minimal polynomial {min_poly(m).as_expr()} is not squarefree")
    n = m.nrows
    identity = Matrix.identity(n)
    return [(lam, kernel(m - identity.scale(lam))) for lam in rational_eigenvalues(m)]


def joint_eigenspaces(ms: Sequence[Matrix], n: Optional[int] = None) -> List[Tuple[Vector, Subspace]]:
    """Simultaneous eigenspace decomposition of commuting rational-diagonalisable matrices.

    Weights are returned in lexicographic order. ``n`` gives the size when ``ms`` is empty.
    """
    if ms:
        n = ms[0].nrows
    if n is None:
        raise ValueError("the size must be given for an empty family")
    for m in ms:
        if m.shape != (n, n):
            raise DimensionMismatch(f"expected {n}x{n} matrices, got {m.shape}")
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            if not ms[i].commutes_with(ms[j]):
                raise NotCommuting(f"matrices {i} and {j} do not commute")
    parts: List[Tuple[Vector, Subspace]] = [((), Subspace.full(n))] if n else []
    for m in ms:
        eigen = rational_eigen_decomposition(m)
        refined = []
        for weight, space in parts:
            for lam, eigenspace in eigen:
                piece = subspace_intersection(space, eigenspace)
                if not piece.is_zero():
                    refined.append((weight + (lam,), piece))
        parts = refined
    return sorted(parts, key=lambda item: item[0])


def components_of(v: Sequence[Fraction], parts: Sequence[Subspace]) -> List[Vector]:
    """Split v along a direct sum decomposition of the ambient space."""
    n = len(v)
    columns = [b for s in parts for b in s.vectors]
    coeffs = solve(Matrix.from_columns(columns, n), v)
    if coeffs is None:
        raise ValueError("the subspaces do not span the ambient space")
    result = []
    offset = 0
    for s in parts:
        result.append(combine(coeffs[offset:offset + s.dim], s.vectors, n))
        offset += s.dim
    return result
