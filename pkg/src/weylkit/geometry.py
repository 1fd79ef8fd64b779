"""Exact rational vectors, matrices, hyperplanes and reflections.

Scalars are :class:`fractions.Fraction` throughout, so every identity in the
rest of the package is checked with ``==`` rather than a tolerance.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .errors import WeylError

Rational = Fraction
Matrix = tuple[tuple[Fraction, ...], ...]


def fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True, slots=True)
class Vector:
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        if not coords:
            raise WeylError("vector must have positive dimension")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, dim: int) -> Vector:
        return cls((0,) * dim)

    @classmethod
    def basis(cls, i: int, dim: int) -> Vector:
        """The standard basis vector e_{i+1} (``i`` is zero-based)."""
        return cls(tuple(1 if j == i else 0 for j in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other: Vector):
        if not isinstance(other, Vector):
            raise TypeError(f"expected Vector, got {type(other).__name__}")
        if other.dim != self.dim:
            raise WeylError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: Vector) -> Vector:
        self._check(other)
        return Vector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Vector) -> Vector:
        self._check(other)
        return Vector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Vector:
        return Vector(tuple(-a for a in self.coords))

    def __mul__(self, c) -> Vector:
        c = Fraction(c)
        return Vector(tuple(c * a for a in self.coords))

    __rmul__ = __mul__

    def __truediv__(self, c) -> Vector:
        c = Fraction(c)
        return Vector(tuple(a / c for a in self.coords))

    def dot(self, other: Vector) -> Fraction:
        return inner_product(self, other)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def __str__(self):
        return "(" + ", ".join(fmt_rational(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"Vector{self}"


def vec(*coords) -> Vector:
    return Vector(coords)


def inner_product(u: Vector, v: Vector) -> Fraction:
    if u.dim != v.dim:
        raise WeylError(f"dimension mismatch: {u.dim} vs {v.dim}")
    return sum((a * b for a, b in zip(u.coords, v.coords)), Fraction(0))


def is_parallel(u: Vector, v: Vector) -> bool:
    """True if ``v`` is a nonzero rational multiple of ``u`` (both nonzero)."""
    if u.is_zero() or v.is_zero():
        return False
    uu, uv, vv = inner_product(u, u), inner_product(u, v), inner_product(v, v)
    return uv * uv == uu * vv


def coroot(alpha: Vector) -> Vector:
    n = inner_product(alpha, alpha)
    if n == 0:
        raise WeylError("zero vector has no coroot")
    return alpha * (Fraction(2) / n)


def reflect(v: Vector, alpha: Vector) -> Vector:
    """Reflect ``v`` in the hyperplane orthogonal to ``alpha``."""
    return affine_reflect(v, alpha, 0)


def affine_reflect(v: Vector, alpha: Vector, k) -> Vector:
    """Reflect ``v`` in the affine hyperplane <x, alpha> = k."""
    if alpha.is_zero():
        raise WeylError("cannot reflect along a zero vector")
    return v - coroot(alpha) * (inner_product(v, alpha) - Fraction(k))


@dataclass(frozen=True, slots=True)
class LinearHyperplane:
    normal: Vector

    def __post_init__(self):
        if self.normal.is_zero():
            raise WeylError("hyperplane normal must be nonzero")

    def contains(self, v: Vector) -> bool:
        return inner_product(v, self.normal) == 0

    def same_plane(self, other: LinearHyperplane) -> bool:
        return is_parallel(self.normal, other.normal)


@dataclass(frozen=True, slots=True)
class AffineHyperplane:
    normal: Vector
    level: Fraction

    def __post_init__(self):
        if self.normal.is_zero():
            raise WeylError("hyperplane normal must be nonzero")
        object.__setattr__(self, "level", Fraction(self.level))

    def contains(self, v: Vector) -> bool:
        return inner_product(v, self.normal) == self.level

    def side(self, v: Vector) -> int:
        d = inner_product(v, self.normal) - self.level
        return (d > 0) - (d < 0)

    def __str__(self):
        return f"H_{{alpha={self.normal}, k={fmt_rational(self.level)}}}"


# -- matrices ---------------------------------------------------------------

def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise WeylError("matrix dimension mismatch")
    cols = transpose(b)
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols)
        for row in a
    )


def mat_vec(a: Matrix, v: Vector) -> Vector:
    if len(a[0]) != v.dim:
        raise WeylError("matrix dimension mismatch")
    return Vector(tuple(sum((x * y for x, y in zip(row, v.coords)), Fraction(0)) for row in a))


def is_orthogonal(a: Matrix) -> bool:
    return mat_mul(a, transpose(a)) == identity_matrix(len(a))


def reflection_matrix(alpha: Vector) -> Matrix:
    n = alpha.dim
    cols = [reflect(Vector.basis(j, n), alpha) for j in range(n)]
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


@dataclass(frozen=True, slots=True)
class AffineIsometry:
    """The map x -> linear @ x + translation."""

    linear: Matrix
    translation: Vector

    def __post_init__(self):
        n = self.translation.dim
        if len(self.linear) != n or any(len(r) != n for r in self.linear):
            raise WeylError("linear part must be square of the translation's dimension")

    @classmethod
    def identity(cls, dim: int) -> AffineIsometry:
        return cls(identity_matrix(dim), Vector.zero(dim))

    @classmethod
    def translation_by(cls, t: Vector) -> AffineIsometry:
        return cls(identity_matrix(t.dim), t)

    @classmethod
    def linear_map(cls, a: Matrix) -> AffineIsometry:
        return cls(a, Vector.zero(len(a)))

    @property
    def dim(self) -> int:
        return self.translation.dim

    def __call__(self, v: Vector) -> Vector:
        return mat_vec(self.linear, v) + self.translation

    def __mul__(self, other: AffineIsometry) -> AffineIsometry:
        return compose(self, other)

    def is_translation(self) -> bool:
        return self.linear == identity_matrix(self.dim)


def compose(f: AffineIsometry, g: AffineIsometry) -> AffineIsometry:
    """f after g."""
    if f.dim != g.dim:
        raise WeylError(f"dimension mismatch: {f.dim} vs {g.dim}")
    return AffineIsometry(mat_mul(f.linear, g.linear), mat_vec(f.linear, g.translation) + f.translation)


def invert(f: AffineIsometry) -> AffineIsometry:
    if not is_orthogonal(f.linear):
        raise WeylError("linear part is not orthogonal")
    at = transpose(f.linear)
    return AffineIsometry(at, -mat_vec(at, f.translation))


def reflection_isometry(alpha: Vector, k=0) -> AffineIsometry:
    """s_{alpha,k} as an isometry: linear part s_alpha, translation k * coroot."""
    return AffineIsometry(reflection_matrix(alpha), coroot(alpha) * Fraction(k))


# -- small exact linear algebra ----------------------------------------------

def _echelon(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(vectors: Sequence[Vector]) -> int:
    if not vectors:
        return 0
    _, pivots = _echelon([list(v.coords) for v in vectors])
    return len(pivots)


def solve(a: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...] | None:
    """Solve ``a x = b`` exactly.

    Returns None when the system is inconsistent. Raises if the solution is
    not unique.
    """
    m = len(a)
    n = len(a[0])
    aug = [[Fraction(x) for x in a[i]] + [Fraction(b[i])] for i in range(m)]
    rows, pivots = _echelon(aug)
    if n in pivots:
        return None
    if len(pivots) < n:
        raise WeylError("linear system is underdetermined")
    return tuple(rows[i][n] for i in range(n))


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def integer_row_basis(vectors: Sequence[Vector]) -> list[Vector]:
    """A Z-basis of the lattice spanned by ``vectors`` (Hermite-style reduction)."""
    if not vectors:
        return []
    scale = reduce(_lcm, (c.denominator for v in vectors for c in v.coords), 1)
    rows = [[int(c * scale) for c in v.coords] for v in vectors]
    ncols = len(rows[0])
    basis: list[list[int]] = []
    for c in range(ncols):
        live = [r for r in rows if r[c] != 0]
        rows = [r for r in rows if r[c] == 0]
        # Euclid on column c until a single row holds the gcd
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[c]))
            head = live[0]
            nxt = [head]
            for r in live[1:]:
                q = r[c] // head[c]
                r = [x - q * y for x, y in zip(r, head)]
                (nxt if r[c] != 0 else rows).append(r)
            live = nxt
        if live:
            basis.append(live[0])
        rows = [r for r in rows if any(r)]
    return [Vector(tuple(Fraction(x, scale) for x in r)) for r in basis]
