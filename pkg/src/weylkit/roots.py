"""Crystallographic root systems of classical type and their invariants."""
from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import WeylError
from .geometry import (
    Vector,
    coroot,
    fmt_rational,
    inner_product,
    integer_row_basis,
    is_parallel,
    rank,
    reflect,
    solve,
)

FAMILY_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}


@dataclass(frozen=True)
class Family:
    tag: str
    n: int

    def __post_init__(self):
        tag = self.tag.upper()
        if tag not in FAMILY_MIN_RANK:
            raise WeylError(f"unknown family {self.tag!r}; expected one of A, B, C, D")
        if self.n < FAMILY_MIN_RANK[tag]:
            raise WeylError(f"{tag}_n requires n >= {FAMILY_MIN_RANK[tag]}, got n = {self.n}")
        object.__setattr__(self, "tag", tag)

    @classmethod
    def parse(cls, text: str) -> Family:
        m = re.fullmatch(r"\s*([A-Za-z])\s*_?\s*(\d+)\s*", text)
        if not m:
            raise WeylError(f"cannot parse root system type {text!r} (expected e.g. C2, A3)")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self):
        return f"{self.tag}{self.n}"


def _lex_positive(v: Vector) -> bool:
    for c in v.coords:
        if c:
            return c > 0
    return False


def _lex_desc(vectors: Iterable[Vector]) -> list[Vector]:
    return sorted(vectors, key=lambda v: v.coords, reverse=True)


class RootSystem:
    """A finite set of roots in Q^ambient_dim.

    Construction only checks the structural invariants (nonzero, distinct,
    equal dimension, closed under negation). The crystallographic axioms are
    checked by :func:`validate_axioms`, so invalid candidate systems can be
    built and reported on.
    """

    def __init__(self, roots: Iterable[Vector], ambient_dim: int | None = None):
        seen: dict[Vector, None] = {}
        for r in roots:
            seen.setdefault(r if isinstance(r, Vector) else Vector(tuple(r)), None)
        self.roots: tuple[Vector, ...] = tuple(seen)
        if ambient_dim is None:
            if not self.roots:
                raise WeylError("ambient_dim is required for an empty root system")
            ambient_dim = self.roots[0].dim
        if ambient_dim < 1:
            raise WeylError("ambient_dim must be positive")
        self.ambient_dim = ambient_dim
        for r in self.roots:
            if r.dim != ambient_dim:
                raise WeylError(f"root {r} does not have dimension {ambient_dim}")
            if r.is_zero():
                raise WeylError("roots must be nonzero")
        root_set = set(self.roots)
        for r in self.roots:
            if -r not in root_set:
                raise WeylError(f"root set is not closed under negation: missing {-r}")
        self.rank = rank(self.roots)
        self._set = frozenset(self.roots)

    def __eq__(self, other):
        if not isinstance(other, RootSystem):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._set == other._set

    def __hash__(self):
        return hash((self.ambient_dim, self._set))

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __contains__(self, v):
        return v in self._set

    def __repr__(self):
        return f"RootSystem({len(self.roots)} roots, ambient_dim={self.ambient_dim}, rank={self.rank})"

    @cached_property
    def positive_roots(self) -> tuple[Vector, ...]:
        """Roots whose first nonzero coordinate is positive, in descending lex order."""
        return tuple(_lex_desc(r for r in self.roots if _lex_positive(r)))

    @cached_property
    def simple_roots(self) -> tuple[Vector, ...]:
        pos = self.positive_roots
        sums = {a + b for i, a in enumerate(pos) for b in pos[i + 1:]}
        simple = tuple(_lex_desc(r for r in pos if r not in sums))
        if len(simple) != self.rank:
            raise WeylError(f"found {len(simple)} indecomposable roots but rank is {self.rank}")
        for r in pos:
            c = _coordinates(simple, r)
            if any(x < 0 or x.denominator != 1 for x in c):
                raise WeylError(f"positive root {r} is not a nonnegative integer combination of simple roots")
        return simple

    def simple_coordinates(self, v: Vector) -> tuple[Fraction, ...]:
        """Coordinates of ``v`` (in the span of the roots) in the simple-root basis."""
        return _coordinates(self.simple_roots, v)

    @cached_property
    def highest_root(self) -> Vector:
        if not is_irreducible(self):
            raise WeylError("highest root is only defined for irreducible systems")
        heights = [(sum(self.simple_coordinates(r)), r) for r in self.positive_roots]
        top = max(h for h, _ in heights)
        best = [r for h, r in heights if h == top]
        if len(best) != 1:
            raise WeylError("highest root is not unique")
        return best[0]


def _coordinates(basis: Sequence[Vector], v: Vector) -> tuple[Fraction, ...]:
    gram = [[inner_product(a, b) for b in basis] for a in basis]
    rhs = [inner_product(a, v) for a in basis]
    c = solve(gram, rhs)
    if c is None or sum((b * x for b, x in zip(basis, c)), Vector.zero(v.dim)) != v:
        raise WeylError(f"{v} is not in the span of the basis")
    return c


def build(family: Family | str) -> RootSystem:
    if isinstance(family, str):
        family = Family.parse(family)
    n, tag = family.n, family.tag
    dim = n + 1 if tag == "A" else n
    e = [Vector.basis(i, dim) for i in range(dim)]
    roots: list[Vector] = []
    if tag == "A":
        roots = [e[i] - e[j] for i in range(dim) for j in range(dim) if i != j]
    else:
        for i in range(n):
            for j in range(i + 1, n):
                roots += [e[i] + e[j], e[i] - e[j], -e[i] + e[j], -e[i] - e[j]]
        if tag == "B":
            roots += [s * e[i] for i in range(n) for s in (1, -1)]
        elif tag == "C":
            roots += [s * e[i] for i in range(n) for s in (2, -2)]
    return RootSystem(roots, dim)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    axiom: int | None = None
    witness: tuple[Vector, ...] = ()
    message: str = "all axioms hold"

    def __bool__(self):
        return self.ok

    def __str__(self):
        return "pass" if self.ok else f"fail (axiom {self.axiom}): {self.message}"


def validate_axioms(phi: RootSystem) -> ValidationReport:
    """Check the three crystallographic axioms, reporting the first violation."""
    roots = phi.roots
    for a in roots:
        for b in roots:
            if b != a and b != -a and is_parallel(a, b):
                return ValidationReport(False, 1, (a, b), f"{b} is a multiple of {a} other than +-{a}")
    for a in roots:
        for b in roots:
            image = reflect(b, a)
            if image not in phi:
                return ValidationReport(
                    False, 2, (a, b, image), f"s_{a}({b}) = {image} is not a root"
                )
    for a in roots:
        aa = inner_product(a, a)
        for b in roots:
            q = 2 * inner_product(a, b) / aa
            if q.denominator != 1:
                return ValidationReport(
                    False, 3, (a, b), f"2<{a},{b}>/<{a},{a}> = {fmt_rational(q)} is not an integer"
                )
    return ValidationReport(True)


def dual_system(phi: RootSystem) -> RootSystem:
    return RootSystem((coroot(a) for a in phi.roots), phi.ambient_dim)


def is_irreducible(phi: RootSystem) -> bool:
    roots = phi.roots
    if not roots:
        raise WeylError("irreducibility is undefined for the empty root system")
    seen = {0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j, b in enumerate(roots):
            if j not in seen and inner_product(roots[i], b) != 0:
                seen.add(j)
                queue.append(j)
    return len(seen) == len(roots)


def positive_roots(phi: RootSystem) -> tuple[Vector, ...]:
    return phi.positive_roots


def simple_roots(phi: RootSystem) -> tuple[Vector, ...]:
    return phi.simple_roots


def highest_root(phi: RootSystem) -> Vector:
    return phi.highest_root


@dataclass(frozen=True)
class Lattice:
    basis: tuple[Vector, ...]

    @classmethod
    def spanned_by(cls, vectors: Sequence[Vector]) -> Lattice:
        return cls(tuple(integer_row_basis(vectors)))

    def __contains__(self, v: Vector) -> bool:
        if not self.basis:
            return v.is_zero()
        cols = self.basis
        a = [[b[i] for b in cols] for i in range(v.dim)]
        c = solve(a, v.coords)
        return c is not None and all(x.denominator == 1 for x in c)

    def contains(self, v: Vector) -> bool:
        return v in self


def root_lattice(phi: RootSystem) -> Lattice:
    return Lattice.spanned_by(phi.roots)


def coroot_lattice(phi: RootSystem) -> Lattice:
    return Lattice.spanned_by([coroot(a) for a in phi.roots])


# -- Coxeter matrix and diagram ---------------------------------------------

@dataclass(frozen=True)
class CoxeterMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.entries)
        r = len(m)
        if any(len(row) != r for row in m):
            raise WeylError("Coxeter matrix must be square")
        for i in range(r):
            if m[i][i] != 1:
                raise WeylError("Coxeter matrix must have 1 on the diagonal")
            for j in range(r):
                if m[i][j] != m[j][i]:
                    raise WeylError("Coxeter matrix must be symmetric")
                if i != j and m[i][j] < 2:
                    raise WeylError("off-diagonal Coxeter entries must be >= 2")
        object.__setattr__(self, "entries", m)

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


def _reflection_pair_order(a: Vector, b: Vector, limit: int = 6) -> int:
    dim = a.dim
    basis = [Vector.basis(i, dim) for i in range(dim)]
    current = basis
    for k in range(1, limit + 1):
        current = [reflect(reflect(v, b), a) for v in current]
        if current == basis:
            return k
    raise WeylError(f"order of s_{a} s_{b} exceeds {limit}; system is not crystallographic")


def coxeter_matrix(phi: RootSystem) -> CoxeterMatrix:
    simple = phi.simple_roots
    r = len(simple)
    return CoxeterMatrix(tuple(
        tuple(1 if i == j else _reflection_pair_order(simple[i], simple[j]) for j in range(r))
        for i in range(r)
    ))


def _edge(m: int) -> str:
    if m == 2:
        return "   "
    if m == 3:
        return " — "
    return f" —{m}— "


def coxeter_diagram(m: CoxeterMatrix) -> str:
    """ASCII Coxeter diagram.

    The first line chains vertices 1..r, drawing edges between consecutive
    indices. Any edge between non-consecutive vertices goes on its own line.
    """
    r = m.size
    line = "1"
    for i in range(1, r):
        line += _edge(m[i - 1, i]) + str(i + 1)
    extra = [
        f"{i + 1}{_edge(m[i, j])}{j + 1}"
        for i in range(r) for j in range(i + 2, r) if m[i, j] >= 3
    ]
    return "\n".join([line] + extra)


def recognize_family(m: CoxeterMatrix) -> tuple[str, int] | None:
    """Identify the classical type of a Coxeter matrix.

    Returns ("A", n), ("B/C", n) or ("D", n); None if the diagram is not one
    of these (including reducible diagrams).
    """
    r = m.size
    adj = {i: [j for j in range(r) if j != i and m[i, j] >= 3] for i in range(r)}
    edges = {(i, j): m[i, j] for i in range(r) for j in adj[i] if i < j}
    if len(edges) != r - 1:
        return None
    seen, stack = {0}, [0]
    while stack:
        for j in adj[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    if len(seen) != r:
        return None
    # connected with r-1 edges: a tree
    labels = sorted(edges.values())
    degrees = [len(adj[i]) for i in range(r)]
    if max(degrees, default=0) <= 2:
        if all(x == 3 for x in labels):
            return ("A", r)
        if labels.count(4) == 1 and all(x in (3, 4) for x in labels):
            (i, j), = [e for e, x in edges.items() if x == 4]
            if degrees[i] == 1 or degrees[j] == 1:
                return ("B/C", r)
        return None
    if r >= 4 and all(x == 3 for x in labels) and degrees.count(3) == 1 and max(degrees) == 3:
        fork = degrees.index(3)
        leaves = [j for j in adj[fork] if degrees[j] == 1]
        if len(leaves) >= 2:
            return ("D", r)
    return None


# -- JSON interchange --------------------------------------------------------

def to_json_dict(phi: RootSystem) -> dict:
    return {
        "ambient_dim": phi.ambient_dim,
        "roots": [[[c.numerator, c.denominator] for c in r.coords] for r in phi.roots],
    }


def from_json_dict(data: dict) -> RootSystem:
    try:
        dim = int(data["ambient_dim"])
        roots = [Vector(tuple(Fraction(int(n), int(d)) for n, d in r)) for r in data["roots"]]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise WeylError(f"malformed root system JSON: {exc}") from exc
    return RootSystem(roots, dim)


def dumps(phi: RootSystem) -> str:
    return json.dumps(to_json_dict(phi))


def loads(text: str) -> RootSystem:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WeylError(f"invalid JSON: {exc}") from exc
    return from_json_dict(data)
