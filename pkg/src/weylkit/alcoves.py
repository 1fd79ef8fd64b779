"""Alcove geometry of the affine Coxeter complex.

Alcoves are addressed by affine Weyl group elements: ``g`` names the alcove
g(C0), where C0 is the fundamental alcove cut out by the simple walls
<x,a_i> = 0 and <x,theta> = 1. Two alcoves are adjacent when their addresses
differ by right multiplication by one generator.

Three length notions are computed independently:

* ``length``: number of hyperplanes H_{a,k} separating C0 from g(C0),
* ``bfs_distance``: gallery distance, by breadth-first search,
* ``reduced_word``: a minimal word, found by greedy descent.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .affine import AffineElement, AffineWeylGroup, format_word
from .errors import RadiusExceeded, WeylError
from .geometry import AffineHyperplane, Vector, fmt_rational, inner_product, mat_vec, solve
from .roots import RootSystem

DEFAULT_RADIUS_CAP = 10


@dataclass(frozen=True)
class FundamentalAlcove:
    """Walls are indexed like the generators; ``vertices[i]`` is the vertex
    opposite wall i (it lies on every other wall)."""

    walls: tuple[AffineHyperplane, ...]
    vertices: tuple[Vector, ...]
    barycenter: Vector


@dataclass(frozen=True)
class Alcove:
    address: AffineElement
    interior_point: Vector

    def __eq__(self, other):
        if not isinstance(other, Alcove):
            return NotImplemented
        return self.address == other.address

    def __hash__(self):
        return hash(self.address)


@dataclass(frozen=True)
class Gallery:
    alcoves: tuple[Alcove, ...]
    crossings: tuple[AffineHyperplane, ...]
    word: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.crossings)


def fundamental_alcove(group: AffineWeylGroup) -> FundamentalAlcove:
    phi = group.phi
    simple = phi.simple_roots
    walls = group.walls
    vertices = []
    for omit in range(len(walls)):
        rows = [w for i, w in enumerate(walls) if i != omit]
        # solve in simple-root coordinates so A_n stays inside span(Phi)
        a = [[inner_product(w.normal, s) for s in simple] for w in rows]
        c = solve(a, [w.level for w in rows])
        if c is None:
            raise WeylError("alcove walls are inconsistent")
        vertices.append(sum((s * x for s, x in zip(simple, c)), Vector.zero(phi.ambient_dim)))
    bary = sum(vertices, Vector.zero(phi.ambient_dim)) / len(vertices)
    for a in simple:
        if not inner_product(bary, a) > 0:
            raise WeylError("barycenter is not interior")
    if not inner_product(bary, group.theta) < 1:
        raise WeylError("barycenter is not interior")
    return FundamentalAlcove(walls, tuple(vertices), bary)


def _normalize(normal: Vector, level: Fraction, positive: set) -> AffineHyperplane:
    if normal not in positive:
        normal, level = -normal, -level
    return AffineHyperplane(normal, level)


class CoxeterComplex:
    def __init__(self, phi: RootSystem | AffineWeylGroup):
        self.group = phi if isinstance(phi, AffineWeylGroup) else AffineWeylGroup(phi)
        self.phi = self.group.phi
        self.fundamental = fundamental_alcove(self.group)
        self.positive = self.phi.positive_roots
        self._positive_set = set(self.positive)
        self.identity = self.group.identity

    @property
    def generators(self):
        return self.group.generators

    def alcove(self, g: AffineElement) -> Alcove:
        return Alcove(g, g(self.fundamental.barycenter))

    def vertices(self, g: AffineElement) -> tuple[Vector, ...]:
        return tuple(g(v) for v in self.fundamental.vertices)

    def separating_hyperplanes(self, g: AffineElement) -> list[tuple[Vector, int]]:
        """(positive root, level) pairs of hyperplanes between C0 and g(C0),
        sorted by root index then level."""
        b = self.fundamental.barycenter
        gb = g(b)
        out = []
        for alpha in self.positive:
            x, y = inner_product(b, alpha), inner_product(gb, alpha)
            if y.denominator == 1:
                raise WeylError(f"interior point {gb} lies on a hyperplane for root {alpha}")
            lo, hi = min(x, y), max(x, y)
            out.extend((alpha, k) for k in range(math.floor(lo) + 1, math.ceil(hi)))
        return out

    def length(self, g: AffineElement) -> int:
        return len(self.separating_hyperplanes(g))

    def ball(self, radius: int) -> dict[AffineElement, int]:
        """All elements within gallery distance ``radius``, mapped to their distance,
        in breadth-first order."""
        depth = {self.identity: 0}
        frontier = [self.identity]
        for d in range(1, radius + 1):
            nxt = []
            for g in frontier:
                for s in self.generators:
                    h = g * s
                    if h not in depth:
                        depth[h] = d
                        nxt.append(h)
            frontier = nxt
        return depth

    def bfs_distance(self, g: AffineElement, radius_cap: int = DEFAULT_RADIUS_CAP) -> int:
        if g == self.identity:
            return 0
        seen = {self.identity}
        frontier = [self.identity]
        for d in range(1, radius_cap + 1):
            nxt = []
            for x in frontier:
                for s in self.generators:
                    h = x * s
                    if h == g:
                        return d
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            frontier = nxt
        raise RadiusExceeded(f"element is beyond radius cap {radius_cap}")

    def reduced_word(self, g: AffineElement) -> list[int]:
        descent = []
        current, n = g, self.length(g)
        while n > 0:
            for i, s in enumerate(self.generators):
                h = current * s
                m = self.length(h)
                if m < n:
                    descent.append(i)
                    current, n = h, m
                    break
            else:
                raise WeylError("no descending generator; length function is inconsistent")
        if current != self.identity:
            raise WeylError("greedy descent ended away from the identity")
        # g * s_a * s_b * ... = 1, so g = ... s_b s_a
        return descent[::-1]

    def wall_image(self, g: AffineElement, i: int) -> AffineHyperplane:
        """The image under g of wall i of C0, normalized to a positive root."""
        wall = self.fundamental.walls[i]
        normal = mat_vec(g.linear, wall.normal)
        level = wall.level + inner_product(g.translation, normal)
        return _normalize(normal, level, self._positive_set)

    def gallery(self, g: AffineElement) -> Gallery:
        word = self.reduced_word(g)
        current = self.identity
        alcoves = [self.alcove(current)]
        crossings = []
        for i in word:
            crossings.append(self.wall_image(current, i))
            current = current * self.generators[i]
            alcoves.append(self.alcove(current))
        return Gallery(tuple(alcoves), tuple(crossings), tuple(word))

    def adjacent(self, a: Alcove, b: Alcove) -> bool:
        return any(a.address * s == b.address for s in self.generators)


def format_gallery(gallery: Gallery) -> str:
    lines = []
    for step, hyper in enumerate(gallery.crossings, start=1):
        prefix = format_word(gallery.word[:step])
        lines.append(
            f"step {step}: cross H_{{alpha={hyper.normal}, k={fmt_rational(hyper.level)}}} into alcove {prefix}"
        )
    return "\n".join(lines)
