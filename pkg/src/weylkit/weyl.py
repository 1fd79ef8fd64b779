"""The finite Weyl group W(Phi), enumerated by breadth-first closure."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import GroupTooLarge
from .geometry import Matrix, identity_matrix, inner_product, is_orthogonal, mat_mul, mat_vec, reflection_matrix
from .roots import RootSystem, coxeter_matrix

DEFAULT_CAP = 10**6

GroupElement = Matrix

# 4 cos^2(pi/m) for the crystallographic orders (m = 1 is the diagonal)
ANGLE_CONSTANT = {1: 4, 2: 0, 3: 1, 4: 2, 6: 3}


@dataclass(frozen=True)
class FiniteGroupTable:
    """Elements of W in breadth-first order from the identity.

    ``words[i]`` is a word in simple-reflection indices (1-based) whose
    left-to-right product is ``elements[i]``.
    """

    elements: tuple[GroupElement, ...]
    words: tuple[tuple[int, ...], ...]
    generators: tuple[GroupElement, ...]
    _index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {g: i for i, g in enumerate(self.elements)})

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self._index

    def index(self, g: GroupElement) -> int:
        return self._index[g]

    def word_of(self, g: GroupElement) -> tuple[int, ...]:
        return self.words[self._index[g]]


def simple_reflections(phi: RootSystem) -> tuple[GroupElement, ...]:
    return tuple(reflection_matrix(a) for a in phi.simple_roots)


def generate(phi: RootSystem, cap: int = DEFAULT_CAP) -> FiniteGroupTable:
    gens = simple_reflections(phi)
    one = identity_matrix(phi.ambient_dim)
    elements = [one]
    words: list[tuple[int, ...]] = [()]
    index = {one: 0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        g, w = elements[i], words[i]
        for k, s in enumerate(gens, start=1):
            h = mat_mul(g, s)
            if h in index:
                continue
            if len(elements) >= cap:
                raise GroupTooLarge(f"group larger than cap ({cap})")
            index[h] = len(elements)
            elements.append(h)
            words.append(w + (k,))
            queue.append(index[h])
    return FiniteGroupTable(tuple(elements), tuple(words), gens)


def evaluate_word(word, gens) -> GroupElement:
    g = identity_matrix(len(gens[0]))
    for k in word:
        g = mat_mul(g, gens[k - 1])
    return g


def element_order(g: GroupElement, cap: int = DEFAULT_CAP) -> int:
    one = identity_matrix(len(g))
    power = g
    for k in range(1, cap + 1):
        if power == one:
            return k
        power = mat_mul(power, g)
    raise GroupTooLarge(f"element order exceeds cap ({cap})")


@dataclass(frozen=True)
class AnglePair:
    i: int
    j: int
    m: int
    inner: Fraction
    ok: bool


def verify_angle_condition(phi: RootSystem) -> list[AnglePair]:
    """Check <a_i,a_j> = -|a_i||a_j| cos(pi/m_ij) for simple roots, squared.

    Per pair i <= j: 4 <a_i,a_j>^2 = c <a_i,a_i><a_j,a_j> with
    c = 4 cos^2(pi/m_ij), and the sign of <a_i,a_j> matches -cos(pi/m_ij):
    nonpositive off the diagonal, positive on it (m_ii = 1). The -cos form
    holds for unit normals, hence the norms on the right.
    """
    simple = phi.simple_roots
    m = coxeter_matrix(phi)
    report = []
    for i in range(len(simple)):
        for j in range(i, len(simple)):
            a, b = simple[i], simple[j]
            ab = inner_product(a, b)
            c = ANGLE_CONSTANT.get(m[i, j])
            sign_ok = ab > 0 if i == j else ab <= 0
            ok = c is not None and sign_ok and 4 * ab * ab == c * inner_product(a, a) * inner_product(b, b)
            report.append(AnglePair(i + 1, j + 1, m[i, j], ab, ok))
    return report


def permutes_roots(g: GroupElement, phi: RootSystem) -> bool:
    return {mat_vec(g, r) for r in phi.roots} == set(phi.roots)


def check_invariance(table: FiniteGroupTable, phi: RootSystem) -> bool:
    return all(permutes_roots(g, phi) for g in table.elements)


def check_orthogonal(table: FiniteGroupTable) -> bool:
    return all(is_orthogonal(g) for g in table.elements)
