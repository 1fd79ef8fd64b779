"""The affine Weyl group W_a = W(Phi) acting with translations by L(Phi^vee).

Elements are :class:`~weylkit.geometry.AffineIsometry` values acting as
x -> A x + t. Products compose actions: ``(f * g)(x) == f(g(x))``.

Generator indices follow the word notation used by the CLI: 0 is the affine
reflection s_{theta,1} in the highest root, 1..r the simple reflections in
simple-root order.
"""
from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

from .errors import WeylError
from .geometry import AffineHyperplane, AffineIsometry, Vector, reflection_isometry
from .roots import Lattice, RootSystem, coroot_lattice, is_irreducible
from .weyl import FiniteGroupTable, GroupElement, generate

AffineElement = AffineIsometry


def from_reflection(phi: RootSystem, alpha: Vector, k: int) -> AffineElement:
    """s_{alpha,k}: x -> x - (<x,alpha> - k) alpha^vee, for a root alpha."""
    if alpha not in phi:
        raise WeylError(f"{alpha} is not a root of the system")
    if int(k) != k:
        raise WeylError(f"level must be an integer, got {k}")
    return reflection_isometry(alpha, int(k))


def multiply(f: AffineElement, g: AffineElement) -> AffineElement:
    return f * g


def is_translation(g: AffineElement) -> bool:
    return g.is_translation()


def parse_word(text: str) -> list[int]:
    """Parse "0,1,2,1" into generator indices; the empty string is the empty word."""
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise WeylError(f"malformed word {text!r}; expected comma-separated integers") from None


def format_word(word: Sequence[int]) -> str:
    return ",".join(str(i) for i in word)


class AffineWeylGroup:
    """Simple affine generators of an irreducible root system, plus the
    finite group and coroot lattice needed to check the semidirect product."""

    def __init__(self, phi: RootSystem):
        if not is_irreducible(phi):
            raise WeylError("affine generators need an irreducible system (no single highest root)")
        self.phi = phi
        self.dim = phi.ambient_dim
        self.theta = phi.highest_root
        self.walls: tuple[AffineHyperplane, ...] = (AffineHyperplane(self.theta, 1),) + tuple(
            AffineHyperplane(a, 0) for a in phi.simple_roots
        )
        self.generators: tuple[AffineElement, ...] = tuple(
            reflection_isometry(h.normal, h.level) for h in self.walls
        )
        self.identity = AffineIsometry.identity(self.dim)

    @property
    def rank(self) -> int:
        return self.phi.rank

    def __len__(self):
        return len(self.generators)

    @cached_property
    def finite_group(self) -> FiniteGroupTable:
        return generate(self.phi)

    @cached_property
    def coroot_lattice(self) -> Lattice:
        return coroot_lattice(self.phi)

    def word_to_element(self, word: Iterable[int]) -> AffineElement:
        g = self.identity
        for i in word:
            if not 0 <= i < len(self.generators):
                raise WeylError(f"generator index {i} out of range 0..{len(self.generators) - 1}")
            g = g * self.generators[i]
        return g

    def decompose(self, g: AffineElement) -> tuple[GroupElement, Vector]:
        """Split g = t_v . w into its linear part w in W and translation v in L(Phi^vee)."""
        if g.linear not in self.finite_group:
            raise WeylError("linear part is not an element of the finite Weyl group")
        if g.translation not in self.coroot_lattice:
            raise WeylError(f"translation {g.translation} is not in the coroot lattice")
        return g.linear, g.translation

    def compose_parts(self, linear: GroupElement, translation: Vector) -> AffineElement:
        return AffineIsometry.translation_by(translation) * AffineIsometry.linear_map(linear)


def simple_affine_generators(phi: RootSystem) -> tuple[AffineElement, ...]:
    return AffineWeylGroup(phi).generators
