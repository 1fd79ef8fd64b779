import random
from fractions import Fraction

import pytest

from weylkit import build
from weylkit.affine import (
    AffineWeylGroup,
    from_reflection,
    is_translation,
    multiply,
    parse_word,
    simple_affine_generators,
)
from weylkit.errors import WeylError
from weylkit.geometry import AffineIsometry, Vector, affine_reflect, coroot, reflection_matrix, vec
from weylkit.roots import RootSystem

SEED = 20240611


@pytest.fixture(scope="module")
def wc2(c2):
    return AffineWeylGroup(c2)


@pytest.fixture(scope="module")
def wa2(a2):
    return AffineWeylGroup(a2)


def test_from_reflection_examples(c2):
    a = vec(1, 1)
    assert from_reflection(c2, a, 0) == AffineIsometry(reflection_matrix(a), Vector.zero(2))
    assert from_reflection(c2, vec(2, 0), 1) == AffineIsometry(reflection_matrix(vec(2, 0)), vec(1, 0))
    s = from_reflection(c2, vec(0, 2), 3)
    assert s * s == AffineIsometry.identity(2)
    with pytest.raises(WeylError):
        from_reflection(c2, vec(1, 0), 1)


def test_from_reflection_matches_formula(c2):
    rng = random.Random(SEED)
    for a in c2.roots:
        k = rng.randint(-3, 3)
        g = from_reflection(c2, a, k)
        for _ in range(5):
            p = vec(Fraction(rng.randint(-9, 9), rng.randint(1, 5)), Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
            assert g(p) == affine_reflect(p, a, k)


def test_multiply_examples(c2):
    f = from_reflection(c2, vec(1, -1), 2)
    ident = AffineIsometry.identity(2)
    assert multiply(f, ident) == f
    a = vec(2, 0)
    t = multiply(from_reflection(c2, a, 1), from_reflection(c2, a, 0))
    assert t == AffineIsometry.translation_by(coroot(a))
    assert is_translation(t)
    u = AffineIsometry.translation_by(vec(0, 1))
    assert multiply(t, u) == AffineIsometry.translation_by(vec(1, 1)) == multiply(u, t)
    with pytest.raises(WeylError):
        multiply(f, AffineIsometry.identity(3))


def test_is_translation_examples(c2):
    assert is_translation(AffineIsometry.identity(2))
    assert not is_translation(from_reflection(c2, vec(1, 1), 0))


def test_generators(wc2, wa2):
    assert wc2.generators == (
        from_reflection(wc2.phi, vec(2, 0), 1),
        from_reflection(wc2.phi, vec(1, -1), 0),
        from_reflection(wc2.phi, vec(0, 2), 0),
    )
    assert len(simple_affine_generators(build("A1"))) == 2
    assert len(wa2.generators) == 3
    assert wa2.generators[0] == from_reflection(wa2.phi, vec(1, 0, -1), 1)
    for s in wc2.generators + wa2.generators:
        assert s * s == s.identity(s.dim)


def test_generators_fix_their_wall(wc2):
    for s, wall in zip(wc2.generators, wc2.walls):
        p = wall.normal * (wall.level / wall.normal.dot(wall.normal))
        assert wall.contains(p) and s(p) == p


def test_reducible_rejected():
    phi = RootSystem([vec(1, 0), vec(-1, 0), vec(0, 1), vec(0, -1)])
    with pytest.raises(WeylError):
        AffineWeylGroup(phi)


def test_decompose_examples(wc2):
    lin, t = wc2.decompose(wc2.identity)
    assert lin == wc2.identity.linear and t.is_zero()
    lin, t = wc2.decompose(from_reflection(wc2.phi, vec(2, 0), 3))
    assert lin == reflection_matrix(vec(2, 0)) and t == vec(3, 0)


def test_decompose_rejects_off_lattice(wc2):
    with pytest.raises(WeylError):
        wc2.decompose(AffineIsometry.translation_by(vec(Fraction(1, 2), 0)))


def test_word_to_element(wc2):
    assert wc2.word_to_element([]) == wc2.identity
    for i in range(3):
        assert wc2.word_to_element([i, i]) == wc2.identity
    g = wc2.word_to_element([0, 1, 0, 1])
    _, t = wc2.decompose(g)
    assert t in wc2.coroot_lattice
    with pytest.raises(WeylError):
        wc2.word_to_element([3])
    with pytest.raises(WeylError):
        wc2.word_to_element([-1])


def test_parse_word():
    assert parse_word("") == []
    assert parse_word(" 0,1 ,2") == [0, 1, 2]
    with pytest.raises(WeylError):
        parse_word("0,,1")


@pytest.mark.parametrize("name", ["C2", "A2", "B3"])
def test_semidirect_random_words(name):
    group = AffineWeylGroup(build(name))
    rng = random.Random(SEED)
    for _ in range(200):
        word = [rng.randrange(len(group)) for _ in range(rng.randint(0, 15))]
        g = group.word_to_element(word)
        lin, t = group.decompose(g)
        assert group.compose_parts(lin, t) == g


@pytest.mark.parametrize("name", ["C2", "A2"])
def test_pointwise_agreement(name):
    group = AffineWeylGroup(build(name))
    rng = random.Random(SEED)
    dim = group.dim
    for _ in range(100):
        word = [rng.randrange(len(group)) for _ in range(rng.randint(0, 10))]
        p = Vector(tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for _ in range(dim)))
        q = p
        # word s_1 ... s_r acts on a point right to left
        for i in reversed(word):
            wall = group.walls[i]
            q = affine_reflect(q, wall.normal, wall.level)
        assert group.word_to_element(word)(p) == q


def test_translations_commute(wc2):
    rng = random.Random(SEED)
    lv = wc2.coroot_lattice.basis
    for _ in range(20):
        t1 = sum((b * rng.randint(-3, 3) for b in lv), Vector.zero(2))
        t2 = sum((b * rng.randint(-3, 3) for b in lv), Vector.zero(2))
        f, g = AffineIsometry.translation_by(t1), AffineIsometry.translation_by(t2)
        assert f * g == g * f == AffineIsometry.translation_by(t1 + t2)
