from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from weylkit.errors import WeylError
from weylkit.geometry import (
    AffineHyperplane,
    AffineIsometry,
    LinearHyperplane,
    Vector,
    affine_reflect,
    as_matrix,
    compose,
    coroot,
    inner_product,
    integer_row_basis,
    invert,
    rank,
    reflect,
    reflection_isometry,
    solve,
    vec,
)

e1, e2 = vec(1, 0), vec(0, 1)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def vectors(dim=3):
    return st.lists(rationals, min_size=dim, max_size=dim).map(lambda c: Vector(tuple(c)))


nonzero_vectors = vectors().filter(lambda v: not v.is_zero())


def isometries():
    # signed permutation matrices are orthogonal and rational
    return st.tuples(st.permutations(range(3)), st.lists(st.sampled_from([1, -1]), min_size=3, max_size=3),
                     vectors()).map(
        lambda t: AffineIsometry(
            as_matrix([[t[1][i] if j == t[0][i] else 0 for j in range(3)] for i in range(3)]), t[2]
        )
    )


def test_inner_product_examples():
    assert inner_product(e1, e1) == 1
    assert inner_product(e1, e2) == 0
    assert inner_product(2 * e1, -e1 + e2) == -2


def test_inner_product_dimension_mismatch():
    with pytest.raises(WeylError):
        inner_product(e1, vec(1, 0, 0))


def test_vectors_are_exact_and_reduced():
    v = vec("2/4", Fraction(3, 9))
    assert v.coords == (Fraction(1, 2), Fraction(1, 3))
    assert str(v) == "(1/2, 1/3)"
    assert vec(1, 2) == Vector((Fraction(2, 2), 2))


def test_reflect_examples():
    a = vec(1, 2)
    assert reflect(a, a) == -a
    assert reflect(vec(2, -1), a) == vec(2, -1)
    assert reflect(e1 + e2, 2 * e1) == -e1 + e2


def test_reflect_zero_alpha():
    with pytest.raises(WeylError):
        reflect(e1, vec(0, 0))
    with pytest.raises(WeylError):
        affine_reflect(e1, vec(0, 0), 1)


def test_affine_reflect_examples():
    a = 2 * e1
    assert affine_reflect(vec(Fraction(1, 2), 7), a, 1) == vec(Fraction(1, 2), 7)
    assert affine_reflect(vec(3, 5), a, 0) == reflect(vec(3, 5), a)
    assert affine_reflect(vec(0, 0), a, 1) == e1


def test_coroot():
    assert coroot(2 * e1) == e1
    assert inner_product(vec(3, -1), coroot(vec(3, -1))) == 2


def test_compose_examples():
    g = reflection_isometry(vec(1, -1), 2)
    ident = AffineIsometry.identity(2)
    assert compose(ident, g) == g
    assert compose(g, invert(g)) == ident
    a = 2 * e1
    # s_{a,1} s_{a,0}: x -> x - (<x,a> - 1) a^v after x -> x - <x,a> a^v, i.e. translation by a^v
    assert compose(reflection_isometry(a, 1), reflection_isometry(a, 0)) == AffineIsometry.translation_by(coroot(a))


def test_invert_examples():
    ident = AffineIsometry.identity(2)
    assert invert(ident) == ident
    s = reflection_isometry(vec(1, 1), 3)
    assert invert(s) == s
    t = vec(Fraction(1, 2), -3)
    assert invert(AffineIsometry.translation_by(t)) == AffineIsometry.translation_by(-t)


def test_invert_rejects_non_orthogonal():
    with pytest.raises(WeylError):
        invert(AffineIsometry(as_matrix([[2, 0], [0, 1]]), vec(0, 0)))


def test_compose_dimension_mismatch():
    with pytest.raises(WeylError):
        compose(AffineIsometry.identity(2), AffineIsometry.identity(3))


def test_hyperplanes():
    h = LinearHyperplane(vec(1, 2))
    assert h.same_plane(LinearHyperplane(vec(-3, -6)))
    assert not h.same_plane(LinearHyperplane(vec(2, 1)))
    assert h.contains(vec(2, -1))
    with pytest.raises(WeylError):
        LinearHyperplane(vec(0, 0))
    ah = AffineHyperplane(vec(2, 0), 1)
    assert ah.contains(vec(Fraction(1, 2), 9))
    assert ah.side(vec(1, 0)) == 1 and ah.side(vec(0, 0)) == -1
    with pytest.raises(WeylError):
        AffineHyperplane(vec(0, 0), 1)


def test_solve_and_rank():
    assert solve([[2, 1], [1, 3]], [3, 4]) == (1, 1)
    assert solve([[1, 1], [1, 1]], [1, 2]) is None
    with pytest.raises(WeylError):
        solve([[1, 1], [2, 2]], [1, 2])
    assert rank([vec(1, -1, 0), vec(0, 1, -1), vec(1, 0, -1)]) == 2


def test_integer_row_basis():
    # {(2,0),(1,1),(0,2)} spans {(a,b): a+b even}, index 2 in Z^2
    basis = integer_row_basis([vec(2, 0), vec(1, 1), vec(0, 2), vec(-1, 1)])
    assert len(basis) == 2
    det = basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0]
    assert abs(det) == 2


@given(vectors(), nonzero_vectors)
def test_reflect_involution(v, a):
    assert reflect(reflect(v, a), a) == v


@given(vectors(), vectors(), nonzero_vectors)
def test_reflect_preserves_inner_product(u, v, a):
    assert inner_product(reflect(u, a), reflect(v, a)) == inner_product(u, v)


@given(vectors(), nonzero_vectors, rationals)
def test_affine_reflect_fixed_set(v, a, k):
    on = inner_product(v, a) == k
    assert (affine_reflect(v, a, k) == v) == on
    # project v onto the hyperplane: that point must be fixed
    p = v - a * ((inner_product(v, a) - k) / inner_product(a, a))
    assert affine_reflect(p, a, k) == p
    assert affine_reflect(affine_reflect(v, a, k), a, k) == v


@given(isometries(), isometries(), isometries(), vectors())
def test_compose_associative_and_apply(f, g, h, v):
    assert compose(compose(f, g), h) == compose(f, compose(g, h))
    assert compose(f, g)(v) == f(g(v))
    ident = AffineIsometry.identity(3)
    assert compose(ident, f) == f == compose(f, ident)
    assert compose(f, invert(f)) == ident
