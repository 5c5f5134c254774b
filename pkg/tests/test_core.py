from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stabsys.core import INFINITY, ClassVector, Genus, Q, Slope, StabError, compare_slopes, fmt_q, is_parallel

ints = st.integers(-50, 50)
fracs = st.fractions(min_value=-100, max_value=100, max_denominator=50)
classes = st.builds(ClassVector, ints, ints, ints)
slopes = st.one_of(st.just(INFINITY), fracs.map(Slope))


def test_q_accepts_exact_forms():
    assert Q("3/6") == Fraction(1, 2)
    assert Q(4) == Fraction(4)
    assert Q(Fraction(2, 3)) == Fraction(2, 3)


@pytest.mark.parametrize("bad", [0.5, True])
def test_q_rejects_inexact(bad):
    with pytest.raises(TypeError):
        Q(bad)


@pytest.mark.parametrize("bad", ["0.5", "1e3", "x/2", "1/0"])
def test_q_rejects_bad_strings(bad):
    with pytest.raises(StabError):
        Q(bad)


def test_fmt_q():
    assert fmt_q(Fraction(6, 3)) == "2"
    assert fmt_q(Fraction(-3, 6)) == "-1/2"


def test_compare_slopes_examples():
    assert compare_slopes(Slope.finite("3/2"), Slope.finite(2)) == -1
    assert compare_slopes(INFINITY, Slope.finite(10**9)) == 1
    assert compare_slopes(INFINITY, INFINITY) == 0
    assert Slope.parse("inf") == INFINITY and str(Slope.finite("-1/2")) == "-1/2"


def test_is_parallel_examples():
    assert is_parallel(ClassVector(1, 2, 3), ClassVector(2, 4, 6))
    assert not is_parallel(ClassVector(1, 0, 0), ClassVector(0, 1, 0))
    assert is_parallel(ClassVector(0, 0, 0), ClassVector(5, 1, 2))


def test_classvector_parsing_and_arithmetic():
    c = ClassVector.of("2, -1, 3")
    assert c == ClassVector(2, -1, 3)
    assert -c == ClassVector(-2, 1, -3)
    assert c + c == 2 * c
    assert ClassVector.of([1, 2, 3]).as_list() == [1, 2, 3]
    with pytest.raises(StabError):
        ClassVector.of("1,2")
    with pytest.raises(TypeError):
        ClassVector(1.0, 2, 3)


def test_genus():
    assert Genus(3).euler_char == -2
    assert Genus(0).canonical_degree == -2
    with pytest.raises(StabError):
        Genus(-1)


@given(fracs, fracs, fracs)
def test_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert Fraction(a.numerator, a.denominator) == a
    assert a.denominator > 0


@given(slopes, slopes)
def test_compare_antisymmetric(a, b):
    assert compare_slopes(a, b) == -compare_slopes(b, a)


@given(slopes, slopes, slopes)
def test_compare_transitive(a, b, c):
    if compare_slopes(a, b) <= 0 and compare_slopes(b, c) <= 0:
        assert compare_slopes(a, c) <= 0


@given(st.lists(slopes, min_size=2, max_size=30))
def test_sorting_is_total(xs):
    ys = sorted(xs)
    assert all(compare_slopes(p, q) <= 0 for p, q in zip(ys, ys[1:]))


def test_total_order_on_large_sample():
    import random

    rng = random.Random(7)
    pool = [INFINITY] + [Slope(Fraction(rng.randint(-99, 99), rng.randint(1, 20))) for _ in range(200)]
    for _ in range(10_000):
        a, b = rng.choice(pool), rng.choice(pool)
        c = compare_slopes(a, b)
        assert c in (-1, 0, 1)
        assert c == -compare_slopes(b, a)
        assert (c == 0) == (a == b)


@given(classes, classes)
def test_parallel_symmetric(a, b):
    assert is_parallel(a, b) == is_parallel(b, a)


@given(classes, st.integers(-9, 9))
def test_parallel_to_multiples(a, lam):
    assert is_parallel(a, lam * a)
