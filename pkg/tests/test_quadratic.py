import random
from fractions import Fraction as Fr

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stabsys.bounds import admissible_raw
from stabsys.charges import z_alpha
from stabsys.core import ClassVector as C
from stabsys.core import StabError
from stabsys.quadratic import (
    QuadraticForm3,
    decomposition_holds_at,
    decomposition_residual,
    delta,
    delta_form,
    delta_forms,
    q_alpha,
    q_alpha_branches,
    q_alpha_form,
    q_dagger,
    support_certificate,
)

ints = st.integers(-30, 30)
classes = st.builds(C, ints, ints, ints)
pos = st.fractions(min_value=Fr(1, 20), max_value=10, max_denominator=20)


def test_q_alpha_examples():
    assert q_alpha(C(0, 1, 1), 1) == 2
    assert q_alpha(C(0, -1, 1), 1) == -2
    assert q_alpha(C(1, 1, 1), Fr(1, 2)) == 10
    with pytest.raises(StabError):
        q_alpha(C(1, 0, 0), 0)


def test_delta_examples():
    assert delta(C(1, 0, 1), 0, 0, 1) == 1
    assert delta(C(2, 4, 2), 1, 0, 1) == 28
    assert delta(C(3, -2, 0), 2, 5, 1) == 2 * 4 + 5 * 9


def test_delta_forms_examples():
    dr, di = delta_forms(1, 2, 1, 0, 1, Fr(-3, 2))
    assert dr.coeffs == (Fr(-3, 2), -1, 0)
    assert di.coeffs == (3, Fr(1, 2), Fr(-1, 2))
    dr, _ = delta_forms(3, 1, 0, 0, 4)
    assert dr.coeffs[1:] == (0, -1)
    with pytest.raises(StabError):
        delta_forms(2, 1, 1, 0, 1)


def test_q_dagger_examples():
    base = q_alpha_form(1)
    disc = delta_form(0, 0, 1)
    assert q_dagger(C(0, 1, 1), 1, 1, base, disc) == 3
    assert q_dagger(C(0, -1, 1), 1, 1, base, disc) == -3
    with pytest.raises(StabError):
        q_dagger(C(0, 1, 1), 1, 0, base, disc)


def test_support_certificate_examples():
    cert = support_certificate(1, bound=30)
    assert cert.passed and cert.kernel_checked > 0
    assert q_alpha(C(0, -1, 2), Fr(1, 2)) == -5
    z = z_alpha(C(1, 0, 0), 2)
    assert (z.re**2 + z.im**2) / 1 >= min(Fr(4), Fr(1))
    js = support_certificate(Fr(1, 2), bound=6).to_json()
    assert js["passed"] and js["violations"] == []


def test_quadratic_form_validation():
    with pytest.raises(StabError):
        QuadraticForm3(((1, 2, 0), (0, 1, 0), (0, 0, 1)))
    f = QuadraticForm3.from_monomials(nn=1, dd=2, kk=3, nd=4, nk=5, dk=6)
    assert f.monomials() == (1, 2, 3, 4, 5, 6)
    assert f(C(1, 1, 1)) == 21


@given(classes)
def test_branch_continuity(c):
    low, high = q_alpha_branches(c, 1)
    assert low == high == 2 * c.d * c.k == q_alpha(c, 1)


@given(classes, pos)
def test_form_matches_function(c, alpha):
    assert q_alpha_form(alpha)(c) == q_alpha(c, alpha)


def _random_params(rng):
    alpha = Fr(rng.randint(1, 200), rng.randint(1, 20))
    beta = Fr(rng.randint(-200, 200), rng.randint(1, 20))
    u = Fr(rng.randint(20, 400), rng.randint(1, 20))
    p = (alpha + 1 - u) / alpha**2
    q = Fr(rng.randint(0, 200), rng.randint(1, 20))
    A = Fr(rng.randint(-200, 200), rng.randint(1, 20))
    return alpha, beta, p, q, u, A


def test_decomposition_identity_symbolic_and_pointwise():
    rng = random.Random(2024)
    for _ in range(200):
        args = _random_params(rng)
        assert decomposition_residual(*args) == (0,) * 6
        # second route: evaluation at points spanning the quadratic monomials
        for c in [C(1, 0, 0), C(0, 1, 0), C(0, 0, 1), C(1, 1, 0), C(1, 0, 1), C(0, 1, 1), C(2, -3, 5)]:
            assert decomposition_holds_at(c, *args)


@given(st.integers(0, 20), st.integers(-20, 20), st.integers(0, 20),
       st.sampled_from([0, 1]), st.sampled_from([0, 1]), st.sampled_from([1, 2]))
def test_delta_nonneg_on_admissible(n, d, k, p, q, u):
    if admissible_raw(n, d, k):
        assert delta(C(n, d, k), p, q, u) >= 0


def test_delta_nonneg_exhaustive_box():
    for p in (0, 1):
        for q in (0, 1):
            for u in (1, 2):
                for n in range(0, 31):
                    for d in range(-30, 31):
                        for k in range(0, 31):
                            if admissible_raw(n, d, k):
                                assert k * (d + n - k) + p * d * d + q * n * n + u * k * k >= 0


@pytest.mark.parametrize("alpha", [Fr(1, 2), Fr(1), Fr(2), Fr(7, 3), Fr(3, 10)])
def test_kernel_negativity(alpha):
    a, b = alpha.numerator, alpha.denominator
    for m in range(-50, 51):
        if m:
            assert q_alpha(C(0, -a * m, b * m), alpha) < 0


@pytest.mark.parametrize("alpha", [Fr(1, 2), Fr(2)])
def test_certificate_ratio_bound_attained_by_witness(alpha):
    cert = support_certificate(alpha, bound=8)
    n, d, k = cert.ratio_witness
    z = z_alpha(C(n, d, k), alpha)
    assert cert.ratio_min == (z.re**2 + z.im**2) / (n * n + d * d + k * k)
    assert cert.ratio_min >= min(alpha**2, 1)


def test_certificate_is_deterministic_across_workers():
    a = support_certificate(Fr(7, 3), bound=10, workers=1)
    b = support_certificate(Fr(7, 3), bound=10, workers=2)
    assert a == b
