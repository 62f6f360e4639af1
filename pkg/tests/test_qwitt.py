import random

import pytest

from qvirasoro.qscalar import EXACT, qangle, qgamma, qint
from qvirasoro.qseries import LaurentPoly, monomial, tau
from qvirasoro.qwitt import (AlgebraElement, chat, check_chat_commutation, check_ell_relation,
                             check_twisted_bracket, d, d_bracket, gamma_op, jacobi_defect,
                             realize)


def random_element(rng, with_central=True):
    d_part = {rng.randint(-6, 6): rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(rng.randint(1, 5))}
    return AlgebraElement(d_part, rng.randint(-2, 2) if with_central else 0)


def test_bracket_examples():
    assert d_bracket(d(1), d(-1)) == d(0, qint(2))
    assert d_bracket(d(2), d(-2)) == d(0, qint(4)) + chat(qgamma(2))
    x = d(3) + d(-3, 2) + d(0, 5)
    assert d_bracket(x, x).is_zero()
    assert d_bracket(chat(), d(5)).is_zero()
    assert d_bracket(d(5), chat()).is_zero()


def test_bracket_antisymmetric_bilinear():
    rng = random.Random(1)
    for _ in range(30):
        x, y, w = (random_element(rng) for _ in range(3))
        assert (d_bracket(x, y) + d_bracket(y, x)).is_zero()
        k = rng.randint(-3, 3)
        assert d_bracket(x + w * k, y) == d_bracket(x, y) + d_bracket(w, y) * k


def test_grading():
    for m in range(-6, 7):
        for n in range(-6, 7):
            b = d_bracket(d(m), d(n))
            assert set(b.d_part) <= {m + n}
            if m + n != 0:
                assert b.central == 0


def test_gamma_op():
    assert gamma_op(d(0)) == d(0, 2)
    assert gamma_op(d(3)) == d(3, qangle(3))
    assert gamma_op(d(2) + d(-2)) == (d(2) + d(-2)) * qangle(2)
    with pytest.raises(ValueError):
        gamma_op(d(1) + chat())


@pytest.mark.parametrize("mnp", [(1, 0, -1), (3, 3, -2), (4, -1, -3), (2, 5, 7)])
def test_jacobi_defect_examples(mnp):
    assert jacobi_defect(*mnp).is_zero()


def test_jacobi_parts_vanish_separately():
    R = range(-4, 5)
    for m in R:
        for n in R:
            for p in R:
                xi = jacobi_defect(m, n, p)
                assert xi.coeff(m + n + p) == 0
                assert xi.central == 0


def test_jacobi_central_part_is_identity_X():
    # the chat coefficient collects -( [m-n]<p>gamma_p + cyclic ), which is X / ([2][3])
    m, n = 4, -1
    p = -m - n
    part = [d_bracket(d_bracket(d(a), d(b)), gamma_op(d(c))).central
            for a, b, c in ((m, n, p), (n, p, m), (p, m, n))]
    expected = [qint(m - n) * qangle(p) * qgamma(m + n),
                qint(n - p) * qangle(m) * qgamma(n + p),
                qint(p - m) * qangle(n) * qgamma(p + m)]
    assert part == expected
    assert sum(expected, EXACT.zero) == 0


def test_realize_examples():
    for m in range(-4, 5):
        for k in range(-4, 5):
            assert realize(d(m))(monomial(k)) == monomial(m + k, -qint(k))
            assert realize(chat())(monomial(k)) == monomial(k, EXACT.qpow(k))
    f = LaurentPoly({-2: 1, 3: 4})
    assert realize(AlgebraElement())(f).is_zero()
    x = d(2, 3) + chat(5)
    assert realize(x)(f) == realize(d(2, 3))(f) + tau(f, 1) * 5


@pytest.mark.parametrize("mnk", [(2, 2, 3), (1, -1, 3), (2, 5, -4), (0, 0, 0)])
def test_twisted_bracket_examples(mnk):
    assert check_twisted_bracket(*mnk)


@pytest.mark.parametrize("mnk", [(3, 3, 1), (2, 1, 0), (-3, 4, 2), (5, -2, -3)])
def test_ell_relation_examples(mnk):
    assert check_ell_relation(*mnk)


@pytest.mark.parametrize("mk", [(0, 4), (3, 1), (-2, -5)])
def test_chat_commutation_examples(mk):
    assert check_chat_commutation(*mk)


def test_realization_sweep_small():
    R = range(-4, 5)
    assert all(check_twisted_bracket(m, n, k) for m in R for n in R for k in R)
    assert all(check_ell_relation(m, n, k) for m in R for n in R for k in R)
