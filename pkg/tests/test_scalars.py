import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from qsl3.scalars import (
    Cyc,
    DivisionByZero,
    ModeMismatch,
    ParseError,
    RatFunc,
    RootOfUnityQ,
    cube_roots,
    format_scalar,
    from_rational,
    guard_q,
    kappa_from_q,
    omega,
    one,
    parse_scalar,
    q_var,
    qfact,
    qint,
    rho_from_q,
    zero,
)

rationals = st.builds(mpq, st.integers(-40, 40), st.integers(1, 12))


def numeric_cycs():
    return st.builds(Cyc, rationals, rationals)


def ratfuncs():
    polys = st.lists(st.integers(-9, 9), min_size=1, max_size=4)
    return st.builds(
        lambda n, d: RatFunc(n, d),
        polys,
        polys.filter(lambda cs: any(cs)),
    )


def symbolic_cycs():
    return st.builds(Cyc, ratfuncs(), ratfuncs())


# -- field axioms ------------------------------------------------------------

@given(numeric_cycs(), numeric_cycs(), numeric_cycs())
def test_numeric_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


@given(numeric_cycs())
def test_numeric_inverse(a):
    if a:
        assert a * a.inv() == one()
    else:
        with pytest.raises(DivisionByZero):
            a.inv()


@settings(max_examples=40, deadline=None)
@given(symbolic_cycs(), symbolic_cycs(), symbolic_cycs())
def test_symbolic_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a - b) + b == a
    if b:
        assert (a / b) * b == a


def test_omega_is_a_primitive_cube_root():
    for mode in ("numeric", "symbolic"):
        w = omega(mode)
        assert w * w == -1 - w
        assert w ** 3 == one(mode)
        assert w ** 2 + w + 1 == zero(mode)
        r0, r1, r2 = cube_roots(mode)
        assert {r0 ** 3, r1 ** 3, r2 ** 3} == {one(mode)}
        assert len({r0, r1, r2}) == 3


def test_mode_mixing_is_rejected():
    with pytest.raises(ModeMismatch):
        one("numeric") + one("symbolic")
    with pytest.raises(ModeMismatch):
        Cyc(mpq(1), RatFunc.const(1))
    assert one("numeric") != one("symbolic")


# -- rational functions ------------------------------------------------------

def test_ratfunc_reduction_and_monic_denominator():
    f = RatFunc([0, 0, 2], [0, 2])          # 2q^2 / 2q  ->  q
    assert f == RatFunc.var()
    g = RatFunc([1, 1], [2, 2])             # (q+1)/(2q+2) -> 1/2
    assert g.as_constant() == mpq(1, 2)
    h = RatFunc([1], [0, 3])                # 1/(3q) -> (1/3)/q
    assert h.den == (mpq(0), mpq(1))
    assert h.num == (mpq(1, 3),)


@given(ratfuncs(), ratfuncs())
@settings(max_examples=60, deadline=None)
def test_ratfunc_field_ops(f, g):
    assert f + g == g + f
    assert f - f == RatFunc.const(0)
    if g:
        assert (f / g) * g == f


# -- derived constants -------------------------------------------------------

def test_kappa_and_rho_numeric_values():
    q = from_rational(2)
    k = kappa_from_q(q)
    assert k == from_rational(mpq(21, 4))  # 1/4 + 1 + 4
    r = rho_from_q(q)
    assert r == from_rational(mpq(4, 25))
    assert r.inv() == k + 1  # (q+1/q)^2 = kappa + 1


def test_kappa_symbolic_round_trip():
    k = kappa_from_q(q_var())
    assert format_scalar(k) == "q^-2+1+q^2"
    assert parse_scalar("q^-2+1+q^2", "symbolic") == k
    r = rho_from_q(q_var())
    assert r.inv() == k + 1
    assert format_scalar(r) == "(q^2)/(1+2*q^2+q^4)"


def test_qint_and_qfact():
    t = from_rational(3)
    assert qint(0, t) == zero()
    assert qint(4, t) == from_rational(1 + 3 + 9 + 27)
    assert qfact(3, t) == from_rational(1 * 4 * 13)
    tq = q_var() ** 2
    assert qint(2, tq) == 1 + q_var() ** 2


def test_guard_q():
    guard_q(from_rational(2), "II")
    guard_q(from_rational(1), "I")
    guard_q(from_rational(-1), "III")
    with pytest.raises(RootOfUnityQ):
        guard_q(from_rational(0), "I")
    with pytest.raises(RootOfUnityQ):
        guard_q(from_rational(1), "II")
    with pytest.raises(RootOfUnityQ):
        guard_q(from_rational(-1), "II'")
    guard_q(q_var(), "II")                       # an indeterminate is fine
    guard_q(q_var() ** 3, "II")
    with pytest.raises(RootOfUnityQ):
        guard_q(from_rational(1, "symbolic"), "II")  # constant 1 is not


# -- literals ----------------------------------------------------------------

@pytest.mark.parametrize(
    "text,mode",
    [
        ("0", "numeric"),
        ("-3/2", "numeric"),
        ("w", "numeric"),
        ("-w", "numeric"),
        ("1+2*w", "numeric"),
        ("3/2-5*w", "numeric"),
        ("q^-2+1+q^2", "symbolic"),
        ("2*w*q^-1", "symbolic"),
        ("q", "symbolic"),
        ("-q^3+w*q", "symbolic"),
        ("(1+q^2)/(1-q^2+q^4)", "symbolic"),
    ],
)
def test_parse_format_round_trip(text, mode):
    x = parse_scalar(text, mode)
    assert parse_scalar(format_scalar(x), mode) == x


def test_parse_specific_values():
    assert parse_scalar("3/2") == from_rational(mpq(3, 2))
    assert parse_scalar("2*w") == 2 * omega()
    assert parse_scalar("w*q^2", "symbolic") == omega("symbolic") * q_var() ** 2
    assert parse_scalar("q^2*w", "symbolic") == omega("symbolic") * q_var() ** 2
    assert parse_scalar(" 1 + q ", "symbolic") == 1 + q_var()


@pytest.mark.parametrize(
    "bad,mode",
    [
        ("", "numeric"),
        ("q", "numeric"),
        ("1++2", "numeric"),
        ("w*w", "numeric"),
        ("3*", "numeric"),
        ("(1)/(0)", "symbolic"),
        ("(1)/(2)", "numeric"),
        ("1/0", "numeric"),
    ],
)
def test_parse_rejects(bad, mode):
    with pytest.raises((ParseError, DivisionByZero, ValueError, ZeroDivisionError)):
        parse_scalar(bad, mode)


@given(numeric_cycs())
def test_numeric_format_round_trip(x):
    assert parse_scalar(format_scalar(x), "numeric") == x


@settings(max_examples=50, deadline=None)
@given(symbolic_cycs())
def test_symbolic_format_round_trip(x):
    assert parse_scalar(format_scalar(x), "symbolic") == x
