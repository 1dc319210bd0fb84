"""Exact scalar arithmetic over the two ground fields used by the package.

Every scalar is an element of Q(w) ("numeric" mode) or of Q(w)(q)
("symbolic" mode), where w is a primitive cube root of unity subject to
w^2 = -1 - w.  Numeric scalars keep their rational parts as gmpy2.mpq;
symbolic scalars keep them as reduced rational functions in the
indeterminate q with mpq coefficients and a monic denominator.  There are
no floats anywhere and equality is exact.
"""

from __future__ import annotations

from gmpy2 import mpq

__all__ = [
    "Cyc",
    "RatFunc",
    "ParseError",
    "DivisionByZero",
    "RootOfUnityQ",
    "ModeMismatch",
    "zero",
    "one",
    "omega",
    "from_rational",
    "q_var",
    "parse_scalar",
    "format_scalar",
    "kappa_from_q",
    "rho_from_q",
    "qint",
    "qfact",
    "guard_q",
    "cube_roots",
]


class ParseError(ValueError):
    """Malformed scalar literal."""


class DivisionByZero(ZeroDivisionError):
    """Division by an exactly-zero scalar."""


class RootOfUnityQ(ValueError):
    """The deformation parameter q is a disallowed root of unity."""


class ModeMismatch(TypeError):
    """Numeric and symbolic scalars were mixed in one expression."""


_MPQ = type(mpq())


# ---------------------------------------------------------------------------
# dense polynomials over Q, coefficient index == degree
# ---------------------------------------------------------------------------

def _p_trim(cs):
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return tuple(cs[:n])


def _p_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _p_trim(out)


def _p_neg(a):
    return tuple(-c for c in a)


def _p_mul(a, b):
    if not a or not b:
        return ()
    out = [mpq(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _p_trim(out)


def _p_divmod(a, b):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [mpq(0)] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        da = len(a) - 1
        coef = a[-1] / lb
        q[da - db] = coef
        for i in range(len(b)):
            a[da - db + i] -= coef * b[i]
        a = list(_p_trim(a))
    return _p_trim(q), _p_trim(a)


def _p_gcd(a, b):
    # monic Euclidean gcd; exact over Q, so no pseudo-remainders needed
    while b:
        a, b = b, _p_divmod(a, b)[1]
    if not a:
        return ()
    lc = a[-1]
    return tuple(c / lc for c in a)


def _p_monic_pair(num, den):
    lc = den[-1]
    if lc != 1:
        num = tuple(c / lc for c in num)
        den = tuple(c / lc for c in den)
    return num, den


class RatFunc:
    """A reduced fraction of polynomials in q over Q with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(mpq(1),), _reduced=False):
        num = _p_trim([mpq(c) for c in num])
        den = _p_trim([mpq(c) for c in den])
        if not den:
            raise DivisionByZero("zero denominator")
        if not _reduced:
            g = _p_gcd(num, den)
            if len(g) > 1:
                num = _p_divmod(num, g)[0]
                den = _p_divmod(den, g)[0]
        self.num, self.den = _p_monic_pair(num, den)

    @staticmethod
    def const(c) -> "RatFunc":
        return RatFunc((mpq(c),), (mpq(1),), _reduced=True)

    @staticmethod
    def var() -> "RatFunc":
        return RatFunc((mpq(0), mpq(1)), (mpq(1),), _reduced=True)

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, _MPQ)):
            return RatFunc.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        num = _p_add(_p_mul(self.num, o.den), _p_mul(o.num, self.den))
        return RatFunc(num, _p_mul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(_p_neg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(_p_mul(self.num, o.num), _p_mul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise DivisionByZero("division by zero rational function")
        return RatFunc(_p_mul(self.num, o.den), _p_mul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return (RatFunc.const(1) / self) ** (-n)
        out, base = RatFunc.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def as_constant(self):
        """The value as an mpq if this is a constant, else None."""
        if len(self.num) <= 1 and self.den == (mpq(1),):
            return self.num[0] if self.num else mpq(0)
        return None

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"


# ---------------------------------------------------------------------------
# the cyclotomic layer:  re + om*w  with  w^2 = -1 - w
# ---------------------------------------------------------------------------

class Cyc:
    """A scalar re + om*w over either base field.

    The base components are both gmpy2.mpq (numeric mode) or both RatFunc
    (symbolic mode).  Mixing modes raises ModeMismatch rather than silently
    coercing, because a Bqd must live entirely in one field.
    """

    __slots__ = ("re", "om")

    def __init__(self, re, om=None):
        if isinstance(re, int):
            re = mpq(re)
        if om is None:
            om = re * 0
        elif isinstance(om, int):
            om = mpq(om)
        if (isinstance(re, RatFunc)) != (isinstance(om, RatFunc)):
            raise ModeMismatch("components from different base fields")
        self.re = re
        self.om = om

    # -- mode helpers -------------------------------------------------

    @property
    def mode(self) -> str:
        return "symbolic" if isinstance(self.re, RatFunc) else "numeric"

    def _coerce(self, other):
        if isinstance(other, Cyc):
            if isinstance(self.re, RatFunc) != isinstance(other.re, RatFunc):
                raise ModeMismatch("numeric and symbolic scalars mixed")
            return other
        if isinstance(other, (int, _MPQ)):
            if isinstance(self.re, RatFunc):
                return Cyc(RatFunc.const(other))
            return Cyc(mpq(other))
        return None

    # -- ring / field operations ---------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyc(self.re + o.re, self.om + o.om)

    __radd__ = __add__

    def __neg__(self):
        return Cyc(-self.re, -self.om)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyc(self.re - o.re, self.om - o.om)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.re, self.om, o.re, o.om
        if not b and not d:
            return Cyc(a * c, a * 0)
        bd = b * d
        return Cyc(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def inv(self) -> "Cyc":
        a, b = self.re, self.om
        n = a * a - a * b + b * b  # norm of a + b*w; zero iff the scalar is zero
        if not n:
            raise DivisionByZero("inverse of zero scalar")
        return Cyc((a - b) / n, -b / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = self._coerce(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- predicates -----------------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.om)

    def is_one(self) -> bool:
        return (not self.om) and self.re == 1

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except ModeMismatch:
            return False
        if o is None:
            return NotImplemented
        return self.re == o.re and self.om == o.om

    def __hash__(self):
        return hash((self.re, self.om))

    def __repr__(self):
        return f"<{format_scalar(self)}>"

    def __str__(self):
        return format_scalar(self)


# ---------------------------------------------------------------------------
# constructors and constants
# ---------------------------------------------------------------------------

def zero(mode: str = "numeric") -> Cyc:
    return Cyc(RatFunc.const(0)) if mode == "symbolic" else Cyc(mpq(0))


def one(mode: str = "numeric") -> Cyc:
    return Cyc(RatFunc.const(1)) if mode == "symbolic" else Cyc(mpq(1))


def omega(mode: str = "numeric") -> Cyc:
    if mode == "symbolic":
        return Cyc(RatFunc.const(0), RatFunc.const(1))
    return Cyc(mpq(0), mpq(1))


def from_rational(value, mode: str = "numeric") -> Cyc:
    v = mpq(value)
    return Cyc(RatFunc.const(v)) if mode == "symbolic" else Cyc(v)


def q_var() -> Cyc:
    """The indeterminate q as a symbolic scalar."""
    return Cyc(RatFunc.var(), RatFunc.const(0))


def cube_roots(mode: str = "numeric"):
    """The three cube roots of unity: 1, w, -1-w."""
    u, w = one(mode), omega(mode)
    return (u, w, -u - w)


# ---------------------------------------------------------------------------
# derived constants and q-combinatorics
# ---------------------------------------------------------------------------

def kappa_from_q(q: Cyc) -> Cyc:
    return q ** -2 + 1 + q ** 2


def rho_from_q(q: Cyc) -> Cyc:
    return (q + q.inv()) ** -2


def qint(n: int, t: Cyc) -> Cyc:
    """1 + t + ... + t^(n-1); qint(0) is 0."""
    acc = t._coerce(0)
    p = t._coerce(1)
    for _ in range(n):
        acc = acc + p
        p = p * t
    return acc


def qfact(n: int, t: Cyc) -> Cyc:
    acc = t._coerce(1)
    for j in range(1, n + 1):
        acc = acc * qint(j, t)
    return acc


_Q_RESTRICTED = {"II", "II'"}


def guard_q(q: Cyc, case_type: str) -> None:
    """Reject root-of-unity deformation parameters.

    q = 0 is never allowed.  Types II and II' need q^2 of infinite order,
    which over the rationals means q not in {1, -1}; the remaining types
    live at q = 1 or q = -1 and accept any nonzero rational q as well
    (the only rational roots of unity are +-1).  A genuinely symbolic q
    (a nonconstant rational function) is never a root of unity.
    """
    if not q:
        raise RootOfUnityQ("q = 0 is not allowed")
    if q.om:
        return  # not a rational number at all; fine for every type
    if isinstance(q.re, RatFunc):
        c = q.re.as_constant()
        if c is None:
            return
        qv = c
    else:
        qv = q.re
    if case_type in _Q_RESTRICTED and qv in (1, -1):
        raise RootOfUnityQ(f"type {case_type} requires q^2 != 1, got q = {qv}")


# ---------------------------------------------------------------------------
# literals: parsing
# ---------------------------------------------------------------------------

def _parse_rational(text: str, pos: int):
    start = pos
    if pos < len(text) and text[pos] == "-":
        pos += 1
    d0 = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == d0:
        raise ParseError(f"expected digits at position {start} in {text!r}")
    if pos < len(text) and text[pos] == "/":
        pos += 1
        d1 = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == d1:
            raise ParseError(f"expected denominator digits at position {pos} in {text!r}")
    return mpq(text[start:pos]), pos


def _parse_qexp(text: str, pos: int):
    # caller consumed the 'q'
    if pos < len(text) and text[pos] == "^":
        pos += 1
        sign = 1
        if pos < len(text) and text[pos] == "-":
            sign = -1
            pos += 1
        d0 = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == d0:
            raise ParseError(f"expected exponent at position {pos} in {text!r}")
        return sign * int(text[d0:pos]), pos
    return 1, pos


def _parse_term(text: str, pos: int, mode: str):
    """One product of an optional rational, optional w, optional q-power."""
    coef = mpq(1)
    has_w = False
    qdeg = 0
    saw_rat = saw_w = saw_q = False
    while True:
        if pos < len(text) and text[pos].isdigit():
            if saw_rat:
                raise ParseError(f"two rational factors at position {pos} in {text!r}")
            r, pos = _parse_rational(text, pos)
            coef *= r
            saw_rat = True
        elif pos < len(text) and text[pos] == "w":
            if saw_w:
                raise ParseError(f"repeated w at position {pos} in {text!r}")
            has_w = saw_w = True
            pos += 1
        elif pos < len(text) and text[pos] == "q":
            if saw_q:
                raise ParseError(f"repeated q at position {pos} in {text!r}")
            if mode == "numeric":
                raise ParseError("q-powers are not numeric scalars")
            pos += 1
            qdeg, pos = _parse_qexp(text, pos)
            saw_q = True
        else:
            raise ParseError(f"expected a factor at position {pos} in {text!r}")
        if pos < len(text) and text[pos] == "*":
            pos += 1
            continue
        break
    if mode == "numeric":
        base = coef
    else:
        if qdeg >= 0:
            base = RatFunc((mpq(0),) * qdeg + (coef,), (mpq(1),), _reduced=True)
        else:
            base = RatFunc((coef,), (mpq(0),) * (-qdeg) + (mpq(1),), _reduced=True)
    z = base * 0
    term = Cyc(z, base) if has_w else Cyc(base, z)
    return term, pos


def _parse_sum(text: str, pos: int, end: int, mode: str) -> Cyc:
    if pos >= end:
        raise ParseError(f"empty scalar expression in {text!r}")
    total = None
    sign = 1
    if text[pos] == "-":
        sign, pos = -1, pos + 1
    while pos < end:
        term, pos = _parse_term(text, pos, mode)
        term = term if sign > 0 else -term
        total = term if total is None else total + term
        if pos < end:
            if text[pos] == "+":
                sign, pos = 1, pos + 1
            elif text[pos] == "-":
                sign, pos = -1, pos + 1
            else:
                raise ParseError(f"unexpected {text[pos]!r} at position {pos} in {text!r}")
    if total is None:
        raise ParseError(f"empty scalar expression in {text!r}")
    return total


def _match_paren(text: str, pos: int) -> int:
    depth = 0
    for i in range(pos, len(text)):
        if text[i] == "(":
            depth += 1
        elif text[i] == ")":
            depth -= 1
            if depth == 0:
                return i
    raise ParseError(f"unbalanced parentheses in {text!r}")


def parse_scalar(text: str, mode: str = "numeric") -> Cyc:
    """Parse a scalar literal.

    Accepted forms: sums of terms like "3/2", "-q^2", "2*w*q^-1", "w";
    and quotients "(expr)/(expr)" in symbolic mode.
    """
    s = "".join(text.split())
    if not s:
        raise ParseError("empty scalar literal")
    if s[0] == "(":
        close = _match_paren(s, 0)
        if close + 1 < len(s) and s[close + 1] == "/":
            if mode == "numeric":
                raise ParseError("quotient literals are symbolic-only")
            if close + 2 >= len(s) or s[close + 2] != "(" or _match_paren(s, close + 2) != len(s) - 1:
                raise ParseError(f"malformed quotient literal {text!r}")
            num = _parse_sum(s, 1, close, mode)
            den = _parse_sum(s, close + 3, len(s) - 1, mode)
            if not den:
                raise DivisionByZero(f"zero denominator in {text!r}")
            return num / den
        raise ParseError(f"unexpected parenthesis in {text!r}")
    return _parse_sum(s, 0, len(s), mode)


# ---------------------------------------------------------------------------
# literals: canonical printing (format -> parse round-trips exactly)
# ---------------------------------------------------------------------------

def _fmt_q_monomial(coef: mpq, deg: int, with_w: bool) -> str:
    parts = []
    if with_w:
        if coef == 1:
            parts.append("w")
        elif coef == -1:
            parts.append("-w")
        else:
            parts.append(f"{coef}*w")
        if deg == 1:
            parts.append("q")
        elif deg != 0:
            parts.append(f"q^{deg}")
        return "*".join(parts)
    if deg == 0:
        return str(coef)
    if deg == 1:
        head = "q"
    else:
        head = f"q^{deg}"
    if coef == 1:
        return head
    if coef == -1:
        return "-" + head
    return f"{coef}*{head}"


def _fmt_laurent(re_cs: dict, om_cs: dict) -> str:
    terms = []
    for deg in sorted(set(re_cs) | set(om_cs)):
        c = re_cs.get(deg)
        if c:
            terms.append(_fmt_q_monomial(c, deg, False))
        c = om_cs.get(deg)
        if c:
            terms.append(_fmt_q_monomial(c, deg, True))
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


def _fmt_qpoly(cs) -> str:
    return _fmt_laurent({i: c for i, c in enumerate(cs) if c}, {})


def format_scalar(x: Cyc) -> str:
    """Canonical literal for a scalar; parse_scalar inverts it exactly."""
    if x.mode == "numeric":
        return _fmt_laurent({0: x.re} if x.re else {}, {0: x.om} if x.om else {})
    re_f, om_f = x.re, x.om
    den = _p_mul(re_f.den, _p_divmod(om_f.den, _p_gcd(re_f.den, om_f.den))[0])
    re_n = _p_mul(re_f.num, _p_divmod(den, re_f.den)[0])
    om_n = _p_mul(om_f.num, _p_divmod(den, om_f.den)[0])
    # pure q-power denominators print as Laurent sums, anything else as a quotient
    nz = [i for i, c in enumerate(den) if c]
    if len(nz) == 1:
        shift = nz[0]
        lead = den[shift]
        re_cs = {i - shift: c / lead for i, c in enumerate(re_n) if c}
        om_cs = {i - shift: c / lead for i, c in enumerate(om_n) if c}
        return _fmt_laurent(re_cs, om_cs)
    num = _fmt_laurent(
        {i: c for i, c in enumerate(re_n) if c},
        {i: c for i, c in enumerate(om_n) if c},
    )
    return f"({num})/({_fmt_qpoly(den)})"
