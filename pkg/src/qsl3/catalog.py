"""Built-in catalog of data, organized by the Jordan shape of the twist Q.

Four shapes occur: diagonalizable with a single eigenvalue (type I), with
three distinct eigenvalues q^-2, 1, q^2 (type II), and non-diagonalizable
with one Jordan block of size 2 (type III) or 3 (type IV).  A prime on the
type (I', II', III') marks a nontrivial cube root omega.  Each catalog
entry fixes the four pairing tensors of its type and a pair of cubic
tensors (e, E) from which everything else is derived and normalized.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .bqd import Bqd, Check, Report, verify_coh
from .linalg import Mat, TMap, flatten
from .scalars import (
    Cyc,
    ModeMismatch,
    cube_roots,
    from_rational,
    guard_q,
    kappa_from_q,
    omega as omega_root,
    one,
    parse_scalar,
)

__all__ = [
    "QType",
    "CaseDef",
    "CASES",
    "UnknownCase",
    "CaseConditionViolated",
    "NormalizationFailed",
    "DegeneratePairing",
    "NotABqdQ",
    "all_case_ids",
    "non_elliptic_case_ids",
    "base_tensors",
    "cubic_to_tensor",
    "tensor_to_cubic",
    "datum_from_eE",
    "check_case_conditions",
    "instantiate",
    "param_grid",
    "detect_Q_type",
]


class UnknownCase(KeyError):
    """No catalog entry under that name."""


class CaseConditionViolated(ValueError):
    """Parameters land on the excluded locus of the family."""


class NormalizationFailed(ValueError):
    """The derived tensors do not close up into a datum."""


class DegeneratePairing(ValueError):
    """The supplied pairing matrices are not mutually inverse."""


class NotABqdQ(ValueError):
    """The twist of this datum has none of the four admissible shapes."""


@dataclass(frozen=True)
class QType:
    tag: str        # "I", "II", "III", "IV"
    primed: bool

    @property
    def letter(self) -> str:
        return self.tag + ("'" if self.primed else "")


@dataclass(frozen=True)
class CaseDef:
    case_id: str
    qtype: str                # type letter with prime, e.g. "III'"
    params: tuple             # ordered parameter names
    defaults: dict            # name -> literal (str)
    elliptic: bool
    summary: str

    @property
    def primed(self) -> bool:
        return self.qtype.endswith("'")

    @property
    def tag(self) -> str:
        return self.qtype.rstrip("'")


# ---------------------------------------------------------------------------
# pairing tensors per type
# ---------------------------------------------------------------------------

def _base_mats(tag: str, q: Cyc, mode: str):
    """The four pairing matrices c[i][al], C[al][i], d[al][i], D[i][al]."""
    u = one(mode)
    z = from_rational(0, mode)
    half = from_rational("1/2", mode)
    if tag == "I":
        eye = [[u if i == j else z for j in range(3)] for i in range(3)]
        mats = (eye, eye, eye, eye)
    elif tag == "II":
        qi = q.inv()
        lo = [[qi, z, z], [z, u, z], [z, z, q]]
        hi = [[q, z, z], [z, u, z], [z, z, qi]]
        mats = (lo, hi, hi, lo)
    elif tag == "III":
        cm = [[u, z, u], [z, u, z], [z, z, u]]
        Cm = [[u, z, -u], [z, u, z], [z, z, u]]
        dm = [[u, z, z], [z, u, z], [-u, z, u]]
        Dm = [[u, z, z], [z, u, z], [u, z, u]]
        mats = (cm, Cm, dm, Dm)
    elif tag == "IV":
        cm = [[u, u, half], [z, u, u], [z, z, u]]
        Cm = [[u, -u, half], [z, u, -u], [z, z, u]]
        dm = [[u, z, z], [-u, u, z], [half, -u, u]]
        Dm = [[u, z, z], [u, u, z], [half, u, u]]
        mats = (cm, Cm, dm, Dm)
    else:
        raise UnknownCase(f"no pairing family of type {tag!r}")
    return tuple(Mat.from_dense(m, mode) for m in mats)


def base_tensors(qtype: str, q: Cyc, mode: str = "numeric"):
    """The pairing tensors of a type, as maps keyed "c", "C", "d", "D"."""
    cm, Cm, dm, Dm = _base_mats(qtype.rstrip("'"), q, mode)
    return {
        "c": _mk_pair_in(cm, ("V", "W"), mode),
        "C": _mk_pair_out(Cm, ("W", "V"), mode),
        "d": _mk_pair_in(dm, ("W", "V"), mode),
        "D": _mk_pair_out(Dm, ("V", "W"), mode),
    }


def _mk_pair_in(m3: Mat, cod, mode) -> TMap:
    mat = Mat(9, 1, mode)
    for r, row in enumerate(m3.rows):
        for c, v in row.items():
            mat.rows[flatten((r, c))][0] = v
    return TMap((), cod, mat)


def _mk_pair_out(m3: Mat, dom, mode) -> TMap:
    mat = Mat(1, 9, mode)
    for r, row in enumerate(m3.rows):
        for c, v in row.items():
            mat.rows[0][flatten((r, c))] = v
    return TMap(dom, (), mat)


# ---------------------------------------------------------------------------
# cubic-tensor builders
# ---------------------------------------------------------------------------

def _add(t: dict, idx, v):
    if not v:
        return
    cur = t.get(idx)
    nv = cur + v if cur is not None else v
    if nv:
        t[idx] = nv
    elif cur is not None:
        del t[idx]


_EVEN = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
_ODD = ((0, 2, 1), (1, 0, 2), (2, 1, 0))


def _alt(t: dict, coeff: Cyc):
    """Add coeff times the alternating tensor."""
    for p in _EVEN:
        _add(t, p, coeff)
    for p in _ODD:
        _add(t, p, -coeff)


def cubic_to_tensor(coeffs: dict, mode: str) -> dict:
    """Symmetric tensor of a cubic form.

    coeffs maps sorted index triples (0-based) to the coefficient of the
    corresponding monomial; the tensor spreads each coefficient evenly
    over the distinct permutations of its triple.
    """
    t = {}
    for mono, coeff in coeffs.items():
        perms = sorted(set(permutations(mono)))
        share = coeff / from_rational(len(perms), mode)
        for p in perms:
            _add(t, p, share)
    return t


def tensor_to_cubic(t: dict, mode: str) -> dict:
    """Coefficients of the cubic form of a (symmetric) tensor."""
    out = {}
    for idx, v in t.items():
        mono = tuple(sorted(idx))
        _add(out, mono, v)
    return out


def _z_low(t, idx, coeff, w):
    i, j, k = idx
    _add(t, (i, j, k), coeff)
    _add(t, (j, k, i), coeff * w)
    _add(t, (k, i, j), coeff * w * w)


def _z_up(t, idx, coeff, w):
    i, j, k = idx
    _add(t, (i, j, k), coeff)
    _add(t, (k, i, j), coeff * w)
    _add(t, (j, k, i), coeff * w * w)


# builders: (params, q, w, mode) -> (e_tensor, E_tensor); indices 0-based

def _build_type_I(lam, s_coeffs, Lam, S_coeffs, mode):
    e = {}
    _alt(e, lam)
    for idx, v in cubic_to_tensor(s_coeffs, mode).items():
        _add(e, idx, v)
    E = {}
    _alt(E, -Lam)
    for idx, v in cubic_to_tensor(S_coeffs, mode).items():
        _add(E, idx, v)
    return e, E


def _bld_Ia(p, q, w, mode):
    u = one(mode)
    return _build_type_I(u, {}, u, {}, mode)


def _bld_Ib(p, q, w, mode):
    u = one(mode)
    return _build_type_I(u, {(0, 0, 0): u}, u, {}, mode)


def _bld_Ic(p, q, w, mode):
    u = one(mode)
    return _build_type_I(u, {(0, 0, 0): u}, u, {(2, 2, 2): u}, mode)


def _bld_Id(p, q, w, mode):
    # the opposite cubic carries coefficient -1: with +1 the iterate laws
    # miss by exactly (1+1)^2/18, and -1 is the unique closing value
    u = one(mode)
    return _build_type_I(u, {(0, 0, 1): u}, u, {(1, 2, 2): -u}, mode)


def _bld_Ie(p, q, w, mode):
    u = one(mode)
    al = p["alpha"]
    return _build_type_I(u, {(0, 1, 2): al}, u, {(0, 1, 2): al}, mode)


def _bld_Iestar(p, q, w, mode):
    z = from_rational(0, mode)
    u = one(mode)
    return _build_type_I(z, {(0, 1, 2): u}, z, {(0, 1, 2): u}, mode)


def _bld_If(p, q, w, mode):
    u = one(mode)
    c6 = (omega_root(mode) * 2 + 1) * 6  # six times a square root of -3
    s = {(0, 0, 0): c6, (0, 1, 2): c6}
    return _build_type_I(u, s, u, {(0, 1, 2): c6}, mode)


def _bld_Ig(p, q, w, mode):
    u = one(mode)
    c6 = (omega_root(mode) * 2 + 1) * 6
    s = {(0, 0, 0): c6, (0, 1, 2): c6}
    S = {(2, 2, 2): c6, (0, 1, 2): c6}
    return _build_type_I(u, s, u, S, mode)


def _bld_Ih(p, q, w, mode):
    e, E = {}, {}
    for idx in _EVEN:
        _add(e, idx, p["alpha"])
        _add(E, idx, p["alpha_p"])
    for idx in _ODD:
        _add(e, idx, p["beta"])
        _add(E, idx, p["beta_p"])
    for i in range(3):
        _add(e, (i, i, i), p["gamma"])
        _add(E, (i, i, i), p["gamma_p"])
    return e, E


def _iprime_pair(tv, tv2, u3, u3p, w, mode):
    """Both cubics of a primed type-I entry from its few nonzero slots."""
    u = one(mode)
    e = {}
    _z_low(e, (0, 1, 2), u, w)
    _z_low(e, (1, 0, 2), u, w)
    _z_low(e, (1, 2, 0), tv, w)
    _z_low(e, (2, 1, 0), tv, w)
    _z_low(e, (0, 0, 1), u3, w)
    E = {}
    _z_up(E, (0, 1, 2), u, w)
    _z_up(E, (1, 0, 2), u, w)
    _z_up(E, (1, 2, 0), tv2, w)
    _z_up(E, (2, 1, 0), tv2, w)
    _z_up(E, (2, 2, 1), u3p, w)
    return e, E


def _bld_Iprime_a(p, q, w, mode):
    z = from_rational(0, mode)
    return _iprime_pair(p["t"], p["t"], z, z, w, mode)


def _bld_Iprime_b(p, q, w, mode):
    u = one(mode)
    return _iprime_pair(-u, -u, u, -u, w, mode)


def _ii_tensor(al, be, ga, q2):
    t = {}
    _add(t, (0, 1, 2), al)
    _add(t, (1, 2, 0), al * q2)
    _add(t, (2, 0, 1), al * q2)
    _add(t, (0, 2, 1), -be)
    _add(t, (1, 0, 2), -be)
    _add(t, (2, 1, 0), -be * q2)
    _add(t, (1, 1, 1), ga)
    return t


def _bld_IIa(p, q, w, mode):
    u = one(mode)
    z = from_rational(0, mode)
    q2 = q * q
    return (_ii_tensor(u, p["beta"], z, q2),
            _ii_tensor(u, q2 / p["beta"], z, q2))


def _bld_IIb(p, q, w, mode):
    pp = p["p"]
    z = from_rational(0, mode)
    q2 = q * q
    return (_ii_tensor(pp ** -2, pp ** 2, q2 - 1, q2),
            _ii_tensor(pp.inv(), pp, z, q2))


def _bld_IIprime_a(p, q, w, mode):
    u = one(mode)
    be = p["beta"]
    bep = q * q / be
    q2 = q * q
    e = {}
    _add(e, (0, 1, 2), u)
    _add(e, (1, 2, 0), q2 * w)
    _add(e, (2, 0, 1), q2 * w * w)
    _add(e, (0, 2, 1), -be)
    _add(e, (2, 1, 0), -be * q2 * w)
    _add(e, (1, 0, 2), -be * w * w)
    E = {}
    _add(E, (0, 1, 2), u)
    _add(E, (2, 0, 1), q2 * w)
    _add(E, (1, 2, 0), q2 * w * w)
    _add(E, (0, 2, 1), -bep)
    _add(E, (1, 0, 2), -bep * w)
    _add(E, (2, 1, 0), -bep * q2 * w * w)
    return e, E


def _iii_e(al, be, ga, de, ep, mode):
    t = {}
    _alt(t, al)
    _add(t, (0, 1, 0), al * (-2))
    _add(t, (0, 0, 0), be)
    for idx in ((0, 0, 1), (0, 1, 0), (1, 0, 0)):
        _add(t, idx, ga)
    for idx in ((0, 1, 1), (1, 0, 1), (1, 1, 0)):
        _add(t, idx, de)
    _add(t, (1, 1, 1), ep)
    return t


def _iii_E(al, be, ga, de, ep, mode):
    t = {}
    _alt(t, -al)
    _add(t, (2, 1, 2), al * (-2))
    _add(t, (2, 2, 2), be)
    for idx in ((2, 2, 1), (2, 1, 2), (1, 2, 2)):
        _add(t, idx, ga)
    for idx in ((2, 1, 1), (1, 2, 1), (1, 1, 2)):
        _add(t, idx, de)
    _add(t, (1, 1, 1), ep)
    return t


def _bld_IIIa(p, q, w, mode):
    u, z = one(mode), from_rational(0, mode)
    ga = p["gamma"]
    return (_iii_e(u, z, ga, z, z, mode), _iii_E(u, z, u - ga, z, z, mode))


def _bld_IIIastar(p, q, w, mode):
    u, z = one(mode), from_rational(0, mode)
    return (_iii_e(u, u, from_rational("2/3", mode), z, z, mode),
            _iii_E(u, z, from_rational("1/3", mode), z, z, mode))


def _bld_IIIb(p, q, w, mode):
    u, z = one(mode), from_rational(0, mode)
    ga = p["gamma"]
    return (_iii_e(u, z, ga, z, z, mode), _iii_E(u, z, u + u - ga, z, z, mode))


def _bld_IIIbstar(p, q, w, mode):
    u, z = one(mode), from_rational(0, mode)
    return (_iii_e(u, u, from_rational("2/3", mode), z, z, mode),
            _iii_E(u, z, from_rational("4/3", mode), z, z, mode))


def _bld_IIIc(p, q, w, mode):
    u, z = one(mode), from_rational(0, mode)
    return (_iii_e(u, z, from_rational("1/3", mode), z, u, mode),
            _iii_E(u, p["beta_p"], from_rational("2/3", mode), z, z, mode))


def _bld_IIIcstar(p, q, w, mode):
    u, z = one(mode), from_rational(0, mode)
    return (_iii_e(u, z, u, z, u, mode), _iii_E(u, z, u, z, z, mode))


def _iiiprime_e(al, be, ga, de, w, mode):
    t = {}
    _z_low(t, (0, 1, 2), al, w)
    _z_low(t, (2, 1, 0), -al, w)
    _add(t, (0, 1, 0), al * (-2))
    _add(t, (0, 0, 0), be)
    _z_low(t, (0, 0, 2), (w - 1) / 2 * be, w)
    _z_low(t, (0, 0, 1), ga, w)
    _z_low(t, (0, 1, 1), de, w)
    return t


def _iiiprime_E(al, be, ga, de, w, mode):
    t = {}
    _z_up(t, (2, 1, 0), al, w)
    _z_up(t, (0, 1, 2), -al, w)
    _add(t, (2, 1, 2), al * (-2))
    _add(t, (2, 2, 2), be)
    _z_up(t, (2, 2, 0), (w * w - 1) / 2 * be, w)
    _z_up(t, (2, 2, 1), ga, w)
    _z_up(t, (2, 1, 1), de, w)
    return t


def _bld_IIIprime(gap_shift):
    def build(p, q, w, mode):
        u = one(mode)
        z = from_rational(0, mode)
        ga = p["gamma"]
        gap = w * gap_shift - w * w * ga
        return (_iiiprime_e(u, z, ga, z, w, mode),
                _iiiprime_E(u, z, gap, z, w, mode))
    return build


def _iv_e(al, be, de, mode):
    t = {}
    _alt(t, al)
    two = from_rational(2, mode)
    _add(t, (0, 0, 1), two * (al + de))
    _add(t, (1, 0, 0), -two * (al + de))
    _add(t, (0, 0, 2), -two * (al + de))
    _add(t, (2, 0, 0), -two * (al + de))
    _add(t, (1, 0, 1), two * al)
    _add(t, (0, 2, 0), -two * de)
    _add(t, (0, 0, 0), be)
    for idx in ((0, 1, 1), (1, 0, 1), (1, 1, 0)):
        _add(t, idx, de)
    return t


def _iv_E(al, be, de, mode):
    t = {}
    _alt(t, -al)
    two = from_rational(2, mode)
    _add(t, (2, 2, 1), two * (al + de))
    _add(t, (1, 2, 2), -two * (al + de))
    _add(t, (2, 2, 0), -two * (al + de))
    _add(t, (0, 2, 2), -two * (al + de))
    _add(t, (1, 2, 1), two * al)
    _add(t, (2, 0, 2), -two * de)
    _add(t, (2, 2, 2), be)
    for idx in ((2, 1, 1), (1, 2, 1), (1, 1, 2)):
        _add(t, idx, de)
    return t


def _bld_IVa(p, q, w, mode):
    u = one(mode)
    z = from_rational(0, mode)
    return _iv_e(u, -u, z, mode), _iv_E(u, -u, z, mode)


def _bld_IVb(p, q, w, mode):
    u = one(mode)
    z = from_rational(0, mode)
    third = from_rational("-1/3", mode)
    return (_iv_e(u, z, third, mode),
            _iv_E(u, from_rational("-8/27", mode), from_rational("-2/3", mode), mode))


# ---------------------------------------------------------------------------
# admissibility conditions
# ---------------------------------------------------------------------------

def _nz(name: str, v: Cyc) -> Check:
    return Check(name, bool(v), "" if v else "must be nonzero")


def _vanish(name: str, v: Cyc) -> Check:
    return Check(name, not v, "" if not v else f"must vanish, got {v}")


def _no_conditions(p, mode):
    return []


def _cond_Ie(p, mode):
    u = one(mode)
    al = p["alpha"]
    ok_unit = al != u and al != -u
    return [
        _nz("cond/alpha-nonzero", al),
        Check("cond/alpha-not-unit", ok_unit, "" if ok_unit else "alpha = 1 or -1 is excluded"),
    ]


def _cond_Ih(p, mode):
    al, be, ga = p["alpha"], p["beta"], p["gamma"]
    alp, bep, gap = p["alpha_p"], p["beta_p"], p["gamma_p"]
    A, B, G = al * alp, be * bep, ga * gap
    return [
        _nz("cond/gamma-nonzero", ga),
        _nz("cond/gamma_p-nonzero", gap),
        _nz("cond/cube-sum", ga ** 3 + (al + be) ** 3),
        _nz("cond/cube-sum_p", gap ** 3 + (alp + bep) ** 3),
        _nz("cond/alpha-beta-distinct", al - be),
        _nz("cond/alpha_p-beta_p-distinct", alp - bep),
        _nz("cond/pair-sum", A + B + G),
        _vanish("cond/compat-diag", A * A + B * B + G * G - (A * B + A * G + B * G) * 2),
        _vanish("cond/compat-right", al * al * bep * gap + be * be * alp * gap + ga * ga * alp * bep),
        _vanish("cond/compat-left", alp * alp * be * ga + bep * bep * al * ga + gap * gap * al * be),
    ]


def _cond_Iprime_a(p, mode):
    t = p["t"]
    return [_nz("cond/t2-t+1", t * t - t + 1)]


def _cond_beta_nonzero(p, mode):
    return [_nz("cond/beta-nonzero", p["beta"])]


# ---------------------------------------------------------------------------
# the registry
# ---------------------------------------------------------------------------

_IH_DEFAULTS = {
    "alpha": "0", "beta": "1", "gamma": "1",
    "alpha_p": "0", "beta_p": "1", "gamma_p": "1",
}

_CASE_LIST = (
    CaseDef("I.a", "I", (), {}, False, "unit pairing, purely alternating cubics"),
    CaseDef("I.b", "I", (), {}, False, "alternating plus x1^3 on one side"),
    CaseDef("I.c", "I", (), {}, False, "alternating plus x1^3 and opposite X3^3"),
    CaseDef("I.d", "I", (), {}, False, "alternating plus x1^2 x2 and opposite X2 X3^2"),
    CaseDef("I.e", "I", ("alpha",), {"alpha": "2"}, False,
            "alternating plus alpha x1 x2 x3 on both sides"),
    CaseDef("I.e*", "I", (), {}, False, "pure x1 x2 x3, no alternating part"),
    CaseDef("I.f", "I", (), {}, False, "alternating plus a nodal cubic, smooth opposite"),
    CaseDef("I.g", "I", (), {}, False, "alternating plus nodal cubics on both sides"),
    CaseDef("I.h", "I",
            ("alpha", "beta", "gamma", "alpha_p", "beta_p", "gamma_p"),
            _IH_DEFAULTS, True,
            "triangle-invariant six-parameter family; generically elliptic"),
    CaseDef("I'.a", "I'", ("t",), {"t": "3"}, False,
            "twisted unit pairing, diagonal one-parameter cubics"),
    CaseDef("I'.b", "I'", (), {}, False, "twisted unit pairing, off-diagonal cubics"),
    CaseDef("II.a", "II", ("q", "beta"), {"q": "2", "beta": "3"}, False,
            "diagonal pairing, three-term cubics; the standard deformation"),
    CaseDef("II.b", "II", ("p",), {"p": "2"}, False,
            "diagonal pairing with a cube parameter, q = p^3"),
    CaseDef("II'.a", "II'", ("q", "beta"), {"q": "2", "beta": "3"}, False,
            "diagonal pairing with twisted cubic weights"),
    CaseDef("III.a", "III", ("gamma",), {"gamma": "5"}, False,
            "one Jordan block of size 2; gamma plus opposite 1-gamma"),
    CaseDef("III.a*", "III", (), {}, False, "size-2 block, x1^3 term, weights 2/3 and 1/3"),
    CaseDef("III.b", "III", ("gamma",), {"gamma": "5"}, False,
            "size-2 block; gamma plus opposite 2-gamma"),
    CaseDef("III.b*", "III", (), {}, False, "size-2 block, x1^3 term, weights 2/3 and 4/3"),
    CaseDef("III.c", "III", ("beta_p",), {"beta_p": "5"}, False,
            "size-2 block with an x2^3 term and a free opposite weight"),
    CaseDef("III.c*", "III", (), {}, False, "size-2 block with x2^3, weights 1 and 1"),
    CaseDef("III'.a", "III'", ("gamma",), {"gamma": "5"}, False,
            "twisted size-2 block; opposite weight w - w^2 gamma"),
    CaseDef("III'.b", "III'", ("gamma",), {"gamma": "5"}, False,
            "twisted size-2 block; opposite weight 2w - w^2 gamma"),
    CaseDef("IV.a", "IV", (), {}, False, "full Jordan block, x1^3 coefficient -1"),
    CaseDef("IV.b", "IV", (), {}, False, "full Jordan block, mixed lower-order terms"),
)

CASES = {cd.case_id: cd for cd in _CASE_LIST}

_BUILDERS = {
    "I.a": _bld_Ia, "I.b": _bld_Ib, "I.c": _bld_Ic, "I.d": _bld_Id,
    "I.e": _bld_Ie, "I.e*": _bld_Iestar, "I.f": _bld_If, "I.g": _bld_Ig,
    "I.h": _bld_Ih,
    "I'.a": _bld_Iprime_a, "I'.b": _bld_Iprime_b,
    "II.a": _bld_IIa, "II.b": _bld_IIb, "II'.a": _bld_IIprime_a,
    "III.a": _bld_IIIa, "III.a*": _bld_IIIastar,
    "III.b": _bld_IIIb, "III.b*": _bld_IIIbstar,
    "III.c": _bld_IIIc, "III.c*": _bld_IIIcstar,
    "III'.a": _bld_IIIprime(1), "III'.b": _bld_IIIprime(2),
    "IV.a": _bld_IVa, "IV.b": _bld_IVb,
}

_CONDITIONS = {
    "I.e": _cond_Ie,
    "I.h": _cond_Ih,
    "I'.a": _cond_Iprime_a,
    "II.a": _cond_beta_nonzero,
    "II'.a": _cond_beta_nonzero,
}

_GRIDS = {
    "I.e": ({"alpha": "2"}, {"alpha": "3"}, {"alpha": "-2"}),
    "I.h": tuple(
        {"alpha": "0", "beta": s, "gamma": s, "alpha_p": "0", "beta_p": s, "gamma_p": s}
        for s in ("1", "2", "3")
    ),
    "I'.a": ({"t": "3"}, {"t": "0"}, {"t": "7"}),
    "II.a": ({"q": "2", "beta": "3"}, {"q": "3", "beta": "-1"}, {"q": "1/2", "beta": "5"}),
    "II.b": ({"p": "2"}, {"p": "3"}, {"p": "-2"}),
    "II'.a": ({"q": "2", "beta": "3"}, {"q": "3", "beta": "-1"}, {"q": "1/2", "beta": "5"}),
    "III.a": ({"gamma": "5"}, {"gamma": "0"}, {"gamma": "-3"}),
    "III.b": ({"gamma": "5"}, {"gamma": "0"}, {"gamma": "-3"}),
    "III.c": ({"beta_p": "5"}, {"beta_p": "0"}, {"beta_p": "-3"}),
    "III'.a": ({"gamma": "5"}, {"gamma": "0"}, {"gamma": "-3"}),
    "III'.b": ({"gamma": "5"}, {"gamma": "0"}, {"gamma": "-3"}),
}


def all_case_ids():
    return list(CASES)


def non_elliptic_case_ids():
    return [cid for cid, cd in CASES.items() if not cd.elliptic]


def param_grid(case_id: str):
    """Parameter dictionaries covering each family (>= 3 points when free)."""
    cd = _get_case(case_id)
    return [dict(g) for g in _GRIDS.get(case_id, (dict(cd.defaults),))]


def _get_case(case_id: str) -> CaseDef:
    try:
        return CASES[case_id]
    except KeyError:
        raise UnknownCase(case_id) from None


def _coerce_param(value, mode: str) -> Cyc:
    if isinstance(value, Cyc):
        if value.mode != mode:
            raise ModeMismatch(f"parameter is {value.mode}, datum is {mode}")
        return value
    if isinstance(value, str):
        return parse_scalar(value, mode)
    return from_rational(value, mode)


def _resolve_params(cd: CaseDef, params, mode: str) -> dict:
    given = dict(params or {})
    unknown = sorted(set(given) - set(cd.params))
    if unknown:
        raise ValueError(f"{cd.case_id} has no parameter named {', '.join(unknown)}")
    out = {}
    for name in cd.params:
        raw = given.get(name, cd.defaults.get(name))
        if raw is None:
            raise ValueError(f"{cd.case_id}: parameter {name} is required")
        out[name] = _coerce_param(raw, mode)
    return out


def _case_q(cd: CaseDef, p: dict, mode: str) -> Cyc:
    if "q" in cd.params:
        return p["q"]
    if "p" in cd.params:
        return p["p"] ** 3
    return one(mode)


def check_case_conditions(case_id: str, params=None, mode: str = "numeric") -> Report:
    """Evaluate a family's excluded-locus conditions at a parameter point."""
    cd = _get_case(case_id)
    p = _resolve_params(cd, params, mode)
    return Report(f"conditions[{case_id}]", _CONDITIONS.get(case_id, _no_conditions)(p, mode))


# ---------------------------------------------------------------------------
# building a datum from cubic tensors
# ---------------------------------------------------------------------------

def _mk_e(t: dict, mode: str) -> TMap:
    mat = Mat(27, 1, mode)
    for idx, v in t.items():
        if v:
            mat.rows[flatten(idx)][0] = v
    return TMap((), ("V", "V", "V"), mat)


def _mk_E(t: dict, mode: str) -> TMap:
    mat = Mat(1, 27, mode)
    for idx, v in t.items():
        if v:
            mat.rows[0][flatten(idx)] = v
    return TMap(("V", "V", "V"), (), mat)


def datum_from_eE(e_tensor, E_tensor, pairing, q, omega_hint=None, name="") -> Bqd:
    """Assemble a datum from two cubic tensors and a pairing family.

    The decomposition tensors are contractions of the cubics against the
    pairing, the unit law is normalized to exactly 1, and the cube root
    is chosen so the cyclic associativity law closes.  The result is
    re-verified in full; a datum that cannot close raises.
    """
    mode = q.mode
    cT, CT, dT, DT = pairing["c"], pairing["C"], pairing["d"], pairing["D"]
    idV = TMap.identity(("V",), mode)
    idW = TMap.identity(("W",), mode)
    if idV.tensor(CT) * cT.tensor(idV) != idV or DT.tensor(idV) * idV.tensor(dT) != idV:
        raise DegeneratePairing("pairing tensors are not mutually inverse")
    e_map = _mk_e(e_tensor, mode)
    E_map = _mk_E(E_tensor, mode)
    a = CT.tensor(idV).tensor(idV) * idW.tensor(e_map)
    A = E_map.tensor(idW) * idV.tensor(idV).tensor(cT)
    nu = (A * a).as_scalar_identity()
    if nu is None or not nu:
        raise NormalizationFailed("decomposition unit is not an invertible scalar")
    A = A.scale(nu.inv())
    B = idV.tensor(DT) * a.tensor(idW)
    b = A.tensor(idW) * idV.tensor(cT)
    lhs = CT * A.tensor(idV)
    rhs = DT * idV.tensor(A)
    roots = list(cube_roots(mode))
    if omega_hint is not None:
        roots.sort(key=lambda r: r != omega_hint)
    for r in roots:
        if lhs == rhs.scale(r):
            w = r
            break
    else:
        raise NormalizationFailed("no cube root of unity closes the cyclic law")
    L = Bqd(q, w, A=A, a=a, B=B, b=b, C=CT, c=cT, D=DT, d=dT, name=name)
    rep = verify_coh(L)
    if not rep.ok:
        bad = rep.failures()[0]
        raise NormalizationFailed(f"derived datum fails {bad.law}: {bad.detail}")
    return L


def instantiate(case_id: str, params=None, mode: str = "numeric") -> Bqd:
    """Build, normalize and verify one catalog entry."""
    cd = _get_case(case_id)
    p = _resolve_params(cd, params, mode)
    q = _case_q(cd, p, mode)
    guard_q(q, cd.qtype)
    rep = check_case_conditions(case_id, params, mode)
    if not rep.ok:
        names = ", ".join(c.law for c in rep.failures())
        raise CaseConditionViolated(f"{case_id}: {names}")
    w_nom = omega_root(mode) if cd.primed else one(mode)
    e_t, E_t = _BUILDERS[case_id](p, q, w_nom, mode)
    pairing = base_tensors(cd.qtype, q, mode)
    return datum_from_eE(e_t, E_t, pairing, q, omega_hint=w_nom, name=case_id)


# ---------------------------------------------------------------------------
# twist-shape detection
# ---------------------------------------------------------------------------

def _det3(m: Mat) -> Cyc:
    e = m.entry
    return (
        e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
        - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
        + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
    )


def _sym2(m: Mat) -> Cyc:
    e = m.entry
    return (
        e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)
        + e(0, 0) * e(2, 2) - e(0, 2) * e(2, 0)
        + e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0)
    )


def detect_Q_type(L: Bqd) -> QType:
    """Classify the Jordan shape of the twist of a datum.

    The four admissible shapes: identity (I), diagonalizable with
    eigenvalues q^-2, 1, q^2 (II), unipotent with a single size-2 block
    (III) or a size-3 block (IV).  Anything else raises NotABqdQ.
    """
    Q = L.derived().Q.mat
    primed = L.omega != one(L.mode)
    N = Q - Mat.identity(3, L.mode)
    if N.is_zero():
        return QType("I", primed)
    N2 = N * N
    if N2.is_zero():
        return QType("III", primed)
    if (N2 * N).is_zero():
        return QType("IV", primed)
    kap = kappa_from_q(L.q)
    if Q.trace() == kap and _sym2(Q) == kap and _det3(Q) == one(L.mode):
        return QType("II", primed)
    raise NotABqdQ(f"twist of {L.name or 'datum'} has no admissible shape")
