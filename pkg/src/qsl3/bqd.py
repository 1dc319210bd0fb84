"""The basic datum: eight structure tensors with exact verification.

A datum consists of two 3-dimensional spaces V, W and maps

    A: V(x)V -> W      a: W -> V(x)V
    B: W(x)W -> V      b: V -> W(x)W
    C: W(x)V -> 1      c: 1 -> V(x)W
    D: V(x)W -> 1      d: 1 -> W(x)V

together with a scalar q and a cube root of unity omega, subject to a
coherence system of thirteen exact identities (verify_coh) and its mirror
under V<->W (verify_postcoh).  Verifiers return structured reports rather
than raising, so batch checking over many data stays ergonomic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import Mat, TMap, flatten, unflatten
from .scalars import Cyc, kappa_from_q, one, rho_from_q, zero

__all__ = [
    "Bqd",
    "DerivedMaps",
    "Check",
    "Report",
    "Relation",
    "PresentationDoc",
    "SingularMatrix",
    "ZeroScale",
    "AxiomViolation",
    "make_derived",
    "verify_coh",
    "verify_postcoh",
    "verify_decomp_ranks",
    "verify_QE_Ee",
    "verify_square_twist",
    "verify_all",
    "apply_base_change",
    "apply_rescale",
    "dynkin_flip",
    "export_presentation",
]


class SingularMatrix(ValueError):
    """A base-change matrix is not invertible."""


class ZeroScale(ValueError):
    """A rescaling parameter is zero."""


class AxiomViolation(ValueError):
    """A transform produced a datum that fails its own axioms (a bug)."""


_SIGS = {
    "A": (("V", "V"), ("W",)),
    "a": (("W",), ("V", "V")),
    "B": (("W", "W"), ("V",)),
    "b": (("V",), ("W", "W")),
    "C": (("W", "V"), ()),
    "c": ((), ("V", "W")),
    "D": (("V", "W"), ()),
    "d": ((), ("W", "V")),
}

TENSOR_NAMES = tuple(_SIGS)


class Bqd:
    """An immutable datum; verify with the module-level verifiers."""

    __slots__ = ("name", "q", "omega", "A", "a", "B", "b", "C", "c", "D", "d", "_derived")

    def __init__(self, q, omega, A, a, B, b, C, c, D, d, name=""):
        self.name = name
        self.q = q
        self.omega = omega
        for tname, tmap in zip(TENSOR_NAMES, (A, a, B, b, C, c, D, d)):
            want_dom, want_cod = _SIGS[tname]
            if tmap.dom != want_dom or tmap.cod != want_cod:
                raise ValueError(
                    f"tensor {tname} has signature {tmap.cod}<-{tmap.dom}, "
                    f"expected {want_cod}<-{want_dom}"
                )
        self.A, self.a, self.B, self.b = A, a, B, b
        self.C, self.c, self.D, self.d = C, c, D, d
        if not q:
            raise ValueError("q must be nonzero")
        if omega ** 3 != one(omega.mode):
            raise ValueError("omega must be a cube root of unity")
        self._derived = None

    @property
    def mode(self):
        return self.q.mode

    def tensors(self):
        return {n: getattr(self, n) for n in TENSOR_NAMES}

    def derived(self) -> "DerivedMaps":
        if self._derived is None:
            self._derived = make_derived(self)
        return self._derived

    def __eq__(self, other):
        if not isinstance(other, Bqd):
            return NotImplemented
        return (
            self.q == other.q
            and self.omega == other.omega
            and all(getattr(self, n) == getattr(other, n) for n in TENSOR_NAMES)
        )

    def __repr__(self):
        label = self.name or "datum"
        return f"Bqd({label}, mode={self.mode}, q={self.q}, omega={self.omega})"


@dataclass
class DerivedMaps:
    F: TMap      # V(x)W -> W(x)V
    G: TMap      # W(x)V -> V(x)W
    R: TMap      # V(x)V -> V(x)V
    Rstar: TMap  # W(x)W -> W(x)W
    Q: TMap      # V -> V
    Qinv: TMap   # V -> V
    QW: TMap     # W -> W, the W-side twist
    E: TMap      # V(x)V(x)V -> 1
    e: TMap      # 1 -> V(x)V(x)V
    kappa: Cyc
    rho: Cyc


@dataclass
class Check:
    law: str
    ok: bool
    detail: str = ""


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def merge(self, other: "Report") -> "Report":
        return Report(f"{self.title}+{other.title}", self.checks + other.checks)

    def summary(self) -> str:
        n_ok = sum(1 for c in self.checks if c.ok)
        return f"{self.title}: {n_ok}/{len(self.checks)} passed"


def _first_diff(lhs: TMap, rhs: TMap) -> str:
    for r in range(lhs.mat.nrows):
        cols = set(lhs.mat.rows[r]) | set(rhs.mat.rows[r])
        for c in sorted(cols):
            lv, rv = lhs.mat.entry(r, c), rhs.mat.entry(r, c)
            if lv != rv:
                cod = unflatten(r, len(lhs.cod))
                dom = unflatten(c, len(lhs.dom))
                return f"at out{cod} in{dom}: {lv} != {rv}"
    return ""


def _check_eq(law: str, lhs: TMap, rhs: TMap) -> Check:
    if lhs == rhs:
        return Check(law, True)
    return Check(law, False, _first_diff(lhs, rhs))


def _check_scalar(law: str, got: TMap, want: Cyc) -> Check:
    s = got.as_scalar_identity()
    if s == want:
        return Check(law, True)
    return Check(law, False, f"got {s}, want {want}")


# ---------------------------------------------------------------------------
# derived maps
# ---------------------------------------------------------------------------

def _pair_matrix(L: Bqd, name: str) -> Mat:
    """One of the four pairing tensors as a plain 3x3 matrix.

    Rows/columns follow the tensor's own two slots in order, e.g. the
    "c" matrix has entry [i][alpha] = coefficient of x_i (x) y_alpha.
    """
    t = getattr(L, name)
    m = Mat(3, 3, L.mode)
    if not t.dom:  # c or d: a column vector over a pair of slots
        for r in range(t.mat.nrows):
            v = t.mat.rows[r].get(0)
            if v:
                i, j = unflatten(r, 2)
                m.rows[i][j] = v
    else:  # C or D: a row vector
        for cflat, v in t.mat.rows[0].items():
            i, j = unflatten(cflat, 2)
            m.rows[i][j] = v
    return m


def make_derived(L: Bqd) -> DerivedMaps:
    idV = TMap.identity(("V",), L.mode)
    idW = TMap.identity(("W",), L.mode)
    F = L.A.tensor(idV) * idV.tensor(L.a)
    G = idV.tensor(L.A) * L.a.tensor(idV)
    qp = L.q
    coef = qp + qp.inv()
    R = TMap.identity(("V", "V"), L.mode).scale(qp) - (L.a * L.A).scale(coef)
    Rstar = TMap.identity(("W", "W"), L.mode).scale(qp.inv()) - (L.b * L.B).scale(coef)

    cm = _pair_matrix(L, "c")  # [i][alpha]
    Cm = _pair_matrix(L, "C")  # [alpha][i]
    dm = _pair_matrix(L, "d")  # [alpha][i]
    Dm = _pair_matrix(L, "D")  # [i][alpha]
    Q = TMap(("V",), ("V",), cm * Dm.transpose())
    Qinv = TMap(("V",), ("V",), dm.transpose() * Cm)
    QW = TMap(("W",), ("W",), dm * Cm.transpose())

    E = L.C * L.A.tensor(idV)
    e = idV.tensor(L.a) * L.c
    return DerivedMaps(
        F=F, G=G, R=R, Rstar=Rstar, Q=Q, Qinv=Qinv, QW=QW, E=E, e=e,
        kappa=kappa_from_q(qp), rho=rho_from_q(qp),
    )


# ---------------------------------------------------------------------------
# verifiers
# ---------------------------------------------------------------------------

def verify_coh(L: Bqd) -> Report:
    """The thirteen defining identities, checked exactly."""
    m = L.mode
    idV, idW = TMap.identity(("V",), m), TMap.identity(("W",), m)
    A, a, B, b, C, c, D, d = (getattr(L, n) for n in TENSOR_NAMES)
    w = L.omega
    der = L.derived()
    F, G = der.F, der.G
    idVW = TMap.identity(("V", "W"), m)
    idWV = TMap.identity(("W", "V"), m)
    checks = [
        _check_eq("pairing/cv-left", idV.tensor(C) * c.tensor(idV), idV),
        _check_eq("pairing/dv-right", D.tensor(idV) * idV.tensor(d), idV),
        _check_eq("unit/Aa", A * a, idW),
        _check_eq("assoc/CA-DA", C * A.tensor(idV), (D * idV.tensor(A)).scale(w)),
        _check_eq("assoc/ac-ad", idV.tensor(a) * c, (a.tensor(idV) * d).scale(w)),
        _check_eq("fusion/B-from-aD", idV.tensor(D) * a.tensor(idW), B),
        _check_eq("fusion/b-from-Ad", (idW.tensor(A) * d.tensor(idV)).scale(w * w), b),
        _check_eq("fusion/B-from-Ca", (C.tensor(idV) * idW.tensor(a)).scale(w), B),
        _check_eq("fusion/b-from-Ac", A.tensor(idW) * idV.tensor(c), b),
        _check_scalar("loop/Dc", D * c, der.kappa),
        _check_scalar("loop/Cd", C * d, der.kappa),
        _check_eq("iterate/GF", G * F, (idVW + c * D).scale(der.rho)),
        _check_eq("iterate/FG", F * G, (idWV + d * C).scale(der.rho)),
    ]
    return Report("coherence", checks)


def verify_postcoh(L: Bqd) -> Report:
    """The mirror system: the same identities with V<->W roles swapped."""
    m = L.mode
    idV, idW = TMap.identity(("V",), m), TMap.identity(("W",), m)
    A, a, B, b, C, c, D, d = (getattr(L, n) for n in TENSOR_NAMES)
    w = L.omega
    der = L.derived()
    Fs = B.tensor(idW) * idW.tensor(b)   # W(x)V -> V(x)W
    Gs = idW.tensor(B) * b.tensor(idW)   # V(x)W -> W(x)V
    idVW = TMap.identity(("V", "W"), m)
    idWV = TMap.identity(("W", "V"), m)
    checks = [
        _check_eq("pairing/dw-left", idW.tensor(D) * d.tensor(idW), idW),
        _check_eq("pairing/cw-right", C.tensor(idW) * idW.tensor(c), idW),
        _check_eq("unit/Bb", B * b, idV),
        _check_eq("assoc/DB-CB", D * B.tensor(idW), (C * idW.tensor(B)).scale(w)),
        _check_eq("assoc/bd-bc", idW.tensor(b) * d, (b.tensor(idW) * c).scale(w)),
        _check_eq("fusion/A-from-Cb", idW.tensor(C) * b.tensor(idV), A),
        _check_eq("fusion/a-from-Bc", (idV.tensor(B) * c.tensor(idW)).scale(w * w), a),
        _check_eq("fusion/A-from-Db", (D.tensor(idW) * idV.tensor(b)).scale(w), A),
        _check_eq("fusion/a-from-Bd", B.tensor(idV) * idW.tensor(d), a),
        _check_eq("iterate/G*F*", Gs * Fs, (idWV + d * C).scale(der.rho)),
        _check_eq("iterate/F*G*", Fs * Gs, (idVW + c * D).scale(der.rho)),
    ]
    return Report("mirror", checks)


def verify_decomp_ranks(L: Bqd) -> Report:
    """Ranks and kernel dimensions of the four decomposition tensors."""
    expect = [
        ("rank/A", L.A.mat.rank(), 3),
        ("rank/a", L.a.mat.rank(), 3),
        ("kernel/A", len(L.A.mat.kernel_basis()), 6),
        ("kernel/B", len(L.B.mat.kernel_basis()), 6),
        ("kernel/C", len(L.C.mat.kernel_basis()), 8),
        ("kernel/D", len(L.D.mat.kernel_basis()), 8),
    ]
    checks = [
        Check(law, got == want, "" if got == want else f"got {got}, want {want}")
        for law, got, want in expect
    ]
    return Report("decomposition", checks)


def _rotate_vvv(m) -> TMap:
    """v1(x)v2(x)v3 -> v3(x)v1(x)v2."""
    mat = Mat(27, 27, m)
    for t0 in range(3):
        for t1 in range(3):
            for t2 in range(3):
                mat.rows[flatten((t2, t0, t1))][flatten((t0, t1, t2))] = one(m)
    return TMap(("V", "V", "V"), ("V", "V", "V"), mat)


def verify_QE_Ee(L: Bqd) -> Report:
    """Cyclic twist laws for E and e, their contraction, and trace of Q."""
    m = L.mode
    der = L.derived()
    w = L.omega
    idV = TMap.identity(("V",), m)
    rot = _rotate_vvv(m)          # t -> (t3, t1, t2)
    rot_inv = rot * rot           # t -> (t2, t3, t1)
    twistQ = idV.tensor(idV).tensor(der.Q)
    checks = [
        # E_{lij} = w * E_{ijk} Q^k_l  <=>  E = w * E o (1,1,Q) o rot_inv
        _check_eq("cyclic/E", der.E, (der.E * twistQ * rot_inv).scale(w)),
        # e^{lij} = w^2 * e^{ijk} Q^l_k  <=>  e = w^2 * rot o (1,1,Q) o e
        _check_eq("cyclic/e", der.e, (rot * twistQ * der.e).scale(w * w)),
        _check_eq("contract/eE", idV.tensor(der.E) * der.e.tensor(idV), idV),
        _check_eq("unit/QQinv", der.Q * der.Qinv, idV),
    ]
    for law, tr in (("trace/Q", der.Q.mat.trace()), ("trace/Qinv", der.Qinv.mat.trace())):
        ok = tr == der.kappa
        checks.append(Check(law, ok, "" if ok else f"got {tr}, want {der.kappa}"))
    return Report("twist-contraction", checks)


def verify_square_twist(L: Bqd) -> Report:
    """Compatibility of all eight tensors with the Q / W-side twists."""
    der = L.derived()
    Q, QW = der.Q, der.QW
    A, a, B, b, C, c, D, d = (getattr(L, n) for n in TENSOR_NAMES)
    checks = [
        _check_eq("twist/A", A * Q.tensor(Q), QW * A),
        _check_eq("twist/a", a * QW, Q.tensor(Q) * a),
        _check_eq("twist/B", B * QW.tensor(QW), Q * B),
        _check_eq("twist/b", b * Q, QW.tensor(QW) * b),
        _check_eq("twist/C", C * QW.tensor(Q), C),
        _check_eq("twist/D", D * Q.tensor(QW), D),
        _check_eq("twist/c", Q.tensor(QW) * c, c),
        _check_eq("twist/d", QW.tensor(Q) * d, d),
    ]
    return Report("square-twist", checks)


def verify_all(L: Bqd) -> Report:
    rep = verify_coh(L)
    for part in (verify_postcoh(L), verify_decomp_ranks(L), verify_QE_Ee(L), verify_square_twist(L)):
        rep = rep.merge(part)
    rep.title = "all"
    return rep


# ---------------------------------------------------------------------------
# equivalence transforms
# ---------------------------------------------------------------------------

def _mat_inverse(g: Mat):
    n = g.nrows
    aug = Mat(n, 2 * n, g.mode, [dict(g.rows[r]) for r in range(n)])
    u = one(g.mode)
    for r in range(n):
        aug.rows[r][n + r] = u
    pivots, rows = aug.rref()
    if pivots != list(range(n)):
        return None
    inv = Mat(n, n, g.mode)
    for i, row in enumerate(rows):
        inv.rows[i] = {c - n: v for c, v in row.items() if c >= n}
    return inv


def apply_base_change(L: Bqd, gV: Mat, gW: Mat) -> Bqd:
    """Conjugate every tensor by (gV, gW) according to its signature."""
    gV_inv = _mat_inverse(gV)
    gW_inv = _mat_inverse(gW)
    if gV_inv is None or gW_inv is None:
        raise SingularMatrix("base-change matrices must be invertible")
    fwd = {"V": gV, "W": gW}
    bwd = {"V": gV_inv, "W": gW_inv}
    def push(sig, table):
        m = Mat.identity(1, L.mode)
        for letter in sig:
            m = m.kron(table[letter])
        return m
    new = {}
    for name in TENSOR_NAMES:
        t = getattr(L, name)
        new[name] = TMap(t.dom, t.cod, push(t.cod, fwd) * t.mat * push(t.dom, bwd))
    return Bqd(L.q, L.omega, name=L.name, **new)


def apply_rescale(L: Bqd, mu: Cyc, sigma: Cyc) -> Bqd:
    """The two-parameter rescaling: A by mu, C and D by sigma, inverses to match."""
    if not mu or not sigma:
        raise ZeroScale("rescale parameters must be nonzero")
    out = Bqd(
        L.q,
        L.omega,
        A=L.A.scale(mu),
        a=L.a.scale(mu.inv()),
        B=L.B.scale(sigma * mu.inv()),
        b=L.b.scale(mu * sigma.inv()),
        C=L.C.scale(sigma),
        c=L.c.scale(sigma.inv()),
        D=L.D.scale(sigma),
        d=L.d.scale(sigma.inv()),
        name=L.name,
    )
    rep = verify_coh(out)
    if not rep.ok:
        raise AxiomViolation(f"rescale broke {rep.failures()[0].law}")
    return out


def dynkin_flip(L: Bqd) -> Bqd:
    """Swap the roles of the two spaces (and the tensors in pairs)."""
    def relabel(t: TMap) -> TMap:
        swap = {"V": "W", "W": "V"}
        return TMap(tuple(swap[x] for x in t.dom), tuple(swap[x] for x in t.cod), t.mat)
    return Bqd(
        L.q,
        L.omega,
        A=relabel(L.B),
        a=relabel(L.b),
        B=relabel(L.A),
        b=relabel(L.a),
        C=relabel(L.D),
        c=relabel(L.d),
        D=relabel(L.C),
        d=relabel(L.c),
        name=L.name,
    )


# ---------------------------------------------------------------------------
# presentation export
# ---------------------------------------------------------------------------

@dataclass
class Relation:
    """One relation sum(quad) + sum(lin) + const = 0.

    quad keys are ordered pairs of generator coordinates, each coordinate a
    triple (family, upper, lower) with family "t" or "u" and 0-based
    indices; lin keys are single coordinates.
    """

    family: str
    index: tuple
    quad: dict
    lin: dict
    const: Cyc


@dataclass
class PresentationDoc:
    generators: dict
    relations: list
    alt_relations: list
    antipode_t: list  # [i][j] -> {(alpha, beta): coeff of u^alpha_beta}
    antipode_u: list
    counit: dict


def _coeff3(t: TMap, i, j, k) -> Cyc:
    """Coefficient at a 2+1-index tensor like A (cod 1 slot, dom 2 slots)."""
    if len(t.cod) == 1:
        return t.mat.entry(i, flatten((j, k)))
    return t.mat.entry(flatten((j, k)), i)


def export_presentation(L: Bqd) -> PresentationDoc:
    m = L.mode
    zero_s = zero(m)
    rels = []

    def quad_rel(fam, index, quad, lin=None, const=None):
        rels.append(
            Relation(fam, index, {k: v for k, v in quad.items() if v},
                     {k: v for k, v in (lin or {}).items() if v},
                     const if const is not None else zero_s)
        )

    # A(t,t) = uA  and  (t,t)a = au
    for al in range(3):
        for k in range(3):
            for l in range(3):
                quad = {}
                for i in range(3):
                    for j in range(3):
                        v = _coeff3(L.A, al, i, j)
                        if v:
                            quad[(("t", i, k), ("t", j, l))] = v
                lin = {("u", al, be): -_coeff3(L.A, be, k, l) for be in range(3)}
                quad_rel("A(t,t)=uA", (al, k, l), quad, lin)
    for k in range(3):
        for l in range(3):
            for al in range(3):
                quad = {}
                for i in range(3):
                    for j in range(3):
                        v = _coeff3(L.a, al, i, j)
                        if v:
                            quad[(("t", k, i), ("t", l, j))] = v
                lin = {("u", be, al): -_coeff3(L.a, be, k, l) for be in range(3)}
                quad_rel("(t,t)a=au", (k, l, al), quad, lin)

    # B(u,u) = tB  and  (u,u)b = bt
    for i in range(3):
        for ga in range(3):
            for de in range(3):
                quad = {}
                for al in range(3):
                    for be in range(3):
                        v = _coeff3(L.B, i, al, be)
                        if v:
                            quad[(("u", al, ga), ("u", be, de))] = v
                lin = {("t", i, j): -_coeff3(L.B, j, ga, de) for j in range(3)}
                quad_rel("B(u,u)=tB", (i, ga, de), quad, lin)
    for ga in range(3):
        for de in range(3):
            for i in range(3):
                quad = {}
                for al in range(3):
                    for be in range(3):
                        v = _coeff3(L.b, i, al, be)
                        if v:
                            quad[(("u", ga, al), ("u", de, be))] = v
                lin = {("t", j, i): -_coeff3(L.b, j, ga, de) for j in range(3)}
                quad_rel("(u,u)b=bt", (ga, de, i), quad, lin)

    # C(u,t) = C  and  (t,u)c = c ;  D(t,u) = D  and  (u,t)d = d
    Cmat = {(al, i): L.C.mat.entry(0, flatten((al, i))) for al in range(3) for i in range(3)}
    cmat = {(i, al): L.c.mat.entry(flatten((i, al)), 0) for i in range(3) for al in range(3)}
    Dmat = {(i, al): L.D.mat.entry(0, flatten((i, al))) for i in range(3) for al in range(3)}
    dmat = {(al, i): L.d.mat.entry(flatten((al, i)), 0) for al in range(3) for i in range(3)}
    for be in range(3):
        for j in range(3):
            quad = {(("u", al, be), ("t", i, j)): Cmat[(al, i)]
                    for al in range(3) for i in range(3) if Cmat[(al, i)]}
            quad_rel("C(u,t)=C", (be, j), quad, const=-Cmat[(be, j)])
    for i in range(3):
        for al in range(3):
            quad = {(("t", i, k), ("u", al, be)): cmat[(k, be)]
                    for k in range(3) for be in range(3) if cmat[(k, be)]}
            quad_rel("(t,u)c=c", (i, al), quad, const=-cmat[(i, al)])
    for j in range(3):
        for be in range(3):
            quad = {(("t", i, j), ("u", al, be)): Dmat[(i, al)]
                    for i in range(3) for al in range(3) if Dmat[(i, al)]}
            quad_rel("D(t,u)=D", (j, be), quad, const=-Dmat[(j, be)])
    for al in range(3):
        for i in range(3):
            quad = {(("u", al, be), ("t", i, j)): dmat[(be, j)]
                    for be in range(3) for j in range(3) if dmat[(be, j)]}
            quad_rel("(u,t)d=d", (al, i), quad, const=-dmat[(al, i)])

    relations = rels

    # alternative presentation: keep the A/a/B/b blocks, replace the four
    # pairing blocks by the D and c blocks plus the F-straddle relations
    rels = []
    for r in relations:
        if r.family in ("A(t,t)=uA", "(t,t)a=au", "B(u,u)=tB", "(u,u)b=bt",
                        "D(t,u)=D", "(t,u)c=c"):
            rels.append(r)
    der = L.derived()
    Fmat = der.F.mat  # rows flat (alpha,i), cols flat (j,beta)
    for al in range(3):
        for i in range(3):
            for j in range(3):
                for be in range(3):
                    quad = {}
                    for ga in range(3):
                        for k in range(3):
                            v = Fmat.entry(flatten((ga, k)), flatten((j, be)))
                            if v:
                                quad[(("u", al, ga), ("t", i, k))] = v
                    for k in range(3):
                        for ga in range(3):
                            v = Fmat.entry(flatten((al, i)), flatten((k, ga)))
                            if v:
                                key = (("t", k, j), ("u", ga, be))
                                quad[key] = quad.get(key, zero_s) - v
                    quad_rel("(u,t)F=F(t,u)", (al, i, j, be), quad)
    alt_relations = rels

    ant_t = [[{} for _ in range(3)] for _ in range(3)]
    for i in range(3):
        for j in range(3):
            for al in range(3):
                for be in range(3):
                    v = cmat[(i, be)] * Cmat[(al, j)]
                    if v:
                        ant_t[i][j][(al, be)] = v
    ant_u = [[{} for _ in range(3)] for _ in range(3)]
    for al in range(3):
        for be in range(3):
            for i in range(3):
                for j in range(3):
                    v = dmat[(al, j)] * Dmat[(i, be)]
                    if v:
                        ant_u[al][be][(i, j)] = v

    gens = {
        "t": [[f"t^{i+1}_{j+1}" for j in range(3)] for i in range(3)],
        "u": [[f"u^{a+1}_{b+1}" for b in range(3)] for a in range(3)],
    }
    counit = {"t": "identity", "u": "identity"}
    return PresentationDoc(gens, relations, alt_relations, ant_t, ant_u, counit)
