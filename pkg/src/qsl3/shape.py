"""Graded dimensions for the three algebras attached to a datum.

Every dimension here is obtained the same way: list the degree-(k, l)
relation span inside an explicit ambient space and take an exact rank.
No rewriting systems, no term orders, and in particular nothing that
would break down for the elliptic family.

Three models are covered:

* the one-arrangement quotient of ``V``-then-``W`` words (and its dual
  with the roles reversed), computed incrementally as a tower so that a
  full sweep stays cheap;
* the two-letter free product with every arrangement of ``V`` and ``W``
  factors, where the ideal is inserted at each adjacent slot pair;
* the quadratic algebra on the two 9-dimensional coefficient blocks,
  whose relations are the homogeneous parts of the defining relations.

Words are always enumerated in lexicographic order of their block tags,
and coordinates within a word are mixed-radix with the leftmost slot
most significant; every row construction below relies on that order.
"""

from dataclasses import dataclass
from itertools import product as iter_product
from math import comb

from .bqd import Bqd, _mat_inverse, export_presentation
from .linalg import Mat
from .scalars import one

__all__ = [
    "ComponentResult",
    "DegreeBoundExceeded",
    "QuadraticAlgebraSpec",
    "ShapeTower",
    "component_dimension",
    "count_normal_monomials",
    "dim_G_component",
    "dim_M_component",
    "dim_N_component",
    "dim_free_ideal_component",
    "expected_dim",
    "filtration_dims",
    "free_ideal_spec",
    "quadratic_G_spec",
]


class DegreeBoundExceeded(ValueError):
    """A component beyond the configured degree bound was requested."""


@dataclass(frozen=True)
class ComponentResult:
    multidegree: tuple
    ambient: int
    ideal_rank: int
    quotient: int

    def __post_init__(self):
        if self.quotient != self.ambient - self.ideal_rank:
            raise ValueError("quotient must be ambient minus ideal rank")


def expected_dim(k: int, l: int) -> int:
    """The closed form (k+1)(l+1)(k+l+2)/2."""
    return (k + 1) * (l + 1) * (k + l + 2) // 2


def count_normal_monomials(k: int, l: int) -> int:
    """Count the normal words of multidegree (k, l) by direct enumeration.

    The two shapes are x1^a x2^b x3^c y2^e y1^f and, with m >= 1 to avoid
    counting the first shape twice, x1^a x2^b y3^m y2^e y1^f.
    """
    count = 0
    for a in range(k + 1):
        for b in range(k + 1 - a):
            c = k - a - b
            assert c >= 0
            count += l + 1  # e + f = l
    for a in range(k + 1):
        b = k - a
        for m in range(1, l + 1):
            count += l - m + 1  # e + f = l - m
    return count


def filtration_dims(maxn: int) -> list:
    """Partial sums of d_{(k,l)}^2 over k + l <= n, for n = 0..maxn."""
    out = []
    total = 0
    for n in range(maxn + 1):
        total += sum(expected_dim(k, n - k) ** 2 for k in range(n + 1))
        out.append(total)
    return out


# ---------------------------------------------------------------------------
# generic two-block quadratic engine
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadraticAlgebraSpec:
    """Blocks and degree-2 relation spans of a graded quadratic algebra.

    blocks: tuple of (tag, dimension, (V-degree, W-degree)).
    relations: tuple of (patterns, rows) where patterns is a tuple of
    two-tag words sharing one multidegree and rows is a matrix whose
    columns run through the listed pattern spaces in order.  A relation
    spanning several patterns (an element of a direct sum of word
    spaces) simply uses more than one pattern.
    """

    blocks: tuple
    relations: tuple
    mode: str

    def block_dim(self, tag: str) -> int:
        for t, d, _ in self.blocks:
            if t == tag:
                return d
        raise KeyError(tag)

    def block_degree(self, tag: str):
        for t, _, deg in self.blocks:
            if t == tag:
                return deg
        raise KeyError(tag)


def _words(spec: QuadraticAlgebraSpec, k: int, l: int):
    """All block words of multidegree (k, l), lexicographic in the tags."""
    tags = sorted(t for t, _, _ in spec.blocks)
    found = []

    def grow(word, dv, dw):
        if (dv, dw) == (0, 0):
            found.append(tuple(word))
            return
        for t in tags:
            tv, tw = spec.block_degree(t)
            if tv <= dv and tw <= dw:
                word.append(t)
                grow(word, dv - tv, dw - tw)
                word.pop()

    grow([], k, l)
    return sorted(found)


def _word_dim(spec: QuadraticAlgebraSpec, word) -> int:
    d = 1
    for t in word:
        d *= spec.block_dim(t)
    return d


def component_dimension(spec: QuadraticAlgebraSpec, k: int, l: int) -> ComponentResult:
    """Ambient, ideal rank and quotient at multidegree (k, l)."""
    words = _words(spec, k, l)
    offsets = {}
    ambient = 0
    for w in words:
        offsets[w] = ambient
        ambient += _word_dim(spec, w)

    rows = []
    for patterns, gens in spec.relations:
        pv = tuple(
            sum(spec.block_degree(t)[i] for t in patterns[0]) for i in range(2)
        )
        for pat in patterns:
            got = tuple(sum(spec.block_degree(t)[i] for t in pat) for i in range(2))
            if got != pv:
                raise ValueError("patterns of one relation must share a degree")
        rv, rw = pv
        pat_offsets = []
        off = 0
        for pat in patterns:
            pat_offsets.append(off)
            off += _word_dim(spec, pat)

        # enumerate (prefix, suffix) splits of the remaining degree
        for i in range(k - rv + 1):
            for j in range(l - rw + 1):
                for pre in _words(spec, i, j):
                    for suf in _words(spec, k - rv - i, l - rw - j):
                        dpre = _word_dim(spec, pre)
                        dsuf = _word_dim(spec, suf)
                        for gen in gens.rows:
                            if not gen:
                                continue
                            for ip in range(dpre):
                                for isuf in range(dsuf):
                                    row = {}
                                    for col, coeff in gen.items():
                                        pi = 0
                                        while pi + 1 < len(patterns) and pat_offsets[pi + 1] <= col:
                                            pi += 1
                                        within = col - pat_offsets[pi]
                                        word = pre + patterns[pi] + suf
                                        mid = _word_dim(spec, patterns[pi])
                                        tgt = offsets[word] + ((ip * mid) + within) * dsuf + isuf
                                        acc = row.get(tgt)
                                        acc = coeff if acc is None else acc + coeff
                                        if acc:
                                            row[tgt] = acc
                                        elif tgt in row:
                                            del row[tgt]
                                    if row:
                                        rows.append(row)
        # (k - rv < 0 or l - rw < 0 simply yields no splits above)

    span = Mat(len(rows), ambient, spec.mode, rows)
    rank = span.rank()
    return ComponentResult((k, l), ambient, rank, ambient - rank)


# ---------------------------------------------------------------------------
# the free product model: every arrangement of V and W factors
# ---------------------------------------------------------------------------

_FREE_BOUND = 4
_G_BOUND = 3


def _straddle(first_pat, first_mat_cols, graph, scale, mode):
    """Rows e_c + scale * graph(e_c) with graph landing in the second pattern."""
    rows = []
    for c in range(first_mat_cols):
        row = {c: one(mode)}
        for r in range(graph.nrows):
            v = graph.entry(r, c)
            if v:
                row[first_mat_cols + r] = v * scale
        rows.append(row)
    return Mat(first_mat_cols, first_mat_cols + graph.nrows, mode, rows)


def free_ideal_spec(L: Bqd) -> QuadraticAlgebraSpec:
    """The degree-2 relation spans inside the free algebra on V and W."""
    mode = L.mode
    der = L.derived()
    qq = L.q + L.q.inv()
    blocks = (("V", 3, (1, 0)), ("W", 3, (0, 1)))
    relations = (
        ((("V", "V"),), L.a.mat.transpose()),
        ((("W", "W"),), L.b.mat.transpose()),
        ((("V", "W"),), L.c.mat.transpose()),
        # already contained in the span below, kept as a transcription guard
        ((("W", "V"),), L.d.mat.transpose()),
        ((("W", "V"), ("V", "W")), _straddle(("W", "V"), 9, der.G.mat, qq, mode)),
        ((("V", "W"), ("W", "V")), _straddle(("V", "W"), 9, der.F.mat, qq, mode)),
    )
    return QuadraticAlgebraSpec(blocks, relations, mode)


def dim_free_ideal_component(L: Bqd, k: int, l: int, bound: int = _FREE_BOUND) -> ComponentResult:
    if k + l > bound:
        raise DegreeBoundExceeded(f"(k, l) = ({k}, {l}) exceeds bound {bound}")
    return component_dimension(free_ideal_spec(L), k, l)


# ---------------------------------------------------------------------------
# the quadratic algebra on the two coefficient blocks
# ---------------------------------------------------------------------------

def _flat2(i, j):
    return 3 * i + j


def quadratic_G_spec(L: Bqd, presolve: bool = True) -> QuadraticAlgebraSpec:
    """Blocks t and u with the homogeneous parts of the defining relations.

    With presolve the straddling relations are triangularized against
    their (u, t)-side coefficients (an invertible 81 x 81 block), which
    turns the subsequent elimination into cheap substitutions; the span
    is unchanged.
    """
    mode = L.mode
    doc = export_presentation(L)
    blocks = (("T", 9, (1, 0)), ("U", 9, (0, 1)))
    groups = {
        ("T", "T"): [],
        ("U", "U"): [],
        ("T", "U"): [],
        "F": [],
    }
    for rel in doc.alt_relations:
        row = {}
        straddles = rel.family == "(u,t)F=F(t,u)"
        for ((g1, i, j), (g2, kk, ll)), coeff in rel.quad.items():
            if straddles:
                # columns: the 81 (u,t) coordinates then the 81 (t,u) ones
                if (g1, g2) == ("u", "t"):
                    col = _flat2(i, j) * 9 + _flat2(kk, ll)
                else:
                    col = 81 + _flat2(i, j) * 9 + _flat2(kk, ll)
            else:
                col = _flat2(i, j) * 9 + _flat2(kk, ll)
            row[col] = row[col] + coeff if col in row else coeff
            if not row[col]:
                del row[col]
        if straddles:
            groups["F"].append(row)
        else:
            tags = tuple("T" if g == "t" else "U" for g in
                         (next(iter(rel.quad))[0][0], next(iter(rel.quad))[1][0]))
            groups[tags].append(row)

    fmat = Mat(len(groups["F"]), 162, mode, groups["F"])
    if presolve:
        head = Mat(81, 81, mode, [
            {c: v for c, v in row.items() if c < 81} for row in fmat.rows
        ])
        tail = Mat(81, 81, mode, [
            {c - 81: v for c, v in row.items() if c >= 81} for row in fmat.rows
        ])
        inv = _mat_inverse(head)
        if inv is not None:
            solved = inv * tail
            rows = []
            for r in range(81):
                row = {r: one(mode)}
                for c, v in solved.rows[r].items():
                    row[81 + c] = v
                rows.append(row)
            fmat = Mat(81, 162, mode, rows)

    relations = (
        ((("T", "T"),), Mat(len(groups[("T", "T")]), 81, mode, groups[("T", "T")])),
        ((("U", "U"),), Mat(len(groups[("U", "U")]), 81, mode, groups[("U", "U")])),
        ((("T", "U"),), Mat(len(groups[("T", "U")]), 81, mode, groups[("T", "U")])),
        ((("U", "T"), ("T", "U")), fmat),
    )
    return QuadraticAlgebraSpec(blocks, relations, mode)


def dim_G_component(L: Bqd, k: int, l: int, bound: int = _G_BOUND) -> ComponentResult:
    if k + l > bound:
        raise DegreeBoundExceeded(f"(k, l) = ({k}, {l}) exceeds bound {bound}")
    return component_dimension(quadratic_G_spec(L), k, l)


# ---------------------------------------------------------------------------
# the one-arrangement models, computed as a tower
# ---------------------------------------------------------------------------

class ShapeTower:
    """Quotients of X^(x)m (x) Y^(x)n grown one letter at a time.

    The state per cell is its dimension and the reduction matrix from
    (previous cell) (x) (new letter) onto the cell's chosen basis; new
    relation images are expressed through the previous reduction, so no
    cell ever materializes the full 3^(m+n)-dimensional space.  Appending
    letter m of the first phase (m >= 2) inserts the phase-1 pair span,
    the first phase-2 letter inserts the interface span, and letter n of
    the second phase (n >= 2) inserts the phase-2 pair span; everything
    older is inherited.  Each span insertion runs over a basis of the
    cell two letters back, which is exactly the image of the full tensor
    context, so the tower quotient equals the one-shot quotient.
    """

    def __init__(self, pairs1, interface, pairs2, mode):
        self._pairs1 = pairs1
        self._interface = interface
        self._pairs2 = pairs2
        self._mode = mode
        self._dim = {(0, 0): 1}
        self._red = {}

    # -- gen vectors are dicts {3u+v: coeff} on (letter) (x) (letter)

    @classmethod
    def for_M(cls, L: Bqd) -> "ShapeTower":
        a, b, c = L.a.mat, L.b.mat, L.c.mat
        pairs1 = [
            {r: a.entry(r, col) for r in range(9) if a.entry(r, col)}
            for col in range(3)
        ]
        pairs2 = [
            {r: b.entry(r, col) for r in range(9) if b.entry(r, col)}
            for col in range(3)
        ]
        interface = [{r: c.entry(r, 0) for r in range(9) if c.entry(r, 0)}]
        return cls(pairs1, interface, pairs2, L.mode)

    @classmethod
    def for_N(cls, L: Bqd) -> "ShapeTower":
        A, B, D = L.A.mat, L.B.mat, L.D.mat
        pairs1 = [
            {_flat2(s, t): B.entry(i, _flat2(t, s))
             for s in range(3) for t in range(3) if B.entry(i, _flat2(t, s))}
            for i in range(3)
        ]
        pairs2 = [
            {_flat2(s, t): A.entry(al, _flat2(t, s))
             for s in range(3) for t in range(3) if A.entry(al, _flat2(t, s))}
            for al in range(3)
        ]
        interface = [{
            _flat2(al, i): D.entry(0, _flat2(i, al))
            for al in range(3) for i in range(3) if D.entry(0, _flat2(i, al))
        }]
        return cls(pairs1, interface, pairs2, L.mode)

    def dim(self, m: int, n: int) -> int:
        self._ensure(m, n)
        return self._dim[(m, n)]

    def reduction(self, m: int, n: int) -> Mat:
        """The map (previous cell) (x) (letter) -> cell (m, n)."""
        self._ensure(m, n)
        return self._red[(m, n)]

    def _ensure(self, m: int, n: int):
        if (m, n) in self._dim:
            return
        if n == 0:
            self._ensure(m - 1, 0)
            gens = self._pairs1 if m >= 2 else []
            ctx = self._dim[(m - 2, 0)] if m >= 2 else 0
            red = self._red.get((m - 1, 0))
        else:
            self._ensure(m, n - 1)
            if n == 1:
                gens = self._interface if m >= 1 else []
                ctx = self._dim[(m - 1, 0)] if m >= 1 else 0
                red = self._red.get((m, 0))
            else:
                gens = self._pairs2
                ctx = self._dim[(m, n - 2)]
                red = self._red.get((m, n - 1))
        prev = self._dim[(m - 1, 0) if n == 0 else (m, n - 1)]
        rows = []
        for gen in gens:
            for t in range(ctx):
                row = {}
                for uv, coeff in gen.items():
                    u, v = divmod(uv, 3)
                    for s in range(red.nrows):
                        rv = red.entry(s, 3 * t + u)
                        if rv:
                            key = 3 * s + v
                            acc = row.get(key)
                            row[key] = rv * coeff if acc is None else acc + rv * coeff
                for key in [k for k, val in row.items() if not val]:
                    del row[key]
                if row:
                    rows.append(row)
        dim, red_new = _quotient_of(rows, 3 * prev, self._mode)
        self._dim[(m, n)] = dim
        self._red[(m, n)] = red_new


def _quotient_of(rows, ncols, mode):
    """Dimension and reduction matrix of ncols-space modulo the row span."""
    span = Mat(len(rows), ncols, mode, rows)
    pivots, reduced = span.rref()
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    pos = {c: i for i, c in enumerate(free)}
    red = Mat(len(free), ncols, mode)
    u = one(mode)
    for c in free:
        red.rows[pos[c]][c] = u
    for pcol, row in zip(pivots, reduced):
        for c, v in row.items():
            if c != pcol:
                red.rows[pos[c]][pcol] = -v
    return len(free), red


def _tower_component(tower: ShapeTower, m: int, n: int, k: int, l: int) -> ComponentResult:
    ambient = 3 ** (k + l)
    quot = tower.dim(m, n)
    return ComponentResult((k, l), ambient, ambient - quot, quot)


def dim_M_component(L: Bqd, k: int, l: int) -> ComponentResult:
    return _tower_component(ShapeTower.for_M(L), k, l, k, l)


def dim_N_component(L: Bqd, k: int, l: int) -> ComponentResult:
    # the dual words are reversed, so the W-count comes first
    return _tower_component(ShapeTower.for_N(L), l, k, k, l)
