"""Exact sparse linear algebra over the package scalar fields.

Matrices store only nonzero entries (one dict per row), because the big
rank computations downstream have a few nonzeros per row in an ambient
space of a thousand-plus columns.  Elimination picks pivots to limit fill
and everything stays exact.

Tensor maps (TMap) are matrices tagged with a domain and codomain
signature, a tuple of space letters ("V" or "W", each of dimension 3).
Multi-indices are flattened most-significant-first, so the flat index of
(i1, ..., ik) is the base-3 number i1...ik.  Duals follow the convention
(X (x) Y)* = Y* (x) X*: the dual of f reverses both signatures and
transposes the matrix with both index tuples reversed.
"""

from __future__ import annotations

from .scalars import Cyc, one as scalar_one, zero as scalar_zero

__all__ = ["Mat", "TMap", "flatten", "unflatten", "SignatureError"]

DIM = 3


class SignatureError(ValueError):
    """Composed or combined maps with incompatible signatures/shapes."""


def flatten(idx) -> int:
    out = 0
    for i in idx:
        out = out * DIM + i
    return out


def unflatten(flat: int, k: int):
    out = [0] * k
    for pos in range(k - 1, -1, -1):
        flat, out[pos] = divmod(flat, DIM)
    return tuple(out)


class Mat:
    """A sparse exact matrix: rows is a list of {col: nonzero Cyc}."""

    __slots__ = ("nrows", "ncols", "mode", "rows")

    def __init__(self, nrows, ncols, mode="numeric", rows=None):
        self.nrows = nrows
        self.ncols = ncols
        self.mode = mode
        self.rows = rows if rows is not None else [dict() for _ in range(nrows)]

    @classmethod
    def identity(cls, n, mode="numeric"):
        u = scalar_one(mode)
        return cls(n, n, mode, [{i: u} for i in range(n)])

    @classmethod
    def from_dense(cls, dense, mode="numeric"):
        nrows = len(dense)
        ncols = len(dense[0]) if nrows else 0
        rows = []
        for r in dense:
            if len(r) != ncols:
                raise SignatureError("ragged rows")
            rows.append({j: v for j, v in enumerate(r) if v})
        return cls(nrows, ncols, mode, rows)

    def copy(self):
        return Mat(self.nrows, self.ncols, self.mode, [dict(r) for r in self.rows])

    def set_entry(self, r, c, v):
        if v:
            self.rows[r][c] = v
        else:
            self.rows[r].pop(c, None)

    def add_to_entry(self, r, c, v):
        row = self.rows[r]
        nv = row[c] + v if c in row else v
        if nv:
            row[c] = nv
        else:
            row.pop(c, None)

    def entry(self, r, c) -> Cyc:
        return self.rows[r].get(c) or scalar_zero(self.mode)

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    # -- ring operations -------------------------------------------------

    def _check_same_shape(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise SignatureError(
                f"shape mismatch {self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}"
            )

    def __add__(self, other):
        self._check_same_shape(other)
        out = self.copy()
        for r, row in enumerate(other.rows):
            for c, v in row.items():
                out.add_to_entry(r, c, v)
        return out

    def __sub__(self, other):
        return self + other.scale(-scalar_one(self.mode))

    def __neg__(self):
        return self.scale(-scalar_one(self.mode))

    def scale(self, s: Cyc):
        if not s:
            return Mat(self.nrows, self.ncols, self.mode)
        rows = [{c: s * v for c, v in r.items()} for r in self.rows]
        return Mat(self.nrows, self.ncols, self.mode, rows)

    def __mul__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if self.ncols != other.nrows:
            raise SignatureError(
                f"cannot compose {self.nrows}x{self.ncols} with {other.nrows}x{other.ncols}"
            )
        out = Mat(self.nrows, other.ncols, self.mode)
        orows = other.rows
        for r, row in enumerate(self.rows):
            acc = {}
            for k, v in row.items():
                for c, w in orows[k].items():
                    if c in acc:
                        acc[c] = acc[c] + v * w
                    else:
                        acc[c] = v * w
            out.rows[r] = {c: x for c, x in acc.items() if x}
        return out

    def transpose(self):
        out = Mat(self.ncols, self.nrows, self.mode)
        for r, row in enumerate(self.rows):
            for c, v in row.items():
                out.rows[c][r] = v
        return out

    def kron(self, other):
        """Kronecker product; blocks of other scaled by entries of self."""
        out = Mat(self.nrows * other.nrows, self.ncols * other.ncols, self.mode)
        for r1, row1 in enumerate(self.rows):
            for c1, v1 in row1.items():
                for r2, row2 in enumerate(other.rows):
                    tgt = out.rows[r1 * other.nrows + r2]
                    off = c1 * other.ncols
                    for c2, v2 in row2.items():
                        tgt[off + c2] = v1 * v2
        return out

    def trace(self) -> Cyc:
        t = scalar_zero(self.mode)
        for r, row in enumerate(self.rows):
            if r in row:
                t = t + row[r]
        return t

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (
            self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def is_zero(self) -> bool:
        return all(not r for r in self.rows)

    def as_scalar_identity(self):
        """The scalar s with self == s*I, or None."""
        if self.nrows != self.ncols:
            return None
        s = None
        for r, row in enumerate(self.rows):
            if len(row) > 1 or (row and r not in row):
                return None
            v = row.get(r)
            if s is None:
                s = v if v is not None else scalar_zero(self.mode)
            elif (v or scalar_zero(self.mode)) != s:
                return None
        return s if s is not None else scalar_zero(self.mode)

    def __repr__(self):
        return f"Mat({self.nrows}x{self.ncols}, nnz={self.nnz()})"

    # -- elimination ------------------------------------------------------

    def rank(self) -> int:
        """Exact rank by sparse elimination with fill-reducing pivoting."""
        rows = [dict(r) for r in self.rows if r]
        by_col = {}
        for i, r in enumerate(rows):
            for c in r:
                by_col.setdefault(c, set()).add(i)
        active = set(range(len(rows)))
        rank = 0
        while active:
            pr = min(active, key=lambda i: len(rows[i]))
            row = rows[pr]
            active.discard(pr)
            if not row:
                continue
            rank += 1
            pc = min(row, key=lambda c: len(by_col[c]))
            inv = row[pc].inv()
            for c in row:
                by_col[c].discard(pr)
            for ti in list(by_col.get(pc, ())):
                tgt = rows[ti]
                f = tgt[pc] * inv
                for c, v in row.items():
                    if c in tgt:
                        nv = tgt[c] - f * v
                        if nv:
                            tgt[c] = nv
                        else:
                            del tgt[c]
                            by_col[c].discard(ti)
                    else:
                        tgt[c] = -f * v
                        by_col[c].add(ti)
                if not tgt:
                    active.discard(ti)
        return rank

    def rref(self):
        """Fully reduced row echelon form.

        Returns (pivots, rows): pivots is the sorted list of pivot columns,
        rows the matching reduced rows (row i has a 1 in column pivots[i]
        and zeros in every other pivot column).
        """
        reduced = []  # list of (pivot_col, rowdict)
        for src in self.rows:
            r = dict(src)
            for pc, pr in reduced:
                if pc in r:
                    f = r.pop(pc)
                    for c, v in pr.items():
                        if c == pc:
                            continue
                        nv = r.get(c, None)
                        nv = nv - f * v if nv is not None else -f * v
                        if nv:
                            r[c] = nv
                        else:
                            r.pop(c, None)
            if not r:
                continue
            pc = min(r)
            inv = r[pc].inv()
            r = {c: inv * v for c, v in r.items()}
            for _, pr in reduced:
                if pc in pr:
                    f = pr.pop(pc)
                    for c, v in r.items():
                        if c == pc:
                            continue
                        nv = pr.get(c, None)
                        nv = nv - f * v if nv is not None else -f * v
                        if nv:
                            pr[c] = nv
                        else:
                            pr.pop(c, None)
            reduced.append((pc, r))
        reduced.sort(key=lambda t: t[0])
        return [pc for pc, _ in reduced], [r for _, r in reduced]

    def kernel_basis(self):
        """A basis of {x : self * x = 0}, one dict per basis vector."""
        pivots, rows = self.rref()
        pivot_set = set(pivots)
        u = scalar_one(self.mode)
        basis = []
        for f in range(self.ncols):
            if f in pivot_set:
                continue
            vec = {f: u}
            for pc, r in zip(pivots, rows):
                v = r.get(f)
                if v:
                    vec[pc] = -v
            basis.append(vec)
        return basis


class TMap:
    """A linear map between tensor powers of the two basic 3-dim spaces.

    dom and cod are tuples of letters "V"/"W"; the matrix has 3^len(cod)
    rows and 3^len(dom) columns, multi-indices flattened first-factor-
    most-significant.
    """

    __slots__ = ("dom", "cod", "mat")

    def __init__(self, dom, cod, mat: Mat):
        dom, cod = tuple(dom), tuple(cod)
        if mat.nrows != DIM ** len(cod) or mat.ncols != DIM ** len(dom):
            raise SignatureError(
                f"matrix {mat.nrows}x{mat.ncols} does not fit {cod}<-{dom}"
            )
        self.dom = dom
        self.cod = cod
        self.mat = mat

    @property
    def mode(self):
        return self.mat.mode

    @classmethod
    def identity(cls, sig, mode="numeric"):
        sig = tuple(sig)
        return cls(sig, sig, Mat.identity(DIM ** len(sig), mode))

    @classmethod
    def zero(cls, dom, cod, mode="numeric"):
        return cls(dom, cod, Mat(DIM ** len(cod), DIM ** len(dom), mode))

    def __mul__(self, other):
        """Composition self o other."""
        if not isinstance(other, TMap):
            return NotImplemented
        if other.cod != self.dom:
            raise SignatureError(f"cannot compose: {self.dom} <- {other.cod}")
        return TMap(other.dom, self.cod, self.mat * other.mat)

    def tensor(self, other):
        return TMap(
            self.dom + other.dom, self.cod + other.cod, self.mat.kron(other.mat)
        )

    def __add__(self, other):
        if self.dom != other.dom or self.cod != other.cod:
            raise SignatureError("sum of maps with different signatures")
        return TMap(self.dom, self.cod, self.mat + other.mat)

    def __sub__(self, other):
        if self.dom != other.dom or self.cod != other.cod:
            raise SignatureError("difference of maps with different signatures")
        return TMap(self.dom, self.cod, self.mat - other.mat)

    def __neg__(self):
        return TMap(self.dom, self.cod, -self.mat)

    def scale(self, s: Cyc):
        return TMap(self.dom, self.cod, self.mat.scale(s))

    def __eq__(self, other):
        if not isinstance(other, TMap):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self.mat == other.mat

    def is_zero(self):
        return self.mat.is_zero()

    def as_scalar_identity(self):
        if self.dom != self.cod:
            return None
        return self.mat.as_scalar_identity()

    def dual(self):
        """The transpose map between the reversed dual signatures."""
        kd, kc = len(self.dom), len(self.cod)
        out = Mat(self.mat.ncols, self.mat.nrows, self.mode)
        for r, row in enumerate(self.mat.rows):
            rr = flatten(reversed(unflatten(r, kc)))
            for c, v in row.items():
                out.rows[flatten(reversed(unflatten(c, kd)))][rr] = v
        return TMap(tuple(reversed(self.cod)), tuple(reversed(self.dom)), out)

    def __repr__(self):
        return f"TMap({''.join(self.cod) or '1'} <- {''.join(self.dom) or '1'}, nnz={self.mat.nnz()})"
