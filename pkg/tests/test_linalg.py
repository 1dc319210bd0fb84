import random
from fractions import Fraction

import pytest
from gmpy2 import mpq

from qsl3.linalg import DIM, Mat, SignatureError, TMap, flatten, unflatten
from qsl3.scalars import Cyc, from_rational, omega, one, zero


def rand_cyc(rng, density=1.0):
    if rng.random() > density:
        return zero()
    return Cyc(mpq(rng.randint(-5, 5)), mpq(rng.randint(-2, 2)))


def rand_mat(rng, nrows, ncols, density=0.4):
    m = Mat(nrows, ncols)
    for r in range(nrows):
        for c in range(ncols):
            if rng.random() < density:
                m.set_entry(r, c, Cyc(mpq(rng.randint(-5, 5)), mpq(rng.randint(-2, 2))))
    return m


# -- oracle: rank over Q(w) via the regular representation w -> [[0,-1],[1,-1]]

def dense_rank_oracle(m: Mat) -> int:
    rows = []
    for r in range(m.nrows):
        top, bot = [], []
        for c in range(m.ncols):
            v = m.entry(r, c)
            a = Fraction(int(v.re.numerator), int(v.re.denominator))
            b = Fraction(int(v.om.numerator), int(v.om.denominator))
            top.extend([a, -b])
            bot.extend([b, a - b])
        rows.append(top)
        rows.append(bot)
    # plain dense Gaussian elimination over Q
    rank = 0
    ncols = 2 * m.ncols
    lead = 0
    for col in range(ncols):
        piv = None
        for i in range(lead, len(rows)):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[lead], rows[piv] = rows[piv], rows[lead]
        pv = rows[lead][col]
        for i in range(len(rows)):
            if i != lead and rows[i][col]:
                f = rows[i][col] / pv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[lead])]
        lead += 1
        rank += 1
        if lead == len(rows):
            break
    assert rank % 2 == 0
    return rank // 2


def test_rank_matches_dense_oracle():
    rng = random.Random(7)
    for trial in range(25):
        m = rand_mat(rng, rng.randint(1, 8), rng.randint(1, 8), density=0.5)
        assert m.rank() == dense_rank_oracle(m)


def test_rank_of_products_and_transposes():
    rng = random.Random(11)
    for _ in range(10):
        m = rand_mat(rng, 6, 4)
        assert m.rank() == m.transpose().rank()
        n = rand_mat(rng, 4, 5)
        assert (m * n).rank() <= min(m.rank(), n.rank())


def test_identity_and_scalar_identity():
    i5 = Mat.identity(5)
    assert i5.rank() == 5
    assert i5.as_scalar_identity() == one()
    s = from_rational(mpq(7, 3))
    assert i5.scale(s).as_scalar_identity() == s
    m = Mat.identity(3)
    m.set_entry(0, 1, one())
    assert m.as_scalar_identity() is None
    assert Mat(4, 4).as_scalar_identity() == zero()


def test_kron_rank_is_multiplicative():
    rng = random.Random(3)
    a = rand_mat(rng, 4, 3)
    b = rand_mat(rng, 3, 4)
    assert a.kron(b).rank() == a.rank() * b.rank()


def test_kernel_basis():
    rng = random.Random(5)
    for _ in range(12):
        m = rand_mat(rng, rng.randint(1, 6), rng.randint(1, 7), density=0.5)
        basis = m.kernel_basis()
        assert len(basis) == m.ncols - m.rank()
        for vec in basis:
            col = Mat(m.ncols, 1, rows=[{0: vec[r]} if r in vec else {} for r in range(m.ncols)])
            assert (m * col).is_zero()


def test_rref_shape():
    m = Mat.from_dense(
        [
            [one(), from_rational(2), zero()],
            [from_rational(2), from_rational(4), one()],
        ]
    )
    pivots, rows = m.rref()
    assert pivots == [0, 2]
    assert rows[0] == {0: one(), 1: from_rational(2)}
    assert rows[1] == {2: one()}


def test_flatten_round_trip():
    for k in range(4):
        for flat in range(DIM**k):
            assert flatten(unflatten(flat, k)) == flat
    assert flatten((1, 2, 0)) == 1 * 9 + 2 * 3 + 0


def test_tmap_compose_and_tensor():
    rng = random.Random(13)
    f = TMap(("V",), ("V", "W"), rand_mat(rng, 9, 3))
    g = TMap(("V", "W"), ("W",), rand_mat(rng, 3, 9))
    h = g * f
    assert h.dom == ("V",) and h.cod == ("W",)
    with pytest.raises(SignatureError):
        f * f
    idv = TMap.identity(("V",))
    assert (f * idv).mat == f.mat
    t = f.tensor(g)
    assert t.dom == ("V", "V", "W") and t.cod == ("V", "W", "W")


def test_dual_is_an_involution_and_antihomomorphism():
    rng = random.Random(17)
    f = TMap(("V", "W"), ("W",), rand_mat(rng, 3, 9))
    g = TMap(("W",), ("V",), rand_mat(rng, 3, 3))
    assert f.dual().dual() == f
    assert f.dual().dom == ("W",) and f.dual().cod == ("W", "V")
    assert (g * f).dual() == f.dual() * g.dual()


def test_dual_reverses_index_tuples():
    m = Mat(3, 9)
    w = omega()
    m.set_entry(2, flatten((0, 1)), w)  # f(x_0 (x) y_1) = w * y_2
    f = TMap(("V", "W"), ("W",), m)
    fd = f.dual()
    # dual entry sits at reversed tuples: row (1,0), column (2)
    assert fd.mat.entry(flatten((1, 0)), 2) == w
    assert fd.mat.nnz() == 1


def test_trace_and_kron_identity():
    a = Mat.identity(3).scale(from_rational(2))
    assert a.trace() == from_rational(6)
    assert a.kron(Mat.identity(2)).trace() == from_rational(12)
