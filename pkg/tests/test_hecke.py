"""Tests for the two-color Hecke operators and the projector."""

import pytest

from qsl3.catalog import instantiate
from qsl3.hecke import (
    AmbiguousSolution,
    IndexOutOfRange,
    NoSolution,
    alphas_by_recurrence,
    build_context,
    build_symmetrizer,
    build_T,
    build_U,
    solve_P,
    symmetrizer_nonvanishing_demo,
    verify_hecke_relations,
    verify_hecke_suite,
    verify_P_properties,
    verify_switch_identities,
    verify_T_relations,
)
from qsl3.linalg import Mat
from qsl3.scalars import parse_scalar, qfact
from qsl3.shape import DegreeBoundExceeded, expected_dim


@pytest.fixture(scope="module")
def classical():
    return instantiate("I.a")


@pytest.fixture(scope="module")
def diagonal():
    return instantiate("II.a")   # default q = 2


def test_operator_shapes_and_bounds(diagonal):
    ctx = build_context(diagonal, 2, 2)
    assert ctx.dim == 81
    assert len(ctx.Rs) == 1 and len(ctx.Rstars) == 1
    assert ctx.X is not None and ctx.X.nrows == 81
    with pytest.raises(IndexOutOfRange):
        ctx.R(2)
    with pytest.raises(IndexOutOfRange):
        ctx.Rstar(0)
    with pytest.raises(DegreeBoundExceeded):
        build_context(diagonal, 3, 3)
    # explicit bound override
    assert build_context(diagonal, 3, 2, bound=5).dim == 243


def test_interface_loop_is_rank_one_times_context(diagonal):
    ctx = build_context(diagonal, 1, 1)
    assert ctx.X.rank() == 1
    # X^2 = kappa X, and at q = 2 the loop value is 1/4 + 1 + 4
    kappa = diagonal.derived().kappa
    assert kappa == parse_scalar("21/4")
    assert ctx.X * ctx.X == ctx.X.scale(kappa)


def test_braiding_placement_pin(diagonal):
    # the q^3 pin: X R_1 X = q^3 X with R_1 on the last two V factors
    ctx = build_context(diagonal, 2, 1)
    q = diagonal.q
    assert ctx.X * ctx.R(1) * ctx.X == ctx.X.scale(q ** 3)
    ctx = build_context(diagonal, 1, 2)
    assert ctx.X * ctx.Rstar(1) * ctx.X == ctx.X.scale(q ** -3)


def test_relation_suite_across_cells(diagonal):
    for (k, l) in [(2, 0), (1, 1), (2, 1), (2, 2), (3, 1)]:
        rep = verify_hecke_relations(build_context(diagonal, k, l))
        assert rep.ok, rep.failures()


def test_murphy_product_matches_small_literals(diagonal):
    q = diagonal.q
    ctx = build_context(diagonal, 2, 0)
    ident = ctx.identity()
    assert build_symmetrizer(ctx, "V") == ident + ctx.R(1).scale(q)

    ctx = build_context(diagonal, 3, 0)
    ident3 = ctx.identity()
    S3 = (ident3 + ctx.R(1).scale(q)) * (
        ident3 + ctx.R(2).scale(q) + (ctx.R(2) * ctx.R(1)).scale(q * q)
    )
    assert build_symmetrizer(ctx, "V") == S3


def test_symmetrizer_group_sum_oracle(classical):
    # at q = 1 the symmetrizer is the plain sum over all permutations;
    # spelled out at k = 3 from scratch
    ctx = build_context(classical, 3, 0)
    r1, r2 = ctx.R(1), ctx.R(2)
    ident = ctx.identity()
    total = (
        ident + r1 + r2 + r1 * r2 + r2 * r1 + r1 * r2 * r1
    )
    assert build_symmetrizer(ctx, "V") == total


def test_symmetrizer_suite_with_absorption_and_image_bound(diagonal):
    from qsl3.hecke import verify_symmetrizers

    for (k, l) in [(3, 0), (2, 2), (0, 3)]:
        rep = verify_symmetrizers(build_context(diagonal, k, l))
        assert rep.ok, rep.failures()


def test_side_argument_is_validated(diagonal):
    ctx = build_context(diagonal, 2, 1)
    with pytest.raises(ValueError):
        build_symmetrizer(ctx, "U")


def test_T_family_base_case_and_ranges(diagonal):
    ctx = build_context(diagonal, 2, 2)
    assert build_T(ctx, 0, 0) == ctx.X
    assert build_T(ctx, 1, 1) == ctx.Rstar(1) * ctx.X * ctx.R(1)
    with pytest.raises(IndexOutOfRange):
        build_T(ctx, 2, 0)
    with pytest.raises(IndexOutOfRange):
        build_T(ctx, 0, -1)
    ctx0 = build_context(diagonal, 2, 0)
    with pytest.raises(IndexOutOfRange):
        build_T(ctx0, 0, 0)


def test_U_vanishes_beyond_the_smaller_side(diagonal):
    ctx = build_context(diagonal, 2, 1)
    assert not build_U(ctx, 1).is_zero()
    assert build_U(ctx, 2).is_zero()
    with pytest.raises(IndexOutOfRange):
        build_U(ctx, 0)


def test_U_split_reassembles(diagonal):
    ctx = build_context(diagonal, 2, 2)
    for m in (1, 2):
        full = build_U(ctx, m)
        head = build_U(ctx, m, last_b_zero=True)
        tail = build_U(ctx, m, last_b_zero=False)
        assert head + tail == full


def test_T_relations_and_switch_identities(diagonal):
    for (k, l) in [(2, 1), (1, 2), (2, 2)]:
        ctx = build_context(diagonal, k, l)
        rep = verify_T_relations(ctx)
        assert rep.ok, rep.failures()
        rep = verify_switch_identities(ctx)
        assert rep.ok, rep.failures()


def test_T_relations_spot_check_deeper(classical):
    ctx = build_context(classical, 3, 2, bound=5)
    rep = verify_T_relations(ctx).merge(verify_switch_identities(ctx))
    assert rep.ok, rep.failures()


def test_projector_at_1_1_is_the_loop_complement(diagonal):
    ctx = build_context(diagonal, 1, 1)
    res = solve_P(ctx)
    kappa = diagonal.derived().kappa
    assert res.alphas == (parse_scalar("1"), -kappa.inv())
    assert res.P == ctx.identity() - ctx.X.scale(kappa.inv())
    assert res.rank == 8


def test_projector_on_a_pure_side_is_the_scaled_symmetrizer(diagonal):
    q = diagonal.q
    ctx = build_context(diagonal, 2, 0)
    res = solve_P(ctx)
    assert res.P == build_symmetrizer(ctx, "V").scale(qfact(2, q * q).inv())
    assert res.rank == 6
    ctx = build_context(diagonal, 0, 2)
    res = solve_P(ctx)
    lead = qfact(2, (q * q).inv())
    assert res.P == build_symmetrizer(ctx, "W").scale(lead.inv())
    assert res.rank == 6


def test_projector_ranks_match_the_weight_dimensions(diagonal):
    for (k, l) in [(2, 1), (1, 2), (2, 2), (3, 1)]:
        ctx = build_context(diagonal, k, l)
        res = solve_P(ctx)
        assert res.rank == expected_dim(k, l)
        assert res.alphas == alphas_by_recurrence(ctx)


def test_projector_properties_report(diagonal, classical):
    for L in (diagonal, classical):
        for (k, l) in [(1, 1), (2, 1), (2, 2)]:
            ctx = build_context(L, k, l)
            rep = verify_P_properties(ctx, solve_P(ctx))
            assert rep.ok, rep.failures()


def test_projector_is_flip_compatible(diagonal):
    from qsl3.bqd import dynkin_flip

    flipped = dynkin_flip(diagonal)
    ctx = build_context(flipped, 1, 2)
    res = solve_P(ctx)
    assert res.rank == expected_dim(1, 2)
    assert verify_P_properties(ctx, res).ok


def test_full_suite_on_an_exotic_case():
    L = instantiate("III'.a")
    for (k, l) in [(1, 1), (2, 1)]:
        ctx = build_context(L, k, l)
        assert verify_hecke_suite(ctx).ok
        res = solve_P(ctx)
        assert verify_P_properties(ctx, res).ok


def test_suite_in_symbolic_mode():
    L = instantiate("II.a", params={"q": "q", "beta": "3"}, mode="symbolic")
    ctx = build_context(L, 2, 1)
    assert verify_hecke_suite(ctx).ok
    res = solve_P(ctx)
    assert res.rank == expected_dim(2, 1)
    assert verify_P_properties(ctx, res).ok
    with pytest.raises(DegreeBoundExceeded):
        build_context(L, 3, 2)


def test_solver_rejects_a_loop_nothing_kills(diagonal):
    # synthetic: replace the loop by something no combination annihilates
    ctx = build_context(diagonal, 1, 1)
    fake = Mat(9, 9, ctx.mode)
    fake.set_entry(0, 0, parse_scalar("1"))
    fake.set_entry(1, 1, parse_scalar("2"))
    ctx.X = fake
    ctx._T.clear()
    with pytest.raises(NoSolution):
        solve_P(ctx)


def test_solver_reports_an_ambiguous_system(diagonal):
    # synthetic: a zero loop makes every combination a solution
    ctx = build_context(diagonal, 1, 1)
    ctx.X = Mat(9, 9, ctx.mode)
    ctx._T.clear()
    with pytest.raises(AmbiguousSolution):
        solve_P(ctx)


def test_nonvanishing_demo(classical, diagonal):
    for L in (classical, diagonal):
        rep = symmetrizer_nonvanishing_demo(L, 4)
        assert rep.ok, rep.failures()
    # the factorial chain at q = 2: 1 * 5 * 21
    q = diagonal.q
    assert qfact(3, q * q) == parse_scalar("105")
