from fractions import Fraction

import pytest

from coxeter_lab.acceptance import positive_real_roots
from coxeter_lab.characters import (
    CharPair,
    factor_by_search,
    factor_singular,
    phi_shadow_step,
    primary_standard,
    simplest_object,
    standard_character,
    standard_character_iterative,
    standard_object_for_root,
    support,
)
from coxeter_lab.coxeter import (
    REAL_ROOT,
    coxeter_t,
    root_classify,
    singularity,
    word,
)
from coxeter_lab.errors import (
    LeavesPositiveCone,
    NotApplicable,
    NotExtendedDynkin,
    NotInS0,
    NotSingular,
    UnknownVertex,
)
from coxeter_lab.graph_core import EVEN, ODD, bipartition, build_star, classify, opposite
from coxeter_lab.gvector import GVector

from conftest import path

F = Fraction
E7_ODD = {"arm_1_3": 1, "arm_2_3": 1, "arm_3_1": 2, "arm_1_1": 3, "arm_2_1": 3}
E7_EVEN = {"arm_1_2": 1, "arm_2_2": 1, "center": 2}


def vec(ctx, **vals):
    return GVector.from_mapping(ctx, vals, default=0)


@pytest.fixture(scope="module")
def e7():
    return bipartition(build_star((3, 3, 1)), seed=("center", EVEN))


@pytest.fixture(scope="module")
def e6():
    return bipartition(build_star((2, 2, 2)))


def family_stars(k):
    return [(1,) * (k + 4), (2,) * (k + 3), (3,) * (k + 2) + (1,), (5,) * (k + 1) + (2, 1)]


# -- primary and standard characters ------------------------------------------------

def test_primary_standard_e7(e7):
    data = primary_standard(e7)
    assert data.odd == vec(e7, **E7_ODD)
    assert data.even == vec(e7, **E7_EVEN)


def test_primary_family2_k1():
    ctx = bipartition(build_star((2, 2, 2, 2)), seed=("center", ODD))
    data = primary_standard(ctx)
    assert data.k == 1 and data.odd["center"] == 4
    assert all(data.odd[f"arm_{i}_2"] == 1 and data.even[f"arm_{i}_1"] == 1 for i in range(1, 5))


def test_primary_family4_k0_even_values():
    ctx = bipartition(build_star((5, 2, 1)), seed=("center", EVEN))
    even = primary_standard(ctx).even
    assert {v: even[v] for v in ("arm_1_4", "arm_2_2", "arm_1_2", "center")} == \
        {"arm_1_4": 1, "arm_2_2": 1, "arm_1_2": 2, "center": 3}


def test_primary_rejects_graphs_outside_scope():
    with pytest.raises(NotInS0):
        primary_standard(bipartition(build_star((3, 2, 2, 2))))
    with pytest.raises(NotInS0):
        primary_standard(bipartition(path("a", "b", "c")))


def test_standard_character_e7_examples(e7):
    r = F(4, 3)
    assert standard_character(e7, ODD, 2).vector == vec(
        e7, **E7_ODD, arm_1_2=r, arm_2_2=r, center=2 * r)
    assert standard_character(e7, ODD, 1).vector == vec(
        e7, **E7_ODD, arm_1_2=4, arm_2_2=4, center=8)
    assert standard_character(e7, ODD, 0).vector == primary_standard(e7).odd
    assert standard_character(e7, EVEN, 0).vector == primary_standard(e7).even


@pytest.mark.parametrize("k", [0, 1, 2])
def test_family2_middles_after_two_steps(k):
    ctx = bipartition(build_star((2,) * (k + 3)), seed=("center", ODD))
    got = standard_character_iterative(ctx, ODD, 2).vector
    assert got["arm_1_1"] == F(k + 4, k + 3)


@pytest.mark.parametrize("k", [0, 1])
@pytest.mark.parametrize("family", range(4))
def test_closed_form_matches_iteration(k, family):
    w = build_star(family_stars(k)[family])
    for ctx in (bipartition(w), bipartition(w).flipped()):
        for parity in (ODD, EVEN):
            for m in range(7):
                closed = standard_character(ctx, parity, m)
                assert closed.vector == standard_character_iterative(ctx, parity, m).vector
                assert min(v for v in closed.vector.values if v) == 1


def test_closed_form_on_d_tilde_with_odd_rank():
    from coxeter_lab.acceptance import d_tilde
    for n in (5, 6, 7):
        ctx = bipartition(d_tilde(n))
        for parity in (ODD, EVEN):
            for m in range(6):
                assert standard_character(ctx, parity, m).vector == \
                    standard_character_iterative(ctx, parity, m).vector


def test_index_zero_is_supported_on_one_class(e7):
    for parity in (ODD, EVEN):
        vals = standard_character(e7, parity, 0).vector
        assert {e7.parity[g] for g, x in vals.items() if x} == {parity}


# -- shadow steps -------------------------------------------------------------------

def test_phi_step_path_example():
    ctx = bipartition(path("a", "b", "c"))
    step = phi_shadow_step(CharPair(vec(ctx, b=1), vec(ctx, a=1, c=1)), ODD)
    assert step.d == vec(ctx, a=1, b=1, c=1)


def test_phi_step_leaves_cone_at_simplest_object(e7):
    with pytest.raises(LeavesPositiveCone):
        phi_shadow_step(simplest_object(e7, "center"), EVEN)


def test_phi_step_not_applicable():
    ctx = bipartition(path("a", "b", "c"))
    with pytest.raises(NotApplicable):
        phi_shadow_step(CharPair(vec(ctx, b=1), vec(ctx, a=1)), ODD)


def test_phi_step_twice_same_parity_restores_dimension(e6):
    u = classify(e6).u
    pair = CharPair(u + vec(e6, center=1), standard_character(e6, ODD, 1).vector)
    for parity in (ODD, EVEN):
        once = phi_shadow_step(pair, parity)
        assert phi_shadow_step(once, parity).d == pair.d


@pytest.mark.parametrize("arms", [(2, 2, 2), (3, 3, 1), (1, 1, 1, 1, 1), (2, 2, 2, 2)])
def test_standardness_closure_on_sincere_dimension(arms):
    ctx = bipartition(build_star(arms))
    d = GVector(ctx, tuple(F(3) for _ in range(ctx.n)))
    if classify(ctx).u is not None:
        d = classify(ctx).u
    known = {standard_character(ctx, p, i).vector for p in (ODD, EVEN) for i in range(8)}
    for parity in (ODD, EVEN):
        for j in range(1, 6):
            f = standard_character(ctx, parity, j).vector
            for step in (ODD, EVEN):
                try:
                    out = phi_shadow_step(CharPair(d, f), step)
                except LeavesPositiveCone:
                    continue
                assert out.f.min_normalized() in known


def test_dimension_law(e6):
    u = classify(e6).u
    pair = CharPair(u.scale(2), standard_character(e6, EVEN, 8).vector)
    for t in range(1, 7):
        pair = phi_shadow_step(pair, word(t)[-1])
        assert pair.d == coxeter_t(u.scale(2), t)


# -- simplest objects and factorization ---------------------------------------------

def test_simplest_object_examples(e7):
    obj = simplest_object(e7, "center")
    assert obj.d == vec(e7, center=1) and obj.f == vec(e7, **E7_ODD)
    ctx = bipartition(path("a", "b", "c"))
    obj = simplest_object(ctx, "b")
    assert obj.d.values == (0, 0, 1) and obj.f["b"] == 0 and obj.f["a"] > 0 < obj.f["c"]
    with pytest.raises(UnknownVertex):
        simplest_object(ctx, "z")


def test_simplest_object_defining_property(e6):
    for g in e6.numeration:
        obj = simplest_object(e6, g)
        assert obj.f[g] == 0 and all(obj.f[h] > 0 for h in e6.wood.neighbors(g))


def test_factor_examples(e7):
    for g in e7.numeration:
        fac = factor_singular(GVector.unit(e7, g))
        assert (fac.g, fac.m) == (g, 0)
    x = coxeter_t(GVector.unit(e7, "center"), 2)
    fac = factor_singular(x)
    assert (fac.g, fac.m) == ("center", 2)


def test_factor_errors(e7):
    with pytest.raises(NotSingular):
        factor_singular(classify(e7).u)
    wild = bipartition(build_star((2, 2, 2, 2)))
    with pytest.raises(NotExtendedDynkin):
        factor_singular(GVector.unit(wild, "center"))


def test_factorization_roundtrip_and_trajectory(e6):
    for x in positive_real_roots(e6, 6):
        if singularity(x).kind != "Singular":
            continue
        fac = factor_singular(x)
        assert coxeter_t(GVector.unit(e6, fac.g), fac.m) == x
        assert (fac.m >= 0) if e6.parity[fac.g] == EVEN else (fac.m <= 0)
        assert root_classify(x) == REAL_ROOT
        traj = fac.trajectory
        assert traj[0] == simplest_object(e6, fac.g) and traj[-1].d == x
        assert all(p.in_s_prime() for p in traj)
        steps = word(fac.m)
        for j in range(1, len(traj) - 1):
            # from index 1 on, the literal shadow step agrees with the standard
            # character on the new support, up to a positive factor
            out = phi_shadow_step(traj[j], steps[j])
            assert out.d == traj[j + 1].d
            sup = support(out.d)
            assert len({out.f[g] / traj[j + 1].f[g] for g in sup}) == 1


def test_factor_by_search_on_s0_star():
    ctx = bipartition(build_star((2, 2, 2, 2)))
    for g in ctx.numeration:
        for m in range(-4, 5):
            x = coxeter_t(GVector.unit(ctx, g), m)
            if not x.is_positive() or ((m > 0) != (ctx.parity[g] == EVEN) and m):
                continue
            fac = factor_by_search(x)
            assert (fac.g, fac.m) == (g, m)


def test_standard_object_examples(e7):
    pair = standard_object_for_root(GVector.unit(e7, "center"))
    assert pair.f == standard_character(e7, ODD, 0).vector
    x = coxeter_t(GVector.unit(e7, "center"), 1)
    pair = standard_object_for_root(x)
    assert pair.d == x and pair.f == standard_character(e7, ODD, 1).vector
    assert pair.in_s_prime()


def test_standard_objects_on_s0_star():
    ctx = bipartition(build_star((2, 2, 2, 2)))
    x = coxeter_t(GVector.unit(ctx, "arm_1_1"), 3)
    pair = standard_object_for_root(x)
    g_parity = ctx.parity["arm_1_1"]
    assert pair.f == standard_character(ctx, opposite(g_parity), 3).vector


def test_s_prime_predicates():
    ctx = bipartition(path("a", "b", "c"))
    pair = CharPair(vec(ctx, b=1), vec(ctx, a=1, c=1))
    assert pair.in_s_prime() and pair.in_rep(ODD) and not pair.in_rep(EVEN)
    assert pair.in_s_prime_parity(ODD) and not pair.in_s_prime_parity(EVEN)
