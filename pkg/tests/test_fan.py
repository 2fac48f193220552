import random
from fractions import Fraction

import pytest

from conftest import builtin_complete_fans, cube_fan, incomplete_fixture_fans, split_cube_fan
from torfact.cone import cone_from_rays
from torfact.errors import (
    DuplicateRay,
    HypothesisViolated,
    IntersectionNotFace,
    InvalidParameter,
    NotPointed,
    NotSaturated,
    RedundantRay,
    ShapeMismatch,
)
from torfact.fan import (
    Subspace,
    direct_sum,
    fan_new,
    hirzebruch_fan,
    product_fan,
    projective_space_fan,
    zero_fan,
)
from torfact.linalg import in_span


def rng(seed=0):
    return random.Random(0xFA4 + seed)


def support_contains(fan, point):
    return any(c.contains(point) for c in fan.maximal_cones)


def monte_carlo_complete(fan, samples, r, radius=10):
    """One-sided completeness oracle: a sampled point outside every cone
    certifies incompleteness."""
    for _ in range(samples):
        point = tuple(
            Fraction(r.randint(-radius * 4, radius * 4), 4) for _ in range(fan.ambient_rank)
        )
        if not support_contains(fan, point):
            return False
    return True


# ------------------------------------------------------------------ fan_new

def test_p2_fixture():
    fan = fan_new(2, [(1, 0), (0, 1), (-1, -1)], [[0, 1], [1, 2], [2, 0]])
    assert fan == projective_space_fan(2)
    assert fan.is_complete()


def test_subdivided_quadrant_is_valid():
    fan = fan_new(2, [(1, 0), (0, 1), (1, 1)], [[0, 2], [1, 2]])
    assert len(fan.maximal_cones) == 2
    assert fan.skeleton == ((0, 1), (1, 0), (1, 1))


def test_overlapping_cones_rejected():
    with pytest.raises(IntersectionNotFace):
        fan_new(2, [(1, 0), (0, 1), (1, 1)], [[0, 1], [1, 2]])


def test_duplicate_ray_rejected():
    with pytest.raises(DuplicateRay):
        fan_new(2, [(1, 0), (2, 0)], [[0], [1]])


def test_redundant_ray_rejected():
    # (1, 1) is interior to the only declared cone
    with pytest.raises(RedundantRay):
        fan_new(2, [(1, 0), (0, 1), (1, 1)], [[0, 1, 2]])
    # never listed at all
    with pytest.raises(RedundantRay):
        fan_new(2, [(1, 0), (0, 1)], [[0]])


def test_not_pointed_rejected():
    with pytest.raises(NotPointed):
        fan_new(2, [(1, 0), (-1, 0)], [[0, 1]])


def test_bad_index_rejected():
    with pytest.raises(InvalidParameter):
        fan_new(2, [(1, 0)], [[0, 3]])


def test_declared_faces_are_normalized_away():
    plain = fan_new(2, [(1, 0), (0, 1), (-1, -1)], [[0, 1], [1, 2], [2, 0]])
    padded = fan_new(2, [(1, 0), (0, 1), (-1, -1)], [[0, 1], [1, 2], [2, 0], [0], [1, 2]])
    assert plain == padded


def test_fan_closure_counts():
    p2 = projective_space_fan(2)
    assert len(p2.cones()) == 7
    p3 = projective_space_fan(3)
    assert len(p3.cones()) == 15  # 1 + 4 + 6 + 4 maximal


# -------------------------------------------------------------- completeness

def test_is_complete_examples():
    assert projective_space_fan(2).is_complete()
    assert not fan_new(2, [(1, 0), (0, 1)], [[0, 1]]).is_complete()
    assert not fan_new(2, [(1, 0), (0, 1)], [[0], [1]]).is_complete()


def test_zero_fan_conventions():
    assert zero_fan(0).is_complete()
    assert not zero_fan(1).is_complete()
    assert not zero_fan(3).is_complete()
    assert zero_fan(2).skeleton == ()


def test_builtin_fans_complete():
    for fan in builtin_complete_fans():
        assert fan.is_complete()


def test_incomplete_fixtures_are_incomplete():
    for fan in incomplete_fixture_fans():
        assert not fan.is_complete()


def test_completeness_matches_monte_carlo_sample():
    r = rng(1)
    for fan in builtin_complete_fans()[:8] + incomplete_fixture_fans()[:8]:
        if fan.ambient_rank == 0:
            continue
        assert fan.is_complete() == monte_carlo_complete(fan, 150, r)


def test_min_ray_count_for_complete_fans():
    # every complete fan needs more rays than the rank
    for fan in builtin_complete_fans() + [cube_fan(), split_cube_fan()]:
        if fan.ambient_rank > 0:
            assert len(fan.skeleton) > fan.ambient_rank


def test_complete_fans_do_not_extend():
    # a complete fan admits no strictly larger fan: adding any cone breaks
    # the axioms or adds nothing new
    p2 = projective_space_fan(2)
    with pytest.raises((IntersectionNotFace, NotPointed)):
        fan_new(
            2,
            [(1, 0), (0, 1), (-1, -1), (1, 1)],
            [[0, 1], [1, 2], [2, 0], [3]],
        )
    p1 = projective_space_fan(1)
    with pytest.raises((IntersectionNotFace, NotPointed, DuplicateRay)):
        fan_new(1, [(1,), (-1,), (2,)], [[0], [1], [2]])


# ------------------------------------------------------------------ skeleton

def test_skeleton_examples():
    assert projective_space_fan(2).skeleton == ((-1, -1), (0, 1), (1, 0))
    assert zero_fan(3).skeleton == ()
    assert product_fan([1, 1]).skeleton == ((-1, 0), (0, -1), (0, 1), (1, 0))


# ------------------------------------------------------------------ restrict

def test_restrict_product_factor():
    p11 = product_fan([1, 1])
    restricted = p11.restrict(Subspace(((1, 0),), 2))
    assert restricted == projective_space_fan(1)


def test_restrict_second_factor_of_p1_x_p2():
    fan = product_fan([1, 2])
    restricted = fan.restrict(Subspace(((0, 1, 0), (0, 0, 1)), 3))
    assert restricted == projective_space_fan(2)


def test_restrict_irreducible_fan_fails():
    with pytest.raises(HypothesisViolated):
        projective_space_fan(2).restrict(Subspace(((1, 0),), 2))


def test_restricted_cones_are_faces():
    # every cone meets a compatible subspace in one of its faces
    fan = product_fan([1, 2])
    v_rays = [r for r in fan.skeleton if r[0] != 0]
    for c in fan.maximal_cones:
        piece = cone_from_rays([r for r in c.rays if r in v_rays] or (), 3)
        assert piece.is_face_of(c)


def test_subspace_validation():
    with pytest.raises(NotSaturated):
        Subspace(((2, 0),), 2)
    with pytest.raises(ShapeMismatch):
        Subspace(((1, 0, 0),), 2)
    sub = Subspace.spanned_by([(2, 0), (0, 3)])
    assert sub.basis == ((1, 0), (0, 1))


# ---------------------------------------------------------------- direct sum

def test_direct_sum_of_lines():
    fan = direct_sum(projective_space_fan(1), projective_space_fan(1))
    assert len(fan.skeleton) == 4
    assert len(fan.maximal_cones) == 4
    assert fan.is_complete()


def test_direct_sum_zero_identity():
    p1 = projective_space_fan(1)
    assert direct_sum(p1, zero_fan(0)) == p1
    assert direct_sum(zero_fan(0), p1) == p1


def test_direct_sum_counts():
    fan = direct_sum(projective_space_fan(1), projective_space_fan(2))
    assert len(fan.skeleton) == 5
    assert len(fan.maximal_cones) == 6


def test_direct_sum_associative():
    a, b, c = projective_space_fan(1), projective_space_fan(2), hirzebruch_fan(1)
    assert direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c))


def test_direct_sum_skeleton_additive():
    r = rng(2)
    fans = builtin_complete_fans()
    for _ in range(10):
        f, g = r.choice(fans), r.choice(fans)
        s = direct_sum(f, g)
        assert len(s.skeleton) == len(f.skeleton) + len(g.skeleton)
        assert s.is_complete() == (f.is_complete() and g.is_complete())


def test_direct_sum_of_incomplete_is_incomplete():
    quadrant = fan_new(2, [(1, 0), (0, 1)], [[0, 1]])
    s = direct_sum(quadrant, projective_space_fan(1))
    assert not s.is_complete()


def test_restrict_then_sum_reproduces_product():
    fan = product_fan([1, 2])
    v = Subspace(((1, 0, 0),), 3)
    w = Subspace(((0, 1, 0), (0, 0, 1)), 3)
    left, right = fan.restrict(v), fan.restrict(w)
    assert left.is_complete() and right.is_complete()
    assert direct_sum(left, right) == fan


# ------------------------------------------------------------------ builtins

def test_projective_space_fan_small():
    p1 = projective_space_fan(1)
    assert p1.skeleton == ((-1,), (1,))
    p3 = projective_space_fan(3)
    assert len(p3.skeleton) == 4 and len(p3.maximal_cones) == 4
    with pytest.raises(InvalidParameter):
        projective_space_fan(0)


def test_hirzebruch_zero_is_product_of_lines():
    assert hirzebruch_fan(0) == product_fan([1, 1])
    with pytest.raises(InvalidParameter):
        hirzebruch_fan(-1)


def test_hirzebruch_fans_complete_and_irreducible():
    for a in (1, 2, 3):
        fan = hirzebruch_fan(a)
        assert fan.is_complete()
        assert fan.skeleton == tuple(sorted([(1, 0), (0, 1), (0, -1), (-1, a)]))


def test_product_fan_needs_factors():
    with pytest.raises(InvalidParameter):
        product_fan([])
