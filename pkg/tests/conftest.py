"""Shared fixture fans for the test suite."""

from itertools import product

from torfact.fan import (
    Fan,
    direct_sum,
    fan_new,
    hirzebruch_fan,
    product_fan,
    projective_space_fan,
    zero_fan,
)


def cube_fan() -> Fan:
    """Face fan of the cube: 8 vertex rays, 6 non-simplicial maximal cones."""
    rays = sorted(product((-1, 1), repeat=3))
    index = {r: i for i, r in enumerate(rays)}
    cones = []
    for axis in range(3):
        for sign in (-1, 1):
            cones.append([index[r] for r in rays if r[axis] == sign])
    return fan_new(3, rays, cones)


def split_cube_fan() -> Fan:
    """The cube face fan with every square cone split along a diagonal.

    Same skeleton as cube_fan but 12 simplicial maximal cones; the diagonals
    all pass through (1,1,1) or (-1,-1,-1), which keeps the pieces compatible.
    """
    rays = sorted(product((-1, 1), repeat=3))
    index = {r: i for i, r in enumerate(rays)}
    cones = []
    for axis in range(3):
        for sign in (-1, 1):
            face = [r for r in rays if r[axis] == sign]
            corner = max(face) if sign == 1 else min(face)
            opposite = tuple(-x if i != axis else x for i, x in enumerate(corner))
            others = [r for r in face if r not in (corner, opposite)]
            for third in others:
                cones.append([index[corner], index[opposite], index[third]])
    return fan_new(3, rays, cones)


def builtin_complete_fans() -> list[Fan]:
    fans = [projective_space_fan(n) for n in (1, 2, 3, 4)]
    fans += [product_fan(d) for d in ([1, 1], [1, 2], [2, 2], [1, 1, 1], [1, 3])]
    fans += [hirzebruch_fan(a) for a in (0, 1, 2, 3)]
    fans.append(zero_fan(0))
    return fans


def incomplete_fixture_fans() -> list[Fan]:
    """Twenty valid but incomplete fans across ranks 1 to 4."""
    e = lambda n, i: tuple(int(k == i) for k in range(n))
    fans = [
        fan_new(1, [(1,)], [[0]]),
        fan_new(1, [], []),
        fan_new(2, [(1, 0), (0, 1)], [[0, 1]]),
        fan_new(2, [(1, 0), (0, 1)], [[0], [1]]),
        fan_new(2, [(1, 0), (0, 1), (-1, 0), (0, -1)], [[0, 1], [1, 2], [2, 3]]),
        fan_new(2, [(1, 0), (0, 1), (1, 1)], [[0, 2], [1, 2]]),
        fan_new(2, [(1, 0), (0, 1), (-1, -1)], [[0, 1], [1, 2]]),
        fan_new(2, [], []),
        fan_new(2, [(1, 1)], [[0]]),
        fan_new(2, [(1, 0), (0, 1), (-1, 0)], [[0, 1], [1, 2]]),
        fan_new(2, [(1, 0), (0, 1), (-1, 0), (0, -1)], [[0, 1], [2, 3]]),
        fan_new(2, [(1, 0), (0, 1), (0, -1), (-1, 1)], [[0, 1], [1, 3], [2, 0]]),
        fan_new(3, [e(3, 0), e(3, 1), e(3, 2)], [[0, 1, 2]]),
        fan_new(3, [e(3, 0), e(3, 1), e(3, 2), (-1, -1, -1)], [[0, 1, 2], [0, 1, 3], [0, 2, 3]]),
        fan_new(3, [(1, 0, 0), (0, 1, 0), (-1, -1, 0)], [[0, 1], [1, 2], [2, 0]]),
        fan_new(
            3,
            [(1, 0, 0), (0, 1, 0), (-1, 0, 0), (0, -1, 0), (0, 0, 1)],
            [[0, 1, 4], [1, 2, 4], [2, 3, 4], [3, 0, 4]],
        ),
        direct_sum(product_fan([1, 1]), fan_new(1, [(1,)], [[0]])),
        fan_new(4, [e(4, 0), e(4, 1), e(4, 2), e(4, 3)], [[0, 1, 2, 3]]),
        fan_new(
            4,
            [e(4, 0), e(4, 1), e(4, 2), e(4, 3), (-1, -1, -1, -1)],
            [[0, 1, 2, 3], [0, 1, 2, 4], [0, 1, 3, 4], [0, 2, 3, 4]],
        ),
        fan_new(3, [(1, 0, 0), (-1, 0, 0), (0, 1, 0)], [[0, 2], [1, 2]]),
    ]
    assert len(fans) == 20
    return fans
