"""Fans: validated collections of pointed cones closed under faces.

Construction checks the three fan axioms exactly (pointedness, face closure,
pairwise intersections being common faces). Completeness is decided by the
wall criterion: every codimension-one face of a maximal cone must separate
exactly two maximal cones and the adjacency graph must be connected. Builtin
constructors supply the projective-space fans, their products, and the
Hirzebruch surfaces used as negative controls.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations

from .cone import Cone, cone_from_rays
from .errors import (
    DependentRows,
    DuplicateRay,
    HypothesisViolated,
    IntersectionNotFace,
    InvalidParameter,
    NotPointed,
    NotSaturated,
    RedundantRay,
    ShapeMismatch,
)
from .linalg import (
    Matrix,
    Vector,
    dot,
    in_span,
    lattice_coordinates,
    primitive,
    rank,
    saturation_basis,
    saturation_index,
)


@dataclass(frozen=True)
class Subspace:
    """A saturated sublattice of Z^n, presented by independent basis rows."""

    basis: Matrix
    ambient_rank: int

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.basis)
        object.__setattr__(self, "basis", rows)
        if any(len(r) != self.ambient_rank for r in rows):
            raise ShapeMismatch("basis rows must have the ambient length")
        if rows:
            if rank(rows) != len(rows):
                raise DependentRows("subspace basis rows are dependent")
            if saturation_index(rows) != 1:
                raise NotSaturated(f"basis {rows} spans a non-saturated lattice")

    @classmethod
    def spanned_by(cls, vectors, ambient_rank: int | None = None) -> "Subspace":
        """The saturated span of the given integer vectors."""
        vecs = [tuple(v) for v in vectors]
        if ambient_rank is None:
            if not vecs:
                raise ShapeMismatch("cannot infer the ambient rank")
            ambient_rank = len(vecs[0])
        return cls(saturation_basis(vecs), ambient_rank)

    @property
    def dim(self) -> int:
        return len(self.basis)


class Fan:
    """A validated fan, stored by its maximal cones.

    Use `fan_new` to build one; the constructor itself trusts its input.
    All queries are pure, and instances are immutable and hashable.
    """

    __slots__ = ("ambient_rank", "maximal_cones", "_cones", "_skeleton", "_complete")

    def __init__(self, ambient_rank: int, maximal_cones: tuple[Cone, ...]):
        self.ambient_rank = ambient_rank
        self.maximal_cones = tuple(sorted(maximal_cones, key=lambda c: c.rays))
        self._cones = None
        self._skeleton = None
        self._complete = None

    @property
    def skeleton(self) -> tuple[Vector, ...]:
        """The primitive generators of the 1-dimensional cones."""
        if self._skeleton is None:
            seen = set()
            for c in self.maximal_cones:
                seen.update(c.rays)
            self._skeleton = tuple(sorted(seen))
        return self._skeleton

    def cones(self) -> frozenset[Cone]:
        """All cones of the fan: the closure of the maximal cones under faces."""
        if self._cones is None:
            everything = set()
            for c in self.maximal_cones:
                everything |= c.faces()
            self._cones = frozenset(everything)
        return self._cones

    def contains(self, point) -> bool:
        """Is the point in the support of the fan?"""
        return any(c.contains(point) for c in self.maximal_cones)

    def is_complete(self) -> bool:
        """Wall criterion: true iff the support is the whole space.

        A rank-0 fan is complete. Otherwise every maximal cone must be
        full-dimensional, every wall (codimension-one face of a maximal
        cone) must lie in exactly two maximal cones, and the wall-adjacency
        graph on maximal cones must be connected.
        """
        if self._complete is None:
            self._complete = self._wall_criterion()
        return self._complete

    def _wall_criterion(self) -> bool:
        n = self.ambient_rank
        if n == 0:
            return True
        if any(c.dim < n for c in self.maximal_cones):
            return False
        walls: dict[frozenset, list[int]] = {}
        for i, c in enumerate(self.maximal_cones):
            for u in c.facet_normals:
                key = frozenset(r for r in c.rays if dot(r, u) == 0)
                walls.setdefault(key, []).append(i)
        if any(len(owners) != 2 for owners in walls.values()):
            return False
        adjacency: dict[int, set[int]] = {i: set() for i in range(len(self.maximal_cones))}
        for a, b in walls.values():
            adjacency[a].add(b)
            adjacency[b].add(a)
        seen = {0}
        queue = [0]
        while queue:
            for nb in adjacency[queue.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        return len(seen) == len(self.maximal_cones)

    def restrict(self, subspace: Subspace) -> "Fan":
        """The fan sliced by a subspace, rewritten in the subspace basis.

        Requires the skeleton to split: the rays outside the subspace must
        span a complement (their span must meet the subspace only in 0).
        Each cone then meets the subspace in the cone generated by its rays
        that lie inside, so the sliced fan is a fan again.
        """
        if subspace.ambient_rank != self.ambient_rank:
            raise ShapeMismatch("subspace and fan live in different ranks")
        basis = subspace.basis
        inside = [r for r in self.skeleton if in_span(r, basis)]
        outside = [r for r in self.skeleton if r not in set(inside)]
        if outside and rank(tuple(basis) + tuple(outside)) != len(basis) + rank(outside):
            raise HypothesisViolated(
                "the rays outside the subspace do not span a complement; "
                f"offenders include {outside}"
            )
        coords = {r: lattice_coordinates(r, basis) for r in inside}
        new_rays = sorted(coords.values())
        index = {v: i for i, v in enumerate(new_rays)}
        inside_set = set(inside)
        cone_lists = {
            tuple(sorted(index[coords[r]] for r in c.rays if r in inside_set))
            for c in self.maximal_cones
        }
        return fan_new(subspace.dim, new_rays, sorted(cone_lists))

    def __eq__(self, other):
        if not isinstance(other, Fan):
            return NotImplemented
        return (
            self.ambient_rank == other.ambient_rank
            and self.maximal_cones == other.maximal_cones
        )

    def __hash__(self):
        return hash((self.ambient_rank, self.maximal_cones))

    def __repr__(self):
        return (
            f"Fan(rank={self.ambient_rank}, rays={len(self.skeleton)}, "
            f"maximal_cones={len(self.maximal_cones)})"
        )


def _axiom3_holds(a: Cone, b: Cone) -> bool:
    """Is the intersection of the two cones a common face?

    Fast path: sum the facet normals of one cone that are nonpositive on the
    other. That sum supports both cones, and if it cuts exactly the common
    rays out of each, the intersection is the common-ray face. Falls back to
    the exact double description intersection when the certificate misses.
    """
    common = set(a.rays) & set(b.rays)
    for first, second in ((a, b), (b, a)):
        supporting = [
            u for u in first.facet_normals if all(dot(r, u) <= 0 for r in second.rays)
        ]
        if not supporting:
            continue
        star = tuple(map(sum, zip(*supporting)))
        cut_first = {r for r in first.rays if dot(r, star) == 0}
        cut_second = {r for r in second.rays if dot(r, star) == 0}
        if cut_first == common and cut_second == common:
            return True
    meet = a.intersect(b)
    return meet.is_face_of(a) and meet.is_face_of(b)


def fan_new(rank_: int, rays, maximal_cones) -> Fan:
    """Validate and build a fan from declared rays and ray-index sets.

    The declared rays must be exactly the skeleton: every one primitive (up
    to scaling, which is normalized away), no duplicates, and each extreme in
    at least one declared cone. The three fan axioms are verified; axiom 3 is
    checked pairwise over maximal cones, which suffices because faces of
    compatible cones are compatible.
    """
    if not isinstance(rank_, int) or rank_ < 0:
        raise InvalidParameter(f"ambient rank must be a nonnegative integer, got {rank_!r}")
    declared: list[Vector] = []
    first_at: dict[Vector, int] = {}
    for i, r in enumerate(rays):
        v = tuple(r)
        if len(v) != rank_:
            raise ShapeMismatch(f"ray {i} has length {len(v)}, expected {rank_}")
        p = primitive(v)
        if p in first_at:
            raise DuplicateRay(f"rays {first_at[p]} and {i} generate the same ray {p}")
        first_at[p] = i
        declared.append(p)

    built: list[Cone] = []
    for ci, idxs in enumerate(maximal_cones):
        members = sorted(set(idxs))
        for i in members:
            if not isinstance(i, int) or not 0 <= i < len(declared):
                raise InvalidParameter(f"cone {ci} references ray index {i!r}")
        try:
            built.append(cone_from_rays([declared[i] for i in members], rank_))
        except NotPointed as exc:
            raise NotPointed(f"maximal cone {ci}: {exc}") from exc
    if not built:
        built = [cone_from_rays((), rank_)]

    used = set()
    for c in built:
        used.update(c.rays)
    for p in declared:
        if p not in used:
            raise RedundantRay(f"declared ray {p} is not extreme in any declared cone")

    unique = sorted(set(built), key=lambda c: c.rays)
    maximal = [
        c for c in unique if not any(c is not d and c.is_face_of(d) for d in unique)
    ]
    for a, b in combinations(maximal, 2):
        if not _axiom3_holds(a, b):
            raise IntersectionNotFace(
                f"cones with rays {list(a.rays)} and {list(b.rays)} do not meet in a common face"
            )
    return Fan(rank_, tuple(maximal))


def direct_sum(f: Fan, g: Fan) -> Fan:
    """The fan whose cones are all sums of a cone of f and a cone of g.

    Lives in the concatenated coordinates; the skeleton is the disjoint
    union of the embedded skeletons, and the sum is complete exactly when
    both summands are.
    """
    nf, ng = f.ambient_rank, g.ambient_rank
    zf, zg = (0,) * nf, (0,) * ng
    rays = [r + zg for r in f.skeleton] + [zf + s for s in g.skeleton]
    f_index = {r: i for i, r in enumerate(f.skeleton)}
    g_index = {s: len(f.skeleton) + j for j, s in enumerate(g.skeleton)}
    cone_lists = []
    for cf in f.maximal_cones:
        for cg in g.maximal_cones:
            cone_lists.append([f_index[r] for r in cf.rays] + [g_index[s] for s in cg.rays])
    return fan_new(nf + ng, rays, cone_lists)


def projective_space_fan(n: int) -> Fan:
    """The complete fan with rays e_1, ..., e_n and -(e_1 + ... + e_n),
    whose maximal cones are all n-element subsets of the rays."""
    if not isinstance(n, int) or n < 1:
        raise InvalidParameter(f"projective space dimension must be a positive integer, got {n!r}")
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays.append((-1,) * n)
    cones = [list(sub) for sub in combinations(range(n + 1), n)]
    return fan_new(n, rays, cones)


def product_fan(dims) -> Fan:
    """Iterated direct sum of projective-space fans."""
    dims = list(dims)
    if not dims:
        raise InvalidParameter("product_fan needs at least one factor")
    return reduce(direct_sum, (projective_space_fan(d) for d in dims))


def hirzebruch_fan(a: int) -> Fan:
    """The complete rank-2 fan with rays (1,0), (0,1), (0,-1), (-1,a).

    For a >= 1 its root set is asymmetric, which makes it the standard
    negative control for semisimplicity.
    """
    if not isinstance(a, int) or a < 0:
        raise InvalidParameter(f"hirzebruch parameter must be a nonnegative integer, got {a!r}")
    rays = [(1, 0), (0, 1), (0, -1), (-1, a)]
    cones = [[0, 1], [1, 3], [3, 2], [2, 0]]
    return fan_new(2, rays, cones)


def zero_fan(ambient_rank: int) -> Fan:
    """The fan consisting of the zero cone only."""
    return fan_new(ambient_rank, [], [])
