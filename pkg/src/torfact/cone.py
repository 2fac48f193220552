"""Pointed rational polyhedral cones with dual descriptions.

A cone is identified by its set of primitive extreme rays; the inequality
side (inward facet normals plus the hyperplanes cutting out the linear span)
is computed exactly by the double description method in `dual_extreme_rays`.
Both conversion directions go through that single routine.
"""

from __future__ import annotations

from itertools import combinations

from .errors import NotPointed, ShapeMismatch
from .linalg import (
    Matrix,
    Vector,
    clear_denominators,
    dot,
    identity_rows,
    integer_kernel,
    is_zero,
    negated,
    primitive,
    rank,
    saturation_basis,
    solve_rational,
)


def _pointed_dual_rays(normals: list[Vector], m: int) -> tuple[Vector, ...]:
    """Extreme rays of {y in R^m : <y, a> >= 0 for all a}, where the normals
    have full rank m (the cone is then pointed).

    Classic incremental double description: start from a simplicial cone cut
    by m independent normals, then insert the remaining constraints one at a
    time. Two rays are combined only when adjacent, decided by the exact rank
    test on the constraints tight at both (rank == m - 2).
    """
    if m == 0:
        return ()
    base_idx: list[int] = []
    chosen: list[Vector] = []
    for i, a in enumerate(normals):
        if rank(chosen + [a]) > len(chosen):
            chosen.append(a)
            base_idx.append(i)
            if len(chosen) == m:
                break

    rays: list[Vector] = []
    for j in range(m):
        unit = tuple(int(t == j) for t in range(m))
        sol = solve_rational(chosen, unit)
        rays.append(clear_denominators(sol.particular))

    processed: list[Vector] = list(chosen)
    base_set = set(base_idx)
    for i, a in enumerate(normals):
        if i in base_set:
            continue
        vals = {r: dot(r, a) for r in rays}
        if all(v >= 0 for v in vals.values()):
            processed.append(a)
            continue
        keep = [r for r in rays if vals[r] >= 0]
        new: list[Vector] = []
        if m >= 2:
            pos = [r for r in rays if vals[r] > 0]
            neg = [r for r in rays if vals[r] < 0]
            for rp in pos:
                tight_p = [c for c in processed if dot(rp, c) == 0]
                for rm in neg:
                    common = [c for c in tight_p if dot(rm, c) == 0]
                    if rank(common) == m - 2:
                        w = tuple(vals[rp] * y - vals[rm] * x for x, y in zip(rp, rm))
                        new.append(primitive(w))
        rays = list(dict.fromkeys(keep + new))
        processed.append(a)
    return tuple(sorted(rays))


def dual_extreme_rays(normals, n: int) -> tuple[Matrix, tuple[Vector, ...]]:
    """Generators of C = {x in R^n : <x, a> >= 0 for every a in normals}.

    Returns (lineality_basis, rays) with C = span(lineality) + cone(rays);
    the rays are primitive and extreme modulo the lineality space, and they
    all lie in the rational span of the normals.
    """
    live = [tuple(a) for a in normals if not is_zero(a)]
    if any(len(a) != n for a in live):
        raise ShapeMismatch("normals must live in the ambient space")
    if not live:
        return identity_rows(n), ()
    lineality = integer_kernel(live)
    sat = saturation_basis(live)
    m = len(sat)
    reduced = [tuple(dot(s, a) for s in sat) for a in live]
    lifted = []
    for y in _pointed_dual_rays(reduced, m):
        x = tuple(sum(y[i] * sat[i][k] for i in range(m)) for k in range(n))
        lifted.append(primitive(x))
    return lineality, tuple(sorted(lifted))


def halfspace_generators(ineqs, eqs, n: int) -> tuple[Matrix, tuple[Vector, ...]]:
    """Generators of {x : <x,a> >= 0 for a in ineqs, <x,e> = 0 for e in eqs}."""
    aug = list(ineqs)
    for e in eqs:
        aug.append(tuple(e))
        aug.append(negated(e))
    return dual_extreme_rays(aug, n)


def _simplicial_facets(rays: tuple[Vector, ...], n: int, span_eqs: Matrix) -> tuple[Vector, ...]:
    # Facet normals of a simplicial cone: for each ray, the direction in the
    # span vanishing on all the other rays, oriented inward.
    facets = []
    for j, r in enumerate(rays):
        rows = list(rays[:j] + rays[j + 1:]) + list(span_eqs)
        if rows:
            u = integer_kernel(rows)[0]
        else:
            u = (1,)  # single ray in rank 1
        facets.append(u if dot(u, r) > 0 else negated(u))
    return tuple(sorted(facets))


class Cone:
    """A pointed rational polyhedral cone.

    `rays` are the primitive extreme rays (the V-description); the
    H-description is the pair `facet_normals` (inward inequalities lying in
    the span) and `span_equations` (hyperplanes cutting out the span).
    Instances are immutable; equality and hashing compare the ray sets, which
    identify pointed cones uniquely. Build cones with `cone_from_rays`.
    """

    __slots__ = ("ambient_rank", "rays", "dim", "_facet_normals", "_span_equations", "_faces")

    def __init__(self, ambient_rank, rays, facet_normals=None, span_equations=None):
        self.ambient_rank = ambient_rank
        self.rays = tuple(sorted(tuple(r) for r in rays))
        self.dim = rank(self.rays)
        self._facet_normals = facet_normals
        self._span_equations = span_equations
        self._faces = None

    @property
    def facet_normals(self) -> tuple[Vector, ...]:
        if self._facet_normals is None:
            self._compute_dual()
        return self._facet_normals

    @property
    def span_equations(self) -> Matrix:
        if self._span_equations is None:
            self._compute_dual()
        return self._span_equations

    def _compute_dual(self):
        if not self.rays:
            self._facet_normals = ()
            self._span_equations = identity_rows(self.ambient_rank)
        elif self.is_simplicial:
            span_eqs = integer_kernel(self.rays) if self.dim < self.ambient_rank else ()
            self._span_equations = span_eqs
            self._facet_normals = _simplicial_facets(self.rays, self.ambient_rank, span_eqs)
        else:
            lineality, facets = dual_extreme_rays(self.rays, self.ambient_rank)
            self._span_equations = lineality
            self._facet_normals = facets

    @property
    def is_simplicial(self) -> bool:
        return len(self.rays) == self.dim

    def contains(self, point) -> bool:
        """Exact membership test; accepts integer or Fraction coordinates."""
        if len(point) != self.ambient_rank:
            raise ShapeMismatch("point and cone live in different ranks")
        return all(dot(point, u) >= 0 for u in self.facet_normals) and all(
            dot(point, w) == 0 for w in self.span_equations
        )

    def faces(self) -> frozenset["Cone"]:
        """All faces, from the zero cone up to the cone itself.

        Every face is the intersection of facets, so the closure under
        cutting with facet normals reaches all of them; for a simplicial
        cone the faces are simply all subsets of the rays.
        """
        if self._faces is None:
            found: dict[tuple, Cone] = {self.rays: self}
            if self.is_simplicial:
                for k in range(len(self.rays)):
                    for sub in combinations(self.rays, k):
                        found.setdefault(sub, Cone(self.ambient_rank, sub))
            else:
                frontier = [self]
                while frontier:
                    f = frontier.pop()
                    for u in self.facet_normals:
                        cut = tuple(r for r in f.rays if dot(r, u) == 0)
                        if cut not in found:
                            c = Cone(self.ambient_rank, cut)
                            found[cut] = c
                            frontier.append(c)
            self._faces = frozenset(found.values())
        return self._faces

    def is_face_of(self, other: "Cone") -> bool:
        """Supporting-normal saturation test for the face relation."""
        if self.ambient_rank != other.ambient_rank:
            raise ShapeMismatch("cones live in different ranks")
        if not self.rays:
            return True
        mine = set(self.rays)
        if not mine <= set(other.rays):
            return False
        tight = [u for u in other.facet_normals if all(dot(r, u) == 0 for r in self.rays)]
        hull = {r for r in other.rays if all(dot(r, u) == 0 for u in tight)}
        return hull == mine

    def intersect(self, other: "Cone") -> "Cone":
        """The cone cut out by the union of the two H-descriptions."""
        if self.ambient_rank != other.ambient_rank:
            raise ShapeMismatch("cones live in different ranks")
        lineality, rays = halfspace_generators(
            self.facet_normals + other.facet_normals,
            self.span_equations + other.span_equations,
            self.ambient_rank,
        )
        assert not lineality, "intersection of pointed cones grew a line"
        return Cone(self.ambient_rank, rays)

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return self.ambient_rank == other.ambient_rank and self.rays == other.rays

    def __hash__(self):
        return hash((self.ambient_rank, self.rays))

    def __repr__(self):
        return f"Cone(rank={self.ambient_rank}, rays={[list(r) for r in self.rays]})"


def cone_from_rays(rays, ambient_rank: int | None = None) -> Cone:
    """Build the pointed cone generated by the given vectors.

    Generators may repeat, be non-primitive or lie inside the hull of the
    others; the result keeps only the primitive extreme rays and carries the
    exact facet description. Raises NotPointed when the generated cone
    contains a line and ZeroVector when a generator is zero.
    """
    ray_list = [tuple(r) for r in rays]
    if ray_list:
        n = len(ray_list[0]) if ambient_rank is None else ambient_rank
        if any(len(r) != n for r in ray_list):
            raise ShapeMismatch("rays of mixed lengths")
    else:
        if ambient_rank is None:
            raise ShapeMismatch("the zero cone needs an explicit ambient rank")
        n = ambient_rank

    prim = list(dict.fromkeys(primitive(r) for r in ray_list))
    if not prim:
        return Cone(n, (), facet_normals=(), span_equations=identity_rows(n))
    d = rank(prim)
    if d == len(prim):
        # linearly independent generators: simplicial, so pointed and extreme
        return Cone(n, prim)
    lineality, facets = dual_extreme_rays(prim, n)
    if rank(facets) < d:
        raise NotPointed(f"cone on {sorted(prim)} contains a line")
    lin2, extremes = halfspace_generators(facets, lineality, n)
    assert not lin2
    return Cone(n, extremes, facet_normals=facets, span_equations=lineality)


def zero_cone(ambient_rank: int) -> Cone:
    """The cone {0}."""
    return cone_from_rays((), ambient_rank)
