"""Factoring fans through direct-sum decompositions of the 1-skeleton.

A complete fan splits as a direct sum exactly along partitions of its rays
into blocks with jointly independent spans. `finest_ray_partition` finds the
finest such partition (the connected components of the linear matroid on the
rays), `factorize` slices the fan along it, and `reassemble` glues the
factors back for round-trip checking. The rational splitting need not
respect the lattice, so the factorization also carries the index of the sum
of the block lattices inside the full one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import InvalidParameter, NotComplete
from .fan import Fan, Subspace, fan_new
from .linalg import (
    Vector,
    lattice_index_in,
    primitive,
    rank,
    saturation_basis,
)


@dataclass(frozen=True)
class RayPartition:
    """Disjoint ray blocks with jointly independent (direct-sum) spans."""

    blocks: tuple[tuple[Vector, ...], ...]
    block_spans: tuple[Subspace, ...]

    @property
    def rays(self) -> tuple[Vector, ...]:
        return tuple(r for block in self.blocks for r in block)


@dataclass(frozen=True)
class Factorization:
    """Factor fans of a complete fan, one per block of the finest partition."""

    factors: tuple[Fan, ...]
    lattice_index: int
    partition: RayPartition
    ambient_rank: int

    @property
    def real_split_only(self) -> bool:
        """True when the splitting exists over the rationals but not over
        the lattice (the factor product covers a finite-index sublattice)."""
        return self.lattice_index > 1


def finest_ray_partition(rays) -> RayPartition:
    """The unique finest partition of the rays into blocks whose spans form
    a direct sum.

    Starts from singletons and, while the blocks are not jointly independent
    (the block span dimensions add up to more than the total span), merges an
    inclusion-minimal dependent sub-collection found by greedy removal. The
    result equals the connected-component partition of the linear matroid on
    the rays.
    """
    ray_list = sorted(set(tuple(r) for r in rays))
    for r in ray_list:
        if primitive(r) != r:
            raise InvalidParameter(f"ray {r} is not primitive")

    rank_memo: dict[frozenset[int], int] = {}

    def block_rank(indices: frozenset[int]) -> int:
        if indices not in rank_memo:
            rank_memo[indices] = rank([ray_list[i] for i in sorted(indices)])
        return rank_memo[indices]

    def dependent(parts: list[frozenset[int]]) -> bool:
        union = frozenset().union(*parts) if parts else frozenset()
        return sum(block_rank(p) for p in parts) > block_rank(union)

    blocks = [frozenset([i]) for i in range(len(ray_list))]
    while dependent(blocks):
        collection = list(range(len(blocks)))
        for drop in list(collection):
            trial = [i for i in collection if i != drop]
            if trial and dependent([blocks[i] for i in trial]):
                collection = trial
        merged = frozenset().union(*(blocks[i] for i in collection))
        blocks = [b for i, b in enumerate(blocks) if i not in set(collection)]
        blocks.append(merged)

    keyed = sorted(
        (tuple(ray_list[i] for i in sorted(b)) for b in blocks),
        key=lambda block: (rank(block), block[0]),
    )
    spans = tuple(Subspace.spanned_by(block) for block in keyed)
    return RayPartition(tuple(keyed), spans)


def lattice_split_index(partition: RayPartition) -> int:
    """Index of the sum of the block lattices inside the lattice points of
    the total span; 1 exactly when the real splitting respects the lattice."""
    stacked = tuple(row for s in partition.block_spans for row in s.basis)
    if not stacked:
        return 1
    total = saturation_basis(partition.rays)
    return lattice_index_in(stacked, total)


def factorize(fan: Fan) -> Factorization:
    """Split a complete fan along the finest partition of its skeleton.

    Each factor is the fan sliced by a block span and rewritten in the block
    basis; factors come out complete. For incomplete fans only one-sided
    containment holds, so the operation refuses them.
    """
    if not fan.is_complete():
        raise NotComplete("only complete fans factor through their skeleton")
    partition = finest_ray_partition(fan.skeleton)
    factors = tuple(fan.restrict(span) for span in partition.block_spans)
    return Factorization(
        factors=factors,
        lattice_index=lattice_split_index(partition),
        partition=partition,
        ambient_rank=fan.ambient_rank,
    )


def reassemble(factorization: Factorization) -> Fan:
    """Direct sum of the factors pulled back through the block bases.

    Reproduces the original fan whenever the lattice index is 1 (and the fan
    was complete, which factorize guarantees).
    """
    n = factorization.ambient_rank
    embedded: list[Vector] = []
    embedded_index: dict[Vector, int] = {}
    per_factor_cones: list[list[list[int]]] = []
    for factor, span in zip(factorization.factors, factorization.partition.block_spans):
        basis = span.basis
        lift = {}
        for y in factor.skeleton:
            x = tuple(sum(y[i] * basis[i][k] for i in range(len(basis))) for k in range(n))
            lift[y] = x
            embedded_index[x] = len(embedded)
            embedded.append(x)
        per_factor_cones.append(
            [[embedded_index[lift[y]] for y in c.rays] for c in factor.maximal_cones]
        )
    cone_lists = [
        [i for part in combo for i in part] for combo in product(*per_factor_cones)
    ]
    return fan_new(n, embedded, cone_lists)
