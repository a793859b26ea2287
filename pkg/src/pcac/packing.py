"""Supporting graphs, edge differences, and (k,Delta)-packings of K_n.

The supporting graph G_Delta(A) of a subset A of Z_n is the union of the
cliques on A, A+1, ..., A+Delta.  A family of k-subsets is a (k,Delta)-packing
when the supporting graphs are pairwise edge-disjoint; such packings are in
bijection with shift-bounded conflict-avoiding codes (each member is the
characteristic set of one code sequence), so packing verification doubles as
an independent oracle for the sequence-level checker.

Edges are canonical unordered pairs (u, v) with u < v.  Packing verification
fills a single hash map edge -> member and reports the first collision as a
witness; constructions are checked, not trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .diffsets import DisjointDifferenceSet
from .seqcore import BinarySequence, CharacteristicSet, from_characteristic_set

Edge = tuple[int, int]
Member = tuple[int, ...]


@dataclass(frozen=True)
class EdgeSet:
    """A set of edges of K_n on vertex set Z_n."""

    modulus: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.modulus and 0 <= v < self.modulus):
                raise ValueError(f"edge ({u},{v}) outside Z_{self.modulus}")
            if u > v:
                raise ValueError(f"edge ({u},{v}) not canonically ordered")

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, e: Edge) -> bool:
        return (min(e), max(e)) in self.edges


def _clique_edges(vertices: Iterable[int]) -> set[Edge]:
    vs = sorted(set(vertices))
    return {(u, v) for u, v in combinations(vs, 2)}


def supporting_graph(a: CharacteristicSet, delta: int) -> EdgeSet:
    """Union of the cliques on A, A+1, ..., A+Delta (mod n), deduplicated."""
    n = a.modulus
    if len(a) < 2:
        raise ValueError(f"need at least 2 vertices, got {len(a)}")
    if not 0 <= delta < n:
        raise ValueError(f"delta must be in [0, {n - 1}], got {delta}")
    edges: set[Edge] = set()
    for tau in range(delta + 1):
        edges |= _clique_edges((e + tau) % n for e in a.elements)
    return EdgeSet(n, frozenset(edges))


def edge_difference(edge: Edge, n: int) -> int:
    """Circular distance of an edge's endpoints, in [1, n//2].

    An edge is exceptional when the result is exactly n/2 (even n only);
    there are only n/2 such edges, versus n per smaller difference.
    """
    u, v = edge
    if u == v:
        raise ValueError("self-loop has no difference")
    d = (u - v) % n
    return min(d, n - d)


def supporting_graph_size_weight3(d: int, delta: int, n: int) -> int:
    """Edge count of G_Delta(A) for a 3-subset A having two edges of equal
    difference d (an arithmetic progression with common difference d).

    For d != n/3 the count is 2*Delta+2+d when d <= Delta and 3*(Delta+1)
    otherwise: the two parallel edge orbits overlap in Delta+1-d shifts once
    d <= Delta, and the third orbit stays disjoint.  The degenerate d = n/3
    (all three edges the same difference) is a separate branch: 3*(Delta+1)
    while the rotations stay distinct, saturating at n once Delta >= n/3.
    """
    if not 0 <= delta < (n + 1) // 2 or delta >= n:
        raise ValueError(f"delta must satisfy 0 <= delta < floor(n/2), got {delta}")
    if not 1 <= d <= n // 2:
        raise ValueError(f"difference must be in [1, {n // 2}], got {d}")
    if 3 * d == n:
        return 3 * (delta + 1) if d > delta else n
    if 2 * d == n:
        raise ValueError("repeated difference n/2 cannot occur in a 3-subset")
    if d <= delta:
        return 2 * delta + 2 + d
    return 3 * (delta + 1)


@dataclass(frozen=True)
class PackingCheck:
    """Falsy iff two members' supporting graphs share an edge."""

    ok: bool
    first: int | None = None
    second: int | None = None
    edge: Edge | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_packing(members: Sequence[Iterable[int]], n: int, delta: int) -> PackingCheck:
    """Check pairwise edge-disjointness of supporting graphs, with witness.

    The witness is deterministic: members are scanned in order, shifts
    ascending, edges in sorted order, and the first collision is reported.
    """
    members = [tuple(sorted(m)) for m in members]
    if not members:
        raise ValueError("need at least one member")
    k = len(members[0])
    if any(len(m) != k for m in members):
        raise ValueError("members have mixed sizes")
    owner: dict[Edge, int] = {}
    for mi, member in enumerate(members):
        graph = supporting_graph(CharacteristicSet(n, member), delta)
        for edge in sorted(graph.edges):
            prev = owner.get(edge)
            if prev is not None and prev != mi:
                return PackingCheck(False, prev, mi, edge)
            owner[edge] = mi
    return PackingCheck(True)


@dataclass(frozen=True)
class SupportingGraphPacking:
    """Validated (k,Delta)-packing of K_n."""

    modulus: int
    weight: int
    shift_bound: int
    members: tuple[Member, ...]

    def __post_init__(self) -> None:
        members = tuple(tuple(sorted(m)) for m in self.members)
        object.__setattr__(self, "members", members)
        if any(len(m) != self.weight for m in members):
            raise ValueError("member size differs from declared weight")
        check = is_packing(members, self.modulus, self.shift_bound)
        if not check:
            raise ValueError(
                f"not a packing: members {check.first} and {check.second} share edge {check.edge}"
            )

    def __len__(self) -> int:
        return len(self.members)


def dds_to_packing(dds: DisjointDifferenceSet, delta: int) -> SupportingGraphPacking:
    """Packing from a DDS: members B_i + t*(Delta+1) for t = 0, 1, ...,
    floor(n/(Delta+1)) - 1, listed block-major (i ascending, then t).

    Same-block translates spaced Delta+1 apart have disjoint clique orbits,
    and distinct blocks never share an edge difference, so the result always
    verifies; the checker still runs.
    """
    n = dds.modulus
    if not 0 <= delta < n:
        raise ValueError(f"delta must be in [0, {n - 1}], got {delta}")
    copies = n // (delta + 1)
    members = []
    for block in dds.blocks:
        for t in range(copies):
            shift = t * (delta + 1)
            members.append(tuple(sorted((x + shift) % n for x in block)))
    return SupportingGraphPacking(n, dds.block_size, delta, tuple(members))


def packing_to_code(packing: SupportingGraphPacking) -> list[BinarySequence]:
    """The packing's members as binary sequences (member -> characteristic set)."""
    if packing.weight < 2:
        raise ValueError("code sequences need weight >= 2")
    return [from_characteristic_set(m, packing.modulus) for m in packing.members]


def code_to_packing(
    sequences: Sequence[BinarySequence], delta: int
) -> SupportingGraphPacking:
    """Inverse of packing_to_code; composing the two is the identity."""
    if not sequences:
        raise ValueError("need at least one sequence")
    n = sequences[0].period
    k = sequences[0].weight
    if k < 2:
        raise ValueError("code sequences need weight >= 2")
    members = tuple(seq.support() for seq in sequences)
    return SupportingGraphPacking(n, k, delta, members)
