"""Multiply-edged Cayley graphs of elementary abelian ell-groups.

Edge convention: a generator chi with multiplicity m contributes m parallel
arrows v -> v * chi^{-1} at every vertex (written additively: v -> v - chi).
The convention is fixed once here; block quivers of skew group rings follow it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import QStrataError
from .lattice import EllSubgroup


@dataclass(frozen=True)
class CayleyGraph:
    group_invariants: tuple[int, ...]  # invariant factors, e.g. (5, 5)
    vertices: tuple[tuple[int, ...], ...]  # sorted coordinate vectors
    generators: tuple[tuple[tuple[int, ...], int], ...]  # (element, multiplicity)
    edges: tuple[tuple[int, int, tuple[int, ...], int], ...]  # (from, to, gen, mult)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        """Total arrows, counting multiplicity."""
        return sum(m for _, _, _, m in self.edges)


def _vertex_set(group) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...], int, int]:
    """Normalize the group argument: either an EllSubgroup or a pair (ell, k)
    for an abstract (ZZ/ell)^k.  Returns (vertices, invariants, ell, ambient)."""
    if isinstance(group, EllSubgroup):
        from .lattice import ell_subgroup, quotient_invariants

        verts = tuple(group.elements())
        zero = ell_subgroup(group.ell, group.basis_kind, group.ambient_rank, [])
        invariants = quotient_invariants(zero, group)
        return verts, invariants, group.ell, group.ambient_rank
    ell, k = group
    verts = tuple(itertools.product(range(ell), repeat=k))
    return verts, (ell,) * k, ell, k


def cayley_graph(group, gens) -> CayleyGraph:
    """Multiply-edged Cayley graph; generators are (element, multiplicity)
    pairs and may include the identity (giving loops)."""
    vertices, invariants, ell, ambient = _vertex_set(group)
    index = {v: i for i, v in enumerate(vertices)}
    norm_gens = []
    for g, m in gens:
        g = tuple(int(x) % ell for x in g)
        if len(g) != ambient:
            raise QStrataError(f"generator {g} has wrong length for ambient rank {ambient}")
        if g not in index:
            raise QStrataError(f"generator {g} lies outside the group")
        if m < 1:
            raise QStrataError(f"multiplicity must be >= 1, got {m}")
        norm_gens.append((g, int(m)))
    edges = []
    for vi, v in enumerate(vertices):
        for g, m in norm_gens:
            target = tuple((x - y) % ell for x, y in zip(v, g))
            edges.append((vi, index[target], g, m))
    return CayleyGraph(
        group_invariants=tuple(invariants),
        vertices=vertices,
        generators=tuple(norm_gens),
        edges=tuple(edges),
    )


def connected_components(g: CayleyGraph) -> int:
    """Component count by union-find; equals the index of the subgroup the
    generators span (checked in tests)."""
    parent = list(range(g.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, _, _ in g.edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(i) for i in range(g.vertex_count)})


def to_dot(g: CayleyGraph) -> str:
    """Graphviz DOT text; parallel edges are emitted individually and vertex
    order is the sorted coordinate order, so output is deterministic."""
    lines = ["digraph cayley {"]
    for i, v in enumerate(g.vertices):
        label = ",".join(str(x) for x in v)
        lines.append(f'  v{i} [label="({label})"];')
    for a, b, gen, mult in g.edges:
        label = ",".join(str(x) for x in gen)
        for _ in range(mult):
            lines.append(f'  v{a} -> v{b} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(g: CayleyGraph) -> dict:
    return {
        "group_invariants": list(g.group_invariants),
        "vertices": [list(v) for v in g.vertices],
        "generators": [{"element": list(e), "mult": m} for e, m in g.generators],
        "edges": [
            {"from": a, "to": b, "gen": list(gen), "mult": m}
            for a, b, gen, m in g.edges
        ],
    }
