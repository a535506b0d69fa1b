"""Cutting along codimension-one separatrices, modelled on a multigraph.

Vertices of a :class:`PortraitGraph` are the polar pieces left after every
codimension-one separatrix has been cut; each edge is one codimension-one
saddle point and joins the pieces on the two sides of its separatrix
sphere. Cutting an edge that is not a bridge contributes a summand
S^{n-1} ⊗ S^1; cutting a bridge splits a connected sum in two.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional, Sequence

from . import claims as C
from .claims import Claim
from .errors import GraphError, LimitError
from .morse import genus
from .order import cutting_sequence
from .portrait import OrbitPortrait, orbit_counts
from .unionfind import UnionFind


@dataclass(frozen=True)
class PolarPiece:
    id: str
    saddle_inventory: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "saddle_inventory", tuple(sorted(self.saddle_inventory)))

    @property
    def is_sphere(self) -> bool:
        return not self.saddle_inventory

    def to_dict(self):
        return {"id": self.id, "saddle_inventory": list(self.saddle_inventory),
                "is_sphere": self.is_sphere}


@dataclass(frozen=True)
class CutEdge:
    saddle_id: str
    a: str
    b: str

    @property
    def is_loop(self) -> bool:
        return self.a == self.b

    def to_dict(self):
        return {"saddle_id": self.saddle_id, "a": self.a, "b": self.b}


@dataclass(frozen=True)
class PortraitGraph:
    vertices: tuple[PolarPiece, ...]
    edges: tuple[CutEdge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))

    def vertex_ids(self) -> list[str]:
        return [v.id for v in self.vertices]

    def union_find(self, edges=None) -> UnionFind:
        uf = UnionFind(self.vertex_ids())
        for e in self.edges if edges is None else edges:
            uf.union(e.a, e.b)
        return uf

    def component_count(self) -> int:
        return self.union_find().count()

    def is_connected(self) -> bool:
        return self.component_count() == 1

    def cycle_rank(self) -> int:
        """|E| - |V| + (number of components)."""
        return len(self.edges) - len(self.vertices) + self.component_count()

    def to_dict(self):
        return {"vertices": [{"id": v.id, "saddle_inventory": list(v.saddle_inventory)}
                             for v in self.vertices],
                "edges": [e.to_dict() for e in self.edges]}


@dataclass(frozen=True)
class CutRecord:
    saddle_id: str
    splitting: bool
    component_count_after: int

    def to_dict(self):
        return {"saddle_id": self.saddle_id, "splitting": self.splitting,
                "component_count_after": self.component_count_after}


def cut(gr: PortraitGraph, edge: CutEdge) -> tuple[PortraitGraph, CutRecord]:
    try:
        i = gr.edges.index(edge)
    except ValueError:
        raise GraphError(f"no edge {edge} in graph") from None
    rest = gr.edges[:i] + gr.edges[i + 1:]
    uf = gr.union_find(rest)
    splitting = not uf.connected(edge.a, edge.b)
    return replace(gr, edges=rest), CutRecord(edge.saddle_id, splitting, uf.count())


class BundleType(str, Enum):
    TRIVIAL = "trivial"
    SKEW = "skew"
    UNKNOWN = "unknown"


def _sphere(dim, symbolic):
    if symbolic:
        return {"n": "S^n", "n-1": "S^{n-1}"}[dim]
    return f"S^{dim}" if dim < 10 else f"S^{{{dim}}}"


@dataclass(frozen=True)
class ConnectedSumExpr:
    n: int
    g: int
    bundle_types: tuple[BundleType, ...]
    pieces: tuple[PolarPiece, ...]
    claims: tuple[Claim, ...] = field(default=(), compare=False)
    flow: bool = False

    @property
    def k(self) -> int:
        return len(self.pieces)

    @property
    def non_sphere_pieces(self) -> list[PolarPiece]:
        return [p for p in self.pieces if not p.is_sphere]

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.non_sphere_pieces)

    @property
    def is_sphere(self) -> bool:
        return self.g == 0 and self.l == 0

    @property
    def form(self) -> str:
        if self.is_sphere:
            return "sphere"
        if self.g == 0:
            return "polar-sum"
        return "handles" if self.l == 0 else "handles+polar-sum"

    @property
    def citation(self) -> str:
        base = C.DECOMPOSITION_FLOW if self.flow else C.DECOMPOSITION
        return {"sphere": f"{base}, S^n case",
                "polar-sum": f"{base}, g = 0: N_1 ♯ … ♯ N_l",
                "handles": f"{base}, g > 0: g copies of S^(n-1) ⊗ S^1",
                "handles+polar-sum": f"{base}, g > 0: handles ♯ N_1 ♯ … ♯ N_l"}[self.form]

    def manifold_key(self):
        """Everything that identifies the manifold, ignoring piece labels."""
        return (self.n, self.g, tuple(sorted(b.value for b in self.bundle_types)),
                tuple(sorted(p.saddle_inventory for p in self.non_sphere_pieces)))

    def render(self, symbolic: bool = False) -> str:
        if self.is_sphere:
            return "M = " + _sphere("n" if symbolic else self.n, symbolic)
        top = _sphere("n-1" if symbolic else self.n - 1, symbolic)
        terms = []
        for bt in self.bundle_types:
            op = {"trivial": "×", "skew": "×~", "unknown": "⊗"}[bt.value]
            terms.append(f"({top} {op} S^1)")
        terms += [f"N_{i}" for i in range(1, self.l + 1)]
        return "M = " + " ♯ ".join(terms)

    def to_dict(self):
        return {
            "n": self.n,
            "g": self.g,
            "k": self.k,
            "l": self.l,
            "bundle_types": [b.value for b in self.bundle_types],
            "pieces": [p.to_dict() for p in self.pieces],
            "expression": self.render(),
            "expression_symbolic": self.render(symbolic=True),
            "form": self.form,
            "citation": self.citation,
            "claims": [c.to_dict() for c in self.claims],
        }


def check_graph(p: OrbitPortrait, gr: PortraitGraph) -> None:
    """Raise GraphError unless ``gr`` is a valid cut multigraph for ``p``."""
    n = p.n
    ids = gr.vertex_ids()
    dup = [v for v, c in Counter(ids).items() if c > 1]
    if dup:
        raise GraphError(f"duplicate vertex ids {dup}")
    if not ids:
        raise GraphError("graph has no vertices")
    known = set(ids)
    for e in gr.edges:
        if e.a not in known or e.b not in known:
            raise GraphError(f"edge of saddle {e.saddle_id!r} has unknown endpoint")

    codim = {o.id: o.period for o in p.codim_one_saddles()}
    used = Counter(e.saddle_id for e in gr.edges)
    for sid, c in used.items():
        if sid not in codim:
            raise GraphError(f"edge label {sid!r} is not a codimension-one saddle")
    for sid, period in codim.items():
        if used[sid] != period:
            raise GraphError(f"saddle {sid!r} has period {period} but labels {used[sid]} edges")

    mu, nu, _ = orbit_counts(p)
    if len(gr.edges) != nu:
        raise GraphError(f"graph has {len(gr.edges)} edges but nu = {nu}")
    if 2 * len(gr.vertices) - len(gr.edges) != mu:
        raise GraphError(f"node bookkeeping fails: 2|V| - |E| = "
                         f"{2 * len(gr.vertices) - len(gr.edges)} but mu = {mu}")

    inventory = Counter()
    for v in gr.vertices:
        for u in v.saddle_inventory:
            if u in (1, n - 1) or not 1 <= u <= n - 1:
                raise GraphError(f"piece {v.id!r} lists unstable dimension {u}; "
                                 "polar pieces carry no codimension-one saddles")
            inventory[u] += 1
    expected = Counter()
    for o in p.other_saddles():
        expected[o.unstable_dim] += o.period
    if inventory != expected:
        raise GraphError(f"piece inventories {dict(inventory)} do not match the "
                         f"non-codimension-one saddles {dict(expected)}")
    if not gr.is_connected():
        raise GraphError("graph is disconnected; the ambient manifold is connected")


def default_cut_order(p: OrbitPortrait, gr: PortraitGraph) -> list[int]:
    """Edge indices following a sequence of freely cuttable saddles."""
    by_saddle: dict[str, list[int]] = {}
    for i, e in enumerate(gr.edges):
        by_saddle.setdefault(e.saddle_id, []).append(i)
    order = []
    for s in cutting_sequence(p):
        order.extend(by_saddle.get(s, []))
    return order


def _expr_claims(p, k, l, g, nu):
    kind = "flow (no closed trajectories)" if p.is_flow else "diffeomorphism"
    out = [Claim(f"every N_i admits a polar Morse-Smale {kind} with no codimension-one saddles",
                 C.DECOMPOSITION_FLOW if p.is_flow else C.DECOMPOSITION)]
    out.append(Claim(f"l = {l} <= k = {k}", C.DECOMPOSITION))
    if g == 0:
        out.append(Claim(f"stated bound for g = 0: l <= 1 + nu = {1 + nu}", C.DECOMPOSITION))
    if p.orientable:
        out.append(Claim("beta_1(N_i) = beta_{n-1}(N_i) = 0 for every N_i", C.BETTI_OF_PIECES))
    return out


def _decompose_checked(p, gr, order, bundle, extra_claims=()):
    k = len(gr.vertices)
    if sorted(order) != list(range(len(gr.edges))):
        raise GraphError("cut order must list every edge index exactly once")
    cur = gr
    records = []
    for i in order:
        cur, rec = cut(cur, gr.edges[i])
        records.append(rec)
    final = records[-1].component_count_after if records else cur.component_count()
    if final != k:
        raise GraphError(f"cutting ended with {final} components, expected k = {k}")
    g = sum(1 for r in records if not r.splitting)
    pieces = tuple(sorted(gr.vertices, key=lambda v: v.id))
    l = sum(1 for v in pieces if not v.is_sphere)
    nu = len(gr.edges)
    expr = ConnectedSumExpr(
        n=p.n, g=g, bundle_types=(bundle,) * g, pieces=pieces,
        claims=tuple(_expr_claims(p, k, l, g, nu)) + tuple(extra_claims),
        flow=p.is_flow)
    return expr, records


def decompose(p: OrbitPortrait, gr: PortraitGraph, order: Optional[Sequence[int]] = None,
              bundle: BundleType = BundleType.UNKNOWN):
    """Cut every edge and read off the connected sum.

    ``order`` is a permutation of edge indices; by default saddles are cut in
    an order where each one's codimension-one separatrix is free of
    heteroclinic points when its turn comes.
    """
    check_graph(p, gr)
    if order is None:
        order = default_cut_order(p, gr)
    return _decompose_checked(p, gr, list(order), bundle)


def brute_force_decompose(p: OrbitPortrait, gr: PortraitGraph, max_nu: int = 8,
                          bundle: BundleType = BundleType.UNKNOWN) -> set:
    """Decompose under every cut order; a well-defined result gives a singleton."""
    nu = len(gr.edges)
    if nu > max_nu:
        raise LimitError(f"nu = {nu} exceeds the enumeration bound {max_nu} "
                                f"({math.factorial(nu)} orders)")
    check_graph(p, gr)
    results = set()
    for perm in itertools.permutations(range(nu)):
        expr, _ = _decompose_checked(p, gr, perm, bundle)
        results.add(expr)
    return results


def generic_graph(p: OrbitPortrait) -> PortraitGraph:
    """One representative cut graph built from counts alone.

    A path through k pieces plus g parallel edges on the first pair; all
    non-codimension-one saddles sit in the first piece. Not canonical: the
    actual incidence is not determined by the counts.
    """
    mu, nu, _ = orbit_counts(p)
    gen = genus(mu, nu)
    inventory = []
    for o in sorted(p.other_saddles(), key=lambda o: o.id):
        inventory += [o.unstable_dim] * o.period
    vertices = [PolarPiece(f"P{i}", tuple(inventory) if i == 0 else ())
                for i in range(gen.k)]
    labels = [o.id for o in sorted(p.codim_one_saddles(), key=lambda o: o.id)
              for _ in range(o.period)]
    ends = [(f"P{i}", f"P{i + 1}") for i in range(gen.k - 1)] + [("P0", "P1")] * gen.g
    edges = [CutEdge(s, a, b) for s, (a, b) in zip(labels, ends)]
    return PortraitGraph(tuple(vertices), tuple(edges))
