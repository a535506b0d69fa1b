"""Construction plans for prescribed numbers of nodes and codimension-one saddles.

A plan glues standard vector-field blocks:

* ``Vsink`` / ``Vsource``: a disk with one sink (resp. source);
* ``VnuSink(nu)``: a disk with one sink, nu sources and nu saddles whose
  (n-1)-dimensional unstable separatrix, closed up by the sink, encloses one
  source each;
* ``Va(a)``: D^{n-1} × S^1 with a sinks and a saddles of unstable dimension 1;
* ``MinusVb(b)``: D^{n-1} × S^1 with b sources and b saddles of unstable
  dimension n-1.

Gluing Va with -Vb gives S^{n-1} × S^1. Removing a source and a sink and
identifying the two boundary spheres adds one more S^{n-1} × S^1 summand.

:func:`simulate_plan` executes a plan symbolically and returns the orbit
portrait together with the cut multigraph, so a plan can be checked by
running the decomposition on its own output.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from . import claims as C
from .claims import Claim
from .cutting import BundleType, ConnectedSumExpr, CutEdge, PolarPiece, PortraitGraph, decompose
from .errors import PlanError, PreconditionError, SchemaError
from .morse import check_morse_inequalities, genus, morse_counts
from .portrait import (OrbitKind, OrbitPortrait, PeriodicOrbit, SystemKind, orbit_counts,
                       validate_portrait)
from .unionfind import UnionFind


class BlockKind(str, Enum):
    VSINK = "Vsink"
    VSOURCE = "Vsource"
    VNU_SINK = "VnuSink"
    VA = "Va"
    MINUS_VB = "MinusVb"


@dataclass(frozen=True)
class Block:
    kind: BlockKind
    param: int = 0
    boundary: str = ""

    def to_dict(self):
        return {"op": "block", "kind": self.kind.value, "param": self.param,
                "boundary": self.boundary}


@dataclass(frozen=True)
class Glue:
    boundary_a: str
    boundary_b: str

    def to_dict(self):
        return {"op": "glue", "a": self.boundary_a, "b": self.boundary_b}


@dataclass(frozen=True)
class DeleteNodePair:
    source_id: str
    sink_id: str

    @property
    def holes(self):
        return f"hole:{self.source_id}", f"hole:{self.sink_id}"

    def to_dict(self):
        return {"op": "delete_node_pair", "source": self.source_id, "sink": self.sink_id}


@dataclass(frozen=True)
class GlueSpherePair:
    boundary_a: str
    boundary_b: str

    def to_dict(self):
        return {"op": "glue_sphere_pair", "a": self.boundary_a, "b": self.boundary_b}


PlanStep = Union[Block, Glue, DeleteNodePair, GlueSpherePair]


def step_from_dict(d) -> PlanStep:
    if not isinstance(d, dict) or "op" not in d:
        raise SchemaError("plan step must be an object with an 'op' field")
    op = d["op"]
    try:
        if op == "block":
            return Block(BlockKind(d["kind"]), int(d.get("param", 0)), d["boundary"])
        if op == "glue":
            return Glue(d["a"], d["b"])
        if op == "delete_node_pair":
            return DeleteNodePair(d["source"], d["sink"])
        if op == "glue_sphere_pair":
            return GlueSpherePair(d["a"], d["b"])
    except (KeyError, ValueError) as exc:
        raise SchemaError(f"bad plan step {d!r}: {exc}") from None
    raise SchemaError(f"unknown plan op {op!r}")


@dataclass(frozen=True)
class RealizationPlan:
    n: int
    nu: int
    mu: int
    g: int
    steps: tuple[PlanStep, ...]
    expected_manifold: ConnectedSumExpr

    def count(self, cls) -> int:
        return sum(1 for s in self.steps if isinstance(s, cls))

    def to_dict(self):
        return {"n": self.n, "nu": self.nu, "mu": self.mu, "g": self.g,
                "steps": [s.to_dict() for s in self.steps],
                "expected_manifold": self.expected_manifold.to_dict()}


def expected_manifold(n: int, g: int, k: int) -> ConnectedSumExpr:
    if g == 0:
        text = f"M = S^{n}"
    else:
        text = f"M = {g} x (S^{n - 1} × S^1)"
    return ConnectedSumExpr(
        n=n, g=g, bundle_types=(BundleType.TRIVIAL,) * g,
        pieces=tuple(PolarPiece(f"P{i}") for i in range(k)),
        claims=(Claim(text, C.REALIZATION),))


def plan_realization(n: int, nu: int, mu: int) -> RealizationPlan:
    if n < 3:
        raise PreconditionError(f"n >= 3 required, got n={n}")
    gen = genus(mu, nu)  # mu >= 2, nu >= 0, parity, nu >= mu - 2
    g = gen.g
    if g == 0 and nu == 0:
        steps = [Block(BlockKind.VSINK, 0, "Vsink"), Block(BlockKind.VSOURCE, 0, "Vsource"),
                 Glue("Vsink", "Vsource")]
    elif g == 0:
        steps = [Block(BlockKind.VSOURCE, 0, "Vsource"), Block(BlockKind.VNU_SINK, nu, "Vnu"),
                 Glue("Vsource", "Vnu")]
    else:
        a, b = nu // 2, (nu + 1) // 2
        steps = [Block(BlockKind.VA, a, "Va"), Block(BlockKind.MINUS_VB, b, "mVb"),
                 Glue("Va", "mVb")]
        for j in range(1, (nu - mu) // 2 + 1):
            d = DeleteNodePair(f"mVb.source{j}", f"Va.sink{j}")
            steps += [d, GlueSpherePair(*d.holes)]
    return RealizationPlan(n, nu, mu, g, tuple(steps), expected_manifold(n, g, gen.k))


# -- symbolic execution -------------------------------------------------------

@dataclass
class _Boundary:
    shape: str          # "sphere" or "S^{n-2} x S^1"
    inward: bool        # field points into the piece it bounds
    component: str
    vertex: str = ""    # sphere: piece the sphere bounds
    head: str = ""      # torus: first piece of the arc
    dangling: int = -1  # torus: edge index whose far end is still open


class _Sim:
    def __init__(self, n):
        self.n = n
        self.orbits: dict[str, PeriodicOrbit] = {}
        self.home: dict[str, str] = {}       # orbit id -> piece
        self.edges: list[list] = []           # [saddle, a, b]; b None while dangling
        self.pieces = UnionFind()
        self.piece_comp: dict[str, str] = {}
        self.comps = UnionFind()
        self.bounds: dict[str, _Boundary] = {}
        self.used: set[str] = set()

    def orbit(self, oid, kind, u, piece):
        if oid in self.orbits:
            raise PlanError(f"orbit id {oid!r} produced twice")
        self.orbits[oid] = PeriodicOrbit(oid, kind, u)
        self.home[oid] = piece

    def piece(self, name, component):
        if name in self.piece_comp:
            raise PlanError(f"piece {name!r} produced twice")
        self.pieces.add(name)
        self.piece_comp[name] = component
        return name

    def open_boundary(self, name, b):
        if name in self.bounds or name in self.used:
            raise PlanError(f"boundary {name!r} declared twice")
        self.bounds[name] = b

    def take(self, name):
        if name not in self.bounds:
            raise PlanError(f"boundary {name!r} does not exist or is already glued")
        self.used.add(name)
        return self.bounds.pop(name)

    def block(self, s: Block):
        n, pre = self.n, s.boundary
        if not pre:
            raise PlanError("block needs a boundary name")
        self.comps.add(pre)
        if s.kind in (BlockKind.VSINK, BlockKind.VSOURCE):
            v = self.piece(f"{pre}.0", pre)
            if s.kind is BlockKind.VSINK:
                self.orbit(f"{pre}.sink", OrbitKind.SINK, 0, v)
            else:
                self.orbit(f"{pre}.source", OrbitKind.SOURCE, n, v)
            self.open_boundary(pre, _Boundary("sphere", s.kind is BlockKind.VSINK, pre, vertex=v))
        elif s.kind is BlockKind.VNU_SINK:
            if s.param < 1:
                raise PlanError("VnuSink needs nu >= 1")
            hub = self.piece(f"{pre}.0", pre)
            self.orbit(f"{pre}.sink", OrbitKind.SINK, 0, hub)
            for i in range(1, s.param + 1):
                v = self.piece(f"{pre}.{i}", pre)
                self.orbit(f"{pre}.source{i}", OrbitKind.SOURCE, n, v)
                self.orbit(f"{pre}.saddle{i}", OrbitKind.SADDLE, n - 1, v)
                self.edges.append([f"{pre}.saddle{i}", hub, v])
            self.open_boundary(pre, _Boundary("sphere", True, pre, vertex=hub))
        else:
            count = s.param
            if count < 1:
                raise PlanError(f"{s.kind.value} needs a parameter >= 1")
            sinks = s.kind is BlockKind.VA
            node_kind, node_u = (OrbitKind.SINK, 0) if sinks else (OrbitKind.SOURCE, n)
            saddle_u = 1 if sinks else n - 1
            arc = [self.piece(f"{pre}.{i}", pre) for i in range(1, count + 1)]
            for i, v in enumerate(arc, 1):
                self.orbit(f"{pre}.{node_kind.value}{i}", node_kind, node_u, v)
                self.orbit(f"{pre}.saddle{i}", OrbitKind.SADDLE, saddle_u, v)
                nxt = arc[i] if i < count else None
                self.edges.append([f"{pre}.saddle{i}", v, nxt])
            self.open_boundary(pre, _Boundary("S^{n-2} x S^1", sinks, pre, head=arc[0],
                                              dangling=len(self.edges) - 1))

    def _pair(self, a, b, same_component):
        if a == b:
            raise PlanError(f"cannot glue boundary {a!r} to itself")
        ba, bb = self.take(a), self.take(b)
        if ba.shape != bb.shape:
            raise PlanError(f"boundary mismatch: {a!r} is {ba.shape}, {b!r} is {bb.shape}")
        if ba.inward == bb.inward:
            raise PlanError(f"boundaries {a!r} and {b!r} have the same co-orientation; "
                            "one field must point out and the other in")
        together = self.comps.connected(ba.component, bb.component)
        if together != same_component:
            raise PlanError(f"{a!r} and {b!r} lie in "
                            f"{'the same' if together else 'different'} components")
        return ba, bb

    def glue(self, s: Glue):
        ba, bb = self._pair(s.boundary_a, s.boundary_b, same_component=False)
        if ba.shape == "sphere":
            self.pieces.union(ba.vertex, bb.vertex)
        else:
            self.edges[ba.dangling][2] = bb.head
            self.edges[bb.dangling][2] = ba.head
        self.comps.union(ba.component, bb.component)

    def delete(self, s: DeleteNodePair):
        src, snk = self.orbits.get(s.source_id), self.orbits.get(s.sink_id)
        if src is None or src.kind is not OrbitKind.SOURCE:
            raise PlanError(f"{s.source_id!r} is not a source")
        if snk is None or snk.kind is not OrbitKind.SINK:
            raise PlanError(f"{s.sink_id!r} is not a sink")
        ps, pt = self.home[s.source_id], self.home[s.sink_id]
        comp = self._component_of_piece(ps)
        if comp != self._component_of_piece(pt):
            raise PlanError("source and sink lie in different components")
        if any(self.comps.connected(b.component, comp) for b in self.bounds.values()):
            raise PlanError("node pairs are removed only from a closed manifold")
        for oid in (s.source_id, s.sink_id):
            del self.orbits[oid]
        hs, ht = s.holes
        # the field leaves a source ball, so it enters the manifold through that hole
        self.open_boundary(hs, _Boundary("sphere", True, comp, vertex=ps))
        self.open_boundary(ht, _Boundary("sphere", False, comp, vertex=pt))

    def glue_pair(self, s: GlueSpherePair):
        ba, bb = self._pair(s.boundary_a, s.boundary_b, same_component=True)
        if ba.shape != "sphere":
            raise PlanError("GlueSpherePair joins sphere boundaries only")
        if self.pieces.connected(ba.vertex, bb.vertex):
            raise PlanError("both holes lie in one polar piece; it would be left without nodes")
        self.pieces.union(ba.vertex, bb.vertex)

    def _component_of_piece(self, piece):
        return self.comps.find(self.piece_comp[piece])


def simulate_plan(plan: RealizationPlan) -> tuple[OrbitPortrait, PortraitGraph]:
    sim = _Sim(plan.n)
    handlers = {Block: sim.block, Glue: sim.glue, DeleteNodePair: sim.delete,
                GlueSpherePair: sim.glue_pair}
    for i, step in enumerate(plan.steps):
        h = handlers.get(type(step))
        if h is None:
            raise PlanError(f"step {i}: unknown step {step!r}")
        try:
            h(step)
        except PlanError as exc:
            raise PlanError(f"step {i} ({type(step).__name__}): {exc}") from None
    if sim.bounds:
        raise PlanError(f"unglued boundaries remain: {sorted(sim.bounds)}")
    if sim.comps.count() != 1:
        raise PlanError(f"plan produces {sim.comps.count()} components")
    if any(e[2] is None for e in sim.edges):
        raise PlanError("a separatrix was left open")

    roots: dict[str, str] = {}
    for v in sim.piece_comp:
        r = sim.pieces.find(v)
        roots.setdefault(r, f"P{len(roots)}")
    vertices = tuple(PolarPiece(name) for name in roots.values())
    edges = tuple(CutEdge(s, roots[sim.pieces.find(a)], roots[sim.pieces.find(b)])
                  for s, a, b in sim.edges)
    g = plan.expected_manifold.g
    betti = [0] * (plan.n + 1)
    betti[0] = betti[plan.n] = 1
    betti[1] += g
    betti[plan.n - 1] += g
    portrait = OrbitPortrait(plan.n, SystemKind.DIFFEOMORPHISM, tuple(sim.orbits.values()),
                             (), orientable=True, betti=tuple(betti))
    report = validate_portrait(portrait)
    if not report.admissible:
        raise PlanError("simulated portrait is not admissible: "
                        + "; ".join(v.message for v in report.violations))
    return portrait, PortraitGraph(vertices, edges)


@dataclass(frozen=True)
class RoundTrip:
    ok: bool
    plan: RealizationPlan
    portrait: OrbitPortrait
    graph: PortraitGraph
    decomposition: ConnectedSumExpr
    problems: tuple[str, ...] = ()

    def to_dict(self):
        return {"ok": self.ok, "problems": list(self.problems),
                "plan": self.plan.to_dict(),
                "decomposition": self.decomposition.to_dict()}


def round_trip(n: int, nu: int, mu: int) -> RoundTrip:
    plan = plan_realization(n, nu, mu)
    portrait, graph = simulate_plan(plan)
    expr, _ = decompose(portrait, graph, bundle=BundleType.TRIVIAL)
    problems = []
    counts = orbit_counts(portrait)
    if (counts.mu, counts.nu, counts.other_saddles) != (mu, nu, 0):
        problems.append(f"simulated counts {tuple(counts)} != ({mu}, {nu}, 0)")
    want = plan.expected_manifold
    if expr.manifold_key() != want.manifold_key() or expr.k != want.k:
        problems.append(f"decomposition {expr.render()} != expected {want.render()}")
    if expr.g != genus(mu, nu).g or graph.cycle_rank() != expr.g:
        problems.append("g disagrees between formula, cut simulation and cycle rank")
    morse = check_morse_inequalities(morse_counts(portrait), portrait.betti)
    if not morse.ok:
        problems.append(f"Morse relations fail: {morse.to_dict()}")
    return RoundTrip(not problems, plan, portrait, graph, expr, tuple(problems))


def verify_round_trip(n: int, nu: int, mu: int) -> bool:
    return round_trip(n, nu, mu).ok
