"""Scenario files: strict JSON schema for a portrait plus an optional cut graph.

Example::

    {
      "dimension": 4,
      "system_kind": "diffeomorphism",
      "orientable": true,
      "orbits": [
        {"id": "w", "kind": "sink", "unstable_dim": 0},
        {"id": "a", "kind": "source", "unstable_dim": 4},
        {"id": "s", "kind": "saddle", "unstable_dim": 3, "period": 2}
      ],
      "edges": [{"from": "s", "to": "t", "kind": "points"}],
      "betti": [1, 0, 0, 0, 1],
      "pi1_free_rank": 0,
      "graph": {
        "vertices": [{"id": "P0", "saddle_inventory": []}],
        "edges": [{"saddle_id": "s", "a": "P0", "b": "P0"}]
      },
      "mode": {"generic_graph": false}
    }

Unknown keys anywhere are rejected. Field-level problems raise
:class:`SchemaError` naming the field; dynamical inconsistencies are left to
:func:`validate_portrait`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .cutting import CutEdge, PolarPiece, PortraitGraph
from .errors import SchemaError
from .portrait import (EdgeKind, HeteroclinicEdge, OrbitKind, OrbitPortrait, PeriodicOrbit,
                       SystemKind)

_TOP = {"dimension", "system_kind", "orientable", "orbits", "edges", "betti",
        "pi1_free_rank", "graph", "mode"}
_ORBIT = {"id", "kind", "unstable_dim", "period"}
_EDGE = {"from", "to", "kind", "dim"}
_GRAPH = {"vertices", "edges"}
_VERTEX = {"id", "saddle_inventory"}
_CUT_EDGE = {"saddle_id", "a", "b"}
_MODE = {"generic_graph"}


@dataclass(frozen=True)
class Scenario:
    portrait: OrbitPortrait
    graph: Optional[PortraitGraph] = None
    generic_graph: bool = False


def _obj(x, where, allowed, required=()):
    if not isinstance(x, dict):
        raise SchemaError(f"{where} must be an object", field=where)
    extra = sorted(set(x) - allowed)
    if extra:
        raise SchemaError(f"{where}: unknown field(s) {extra}", field=f"{where}.{extra[0]}")
    for k in required:
        if k not in x:
            raise SchemaError(f"{where}: missing required field {k!r}", field=f"{where}.{k}")
    return x


def _int(x, where, lo=None, hi=None):
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(f"{where} must be an integer", field=where)
    if lo is not None and x < lo:
        raise SchemaError(f"{where} = {x} is below {lo}", field=where)
    if hi is not None and x > hi:
        raise SchemaError(f"{where} = {x} exceeds {hi}", field=where)
    return x


def _str(x, where):
    if not isinstance(x, str) or not x:
        raise SchemaError(f"{where} must be a non-empty string", field=where)
    return x


def _list(x, where):
    if not isinstance(x, list):
        raise SchemaError(f"{where} must be an array", field=where)
    return x


def _enum(cls, x, where):
    try:
        return cls(x)
    except (ValueError, TypeError):
        raise SchemaError(f"{where} must be one of {[m.value for m in cls]}, got {x!r}",
                          field=where) from None


def scenario_from_dict(d) -> Scenario:
    _obj(d, "scenario", _TOP, ("dimension", "system_kind", "orbits"))
    n = _int(d["dimension"], "dimension", lo=3)
    kind = _enum(SystemKind, d["system_kind"], "system_kind")
    orientable = d.get("orientable")
    if orientable is not None and not isinstance(orientable, bool):
        raise SchemaError("orientable must be a boolean or null", field="orientable")

    orbits = []
    seen = set()
    for i, o in enumerate(_list(d["orbits"], "orbits")):
        w = f"orbits[{i}]"
        _obj(o, w, _ORBIT, ("id", "kind", "unstable_dim"))
        oid = _str(o["id"], f"{w}.id")
        if oid in seen:
            raise SchemaError(f"{w}: duplicate orbit id {oid!r}", field=f"{w}.id")
        seen.add(oid)
        try:
            u = _int(o["unstable_dim"], f"{w}.unstable_dim", lo=0, hi=n)
        except SchemaError as exc:
            raise SchemaError(f"orbit {oid!r}: {exc}", field=exc.field) from None
        orbits.append(PeriodicOrbit(oid, _enum(OrbitKind, o["kind"], f"{w}.kind"), u,
                                    _int(o.get("period", 1), f"{w}.period", lo=1)))

    edges = []
    for i, e in enumerate(_list(d.get("edges", []), "edges")):
        w = f"edges[{i}]"
        _obj(e, w, _EDGE, ("from", "to", "kind"))
        ends = [_str(e[k], f"{w}.{k}") for k in ("from", "to")]
        for k, x in zip(("from", "to"), ends):
            if x not in seen:
                raise SchemaError(f"{w}.{k}: unknown orbit {x!r}", field=f"{w}.{k}")
        ek = _enum(EdgeKind, e["kind"], f"{w}.kind")
        if ek is EdgeKind.POINTS:
            if e.get("dim", 0) != 0:
                raise SchemaError(f"{w}: a points edge has no dimension", field=f"{w}.dim")
            dim = 0
        else:
            if "dim" not in e:
                raise SchemaError(f"{w}: submanifold edge needs 'dim'", field=f"{w}.dim")
            dim = _int(e["dim"], f"{w}.dim", lo=1, hi=n)
        edges.append(HeteroclinicEdge(ends[0], ends[1], ek, dim))

    betti = None
    if d.get("betti") is not None:
        raw = _list(d["betti"], "betti")
        if len(raw) != n + 1:
            raise SchemaError(f"betti must list {n + 1} numbers, got {len(raw)}", field="betti")
        betti = tuple(_int(b, f"betti[{i}]", lo=0) for i, b in enumerate(raw))
    rank = d.get("pi1_free_rank")
    if rank is not None:
        rank = _int(rank, "pi1_free_rank", lo=0)

    portrait = OrbitPortrait(n, kind, tuple(orbits), tuple(edges), orientable, betti, rank)

    graph = None
    if d.get("graph") is not None:
        graph = _graph_from_dict(d["graph"])
    generic = False
    if d.get("mode") is not None:
        _obj(d["mode"], "mode", _MODE)
        generic = d["mode"].get("generic_graph", False)
        if not isinstance(generic, bool):
            raise SchemaError("mode.generic_graph must be a boolean", field="mode.generic_graph")
    return Scenario(portrait, graph, generic)


def _graph_from_dict(g) -> PortraitGraph:
    _obj(g, "graph", _GRAPH, ("vertices",))
    vertices = []
    ids = set()
    for i, v in enumerate(_list(g["vertices"], "graph.vertices")):
        w = f"graph.vertices[{i}]"
        _obj(v, w, _VERTEX, ("id",))
        vid = _str(v["id"], f"{w}.id")
        if vid in ids:
            raise SchemaError(f"{w}: duplicate vertex id {vid!r}", field=f"{w}.id")
        ids.add(vid)
        inv = tuple(_int(u, f"{w}.saddle_inventory[{j}]", lo=0)
                    for j, u in enumerate(_list(v.get("saddle_inventory", []),
                                                f"{w}.saddle_inventory")))
        vertices.append(PolarPiece(vid, inv))
    edges = []
    for i, e in enumerate(_list(g.get("edges", []), "graph.edges")):
        w = f"graph.edges[{i}]"
        _obj(e, w, _CUT_EDGE, ("saddle_id", "a", "b"))
        sid, a, b = (_str(e[k], f"{w}.{k}") for k in ("saddle_id", "a", "b"))
        for k, x in (("a", a), ("b", b)):
            if x not in ids:
                raise SchemaError(f"{w}.{k}: unknown vertex {x!r}", field=f"{w}.{k}")
        edges.append(CutEdge(sid, a, b))
    return PortraitGraph(tuple(vertices), tuple(edges))


def parse_scenario(data: bytes | str) -> Scenario:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SchemaError(f"input is not UTF-8: {exc.reason} at byte {exc.start}") from None
    try:
        d = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"JSON syntax error: {exc.msg}", line=exc.lineno,
                          column=exc.colno) from None
    except RecursionError:
        raise SchemaError("JSON nesting too deep") from None
    return scenario_from_dict(d)


def scenario_to_dict(s: Scenario) -> dict:
    p = s.portrait
    d = {
        "dimension": p.dimension,
        "system_kind": p.system_kind.value,
        "orientable": p.orientable,
        "orbits": [{"id": o.id, "kind": o.kind.value, "unstable_dim": o.unstable_dim,
                    "period": o.period} for o in p.orbits],
        "edges": [({"from": e.from_id, "to": e.to_id, "kind": e.kind.value}
                   | ({"dim": e.dim} if e.kind is EdgeKind.SUBMANIFOLD else {}))
                  for e in p.edges],
        "betti": list(p.betti) if p.betti is not None else None,
        "pi1_free_rank": p.pi1_free_rank,
    }
    if s.graph is not None:
        d["graph"] = s.graph.to_dict()
    if s.generic_graph:
        d["mode"] = {"generic_graph": True}
    return d


def render_scenario(s: Scenario) -> str:
    return json.dumps(scenario_to_dict(s), indent=2, ensure_ascii=False)
