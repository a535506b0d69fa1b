"""Smale order on saddles and the search for a freely cuttable saddle."""

from __future__ import annotations

from dataclasses import dataclass, replace
from graphlib import CycleError, TopologicalSorter

from .errors import HypothesisViolation, OrderCycleError
from .portrait import OrbitPortrait, touched_separatrix_owners


@dataclass(frozen=True)
class SmaleOrder:
    """Strict order p ≺ q  iff  W^s(p) ∩ W^u(q) ≠ ∅ (generated by the edges).

    ``pairs`` holds the generating pairs as read off the heteroclinic edges,
    ``topological`` a linear extension certifying acyclicity.
    """

    elements: tuple[str, ...]
    pairs: frozenset
    topological: tuple[str, ...]

    def successors(self, a):
        return sorted(b for (x, b) in self.pairs if x == a)

    def closure(self) -> frozenset:
        out = set()
        for a in self.elements:
            stack = list(self.successors(a))
            seen = set()
            while stack:
                b = stack.pop()
                if b in seen:
                    continue
                seen.add(b)
                out.add((a, b))
                stack.extend(self.successors(b))
        return frozenset(out)

    def covering(self) -> frozenset:
        """Transitive reduction: a ≺ b with nothing strictly between."""
        clo = self.closure()
        return frozenset((a, b) for (a, b) in clo
                         if not any((a, c) in clo and (c, b) in clo for c in self.elements))

    def less(self, a, b) -> bool:
        return (a, b) in self.closure()

    def maximal(self) -> list[str]:
        below = {a for (a, _) in self.pairs}
        return sorted(x for x in self.elements if x not in below)

    def minimal(self) -> list[str]:
        above = {b for (_, b) in self.pairs}
        return sorted(x for x in self.elements if x not in above)


def smale_order(p: OrbitPortrait) -> SmaleOrder:
    saddles = tuple(sorted(o.id for o in p.saddles()))
    pairs = frozenset((e.from_id, e.to_id) for e in p.edges)
    ts = TopologicalSorter({s: () for s in saddles})
    for a, b in sorted(pairs):
        ts.add(b, a)
    try:
        topo = tuple(ts.static_order())
    except CycleError as exc:
        cycle = exc.args[1]
        raise OrderCycleError("heteroclinic relation has a cycle "
                              + " ≺ ".join(reversed(cycle))
                              + "; a Morse-Smale order is strict", cycle) from None
    return SmaleOrder(saddles, pairs, topo)


def _touched(p: OrbitPortrait) -> dict[str, list]:
    touched: dict[str, list] = {}
    for e in p.edges:
        for owner in touched_separatrix_owners(p, e):
            touched.setdefault(owner, []).append(e)
    return touched


def cuttable_saddles(p: OrbitPortrait) -> list[str]:
    """Codimension-one saddles whose codimension-one separatrix meets no edge."""
    touched = _touched(p)
    return sorted(o.id for o in p.codim_one_saddles() if o.id not in touched)


def find_cuttable_saddle(p: OrbitPortrait) -> str:
    if not p.codim_one_saddles():
        raise HypothesisViolation("no codimension-one saddle to cut (nu = 0)")
    found = cuttable_saddles(p)
    if not found:
        raise HypothesisViolation(
            "every codimension-one separatrix carries a heteroclinic intersection; "
            "the heteroclinic relation cannot be a strict order")
    return found[0]


def chain_walk(p: OrbitPortrait, start: str) -> list[str]:
    """Follow heteroclinic points along codimension-one separatrices from ``start``.

    Each step moves to the other saddle of an edge lying on the current
    saddle's codimension-one separatrix; the walk ends at a saddle whose
    separatrix is free. Ties go to the lowest id.
    """
    touched = _touched(p)
    chain = [start]
    while chain[-1] in touched:
        cur = chain[-1]
        nxt = sorted({e.to_id if e.from_id == cur else e.from_id for e in touched[cur]})
        step = nxt[0]
        if step in chain:
            raise OrderCycleError("chain returns to " + step, chain + [step])
        chain.append(step)
    return chain


def cutting_sequence(p: OrbitPortrait) -> list[str]:
    """Codimension-one saddles in an order where each is freely cuttable when reached.

    Cutting a saddle removes its invariant manifolds, so its edges are dropped
    before the next search.
    """
    cur = p
    seq = []
    while cur.codim_one_saddles():
        s = find_cuttable_saddle(cur)
        seq.append(s)
        cur = replace(cur,
                      orbits=tuple(o for o in cur.orbits if o.id != s),
                      edges=tuple(e for e in cur.edges if s not in (e.from_id, e.to_id)))
    return seq
