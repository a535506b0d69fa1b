import random

import pytest

from msdecomp.cutting import CutEdge, PolarPiece, PortraitGraph
from msdecomp.portrait import (HeteroclinicEdge, OrbitKind, OrbitPortrait, PeriodicOrbit,
                               SystemKind)

DIFF = SystemKind.DIFFEOMORPHISM
FLOW = SystemKind.GRADIENT_LIKE_FLOW


def portrait(n, sinks=1, sources=1, saddles=(), edges=(), kind=DIFF, **kw):
    """Build a portrait. ``saddles`` holds (id, unstable_dim) or (id, unstable_dim, period);
    ``sinks``/``sources`` are counts of period-1 nodes or lists of periods."""
    orbits = []
    for label, okind, u, nodes in (("w", OrbitKind.SINK, 0, sinks),
                                  ("a", OrbitKind.SOURCE, n, sources)):
        periods = [1] * nodes if isinstance(nodes, int) else list(nodes)
        orbits += [PeriodicOrbit(f"{label}{i}", okind, u, per) for i, per in enumerate(periods)]
    for s in saddles:
        sid, u, *rest = s
        orbits.append(PeriodicOrbit(sid, OrbitKind.SADDLE, u, rest[0] if rest else 1))
    return OrbitPortrait(n, kind, tuple(orbits), tuple(edges), **kw)


def pts(frm, to):
    return HeteroclinicEdge(frm, to)


def graph(vertices, edges):
    """``vertices``: ids or (id, inventory); ``edges``: (saddle, a, b)."""
    vs = [PolarPiece(v) if isinstance(v, str) else PolarPiece(*v) for v in vertices]
    return PortraitGraph(tuple(vs), tuple(CutEdge(*e) for e in edges))


def connected_components_bfs(vertex_ids, edges):
    """Reference component count by breadth-first search (no union-find)."""
    adj = {v: [] for v in vertex_ids}
    for e in edges:
        adj[e.a].append(e.b)
        adj[e.b].append(e.a)
    seen, comps = set(), 0
    for v in vertex_ids:
        if v in seen:
            continue
        comps += 1
        queue = [v]
        seen.add(v)
        while queue:
            x = queue.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return comps


def random_case(rng: random.Random, max_nu=6, n=None, kind=DIFF):
    """Random admissible (portrait, graph) pair with nu <= max_nu.

    Builds a connected multigraph first, then a portrait whose counts satisfy
    the bookkeeping mu = 2|V| - |E|. Codimension-one saddles of unstable
    dimension n-1 are chained by heteroclinic points along an acyclic order.
    """
    n = n or rng.randint(3, 8)
    nu = rng.randint(0, max_nu)
    k = rng.randint(max(1, (nu + 3) // 2), nu + 1)  # mu = 2k - nu >= 2, connected needs nu >= k-1
    vids = [f"V{i}" for i in range(k)]
    ends = [(vids[rng.randrange(i)], vids[i]) for i in range(1, k)]  # random spanning tree
    for _ in range(nu - (k - 1)):
        ends.append((rng.choice(vids), rng.choice(vids)))
    rng.shuffle(ends)

    # saddle points: occasionally a period-2 orbit owns two edges
    labels, saddles = [], []
    i = 0
    while len(labels) < nu:
        u = rng.choice([1, n - 1])
        per = 2 if kind is DIFF and nu - len(labels) >= 2 and rng.random() < 0.2 else 1
        sid = f"s{i}"
        saddles.append((sid, u, per))
        labels += [sid] * per
        i += 1
    edges = []
    upper = [s for s, u, _ in saddles if u == n - 1]
    if kind is DIFF and n - 1 != 1:
        for a_i in range(len(upper)):
            for b_i in range(a_i + 1, len(upper)):
                if rng.random() < 0.3:
                    edges.append(pts(upper[a_i], upper[b_i]))

    inventories = {v: [] for v in vids}
    other = []
    if n >= 4:
        for j in range(rng.randint(0, 2)):
            u = rng.randint(2, n - 2)
            other.append((f"x{j}", u))
            inventories[rng.choice(vids)].append(u)
    mu = 2 * k - nu
    sinks = rng.randint(1, mu - 1)
    p = portrait(n, sinks, mu - sinks, saddles + other, edges, kind=kind,
                 orientable=rng.choice([True, False, None]))
    g = graph([(v, tuple(inventories[v])) for v in vids],
              [(lab, a, b) for lab, (a, b) in zip(labels, ends)])
    return p, g


@pytest.fixture
def rng():
    return random.Random(20261015)


# -- acceptance bookkeeping: one pass/fail line per criterion -----------------

ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call":
        return
    num, title = marker.args
    detail = dict(item.user_properties).get("detail", "")
    ACCEPTANCE[num] = (title, rep.passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[num]
        line = f"[{'PASS' if ok else 'FAIL'}] {num}. {title}"
        terminalreporter.write_line(line + (f"  ({detail})" if detail else ""))
