"""Plane near-cubic graphs with half-edge structure.

A near-cubic graph is a connected multigraph in which every vertex except a
distinguished boundary vertex ``v`` has degree three.  ``v`` carries label 0,
internal vertices carry labels ``1..n``.  Edge ``e`` owns half-edges ``2e``
(at its first endpoint) and ``2e + 1`` (at its second endpoint); loops and
parallel edges are first-class.  The boundary map ``nu`` assigns each
half-edge at ``v`` a position in ``0..d-1``.

Plane structure is certified constructively: internal vertices may carry a
clockwise cyclic order of their three half-edges (a rotation system), the
order at ``v`` is ``nu^-1(0), ..., nu^-1(d-1)`` by definition, and face
tracing plus Euler's formula yields the genus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, cached_property


class GraphError(ValueError):
    """Structural problem with a graph or a graph operation."""


class GlueError(GraphError):
    """A gluing request is out of range or would produce a degenerate graph."""


class FormatError(ValueError):
    """Malformed graph/vector/cone file."""

    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


@dataclass(frozen=True)
class NearCubicGraph:
    """Near-cubic graph (G, v, nu); immutable after construction.

    ``rotation[i - 1]`` is the clockwise half-edge order at internal vertex
    ``i``; ``None`` means no embedding is recorded.  Construction checks only
    index sanity so that invalid graphs can be built and diagnosed with
    :func:`validate`.
    """

    internal_vertices: int
    edges: tuple
    nu: tuple
    rotation: tuple | None = None

    def __post_init__(self):
        n = self.internal_vertices
        if n < 0:
            raise GraphError("negative vertex count")
        nh = 2 * len(self.edges)
        for e, (a, b) in enumerate(self.edges):
            if not (0 <= a <= n and 0 <= b <= n):
                raise GraphError(f"edge {e} endpoint out of range")
        if len(self.nu) < 2:
            raise GraphError("boundary arity d must be at least 2")
        for h in self.nu:
            if not (0 <= h < nh):
                raise GraphError(f"nu refers to unknown half-edge {h}")
        if self.rotation is not None:
            if len(self.rotation) != n:
                raise GraphError("rotation must cover every internal vertex")
            for cyc in self.rotation:
                if len(cyc) != 3 or any(not (0 <= h < nh) for h in cyc):
                    raise GraphError("rotation entries must be 3 valid half-edges")

    @property
    def d(self):
        return len(self.nu)

    def vertex_of(self, h):
        return self.edges[h >> 1][h & 1]

    @cached_property
    def halves_at(self):
        at = [[] for _ in range(self.internal_vertices + 1)]
        for h in range(2 * len(self.edges)):
            at[self.vertex_of(h)].append(h)
        return tuple(tuple(hs) for hs in at)

    @cached_property
    def position_of(self):
        """Map half-edge id -> boundary position, for halves listed in nu."""
        return {h: p for p, h in enumerate(self.nu)}


@dataclass(frozen=True)
class ClosedGraph:
    """Cubic graph with no boundary vertex (the result of an oplus join).

    ``free_loops`` counts vertexless closed curves produced when chords are
    spliced end to end; each contributes a free factor of 3 to the number of
    3-edge-colorings.
    """

    vertices: int
    edges: tuple
    rotation: tuple | None = None
    free_loops: int = 0

    def __post_init__(self):
        for e, (a, b) in enumerate(self.edges):
            if not (0 <= a < self.vertices and 0 <= b < self.vertices):
                raise GraphError(f"edge {e} endpoint out of range")

    def vertex_of(self, h):
        return self.edges[h >> 1][h & 1]

    @cached_property
    def halves_at(self):
        at = [[] for _ in range(self.vertices)]
        for h in range(2 * len(self.edges)):
            at[self.vertex_of(h)].append(h)
        return tuple(tuple(hs) for hs in at)


# ---------------------------------------------------------------------------
# Face tracing and diagnostics


def _face_count(cycles, half_count):
    """Number of orbits of h -> next-clockwise(twin(h)) over all half-edges."""
    succ = {}
    for cyc in cycles:
        for i, h in enumerate(cyc):
            if h in succ:
                raise GraphError(f"half-edge {h} appears in two rotation cycles")
            succ[h] = cyc[(i + 1) % len(cyc)]
    if len(succ) != half_count:
        raise GraphError("rotation cycles do not cover all half-edges")
    seen = [False] * half_count
    faces = 0
    for start in range(half_count):
        if seen[start]:
            continue
        faces += 1
        h = start
        while not seen[h]:
            seen[h] = True
            h = succ[h ^ 1]
    return faces


def _components(num_vertices, edges):
    parent = list(range(num_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    roots = {find(x) for x in range(num_vertices)}
    return len(roots), find


def genus(g):
    """Euler genus of the recorded embedding of a connected near-cubic graph."""
    if g.rotation is None:
        raise GraphError("no rotation system recorded")
    ncomp, _ = _components(g.internal_vertices + 1, g.edges)
    if ncomp != 1:
        raise GraphError("genus requires a connected graph")
    cycles = [tuple(g.nu)] + list(g.rotation)
    faces = _face_count(cycles, 2 * len(g.edges))
    euler = (g.internal_vertices + 1) - len(g.edges) + faces
    if (2 - euler) % 2:
        raise GraphError("odd Euler defect: rotation system is inconsistent")
    return (2 - euler) // 2


def closed_genus(h):
    """Total Euler genus over the components of a closed cubic graph."""
    if h.rotation is None:
        raise GraphError("no rotation system recorded")
    if h.vertices == 0:
        return 0
    ncomp, find = _components(h.vertices, h.edges)
    cycles = list(h.rotation)
    succ_cycles = {}
    for cyc in cycles:
        for i, hh in enumerate(cyc):
            succ_cycles[hh] = cyc[(i + 1) % len(cyc)]
    # Per-component counts: vertices, edges, faces.
    comp_v = {}
    for x in range(h.vertices):
        comp_v[find(x)] = comp_v.get(find(x), 0) + 1
    comp_e = {}
    for a, _b in h.edges:
        comp_e[find(a)] = comp_e.get(find(a), 0) + 1
    seen = [False] * (2 * len(h.edges))
    comp_f = {}
    for start in range(2 * len(h.edges)):
        if seen[start]:
            continue
        root = find(h.vertex_of(start))
        comp_f[root] = comp_f.get(root, 0) + 1
        hh = start
        while not seen[hh]:
            seen[hh] = True
            hh = succ_cycles[hh ^ 1]
    total = 0
    for root, nv in comp_v.items():
        euler = nv - comp_e.get(root, 0) + comp_f.get(root, 0)
        if (2 - euler) % 2:
            raise GraphError("odd Euler defect: rotation system is inconsistent")
        total += (2 - euler) // 2
    return total


def validate(g):
    """Diagnostic check of the near-cubic invariants.

    Returns the list of violated invariants (empty means pass).  Never
    raises: callers that need a hard failure should test the result.
    """
    problems = []
    v_halves = set(g.halves_at[0])
    if len(set(g.nu)) != len(g.nu):
        problems.append("nu assigns one position to two half-edges")
    if set(g.nu) != v_halves:
        problems.append("nu is not a bijection from the half-edges at v")
    for u in range(1, g.internal_vertices + 1):
        deg = len(g.halves_at[u])
        if deg != 3:
            problems.append(f"internal vertex {u} has degree {deg}")
    ncomp, _ = _components(g.internal_vertices + 1, g.edges)
    if ncomp != 1:
        problems.append("graph is not connected")
    if g.rotation is not None and not problems:
        for u in range(1, g.internal_vertices + 1):
            if sorted(g.rotation[u - 1]) != sorted(g.halves_at[u]):
                problems.append(f"rotation at vertex {u} does not list its half-edges")
        if not problems:
            gen = genus(g)
            if gen != 0:
                problems.append(f"embedding has genus {gen}")
    return problems


def validate_closed(h):
    """Diagnostics for a closed cubic graph (degrees and planarity)."""
    problems = []
    for u in range(h.vertices):
        deg = len(h.halves_at[u])
        if deg != 3:
            problems.append(f"vertex {u} has degree {deg}")
    if h.rotation is not None and not problems:
        if len(h.rotation) != h.vertices:
            problems.append("rotation must cover every vertex")
        else:
            for u in range(h.vertices):
                if sorted(h.rotation[u]) != sorted(h.halves_at[u]):
                    problems.append(f"rotation at vertex {u} does not list its half-edges")
            if not problems:
                gen = closed_genus(h)
                if gen != 0:
                    problems.append(f"embedding has genus {gen}")
    return problems


def girth(h):
    """Length of a shortest cycle of a closed graph (1 = loop, 2 = parallel)."""
    adj = [[] for _ in range(h.vertices)]
    for e, (a, b) in enumerate(h.edges):
        if a == b:
            return 1
        adj[a].append((b, e))
        adj[b].append((a, e))
    seen_pairs = set()
    for a, b in h.edges:
        key = (min(a, b), max(a, b))
        if key in seen_pairs:
            return 2
        seen_pairs.add(key)
    best = None
    for e, (a, b) in enumerate(h.edges):
        # Shortest a-b path avoiding e closes the shortest cycle through e.
        dist = {a: 0}
        queue = [a]
        while queue and b not in dist:
            nq = []
            for u in queue:
                for w, ee in adj[u]:
                    if ee == e or w in dist:
                        continue
                    dist[w] = dist[u] + 1
                    nq.append(w)
            queue = nq
        if b in dist:
            cyc = dist[b] + 1
            if best is None or cyc < best:
                best = cyc
    return best


# ---------------------------------------------------------------------------
# Builders


def _polar(angle_deg, radius=1.0):
    a = math.radians(angle_deg)
    return (radius * math.cos(a), radius * math.sin(a))


def _clockwise(center, attached):
    """Clockwise cyclic order of half-edges around a drawn vertex.

    ``attached`` is a list of (half_id, point); clockwise in standard plane
    coordinates means decreasing polar angle.
    """
    cx, cy = center
    return tuple(
        h
        for h, (x, y) in sorted(
            attached, key=lambda t: -math.atan2(t[1][1] - cy, t[1][0] - cx)
        )
    )


def build_wheel(n):
    """The wheel C~_n: an n-cycle of internal vertices, one spoke each to v."""
    if n < 3:
        raise GraphError("wheel needs n >= 3")
    edges = [(i, 0) for i in range(1, n + 1)]
    edges += [(i, i % n + 1) for i in range(1, n + 1)]
    nu = tuple(2 * (i - 1) + 1 for i in range(1, n + 1))
    rotation = []
    for i in range(1, n + 1):
        theta = 90.0 + 360.0 * (i - 1) / n
        here = _polar(theta, 0.5)
        spoke = 2 * (i - 1)
        nxt = 2 * (n + i - 1)
        prev_edge = n + i - 2 if i >= 2 else 2 * n - 1
        prev = 2 * prev_edge + 1
        prev_at = _polar(theta - 360.0 / n, 0.5)
        next_at = _polar(theta + 360.0 / n, 0.5)
        rotation.append(
            _clockwise(here, [(spoke, _polar(theta, 1.1)), (prev, prev_at), (nxt, next_at)])
        )
    return NearCubicGraph(n, tuple(edges), nu, tuple(rotation))


def rotate_graph(g, t):
    """Relabel nu by rotation t: new position (i + t) mod d was position i."""
    d = g.d
    if not (0 <= t < d):
        raise GraphError("rotation offset out of range")
    nu = tuple(g.nu[(q - t) % d] for q in range(d))
    return NearCubicGraph(g.internal_vertices, g.edges, nu, g.rotation)


def flip_graph(g):
    """Mirror image: nu reversed, every rotation cycle reversed."""
    nu = tuple(reversed(g.nu))
    rot = None
    if g.rotation is not None:
        rot = tuple(tuple(reversed(cyc)) for cyc in g.rotation)
    return NearCubicGraph(g.internal_vertices, g.edges, nu, rot)


def _splice(items, pairing):
    """Fuse edges whose ends meet at paired stubs.

    ``items``: list of (end0, end1) where an end is ('v', label, slot) or
    ('s', stubkey).  ``pairing`` maps fused stubkeys to their partners (both
    directions).  Stubs absent from ``pairing`` survive as boundary ends.

    Returns (chains, loops): each chain is (end0, end1) of a fused edge, and
    ``loops`` counts closed chains with no terminal end.
    """
    stub_end = {}
    for idx, (e0, e1) in enumerate(items):
        for side, end in ((0, e0), (1, e1)):
            if end[0] == "s" and end[1] in pairing:
                stub_end[end[1]] = (idx, side)
    visited = [False] * len(items)

    def is_terminal(end):
        return end[0] == "v" or end[1] not in pairing

    def walk(idx, side):
        """Follow fused edges starting out of items[idx] through end ``side``.

        Returns the terminal end reached, or None if the chain closes on
        itself (a vertexless loop).
        """
        while True:
            visited[idx] = True
            end = items[idx][side]
            if is_terminal(end):
                return end
            partner = pairing[end[1]]
            idx, pside = stub_end[partner]
            if visited[idx]:
                return None
            side = 1 - pside

    chains = []
    for idx, (e0, e1) in enumerate(items):
        if visited[idx]:
            continue
        if is_terminal(e0):
            chains.append((e0, walk(idx, 1)))
        elif is_terminal(e1):
            chains.append((e1, walk(idx, 0)))
    loops = 0
    for idx in range(len(items)):
        if not visited[idx]:
            loops += 1
            walk(idx, 1)  # mark the whole closed chain
    return chains, loops


def _tagged_items(g, tag, relabel):
    items = []
    for e, (a, b) in enumerate(g.edges):
        ends = []
        for side, vert in ((0, a), (1, b)):
            h = 2 * e + side
            if vert == 0:
                ends.append(("s", (tag, g.position_of[h])))
            else:
                ends.append(("v", relabel(vert), (tag, h)))
        items.append(tuple(ends))
    return items


def _assemble(chains, n_vertices):
    """Build edge list plus slot/stub maps from spliced chains."""
    edges = []
    slot_map = {}
    stub_map = {}
    for j, (e0, e1) in enumerate(chains):
        ends = []
        for side, end in ((0, e0), (1, e1)):
            h = 2 * j + side
            if end[0] == "v":
                ends.append(end[1])
                slot_map[end[2]] = h
            else:
                ends.append(0)
                stub_map[end[1]] = h
        edges.append(tuple(ends))
    return tuple(edges), slot_map, stub_map


def glue(g1, g2, k):
    """gamma_k: identify the boundary vertices and join the last k boundary
    positions of g1 to the last k of g2 in reversed order."""
    d1, d2 = g1.d, g2.d
    if not (0 <= k <= min(d1, d2)):
        raise GlueError("k out of range")
    d = d1 + d2 - 2 * k
    if d < 2:
        raise GlueError("gluing would leave a boundary of arity < 2")
    n1 = g1.internal_vertices
    items = _tagged_items(g1, "a", lambda u: u) + _tagged_items(g2, "b", lambda u: u + n1)
    pairing = {}
    for i in range(k):
        s1 = ("a", d1 - k + i)
        s2 = ("b", d2 - 1 - i)
        pairing[s1] = s2
        pairing[s2] = s1
    chains, loops = _splice(items, pairing)
    if loops:
        raise GlueError("gluing would create a vertexless loop")
    edges, slot_map, stub_map = _assemble(chains, n1 + g2.internal_vertices)
    nu = tuple(stub_map[("a", p)] for p in range(d1 - k)) + tuple(
        stub_map[("b", p)] for p in range(d2 - k)
    )
    rotation = None
    if g1.rotation is not None and g2.rotation is not None:
        rotation = tuple(
            tuple(slot_map[("a", h)] for h in cyc) for cyc in g1.rotation
        ) + tuple(tuple(slot_map[("b", h)] for h in cyc) for cyc in g2.rotation)
    return NearCubicGraph(n1 + g2.internal_vertices, edges, nu, rotation)


def oplus(g1, g2):
    """Join boundary position i of g1 to position i of g2, erasing v.

    Position matching differs from gamma's reversal; the mirror difference is
    why g2's rotation cycles are reversed in the composed embedding.
    """
    if g1.d != g2.d:
        raise GlueError("oplus needs equal boundary arities")
    n1 = g1.internal_vertices
    items = _tagged_items(g1, "a", lambda u: u - 1) + _tagged_items(
        g2, "b", lambda u: n1 + u - 1
    )
    pairing = {}
    for i in range(g1.d):
        pairing[("a", i)] = ("b", i)
        pairing[("b", i)] = ("a", i)
    chains, loops = _splice(items, pairing)
    edges, slot_map, _ = _assemble(chains, n1 + g2.internal_vertices)
    rotation = None
    if g1.rotation is not None and g2.rotation is not None:
        rotation = tuple(
            tuple(slot_map[("a", h)] for h in cyc) for cyc in g1.rotation
        ) + tuple(
            tuple(slot_map[("b", h)] for h in reversed(cyc)) for cyc in g2.rotation
        )
    return ClosedGraph(n1 + g2.internal_vertices, edges, rotation, free_loops=loops)


# ---------------------------------------------------------------------------
# Catalog of the published ray graphs


def _r21():
    return NearCubicGraph(0, ((0, 0),), (0, 1), ())


def _r31():
    stubs = [_polar(90 + 120 * j, 1.1) for j in range(3)]
    rot = (_clockwise((0.0, 0.0), [(2 * j, stubs[j]) for j in range(3)]),)
    return NearCubicGraph(1, ((1, 0), (1, 0), (1, 0)), (1, 3, 5), rot)


def _r41():
    return NearCubicGraph(0, ((0, 0), (0, 0)), (0, 1, 2, 3), ())


def _r43():
    a = _polar(90, 0.3)
    b = _polar(270, 0.3)
    stubs = [_polar(45 + 90 * j, 1.1) for j in range(4)]
    edges = ((1, 0), (1, 0), (2, 0), (2, 0), (1, 2))
    rot_a = _clockwise(a, [(0, stubs[0]), (2, stubs[1]), (8, b)])
    rot_b = _clockwise(b, [(4, stubs[2]), (6, stubs[3]), (9, a)])
    return NearCubicGraph(2, edges, (1, 3, 5, 7), (rot_a, rot_b))


def _r51():
    stubs = [_polar(90 + 72 * j, 1.1) for j in range(5)]
    edges = ((1, 0), (1, 0), (1, 0), (0, 0))
    rot_a = _clockwise((0.0, 0.0), [(0, stubs[0]), (2, stubs[1]), (4, stubs[4])])
    return NearCubicGraph(1, edges, (1, 3, 6, 7, 5), (rot_a,))


def _r56():
    a = _polar(90, 0.4)
    b = _polar(210, 0.4)
    c = _polar(330, 0.4)
    stubs = [_polar(90 + 72 * j, 1.1) for j in range(5)]
    edges = ((1, 0), (2, 0), (2, 0), (3, 0), (3, 0), (1, 2), (1, 3))
    rot_a = _clockwise(a, [(0, stubs[0]), (10, b), (12, c)])
    rot_b = _clockwise(b, [(2, stubs[1]), (4, stubs[2]), (11, a)])
    rot_c = _clockwise(c, [(6, stubs[3]), (8, stubs[4]), (13, a)])
    return NearCubicGraph(3, edges, (1, 3, 5, 7, 9), (rot_a, rot_b, rot_c))


def _r512():
    n = 5
    edges = [(i, 0) for i in range(1, 6)]
    cyc = [(1, 3), (3, 5), (5, 2), (2, 4), (4, 1)]
    edges += cyc
    nu = tuple(2 * (i - 1) + 1 for i in range(1, 6))
    coords = {i: _polar(90 + 72 * (i - 1), 0.5) for i in range(1, 6)}
    at = {i: [] for i in range(1, 6)}
    for i in range(1, 6):
        at[i].append((2 * (i - 1), _polar(90 + 72 * (i - 1), 1.1)))
    for e, (x, y) in enumerate(cyc, start=n):
        at[x].append((2 * e, coords[y]))
        at[y].append((2 * e + 1, coords[x]))
    rotation = tuple(_clockwise(coords[i], at[i]) for i in range(1, 6))
    return NearCubicGraph(n, tuple(edges), nu, rotation)


@lru_cache(maxsize=None)
def catalog(name):
    """Fixture graphs R_{d,i} of the published ray figure, plus wheels.

    The per-graph nu rotations are fixture data; they are pinned by the
    cross-validation contract (each count vector spans one computed cone
    ray, bijectively) rather than read pixel-perfectly off the figure.
    """
    if name.startswith("Ctilde_"):
        try:
            n = int(name.split("_", 1)[1])
        except ValueError:
            raise GraphError(f"unknown catalog name {name!r}") from None
        return build_wheel(n)
    base = {
        "R_2_1": _r21,
        "R_3_1": _r31,
        "R_4_1": _r41,
        "R_4_3": _r43,
        "R_5_1": _r51,
        "R_5_6": _r56,
        "R_5_12": _r512,
    }
    if name in base:
        return base[name]()
    rotated = {
        "R_4_2": ("R_4_1", 1),
        "R_4_4": ("R_4_3", 1),
        "R_5_11": None,
    }
    if name == "R_5_11":
        return build_wheel(5)
    if name in rotated:
        src, t = rotated[name]
        return rotate_graph(catalog(src), t)
    for i in range(2, 6):
        if name == f"R_5_{i}":
            return rotate_graph(catalog("R_5_1"), i - 1)
    for i in range(7, 11):
        if name == f"R_5_{i}":
            return rotate_graph(catalog("R_5_6"), i - 6)
    raise GraphError(f"unknown catalog name {name!r}")


def catalog_names(d):
    """Names of the published ray graphs of arity d (2 <= d <= 5)."""
    counts = {2: 1, 3: 1, 4: 4, 5: 12}
    if d not in counts:
        raise GraphError(f"no catalog family for d={d}")
    return tuple(f"R_{d}_{i}" for i in range(1, counts[d] + 1))


# ---------------------------------------------------------------------------
# Text format


def save_graph(g, path):
    lines = ["nearcubic 1", f"d {g.d}", f"vertices {g.internal_vertices}"]
    for e, (a, b) in enumerate(g.edges):
        lines.append(f"edge {e} {a} {b}")
    for p, h in enumerate(g.nu):
        lines.append(f"nu {p} {h}")
    if g.rotation is not None:
        for u, cyc in enumerate(g.rotation, start=1):
            lines.append(f"rot {u} {cyc[0]} {cyc[1]} {cyc[2]}")
    text = "\n".join(lines) + "\n"
    with open(path, "w") as fh:
        fh.write(text)


def _tokenized_lines(path):
    with open(path) as fh:
        for no, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if line:
                yield no, line.split()


def _int_field(tokens, i, line, what):
    try:
        return int(tokens[i])
    except (IndexError, ValueError):
        raise FormatError(line, f"expected integer {what}") from None


def load_graph(path):
    """Strict parser for the near-cubic text format."""
    lines = list(_tokenized_lines(path))
    if not lines or lines[0][1] != ["nearcubic", "1"]:
        raise FormatError(lines[0][0] if lines else 1, "missing 'nearcubic 1' header")
    d = None
    n = None
    edges = {}
    nus = {}
    rots = {}
    for no, tok in lines[1:]:
        kind = tok[0]
        if kind == "d":
            if d is not None:
                raise FormatError(no, "duplicate d line")
            d = _int_field(tok, 1, no, "arity")
        elif kind == "vertices":
            if n is not None:
                raise FormatError(no, "duplicate vertices line")
            n = _int_field(tok, 1, no, "vertex count")
        elif kind == "edge":
            if len(tok) != 4:
                raise FormatError(no, "edge needs id and two endpoints")
            e = _int_field(tok, 1, no, "edge id")
            if e in edges:
                raise FormatError(no, f"duplicate edge id {e}")
            edges[e] = (_int_field(tok, 2, no, "endpoint"), _int_field(tok, 3, no, "endpoint"), no)
        elif kind == "nu":
            if len(tok) != 3:
                raise FormatError(no, "nu needs position and half-edge id")
            p = _int_field(tok, 1, no, "position")
            if p in nus:
                raise FormatError(no, f"duplicate nu position {p}")
            nus[p] = (_int_field(tok, 2, no, "half-edge id"), no)
        elif kind == "rot":
            if len(tok) != 5:
                raise FormatError(no, "rot needs vertex and three half-edge ids")
            u = _int_field(tok, 1, no, "vertex")
            if u in rots:
                raise FormatError(no, f"duplicate rot line for vertex {u}")
            rots[u] = (tuple(_int_field(tok, i, no, "half-edge id") for i in (2, 3, 4)), no)
        else:
            raise FormatError(no, f"unknown directive {kind!r}")
    last = lines[-1][0]
    if d is None:
        raise FormatError(last, "missing d line")
    if n is None:
        raise FormatError(last, "missing vertices line")
    if sorted(edges) != list(range(len(edges))):
        raise FormatError(last, "edge ids must be exactly 0..m-1")
    if sorted(nus) != list(range(d)):
        raise FormatError(last, f"nu positions must be exactly 0..{d - 1}")
    edge_list = []
    for e in range(len(edges)):
        a, b, no = edges[e]
        if not (0 <= a <= n and 0 <= b <= n):
            raise FormatError(no, f"edge {e} endpoint out of range")
        edge_list.append((a, b))
    nu = []
    for p in range(d):
        h, no = nus[p]
        if not (0 <= h < 2 * len(edge_list)):
            raise FormatError(no, f"unknown half-edge {h}")
        nu.append(h)
    rotation = None
    if rots:
        if sorted(rots) != list(range(1, n + 1)):
            raise FormatError(last, "rot lines must cover exactly vertices 1..n")
        rotation = tuple(rots[u][0] for u in range(1, n + 1))
    try:
        g = NearCubicGraph(n, tuple(edge_list), tuple(nu), rotation)
    except GraphError as exc:
        raise FormatError(last, str(exc)) from None
    problems = [
        p
        for p in validate(g)
        if "degree" in p or "nu" in p or "rotation at vertex" in p
    ]
    if problems:
        raise FormatError(last, "; ".join(problems))
    return g
