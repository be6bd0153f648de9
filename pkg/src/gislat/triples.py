"""Wang triples (H, W, f) and their pointwise lattice calculus.

A triple consists of a hereditary vertex set H, a set W of vertices with
exactly one surviving out-edge once H is removed, and a cycle function f
assigning a positive integer or infinity to every cycle, forced to 1 on
cycles inside H and to infinity on cycles leaving H union W.  Triples
parametrise the congruences of the graph inverse semigroup, and the order,
join, meet, cover and atom operations below work for any finite graph,
cyclic or not.
"""

from __future__ import annotations

import math

from .graphs import Digraph, bits

INF = math.inf


def divides(a, b) -> bool:
    """a | b in the positive integers extended by infinity: n | inf and
    inf | inf hold, inf | n does not."""
    if b == INF:
        return True
    if a == INF:
        return False
    return b % a == 0


def ext_gcd(a, b):
    if a == INF:
        return b
    if b == INF:
        return a
    return math.gcd(a, b)


def ext_lcm(a, b):
    if a == INF or b == INF:
        return INF
    return a * b // math.gcd(a, b)


def is_prime(n) -> bool:
    if n == INF or n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class WangTriple:
    """An (H, W, f) triple on a fixed graph, validated at construction.

    f is given as a mapping (or pair iterable) from canonical cycles to
    values; only finite values on cycles through W are stored, every other
    value being forced.  Instances are immutable, hashable, and compare
    equal exactly when all three components agree on the same graph.
    """

    __slots__ = ("graph", "H", "W", "f", "_fmap", "_hash")

    def __init__(self, graph: Digraph, H: int, W: int, f=()):
        if H & ~graph.full or W & ~graph.full:
            raise ValueError("vertex set out of range")
        if not graph.is_hereditary(H):
            raise ValueError("H is not hereditary")
        if W & H:
            raise ValueError("W meets H")
        for w in bits(W):
            if graph.out_degree_minus(w, H) != 1:
                raise ValueError(
                    f"vertex {graph.names[w]!r} does not have exactly one "
                    f"out-edge surviving H")
        store = {}
        for c, val in dict(f).items():
            c = tuple(c)
            if val != INF and not (isinstance(val, int) and val >= 1):
                raise ValueError("cycle values must be positive integers or INF")
            try:
                src = graph.cycle_sources(c)
            except KeyError:
                raise ValueError(f"unknown or non-canonical cycle {c!r}") from None
            if src & ~H == 0:
                if val != 1:
                    raise ValueError("cycles inside H must map to 1")
            elif src & ~(H | W) == 0:
                if val != INF:
                    store[c] = val
            elif val != INF:
                raise ValueError("cycles leaving H and W must map to INF")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "H", H)
        object.__setattr__(self, "W", W)
        object.__setattr__(self, "f", tuple(sorted(store.items())))
        object.__setattr__(self, "_fmap", store)
        object.__setattr__(self, "_hash", hash((graph, H, W, self.f)))

    def __setattr__(self, name, value):
        raise AttributeError("WangTriple is immutable")

    def value(self, cycle) -> int:
        """f evaluated at a canonical cycle."""
        cycle = tuple(cycle)
        got = self._fmap.get(cycle)
        if got is not None:
            return got
        if self.graph.cycle_sources(cycle) & ~self.H == 0:
            return 1
        return INF

    def __eq__(self, other):
        return (isinstance(other, WangTriple)
                and self.graph == other.graph
                and self.H == other.H and self.W == other.W
                and self.f == other.f)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        g = self.graph
        hs = "{" + ",".join(g.names[v] for v in bits(self.H)) + "}"
        ws = "{" + ",".join(g.names[v] for v in bits(self.W)) + "}"
        if g.is_acyclic():
            fs = "∅"
        elif not self.f:
            fs = "1"
        else:
            fs = "{" + ", ".join(f"{list(c)}:{v}" for c, v in self.f) + "}"
        return f"({hs}, {ws}, {fs})"


def validate(graph: Digraph, H: int, W: int, f=()) -> WangTriple:
    """Construct an (H, W, f) triple, raising ValueError unless valid."""
    return WangTriple(graph, H, W, f)


def _same_graph(t1: WangTriple, t2: WangTriple) -> Digraph:
    if t1.graph != t2.graph:
        raise ValueError("triples live on different graphs")
    return t1.graph


def _support_cycles(t1, t2, extra: int = 0):
    g = t1.graph
    mask = t1.H | t1.W | t2.H | t2.W | extra
    return g.cycles_in(mask)


def leq(t1: WangTriple, t2: WangTriple) -> bool:
    """The containment order: H grows, W survives outside the new H, and
    the second cycle function divides the first everywhere."""
    _same_graph(t1, t2)
    if t1.H & ~t2.H:
        return False
    if (t1.W & ~t2.H) & ~t2.W:
        return False
    for c in _support_cycles(t1, t2):
        if not divides(t2.value(c), t1.value(c)):
            return False
    return True


def _v0(g: Digraph, t1: WangTriple, t2: WangTriple) -> int:
    """Vertices of (W1 u W2) \\ (H1 u H2) with no surviving out-edge."""
    h12 = t1.H | t2.H
    v0 = 0
    for v in bits((t1.W | t2.W) & ~h12):
        if g.out_degree_minus(v, h12) == 0:
            v0 |= 1 << v
    return v0


def join(t1: WangTriple, t2: WangTriple) -> WangTriple:
    """Least upper bound: H1 u H2 u J, the leftover W's, and the gcd of the
    cycle functions.

    J holds the vertices of (W1 u W2) \\ (H1 u H2) from which some vertex
    with no surviving out-edge is reachable along a path whose intermediate
    sources stay inside W1 u W2; a path of length 0 qualifies, so all such
    dead-end vertices belong to J themselves.
    """
    g = _same_graph(t1, t2)
    h12 = t1.H | t2.H
    ww = t1.W | t2.W
    v0 = _v0(g, t1, t2)
    reached = v0
    grew = True
    while grew:
        grew = False
        allowed = reached & ww
        for v in range(g.n):
            if reached >> v & 1:
                continue
            for e in g.out_edges[v]:
                if allowed >> g.edges[e][1] & 1:
                    reached |= 1 << v
                    grew = True
                    break
    j = reached & ww & ~h12
    H = h12 | j
    W = ww & ~H
    f = {}
    for c in set(_support_cycles(t1, t2, H | W)):
        f[c] = ext_gcd(t1.value(c), t2.value(c))
    return WangTriple(g, H, W, f)


def meet(t1: WangTriple, t2: WangTriple) -> WangTriple:
    """Greatest lower bound: H1 n H2, the crossed-over W's minus the
    dead-end vertices, and the lcm of the cycle functions."""
    g = _same_graph(t1, t2)
    v0 = _v0(g, t1, t2)
    H = t1.H & t2.H
    W = (t1.W & t2.H) | (t2.W & t1.H) | ((t1.W & t2.W) & ~v0)
    f = {}
    for c in set(_support_cycles(t1, t2, H | W)):
        f[c] = ext_lcm(t1.value(c), t2.value(c))
    return WangTriple(g, H, W, f)


def meet_no_fork(t1: WangTriple, t2: WangTriple) -> WangTriple:
    """Meet fast path for graphs without forked vertices: the dead-end set
    never meets W1 n W2, so it is not computed at all."""
    g = _same_graph(t1, t2)
    if g.forked_vertices():
        raise ValueError("graph has forked vertices")
    H = t1.H & t2.H
    W = (t1.W & t2.H) | (t2.W & t1.H) | (t1.W & t2.W)
    f = {}
    for c in set(_support_cycles(t1, t2, H | W)):
        f[c] = ext_lcm(t1.value(c), t2.value(c))
    return WangTriple(g, H, W, f)


def _f_equal(t1, t2, cycles) -> bool:
    return all(t1.value(c) == t2.value(c) for c in cycles)


def _cover_kind(t1: WangTriple, t2: WangTriple):
    """Which cover shape t1 < t2 exhibits: 'f' (one cycle value drops by a
    prime), 'w' (W gains one vertex), 'h' (H grows), or None."""
    g = t1.graph
    if t1.H == t2.H:
        if t1.W == t2.W:
            diffs = [c for c in g.cycles_in(t1.W)
                     if t1.value(c) != t2.value(c)]
            if len(diffs) != 1:
                return None
            a, b = t1.value(diffs[0]), t2.value(diffs[0])
            if a == INF:
                return None
            return "f" if is_prime(a // b) else None
        if (t2.W & ~t1.W).bit_count() != 1:
            return None
        cycles = set(g.cycles_in(t1.H | t1.W)) | set(g.cycles_in(t2.H | t2.W))
        return "w" if _f_equal(t1, t2, cycles) else None
    # H1 strictly below H2
    if t1.W & ~t2.H != t2.W:
        return None
    gained = 0
    for v in bits(t2.H & ~t1.H):
        if g.out_degree_minus(v, t1.H) == 1:
            gained |= 1 << v
    if t1.W & t2.H != gained:
        return None
    if not _f_equal(t1, t2, g.cycles_in(t1.W)):
        return None
    for h in t1.graph.hereditary_sets():
        if h == t1.H or h == t2.H:
            continue
        if t1.H & ~h == 0 and h & ~t2.H == 0:
            # strictly intermediate hereditary set: some W1-vertex outside it
            # must have all its out-edges ranging into it
            edges = g.edges
            if not any(all(h >> edges[e][1] & 1 for e in g.out_edges[v])
                       for v in bits(t1.W & ~h)):
                return None
    return "h"


def covers(t1: WangTriple, t2: WangTriple) -> bool:
    """Does t2 cover t1?  Requires t1 strictly below t2."""
    _same_graph(t1, t2)
    if t1 == t2 or not leq(t1, t2):
        raise ValueError("covers() requires strictly comparable triples")
    return _cover_kind(t1, t2) is not None


def downward_directed_check(t1: WangTriple, t2: WangTriple) -> bool:
    """For an H-growing cover, whether H2 \\ H1 is downward directed."""
    _same_graph(t1, t2)
    if t1 == t2 or not leq(t1, t2) or _cover_kind(t1, t2) != "h":
        raise ValueError("not an H-growing cover pair")
    return t1.graph.is_downward_directed(t2.H & ~t1.H)


def atoms(graph: Digraph):
    """All atoms: singleton-W triples over an empty H, and hereditary
    strongly connected components whose non-sink vertices all have two or
    more out-edges."""
    out = []
    for v in range(graph.n):
        if graph.out_degree_minus(v, 0) == 1:
            out.append(WangTriple(graph, 0, 1 << v))
    for comp in graph.strongly_connected_components():
        if not graph.is_hereditary(comp):
            continue
        if all(len(graph.out_edges[v]) != 1 for v in bits(comp)):
            out.append(WangTriple(graph, comp, 0))
    return out


def vertex_element(v: int):
    """The vertex v as a semigroup element (an empty-path pair)."""
    return ((v, ()), (v, ()))


def generating_pairs(t: WangTriple):
    """The pair set whose congruence closure realises the triple: vertices
    of H collapse to zero, each W-vertex collapses onto its surviving
    idempotent, and each finite cycle power collapses onto its source."""
    g = t.graph
    pairs = [(vertex_element(v), None) for v in bits(t.H)]
    for w in bits(t.W):
        e = next(e for e in g.out_edges[w] if not t.H >> g.edges[e][1] & 1)
        pairs.append((vertex_element(w), ((w, (e,)), (w, (e,)))))
    for c, val in t.f:
        s = g.edges[c[0]][0]
        pairs.append((((s, c * val), (s, ())), vertex_element(s)))
    return pairs
