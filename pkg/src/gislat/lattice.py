"""Explicit finite lattices, graph-level predicates, and generating sets.

The full congruence lattice is only materialised for acyclic graphs (it is
infinite otherwise); the predicates at the bottom of the module work on any
finite graph.
"""

from __future__ import annotations

from .graphs import CapExceeded, Digraph, bits
from . import triples
from .triples import WangTriple

DEFAULT_LATTICE_CAP = 10 ** 6


class FiniteLattice:
    """A finite lattice given by its order relation over elements 0..n-1.

    up[i] and down[i] are reflexive bitmask rows of the order; covers are
    the transitive reduction.  Joins and meets are resolved through the
    order matrix and cached.
    """

    def __init__(self, up_rows):
        self.n = n = len(up_rows)
        self.up = list(up_rows)
        down = [0] * n
        for i in range(n):
            if not self.up[i] >> i & 1:
                raise ValueError("order must be reflexive")
            for j in bits(self.up[i]):
                down[j] |= 1 << i
        self.down = down
        self.cover_up = [0] * n
        self.cover_dn = [0] * n
        for i in range(n):
            strict = self.up[i] & ~(1 << i)
            for j in bits(strict):
                if self.up[i] & self.down[j] & ~(1 << i) & ~(1 << j) == 0:
                    self.cover_up[i] |= 1 << j
                    self.cover_dn[j] |= 1 << i
        bottoms = [i for i in range(n) if self.up[i].bit_count() == n]
        tops = [i for i in range(n) if self.down[i].bit_count() == n]
        if len(bottoms) != 1 or len(tops) != 1:
            raise ValueError("order has no unique bottom and top")
        self.bottom = bottoms[0]
        self.top = tops[0]
        self._joins = {}
        self._meets = {}

    @classmethod
    def from_covers(cls, n, cover_pairs):
        up = [1 << i for i in range(n)]
        children = [[] for _ in range(n)]
        for a, b in cover_pairs:
            children[a].append(b)
        # reflexive-transitive closure by upward propagation
        changed = True
        while changed:
            changed = False
            for a in range(n):
                acc = up[a]
                for b in children[a]:
                    acc |= up[b]
                if acc != up[a]:
                    up[a] = acc
                    changed = True
        return cls(up)

    def leq_idx(self, i, j) -> bool:
        return bool(self.up[i] >> j & 1)

    def is_cover(self, i, j) -> bool:
        return bool(self.cover_up[i] >> j & 1)

    def cover_list(self):
        return [(i, j) for i in range(self.n) for j in bits(self.cover_up[i])]

    def _bound(self, common, rows) -> int:
        # least element of `common` when rows are up-masks, greatest when down
        for k in bits(common):
            if common & ~rows[k] == 0:
                return k
        raise ValueError("bound is not unique; not a lattice")

    def join_idx(self, i, j) -> int:
        key = (i, j) if i <= j else (j, i)
        got = self._joins.get(key)
        if got is None:
            got = self._joins[key] = self._bound(self.up[i] & self.up[j], self.up)
        return got

    def meet_idx(self, i, j) -> int:
        key = (i, j) if i <= j else (j, i)
        got = self._meets.get(key)
        if got is None:
            got = self._meets[key] = self._bound(self.down[i] & self.down[j], self.down)
        return got

    def atoms_idx(self):
        return list(bits(self.cover_up[self.bottom]))


class ConLattice(FiniteLattice):
    """The congruence lattice of an acyclic graph as explicit Wang triples.

    Joins and meets delegate to the triple calculus; join_idx_order and
    meet_idx_order resolve them through the order matrix instead, as a
    cross-check.
    """

    def __init__(self, graph: Digraph, elements):
        if not graph.is_acyclic():
            raise ValueError("graph has cycles; its congruence lattice is infinite")
        elements = sorted(set(elements),
                          key=lambda t: ((t.H | t.W).bit_count(), t.H | t.W, t.H))
        self.graph = graph
        self.elements = elements
        self.index = {t: i for i, t in enumerate(elements)}
        n = len(elements)
        hw = [(t.H, t.W) for t in elements]
        up = [0] * n
        for i, (h1, w1) in enumerate(hw):
            row = 0
            for j, (h2, w2) in enumerate(hw):
                if h1 & ~h2 == 0 and (w1 & ~h2) & ~w2 == 0:
                    row |= 1 << j
            up[i] = row
        super().__init__(up)
        # acyclic cover rule: the union H u W grows by exactly one vertex
        self.cover_up = [0] * n
        self.cover_dn = [0] * n
        for i, (h1, w1) in enumerate(hw):
            u1 = h1 | w1
            for j in bits(self.up[i] & ~(1 << i)):
                u2 = hw[j][0] | hw[j][1]
                if (u2 & ~u1).bit_count() == 1:
                    self.cover_up[i] |= 1 << j
                    self.cover_dn[j] |= 1 << i

    def join_idx(self, i, j) -> int:
        key = (i, j) if i <= j else (j, i)
        got = self._joins.get(key)
        if got is None:
            t = triples.join(self.elements[i], self.elements[j])
            try:
                got = self.index[t]
            except KeyError:
                raise ValueError("join left the element list") from None
            self._joins[key] = got
        return got

    def meet_idx(self, i, j) -> int:
        key = (i, j) if i <= j else (j, i)
        got = self._meets.get(key)
        if got is None:
            t = triples.meet(self.elements[i], self.elements[j])
            try:
                got = self.index[t]
            except KeyError:
                raise ValueError("meet left the element list") from None
            self._meets[key] = got
        return got

    def join_idx_order(self, i, j) -> int:
        return self._bound(self.up[i] & self.up[j], self.up)

    def meet_idx_order(self, i, j) -> int:
        return self._bound(self.down[i] & self.down[j], self.down)


def enumerate_lattice(graph: Digraph, cap: int = DEFAULT_LATTICE_CAP) -> ConLattice:
    """All Wang triples of a finite acyclic graph, as an explicit lattice."""
    if not graph.is_acyclic():
        raise ValueError("graph has cycles; its congruence lattice is infinite")
    hsets = graph.hereditary_sets()
    eligible = []
    total = 0
    for H in hsets:
        elig = [v for v in range(graph.n)
                if not H >> v & 1 and graph.out_degree_minus(v, H) == 1]
        eligible.append(elig)
        total += 1 << len(elig)
        if total > cap:
            raise CapExceeded(f"lattice would exceed {cap} elements")
    elements = []
    for H, elig in zip(hsets, eligible):
        for pick in range(1 << len(elig)):
            W = 0
            for k in range(len(elig)):
                if pick >> k & 1:
                    W |= 1 << elig[k]
            elements.append(WangTriple(graph, H, W))
    return ConLattice(graph, elements)


# -- lattice-level property checks ------------------------------------------


def is_upper_semimodular(lat: FiniteLattice) -> bool:
    """Whenever the meet of a and b is covered by both, the join covers both."""
    for a in range(lat.n):
        for b in range(a + 1, lat.n):
            m = lat.meet_idx(a, b)
            if lat.is_cover(m, a) and lat.is_cover(m, b):
                j = lat.join_idx(a, b)
                if not (lat.is_cover(a, j) and lat.is_cover(b, j)):
                    return False
    return True


def is_lower_semimodular(lat: FiniteLattice) -> bool:
    """Whenever a and b are covered by their join, both cover the meet."""
    for a in range(lat.n):
        for b in range(a + 1, lat.n):
            j = lat.join_idx(a, b)
            if lat.is_cover(a, j) and lat.is_cover(b, j):
                m = lat.meet_idx(a, b)
                if not (lat.is_cover(m, a) and lat.is_cover(m, b)):
                    return False
    return True


def is_modular(lat: FiniteLattice) -> bool:
    """The modular law over all triples: a <= c forces (a v b) ^ c = a v (b ^ c)."""
    for a in range(lat.n):
        for c in bits(lat.up[a]):
            for b in range(lat.n):
                if lat.meet_idx(lat.join_idx(a, b), c) != \
                        lat.join_idx(a, lat.meet_idx(b, c)):
                    return False
    return True


def is_distributive(lat: FiniteLattice) -> bool:
    """Both distributive laws over all triples."""
    for a in range(lat.n):
        for b in range(lat.n):
            ab_meet = lat.meet_idx(a, b)
            ab_join = lat.join_idx(a, b)
            for c in range(lat.n):
                if lat.meet_idx(a, lat.join_idx(b, c)) != \
                        lat.join_idx(ab_meet, lat.meet_idx(a, c)):
                    return False
                if lat.join_idx(a, lat.meet_idx(b, c)) != \
                        lat.meet_idx(ab_join, lat.join_idx(a, c)):
                    return False
    return True


def find_pentagon(lat: FiniteLattice):
    """A 5-element pentagon sublattice as indices (0, a, b, c, 1) with
    0 < a < b < 1 and 0 < c < 1, or None.  Exists iff the lattice is not
    modular."""
    for x in range(lat.n):
        for z in bits(lat.up[x] & ~(1 << x)):
            for y in range(lat.n):
                a = lat.join_idx(x, lat.meet_idx(y, z))
                b = lat.meet_idx(lat.join_idx(x, y), z)
                if a == b:
                    continue
                bot = lat.meet_idx(a, y)
                top = lat.join_idx(b, y)
                five = {bot, a, b, y, top}
                if len(five) == 5 and lat.meet_idx(b, y) == bot \
                        and lat.join_idx(a, y) == top and lat.leq_idx(a, b):
                    return (bot, a, b, y, top)
    return None


def find_diamond(lat: FiniteLattice):
    """A 5-element diamond sublattice as indices (bottom, x, y, z, top),
    or None."""
    for x in range(lat.n):
        for y in range(x + 1, lat.n):
            if lat.leq_idx(x, y) or lat.leq_idx(y, x):
                continue
            top = lat.join_idx(x, y)
            bot = lat.meet_idx(x, y)
            for z in range(y + 1, lat.n):
                if lat.join_idx(x, z) == top == lat.join_idx(y, z) \
                        and lat.meet_idx(x, z) == bot == lat.meet_idx(y, z) \
                        and z != top and z != bot:
                    return (bot, x, y, z, top)
    return None


def is_atomistic_lattice(lat: FiniteLattice) -> bool:
    """Is every element a finite join of atoms?  The bottom is the empty join."""
    closed = {lat.bottom}
    frontier = list(lat.atoms_idx())
    closed.update(frontier)
    while frontier:
        a = frontier.pop()
        for b in list(closed):
            j = lat.join_idx(a, b)
            if j not in closed:
                closed.add(j)
                frontier.append(j)
    return len(closed) == lat.n


# -- graph-level predicates (valid for cyclic graphs too) --------------------


def predicate_lower_semimodular(graph: Digraph) -> bool:
    """No forked vertices; equivalent to lower-semimodularity of the lattice."""
    return graph.forked_vertices() == 0


def predicate_condition_iv(graph: Digraph) -> bool:
    """For simple graphs: co-initial edges always have comparable ranges."""
    if not graph.is_simple():
        raise ValueError("requires a simple graph (acyclic, no parallel edges)")
    for v in range(graph.n):
        ranges = [graph.edges[e][1] for e in graph.out_edges[v]]
        for i, ri in enumerate(ranges):
            for rj in ranges[i + 1:]:
                if not (graph.geq(ri, rj) or graph.geq(rj, ri)):
                    return False
    return True


def predicate_atomistic(graph: Digraph) -> bool:
    """Per-vertex test for every congruence being a join of atoms: each
    vertex is a sink, sits above some vertex of out-degree other than one
    without lying on a cycle, or has out-degree at least two with every
    out-range above it."""
    on_cycle = 0
    for c in graph.cycles():
        on_cycle |= graph.cycle_sources(c)
    for v in range(graph.n):
        out = graph.out_edges[v]
        if not out:
            continue
        if len(out) == 1:
            if on_cycle >> v & 1:
                return False
            if not any(u != v and len(graph.out_edges[u]) != 1
                       for u in bits(graph.reach[v])):
                return False
        else:
            if not all(graph.geq(graph.edges[e][1], v) for e in out):
                return False
    return True


# -- generating sets ----------------------------------------------------------


def minimal_generating_set(graph: Digraph):
    """The congruences every generating set of the lattice must contain:
    one per sink, plus, for each non-sink vertex, the containment-minimal
    hereditary sets leaving it exactly one out-edge."""
    if not graph.is_simple():
        raise ValueError("requires a simple graph (acyclic, no parallel edges)")
    gens = []
    for v in range(graph.n):
        if not graph.out_edges[v]:
            gens.append(WangTriple(graph, 1 << v, 0))
    for v in range(graph.n):
        out = graph.out_edges[v]
        if not out:
            continue
        cands = set()
        for e in out:
            others = 0
            for e2 in out:
                if e2 != e:
                    others |= 1 << graph.edges[e2][1]
            H = graph.hereditary_closure(others)
            if not H >> graph.edges[e][1] & 1:
                cands.add(H)
        for H in sorted(cands):
            if not any(other != H and other & ~H == 0 for other in cands):
                gens.append(WangTriple(graph, H, 1 << v))
    return gens


def generated_sublattice(lat: ConLattice, gens):
    """Join closure of the given elements together with the bottom."""
    idxs = set()
    for t in gens:
        try:
            idxs.add(lat.index[t])
        except KeyError:
            raise ValueError(f"element {t!r} is not in the lattice") from None
    idxs.add(lat.bottom)
    frontier = list(idxs)
    while frontier:
        a = frontier.pop()
        for b in list(idxs):
            j = lat.join_idx(a, b)
            if j not in idxs:
                idxs.add(j)
                frontier.append(j)
    return [lat.elements[i] for i in sorted(idxs)]
