"""Finite directed multigraphs with reachability and hereditary-set machinery.

Vertex subsets are plain int bitmasks (bit ``i`` set means vertex ``i`` is in
the set), so set algebra is ``&``, ``|``, ``& ~`` plus the helpers below.
Graphs are immutable after construction and safe to share between threads.
"""

from __future__ import annotations


class CapExceeded(RuntimeError):
    """An enumeration grew past its configured cap."""


HEREDITARY_CAP = 1 << 20


def bits(mask: int):
    """Yield the set bit positions of mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def canonical_rotation(seq):
    """Lexicographically least rotation of an edge-id sequence."""
    seq = tuple(seq)
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


class Digraph:
    """Immutable directed multigraph with dense integer vertex and edge ids.

    Vertices are 0..n-1 with user-facing string names kept in a side table;
    edges are an ordered tuple of (source, range) pairs, the edge id being
    the position.  Parallel edges are permitted and distinct.
    """

    __slots__ = ("names", "n", "edges", "m", "full", "out_edges", "reach",
                 "_index", "_cycles", "_cycle_sources", "_hereditary", "_hash")

    def __init__(self, names, edges):
        names = tuple(str(x) for x in names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate vertex name")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "n", len(names))
        pairs = tuple((int(s), int(r)) for s, r in edges)
        for s, r in pairs:
            if not (0 <= s < self.n and 0 <= r < self.n):
                raise ValueError(f"edge endpoint out of range: ({s}, {r})")
        object.__setattr__(self, "edges", pairs)
        object.__setattr__(self, "m", len(pairs))
        object.__setattr__(self, "full", (1 << self.n) - 1)
        out = [[] for _ in range(self.n)]
        for i, (s, _) in enumerate(pairs):
            out[s].append(i)
        object.__setattr__(self, "out_edges", tuple(tuple(es) for es in out))
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(names)})
        object.__setattr__(self, "reach", self._reachability())
        object.__setattr__(self, "_cycles", None)
        object.__setattr__(self, "_cycle_sources", None)
        object.__setattr__(self, "_hereditary", None)
        object.__setattr__(self, "_hash", hash((names, pairs)))

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    def _set(self, name, value):
        object.__setattr__(self, name, value)

    def _reachability(self):
        reach = []
        for v in range(self.n):
            seen = 1 << v
            stack = [v]
            while stack:
                u = stack.pop()
                for e in self.out_edges[u]:
                    w = self.edges[e][1]
                    if not seen >> w & 1:
                        seen |= 1 << w
                        stack.append(w)
            reach.append(seen)
        return tuple(reach)

    def __eq__(self, other):
        return (isinstance(other, Digraph)
                and self.names == other.names and self.edges == other.edges)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Digraph({list(self.names)!r}, {list(self.edges)!r})"

    # -- name <-> id helpers ------------------------------------------------

    def vertex(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown vertex name {name!r}") from None

    def vertex_set(self, names) -> int:
        return mask_of(self.vertex(name) for name in names)

    def vertex_names(self, mask: int):
        return [self.names[v] for v in bits(mask)]

    # -- the reachability preorder ------------------------------------------

    def geq(self, u: int, v: int) -> bool:
        """u >= v: v is reachable from u (reflexively)."""
        return bool(self.reach[u] >> v & 1)

    def is_hereditary(self, H: int) -> bool:
        """Is every vertex reachable from H already in H?"""
        closure = 0
        for v in bits(H):
            closure |= self.reach[v]
        return closure | H == H

    def hereditary_closure(self, S: int) -> int:
        """Least hereditary superset of S."""
        closure = S
        for v in bits(S):
            closure |= self.reach[v]
        return closure

    def hereditary_sets(self, cap: int = HEREDITARY_CAP):
        """All hereditary vertex sets, sorted by (size, bit pattern).

        Computed by closing {empty} under union with principal down-sets;
        raises CapExceeded when more than cap sets appear (the count can be
        exponential in the number of vertices).
        """
        if self._hereditary is None:
            sets = {0}
            for v in range(self.n):
                down = self.reach[v]
                sets |= {s | down for s in sets}
                if len(sets) > cap:
                    raise CapExceeded(
                        f"more than {cap} hereditary sets")
            self._set("_hereditary",
                      tuple(sorted(sets, key=lambda h: (h.bit_count(), h))))
        return list(self._hereditary)

    def is_downward_directed(self, H: int) -> bool:
        """Is H nonempty with a common lower bound in H for every pair?"""
        if H == 0:
            return False
        vs = list(bits(H))
        reach = self.reach
        for i, u in enumerate(vs):
            ru = reach[u] & H
            for v in vs[i + 1:]:
                if not ru & reach[v]:
                    return False
        return True

    def strongly_connected_components(self):
        """Partition of the vertices into maximal mutually-reachable classes,
        as bitmasks ordered by least member."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 0
            for u in bits(self.reach[v]):
                if self.reach[u] >> v & 1:
                    comp |= 1 << u
            comps.append(comp)
            seen |= comp
        return comps

    # -- subgraphs ------------------------------------------------------------

    def minus(self, H: int) -> "Digraph":
        """The induced subgraph on the complement of a hereditary set H.

        Vertices are renumbered densely in their original order; an edge is
        retained iff neither endpoint lies in H.
        """
        if not self.is_hereditary(H):
            raise ValueError("minus() requires a hereditary vertex set")
        keep = [v for v in range(self.n) if not H >> v & 1]
        new_id = {v: i for i, v in enumerate(keep)}
        edges = [(new_id[s], new_id[r]) for s, r in self.edges
                 if not (H >> s & 1 or H >> r & 1)]
        return Digraph([self.names[v] for v in keep], edges)

    def out_degree_minus(self, v: int, H: int) -> int:
        """Number of edges from v whose range survives removal of H."""
        if H >> v & 1:
            raise ValueError("vertex lies in the removed set")
        edges = self.edges
        return sum(1 for e in self.out_edges[v] if not H >> edges[e][1] & 1)

    # -- cycles ----------------------------------------------------------------

    def cycles(self):
        """All cycles (closed paths with pairwise distinct sources) as
        canonical-rotation edge-id tuples, sorted."""
        if self._cycles is None:
            found = []
            edges = self.edges
            for start in range(self.n):
                # each cycle is discovered once, from its least vertex
                stack = [(start, (), 1 << start)]
                while stack:
                    u, path, visited = stack.pop()
                    for e in self.out_edges[u]:
                        w = edges[e][1]
                        if w == start:
                            found.append(canonical_rotation(path + (e,)))
                        elif w > start and not visited >> w & 1:
                            stack.append((w, path + (e,), visited | 1 << w))
            found.sort()
            sources = {c: mask_of(edges[e][0] for e in c) for c in found}
            self._set("_cycle_sources", sources)
            self._set("_cycles", tuple(found))
        return list(self._cycles)

    def cycle_sources(self, cycle) -> int:
        """Bitmask of the sources of a canonical cycle."""
        self.cycles()
        return self._cycle_sources[tuple(cycle)]

    def cycles_in(self, H: int):
        """All canonical cycles whose edge sources all lie in H."""
        self.cycles()
        return [c for c in self._cycles if self._cycle_sources[c] & ~H == 0]

    def is_acyclic(self) -> bool:
        return not self.cycles()

    def has_parallel_edges(self) -> bool:
        return len(set(self.edges)) < self.m

    def is_simple(self) -> bool:
        """Acyclic and without parallel edges."""
        return self.is_acyclic() and not self.has_parallel_edges()

    def is_weakly_connected(self) -> bool:
        if self.n <= 1:
            return True
        adj = [0] * self.n
        for s, r in self.edges:
            adj[s] |= 1 << r
            adj[r] |= 1 << s
        seen = 1
        frontier = [0]
        while frontier:
            u = frontier.pop()
            new = adj[u] & ~seen
            seen |= new
            frontier.extend(bits(new))
        return seen == self.full

    # -- forked vertices ---------------------------------------------------------

    def forked_vertices(self) -> int:
        """Vertices with two out-edges whose ranges are inaccessible from the
        ranges of every other co-initial edge, as a bitmask."""
        forked = 0
        reach = self.reach
        for v in range(self.n):
            es = self.out_edges[v]
            if len(es) < 2:
                continue
            ranges = [self.edges[e][1] for e in es]
            hits = 0
            for i, ri in enumerate(ranges):
                if all(not reach[rj] >> ri & 1
                       for j, rj in enumerate(ranges) if j != i):
                    hits += 1
                    if hits == 2:
                        forked |= 1 << v
                        break
        return forked

    # -- paths -------------------------------------------------------------------

    def path_range(self, path) -> int:
        v, es = path
        return v if not es else self.edges[es[-1]][1]

    def is_path(self, path) -> bool:
        v, es = path
        if not 0 <= v < self.n:
            return False
        at = v
        for e in es:
            if not 0 <= e < self.m or self.edges[e][0] != at:
                return False
            at = self.edges[e][1]
        return True


def build_graph(names, edges) -> Digraph:
    """Build a Digraph from vertex names and (source name, range name) pairs."""
    names = list(names)
    index = {}
    for name in names:
        if name in index:
            raise ValueError(f"duplicate vertex name {name!r}")
        index[name] = len(index)
    pairs = []
    for s, r in edges:
        if s not in index:
            raise ValueError(f"unknown vertex name {s!r}")
        if r not in index:
            raise ValueError(f"unknown vertex name {r!r}")
        pairs.append((index[s], index[r]))
    return Digraph(names, pairs)
