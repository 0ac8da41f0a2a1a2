"""Finite simple graphs on vertex set {0, ..., n-1}.

Everything downstream (flag complexes, star/link combinatorics, the search
pipeline) works with these graphs.  Instances are immutable and hashable, so
they can be shared freely between worker processes.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

MAX_CANONICAL_N = 24
MAX_ENUMERATE_N = 9


class GraphError(ValueError):
    """Malformed graph input or an out-of-range argument."""


def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class SimpleGraph:
    """An undirected simple graph with dense integer vertex labels.

    Stored as the vertex count plus a frozenset of (u, v) pairs with u < v.
    Adjacency bitmasks are precomputed; ``adj[u]`` has bit v set iff uv is
    an edge.
    """

    __slots__ = ("n", "edges", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        normalized = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            normalized.add(_normalize_edge(u, v))
        self.n = n
        self.edges = frozenset(normalized)
        adj = [0] * n
        for u, v in normalized:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.adj = tuple(adj)
        self._hash = hash((n, self.edges))

    # -- basic queries ----------------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return u != v and bool(self.adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        self._check_vertex(u)
        return self.adj[u].bit_count()

    def neighbors(self, u: int) -> set[int]:
        self._check_vertex(u)
        return _bits_to_set(self.adj[u])

    def _check_vertex(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise GraphError(f"vertex {u} out of range [0, {self.n})")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimpleGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={sorted(self.edges)})"

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def _bits_to_set(mask: int) -> set[int]:
    out = set()
    while mask:
        low = mask & -mask
        out.add(low.bit_length() - 1)
        mask ^= low
    return out


def _set_to_bits(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


# -- construction helpers -------------------------------------------------


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n)


# -- text formats ----------------------------------------------------------


def parse_edge_list(text: str) -> SimpleGraph:
    """Parse a line-oriented edge list.

    Each non-comment line holds two distinct vertex indices "u v"; an
    optional leading "n=<count>" line pins the vertex count (otherwise it is
    one more than the largest index seen).  '#' starts a comment.
    """
    declared_n = None
    pairs = []
    max_seen = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n=") and declared_n is None and not pairs:
            try:
                declared_n = int(line[2:])
            except ValueError:
                raise GraphError(f"line {lineno}: bad vertex count header {line!r}")
            if declared_n < 0:
                raise GraphError(f"line {lineno}: negative vertex count")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: expected two integers, got {line!r}")
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex index")
        if u == v:
            raise GraphError(f"line {lineno}: self-loop '{u} {u}'")
        if declared_n is not None and (u >= declared_n or v >= declared_n):
            raise GraphError(
                f"line {lineno}: vertex index beyond declared n={declared_n}"
            )
        pairs.append((u, v))
        max_seen = max(max_seen, u, v)
    n = declared_n if declared_n is not None else max_seen + 1
    return SimpleGraph(max(n, 0), pairs)


def format_edge_list(graph: SimpleGraph) -> str:
    lines = [f"n={graph.n}"]
    lines.extend(f"{u} {v}" for u, v in graph.sorted_edges())
    return "\n".join(lines) + "\n"


# -- graph6 codec ----------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def graph6_decode(code: str) -> SimpleGraph:
    """Decode a graph6 string (standard 6-bit printable layout)."""
    text = code.strip()
    if text.startswith(_G6_HEADER):
        text = text[len(_G6_HEADER):]
    if not text:
        raise GraphError("empty graph6 code")
    data = []
    for ch in text:
        value = ord(ch) - 63
        if not 0 <= value <= 63:
            raise GraphError(f"graph6 character {ch!r} outside printable range")
        data.append(value)
    if data[0] <= 62:
        n = data[0]
        body = data[1:]
    elif len(data) >= 4 and data[1] <= 62:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise GraphError("graph6 codes with n >= 258048 are not supported")
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    if len(body) < need_bytes:
        raise GraphError("truncated graph6 bit stream")
    if len(body) > need_bytes:
        raise GraphError("trailing data after graph6 bit stream")
    bits = 0
    for value in body:
        bits = (bits << 6) | value
    bits >>= 6 * need_bytes - need_bits  # drop the zero padding
    edges = []
    position = need_bits - 1
    for v in range(1, n):
        for u in range(v):
            if bits >> position & 1:
                edges.append((u, v))
            position -= 1
    return SimpleGraph(n, edges)


def graph6_encode(graph: SimpleGraph) -> str:
    """Encode a labeled graph in graph6 form (no header)."""
    n = graph.n
    if n <= 62:
        prefix = [n]
    elif n <= 258047:
        prefix = [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    else:
        raise GraphError("graph6 encoding limited to n <= 258047")
    bits = 0
    count = 0
    for v in range(1, n):
        row = graph.adj[v]
        for u in range(v):
            bits = (bits << 1) | (row >> u & 1)
            count += 1
    pad = (-count) % 6
    bits <<= pad
    count += pad
    body = [bits >> shift & 63 for shift in range(count - 6, -1, -6)]
    return "".join(chr(value + 63) for value in prefix + body)


# -- combinatorial operations ----------------------------------------------


def star(graph: SimpleGraph, u: int) -> set[int]:
    """The closed star: u together with its neighbors."""
    graph._check_vertex(u)
    return _bits_to_set(graph.adj[u] | (1 << u))


def link(graph: SimpleGraph, u: int) -> set[int]:
    """The open neighborhood of u."""
    graph._check_vertex(u)
    return _bits_to_set(graph.adj[u])


def induced_subgraph(
    graph: SimpleGraph, vertices: Iterable[int]
) -> tuple[SimpleGraph, tuple[int, ...]]:
    """Induced subgraph on a vertex set, relabeled densely.

    Vertices keep their relative order; the returned tuple maps each new
    label to its original one.
    """
    kept = sorted(set(vertices))
    for v in kept:
        graph._check_vertex(v)
    index = {old: new for new, old in enumerate(kept)}
    edges = [
        (index[u], index[v])
        for u, v in graph.edges
        if u in index and v in index
    ]
    return SimpleGraph(len(kept), edges), tuple(kept)


def connected_components(graph: SimpleGraph) -> list[set[int]]:
    """Vertex sets of the connected components, ordered by smallest member."""
    masks = _component_masks(graph.adj, (1 << graph.n) - 1)
    return [_bits_to_set(mask) for mask in masks]


def _component_masks(adj, universe: int) -> list[int]:
    """Connected components of the subgraph induced on the `universe` bits."""
    out = []
    remaining = universe
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            reached = 0
            f = frontier
            while f:
                low = f & -f
                reached |= adj[low.bit_length() - 1]
                f ^= low
            frontier = reached & remaining & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(graph: SimpleGraph) -> bool:
    return graph.n == 0 or len(connected_components(graph)) == 1


def disjoint_union(g1: SimpleGraph, g2: SimpleGraph) -> SimpleGraph:
    """Disjoint union; the second graph is shifted past the first."""
    shift = g1.n
    edges = list(g1.edges)
    edges.extend((u + shift, v + shift) for u, v in g2.edges)
    return SimpleGraph(g1.n + g2.n, edges)


def join(g1: SimpleGraph, g2: SimpleGraph) -> SimpleGraph:
    """Graph join: disjoint union plus every edge across the two parts."""
    shift = g1.n
    base = disjoint_union(g1, g2)
    edges = list(base.edges)
    edges.extend((u, v + shift) for u in range(g1.n) for v in range(g2.n))
    return SimpleGraph(base.n, edges)


def cone(graph: SimpleGraph) -> SimpleGraph:
    """Join with a single new vertex (the apex gets the largest label)."""
    return join(graph, SimpleGraph(1))


def suspension(graph: SimpleGraph) -> SimpleGraph:
    """Join with two new non-adjacent vertices."""
    return join(graph, SimpleGraph(2))


# -- seeded randomness -----------------------------------------------------
#
# All randomness flows through SplitMix64.  Per-sample seeds are derived by
# mixing the master seed with the sample index, so a pool of workers can
# evaluate samples in any order and still produce the stream a single
# worker would have produced.

_MASK64 = (1 << 64) - 1


def splitmix64(state: int) -> tuple[int, int]:
    """Advance a SplitMix64 state; returns (new_state, output)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def mix_seed(master_seed: int, sample_index: int) -> int:
    """Deterministic per-sample seed: one SplitMix64 round over both inputs."""
    _, mixed = splitmix64((master_seed ^ (sample_index * 0xD1342543DE82EF95)) & _MASK64)
    return mixed


def erdos_renyi(n: int, p: float, seed: int) -> SimpleGraph:
    """G(n, p) with each edge included independently with probability p.

    The edge stream is a fixed traversal of the (u, v) pairs driven by
    SplitMix64, so a given (n, p, seed) always yields the same graph.
    """
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability {p} outside [0, 1]")
    threshold = int(p * (1 << 64))
    state = seed & _MASK64
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            state, draw = splitmix64(state)
            if draw < threshold:
                edges.append((u, v))
    return SimpleGraph(n, edges)


# -- canonical labeling ----------------------------------------------------
#
# Equitable refinement plus individualization backtracking.  The canonical
# representative of an isomorphism class is the relabeling whose
# upper-triangular adjacency bit string is lexicographically least among the
# labelings the search explores; refinement guarantees the explored set
# always meets every automorphism orbit, so the minimum is well defined on
# isomorphism classes.


def _refine_partition(adj, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbor counts into every cell."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        cell_masks = [_set_to_bits(c) for c in cells]
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            keyed = {}
            for v in cell:
                key = tuple((adj[v] & mask).bit_count() for mask in cell_masks)
                keyed.setdefault(key, []).append(v)
            if len(keyed) > 1:
                changed = True
            for key in sorted(keyed):
                new_cells.append(keyed[key])
        cells = new_cells
    return cells


def _code_from_order(adj, order: list[int]) -> int:
    """Upper-triangular adjacency bits of the relabeled graph, as an int."""
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _canonical_order(adj, n: int) -> list[int]:
    if n == 0:
        return []
    best: list[int] = []
    best_code: int | None = None

    def recurse(cells):
        nonlocal best, best_code
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                target = idx
                break
        if target is None:
            order = [cell[0] for cell in cells]
            code = _code_from_order(adj, order)
            if best_code is None or code < best_code:
                best_code = code
                best = order
            return
        cell = cells[target]
        # If the remaining vertices are mutually indistinguishable (all the
        # same rows outside, and complete or empty among themselves), any
        # order gives the same code.
        if target == len(cells) - 1 and _cell_is_homogeneous(adj, cell):
            order = [c[0] for c in cells[:target]] + sorted(cell)
            code = _code_from_order(adj, order)
            if best_code is None or code < best_code:
                best_code = code
                best = order
            return
        for v in cell:
            rest = [w for w in cell if w != v]
            split = cells[:target] + [[v], rest] + cells[target + 1:]
            recurse(_refine_partition(adj, split))

    recurse(_refine_partition(adj, [sorted(range(n))]))
    return best


def _cell_is_homogeneous(adj, cell) -> bool:
    mask = _set_to_bits(cell)
    rows = {adj[v] & ~mask for v in cell}
    if len(rows) > 1:
        return False
    inner = [adj[v] & mask for v in cell]
    full = mask  # ignoring the self bit, checked per vertex below
    return all(r == 0 for r in inner) or all(
        inner[i] == (full & ~(1 << v)) for i, v in enumerate(cell)
    )


def canonical_relabel(graph: SimpleGraph) -> tuple[SimpleGraph, tuple[int, ...]]:
    """The canonical representative plus the order (new label -> old vertex)."""
    if graph.n > MAX_CANONICAL_N:
        raise GraphError(
            f"canonical labeling supports n <= {MAX_CANONICAL_N}, got {graph.n}"
        )
    order = _canonical_order(graph.adj, graph.n)
    position = {old: new for new, old in enumerate(order)}
    edges = [(position[u], position[v]) for u, v in graph.edges]
    return SimpleGraph(graph.n, edges), tuple(order)


def canonical_form(graph: SimpleGraph) -> str:
    """Canonical graph6 code: equal exactly for isomorphic graphs."""
    relabeled, _ = canonical_relabel(graph)
    return graph6_encode(relabeled)


# -- exhaustive enumeration -------------------------------------------------


def enumerate_nonisomorphic(n: int) -> Iterator[SimpleGraph]:
    """One canonical representative per isomorphism class of graphs on n vertices.

    Generated by repeatedly extending the (k-1)-vertex classes with one new
    vertex over every possible neighborhood and deduplicating by canonical
    form.  Representatives are yielded in canonical-code order.
    """
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    for code in enumerate_codes(n):
        yield graph6_decode(code)


def _expand_parents(args) -> set[str]:
    parent_codes, k = args
    out = set()
    for code in parent_codes:
        parent = graph6_decode(code)
        base_edges = list(parent.edges)
        for mask in range(1 << (k - 1)):
            edges = base_edges + [(u, k - 1) for u in _bits_to_set(mask)]
            out.add(canonical_form(SimpleGraph(k, edges)))
    return out


def enumerate_codes(n: int, jobs: int = 1) -> list[str]:
    """Sorted canonical codes of all isomorphism classes on exactly n vertices.

    Same augment-and-deduplicate strategy as :func:`enumerate_nonisomorphic`,
    with the per-level child expansion optionally spread over worker
    processes; the result is independent of the worker count.
    """
    if n > MAX_ENUMERATE_N:
        raise GraphError(f"enumeration supports n <= {MAX_ENUMERATE_N}, got {n}")
    if n <= 0:
        return [graph6_encode(SimpleGraph(0))] if n == 0 else []
    level = [graph6_encode(SimpleGraph(1))]
    for k in range(2, n + 1):
        if jobs > 1 and len(level) >= 64:
            from multiprocessing import Pool

            chunk = max(1, len(level) // (jobs * 8))
            tasks = [
                (level[i:i + chunk], k) for i in range(0, len(level), chunk)
            ]
            merged: set[str] = set()
            with Pool(jobs) as pool:
                for part in pool.imap_unordered(_expand_parents, tasks):
                    merged |= part
        else:
            merged = _expand_parents((level, k))
        level = sorted(merged)
    return level


def enumerate_by_dedup(n: int) -> list[SimpleGraph]:
    """Brute-force witness: canonicalize all 2^C(n,2) labeled graphs (n <= 6)."""
    if n > 6:
        raise GraphError("brute-force enumeration is limited to n <= 6")
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    for picks in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if picks >> i & 1]
        seen.add(canonical_form(SimpleGraph(n, edges)))
    return [graph6_decode(code) for code in sorted(seen)]
