"""Finite simple undirected graphs and the clone/path/comb transformations.

All graphs are immutable: transformations return new graphs.  Vertices are
0-based integers below ``vertex_count``.  An optional ``labels`` map carries
DIMACS-style signed literals on vertices (used by the SAT reduction).

Vertex numbering of ``s_clone`` (the back-mapping contract):
for each original vertex ``a`` there is a block of ``total + size`` result
vertices starting at ``a * (total + size)``, where the clone multiset S is
kept sorted ascending and ``size = |S|``, ``total = sum(S)``.  Within the
block the clones a_1..a_size come first (in sorted multiset order), followed
by the pendant-path vertices of clone 1 in path order, then those of clone
2, and so on.  ``s_clone_origin`` inverts this numbering.
"""

from __future__ import annotations

import json

from .errors import DomainError, GraphFormatError


class Graph:
    """Simple undirected graph on vertices 0..n-1 with optional vertex labels."""

    __slots__ = ("n", "edges", "labels", "_masks")

    def __init__(self, n: int, edges=(), labels=None):
        if n < 0:
            raise DomainError(f"negative vertex count {n}")
        normalized = set()
        for u, v in edges:
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) out of range for n={n}")
            normalized.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))
        object.__setattr__(self, "labels", dict(labels) if labels else None)
        object.__setattr__(self, "_masks", None)
        if self.labels is not None:
            for v in self.labels:
                if not 0 <= v < n:
                    raise DomainError(f"label on unknown vertex {v}")

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbor_masks(self) -> tuple:
        """Per-vertex adjacency bitmasks, built on first use."""
        masks = self._masks
        if masks is None:
            lst = [0] * self.n
            for u, v in self.edges:
                lst[u] |= 1 << v
                lst[v] |= 1 << u
            masks = tuple(lst)
            object.__setattr__(self, "_masks", masks)
        return masks

    def neighbors(self, v: int) -> tuple:
        self._check_vertex(v)
        mask = self.neighbor_masks()[v]
        return tuple(i for i in range(self.n) if mask >> i & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.neighbor_masks()[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.neighbor_masks()[u] >> v & 1)

    def _check_vertex(self, v: int):
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise DomainError(f"invalid vertex id {v} for n={self.n}")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.edges == other.edges
            and (self.labels or {}) == (other.labels or {})
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def edgeless_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


class CloneSpec:
    """Finite multiset of nonnegative integers, kept sorted ascending.

    ``size`` is the number of clones per original vertex; ``total`` is the
    summed pendant-path length per original vertex.
    """

    __slots__ = ("entries",)

    def __init__(self, entries):
        items = tuple(sorted(entries))
        for s in items:
            if not isinstance(s, int) or s < 0:
                raise DomainError(f"clone multiset entries must be ints >= 0, got {s!r}")
        object.__setattr__(self, "entries", items)

    def __setattr__(self, name, value):
        raise AttributeError("CloneSpec is immutable")

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def total(self) -> int:
        return sum(self.entries)

    @property
    def block(self) -> int:
        """Result vertices per original vertex under s_clone."""
        return self.total + self.size

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, CloneSpec):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"CloneSpec({list(self.entries)})"


def s_clone(g: Graph, spec: CloneSpec) -> Graph:
    """Replace each vertex by |S| mutually non-adjacent clones, join clones of
    adjacent vertices completely, and hang a pendant path of length s on the
    clone indexed by each s in S.  See the module docstring for the numbering.
    """
    if not isinstance(spec, CloneSpec):
        spec = CloneSpec(spec)
    block = spec.block
    size = spec.size
    n_out = g.n * block
    edges = []

    # Per-block offsets: clone i sits at offset i; its path starts after all
    # clones plus the paths of earlier clones.
    path_start = []
    offset = size
    for s in spec.entries:
        path_start.append(offset)
        offset += s

    for a in range(g.n):
        base = a * block
        for i, s in enumerate(spec.entries):
            prev = base + i
            for j in range(s):
                nxt = base + path_start[i] + j
                edges.append((prev, nxt))
                prev = nxt
    for u, v in g.edges:
        for i in range(size):
            for j in range(size):
                edges.append((u * block + i, v * block + j))
    return Graph(n_out, edges)


def s_clone_origin(spec: CloneSpec, vertex: int) -> tuple:
    """Map an s_clone result vertex back to (original vertex, clone index,
    path position).  Path position 0 is the clone itself; position j >= 1 is
    the j-th vertex along its pendant path."""
    if not isinstance(spec, CloneSpec):
        spec = CloneSpec(spec)
    if vertex < 0:
        raise DomainError(f"invalid vertex id {vertex}")
    block = spec.block
    orig, r = divmod(vertex, block)
    if r < spec.size:
        return (orig, r, 0)
    r -= spec.size
    for i, s in enumerate(spec.entries):
        if r < s:
            return (orig, i, r + 1)
        r -= s
    raise AssertionError("unreachable: block arithmetic exhausted")


def k_clone(g: Graph, k: int) -> Graph:
    """S-clone with S = {0,...,0} (k zeros): k pairwise non-adjacent copies
    of every vertex, complete bipartite between copies of adjacent vertices."""
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"clone count must be >= 1, got {k!r}")
    return s_clone(g, CloneSpec([0] * k))


def attach_path(g: Graph, v: int, k: int) -> Graph:
    """Append a pendant path of length k rooted at vertex v.  The k new
    vertices are numbered n, n+1, ..., n+k-1 outward from v."""
    g._check_vertex(v)
    if k < 0:
        raise DomainError(f"path length must be >= 0, got {k}")
    if k == 0:
        return Graph(g.n, g.edges, g.labels)
    edges = list(g.edges)
    prev = v
    for j in range(k):
        edges.append((prev, g.n + j))
        prev = g.n + j
    return Graph(g.n + k, edges)


def comb(g: Graph, k: int) -> Graph:
    """Attach k pendant leaves to every original vertex.  Leaf j of vertex v
    is numbered n + v*k + j, matching k rounds of attach_path(., v, 1) taken
    vertex-major."""
    if k < 0:
        raise DomainError(f"leaf count must be >= 0, got {k}")
    edges = list(g.edges)
    for v in range(g.n):
        for j in range(k):
            edges.append((v, g.n + v * k + j))
    return Graph(g.n + g.n * k, edges)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove v and incident edges; vertices above v shift down by one."""
    g._check_vertex(v)

    def renum(u):
        return u if u < v else u - 1

    edges = [(renum(a), renum(b)) for a, b in g.edges if v not in (a, b)]
    labels = None
    if g.labels:
        labels = {renum(u): lit for u, lit in g.labels.items() if u != v}
    return Graph(g.n - 1, edges, labels)


# ---------------------------------------------------------------------------
# Serialization: canonical text format and structured (JSON) format.
# ---------------------------------------------------------------------------

def graph_to_text(g: Graph) -> str:
    """Canonical text format: header "p is n m", then "e u v" with 1-based ids."""
    lines = [f"p is {g.n} {len(g.edges)}"]
    for u, v in g.edges:
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> Graph:
    """Parse the canonical text format; rejects duplicate edges and self-loops."""
    n = None
    declared_m = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] != "is":
                raise GraphFormatError(f"line {lineno}: malformed header {line!r}")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer header fields")
            if n < 0 or declared_m < 0:
                raise GraphFormatError(f"line {lineno}: negative header counts")
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: malformed edge {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer endpoints")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"line {lineno}: endpoint out of range 1..{n}")
            if u == v:
                raise GraphFormatError(f"line {lineno}: self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(f"line {lineno}: duplicate edge {u} {v}")
            seen.add(key)
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise GraphFormatError("missing header line \"p is n m\"")
    if declared_m != len(edges):
        raise GraphFormatError(
            f"header declares {declared_m} edges but {len(edges)} found"
        )
    return Graph(n, edges)


def graph_to_json_dict(g: Graph) -> dict:
    """Structured exchange format: {"n": int, "edges": [[u, v], ...]}, 0-based."""
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges]}


def graph_from_json_dict(obj) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise GraphFormatError("structured graph must be {\"n\": ..., \"edges\": [...]}")
    n = obj["n"]
    if not isinstance(n, int):
        raise GraphFormatError(f"vertex count must be an integer, got {n!r}")
    edges = []
    seen = set()
    for item in obj["edges"]:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise GraphFormatError(f"malformed edge entry {item!r}")
        u, v = item
        if not isinstance(u, int) or not isinstance(v, int):
            raise GraphFormatError(f"non-integer endpoints in {item!r}")
        if u == v:
            raise GraphFormatError(f"self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        edges.append((u, v))
    return Graph(n, edges)


def parse_graph(text: str) -> Graph:
    """Parse either supported format, sniffing JSON by a leading brace."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON graph: {exc}") from exc
        return graph_from_json_dict(obj)
    return parse_graph_text(text)
