"""Finite connected graphs with unit-length edges: the metric universe.

Every other module works on top of the distances, canonical geodesics, balls
and induced subgraphs defined here.  Graphs are immutable after construction
and all operations are pure, so concurrent readers are safe.
"""

from __future__ import annotations

import json
from collections import deque

import numpy as np


class SizeLimitError(RuntimeError):
    """An exact computation was refused because the input is too large."""


def _check_vertex(n: int, v) -> int:
    if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
        raise ValueError(f"vertex id must be an integer, got {v!r}")
    v = int(v)
    if v < 0 or v >= n:
        raise ValueError(f"unknown vertex id {v} (graph has {n} vertices)")
    return v


class MetricGraph:
    """Connected unweighted graph on dense vertex ids 0..n-1.

    Edges all have length one.  Self-loops, parallel edges and disconnected
    inputs are rejected.  Distance rows are BFS distances, cached per source,
    so repeated metric queries amortize to O(1).
    """

    __hash__ = None

    def __init__(self, n: int, edges, labels=None):
        if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or int(n) < 1:
            raise ValueError(f"vertex count must be a positive integer, got {n!r}")
        n = int(n)
        adjacency = [[] for _ in range(n)]
        seen = set()
        norm_edges = []
        for e in edges:
            e = tuple(e)
            if len(e) != 2:
                raise ValueError(f"edge {e!r} is not a pair (weighted edges are not supported)")
            u = _check_vertex(n, e[0])
            v = _check_vertex(n, e[1])
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"parallel edge {key}")
            seen.add(key)
            norm_edges.append(key)
            adjacency[u].append(v)
            adjacency[v].append(u)
        self._n = n
        self._edges = tuple(sorted(norm_edges))
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        if labels:
            self._labels = {_check_vertex(n, k): str(lab) for k, lab in dict(labels).items()}
        else:
            self._labels = {}
        self._dist_rows: dict[int, np.ndarray] = {}
        self._dist_matrix = None
        self._check_connected()

    def _check_connected(self):
        if self._n == 1:
            return
        seen = bytearray(self._n)
        seen[0] = 1
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if not seen[w]:
                    seen[w] = 1
                    count += 1
                    queue.append(w)
        if count != self._n:
            raise ValueError(f"graph is disconnected ({count} of {self._n} vertices reachable)")

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple:
        return self._edges

    @property
    def labels(self) -> dict:
        return dict(self._labels)

    def label(self, v: int):
        return self._labels.get(_check_vertex(self._n, v))

    def neighbors(self, v: int) -> tuple:
        return self._adj[_check_vertex(self._n, v)]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def __eq__(self, other):
        if not isinstance(other, MetricGraph):
            return NotImplemented
        return (
            self._n == other._n
            and self._edges == other._edges
            and self._labels == other._labels
        )

    def __repr__(self):
        return f"MetricGraph(n={self._n}, edges={len(self._edges)})"

    # -- metric ------------------------------------------------------------

    def distances_from(self, u: int) -> np.ndarray:
        """BFS distance row from ``u``; read-only, cached per source."""
        u = _check_vertex(self._n, u)
        row = self._dist_rows.get(u)
        if row is None:
            row = np.full(self._n, -1, dtype=np.int32)
            row[u] = 0
            queue = deque([u])
            while queue:
                x = queue.popleft()
                dx = row[x]
                for w in self._adj[x]:
                    if row[w] < 0:
                        row[w] = dx + 1
                        queue.append(w)
            row.setflags(write=False)
            self._dist_rows[u] = row
        return row

    def distance_matrix(self) -> np.ndarray:
        """Full all-pairs distance matrix (cached); O(n^2) memory."""
        if self._dist_matrix is None:
            mat = np.vstack([self.distances_from(u) for u in range(self._n)])
            mat.setflags(write=False)
            self._dist_matrix = mat
        return self._dist_matrix

    def shortest_distance(self, u: int, v: int) -> int:
        v = _check_vertex(self._n, v)
        return int(self.distances_from(u)[v])

    def geodesic(self, u: int, v: int) -> list:
        """Canonical shortest path from u to v.

        Ties broken by always stepping to the smallest-id neighbor that is one
        step closer to v, so the result is deterministic and reproducible.
        """
        u = _check_vertex(self._n, u)
        v = _check_vertex(self._n, v)
        to_v = self.distances_from(v)
        walk = [u]
        cur = u
        while cur != v:
            target = to_v[cur] - 1
            for w in self._adj[cur]:
                if to_v[w] == target:
                    cur = w
                    break
            walk.append(cur)
        return walk

    def ball(self, u: int, r: int) -> list:
        """Sorted vertex ids within distance r of u (truncated BFS, uncached)."""
        u = _check_vertex(self._n, u)
        if isinstance(r, bool) or not isinstance(r, (int, np.integer)) or int(r) < 0:
            raise ValueError(f"radius must be a nonnegative integer, got {r!r}")
        r = int(r)
        dist = {u: 0}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            dx = dist[x]
            if dx == r:
                continue
            for w in self._adj[x]:
                if w not in dist:
                    dist[w] = dx + 1
                    queue.append(w)
        return sorted(dist)

    # -- derived graphs ------------------------------------------------------

    def induced(self, vertices):
        """Induced subgraph on ``vertices`` with dense relabeling.

        Returns (subgraph, old_to_new map).  Raises ValueError if the induced
        subgraph is disconnected or empty.
        """
        vs = sorted({_check_vertex(self._n, v) for v in vertices})
        if not vs:
            raise ValueError("induced subgraph needs at least one vertex")
        old_to_new = {v: i for i, v in enumerate(vs)}
        inside = set(vs)
        sub_edges = [
            (old_to_new[a], old_to_new[b])
            for (a, b) in self._edges
            if a in inside and b in inside
        ]
        labels = {old_to_new[v]: self._labels[v] for v in vs if v in self._labels}
        sub = MetricGraph(len(vs), sub_edges, labels or None)
        return sub, old_to_new

    def is_connected_subset(self, vertices) -> bool:
        vs = {_check_vertex(self._n, v) for v in vertices}
        if not vs:
            return False
        start = min(vs)
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for w in self._adj[x]:
                if w in vs and w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen == vs


def multi_source_distances(g: MetricGraph, sources) -> np.ndarray:
    """BFS distance to the nearest of ``sources`` for every vertex."""
    dist = np.full(g.n, -1, dtype=np.int32)
    queue = deque()
    for s in sorted(set(sources)):
        s = _check_vertex(g.n, s)
        dist[s] = 0
        queue.append(s)
    if not queue:
        raise ValueError("need at least one source vertex")
    while queue:
        x = queue.popleft()
        dx = dist[x]
        for w in g.neighbors(x):
            if dist[w] < 0:
                dist[w] = dx + 1
                queue.append(w)
    return dist


def cartesian_product(gx: MetricGraph, gy: MetricGraph) -> MetricGraph:
    """Cartesian product graph; vertex (x, y) gets id x * gy.n + y."""
    ny = gy.n
    edges = []
    for (a, b) in gx.edges:
        for y in range(ny):
            edges.append((a * ny + y, b * ny + y))
    for x in range(gx.n):
        for (a, b) in gy.edges:
            edges.append((x * ny + a, x * ny + b))
    return MetricGraph(gx.n * ny, edges)


# -- serialization -----------------------------------------------------------

def graph_to_obj(g: MetricGraph) -> dict:
    obj = {"n": g.n, "edges": [[u, v] for (u, v) in g.edges]}
    labels = g.labels
    if labels:
        obj["labels"] = {str(k): v for k, v in sorted(labels.items())}
    return obj


def unwrap_payload(obj):
    """Accept either a bare payload or a {"manifest":..., "data":...} wrapper."""
    if isinstance(obj, dict) and "data" in obj and "manifest" in obj:
        return obj["data"]
    return obj


def graph_from_obj(obj) -> MetricGraph:
    obj = unwrap_payload(obj)
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError('graph JSON must be an object with "n" and "edges"')
    if "weights" in obj:
        raise ValueError("weighted graphs are not supported; all edges have length 1")
    labels = obj.get("labels")
    if labels is not None:
        labels = {int(k): v for k, v in labels.items()}
    return MetricGraph(obj["n"], obj["edges"], labels)


def load_graph(path) -> MetricGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_obj(json.load(fh))


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def graph_to_dot(g: MetricGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    labels = g.labels
    for v in range(g.n):
        if v in labels:
            lines.append(f'  {v} [label="{labels[v]}"];')
    for (u, v) in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
