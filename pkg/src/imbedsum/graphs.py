"""Simple graphs, the graph families used throughout, automorphism groups,
and rotation systems (maps) with the automorphism action on them.

Loops never appear directly: a bouquet of ``n`` loops is modeled by
subdividing every loop twice, and a directed loop colors its two
subdivision vertices black (tail) and white (head).  Vertex colors are the
single mechanism for roots, bouquet centers and edge directions.
"""
from __future__ import annotations

import itertools
import json
import math
import os
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .errors import CapExceeded, PreconditionError
from .perm import Permutation, PermutationGroup, orbit_length

DEFAULT_ROTATION_CAP = 10**7
DEFAULT_AUTOMORPHISM_VERTEX_CAP = 16

CENTER, BLACK, WHITE = 1, 2, 3


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        n = self.vertex_count
        adj = tuple(tuple(sorted(set(nb))) for nb in self.adjacency)
        colors = tuple(self.colors) if self.colors else (0,) * n
        if len(adj) != n or len(colors) != n:
            raise PreconditionError("adjacency/colors length does not match vertex count")
        for v, nb in enumerate(adj):
            for u in nb:
                if not 0 <= u < n or u == v:
                    raise PreconditionError(f"invalid neighbor {u} of vertex {v}")
                if v not in adj[u]:
                    raise PreconditionError(f"adjacency not symmetric at edge {v}-{u}")
        if any(c < 0 for c in colors):
            raise PreconditionError("colors must be nonnegative")
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "colors", colors)

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[tuple[int, int]], colors: Sequence[int] | None = None) -> Graph:
        if n < 1:
            raise PreconditionError("a graph needs at least one vertex")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise PreconditionError(f"loop at {u}; model loops by subdivision")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge {u}-{v} outside 0..{n - 1}")
            if v in adj[u]:
                raise PreconditionError(f"parallel edge {u}-{v}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(tuple(a) for a in adj), tuple(colors) if colors else (0,) * n)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.vertex_count) for v in self.adjacency[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            for u in self.adjacency[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.vertex_count

    def labeled_map_count(self) -> int:
        """Number of rotation systems, the product of (deg(v)-1)! over vertices."""
        return math.prod(math.factorial(max(self.degree(v) - 1, 0)) for v in range(self.vertex_count))

    def is_automorphism(self, p: Permutation) -> bool:
        if p.degree != self.vertex_count:
            return False
        img = p.images
        for v in range(self.vertex_count):
            if self.colors[img[v]] != self.colors[v]:
                return False
            if sorted(img[u] for u in self.adjacency[v]) != list(self.adjacency[img[v]]):
                return False
        return True

    # serialization

    def to_json_obj(self) -> dict:
        return {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges()],
                "colors": list(self.colors)}

    @classmethod
    def from_json_obj(cls, obj: dict) -> Graph:
        return cls.from_edges(int(obj["vertices"]), [tuple(e) for e in obj["edges"]], obj.get("colors"))

    def to_edge_list(self) -> str:
        lines = [f"{u} {v}" for u, v in self.edges()]
        lines += [f"c {v} {c}" for v, c in enumerate(self.colors) if c]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edge_list(cls, text: str, vertex_count: int | None = None) -> Graph:
        """Parse ``u v`` edge lines and ``c v color`` color lines; ``#`` starts a comment."""
        edges, colors = [], {}
        top = -1
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tok = line.split()
            try:
                if tok[0] == "c" and len(tok) == 3:
                    v, c = int(tok[1]), int(tok[2])
                    colors[v] = c
                    top = max(top, v)
                elif len(tok) == 2:
                    u, v = int(tok[0]), int(tok[1])
                    edges.append((u, v))
                    top = max(top, u, v)
                else:
                    raise ValueError
            except ValueError:
                raise PreconditionError(f"line {lineno}: cannot parse {raw!r}") from None
        n = vertex_count if vertex_count is not None else top + 1
        return cls.from_edges(n, edges, [colors.get(v, 0) for v in range(n)])


def load_graph(path: str | os.PathLike) -> Graph:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if str(path).endswith(".json") or text.lstrip().startswith("{"):
        return Graph.from_json_obj(json.loads(text))
    return Graph.from_edge_list(text)


# families

def complete(n: int) -> Graph:
    if n < 1:
        raise PreconditionError("complete graph needs n >= 1")
    return Graph.from_edges(n, list(itertools.combinations(range(n), 2)))


def wheel(n: int) -> Graph:
    """W_{n+1}: hub 0 joined to the rim cycle 1..n."""
    if n < 3:
        raise PreconditionError("wheel needs rim size n >= 3")
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, i % n + 1) for i in range(1, n + 1)]
    return Graph.from_edges(n + 1, edges)


def _subdivided_bouquet(n: int, directed: bool) -> Graph:
    if n < 1:
        raise PreconditionError("bouquet needs n >= 1 loops")
    edges = []
    colors = [CENTER]
    for i in range(n):
        a, b = 1 + 2 * i, 2 + 2 * i
        edges += [(0, a), (a, b), (b, 0)]
        colors += [BLACK, WHITE] if directed else [0, 0]
    return Graph.from_edges(2 * n + 1, edges, colors)


def bouquet_model(n: int) -> Graph:
    """Bouquet of ``n`` loops; loop ``i`` becomes the triangle 0, 2i+1, 2i+2.

    The center carries its own color so that n = 1 (a triangle) keeps the
    group of order 2 rather than all of S_3.
    """
    return _subdivided_bouquet(n, directed=False)


def directed_bouquet_model(n: int) -> Graph:
    """Directed bouquet: loop ``i`` runs from black 2i+1 to white 2i+2."""
    return _subdivided_bouquet(n, directed=True)


def rooted(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.vertex_count:
        raise PreconditionError(f"root {v} is not a vertex")
    colors = list(g.colors)
    colors[v] = max(colors) + 1
    return Graph(g.vertex_count, g.adjacency, tuple(colors))


def rooted_complete(n: int) -> Graph:
    return rooted(complete(n), 0)


# automorphisms

def automorphism_group(g: Graph, vertex_cap: int = DEFAULT_AUTOMORPHISM_VERTEX_CAP) -> PermutationGroup:
    """All color- and adjacency-preserving vertex bijections, by backtracking."""
    n = g.vertex_count
    if n > vertex_cap:
        raise CapExceeded(f"automorphism search limited to {vertex_cap} vertices, graph has {n}")
    # breadth-first order so each new vertex is usually adjacent to an assigned one
    order: list[int] = []
    for start in range(n):
        if start in order:
            continue
        queue = [start]
        order.append(start)
        while queue:
            v = queue.pop(0)
            for u in g.adjacency[v]:
                if u not in order:
                    order.append(u)
                    queue.append(u)
    cls = [(g.colors[v], g.degree(v)) for v in range(n)]
    image = [-1] * n
    used = [False] * n
    found: list[Permutation] = []

    def extend(pos: int) -> None:
        if pos == n:
            found.append(Permutation(tuple(image)))
            return
        v = order[pos]
        for w in range(n):
            if used[w] or cls[w] != cls[v]:
                continue
            if any(g.has_edge(v, u) != g.has_edge(w, image[u]) for u in order[:pos]):
                continue
            image[v] = w
            used[w] = True
            extend(pos + 1)
            used[w] = False
        image[v] = -1

    extend(0)
    return PermutationGroup(tuple(found), n)


# rotation systems

def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Rotate a cyclic sequence so its smallest entry comes first."""
    if not seq:
        return ()
    i = seq.index(min(seq))
    return tuple(seq[i:]) + tuple(seq[:i])


def cyclic_orders(points: Sequence[int]) -> list[tuple[int, ...]]:
    """All cyclic orders of ``points`` in canonical form."""
    points = sorted(points)
    if len(points) <= 2:
        return [tuple(points)]
    first, rest = points[0], points[1:]
    return [(first,) + p for p in itertools.permutations(rest)]


@dataclass(frozen=True, order=True)
class RotationSystem:
    """Per-vertex cyclic order of neighbors, stored canonically.

    ``rotations[v]`` lists N(v) in cyclic order starting at its minimum;
    successor of ``u`` at ``v`` is the next entry, wrapping around.
    """

    rotations: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rotations", tuple(canonical_cycle(tuple(r)) for r in self.rotations))

    def successor(self, v: int, u: int) -> int:
        rot = self.rotations[v]
        return rot[(rot.index(u) + 1) % len(rot)]

    def validate(self, g: Graph) -> None:
        if len(self.rotations) != g.vertex_count:
            raise PreconditionError("rotation system vertex count does not match graph")
        for v, rot in enumerate(self.rotations):
            if sorted(rot) != list(g.adjacency[v]) or len(set(rot)) != len(rot):
                raise PreconditionError(f"rotation at {v} is not a cyclic order of its neighbors")

    def to_cycle_string(self, base: int = 0) -> str:
        return "; ".join(f"{v + base}:(" + " ".join(str(x + base) for x in r) + ")"
                         for v, r in enumerate(self.rotations))

    def to_json_obj(self) -> dict:
        return {"rotations": [list(r) for r in self.rotations]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> RotationSystem:
        return cls(tuple(tuple(r) for r in obj["rotations"]))


def enumerate_rotation_systems(g: Graph, cap: int | None = None) -> Iterator[RotationSystem]:
    if cap is None:
        cap = int(os.environ.get("IMBEDSUM_MAP_CAP", DEFAULT_ROTATION_CAP))
    total = g.labeled_map_count()
    if total > cap:
        raise CapExceeded(f"{total} rotation systems exceed the cap of {cap}")
    choices = [cyclic_orders(g.adjacency[v]) for v in range(g.vertex_count)]
    for combo in itertools.product(*choices):
        yield RotationSystem(combo)


def act(gamma: Permutation, m: RotationSystem, g: Graph | None = None) -> RotationSystem:
    """Relabel ``m`` by ``gamma``: the rotation at gamma(v) becomes gamma·ρ_v·gamma⁻¹."""
    if g is not None and not g.is_automorphism(gamma):
        raise PreconditionError("permutation is not an automorphism of the graph")
    img = gamma.images
    out: list[tuple[int, ...]] = [()] * len(m.rotations)
    for v, rot in enumerate(m.rotations):
        out[img[v]] = tuple(img[x] for x in rot)
    return RotationSystem(tuple(out))


# type domains

@dataclass(frozen=True)
class TypeDomain:
    """Where cycle types are read: on the vertices, or on a projected family.

    ``projection`` sends a graph automorphism to the permutation it induces
    on the family (e.g. the loops of a directed bouquet); ``graph`` pins the
    vertex model it is valid for.
    """

    mode: str = "vertices"
    projection: Callable[[Permutation], Permutation] | None = None
    graph: Graph | None = None
    size: int | None = None

    def apply(self, gamma: Permutation) -> Permutation:
        if self.mode == "vertices":
            return gamma
        return self.projection(gamma)

    def degree(self, g: Graph) -> int:
        return g.vertex_count if self.mode == "vertices" else self.size

    def check(self, g: Graph) -> None:
        if self.mode == "projected" and self.graph is not None and self.graph != g:
            raise PreconditionError("type domain projection does not belong to this graph")


VERTICES = TypeDomain()


def loop_projection(n: int) -> TypeDomain:
    """Project automorphisms of the directed bouquet model onto its n loops."""
    model = directed_bouquet_model(n)

    def project(gamma: Permutation) -> Permutation:
        if gamma.degree != model.vertex_count:
            raise PreconditionError("permutation does not act on the directed bouquet model")
        return Permutation(tuple((gamma(1 + 2 * i) - 1) // 2 for i in range(n)))

    return TypeDomain("projected", project, model, n)


def orbit_representatives(gamma: Permutation) -> list[tuple[int, int]]:
    """``(min vertex, orbit length)`` for each orbit of ``gamma``."""
    return [(min(c), len(c)) for c in gamma.cycles(include_fixed=True)]


__all__ = [
    "Graph", "RotationSystem", "TypeDomain", "VERTICES",
    "complete", "wheel", "bouquet_model", "directed_bouquet_model", "rooted", "rooted_complete",
    "automorphism_group", "enumerate_rotation_systems", "act", "loop_projection",
    "cyclic_orders", "canonical_cycle", "load_graph", "orbit_length", "orbit_representatives",
]
