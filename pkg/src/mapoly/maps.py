"""Maps (orientably embedded graphs) stored as rotation systems.

A map is a finite set of half-edges together with two permutations: the
vertex rotation ``next_at_vertex`` (anticlockwise successor around a vertex)
and the fixed-point-free involution ``mate`` swapping the two ends of an edge.
Faces are the orbits of ``h -> prev_at_vertex(mate(h))``.

Vertices are kept as an ordered list of rotations, so isolated vertices (empty
rotations) survive deletion and contraction.  Maps are immutable.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import InternalError, MapError, MapFormatError

TAIL = "+"
HEAD = "-"


class HalfEdge(NamedTuple):
    """One end of an edge; ``end`` is ``"+"`` for the tail, ``"-"`` for the head."""

    edge: int
    end: str

    @property
    def is_tail(self) -> bool:
        return self.end == TAIL

    def mate(self) -> "HalfEdge":
        return HalfEdge(self.edge, HEAD if self.end == TAIL else TAIL)

    def __str__(self) -> str:
        return f"{self.edge}{self.end}"

    @classmethod
    def parse(cls, token: str) -> "HalfEdge":
        m = _TOKEN.fullmatch(token)
        if m is None:
            raise MapError(f"bad half-edge token {token!r}")
        return cls(int(m.group(1)), m.group(2))


_TOKEN = re.compile(r"([1-9][0-9]*)([+-])")


def _as_half_edge(h) -> HalfEdge:
    if isinstance(h, HalfEdge):
        return h
    if isinstance(h, str):
        return HalfEdge.parse(h)
    edge, end = h
    if end in (1, TAIL, "tail"):
        end = TAIL
    elif end in (-1, HEAD, "head"):
        end = HEAD
    else:
        raise MapError(f"bad half-edge end {end!r}")
    return HalfEdge(int(edge), end)


@dataclass(frozen=True)
class MapParameters:
    """Numeric profile of a map."""

    v: int
    e: int
    f: int
    k: int
    g: int

    @property
    def chi(self) -> int:
        return self.v - self.e + self.f

    @property
    def r(self) -> int:
        return self.v - self.k

    @property
    def n(self) -> int:
        return self.e - self.v + self.k

    @property
    def r_star(self) -> int:
        return self.f - self.k

    @property
    def n_star(self) -> int:
        return self.e - self.f + self.k

    def dual(self) -> "MapParameters":
        """Parameters of the surface dual: vertices and faces swap."""
        return MapParameters(self.f, self.e, self.v, self.k, self.g)

    def __add__(self, other: "MapParameters") -> "MapParameters":
        return MapParameters(self.v + other.v, self.e + other.e, self.f + other.f,
                             self.k + other.k, self.g + other.g)

    @classmethod
    def total(cls, parts: Iterable["MapParameters"]) -> "MapParameters":
        acc = cls(0, 0, 0, 0, 0)
        for p in parts:
            acc = acc + p
        return acc

    def as_dict(self) -> dict:
        return {"v": self.v, "e": self.e, "f": self.f, "k": self.k, "g": self.g,
                "chi": self.chi, "r": self.r, "n": self.n,
                "r*": self.r_star, "n*": self.n_star}

    def __str__(self) -> str:
        return (f"v={self.v} e={self.e} f={self.f} k={self.k} g={self.g} "
                f"r={self.r} n={self.n} r*={self.r_star} n*={self.n_star}")


@dataclass(frozen=True)
class MapClass:
    is_quasi_tree: bool
    is_bouquet: bool
    is_plane: bool


class Map:
    """A map given by its vertex rotations.

    ``rotations[i]`` lists the half-edges at vertex ``i`` in anticlockwise
    order.  Use :func:`build_map` or :func:`parse_map` to construct one from
    loose input.
    """

    __slots__ = ("_rotations", "_next", "_prev", "_vertex_of", "_edges", "_faces", "_params")

    def __init__(self, rotations: Sequence[Sequence[HalfEdge]]):
        rotations = tuple(tuple(_as_half_edge(h) for h in rot) for rot in rotations)
        seen: dict[HalfEdge, int] = {}
        for i, rot in enumerate(rotations):
            for h in rot:
                if h in seen:
                    raise MapError(f"half-edge {h} appears more than once")
                seen[h] = i
        edges = sorted({h.edge for h in seen})
        for e in edges:
            for end in (TAIL, HEAD):
                if HalfEdge(e, end) not in seen:
                    raise MapError(f"edge {e} is missing its {'tail' if end == TAIL else 'head'} half-edge")
        nxt = {}
        prv = {}
        for rot in rotations:
            for j, h in enumerate(rot):
                succ = rot[(j + 1) % len(rot)]
                nxt[h] = succ
                prv[succ] = h
        self._rotations = rotations
        self._next = nxt
        self._prev = prv
        self._vertex_of = seen
        self._edges = tuple(edges)
        self._faces = None
        self._params = None

    # -- basic accessors --------------------------------------------------

    @property
    def rotations(self) -> tuple[tuple[HalfEdge, ...], ...]:
        return self._rotations

    @property
    def edges(self) -> tuple[int, ...]:
        return self._edges

    @property
    def half_edges(self) -> list[HalfEdge]:
        return [h for rot in self._rotations for h in rot]

    @property
    def num_vertices(self) -> int:
        return len(self._rotations)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def next_at_vertex(self, h: HalfEdge) -> HalfEdge:
        return self._next[h]

    def prev_at_vertex(self, h: HalfEdge) -> HalfEdge:
        return self._prev[h]

    def vertex_of(self, h: HalfEdge) -> int:
        return self._vertex_of[h]

    def face_successor(self, h: HalfEdge) -> HalfEdge:
        """Cross the edge of ``h``, then step back once around the new vertex."""
        return self._prev[h.mate()]

    def endpoints(self, edge: int) -> tuple[int, int]:
        """(tail vertex, head vertex) of ``edge``."""
        return (self._vertex_of[HalfEdge(edge, TAIL)], self._vertex_of[HalfEdge(edge, HEAD)])

    def is_loop(self, edge: int) -> bool:
        u, w = self.endpoints(edge)
        return u == w

    # -- structure --------------------------------------------------------

    def faces(self) -> tuple[tuple[HalfEdge, ...], ...]:
        """Face walks; an isolated vertex contributes one empty walk."""
        if self._faces is None:
            walks = []
            seen = set()
            for rot in self._rotations:
                if not rot:
                    walks.append(())
                    continue
                for h in rot:
                    if h in seen:
                        continue
                    walk = []
                    cur = h
                    while cur not in seen:
                        seen.add(cur)
                        walk.append(cur)
                        cur = self.face_successor(cur)
                    walks.append(tuple(walk))
            self._faces = tuple(walks)
        return self._faces

    def vertex_components(self) -> list[list[int]]:
        """Vertex indices grouped by connected component, in order of first vertex."""
        parent = list(range(len(self._rotations)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for e in self._edges:
            u, w = self.endpoints(e)
            ru, rw = find(u), find(w)
            if ru != rw:
                parent[max(ru, rw)] = min(ru, rw)
        groups: dict[int, list[int]] = {}
        for i in range(len(self._rotations)):
            groups.setdefault(find(i), []).append(i)
        return list(groups.values())

    def component_parameters(self) -> list[MapParameters]:
        """Parameters of every connected component, in component order."""
        comp_of = {}
        comps = self.vertex_components()
        for c, verts in enumerate(comps):
            for i in verts:
                comp_of[i] = c
        v = [len(verts) for verts in comps]
        e = [0] * len(comps)
        f = [0] * len(comps)
        for edge in self._edges:
            e[comp_of[self.endpoints(edge)[0]]] += 1
        for walk in self.faces():
            if walk:
                f[comp_of[self._vertex_of[walk[0]]]] += 1
        for c, verts in enumerate(comps):
            if not self._rotations[verts[0]]:
                f[c] += 1
        out = []
        for c in range(len(comps)):
            twice_g = 2 - v[c] + e[c] - f[c]
            if twice_g < 0 or twice_g % 2:
                raise InternalError(
                    f"component {c} has Euler characteristic {v[c] - e[c] + f[c]}; "
                    "the rotation system is corrupted")
            out.append(MapParameters(v[c], e[c], f[c], 1, twice_g // 2))
        return out

    def parameters(self) -> MapParameters:
        if self._params is None:
            self._params = MapParameters.total(self.component_parameters())
        return self._params

    def canonical_form(self) -> tuple:
        """Invariant of the map up to orientation-preserving isomorphism.

        Each connected component is encoded by relabelling its half-edges in
        breadth-first order from every possible root and keeping the least
        code; edge directions are not part of the code.
        """
        codes = []
        for verts in self.vertex_components():
            darts = [h for i in verts for h in self._rotations[i]]
            codes.append(self._component_code(darts))
        return tuple(sorted(codes))

    def _component_code(self, darts: list[HalfEdge]) -> tuple:
        best = None
        for root in darts:
            label = {root: 0}
            order = [root]
            i = 0
            while i < len(order):
                d = order[i]
                i += 1
                for nb in (self._next[d], d.mate()):
                    if nb not in label:
                        label[nb] = len(order)
                        order.append(nb)
            code = tuple((label[self._next[d]], label[d.mate()]) for d in order)
            if best is None or code < best:
                best = code
        return best if best is not None else ()

    def is_isomorphic(self, other: "Map") -> bool:
        return self.canonical_form() == other.canonical_form()

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Map):
            return NotImplemented
        return (self._next == other._next
                and len(self._rotations) == len(other._rotations))

    def __hash__(self) -> int:
        return hash((frozenset(self._next.items()), len(self._rotations)))

    def __repr__(self) -> str:
        rots = ", ".join("[" + " ".join(map(str, rot)) + "]" for rot in self._rotations)
        return f"Map([{rots}])"


# -- construction ---------------------------------------------------------

def build_map(vertex_rotations) -> Map:
    """Build a map from per-vertex anticlockwise rotations.

    Half-edges may be given as :class:`HalfEdge`, as tokens such as ``"1+"``
    or as ``(edge, end)`` pairs.

    >>> build_map([["1+", "2+", "1-", "2-"]]).parameters().g
    1
    """
    return Map(vertex_rotations)


EMPTY_MAP = Map([])


def parse_map(text: str) -> Map:
    """Parse the line-oriented map format (``vertex: 1+ 2+ 1- 2-``)."""
    rotations = []
    seen: dict[HalfEdge, tuple[int, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        stripped = line.lstrip()
        indent = len(line) - len(stripped)
        if not stripped.startswith("vertex:"):
            raise MapFormatError("expected 'vertex:'", lineno, indent + 1)
        rot = []
        pos = indent + len("vertex:")
        for m in re.finditer(r"\S+", line[pos:]):
            col = pos + m.start() + 1
            tok = _TOKEN.fullmatch(m.group())
            if tok is None:
                raise MapFormatError(f"bad half-edge token {m.group()!r}", lineno, col)
            h = HalfEdge(int(tok.group(1)), tok.group(2))
            if h in seen:
                raise MapFormatError(f"duplicate half-edge {h} (first at line {seen[h][0]})",
                                     lineno, col)
            seen[h] = (lineno, col)
            rot.append(h)
        rotations.append(rot)
    for h, (lineno, col) in seen.items():
        if h.mate() not in seen:
            raise MapFormatError(f"edge {h.edge} has no matching {h.mate()}", lineno, col)
    return Map(rotations)


def read_map(path) -> Map:
    with open(path, encoding="utf-8") as fh:
        return parse_map(fh.read())


def format_map(m: Map) -> str:
    lines = []
    for rot in m.rotations:
        lines.append(" ".join(["vertex:"] + [str(h) for h in rot]))
    return "\n".join(lines) + ("\n" if lines else "")


# -- operations -----------------------------------------------------------

def faces(m: Map) -> tuple[tuple[HalfEdge, ...], ...]:
    return m.faces()


def parameters(m: Map) -> MapParameters:
    return m.parameters()


def _check_edges(m: Map, edges) -> frozenset:
    edges = frozenset(edges)
    unknown = edges.difference(m.edges)
    if unknown:
        raise MapError(f"unknown edge id(s) {sorted(unknown)}")
    return edges


def dual(m: Map) -> Map:
    """Surface dual: faces become vertices, with rotation given by face tracing."""
    return Map(m.faces())


def delete(m: Map, edges) -> Map:
    """Remove ``edges``; the remaining rotation at each vertex closes over the gap."""
    edges = _check_edges(m, edges)
    if not edges:
        return m
    return Map([[h for h in rot if h.edge not in edges] for rot in m.rotations])


def contract(m: Map, edges) -> Map:
    """Contract ``edges`` as the dual of deleting them from the dual."""
    edges = _check_edges(m, edges)
    if not edges:
        return m
    return dual(delete(dual(m), edges))


def restrict(m: Map, edges) -> Map:
    """The submap keeping only ``edges`` (deletion of the complement)."""
    edges = _check_edges(m, edges)
    return delete(m, set(m.edges) - edges)


def relabel_edges(m: Map, mapping) -> Map:
    return Map([[HalfEdge(mapping[h.edge], h.end) for h in rot] for rot in m.rotations])


def flip_edges(m: Map, edges) -> Map:
    """Reverse the direction (swap tail and head) of ``edges``."""
    edges = _check_edges(m, edges)
    return Map([[h.mate() if h.edge in edges else h for h in rot] for rot in m.rotations])


def disjoint_union(m1: Map, m2: Map) -> Map:
    """Place ``m2`` beside ``m1``, shifting its edge ids past those of ``m1``."""
    offset = max(m1.edges, default=0)
    shifted = [[HalfEdge(h.edge + offset, h.end) for h in rot] for rot in m2.rotations]
    return Map(list(m1.rotations) + shifted)


def components(m: Map) -> list[Map]:
    return [Map([m.rotations[i] for i in verts]) for verts in m.vertex_components()]


def classify(m: Map) -> MapClass:
    p = m.parameters()
    return MapClass(is_quasi_tree=p.f == 1, is_bouquet=p.v == 1, is_plane=p.g == 0)


def is_isomorphic(m1: Map, m2: Map) -> bool:
    return m1.is_isomorphic(m2)


def random_map(rng: random.Random, max_vertices: int = 4, max_edges: int = 6,
               min_edges: int = 0, isolated: bool = True) -> Map:
    """A random rotation system.

    Half-edges are dealt to vertices uniformly and shuffled; directions are
    random.  With ``isolated=False`` every vertex receives at least one
    half-edge.
    """
    e = rng.randint(min_edges, max_edges)
    v = rng.randint(1, max_vertices) if e or isolated else 0
    darts = []
    for edge in range(1, e + 1):
        ends = [TAIL, HEAD]
        rng.shuffle(ends)
        darts.extend(HalfEdge(edge, end) for end in ends)
    rng.shuffle(darts)
    rotations = [[] for _ in range(v)]
    if not isolated:
        v = min(v, len(darts)) if darts else v
        rotations = [[] for _ in range(v)]
        for i in range(v):
            rotations[i].append(darts[i])
        rest = darts[v:]
    else:
        rest = darts
    for h in rest:
        rotations[rng.randrange(v)].append(h)
    for rot in rotations:
        rng.shuffle(rot)
    return Map(rotations)
