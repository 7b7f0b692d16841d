"""Simple graphs and simplicial complexes on labeled vertices.

Vertices carry 1-based labels; a set of vertices is a bitmask int with
bit k-1 for vertex k (the ``VertexSubset`` convention used throughout
the package). A complex remembers its ambient vertex set, so vertices
that belong to the ambient set but span no face ("ghost" vertices) are
tracked, and links or full subcomplexes keep their original labels.

Two degenerate complexes are distinguished: the void complex, with no
faces at all, and the complex {}, whose only face is the empty one.
"""

from __future__ import annotations

from typing import Iterable, Iterator

VertexSubset = int


def vertex_mask(vertices: Iterable[int]) -> int:
    """Bitmask of a collection of 1-based vertex labels."""
    mask = 0
    for v in vertices:
        if v < 1:
            raise ValueError(f"vertex labels are 1-based, got {v}")
        mask |= 1 << (v - 1)
    return mask


def mask_vertices(mask: int) -> tuple[int, ...]:
    """Sorted 1-based vertex labels of a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and the mask itself.

    Ascending numeric order, 2^popcount of them.
    """
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        # next submask in increasing order: force a carry through the
        # bits outside the mask, then project back onto the mask
        sub = (sub - mask) & mask


def _canonical_facets(masks: Iterable[int]) -> tuple[int, ...]:
    """Drop faces contained in others; sort by (dimension, mask)."""
    unique = set(masks)
    facets = [
        f for f in unique if not any(f != g and f & ~g == 0 for g in unique)
    ]
    facets.sort(key=lambda f: (f.bit_count(), f))
    return tuple(facets)


class Graph:
    """A simple graph on vertex set {1, ..., m}."""

    __slots__ = ("m", "edges", "adj")

    def __init__(self, m: int, edges: Iterable[Iterable[int]]):
        if m < 0:
            raise ValueError("m must be nonnegative")
        seen = set()
        adj = [0] * m
        for e in edges:
            u, v = sorted(e)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u and v <= m):
                raise ValueError(f"edge ({u},{v}) out of range 1..{m}")
            seen.add((u, v))
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        self.m = m
        self.edges = tuple(sorted(seen))
        self.adj = tuple(adj)

    @classmethod
    def empty(cls, m: int) -> "Graph":
        return cls(m, [])

    @classmethod
    def complete(cls, m: int) -> "Graph":
        return cls(m, [(u, v) for u in range(1, m + 1) for v in range(u + 1, m + 1)])

    @classmethod
    def cycle(cls, m: int) -> "Graph":
        if m < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls(m, [(i, i % m + 1) for i in range(1, m + 1)])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return mask_vertices(self.adj[v - 1])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u - 1] >> (v - 1) & 1)

    def clique_complex(self) -> "SimplicialComplex":
        """Flag complex whose faces are the cliques of this graph."""
        verts = (1 << self.m) - 1
        cliques = _maximal_cliques(self.adj, verts)
        return SimplicialComplex(verts, cliques)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Graph":
        if not isinstance(obj, dict) or "m" not in obj or "edges" not in obj:
            raise ValueError("graph JSON needs fields 'm' and 'edges'")
        m = obj["m"]
        if not isinstance(m, int) or m < 0:
            raise ValueError("graph field 'm' must be a nonnegative integer")
        edges = obj["edges"]
        for e in edges:
            if len(e) != 2:
                raise ValueError(f"edge {e!r} must have two endpoints")
        return cls(m, edges)

    def to_json_obj(self) -> dict:
        return {"m": self.m, "edges": [list(e) for e in self.edges]}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and (self.m, self.edges) == (other.m, other.edges)

    def __hash__(self) -> int:
        return hash((self.m, self.edges))

    def __repr__(self) -> str:
        return f"Graph(m={self.m}, edges={list(self.edges)})"


def _maximal_cliques(adj: tuple[int, ...] | list[int], verts: int) -> list[int]:
    """Bron-Kerbosch with pivoting, on adjacency bitmasks."""
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        px = p | x
        pivot, best = -1, -1
        t = px
        while t:
            v = (t & -t).bit_length() - 1
            n = (p & adj[v]).bit_count()
            if n > best:
                best, pivot = n, v
            t &= t - 1
        cand = p & ~adj[pivot]
        while cand:
            vbit = cand & -cand
            v = vbit.bit_length() - 1
            expand(r | vbit, p & adj[v], x & adj[v])
            p &= ~vbit
            x |= vbit
            cand ^= vbit
    expand(0, verts, 0)
    return out


class SimplicialComplex:
    """An abstract simplicial complex, stored by its maximal faces.

    ``ambient`` is the bitmask of ambient vertices and ``facets`` the
    canonically ordered maximal faces. Equality compares both, so a
    complex with a ghost vertex differs from the same face set without
    it.
    """

    def __init__(self, ambient: int, facet_masks: Iterable[int]):
        facets = _canonical_facets(facet_masks)
        for f in facets:
            if f & ~ambient:
                raise ValueError(
                    f"facet {mask_vertices(f)} not contained in the ambient set"
                )
        self.ambient = ambient
        self.facets = facets
        self._cache: dict = {}

    @classmethod
    def from_facets(cls, m: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Complex on ambient {1..m} spanned by the given faces."""
        masks = []
        for face in facets:
            mask = vertex_mask(face)
            if mask >> m:
                raise ValueError(f"face {tuple(face)} out of range 1..{m}")
            masks.append(mask)
        return cls((1 << m) - 1, masks)

    @classmethod
    def void(cls, m: int) -> "SimplicialComplex":
        return cls((1 << m) - 1, [])

    @classmethod
    def simplex(cls, m: int) -> "SimplicialComplex":
        return cls((1 << m) - 1, [(1 << m) - 1])

    @property
    def m(self) -> int:
        """Number of ambient vertices."""
        return self.ambient.bit_count()

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """Dimension; -1 for {} and -2 for the void complex."""
        if not self.facets:
            return -2
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def vertices_mask(self) -> int:
        """Mask of vertices that actually span a face."""
        mask = 0
        for f in self.facets:
            mask |= f
        return mask

    @property
    def ghost_mask(self) -> int:
        return self.ambient & ~self.vertices_mask

    def vertex_labels(self) -> tuple[int, ...]:
        return mask_vertices(self.ambient)

    def faces(self) -> tuple[int, ...]:
        """All faces as masks, sorted by (dimension, mask)."""
        try:
            return self._cache["faces"]
        except KeyError:
            pass
        seen: set[int] = set()
        for facet in self.facets:
            for sub in submasks(facet):
                seen.add(sub)
        faces = tuple(sorted(seen, key=lambda f: (f.bit_count(), f)))
        self._cache["faces"] = faces
        return faces

    def subfaces(self, j_mask: int) -> tuple[int, ...]:
        """Faces contained in ``j_mask``, same order as ``faces()``."""
        key = ("subfaces", j_mask)
        try:
            return self._cache[key]
        except KeyError:
            pass
        out = tuple(f for f in self.faces() if f & ~j_mask == 0)
        self._cache[key] = out
        return out

    def has_face(self, mask: int) -> bool:
        return any(mask & ~f == 0 for f in self.facets)

    def is_face(self, vertices: Iterable[int]) -> bool:
        return self.has_face(vertex_mask(vertices))

    def full_subcomplex(self, j: Iterable[int] | int) -> "SimplicialComplex":
        """Restriction to the vertex subset ``j``, ambient set ``j``."""
        j_mask = j if isinstance(j, int) else vertex_mask(j)
        if j_mask & ~self.ambient:
            raise ValueError("subset is not contained in the ambient vertex set")
        return SimplicialComplex(j_mask, (f & j_mask for f in self.facets))

    def link(self, sigma: Iterable[int] | int) -> "SimplicialComplex":
        """Link of a face, on ambient set ambient minus sigma."""
        s_mask = sigma if isinstance(sigma, int) else vertex_mask(sigma)
        if not self.has_face(s_mask):
            raise ValueError("not a face")
        new_facets = [f & ~s_mask for f in self.facets if f & s_mask == s_mask]
        return SimplicialComplex(self.ambient & ~s_mask, new_facets)

    def _skeleton_adj(self) -> list[int]:
        adj = [0] * self.ambient.bit_length()
        for f in self.faces():
            if f.bit_count() == 2:
                low = f & -f
                high = f ^ low
                adj[low.bit_length() - 1] |= high
                adj[high.bit_length() - 1] |= low
        return adj

    def underlying_graph(self) -> Graph:
        """1-skeleton as a graph on {1..m}; requires a full ambient set."""
        if self.ambient != (1 << self.m) - 1:
            raise ValueError("underlying graph needs contiguous vertex labels")
        edges = [mask_vertices(f) for f in self.faces() if f.bit_count() == 2]
        return Graph(self.m, edges)

    def is_flag(self) -> bool:
        """Whether every pairwise-adjacent vertex set is a face."""
        adj = self._skeleton_adj()
        for clique in _maximal_cliques(adj, self.vertices_mask):
            if not self.has_face(clique):
                return False
        return True

    def missing_edges(self) -> tuple[tuple[int, int], ...]:
        """Non-adjacent pairs of non-ghost vertices, lexicographic."""
        verts = mask_vertices(self.vertices_mask)
        return tuple(
            (u, v)
            for i, u in enumerate(verts)
            for v in verts[i + 1 :]
            if not self.has_face(vertex_mask((u, v)))
        )

    @classmethod
    def from_json_obj(cls, obj: dict) -> "SimplicialComplex":
        if not isinstance(obj, dict) or "m" not in obj or "facets" not in obj:
            raise ValueError("complex JSON needs fields 'm' and 'facets'")
        m = obj["m"]
        if not isinstance(m, int) or m < 0:
            raise ValueError("complex field 'm' must be a nonnegative integer")
        return cls.from_facets(m, obj["facets"])

    def to_json_obj(self) -> dict:
        if self.ambient != (1 << self.m) - 1:
            raise ValueError("JSON output needs contiguous vertex labels")
        facets = sorted(mask_vertices(f) for f in self.facets)
        facets.sort(key=len)
        return {"m": self.m, "facets": [list(f) for f in facets]}

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self.ambient == other.ambient
            and self.facets == other.facets
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.facets))

    def __repr__(self) -> str:
        facets = [mask_vertices(f) for f in self.facets]
        return f"SimplicialComplex(vertices={self.vertex_labels()}, facets={facets})"
