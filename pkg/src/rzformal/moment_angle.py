"""Betti numbers of moment-angle complexes and their cubical models.

The real moment-angle complex of K sits inside the cube [-1,1]^m; its
F2 Betti numbers decompose over vertex subsets J as reduced cohomology
of the full subcomplexes K_J (degree shift 1). The complex version has
shift |J| + 1 and the same total dimension.

Two direct cell models of the real version are available:

* unsubdivided: cells (sigma, eps) with sigma a face of K and eps a
  sign pattern on the remaining coordinates;
* subdivided: each coordinate interval is split at 0, so every cell is
  a per-coordinate choice among {-1}, {0}, {1}, [-1,0], [0,1], and is
  present iff the support of interval and zero coordinates is a face.

Only the subdivided model is a subcomplex-closed home for fixed sets
of coordinate reflections, which fix exactly the cells sitting at 0 on
the reflected coordinates. Subset sums are capped by vertex count
(environment overrides RZFORMAL_HOCHSTER_CAP, RZFORMAL_CUBICAL_CAP)
since both scale exponentially.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator

from . import f2
from .cohomology import hom_data
from .simplicial import SimplicialComplex, mask_vertices, submasks, vertex_mask

DEFAULT_HOCHSTER_CAP = 20
DEFAULT_CUBICAL_CAP = 8


def hochster_cap(override: int | None = None) -> int:
    if override is not None:
        return override
    return int(os.environ.get("RZFORMAL_HOCHSTER_CAP", DEFAULT_HOCHSTER_CAP))


def cubical_cap(override: int | None = None) -> int:
    if override is not None:
        return override
    return int(os.environ.get("RZFORMAL_CUBICAL_CAP", DEFAULT_CUBICAL_CAP))


@dataclass(frozen=True)
class SpaceBettiTable:
    """F2 Betti numbers of a space, degree 0 upward, trailing zeros cut."""

    dims: tuple[int, ...]

    @classmethod
    def from_dict(cls, table: dict[int, int]) -> "SpaceBettiTable":
        top = max((d for d, v in table.items() if v), default=-1)
        return cls(tuple(table.get(d, 0) for d in range(top + 1)))

    def __getitem__(self, degree: int) -> int:
        if 0 <= degree < len(self.dims):
            return self.dims[degree]
        return 0

    @property
    def total(self) -> int:
        return sum(self.dims)

    def to_json_obj(self) -> dict:
        return {"min_degree": 0, "dims": list(self.dims), "total": self.total}


def _check_hochster_cap(k: SimplicialComplex, max_vertices: int | None) -> None:
    cap = hochster_cap(max_vertices)
    if k.m > cap:
        raise ValueError(
            f"Hochster sum over {k.m} vertices exceeds the cap {cap}; "
            "pass max_vertices to override"
        )


def hochster_real_betti(
    k: SimplicialComplex, max_vertices: int | None = None
) -> SpaceBettiTable:
    """Betti numbers of the real moment-angle complex of k."""
    cached = k._cache.get("hochster_real")
    if cached is not None:
        return cached
    _check_hochster_cap(k, max_vertices)
    acc: dict[int, int] = {}
    for j_mask in submasks(k.ambient):
        for d, b in hom_data(k.subfaces(j_mask)).betti.items():
            if b:
                acc[d + 1] = acc.get(d + 1, 0) + b
    table = SpaceBettiTable.from_dict(acc)
    k._cache["hochster_real"] = table
    return table


def hochster_complex_betti(
    k: SimplicialComplex, max_vertices: int | None = None
) -> SpaceBettiTable:
    """Betti numbers of the complex moment-angle complex of k."""
    cached = k._cache.get("hochster_complex")
    if cached is not None:
        return cached
    _check_hochster_cap(k, max_vertices)
    acc: dict[int, int] = {}
    for j_mask in submasks(k.ambient):
        shift = j_mask.bit_count() + 1
        for d, b in hom_data(k.subfaces(j_mask)).betti.items():
            if b:
                acc[d + shift] = acc.get(d + shift, 0) + b
    table = SpaceBettiTable.from_dict(acc)
    k._cache["hochster_complex"] = table
    return table


def fixed_betti_via_link(
    k: SimplicialComplex, i_set: Iterable[int] | int
) -> SpaceBettiTable:
    """Betti numbers of the points fixed by reflections on ``i_set``.

    The fixed set is the real moment-angle complex of the link of I
    (with the untouched coordinates as ghost vertices) when I is a
    face, and empty otherwise.
    """
    i_mask = i_set if isinstance(i_set, int) else vertex_mask(i_set)
    if i_mask & ~k.ambient:
        raise ValueError("coordinate set is not contained in the vertex set")
    if not k.has_face(i_mask):
        return SpaceBettiTable(())
    if i_mask == 0:
        return hochster_real_betti(k)
    return hochster_real_betti(k.link(i_mask))


def _spread(mask: int, code: int) -> int:
    """Place ``code`` in the 3-bit field of every set bit of ``mask``."""
    out = 0
    while mask:
        low = mask & -mask
        out |= code << (3 * (low.bit_length() - 1))
        mask ^= low
    return out


class CubicalComplex:
    """A cell model of the real moment-angle complex of one complex.

    Unsubdivided cells are pairs (face mask, sign mask on the other
    coordinates). Subdivided cells are ints with a 3-bit code per
    coordinate: 0 is {-1}, 1 is {0}, 2 is {1}, 3 is [-1,0], 4 is [0,1].
    """

    def __init__(self, ambient: int, subdivided: bool, cells_by_dim):
        self.ambient = ambient
        self.subdivided = subdivided
        self.cells_by_dim = tuple(tuple(sorted(cells)) for cells in cells_by_dim)
        self._coords = [b - 1 for b in f2.support(ambient)]
        self._cache: dict = {}

    @property
    def m(self) -> int:
        return self.ambient.bit_count()

    @property
    def dim(self) -> int:
        return len(self.cells_by_dim) - 1

    def counts(self) -> tuple[int, ...]:
        return tuple(len(cells) for cells in self.cells_by_dim)

    def cells(self, d: int) -> tuple:
        if 0 <= d < len(self.cells_by_dim):
            return self.cells_by_dim[d]
        return ()

    def cell_set(self) -> frozenset:
        return frozenset(c for cells in self.cells_by_dim for c in cells)

    def boundary(self, cell) -> list:
        """Cells of one dimension lower in the F2 boundary of ``cell``."""
        out = []
        if self.subdivided:
            for i in self._coords:
                code = (cell >> (3 * i)) & 7
                if code >= 3:
                    out.append(cell - (3 << (3 * i)))
                    out.append(cell - (2 << (3 * i)))
        else:
            sigma, eps = cell
            rest = sigma
            while rest:
                low = rest & -rest
                out.append((sigma ^ low, eps))
                out.append((sigma ^ low, eps | low))
                rest ^= low
        return out

    def betti(self) -> SpaceBettiTable:
        """Cellular F2 homology Betti numbers."""
        cached = self._cache.get("betti")
        if cached is not None:
            return cached
        counts = self.counts()
        top = len(counts) - 1
        ranks = [0] * (top + 2)
        for d in range(1, top + 1):
            index = {c: i for i, c in enumerate(self.cells_by_dim[d - 1])}
            rows = []
            for cell in self.cells_by_dim[d]:
                row = 0
                for child in self.boundary(cell):
                    row ^= 1 << index[child]
                rows.append(row)
            ranks[d] = f2.rank(rows, counts[d - 1])
        table = {d: counts[d] - ranks[d] - ranks[d + 1] for d in range(top + 1)}
        result = SpaceBettiTable.from_dict(table)
        self._cache["betti"] = result
        return result

    def _zero_pattern(self, i_mask: int) -> tuple[int, int]:
        sel = _spread(i_mask, 7)
        want = _spread(i_mask, 1)
        return sel, want

    def fixed_subcomplex(self, i_set: Iterable[int] | int) -> "CubicalComplex":
        """Subcomplex of cells pointwise fixed by reflections on i_set."""
        if not self.subdivided:
            raise ValueError("requires subdivided model")
        i_mask = i_set if isinstance(i_set, int) else vertex_mask(i_set)
        if i_mask & ~self.ambient:
            raise ValueError("coordinate set is not contained in the vertex set")
        sel, want = self._zero_pattern(i_mask)
        kept = [
            [c for c in cells if c & sel == want] for cells in self.cells_by_dim
        ]
        while kept and not kept[-1]:
            kept.pop()
        return CubicalComplex(self.ambient, True, kept)

    def cells_fixed_by(self, reflection: int) -> frozenset:
        """Cells pointwise fixed by one coordinate reflection vector."""
        if not self.subdivided:
            raise ValueError("requires subdivided model")
        sel, want = self._zero_pattern(reflection)
        return frozenset(
            c for cells in self.cells_by_dim for c in cells if c & sel == want
        )

    def __repr__(self) -> str:
        kind = "subdivided" if self.subdivided else "plain"
        return f"CubicalComplex(m={self.m}, {kind}, counts={self.counts()})"


def build_cubical(
    k: SimplicialComplex,
    subdivided: bool = False,
    max_vertices: int | None = None,
) -> CubicalComplex:
    """Cell model of the real moment-angle complex of ``k``."""
    cap = cubical_cap(max_vertices)
    if k.m > cap:
        raise ValueError(
            f"cubical model limited to {cap} vertices; pass max_vertices to override"
        )
    cache_key = ("cubical", subdivided)
    cached = k._cache.get(cache_key)
    if cached is not None:
        return cached
    cells_by_dim: list[list] = [[] for _ in range(max(k.dim + 2, 1))]
    if not subdivided:
        for face in k.faces():
            others = k.ambient & ~face
            d = face.bit_count()
            for eps in submasks(others):
                cells_by_dim[d].append((face, eps))
    else:
        for face in k.faces():
            others = k.ambient & ~face
            signs = [_spread(s, 2) for s in submasks(others)]
            for d_mask in submasks(face):
                base = _spread(face ^ d_mask, 1) + _spread(d_mask, 3)
                d = d_mask.bit_count()
                bucket = cells_by_dim[d]
                for up in submasks(d_mask):
                    enc = base + _spread(up, 1)
                    for sign in signs:
                        bucket.append(enc + sign)
    while cells_by_dim and not cells_by_dim[-1]:
        cells_by_dim.pop()
    model = CubicalComplex(k.ambient, subdivided, cells_by_dim)
    k._cache[cache_key] = model
    return model


def cubical_betti(c: CubicalComplex) -> SpaceBettiTable:
    return c.betti()


def fixed_subcomplex(c: CubicalComplex, i_set: Iterable[int] | int) -> CubicalComplex:
    return c.fixed_subcomplex(i_set)
