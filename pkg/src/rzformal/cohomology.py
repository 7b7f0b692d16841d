"""Reduced simplicial cohomology with F2 coefficients.

Conventions for the augmented cochain complex:

* the empty face sits in degree -1, so the complex {} has reduced
  cohomology F2 there and a nonvoid complex with a vertex has none;
* the void complex has no faces and zero cohomology everywhere.

Cochain bases are ordered by face bitmask within each degree. Per-face
computations are memoized globally under a relabeling that compresses
the face supports, so restrictions of one complex to many vertex
subsets share work.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import f2
from .simplicial import SimplicialComplex, vertex_mask


@dataclass(frozen=True)
class BettiTable:
    """Reduced Betti numbers, indexed from degree ``min_degree``."""

    min_degree: int
    dims: tuple[int, ...]

    @classmethod
    def from_dict(cls, table: dict[int, int], min_degree: int = -1) -> "BettiTable":
        top = max((d for d, v in table.items() if v), default=min_degree - 1)
        dims = tuple(table.get(d, 0) for d in range(min_degree, top + 1))
        return cls(min_degree, dims)

    def __getitem__(self, degree: int) -> int:
        i = degree - self.min_degree
        if 0 <= i < len(self.dims):
            return self.dims[i]
        return 0

    def nonzero(self) -> Iterator[tuple[int, int]]:
        for i, v in enumerate(self.dims):
            if v:
                yield self.min_degree + i, v

    @property
    def total(self) -> int:
        return sum(self.dims)

    def to_json_obj(self) -> dict:
        return {"min_degree": self.min_degree, "dims": list(self.dims)}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "BettiTable":
        return cls(obj["min_degree"], tuple(obj["dims"]))


class _DegreeData:
    """Cochain data in one degree: size, coboundary RREF, class reps."""

    __slots__ = ("n", "cob_ech", "cob_piv", "h_basis")

    def __init__(self, n, cob_ech, cob_piv, h_basis):
        self.n = n
        self.cob_ech = cob_ech
        self.cob_piv = cob_piv
        self.h_basis = h_basis


class _HomData:
    """Cohomology of one face list, positions relative to that list."""

    __slots__ = ("degrees", "betti", "total_betti", "betti_table")

    def __init__(self, degrees: dict[int, _DegreeData]):
        self.degrees = degrees
        self.betti = {d: len(dd.h_basis) for d, dd in degrees.items()}
        self.total_betti = sum(self.betti.values())
        self.betti_table = BettiTable.from_dict(self.betti)


_hom_cache: dict[tuple[int, ...], _HomData] = {}


def clear_caches() -> None:
    _hom_cache.clear()


def _compress(faces: tuple[int, ...]) -> tuple[int, ...]:
    """Relabel face bits onto 0..k-1, preserving order within degrees."""
    supp = 0
    for f in faces:
        supp |= f
    if supp & (supp + 1) == 0:
        return faces
    shift = {}
    i = 0
    s = supp
    while s:
        low = s & -s
        shift[low] = 1 << i
        i += 1
        s ^= low
    out = []
    for f in faces:
        g = 0
        while f:
            low = f & -f
            g |= shift[low]
            f ^= low
        out.append(g)
    return tuple(out)


def group_by_dim(faces: Iterable[int]) -> dict[int, list[int]]:
    """Split a (dimension, mask)-sorted face list into per-dimension runs."""
    out: dict[int, list[int]] = {}
    for f in faces:
        out.setdefault(f.bit_count() - 1, []).append(f)
    return out


def _build_hom_data(faces: tuple[int, ...]) -> _HomData:
    by_dim = group_by_dim(faces)
    if not by_dim:
        return _HomData({})
    top = max(by_dim)
    index = {d: {f: i for i, f in enumerate(fs)} for d, fs in by_dim.items()}

    # up_rows[t]: rows over (t-1)-faces, columns over t-faces; down_rows[t]
    # is its transpose. Both describe the coboundary into degree t.
    up_rows: dict[int, list[int]] = {}
    down_rows: dict[int, list[int]] = {}
    for t in range(0, top + 1):
        faces_t = by_dim.get(t, [])
        up = [0] * len(by_dim.get(t - 1, []))
        down = [0] * len(faces_t)
        idx_lo = index.get(t - 1, {})
        for j, tau in enumerate(faces_t):
            rest = tau
            while rest:
                low = rest & -rest
                i = idx_lo[tau ^ low]
                up[i] |= 1 << j
                down[j] |= 1 << i
                rest ^= low
        up_rows[t] = up
        down_rows[t] = down

    degrees = {}
    for d in range(-1, top + 1):
        n = len(by_dim.get(d, []))
        if n == 0:
            continue
        cocycles = f2.kernel_basis(down_rows.get(d + 1, []), n)
        cob_ech, cob_piv = f2.rref(up_rows.get(d, []), n)
        reduced = [v for v in f2.reduce_batch(cocycles, cob_ech, cob_piv) if v]
        h_basis, _ = f2.rref(reduced, n)
        degrees[d] = _DegreeData(n, cob_ech, cob_piv, h_basis)
    return _HomData(degrees)


def hom_data(faces: tuple[int, ...]) -> _HomData:
    """Memoized cohomology data for a (dimension, mask)-sorted face list."""
    key = _compress(faces)
    data = _hom_cache.get(key)
    if data is None:
        data = _build_hom_data(key)
        _hom_cache[key] = data
    return data


def reduced_betti(k: SimplicialComplex) -> BettiTable:
    """Reduced F2 Betti numbers of a complex (ghost vertices ignored)."""
    return hom_data(k.faces()).betti_table


def _positions(sub: list[int], full: list[int]) -> list[int]:
    pos = []
    i = 0
    for x in sub:
        while full[i] != x:
            i += 1
        pos.append(i)
        i += 1
    return pos


def _restriction_trivial(src_faces: tuple[int, ...], tgt_mask: int) -> bool:
    """Whether restriction to the faces inside ``tgt_mask`` kills H̃*."""
    return _restriction_map_trivial(
        src_faces, tuple(f for f in src_faces if f & ~tgt_mask == 0)
    )


def _restriction_map_trivial(
    src_faces: tuple[int, ...], tgt_faces: tuple[int, ...]
) -> bool:
    """Whether restriction onto a subcomplex of the face list kills H̃*.

    ``tgt_faces`` must be a downward-closed, order-preserving selection
    from ``src_faces``.
    """
    src = hom_data(src_faces)
    if src.total_betti == 0:
        return True
    tgt = hom_data(tgt_faces)
    if tgt.total_betti == 0:
        return True
    src_by_dim = group_by_dim(src_faces)
    tgt_by_dim = group_by_dim(tgt_faces)
    for d, src_deg in src.degrees.items():
        if not src_deg.h_basis:
            continue
        t_list = tgt_by_dim.get(d)
        if not t_list:
            continue
        pos = _positions(t_list, src_by_dim[d])
        restricted = []
        for h in src_deg.h_basis:
            v = 0
            for j, p in enumerate(pos):
                v |= ((h >> p) & 1) << j
            restricted.append(v)
        tgt_deg = tgt.degrees[d]
        if any(f2.reduce_batch(restricted, tgt_deg.cob_ech, tgt_deg.cob_piv)):
            return False
    return True


def restriction_is_trivial(k: SimplicialComplex, j_sub: Iterable[int] | int) -> bool:
    """Whether H̃*(K) -> H̃*(K_J) vanishes for the full subcomplex on j_sub.

    ``j_sub`` must consist of non-ghost vertices of ``k``.
    """
    j_mask = j_sub if isinstance(j_sub, int) else vertex_mask(j_sub)
    if j_mask & ~k.vertices_mask:
        raise ValueError("subset must consist of non-ghost vertices")
    return _restriction_trivial(k.faces(), j_mask)
