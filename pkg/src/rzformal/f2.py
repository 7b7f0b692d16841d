"""Linear algebra over F2 and subgroups of the elementary abelian 2-group.

Vectors over F2 are plain Python ints read as bitmasks: bit k-1 is the
k-th coordinate. The heavy row-reduction routines live in a compiled
extension when available; set RZFORMAL_PURE=1 to force the pure-Python
backend. Both backends are deterministic and interchangeable.
"""

from __future__ import annotations

import os
from typing import Iterable, Iterator

if os.environ.get("RZFORMAL_PURE") == "1":
    from . import _f2pure as _backend

    BACKEND = "pure"
else:
    try:
        from . import _f2core as _backend  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _f2pure as _backend  # type: ignore[no-redef]

        BACKEND = "pure"

rank = _backend.rank
rref = _backend.rref
kernel_basis = _backend.kernel_basis
reduce_batch = _backend.reduce_batch


def reduce_vector(vec: int, ech: list[int], pivots: list[int]) -> int:
    """Canonical remainder of one vector modulo an RREF row space."""
    return reduce_batch([vec], ech, pivots)[0]


def vector_from_string(s: str) -> int:
    """Parse a vector like "0110": character k is coordinate k, so bit k-1."""
    v = 0
    for i, ch in enumerate(s):
        if ch == "1":
            v |= 1 << i
        elif ch != "0":
            raise ValueError(f"invalid F2 vector string {s!r}")
    return v


def vector_to_string(v: int, m: int) -> str:
    if v < 0 or v >> m:
        raise ValueError(f"vector {v:#x} does not fit in {m} coordinates")
    return "".join("1" if (v >> i) & 1 else "0" for i in range(m))


def support(v: int) -> tuple[int, ...]:
    """Coordinates (1-based) where the vector is nonzero."""
    out = []
    i = 1
    while v:
        if v & 1:
            out.append(i)
        v >>= 1
        i += 1
    return tuple(out)


class F2Matrix:
    """An immutable matrix over F2, stored as bitmask rows."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Iterable[int], ncols: int):
        self.rows = tuple(rows)
        self.ncols = ncols
        for r in self.rows:
            if r < 0 or r >> ncols:
                raise ValueError(f"row {r:#x} does not fit in {ncols} columns")

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> "F2Matrix":
        rows = list(rows)
        ncols = len(rows[0]) if rows else 0
        return cls([vector_from_string(s) for s in rows], ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def rank(self) -> int:
        return rank(list(self.rows), self.ncols)

    def rref(self) -> tuple["F2Matrix", list[int]]:
        ech, pivots = rref(list(self.rows), self.ncols)
        return F2Matrix(ech, self.ncols), pivots

    def kernel_basis(self) -> "F2Matrix":
        return F2Matrix(kernel_basis(list(self.rows), self.ncols), self.ncols)

    def transpose(self) -> "F2Matrix":
        cols = []
        for c in range(self.ncols):
            v = 0
            for i, r in enumerate(self.rows):
                v |= ((r >> c) & 1) << i
            cols.append(v)
        return F2Matrix(cols, self.nrows)

    def __iter__(self) -> Iterator[int]:
        return iter(self.rows)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, F2Matrix)
            and self.rows == other.rows
            and self.ncols == other.ncols
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.ncols))

    def __repr__(self) -> str:
        shown = ", ".join(vector_to_string(r, self.ncols) for r in self.rows)
        return f"F2Matrix([{shown}])"


class Subgroup:
    """A subgroup of (Z/2)^m given by generators, canonicalized to RREF.

    Attributes:
        m: number of coordinates.
        basis: RREF basis rows, ascending pivot order. Two Subgroup
            instances are equal iff they describe the same subgroup.
    """

    __slots__ = ("m", "basis", "_pivots")

    def __init__(self, m: int, generators: Iterable[int | str]):
        if m < 0:
            raise ValueError("m must be nonnegative")
        gens = []
        for g in generators:
            v = vector_from_string(g) if isinstance(g, str) else g
            if v < 0 or v >> m:
                raise ValueError(f"generator {g!r} does not fit in {m} coordinates")
            gens.append(v)
        ech, pivots = rref(gens, m)
        self.m = m
        self.basis = tuple(ech)
        self._pivots = tuple(pivots)

    @classmethod
    def trivial(cls, m: int) -> "Subgroup":
        return cls(m, [])

    @classmethod
    def full(cls, m: int) -> "Subgroup":
        return cls(m, [1 << i for i in range(m)])

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def corank(self) -> int:
        return self.m - self.rank

    def contains(self, v: int | str) -> bool:
        if isinstance(v, str):
            v = vector_from_string(v)
        return reduce_vector(v, list(self.basis), list(self._pivots)) == 0

    @property
    def hull_mask(self) -> int:
        """Bitmask of coordinates where some element is nonzero."""
        mask = 0
        for b in self.basis:
            mask |= b
        return mask

    def hull(self) -> tuple[int, ...]:
        """Support of the smallest coordinate subgroup containing this one."""
        return support(self.hull_mask)

    def elements(self) -> Iterator[int]:
        """All 2^rank elements, in generator-combination order."""
        basis = self.basis
        for sel in range(1 << len(basis)):
            v = 0
            for i, b in enumerate(basis):
                if (sel >> i) & 1:
                    v ^= b
            yield v

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Subgroup":
        m = obj["m"]
        gens = obj["generators"]
        if not isinstance(m, int) or m < 0:
            raise ValueError("subgroup field 'm' must be a nonnegative integer")
        for g in gens:
            if not isinstance(g, str) or len(g) != m:
                raise ValueError(f"generator {g!r} must be a string of {m} bits")
        return cls(m, gens)

    def to_json_obj(self) -> dict:
        return {
            "m": self.m,
            "generators": [vector_to_string(b, self.m) for b in self.basis],
        }

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.m == other.m
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.m, self.basis))

    def __repr__(self) -> str:
        gens = ", ".join(vector_to_string(b, self.m) for b in self.basis)
        return f"Subgroup(m={self.m}, [{gens}])"
