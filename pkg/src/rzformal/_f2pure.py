"""Pure-Python F2 row reduction on integer bitmask rows.

A matrix is a list of ints; bit c of a row is the entry in column c.
This module and the compiled twin ``_f2core`` expose the same four
functions and must produce identical output for identical input.
"""

from __future__ import annotations


def rank(rows: list[int], ncols: int) -> int:
    """Rank over F2. ``ncols`` is accepted for interface parity."""
    pivots: dict[int, int] = {}
    r = 0
    for row in rows:
        while row:
            p = (row & -row).bit_length() - 1
            e = pivots.get(p)
            if e is None:
                pivots[p] = row
                r += 1
                break
            row ^= e
    return r


def rref(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form.

    Returns (echelon rows, pivot columns), both ordered by ascending
    pivot column. The output is the canonical RREF of the row space.
    """
    ech: dict[int, int] = {}
    for row in rows:
        for p, e in ech.items():
            if (row >> p) & 1:
                row ^= e
        if not row:
            continue
        p = (row & -row).bit_length() - 1
        for q, e in ech.items():
            if (e >> p) & 1:
                ech[q] = e ^ row
        ech[p] = row
    pivots = sorted(ech)
    return [ech[p] for p in pivots], pivots


def kernel_basis(rows: list[int], ncols: int) -> list[int]:
    """Basis of the right kernel, one vector per free column, ascending."""
    ech, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for c in range(ncols):
        if c in pivot_set:
            continue
        v = 1 << c
        for r, p in zip(ech, pivots):
            if (r >> c) & 1:
                v |= 1 << p
        basis.append(v)
    return basis


def reduce_batch(vecs: list[int], ech: list[int], pivots: list[int]) -> list[int]:
    """Canonical remainders of ``vecs`` modulo an RREF row space."""
    out = []
    for v in vecs:
        for r, p in zip(ech, pivots):
            if (v >> p) & 1:
                v ^= r
        out.append(v)
    return out
