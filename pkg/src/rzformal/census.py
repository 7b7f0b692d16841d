"""Exhaustive (K, I) censuses with persistent, verifiable JSONL records.

Enumeration is labeled and deterministic: flag mode walks all graphs
on exactly m vertices by edge-set bitmask and takes clique complexes;
all-complexes mode walks every downward-closed face family containing
all singletons. Each complex contributes one record per coordinate
subset I, in bitmask order. Records carry the verdict of every
applicable decider plus the oracle's Betti totals, so a census file is
a self-contained equivalence check of the criteria.

Workers are pure functions of their task, which makes parallel runs
byte-identical to serial ones.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from itertools import combinations
from multiprocessing import Pool
from typing import Iterator

from .formality import (
    betti_sum_oracle,
    flag_criterion,
    general_criterion,
    torus_oracle,
)
from .simplicial import Graph, SimplicialComplex, mask_vertices

DEFAULT_FLAG_CAP = 5
DEFAULT_ALL_CAP = 4


@dataclass(frozen=True)
class CensusRecord:
    m: int
    facets: tuple[tuple[int, ...], ...]
    is_flag: bool
    i_set: tuple[int, ...]
    verdict_flag: str | None
    verdict_general: str
    verdict_oracle: str
    verdict_torus: str
    betti_total_ambient: int
    betti_total_fixed: int
    agree: bool

    def to_json_obj(self) -> dict:
        return {
            "m": self.m,
            "facets": [list(f) for f in self.facets],
            "is_flag": self.is_flag,
            "I": list(self.i_set),
            "verdict_flag": self.verdict_flag,
            "verdict_general": self.verdict_general,
            "verdict_oracle": self.verdict_oracle,
            "verdict_torus": self.verdict_torus,
            "betti_total_ambient": self.betti_total_ambient,
            "betti_total_fixed": self.betti_total_fixed,
            "agree": self.agree,
        }

    def json_line(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))


def compute_record(k: SimplicialComplex, i_mask: int, is_flag: bool | None = None) -> CensusRecord:
    """Run every applicable decider on one (K, I) pair."""
    if is_flag is None:
        is_flag = k.is_flag()
    verdict_flag = flag_criterion(k, i_mask).verdict if is_flag else None
    verdict_general = general_criterion(k, i_mask).verdict
    oracle = betti_sum_oracle(k, i_mask)
    verdict_torus = torus_oracle(k, i_mask).verdict
    verdicts = {verdict_general, oracle.verdict, verdict_torus}
    if verdict_flag is not None:
        verdicts.add(verdict_flag)
    facets = tuple(tuple(f) for f in k.to_json_obj()["facets"])
    assert oracle.totals is not None
    return CensusRecord(
        m=k.m,
        facets=facets,
        is_flag=is_flag,
        i_set=mask_vertices(i_mask),
        verdict_flag=verdict_flag,
        verdict_general=verdict_general,
        verdict_oracle=oracle.verdict,
        verdict_torus=verdict_torus,
        betti_total_ambient=oracle.totals[1],
        betti_total_fixed=oracle.totals[0],
        agree=len(verdicts) == 1,
    )


def flag_complexes(m: int) -> Iterator[SimplicialComplex]:
    """Clique complexes of all labeled graphs on m vertices.

    Graphs are ordered by edge-set bitmask over the lexicographic list
    of vertex pairs.
    """
    pairs = list(combinations(range(1, m + 1), 2))
    for edge_bits in range(1 << len(pairs)):
        edges = [pairs[b] for b in range(len(pairs)) if (edge_bits >> b) & 1]
        yield Graph(m, edges).clique_complex()


def all_complexes(m: int) -> Iterator[SimplicialComplex]:
    """All complexes on m labeled vertices with every singleton a face.

    Depth-first over candidate faces of size two and up, sorted by
    (size, mask); a face may be added only once all its boundary faces
    are present, so each downward-closed family appears exactly once.
    """
    singletons = [1 << i for i in range(m)]
    candidates = sorted(
        (
            mask
            for mask in range(1 << m)
            if mask.bit_count() >= 2
        ),
        key=lambda f: (f.bit_count(), f),
    )

    def extend(start: int, chosen: set[int]) -> Iterator[frozenset[int]]:
        yield frozenset(chosen)
        for idx in range(start, len(candidates)):
            face = candidates[idx]
            closed = all(
                face ^ low in chosen or (face ^ low).bit_count() < 2
                for low in _bits(face)
            )
            if not closed:
                continue
            chosen.add(face)
            yield from extend(idx + 1, chosen)
            chosen.remove(face)

    for family in extend(0, set()):
        yield SimplicialComplex((1 << m) - 1, list(family) + singletons)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def _task_records(task: tuple[int, tuple[tuple[int, ...], ...]]) -> tuple[list[str], int]:
    """Worker: all records of one complex, in I-bitmask order."""
    m, facets = task
    k = SimplicialComplex.from_facets(m, facets)
    is_flag = k.is_flag()
    lines = []
    disagreements = 0
    for i_mask in range(1 << m):
        record = compute_record(k, i_mask, is_flag)
        if not record.agree:
            disagreements += 1
        lines.append(record.json_line())
    return lines, disagreements


def census_tasks(m: int, mode: str) -> list[tuple[int, tuple[tuple[int, ...], ...]]]:
    if mode == "flag":
        complexes: Iterator[SimplicialComplex] = flag_complexes(m)
    elif mode == "all-complexes":
        complexes = all_complexes(m)
    else:
        raise ValueError(f"unknown census mode {mode!r}")
    tasks = []
    for k in complexes:
        facets = tuple(tuple(f) for f in k.to_json_obj()["facets"])
        tasks.append((m, facets))
    if mode == "all-complexes":
        tasks.sort()
    return tasks


def _census_cap(mode: str) -> tuple[int, str]:
    if mode == "flag":
        env = "RZFORMAL_CENSUS_FLAG_CAP"
        return int(os.environ.get(env, DEFAULT_FLAG_CAP)), env
    env = "RZFORMAL_CENSUS_ALL_CAP"
    return int(os.environ.get(env, DEFAULT_ALL_CAP)), env


def run_census(m: int, mode: str, out_path: str, jobs: int = 1) -> dict:
    """Write one record per (K, I) to ``out_path``; return the summary."""
    cap, env = _census_cap(mode)
    if m > cap:
        raise ValueError(
            f"census {mode} mode capped at {cap} vertices; set {env} to override"
        )
    if m < 1:
        raise ValueError("census needs at least one vertex")
    tasks = census_tasks(m, mode)
    records = 0
    disagreements = 0
    with open(out_path, "w") as out:
        if jobs > 1:
            with Pool(jobs) as pool:
                results: Iterator[tuple[list[str], int]] = pool.imap(
                    _task_records, tasks
                )
                for lines, bad in results:
                    disagreements += bad
                    records += len(lines)
                    out.write("\n".join(lines) + "\n")
        else:
            for task in tasks:
                lines, bad = _task_records(task)
                disagreements += bad
                records += len(lines)
                out.write("\n".join(lines) + "\n")
    return {
        "mode": mode,
        "m": m,
        "complexes": len(tasks),
        "records": records,
        "disagreements": disagreements,
        "out": out_path,
    }


def verify_census(path: str) -> dict:
    """Recompute every record and compare byte-for-byte.

    Returns a summary with mismatching and corrupt line numbers; the
    file passes only if both lists are empty.
    """
    mismatches: list[int] = []
    corrupt: list[int] = []
    records = 0
    with open(path) as f:
        for lineno, raw in enumerate(f, 1):
            line = raw.rstrip("\n")
            if not line:
                corrupt.append(lineno)
                continue
            records += 1
            try:
                obj = json.loads(line)
                m = obj["m"]
                facets = tuple(tuple(f) for f in obj["facets"])
                i_mask = 0
                for v in obj["I"]:
                    i_mask |= 1 << (v - 1)
                k = SimplicialComplex.from_facets(m, facets)
                recomputed = compute_record(k, i_mask).json_line()
            except (KeyError, TypeError, ValueError):
                corrupt.append(lineno)
                continue
            if recomputed != line:
                mismatches.append(lineno)
    return {
        "records": records,
        "mismatches": mismatches,
        "corrupt": corrupt,
    }
