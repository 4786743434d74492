"""Generation and enumeration of Latin squares for fuzz corpora."""

from __future__ import annotations

import random

from .core import Table
from .quasigroups import Quasigroup


def _complete_rows(rows: list[list[int]], n: int, rng: random.Random | None, limit: int | None, out: list[Table]):
    """Depth-first completion of partial Latin squares, row by row, cell by cell."""
    if len(rows) == n:
        out.append(tuple(tuple(r) for r in rows))
        return limit is None or len(out) < limit
    used_cols = [set(r[j] for r in rows) for j in range(n)]
    row: list[int] = []

    def place(j: int) -> bool:
        if j == n:
            rows.append(list(row))
            more = _complete_rows(rows, n, rng, limit, out)
            rows.pop()
            return more
        candidates = [v for v in range(n) if v not in row and v not in used_cols[j]]
        if rng is not None:
            rng.shuffle(candidates)
        for v in candidates:
            row.append(v)
            used_cols[j].add(v)
            more = place(j + 1)
            row.pop()
            used_cols[j].remove(v)
            if not more:
                return False
        return True

    place(0)
    return limit is None or len(out) < limit


def all_latin_squares(n: int) -> list[Table]:
    """Every Latin square of order n; practical for n <= 4 (576 squares)."""
    if n > 5:
        raise ValueError("full enumeration is only supported up to order 5")
    out: list[Table] = []
    _complete_rows([], n, None, None, out)
    return out


def random_latin_square(n: int, rng: random.Random) -> Table:
    out: list[Table] = []
    _complete_rows([], n, rng, 1, out)
    return out[0]


def random_quasigroup(n: int, rng: random.Random) -> Quasigroup:
    return Quasigroup(random_latin_square(n, rng))
