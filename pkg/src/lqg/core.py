"""Permutation and table arithmetic on the points 0..n-1.

Maps are dense image tuples: ``p[x]`` is the image of ``x``.  Composition
reads right to left, ``compose(p, q)`` applies ``q`` first, matching the
usual operator juxtaposition ``pq``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .errors import DimensionMismatch

Perm = tuple[int, ...]
SelfMap = tuple[int, ...]
Table = tuple[tuple[int, ...], ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_selfmap(m) -> bool:
    n = len(m)
    return all(isinstance(v, int) and 0 <= v < n for v in m)


def is_permutation(m) -> bool:
    return is_selfmap(m) and len(set(m)) == len(m)


def compose(p: SelfMap, q: SelfMap) -> SelfMap:
    """x -> p(q(x))."""
    if len(p) != len(q):
        raise DimensionMismatch(f"cannot compose maps on {len(p)} and {len(q)} points")
    return tuple(p[v] for v in q)


def compose_many(*maps: SelfMap) -> SelfMap:
    """Right-to-left product; the last argument acts first."""
    if not maps:
        raise ValueError("compose_many needs at least one map")
    return reduce(compose, maps)


def invert(p: Perm) -> Perm:
    if not is_permutation(p):
        raise ValueError(f"not a permutation: {p}")
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def validate_table(rows) -> Table:
    """Coerce a nested sequence into a square table with entries in 0..n-1."""
    table = tuple(tuple(int(v) for v in row) for row in rows)
    n = len(table)
    if n == 0:
        raise ValueError("empty table")
    for row in table:
        if len(row) != n:
            raise ValueError(f"table is not square: row of length {len(row)}, expected {n}")
        for v in row:
            if not 0 <= v < n:
                raise ValueError(f"cell value {v} out of range 0..{n - 1}")
    return table


def is_latin(table: Table) -> bool:
    """True iff every row and every column is a permutation of 0..n-1."""
    n = len(table)
    full = frozenset(range(n))
    for row in table:
        if frozenset(row) != full:
            return False
    for j in range(n):
        if frozenset(row[j] for row in table) != full:
            return False
    return True


def latin_defect(table: Table):
    """First offending (kind, index) for a non-Latin table, else None."""
    n = len(table)
    full = frozenset(range(n))
    for i, row in enumerate(table):
        if frozenset(row) != full:
            return ("row", i)
    for j in range(n):
        if frozenset(row[j] for row in table) != full:
            return ("column", j)
    return None


def transpose(table: Table) -> Table:
    n = len(table)
    return tuple(tuple(table[x][y] for x in range(n)) for y in range(n))


@dataclass(frozen=True)
class PermGroup:
    """A permutation group with an explicit, lexicographically sorted element list."""

    n: int
    elements: tuple[Perm, ...]
    generators: tuple[Perm, ...]

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p) -> bool:
        return p in self._members

    def __iter__(self):
        return iter(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def same_elements(self, other: "PermGroup") -> bool:
        return self._members == other._members

    def is_normal_in(self, other: "PermGroup") -> bool:
        """True iff conjugation by the other group's generators preserves this set."""
        for g in other.generators:
            gi = invert(g)
            for h in self.elements:
                if compose(g, compose(h, gi)) not in self._members:
                    return False
        return True


def closure_generate(gens, n: int | None = None) -> PermGroup:
    """Smallest composition-closed set of permutations containing the generators.

    Finite closure under products automatically contains inverses and the
    identity.  Elements come back sorted, so equal groups compare equal.
    """
    gens = [tuple(g) for g in gens]
    if not gens:
        if n is None:
            raise ValueError("cannot generate a group from no generators without an order")
        return PermGroup(n, (identity(n),), ())
    order = len(gens[0])
    for g in gens:
        if len(g) != order:
            raise DimensionMismatch("generators act on different point counts")
        if not is_permutation(g):
            raise ValueError(f"generator is not a permutation: {g}")
    if n is not None and n != order:
        raise DimensionMismatch(f"generators act on {order} points, expected {n}")
    seen = {identity(order)}
    seen.update(gens)
    frontier = list(seen)
    while frontier:
        new = []
        for g in gens:
            for f in frontier:
                h = tuple(g[v] for v in f)
                if h not in seen:
                    seen.add(h)
                    new.append(h)
        frontier = new
    return PermGroup(order, tuple(sorted(seen)), tuple(dict.fromkeys(gens)))
