"""Validated finite groups, their morphisms, and group endotopies.

Carrier sets are 0..n-1 and the identity element is always 0; tables whose
identity sits elsewhere are relabelled by the right translation that moves
it to 0.  Additive notation is used throughout: ``add``, ``neg``, and the
translations ``ltrans(a): x -> a + x`` and ``rtrans(a): x -> x + a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .core import PermGroup, Perm, SelfMap, Table, closure_generate, compose, invert, is_latin, is_permutation, validate_table
from .errors import NoIdentity, NotAQuasiendomorphism, NotAssociative, NotAQuasigroup

Endotopy = tuple[SelfMap, SelfMap, SelfMap]


@dataclass(frozen=True)
class FiniteGroup:
    """An associative Latin table with identity 0 and an inverse array."""

    table: Table
    inverse: tuple[int, ...]
    name: str | None = None

    @property
    def n(self) -> int:
        return len(self.table)

    def add(self, a: int, b: int) -> int:
        return self.table[a][b]

    def neg(self, a: int) -> int:
        return self.inverse[a]

    def add_many(self, *terms: int) -> int:
        acc = 0
        for t in terms:
            acc = self.table[acc][t]
        return acc

    def ltrans(self, a: int) -> Perm:
        """x -> a + x."""
        return self.table[a]

    def rtrans(self, a: int) -> Perm:
        """x -> x + a."""
        return tuple(row[a] for row in self.table)

    def conjugation(self, a: int) -> Perm:
        """x -> -a + x + a."""
        na = self.inverse[a]
        return tuple(self.table[self.table[na][x]][a] for x in range(self.n))

    @property
    def is_abelian(self) -> bool:
        t = self.table
        n = self.n
        return all(t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n))

    def element_order(self, a: int) -> int:
        k, acc = 1, a
        while acc != 0:
            acc = self.table[acc][a]
            k += 1
        return k

    def quasigroup(self):
        from .quasigroups import Quasigroup

        return Quasigroup(self.table)

    def __repr__(self):
        return f"FiniteGroup({self.name or 'order ' + str(self.n)})"


def _find_identity(table: Table) -> int | None:
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            return e
    return None


def _associativity_defect(table: Table):
    n = len(table)
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    return (a, b, c)
    return None


def validate_group(rows, name: str | None = None) -> FiniteGroup:
    """Check a table is a group and relabel its identity to 0 if needed."""
    table = validate_table(rows)
    if not is_latin(table):
        raise NotAQuasigroup("table is not a Latin square")
    defect = _associativity_defect(table)
    if defect is not None:
        e = _find_identity(table)
        extra = "" if e is not None else "; the table also has no two-sided identity"
        raise NotAssociative(f"associativity fails at (a,b,c)={defect}{extra}")
    e = _find_identity(table)
    if e is None:
        # unreachable for associative Latin tables, kept as a guard
        raise NoIdentity("no two-sided identity element")
    if e != 0:
        # push the structure forward along x -> x + 0, which sends e to 0
        lam = tuple(row[0] for row in table)
        lam_inv = invert(lam)
        n = len(table)
        table = tuple(tuple(lam[table[lam_inv[x]][lam_inv[y]]] for y in range(n)) for x in range(n))
    n = len(table)
    inverse = [0] * n
    for x in range(n):
        for y in range(n):
            if table[x][y] == 0:
                inverse[x] = y
                break
    return FiniteGroup(table=table, inverse=tuple(inverse), name=name)


# --- built-in catalog -------------------------------------------------------

def cyclic_table(n: int) -> Table:
    return tuple(tuple((i + j) % n for j in range(n)) for i in range(n))


def product_table(t1: Table, t2: Table) -> Table:
    """Direct product with pairs ordered lexicographically."""
    n1, n2 = len(t1), len(t2)
    idx = lambda a, b: a * n2 + b
    n = n1 * n2
    out = []
    for x in range(n):
        a1, a2 = divmod(x, n2)
        out.append(tuple(idx(t1[a1][y // n2], t2[a2][y % n2]) for y in range(n)))
    return tuple(out)


def _perm_closure_table(gens: list[Perm]) -> Table:
    """Cayley table of the permutation group the generators close over.

    Elements are sorted lexicographically; the identity is lex-least, so it
    lands at index 0.
    """
    group = closure_generate(gens)
    elems = group.elements
    idx = {p: i for i, p in enumerate(elems)}
    return tuple(tuple(idx[compose(a, b)] for b in elems) for a in elems)


def _q8_table() -> Table:
    # elements 0..7 = 1, -1, i, -i, j, -j, k, -k
    unit_mul = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
        ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"),
        ("k", "i"): (1, "j"), ("i", "k"): (-1, "j"),
    }
    units = ("1", "i", "j", "k")
    def decode(x): return (1 if x % 2 == 0 else -1, units[x // 2])
    def encode(s, u): return units.index(u) * 2 + (0 if s == 1 else 1)
    n = 8
    out = []
    for x in range(n):
        s1, u1 = decode(x)
        row = []
        for y in range(n):
            s2, u2 = decode(y)
            s3, u3 = unit_mul[(u1, u2)]
            row.append(encode(s1 * s2 * s3, u3))
        out.append(tuple(row))
    return tuple(out)


_CATALOG_BUILDERS = {
    "z1": lambda: cyclic_table(1),
    "z2": lambda: cyclic_table(2),
    "z3": lambda: cyclic_table(3),
    "z4": lambda: cyclic_table(4),
    "z5": lambda: cyclic_table(5),
    "z6": lambda: cyclic_table(6),
    "z7": lambda: cyclic_table(7),
    "z8": lambda: cyclic_table(8),
    "z2xz2": lambda: product_table(cyclic_table(2), cyclic_table(2)),
    "z2xz4": lambda: product_table(cyclic_table(2), cyclic_table(4)),
    "s3": lambda: _perm_closure_table([(1, 2, 0), (1, 0, 2)]),
    "d4": lambda: _perm_closure_table([(1, 2, 3, 0), (0, 3, 2, 1)]),
    "q8": _q8_table,
}

CATALOG_NAMES = tuple(_CATALOG_BUILDERS)


@lru_cache(maxsize=None)
def catalog_group(name: str) -> FiniteGroup:
    try:
        builder = _CATALOG_BUILDERS[name]
    except KeyError:
        raise KeyError(f"unknown group {name!r}; known: {', '.join(CATALOG_NAMES)}") from None
    return validate_group(builder(), name=name)


def catalog_groups(names=CATALOG_NAMES) -> list[FiniteGroup]:
    return [catalog_group(name) for name in names]


def catalog_groups_of_order(n: int) -> list[FiniteGroup]:
    return [g for g in catalog_groups() if g.n == n]


def abelian_catalog_groups(max_order: int = 8) -> list[FiniteGroup]:
    return [g for g in catalog_groups() if g.is_abelian and g.n <= max_order]


# --- morphism enumeration ----------------------------------------------------

def is_homomorphism(G: FiniteGroup, H: FiniteGroup, m: SelfMap) -> bool:
    gt, ht = G.table, H.table
    n = G.n
    return all(m[gt[x][y]] == ht[m[x]][m[y]] for x in range(n) for y in range(n))


def is_endomorphism(G: FiniteGroup, m: SelfMap) -> bool:
    return is_homomorphism(G, G, m)


def is_automorphism(G: FiniteGroup, m: SelfMap) -> bool:
    return is_permutation(m) and is_endomorphism(G, m)


def is_antiendomorphism(G: FiniteGroup, m: SelfMap) -> bool:
    t = G.table
    n = G.n
    return all(m[t[x][y]] == t[m[y]][m[x]] for x in range(n) for y in range(n))


def is_antiautomorphism(G: FiniteGroup, m: SelfMap) -> bool:
    return is_permutation(m) and is_antiendomorphism(G, m)


def generating_sequence(G: FiniteGroup):
    """Greedy generating set plus a build recipe for the whole group.

    Returns ``(gens, recipe)`` where recipe lists ``(element, how)`` in
    discovery order; ``how`` is None for the identity and
    ``(gen_position, prior_element)`` with element = gen + prior otherwise.
    """
    n = G.n
    gens: list[int] = []
    while True:
        recipe: list[tuple[int, tuple[int, int] | None]] = [(0, None)]
        known = {0}
        changed = True
        while changed:
            changed = False
            for gpos, g in enumerate(gens):
                for elem, _ in list(recipe):
                    c = G.add(g, elem)
                    if c not in known:
                        known.add(c)
                        recipe.append((c, (gpos, elem)))
                        changed = True
        if len(known) == n:
            return gens, recipe
        gens.append(min(x for x in range(n) if x not in known))


def _hom_from_generator_images(G: FiniteGroup, H: FiniteGroup, recipe, images: tuple[int, ...]):
    """Extend generator images along the recipe; full verification is separate."""
    out = [0] * G.n
    for elem, how in recipe:
        if how is None:
            out[elem] = 0
        else:
            gpos, prior = how
            out[elem] = H.add(images[gpos], out[prior])
    return tuple(out)


@lru_cache(maxsize=None)
def endomorphisms(G: FiniteGroup) -> tuple[SelfMap, ...]:
    """All maps m with m(x + y) = m(x) + m(y), bijective or not."""
    n = G.n
    found = []
    if n <= 6:
        for m in product(range(n), repeat=n):
            if m[0] != 0:
                continue
            if is_endomorphism(G, m):
                found.append(m)
    else:
        gens, recipe = generating_sequence(G)
        for images in product(range(n), repeat=len(gens)):
            m = _hom_from_generator_images(G, G, recipe, images)
            if is_endomorphism(G, m):
                found.append(m)
    return tuple(sorted(set(found)))


@lru_cache(maxsize=None)
def automorphisms(G: FiniteGroup) -> tuple[Perm, ...]:
    """All bijections m with m(x + y) = m(x) + m(y), in canonical order."""
    n = G.n
    orders = [G.element_order(x) for x in range(n)]
    gens, recipe = generating_sequence(G)
    candidates = [[y for y in range(n) if orders[y] == orders[g]] for g in gens]
    found = []
    for images in product(*candidates):
        m = _hom_from_generator_images(G, G, recipe, images)
        if is_permutation(m) and is_endomorphism(G, m):
            found.append(m)
    return tuple(sorted(found))


@lru_cache(maxsize=None)
def antiautomorphisms(G: FiniteGroup) -> tuple[Perm, ...]:
    """Bijections reversing the operation; exactly Aut composed with negation."""
    return tuple(sorted(compose(a, G.inverse) for a in automorphisms(G)))


def inner_automorphisms(G: FiniteGroup) -> PermGroup:
    """Closure of all conjugation maps x -> -a + x + a."""
    return closure_generate([G.conjugation(a) for a in range(G.n)], n=G.n)


@lru_cache(maxsize=None)
def subgroups(G: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """All subgroups, each as a sorted element tuple; seeds of up to 3 generators."""
    n = G.n
    found = set()

    def close(seed):
        sub = set(seed) | {0}
        frontier = list(sub)
        while frontier:
            new = []
            for a in list(sub):
                for b in frontier:
                    for c in (G.add(a, b), G.add(b, a)):
                        if c not in sub:
                            sub.add(c)
                            new.append(c)
            for b in frontier:
                nb = G.neg(b)
                if nb not in sub:
                    sub.add(nb)
                    new.append(nb)
            frontier = new
        return tuple(sorted(sub))

    found.add(close(()))
    for size in (1, 2, 3):
        for seed in combinations(range(n), size):
            found.add(close(seed))
    return tuple(sorted(found, key=lambda h: (len(h), h)))


def is_normal_subgroup(G: FiniteGroup, H) -> bool:
    hs = frozenset(H)
    return all(G.add(G.add(a, x), G.neg(a)) in hs for a in range(G.n) for x in hs)


# --- quasiendomorphisms and group endotopies ---------------------------------

def decompose_quasiendomorphism(G: FiniteGroup, gamma: SelfMap):
    """Split gamma into (s, gamma0) with gamma = rtrans(s) . gamma0, gamma0 an endomorphism.

    Works exactly when gamma(x + y) = gamma(x) - gamma(0) + gamma(y) holds
    everywhere, i.e. when gamma is the third component of some endotopy.
    """
    n = G.n
    s = gamma[0]
    ns = G.neg(s)
    for x in range(n):
        for y in range(n):
            if gamma[G.add(x, y)] != G.add_many(gamma[x], ns, gamma[y]):
                raise NotAQuasiendomorphism(f"defining identity fails at (x,y)=({x},{y})")
    gamma0 = tuple(G.add(gamma[x], ns) for x in range(n))
    return s, gamma0


def quasiendomorphisms(G: FiniteGroup) -> tuple[SelfMap, ...]:
    """All maps rtrans(s) . e with e an endomorphism, in canonical order."""
    out = set()
    for e in endomorphisms(G):
        for s in range(G.n):
            out.add(tuple(G.add(e[x], s) for x in range(G.n)))
    return tuple(sorted(out))


def group_endotopies(G: FiniteGroup) -> tuple[Endotopy, ...]:
    """Every endotopy of the group: (ltrans(a).e, rtrans(b).e, ltrans(a).rtrans(b).e).

    Each produced triple is re-verified against the defining identity before
    inclusion, and duplicates are collapsed rather than assumed absent.
    """
    n = G.n
    t = G.table
    out = set()
    for e in endomorphisms(G):
        for a in range(n):
            la = t[a]
            alpha = tuple(la[e[x]] for x in range(n))
            for b in range(n):
                beta = tuple(t[e[x]][b] for x in range(n))
                gamma = tuple(t[la[e[x]]][b] for x in range(n))
                for x in range(n):
                    for y in range(n):
                        if gamma[t[x][y]] != t[alpha[x]][beta[y]]:
                            raise AssertionError("group endotopy construction violated its identity")
                out.add((alpha, beta, gamma))
    return tuple(sorted(out))


def golovko_parameter_count(G: FiniteGroup) -> int:
    return G.n * G.n * len(endomorphisms(G))
