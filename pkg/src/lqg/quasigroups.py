"""Latin-square quasigroups: divisions, translations, local identities,
subquasigroups, and invariance-based normality.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Perm, SelfMap, Table, is_latin, validate_table
from .errors import HNotClosed, NotAQuasigroup, PreconditionFailed
from .groups import FiniteGroup, is_normal_subgroup


@dataclass(frozen=True)
class Quasigroup:
    """A total binary operation whose table is a Latin square."""

    table: Table

    def __post_init__(self):
        table = validate_table(self.table)
        object.__setattr__(self, "table", table)
        if not is_latin(table):
            raise NotAQuasigroup("table is not a Latin square")
        n = len(table)
        ldiv = [[0] * n for _ in range(n)]
        rdiv = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                z = table[x][y]
                ldiv[x][z] = y   # x \ z = y
                rdiv[z][y] = x   # z / y = x
        object.__setattr__(self, "_ldiv", tuple(tuple(r) for r in ldiv))
        object.__setattr__(self, "_rdiv", tuple(tuple(r) for r in rdiv))

    @property
    def n(self) -> int:
        return len(self.table)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def ldiv(self, y: int, z: int) -> int:
        """y \\ z: the unique w with y * w = z."""
        return self._ldiv[y][z]

    def rdiv(self, z: int, y: int) -> int:
        """z / y: the unique x with x * y = z."""
        return self._rdiv[z][y]

    def left_translation(self, a: int) -> Perm:
        """x -> a * x."""
        return self.table[a]

    def right_translation(self, a: int) -> Perm:
        """x -> x * a."""
        return tuple(row[a] for row in self.table)

    def translation(self, side: str, a: int) -> Perm:
        if side == "left":
            return self.left_translation(a)
        if side == "right":
            return self.right_translation(a)
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")

    def e_map(self) -> SelfMap:
        """Right local identities: x * e(x) = x."""
        return tuple(self._ldiv[x][x] for x in range(self.n))

    def f_map(self) -> SelfMap:
        """Left local identities: f(x) * x = x."""
        return tuple(self._rdiv[x][x] for x in range(self.n))

    def identity_element(self) -> int | None:
        n = self.n
        for j in range(n):
            if all(self.table[j][x] == x and self.table[x][j] == x for x in range(n)):
                return j
        return None

    def right_identity_element(self) -> int | None:
        n = self.n
        for i in range(n):
            if all(self.table[x][i] == x for x in range(n)):
                return i
        return None

    def is_loop(self) -> bool:
        return self.identity_element() is not None

    def is_associative(self) -> bool:
        t = self.table
        n = self.n
        return all(t[t[a][b]][c] == t[a][t[b][c]] for a in range(n) for b in range(n) for c in range(n))

    def is_commutative(self) -> bool:
        t = self.table
        n = self.n
        return all(t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n))


def from_group(G: FiniteGroup) -> Quasigroup:
    return Quasigroup(G.table)


def left_division(Q: Quasigroup, y: int, z: int) -> int:
    """y \\ z."""
    return Q.ldiv(y, z)


def right_division(Q: Quasigroup, z: int, y: int) -> int:
    """z / y."""
    return Q.rdiv(z, y)


@dataclass(frozen=True)
class LocalIdentityMaps:
    """e with x*e(x) = x and f with f(x)*x = x, as image tuples."""

    e: SelfMap
    f: SelfMap


def local_identities(Q: Quasigroup) -> LocalIdentityMaps:
    return LocalIdentityMaps(e=Q.e_map(), f=Q.f_map())


def is_subquasigroup(Q: Quasigroup, H) -> bool:
    """Closed under the operation and both divisions (empty sets do not count)."""
    hs = frozenset(H)
    if not hs or not all(0 <= x < Q.n for x in hs):
        return False
    for a in hs:
        for b in hs:
            if Q.table[a][b] not in hs or Q._ldiv[a][b] not in hs or Q._rdiv[a][b] not in hs:
                return False
    return True


def _closure(Q: Quasigroup, seed) -> tuple[int, ...]:
    sub = set(seed)
    changed = True
    while changed:
        changed = False
        for a in list(sub):
            for b in list(sub):
                for c in (Q.table[a][b], Q._ldiv[a][b], Q._rdiv[a][b]):
                    if c not in sub:
                        sub.add(c)
                        changed = True
    return tuple(sorted(sub))


def subquasigroups(Q: Quasigroup) -> list[tuple[int, ...]]:
    """All subquasigroups, grown from every seed of size at most 2."""
    found = set()
    for x in range(Q.n):
        found.add(_closure(Q, (x,)))
    for x, y in combinations(range(Q.n), 2):
        found.add(_closure(Q, (x, y)))
    return sorted(found, key=lambda h: (len(h), h))


def is_normal_subquasigroup(Q: Quasigroup, H, h: int) -> bool:
    """H is invariant under every inner permutation stabilising h."""
    if not is_subquasigroup(Q, H):
        raise HNotClosed(f"{sorted(H)} is not a subquasigroup")
    from .mapping_groups import inner_group_bruteforce

    hs = frozenset(H)
    inner = inner_group_bruteforce(Q, h)
    return all(frozenset(m[x] for x in hs) == hs for m in inner.elements)


def verify_theorem_2_3(spec, H) -> dict:
    """Normality transfer for constant-free linear and alinear forms.

    For a subquasigroup H containing 0, checks that (H,+) is a subgroup of
    the base group and that invariance of H under the inner mapping groups
    based at points of H is equivalent to normality of (H,+) in the group.

    The base points range over H, not all of Q: a congruence class is only
    stabilised from within.  The trivial class {0} of x + 2y over Z3 is
    moved by I_1 yet is normal on the group side, so quantifying over all
    of Q would falsify the transfer.
    """
    from .linear_forms import build
    from .mapping_groups import inner_group_bruteforce, multiplication_group

    if spec.kind not in ("linear", "alinear"):
        raise PreconditionFailed(f"kind must be linear or alinear, got {spec.kind}")
    if spec.c != 0:
        raise PreconditionFailed("the constant must be 0")
    H = tuple(sorted(set(H)))
    if 0 not in H:
        raise PreconditionFailed("H must contain 0")
    Q = build(spec)
    if not is_subquasigroup(Q, H):
        raise PreconditionFailed(f"{list(H)} is not a subquasigroup of the built quasigroup")

    G = spec.group
    hs = frozenset(H)
    subgroup_ok = all(G.add(a, b) in hs and G.neg(a) in hs for a in H for b in H)

    m_group = multiplication_group(Q)
    per_h = []
    for h in H:
        inner = inner_group_bruteforce(Q, h, m_group=m_group)
        per_h.append([h, all(frozenset(m[x] for x in hs) == hs for m in inner.elements)])
    quasigroup_normal = all(flag for _, flag in per_h)
    group_normal = is_normal_subgroup(G, H)

    witness = None
    if quasigroup_normal != group_normal:
        witness = {"per_h": per_h, "group_normal": group_normal}
    return {
        "check": "2.3",
        "subset": list(H),
        "h_plus_is_subgroup": subgroup_ok,
        "quasigroup_normal": quasigroup_normal,
        "quasigroup_normal_per_h": per_h,
        "group_normal": group_normal,
        "equivalence_holds": quasigroup_normal == group_normal,
        "passed": subgroup_ok and quasigroup_normal == group_normal,
        "witness": witness,
    }
