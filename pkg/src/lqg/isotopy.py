"""Isotopy triples, loop isotopes, and group isomorphism search."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import Perm, compose, identity, invert, is_permutation
from .errors import DimensionMismatch
from .groups import FiniteGroup, generating_sequence, _hom_from_generator_images, is_homomorphism, validate_group
from .quasigroups import Quasigroup


@dataclass(frozen=True)
class Isotopy:
    """Three bijections (alpha, beta, gamma) of one carrier set."""

    alpha: Perm
    beta: Perm
    gamma: Perm

    def __post_init__(self):
        for m in (self.alpha, self.beta, self.gamma):
            if not is_permutation(m):
                raise ValueError(f"isotopy component is not a permutation: {m}")
        if not (len(self.alpha) == len(self.beta) == len(self.gamma)):
            raise DimensionMismatch("isotopy components act on different point counts")

    @property
    def n(self) -> int:
        return len(self.alpha)


def identity_isotopy(n: int) -> Isotopy:
    e = identity(n)
    return Isotopy(e, e, e)


def isotopy_product(t1: Isotopy, t2: Isotopy) -> Isotopy:
    """The single isotopy equivalent to applying t1 and then t2.

    Componentwise this is compose(c1, c2): the second isotopy's component
    acts first inside the combined map.
    """
    return Isotopy(
        compose(t1.alpha, t2.alpha),
        compose(t1.beta, t2.beta),
        compose(t1.gamma, t2.gamma),
    )


def isotopy_inverse(t: Isotopy) -> Isotopy:
    return Isotopy(invert(t.alpha), invert(t.beta), invert(t.gamma))


def apply_isotopy(Q: Quasigroup, t: Isotopy) -> Quasigroup:
    """The quasigroup (Q,o) with gamma(x o y) = alpha(x) * beta(y)."""
    if t.n != Q.n:
        raise DimensionMismatch(f"isotopy on {t.n} points applied to order {Q.n}")
    gi = invert(t.gamma)
    a, b, tab = t.alpha, t.beta, Q.table
    return Quasigroup(tuple(tuple(gi[tab[a[x]][b[y]]] for y in range(Q.n)) for x in range(Q.n)))


def lp_isotope(Q: Quasigroup, a: int, b: int) -> Quasigroup:
    """The principal isotope x o y = (x / a) * (b \\ y); always a loop with identity b*a."""
    t = Isotopy(invert(Q.right_translation(a)), invert(Q.left_translation(b)), identity(Q.n))
    return apply_isotopy(Q, t)


def find_isomorphism(G1: FiniteGroup, G2: FiniteGroup) -> Perm | None:
    """Some bijection h with h(x +1 y) = h(x) +2 h(y), or None."""
    if G1.n != G2.n:
        raise DimensionMismatch("groups of different orders")
    n = G1.n
    if sorted(G1.element_order(x) for x in range(n)) != sorted(G2.element_order(x) for x in range(n)):
        return None
    gens, recipe = generating_sequence(G1)
    orders2 = [G2.element_order(x) for x in range(n)]
    candidates = [[y for y in range(n) if orders2[y] == G1.element_order(g)] for g in gens]
    for images in product(*candidates):
        m = _hom_from_generator_images(G1, G2, recipe, images)
        if len(set(m)) == n and is_homomorphism(G1, G2, m):
            return m
    return None


def verify_albert(spec) -> dict:
    """Loop isotopes of a linear-form quasigroup: loop with identity b*a,
    and, the base being a group, associative and isomorphic to it."""
    from .linear_forms import build

    Q = build(spec)
    n = Q.n
    failures = []
    for a in range(n):
        for b in range(n):
            loop = lp_isotope(Q, a, b)
            ident = loop.identity_element()
            if ident is None or ident != Q.mul(b, a):
                failures.append({"a": a, "b": b, "problem": "identity", "found": ident, "expected": Q.mul(b, a)})
                continue
            if not loop.is_associative():
                failures.append({"a": a, "b": b, "problem": "associativity"})
                continue
            iso = find_isomorphism(validate_group(loop.table), spec.group)
            if iso is None:
                failures.append({"a": a, "b": b, "problem": "isomorphism"})
    return {
        "check": "albert",
        "order": n,
        "instances": n * n,
        "failures": failures,
        "passed": not failures,
    }
