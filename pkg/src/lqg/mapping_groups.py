"""Multiplication groups and inner mapping groups, computed three ways:
stabilizer brute force, the general translation-word generators, and the
closed forms available for linear and alinear tables.

The closed-form T_x for the alinear case carries a sign fix relative to its
printed source: the right-translation constant must read
``-pbar^-1 fbar h - pbar^-1 c - x + h`` (first term negated), otherwise the
map does not fix h.  ``alinear_t_x_printed`` keeps the uncorrected reading
so the discrepancy stays checkable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import PermGroup, Perm, closure_generate, compose, invert
from .errors import KindMismatch
from .linear_forms import LinearSpec, build
from .quasigroups import Quasigroup


def multiplication_group(Q: Quasigroup) -> PermGroup:
    """Closure of all left and right translations."""
    gens = [Q.left_translation(a) for a in range(Q.n)]
    gens += [Q.right_translation(a) for a in range(Q.n)]
    return closure_generate(gens, n=Q.n)


def inner_group_bruteforce(Q: Quasigroup, h: int, m_group: PermGroup | None = None) -> PermGroup:
    """The stabilizer of h inside the multiplication group."""
    if m_group is None:
        m_group = multiplication_group(Q)
    elems = tuple(m for m in m_group.elements if m[h] == h)
    return PermGroup(Q.n, elems, elems)


@dataclass(frozen=True)
class InnerGeneratorSet:
    """Translation-word generators of the inner mapping group at h."""

    h: int
    r_family: tuple[tuple[tuple[int, int], Perm], ...]
    l_family: tuple[tuple[tuple[int, int], Perm], ...]
    t_family: tuple[tuple[int, Perm], ...]
    sigma: Perm

    def all_generators(self) -> tuple[Perm, ...]:
        gens = [p for _, p in self.r_family]
        gens += [p for _, p in self.l_family]
        gens += [p for _, p in self.t_family]
        gens.append(self.sigma)
        return tuple(dict.fromkeys(gens))


def inner_generators(Q: Quasigroup, h: int) -> InnerGeneratorSet:
    """R_{x,y}, L_{x,y}, T_x and sigma for the stabilizer of h.

    Uses the derived operations x@y = L_h^-1(hx * y) and x#y = R_h^-1(x * yh);
    every produced permutation fixes h by construction, which is asserted.
    """
    n = Q.n
    L = [Q.left_translation(a) for a in range(n)]
    R = [Q.right_translation(a) for a in range(n)]
    Linv = [invert(p) for p in L]
    Rinv = [invert(p) for p in R]
    sigma = compose(Rinv[h], L[h])

    r_family = []
    l_family = []
    for x in range(n):
        hx = Q.table[h][x]
        xh = Q.table[x][h]
        for y in range(n):
            bullet = Linv[h][Q.table[hx][y]]          # x@y = h \ (hx * y)
            r = compose(Rinv[bullet], compose(R[y], R[x]))
            circ = Rinv[h][Q.table[x][Q.table[y][h]]]  # x#y = (x * yh) / h
            l = compose(Linv[circ], compose(L[x], L[y]))
            assert r[h] == h and l[h] == h
            r_family.append(((x, y), r))
            l_family.append(((x, y), l))
    t_family = []
    for x in range(n):
        t = compose(Linv[sigma[x]], R[x])
        assert t[h] == h
        t_family.append((x, t))
    return InnerGeneratorSet(
        h=h,
        r_family=tuple(r_family),
        l_family=tuple(l_family),
        t_family=tuple(t_family),
        sigma=sigma,
    )


def inner_group_from_generators(Q: Quasigroup, h: int) -> PermGroup:
    return closure_generate(inner_generators(Q, h).all_generators(), n=Q.n)


# --- closed forms -------------------------------------------------------------

def linear_inner_generator_set(spec: LinearSpec, h: int):
    """R_{e_h}, L_{f_h} and the T_x family for a linear table, as image arrays."""
    if spec.kind != "linear":
        raise KindMismatch(f"expected kind linear, got {spec.kind}")
    G, phi, c, psi = spec.group, spec.left, spec.c, spec.right
    n = G.n
    psi_inv = invert(psi)
    sig = compose(psi_inv, phi)

    r_eh = tuple(G.add(phi[t], G.add(G.neg(phi[h]), h)) for t in range(n))
    l_fh = tuple(G.add(G.add(h, G.neg(psi[h])), psi[t]) for t in range(n))
    t_family = []
    for x in range(n):
        b = G.add(psi_inv[c], x)
        a = G.add(G.add(h, G.neg(b)), G.neg(sig[h]))
        t_family.append(tuple(G.add(a, G.add(sig[t], b)) for t in range(n)))
    return r_eh, l_fh, tuple(t_family)


def inner_group_linear_closed_form(spec: LinearSpec, h: int) -> PermGroup:
    r_eh, l_fh, t_family = linear_inner_generator_set(spec, h)
    return closure_generate([r_eh, l_fh, *t_family], n=spec.n)


def alinear_inner_generator_set(spec: LinearSpec, h: int):
    """The R_{x,h}, L_{h,x} and T_x families for an alinear table."""
    if spec.kind != "alinear":
        raise KindMismatch(f"expected kind alinear, got {spec.kind}")
    G = spec.group
    Q = build(spec)
    n = G.n
    pb_inv = invert(spec.right)
    sig = compose(pb_inv, spec.left)
    u = pb_inv[spec.c]

    r_family = []
    l_family = []
    for x in range(n):
        hx = Q.table[h][x]
        rx = Q.right_translation(x)
        r_family.append(tuple(G.add(G.add(h, G.neg(hx)), rx[t]) for t in range(n)))
        xh = Q.table[x][h]
        lx = Q.left_translation(x)
        l_family.append(tuple(G.add(lx[t], G.add(G.neg(xh), h)) for t in range(n)))
    t_family = []
    for x in range(n):
        lconst = G.add(x, u)
        rconst = G.add_many(G.neg(sig[h]), G.neg(u), G.neg(x), h)
        t_family.append(tuple(G.add(lconst, G.add(sig[t], rconst)) for t in range(n)))
    return tuple(r_family), tuple(l_family), tuple(t_family)


def alinear_t_x_printed(spec: LinearSpec, h: int, x: int) -> Perm:
    """The uncorrected T_x reading, with +sig(h) in the right constant."""
    G = spec.group
    pb_inv = invert(spec.right)
    sig = compose(pb_inv, spec.left)
    u = pb_inv[spec.c]
    lconst = G.add(x, u)
    rconst = G.add_many(sig[h], G.neg(u), G.neg(x), h)
    return tuple(G.add(lconst, G.add(sig[t], rconst)) for t in range(G.n))


def inner_group_alinear_closed_form(spec: LinearSpec, h: int) -> PermGroup:
    r_family, l_family, t_family = alinear_inner_generator_set(spec, h)
    return closure_generate([*r_family, *l_family, *t_family], n=spec.n)


# --- agreement reports ---------------------------------------------------------

def triple_agreement_report(spec: LinearSpec, h: int) -> dict:
    """Stabilizer brute force vs generator closure vs the kind's closed form."""
    Q = build(spec)
    brute = inner_group_bruteforce(Q, h)
    general = inner_group_from_generators(Q, h)
    if spec.kind == "linear":
        closed = inner_group_linear_closed_form(spec, h)
        extras = _linear_extras(spec, h, closed)
    elif spec.kind == "alinear":
        closed = inner_group_alinear_closed_form(spec, h)
        extras = _alinear_extras(spec, h)
    else:
        raise KindMismatch(f"no closed form for kind {spec.kind}")
    report = {
        "check": "2.1" if spec.kind == "linear" else "2.2",
        "h": h,
        "order_bruteforce": brute.order,
        "order_generators": general.order,
        "order_closed_form": closed.order,
        "brute_equals_generators": brute.same_elements(general),
        "brute_equals_closed_form": brute.same_elements(closed),
        "passed": brute.same_elements(general) and brute.same_elements(closed),
    }
    report.update(extras)
    return report


def _linear_extras(spec: LinearSpec, h: int, closed: PermGroup) -> dict:
    # R_{x,y} must be independent of (x, y) and equal the closed-form R_{e_h}
    Q = build(spec)
    gens = inner_generators(Q, h)
    r_eh, _, _ = linear_inner_generator_set(spec, h)
    constant = all(p == r_eh for _, p in gens.r_family)
    return {"r_xy_constant": constant}


def _alinear_extras(spec: LinearSpec, h: int) -> dict:
    # the general (x,y)-indexed families may not collapse; record whether the
    # h-restricted families already generate the stabilizer
    Q = build(spec)
    restricted = inner_group_alinear_closed_form(spec, h)
    brute = inner_group_bruteforce(Q, h)
    return {"restricted_family_sufficient": restricted.same_elements(brute)}


def verify_inner_triple_agreement_all_h(spec: LinearSpec) -> dict:
    """Triple agreement at every h, sharing the multiplication group across h."""
    Q = build(spec)
    m_group = multiplication_group(Q)
    closed_form = inner_group_linear_closed_form if spec.kind == "linear" else inner_group_alinear_closed_form
    failures = []
    for h in range(Q.n):
        brute = inner_group_bruteforce(Q, h, m_group=m_group)
        if not brute.same_elements(inner_group_from_generators(Q, h)):
            failures.append({"h": h, "stage": "generators"})
            continue
        if not brute.same_elements(closed_form(spec, h)):
            failures.append({"h": h, "stage": "closed-form"})
            continue
        if m_group.order != len({m[h] for m in m_group.elements}) * brute.order:
            failures.append({"h": h, "stage": "orbit-stabilizer"})
    return {
        "check": "2.1" if spec.kind == "linear" else "2.2",
        "multiplication_group_order": m_group.order,
        "failures": failures,
        "passed": not failures,
    }


def orbit_of(Q: Quasigroup, h: int, m_group: PermGroup | None = None) -> tuple[int, ...]:
    if m_group is None:
        m_group = multiplication_group(Q)
    return tuple(sorted({m[h] for m in m_group.elements}))
