"""The five inverse operations of a quasigroup and the predicted forms they
take when the original is linear or alinear over a group.

Composite parastrophes are computed by sequential table manipulation; the
closed-form predictions are derived independently from the witness maps and
then compared pointwise, so prediction and mechanism stay decoupled.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Perm, compose, invert
from .errors import PredictionFailed
from .groups import FiniteGroup, is_antiautomorphism, is_automorphism
from .linear_forms import LinearSpec, build, is_t_quasigroup, recognize
from .quasigroups import Quasigroup

TAGS = ("a", "a-rinv", "a-linv", "a-linv-rinv", "a-rinv-linv", "a-star")


def parastrophe(Q: Quasigroup, tag: str) -> Quasigroup:
    """One of the six parastrophes; composite tags apply left-to-right."""
    n = Q.n
    if tag == "a":
        return Q
    if tag == "a-rinv":
        # B(x,z) = y iff x*y = z
        return Quasigroup(tuple(tuple(Q._ldiv[x][z] for z in range(n)) for x in range(n)))
    if tag == "a-linv":
        # B(z,y) = x iff x*y = z
        return Quasigroup(tuple(tuple(Q._rdiv[z][y] for y in range(n)) for z in range(n)))
    if tag == "a-rinv-linv":
        return parastrophe(parastrophe(Q, "a-rinv"), "a-linv")
    if tag == "a-linv-rinv":
        return parastrophe(parastrophe(Q, "a-linv"), "a-rinv")
    if tag == "a-star":
        return Quasigroup(tuple(tuple(Q.table[y][x] for y in range(n)) for x in range(n)))
    raise ValueError(f"unknown parastrophe tag {tag!r}; known: {', '.join(TAGS)}")


@dataclass(frozen=True)
class PredictedForm:
    """A displayed sum shape: left(first) + c + right(second), or with the
    argument roles swapped when ``transposed`` is set."""

    tag: str
    left: Perm
    c: int
    right: Perm
    transposed: bool
    left_class: str
    right_class: str
    kind: str  # recognition kind, applied to the transpose when transposed

    def table_on(self, G: FiniteGroup):
        n = G.n
        t = G.table
        if self.transposed:
            return tuple(tuple(t[t[self.left[y]][self.c]][self.right[x]] for y in range(n)) for x in range(n))
        return tuple(tuple(t[t[self.left[x]][self.c]][self.right[y]] for y in range(n)) for x in range(n))


def _sandwich(G: FiniteGroup, u: int, m) -> Perm:
    """x -> -u + m(x) + u."""
    nu = G.neg(u)
    return tuple(G.add(G.add(nu, m[x]), u) for x in range(G.n))


def _negate(G: FiniteGroup, m) -> Perm:
    return compose(G.inverse, m)


def predicted_parastrophe_forms(spec: LinearSpec) -> dict[str, PredictedForm]:
    """Closed forms of all five parastrophes of a linear or alinear table."""
    if spec.kind == "linear":
        return _linear_forms(spec)
    if spec.kind == "alinear":
        return _alinear_forms(spec)
    raise PredictionFailed("*", f"no parastrophe predictions for kind {spec.kind}")


def _linear_forms(spec: LinearSpec) -> dict[str, PredictedForm]:
    G, phi, c, psi = spec.group, spec.left, spec.c, spec.right
    phi_inv, psi_inv = invert(phi), invert(psi)

    u1 = psi_inv[c]
    phi1 = _sandwich(G, u1, _negate(G, compose(psi_inv, phi)))   # antiautomorphism
    c1 = G.neg(u1)
    psi1 = psi_inv

    u2 = phi_inv[c]
    phi2 = phi_inv
    c2 = G.neg(u2)
    psi2 = _sandwich(G, G.neg(u2), _negate(G, compose(phi_inv, psi)))  # antiautomorphism

    phi1_inv = invert(phi1)
    v = phi1_inv[c1]
    phi3 = _sandwich(G, v, _negate(G, compose(phi1_inv, psi1)))  # automorphism
    c3 = G.neg(v)
    psi3 = phi1_inv

    psi2_inv = invert(psi2)
    w = psi2_inv[c2]
    phi4 = psi2_inv
    c4 = G.neg(w)
    psi4 = _sandwich(G, G.neg(w), _negate(G, compose(psi2_inv, phi2)))  # automorphism

    return {
        "a-rinv": PredictedForm("a-rinv", phi1, c1, psi1, False, "anti", "aut", "mixed_second"),
        "a-linv": PredictedForm("a-linv", phi2, c2, psi2, False, "aut", "anti", "mixed_first"),
        "a-rinv-linv": PredictedForm("a-rinv-linv", phi3, c3, psi3, True, "aut", "anti", "mixed_first"),
        "a-linv-rinv": PredictedForm("a-linv-rinv", phi4, c4, psi4, True, "anti", "aut", "mixed_second"),
        "a-star": PredictedForm("a-star", phi, c, psi, True, "aut", "aut", "linear"),
    }


def _alinear_forms(spec: LinearSpec) -> dict[str, PredictedForm]:
    G, fb, c, pb = spec.group, spec.left, spec.c, spec.right
    fb_inv, pb_inv = invert(fb), invert(pb)

    u1 = pb_inv[c]
    psi1 = pb_inv                                                  # anti
    c1 = G.neg(u1)
    phi1 = _sandwich(G, G.neg(u1), _negate(G, compose(pb_inv, fb)))  # anti

    u2 = fb_inv[c]
    psi2 = _sandwich(G, u2, _negate(G, compose(fb_inv, pb)))       # anti
    c2 = G.neg(u2)
    phi2 = fb_inv                                                  # anti

    phi1_inv = invert(phi1)
    v = phi1_inv[c1]
    phi3 = phi1_inv                                                # anti
    c3 = G.neg(v)
    psi3 = _sandwich(G, G.neg(v), _negate(G, compose(phi1_inv, psi1)))  # anti

    psi2_inv = invert(psi2)
    w = psi2_inv[c2]
    phi4 = _sandwich(G, w, _negate(G, compose(psi2_inv, phi2)))    # anti
    c4 = G.neg(w)
    psi4 = psi2_inv                                                # anti

    return {
        "a-rinv": PredictedForm("a-rinv", psi1, c1, phi1, True, "anti", "anti", "alinear"),
        "a-linv": PredictedForm("a-linv", psi2, c2, phi2, True, "anti", "anti", "alinear"),
        "a-rinv-linv": PredictedForm("a-rinv-linv", phi3, c3, psi3, False, "anti", "anti", "alinear"),
        "a-linv-rinv": PredictedForm("a-linv-rinv", phi4, c4, psi4, False, "anti", "anti", "alinear"),
        "a-star": PredictedForm("a-star", fb, c, pb, True, "anti", "anti", "alinear"),
    }


def _check_class(G: FiniteGroup, m, cls: str) -> bool:
    return is_automorphism(G, m) if cls == "aut" else is_antiautomorphism(G, m)


def _classify(spec: LinearSpec) -> dict:
    G = spec.group
    Q = build(spec)
    forms = predicted_parastrophe_forms(spec)
    per_tag = {}
    for tag, form in forms.items():
        P = parastrophe(Q, tag)
        predicted = form.table_on(G)
        if predicted != P.table:
            bad = next(
                (x, y) for x in range(G.n) for y in range(G.n) if predicted[x][y] != P.table[x][y]
            )
            raise PredictionFailed(tag, f"closed form disagrees with the computed table at cell {bad}")
        if not _check_class(G, form.left, form.left_class):
            raise PredictionFailed(tag, f"left component is not an {form.left_class}")
        if not _check_class(G, form.right, form.right_class):
            raise PredictionFailed(tag, f"right component is not an {form.right_class}")
        star = parastrophe(P, "a-star")
        displayed_target = star if form.transposed else P
        other_target = P if form.transposed else star
        displayed_ok = bool(recognize(displayed_target, G, form.kind))
        other_ok = bool(recognize(other_target, G, form.kind))
        if not displayed_ok:
            raise PredictionFailed(tag, f"not recognized as {form.kind} under the displayed reading")
        per_tag[tag] = {
            "kind": form.kind,
            "displayed_reading": "transposed" if form.transposed else "direct",
            "recognized_displayed": displayed_ok,
            "recognized_other_reading": other_ok,
            "matched_reading": "both" if other_ok else ("transposed" if form.transposed else "direct"),
        }
    return {
        "check": "p2.1" if spec.kind == "linear" else "p2.2",
        "kind": spec.kind,
        "tags": per_tag,
        "passed": True,
    }


def classify_parastrophes_linear(spec: LinearSpec) -> dict:
    """Verify the predicted mixed/linear shapes of the five parastrophes."""
    if spec.kind != "linear":
        raise PredictionFailed("*", f"expected a linear form, got {spec.kind}")
    return _classify(spec)


def classify_parastrophes_alinear(spec: LinearSpec) -> dict:
    """Verify that all five parastrophes stay alinear over the same group."""
    if spec.kind != "alinear":
        raise PredictionFailed("*", f"expected an alinear form, got {spec.kind}")
    return _classify(spec)


def verify_t_parastrophe_closure(Q: Quasigroup) -> dict:
    """T-quasigroups are closed under all parastrophes."""
    ok, _ = is_t_quasigroup(Q)
    if not ok:
        from .errors import PreconditionFailed

        raise PreconditionFailed("the table is not a T-quasigroup")
    results = {}
    for tag in TAGS[1:]:
        flag, _ = is_t_quasigroup(parastrophe(Q, tag))
        results[tag] = flag
    return {
        "check": "t-parastrophe-closure",
        "tags": results,
        "passed": all(results.values()),
    }
