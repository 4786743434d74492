import random

import pytest

from lqg.core import identity
from lqg.errors import KindMismatch
from lqg.groups import antiautomorphisms, automorphisms, catalog_group, inner_automorphisms
from lqg.latin import random_quasigroup
from lqg.linear_forms import LinearSpec, build
from lqg.mapping_groups import (
    alinear_t_x_printed,
    alinear_inner_generator_set,
    inner_generators,
    inner_group_alinear_closed_form,
    inner_group_bruteforce,
    inner_group_from_generators,
    inner_group_linear_closed_form,
    linear_inner_generator_set,
    multiplication_group,
    orbit_of,
    triple_agreement_report,
    verify_inner_triple_agreement_all_h,
)
from lqg.quasigroups import from_group


def q5_spec():
    G = catalog_group("z5")
    auts = automorphisms(G)
    return LinearSpec("linear", G, auts[1], 0, auts[2])


def test_multiplication_group_orders():
    assert multiplication_group(from_group(catalog_group("z5"))).order == 5
    assert multiplication_group(from_group(catalog_group("s3"))).order == 36
    assert multiplication_group(build(q5_spec())).order == 20


def test_inner_group_abelian_trivial():
    Q = from_group(catalog_group("z6"))
    for h in range(6):
        assert inner_group_bruteforce(Q, h).order == 1


def test_inner_group_s3_is_inner_automorphisms():
    Q = from_group(catalog_group("s3"))
    stab = inner_group_bruteforce(Q, 0)
    assert stab.order == 6
    assert set(stab.elements) == set(inner_automorphisms(catalog_group("s3")).elements)


def test_inner_group_q5():
    Q = build(q5_spec())
    m = multiplication_group(Q)
    stab = inner_group_bruteforce(Q, 0, m_group=m)
    assert stab.order == 4
    assert m.order == len(orbit_of(Q, 0, m)) * stab.order


def test_inner_generators_fix_h_and_generate_stabilizer():
    rng = random.Random(51)
    tables = [build(q5_spec()), from_group(catalog_group("s3"))]
    tables += [random_quasigroup(rng.randint(2, 5), rng) for _ in range(10)]
    for Q in tables:
        m = multiplication_group(Q)
        for h in range(Q.n):
            gens = inner_generators(Q, h)
            assert gens.sigma[h] == h
            closure = inner_group_from_generators(Q, h)
            assert closure.same_elements(inner_group_bruteforce(Q, h, m_group=m))


def test_linear_closed_form_q5():
    spec = q5_spec()
    r_eh, l_fh, t_family = linear_inner_generator_set(spec, 0)
    assert r_eh == tuple(2 * x % 5 for x in range(5))
    assert l_fh == tuple(3 * x % 5 for x in range(5))
    assert t_family[0] == tuple(4 * x % 5 for x in range(5))
    group = inner_group_linear_closed_form(spec, 0)
    assert group.order == 4


def test_closed_form_r_eh_is_translation_by_local_identity():
    # R_{e_h} really is the table's right translation at h's right local identity
    spec = q5_spec()
    Q = build(spec)
    for h in range(5):
        e_h = Q.e_map()[h]
        r_eh, l_fh, _ = linear_inner_generator_set(spec, h)
        assert r_eh == Q.right_translation(e_h)
        f_h = Q.f_map()[h]
        assert l_fh == Q.left_translation(f_h)


def test_linear_closed_form_s3_conjugations():
    G = catalog_group("s3")
    spec = LinearSpec("linear", G, identity(6), 0, identity(6))
    group = inner_group_linear_closed_form(spec, 0)
    assert group.order == 6
    assert set(group.elements) == set(inner_automorphisms(G).elements)


def test_triple_agreement_reports():
    spec = q5_spec()
    for h in range(5):
        assert triple_agreement_report(spec, h)["passed"]
    report = triple_agreement_report(spec, 0)
    assert report["r_xy_constant"]


def test_triple_agreement_all_h_helper():
    spec = q5_spec()
    assert verify_inner_triple_agreement_all_h(spec)["passed"]
    G = catalog_group("s3")
    neg = tuple(G.inverse)
    aspec = LinearSpec("alinear", G, neg, 2, neg)
    report = verify_inner_triple_agreement_all_h(aspec)
    assert report["passed"]


def test_alinear_closed_form_abelian_collapses_to_linear():
    G = catalog_group("z5")
    auts = automorphisms(G)
    lin = LinearSpec("linear", G, auts[1], 1, auts[2])
    alin = LinearSpec("alinear", G, auts[1], 1, auts[2])
    for h in range(5):
        a = inner_group_linear_closed_form(lin, h)
        b = inner_group_alinear_closed_form(alin, h)
        assert a.same_elements(b)


def test_alinear_generators_fix_h():
    G = catalog_group("d4")
    antis = antiautomorphisms(G)
    spec = LinearSpec("alinear", G, antis[1], 3, antis[5])
    for h in range(8):
        r_family, l_family, t_family = alinear_inner_generator_set(spec, h)
        for fam in (r_family, l_family, t_family):
            for p in fam:
                assert p[h] == h


def test_alinear_printed_t_x_misses_h():
    # the uncorrected right-translation constant moves h for some instances,
    # so it cannot generate a stabilizer; the corrected reading always fixes h
    G = catalog_group("s3")
    neg = tuple(G.inverse)
    spec = LinearSpec("alinear", G, neg, 2, neg)
    moved = 0
    for h in range(6):
        for x in range(6):
            if alinear_t_x_printed(spec, h, x)[h] != h:
                moved += 1
    assert moved > 0
    # at h = 0 the two readings coincide
    for x in range(6):
        assert alinear_t_x_printed(spec, 0, x)[0] == 0


def test_kind_mismatch_errors():
    spec = q5_spec()
    with pytest.raises(KindMismatch):
        inner_group_alinear_closed_form(spec, 0)
    G = catalog_group("s3")
    neg = tuple(G.inverse)
    aspec = LinearSpec("alinear", G, neg, 0, neg)
    with pytest.raises(KindMismatch):
        inner_group_linear_closed_form(aspec, 0)


def test_orbit_stabilizer_identity():
    rng = random.Random(52)
    for _ in range(15):
        Q = random_quasigroup(rng.randint(2, 5), rng)
        m = multiplication_group(Q)
        for h in range(Q.n):
            stab = inner_group_bruteforce(Q, h, m_group=m)
            assert m.order == len(orbit_of(Q, h, m)) * stab.order


def test_inner_normal_in_multiplication_forces_abelian_group():
    # contrapositive corpus check: if the table is not an abelian group table,
    # some stabilizer fails normality (or the stabilizer is not normal at all h)
    rng = random.Random(53)
    tables = [build(q5_spec()), from_group(catalog_group("s3"))]
    tables += [random_quasigroup(rng.randint(3, 5), rng) for _ in range(15)]
    for Q in tables:
        abelian_group_table = Q.is_associative() and Q.is_commutative() and Q.is_loop()
        m = multiplication_group(Q)
        for h in range(Q.n):
            stab = inner_group_bruteforce(Q, h, m_group=m)
            if stab.is_normal_in(m):
                assert abelian_group_table
