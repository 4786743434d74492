import random
from itertools import permutations

import pytest

from lqg.core import compose, identity, invert
from lqg.errors import MorphismViolation, PreconditionFailed
from lqg.groups import antiautomorphisms, automorphisms, catalog_group
from lqg.latin import random_quasigroup
from lqg.linear_forms import (
    KINDS,
    LinearSpec,
    absorb_constant,
    all_specs,
    antiquasiautomorphism_check,
    bruck_toyoda_check,
    build,
    derived_group,
    is_medial,
    is_t_quasigroup,
    quasiautomorphism_check,
    quasiautomorphism_decompose,
    recognize,
    verify_lemma_2_1,
    verify_prop_2_3,
    verify_prop_2_4,
)
from lqg.quasigroups import from_group


def q5_spec():
    G = catalog_group("z5")
    auts = automorphisms(G)
    return LinearSpec("linear", G, auts[1], 0, auts[2])


def q5():
    return build(q5_spec())


def test_build_q5_table():
    expected = tuple(tuple((2 * x + 3 * y) % 5 for y in range(5)) for x in range(5))
    assert q5().table == expected


def test_build_identity_maps_gives_groupic_table():
    for name in ("z4", "s3", "q8"):
        G = catalog_group(name)
        spec = LinearSpec("linear", G, identity(G.n), 0, identity(G.n))
        assert build(spec).table == G.table


def test_build_equals_group_iff_trivial_parameters():
    G = catalog_group("z5")
    for spec in all_specs(G, "linear"):
        trivial = spec.left == identity(5) and spec.right == identity(5) and spec.c == 0
        assert (build(spec).table == G.table) == trivial


def test_build_rejects_morphism_violation():
    G = catalog_group("z5")
    with pytest.raises(MorphismViolation):
        LinearSpec("linear", G, (1, 0, 2, 3, 4), 0, identity(5))
    with pytest.raises(MorphismViolation):
        LinearSpec("linear", G, identity(5), 7, identity(5))
    with pytest.raises(MorphismViolation):
        LinearSpec("bogus", G, identity(5), 0, identity(5))


def test_alinear_build_over_s3_is_latin_non_associative():
    G = catalog_group("s3")
    neg = tuple(G.inverse)
    Q = build(LinearSpec("alinear", G, neg, 0, neg))
    assert not Q.is_associative()


def test_recognize_q5_unique_linear_witness():
    G = catalog_group("z5")
    wits = recognize(q5(), G, "linear")
    assert len(wits) == 1 and wits[0].canonical
    spec = wits[0].spec
    auts = automorphisms(G)
    assert (spec.left, spec.c, spec.right) == (auts[1], 0, auts[2])


def test_recognize_group_table_contains_identity_witness():
    for name in ("z6", "s3", "d4"):
        G = catalog_group(name)
        wits = recognize(from_group(G), G, "linear")
        assert any(w.spec.left == identity(G.n) and w.spec.c == 0 and w.spec.right == identity(G.n) for w in wits)


def test_recognize_abelian_alinear_equals_linear():
    G = catalog_group("z5")
    lin = recognize(q5(), G, "linear")
    alin = recognize(q5(), G, "alinear")
    assert [(w.spec.left, w.spec.c, w.spec.right) for w in lin] == [
        (w.spec.left, w.spec.c, w.spec.right) for w in alin
    ]


def test_build_recognize_round_trip_all_kinds():
    rng = random.Random(12)
    for name in ("z4", "z5", "z2xz2", "s3"):
        G = catalog_group(name)
        n = G.n
        auts, antis = automorphisms(G), antiautomorphisms(G)
        pools = {"aut": auts, "anti": antis}
        for kind in KINDS:
            from lqg.linear_forms import KIND_CONSTRAINTS

            lcls, rcls = KIND_CONSTRAINTS[kind]
            for _ in range(4):
                left = rng.choice(pools[lcls]) if lcls != "perm" else tuple(rng.sample(range(n), n))
                right = rng.choice(pools[rcls]) if rcls != "perm" else tuple(rng.sample(range(n), n))
                c = rng.randrange(n)
                spec = LinearSpec(kind, G, left, c, right)
                wits = recognize(build(spec), G, kind)
                assert any(
                    (w.spec.left, w.spec.c, w.spec.right) == (left, c, right) for w in wits
                ), (name, kind)


def test_one_sided_recognition_witness_counts():
    # with a free side the constant floats, giving exactly n gauge copies
    G = catalog_group("z5")
    spec = LinearSpec("left_linear", G, automorphisms(G)[1], 2, (1, 0, 3, 2, 4))
    wits = recognize(build(spec), G, "left_linear")
    assert len(wits) == 5


def test_absorb_constant_equivalence():
    rng = random.Random(13)
    for name in ("z5", "s3"):
        G = catalog_group(name)
        n = G.n
        for kind in ("left_linear", "right_linear", "left_alinear", "right_alinear"):
            from lqg.linear_forms import KIND_CONSTRAINTS

            lcls, rcls = KIND_CONSTRAINTS[kind]
            pools = {"aut": automorphisms(G), "anti": antiautomorphisms(G)}
            left = rng.choice(pools[lcls]) if lcls != "perm" else tuple(rng.sample(range(n), n))
            right = rng.choice(pools[rcls]) if rcls != "perm" else tuple(rng.sample(range(n), n))
            spec = LinearSpec(kind, G, left, 3 % n, right)
            absorbed = absorb_constant(spec)
            assert absorbed.c == 0
            assert build(absorbed).table == build(spec).table
    with pytest.raises(PreconditionFailed):
        absorb_constant(q5_spec())


def test_is_medial():
    assert is_medial(from_group(catalog_group("z6")))
    assert is_medial(q5())
    assert not is_medial(from_group(catalog_group("s3")))


def test_medial_iff_commuting_t_witness():
    # mediality of left(x) + c + right(y) over an abelian group should match
    # commutation of the witness maps
    G = catalog_group("z2xz2")
    for spec in all_specs(G, "linear"):
        Q = build(spec)
        assert is_medial(Q) == (compose(spec.left, spec.right) == compose(spec.right, spec.left))


def test_is_t_quasigroup():
    assert is_t_quasigroup(q5())[0]
    assert not is_t_quasigroup(from_group(catalog_group("s3")))[0]


def test_is_t_quasigroup_matches_relabelling_scan_order_4():
    # oracle: scan every abelian catalog group of order 4 under every relabelling
    rng = random.Random(14)
    abelian4 = [catalog_group("z4"), catalog_group("z2xz2")]

    def oracle(Q):
        for G in abelian4:
            for sigma in permutations(range(4)):
                inv = invert(sigma)
                relabelled = tuple(
                    tuple(sigma[G.table[inv[x]][inv[y]]] for y in range(4)) for x in range(4)
                )
                from lqg.groups import validate_group

                H = validate_group(relabelled)
                if recognize(Q, H, "linear"):
                    return True
        return False

    tables = [random_quasigroup(4, rng) for _ in range(25)]
    tables += [build(s) for s in list(all_specs(catalog_group("z4"), "linear"))[:8]]
    for Q in tables:
        assert is_t_quasigroup(Q)[0] == oracle(Q)


def test_derived_group_recovers_base_presentation():
    spec = q5_spec()
    G = derived_group(build(spec))
    assert G is not None and G.table == spec.group.table


def test_bruck_toyoda_q5():
    report = bruck_toyoda_check(q5())
    assert report["passed"] and report["medial"]
    assert report["left"] == [0, 2, 4, 1, 3]
    assert report["right"] == [0, 3, 1, 4, 2]
    assert report["maps_commute"]


def test_bruck_toyoda_klein_group_table():
    report = bruck_toyoda_check(from_group(catalog_group("z2xz2")))
    assert report["passed"]
    assert report["left"] == [0, 1, 2, 3] and report["c"] == 0


def test_bruck_toyoda_not_applicable():
    rng = random.Random(15)
    while True:
        Q = random_quasigroup(5, rng)
        if not is_medial(Q):
            break
    report = bruck_toyoda_check(Q)
    assert not report["applicable"] and report["passed"]


def test_quasiautomorphism_translations_and_affine():
    G = catalog_group("z5")
    for s in range(5):
        assert quasiautomorphism_check(G, G.rtrans(s))
    p = tuple((2 * x + 4) % 5 for x in range(5))
    s, p0 = quasiautomorphism_decompose(G, p)
    assert s == 4 and p0 == tuple(2 * x % 5 for x in range(5))


def test_quasiautomorphisms_of_z4_are_exactly_eight():
    G = catalog_group("z4")
    found = [p for p in permutations(range(4)) if quasiautomorphism_check(G, p)]
    expected = sorted(
        {tuple(G.add(a[x], s) for x in range(4)) for a in automorphisms(G) for s in range(4)}
    )
    assert sorted(found) == expected
    assert len(found) == 8
    assert not quasiautomorphism_check(G, (1, 0, 2, 3))


def test_antiquasiautomorphism_check_s3():
    G = catalog_group("s3")
    neg = tuple(G.inverse)
    assert antiquasiautomorphism_check(G, neg)
    assert antiquasiautomorphism_check(G, tuple(G.add(neg[x], 3) for x in range(6)))
    assert not antiquasiautomorphism_check(G, identity(6))


def test_right_linearity_iff_quasiautomorphism_cor_2_1():
    # left-linear tables: the free right map is a quasiautomorphism exactly
    # when the table is also right linear over the same group
    rng = random.Random(16)
    for name in ("z5", "z2xz2"):
        G = catalog_group(name)
        n = G.n
        auts = automorphisms(G)
        for _ in range(60):
            spec = LinearSpec(
                "left_linear", G, rng.choice(auts), rng.randrange(n), tuple(rng.sample(range(n), n))
            )
            Q = build(spec)
            right_linear = bool(recognize(Q, G, "right_linear"))
            assert right_linear == quasiautomorphism_check(G, spec.right)


def test_left_linearity_iff_quasiautomorphism_mirror():
    rng = random.Random(61)
    G = catalog_group("z5")
    auts = automorphisms(G)
    for _ in range(40):
        spec = LinearSpec(
            "right_linear", G, tuple(rng.sample(range(5), 5)), rng.randrange(5), rng.choice(auts)
        )
        Q = build(spec)
        assert bool(recognize(Q, G, "left_linear")) == quasiautomorphism_check(G, spec.left)


def test_alinearity_iff_antiquasiautomorphism_cor_2_2():
    rng = random.Random(62)
    for name in ("z5", "s3"):
        G = catalog_group(name)
        n = G.n
        antis = antiautomorphisms(G)
        for _ in range(40):
            spec = LinearSpec(
                "left_alinear", G, rng.choice(antis), rng.randrange(n), tuple(rng.sample(range(n), n))
            )
            Q = build(spec)
            assert bool(recognize(Q, G, "right_alinear")) == antiquasiautomorphism_check(G, spec.right)


def test_verify_prop_2_3_linear_and_alinear():
    G = catalog_group("z5")
    assert verify_prop_2_3(q5(), G, G)["passed"]
    s3 = catalog_group("s3")
    neg = tuple(s3.inverse)
    Q = build(LinearSpec("alinear", s3, neg, 0, neg))
    assert verify_prop_2_3(Q, s3, s3, alinear=True)["passed"]
    assert verify_prop_2_3(from_group(G), G, G)["passed"]
    with pytest.raises(PreconditionFailed):
        verify_prop_2_3(from_group(s3), s3, s3, alinear=True)


def test_verify_prop_2_4():
    report = verify_prop_2_4(q5())
    assert report["passed"] and report["two_sided_t_quasigroup"]
    with pytest.raises(PreconditionFailed):
        verify_prop_2_4(from_group(catalog_group("s3")))


def test_verify_prop_2_4_one_sided_only_counterexample():
    # x + beta(y) with beta a bare permutation meets both left hypotheses over
    # Z5 yet is not two-sided linear over anything; only the abelian-base
    # conclusion survives
    G = catalog_group("z5")
    beta = (1, 0, 2, 3, 4)
    assert not quasiautomorphism_check(G, beta)
    Q = build(LinearSpec("left_linear", G, identity(5), 0, beta))
    assert recognize(Q, G, "left_alinear")
    report = verify_prop_2_4(Q)
    assert report["passed"]
    assert not report["two_sided_t_quasigroup"]
    assert not is_t_quasigroup(Q)[0]


def test_prop_2_4_forbids_nonabelian_double_recognition():
    # a left-linear table over s3 can never be left-alinear over any
    # order-6 group, else the s3 base would be forced abelian
    rng = random.Random(63)
    G = catalog_group("s3")
    z6 = catalog_group("z6")
    auts = automorphisms(G)
    for _ in range(25):
        spec = LinearSpec(
            "left_linear", G, rng.choice(auts), rng.randrange(6), tuple(rng.sample(range(6), 6))
        )
        Q = build(spec)
        assert not recognize(Q, G, "left_alinear")
        assert not recognize(Q, z6, "left_alinear")
        assert not recognize(Q, z6, "left_linear")


def test_verify_lemma_2_1_group_loops():
    spec = q5_spec()
    G = spec.group
    Q = build(spec)
    loop = from_group(G)
    witnesses = {
        "phi": spec.left,
        "beta": tuple(G.add(spec.c, spec.right[y]) for y in range(5)),
        "alpha": tuple(G.add(spec.left[x], spec.c) for x in range(5)),
        "psi": spec.right,
    }
    report = verify_lemma_2_1(Q, loop, loop, witnesses)
    assert report["passed"] and report["relations_hold"]
    assert report["linear_over"]


def test_verify_lemma_2_1_identity_specialisation():
    # phi = psi = id, c = 0: the pinned maps collapse to alpha = phi, beta = psi
    G = catalog_group("s3")
    Q = from_group(G)
    e = identity(6)
    witnesses = {"phi": e, "beta": e, "alpha": e, "psi": e}
    report = verify_lemma_2_1(Q, Q, Q, witnesses)
    assert report["passed"]


def test_verify_lemma_2_1_rejects_bad_witness():
    spec = q5_spec()
    Q = build(spec)
    loop = from_group(spec.group)
    witnesses = {"phi": spec.left, "beta": identity(5), "alpha": identity(5), "psi": spec.right}
    with pytest.raises(PreconditionFailed):
        verify_lemma_2_1(Q, loop, loop, witnesses)
