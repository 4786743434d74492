import random

import pytest

from lqg.core import identity
from lqg.errors import HNotClosed, NotAQuasigroup, PreconditionFailed
from lqg.groups import automorphisms, catalog_group, subgroups
from lqg.latin import random_quasigroup
from lqg.linear_forms import LinearSpec, build
from lqg.quasigroups import (
    LocalIdentityMaps,
    Quasigroup,
    from_group,
    is_normal_subquasigroup,
    is_subquasigroup,
    left_division,
    local_identities,
    right_division,
    subquasigroups,
    verify_theorem_2_3,
)

STEINER3 = ((0, 2, 1), (2, 1, 0), (1, 0, 2))


def q5():
    return Quasigroup(tuple(tuple((2 * x + 3 * y) % 5 for y in range(5)) for x in range(5)))


def test_quasigroup_rejects_non_latin():
    with pytest.raises(NotAQuasigroup):
        Quasigroup(((0, 1), (0, 1)))


def test_group_divisions():
    Q = from_group(catalog_group("z5"))
    for z in range(5):
        for y in range(5):
            assert right_division(Q, z, y) == (z - y) % 5
            assert left_division(Q, y, z) == (z - y) % 5


def test_q5_divisions_closed_form():
    Q = q5()
    for z in range(5):
        for y in range(5):
            assert Q.rdiv(z, y) == (3 * z + y) % 5
            assert Q.ldiv(y, z) == (2 * z + y) % 5


def test_division_identities_hold():
    rng = random.Random(5)
    tables = [q5(), from_group(catalog_group("s3")), from_group(catalog_group("z2xz4"))]
    tables += [random_quasigroup(rng.randint(2, 6), rng) for _ in range(20)]
    for Q in tables:
        for x in range(Q.n):
            for y in range(Q.n):
                xy = Q.mul(x, y)
                assert Q.rdiv(xy, y) == x            # (xy)/y = x
                assert Q.mul(Q.rdiv(x, y), y) == x   # (x/y)y = x
                assert Q.mul(y, Q.ldiv(y, x)) == x   # y(y\x) = x
                assert Q.ldiv(y, Q.mul(y, x)) == x   # y\(yx) = x


def test_translations():
    G = catalog_group("z5")
    Q = from_group(G)
    assert Q.left_translation(0) == identity(5)
    Q5 = q5()
    assert Q5.left_translation(1) == tuple((3 * x + 2) % 5 for x in range(5))
    for a in range(5):
        assert sorted(Q5.right_translation(a)) == list(range(5))
    with pytest.raises(ValueError):
        Q5.translation("middle", 0)


def test_local_identities_loop_constant():
    Q = from_group(catalog_group("s3"))
    maps = local_identities(Q)
    assert maps.e == (0,) * 6
    assert maps.f == (0,) * 6


def test_local_identities_q5():
    maps = local_identities(q5())
    assert maps.e == tuple(3 * x % 5 for x in range(5))
    assert maps.f == tuple(4 * x % 5 for x in range(5))


def test_local_identities_idempotent():
    maps = local_identities(Quasigroup(STEINER3))
    assert maps.e == (0, 1, 2)
    assert maps.f == (0, 1, 2)


def test_identity_element():
    assert from_group(catalog_group("z6")).identity_element() == 0
    assert q5().identity_element() is None
    assert not q5().is_loop()


def test_is_loop_iff_constant_equal_local_identities():
    rng = random.Random(17)
    for _ in range(40):
        Q = random_quasigroup(rng.randint(2, 5), rng)
        maps = local_identities(Q)
        constant_equal = len(set(maps.e)) == 1 and maps.e == maps.f
        assert Q.is_loop() == constant_equal


def test_subquasigroups_of_group_are_subgroups():
    Q = from_group(catalog_group("z4"))
    assert subquasigroups(Q) == [(0,), (0, 2), (0, 1, 2, 3)]


def test_subquasigroups_q5():
    assert subquasigroups(q5()) == [(0,), (0, 1, 2, 3, 4)]


def test_subquasigroups_idempotent():
    assert subquasigroups(Quasigroup(STEINER3)) == [(0,), (1,), (2,), (0, 1, 2)]


def test_subquasigroups_match_subset_scan():
    # oracle: every nonempty subset checked for closure directly
    rng = random.Random(71)
    tables = [q5(), Quasigroup(STEINER3), from_group(catalog_group("z4"))]
    tables += [random_quasigroup(rng.randint(2, 5), rng) for _ in range(15)]
    for Q in tables:
        n = Q.n
        expected = []
        for mask in range(1, 1 << n):
            sub = tuple(x for x in range(n) if mask >> x & 1)
            if is_subquasigroup(Q, sub):
                expected.append(sub)
        assert sorted(subquasigroups(Q), key=lambda h: (len(h), h)) == sorted(expected, key=lambda h: (len(h), h))


def test_linear_c0_subquasigroups_are_invariant_subgroups():
    # with c = 0, the subquasigroups through 0 are the subgroups preserved by both maps
    for name in ("z4", "z2xz2", "z6", "s3", "z8", "d4"):
        G = catalog_group(name)
        auts = automorphisms(G)
        for left in auts[:3]:
            for right in auts[-3:]:
                Q = build(LinearSpec("linear", G, left, 0, right))
                found = {h for h in subquasigroups(Q) if 0 in h}
                expected = {
                    h
                    for h in subgroups(G)
                    if all(left[x] in h and right[x] in h for x in h)
                }
                assert found == expected


def test_is_normal_subquasigroup():
    s3 = from_group(catalog_group("s3"))
    assert is_normal_subquasigroup(s3, (0, 1, 2, 3, 4, 5), 0)
    assert is_normal_subquasigroup(s3, (0, 3, 4), 0)      # index-2 subgroup
    assert not is_normal_subquasigroup(s3, (0, 1), 0)     # transposition subgroup
    with pytest.raises(HNotClosed):
        is_normal_subquasigroup(s3, (0, 3), 0)


def test_theorem_2_3_z4():
    G = catalog_group("z4")
    spec = LinearSpec("linear", G, identity(4), 0, identity(4))
    report = verify_theorem_2_3(spec, (0, 2))
    assert report["passed"]
    assert report["quasigroup_normal"] and report["group_normal"]


def test_theorem_2_3_s3_normal_and_nonnormal():
    G = catalog_group("s3")
    spec = LinearSpec("linear", G, identity(6), 0, identity(6))
    rep = verify_theorem_2_3(spec, (0, 3, 4))
    assert rep["passed"] and rep["quasigroup_normal"] and rep["group_normal"]
    rep = verify_theorem_2_3(spec, (0, 1))
    assert rep["passed"]
    assert not rep["quasigroup_normal"] and not rep["group_normal"]


def test_theorem_2_3_alinear():
    G = catalog_group("s3")
    neg = tuple(G.inverse)
    spec = LinearSpec("alinear", G, neg, 0, neg)
    rep = verify_theorem_2_3(spec, (0, 3, 4))
    assert rep["passed"]


def test_theorem_2_3_preconditions():
    G = catalog_group("z4")
    spec = LinearSpec("linear", G, identity(4), 1, identity(4))
    with pytest.raises(PreconditionFailed):
        verify_theorem_2_3(spec, (0, 2))
    spec = LinearSpec("linear", G, identity(4), 0, identity(4))
    with pytest.raises(PreconditionFailed):
        verify_theorem_2_3(spec, (1, 3))
    with pytest.raises(PreconditionFailed):
        verify_theorem_2_3(spec, (0, 1))  # not closed


def test_local_identity_type():
    maps = local_identities(q5())
    assert isinstance(maps, LocalIdentityMaps)
