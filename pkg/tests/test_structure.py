"""Subgroups, cosets, quotients and the simplicity classification."""

import pytest

import polyadic as P
from conftest import A3, TRANSPOSITIONS


class TestSubgroups:
    def test_s3t_has_ten(self, s3t):
        subs = P.subgroups(s3t)
        assert len(subs) == 10
        assert (0,) in subs and (1,) in subs and (2,) in subs and (5,) in subs
        assert (0, 1) in subs and (0, 2) in subs and (0, 5) in subs
        assert A3 in subs and TRANSPOSITIONS in subs
        assert tuple(range(6)) in subs

    def test_t2_has_three(self, t2):
        assert P.subgroups(t2) == [(0,), (0, 1), (1,)]

    def test_z4m_exact_list(self, z4m):
        assert P.subgroups(z4m) == [
            (0,), (0, 1, 2, 3), (0, 2), (1,), (1, 3), (2,), (3,)
        ]

    def test_verify_subgroup_witnesses(self, s3t):
        report = P.verify_subgroup(s3t, (0, 3))   # not closed: (123)(123) misses
        assert not report.passed
        assert report.first().axiom == "subgroup-closure"
        assert not P.verify_subgroup(s3t, ()).passed

    def test_closure_driven_search_matches_powerset(self, s3t):
        from polyadic.structure import subgroup_closure
        found = {subgroup_closure(s3t, (x,)) for x in range(6)}
        found |= {subgroup_closure(s3t, pair) for pair in
                  [(x, y) for x in range(6) for y in range(x + 1, 6)]}
        assert sorted(found) == P.subgroups(s3t)


class TestNormality:
    def test_s3t(self, s3t):
        assert P.is_normal(s3t, A3)
        assert P.is_normal(s3t, TRANSPOSITIONS)
        assert not P.is_normal(s3t, (1,))
        assert not P.is_normal(s3t, (0, 1))

    def test_z4m(self, z4m):
        assert P.is_normal(z4m, (0, 2))
        assert P.is_normal(z4m, (1, 3))
        assert not P.is_normal(z4m, (0,))

    def test_requires_subgroup(self, s3t):
        with pytest.raises(P.InvalidGroupError):
            P.is_normal(s3t, (0, 3))


class TestCosets:
    def test_s3t_mod_a3(self, s3t):
        part = P.cosets(s3t, A3)
        assert part.blocks == (A3, TRANSPOSITIONS)

    def test_z4m_mod_02(self, z4m):
        part = P.cosets(z4m, (0, 2))
        assert part.blocks == ((0, 2), (1, 3))

    def test_block_sizes_for_every_subgroup(self, fixtures):
        for group in fixtures.values():
            for sub in P.subgroups(group):
                part = P.cosets(group, sub)
                assert all(len(b) == len(sub) for b in part.blocks)
                assert sum(len(b) for b in part.blocks) == group.order

    def test_long_form_agrees(self, s3t):
        # aH via all (n-1)-tuples from H equals the two-variable form
        import itertools
        for sub in P.subgroups(s3t):
            part = P.cosets(s3t, sub)
            for a in range(6):
                block = {s3t.eval((a,) + rest)
                         for rest in itertools.product(sub, repeat=2)}
                assert tuple(sorted(block)) == part.blocks[part.block_of(a)]


class TestQuotient:
    def test_s3t_mod_a3(self, s3t):
        quot = P.quotient(s3t, A3)
        assert quot.group.order == 2
        assert quot.identity_block == 0
        assert P.has_nary_identity(quot.group) == 0
        assert quot.retract_group().order == 2

    def test_z4m_mod_02_reducible(self, z4m):
        quot = P.quotient(z4m, (0, 2))
        assert quot.group.order == 2
        assert P.has_nary_identity(quot.group) is not None

    def test_non_normal_rejected(self, s3t):
        with pytest.raises(P.InvalidGroupError, match="normal"):
            P.quotient(s3t, (0, 1))

    def test_quotients_verify(self, fixtures):
        for group in fixtures.values():
            for sub in P.subgroups(group):
                if P.is_normal(group, sub):
                    quot = P.quotient(group, sub)
                    assert P.verify_nary_group(quot.group).passed


class TestCentral:
    def test_central_elements(self, fixtures, s3t):
        assert P.central_elements(fixtures["T2"]) == (0, 1)
        assert P.central_elements(fixtures["T2b"]) == (0, 1)
        assert P.central_elements(fixtures["Z4M"]) == ()
        assert P.central_elements(s3t) == (0,)


class TestClassify:
    def test_s3t(self, s3t):
        result = P.classify_simplicity(s3t)
        assert result.case == "has-proper-normal"
        assert set(result.proper_normal) == {A3, TRANSPOSITIONS}

    def test_t2_central_singleton_branch(self, t2):
        result = P.classify_simplicity(t2)
        assert result.case == "b-derived-abelian"
        assert result.central_singleton == 0
        assert result.carrier_abelian is True
        assert P.is_central(t2, result.central_singleton)

    def test_z4m(self, z4m):
        result = P.classify_simplicity(z4m)
        assert result.case == "has-proper-normal"
        assert set(result.proper_normal) == {(0, 2), (1, 3)}

    def test_strongly_simple_candidate(self):
        # (Z3, x-y+z): singletons are subgroups but none is normal, and no
        # two-element subset is closed, so only G itself is normal.
        group = P.NaryGroup.from_function(3, 3, lambda x, y, z: (x - y + z) % 3)
        result = P.classify_simplicity(group)
        assert result.case == "strongly-simple-candidate"
        assert result.normal_subgroups == ((0, 1, 2),)

    def test_derived_nonabelian_has_proper_normal(self):
        group = P.derived(P.quaternion_group(), 3)
        result = P.classify_simplicity(group)
        assert result.case == "has-proper-normal"
