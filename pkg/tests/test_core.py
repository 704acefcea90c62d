"""Operation evaluation and the n-ary group axiom checkers."""

import itertools

import numpy as np
import pytest

import polyadic as P
from conftest import binary_catalog


class TestEval:
    def test_examples(self, t2, t2b, z4m):
        assert t2.eval((1, 1, 1)) == 1
        assert t2b.eval((0, 0, 0)) == 1
        assert z4m.eval((3, 1, 2)) == 0

    def test_arity_mismatch(self, t2):
        with pytest.raises(ValueError, match="expected 3"):
            t2.eval((1, 1))

    def test_index_out_of_range(self, t2):
        with pytest.raises(ValueError, match="out of range"):
            t2.eval((0, 2, 0))

    def test_backends_agree(self, t2b):
        rebuilt = P.hg_construct(P.hg_decompose(t2b, 0))
        for xs in itertools.product(range(2), repeat=3):
            assert rebuilt.eval(xs) == t2b.eval(xs)

    def test_eval_batch_matches_eval(self, z4m):
        rows = np.array(list(itertools.product(range(4), repeat=3)))
        batch = z4m.eval_batch(rows)
        assert all(batch[i] == z4m.eval(tuple(r)) for i, r in enumerate(rows))


class TestEvalLong:
    def test_examples(self, t2, z4m):
        assert t2.eval_long((1, 1, 1, 1, 1)) == 1
        assert z4m.eval_long((1, 2, 3, 0, 1)) == 3

    def test_derived_matches_permutation_products(self, s3, s3t):
        rng = np.random.default_rng(7)
        for _ in range(50):
            xs = rng.integers(0, 6, size=5)
            direct = s3.product(xs)
            assert s3t.eval_long(tuple(xs)) == direct

    def test_invalid_length(self, t2):
        with pytest.raises(ValueError, match="k\\(n-1\\)\\+1"):
            t2.eval_long((1, 1, 1, 1))

    def test_fold_order_independent(self, fixtures):
        rng = np.random.default_rng(11)
        for group in fixtures.values():
            n = group.arity
            for k in (2, 3):
                xs = tuple(rng.integers(0, group.order, size=k * (n - 1) + 1))
                assert group.eval_long(xs, fold="left") == group.eval_long(xs, fold="right")

    def test_agrees_with_eval_on_length_n(self, fixtures):
        for group in fixtures.values():
            for xs in itertools.product(range(group.order), repeat=group.arity):
                assert group.eval_long(xs) == group.eval(xs)


class TestAssociativity:
    def test_fixtures_pass(self, t2, z4m):
        assert P.verify_associativity(t2).passed
        assert P.verify_associativity(z4m).passed

    def test_mutation_detected_with_witness(self, t2):
        table = t2.dense().copy()
        table[0, 0, 0] = 1
        broken = P.NaryGroup(3, 2, table=table)
        report = P.verify_associativity(broken)
        assert not report.passed
        axiom, witness = report.first()
        assert axiom.startswith("associativity(")
        assert len(witness) == 5

    def test_workers_agree(self, s3t):
        seq = P.verify_associativity(s3t, workers=1)
        par = P.verify_associativity(s3t, workers=4)
        assert seq.to_dict() == par.to_dict()

    def test_sampled_above_budget(self, s3t):
        report = P.verify_associativity(s3t, budget=100)
        assert report.passed and report.sampled


class TestQuasigroup:
    def test_fixtures_pass(self, t2b, s3t):
        assert P.verify_quasigroup(t2b).passed
        assert P.verify_quasigroup(s3t).passed

    def test_repeated_row_fails(self):
        table = np.zeros((2, 2, 2), dtype=int)  # constant operation
        broken = P.NaryGroup(3, 2, table=table)
        report = P.verify_quasigroup(broken)
        assert not report.passed
        assert report.first().axiom.startswith("solvability(")


class TestNaryGroup:
    def test_fixtures_pass_exhaustively(self, fixtures):
        for name, group in fixtures.items():
            report = P.verify_nary_group(group)
            assert report.passed and not report.sampled, name

    def test_random_stock_passes(self, hg_stock):
        for name, group in hg_stock:
            report = P.verify_nary_group(group)
            assert report.passed and not report.sampled, name

    def test_mutations_fail(self, z4m):
        rng = np.random.default_rng(3)
        flat = z4m.dense().reshape(-1)
        for _ in range(10):
            pos = int(rng.integers(flat.size))
            table = flat.copy()
            table[pos] = (table[pos] + 1 + rng.integers(3)) % 4
            report = P.verify_nary_group(P.NaryGroup(3, 4, table=table))
            assert not report.passed
            assert report.failures

    def test_derived_groups_pass(self):
        for name, base in binary_catalog().items():
            if base.order > 6:
                continue
            assert P.verify_nary_group(P.derived(base, 3)).passed, name

    def test_b_derived_passes_for_every_central_twist(self):
        for base in (P.cyclic_group(4), P.quaternion_group(), P.symmetric_group_3()):
            for b in base.center:
                for arity in (3, 4):
                    assert P.verify_nary_group(P.b_derived(base, b, arity)).passed


class TestSkew:
    def test_values(self, z4m, q4, t2b):
        assert list(z4m.skew_table()) == [0, 1, 2, 3]
        assert list(q4.skew_table()) == [1, 1]
        assert list(t2b.skew_table()) == [1, 0]

    def test_double_skew_ternary(self, ternary_fixtures):
        for group in ternary_fixtures.values():
            for x in range(group.order):
                assert group.skew(group.skew(x)) == x

    def test_double_skew_can_fail_above_ternary(self, q4):
        assert q4.skew(q4.skew(0)) != 0

    def test_ternary_skew_antihomomorphism(self, ternary_fixtures):
        for group in ternary_fixtures.values():
            for xs in itertools.product(range(group.order), repeat=3):
                lhs = group.skew(group.eval(xs))
                rhs = group.eval((group.skew(xs[2]), group.skew(xs[1]), group.skew(xs[0])))
                assert lhs == rhs

    def test_skew_identities_all_fixtures(self, fixtures):
        for group in fixtures.values():
            n = group.arity
            for x in range(group.order):
                xb = group.skew(x)
                for k in range(1, n + 1):
                    assert group.eval((x,) * (k - 1) + (xb,) + (x,) * (n - k)) == x
                for y in range(group.order):
                    for i in range(2, n + 1):
                        assert group.eval((x,) * (i - 2) + (xb,) + (x,) * (n - i) + (y,)) == y
                    for j in range(2, n + 1):
                        assert group.eval((y,) + (x,) * (n - j) + (xb,) + (x,) * (j - 2)) == y

    def test_ambiguous_skew_on_broken_table(self):
        broken = P.NaryGroup(3, 2, table=np.zeros((2, 2, 2), dtype=int))
        with pytest.raises(P.InvalidGroupError, match="skew"):
            broken.skew(1)

    def test_hg_closed_form_matches_scan(self, hg_stock):
        for name, group in hg_stock[:8]:
            dense_copy = P.NaryGroup(group.arity, group.order, table=group.dense().copy())
            assert list(group.skew_table()) == list(dense_copy.skew_table()), name


class TestPredicates:
    def test_nary_identity(self, t2, t2b, s3t):
        assert P.has_nary_identity(t2) == 0
        assert P.has_nary_identity(t2b) is None
        assert P.has_nary_identity(s3t) == 0

    def test_semiabelian(self, fixtures):
        expected = {"T2": True, "T2b": True, "Z4M": True, "Q4": True, "S3T": False}
        for name, group in fixtures.items():
            assert P.is_semiabelian(group) == expected[name], name

    def test_semiabelian_implies_medial(self, fixtures):
        for name, group in fixtures.items():
            if P.is_semiabelian(group):
                assert P.is_medial(group), name

    def test_b_derived_semiabelian_iff_abelian_base(self):
        assert P.is_semiabelian(P.b_derived(P.cyclic_group(4), 2, 3))
        q8 = P.quaternion_group()
        assert not P.is_semiabelian(P.b_derived(q8, 1, 3))
        assert not P.is_semiabelian(P.derived(P.symmetric_group_3(), 3))


class TestConstruction:
    def test_table_length_checked(self):
        with pytest.raises(P.InvalidGroupError, match="entries"):
            P.NaryGroup(3, 2, table=[0, 1, 1])

    def test_entry_range_checked(self):
        with pytest.raises(P.InvalidGroupError, match="indices"):
            P.NaryGroup(3, 2, table=[0, 1, 1, 0, 1, 0, 0, 7])

    def test_labels_length(self, t2):
        with pytest.raises(P.InvalidGroupError, match="label"):
            P.NaryGroup(3, 2, table=t2.dense(), labels=("a",))

    def test_dense_limit(self):
        with pytest.raises(P.SizeLimitError):
            P.NaryGroup(9, 8, table=np.zeros(1, dtype=int))
