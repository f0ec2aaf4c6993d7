from fractions import Fraction

import pytest
from hypothesis import given, settings

from dbcause.bridge import (CausePackage, c_repairs_from_mrc, cause_package,
                            causes_from_repairs, cqa_from_causes, df_sets,
                            repairs_from_cause_contingencies,
                            repairs_from_causes, subset_repairs_literal,
                            validate_package)
from dbcause.causality import actual_causes
from dbcause.errors import (InconsistentPackage, NotEndogenous, NotInInstance,
                            PartitionNotSupported)
from dbcause.oracle import brute_c_repairs, brute_causes, brute_s_repairs
from dbcause.query import dc_of_query, parse_dc
from dbcause.relational import Instance
from dbcause.repairs import c_repairs, consistent_answer_ground, s_repairs
from generators import bcqs, dc_lists, dcs, endogenous_instances, instances
from helpers import A, atoms, family


def test_df_sets(path_db, path_query):
    kappa = dc_of_query(path_query)
    assert df_sets(path_db, kappa, A("R(a4,a3)")).difference_sets == family(
        ["R(a4,a3)", "R(a3,a3)"])
    assert not df_sets(path_db, kappa, A("S(a2)"))
    assert df_sets(path_db, kappa, A("R(a3,a3)")).difference_sets == family(
        ["R(a4,a3)", "R(a3,a3)"], ["R(a3,a3)", "S(a4)"])
    with pytest.raises(NotInInstance):
        df_sets(path_db, kappa, A("S(zz)"))


def test_df_sets_skip_repairs_touching_exogenous(path_partitioned, path_query):
    kappa = dc_of_query(path_query)
    assert df_sets(path_partitioned, kappa, A("S(a3)")).difference_sets == \
        family(["S(a3)"])
    with pytest.raises(NotEndogenous):
        df_sets(path_partitioned, kappa, A("R(a4,a3)"))


def test_causes_from_repairs(path_db, path_query, path_partitioned):
    cs = causes_from_repairs(path_db, path_query)
    assert cs.same_causes(actual_causes(path_db, path_query))
    assert cs.responsibility(A("R(a4,a3)")) == Fraction(1, 2)
    assert cs.responsibility(A("S(a3)")) == 1
    assert len(causes_from_repairs(path_db.delete({A("S(a3)"), A("S(a4)")}),
                                   path_query)) == 0
    assert causes_from_repairs(path_partitioned, path_query).same_causes(
        actual_causes(path_partitioned, path_query))


def test_repairs_from_cause_contingencies(pr_loop, pr_join, path_db, path_query):
    assert repairs_from_cause_contingencies(pr_loop, pr_join).deletion_sets == \
        family(["P(a,b)"], ["R(b,c)", "R(b,b)"])
    kappa = dc_of_query(path_query)
    assert repairs_from_cause_contingencies(path_db, kappa).deletion_sets == \
        s_repairs(path_db, [kappa]).deletion_sets
    consistent = pr_loop.delete({A("P(a,b)")})
    assert repairs_from_cause_contingencies(consistent, pr_join).deletion_sets == \
        {frozenset()}


def test_cause_package_contents(prs_chain, pr_join, rs_join):
    pkg = cause_package(prs_chain, [pr_join, rs_join])
    assert pkg.causes(0) == atoms("P(a,b)", "R(b,c)")
    assert pkg.causes(1) == atoms("R(b,c)", "S(c,d)")
    assert pkg.sorted_entries(0) == [(A("P(a,b)"), [frozenset()]),
                                     (A("R(b,c)"), [frozenset()])]


def test_repairs_from_causes_two_constraints(prs_chain, pr_join, rs_join):
    sigma = [pr_join, rs_join]
    pkg = cause_package(prs_chain, sigma)
    expected = family(["R(b,c)"], ["P(a,b)", "S(c,d)"])
    assert repairs_from_causes(prs_chain, sigma, pkg).deletion_sets == expected
    assert subset_repairs_literal(prs_chain, sigma, pkg).deletion_sets == expected
    assert {r.atoms for r in repairs_from_causes(prs_chain, sigma, pkg)} == {
        atoms("P(a,b)", "S(c,d)"), atoms("R(b,c)")}


def test_repairs_from_causes_single_and_none_violated(pr_loop, pr_join):
    pkg = cause_package(pr_loop, [pr_join])
    assert repairs_from_causes(pr_loop, [pr_join], pkg).deletion_sets == family(
        ["P(a,b)"], ["R(b,c)", "R(b,b)"])
    consistent = pr_loop.delete({A("P(a,b)")})
    pkg = cause_package(consistent, [pr_join])
    assert repairs_from_causes(consistent, [pr_join], pkg).deletion_sets == {
        frozenset()}


def test_minimal_hitting_sets_alone_miss_a_repair():
    d = Instance(atoms("R(1,1)", "R(1,2)", "S(1)"))
    sigma = [parse_dc(":- R(X,X)."), parse_dc(":- S(X), R(X,Y).")]
    pkg = cause_package(d, sigma)
    truth = brute_s_repairs(d, sigma).deletion_sets
    assert truth == family(["R(1,1)", "S(1)"], ["R(1,1)", "R(1,2)"])
    assert repairs_from_causes(d, sigma, pkg).deletion_sets == truth
    # the only minimal hitting set of the cause collection is {R(1,1)},
    # and no pick inside it covers the second view without R(1,2)
    assert subset_repairs_literal(d, sigma, pkg).deletion_sets == family(
        ["R(1,1)", "R(1,2)"])


def test_partitioned_input_rejected(path_partitioned, path_query):
    kappa = dc_of_query(path_query)
    with pytest.raises(PartitionNotSupported):
        cause_package(path_partitioned, [kappa])
    pkg = cause_package(path_partitioned.all_endogenous(), [kappa])
    with pytest.raises(PartitionNotSupported):
        repairs_from_causes(path_partitioned, [kappa], pkg)


def test_corrupted_packages_rejected(prs_chain, pr_join, rs_join):
    sigma = [pr_join, rs_join]
    good = cause_package(prs_chain, sigma)
    validate_package(prs_chain, sigma, good)
    (dc0, t0), (dc1, t1) = good.views
    bad_tables = [
        {A("P(a,b)"): family(["R(b,c)"])},          # not counterfactual
        {A("P(a,zz)"): family([])},                 # not in the instance
        {A("P(a,b)"): frozenset()},                 # no contingency set
        {},                                         # violated, no causes
    ]
    for table in bad_tables:
        with pytest.raises(InconsistentPackage):
            repairs_from_causes(prs_chain, sigma,
                                CausePackage(((dc0, table), (dc1, t1))))
    with pytest.raises(InconsistentPackage):
        repairs_from_causes(prs_chain, [pr_join], good)


def test_c_repairs_from_mrc(pr_loop, pr_join, path_db, path_query):
    assert c_repairs_from_mrc(pr_loop, pr_join).deletion_sets == family(["P(a,b)"])
    kappa = dc_of_query(path_query)
    assert c_repairs_from_mrc(path_db, kappa).deletion_sets == family(["S(a3)"])
    consistent = pr_loop.delete({A("P(a,b)")})
    assert c_repairs_from_mrc(consistent, pr_join).deletion_sets == {frozenset()}


def test_cqa_from_causes(pr_cqa, pr_join):
    assert cqa_from_causes(pr_cqa, pr_join, A("R(a,d)"))
    assert not cqa_from_causes(pr_cqa, pr_join, A("P(a,b)"))
    assert not cqa_from_causes(pr_cqa, pr_join, A("R(b,c)"))
    assert not cqa_from_causes(pr_cqa, pr_join, A("R(zz,zz)"))


# -------------------------------------------------------------- properties


@settings(max_examples=150, deadline=None)
@given(instances(), bcqs())
def test_causes_from_repairs_match_oracle(d, q):
    assert causes_from_repairs(d, q).same_causes(brute_causes(d, q))


@settings(max_examples=150, deadline=None)
@given(endogenous_instances(8), dc_lists())
def test_repairs_from_causes_match_oracle(d, sigma):
    pkg = cause_package(d, sigma)
    assert repairs_from_causes(d, sigma, pkg).deletion_sets == \
        brute_s_repairs(d, sigma).deletion_sets


@settings(max_examples=150, deadline=None)
@given(endogenous_instances(8), dcs())
def test_single_constraint_reductions(d, dc):
    srep = brute_s_repairs(d, [dc])
    assert repairs_from_cause_contingencies(d, dc).deletion_sets == \
        srep.deletion_sets
    assert c_repairs_from_mrc(d, dc).deletion_sets == \
        brute_c_repairs(d, [dc]).deletion_sets
    assert c_repairs_from_mrc(d, dc).deletion_sets == \
        c_repairs(d, [dc]).deletion_sets
    for a in d.atoms:
        assert cqa_from_causes(d, dc, a) == \
            consistent_answer_ground(d, [dc], a)
        assert cqa_from_causes(d, dc, a) == all(
            a not in s for s in srep.deletion_sets)
