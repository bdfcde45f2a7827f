import numpy as np
import pytest
from hypothesis import given, strategies as st

from mtlkit.algebra import (
    boolean2, check_axioms, goedel, heyting_diamond_with_top, is_chain,
    is_well_connected, lukasiewicz, trivial,
)
from mtlkit.constructions import ordinal_sum, product, quotient, subalgebra_generated
from mtlkit.enumeration import census, chains_upto, find_in_census
from mtlkit.errors import NotAFilter, NotChain, Unverified
from mtlkit.filters import all_filters, make_filter, monolith
from mtlkit.modeltheory import are_isomorphic

CHAINS = chains_upto(4)


def test_product_of_booleans():
    B = product(boolean2(), boolean2())
    assert B.n == 4 and B.mtl
    assert B.join[1, 2] == B.top
    assert B.labels == ("<0,0>", "<0,1>", "<1,0>", "<1,1>")


def test_product_with_trivial_is_identity():
    for A in (lukasiewicz(3), goedel(4)):
        P = product(A, trivial())
        assert P.n == A.n and np.array_equal(P.mult, A.mult)


def test_product_of_distinct_chains():
    P = product(goedel(3), lukasiewicz(3))
    assert P.mtl and not is_chain(P) and not is_well_connected(P)


def test_ordinal_sum_examples():
    S = ordinal_sum(lukasiewicz(3), boolean2())
    assert S.n == 4
    assert S.mult.tolist() == [[0, 0, 0, 0], [0, 0, 1, 1], [0, 1, 2, 2], [0, 1, 2, 3]]
    assert ordinal_sum(boolean2(), boolean2()).same_tables(goedel(3))
    with pytest.raises(NotChain):
        ordinal_sum(product(boolean2(), boolean2()), boolean2())


def test_subalgebra_examples():
    sub, inc = subalgebra_generated(lukasiewicz(5), [])
    assert inc.map == (0, 4) and sub.same_tables(boolean2())
    sub, inc = subalgebra_generated(lukasiewicz(5), [2])
    assert inc.map == (0, 2, 4) and sub.same_tables(lukasiewicz(3))
    sub, inc = subalgebra_generated(goedel(4), [1, 2])
    assert inc.map == (0, 1, 2, 3)
    assert inc.verified_hom and inc.injective


def test_quotient_examples():
    A = lukasiewicz(4)
    Q, proj = quotient(A, make_filter(A, [A.top]))
    assert Q.same_tables(A) and proj.map == (0, 1, 2, 3)
    Q, proj = quotient(A, make_filter(A, A.elements))
    assert Q.n == 1 and set(proj.map) == {0}
    S = ordinal_sum(lukasiewicz(3), boolean2())
    Q, proj = quotient(S, make_filter(S, [2, 3]))
    assert Q.same_tables(lukasiewicz(3)) and proj.map == (0, 1, 2, 2)
    assert proj.verified_hom


def test_quotient_rejects_foreign_filter():
    F = make_filter(goedel(3), [1, 2])
    with pytest.raises(NotAFilter):
        quotient(lukasiewicz(4), F)


def test_quotient_by_monolith_shrinks():
    for A in [*CHAINS, product(boolean2(), goedel(3))]:
        m = monolith(A)
        if m is None:
            F = sorted(all_filters(A), key=len)[1]
        else:
            F = m
        Q, proj = quotient(A, F)
        assert Q.n < A.n and check_axioms(Q).ok and proj.verified_hom


pairs = st.tuples(st.sampled_from(CHAINS), st.sampled_from(CHAINS))


@given(pairs, st.sampled_from(CHAINS))
def test_ordinal_sum_is_associative(ab, C):
    A, B = ab
    left = ordinal_sum(ordinal_sum(A, B), C)
    right = ordinal_sum(A, ordinal_sum(B, C))
    assert are_isomorphic(left, right)[0]


@given(pairs)
def test_product_commutes_up_to_isomorphism(ab):
    A, B = ab
    ok, iso = are_isomorphic(product(A, B), product(B, A))
    assert ok and iso.verified_hom and iso.injective


@given(pairs)
def test_ordinal_sum_lands_in_census(ab):
    A, B = ab
    S = ordinal_sum(A, B)
    assert check_axioms(S).ok
    assert find_in_census(S) is not None


def test_every_construction_output_passes_laws():
    A, B = lukasiewicz(3), goedel(3)
    outputs = [product(A, B), ordinal_sum(A, B), subalgebra_generated(lukasiewicz(6), [2])[0],
               quotient(B, make_filter(B, [1, 2]))[0]]
    for X in outputs:
        assert check_axioms(X).ok


def test_ordinal_sum_needs_mtl_chains():
    with pytest.raises(Unverified):
        ordinal_sum(boolean2(), heyting_diamond_with_top())


def test_osum_collapses_back_onto_lower_summand():
    for A in census(4).chains:
        S = ordinal_sum(A, boolean2())
        Q, _ = quotient(S, monolith(S))
        assert Q.same_tables(A)
