import itertools

import pytest

from mtlkit.algebra import boolean2, goedel, lukasiewicz, trivial
from mtlkit.constructions import ordinal_sum, product
from mtlkit.enumeration import chains_upto
from mtlkit.errors import NotAFilter, Trivial
from mtlkit.filters import (
    all_filters, congruence_of, generated_filter, is_filter, is_simple,
    is_subdirectly_irreducible, make_filter, monolith, principal_filter,
)

B22 = product(boolean2(), boolean2())


def elems(filters):
    return [list(F.elements) for F in filters]


def test_all_filters_examples():
    assert elems(all_filters(lukasiewicz(3))) == [[2], [0, 1, 2]]
    assert elems(all_filters(goedel(3))) == [[2], [1, 2], [0, 1, 2]]
    assert elems(all_filters(boolean2())) == [[1], [0, 1]]
    assert elems(all_filters(B22)) == [[3], [1, 3], [2, 3], [0, 1, 2, 3]]


def test_principal_and_generated():
    assert list(principal_filter(goedel(4), 2).elements) == [2, 3]
    assert list(principal_filter(lukasiewicz(4), 2).elements) == [0, 1, 2, 3]
    assert list(generated_filter(goedel(4), []).elements) == [3]
    assert list(generated_filter(B22, [1, 2]).elements) == [0, 1, 2, 3]


def test_make_filter_validation():
    assert is_filter(goedel(3), [1, 2])
    assert not is_filter(lukasiewicz(3), [1, 2])
    with pytest.raises(NotAFilter):
        make_filter(lukasiewicz(3), [1, 2])
    with pytest.raises(NotAFilter):
        make_filter(goedel(3), [1])


def test_subdirect_irreducibility():
    for A in chains_upto(5):
        si, mono = is_subdirectly_irreducible(A)
        assert si and A.top - 1 in mono
    si, mono = is_subdirectly_irreducible(B22)
    assert not si and mono is None
    S = ordinal_sum(lukasiewicz(3), boolean2())
    si, mono = is_subdirectly_irreducible(S)
    assert si and list(mono.elements) == [2, 3]
    with pytest.raises(Trivial):
        monolith(trivial())


def test_simple():
    for k in range(2, 7):
        assert is_simple(lukasiewicz(k))
    assert not is_simple(goedel(3))
    assert is_simple(boolean2())


def _partitions(n):
    """Every set partition of range(n) as a class-index list."""
    def rec(i, labels, k):
        if i == n:
            yield list(labels)
            return
        for c in range(k + 1):
            labels.append(c)
            yield from rec(i + 1, labels, max(k, c + 1))
            labels.pop()
    yield from rec(0, [], 0)


def _is_congruence(A, cls):
    for op in (A.mult, A.impl, A.meet, A.join):
        for a, b, c, d in itertools.product(range(A.n), repeat=4):
            if cls[a] == cls[b] and cls[c] == cls[d] and cls[op[a, c]] != cls[op[b, d]]:
                return False
    return True


@pytest.mark.parametrize("A", [*chains_upto(4), B22], ids=lambda A: A.name)
def test_filters_match_brute_force_congruences(A):
    congruences = [tuple(p) for p in _partitions(A.n) if _is_congruence(A, p)]
    from_filters = sorted(tuple(congruence_of(F)) for F in all_filters(A))
    assert len(congruences) == len(all_filters(A))
    assert sorted(congruences) == from_filters
