"""Filters, congruences and subdirect irreducibility."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .algebra import FiniteAlgebra, require_verified
from .errors import NotAFilter, Trivial

__all__ = [
    "Filter", "is_filter", "make_filter", "all_filters", "principal_filter",
    "generated_filter", "congruence_of", "is_subdirectly_irreducible",
    "monolith", "is_simple",
]


@dataclass(frozen=True, eq=False)
class Filter:
    algebra: FiniteAlgebra
    bits: int

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.algebra.n) if self.bits >> x & 1)

    def __contains__(self, x: int) -> bool:
        return bool(self.bits >> int(x) & 1)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __le__(self, other: "Filter") -> bool:
        return self.bits & ~other.bits == 0

    def __eq__(self, other):
        return isinstance(other, Filter) and self.bits == other.bits and (
            self.algebra is other.algebra or self.algebra.same_tables(other.algebra))

    def __hash__(self):
        return hash(self.bits)

    def __repr__(self):
        return f"Filter({list(self.elements)})"


def _bits(elements: Iterable[int]) -> int:
    out = 0
    for x in elements:
        out |= 1 << int(x)
    return out


def is_filter(A: FiniteAlgebra, elements: Iterable[int]) -> bool:
    s = set(int(x) for x in elements)
    if A.top not in s:
        return False
    for x in s:
        if any(A.leq[x, y] and y not in s for y in A.elements):
            return False
        if any(int(A.mult[x, y]) not in s for y in s):
            return False
    return True


def make_filter(A: FiniteAlgebra, elements: Iterable[int]) -> Filter:
    elements = list(elements)
    if not is_filter(A, elements):
        raise NotAFilter(f"{sorted(set(elements))} is not a filter of {A.name or 'A'}")
    return Filter(A, _bits(elements))


def generated_filter(A: FiniteAlgebra, gens: Iterable[int]) -> Filter:
    """Smallest filter containing ``gens``: close under products and upsets."""
    require_verified(A, mtl=False)
    s = {A.top, *(int(g) for g in gens)}
    changed = True
    while changed:
        changed = False
        for x in list(s):
            for y in list(s):
                p = int(A.mult[x, y])
                if p not in s:
                    s.add(p)
                    changed = True
        for x in list(s):
            for y in np.flatnonzero(A.leq[x]):
                if int(y) not in s:
                    s.add(int(y))
                    changed = True
    return Filter(A, _bits(s))


def principal_filter(A: FiniteAlgebra, a: int) -> Filter:
    return generated_filter(A, [a])


def _descending_order(A: FiniteAlgebra) -> list[int]:
    # linear extension of the reverse order: everything above x comes first
    height = A.leq.sum(axis=1)  # number of elements >= x
    return sorted(A.elements, key=lambda x: (height[x], -x))


def all_filters(A: FiniteAlgebra) -> list[Filter]:
    """Every filter of ``A``, ordered by size and then by member list.

    Backtracks over the elements from the top down; an element may join the
    set only if its whole upset is already in, and each inclusion is
    rejected as soon as a product lands on an element already excluded.
    """
    require_verified(A, mtl=False)
    order = _descending_order(A)
    leq, mult = A.leq, A.mult
    ups = [_bits(np.flatnonzero(leq[x])) for x in A.elements]
    found: list[int] = []

    def consistent(inside: int, excluded: int, x: int) -> bool:
        if ups[x] & ~(inside | 1 << x):
            return False
        members = inside | 1 << x
        for y in A.elements:
            if members >> y & 1 and excluded >> int(mult[x, y]) & 1:
                return False
        return True

    def closed(inside: int) -> bool:
        for x in A.elements:
            if not inside >> x & 1:
                continue
            for y in A.elements:
                if inside >> y & 1 and not inside >> int(mult[x, y]) & 1:
                    return False
        return True

    def extend(i: int, inside: int, excluded: int) -> None:
        if i == len(order):
            if closed(inside):
                found.append(inside)
            return
        x = order[i]
        if consistent(inside, excluded, x):
            extend(i + 1, inside | 1 << x, excluded)
        if x != A.top:
            extend(i + 1, inside, excluded | 1 << x)

    extend(0, 0, 0)
    filters = [Filter(A, b) for b in found]
    filters.sort(key=lambda F: (len(F), F.elements))
    return filters


def congruence_of(F: Filter) -> list[int]:
    """Class index per element for x ~ y iff x=>y and y=>x lie in F.

    Classes are numbered by their least element.
    """
    A = F.algebra
    cls = [-1] * A.n
    nxt = 0
    for x in A.elements:
        if cls[x] >= 0:
            continue
        for y in range(x, A.n):
            if cls[y] < 0 and int(A.impl[x, y]) in F and int(A.impl[y, x]) in F:
                cls[y] = nxt
        nxt += 1
    return cls


def monolith(A: FiniteAlgebra) -> Optional[Filter]:
    """The least filter other than {top}, when there is one."""
    require_verified(A, mtl=False)
    if A.n == 1:
        raise Trivial("the one-element algebra has no nontrivial filter")
    nontrivial = [F for F in all_filters(A) if F.bits != 1 << A.top]
    minimal = [F for F in nontrivial if not any(G <= F and G.bits != F.bits
                                                for G in nontrivial)]
    return minimal[0] if len(minimal) == 1 else None


def is_subdirectly_irreducible(A: FiniteAlgebra) -> tuple[bool, Optional[Filter]]:
    m = monolith(A)
    return m is not None, m


def is_simple(A: FiniteAlgebra) -> bool:
    require_verified(A, mtl=False)
    return len(all_filters(A)) == 2
