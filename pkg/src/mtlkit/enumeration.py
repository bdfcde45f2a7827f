"""Isomorphism-free enumeration of finite MTL-chains.

On the chain 0 < 1 < ... < n-1 a commutative, associative, monotone
multiplication with identity n-1 and absorbing 0 is always residuated, and
two such chains are isomorphic only if their tables coincide.  Enumerating
chains therefore means enumerating these tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .algebra import (
    FiniteAlgebra, contractivity_index, is_involutive, is_smtl, make_algebra,
)
from .errors import BadSize, BudgetExceeded
from .filters import is_simple, monolith

__all__ = [
    "MAX_ORDER", "ChainMeta", "ChainCensus", "chain_tables", "naive_chain_tables",
    "enumerate_chains", "census_metadata", "chains_upto", "census", "find_in_census",
]

MAX_ORDER = 7


@dataclass(frozen=True)
class ChainMeta:
    contractivity: int
    smtl: bool
    involutive: bool
    simple: bool
    si: bool
    monolith_size: int


@dataclass
class ChainCensus:
    order: int
    chains: list[FiniteAlgebra]
    meta: list[ChainMeta] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.chains)

    def ids(self) -> list[str]:
        return [f"chain_{self.order}_{i:04d}" for i in range(self.count)]


def _full_table(n: int, inner: dict[tuple[int, int], int]) -> list[list[int]]:
    top = n - 1
    table = [[0] * n for _ in range(n)]
    for x in range(n):
        table[x][top] = table[top][x] = x
    for (x, y), v in inner.items():
        table[x][y] = table[y][x] = v
    return table


def chain_tables(n: int) -> Iterator[list[list[int]]]:
    """Backtracking generator of all MTL-chain tables of order n.

    Interior entries (x <= y, both strictly between 0 and top) are filled
    along anti-diagonals, so the left and lower neighbours of an entry are
    always known and monotonicity gives its lower bound; ``min(x, y)`` is the
    upper bound.  Every associativity triple whose lookups are all defined
    is checked as soon as an entry is placed.
    """
    if n < 2:
        raise BadSize("chains need at least 2 elements")
    top = n - 1
    inner = list(range(1, top))
    cells = sorted(((x, y) for x in inner for y in inner if x <= y),
                   key=lambda c: (c[0] + c[1], c[0]))
    t = [[-1] * n for _ in range(n)]
    for x in range(n):
        t[0][x] = t[x][0] = 0
        t[top][x] = t[x][top] = x
    t[0][top] = t[top][0] = 0

    # triples (a, b, c) with a <= c suffice for a commutative operation
    all_triples = [(a, b, c) for a in inner for b in inner for c in inner if a <= c]

    def assoc_ok(triples) -> bool:
        for a, b, c in triples:
            ab, bc = t[a][b], t[b][c]
            if ab < 0 or bc < 0:
                continue
            lhs, rhs = t[ab][c], t[a][bc]
            if lhs >= 0 and rhs >= 0 and lhs != rhs:
                return False
        return True

    def extend(k: int) -> Iterator[list[list[int]]]:
        if k == len(cells):
            yield [row[:] for row in t]
            return
        x, y = cells[k]
        lo = max(t[x - 1][y], t[x][y - 1])
        hi = min(x, y)
        for v in range(lo, hi + 1):
            t[x][y] = t[y][x] = v
            if assoc_ok(all_triples):
                yield from extend(k + 1)
        t[x][y] = t[y][x] = -1

    yield from extend(0)


def _monotone(table: list[list[int]]) -> bool:
    n = len(table)
    for x in range(n):
        for y in range(n):
            if x + 1 < n and table[x][y] > table[x + 1][y]:
                return False
            if y + 1 < n and table[x][y] > table[x][y + 1]:
                return False
    return True


def _associative(table: list[list[int]]) -> bool:
    n = len(table)
    return all(table[table[a][b]][c] == table[a][table[b][c]]
               for a in range(n) for b in range(n) for c in range(n))


def naive_chain_tables(n: int) -> Iterator[list[list[int]]]:
    """Brute-force oracle: every commutative filling of the interior entries
    with arbitrary values, filtered by monotonicity and associativity."""
    if n < 2:
        raise BadSize("chains need at least 2 elements")
    top = n - 1
    inner = range(1, top)
    cells = [(x, y) for x in inner for y in inner if x <= y]
    for values in itertools.product(range(n), repeat=len(cells)):
        table = _full_table(n, dict(zip(cells, values)))
        if _monotone(table) and _associative(table):
            yield table


def enumerate_chains(n: int, max_order: int = MAX_ORDER,
                     metadata: bool = True) -> ChainCensus:
    if n < 2:
        raise BadSize(f"order must be at least 2, got {n}")
    if n > max_order:
        raise BudgetExceeded(f"order {n} exceeds the enumeration budget {max_order}")
    tables = sorted(chain_tables(n), key=lambda tb: [v for row in tb for v in row])
    chains = [make_algebra(tb, name=f"chain_{n}_{i:04d}") for i, tb in enumerate(tables)]
    census = ChainCensus(n, chains)
    return census_metadata(census) if metadata else census


def census_metadata(census: ChainCensus) -> ChainCensus:
    census.meta = []
    for A in census.chains:
        m = monolith(A)
        census.meta.append(ChainMeta(
            contractivity=contractivity_index(A),
            smtl=is_smtl(A),
            involutive=is_involutive(A),
            simple=is_simple(A),
            si=m is not None,
            monolith_size=len(m) if m is not None else 0,
        ))
    return census


_CACHE: dict[int, ChainCensus] = {}


def chains_upto(n: int, start: int = 2) -> list[FiniteAlgebra]:
    """All census chains of orders start..n, memoised per order."""
    out: list[FiniteAlgebra] = []
    for k in range(start, n + 1):
        if k not in _CACHE:
            _CACHE[k] = enumerate_chains(k)
        out.extend(_CACHE[k].chains)
    return out


def census(n: int) -> ChainCensus:
    if n not in _CACHE:
        _CACHE[n] = enumerate_chains(n)
    return _CACHE[n]


def find_in_census(A: FiniteAlgebra) -> Optional[int]:
    """Index of the census member with the same table as chain A."""
    for i, C in enumerate(census(A.n).chains):
        if C.same_tables(A):
            return i
    return None
