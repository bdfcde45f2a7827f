"""Evaluating formulas on finite algebras.

Whole assignment spaces are evaluated at once: a formula over k variables
on an n-element algebra becomes an integer array of shape ``(n,) * k``,
indexed by the values of the variables in sorted-name order.  Sweeps and
witnesses therefore follow lexicographic order on assignments.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Optional, Sequence

import numpy as np

from .algebra import FiniteAlgebra, require_verified
from .errors import BudgetExceeded, NotChain, PremiseNotValid, UnboundVariable
from .formula import (
    BOT, Bot, Conj, Formula, Impl, Meet, Var, power, subformulas, variables,
)

__all__ = [
    "DEFAULT_BUDGET", "Check", "Judgment", "LDTResult", "evaluate",
    "value_table", "cost", "is_tautology", "consequence",
    "local_deduction_check", "find_interpolant",
]

DEFAULT_BUDGET = 10 ** 8
_CHUNK = 1 << 18


@dataclass(frozen=True)
class Check:
    """Outcome of a semantic check; truthy when the property holds."""
    holds: bool
    witness: Optional[dict[str, int]] = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class Judgment:
    algebra: FiniteAlgebra
    premises: tuple[Formula, ...]
    conclusion: Formula

    def check(self, budget: int = DEFAULT_BUDGET) -> Check:
        return consequence(self.algebra, self.premises, self.conclusion, budget)


@dataclass(frozen=True)
class LDTResult:
    holds_left: bool
    minimal_n: Optional[int]
    witness: Optional[dict[str, int]] = field(default=None, compare=False)

    @property
    def agrees(self) -> bool:
        """Whether this instance matches the local deduction theorem."""
        return self.holds_left == (self.minimal_n is not None)


def evaluate(A: FiniteAlgebra, v: Mapping[str, int], f: Formula) -> int:
    """Value of ``f`` under the assignment ``v``."""
    require_verified(A, mtl=False)
    memo: dict[int, int] = {}
    for g in subformulas(f):
        if isinstance(g, Var):
            try:
                memo[id(g)] = int(v[g.name])
            except KeyError:
                raise UnboundVariable(g.name) from None
        elif isinstance(g, Bot):
            memo[id(g)] = 0
        else:
            l, r = memo[id(g.left)], memo[id(g.right)]
            if isinstance(g, Conj):
                memo[id(g)] = int(A.mult[l, r])
            elif isinstance(g, Meet):
                memo[id(g)] = int(A.meet[l, r])
            else:
                memo[id(g)] = int(A.impl[l, r])
    return memo[id(f)]


def _tables(A: FiniteAlgebra, formulas: Sequence[Formula],
            axes: Mapping[str, np.ndarray]) -> list[np.ndarray]:
    """Value arrays of ``formulas`` given one array per variable name."""
    ndim = next(iter(axes.values())).ndim if axes else 0
    zero = np.zeros((1,) * ndim, dtype=np.int64)
    memo: dict[int, np.ndarray] = {}
    out = []
    for f in formulas:
        for g in subformulas(f):
            if id(g) in memo:
                continue
            if isinstance(g, Var):
                try:
                    memo[id(g)] = axes[g.name]
                except KeyError:
                    raise UnboundVariable(g.name) from None
            elif isinstance(g, Bot):
                memo[id(g)] = zero
            else:
                l, r = memo[id(g.left)], memo[id(g.right)]
                table = A.mult if isinstance(g, Conj) else (
                    A.meet if isinstance(g, Meet) else A.impl)
                memo[id(g)] = table[l, r]
        out.append(memo[id(f)])
    return out


def _axes(n: int, names: Sequence[str]) -> dict[str, np.ndarray]:
    k = len(names)
    axes = {}
    for i, name in enumerate(names):
        shape = [1] * k
        shape[i] = n
        axes[name] = np.arange(n).reshape(shape)
    return axes


def value_table(A: FiniteAlgebra, f: Formula,
                names: Optional[Sequence[str]] = None) -> np.ndarray:
    """Array of values of ``f`` over every assignment to ``names``."""
    require_verified(A, mtl=False)
    names = tuple(variables(f) if names is None else names)
    shape = (A.n,) * len(names)
    (t,) = _tables(A, [f], _axes(A.n, names))
    return np.broadcast_to(t, shape)


def cost(A: FiniteAlgebra, k: int) -> int:
    """Number of assignments a sweep over k variables visits."""
    return A.n ** k


def _sweep(A: FiniteAlgebra, formulas: Sequence[Formula], names: Sequence[str],
           budget: int) -> Iterator[tuple[tuple[int, ...], list[np.ndarray]]]:
    """Yield (fixed prefix, full-shape tables) chunks in lexicographic order."""
    require_verified(A, mtl=False)
    k = len(names)
    if cost(A, k) > budget:
        raise BudgetExceeded(
            f"{A.n}^{k} = {cost(A, k)} assignments exceed the budget of {budget}")
    fixed = 0
    while fixed < k and A.n ** (k - fixed) > _CHUNK:
        fixed += 1
    free = names[fixed:]
    shape = (A.n,) * len(free)
    free_axes = _axes(A.n, free)
    for prefix in itertools.product(range(A.n), repeat=fixed):
        axes = dict(free_axes)
        for name, val in zip(names, prefix):
            axes[name] = np.full((1,) * len(free), val, dtype=np.int64)
        tables = _tables(A, formulas, axes)
        yield prefix, [np.broadcast_to(t, shape) for t in tables]


def _witness(names, prefix, bad: np.ndarray) -> dict[str, int]:
    pos = np.unravel_index(int(np.flatnonzero(bad)[0]), bad.shape)
    values = tuple(prefix) + tuple(int(p) for p in pos)
    return dict(zip(names, values))


def is_tautology(A: FiniteAlgebra, f: Formula,
                 budget: int = DEFAULT_BUDGET) -> Check:
    """Does ``f`` take the top value under every assignment?

    The countermodel reported on failure is the lexicographically first.
    """
    names = variables(f)
    for prefix, (t,) in _sweep(A, [f], names, budget):
        bad = t != A.top
        if bad.any():
            return Check(False, _witness(names, prefix, bad))
    return Check(True)


def consequence(A: FiniteAlgebra, premises: Sequence[Formula], goal: Formula,
                budget: int = DEFAULT_BUDGET) -> Check:
    """Does every assignment that sends all premises to top send ``goal`` there?"""
    premises = tuple(premises)
    names = tuple(sorted({v for f in (*premises, goal) for v in variables(f)}))
    for prefix, tables in _sweep(A, [*premises, goal], names, budget):
        *prem, concl = tables
        designated = np.ones(concl.shape, dtype=bool)
        for t in prem:
            designated &= t == A.top
        bad = designated & (concl != A.top)
        if bad.any():
            return Check(False, _witness(names, prefix, bad))
    return Check(True)


def local_deduction_check(A: FiniteAlgebra, premises: Sequence[Formula],
                          psi: Formula, phi: Formula,
                          budget: int = DEFAULT_BUDGET) -> LDTResult:
    """Compare ``premises + [psi] |= phi`` with ``premises |= psi^n -> phi``.

    ``minimal_n`` is the least n <= |A| making the right-hand side hold on A,
    or None.  Powers stabilise within |A| steps on a finite chain, so the
    bound loses nothing there.
    """
    require_verified(A)
    if not A.chain:
        raise NotChain(f"{A.name or 'algebra'} is not a chain")
    premises = tuple(premises)
    left = consequence(A, premises + (psi,), phi, budget)
    for n in range(1, A.n + 1):
        if consequence(A, premises, Impl(power(psi, n), phi), budget):
            return LDTResult(left.holds, n, left.witness)
    return LDTResult(left.holds, None, left.witness)


def find_interpolant(A: FiniteAlgebra, phi: Formula, psi: Formula, depth: int,
                     n: int = 1, implicative: bool = False,
                     budget: int = DEFAULT_BUDGET) -> Optional[Formula]:
    """Search for gamma over the shared variables of phi and psi.

    With ``n == 1`` gamma must satisfy {phi} |= gamma and {gamma} |= psi on A.
    With ``n > 1`` the weak form is used: {phi^n} |= gamma and
    {gamma^n} |= psi.  ``implicative=True`` asks for the implications
    phi^n -> gamma and gamma^n -> psi to be tautologies instead.

    Candidates are built from the variables and 0 with &, /\\ and -> up to
    ``depth`` nested connectives and are deduplicated by their value table
    on A.  Returns None when nothing is found, which settles nothing beyond
    the searched depth.
    """
    require_verified(A, mtl=False)
    premise = power(phi, n)
    if implicative:
        valid = is_tautology(A, Impl(premise, psi), budget)
    else:
        valid = consequence(A, [premise], psi, budget)
    if not valid:
        raise PremiseNotValid(
            "the premise does not entail the conclusion on this algebra")
    names = tuple(sorted(set(variables(phi)) | set(variables(psi))))
    if cost(A, len(names)) > budget:
        raise BudgetExceeded(f"{cost(A, len(names))} assignments exceed the budget")
    shared = sorted(set(variables(phi)) & set(variables(psi)))
    axes = _axes(A.n, names)
    full = (A.n,) * len(names)
    p_tab, q_tab = _tables(A, [premise, psi], axes)
    p_top = np.broadcast_to(p_tab == A.top, full)
    q_top = np.broadcast_to(q_tab == A.top, full)
    top = A.top

    def interpolates(t: np.ndarray) -> bool:
        if implicative:
            if not (A.impl[p_tab, t] == top).all():
                return False
        elif not (~p_top | (t == top)).all():
            return False
        g = t
        for _ in range(n - 1):
            g = A.mult[g, t]
        if implicative:
            return bool((A.impl[g, q_tab] == top).all())
        return bool(((g != top) | q_top).all())

    seen: dict[bytes, Formula] = {}
    pool: list[tuple[Formula, np.ndarray]] = []
    cshape = tuple(A.n if nm in shared else 1 for nm in names)

    def offer(f: Formula, t: np.ndarray) -> bool:
        t = np.broadcast_to(t, cshape)
        key = t.tobytes()
        if key in seen:
            return False
        seen[key] = f
        pool.append((f, t))
        return interpolates(t)

    atoms = [(Var(v), axes[v]) for v in shared] + [(BOT, np.zeros((1,) * len(names), dtype=np.int64))]
    for f, t in atoms:
        if offer(f, t):
            return f
    frontier_start = 0
    for _ in range(depth):
        level_end = len(pool)
        for i in range(level_end):
            fi, ti = pool[i]
            for j in range(level_end):
                if i < frontier_start and j < frontier_start:
                    continue
                fj, tj = pool[j]
                for ctor, table in ((Conj, A.mult), (Meet, A.meet), (Impl, A.impl)):
                    if ctor is not Impl and j < i:
                        continue  # commutative: (i, j) already covers (j, i)
                    g = ctor(fi, fj)
                    if offer(g, table[ti, tj]):
                        return g
        frontier_start = level_end
    return None
