"""Direct products, ordinal sums, generated subalgebras and quotients."""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .algebra import FiniteAlgebra, make_algebra, require_verified
from .errors import NotAFilter, NotChain, VerificationFailed
from .filters import Filter, congruence_of, is_filter
from .morphism import Morphism, make_morphism

__all__ = ["product", "ordinal_sum", "subalgebra_generated", "quotient"]


def product(A: FiniteAlgebra, B: FiniteAlgebra) -> FiniteAlgebra:
    """Direct product; pair (a, b) gets index ``a * |B| + b``."""
    require_verified(A, mtl=False)
    require_verified(B, mtl=False)
    n, m = A.n, B.n
    a = np.repeat(np.arange(n), m)
    b = np.tile(np.arange(m), n)
    mult = A.mult[a[:, None], a[None, :]] * m + B.mult[b[:, None], b[None, :]]
    leq = A.leq[a[:, None], a[None, :]] & B.leq[b[:, None], b[None, :]]
    labels = [f"<{A.label(i)},{B.label(j)}>" for i, j in zip(a, b)]
    name = f"{A.name or 'A'}x{B.name or 'B'}"
    return make_algebra(mult, leq=leq, name=name, labels=labels)


def ordinal_sum(A: FiniteAlgebra, B: FiniteAlgebra) -> FiniteAlgebra:
    """Stack chain B on top of chain A, gluing A's top to B's bottom.

    Within each summand the product is the summand's own; across summands it
    is the smaller element.
    """
    for X in (A, B):
        require_verified(X)
        if not X.chain:
            raise NotChain(f"{X.name or 'argument'} is not a chain")
    shift = A.n - 1
    n = A.n + B.n - 1
    mult = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(n):
            if x <= shift and y <= shift:
                mult[x, y] = A.mult[x, y]
            elif x >= shift and y >= shift:
                mult[x, y] = B.mult[x - shift, y - shift] + shift
            else:
                mult[x, y] = min(x, y)
    name = f"{A.name or 'A'}+{B.name or 'B'}"
    try:
        return make_algebra(mult, name=name)
    except VerificationFailed as exc:
        raise VerificationFailed(exc.report, f"ordinal sum {name} failed verification") from exc


def subalgebra_generated(A: FiniteAlgebra,
                         gens: Iterable[int]) -> tuple[FiniteAlgebra, Morphism]:
    """Least subuniverse containing ``gens`` plus the inclusion map."""
    require_verified(A, mtl=False)
    s = {0, A.top, *(int(g) for g in gens)}
    tables = (A.mult, A.impl, A.meet, A.join)
    while True:
        new = set()
        for x in s:
            for y in s:
                for t in tables:
                    v = int(t[x, y])
                    if v not in s:
                        new.add(v)
        if not new:
            break
        s |= new
    members = sorted(s)
    pos = {x: i for i, x in enumerate(members)}
    idx = np.array(members)
    mult = [[pos[int(A.mult[x, y])] for y in members] for x in members]
    leq = A.leq[idx[:, None], idx[None, :]]
    labels = [A.label(x) for x in members] if A.labels else None
    name = f"Sg({A.name or 'A'};{','.join(str(g) for g in sorted(set(gens)))})"
    sub = make_algebra(mult, leq=None if A.chain else leq, name=name, labels=labels)
    return sub, make_morphism(sub, A, members)


def quotient(A: FiniteAlgebra, F: Filter) -> tuple[FiniteAlgebra, Morphism]:
    """A/F with classes represented by their least element, plus the projection."""
    require_verified(A, mtl=False)
    if F.algebra is not A and not F.algebra.same_tables(A):
        raise NotAFilter("filter belongs to a different algebra")
    if not is_filter(A, F.elements):
        raise NotAFilter(f"{list(F.elements)} is not a filter")
    cls = congruence_of(F)
    reps = {}
    for x in A.elements:
        reps.setdefault(cls[x], x)
    top_cls = cls[A.top]
    ordered = sorted(reps, key=lambda c: (c == top_cls, reps[c]))
    new_index = {c: i for i, c in enumerate(ordered)}
    proj = [new_index[cls[x]] for x in A.elements]
    rep = [reps[c] for c in ordered]
    k = len(rep)
    mult = [[proj[int(A.mult[rep[i], rep[j]])] for j in range(k)] for i in range(k)]
    # [x] <= [y]  iff  x => y lies in F
    leq = [[int(A.impl[rep[i], rep[j]]) in F for j in range(k)] for i in range(k)]
    labels = [A.label(r) for r in rep] if A.labels else None
    name = f"{A.name or 'A'}/F{list(F.elements)}".replace(" ", "")
    Q = make_algebra(mult, leq=None if A.chain else leq, name=name, labels=labels)
    return Q, make_morphism(A, Q, proj)
