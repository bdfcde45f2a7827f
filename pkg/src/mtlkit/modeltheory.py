"""Embeddings, joint embeddings, amalgams and isomorphism of finite algebras.

Every search here runs over an explicit finite list of candidate targets, so
a negative answer means "none among these targets", never a statement about
a whole variety.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

from .algebra import FiniteAlgebra, require_verified
from .errors import InvalidSpan
from .morphism import Morphism, hom_violation, make_morphism

__all__ = [
    "AmalgamationSpan", "iter_embeddings", "find_embeddings",
    "find_joint_embedding", "find_amalgam", "are_isomorphic",
]


@dataclass(frozen=True)
class AmalgamationSpan:
    A: FiniteAlgebra
    B: FiniteAlgebra
    C: FiniteAlgebra
    i: Morphism
    j: Morphism

    @classmethod
    def build(cls, A, B, C, i_map: Sequence[int], j_map: Sequence[int]):
        i, j = make_morphism(A, B, i_map), make_morphism(A, C, j_map)
        for name, f in (("i", i), ("j", j)):
            if not (f.verified_hom and f.injective):
                why = hom_violation(f.source, f.target, f.map) or ("not injective",)
                raise InvalidSpan(f"{name} = {list(f.map)} is not an embedding: {why}")
        return cls(A, B, C, i, j)


def iter_embeddings(A: FiniteAlgebra, C: FiniteAlgebra,
                    fixed: Optional[dict[int, int]] = None) -> Iterator[tuple[int, ...]]:
    """Injective homomorphisms A -> C as maps, in lexicographic order.

    Source elements are assigned in ascending order.  After each assignment
    every operation is checked on the pairs defined so far, and the order
    must be reflected exactly (x <= y iff f(x) <= f(y)), which any injective
    lattice homomorphism satisfies.  ``fixed`` pins some images in advance.
    """
    require_verified(A, mtl=False)
    require_verified(C, mtl=False)
    if A.n > C.n:
        return
    n = A.n
    f = [-1] * n
    used = [False] * C.n
    tables = [(A.mult, C.mult), (A.impl, C.impl), (A.meet, C.meet), (A.join, C.join)]
    pins = {0: 0, A.top: C.top}
    for x, y in (fixed or {}).items():
        if pins.get(x, y) != y:
            return
        pins[x] = y

    def fits(x: int, y: int) -> bool:
        if used[y]:
            return False
        f[x] = y
        ok = True
        for z in range(n):
            fz = f[z]
            if fz < 0:
                continue
            if A.leq[x, z] != C.leq[y, fz] or A.leq[z, x] != C.leq[fz, y]:
                ok = False
                break
            for ta, tc in tables:
                for a, b in ((x, z), (z, x)):
                    image = tc[f[a], f[b]]
                    fr = f[ta[a, b]]
                    if fr >= 0:
                        if image != fr:
                            ok = False
                            break
                    elif image == y or used[image]:
                        # unassigned result would share an image: not injective
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            f[x] = -1
        return ok

    order = sorted(range(n), key=lambda x: (x not in pins, x))

    def extend(k: int) -> Iterator[tuple[int, ...]]:
        if k == n:
            yield tuple(f)
            return
        x = order[k]
        choices = [pins[x]] if x in pins else range(C.n)
        for y in choices:
            if fits(x, y):
                used[y] = True
                yield from extend(k + 1)
                used[y] = False
                f[x] = -1

    for emb in extend(0):
        if hom_violation(A, C, emb) is None and len(set(emb)) == n:
            yield emb


def find_embeddings(A: FiniteAlgebra, C: FiniteAlgebra) -> list[Morphism]:
    """All embeddings of A into C; an empty list means none exists."""
    return [make_morphism(A, C, emb) for emb in iter_embeddings(A, C)]


def _first_embedding(A, C) -> Optional[Morphism]:
    emb = next(iter_embeddings(A, C), None)
    return None if emb is None else make_morphism(A, C, emb)


def _joint_in(args):
    A, B, C = args
    f = _first_embedding(A, C)
    if f is None:
        return None
    g = _first_embedding(B, C)
    return None if g is None else (f.map, g.map)


def find_joint_embedding(A: FiniteAlgebra, B: FiniteAlgebra,
                         targets: Sequence[FiniteAlgebra],
                         parallel: bool = False
                         ) -> Optional[tuple[FiniteAlgebra, Morphism, Morphism]]:
    """First target (in list order) into which both A and B embed."""
    for X in (A, B, *targets):
        require_verified(X, mtl=False)
    jobs = [(A, B, C) for C in targets]
    if parallel and len(jobs) > 1:
        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_joint_in, jobs))
    else:
        results = (_joint_in(job) for job in jobs)
    for C, res in zip(targets, results):
        if res is not None:
            return C, make_morphism(A, C, res[0]), make_morphism(B, C, res[1])
    return None


def find_amalgam(span: AmalgamationSpan, targets: Sequence[FiniteAlgebra]
                 ) -> Optional[tuple[FiniteAlgebra, Morphism, Morphism]]:
    """First target D with embeddings h: B -> D, k: C -> D and h.i = k.j on A."""
    for f in (span.i, span.j):
        if not (f.verified_hom and f.injective):
            raise InvalidSpan("span maps must be embeddings")
    A = span.A
    for D in targets:
        require_verified(D, mtl=False)
        for h in iter_embeddings(span.B, D):
            # h.i fixes the image of i(A) inside D, so pin k on j(A)
            pins = {span.j.map[a]: h[span.i.map[a]] for a in A.elements}
            for k in iter_embeddings(span.C, D, fixed=pins):
                if all(h[span.i.map[a]] == k[span.j.map[a]] for a in A.elements):
                    return D, make_morphism(span.B, D, h), make_morphism(span.C, D, k)
    return None


def are_isomorphic(A: FiniteAlgebra, B: FiniteAlgebra) -> tuple[bool, Optional[Morphism]]:
    require_verified(A, mtl=False)
    require_verified(B, mtl=False)
    if A.n != B.n:
        return False, None
    if A.chain and B.chain:
        # the order forces the identity as the only candidate bijection
        if np.array_equal(A.mult, B.mult):
            return True, make_morphism(A, B, range(A.n))
        return False, None
    f = _first_embedding(A, B)
    return (f is not None), f
