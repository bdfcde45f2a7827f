"""Maps between algebra carriers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .algebra import FiniteAlgebra

__all__ = ["Morphism", "hom_violation", "make_morphism", "compose"]

OPERATIONS = ("mult", "impl", "meet", "join")


@dataclass(frozen=True, eq=False)
class Morphism:
    source: FiniteAlgebra
    target: FiniteAlgebra
    map: tuple[int, ...]
    verified_hom: bool = False
    injective: bool = False

    def __call__(self, x: int) -> int:
        return self.map[x]

    def __repr__(self):
        kind = "embedding" if self.verified_hom and self.injective else (
            "hom" if self.verified_hom else "map")
        return (f"Morphism({self.source.name or '?'} -> {self.target.name or '?'}, "
                f"{list(self.map)}, {kind})")


def hom_violation(A: FiniteAlgebra, B: FiniteAlgebra,
                  f: Sequence[int]) -> Optional[tuple]:
    """First reason ``f`` fails to be a homomorphism A -> B, else None.

    Checks both constants and all four binary operations on every pair;
    this is deliberately independent of any search that produced ``f``.
    """
    if len(f) != A.n:
        return ("length", len(f), A.n)
    fa = np.asarray(f, dtype=np.int64)
    if fa.min() < 0 or fa.max() >= B.n:
        return ("range",)
    if fa[0] != 0:
        return ("bottom", int(fa[0]))
    if fa[A.top] != B.top:
        return ("top", int(fa[A.top]))
    for op in OPERATIONS:
        lhs = fa[getattr(A, op)]
        rhs = getattr(B, op)[fa[:, None], fa[None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            x, y = (int(v) for v in bad[0])
            return (op, x, y)
    return None


def make_morphism(A: FiniteAlgebra, B: FiniteAlgebra,
                  f: Sequence[int]) -> Morphism:
    f = tuple(int(v) for v in f)
    return Morphism(
        A, B, f,
        verified_hom=hom_violation(A, B, f) is None,
        injective=len(set(f)) == len(f),
    )


def compose(g: Morphism, f: Morphism) -> Morphism:
    """``g o f``, re-verified from scratch."""
    if f.target is not g.source and not f.target.same_tables(g.source):
        raise ValueError("morphisms are not composable")
    return make_morphism(f.source, g.target, [g.map[x] for x in f.map])
