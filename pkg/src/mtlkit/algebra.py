"""Finite FL_ew- and MTL-algebras.

Elements are the integers ``0..n-1`` with 0 the bottom and ``n-1`` the top.
An algebra is given by its order matrix and its monoid table; the lattice
operations and the residuum are always derived from those two.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

import numpy as np

from .errors import (
    BadSize, DimensionMismatch, NotResiduated, Unverified, VerificationFailed,
)

__all__ = [
    "FiniteAlgebra", "Law", "AlgebraReport", "make_algebra", "residuate",
    "check_axioms", "verify", "require_verified", "chain_order",
    "is_chain", "is_well_connected", "well_connected_witness",
    "is_n_contractive", "contractivity_index", "is_smtl", "smtl_witness",
    "is_involutive", "powers", "negation",
    "boolean2", "lukasiewicz", "goedel", "nilpotent_minimum", "trivial",
    "heyting_diamond_with_top",
]


@dataclass(frozen=True, eq=False)
class FiniteAlgebra:
    n: int
    leq: np.ndarray
    mult: np.ndarray
    meet: Optional[np.ndarray] = None
    join: Optional[np.ndarray] = None
    impl: Optional[np.ndarray] = None
    name: str = ""
    verified: bool = False
    mtl: bool = False
    chain: bool = False
    labels: Optional[tuple[str, ...]] = None
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def top(self) -> int:
        return self.n - 1

    @property
    def elements(self) -> range:
        return range(self.n)

    def key(self) -> tuple:
        """Hashable identity of the tables (ignores name and labels)."""
        return (self.n, self.leq.tobytes(), self.mult.tobytes())

    def same_tables(self, other: "FiniteAlgebra") -> bool:
        return self.key() == other.key()

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def neg(self, x: int) -> int:
        return int(self.impl[x, 0])

    def __repr__(self):
        flags = [f for f in ("verified", "mtl", "chain") if getattr(self, f)]
        return f"FiniteAlgebra({self.name or '?'}, n={self.n}, {'/'.join(flags) or 'raw'})"


@dataclass(frozen=True)
class Law:
    name: str
    holds: bool
    witness: Optional[tuple] = None


@dataclass(frozen=True)
class AlgebraReport:
    laws: tuple[Law, ...]

    FL_EW = (
        "partial_order", "bounds", "lattice", "commutative", "associative",
        "identity", "zero", "monotone", "residuation",
    )

    def __getitem__(self, name: str) -> Law:
        for law in self.laws:
            if law.name == name:
                return law
        raise KeyError(name)

    @property
    def fl_ew(self) -> bool:
        return all(self[name].holds for name in self.FL_EW)

    @property
    def mtl(self) -> bool:
        return self.fl_ew and self["prelinearity"].holds

    @property
    def ok(self) -> bool:
        return all(law.holds for law in self.laws)

    def lines(self) -> list[str]:
        out = []
        for law in self.laws:
            status = "ok" if law.holds else f"FAILS witness={law.witness}"
            out.append(f"{law.name}\t{status}")
        return out


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=np.int64)
    arr.setflags(write=False)
    return arr


def chain_order(n: int) -> np.ndarray:
    idx = np.arange(n)
    return idx[:, None] <= idx[None, :]


def _bound_table(leq: np.ndarray, upper: bool):
    """Supremum (upper) or infimum table, or the first pair lacking one."""
    n = leq.shape[0]
    table = np.zeros((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(x, n):
            if upper:
                cands = np.flatnonzero(leq[x] & leq[y])
                best = [c for c in cands if leq[c, cands].all()]
            else:
                cands = np.flatnonzero(leq[:, x] & leq[:, y])
                best = [c for c in cands if leq[cands, c].all()]
            if not best:
                return None, (x, y)
            table[x, y] = table[y, x] = best[0]
    return table, None


def residuate(mult: np.ndarray, leq: np.ndarray) -> np.ndarray:
    """Residuum table: ``impl[x, y]`` is the largest z with ``mult[z, x] <= y``.

    Raises NotResiduated for the first pair (x, y) whose witness set has no
    maximum.
    """
    mult = np.asarray(mult)
    leq = np.asarray(leq, dtype=bool)
    n = mult.shape[0]
    impl = np.zeros((n, n), dtype=np.int64)
    for x in range(n):
        # below[z, y] : mult(z, x) <= y
        below = leq[mult[:, x], :]
        for y in range(n):
            zs = np.flatnonzero(below[:, y])
            top = [z for z in zs if leq[zs, z].all()]
            if not top:
                raise NotResiduated(x, y)
            impl[x, y] = top[0]
    return _frozen(impl)


def _chain_residuum(mult: np.ndarray) -> Optional[np.ndarray]:
    # on index order: impl[x, y] = max{z : mult[z, x] <= y}
    n = mult.shape[0]
    idx = np.arange(n)
    ok = mult[:, :, None] <= idx[None, None, :]          # [z, x, y]
    impl = (ok * (idx + 1)[:, None, None]).max(axis=0) - 1
    if (impl < 0).any():
        return None
    return _frozen(impl)


def make_algebra(
    mult: Sequence[Sequence[int]],
    leq: Optional[Sequence[Sequence[bool]]] = None,
    name: str = "",
    labels: Optional[Sequence[str]] = None,
    check: bool = True,
) -> FiniteAlgebra:
    """Build an algebra from its monoid table and (optional) order matrix.

    Without ``leq`` the carrier is the chain ``0 < 1 < ... < n-1``.  With
    ``check`` (the default) the result is verified and VerificationFailed is
    raised when an FL_ew law fails; pass ``check=False`` to keep an
    unverified algebra around for inspection.
    """
    mult_arr = np.asarray(mult, dtype=np.int64)
    if mult_arr.ndim != 2 or mult_arr.shape[0] != mult_arr.shape[1]:
        raise DimensionMismatch(f"mult table has shape {mult_arr.shape}")
    n = mult_arr.shape[0]
    if n < 1:
        raise BadSize("an algebra needs at least one element")
    if leq is None:
        leq_arr = chain_order(n)
    else:
        leq_arr = np.asarray(leq, dtype=bool)
        if leq_arr.shape != (n, n):
            raise DimensionMismatch(
                f"leq has shape {leq_arr.shape}, mult has {mult_arr.shape}"
            )
    if mult_arr.min() < 0 or mult_arr.max() >= n:
        raise DimensionMismatch("mult table entries out of range")
    if labels is not None and len(labels) != n:
        raise DimensionMismatch("labels do not match the carrier size")
    leq_arr = leq_arr.copy()
    leq_arr.setflags(write=False)
    if leq is None:
        idx = np.arange(n)
        meet = np.minimum.outer(idx, idx)
        join = np.maximum.outer(idx, idx)
        impl = _chain_residuum(mult_arr)
    else:
        meet, _ = _bound_table(leq_arr, upper=False)
        join, _ = _bound_table(leq_arr, upper=True)
        try:
            impl = residuate(mult_arr, leq_arr)
        except NotResiduated:
            impl = None
    alg = FiniteAlgebra(
        n=n,
        leq=leq_arr,
        mult=_frozen(mult_arr),
        meet=None if meet is None else _frozen(meet),
        join=None if join is None else _frozen(join),
        impl=impl,
        name=name,
        labels=None if labels is None else tuple(labels),
    )
    return verify(alg) if check else alg


def _first(mask: np.ndarray):
    hits = np.argwhere(mask)
    return tuple(int(v) for v in hits[0]) if len(hits) else None


def check_axioms(A: FiniteAlgebra) -> AlgebraReport:
    """Check every FL_ew law and prelinearity, with a witness per failure."""
    n = A.n
    if A.leq.shape != (n, n) or A.mult.shape != (n, n):
        raise DimensionMismatch("tables do not match the carrier size")
    leq, m = A.leq, A.mult
    laws = []

    def law(name, bad):
        w = _first(bad) if isinstance(bad, np.ndarray) else bad
        laws.append(Law(name, w is None, w))

    idx = np.arange(n)
    refl = ~leq[idx, idx]
    antisym = leq & leq.T & (idx[:, None] != idx[None, :])
    trans = leq[:, :, None] & leq[None, :, :] & ~leq[:, None, :]
    po_bad = _first(refl)
    po_bad = (po_bad[0], po_bad[0]) if po_bad else _first(antisym) or _first(trans)
    law("partial_order", po_bad)

    bad_bounds = None
    if not leq[0].all():
        bad_bounds = ("bottom", int(np.flatnonzero(~leq[0])[0]))
    elif not leq[:, n - 1].all():
        bad_bounds = ("top", int(np.flatnonzero(~leq[:, n - 1])[0]))
    law("bounds", bad_bounds)

    _, missing_meet = _bound_table(leq, upper=False)
    _, missing_join = _bound_table(leq, upper=True)
    law("lattice", missing_meet or missing_join)
    lattice_ok = missing_meet is None and missing_join is None

    law("commutative", m != m.T)
    assoc = m[m[:, :, None], idx[None, None, :]] != m[idx[:, None, None], m[None, :, :]]
    law("associative", assoc)
    law("identity", (m[n - 1] != idx) | (m[:, n - 1] != idx))
    law("zero", (m[0] != 0) | (m[:, 0] != 0))
    # x <= y  implies  x*z <= y*z
    mono = leq[:, :, None] & ~leq[m[:, None, :], m[None, :, :]]
    law("monotone", mono)

    # z*x <= y  iff  z <= x => y, checked against the stored residuum
    if A.impl is None:
        try:
            residuate(m, leq)
            witness = ("missing residuum table",)
        except NotResiduated as exc:
            witness = exc.pair
        law("residuation", witness)
        res_ok = False
    else:
        imp = A.impl
        lhs = leq[m[:, :, None], idx[None, None, :]]          # [z, x, y]
        rhs = leq[idx[:, None, None], imp[None, :, :]]         # [z, x, y]
        law("residuation", lhs != rhs)
        res_ok = not (lhs != rhs).any()

    if lattice_ok and res_ok and A.join is not None:
        pre = A.join[A.impl, A.impl.T] != n - 1
        law("prelinearity", pre)
    else:
        law("prelinearity", ("requires lattice and residuum",))
    return AlgebraReport(tuple(laws))


def verify(A: FiniteAlgebra) -> FiniteAlgebra:
    """Return a copy of ``A`` flagged verified, or raise VerificationFailed."""
    report = check_axioms(A)
    if not report.fl_ew:
        raise VerificationFailed(report)
    total = bool((A.leq | A.leq.T).all())
    return replace(A, verified=True, mtl=report.mtl, chain=total)


def require_verified(A: FiniteAlgebra, mtl: bool = True) -> None:
    if not A.verified:
        raise Unverified(f"{A!r} has not been verified")
    if mtl and not A.mtl:
        raise Unverified(f"{A!r} is not an MTL-algebra")


# ----------------------------------------------------------- predicates

def is_chain(A: FiniteAlgebra) -> bool:
    require_verified(A, mtl=False)
    return A.chain


def well_connected_witness(A: FiniteAlgebra) -> Optional[tuple[int, int]]:
    """First pair x, y below the top whose join is the top, if any."""
    require_verified(A, mtl=False)
    t = A.top
    for x in range(A.n - 1):
        for y in range(x, A.n - 1):
            if A.join[x, y] == t:
                return (x, y)
    return None


def is_well_connected(A: FiniteAlgebra) -> bool:
    return well_connected_witness(A) is None


def powers(A: FiniteAlgebra, x: int, k: int) -> list[int]:
    """``[x^1, x^2, ..., x^k]``."""
    out = [x]
    for _ in range(k - 1):
        out.append(int(A.mult[out[-1], x]))
    return out


def is_n_contractive(A: FiniteAlgebra, n: int) -> bool:
    require_verified(A)
    if n < 1:
        raise ValueError("n must be a positive integer")
    for x in A.elements:
        p = powers(A, x, n + 1)
        if p[n - 1] != p[n]:
            return False
    return True


def contractivity_index(A: FiniteAlgebra) -> int:
    """Least n with x^n = x^(n+1) for every element."""
    require_verified(A)
    worst = 1
    for x in A.elements:
        p = powers(A, x, A.n + 1)
        k = next(i for i in range(1, A.n + 1) if p[i - 1] == p[i])
        worst = max(worst, k)
    return worst


def negation(A: FiniteAlgebra) -> np.ndarray:
    return A.impl[:, 0]


def smtl_witness(A: FiniteAlgebra) -> Optional[int]:
    """First element x with x /\\ ~x above 0 (a zero divisor), if any."""
    require_verified(A)
    neg = negation(A)
    for x in A.elements:
        if A.meet[x, neg[x]] != 0:
            return x
    return None


def is_smtl(A: FiniteAlgebra) -> bool:
    return smtl_witness(A) is None


def is_involutive(A: FiniteAlgebra) -> bool:
    require_verified(A)
    neg = negation(A)
    return bool((neg[neg] == np.arange(A.n)).all())


# ------------------------------------------------------------- builders

def _chain_from(k: int, rule, name: str) -> FiniteAlgebra:
    if k < 2:
        raise BadSize(f"{name} needs at least 2 elements, got {k}")
    table = [[rule(x, y) for y in range(k)] for x in range(k)]
    return make_algebra(table, name=name)


def lukasiewicz(k: int) -> FiniteAlgebra:
    return _chain_from(k, lambda x, y: max(0, x + y - (k - 1)), f"L{k}")


def goedel(k: int) -> FiniteAlgebra:
    return _chain_from(k, min, f"G{k}")


def nilpotent_minimum(k: int) -> FiniteAlgebra:
    return _chain_from(
        k, lambda x, y: 0 if x + y <= k - 1 else min(x, y), f"NM{k}"
    )


def boolean2() -> FiniteAlgebra:
    return replace(lukasiewicz(2), name="B2")


def trivial() -> FiniteAlgebra:
    """The one-element algebra, where 0 and 1 coincide."""
    return make_algebra([[0]], name="T1")


def heyting_diamond_with_top() -> FiniteAlgebra:
    """The Heyting algebra 2x2 with a new top: FL_ew but not prelinear.

    Elements: 0 bottom, 1 and 2 incomparable atoms, 3 their join, 4 top.
    """
    leq = np.zeros((5, 5), dtype=bool)
    for a, b in [(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (2, 3), (1, 4),
                 (2, 4), (3, 4)]:
        leq[a, b] = True
    np.fill_diagonal(leq, True)
    meet, _ = _bound_table(leq, upper=False)
    return make_algebra(meet, leq=leq, name="HD5")
