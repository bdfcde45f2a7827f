"""Named, deterministic replications of concrete results about MTL.

Each scenario checks finitely many instances on explicit algebras and
returns a Verdict whose transcript lists what was checked.  A passing
verdict certifies those instances only.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from .algebra import (
    FiniteAlgebra, boolean2, contractivity_index, goedel, is_chain,
    is_well_connected, lukasiewicz, smtl_witness, well_connected_witness,
)
from .constructions import ordinal_sum, product
from .errors import UnknownScenario
from .filters import is_subdirectly_irreducible
from .formula import (
    BOT, Impl, parse, power, random_formula, show, variables,
)
from .semantics import (
    consequence, evaluate, find_interpolant, is_tautology, local_deduction_check,
)
from .enumeration import chains_upto

__all__ = ["Verdict", "Scenario", "SCENARIOS", "run_scenario", "run_all",
           "corpus_chains", "corpus_products"]

DISCLAIMER = "scope: certifies the finite instances listed above, not the variety-level theorem"


@dataclass
class Verdict:
    scenario: str
    passed: bool = True
    transcript: list[str] = field(default_factory=list)

    def fact(self, ok: bool, text: str) -> bool:
        self.transcript.append(f"[{'ok' if ok else 'FAIL'}] {text}")
        if not ok:
            self.passed = False
        return ok

    def note(self, text: str) -> None:
        self.transcript.append(f"  {text}")

    def render(self) -> str:
        head = f"== scenario {self.scenario}"
        tail = f"verdict: {'PASS' if self.passed else 'FAIL'}"
        return "\n".join([head, *self.transcript, DISCLAIMER, tail]) + "\n"


@dataclass(frozen=True)
class Scenario:
    id: str
    description: str
    source: str
    procedure: Callable[[Verdict], None]


def corpus_chains(max_order: int = 5) -> list[FiniteAlgebra]:
    return chains_upto(max_order)


def corpus_products() -> list[FiniteAlgebra]:
    return [product(boolean2(), boolean2()), product(goedel(3), lukasiewicz(3))]


def _fmt(v: Optional[dict]) -> str:
    if not v:
        return "-"
    return "{" + ", ".join(f"{k}={val}" for k, val in v.items()) + "}"


# ----------------------------------------------------------- scenarios

def _dp_failure(vd: Verdict) -> None:
    A = product(boolean2(), boolean2())
    v = {"x": A.labels.index("<0,1>"), "y": A.labels.index("<1,0>")}
    vd.note(f"algebra {A.name}, v(x)=<0,1>, v(y)=<1,0>")
    prelin = parse("(x -> y) \\/ (y -> x)")
    val = evaluate(A, v, prelin)
    vd.fact(val == A.top, f"v((x->y) \\/ (y->x)) = {A.label(val)} = top")
    for text in ("x -> y", "y -> x"):
        val = evaluate(A, v, parse(text))
        vd.fact(val != A.top and A.leq[val, A.top],
                f"v({text}) = {A.label(val)} < top")
    vd.fact(A.mtl, "2x2 passes every MTL law")
    vd.fact(not is_well_connected(A),
            f"2x2 is not well-connected, witness {well_connected_witness(A)}")


def _lemma_meet_neg(vd: Verdict) -> None:
    f = parse("(x /\\ ~x) -> (y \\/ ~y)")
    chains = corpus_chains(5)
    corpus = chains + corpus_products()
    failures = 0
    for A in corpus:
        res = is_tautology(A, f)
        if not res:
            failures += 1
            vd.fact(False, f"{A.name}: countermodel {_fmt(res.witness)}")
    vd.fact(failures == 0,
            f"(x /\\ ~x) -> (y \\/ ~y) is a tautology on all {len(corpus)} corpus algebras")
    bad_antitone = bad_order = 0
    for A in chains:
        neg = A.impl[:, 0]
        for x in A.elements:
            for y in A.elements:
                if x <= y and neg[y] > neg[x]:
                    bad_antitone += 1
                if min(x, neg[x]) > max(y, neg[y]):
                    bad_order += 1
    vd.fact(bad_antitone == 0, f"negation is antitone on all {len(chains)} chains")
    vd.fact(bad_order == 0,
            "no chain has elements x, y with min(x, ~x) > max(y, ~y)")


def _prp_lukasiewicz(vd: Verdict) -> None:
    A = lukasiewicz(3)
    phi, psi = parse("x /\\ ~x"), parse("y \\/ ~y")
    vd.note(f"algebra {A.name}; phi = x /\\ ~x, psi = y \\/ ~y (finite stand-in for the standard MV-algebra)")
    r = is_tautology(A, Impl(phi, psi))
    vd.fact(bool(r), "phi -> psi is a tautology")
    r = is_tautology(A, Impl(phi, BOT))
    vd.fact(not r, f"~phi is not a tautology, countermodel {_fmt(r.witness)}")
    r = is_tautology(A, psi)
    vd.fact(not r, f"psi is not a tautology, countermodel {_fmt(r.witness)}")
    vd.fact(bool(consequence(A, [phi], psi)), "phi |= psi")
    vd.fact(bool(consequence(A, [phi], BOT)), "phi |= 0")


def _prp_iff_smtl(vd: Verdict) -> None:
    f = parse("~(x /\\ ~x)")
    chains = corpus_chains(5)
    smtl_count = 0
    for A in chains:
        w = smtl_witness(A)
        taut = is_tautology(A, f)
        agree = (w is None) == taut.holds
        if w is None:
            smtl_count += 1
            if not agree:
                vd.fact(False, f"{A.name}: SMTL but ~(x /\\ ~x) fails at {_fmt(taut.witness)}")
        else:
            na = A.neg(w)
            ok = agree and w > 0 and na > 0
            vd.fact(ok, f"{A.name}: zero divisor a={w} with ~a={na} > 0; "
                        f"~(x /\\ ~x) fails at {_fmt(taut.witness)}")
    vd.fact(True, f"{smtl_count} of {len(chains)} chains are SMTL, all with ~(x /\\ ~x) valid")


def _osum_si(vd: Verdict) -> None:
    B = boolean2()
    chains = corpus_chains(4)
    for A in chains:
        S = ordinal_sum(A, B)
        si, mono = is_subdirectly_irreducible(S)
        expected = (A.top, A.top + 1)
        ok = si and mono is not None and mono.elements == expected
        got = list(mono.elements) if mono is not None else None
        vd.fact(ok, f"{A.name}+B2 is SI with monolith {got}")


def _wc_iff_chain(vd: Verdict) -> None:
    small = chains_upto(3)
    prods = [product(a, b) for a in small for b in small]
    corpus = corpus_chains(5) + prods
    bad = [A.name for A in corpus if is_chain(A) != is_well_connected(A)]
    vd.fact(not bad, f"well-connected iff chain on {len(corpus)} algebras "
                     f"({len(corpus) - len(prods)} chains, {len(prods)} products)")
    for name in bad:
        vd.fact(False, f"{name}: well-connectedness and chain flag disagree")
    non_wc = sum(1 for A in prods if not is_well_connected(A))
    vd.note(f"{non_wc} of {len(prods)} products are not well-connected")


LDT_PER_CHAIN = 200
LDT_VARS = ("x", "y", "z")


def _random_judgment(rng: random.Random):
    premises = [random_formula(rng, LDT_VARS, 4) for _ in range(rng.randint(0, 2))]
    return premises, random_formula(rng, LDT_VARS, 4), random_formula(rng, LDT_VARS, 4)


def _ldt_sweep(vd: Verdict) -> None:
    chains = corpus_chains(4)
    total = 0
    for A in chains:
        rng = random.Random(f"ldt:{A.name}")
        c = contractivity_index(A)
        agree = left = 0
        worst = 0
        global_ok = True
        for _ in range(LDT_PER_CHAIN):
            premises, psi, phi = _random_judgment(rng)
            r = local_deduction_check(A, premises, psi, phi)
            if r.agrees and (r.minimal_n is None or r.minimal_n <= A.n):
                agree += 1
            else:
                vd.fact(False, f"{A.name}: premises {[show(p) for p in premises]}, "
                               f"psi {show(psi)}, phi {show(phi)}: {r}")
            if r.holds_left:
                left += 1
                worst = max(worst, r.minimal_n or 0)
                if r.minimal_n is not None and r.minimal_n > c:
                    global_ok = False
        total += LDT_PER_CHAIN
        vd.fact(agree == LDT_PER_CHAIN and global_ok,
                f"{A.name}: {agree}/{LDT_PER_CHAIN} judgments agree "
                f"({left} entailed, max n = {worst}, contractivity {c})")
    vd.note(f"{total} judgments over {len(chains)} chains")


CRAIG_PAIRS = 20
CRAIG_ATTEMPTS = 4000


def _weak_craig(vd: Verdict) -> None:
    chains = [A for A in corpus_chains(4) if contractivity_index(A) <= 2]
    found_total = tried_total = 0
    for A in chains:
        rng = random.Random(f"craig:{A.name}")
        pairs = []
        for _ in range(CRAIG_ATTEMPTS):
            if len(pairs) == CRAIG_PAIRS:
                break
            phi = random_formula(rng, ("x", "y"), 3)
            psi = random_formula(rng, ("y", "z"), 3)
            # skip pairs that 0 or 1 interpolate trivially
            if is_tautology(A, psi) or is_tautology(A, Impl(power(phi, 2), BOT)):
                continue
            if is_tautology(A, Impl(power(phi, 2), psi)):
                pairs.append((phi, psi))
        found = 0
        for phi, psi in pairs:
            gamma = find_interpolant(A, phi, psi, depth=3, n=2, implicative=True)
            if gamma is None:
                continue
            shared = set(variables(phi)) & set(variables(psi))
            ok = (set(variables(gamma)) <= shared
                  and is_tautology(A, Impl(power(phi, 2), gamma)).holds
                  and is_tautology(A, Impl(power(gamma, 2), psi)).holds)
            if not ok:
                vd.fact(False, f"{A.name}: gamma {show(gamma)} fails re-verification")
            found += 1
        tried_total += len(pairs)
        found_total += found
        vd.fact(True, f"{A.name}: {len(pairs)} valid pairs, interpolant found for {found}, "
                      f"inconclusive {len(pairs) - found}")
    rate = found_total / tried_total if tried_total else 0.0
    vd.note(f"found-rate {found_total}/{tried_total} = {rate:.3f} over {len(chains)} 2-contractive chains")


SCENARIOS: dict[str, Scenario] = {
    s.id: s for s in (
        Scenario("dp_failure", "DP fails: prelinearity on 2x2 with neither disjunct valid",
                 "DP-failure proof", _dp_failure),
        Scenario("lemma_meet_neg", "(x /\\ ~x) -> (y \\/ ~y) on the corpus; antitone negation",
                 "Lemma: theorem of MTL", _lemma_meet_neg),
        Scenario("prp_lukasiewicz", "PRP fails for L3 while phi |= psi and phi |= 0",
                 "Counterexample for PRP", _prp_lukasiewicz),
        Scenario("prp_iff_smtl_instances", "SMTL iff ~(x /\\ ~x) valid, with zero divisors",
                 "PRP iff extension of SMTL", _prp_iff_smtl),
        Scenario("osum_si", "A + B2 is subdirectly irreducible for census chains of order <= 4",
                 "subSCC for non n-contractive logics", _osum_si),
        Scenario("wc_iff_chain", "well-connected iff chain on chains and products",
                 "Proposition: well-connected iff chain", _wc_iff_chain),
        Scenario("ldt_sweep", "local deduction theorem on random judgments",
                 "local deduction theorem", _ldt_sweep),
        Scenario("weak_craig", "weak Craig interpolants on 2-contractive chains",
                 "weak Craig interpolation theorem", _weak_craig),
    )
}


def run_scenario(scenario_id: str) -> Verdict:
    try:
        sc = SCENARIOS[scenario_id]
    except KeyError:
        raise UnknownScenario(scenario_id) from None
    vd = Verdict(sc.id)
    vd.note(f"{sc.description} [{sc.source}]")
    sc.procedure(vd)
    return vd


def run_all(parallel: bool = False) -> list[Verdict]:
    ids = list(SCENARIOS)
    if parallel:
        with ProcessPoolExecutor() as pool:
            return list(pool.map(run_scenario, ids))
    return [run_scenario(i) for i in ids]
