"""Acceptance gate: eleven criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py`` or directly with
``python3 tests/test_acceptance.py``.
"""

import itertools
import subprocess
import sys
import time

import pytest

from mtlkit.algebra import (
    boolean2, contractivity_index, goedel, is_chain, is_smtl, is_well_connected,
    lukasiewicz, smtl_witness,
)
from mtlkit.constructions import ordinal_sum, product
from mtlkit.enumeration import census, chain_tables, chains_upto, find_in_census, naive_chain_tables
from mtlkit.filters import is_subdirectly_irreducible
from mtlkit.formula import BOT, Impl, Var, axiom_schemata, instantiate, parse
from mtlkit.modeltheory import find_embeddings
from mtlkit.morphism import hom_violation
from mtlkit.scenarios import run_scenario
from mtlkit.semantics import consequence, evaluate, is_tautology


def _scenario(sid):
    vd = run_scenario(sid)
    return vd.passed, vd


def soundness_sweep():
    start = time.perf_counter()
    algebras = chains_upto(5) + [product(boolean2(), boolean2()),
                                 product(goedel(3), lukasiewicz(3))]
    names = (Var("x"), Var("y"))
    checked = failures = 0
    for _, template in axiom_schemata():
        for phi, psi, chi in itertools.product(names, repeat=3):
            f = instantiate(template, phi=phi, psi=psi, chi=chi)
            for A in algebras:
                checked += 1
                failures += not is_tautology(A, f)
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 60
    return ok, f"{checked} instances on {len(algebras)} algebras, {failures} failures, {elapsed:.2f}s"


def dp_failure():
    start = time.perf_counter()
    passed, _ = _scenario("dp_failure")
    A = product(boolean2(), boolean2())
    v = {"x": A.labels.index("<0,1>"), "y": A.labels.index("<1,0>")}
    top = evaluate(A, v, parse("(x -> y) \\/ (y -> x)")) == A.top
    below = all(evaluate(A, v, parse(t)) != A.top for t in ("x -> y", "y -> x"))
    elapsed = time.perf_counter() - start
    ok = passed and top and below and elapsed < 1
    return ok, f"disjunction at top: {top}, both disjuncts below top: {below}, {elapsed:.3f}s"


def lemma_meet_neg():
    passed, _ = _scenario("lemma_meet_neg")
    f = parse("(x /\\ ~x) -> (y \\/ ~y)")
    chains = chains_upto(5)
    corpus = chains + [product(boolean2(), boolean2()), product(goedel(3), lukasiewicz(3))]
    bad = [A.name for A in corpus if not is_tautology(A, f)]
    antitone = sum(1 for A in chains for x in A.elements for y in A.elements
                   if x <= y and A.neg(y) > A.neg(x))
    ok = passed and not bad and antitone == 0
    return ok, f"{len(corpus)} algebras, {len(bad)} countermodels, {antitone} antitone violations"


def wc_iff_chain():
    passed, _ = _scenario("wc_iff_chain")
    small = chains_upto(3)
    corpus = chains_upto(5) + [product(a, b) for a in small for b in small]
    bad = [A.name for A in corpus if is_chain(A) != is_well_connected(A)]
    return passed and not bad, f"{len(corpus)} algebras, {len(bad)} disagreements"


def filters_si():
    passed, _ = _scenario("osum_si")
    chains = chains_upto(5)
    non_si = [A.name for A in chains if not is_subdirectly_irreducible(A)[0]]
    b22_si = is_subdirectly_irreducible(product(boolean2(), boolean2()))[0]
    bad_osum = []
    for A in chains_upto(4):
        si, mono = is_subdirectly_irreducible(ordinal_sum(A, boolean2()))
        if not si or mono.elements != (A.top, A.top + 1):
            bad_osum.append(A.name)
    ok = passed and not non_si and not b22_si and not bad_osum
    return ok, (f"{len(chains)} chains SI: {not non_si}; 2x2 SI: {b22_si}; "
                f"A+2 monolith failures: {len(bad_osum)}")


GOLDEN = {2: 1, 3: 2, 4: 6, 5: 22}


def enumeration_cross_check():
    start = time.perf_counter()
    counts = {}
    for n in GOLDEN:
        gen = sorted(map(str, chain_tables(n)))
        naive = sorted(map(str, naive_chain_tables(n)))
        counts[n] = (len(gen), len(naive), gen == naive)
    elapsed = time.perf_counter() - start
    ok = all(g == o == GOLDEN[n] and same for n, (g, o, same) in counts.items()) and elapsed < 300
    shown = ", ".join(f"n={n}: {g}/{o}" for n, (g, o, _) in counts.items())
    return ok, f"generator/oracle {shown}, {elapsed:.2f}s"


def prp_scenarios():
    p1, _ = _scenario("prp_lukasiewicz")
    p2, vd2 = _scenario("prp_iff_smtl_instances")
    L3 = lukasiewicz(3)
    phi, psi = parse("x /\\ ~x"), parse("y \\/ ~y")
    facts = [bool(is_tautology(L3, Impl(phi, psi))), not is_tautology(L3, Impl(phi, BOT)),
             not is_tautology(L3, psi), bool(consequence(L3, [phi], psi)),
             bool(consequence(L3, [phi], BOT))]
    f = parse("~(x /\\ ~x)")
    chains = chains_upto(5)
    mismatch = sum(1 for A in chains if is_smtl(A) != bool(is_tautology(A, f)))
    non_smtl = sum(1 for A in chains if smtl_witness(A) is not None)
    witnessed = sum(1 for line in vd2.transcript if "zero divisor a=" in line)
    ok = p1 and p2 and all(facts) and mismatch == 0 and witnessed == non_smtl
    return ok, (f"{sum(facts)}/5 L3 facts, {mismatch} SMTL mismatches, "
                f"{witnessed}/{non_smtl} zero-divisor witnesses")


def contractivity():
    bad = []
    for k in range(2, 7):
        for A, want in ((goedel(k), 1), (lukasiewicz(k), k - 1)):
            i = find_in_census(A)
            got = None if i is None else census(k).meta[i].contractivity
            if got != want or contractivity_index(A) != want:
                bad.append(f"{A.name}={got}")
    return not bad, f"10 named chains located in census 2..6, mismatches: {bad or 'none'}"


def ldt_sweep():
    passed, vd = _scenario("ldt_sweep")
    agree = [line for line in vd.transcript if "200/200 judgments agree" in line]
    chains = chains_upto(4)
    ok = passed and len(agree) == len(chains)
    return ok, f"{len(agree)}/{len(chains)} chains with 200/200 agreeing judgments"


def embeddings():
    start = time.perf_counter()
    e1 = find_embeddings(lukasiewicz(3), lukasiewicz(5))
    e2 = find_embeddings(goedel(3), lukasiewicz(3))
    reverified = all(hom_violation(f.source, f.target, f.map) is None
                     and len(set(f.map)) == len(f.map) for f in e1)
    elapsed = time.perf_counter() - start
    ok = [f.map for f in e1] == [(0, 2, 4)] and e2 == [] and reverified and elapsed < 1
    return ok, f"L3->L5 {[list(f.map) for f in e1]}, G3->L3 {len(e2)} maps, {elapsed:.3f}s"


def determinism():
    cmd = [sys.executable, "-m", "mtlkit.cli", "scenario", "--all"]
    runs = [subprocess.run(cmd, capture_output=True) for _ in range(2)]
    same = runs[0].stdout == runs[1].stdout
    ok = same and all(r.returncode == 0 for r in runs) and runs[0].stdout
    return bool(ok), f"{len(runs[0].stdout)} bytes, identical: {same}"


CRITERIA = [
    (1, "soundness sweep", soundness_sweep),
    (2, "dp_failure", dp_failure),
    (3, "lemma_meet_neg", lemma_meet_neg),
    (4, "wc_iff_chain", wc_iff_chain),
    (5, "filters and SI", filters_si),
    (6, "enumeration cross-check", enumeration_cross_check),
    (7, "PRP scenarios", prp_scenarios),
    (8, "contractivity", contractivity),
    (9, "ldt_sweep", ldt_sweep),
    (10, "embedding engine", embeddings),
    (11, "determinism", determinism),
]


def _line(number, name, ok, detail):
    return f"criterion {number:2d} [{'PASS' if ok else 'FAIL'}] {name}: {detail}"


@pytest.mark.parametrize("number, name, check", CRITERIA, ids=[c[1] for c in CRITERIA])
def test_criterion(number, name, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(number, name, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for number, name, check in CRITERIA:
        ok, detail = check()
        results.append(ok)
        print(_line(number, name, ok, detail), flush=True)
    sys.exit(0 if all(results) else 1)
