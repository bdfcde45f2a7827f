"""Known relations between logical/algebraic properties of MTL extensions.

Edge kinds:

* ``implies``        - every extension with the first property has the second
* ``equivalent``     - stored once; holds in both directions
* ``does-not-imply`` - a counterexample is known (cited, not machine-checked)
* ``open``           - an unresolved question
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import UnknownProperty

__all__ = ["Edge", "PropertyGraph", "NODES", "default_graph"]

NODES = ("SCC", "SSCC", "subSCC", "HC", "DP", "DMVP", "CJEP", "PRP", "DPRP",
         "SDPRP", "AP", "DIP")

KINDS = ("implies", "equivalent", "does-not-imply", "open")


@dataclass(frozen=True)
class Edge:
    source: str
    target: str
    kind: str
    citation: str
    citation_only: bool = False

    def line(self) -> str:
        arrow = {"implies": "->", "equivalent": "<->", "does-not-imply": "-/->",
                 "open": "-?->"}[self.kind]
        tag = "\t[citation-only]" if self.citation_only else ""
        return f"{self.source} {arrow} {self.target}\t{self.kind}\t{self.citation}{tag}"


def _e(s, t, kind, cite):
    return Edge(s, t, kind, cite, citation_only=kind == "does-not-imply")


_EDGES = (
    _e("SCC", "HC", "equivalent", "HC is equivalent to SCC for every axiomatic extension of MTL"),
    _e("CJEP", "SSCC", "equivalent", "SSCC of a logic matches CJEP of its variety"),
    _e("DIP", "AP", "equivalent", "DIP of a logic matches AP of its variety"),
    _e("SDPRP", "DPRP", "equivalent", "congruence extension holds in all MTL varieties"),
    _e("DMVP", "HC", "implies", "DMVP implies HC"),
    _e("CJEP", "DMVP", "implies", "CJEP of the variety implies DMVP"),
    _e("DMVP", "SDPRP", "implies", "DMVP implies (S)DPRP"),
    _e("CJEP", "SDPRP", "implies", "CJEP implies SDPRP"),
    _e("AP", "SDPRP", "implies", "AP implies (S)DPRP via joint embeddability of SI algebras"),
    _e("PRP", "DPRP", "implies", "PRP implies DPRP for every axiomatic extension of MTL"),
    _e("SSCC", "SCC", "implies", "SSCC implies SCC"),
    _e("subSCC", "SCC", "implies", "subdirectly irreducible MTL-algebras are chains"),
    _e("DP", "HC", "implies", "HC is the variable-disjoint weakening of DP"),
    _e("SCC", "AP", "does-not-imply", "finite Goedel chains of order >= 4 generate counterexamples"),
    _e("AP", "SCC", "does-not-imply", "witnessed by the Goedel-product join variety"),
    _e("SDPRP", "AP", "does-not-imply", "finite Goedel chains of order >= 4 generate counterexamples"),
    _e("SDPRP", "DMVP", "does-not-imply", "otherwise AP would imply SCC"),
    _e("SDPRP", "CJEP", "does-not-imply", "witnessed by the Goedel-product join variety"),
    _e("DPRP", "PRP", "does-not-imply", "Lukasiewicz logic; Nilpotent Minimum logic behaves alike"),
    _e("SSCC", "PRP", "does-not-imply", "Lukasiewicz logic"),
    _e("PRP", "SSCC", "does-not-imply", "witnessed by the logic of the Goedel-product join"),
    _e("SCC", "subSCC", "open", "open problem: SCC without subSCC outside the n-contractive case"),
    _e("HC", "DMVP", "open", "open problem: HC without DMVP"),
    _e("DMVP", "CJEP", "open", "open problem: does DMVP imply CJEP"),
    _e("SCC", "SSCC", "open", "open problem: does SCC imply SSCC"),
)


class PropertyGraph:
    def __init__(self, edges: Iterable[Edge], nodes: Iterable[str] = NODES):
        self.nodes = tuple(nodes)
        self.edges = tuple(edges)
        for e in self.edges:
            self._check(e.source)
            self._check(e.target)
            if e.kind not in KINDS:
                raise ValueError(f"unknown edge kind {e.kind!r}")

    def _check(self, p: str) -> str:
        if p not in self.nodes:
            raise UnknownProperty(p)
        return p

    def direct(self, p: str, q: str) -> list[Edge]:
        """Stored edges running from p to q (equivalences in either direction)."""
        self._check(p)
        self._check(q)
        return [e for e in self.edges
                if (e.source, e.target) == (p, q)
                or (e.kind == "equivalent" and (e.source, e.target) == (q, p))]

    def between(self, p: str, q: str) -> list[Edge]:
        self._check(p)
        self._check(q)
        return [e for e in self.edges if {e.source, e.target} == {p, q}]

    def implication_closure(self) -> dict[str, set[str]]:
        """For each node, every node reachable along implies/equivalent edges."""
        succ = {p: set() for p in self.nodes}
        for e in self.edges:
            if e.kind in ("implies", "equivalent"):
                succ[e.source].add(e.target)
            if e.kind == "equivalent":
                succ[e.target].add(e.source)
        closure = {}
        for p in self.nodes:
            seen, stack = {p}, [p]
            while stack:
                for q in succ[stack.pop()]:
                    if q not in seen:
                        seen.add(q)
                        stack.append(q)
            closure[p] = seen
        return closure

    def relation(self, p: str, q: str) -> str:
        """Relation from p to q: a stored kind, ``implies (derived)`` or ``unknown``."""
        edges = self.direct(p, q)
        if edges:
            kinds = [e.kind for e in edges]
            for kind in ("equivalent", "implies", "does-not-imply", "open"):
                if kind in kinds:
                    return kind
        if q in self.implication_closure()[p]:
            back = p in self.implication_closure()[q]
            return "equivalent (derived)" if back else "implies (derived)"
        return "unknown"

    def inconsistencies(self) -> list[tuple[str, str]]:
        """does-not-imply edges contradicted by a chain of implications."""
        closure = self.implication_closure()
        return [(e.source, e.target) for e in self.edges
                if e.kind == "does-not-imply" and e.target in closure[e.source]]

    def open_edges(self) -> list[Edge]:
        return [e for e in self.edges if e.kind == "open"]


def default_graph() -> PropertyGraph:
    return PropertyGraph(_EDGES)
