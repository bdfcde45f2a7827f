"""Reading and writing algebra files, census directories and span files.

Algebra file (``.alg``)::

    mtl-algebra v1
    name: L3
    size: 3
    kind: chain
    mult:
    0 0 0
    0 0 1
    0 1 2

``kind: poset`` files add a ``leq:`` block of n rows of n bits before
``mult:``.  An ``impl:`` block is accepted as a cross-check against the
derived residuum.  A ``# elements:`` comment names the elements.  ``meta:`` lines carry ``key=value`` pairs; ``#`` starts a
comment.
"""

from __future__ import annotations

import csv
import re
from dataclasses import replace
from pathlib import Path
from typing import Optional, Union

import numpy as np

from .algebra import (
    FiniteAlgebra, boolean2, goedel, lukasiewicz, make_algebra, nilpotent_minimum,
    trivial,
)
from .enumeration import ChainCensus
from .errors import FormatError
from .modeltheory import AmalgamationSpan

__all__ = [
    "dumps", "loads", "save", "load", "list_catalog", "builtin",
    "resolve", "write_census", "read_census_tsv", "load_span", "dumps_span",
]

HEADER = "mtl-algebra v1"
SPAN_HEADER = "mtl-span v1"
LABELS = "# elements:"  # comment line that also carries element labels
TSV_COLUMNS = ("id", "contractivity", "smtl", "involutive", "simple")

PathLike = Union[str, Path]


def dumps(A: FiniteAlgebra) -> str:
    lines = [HEADER]
    if A.name:
        lines.append(f"name: {A.name}")
    lines.append(f"size: {A.n}")
    lines.append(f"kind: {'chain' if A.chain else 'poset'}")
    if A.labels:
        lines.append(LABELS + " " + " ".join(A.labels))
    if A.meta:
        lines.append("meta: " + " ".join(f"{k}={v}" for k, v in A.meta.items()))
    if not A.chain:
        lines.append("leq:")
        lines.extend(" ".join("1" if b else "0" for b in row) for row in A.leq)
    lines.append("mult:")
    lines.extend(" ".join(str(int(v)) for v in row) for row in A.mult)
    return "\n".join(lines) + "\n"


def _rows(lines, start, n, what, bits=False):
    rows = []
    for k in range(n):
        if start + k >= len(lines):
            raise FormatError(f"{what}: expected {n} rows, found {k}")
        lineno, text = lines[start + k]
        if bits and re.fullmatch(r"[01]+", text):
            row = [int(c) for c in text]
        else:
            try:
                row = [int(tok) for tok in text.split()]
            except ValueError:
                raise FormatError(f"line {lineno}: bad {what} row {text!r}") from None
        if len(row) != n:
            raise FormatError(f"line {lineno}: {what} row has {len(row)} entries, expected {n}")
        rows.append(row)
    return rows


def loads(text: str, check: bool = True) -> FiniteAlgebra:
    """Parse an algebra file; the result is verified unless ``check=False``."""
    lines = []
    labels = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        if raw.startswith(LABELS):
            labels = raw[len(LABELS):].split()
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if not lines or lines[0][1] != HEADER:
        raise FormatError(f"missing header {HEADER!r}")
    fields: dict[str, str] = {}
    blocks: dict[str, list[list[int]]] = {}
    meta: dict[str, str] = {}
    i = 1
    n = None
    while i < len(lines):
        lineno, body = lines[i]
        key, sep, value = body.partition(":")
        key, value = key.strip(), value.strip()
        if not sep:
            raise FormatError(f"line {lineno}: expected 'key: value', got {body!r}")
        if key in ("leq", "mult", "impl"):
            if n is None:
                raise FormatError(f"line {lineno}: 'size' must precede the {key} block")
            if key in blocks:
                raise FormatError(f"line {lineno}: duplicate {key} block")
            blocks[key] = _rows(lines, i + 1, n, key, bits=key == "leq")
            i += n + 1
            continue
        if key == "meta":
            for item in value.split():
                k, eq, v = item.partition("=")
                if not eq:
                    raise FormatError(f"line {lineno}: bad meta item {item!r}")
                meta[k] = v
        elif key in ("name", "size", "kind"):
            if key in fields:
                raise FormatError(f"line {lineno}: duplicate {key}")
            fields[key] = value
            if key == "size":
                try:
                    n = int(value)
                except ValueError:
                    raise FormatError(f"line {lineno}: bad size {value!r}") from None
                if n < 1:
                    raise FormatError(f"line {lineno}: size must be positive")
        else:
            raise FormatError(f"line {lineno}: unknown key {key!r}")
        i += 1
    for key in ("size", "kind"):
        if key not in fields:
            raise FormatError(f"missing {key!r}")
    kind = fields["kind"]
    if kind not in ("chain", "poset"):
        raise FormatError(f"kind must be 'chain' or 'poset', got {kind!r}")
    if "mult" not in blocks:
        raise FormatError("missing mult block")
    if kind == "poset" and "leq" not in blocks:
        raise FormatError("poset algebras need a leq block")
    if kind == "chain" and "leq" in blocks:
        raise FormatError("chain algebras must not carry a leq block")
    if labels is not None and len(labels) != n:
        raise FormatError(f"{len(labels)} element labels for size {n}")
    A = make_algebra(blocks["mult"], leq=blocks.get("leq"), name=fields.get("name", ""),
                     labels=labels, check=check)
    if kind == "chain" and check and not A.chain:
        raise FormatError("kind is chain but the order is not total")
    if "impl" in blocks:
        given = np.asarray(blocks["impl"])
        if A.impl is None or not np.array_equal(given, A.impl):
            raise FormatError("impl block does not match the derived residuum")
    if meta:
        A = replace(A, meta=meta)
    return A


def save(A: FiniteAlgebra, path: PathLike) -> Path:
    path = Path(path)
    path.write_text(dumps(A))
    return path


def load(path: PathLike, check: bool = True) -> FiniteAlgebra:
    path = Path(path)
    A = loads(path.read_text(), check=check)
    if not A.name:
        A = replace(A, name=path.stem)
    return A


def list_catalog(directory: PathLike) -> list[tuple[Path, FiniteAlgebra]]:
    """Every ``.alg`` file in ``directory`` with its loaded algebra, by name."""
    return [(p, load(p)) for p in sorted(Path(directory).glob("*.alg"))]


_BUILTIN = re.compile(r"(?i)(B2|T1|L|G|NM)(\d*)")


def builtin(name: str) -> Optional[FiniteAlgebra]:
    """``B2``, ``T1``, ``L<k>``, ``G<k>`` or ``NM<k>``; None for other names."""
    m = _BUILTIN.fullmatch(name.strip())
    if not m:
        return None
    family, k = m.group(1).upper(), m.group(2)
    if family == "B2" and not k:
        return boolean2()
    if family == "T1" and not k:
        return trivial()
    if not k or family in ("B2", "T1"):
        return None
    builder = {"L": lukasiewicz, "G": goedel, "NM": nilpotent_minimum}[family]
    return builder(int(k))


def resolve(ref: str, base: Optional[PathLike] = None) -> FiniteAlgebra:
    """Load ``ref`` as a file (relative to ``base``) or a builtin name."""
    path = Path(ref)
    if base is not None and not path.is_absolute():
        path = Path(base) / path
    if path.is_file():
        return load(path)
    A = builtin(ref)
    if A is None:
        raise FormatError(f"{ref!r} is neither an algebra file nor a builtin name")
    return A


def write_census(census: ChainCensus, out: PathLike) -> list[Path]:
    """Write one ``chain_N_####.alg`` per member plus ``census_N.tsv``."""
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for ident, A, m in zip(census.ids(), census.chains, census.meta):
        meta = {
            "contractivity": m.contractivity, "smtl": int(m.smtl),
            "involutive": int(m.involutive), "simple": int(m.simple),
            "si": int(m.si), "monolith": m.monolith_size,
        }
        written.append(save(replace(A, name=ident, meta=meta), out / f"{ident}.alg"))
    tsv = out / f"census_{census.order}.tsv"
    with tsv.open("w", newline="") as fh:
        w = csv.writer(fh, delimiter="\t", lineterminator="\n")
        w.writerow(TSV_COLUMNS)
        for ident, m in zip(census.ids(), census.meta):
            w.writerow([ident, m.contractivity, int(m.smtl), int(m.involutive), int(m.simple)])
    written.append(tsv)
    return written


def read_census_tsv(path: PathLike) -> list[dict[str, str]]:
    with Path(path).open(newline="") as fh:
        rows = list(csv.DictReader(fh, delimiter="\t"))
    if rows and tuple(rows[0].keys()) != TSV_COLUMNS:
        raise FormatError(f"unexpected census columns {tuple(rows[0].keys())}")
    return rows


def load_span(path: PathLike) -> AmalgamationSpan:
    """Span file: header, ``A:``/``B:``/``C:`` algebra references, ``i:``/``j:`` maps."""
    path = Path(path)
    fields = {}
    lines = [ln.split("#", 1)[0].strip() for ln in path.read_text().splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or lines[0] != SPAN_HEADER:
        raise FormatError(f"missing header {SPAN_HEADER!r}")
    for ln in lines[1:]:
        key, sep, value = ln.partition(":")
        if not sep or key.strip() not in ("A", "B", "C", "i", "j"):
            raise FormatError(f"bad span line {ln!r}")
        fields[key.strip()] = value.strip()
    missing = {"A", "B", "C", "i", "j"} - set(fields)
    if missing:
        raise FormatError(f"span file lacks {sorted(missing)}")
    algs = {k: resolve(fields[k], base=path.parent) for k in "ABC"}
    try:
        i_map = [int(v) for v in fields["i"].split()]
        j_map = [int(v) for v in fields["j"].split()]
    except ValueError:
        raise FormatError("span maps must be integer lists") from None
    return AmalgamationSpan.build(algs["A"], algs["B"], algs["C"], i_map, j_map)


def dumps_span(refs: dict[str, str], i_map, j_map) -> str:
    return "\n".join([
        SPAN_HEADER,
        *(f"{k}: {refs[k]}" for k in "ABC"),
        "i: " + " ".join(str(v) for v in i_map),
        "j: " + " ".join(str(v) for v in j_map),
    ]) + "\n"
