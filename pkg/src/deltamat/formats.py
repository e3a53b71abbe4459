"""Line-oriented text formats for the four input kinds, with exact round-trips.

Grammar (UTF-8, '#' starts a comment, blank lines ignored):

  delta-matroid   n <k>                 then one "feasible s1 ... sk" per set
  matroid         ground plain <m>      then one "basis e1 ..." per basis
                  ground signed <n>     (elements are signed integers)
  gf2 matrix      gf2 <n>               then n rows of 0/1 entries
  rank table      ranktable <n>         then "<set>: <value>" for every
                                        admissible set in canonical order

Serialization always emits canonical order, so parse(serialize(x)) == x.
"""

from __future__ import annotations

from dataclasses import dataclass

from .deltamatroid import DeltaMatroid, RankTable
from .ground import AdmissibleSet, enumerate_admissible
from .matroid import Gf2SymMatrix, Matroid, render_subset


class ParseError(ValueError):
    """Malformed input document; the message carries a 1-based line number."""


@dataclass(frozen=True)
class InputDocument:
    kind: str  # delta-matroid | matroid | gf2-matrix | rank-table
    value: object


def _logical_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((lineno, body.split()))
    return out


def _fail(lineno: int, message: str) -> ParseError:
    return ParseError(f"line {lineno}: {message}")


def _int(token: str, lineno: int, what: str = "integer") -> int:
    try:
        return int(token)
    except ValueError:
        raise _fail(lineno, f"expected {what}, got {token!r}") from None


def parse_document(text: str) -> InputDocument:
    lines = _logical_lines(text)
    if not lines:
        raise ParseError("line 1: empty document")
    lineno, head = lines[0]
    if head[0] == "n":
        return InputDocument("delta-matroid", _parse_delta(lines))
    if head[0] == "ground":
        return InputDocument("matroid", _parse_matroid(lines))
    if head[0] == "gf2":
        return InputDocument("gf2-matrix", _parse_gf2(lines))
    if head[0] == "ranktable":
        return InputDocument("rank-table", _parse_ranktable(lines))
    raise _fail(lineno, f"unknown document header {head[0]!r}")


def _parse_delta(lines) -> DeltaMatroid:
    lineno, head = lines[0]
    if len(head) != 2:
        raise _fail(lineno, "header must be 'n <size>'")
    n = _int(head[1], lineno, "ground size")
    if n < 0:
        raise _fail(lineno, "ground size must be non-negative")
    sets = []
    for lineno, tokens in lines[1:]:
        if tokens[0] != "feasible":
            raise _fail(lineno, f"expected 'feasible ...', got {tokens[0]!r}")
        elems = [_int(t, lineno, "signed index") for t in tokens[1:]]
        try:
            s = AdmissibleSet.from_elements(n, elems)
        except ValueError as exc:
            raise _fail(lineno, str(exc)) from None
        if s.size != n:
            raise _fail(lineno, f"feasible set must have size {n}, got {s.size}")
        sets.append(s)
    if not sets and n > 0:
        raise ParseError("line 1: delta-matroid needs at least one feasible line")
    try:
        return DeltaMatroid.from_feasible_sets(n, sets) if sets else DeltaMatroid(0, [0])
    except ValueError as exc:
        raise ParseError(f"line 1: {exc}") from None


def _parse_matroid(lines) -> Matroid:
    lineno, head = lines[0]
    if len(head) != 3 or head[1] not in ("plain", "signed"):
        raise _fail(lineno, "header must be 'ground plain <m>' or 'ground signed <n>'")
    size = _int(head[2], lineno, "ground size")
    signed = head[1] == "signed"
    bases = []
    for lineno, tokens in lines[1:]:
        if tokens[0] != "basis":
            raise _fail(lineno, f"expected 'basis ...', got {tokens[0]!r}")
        elems = [_int(t, lineno, "element") for t in tokens[1:]]
        for e in elems:
            if e == 0 or abs(e) > size or (not signed and e < 0):
                raise _fail(lineno, f"element {e} outside the ground set")
        bases.append(elems)
    if not bases:
        raise _fail(lineno if lines[1:] else lines[0][0], "matroid needs at least one basis line")
    try:
        return Matroid.signed(size, bases) if signed else Matroid.plain(size, bases)
    except ValueError as exc:
        raise ParseError(f"line 1: {exc}") from None


def _parse_gf2(lines) -> Gf2SymMatrix:
    lineno, head = lines[0]
    if len(head) != 2:
        raise _fail(lineno, "header must be 'gf2 <n>'")
    n = _int(head[1], lineno, "matrix size")
    rows = lines[1:]
    if len(rows) != n:
        raise _fail(lineno, f"expected {n} matrix rows, got {len(rows)}")
    entries = []
    for lineno, tokens in rows:
        if len(tokens) != n:
            raise _fail(lineno, f"expected {n} entries")
        entries.append([_int(t, lineno, "0/1 entry") for t in tokens])
        if any(x not in (0, 1) for x in entries[-1]):
            raise _fail(lineno, "entries must be 0 or 1")
    try:
        return Gf2SymMatrix.from_lists(entries)
    except ValueError as exc:
        raise ParseError(f"line 1: {exc}") from None


def _parse_ranktable(lines) -> RankTable:
    lineno, head = lines[0]
    if len(head) != 2:
        raise _fail(lineno, "header must be 'ranktable <n>'")
    n = _int(head[1], lineno, "ground size")
    expected = enumerate_admissible(n)
    body = lines[1:]
    if len(body) != len(expected):
        raise _fail(lineno, f"expected {len(expected)} table lines, got {len(body)}")
    values = []
    for (lineno, tokens), s in zip(body, expected):
        joined = " ".join(tokens)
        if ":" not in joined:
            raise _fail(lineno, "expected '<set>: <value>'")
        left, right = joined.rsplit(":", 1)
        elems = [_int(t, lineno, "signed index") for t in left.split()]
        try:
            given = AdmissibleSet.from_elements(n, elems)
        except ValueError as exc:
            raise _fail(lineno, str(exc)) from None
        if given != s:
            raise _fail(lineno, f"sets out of canonical order: expected {{{s.render()}}}")
        values.append(_int(right.strip(), lineno, "table value"))
    return RankTable(n, tuple(values))


def serialize_value(value) -> str:
    if isinstance(value, DeltaMatroid):
        lines = [f"n {value.n}"]
        lines += [f"feasible {b.render()}".rstrip() for b in value.feasible_sets()]
        return "\n".join(lines) + "\n"
    if isinstance(value, Matroid):
        size = max((abs(e) for e in value.ground), default=0)
        if value.ground == tuple(range(1, size + 1)):
            kind = "plain"
        elif value.ground == tuple(
            sorted((i for k in range(1, size + 1) for i in (k, -k)), key=lambda e: (abs(e), -e))
        ):
            kind = "signed"
        else:
            raise TypeError("only matroids on 1..m or on a full signed ground have a file form")
        lines = [f"ground {kind} {size}"]
        lines += [f"basis {render_subset(b)}".rstrip() for b in value.bases]
        return "\n".join(lines) + "\n"
    if isinstance(value, Gf2SymMatrix):
        lines = [f"gf2 {value.n}"]
        for row in value.rows:
            lines.append(" ".join(str(row >> j & 1) for j in range(value.n)))
        return "\n".join(lines) + "\n"
    if isinstance(value, RankTable):
        lines = [f"ranktable {value.n}"]
        for s, v in value.items():
            lines.append(f"{s.render()}: {v}".lstrip())
        return "\n".join(lines) + "\n"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def serialize_document(doc: InputDocument) -> str:
    return serialize_value(doc.value)
