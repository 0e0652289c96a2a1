"""Line-oriented text format for finite semirings (conventional suffix ``.sr``).

Example::

    semiring boolean
    elements 0 1
    zero 0
    one 1
    add:
    0: 0 1
    1: 1 1
    mul:
    0: 0 0
    1: 0 1

Row ``i`` column ``j`` of a table holds ``op(elem_i, elem_j)``.  The leading
``<elem>:`` row label is optional on input and always written on output.
``#`` starts a comment.  Element names are any non-whitespace runs without
``#``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import SemiringTable


class DSLError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class LexicalError(DSLError):
    def __init__(self, message: str, line: int, column: int):
        self.column = column
        super().__init__(f"column {column}: {message}", line)


class GrammarError(DSLError):
    pass


class MissingSectionError(DSLError):
    pass


class UnknownTokenError(DSLError):
    pass


class DuplicateElementError(DSLError):
    pass


class RowLengthError(DSLError):
    pass


@dataclass(frozen=True)
class SemiringDocument:
    name: str
    element_names: tuple[str, ...]
    zero_name: str
    one_name: str
    add_rows: tuple[tuple[str, ...], ...]
    mul_rows: tuple[tuple[str, ...], ...]


_HEADERS = ("semiring", "elements", "zero", "one")


def _lines(text: str | bytes):
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            # report the line holding the bad byte
            line = text[:exc.start].count(b"\n") + 1
            col = exc.start - (text.rfind(b"\n", 0, exc.start) + 1) + 1
            raise LexicalError("invalid UTF-8", line, col) from None
    if text.startswith("﻿"):
        text = text[1:]
    for lineno, raw in enumerate(text.split("\n"), start=1):
        if raw.endswith("\r"):
            raw = raw[:-1]
        body = raw.split("#", 1)[0]
        for col, ch in enumerate(body, start=1):
            if ch != "\t" and (ord(ch) < 32 or ord(ch) == 127):
                raise LexicalError(f"control character {ch!r}", lineno, col)
        toks = body.split()
        if toks:
            yield lineno, toks


def parse(text: str | bytes) -> SemiringDocument:
    header: dict[str, tuple[int, list[str]]] = {}
    tables: dict[str, list[tuple[int, list[str]]]] = {}
    current: str | None = None
    last = 1
    for lineno, toks in _lines(text):
        last = lineno
        key = toks[0]
        if key in ("add:", "mul:"):
            section = key[:-1]
            if len(toks) != 1:
                raise GrammarError(f"'{key}' must stand alone on its line", lineno)
            if section in tables:
                raise GrammarError(f"duplicate section '{key}'", lineno)
            tables[section] = []
            current = section
        elif key in _HEADERS and current is None:
            if key in header:
                raise GrammarError(f"duplicate '{key}' line", lineno)
            if key != "elements" and len(toks) != 2:
                raise GrammarError(f"'{key}' takes exactly one token", lineno)
            if key == "elements" and len(toks) < 2:
                raise GrammarError("'elements' needs at least one token", lineno)
            header[key] = (lineno, toks[1:])
        elif current is not None:
            tables[current].append((lineno, toks))
        else:
            raise GrammarError(f"unexpected {key!r}", lineno)

    for key in _HEADERS:
        if key not in header:
            raise MissingSectionError(f"missing '{key}' line at end of input", last)
    for key in ("add", "mul"):
        if key not in tables:
            raise MissingSectionError(f"missing '{key}:' section at end of input", last)

    elems_line, elems = header["elements"]
    seen: set[str] = set()
    for tok in elems:
        if tok in seen:
            raise DuplicateElementError(f"duplicate element name {tok!r}", elems_line)
        seen.add(tok)
    for key in ("zero", "one"):
        lineno, (tok,) = header[key]
        if tok not in seen:
            raise UnknownTokenError(f"{key} {tok!r} is not a listed element", lineno)

    n = len(elems)
    rows_out = {}
    for key in ("add", "mul"):
        rows = tables[key]
        if len(rows) != n:
            at = rows[n][0] if len(rows) > n else None
            raise RowLengthError(
                f"'{key}:' has {len(rows)} rows, expected {n}", at)
        parsed = []
        for i, (lineno, toks) in enumerate(rows):
            if len(toks) == n + 1 and toks[0] == elems[i] + ":":
                toks = toks[1:]
            if len(toks) != n:
                raise RowLengthError(
                    f"'{key}:' row for {elems[i]!r} has {len(toks)} entries, expected {n}",
                    lineno)
            for tok in toks:
                if tok not in seen:
                    raise UnknownTokenError(f"unknown element {tok!r} in '{key}:'", lineno)
            parsed.append(tuple(toks))
        rows_out[key] = tuple(parsed)

    return SemiringDocument(
        name=header["semiring"][1][0],
        element_names=tuple(elems),
        zero_name=header["zero"][1][0],
        one_name=header["one"][1][0],
        add_rows=rows_out["add"],
        mul_rows=rows_out["mul"],
    )


def to_table(doc: SemiringDocument) -> SemiringTable:
    """Index elements in listed order. The result is not validated."""
    idx = {name: i for i, name in enumerate(doc.element_names)}
    return SemiringTable(
        name=doc.name,
        elems=doc.element_names,
        zero=idx[doc.zero_name],
        one=idx[doc.one_name],
        add=tuple(tuple(idx[t] for t in row) for row in doc.add_rows),
        mul=tuple(tuple(idx[t] for t in row) for row in doc.mul_rows),
    )


def serialize(s: SemiringTable) -> str:
    names = s.elems
    width = max(len(x) for x in names)
    label_w = width + 1
    out = [f"semiring {s.name}",
           "elements " + " ".join(names),
           f"zero {names[s.zero]}",
           f"one {names[s.one]}"]
    for key, tab in (("add", s.add), ("mul", s.mul)):
        out.append(f"{key}:")
        for i, row in enumerate(tab):
            cells = " ".join(names[v].ljust(width) for v in row).rstrip()
            out.append(f"{(names[i] + ':').ljust(label_w)} {cells}")
    return "\n".join(out) + "\n"


def load(path) -> SemiringTable:
    with open(path, "rb") as fh:
        return to_table(parse(fh.read()))


def dump(s: SemiringTable, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize(s))
