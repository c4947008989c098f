"""Binary questionnaire ingestion and per-attribute frequency statistics.

A survey file is plain comma-separated text: the first line names the M
attributes, every following line holds one respondent's M answers, each
``0`` or ``1``.  No quoting is supported, so attribute names must not
contain commas.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import DuplicateHeader, EmptyInput, NonBinaryValue, RaggedRow


@dataclass(frozen=True)
class ResponseMatrix:
    """N respondents by M yes/no attributes.

    Rows are stored as tuples of ints; ``column_masks`` packs each column
    into an integer bitset (bit r set when respondent r answered 1), which
    is what the support counting works on.
    """

    attribute_names: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        names = tuple(self.attribute_names)
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "attribute_names", names)
        object.__setattr__(self, "rows", rows)
        if not names:
            raise EmptyInput("a response matrix needs at least one attribute")
        if not rows:
            raise EmptyInput("a response matrix needs at least one respondent")
        seen = set()
        for j, name in enumerate(names):
            if not name:
                raise DuplicateHeader("empty attribute name", line=1, column=j + 1)
            if "," in name:
                raise DuplicateHeader(f"attribute name {name!r} contains a comma", line=1, column=j + 1)
            if name in seen:
                raise DuplicateHeader(f"duplicate attribute name {name!r}", line=1, column=j + 1)
            seen.add(name)
        m = len(names)
        for i, row in enumerate(rows):
            if len(row) != m:
                raise RaggedRow(f"expected {m} values, found {len(row)}", line=i + 2)
            for j, value in enumerate(row):
                if value not in (0, 1) or isinstance(value, bool):
                    raise NonBinaryValue(f"value {value!r} is not 0 or 1", line=i + 2, column=j + 1)
        masks = [0] * m
        for i, row in enumerate(rows):
            bit = 1 << i
            for j, value in enumerate(row):
                if value:
                    masks[j] |= bit
        object.__setattr__(self, "_masks", tuple(masks))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_attributes(self) -> int:
        return len(self.attribute_names)

    @property
    def column_masks(self) -> tuple[int, ...]:
        return self._masks

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def index_of(self, name: str) -> int:
        return self.attribute_names.index(name)


def parse_survey(text: str) -> ResponseMatrix:
    """Parse survey CSV text into a :class:`ResponseMatrix`.

    LF and CRLF line endings are both accepted and the final newline is
    optional.  Any other blank line is an error, as is a missing value.
    """
    if hasattr(text, "read"):
        text = text.read()
    if text.startswith("﻿"):
        text = text[1:]
    if not text.strip():
        raise EmptyInput("input is empty", line=1)

    lines = text.split("\n")
    if lines[-1] == "":
        lines.pop()
    lines = [line[:-1] if line.endswith("\r") else line for line in lines]

    names = lines[0].split(",")
    seen = {}
    for j, name in enumerate(names):
        if not name:
            raise DuplicateHeader("empty attribute name", line=1, column=j + 1)
        if name in seen:
            raise DuplicateHeader(
                f"attribute {name!r} repeats column {seen[name] + 1}", line=1, column=j + 1
            )
        seen[name] = j
    if len(lines) < 2:
        raise EmptyInput("header present but no response rows", line=2)

    m = len(names)
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        cells = line.split(",")
        if len(cells) != m:
            raise RaggedRow(f"expected {m} values, found {len(cells) if line else 0}", line=lineno)
        row = []
        for j, cell in enumerate(cells):
            if cell == "1":
                row.append(1)
            elif cell == "0":
                row.append(0)
            else:
                raise NonBinaryValue(
                    f"value {cell!r} in {names[j]!r} is not 0 or 1", line=lineno, column=j + 1
                )
        rows.append(tuple(row))
    return ResponseMatrix(tuple(names), tuple(rows))


def serialize_survey(matrix: ResponseMatrix) -> str:
    lines = [",".join(matrix.attribute_names)]
    lines.extend(",".join(map(str, row)) for row in matrix.rows)
    return "\n".join(lines) + "\n"


def load_survey(path) -> ResponseMatrix:
    return parse_survey(Path(path).read_text(encoding="utf-8"))


def attribute_counts(matrix: ResponseMatrix) -> list[int]:
    return [mask.bit_count() for mask in matrix.column_masks]


def attribute_frequencies(matrix: ResponseMatrix) -> list[float]:
    """Fraction of respondents answering 1, per attribute."""
    n = matrix.n_rows
    return [count / n for count in attribute_counts(matrix)]


def select_top_requirements(freqs: Sequence[float], threshold: float) -> list[int]:
    """Indices of attributes with frequency >= ``threshold``.

    Ordered by descending frequency; equal frequencies keep index order.
    """
    if not 0.0 <= threshold or threshold != threshold:
        raise ValueError(f"threshold must be non-negative, got {threshold}")
    chosen = [j for j, f in enumerate(freqs) if f >= threshold]
    return sorted(chosen, key=lambda j: (-freqs[j], j))
