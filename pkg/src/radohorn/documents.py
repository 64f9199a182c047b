"""Family documents (JSON or CSV input) and the JSON reports the CLI writes.

A family document looks like::

    {
      "dimension": 2,
      "vectors": [
        {"id": "phi1", "coords": [1, 0]},
        {"id": "phi2", "coords": ["1/2", "3"]}
      ]
    }

Coordinates are JSON integers or ``"p/q"`` strings; floats are rejected so
that every value is read exactly. The CSV form has the ids in its header row
and one coordinate per following row.
"""

from __future__ import annotations

import csv
import io
import json
import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Final, Literal

from radohorn.exact_linalg import RationalVector, format_rational
from radohorn.exceptions import FamilyFormatError
from radohorn.family_partition import (
    OrderedPartition,
    ValidationReport,
    VectorFamily,
    render_young,
)

SCHEMA_VERSION: Final[str] = "1"
INFINITE_RATIO: Final[str] = "infinite"

DocumentFormat = Literal["json", "csv"]

_RATIONAL_LITERAL = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rational_literal(value: object) -> Fraction:
    """Read an exact rational from a JSON integer or a ``"p/q"`` string."""
    if isinstance(value, bool):
        raise FamilyFormatError(f"not a rational literal: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_LITERAL.match(text):
            raise FamilyFormatError(f"not a rational literal: {value!r}")
        numerator, _, denominator = text.partition("/")
        if denominator and int(denominator) == 0:
            raise FamilyFormatError(f"zero denominator in {value!r}")
        return Fraction(int(numerator), int(denominator or "1"))
    raise FamilyFormatError(
        f"coordinates must be integers or 'p/q' strings, got {type(value).__name__} {value!r}"
    )


@dataclass(frozen=True)
class VectorRecord:
    id: str
    coords: tuple[Fraction, ...]


@dataclass(frozen=True)
class FamilyDocument:
    """A parsed family document; ids map to family indices in file order."""

    dimension: int
    vectors: tuple[VectorRecord, ...]

    def __post_init__(self) -> None:
        if isinstance(self.dimension, bool) or not isinstance(self.dimension, int):
            raise FamilyFormatError("'dimension' must be an integer")
        if self.dimension < 1:
            raise FamilyFormatError("'dimension' must be positive")
        seen: set[str] = set()
        for record in self.vectors:
            if not record.id:
                raise FamilyFormatError("vector ids must be nonempty")
            if record.id in seen:
                raise FamilyFormatError(f"duplicate vector id {record.id!r}")
            seen.add(record.id)
            if len(record.coords) != self.dimension:
                raise FamilyFormatError(
                    f"vector {record.id!r} has {len(record.coords)} coordinates, "
                    f"expected {self.dimension}"
                )

    @property
    def ids(self) -> list[str]:
        return [record.id for record in self.vectors]

    def to_family(self) -> VectorFamily:
        return VectorFamily.from_vectors(
            [RationalVector(record.coords) for record in self.vectors],
            self.ids,
            dimension=self.dimension,
        )

    @classmethod
    def from_family(cls, family: VectorFamily) -> FamilyDocument:
        return cls(
            dimension=family.dimension,
            vectors=tuple(
                VectorRecord(entry.label, entry.vector.coords) for entry in family
            ),
        )

    def id_of(self, index: int) -> str:
        return self.vectors[index - 1].id

    def ids_of(self, indices: Iterable[int]) -> list[str]:
        """Ids for ``indices`` in ascending index order."""
        return [self.id_of(i) for i in sorted(indices)]

    def index_of(self, vector_id: str) -> int:
        for position, record in enumerate(self.vectors, start=1):
            if record.id == vector_id:
                return position
        raise FamilyFormatError(f"unknown vector id {vector_id!r}")


def load_family_json(text: str) -> FamilyDocument:
    """Parse and validate a JSON family document.

    Raises:
        FamilyFormatError: On malformed JSON or schema violations.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FamilyFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise FamilyFormatError("a family document must be a JSON object")
    unknown = set(data) - {"dimension", "vectors", "schema_version"}
    if unknown:
        raise FamilyFormatError(f"unknown keys: {', '.join(sorted(unknown))}")
    if "dimension" not in data or "vectors" not in data:
        raise FamilyFormatError("a family document needs 'dimension' and 'vectors'")
    raw_vectors = data["vectors"]
    if not isinstance(raw_vectors, list):
        raise FamilyFormatError("'vectors' must be a list")
    records: list[VectorRecord] = []
    for position, item in enumerate(raw_vectors, start=1):
        if not isinstance(item, dict) or set(item) != {"id", "coords"}:
            raise FamilyFormatError(f"vector {position} must have exactly 'id' and 'coords'")
        if not isinstance(item["id"], str):
            raise FamilyFormatError(f"vector {position}: 'id' must be a string")
        if not isinstance(item["coords"], list):
            raise FamilyFormatError(f"vector {item['id']!r}: 'coords' must be a list")
        records.append(
            VectorRecord(item["id"], tuple(parse_rational_literal(c) for c in item["coords"]))
        )
    return FamilyDocument(dimension=data["dimension"], vectors=tuple(records))


def load_family_csv(text: str) -> FamilyDocument:
    """Parse a CSV family: header row of ids, then one row per coordinate."""
    rows = [row for row in csv.reader(io.StringIO(text)) if any(cell.strip() for cell in row)]
    if not rows:
        raise FamilyFormatError("empty CSV document")
    header = [cell.strip() for cell in rows[0]]
    body = rows[1:]
    if not body:
        raise FamilyFormatError("a CSV family needs at least one coordinate row")
    columns: list[list[Fraction]] = [[] for _ in header]
    for line, row in enumerate(body, start=2):
        if len(row) != len(header):
            raise FamilyFormatError(
                f"CSV row {line} has {len(row)} cells, expected {len(header)}"
            )
        for column, cell in zip(columns, row):
            column.append(parse_rational_literal(cell))
    return FamilyDocument(
        dimension=len(body),
        vectors=tuple(VectorRecord(vid, tuple(c)) for vid, c in zip(header, columns)),
    )


def load_family(text: str, fmt: DocumentFormat = "json") -> FamilyDocument:
    if fmt == "csv":
        return load_family_csv(text)
    return load_family_json(text)


def dump_family(document: FamilyDocument) -> str:
    """Serialize a family document as JSON with ``"p/q"`` coordinates."""
    payload = {
        "dimension": document.dimension,
        "vectors": [
            {"id": r.id, "coords": [format_rational(c) for c in r.coords]}
            for r in document.vectors
        ],
    }
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def load_partition(text: str, document: FamilyDocument) -> OrderedPartition:
    """Parse a JSON list of id lists into an (unvalidated) ordered partition."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FamilyFormatError(f"invalid partition JSON: {exc}") from exc
    if not isinstance(data, list) or not all(
        isinstance(block, list) and all(isinstance(i, str) for i in block) for block in data
    ):
        raise FamilyFormatError("a partition must be a list of lists of vector ids")
    return OrderedPartition(tuple(frozenset(document.index_of(i) for i in block) for block in data))


class ReportDocument:
    """An ordered JSON report; always starts with ``schema_version`` and ``command``."""

    def __init__(self, command: str, document: FamilyDocument | None = None,
                 parameters: Mapping[str, Any] | None = None) -> None:
        self._body: dict[str, Any] = {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "parameters": dict(parameters or {}),
        }
        if document is not None:
            self._body["family"] = {"dimension": document.dimension, "size": len(document.vectors)}

    def __setitem__(self, key: str, value: Any) -> None:
        self._body[key] = value

    def __getitem__(self, key: str) -> Any:
        return self._body[key]

    def __contains__(self, key: object) -> bool:
        return key in self._body

    def as_dict(self) -> dict[str, Any]:
        return dict(self._body)

    def to_json(self) -> str:
        return json.dumps(self._body, indent=2, ensure_ascii=False) + "\n"


def ratio_text(value: Fraction | None) -> str:
    """Exact ``"p/q"`` text; ``None`` stands for an infinite ratio."""
    return INFINITE_RATIO if value is None else format_rational(value)


def partition_section(document: FamilyDocument, partition: OrderedPartition) -> dict[str, Any]:
    return {
        "blocks": [document.ids_of(block) for block in partition],
        "profile": partition.profile().as_list(),
    }


def diagram_lines(
    partition: OrderedPartition,
    annotations: Mapping[tuple[int, int], str] | None = None,
    *,
    ascii_only: bool = False,
) -> list[str]:
    return render_young(partition.profile(), annotations, ascii_only=ascii_only).split("\n")


def id_annotations(
    document: FamilyDocument, order: Sequence[Sequence[int]]
) -> dict[tuple[int, int], str]:
    """Label every cell with the id of the vector placed there."""
    return {
        (row, column): document.id_of(index)
        for row, members in enumerate(order, start=1)
        for column, index in enumerate(members, start=1)
    }


def validation_section(report: ValidationReport) -> dict[str, Any]:
    return {
        "valid": report.is_valid,
        "issues": [
            {"kind": issue.kind.value, "block": issue.block, "detail": issue.detail}
            for issue in report.issues
        ],
    }
