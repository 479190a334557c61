"""Embedded orbit tables for E6 and E7, with cross-validation.

Each record ties a Bala-Carter label to the index subsets J whose torus
orbits land in that adjoint orbit, together with the covering-fiber
group Z(O) and the fundamental group pi1(O).  Prime decorations on a
label (e.g. (3A_1)'') distinguish different orbits sharing a Levi type;
they are data keyed by J, not something computable from the sub-diagram
alone.

``validate_tables`` sweeps every subset of simple-root indices and
checks the embedded data four ways: the J-sets partition the full power
set, the Z column agrees with the per-family case rule, every J's
complement sub-diagram classifies to the record's base label, and the
component-group order divides out consistently.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import (
    ComponentLabel,
    DataIntegrityError,
    InputError,
    LieType,
    SubsetJ,
    check_subset_range,
    classify_subdiagram,
    dynkin_diagram,
)
from .orbits import FiniteGroupDescriptor, center_fiber

# Column codes: "1" trivial, "2" cyclic of order 2, "3" cyclic of order 3,
# "S2" the order-two component group.  J sets are digit strings.

_E6_ROWS = (
    ("Triv.", "1", "1", ("123456",)),
    ("A_1", "1", "1", ("12345", "12346", "12356", "12456", "13456", "23456")),
    (
        "2A_1",
        "1",
        "1",
        ("1235", "1245", "1246", "1345", "1346", "1456", "2345", "2346", "2356", "3456"),
    ),
    ("3A_1", "1", "1", ("145", "146", "235", "345", "346")),
    ("A_2", "1", "S2", ("1234", "1236", "1256", "1356", "2456")),
    (
        "A_2 + A_1",
        "1",
        "1",
        ("124", "125", "134", "135", "234", "236", "245", "246", "356", "456"),
    ),
    ("2A_2", "3", "3", ("24",)),
    ("A_2 + 2A_1", "1", "1", ("14", "34", "35", "45", "46")),
    ("A_3", "1", "1", ("123", "126", "136", "156", "256")),
    ("2A_2 + A_1", "3", "3", ("4",)),
    ("A_3 + A_1", "1", "1", ("15", "23", "25", "36")),
    ("A_4", "1", "1", ("12", "13", "26", "56")),
    ("D_4", "1", "1", ("16",)),
    ("A_4 + A_1", "1", "1", ("3", "5")),
    ("A_5", "3", "3", ("2",)),
    ("D_5", "1", "1", ("1", "6")),
    ("E_6", "3", "3", ("",)),
)

_E7_ROWS = (
    ("Triv.", "1", "1", ("1234567",)),
    (
        "A_1",
        "1",
        "1",
        ("123456", "123457", "123467", "123567", "124567", "134567", "234567"),
    ),
    (
        "2A_1",
        "1",
        "1",
        (
            "12346",
            "12356",
            "12357",
            "12456",
            "12457",
            "12467",
            "13456",
            "13457",
            "13467",
            "14567",
            "23456",
            "23457",
            "23467",
            "23567",
            "34567",
        ),
    ),
    ("(3A_1)''", "2", "2", ("1346",)),
    (
        "(3A_1)'",
        "1",
        "1",
        ("1246", "1456", "1457", "1467", "2346", "2356", "2357", "3456", "3457", "3467"),
    ),
    ("A_2", "1", "S2", ("12345", "12347", "12367", "12567", "13567", "24567")),
    ("4A_1", "2", "2", ("146", "346")),
    (
        "A_2 + A_1",
        "1",
        "S2",
        (
            "1235",
            "1236",
            "1245",
            "1247",
            "1256",
            "1257",
            "1345",
            "1347",
            "1356",
            "1357",
            "2345",
            "2347",
            "2367",
            "2456",
            "2457",
            "2467",
            "3567",
            "4567",
        ),
    ),
    (
        "A_2 + 2A_1",
        "1",
        "1",
        ("145", "147", "235", "236", "246", "345", "347", "356", "357", "456", "457", "467"),
    ),
    ("2A_2", "1", "1", ("125", "135", "245", "247")),
    ("A_2 + 3A_1", "2", "2", ("46",)),
    ("A_3", "1", "1", ("1234", "1237", "1267", "1367", "1567", "2567")),
    ("(A_3 + A_1)''", "2", "2", ("134", "136")),
    ("2A_2 + A_1", "1", "1", ("35", "45", "47")),
    (
        "(A_3 + A_1)'",
        "1",
        "1",
        ("124", "126", "156", "157", "234", "237", "256", "257", "367"),
    ),
    ("A_3 + 2A_1", "2", "2", ("14", "34", "36")),
    ("D_4", "1", "1", ("167",)),
    ("A_3 + A_2", "1", "S2", ("15", "24", "25")),
    ("A_3 + A_2 + A_1", "2", "2", ("4",)),
    ("A_4", "1", "S2", ("123", "127", "137", "267", "567")),
    ("(A_5)''", "2", "2", ("13",)),
    ("D_4 + A_1", "2", "2", ("16",)),
    ("A_4 + A_1", "1", "S2", ("23", "26", "37", "56", "57")),
    ("A_4 + A_2", "1", "1", ("5",)),
    ("(A_5)'", "1", "1", ("12", "27")),
    ("A_5 + A_1", "2", "2", ("3",)),
    ("D_5", "1", "1", ("17", "67")),
    ("A_6", "1", "1", ("2",)),
    ("D_5 + A_1", "2", "2", ("6",)),
    ("D_6", "2", "2", ("1",)),
    ("E_6", "1", "1", ("7",)),
    ("E_7", "2", "2", ("",)),
)

_GROUP_CODES = {
    "1": FiniteGroupDescriptor.trivial(),
    "2": FiniteGroupDescriptor.cyclic(2),
    "3": FiniteGroupDescriptor.cyclic(3),
    "S2": FiniteGroupDescriptor.symmetric_2(),
}

_SUMMAND_RE = re.compile(r"(\d*)([ADE])_(\d+)")


def _parse_base_label(text: str) -> ComponentLabel:
    if text == "Triv.":
        return ComponentLabel(())
    body = text.strip()
    if body.startswith("("):
        body = body[1 : body.index(")")]
    body = body.rstrip("'")
    summands: list[tuple[str, int]] = []
    for piece in body.split("+"):
        match = _SUMMAND_RE.fullmatch(piece.strip())
        if match is None:
            raise DataIntegrityError("cannot parse label piece %r in %r" % (piece, text))
        count = int(match.group(1) or "1")
        summands.extend([(match.group(2), int(match.group(3)))] * count)
    return ComponentLabel(tuple(summands))


@dataclass(frozen=True)
class OrbitRecord:
    """One orbit row: label, its J sets, and the two group columns."""

    bala_carter: str
    base_label: ComponentLabel
    j_sets: tuple[SubsetJ, ...]
    z_orbit: FiniteGroupDescriptor
    pi1: FiniteGroupDescriptor

    def __post_init__(self) -> None:
        if not self.j_sets:
            raise DataIntegrityError("record %r carries no J sets" % self.bala_carter)
        ordered = tuple(sorted(self.j_sets, key=lambda s: s.elements))
        object.__setattr__(self, "j_sets", ordered)

    @property
    def a_group(self) -> FiniteGroupDescriptor:
        """A(O) = pi1(O) / Z(O); here Z is trivial or all of pi1."""
        if self.z_orbit.order == 1:
            return self.pi1
        if self.z_orbit.order == self.pi1.order:
            return FiniteGroupDescriptor.trivial()
        raise DataIntegrityError(
            "cannot derive A(O) for %r: |Z| = %d, |pi1| = %d"
            % (self.bala_carter, self.z_orbit.order, self.pi1.order)
        )


def _build_records(rows) -> tuple[OrbitRecord, ...]:
    records = []
    for label, z_code, pi1_code, j_strings in rows:
        j_sets = tuple(SubsetJ(tuple(int(ch) for ch in text)) for text in j_strings)
        records.append(
            OrbitRecord(
                bala_carter=label,
                base_label=_parse_base_label(label),
                j_sets=j_sets,
                z_orbit=_GROUP_CODES[z_code],
                pi1=_GROUP_CODES[pi1_code],
            )
        )
    return tuple(records)


_RECORDS = {
    "E6": _build_records(_E6_ROWS),
    "E7": _build_records(_E7_ROWS),
}


class UnsupportedTableError(InputError):
    def __init__(self, family: str):
        super().__init__("no embedded orbit table for family %s (only E6, E7)" % family)


def _require_table_family(t: LieType) -> str:
    if t.family not in _RECORDS:
        raise UnsupportedTableError(t.family)
    return t.family


def records(t: LieType) -> tuple[OrbitRecord, ...]:
    """All records for E6 or E7, in embedded (dimension-descending) order."""
    return _RECORDS[_require_table_family(t)]


def table_lookup(t: LieType, j: SubsetJ) -> OrbitRecord:
    """The unique record whose J sets contain ``j``."""
    family = _require_table_family(t)
    check_subset_range(t, j)
    target = j.elements
    for record in _RECORDS[family]:
        for j_set in record.j_sets:
            if j_set.elements == target:
                return record
    raise DataIntegrityError(
        "subset %s missing from every %s record" % (j, family)
    )


@dataclass(frozen=True)
class TableCheck:
    name: str
    checked: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class TableValidationReport:
    family: str
    checks: tuple[TableCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[str]:
        return [f for c in self.checks for f in c.failures]


def _all_subsets(rank: int) -> list[tuple[int, ...]]:
    out = []
    for mask in range(1 << rank):
        out.append(tuple(i + 1 for i in range(rank) if mask >> i & 1))
    return out


def validate_records(t: LieType, record_list) -> TableValidationReport:
    """Run the four table checks against an explicit record list."""
    family = _require_table_family(t)
    rank = t.rank
    diagram = dynkin_diagram(t)
    nodes = set(range(1, rank + 1))

    partition_failures = []
    counts: dict[tuple[int, ...], int] = {s: 0 for s in _all_subsets(rank)}
    for record in record_list:
        for j_set in record.j_sets:
            if j_set.elements in counts:
                counts[j_set.elements] += 1
            else:
                partition_failures.append(
                    "subset %s is out of range for rank %d" % (j_set, rank)
                )
    for subset, seen in counts.items():
        if seen == 0:
            partition_failures.append(
                "subset {%s} missing from every record" % ",".join(map(str, subset))
            )
        elif seen > 1:
            partition_failures.append(
                "subset {%s} appears in %d records" % (",".join(map(str, subset)), seen)
            )

    z_failures = []
    z_checked = 0
    for record in record_list:
        for j_set in record.j_sets:
            z_checked += 1
            expected = center_fiber(t, j_set).order
            if expected != record.z_orbit.order:
                z_failures.append(
                    "Z mismatch at J=%s: rule gives order %d, record %r has %d"
                    % (j_set, expected, record.bala_carter, record.z_orbit.order)
                )

    label_failures = []
    label_checked = 0
    for record in record_list:
        for j_set in record.j_sets:
            label_checked += 1
            complement = nodes - set(j_set.elements)
            derived = classify_subdiagram(diagram, complement)
            if derived != record.base_label:
                label_failures.append(
                    "label mismatch at J=%s: complement classifies as %s, record says %r"
                    % (j_set, derived, record.bala_carter)
                )

    quotient_failures = []
    for record in record_list:
        if record.pi1.order % record.z_orbit.order:
            quotient_failures.append(
                "record %r: |Z| = %d does not divide |pi1| = %d"
                % (record.bala_carter, record.z_orbit.order, record.pi1.order)
            )

    checks = (
        TableCheck("power-set-partition", len(counts), tuple(partition_failures)),
        TableCheck("z-column-agreement", z_checked, tuple(z_failures)),
        TableCheck("subdiagram-labels", label_checked, tuple(label_failures)),
        TableCheck("component-group-quotient", len(record_list), tuple(quotient_failures)),
    )
    return TableValidationReport(family=family, checks=checks)


def validate_tables(t: LieType) -> TableValidationReport:
    """Cross-validate the embedded table for E6 or E7."""
    return validate_records(t, records(t))


def dump_tsv(t: LieType) -> str:
    """One record per line: label, J sets as comma lists, |Z|, |pi1|."""
    lines = []
    for record in records(t):
        j_text = ";".join(
            ",".join(map(str, j.elements)) if j.elements else "-" for j in record.j_sets
        )
        lines.append(
            "%s\t%s\t%d\t%d"
            % (record.bala_carter, j_text, record.z_orbit.order, record.pi1.order)
        )
    return "\n".join(lines)


def records_as_dicts(t: LieType) -> list[dict]:
    """Canonical JSON-ready form mirroring the record fields."""
    out = []
    for record in records(t):
        out.append(
            {
                "bala_carter": record.bala_carter,
                "base_label": record.base_label.render(),
                "j_sets": [list(j.elements) for j in record.j_sets],
                "z_orbit": {"kind": record.z_orbit.label, "order": record.z_orbit.order},
                "pi1": {"kind": record.pi1.label, "order": record.pi1.order},
                "a_group": {"kind": record.a_group.label, "order": record.a_group.order},
            }
        )
    return out
