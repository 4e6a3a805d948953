"""Function families {f_k}: built-ins, classification, file format, and the
flattened mode-oracle truth table F(k,x) = f_k(x).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

BALANCED_CONSTANT_ARITY_CAP = 4
DELTA_ARITY_CAP = 10

BALANCED = "balanced"
CONSTANT = "constant"
OTHER = "other"


class FamilyFormatError(ValueError):
    """Family-file problem, carrying the offending line number and a kind tag."""

    def __init__(self, line: int, kind: str, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.kind = kind


@dataclass(frozen=True)
class FunctionFamily:
    """An ordered set of boolean functions B^n -> B, keyed by bit-string labels.

    The label width is the ancilla register width N; labels need not
    exhaust all 2^N values (the mode count is only required to be <= 2^N).
    """

    n: int
    modes: tuple[tuple[str, tuple[int, ...]], ...]

    def __post_init__(self):
        object.__setattr__(
            self,
            "modes",
            tuple((label, tuple(int(b) for b in table)) for label, table in self.modes),
        )
        if self.n < 1:
            raise ValueError("arity must be >= 1")
        if not self.modes:
            raise ValueError("family has no modes")
        labels = [label for label, _ in self.modes]
        widths = {len(label) for label in labels}
        if len(widths) != 1:
            raise ValueError("labels must all have the same width")
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate mode labels")
        for label, table in self.modes:
            if any(c not in "01" for c in label):
                raise ValueError(f"label {label!r} is not binary")
            if len(table) != 1 << self.n:
                raise ValueError(
                    f"mode {label}: table has {len(table)} entries, expected {1 << self.n}"
                )
            if any(b not in (0, 1) for b in table):
                raise ValueError(f"mode {label}: table entries must be 0 or 1")
        if len(self.modes) > 1 << self.ancilla_width:
            raise ValueError("more modes than ancilla labels")

    @property
    def ancilla_width(self) -> int:
        return len(self.modes[0][0])

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.modes)

    @property
    def label_values(self) -> tuple[int, ...]:
        return tuple(int(label, 2) for label, _ in self.modes)

    def table(self, label: str) -> tuple[int, ...]:
        for mode_label, table in self.modes:
            if mode_label == label:
                return table
        raise KeyError(f"unknown mode label {label!r}")


def classify_table(table) -> str:
    ones = sum(table)
    if ones in (0, len(table)):
        return CONSTANT
    if 2 * ones == len(table):
        return BALANCED
    return OTHER


def classify_mode(family: FunctionFamily, label: str) -> str:
    return classify_table(family.table(label))


@lru_cache(maxsize=None)
def deutsch_family() -> FunctionFamily:
    """All four functions B -> B, labelled 00..11 in table order."""
    return FunctionFamily(
        n=1,
        modes=(
            ("00", (0, 0)),
            ("01", (0, 1)),
            ("10", (1, 0)),
            ("11", (1, 1)),
        ),
    )


@lru_cache(maxsize=None)
def balanced_constant_family(n: int) -> FunctionFamily:
    """Both constant functions plus every balanced function B^n -> B.

    Labels follow enumeration order: constants first, then balanced tables
    lexicographically; the ancilla width is the smallest that fits.
    """
    if not 1 <= n <= BALANCED_CONSTANT_ARITY_CAP:
        raise ValueError(f"arity {n} outside 1..{BALANCED_CONSTANT_ARITY_CAP}")
    size = 1 << n
    tables = [(0,) * size, (1,) * size]
    balanced = []
    for ones_at in combinations(range(size), size // 2):
        table = [0] * size
        for i in ones_at:
            table[i] = 1
        balanced.append(tuple(table))
    tables.extend(sorted(balanced))
    width = max(1, math.ceil(math.log2(len(tables))))
    modes = tuple(
        (format(i, f"0{width}b"), table) for i, table in enumerate(tables)
    )
    return FunctionFamily(n=n, modes=modes)


@lru_cache(maxsize=None)
def delta_family(n: int) -> FunctionFamily:
    """The 2^n needle functions f_k(x) = 1 iff x == k."""
    if not 1 <= n <= DELTA_ARITY_CAP:
        raise ValueError(f"arity {n} outside 1..{DELTA_ARITY_CAP}")
    size = 1 << n
    modes = []
    for k in range(size):
        table = [0] * size
        table[k] = 1
        modes.append((format(k, f"0{n}b"), tuple(table)))
    return FunctionFamily(n=n, modes=tuple(modes))


@lru_cache(maxsize=None)
def mode_oracle_table(family: FunctionFamily) -> tuple[int, ...]:
    """Flatten the family into one table over (label bits ++ x bits).

    Rows for label values with no assigned mode are 0; they are never
    populated in the prepared ancilla superposition, so the choice is
    unobservable.
    """
    n = family.n
    table = [0] * (1 << (family.ancilla_width + n))
    for label, mode_table in family.modes:
        base = int(label, 2) << n
        for x, bit in enumerate(mode_table):
            table[base + x] = bit
    return tuple(table)


def parse_family_file(text: str) -> FunctionFamily:
    """Parse the family file format.

    First meaningful line is "n=<arity>", then one mode per line,
    "<label>: <b0> <b1> ...", '#' starts a comment, blank lines ignored.
    """
    n = None
    modes: list[tuple[str, tuple[int, ...]]] = []
    seen: dict[str, int] = {}
    label_width = None
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            if not line.startswith("n="):
                raise FamilyFormatError(
                    lineno, "missing_header", f"expected 'n=<arity>' header, got {line!r}"
                )
            try:
                n = int(line[2:])
            except ValueError:
                raise FamilyFormatError(
                    lineno, "bad_header", f"cannot parse arity in {line!r}"
                ) from None
            if n < 1:
                raise FamilyFormatError(lineno, "bad_arity", f"arity must be >= 1, got {n}")
            continue
        if ":" not in line:
            raise FamilyFormatError(
                lineno, "syntax", f"expected '<label>: <bits>', got {line!r}"
            )
        label, _, rest = line.partition(":")
        label = label.strip()
        if not label or any(c not in "01" for c in label):
            raise FamilyFormatError(
                lineno, "bad_label", f"label {label!r} is not a binary string"
            )
        if label_width is None:
            label_width = len(label)
        elif len(label) != label_width:
            raise FamilyFormatError(
                lineno,
                "label_width",
                f"label {label!r} has width {len(label)}, expected {label_width}",
            )
        if label in seen:
            raise FamilyFormatError(
                lineno,
                "duplicate_label",
                f"label {label!r} already defined on line {seen[label]}",
            )
        bits = rest.split()
        if any(b not in ("0", "1") for b in bits):
            bad = next(b for b in bits if b not in ("0", "1"))
            raise FamilyFormatError(
                lineno, "bad_bit", f"output {bad!r} is not 0 or 1"
            )
        if len(bits) != 1 << n:
            raise FamilyFormatError(
                lineno,
                "table_length",
                f"mode {label}: {len(bits)} outputs, expected {1 << n}",
            )
        seen[label] = lineno
        modes.append((label, tuple(int(b) for b in bits)))
    if n is None:
        raise FamilyFormatError(last_line + 1, "missing_header", "no 'n=<arity>' header")
    if not modes:
        raise FamilyFormatError(last_line + 1, "empty_family", "no modes defined")
    return FunctionFamily(n=n, modes=tuple(modes))


def serialize_family(family: FunctionFamily) -> str:
    lines = [f"n={family.n}"]
    for label, table in family.modes:
        lines.append(f"{label}: " + " ".join(str(b) for b in table))
    return "\n".join(lines) + "\n"
