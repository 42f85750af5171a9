from __future__ import annotations

import contextlib
import csv
import sys
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, List, Optional, TextIO

from . import __version__
from .comet import CometRecord
from .config import STDOUT
from .log import get_logger
from .violation import CrossoverViolation

logger = get_logger("EMITTER")

COMET_HEADER = ["n", "g", "sylvester", "G"]
VIOLATION_HEADER = ["n", "sylvester", "G", "near_tie"]


def format_float(value: float) -> str:
    """17 significant digits round-trips every double; no locale involved."""
    return f"{value:.17g}"


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@contextlib.contextmanager
def open_output(path: str) -> Iterator[TextIO]:
    if path == STDOUT:
        yield sys.stdout
        sys.stdout.flush()
        return
    with open(path, "w", newline="", encoding="utf-8") as handle:
        yield handle
    logger.info(f"Wrote {path}")


def provenance_lines(provenance: Dict[str, Any]) -> List[str]:
    lines = [f"# sylvester {__version__}"]
    for key, value in provenance.items():
        rendered = format_float(value) if isinstance(value, float) else str(value)
        lines.append(f"# {key}={rendered}")
    return lines


def _write_comments(out: TextIO, provenance: Optional[Dict[str, Any]]) -> None:
    if provenance:
        for line in provenance_lines(provenance):
            out.write(line + "\n")


def write_comet_csv(
    records: Iterable[CometRecord],
    out: TextIO,
    with_phi_bar: bool = False,
    provenance: Optional[Dict[str, Any]] = None,
) -> int:
    _write_comments(out, provenance)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(COMET_HEADER + (["phi_bar"] if with_phi_bar else []))

    rows = 0
    for record in records:
        row = [record.n, record.g, format_float(record.sylvester), format_float(record.big_g)]
        if with_phi_bar:
            row.append(format_float(record.phi_bar) if record.phi_bar is not None else "")
        writer.writerow(row)
        rows += 1
    return rows


def write_violations_csv(
    violations: Iterable[CrossoverViolation],
    out: TextIO,
    provenance: Optional[Dict[str, Any]] = None,
) -> int:
    _write_comments(out, provenance)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(VIOLATION_HEADER)

    rows = 0
    for violation in violations:
        writer.writerow(
            [
                violation.n,
                format_float(violation.sylvester),
                format_float(violation.big_g),
                "true" if violation.near_tie else "false",
            ]
        )
        rows += 1
    return rows
