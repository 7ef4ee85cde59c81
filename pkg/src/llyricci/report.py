"""Edge-list parsing and lossless JSON reports.

Rationals are written as ``{"num": ..., "den": ...}``; integers beyond
the 53-bit range that JSON readers handle exactly are written as decimal
strings. Floats are rejected so that no curvature value is ever rounded.
"""

from __future__ import annotations

import dataclasses
import enum
import json
from fractions import Fraction
from importlib import resources
from typing import IO, Any

import jsonschema

from . import __version__
from .curvature import CurvatureReport
from .errors import ConstructionError, ParseError
from .graph import Graph

SAFE_INT = 2**53


def _int_out(v: int):
    return v if -SAFE_INT < v < SAFE_INT else str(v)


def rational_to_json(q: Fraction) -> dict:
    q = Fraction(q)
    return {"num": _int_out(q.numerator), "den": _int_out(q.denominator)}


def rational_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def to_json_value(obj: Any):
    """Recursively convert verdicts, records and rationals into exact JSON data."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return _int_out(obj)
    if isinstance(obj, Fraction):
        return rational_to_json(obj)
    if isinstance(obj, float):
        raise TypeError("floating-point values are not allowed in reports")
    if isinstance(obj, enum.Enum):
        return obj.value
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_json_value(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_json_value(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return [to_json_value(v) for v in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [to_json_value(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` starts a comment."""
    lines = []
    for no, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            lines.append((no, content))
    if not lines:
        raise ParseError("empty edge list", 1)
    no, header = lines[0]
    try:
        n, m = (int(t) for t in header.split())
    except ValueError:
        raise ParseError(f"header must be 'n m', got {header!r}", no) from None
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}", no)
    edges = []
    for no, content in body:
        parts = content.split()
        try:
            u, v = (int(t) for t in parts)
        except ValueError:
            raise ParseError(f"edge line must be 'u v', got {content!r}", no) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1} in {content!r}", no)
        edges.append((u, v))
    try:
        return Graph.from_edge_list(n, edges)
    except ConstructionError as exc:
        line = next(no for no, c in body if tuple(int(t) for t in c.split()) == exc.pair)
        raise ParseError(str(exc), line) from None


def format_edge_list(g: Graph) -> str:
    return "\n".join([f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]) + "\n"


def curvature_entry(report: CurvatureReport, witness: bool = False) -> dict:
    entry = {"u": report.x, "v": report.y, "distance": report.distance,
             "kappa": rational_to_json(report.kappa), "method": report.method}
    if report.kappa_alpha is not None:
        alpha, value = report.kappa_alpha
        entry["alpha"] = rational_to_json(alpha)
        entry["kappa_alpha"] = rational_to_json(value)
    if witness:
        entry["witness"] = {str(v): f for v, f in report.witness.items()}
    if report.notes:
        entry["notes"] = list(report.notes)
    return entry


def make_document(descriptor: str, g: Graph | None = None, curvature=None, verdicts=None,
                  scan=None, witness: bool = False) -> dict:
    doc: dict = {"tool": "llyricci", "version": __version__, "input": {"descriptor": descriptor}}
    if g is not None:
        doc["input"].update(n=g.n, m=g.m)
    if curvature is not None:
        doc["curvature"] = [curvature_entry(r, witness) for r in curvature]
    if verdicts is not None:
        doc["verdicts"] = [to_json_value(v) for v in verdicts]
    if scan is not None:
        summary, records = scan
        doc["scan"] = {"summary": to_json_value(summary), "records": [to_json_value(r) for r in records]}
    return doc


def load_schema() -> dict:
    return json.loads(resources.files("llyricci").joinpath("report_schema.json").read_text())


def validate_report(doc: dict):
    jsonschema.validate(doc, load_schema())


def json_report_write(doc: dict, sink: IO[str], validate: bool = True):
    if validate:
        validate_report(doc)
    json.dump(doc, sink, sort_keys=True, indent=2)
    sink.write("\n")
