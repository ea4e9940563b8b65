"""JSON reports with a fixed key order.

Every report carries the schema tag, tool version, command, input source and
digest, the command's result payload and the wall time.  Colourings are
always re-verified here, independently of whatever produced them.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Any

from .colouring import Colouring, is_odd_colouring, is_proper, odd_defects
from .configurations import ConfigMatch
from .discharging import QUARTERS_PER_UNIT, AuditReport, DischargeResult
from .graph import Graph

SCHEMA = "oddcolour-report/1"
TOOL = "oddcolour"
VERSION = "0.1.0"

VOLATILE_KEYS = ("wall_time_s",)


def input_digest(payload: str) -> str:
    return "sha256:" + hashlib.sha256(payload.encode("utf-8")).hexdigest()


def build_report(
    command: str,
    source: str | None,
    payload: str | None,
    result: dict[str, Any],
    exit_code: int,
    wall_time: float,
) -> dict[str, Any]:
    return {
        "schema": SCHEMA,
        "tool": TOOL,
        "version": VERSION,
        "command": command,
        "input": source,
        "input_digest": input_digest(payload) if payload is not None else None,
        "result": result,
        "exit_code": exit_code,
        "wall_time_s": round(wall_time, 6),
    }


def render_json(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2, ensure_ascii=True) + "\n"


def strip_volatile(report: dict[str, Any]) -> dict[str, Any]:
    return {k: v for k, v in report.items() if k not in VOLATILE_KEYS}


def _units(quarters: int) -> int | str:
    f = Fraction(quarters, QUARTERS_PER_UNIT)
    return f.numerator if f.denominator == 1 else str(f)


def colouring_payload(g: Graph, c: Colouring) -> dict[str, Any]:
    """Colouring as a vertex-indexed list plus an independent verification flag."""
    total = c.is_total(g)
    verified = total and is_odd_colouring(g, c)
    return {
        "palette": c.k,
        "colours_used": len(c.used()),
        "colouring": c.as_list(g),
        "verified": verified,
    }


def verify_payload(g: Graph, c: Colouring) -> dict[str, Any]:
    proper = is_proper(g, c)
    defects = odd_defects(g, c) if proper else []
    return {
        "palette": c.k,
        "proper": proper,
        "odd_defects": [d.vertex for d in defects],
        "odd_colouring": proper and not defects,
    }


def match_payload(m: ConfigMatch) -> dict[str, Any]:
    return m.to_dict()


def discharge_payload(g: Graph, res: DischargeResult, r1_neighbour: str) -> dict[str, Any]:
    before, after = res.before, res.after
    return {
        "unit": "quarter",
        "r1_neighbour": r1_neighbour,
        "total_before": before.total(),
        "total_after": after.total(),
        "total_before_units": _units(before.total()),
        "total_after_units": _units(after.total()),
        "vertices": [
            {"id": v, "degree": g.degree(v), "before": before.vertex[v], "after": after.vertex[v]}
            for v in g.vertices()
        ],
        "faces": [
            {"index": i, "size": f.size, "walk": list(f.vertices), "before": before.face[i], "after": after.face[i]}
            for i, f in enumerate(before.faces)
        ],
        "transfers": [t.to_dict() for t in res.transfers],
        "claim3_violations": [
            {"vertex": x.vertex, "quarters": x.quarters, "rotation": list(x.rotation)} for x in res.claim3
        ],
        "claim4_violations": [
            {"face": x.face, "quarters": x.quarters, "walk": list(x.walk), "degrees": list(x.degrees)}
            for x in res.claim4
        ],
        "negative_four_vertices": res.negative_four_vertices,
        "degenerate_faces": res.degenerate_faces,
    }


def audit_payload(rep: AuditReport) -> dict[str, Any]:
    return {
        "all_degrees_even": rep.all_even,
        "all_degrees_at_least_4": rep.all_at_least_4,
        "degree_audit_passed": rep.degree_audit_passed,
        "explanation": rep.explanation,
        "total_before": rep.total_before,
        "total_after": rep.total_after,
        "claim1_matches": [match_payload(m) for m in rep.claim1],
        "claim2_matches": [match_payload(m) for m in rep.claim2],
        "negative_four_vertices": [
            {
                "vertex": c.vertex,
                "quarters": c.quarters,
                "rotation": list(c.neighbours),
                "neighbour_degrees": list(c.neighbour_degrees),
                "incident_face_sizes": [f.size for f in c.faces],
                "triangles": c.triangles,
                "received": [t.to_dict() for t in c.received],
                "local_match": match_payload(c.local_match) if c.local_match else None,
            }
            for c in rep.negative
        ],
        "coexists": rep.coexists,
    }
