"""Discharging on plane embeddings, in exact integer quarter units.

Initial charges are ``d(v) - 6`` on vertices and ``2 d(F) - 6`` on faces,
with ``d(F)`` the boundary walk length.  Two rules move charge to 4-vertices:

* R1: an 8+-vertex ``u`` sends 1/2 to each neighbouring 4-vertex ``v`` whose
  successor in the rotation at ``u`` is a 6+-vertex.
* R2: a 4+-face sends to its incident 4-vertices, once per incidence:
  (i) 4-face, all 4-vertices: 1/2 each; (ii) 4-face, three 4-vertices and
  one 6+-vertex ``u``: 3/4 to the two next to ``u`` on the walk, 1/2 to the
  opposite one; (iii) 5-face, all 4-vertices: 3/4 each; (iv) otherwise 1.

All transfers are computed from the initial structure and applied at once.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .configurations import ConfigMatch, claim1_matches, claim2_matches
from .embedding import FaceWalk, RotationSystem, trace_faces, validate_embedding
from .errors import EmbeddingError, MalformedInputError
from .graph import Graph

QUARTERS_PER_UNIT = 4
TOTAL_QUARTERS = -12 * QUARTERS_PER_UNIT

# Which rotation neighbour R1 inspects.  "next" follows the rule as stated;
# "previous" is the wording used when bounding the charge of 8+-vertices.
# The bound holds for either choice.
R1_NEIGHBOUR: Literal["next", "previous"] = "next"

Rule = Literal["R1", "R2i", "R2ii", "R2iii", "R2iv"]


@dataclass
class ChargeLedger:
    """Per-vertex and per-face charges in quarters; ``faces[i]`` owns ``face[i]``."""

    vertex: dict[int, int]
    face: list[int]
    faces: tuple[FaceWalk, ...]

    def total(self) -> int:
        return sum(self.vertex.values()) + sum(self.face)

    def copy(self) -> ChargeLedger:
        return ChargeLedger(dict(self.vertex), list(self.face), self.faces)

    def vertex_value(self, v: int) -> Fraction:
        return Fraction(self.vertex[v], QUARTERS_PER_UNIT)

    def face_value(self, i: int) -> Fraction:
        return Fraction(self.face[i], QUARTERS_PER_UNIT)


@dataclass(frozen=True)
class TransferRecord:
    source_kind: Literal["vertex", "face"]
    source: int
    target: int
    quarters: int
    rule: Rule
    multiplicity: int = 1

    @property
    def total_quarters(self) -> int:
        return self.quarters * self.multiplicity

    def to_dict(self) -> dict:
        return {
            "source": f"{self.source_kind}:{self.source}",
            "target": self.target,
            "quarters": self.quarters,
            "rule": self.rule,
            "multiplicity": self.multiplicity,
        }


def _require_connected_embedding(g: Graph, rot: RotationSystem) -> None:
    if g.order == 0:
        raise MalformedInputError("discharging needs a non-empty graph")
    if not g.is_connected():
        raise MalformedInputError("discharging needs a connected graph")
    report = validate_embedding(g, rot)
    if not report.planar:
        raise EmbeddingError(
            f"rotation system is not a plane embedding (V - E + F = {report.characteristic})"
        )


def initial_charges(g: Graph, rot: RotationSystem) -> ChargeLedger:
    _require_connected_embedding(g, rot)
    faces = tuple(trace_faces(g, rot))
    q = QUARTERS_PER_UNIT
    return ChargeLedger(
        {v: q * (g.degree(v) - 6) for v in g.vertices()},
        [q * (2 * f.size - 6) for f in faces],
        faces,
    )


def classify_face(g: Graph, face: FaceWalk) -> tuple[Rule | None, list[tuple[int, int]]]:
    """R2 case of a face and its payments as ``(walk position, quarters)``."""
    k = face.size
    if k < 4:
        return None, []
    degs = [g.degree(v) for v in face.vertices]
    fours = [i for i, d in enumerate(degs) if d == 4]
    if k == 4 and len(fours) == 4:
        return "R2i", [(i, 2) for i in fours]
    if k == 4 and len(fours) == 3:
        (ui,) = [i for i in range(4) if degs[i] != 4]
        if degs[ui] >= 6:
            return "R2ii", [(i, 3 if (i - ui) % 4 in (1, 3) else 2) for i in fours]
    if k == 5 and len(fours) == 5:
        return "R2iii", [(i, 3) for i in fours]
    return "R2iv", [(i, 4) for i in fours]


def _r1_partner(rot: RotationSystem, u: int, v: int, which: str) -> int:
    if which == "next":
        return rot.next_ccw(u, v)
    if which == "previous":
        return rot.prev_ccw(u, v)
    raise ValueError(f"unknown R1 convention {which!r}")


def apply_rules(
    g: Graph,
    rot: RotationSystem,
    ledger: ChargeLedger,
    r1_neighbour: str = R1_NEIGHBOUR,
) -> tuple[ChargeLedger, list[TransferRecord]]:
    transfers: list[TransferRecord] = []
    for u in g.vertices():
        if g.degree(u) < 8:
            continue
        for v in rot[u]:
            if g.degree(v) == 4 and g.degree(_r1_partner(rot, u, v, r1_neighbour)) >= 6:
                transfers.append(TransferRecord("vertex", u, v, 2, "R1"))
    for fi, face in enumerate(ledger.faces):
        rule, pays = classify_face(g, face)
        if rule is None:
            continue
        grouped: dict[tuple[int, int], int] = defaultdict(int)
        for pos, q in pays:
            grouped[(face.vertices[pos], q)] += 1
        for (v, q), mult in sorted(grouped.items()):
            transfers.append(TransferRecord("face", fi, v, q, rule, mult))

    out = ledger.copy()
    for t in transfers:
        if t.source_kind == "vertex":
            out.vertex[t.source] -= t.total_quarters
        else:
            out.face[t.source] -= t.total_quarters
        out.vertex[t.target] += t.total_quarters
    return out, transfers


def replay_transfer(
    g: Graph,
    rot: RotationSystem,
    faces: tuple[FaceWalk, ...],
    t: TransferRecord,
    r1_neighbour: str = R1_NEIGHBOUR,
) -> bool:
    """Re-derive one transfer from the rule text, independently of :func:`apply_rules`."""
    if t.multiplicity < 1 or g.degree(t.target) != 4:
        return False
    if t.rule == "R1":
        u, v = t.source, t.target
        return (
            t.source_kind == "vertex"
            and t.quarters == 2
            and t.multiplicity == 1
            and g.degree(u) >= 8
            and g.has_edge(u, v)
            and g.degree(_r1_partner(rot, u, v, r1_neighbour)) >= 6
        )
    if t.source_kind != "face":
        return False
    walk = faces[t.source].vertices
    incidences = [i for i, x in enumerate(walk) if x == t.target]
    degs = [g.degree(x) for x in walk]
    n4 = degs.count(4)
    if t.rule == "R2i":
        ok = len(walk) == 4 and n4 == 4 and t.quarters == 2
        return ok and t.multiplicity == len(incidences)
    if t.rule == "R2ii":
        if not (len(walk) == 4 and n4 == 3):
            return False
        big = [i for i, d in enumerate(degs) if d != 4]
        if degs[big[0]] < 6:
            return False
        beside = {(big[0] + 1) % 4, (big[0] + 3) % 4}
        want = [i for i in incidences if (i in beside) == (t.quarters == 3)]
        return t.quarters in (2, 3) and t.multiplicity == len(want)
    if t.rule == "R2iii":
        ok = len(walk) == 5 and n4 == 5 and t.quarters == 3
        return ok and t.multiplicity == len(incidences)
    if t.rule == "R2iv":
        special = (
            (len(walk) == 4 and n4 == 4)
            or (len(walk) == 4 and n4 == 3 and max(degs) >= 6)
            or (len(walk) == 5 and n4 == 5)
        )
        return len(walk) >= 4 and not special and t.quarters == 4 and t.multiplicity == len(incidences)
    return False


def check_total(ledger: ChargeLedger) -> int:
    """Total charge in quarters (``-48`` for every connected plane graph)."""
    return ledger.total()


@dataclass(frozen=True)
class VertexViolation:
    vertex: int
    quarters: int
    rotation: tuple[int, ...]


@dataclass(frozen=True)
class FaceViolation:
    face: int
    quarters: int
    walk: tuple[int, ...]
    degrees: tuple[int, ...]


def verify_claim3(g: Graph, rot: RotationSystem, ledger_after: ChargeLedger) -> list[VertexViolation]:
    """6+-vertices left with negative charge."""
    return [
        VertexViolation(v, ledger_after.vertex[v], rot[v])
        for v in g.vertices()
        if g.degree(v) >= 6 and ledger_after.vertex[v] < 0
    ]


def verify_claim4(g: Graph, rot: RotationSystem, ledger_after: ChargeLedger) -> list[FaceViolation]:
    """Faces of length at least 3 left with negative charge.

    Shorter walks exist only in K1 and K2 and start negative.  Among the
    rest, only a 4-face with three 4-vertices whose fourth vertex has degree
    1, 2, 3 or 5 can fire: graphs with all degrees even and at least 4 never
    produce one.
    """
    out = []
    for i, q in enumerate(ledger_after.face):
        if q < 0 and ledger_after.faces[i].size >= 3:
            walk = ledger_after.faces[i].vertices
            out.append(FaceViolation(i, q, walk, tuple(g.degree(v) for v in walk)))
    return out


def degenerate_paying_faces(g: Graph, ledger: ChargeLedger) -> list[int]:
    """4+-faces with a repeated boundary vertex; reported for inspection."""
    return [
        i for i, f in enumerate(ledger.faces)
        if f.size >= 4 and f.is_degenerate() and any(g.degree(v) == 4 for v in f.vertices)
    ]


@dataclass
class DischargeResult:
    before: ChargeLedger
    after: ChargeLedger
    transfers: list[TransferRecord]
    claim3: list[VertexViolation]
    claim4: list[FaceViolation]
    degenerate_faces: list[int]
    degrees: dict[int, int]

    @property
    def negative_four_vertices(self) -> list[int]:
        return sorted(v for v, q in self.after.vertex.items() if q < 0 and self.degrees[v] == 4)


def discharge(g: Graph, rot: RotationSystem, r1_neighbour: str = R1_NEIGHBOUR) -> DischargeResult:
    before = initial_charges(g, rot)
    after, transfers = apply_rules(g, rot, before, r1_neighbour)
    return DischargeResult(
        before,
        after,
        transfers,
        verify_claim3(g, rot, after),
        verify_claim4(g, rot, after),
        degenerate_paying_faces(g, before),
        g.degrees(),
    )


@dataclass(frozen=True)
class FaceAround:
    """Face between consecutive rotation neighbours ``left`` and ``right`` of a vertex."""

    left: int
    right: int
    face: int
    size: int


@dataclass
class NegativeVertexCase:
    vertex: int
    quarters: int
    neighbours: tuple[int, ...]
    neighbour_degrees: tuple[int, ...]
    faces: list[FaceAround]
    received: list[TransferRecord]
    local_match: ConfigMatch | None

    @property
    def triangles(self) -> int:
        return sum(1 for f in self.faces if f.size == 3)

    @property
    def faces_distinct(self) -> bool:
        return len({f.face for f in self.faces}) == len(self.faces)


@dataclass
class AuditReport:
    all_even: bool
    all_at_least_4: bool
    explanation: str
    claim1: list[ConfigMatch] = field(default_factory=list)
    claim2: list[ConfigMatch] = field(default_factory=list)
    negative: list[NegativeVertexCase] = field(default_factory=list)
    total_before: int | None = None
    total_after: int | None = None

    @property
    def degree_audit_passed(self) -> bool:
        return self.all_even and self.all_at_least_4

    @property
    def has_match(self) -> bool:
        return bool(self.claim1 or self.claim2)

    @property
    def coexists(self) -> bool:
        """A negative 4-vertex and a reducible configuration were both found."""
        return bool(self.negative) and self.has_match


def _local_match(v: int, c1: list[ConfigMatch], c2: list[ConfigMatch]) -> ConfigMatch | None:
    for m in c1:
        if v in (m.u, m.v):
            return m
    for m in c2:
        if m.v == v:
            return m
    return None


def counterexample_audit(g: Graph, rot: RotationSystem, r1_neighbour: str = R1_NEIGHBOUR) -> AuditReport:
    """Run the minimal-counterexample argument on one embedding.

    Checks the degree profile first and stops there if some degree is odd
    or below 4.  Otherwise discharges and, for every 4-vertex left negative,
    records its incident faces, neighbour degrees, received charge and a
    reducible configuration containing it.
    """
    degs = g.degrees()
    odd = sorted(v for v, d in degs.items() if d % 2)
    small = sorted(v for v, d in degs.items() if d < 4)
    if odd or small:
        parts = []
        if odd:
            parts.append(f"odd-degree vertices {odd[:10]}")
        if small:
            parts.append(f"vertices of degree below 4 {small[:10]}")
        return AuditReport(
            not odd, not small,
            "degree audit failed: " + "; ".join(parts)
            + ". A minimal counterexample has all degrees even and at least 4, so the "
            "discharging argument does not apply.",
        )
    c1 = list(claim1_matches(g))
    c2 = list(claim2_matches(g))
    res = discharge(g, rot, r1_neighbour)
    dart_face: dict[tuple[int, int], int] = {}
    for i, f in enumerate(res.before.faces):
        for d in f.darts:
            dart_face[d] = i
    received: dict[int, list[TransferRecord]] = defaultdict(list)
    for t in res.transfers:
        received[t.target].append(t)
    cases = []
    for v in sorted(degs):
        if degs[v] != 4 or res.after.vertex[v] >= 0:
            continue
        nbrs = rot[v]
        around = []
        for a in nbrs:
            b = rot.next_ccw(v, a)
            fi = dart_face[(a, v)]
            around.append(FaceAround(a, b, fi, res.before.faces[fi].size))
        cases.append(NegativeVertexCase(
            v, res.after.vertex[v], nbrs, tuple(degs[x] for x in nbrs), around,
            received[v], _local_match(v, c1, c2),
        ))
    if cases and (c1 or c2):
        expl = "negative 4-vertices coexist with reducible configurations"
    elif cases:
        expl = "negative 4-vertices found but no reducible configuration"
    else:
        expl = "no negative 4-vertex after discharging"
    return AuditReport(True, True, expl, c1, c2, cases, res.before.total(), res.after.total())
