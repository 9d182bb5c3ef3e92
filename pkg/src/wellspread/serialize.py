"""JSON and DOT document formats.

Graphs round-trip losslessly: a graph document names its family, the loader
rebuilds the graph from those parameters and refuses documents whose vertex
or edge lists disagree with the reconstruction.  Certificates self-validate
on load through the same checkers used at construction time.  Rationals
travel as "p/q" strings, never floats.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from .criticality import BoundaryEntry, BoundaryReport, CriticalityReport, Invariant, SweepSummary
from .cyclic import CyclicSubset, ReductionTrace, euclid_reduce
from .errors import InvalidParams
from .fractional import FractionalColoring, verify_fractional_coloring
from .graphs import (
    FamilyParams,
    LabeledGraph,
    MapKind,
    VertexMap,
    build_circular,
    build_interlacing,
    build_kneser,
    build_q,
    build_schrijver,
    delete_edge,
    delete_vertex,
    validate_map,
)

SCHEMA_VERSION = "1"

_BUILDERS = {
    "kneser": build_kneser,
    "sg": build_schrijver,
    "q": build_q,
    "circular": build_circular,
    "interlacing": build_interlacing,
}


def fraction_to_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def fraction_from_str(s: str) -> Fraction:
    try:
        num, _, den = s.partition("/")
        return Fraction(int(num), int(den) if den else 1)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParams(f"bad rational literal {s!r}") from exc


def _label_json(label) -> Any:
    if isinstance(label, CyclicSubset):
        return list(label.elements)
    return int(label)


def _family_json(fp: FamilyParams) -> dict:
    return {"tag": fp.tag, "n": fp.n, "k": fp.k}


def _family_from_json(d: dict) -> FamilyParams:
    try:
        return FamilyParams(str(d["tag"]), int(d["n"]), int(d["k"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidParams(f"bad family record {d!r}") from exc


def build_family(fp: FamilyParams, vertex_cap: Optional[int] = None) -> LabeledGraph:
    builder = _BUILDERS.get(fp.tag)
    if builder is None:
        raise InvalidParams(f"unknown family tag {fp.tag!r}")
    if vertex_cap is None:
        return builder(fp.n, fp.k)
    return builder(fp.n, fp.k, vertex_cap=vertex_cap)


def graph_to_document(
    g: LabeledGraph,
    family: Optional[FamilyParams] = None,
    deleted_vertex: Optional[int] = None,
    deleted_edge: Optional[tuple[int, int]] = None,
) -> dict:
    """Graph document: family parameters, the deletion applied if any, and
    the explicit vertex labels and sorted edge list."""
    fp = family if family is not None else g.family
    if fp is None:
        raise InvalidParams("graph documents need family parameters")
    doc: dict[str, Any] = {
        "schemaVersion": SCHEMA_VERSION,
        "family": _family_json(fp),
        "vertices": [_label_json(l) for l in g.labels],
        "edges": [[u, v] for u, v in g.edges()],
    }
    if deleted_vertex is not None:
        doc["deletedVertex"] = deleted_vertex
    if deleted_edge is not None:
        doc["deletedEdge"] = [min(deleted_edge), max(deleted_edge)]
    return doc


def graph_from_document(doc: dict) -> LabeledGraph:
    """Rebuild from the named family, reapply any recorded deletion, and
    check the result against the document's own vertex and edge lists."""
    if not isinstance(doc, dict) or doc.get("schemaVersion") != SCHEMA_VERSION:
        raise InvalidParams("unsupported or missing schemaVersion")
    fp = _family_from_json(doc.get("family", {}))
    g = build_family(fp)
    if "deletedVertex" in doc:
        g = delete_vertex(g, int(doc["deletedVertex"]))
    if "deletedEdge" in doc:
        u, v = (int(x) for x in doc["deletedEdge"])
        g = delete_edge(g, u, v)
    want_vertices = [_label_json(l) for l in g.labels]
    want_edges = [[u, v] for u, v in g.edges()]
    if doc.get("vertices") != want_vertices:
        raise InvalidParams("vertex list disagrees with the rebuilt family")
    if doc.get("edges") != want_edges:
        raise InvalidParams("edge list disagrees with the rebuilt family")
    return g


def _label_text(label) -> str:
    if isinstance(label, CyclicSubset):
        return "{" + ",".join(str(x) for x in label.elements) + "}"
    return str(label)


def graph_to_dot(g: LabeledGraph, family: Optional[FamilyParams] = None) -> str:
    """Undirected DOT text with set-literal labels; byte-stable."""
    fp = family if family is not None else g.family
    name = f"{fp.tag}_{fp.n}_{fp.k}" if fp is not None else "g"
    lines = [f"graph {name} {{"]
    for v in range(g.vertex_count):
        lines.append(f'  {v} [label="{_label_text(g.labels[v])}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def coloring_to_document(
    fc: FractionalColoring, family: FamilyParams
) -> dict:
    doc: dict[str, Any] = {
        "schemaVersion": SCHEMA_VERSION,
        "kind": "FRACTIONAL_COLORING",
        "family": _family_json(family),
        "sets": [list(s) for s in fc.sets],
        "weights": [fraction_to_str(w) for w in fc.weights],
        "value": fraction_to_str(fc.value),
    }
    if fc.excluded_vertex is not None:
        doc["excludedVertex"] = fc.excluded_vertex
    if fc.excluded_edge is not None:
        doc["excludedEdge"] = list(fc.excluded_edge)
    return doc


def coloring_from_document(doc: dict) -> FractionalColoring:
    if doc.get("kind") != "FRACTIONAL_COLORING":
        raise InvalidParams("not a fractional-coloring document")
    fp = _family_from_json(doc.get("family", {}))
    ev = doc.get("excludedVertex")
    ee = doc.get("excludedEdge")
    fc = FractionalColoring(
        tuple(tuple(int(x) for x in s) for s in doc.get("sets", ())),
        tuple(fraction_from_str(w) for w in doc.get("weights", ())),
        excluded_vertex=None if ev is None else int(ev),
        excluded_edge=None if ee is None else (int(ee[0]), int(ee[1])),
    )
    if fraction_from_str(doc.get("value", "0/1")) != fc.value:
        raise InvalidParams("declared value disagrees with the weights")
    bad = verify_fractional_coloring(build_family(fp), fc)
    if bad:
        raise InvalidParams(f"coloring fails validation: {bad[0]}")
    return fc


def map_to_document(m: VertexMap) -> dict:
    if m.source.family is None or m.target.family is None:
        raise InvalidParams("map documents need family-built endpoints")
    doc: dict[str, Any] = {
        "schemaVersion": SCHEMA_VERSION,
        "kind": "VERTEX_MAP",
        "mapKind": m.kind.name,
        "source": _family_json(m.source.family),
        "target": _family_json(m.target.family),
        "mapping": [[u, m.mapping[u]] for u in sorted(m.mapping)],
    }
    if m.excluded_vertex is not None:
        doc["excludedVertex"] = m.excluded_vertex
    if m.excluded_edge is not None:
        doc["excludedEdge"] = list(m.excluded_edge)
    if m.section is not None:
        doc["section"] = [[t, s] for t, s in sorted(m.section.items())]
    return doc


def map_from_document(doc: dict) -> VertexMap:
    if doc.get("kind") != "VERTEX_MAP":
        raise InvalidParams("not a vertex-map document")
    try:
        kind = MapKind[doc.get("mapKind", "")]
    except KeyError as exc:
        raise InvalidParams(f"unknown map kind {doc.get('mapKind')!r}") from exc
    src = build_family(_family_from_json(doc.get("source", {})))
    tgt = build_family(_family_from_json(doc.get("target", {})))
    ev = doc.get("excludedVertex")
    ee = doc.get("excludedEdge")
    sec = doc.get("section")
    m = VertexMap(
        src,
        tgt,
        {int(u): int(x) for u, x in doc.get("mapping", ())},
        kind,
        excluded_vertex=None if ev is None else int(ev),
        excluded_edge=None if ee is None else (int(ee[0]), int(ee[1])),
        section=None if sec is None else {int(t): int(s) for t, s in sec},
    )
    bad = validate_map(m)
    if bad:
        raise InvalidParams(f"map fails validation: {bad[0]}")
    return m


def trace_to_document(s: CyclicSubset, trace: ReductionTrace) -> dict:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "kind": "REDUCTION_TRACE",
        "modulus": s.modulus,
        "elements": list(s.elements),
        "steps": [
            {
                "cycleLength": st.cycle_length,
                "setSize": st.set_size,
                "quotient": st.quotient,
                "remainder": st.remainder,
                "surviving": list(st.surviving.elements),
            }
            for st in trace.steps
        ],
        "terminal": {
            "modulus": trace.terminal.modulus,
            "elements": list(trace.terminal.elements),
        },
    }


def trace_from_document(doc: dict) -> ReductionTrace:
    """Re-run the reduction on the recorded set; the document must agree."""
    if doc.get("kind") != "REDUCTION_TRACE":
        raise InvalidParams("not a reduction-trace document")
    s = CyclicSubset(int(doc["modulus"]), (int(x) for x in doc["elements"]))
    trace = euclid_reduce(s)
    if trace_to_document(s, trace) != _normalized(doc):
        raise InvalidParams("trace disagrees with recomputation")
    return trace


def _normalized(doc: dict) -> dict:
    return json.loads(json.dumps(doc))


def report_to_document(r: CriticalityReport) -> dict:
    doc: dict[str, Any] = {
        "schemaVersion": SCHEMA_VERSION,
        "kind": "REPORT",
        "reportType": "criticality",
        "family": None if r.family is None else _family_json(r.family),
        "invariant": r.invariant.name,
        "baseline": fraction_to_str(r.baseline),
        "perVertex": [[v, fraction_to_str(x)] for v, x in r.per_vertex],
        "perEdge": [
            [[u, v], fraction_to_str(x), flag] for (u, v), x, flag in r.per_edge
        ],
        "summary": r.summary.name,
    }
    if r.metadata:
        doc["metadata"] = {
            key: fraction_to_str(val) if isinstance(val, Fraction) else list(val)
            for key, val in r.metadata.items()
        }
    return doc


def report_from_document(doc: dict) -> CriticalityReport:
    """Structural re-validation: monotonicity against the baseline and
    agreement between the summary and the recorded rows."""
    if doc.get("kind") != "REPORT" or doc.get("reportType") != "criticality":
        raise InvalidParams("not a criticality report document")
    fam = doc.get("family")
    baseline = fraction_from_str(doc["baseline"])
    per_vertex = tuple((int(v), fraction_from_str(x)) for v, x in doc.get("perVertex", ()))
    per_edge = tuple(
        ((int(e[0]), int(e[1])), fraction_from_str(x), flag)
        for e, x, flag in doc.get("perEdge", ())
    )
    if any(x > baseline for _, x in per_vertex) or any(x > baseline for _, x, _ in per_edge):
        raise InvalidParams("a recorded deletion value exceeds the baseline")
    r = CriticalityReport(
        None if fam is None else _family_from_json(fam),
        Invariant[doc["invariant"]],
        baseline,
        per_vertex,
        per_edge,
        SweepSummary[doc["summary"]],
        dict(doc.get("metadata", {})),
    )
    rows = per_vertex if per_vertex else tuple((e, x) for e, x, _ in per_edge)
    drops = sum(1 for _, x in rows if x < baseline)
    if r.summary is SweepSummary.NOT_CRITICAL and drops != 0:
        raise InvalidParams("summary says nothing dropped but rows disagree")
    if r.summary is SweepSummary.VERTEX_CRITICAL and drops != len(rows):
        raise InvalidParams("summary says every deletion dropped but rows disagree")
    return r


def boundary_to_document(b: BoundaryReport) -> dict:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "kind": "REPORT",
        "reportType": "boundary",
        "entries": [[e.n, e.k, e.equal, e.predicted] for e in b.entries],
        "allMatch": b.all_match,
    }


def boundary_from_document(doc: dict) -> BoundaryReport:
    if doc.get("kind") != "REPORT" or doc.get("reportType") != "boundary":
        raise InvalidParams("not a boundary report document")
    b = BoundaryReport(
        tuple(BoundaryEntry(int(n), int(k), bool(eq), bool(pr))
              for n, k, eq, pr in doc.get("entries", ()))
    )
    if bool(doc.get("allMatch")) != b.all_match:
        raise InvalidParams("allMatch flag disagrees with the entries")
    return b


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
