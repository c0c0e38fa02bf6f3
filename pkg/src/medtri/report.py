"""CSV / JSON / human serialization of search records, family hits and survey reports."""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, TextIO

from .core import SIDE_LABELS, Triangle, analyze_medians
from .families import DedupedHit, FamilyHit
from .prop_checks import Prop1Report
from .search import SearchRecord, classify

RECORD_COLUMNS = [
    "a", "b", "c",
    "quad_a", "quad_b", "quad_c",
    "status_a", "status_b", "status_c",
    "twice_mu_a", "twice_mu_b", "twice_mu_c",
    "integral_count", "tags",
]
HIT_COLUMNS = RECORD_COLUMNS + ["family", "params", "claimed_medians"]
PROP1_COLUMNS = [
    "k", "n1", "n2", "n3", "m", "M", "e1", "a", "e2", "b", "e3", "c",
    "branch", "conditions_hold", "violated_details", "precondition_flags",
]


def _csv_value(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return ";".join(str(x) for x in v)
    return v


def record_row(rec: SearchRecord) -> dict:
    return rec.to_dict()


def hit_row(hit) -> dict:
    """Row for a FamilyHit, or for a DedupedHit (all sources joined)."""
    if isinstance(hit, DedupedHit):
        hits = hit.hits
        t = hit.triangle
    else:
        hits = [hit]
        t = hit.triangle
    an = analyze_medians(t)
    rec = SearchRecord(t, an.quads, an.statuses, an.integral_count, classify(t, an))
    row = rec.to_dict()
    row["family"] = [h.family for h in hits]
    row["params"] = [",".join(map(str, h.params)) for h in hits]
    row["claimed_medians"] = [
        ",".join(f"{label}={mu}" for label, mu in h.claimed_medians) for h in hits
    ]
    if len(hits) == 1:
        row["family"], row["params"], row["claimed_medians"] = (
            row["family"][0], row["params"][0], row["claimed_medians"][0])
    return row


def prop1_row(rep: Prop1Report) -> dict:
    (m, M), (e1, a), (e2, b), (e3, c) = rep.decompositions
    k, n1, n2, n3 = rep.instance.as_tuple()
    return {
        "k": k, "n1": n1, "n2": n2, "n3": n3,
        "m": m, "M": M, "e1": e1, "a": a, "e2": e2, "b": b, "e3": e3, "c": c,
        "branch": rep.branch,
        "conditions_hold": rep.conditions_hold,
        "violated_details": rep.violated_details,
        "precondition_flags": list(rep.precondition_flags),
    }


def write_rows(rows: Iterable[dict], columns: list[str], fmt: str, out: TextIO) -> int:
    """Stream rows as ``csv`` or ``json``; returns the number written."""
    n = 0
    if fmt == "csv":
        w = csv.DictWriter(out, fieldnames=columns, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: _csv_value(row[k]) for k in columns})
            n += 1
    elif fmt == "json":
        out.write("[")
        for row in rows:
            out.write(",\n" if n else "\n")
            out.write(json.dumps({k: row[k] for k in columns}))
            n += 1
        out.write("\n]\n" if n else "]\n")
    else:
        raise ValueError(f"unsupported format {fmt!r}")
    return n


def read_records_json(text: str) -> list[SearchRecord]:
    return [SearchRecord.from_dict(d) for d in json.loads(text)]


def read_records_csv(text: str) -> list[SearchRecord]:
    return [SearchRecord.from_dict(d) for d in csv.DictReader(io.StringIO(text))]


def human_record(rec: SearchRecord) -> str:
    sides = " ".join(str(s) for s in rec.triangle.sides)
    mus = "  ".join(f"mu_{lbl}={s.format_mu()}" for lbl, s in zip(SIDE_LABELS, rec.statuses))
    tags = ",".join(rec.tags) or "-"
    return f"{sides}  |  {mus}  |  integral={rec.integral_count}  |  {tags}"


def human_medians(t: Triangle) -> list[str]:
    an = analyze_medians(t)
    lines = []
    for lbl, side, q, st in zip(SIDE_LABELS, t.sides, an.quads, an.statuses):
        lines.append(f"side {lbl} = {side}: 4*mu^2 = {q}, {st.kind}, median = {st.format_mu()}")
    lines.append(f"integral medians: {an.integral_count}")
    return lines


def human_hit(hit) -> str:
    row = hit_row(hit)
    sides = " ".join(str(s) for s in hit.triangle.sides)
    return f"{sides}  |  {row['family']}  params={row['params']}  medians: {row['claimed_medians']}"


def human_prop1(rep: Prop1Report) -> str:
    r = prop1_row(rep)
    head = f"(k, n1, n2, n3) = ({r['k']}, {r['n1']}, {r['n2']}, {r['n3']})"
    vals = f"v2 = (m={r['m']}, e1={r['e1']}, e2={r['e2']}, e3={r['e3']})"
    if rep.conditions_hold:
        return f"{head}  {vals}  branch {rep.branch} holds"
    return f"{head}  {vals}  no branch holds: {rep.violated_details}"
