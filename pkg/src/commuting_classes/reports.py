"""Plain-data renderings (dicts, TSV, JSON) of computed objects."""

from __future__ import annotations

import json
from dataclasses import asdict
from importlib import resources

from .commuting import commuting_matrix, is_split
from .frobenius import FrobeniusReport
from .group_core import QuotientData
from .matching import ClassMatching, CommutingTuple, verify_class_matching
from .partitions import format_partition


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def tsv(header: list[str], rows: list[list]) -> str:
    lines = ["\t".join(header)] + ["\t".join(str(x) for x in row) for row in rows]
    return "\n".join(lines) + "\n"


def load_schema(name: str) -> dict:
    text = resources.files("commuting_classes").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def class_rows(Q: QuotientData) -> list[dict]:
    G = Q.group
    return [
        {"class_id": C.class_id, "rep": G.render(C.rep), "size": C.size,
         "coset": Q.class_exponent(C), "split": is_split(Q, C)}
        for C in G.classes
    ]


def classes_json(Q: QuotientData) -> dict:
    G = Q.group
    return {"group": G.name, "order": G.order, "quotient_order": Q.quotient_order,
            "t_rep": G.render(Q.t_rep), "classes": class_rows(Q)}


def relation_json(Q: QuotientData) -> dict:
    G = Q.group
    M = commuting_matrix(G)
    k = len(G.classes)
    return {
        "group": G.name,
        "nodes": [{"id": r["class_id"], "coset": r["coset"], "split": r["split"], "size": r["size"],
                   "rep": r["rep"]} for r in class_rows(Q)],
        "edges": [[i, j] for i in range(k) for j in range(i + 1, k) if M[i, j]],
    }


def matching_json(Q: QuotientData, M: ClassMatching, left_ids=None, right_ids=None) -> dict:
    G = Q.group
    out = {
        "coset_x": M.coset_x,
        "pairs": [
            {"left_rep": G.render(G.classes[a].rep), "right_rep": G.render(G.classes[b].rep),
             "witness": [G.render(w.c), G.render(w.d)]}
            for a, b, w in M.pairs
        ],
        "verified": bool(left_ids is not None and verify_class_matching(Q, M, left_ids, right_ids)),
    }
    if M.experimental:
        out["coset_y"] = M.target_coset
        out["experimental"] = True
    return out


def partition_json(Q: QuotientData, tuples: list[CommutingTuple]) -> dict:
    G = Q.group
    return {
        "group": G.name,
        "p": Q.quotient_order,
        "coprime_exponents": list(tuples[0].exponents) if tuples else [],
        "tuples": [
            {"classes": list(T.classes), "reps": [G.render(g) for g in T.reps]} for T in tuples
        ],
    }


def frobenius_json(name: str, report: FrobeniusReport) -> dict:
    d = asdict(report)
    d["group"] = name
    return d


def coarsen_json(lam, mu, nu, coarsenings_of_lam) -> dict:
    return {
        "lambda": format_partition(lam),
        "mu": format_partition(mu) if mu is not None else None,
        "common_coarsening": format_partition(nu) if nu is not None else None,
        "coarsenings": sorted((format_partition(x) for x in coarsenings_of_lam),
                              key=lambda s: [-int(t) for t in s.split("+")]),
    }
