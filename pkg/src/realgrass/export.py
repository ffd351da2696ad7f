"""Serialization of tables, graphs and polynomials into output documents.

A document is a plain dict ``{schema_version, request, payload, ...}``;
:func:`dumps` turns it into deterministic bytes (sorted keys, fixed indent).
Partitions are always written bottom-to-top, as in the library, with an
explicit ``row_order`` marker.  DOT labels are the one exception: they show
rows top-first, the way diagrams are drawn.
"""

from __future__ import annotations

import json

from .checkered import FillVariant, checkered_fill, weight
from .cochain import (
    ORACLE_CAPACITY,
    SNF_ORACLE,
    AbelianGroup,
    CohomologyTable,
    Coefficients,
    EdgeClass,
    classify_edges,
)
from .qpoly import (
    IntPolynomial,
    euler_characteristic,
    fq_point_count,
    p_closed,
    p_star_closed,
    p_sum,
    parity_case,
    poincare_polynomial,
    reciprocity_check,
)
from .schubert import DEFAULT_CAPACITY, GrassmannShape, Partition, build_bruhat_graph

SCHEMA_VERSION = "1"
ROW_ORDER = "bottom_up"


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def dumps_line(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


def document(request: dict, payload, **extra) -> dict:
    doc = {"schema_version": SCHEMA_VERSION, "request": request, "payload": payload}
    doc.update(extra)
    return doc


def group_to_json(g: AbelianGroup, degree: int) -> dict:
    return {"degree": degree, "free_rank": g.free_rank, "torsion": list(g.torsion)}


def group_from_json(d: dict) -> AbelianGroup:
    return AbelianGroup(d["free_rank"], tuple(d["torsion"]))


def table_payload(table: CohomologyTable) -> list[dict]:
    return [group_to_json(g, j) for j, g in enumerate(table.groups)]


def table_meta(table: CohomologyTable) -> dict:
    return {
        "coefficients": table.coefficients.value,
        "indexing": table.indexing,
        "provenance": table.provenance,
        "oracle_confirmed": table.provenance == SNF_ORACLE,
        "notes": list(table.notes),
        "pretty": [str(g) for g in table.groups],
    }


def table_from_json(shape: GrassmannShape, payload: list[dict], meta: dict) -> CohomologyTable:
    return CohomologyTable(
        shape,
        Coefficients(meta["coefficients"]),
        tuple(group_from_json(d) for d in payload),
        meta["provenance"],
        indexing=meta["indexing"],
        notes=tuple(meta["notes"]),
    )


def partition_json(lam: Partition) -> dict:
    return {"rows": list(lam.rows), "row_order": ROW_ORDER, "size": lam.size}


def node_id(lam: Partition) -> str:
    return "c" + "_".join(map(str, lam.rows))


def poly_json(p: IntPolynomial, var: str = "q") -> dict:
    return {"coefficients": list(p.coefficients), "text": p.format(var)}


def graph_payload(shape: GrassmannShape, variant: str, *, capacity=DEFAULT_CAPACITY) -> dict:
    """Nodes and edges; ``variant`` is ``standard``, ``shifted`` or ``plain``."""
    graph = build_bruhat_graph(shape, capacity=capacity)
    fill = FillVariant.SHIFTED if variant == "shifted" else FillVariant.STANDARD
    lattice = None if variant == "plain" else classify_edges(shape, fill, capacity=capacity)
    nodes = []
    for lam in graph.cells():
        node = {"id": node_id(lam), "partition": partition_json(lam), "degree": lam.size}
        if lattice is not None:
            node["weight"] = weight(lam, shape, fill)
            node["letters_top_down"] = checkered_fill(lam, shape, fill).rows_top_down()
        nodes.append(node)
    edges = []
    for e in graph.edges:
        cls = "plain" if lattice is None else lattice.edge_class[e].value
        edges.append(
            {
                "source": node_id(e.source),
                "target": node_id(e.target),
                "reflection": e.reflection_index,
                "box": [e.box_row, e.box_col],
                "class": cls,
            }
        )
    return {
        "variant": variant,
        "weight_name": {"standard": "eta", "shifted": "eta_star"}.get(variant),
        "nodes": nodes,
        "edges": edges,
        "double_edge_count": sum(1 for e in edges if e["class"] == EdgeClass.DOUBLE.value),
    }


def graph_dot(shape: GrassmannShape, variant: str, *, capacity=DEFAULT_CAPACITY) -> str:
    payload = graph_payload(shape, variant, capacity=capacity)
    title = {"standard": "G", "shifted": "G*", "plain": "B"}[variant]
    lines = [
        f'digraph "{title}({shape.k},{shape.n})" {{',
        "  // node labels: rows top-first | weight",
        "  rankdir=TB;",
        "  node [shape=box, fontname=monospace];",
    ]
    by_degree: dict[int, list[dict]] = {}
    for node in payload["nodes"]:
        by_degree.setdefault(node["degree"], []).append(node)
    for degree in sorted(by_degree):
        ids = " ".join(f'"{n["id"]}";' for n in by_degree[degree])
        lines.append(f"  {{ rank=same; {ids} }}")
    for node in payload["nodes"]:
        lam = Partition(tuple(node["partition"]["rows"]))
        label = str(lam) if "weight" not in node else f"{lam} | {node['weight']}"
        lines.append(f'  "{node["id"]}" [label="{label}"];')
    for e in payload["edges"]:
        style = ", penwidth=2,style=bold" if e["class"] == "double" else ""
        lines.append(f'  "{e["source"]}" -> "{e["target"]}" [label="s{e["reflection"]}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def polynomial_payload(shape: GrassmannShape) -> dict:
    pc = fq_point_count(shape)
    p = p_sum(shape)
    closed = p_closed(shape)
    payload = {
        "p_sum": poly_json(p),
        "p_closed": poly_json(closed),
        "p_closed_matches": p == closed,
        "p_star_sum": poly_json(p_sum(shape, FillVariant.SHIFTED)),
        "p_star_closed": None,
        "parity_case": parity_case(shape).case,
        "poincare": poly_json(poincare_polynomial(shape), "t"),
        "euler_characteristic": euler_characteristic(shape),
        "point_count": {
            "p": poly_json(pc.polynomial),
            "shift_exponent": pc.shift_exponent,
            "full": poly_json(pc.full),
            "assumes": "sqrt(-1) in F_q",
        },
        "reciprocity": reciprocity_check(shape, p),
    }
    if shape.n % 2:
        payload["p_star_closed"] = poly_json(p_star_closed(shape))
    return payload


def oracle_available(shape: GrassmannShape) -> bool:
    return shape.n <= ORACLE_CAPACITY
