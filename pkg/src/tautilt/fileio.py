"""JSON readers/writers for algebras, modules, pairs, complexes, graphs."""

from __future__ import annotations

import json

from . import modules, pairs, silting
from .algebra import Algebra, QuiverPresentation
from .errors import TauTiltError
from .fields import field_from_config


class FormatError(TauTiltError):
    pass


def load_algebra(obj):
    """Build an algebra from a parsed algebra file (or a path)."""
    if isinstance(obj, str):
        with open(obj) as fh:
            obj = json.load(fh)
    try:
        field = field_from_config(obj.get("field", {"kind": "rational"}))
        quiver = obj["quiver"]
        pres = QuiverPresentation(
            vertices=list(quiver["vertices"]),
            arrows=[(a["name"], a["from"], a["to"]) for a in quiver["arrows"]],
            relations=[
                [(t["coeff"], list(t["path"])) for t in rel]
                for rel in obj.get("relations", [])
            ],
            nilpotency_bound=int(obj["nilpotency_bound"]),
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed algebra file: {exc}") from exc
    return Algebra(pres, field)


def dump_algebra(algebra):
    field = algebra.field
    fcfg = (
        {"kind": "rational"}
        if field.characteristic == 0
        else {"kind": "prime", "p": field.characteristic}
    )
    pres = algebra.presentation
    return {
        "field": fcfg,
        "quiver": {
            "vertices": list(pres.vertices),
            "arrows": [
                {"name": n, "from": s, "to": t} for n, s, t in pres.arrows
            ],
        },
        "relations": [
            [{"coeff": str(c), "path": list(p)} for c, p in rel]
            for rel in pres.relations
        ],
        "nilpotency_bound": pres.nilpotency_bound,
    }


def load_module(algebra, obj):
    if isinstance(obj, str):
        with open(obj) as fh:
            obj = json.load(fh)
    field = algebra.field
    try:
        dims = [0] * algebra.n_vertices
        for name, d in obj["dims"].items():
            dims[algebra.vertex_index[name]] = int(d)
        maps = []
        given = obj.get("maps", {})
        for name, s, t in algebra.arrows:
            if name in given:
                mat = [
                    [field.parse(str(x)) for x in row] for row in given[name]
                ]
            else:
                mat = [[field.zero] * dims[s] for _ in range(dims[t])]
            maps.append(mat)
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed module file: {exc}") from exc
    return modules.Module(algebra, dims, maps)


def dump_module(m):
    A = m.algebra
    return {
        "dims": {
            A.vertex_names[v]: m.dims[v]
            for v in range(A.n_vertices)
            if m.dims[v]
        },
        "maps": {
            A.arrows[ai][0]: [[str(x) for x in row] for row in mat]
            for ai, mat in enumerate(m.maps)
            if mat and mat[0]
        },
    }


def load_pair(algebra, obj):
    if isinstance(obj, str):
        with open(obj) as fh:
            obj = json.load(fh)
    try:
        summands = [load_module(algebra, s) for s in obj.get("summands", [])]
        support = list(obj.get("support", []))
    except FormatError:
        raise
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed pair file: {exc}") from exc
    return pairs.check_pair(algebra, summands, support)


def dump_pair(pair):
    return {
        "summands": [dump_module(m) for m in pair.summands],
        "support": pair.support_names(),
    }


def load_complex(algebra, obj):
    if isinstance(obj, str):
        with open(obj) as fh:
            obj = json.load(fh)
    field = algebra.field

    def copies(mults):
        out = []
        for v in range(algebra.n_vertices):
            out.extend([v] * int(mults.get(algebra.vertex_names[v], 0)))
        return out

    try:
        copies1 = copies(obj.get("deg-1", {}))
        copies0 = copies(obj.get("deg0", {}))
        blocks = [
            [[field.parse(str(x)) for x in entry] for entry in row]
            for row in obj.get("d", [])
        ]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed complex file: {exc}") from exc
    if len(blocks) != len(copies0) or any(
        len(row) != len(copies1) for row in blocks
    ):
        raise FormatError("differential shape does not match multiplicities")
    for row in blocks:
        for entry in row:
            if len(entry) != algebra.dim:
                raise FormatError(
                    "differential entries must have one coefficient per "
                    "algebra basis element"
                )
    return silting.TwoTermComplex(algebra, copies1, copies0, blocks)


def dump_complex(cx):
    A = cx.algebra
    m1, m0 = cx.multiplicities()
    return {
        "deg-1": {A.vertex_names[v]: m1[v] for v in range(A.n_vertices) if m1[v]},
        "deg0": {A.vertex_names[v]: m0[v] for v in range(A.n_vertices) if m0[v]},
        "d": [[[str(x) for x in entry] for entry in row] for row in cx.blocks],
    }


# ---------------------------------------------------------------------------
# exchange graph export


def key_to_str(key):
    return ";".join(",".join(str(x) for x in vec) for vec in key)


def str_to_key(s):
    if not s:
        return ()
    return tuple(
        tuple(int(x) for x in part.split(",")) for part in s.split(";")
    )


def graph_to_json(graph):
    """Canonical JSON document for an exchange graph (sorted, stable)."""
    vertices = []
    for key in graph.sorted_keys():
        pair = graph.vertices[key]
        vertices.append(
            {
                "key": key_to_str(key),
                "label": pair.label(),
                "summands": [
                    {
                        "dims": list(m.dims),
                        "gvector": list(modules.g_vector(m)),
                    }
                    for m in pair.summands
                ],
                "support": pair.support_names(),
            }
        )
    arrows = [
        {"from": key_to_str(a), "to": key_to_str(b), "position": pos}
        for a, b, pos in sorted(graph.arrows)
    ]
    return {"vertices": vertices, "arrows": arrows, "complete": graph.complete}


def export_graph(graph, fmt):
    """Stable textual export; fmt is 'json' or 'dot'."""
    if fmt == "json":
        return json.dumps(graph_to_json(graph), indent=2, sort_keys=True)
    if fmt == "dot":
        lines = ["digraph exchange {"]
        for key in graph.sorted_keys():
            pair = graph.vertices[key]
            lines.append(
                f'  "{key_to_str(key)}" [label="{pair.label()}"];'
            )
        for a, b, pos in sorted(graph.arrows):
            lines.append(
                f'  "{key_to_str(a)}" -> "{key_to_str(b)}" '
                f'[label="{pos}"];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise FormatError(f"unknown export format {fmt!r}")


def graph_keys_from_json(doc):
    """Canonical keys of an exported graph document (for round trips)."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    return sorted(str_to_key(v["key"]) for v in doc["vertices"])
