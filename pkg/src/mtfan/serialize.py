"""JSON documents for inputs and results.

All geometric numbers are emitted as exact integer/rational strings ("3",
"-1/2") so round-trips are bit-exact; structural counters (ids, dimensions
of faces/cones, vertex counts) stay plain JSON integers.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import InputFormatError
from .quiver import build_algebra, build_module


def frac_str(x):
    return str(Fraction(x))


def parse_frac(s):
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputFormatError(f"not a rational number: {s!r}") from exc


def vec_strs(vec):
    return [frac_str(x) for x in vec]


def parse_vec(items):
    return tuple(parse_frac(s) for s in items)


def module_from_doc(doc):
    """Build (algebra, module) from an input document.

    Expected shape:
        {"p": int, "vertices": [...], "arrows": [{"name","from","to"}, ...],
         "relations": [[{"coeff": int, "path": [...]}, ...], ...],
         "module": {"dims": {vertex: int}, "maps": {arrow: [[int]]}}}
    """
    if not isinstance(doc, dict):
        raise InputFormatError("input document must be a JSON object")
    for key in ("p", "vertices", "arrows", "module"):
        if key not in doc:
            raise InputFormatError(f"input document is missing {key!r}")
    algebra = build_algebra(doc)
    mod = doc["module"]
    if not isinstance(mod, dict) or "dims" not in mod:
        raise InputFormatError('"module" must be an object with "dims"')
    dims = {str(k): int(v) for k, v in mod["dims"].items()}
    maps = {str(k): v for k, v in mod.get("maps", {}).items()}
    return algebra, build_module(algebra, dims, maps)


def algebra_doc(algebra):
    return {
        "p": algebra.p,
        "vertices": list(algebra.vertices),
        "arrows": [
            {
                "name": a.name,
                "from": algebra.vertices[a.source],
                "to": algebra.vertices[a.target],
            }
            for a in algebra.arrows
        ],
        "relations": [
            [
                {
                    "coeff": coeff,
                    "path": [algebra.arrows[i].name for i in path],
                }
                for coeff, path in rel
            ]
            for rel in algebra.relations
        ],
    }


def polytope_doc(polytope):
    return {
        "n": polytope.n,
        "vertices": [vec_strs(v) for v in polytope.vertices],
        "faces": [
            {
                "id": i,
                "dim": f.dim,
                "vertex_ids": list(f.vertex_ids),
                "children": list(polytope.face_children(i)),
            }
            for i, f in enumerate(polytope.faces)
        ],
    }


def cone_doc(cone, cid=None):
    doc = {
        "dim": cone.dim,
        "equalities": [vec_strs(v) for v in cone.eqs],
        "inequalities": [vec_strs(v) for v in cone.ineqs],
        "lineality": [vec_strs(v) for v in cone.lineality],
        "rays": [vec_strs(v) for v in cone.rays],
    }
    if cid is not None:
        doc = {"id": cid, **doc}
    return doc


def cone_from_doc(doc, n):
    """Rebuild a canonical cone from its serialized H-representation."""
    from .polyhedra import cone_from_hrep

    eqs = [tuple(int(parse_frac(s)) for s in row) for row in doc["equalities"]]
    ineqs = [
        tuple(int(parse_frac(s)) for s in row) for row in doc["inequalities"]
    ]
    return cone_from_hrep(n, eqs, ineqs)


def class_doc(data):
    return {
        "t": vec_strs(data.t_dims),
        "tbar": vec_strs(data.tbar_dims),
        "w": vec_strs(data.w_dims),
        "f": vec_strs(data.f_dims),
        "fbar": vec_strs(data.fbar_dims),
        "supp": [vec_strs(d) for d in data.supp_dims],
    }


def fan_doc(mtf):
    return {
        "p": mtf.module.algebra.p,
        "n": mtf.n,
        "module_dims": vec_strs(mtf.module.dims),
        "newton": polytope_doc(mtf.newton),
        "cones": [
            {
                **cone_doc(mtf.cones[i], cid=i),
                "newton_face_id": data.newton_face_id,
                "class": class_doc(data),
            }
            for i, data in enumerate(mtf.classes)
        ],
    }


def classify_doc(mtf, theta, cone, data):
    return {
        "theta": vec_strs(theta),
        "cone": cone_doc(cone, cid=data.cone_index),
        "newton_face_id": data.newton_face_id,
        "class": class_doc(data),
    }


def paths_doc(catalog):
    return {
        "nodes": [
            {"cone_id": c, "vertex": vec_strs(v)}
            for c, v in zip(catalog.cone_indices, catalog.vertices)
        ],
        "edges": [list(e) for e in catalog.edges],
        "increasing_paths": [list(p) for p in catalog.increasing_paths],
        "maximal_paths": [list(p) for p in catalog.maximal_paths],
        "maximal_newton_paths": [
            [vec_strs(v) for v in catalog.newton_path(p)]
            for p in catalog.maximal_paths
        ],
    }


def report_doc(report):
    return {
        "checks": report.checks,
        "violations": list(report.failures),
        "ok": report.ok,
    }


def validation_doc(report):
    return {
        "face_closure_violations": list(report.face_closure_violations),
        "intersection_violations": list(report.intersection_violations),
        "completeness_violations": list(report.completeness_violations),
        "ok": report.ok,
    }
