"""JSON schemas for every external value, plus atomic file output.

All emitted JSON is deterministic: containers are pre-sorted, scalars over Q
are strings like "3/2", and files end with a newline. Writes go through a
temporary file and an atomic rename.
"""

from __future__ import annotations

import json
import os
import tempfile
from typing import Any

from .complexes import (
    DecompositionReport,
    PolytopeIncidence,
    SimplicialComplex,
    VertexSet,
    _mask_vertices,
)
from .fields import parse_field
from .quasitoric import (
    Certificate,
    CharMatrix,
    GradedAlgebra,
    KoszulOfAlgebraResult,
    ZpRecoveryReport,
)
from .rings import ComparisonResult, Fingerprint, GorensteinReport, KunnethReport, SocleReport, SplitWitness
from .tor import BettiTable, TorAlgebra


# -- complexes -------------------------------------------------------------------


def complex_to_json(k: SimplicialComplex) -> dict:
    return {"m": k.m, "facets": [list(f.vertices) for f in k.facets]}


def complex_from_json(obj: Any) -> SimplicialComplex:
    if not isinstance(obj, dict) or "m" not in obj or "facets" not in obj:
        raise ValueError('complex JSON needs keys "m" and "facets"')
    m = int(obj["m"])
    if m == 0:
        return SimplicialComplex.empty_complex()
    return SimplicialComplex.from_facets(m, obj["facets"])


def polytope_to_json(p: PolytopeIncidence) -> dict:
    return {"n": p.n, "m": p.m, "vertices": [list(v.vertices) for v in p.vertices]}


def polytope_from_json(obj: Any) -> PolytopeIncidence:
    if not isinstance(obj, dict) or not {"n", "m", "vertices"} <= set(obj):
        raise ValueError('polytope JSON needs keys "n", "m" and "vertices"')
    return PolytopeIncidence.of(int(obj["n"]), int(obj["m"]), obj["vertices"])


def charmatrix_to_json(lam: CharMatrix) -> dict:
    return {"n": lam.n, "m": lam.m, "rows": [list(r) for r in lam.rows]}


def charmatrix_from_json(obj: Any) -> CharMatrix:
    if not isinstance(obj, dict) or "rows" not in obj:
        raise ValueError('characteristic matrix JSON needs key "rows"')
    lam = CharMatrix.of(obj["rows"])
    if "n" in obj and int(obj["n"]) != lam.n:
        raise ValueError("n does not match the row count")
    if "m" in obj and int(obj["m"]) != lam.m:
        raise ValueError("m does not match the row length")
    return lam


# -- tables and algebras -----------------------------------------------------------


def betti_table_to_json(table: BettiTable) -> dict:
    entries = [
        {"i": i, "J": list(verts), "dim": dim} for i, verts, dim in table.sorted_items()
    ]
    return {"field": table.field.token(), "m": table.m, "entries": entries}


def betti_table_from_json(obj: Any) -> BettiTable:
    field = parse_field(obj["field"])
    m = int(obj["m"])
    entries: dict[tuple[int, int], int] = {}
    for row in obj["entries"]:
        mask = VertexSet.of(m, row["J"]).mask
        entries[(int(row["i"]), mask)] = int(row["dim"])
    return BettiTable(field, m, entries)


def tor_algebra_to_json(algebra: TorAlgebra) -> dict:
    field = algebra.field
    basis = []
    for c in algebra.basis:
        basis.append(
            {
                "id": c.index,
                "i": c.hom_degree,
                "J": list(c.multidegree.vertices),
                "degree": c.cohomological_degree,
                "rep": [
                    {"face": list(_mask_vertices(mask)), "c": field.scalar_to_json(coeff)}
                    for mask, coeff in c.rep
                ],
            }
        )
    table = algebra.structure_constants()
    products = []
    for (a, b), terms in sorted(table.items()):
        products.append(
            {
                "a": a,
                "b": b,
                "terms": [
                    {"id": g, "c": field.scalar_to_json(coeff)}
                    for g, coeff in sorted(terms.items())
                ],
            }
        )
    return {
        "field": field.token(),
        "m": algebra.k.m,
        "complex": complex_to_json(algebra.k),
        "basis": basis,
        "products": products,
    }


def element_from_json(obj: Any, algebra: TorAlgebra) -> dict[int, object]:
    """Sparse element: [{"id": basis index, "c": scalar}, ...]."""
    out: dict[int, object] = {}
    for term in obj:
        g = int(term["id"])
        if not 0 <= g < algebra.dim:
            raise ValueError(f"basis id {g} out of range")
        out[g] = algebra.field.scalar_from_json(term["c"])
    return out


def vertexset_to_json(v: VertexSet) -> list[int]:
    return list(v.vertices)


def decomposition_to_json(report: DecompositionReport) -> dict:
    return {
        "m": report.m,
        "parts": [vertexset_to_json(p) for p in report.parts],
        "cone_vertices": vertexset_to_json(report.cone_vertices),
        "trivial": report.is_trivial,
        "factors": [complex_to_json(f) for f in report.factors],
    }


def socle_to_json(report: SocleReport) -> dict:
    return {
        "field": report.field.token(),
        "top_degree": report.top_degree,
        "dims": [[deg, dim] for deg, dim in sorted(report.socle_dims.items())],
        "poincare_duality": report.is_poincare_duality,
    }


def gorenstein_to_json(report: GorensteinReport) -> dict:
    return {
        "field": report.field.token(),
        "gorenstein": report.is_gorenstein,
        "algebraic_verdict": report.algebraic,
        "combinatorial_verdict": report.combinatorial,
        "gorenstein_star": report.is_gorenstein_star,
        "socle": socle_to_json(report.socle),
    }


def split_witness_to_json(w: SplitWitness) -> dict:
    return {
        "U": vertexset_to_json(w.u),
        "V": vertexset_to_json(w.v),
        "factor_U": complex_to_json(w.factor_u),
        "factor_V": complex_to_json(w.factor_v),
        "nontrivial": w.is_nontrivial,
    }


def kunneth_to_json(report: KunnethReport) -> dict:
    return {
        "passed": report.passed,
        "join_dim": report.join_dim,
        "first_discrepancy": report.first_discrepancy,
    }


def fingerprint_to_json(fp: Fingerprint) -> dict:
    fields = {}
    for token in sorted(fp.components):
        comp = fp.components[token]
        fields[token] = {
            "betti": [[i, s, d] for (i, s), d in sorted(comp["betti"].items())],
            "hilbert": [[deg, d] for deg, d in sorted(comp["hilbert"].items())],
            "socle_degrees": [list(t) for t in comp["socle_degrees"]],
            "pairing_ranks": [
                [a, b, r] for (a, b), r in sorted(comp["pairing_ranks"].items())
            ],
            "multidegree_multisets": [
                [i, s, list(ms)] for (i, s), ms in sorted(comp["multidegree_multisets"].items())
            ],
        }
    return {"m": fp.m, "fields": fields}


def comparison_to_json(result: ComparisonResult) -> dict:
    return {
        "distinguished": result.distinguished,
        "witness": result.witness,
        "verdict": str(result),
    }


def quotient_to_json(algebra: GradedAlgebra, socle_report: SocleReport) -> dict:
    return {
        "field": algebra.field.token(),
        "total_dim": algebra.dim,
        "dims": [[deg, dim] for deg, dim in sorted(algebra.dims_by_degree().items())],
        "basis": [
            {"exponents": list(lab), "degree": deg}
            for lab, deg in zip(algebra.labels, algebra.degrees)
        ],
        "generators": list(algebra.generators),
        "socle": socle_to_json(socle_report),
    }


def koszul_result_to_json(result: KoszulOfAlgebraResult) -> dict:
    return {
        "dims": [[h, internal, d] for (h, internal), d in sorted(result.dims.items())],
        "poincare_series": [[h, d] for h, d in sorted(result.poincare_series().items())],
        "by_cohomological_degree": [
            [deg, d] for deg, d in sorted(result.by_cohomological_degree().items())
        ],
    }


def recovery_to_json(report: ZpRecoveryReport) -> dict:
    return {
        "passed": report.passed,
        "quotient_side": [[d, n] for d, n in sorted(report.quotient_side.items())],
        "moment_angle_side": [[d, n] for d, n in sorted(report.moment_angle_side.items())],
        "first_discrepancy": report.first_discrepancy,
    }


def certificate_to_json(cert: Certificate) -> dict:
    out = {
        "certified": cert.certified,
        "reason": cert.reason,
        "parts": [vertexset_to_json(p) for p in cert.parts],
        "cone_vertices": vertexset_to_json(cert.cone_vertices),
    }
    if cert.search is not None:
        out["search"] = {
            "found": cert.search.found,
            "detail": cert.search.detail,
            "trials": cert.search.trials,
            "seed": cert.search.seed,
        }
    return out


# -- file I/O ---------------------------------------------------------------------


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def atomic_write_json(path: str, obj: Any) -> None:
    """Serialize and rename into place so readers never see partial output."""
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(dumps(obj))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}") from None
