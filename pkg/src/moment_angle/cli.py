"""Command-line front end.

Human-readable summaries go to standard output; JSON goes to ``--out`` (never
mixed). Identical inputs and seed produce byte-identical outputs. Exit codes:
0 success, 1 input errors, 2 a verification command found a mismatch.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog
from .errors import MomentAngleError
from .fields import DEFAULT_FIELDS, FieldSpec, parse_field
from .quasitoric import (
    charmatrix_catalog,
    charmatrix_inventory,
    indecomposability_certificate,
    is_lsop,
    koszul_homology_of_algebra,
    quotient_algebra,
    search_quotient_tensor_split,
    verify_zp_recovery,
)
from .rings import (
    compare,
    extract_join_from_tensor,
    fingerprint,
    is_gorenstein,
    search_tensor_split,
    verify_kunneth,
)
from .serialize import (
    atomic_write_json,
    betti_table_to_json,
    certificate_to_json,
    charmatrix_from_json,
    comparison_to_json,
    complex_from_json,
    decomposition_to_json,
    element_from_json,
    fingerprint_to_json,
    gorenstein_to_json,
    kunneth_to_json,
    load_json,
    quotient_to_json,
    recovery_to_json,
    socle_to_json,
    split_witness_to_json,
)
from .rings import socle as socle_of
from .tor import betti_table_hochster, tor_algebra
from .serialize import complex_to_json, koszul_result_to_json, tor_algebra_to_json

DEFAULT_SEED = 1729


def _load_complex(path: str):
    return complex_from_json(load_json(path))


def _load_charmatrix(path: str):
    return charmatrix_from_json(load_json(path))


def _fields_arg(text: str) -> list[FieldSpec]:
    return [parse_field(part) for part in text.split(",") if part.strip()]


def _emit(args, payload: dict) -> None:
    if getattr(args, "out", None):
        atomic_write_json(args.out, payload)


def cmd_catalog(args) -> int:
    if args.action == "list":
        print("complexes:")
        for name, params, desc in catalog.inventory():
            params = f" {params}" if params else ""
            print(f"  {name}{params}: {desc}")
        print("characteristic matrices:")
        for name, params, desc in charmatrix_inventory():
            params = f" {params}" if params else ""
            print(f"  {name}{params}: {desc}")
        return 0
    k = catalog.build(args.name, args.params)
    print(f"{args.name}({', '.join(map(str, args.params))}): m={k.m}, dim={k.dim}, "
          f"{len(k.facets)} facets, {len(k.missing_faces())} missing faces")
    _emit(args, complex_to_json(k))
    return 0


def cmd_betti(args) -> int:
    k = _load_complex(args.complex)
    field = parse_field(args.field)
    table = betti_table_hochster(k, field)
    print(f"betti table over {field.token()}: total dim {table.total_dim()}")
    for degree, dim in table.by_cohomological_degree().items():
        print(f"  H^{degree}: {dim}")
    _emit(args, betti_table_to_json(table))
    return 0


def cmd_ring(args) -> int:
    k = _load_complex(args.complex)
    field = parse_field(args.field)
    algebra = tor_algebra(k, field)
    nonzero = sum(1 for v in algebra.structure_constants().values() if v)
    print(
        f"cohomology ring over {field.token()}: dim {algebra.dim}, "
        f"{nonzero} nonzero basis products"
    )
    _emit(args, tor_algebra_to_json(algebra))
    return 0


def cmd_gorenstein(args) -> int:
    k = _load_complex(args.complex)
    fields = _fields_arg(args.fields)
    reports = [is_gorenstein(k, field) for field in fields]
    for report in reports:
        print(
            f"{report.field.token()}: gorenstein={report.is_gorenstein} "
            f"gorenstein*={report.is_gorenstein_star}"
        )
    _emit(args, {"reports": [gorenstein_to_json(r) for r in reports]})
    return 0


def cmd_decompose(args) -> int:
    k = _load_complex(args.complex)
    report = k.join_decomposition()
    if report.is_trivial:
        print("indecomposable: single part, no cone vertices")
    else:
        parts = ", ".join(str(p) for p in report.parts)
        print(f"parts: {parts}; cone vertices: {report.cone_vertices}")
    _emit(args, decomposition_to_json(report))
    return 0


def cmd_kunneth(args) -> int:
    k1 = _load_complex(args.complex)
    k2 = _load_complex(args.complex2)
    field = parse_field(args.field)
    report = verify_kunneth(k1, k2, field)
    print(f"kunneth check over {field.token()}: {'pass' if report.passed else 'FAIL'}")
    if report.first_discrepancy:
        print(f"  first discrepancy: {report.first_discrepancy}")
    _emit(args, kunneth_to_json(report))
    return 0 if report.passed else 2


def cmd_extract_split(args) -> int:
    k = _load_complex(args.complex)
    field = parse_field(args.field)
    algebra = tor_algebra(k, field)
    if args.search:
        result = search_tensor_split(algebra, trials=args.trials, seed=args.seed)
        if result.found:
            w = result.witness
            print(f"split found: U={w.u} V={w.v}")
            _emit(args, {
                "found": True,
                "witness": split_witness_to_json(w),
                "trials": result.trials,
                "seed": result.seed,
            })
        else:
            print(
                f"no split found in {result.trials} seeded trials "
                "(the search is not complete; this is not a proof of indecomposability)"
            )
            _emit(args, {"found": False, "trials": result.trials, "seed": result.seed})
        return 0
    if not args.elements:
        print("extract-split needs --elements FILE or --search", file=sys.stderr)
        return 1
    obj = load_json(args.elements)
    t1 = element_from_json(obj["t1"], algebra)
    t2 = element_from_json(obj["t2"], algebra)
    witness = extract_join_from_tensor(algebra, t1, t2)
    print(f"U = {witness.u}, V = {witness.v} (nontrivial: {witness.is_nontrivial})")
    _emit(args, split_witness_to_json(witness))
    return 0


def cmd_fingerprint(args) -> int:
    k = _load_complex(args.complex)
    fields = _fields_arg(args.fields)
    fp = fingerprint(k, fields)
    for token, comp in fp.components.items():
        print(f"{token}: hilbert {comp['hilbert']}")
    _emit(args, fingerprint_to_json(fp))
    return 0


def cmd_compare(args) -> int:
    k1 = _load_complex(args.complex)
    k2 = _load_complex(args.complex2)
    fields = _fields_arg(args.fields)
    result = compare(k1, k2, fields)
    print(str(result))
    _emit(args, comparison_to_json(result))
    return 0


def cmd_quotient(args) -> int:
    k = _load_complex(args.complex)
    lam = _load_charmatrix(args.charmatrix)
    field = parse_field(args.field)
    algebra = quotient_algebra(k, lam, field)
    report = socle_of(algebra)
    dims = ", ".join(f"H^{d}={n}" for d, n in algebra.dims_by_degree().items())
    print(f"quotient over {field.token()}: total dim {algebra.dim}; {dims}")
    payload = quotient_to_json(algebra, report)
    payload["koszul_homology"] = koszul_result_to_json(koszul_homology_of_algebra(algebra))
    _emit(args, payload)
    return 0


def cmd_quasitoric_verify(args) -> int:
    k = _load_complex(args.complex)
    lam = _load_charmatrix(args.charmatrix)
    field = parse_field(args.field)
    report = verify_zp_recovery(k, lam, field)
    print(f"moment-angle recovery over {field.token()}: {'pass' if report.passed else 'FAIL'}")
    for degree in sorted(set(report.quotient_side) | set(report.moment_angle_side)):
        left = report.quotient_side.get(degree, 0)
        right = report.moment_angle_side.get(degree, 0)
        print(f"  H^{degree}: quotient {left}, moment-angle {right}")
    _emit(args, recovery_to_json(report))
    return 0 if report.passed else 2


def cmd_certify(args) -> int:
    k = _load_complex(args.complex)
    lam = _load_charmatrix(args.charmatrix)
    field = parse_field(args.field)
    cert = indecomposability_certificate(
        k, lam, field, seed=args.seed, search_trials=args.trials
    )
    print("Certified" if cert.certified else "NotCertified")
    print(f"  {cert.reason}")
    _emit(args, certificate_to_json(cert))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moment-angle",
        description=(
            "Exact bigraded cohomology of moment-angle complexes, Gorenstein "
            "verdicts, join decompositions, and quasitoric quotient rings."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, complex2=False, charmatrix=False, field=True, fields=False, seed=False):
        p.add_argument("--complex", required=True, help="path to complex JSON")
        if complex2:
            p.add_argument("--complex2", required=True, help="path to second complex JSON")
        if charmatrix:
            p.add_argument("--charmatrix", required=True, help="path to matrix JSON")
        if field:
            p.add_argument("--field", default="Q", help='coefficients: "Q" or "F<p>"')
        if fields:
            default = ",".join(f.token().replace("Fp:", "F") for f in DEFAULT_FIELDS)
            p.add_argument("--fields", default=default, help="comma list, e.g. F2,F3,Q")
        if seed:
            p.add_argument("--seed", type=int, default=DEFAULT_SEED)
            p.add_argument("--trials", type=int, default=40)
        p.add_argument("--out", help="write JSON here (atomically)")

    p = sub.add_parser("betti", help="bigraded betti table")
    add_common(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("ring", help="full cohomology ring with structure constants")
    add_common(p)
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("gorenstein", help="both Gorenstein verdicts")
    add_common(p, field=False, fields=True)
    p.set_defaults(func=cmd_gorenstein)

    p = sub.add_parser("decompose", help="finest join decomposition")
    add_common(p, field=False)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("kunneth", help="verify the join/tensor comparison")
    add_common(p, complex2=True)
    p.set_defaults(func=cmd_kunneth)

    p = sub.add_parser("extract-split", help="join split from socle-spanning elements")
    add_common(p, seed=True)
    p.add_argument("--elements", help="path to JSON with t1, t2 coordinate lists")
    p.add_argument("--search", action="store_true", help="randomized search instead")
    p.set_defaults(func=cmd_extract_split)

    p = sub.add_parser("fingerprint", help="relabeling-invariant algebra fingerprint")
    add_common(p, field=False, fields=True)
    p.set_defaults(func=cmd_fingerprint)

    p = sub.add_parser("compare", help="first fingerprint component that differs")
    add_common(p, complex2=True, field=False, fields=True)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("quasitoric-quotient", help="artinian quotient by an lsop")
    add_common(p, charmatrix=True)
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("quasitoric-verify", help="quotient Koszul homology vs moment-angle")
    add_common(p, charmatrix=True)
    p.set_defaults(func=cmd_quasitoric_verify)

    p = sub.add_parser("certify", help="tensor-indecomposability certificate")
    add_common(p, charmatrix=True, seed=True)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("catalog", help="list or build shipped examples")
    p.add_argument("action", choices=["list", "get"])
    p.add_argument("name", nargs="?", help="catalog entry name (for get)")
    p.add_argument("params", nargs="*", type=int, help="integer parameters")
    p.add_argument("--out", help="write the complex JSON here")
    p.set_defaults(func=cmd_catalog)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "catalog" and args.action == "get" and not args.name:
        parser.error("catalog get needs a name")
    try:
        return args.func(args)
    except MomentAngleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
