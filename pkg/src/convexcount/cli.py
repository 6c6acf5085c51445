"""Command-line interface: matrix generation, counting, characteristic
polynomials, dominant eigenpairs and the verification suites.

Big integers are always rendered as decimal strings (never scientific
notation) and identical invocations produce byte-identical output.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from mpmath import mp

from . import spectral, verify
from .exact import charpoly_determinant
from .production import (
    CLASS_NAMES,
    GraphClassSpec,
    KANGULATION,
    connected_class,
    connected_totals,
    count_sequence,
    geometric_class,
    k_angulation_class,
    partition_class,
    relation_class,
)

FORMAT_VERSION = "1"
MAX_DEFAULT_LEVEL = 64
DETERMINANT_CAP = 8


class UsageError(Exception):
    pass


def _parse_c_values(raw: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in raw.split(",") if part.strip())
    except ValueError:
        raise UsageError(f"--c-values must be comma-separated integers, got {raw!r}")


def _class_spec(args, size_hint: int) -> GraphClassSpec:
    name = args.cls
    if name == KANGULATION:
        if args.k is None:
            raise UsageError("kangulation needs --k")
        return k_angulation_class(args.k)
    if args.k is not None:
        raise UsageError(f"--k only applies to kangulation, not {name}")
    if name == "geometric":
        return geometric_class()
    if name == "connected":
        return connected_class()
    if name == "partition":
        return partition_class()
    if getattr(args, "c_values", None):
        return relation_class(_parse_c_values(args.c_values))
    return relation_class(connected_totals(max(2, size_hint)))


def _size_arg(args) -> int:
    if args.cls == KANGULATION:
        if args.r is None:
            raise UsageError("kangulation needs --r")
        return args.r
    if args.n is None:
        raise UsageError(f"{args.cls} needs --n")
    return args.n


def _record(command: str, args, payload: dict) -> dict:
    params = {}
    for key in ("n", "k", "r", "n_max", "method", "c_values", "tol"):
        val = getattr(args, key, None)
        if val is not None:
            params[key] = str(val)
    return {
        "format_version": FORMAT_VERSION,
        "command": command,
        "class": args.cls,
        "parameters": params,
        "payload": payload,
    }


def _print_json(record: dict) -> None:
    print(json.dumps(record, indent=2))


def cmd_matrix(args) -> int:
    size = _size_arg(args)
    spec = _class_spec(args, size)
    matrix = spec.build_matrix(size)
    rows = matrix.to_lists()
    if args.format == "csv":
        for row in rows:
            print(",".join(str(x) for x in row))
    elif args.format == "json":
        _print_json(
            _record("matrix", args, {"size": size, "matrix": [[str(x) for x in row] for row in rows]})
        )
    else:
        width = max(len(str(x)) for row in rows for x in row)
        for row in rows:
            print(" ".join(str(x).rjust(width) for x in row))
    return 0


def cmd_counts(args) -> int:
    if args.n_max > MAX_DEFAULT_LEVEL and not args.force:
        raise UsageError(
            f"--n-max guard is {MAX_DEFAULT_LEVEL}; pass --force to override"
        )
    spec = _class_spec(args, args.n_max + 2)
    rows = count_sequence(spec, args.n_max)
    if args.bfile:
        for row in rows:
            print(f"{row.level} {row.total}")
        return 0
    if args.format == "json":
        payload = {
            "levels": [
                {
                    "level": row.level,
                    "vector": [str(e) for e in row.vector.entries],
                    "total": str(row.total),
                }
                for row in rows
            ]
        }
        _print_json(_record("counts", args, payload))
    elif args.format == "csv":
        for row in rows:
            print(",".join([str(row.level)] + [str(e) for e in row.vector.entries] + [str(row.total)]))
    else:
        for row in rows:
            vec = ", ".join(str(e) for e in row.vector.entries)
            print(f"level {row.level}: ({vec})  total {row.total}")
    return 0


def _charpoly(args, spec: GraphClassSpec, n: int):
    if args.method == "closed":
        if spec.name == KANGULATION:
            return spectral.charpoly_closed_kangulation(spec.k, n)
        if spec.name == "geometric":
            return spectral.charpoly_closed_geometric(n)
        if spec.name == "connected":
            return spectral.charpoly_closed_connected(n)
        if spec.name == "partition":
            return spectral.charpoly_closed_partition(n)
        raise UsageError("no closed form exists for the relation matrix")
    if args.method == "determinant":
        if n > DETERMINANT_CAP and not args.force:
            raise UsageError(
                f"determinant method capped at n={DETERMINANT_CAP}; pass --force to override"
            )
        if n == 0:
            from .exact import IntPolynomial

            return IntPolynomial.one()
        return charpoly_determinant(spec.build_matrix(n))
    return spectral.charpoly_recurrence(spec.build_matrix(max(1, n)), n)[n]


def cmd_charpoly(args) -> int:
    n = _size_arg(args)
    spec = _class_spec(args, max(1, n))
    poly = _charpoly(args, spec, n)
    coeffs = [str(poly.coefficient(t)) for t in range(max(0, n) + 1)]
    if args.format == "json":
        _print_json(_record("charpoly", args, {"degree": n, "coefficients": coeffs}))
    elif args.format == "csv":
        print(",".join(coeffs))
    else:
        print(" ".join(coeffs))
    return 0


def cmd_eigen(args) -> int:
    n = _size_arg(args)
    spec = _class_spec(args, n)
    matrix = spec.build_matrix(n)
    tol = Fraction(args.tol)
    poly = spectral.charpoly_recurrence(matrix)[n]
    roots = spectral.real_roots(poly, tol)
    if not roots:
        print("no real eigenvalue found", file=sys.stderr)
        return 1
    digits = args.digits
    with mp.workprec(spectral.precision_bits()):
        selected = roots if args.all_roots else [max(roots, key=lambda r: (abs(r), r))]
        entries = []
        for root in selected:
            pair = spectral.eigenvector_from_charpoly(matrix, root)
            entries.append(
                {
                    "eigenvalue": mp.nstr(pair.lam, digits),
                    "vector": [mp.nstr(x, digits) for x in pair.vector],
                    "residual": mp.nstr(pair.residual, 5),
                }
            )
    payload = {"real_root_count": len(roots), "eigenpairs": entries}
    if args.format == "json":
        _print_json(_record("eigen", args, payload))
    else:
        print(f"real roots found: {len(roots)}")
        for e in entries:
            print(f"eigenvalue {e['eigenvalue']}")
            print("  vector (x_{n-1}..x_0): " + ", ".join(e["vector"]))
            print(f"  residual {e['residual']}")
    return 0


def cmd_verify(args) -> int:
    suites = verify.SUITE_NAMES if args.suite == "all" else (args.suite,)
    kwargs_by_suite = {
        "vectors": {"n_max": args.n_max},
        "charpoly": {},
        "eigen": {},
        "oracle": {
            "n_graphs": min(args.n_max, 7),
            "workers": args.workers,
            "force": args.force,
        },
        "lemma1": {"limit": args.max},
        "relation": {"n_oracle": min(args.n_max, 7), "force": args.force},
    }
    failures = 0
    for suite in suites:
        for result in verify.run_suite(suite, **kwargs_by_suite[suite]):
            if result.passed:
                print(f"PASS {result.name}")
            else:
                failures += 1
                print(f"FAIL {result.name}: {result.detail}")
    print(f"verify: {failures} failure(s)" if failures else "verify: all checks passed")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="convexcount",
        description="Exact counting of plane graph classes on convex point sets "
        "via production matrices, with closed-form, spectral and brute-force "
        "verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_class_options(p, with_n=True):
        p.add_argument("cls", metavar="class", choices=CLASS_NAMES)
        if with_n:
            p.add_argument("--n", type=int, help="matrix size / level")
        p.add_argument("--k", type=int, help="polygon size for kangulation")
        p.add_argument(
            "--c-values",
            help="comma-separated counts c_2,c_3,... for the relation matrix "
            "(default: connected-graph totals)",
        )

    p = sub.add_parser("matrix", help="print a production matrix")
    add_class_options(p)
    p.add_argument("--r", type=int, help="number of k-gons (kangulation size)")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("counts", help="iterate the production matrix and print counts")
    add_class_options(p, with_n=False)
    p.add_argument("--n-max", type=int, required=True, dest="n_max")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--bfile", action="store_true", help="emit OEIS b-file lines")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("charpoly", help="characteristic polynomial coefficients")
    add_class_options(p)
    p.add_argument("--r", type=int, help="number of k-gons (kangulation size)")
    p.add_argument(
        "--method", choices=("recurrence", "closed", "determinant"), default="recurrence"
    )
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("eigen", help="dominant eigenvalue, eigenvector and residual")
    add_class_options(p)
    p.add_argument("--r", type=int, help="number of k-gons (kangulation size)")
    p.add_argument("--tol", default="1e-40", help="eigenvalue refinement tolerance")
    p.add_argument("--digits", type=int, default=30)
    p.add_argument("--all-roots", action="store_true", dest="all_roots")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_eigen)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=verify.SUITE_NAMES + ("all",))
    p.add_argument("--n-max", type=int, default=6, dest="n_max")
    p.add_argument("--max", type=int, default=12, help="lemma1 exhaustive bound")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
