"""Command line front end.

Exit codes: 0 success, 1 usage or argument error, 2 internal falsification
(two independent computations disagreed, or a verification check failed).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import export
from .cochain import (
    Coefficients,
    CohomologyTable,
    cohomology,
    cohomology_snf_oracle,
    dual_coefficients,
    is_orientable,
    reverse_to_homology,
)
from .errors import FalsificationError, RealGrassError
from .schubert import DEFAULT_CAPACITY, GrassmannShape
from .verify import run_checks, shapes_up_to

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FALSIFIED = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="realgrass", description="Integral cohomology of real Grassmannians Gr(k,n).")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--capacity-override",
        action="store_true",
        help=f"lift the n <= {DEFAULT_CAPACITY} size guard",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("cohomology", parents=[common], help="cohomology (or homology) table")
    _shape_args(p)
    p.add_argument("--coefficients", choices=["constant", "twisted"], default="constant")
    p.add_argument("--homology", action="store_true", help="integral homology via duality")
    p.add_argument("--oracle", action="store_true", help="confirm with the Smith-form oracle")
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("graph", parents=[common], help="weak Bruhat / incidence graph")
    _shape_args(p)
    p.add_argument("--variant", choices=["standard", "shifted", "plain"], default="standard")
    p.add_argument("--format", choices=["dot", "json"], default="json")

    p = sub.add_parser("poly", parents=[common], help="p(q), p*(q), Poincare polynomial, point count")
    _shape_args(p)

    p = sub.add_parser("verify", parents=[common], help="run every cross-check")
    p.add_argument("k", type=int, nargs="?")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--max-n", type=int)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("table", parents=[common], help="batch cohomology documents for all shapes up to --max-n")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--out", default="-", help="output directory, or - for JSON lines on stdout")
    p.add_argument("--cache-dir", help="cache directory (default: <out>/cache)")
    p.add_argument("--jobs", type=int, default=1)
    return parser


def _shape_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)


def _capacity(args) -> int | None:
    return None if args.capacity_override else DEFAULT_CAPACITY


def _shape(args, k: int, n: int) -> GrassmannShape:
    try:
        shape = GrassmannShape(k, n)
    except RealGrassError as exc:
        raise UsageError(str(exc)) from exc
    try:
        shape.check_capacity(_capacity(args))
    except RealGrassError as exc:
        raise UsageError(f"{exc} (use --capacity-override)") from exc
    return shape


def _compute_table(shape: GrassmannShape, coeffs: Coefficients, oracle: bool, capacity) -> CohomologyTable:
    if oracle:
        if not export.oracle_available(shape):
            raise UsageError(f"the oracle is limited to n <= 10, got {shape}")
        return cohomology_snf_oracle(shape, coeffs)
    return cohomology(shape, coeffs, capacity=capacity)


def cmd_cohomology(args, out) -> int:
    shape = _shape(args, args.k, args.n)
    coeffs = dual_coefficients(shape) if args.homology else Coefficients(args.coefficients)
    table = _compute_table(shape, coeffs, args.oracle, _capacity(args))
    if args.homology:
        table = reverse_to_homology(table)
    if args.format == "text":
        head = f"{'H_*' if args.homology else 'H^*'}({shape}; {table.coefficients.value if not args.homology else 'Z'})"
        out.write(f"{head}  [{table.provenance}]\n{table}\n")
        return EXIT_OK
    request = {
        "command": "cohomology",
        "k": shape.k,
        "n": shape.n,
        "coefficients": args.coefficients,
        "homology": args.homology,
        "oracle": args.oracle,
    }
    out.write(export.dumps(export.document(request, export.table_payload(table), meta=export.table_meta(table))))
    return EXIT_OK


def cmd_graph(args, out) -> int:
    shape = _shape(args, args.k, args.n)
    capacity = _capacity(args)
    if args.format == "dot":
        out.write(export.graph_dot(shape, args.variant, capacity=capacity))
        return EXIT_OK
    request = {"command": "graph", "k": shape.k, "n": shape.n, "variant": args.variant}
    out.write(export.dumps(export.document(request, export.graph_payload(shape, args.variant, capacity=capacity))))
    return EXIT_OK


def cmd_poly(args, out) -> int:
    shape = _shape(args, args.k, args.n)
    request = {"command": "poly", "k": shape.k, "n": shape.n}
    out.write(export.dumps(export.document(request, export.polynomial_payload(shape))))
    return EXIT_OK


def _verify_shape(shape: GrassmannShape) -> list[dict]:
    return [r.as_dict() for r in run_checks(shape)]


def _map(fn, items, jobs: int):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def cmd_verify(args, out) -> int:
    if args.max_n is not None:
        if args.k is not None:
            raise UsageError("give either k n or --max-n, not both")
        if args.max_n < 2:
            raise UsageError("--max-n must be at least 2")
        _shape(args, 1, args.max_n)
        shapes = shapes_up_to(args.max_n)
        request = {"command": "verify", "max_n": args.max_n}
    else:
        if args.k is None or args.n is None:
            raise UsageError("verify needs k n or --max-n")
        shapes = [_shape(args, args.k, args.n)]
        request = {"command": "verify", "k": args.k, "n": args.n}
    results = [r for rs in _map(_verify_shape, shapes, args.jobs) for r in rs]
    failures = [r for r in results if not r["passed"]]
    payload = {
        "checks": results,
        "num_checks": len(results),
        "num_failures": len(failures),
        "all_passed": not failures,
    }
    out.write(export.dumps(export.document(request, payload)))
    return EXIT_OK if not failures else EXIT_FALSIFIED


def _atomic_write(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cache_filename(shape: GrassmannShape, coeffs: Coefficients) -> str:
    variant = coeffs.variant.value
    return f"{shape.k}_{shape.n}_{variant}.v{export.SCHEMA_VERSION}.json"


def _cached_table(shape, coeffs, cache_dir: Path | None, stats: dict) -> CohomologyTable:
    path = cache_dir / cache_filename(shape, coeffs) if cache_dir else None
    if path is not None and path.exists():
        try:
            doc = json.loads(path.read_text(encoding="utf-8"))
            if doc.get("schema_version") == export.SCHEMA_VERSION:
                stats["hits"] += 1
                return export.table_from_json(shape, doc["payload"], doc["meta"])
        except (ValueError, KeyError):
            pass
    table = cohomology(shape, coeffs, capacity=None)
    stats["computed"] += 1
    if path is not None:
        request = {"k": shape.k, "n": shape.n, "variant": coeffs.variant.value}
        doc = export.document(request, export.table_payload(table), meta=export.table_meta(table))
        _atomic_write(path, export.dumps(doc))
    return table


def shape_document(shape: GrassmannShape, cache_dir: Path | None, stats: dict) -> dict:
    tables = {c: _cached_table(shape, c, cache_dir, stats) for c in Coefficients}
    hom = reverse_to_homology(tables[dual_coefficients(shape)])
    payload = {
        "constant": export.table_payload(tables[Coefficients.CONSTANT]),
        "twisted": export.table_payload(tables[Coefficients.TWISTED]),
        "homology": export.table_payload(hom),
        "orientable": is_orientable(shape),
        "provenance": tables[Coefficients.CONSTANT].provenance,
    }
    return export.document({"command": "table", "k": shape.k, "n": shape.n}, payload)


def cmd_table(args, out) -> int:
    if args.max_n < 2:
        raise UsageError("--max-n must be at least 2")
    _shape(args, 1, args.max_n)
    shapes = shapes_up_to(args.max_n)
    to_stdout = args.out == "-"
    cache_dir = Path(args.cache_dir) if args.cache_dir else (None if to_stdout else Path(args.out) / "cache")
    try:
        if not to_stdout:
            Path(args.out).mkdir(parents=True, exist_ok=True)
        if cache_dir is not None:
            cache_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise UsageError(f"cannot create output directory: {exc}") from exc
    stats = {"hits": 0, "computed": 0}
    try:
        for shape in shapes:
            doc = shape_document(shape, cache_dir, stats)
            if to_stdout:
                out.write(export.dumps_line(doc))
            else:
                _atomic_write(Path(args.out) / f"gr_{shape.k}_{shape.n}.json", export.dumps(doc))
    except OSError as exc:
        raise UsageError(f"cannot write output: {exc}") from exc
    print(
        f"table: {len(shapes)} documents, {stats['hits']} cache hits, {stats['computed']} computed",
        file=sys.stderr,
    )
    return EXIT_OK


COMMANDS = {
    "cohomology": cmd_cohomology,
    "graph": cmd_graph,
    "poly": cmd_poly,
    "verify": cmd_verify,
    "table": cmd_table,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"realgrass: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FalsificationError as exc:
        print(f"realgrass: FALSIFIED: {exc}", file=sys.stderr)
        return EXIT_FALSIFIED
    except RealGrassError as exc:
        print(f"realgrass: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
