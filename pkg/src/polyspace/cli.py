"""Command-line front end: verification suites, invariant tables, and
Smith-normal-form / involution classification on user matrices.

Matrix files are plain text: a first line `rows cols`, then `rows`
lines of `cols` space-separated decimal integers.

Exit codes: 0 success, 1 failed verification or failed classification,
2 usage error, 3 malformed input file.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
import time

from . import __version__
from .combinatorics import alpha_series, invariant_table
from .int_linalg import (
    IntMatrix,
    NotInvolution,
    UnexpectedDivisor,
    build_F,
    classify_involution,
    smith_normal_form,
)
from .invariants import (
    betti_z2_formula,
    cup_square_rank_formula,
    gysin_check,
    involution_triple,
    series_bundle,
    uct_quotient,
    wang_divisor_counts,
)
from .subset_complex import complex_homology, inclusion_rank
from .combinatorics import binom

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BAD_INPUT = 3


class InputFileError(ValueError):
    pass


def read_matrix_file(path: str) -> IntMatrix:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = [ln for ln in fh.read().splitlines() if ln.strip()]
    except OSError as exc:
        raise InputFileError(f"cannot read {path}: {exc}") from exc
    if not lines:
        raise InputFileError(f"{path}: empty file")
    try:
        rows, cols = map(int, lines[0].split())
    except ValueError as exc:
        raise InputFileError(f"{path}: bad header line {lines[0]!r}") from exc
    if rows < 0 or cols < 0 or len(lines) != rows + 1:
        raise InputFileError(f"{path}: expected {rows} data lines")
    entries = []
    for ln in lines[1:]:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError as exc:
            raise InputFileError(f"{path}: bad entry in line {ln!r}") from exc
        if len(row) != cols:
            raise InputFileError(f"{path}: expected {cols} entries per line")
        entries.append(row)
    return IntMatrix(entries)


# ---------------------------------------------------------------------------
# verification registry


def _check_eq1_symmetry(n, max_ring_n):
    coeffs = series_bundle(n).ps_M.coeffs
    ok = coeffs == tuple(reversed(coeffs))
    return ok, f"coefficients {list(coeffs)}"


def _check_eq11_ring_dims(n, max_ring_n):
    if n > max_ring_n:
        return None, f"n={n} above ring limit {max_ring_n}"
    from .ring import cohomology_dim

    bad = [
        q
        for q in range(-1, n - 1)
        if cohomology_dim(n, q) != betti_z2_formula(n, q)
    ]
    return not bad, f"mismatched degrees {bad}" if bad else "all degrees match"


def _check_prop6_lambda(n, max_ring_n):
    if n > max_ring_n:
        return None, f"n={n} above ring limit {max_ring_n}"
    from .ring import cup_square_rank

    bad = [
        q
        for q in range(0, n - 2)
        if cup_square_rank(n, q) != cup_square_rank_formula(n, q)
    ]
    return not bad, f"mismatched degrees {bad}" if bad else "all degrees match"


def _check_lemma7(n, max_ring_n):
    if n > max_ring_n:
        return None, f"n={n} above ring limit {max_ring_n}"
    from .ring import splitting_independence

    dim, independent = splitting_independence(n)
    beta = invariant_table(n).beta
    ok = dim == beta and independent
    return ok, f"kernel dim {dim} (beta {beta}), independent={independent}"


def _check_bjs_vanishing(n, max_ring_n):
    m = (n - 1) // 2
    v = n - 1
    top_acyclic = v if (m + 1) % 2 == v % 2 else v - 1
    acyclic = complex_homology(v, top_acyclic)
    other = complex_homology(v, v - 1 if top_acyclic == v else v)
    ok = all(d == 0 for d in acyclic.homology_dims)
    nonzero = [
        q for q, d in zip(other.degrees, other.homology_dims) if d != 0
    ]
    ok = ok and nonzero == [m]
    return ok, f"acyclic side {list(acyclic.homology_dims)}, middle-only {nonzero}"


def _check_wilson_rank(n, max_ring_n):
    m = (n - 1) // 2
    got = inclusion_rank(n - 1, m + 1, m - 1)
    want = binom(n - 1, m - 1)
    return got == want, f"rank {got}, expected {want}"


def _check_gysin(n, max_ring_n):
    lambdas = [cup_square_rank_formula(n, q) for q in range(n)]
    return gysin_check(n, lambdas), "closed-form cup ranks"


def _check_uct_division(n, max_ring_n):
    bundle = series_bundle(n)
    ok = uct_quotient(bundle) == bundle.gamma_E
    return ok, "quotient equals the 2-torsion series"


def _check_wang_table1(n, max_ring_n):
    table = invariant_table(n)
    counts = wang_divisor_counts(n)
    ok = counts == (table.D, table.alpha, table.beta)
    return ok, f"counts {tuple(counts)}"


def _check_theoremA_triple(n, max_ring_n):
    table = invariant_table(n)
    triple = involution_triple(n)
    ok = triple == (table.alpha, table.beta, table.beta)
    ok = ok and classify_involution(build_F(*triple)) == triple
    return ok, f"triple {tuple(triple)}"


def _check_series_alpha(n, max_ring_n):
    idx = (n - 3) // 2
    got = alpha_series(idx + 1)[idx]
    want = invariant_table(n).alpha
    return got == want, f"series coefficient {got}, table {want}"


def _check_d_equals_alpha(n, max_ring_n):
    table = invariant_table(n)
    return table.d == table.alpha, f"d {table.d}, alpha {table.alpha}"


CHECK_REGISTRY = {
    "eq1-symmetry": _check_eq1_symmetry,
    "eq11-ring-dims": _check_eq11_ring_dims,
    "prop6-lambda": _check_prop6_lambda,
    "lemma7": _check_lemma7,
    "bjs-vanishing": _check_bjs_vanishing,
    "wilson-rank": _check_wilson_rank,
    "gysin": _check_gysin,
    "uct-division": _check_uct_division,
    "wang-table1": _check_wang_table1,
    "theoremA-triple": _check_theoremA_triple,
    "series-alpha": _check_series_alpha,
    "d-equals-alpha": _check_d_equals_alpha,
}


def _cache_key() -> str:
    return hashlib.sha256(f"polyspace-{__version__}".encode()).hexdigest()[:16]


def _cache_path(cache_dir: str, check_id: str, n: int) -> str:
    return os.path.join(cache_dir, f"{check_id}-n{n}.json")


def _cache_read(cache_dir, check_id, n):
    try:
        with open(_cache_path(cache_dir, check_id, n), encoding="utf-8") as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return None
    if payload.get("key") != _cache_key():
        return None
    return payload.get("status"), payload.get("details", "")

def _cache_write(cache_dir, check_id, n, status, details):
    os.makedirs(cache_dir, exist_ok=True)
    payload = {"key": _cache_key(), "status": status, "details": details}
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(payload, fh)
        os.replace(tmp, _cache_path(cache_dir, check_id, n))
    except OSError:
        if os.path.exists(tmp):
            os.unlink(tmp)


def run_verification(
    n: int,
    check_ids=None,
    max_ring_n: int = 11,
    cache_dir: str | None = None,
) -> dict:
    """Run the check registry for one n; returns the JSON-ready report."""
    ids = sorted(CHECK_REGISTRY) if check_ids is None else list(check_ids)
    checks = []
    for cid in ids:
        if cid not in CHECK_REGISTRY:
            raise KeyError(f"unknown check id {cid!r}")
        start = time.perf_counter()
        cached = _cache_read(cache_dir, cid, n) if cache_dir else None
        if cached is not None:
            status, details = cached
        else:
            ok, details = CHECK_REGISTRY[cid](n, max_ring_n)
            status = "skipped" if ok is None else ("pass" if ok else "fail")
            if cache_dir:
                _cache_write(cache_dir, cid, n, status, details)
        ms = int((time.perf_counter() - start) * 1000)
        checks.append({"id": cid, "status": status, "details": details, "ms": ms})
    return {"n": n, "checks": checks}


# ---------------------------------------------------------------------------
# subcommands


def _parse_odd(value: str) -> int:
    n = int(value)
    if n < 5 or n % 2 == 0:
        raise argparse.ArgumentTypeError("n must be odd and >= 5")
    return n


def _cmd_verify(args) -> int:
    cache_dir = args.cache_dir or os.environ.get("POLYSPACE_CACHE_DIR")
    check_ids = args.checks.split(",") if args.checks else None
    try:
        report = run_verification(
            args.n, check_ids, max_ring_n=args.max_ring_n, cache_dir=cache_dir
        )
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(f"n = {report['n']}")
        for check in report["checks"]:
            print(
                f"  {check['id']:<16} {check['status']:<7} "
                f"{check['ms']:>6} ms  {check['details']}"
            )
    failed = any(c["status"] == "fail" for c in report["checks"])
    return EXIT_FAILED if failed else EXIT_OK


def _table_rows(n_min: int, n_max: int) -> list[dict]:
    rows = []
    for n in range(n_min, n_max + 1, 2):
        table = invariant_table(n)
        counts = wang_divisor_counts(n)
        triple = involution_triple(n)
        rows.append(
            {
                "n": n,
                "m": table.m,
                "D": table.D,
                "alpha": table.alpha,
                "beta": table.beta,
                "gamma": table.gamma,
                "div0": counts.zeros,
                "div1": counts.ones,
                "div2": counts.twos,
                "x": triple.x,
                "y": triple.y,
                "z": triple.z,
            }
        )
    return rows


def _cmd_table(args) -> int:
    if args.n_min % 2 == 0 or args.n_min < 5 or args.n_max < args.n_min:
        print("error: need odd 5 <= n-min <= n-max", file=sys.stderr)
        return EXIT_USAGE
    rows = _table_rows(args.n_min, args.n_max)
    headers = list(rows[0]) if rows else []
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    elif args.format == "csv":
        print(",".join(headers))
        for row in rows:
            print(",".join(str(row[h]) for h in headers))
    else:
        print("| " + " | ".join(headers) + " |")
        print("|" + "|".join("---" for _ in headers) + "|")
        for row in rows:
            print("| " + " | ".join(str(row[h]) for h in headers) + " |")
    return EXIT_OK


def _cmd_snf(args) -> int:
    try:
        matrix = read_matrix_file(args.input)
    except InputFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    print(" ".join(str(d) for d in smith_normal_form(matrix)))
    return EXIT_OK


def _cmd_involution_classify(args) -> int:
    try:
        matrix = read_matrix_file(args.input)
    except InputFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        triple = classify_involution(matrix)
    except NotInvolution as exc:
        print(f"NotInvolution: {exc}")
        return EXIT_FAILED
    except UnexpectedDivisor as exc:
        print(f"UnexpectedDivisor: {exc}")
        return EXIT_FAILED
    print(f"{triple.x} {triple.y} {triple.z}")
    return EXIT_OK


SERIES_FIELDS = {
    "ps-m": "ps_M",
    "phi": "phi",
    "ps-q-e": "ps_Q_E",
    "gamma-e": "gamma_E",
    "ps-z2-mbar": "ps_Z2_Mbar",
    "ps-z2-e": "ps_Z2_E",
}


def _cmd_series(args) -> int:
    bundle = series_bundle(args.n)
    poly = getattr(bundle, SERIES_FIELDS[args.which])
    print(" ".join(str(c) for c in poly.coeffs))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyspace",
        description="Exact invariants of the conjugation involution on "
        "odd equilateral polygon spaces.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the verification registry for one n")
    p.add_argument("--n", type=_parse_odd, required=True)
    p.add_argument("--checks", help="comma-separated check ids (default: all)")
    p.add_argument("--max-ring-n", type=int, default=11)
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("table", help="emit the per-n invariant table")
    p.add_argument("--n-min", type=int, default=5)
    p.add_argument("--n-max", type=_parse_odd, required=True)
    p.add_argument("--format", choices=("md", "csv", "json"), default="md")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("snf", help="elementary divisors of a matrix file")
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_snf)

    p = sub.add_parser("involution", help="involution operations")
    isub = p.add_subparsers(dest="subcommand", required=True)
    pc = isub.add_parser("classify", help="normal-form triple of an involution")
    pc.add_argument("--input", required=True)
    pc.set_defaults(func=_cmd_involution_classify)

    p = sub.add_parser("series", help="print one series' coefficients")
    p.add_argument("--n", type=_parse_odd, required=True)
    p.add_argument("--which", choices=sorted(SERIES_FIELDS), required=True)
    p.set_defaults(func=_cmd_series)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
