"""Command-line front end.

Exit codes: 0 affirmative result, 1 negative result, 2 usage or I/O error.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys

import numpy as np

from . import geometry
from .channels import CompressionMap
from .cp_region import BOUNDARY_TOL, CP_TOL, classify, closed_form, is_cp
from .su_basis import default_basis, gell_mann_basis, pauli_tensor_basis

SCHEMA = 1
MAX_QUBITS = 3


class UsageError(Exception):
    pass


def parse_nu(text: str) -> list[float]:
    """Parse comma, whitespace or newline separated decimal numbers."""
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise UsageError("no nu values given")
    out = []
    for tok in tokens:
        try:
            x = float(tok)
        except ValueError:
            raise UsageError(f"not a decimal number: {tok!r}") from None
        if not math.isfinite(x):
            raise UsageError(f"non-finite nu value: {tok!r}")
        out.append(x)
    return out


def _dim_and_basis(args):
    if (args.dim is None) == (args.qubits is None):
        raise UsageError("give exactly one of --dim or --qubits")
    if args.qubits is not None:
        if args.qubits < 1:
            raise UsageError("--qubits must be >= 1")
        return 2**args.qubits, pauli_tensor_basis(args.qubits)
    if args.dim < 2:
        raise UsageError("--dim must be >= 2")
    kind = getattr(args, "basis", None)
    if kind == "gell-mann":
        return args.dim, gell_mann_basis(args.dim)
    if kind == "pauli":
        n = args.dim.bit_length() - 1
        if 2**n != args.dim:
            raise UsageError("--basis pauli needs a power-of-two --dim")
        return args.dim, pauli_tensor_basis(n)
    return args.dim, default_basis(args.dim)


def _read_nu(args, dim):
    if (args.nu is None) == (args.nu_file is None):
        raise UsageError("give exactly one of --nu or --nu-file")
    if args.nu_file is not None:
        try:
            with open(args.nu_file) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.nu_file}: {exc}") from None
    else:
        text = args.nu
    nu = parse_nu(text)
    if len(nu) != dim * dim - 1:
        raise UsageError(f"dim {dim} needs {dim * dim - 1} nu values, got {len(nu)}")
    return nu


def _floats(arr) -> list[float]:
    return [float(x) for x in np.asarray(arr).ravel()]


def _emit(doc, out):
    text = json.dumps(doc, allow_nan=False, indent=2) + "\n"
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from None


def cmd_check(args) -> int:
    dim, basis = _dim_and_basis(args)
    nu = _read_nu(args, dim)
    cmap = CompressionMap(dim, nu)
    report = is_cp(cmap, basis, args.tol)
    cf = report.closed_form
    doc = {
        "schema": SCHEMA,
        "dim": dim,
        "basis": basis.kind.value,
        "nu": nu,
        "eigenvalues": _floats(report.eigenvalues),
        "min_eigenvalue": report.min_eigenvalue,
        "is_cp": report.is_cp,
        "region": classify(cmap, basis, args.boundary_tol).value,
        "closed_form": cf.as_dict() if cf is not None else None,
        "agreement_max_delta": report.agreement_max_delta,
    }
    _emit(doc, args.out)
    return 0 if report.is_cp else 1


def cmd_formulas(args) -> int:
    dim, basis = _dim_and_basis(args)
    nu = _read_nu(args, dim)
    cf = closed_form(nu, basis)
    if cf is None:
        raise UsageError(f"no closed form for dim {dim} with the {basis.kind.value} basis")
    doc = {
        "schema": SCHEMA,
        "dim": dim,
        "nu": nu,
        "closed_form": cf.as_dict(),
        "is_cp": cf.is_cp(args.tol),
    }
    _emit(doc, args.out)
    return 0 if cf.is_cp(args.tol) else 1


def _fmt(x) -> str:
    return format(float(x), ".17g")


def cmd_sample(args) -> int:
    dim, basis = _dim_and_basis(args)
    if args.n is None or args.n < 1:
        raise UsageError("--n must be >= 1")
    sample = geometry.sample_region(dim, args.n, args.seed, args.tol, basis)
    if args.out is not None:
        try:
            with open(args.out, "w", newline="") as fh:
                if args.format == "csv":
                    writer = csv.writer(fh, lineterminator="\n")
                    d = dim * dim - 1
                    writer.writerow([f"nu_{i + 1}" for i in range(d)] + ["min_eigenvalue", "is_cp"])
                    for row, lo, flag in zip(sample.nu, sample.min_eigenvalue, sample.is_cp):
                        writer.writerow([_fmt(x) for x in row] + [_fmt(lo), str(bool(flag)).lower()])
                else:
                    json.dump(
                        {
                            "schema": SCHEMA,
                            "dim": dim,
                            "seed": args.seed,
                            "points": [
                                {"nu": _floats(row), "min_eigenvalue": float(lo), "is_cp": bool(flag)}
                                for row, lo, flag in zip(sample.nu, sample.min_eigenvalue, sample.is_cp)
                            ],
                        },
                        fh,
                        allow_nan=False,
                    )
                    fh.write("\n")
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from None
    summary = {
        "schema": SCHEMA,
        "dim": dim,
        "n": args.n,
        "seed": args.seed,
        "n_cp": int(sample.is_cp.sum()),
        "cp_fraction": sample.cp_fraction,
    }
    sys.stdout.write(json.dumps(summary) + "\n")
    return 0


def _check_qubits(args):
    if args.qubits is None:
        raise UsageError("--qubits is required")
    if args.qubits < 1:
        raise UsageError("--qubits must be >= 1")
    if args.qubits > MAX_QUBITS and not args.force:
        raise UsageError(f"--qubits above {MAX_QUBITS} needs --force")


def cmd_vertices(args) -> int:
    _check_qubits(args)
    basis = pauli_tensor_basis(args.qubits)
    verts = geometry.vertices_from_unitaries(basis)
    doc = {
        "schema": SCHEMA,
        "n_qubits": args.qubits,
        "dim": basis.dim,
        "vertices": [
            {
                "index": v.generator_index,
                "label": v.label,
                "nu_pattern": [int(x) for x in v.nu_pattern],
                "choi_rank_one": v.choi_rank_one,
            }
            for v in verts
        ],
    }
    _emit(doc, args.out)
    return 0 if all(v.choi_rank_one for v in verts) else 1


def cmd_conjecture(args) -> int:
    _check_qubits(args)
    report = geometry.test_simplex_conjecture(args.qubits, args.n or 100, args.seed, args.tol)
    _emit({"schema": SCHEMA, **report.as_dict()}, args.out)
    return 0 if report.simplex_consistent else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="depolar", description="CP regions of anisotropic depolarizing channels."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, tol=CP_TOL):
        p.add_argument("--dim", type=int)
        p.add_argument("--qubits", type=int)
        p.add_argument("--basis", choices=("gell-mann", "pauli"))
        p.add_argument("--tol", type=float, default=tol)
        p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("check", help="numeric CP check with closed-form comparison")
    common(p)
    p.add_argument("--nu")
    p.add_argument("--nu-file")
    p.add_argument("--boundary-tol", type=float, default=BOUNDARY_TOL)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("formulas", help="closed-form values only (N = 2, 3, 4)")
    common(p)
    p.add_argument("--nu")
    p.add_argument("--nu-file")
    p.set_defaults(func=cmd_formulas)

    p = sub.add_parser("sample", help="Monte-Carlo sampling of the CP region")
    common(p)
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("vertices", help="extremal unitary maps of a Pauli tensor basis")
    p.add_argument("--qubits", type=int)
    p.add_argument("--force", action="store_true")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_vertices)

    p = sub.add_parser("conjecture", help="test whether the 2^n CP region is a simplex")
    p.add_argument("--qubits", type=int)
    p.add_argument("--n", type=int, help="number of random trial points")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--force", action="store_true")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_conjecture)
    return parser


def _join_nu(argv):
    # "--nu -1,1,1" would otherwise be read as an unknown option
    argv = list(argv)
    for i, tok in enumerate(argv[:-1]):
        if tok == "--nu":
            argv[i : i + 2] = [f"--nu={argv[i + 1]}"]
            break
    return argv


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        args = parser.parse_args(_join_nu(argv))
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"depolar: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"depolar: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
