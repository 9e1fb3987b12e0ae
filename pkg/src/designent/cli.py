"""Command-line front end: design management, bound sweeps, entropy
estimation from measured data, and batch property checks.

Sweeps write CSV with the header lambda,LT,UT,LCh,UCh,H1,H2 where LT/UT are
the degree-t estimates with truncated-series coefficients, LCh/UCh the ones
with flexible coefficients, and H1/H2 the exact entropies for two fixed state
orientations.  All numbers are printed with 17 significant digits so output
is byte-identical across platforms for the same inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import bounds as bnd
from . import designs as dsg
from . import entropy as ent
from . import measurements as msr
from . import polyest as pst

# Bloch axes of the two dotted entropy curves per catalog design: the first
# follows a symmetry axis, the second the documented off-axis direction
# (octahedron: quadrant bisector; icosahedron: vertex on the +x meridian;
# snub cube: midpoint of a square edge, fixed by the bundled orientation).
ORIENTATION_AXES = {
    "octahedron": (
        (0.0, 0.0, 1.0),
        (0.70710678118654757, 0.70710678118654757, 0.0),
    ),
    "icosahedron": (
        (0.0, 0.0, 1.0),
        (1.0, 0.0, 0.0),
    ),
    "snub_cube_deformed": (
        (0.0, 0.0, 1.0),
        (0.36832797610452572, -0.083313973658078119, 0.9259553357544007),
    ),
}

DEFAULT_ALPHAS = "0.3,0.7,1.3,1.7"


def _fmt(x) -> str:
    return format(float(x), ".17g")


def _parse_floats(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"could not parse {text!r} as comma-separated numbers") from None


def _resolve_design(args) -> dsg.QuantumDesign:
    if getattr(args, "file", None):
        return dsg.load_design(args.file)
    return dsg.builtin_design(args.name)


def _state_lines(rho: np.ndarray) -> list[str]:
    out = []
    for row in np.atleast_2d(rho):
        out.append("  " + "  ".join(f"({_fmt(a.real)},{_fmt(a.imag)})" for a in row))
    return out


def cmd_design(args) -> int:
    if args.design_cmd == "list":
        for name in dsg.CATALOG_NAMES:
            d = dsg.builtin_design(name)
            print(f"{name} d={d.dimension} K={d.size} t={d.degree}")
        return 0
    if args.design_cmd == "verify":
        design = _resolve_design(args)
        t = args.t if args.t is not None else design.degree
        report = dsg.verify_design(design, t, args.tol)
        for line in report.lines():
            print(line)
        return 0 if report.passed else 1
    if args.design_cmd == "dump":
        design = _resolve_design(args)
        text = json.dumps(dsg.dump_design(design), indent=1) + "\n"
        if args.output:
            Path(args.output).write_text(text)
            print(f"wrote {args.output}")
        else:
            sys.stdout.write(text)
        return 0
    if args.design_cmd == "search":
        opts = dsg.SearchOptions(
            iterations=args.iterations, restarts=args.restarts, tol=args.tol
        )
        result = dsg.search_design(args.d, args.K, args.t, seed=args.seed, opts=opts)
        status = "converged" if result.converged else "FAILED"
        print(
            f"search d={args.d} K={args.K} t={args.t} seed={args.seed}: {status} "
            f"residual={_fmt(result.residual)} iterations={result.iterations} "
            f"restart={result.restart}"
        )
        if args.output:
            Path(args.output).write_text(
                json.dumps(dsg.dump_design(result.design), indent=1) + "\n"
            )
            print(f"wrote {args.output}")
        return 0 if result.converged else 1
    raise ValueError(f"unknown design subcommand {args.design_cmd!r}")


def _sweep_axes(design: dsg.QuantumDesign, label: str):
    if label not in ORIENTATION_AXES:
        raise ValueError(
            f"no sweep orientations on file for {label!r}; catalog designs only"
        )
    if design.dimension != 2:
        raise ValueError("sweeps are defined for qubit designs")
    return ORIENTATION_AXES[label]


def cmd_sweep(args) -> int:
    design = dsg.builtin_design(args.design)
    alpha = args.alpha
    if not 0.0 < alpha <= 2.0:
        raise ValueError("alpha must lie in (0, 2]")
    axes = _sweep_axes(design, args.design)
    povm = msr.single_povm(design)
    states_updown = []
    for axis in axes:
        up = dsg.bloch_to_state(np.asarray(axis, dtype=float))
        down = dsg.bloch_to_state(-np.asarray(axis, dtype=float))
        states_updown.append((np.outer(up, up.conj()), np.outer(down, down.conj())))
    grid = np.linspace(0.0, 0.5, args.points)
    lines = ["lambda,LT,UT,LCh,UCh,H1,H2"]
    gaps = np.zeros((args.points, 4))
    for i, lam in enumerate(grid):
        projectors = [
            (1.0 - lam) * up + lam * down for up, down in states_updown
        ]
        taylor = bnd.design_povm_bounds(design, projectors[0], alpha, "taylor")
        cheb = bnd.design_povm_bounds(design, projectors[0], alpha, "chebyshev")
        entropies = [
            ent.tsallis(msr.probabilities(povm, rho), alpha) for rho in projectors
        ]
        for h in entropies:
            if not (
                taylor.lower <= h + 1e-9
                and h <= taylor.upper + 1e-9
                and cheb.lower <= h + 1e-9
                and h <= cheb.upper + 1e-9
            ):
                raise ValueError(
                    f"sweep row lambda={_fmt(lam)} violates the bound sandwich"
                )
        gaps[i] = (taylor.lower, taylor.upper, cheb.lower, cheb.upper)
        cells = [lam, *gaps[i], *entropies]
        lines.append(",".join(_fmt(c) for c in cells))
    Path(args.output).write_text("\n".join(lines) + "\n")
    gap = bnd.max_relative_gap(gaps[:, 0], gaps[:, 1], gaps[:, 2], gaps[:, 3])
    print(f"wrote {args.output} rows={args.points}")
    print(f"max relative envelope gap: {_fmt(100.0 * gap)}%")
    return 0


def _print_pairs(pair: bnd.BoundPair, alpha: float):
    renyi = bnd.renyi_bounds(pair, alpha)
    for p in (pair, renyi):
        print(
            f"scheme={p.scheme} kind={p.entropy_kind} "
            f"lower={_fmt(p.lower)} upper={_fmt(p.upper)}"
        )


def cmd_estimate(args) -> int:
    schemes = ("taylor", "chebyshev") if args.scheme == "both" else (args.scheme,)
    if args.moments is not None:
        moments = _parse_floats(args.moments)
        for scheme in schemes:
            pair = bnd.quantum_entropy_bounds(
                moments, args.d, args.t, args.alpha, scheme, support=args.support
            )
            _print_pairs(pair, args.alpha)
        return 0
    measured = _parse_floats(args.indices)
    indices = [
        bnd.inefficiency_index_invert(value, args.kappa, s, outcomes=args.outcomes)
        for s, value in enumerate(measured, start=2)
    ]
    for scheme in schemes:
        pair = bnd.distribution_bounds(
            indices, args.outcomes, args.alpha, scheme, support=args.support
        )
        _print_pairs(pair, args.alpha)
    return 0


def cmd_check(args) -> int:
    design = _resolve_design(args)
    label = design.label or args.name
    report = dsg.verify_design(design, design.degree)
    if not report.passed:
        print(f"design={label} verification FAILED:")
        for line in report.lines():
            print(line)
        return 1
    print(
        f"design={label} d={design.dimension} K={design.size} t={design.degree} "
        f"verified tol={_fmt(report.tol)}"
    )
    alphas = _parse_floats(args.alphas)
    schemes = ("taylor", "chebyshev") if args.scheme == "both" else (args.scheme,)
    states = msr.random_states(design.dimension, args.samples, args.seed)
    V = design.vectors
    p = np.einsum("jd,kde,je->kj", V.conj(), states, V).real
    p = np.clip(p * design.dimension / design.size, 0.0, 1.0)
    p /= p.sum(axis=1, keepdims=True)
    failed = False
    for alpha in alphas:
        if abs(alpha - 1.0) < ent.ALPHA_ONE_TOL:
            terms = np.where(p > 0.0, p * np.log(np.where(p > 0.0, p, 1.0)), 0.0)
            true_ts = -terms.sum(axis=1)
            true_ry = true_ts
        else:
            power = (p**alpha).sum(axis=1)
            true_ts = (power - 1.0) / (1.0 - alpha)
            true_ry = np.log(power) / (1.0 - alpha)
        for scheme in schemes:
            check = bnd.state_independent_check(
                design, alpha, scheme, samples=args.samples, seed=args.seed
            )
            status = "pass" if check.passed else "FAIL"
            print(
                f"check alpha={_fmt(alpha)} scheme={scheme} samples={args.samples} "
                f"seed={args.seed} min_margin={_fmt(check.min_margin)} status={status}"
            )
            if not check.passed:
                failed = True
                print("offending state:")
                for line in _state_lines(check.worst_state):
                    print(line)
            lows, ups = bnd.batch_design_bounds(design, states, alpha, scheme)
            if abs(alpha - 1.0) < ent.ALPHA_ONE_TOL:
                rlows, rups = lows, ups
            else:
                rlows = np.log1p((1.0 - alpha) * lows) / (1.0 - alpha)
                rups = np.log1p((1.0 - alpha) * ups) / (1.0 - alpha)
            viol = np.maximum.reduce(
                [lows - true_ts, true_ts - ups, rlows - true_ry, true_ry - rups]
            )
            worst = int(np.argmax(viol))
            status = "pass" if viol[worst] <= 1e-9 else "FAIL"
            print(
                f"sandwich alpha={_fmt(alpha)} scheme={scheme} kinds=tsallis,renyi "
                f"max_violation={_fmt(viol[worst])} status={status}"
            )
            if viol[worst] > 1e-9:
                failed = True
                print("offending state:")
                for line in _state_lines(states[worst]):
                    print(line)
    print(f"result: {'FAIL' if failed else 'pass'}")
    return 1 if failed else 0


def cmd_coeffs(args) -> int:
    cs = pst.taylor_coeffs(args.n, args.alpha) if args.scheme == "taylor" else pst.chebyshev_coeffs(args.n, args.alpha)
    lines = ["s,lower,upper"]
    lower = np.concatenate([[0.0], cs.lower])  # the lower polynomial has no constant term
    for s in range(args.n + 1):
        lines.append(f"{s},{_fmt(lower[s])},{_fmt(cs.upper[s])}")
    text = "\n".join(lines) + "\n"
    if args.output:
        Path(args.output).write_text(text)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="designent",
        description="Two-sided entropy bounds for design-structured measurements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_design = sub.add_parser("design", help="catalog, verification, and search")
    dsub = p_design.add_subparsers(dest="design_cmd", required=True)
    p_list = dsub.add_parser("list", help="list catalog designs")
    p_list.set_defaults(func=cmd_design)
    p_verify = dsub.add_parser("verify", help="check frame potentials up to t")
    p_verify.add_argument("--name", choices=dsg.CATALOG_NAMES)
    p_verify.add_argument("--file", help="design document to verify instead")
    p_verify.add_argument("--t", type=int, default=None)
    p_verify.add_argument("--tol", type=float, default=dsg.VERIFY_TOL)
    p_verify.set_defaults(func=cmd_design)
    p_dump = dsub.add_parser("dump", help="write a design as a JSON document")
    p_dump.add_argument("--name", choices=dsg.CATALOG_NAMES)
    p_dump.add_argument("--file")
    p_dump.add_argument("--output")
    p_dump.set_defaults(func=cmd_design)
    p_search = dsub.add_parser("search", help="minimize the frame potential")
    p_search.add_argument("--d", type=int, required=True)
    p_search.add_argument("--K", type=int, required=True)
    p_search.add_argument("--t", type=int, required=True)
    p_search.add_argument("--seed", type=int, default=0)
    p_search.add_argument("--iterations", type=int, default=dsg.SearchOptions.iterations)
    p_search.add_argument("--restarts", type=int, default=dsg.SearchOptions.restarts)
    p_search.add_argument("--tol", type=float, default=dsg.SearchOptions.tol)
    p_search.add_argument("--output")
    p_search.set_defaults(func=cmd_design)

    p_sweep = sub.add_parser("sweep", help="bounds and entropies along a state family")
    p_sweep.add_argument("--design", required=True, choices=dsg.CATALOG_NAMES)
    p_sweep.add_argument("--alpha", type=float, required=True)
    p_sweep.add_argument("--points", type=int, default=201)
    p_sweep.add_argument("--output", required=True)
    p_sweep.set_defaults(func=cmd_sweep)

    p_est = sub.add_parser("estimate", help="entropy bounds from moments or indices")
    p_est.add_argument("--alpha", type=float, required=True)
    p_est.add_argument("--scheme", choices=("taylor", "chebyshev", "both"), default="both")
    source = p_est.add_mutually_exclusive_group(required=True)
    source.add_argument("--moments", help="tr(rho^s) for s=2..t, comma-separated")
    source.add_argument("--indices", help="measured I^(s) for s=2..n, comma-separated")
    p_est.add_argument("--d", type=int)
    p_est.add_argument("--t", type=int)
    p_est.add_argument("--outcomes", type=int, help="outcome count L of the ideal POVM")
    p_est.add_argument("--kappa", type=float, default=1.0, help="detector efficiency")
    p_est.add_argument("--support", type=int, help="known support size for the s=0 term")
    p_est.set_defaults(func=cmd_estimate)

    p_check = sub.add_parser("check", help="state-independence and sandwich batches")
    p_check.add_argument("--name", choices=dsg.CATALOG_NAMES)
    p_check.add_argument("--file", help="design document to check instead")
    p_check.add_argument("--alphas", default=DEFAULT_ALPHAS)
    p_check.add_argument("--scheme", choices=("taylor", "chebyshev", "both"), default="both")
    p_check.add_argument("--samples", type=int, default=2000)
    p_check.add_argument("--seed", type=int, default=0)
    p_check.set_defaults(func=cmd_check)

    p_coeffs = sub.add_parser("coeffs", help="dump a coefficient set as CSV")
    p_coeffs.add_argument("--scheme", choices=("taylor", "chebyshev"), required=True)
    p_coeffs.add_argument("--n", type=int, required=True)
    p_coeffs.add_argument("--alpha", type=float, required=True)
    p_coeffs.add_argument("--output")
    p_coeffs.set_defaults(func=cmd_coeffs)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("design", "check") and getattr(args, "design_cmd", "") != "search":
        needs_source = args.command == "check" or args.design_cmd in ("verify", "dump")
        if needs_source and not (getattr(args, "name", None) or getattr(args, "file", None)):
            parser.error("pass --name or --file")
    if args.command == "estimate":
        if args.moments is not None:
            if args.d is None or args.t is None:
                parser.error("--moments needs --d and --t")
            if args.kappa != 1.0:
                parser.error("--kappa applies to measured indices, not state moments")
        elif args.outcomes is None:
            parser.error("--indices needs --outcomes")
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
