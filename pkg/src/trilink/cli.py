"""Command-line interface: ``trilink {invariants,mu,dump,bridge-check}``.

Reports go to stdout as JSON (or a table with ``--human``); diagnostics go
to stderr. Exit codes: 2 bad input, 3 nonzero pairwise linking, 4 Gauss /
degree mismatch, 5 output I/O failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys
import time

import numpy as np

from . import geometry as geo
from . import mu as mu_mod
from .errors import (
    CorrespondenceMismatch,
    GridTooLarge,
    NotNullHomologous,
    ParseError,
    TrilinkError,
)
from .fields import characteristic_form, sample_gauss_field
from .fourier import dft3
from .gauss import invariant_report, round_invariant
from .green import phi2d
from .link import PRESETS, load_link, preset

EXIT_INPUT = 2
EXIT_NOT_NULL = 3
EXIT_MISMATCH = 4
EXIT_IO = 5


class _Stopwatch:
    def __init__(self):
        self.stages = {}

    def __call__(self, name):
        watch = self

        class _Stage:
            def __enter__(self):
                self.t0 = time.perf_counter()

            def __exit__(self, *exc):
                watch.stages[name] = round(time.perf_counter() - self.t0, 6)

        return _Stage()


def _load(args):
    """Return (link, identity dict)."""
    if args.link is not None:
        try:
            with open(args.link, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(str(exc), args.link) from None
        ident = {"file": args.link, "sha256": hashlib.sha256(text.encode()).hexdigest()}
        return load_link(text), ident
    name = args.preset or "borromean"
    return preset(name), {"preset": name}


def _mu_entry(raw, method, N, cutoff):
    return {
        "rounded": round_invariant(raw),
        "raw": raw,
        "residual": abs(raw - round(raw)),
        "method": method,
        "N": N,
        "cutoff": cutoff,
    }


def cmd_invariants(args):
    watch = _Stopwatch()
    link, ident = _load(args)
    report = {"command": "invariants", "flags": _flags(args), "link": ident}
    with watch("pairwise_and_degrees"):
        inv = invariant_report(link, samples=args.samples, grid=args.grid)
    g = inv.gauss
    report["pairwise"] = {
        "p": g.rounded[0], "q": g.rounded[1], "r": g.rounded[2],
        "raw": {"lk_yz": g.lk_yz, "lk_zx": g.lk_zx, "lk_xy": g.lk_xy},
        "residual": g.residual,
        "converged": g.converged,
    }
    report["degrees"] = {
        ax: {"rounded": round_invariant(v), "raw": v} for ax, v in inv.degrees.items()
    }
    report["mu"] = None
    report["timings"] = watch.stages
    if not g.null or any(round_invariant(v) != 0 for v in inv.degrees.values()):
        _emit(report, args)
        raise NotNullHomologous(
            f"pairwise linking numbers (p, q, r) = {g.rounded}; mu is only computed when all vanish"
        )
    with watch("characteristic_form"):
        form = characteristic_form(link, args.grid)
    with watch("mu_fourier"):
        raw = mu_mod.mu_fourier(dft3(form), args.cutoff)
    with watch("mu_whitehead"):
        check = mu_mod.whitehead_integral(form)
    entry = _mu_entry(raw, "fourier", args.grid, args.cutoff)
    entry["whitehead"] = check
    entry["whitehead_diff"] = abs(check - raw)
    report["mu"] = entry
    _emit(report, args)
    return 0


def cmd_mu(args):
    watch = _Stopwatch()
    link, ident = _load(args)
    if args.method == "helicity" and args.grid > mu_mod.HELICITY_MAX_N:
        raise GridTooLarge(
            f"helicity method refuses --grid {args.grid} > {mu_mod.HELICITY_MAX_N}"
        )
    report = {"command": "mu", "flags": _flags(args), "link": ident}
    with watch(args.method):
        if args.method == "fourier":
            raw = mu_mod.mu_fourier_link(link, args.grid, args.cutoff)
        elif args.method == "whitehead":
            raw = mu_mod.mu_whitehead(link, args.grid)
        elif args.method == "helicity":
            raw = mu_mod.mu_helicity(link, args.grid, args.cutoff)
        else:
            raw = mu_mod.mu_spherical(link, args.grid)
    report["mu"] = _mu_entry(raw, args.method, args.grid, args.cutoff)
    report["timings"] = watch.stages
    _emit(report, args)
    return 0


def _write_csv(out, header, columns, fmts):
    table = np.column_stack(columns)
    fh = sys.stdout if out in (None, "-") else open(out, "w", encoding="utf-8", newline="\n")
    try:
        np.savetxt(fh, table, fmt=fmts, delimiter=",", header=header, comments="")
    finally:
        if fh is not sys.stdout:
            fh.close()


def cmd_dump(args):
    if args.what == "phi2d":
        cutoff = args.cutoff or 15
        M = args.grid
        xs = np.linspace(-3 * math.pi, 3 * math.pi, M)
        X1, X2 = np.meshgrid(xs, xs, indexing="ij")
        vals = phi2d(np.stack([X1, X2], -1), cutoff)
        columns = [X1.ravel(), X2.ravel(), vals.ravel()]
        header, fmts = "x1,x2,phi", ["%.17g"] * 3
    else:
        link, _ = _load(args)
        if args.what == "form":
            field = characteristic_form(link, args.grid)
            names = "px,py,pz"
        else:
            field = sample_gauss_field(link, args.grid)
            names = "Fx,Fy,Fz"
        N = field.N
        J, K, L = np.meshgrid(np.arange(N), np.arange(N), np.arange(N), indexing="ij")
        th = field.coordinates()
        data = field.data.reshape(-1, 3)
        columns = [J.ravel(), K.ravel(), L.ravel(),
                   th[J.ravel()], th[K.ravel()], th[L.ravel()],
                   data[:, 0], data[:, 1], data[:, 2]]
        header = "j,k,l,s,t,u," + names
        fmts = ["%d"] * 3 + ["%.17g"] * 6
    try:
        _write_csv(args.out, header, columns, fmts)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return 0


def _random_triples(rng, n):
    scale = 10.0 ** rng.uniform(-1, 1, size=(n, 1))
    x = rng.normal(size=(n, 3)) * scale
    y = rng.normal(size=(n, 3)) * scale
    z = rng.normal(size=(n, 3)) * scale
    # every tenth triple nearly collinear; the third point stays at least
    # 5% of |x - y| away from both others so no pair nearly coincides
    lam = rng.uniform(0.05, 0.95, size=(n, 1)) + rng.choice([-1.0, 0.0, 1.0], size=(n, 1))
    jitter = rng.normal(size=(n, 3)) * 1e-9 * scale
    near = np.arange(n) % 10 == 0
    z[near] = (y + lam * (x - y) + jitter)[near]
    return x, y, z


def bridge_summary(trials, seed, chunk=100_000):
    """Sample bridge_gap and the C-scaling identity on seeded random triples."""
    rng = np.random.default_rng(seed)
    gap_min, gap_sum, rel_max, done = math.inf, 0.0, 0.0, 0
    while done < trials:
        n = min(chunk, trials - done)
        x, y, z = _random_triples(rng, n)
        gap = geo.bridge_gap(x, y, z)
        lhs = geo.key_map_S(*geo.based_lift(x, y, z))
        rhs = geo.bridge_scale(x, y, z)[:, None] * geo.reduced_bridge_map(x, y, z)
        rel = geo.norm(lhs - rhs) / geo.norm(rhs)
        gap_min = min(gap_min, float(gap.min()))
        gap_sum += float(gap.sum())
        rel_max = max(rel_max, float(rel.max()))
        done += n
    return {
        "trials": trials,
        "seed": seed,
        "gap_min": gap_min,
        "gap_mean": gap_sum / trials,
        "scaling_max_rel_error": rel_max,
    }


def cmd_bridge_check(args):
    summary = bridge_summary(args.trials, args.seed)
    _emit({"command": "bridge-check", "flags": _flags(args), **summary}, args)
    return 0


def _flags(args):
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "human")}


def _emit(report, args):
    if getattr(args, "human", False):
        for line in _human_lines(report):
            print(line)
    else:
        print(json.dumps(report, indent=2))


def _human_lines(report, prefix=""):
    for key, val in report.items():
        if isinstance(val, dict):
            yield f"{prefix}{key}:"
            yield from _human_lines(val, prefix + "  ")
        elif isinstance(val, float):
            yield f"{prefix}{key:<22} {val: .12g}"
        else:
            yield f"{prefix}{key:<22} {val}"


def build_parser():
    parser = argparse.ArgumentParser(
        prog="trilink",
        description="Pairwise and triple linking numbers of three-component links.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def source(p):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--preset", choices=sorted(PRESETS), help="built-in link")
        g.add_argument("--link", metavar="FILE", help="JSON link config")
        p.add_argument("--human", action="store_true", help="tabular output")

    p = sub.add_parser("invariants", help="p, q, r, subtorus degrees and mu")
    source(p)
    p.add_argument("--grid", type=int, default=128)
    p.add_argument("--samples", type=int, default=512)
    p.add_argument("--cutoff", type=int, default=None)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("mu", help="mu by one chosen formula")
    source(p)
    p.add_argument("--grid", type=int, default=128)
    p.add_argument("--method", choices=sorted(mu_mod.METHODS), default="fourier")
    p.add_argument("--cutoff", type=int, default=None)
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("dump", help="write a field, form or phi2d CSV")
    source(p)
    p.add_argument("--grid", type=int, default=32)
    p.add_argument("--what", choices=("field", "form", "phi2d"), default="form")
    p.add_argument("--cutoff", type=int, default=None)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_dump)

    p = sub.add_parser("bridge-check", help="sample the bridge map on random triples")
    p.add_argument("--trials", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--human", action="store_true")
    p.set_defaults(func=cmd_bridge_check)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotNullHomologous as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_NULL
    except CorrespondenceMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (TrilinkError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
