"""Command line front end: `disc <command>`.

Every command is deterministic given its flags (all randomness sits
behind explicit --seed values), output files are written atomically
(temp file + rename in the target directory), and JSON output is
canonical: sorted keys, fixed array ordering, trailing newline.  Exit
codes: 0 success, 1 usage/precondition/guard failure, 2 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from fractions import Fraction
from math import comb

from mpmath import mp

from . import __version__
from .circuits import johnson_dot, johnson_stats
from .cubemetric import (
    CLAIM_NAMES,
    free_mode,
    geometric_mode,
    geodesics,
    run_claims,
    verify_interval_cube,
)
from .errors import DiscarrError
from .exactgeom import ArrangementSpec
from .lattice import build_lattice, support_from_bitstring
from .randover import (
    MODEL_NOTE,
    ExperimentConfig,
    floor_power,
    sample_overlaps,
    threshold_sweep,
    tv_distance,
)

FORMATS = "johnson-stats/1, lattice/1, verify-report/1, geodesics/1, interval/1"
VERSION_LINE = f"disc {__version__} (formats: {FORMATS})"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits on bad flags; route through the exit-code contract
    def error(self, message):
        raise UsageError(message)


def _write_atomic(path: str, text: str) -> None:
    target_dir = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=target_dir, prefix=".disc-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _canon_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _fmt_fraction(q: Fraction, digits: int = 12) -> str:
    with mp.workdps(40):
        return mp.nstr(mp.mpf(q.numerator) / q.denominator, digits)


def _fmt_mpf(x, digits: int = 12) -> str:
    with mp.workdps(40):
        return mp.nstr(+x, digits)


def _resolve_total(args) -> int:
    if args.N is not None:
        if args.n is not None or args.k is not None:
            raise UsageError("give either --N or --n/--k, not both")
        return args.N
    if args.n is None or args.k is None:
        raise UsageError("need --N, or both --n and --k")
    return comb(args.n, args.k + 1)


def _resolve_mode(args):
    """(mode, lattice-or-None) from --mode plus --N / --n --k --seed."""
    if args.mode == "free":
        n_bits = _resolve_total(args)
        return free_mode(n_bits), None
    if args.n is None or args.k is None or args.seed is None:
        raise UsageError("geometric mode needs --n, --k and --seed")
    spec = ArrangementSpec.generate(args.n, args.k, args.seed)
    lat = build_lattice(spec)
    return geometric_mode(lat), lat


def _parse_support(s: str, n_bits: int, flag: str) -> int:
    if len(s) != n_bits:
        raise UsageError(
            f"{flag} must be a {n_bits}-character bitstring, got {len(s)}"
        )
    try:
        return support_from_bitstring(s)
    except ValueError as e:
        raise UsageError(f"{flag}: {e}") from None


def cmd_johnson(args) -> int:
    stats = johnson_stats(args.n, args.k)
    if args.dot:
        _write_atomic(args.dot, johnson_dot(args.n, args.k))
        print(f"wrote {args.dot}")
    if args.stats or not args.dot:
        sys.stdout.write(_canon_json(stats.to_json_dict()))
    return 0


def cmd_lattice(args) -> int:
    spec = ArrangementSpec.generate(args.n, args.k, args.seed)
    lat = build_lattice(spec)
    _write_atomic(args.out, _canon_json(lat.to_json_dict()))
    if args.dot:
        _write_atomic(args.dot, lat.to_dot())
    print(
        f"lattice B({args.n},{args.k}): {lat.num_elements} elements, "
        f"{len(lat.covers)} covers, rank counts {lat.rank_counts()} "
        f"-> {args.out}"
    )
    return 0


def _parse_claims(raw: str) -> list[str]:
    names = [c.strip() for c in raw.split(",") if c.strip()]
    if not names:
        raise UsageError("empty --claims")
    if names == ["all"]:
        return list(CLAIM_NAMES)
    for c in names:
        if c not in CLAIM_NAMES:
            raise UsageError(
                f"unknown claim {c!r}; choose from {', '.join(CLAIM_NAMES)} or 'all'"
            )
    return names


def _lattices_identical(a, b) -> bool:
    return (
        a.n_bits == b.n_bits
        and tuple(e.support for e in a.elements) == tuple(e.support for e in b.elements)
        and tuple(e.rank for e in a.elements) == tuple(e.rank for e in b.elements)
        and a.covers == b.covers
    )


def cmd_verify(args) -> int:
    if args.threads < 1:
        raise UsageError("--threads must be >= 1")
    mode, lat = _resolve_mode(args)
    claims = _parse_claims(args.claims)
    reports = run_claims(mode, claims)
    bundle = {
        "format": "verify-report/1",
        "tool": {"name": "discarr", "version": __version__},
        "mode": mode.kind,
        "N": mode.n_bits,
        "claims": [r.to_json_dict() for r in reports],
        "work": {
            "claim_entries": len(reports),
            "checks": sum(r.checked for r in reports),
        },
    }
    if lat is not None:
        bundle["spec"] = lat.spec.to_json_dict()
        bundle["lattice"] = {
            "num_elements": lat.num_elements,
            "rank_counts": lat.rank_counts(),
        }
        if args.compare_seed is not None:
            spec2 = ArrangementSpec.generate(args.n, args.k, args.compare_seed)
            lat2 = build_lattice(spec2)
            bundle["seed_comparison"] = {
                "seed": args.compare_seed,
                "identical": _lattices_identical(lat, lat2),
            }
    elif args.compare_seed is not None:
        raise UsageError("--compare-seed only applies to geometric mode")
    text = _canon_json(bundle)
    passed = sum(r.verdict == "pass" for r in reports)
    if args.report:
        _write_atomic(args.report, text)
        print(
            f"verify {mode.kind} N={mode.n_bits}: {passed}/{len(reports)} "
            f"claim entries pass -> {args.report}"
        )
    else:
        sys.stdout.write(text)
    return 0


def cmd_geodesics(args) -> int:
    mode, _lat = _resolve_mode(args)
    f = _parse_support(args.src, mode.n_bits, "--from")
    g = _parse_support(args.dst, mode.n_bits, "--to")
    rep = geodesics(f, g, mode, enumerate_paths=args.enumerate)
    out = {
        "format": "geodesics/1",
        "mode": mode.kind,
        "from": args.src,
        "to": args.dst,
        "ground": list(rep.ground),
        "count": rep.count,
        "linear_extensions": rep.linear_extensions,
        "agree": rep.agree,
        "relations": [list(r) for r in rep.poset.relations],
    }
    if rep.paths is not None:
        out["paths"] = [list(p) for p in rep.paths]
    if args.out:
        _write_atomic(args.out, _canon_json(out))
        print(f"wrote {args.out}")
    print(
        f"geodesics |S|={len(rep.ground)}: {rep.count} paths, "
        f"{rep.linear_extensions} linear extensions, agree={rep.agree}"
    )
    return 0


def cmd_interval(args) -> int:
    mode, _lat = _resolve_mode(args)
    x = _parse_support(args.x, mode.n_bits, "--x")
    y = _parse_support(args.y, mode.n_bits, "--y")
    rep = verify_interval_cube(x, y, mode)
    out = rep.to_json_dict()
    out.update(
        {"format": "interval/1", "mode": mode.kind, "x": args.x, "y": args.y}
    )
    if args.report:
        _write_atomic(args.report, _canon_json(out))
        print(f"wrote {args.report}")
    print(
        f"interval dim={rep.dim}: {rep.count}/{rep.expected} elements, "
        f"cube={rep.cube_ok}, convex={rep.convex_ok}, "
        f"verdict={'pass' if rep.all_ok else 'fail'}"
    )
    return 0


def cmd_sample(args) -> int:
    n_total = _resolve_total(args)
    cfg = ExperimentConfig(
        n_total=n_total, r=args.r, trials=args.trials, seed=args.seed
    )
    res = sample_overlaps(cfg)
    lines = ["trial,T,distance"]
    t_values = res.t_values
    d_values = res.d_values
    for i in range(cfg.trials):
        lines.append(f"{i},{t_values[i]},{d_values[i]}")
    _write_atomic(args.csv, "\n".join(lines) + "\n")
    print(
        f"sample N={n_total} r={cfg.r} trials={cfg.trials}: "
        f"P(T=0) exact {_fmt_fraction(res.exact_law.pmf[0])} "
        f"empirical {_fmt_fraction(res.empirical_pmf[0])}; "
        f"identity d=2r-2T {'held' if res.identity_ok else 'VIOLATED'} "
        f"-> {args.csv}"
    )
    print(f"note: {MODEL_NOTE}")
    return 0


def cmd_threshold(args) -> int:
    n_total = _resolve_total(args)
    exponents = [e.strip() for e in args.exponents.split(",") if e.strip()]
    if not exponents:
        raise UsageError("empty --exponents")
    for e in exponents:
        try:
            v = float(e)
        except ValueError:
            raise UsageError(f"bad exponent {e!r}") from None
        if not 0 < v < 1:
            raise UsageError(f"exponent {e} outside (0, 1)")
    rows = threshold_sweep(n_total, exponents, args.trials, args.seed)
    lines = ["exponent,r,exact_intersect,empirical_intersect,stderr"]
    for row in rows:
        lines.append(
            f"{row.exponent},{row.r},{_fmt_fraction(row.exact_intersect)},"
            f"{_fmt_fraction(row.empirical_intersect)},{row.stderr:.6g}"
        )
    _write_atomic(args.csv, "\n".join(lines) + "\n")
    print(
        f"threshold N={n_total} trials={args.trials}: {len(rows)} rows "
        f"-> {args.csv}"
    )
    print(f"note: {MODEL_NOTE}")
    return 0


def cmd_tv(args) -> int:
    grid = [int(s) for s in args.grid.split(",") if s.strip()]
    alphas = [a.strip() for a in args.alpha.split(",") if a.strip()]
    if not grid or not alphas:
        raise UsageError("need nonempty --grid and --alpha")
    lines = ["N,r,tv,ratio_tv_N2_r3"]
    worst = None
    for n_total in grid:
        for a in alphas:
            r = floor_power(n_total, a)
            rec = tv_distance(n_total, r)
            lines.append(
                f"{n_total},{r},{_fmt_mpf(rec.tv)},{_fmt_mpf(rec.ratio_tv_n2_r3)}"
            )
            if r and (worst is None or rec.ratio_tv_n2_r3 > worst):
                worst = rec.ratio_tv_n2_r3
    _write_atomic(args.csv, "\n".join(lines) + "\n")
    bound = _fmt_mpf(worst) if worst is not None else "n/a"
    print(
        f"tv grid {args.grid} x alpha {args.alpha}: max ratio tv*N^2/r^3 = "
        f"{bound} -> {args.csv}"
    )
    return 0


def _digest_verify(path: str, doc: dict, out: list) -> None:
    label = f"{doc.get('mode', '?')} N={doc.get('N', '?')} ({os.path.basename(path)})"
    out.append(f"== claims: {label} ==")
    rows = [("claim", "graph", "verdict", "checked", "counterexamples")]
    for c in doc.get("claims", []):
        rows.append(
            (
                str(c.get("claim")),
                str(c.get("graph")),
                str(c.get("verdict")),
                str(c.get("checked")),
                str(len(c.get("counterexamples", []))),
            )
        )
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for r in rows:
        out.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    if "seed_comparison" in doc:
        sc = doc["seed_comparison"]
        out.append(
            f"seed comparison vs seed={sc.get('seed')}: "
            f"{'identical' if sc.get('identical') else 'DIFFERENT'}"
        )
    out.append("")


def _digest_csv(path: str, text: str, out: list) -> None:
    rows = [line.split(",") for line in text.strip().splitlines() if line]
    if not rows:
        return
    out.append(f"== table: {os.path.basename(path)} ==")
    widths = [
        max(len(r[i]) for r in rows if i < len(r)) for i in range(len(rows[0]))
    ]
    for r in rows:
        out.append(
            "  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip()
        )
    out.append("")


def cmd_report(args) -> int:
    out: list[str] = []
    for path in args.files:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
        stripped = text.lstrip()
        if stripped.startswith("{"):
            doc = json.loads(text)
            if doc.get("format") != "verify-report/1":
                raise UsageError(f"{path}: not a verify report")
            _digest_verify(path, doc, out)
        else:
            _digest_csv(path, text, out)
    sys.stdout.write("\n".join(out))
    if out:
        sys.stdout.write("\n")
    return 0


def _add_mode_flags(p: _Parser) -> None:
    p.add_argument("--mode", required=True, choices=["free", "geometric"])
    p.add_argument("--N", type=int, default=None, help="support bits (free mode)")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)


def _build_parser() -> _Parser:
    top = _Parser(prog="disc", description=__doc__)
    top.add_argument("--version", action="version", version=VERSION_LINE)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("johnson", help="Johnson graph stats / DOT export")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--stats", action="store_true")
    p.add_argument("--dot", default=None)
    p.set_defaults(func=cmd_johnson)

    p = sub.add_parser("lattice", help="build the intersection lattice")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--dot", default=None)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("verify", help="run claim verifications")
    _add_mode_flags(p)
    p.add_argument("--claims", default="all")
    p.add_argument("--report", default=None)
    p.add_argument("--compare-seed", type=int, default=None)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("geodesics", help="count/list geodesics between supports")
    _add_mode_flags(p)
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_geodesics)

    p = sub.add_parser("interval", help="interval-vs-cube checks for one pair")
    _add_mode_flags(p)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--report", default=None)
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("sample", help="sample overlap of random r-subsets")
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--csv", required=True)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("threshold", help="intersection probability sweep")
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--exponents", default="0.3,0.4,0.5,0.6,0.7")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--csv", required=True)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("tv", help="total variation vs Poisson on a grid")
    p.add_argument("--grid", default="100,1000,10000")
    p.add_argument("--alpha", default="0.3,0.4,0.45")
    p.add_argument("--csv", required=True)
    p.set_defaults(func=cmd_tv)

    p = sub.add_parser("report", help="digest report/CSV files")
    p.add_argument("files", nargs="*")
    p.set_defaults(func=cmd_report)

    return top


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except SystemExit as e:  # --version and -h exit through argparse
        return int(e.code or 0)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (DiscarrError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"i/o error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
