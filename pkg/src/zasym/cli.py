"""Command-line front end.

Exit status: 0 on success, 1 if any verification report fails, 2 on usage
errors (bad flags, malformed shapes, violated hypotheses).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import _kernels
from .content import ContentSequence, content_sequence, diagonal_label, partition_from_content_sequence
from .errors import ZasymError
from .partitions import (
    FrobeniusCoords,
    Partition,
    cell_stats,
    content_sum,
    enumerate_partitions,
    enumerate_z_asymmetric,
    frobenius,
    from_frobenius,
    k_statistic,
    parse_parts,
)
from .report import encode
from .schur import (
    dim_hook_content,
    principal_specialization,
    schur_bialternant_eval,
    schur_ssyt_eval,
    stepped_specialization,
)
from .tabloids import (
    DEFAULT_CAP,
    Tabloid,
    content_gf,
    count_content_tabloids,
    count_hook_tabloids,
    enumerate_tabloids,
    phi,
    phi_inverse,
    verify_phi,
)
from .verify import CLAIMS, SWEEP_FAMILIES, sweep


class UsageError(Exception):
    pass


def _shape(text: str) -> Partition:
    return Partition(parse_parts(text))


def _rows(text: str) -> tuple[tuple[int, ...], ...]:
    """``"2,0,1/2,1/3"`` -> ((2, 0, 1), (2, 1), (3,))."""
    return tuple(parse_parts(r) for r in text.split("/")) if text.strip() else ()


def _diagram(lam: Partition, values=None) -> str:
    if not lam.parts:
        return "(empty)"
    if values is None:
        return "\n".join("[]" * p for p in lam.parts)
    it = iter(values)
    rows = [[str(next(it)) for _ in range(p)] for p in lam.parts]
    width = max(len(v) for r in rows for v in r)
    return "\n".join(" ".join(v.rjust(width) for v in r) for r in rows)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zasym", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=["json", "text"], default="json")
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions", help="enumerate partitions of a weight")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--max-length", type=int)
    p.add_argument("--z-asym", type=int, help="keep only z-asymmetric partitions")

    p = sub.add_parser("frobenius", help="Frobenius coordinates, either direction")
    p.add_argument("--shape")
    p.add_argument("--alpha")
    p.add_argument("--beta")

    p = sub.add_parser("stats", help="cell statistics, k and content sum")
    p.add_argument("--shape", required=True)

    p = sub.add_parser("content-seq", help="content sequence, either direction")
    p.add_argument("--shape")
    p.add_argument("--seq", help="comma-separated window of the sequence")
    p.add_argument("--origin", type=int, help="0-based index of content 0 inside --seq")

    p = sub.add_parser("tabloids", help="content/hook tabloids")
    p.add_argument("action", choices=["count", "enum", "gf"])
    p.add_argument("--shape", required=True)
    p.add_argument("--kind", choices=["content", "hook"], default="content")
    p.add_argument("--n", type=int)
    p.add_argument("--limit", type=int, help="stop enumeration after this many")

    p = sub.add_parser("bijection", help="the diagonal-shift bijection phi")
    p.add_argument("action", choices=["apply", "invert", "verify"])
    p.add_argument("--shape", help="shape of the input tabloid (apply/invert)")
    p.add_argument("--rows", help="tabloid rows, e.g. 2,0,1,3,-3/2,1,1/3")
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("dim", help="hook-content dimension")
    p.add_argument("--shape", required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("schur", help="Schur polynomial evaluations and specializations")
    p.add_argument("action", choices=["eval", "specialize", "stepped"])
    p.add_argument("--shape", required=True)
    p.add_argument("--points")
    p.add_argument("--n", type=int)
    p.add_argument("--start", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--step", type=int, default=2)

    p = sub.add_parser("verify", help="verify identities, singly or as sweeps")
    p.add_argument("claim", choices=sorted(set(SWEEP_FAMILIES) | {"all"}))
    p.add_argument("--shape")
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--D", type=int, default=8)
    p.add_argument("--no-sign", action="store_true", help="drop the sign in the Littlewood sums")
    p.add_argument("--max-weight", type=int, default=8)
    p.add_argument("--max-m", type=int, default=2)
    p.add_argument("--max-n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include elapsed times (not reproducible)")
    p.add_argument("--quiet", action="store_true", help="print only the summary")

    sub.add_parser("backend", help="show which kernel backend is active")
    return parser


def _coords(args) -> FrobeniusCoords:
    if args.alpha is None or args.beta is None:
        raise UsageError("--alpha and --beta are required")
    return FrobeniusCoords(parse_parts(args.alpha), parse_parts(args.beta))


def _emit(data, text: str, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(encode(data)) + "\n")
    else:
        out.write(text + "\n")


def _single_verification(args):
    c = args.claim
    need = lambda *names: all(getattr(args, k) is not None for k in names)  # noqa: E731
    if c in ("littlewood1", "littlewood2") and need("n"):
        return CLAIMS[c](args.n, args.D, signed=not args.no_sign)
    if c == "thm21" and need("alpha", "beta", "m", "p", "q"):
        return CLAIMS[c](parse_parts(args.alpha), parse_parts(args.beta), args.m, args.p, args.q, oracle=True)
    if c in ("thm22", "lemma-k", "cor-content") and need("shape", "m"):
        return CLAIMS[c](_shape(args.shape), args.m)
    if c in ("thm33", "cor35") and need("shape", "m", "n"):
        return CLAIMS[c](_shape(args.shape), args.m, args.n)
    if c == "cor34" and need("alpha", "beta", "m", "n"):
        return CLAIMS[c](parse_parts(args.alpha), parse_parts(args.beta), args.m, args.n)
    if c == "phi" and need("alpha", "beta", "m", "n"):
        return verify_phi(_coords(args), args.m, args.n, cap=args.cap)
    return None


def run_verify(args, out) -> int:
    single = _single_verification(args)
    if single is not None:
        reports = [single]
    elif args.claim in ("littlewood1", "littlewood2") and args.no_sign:
        reports = [CLAIMS[args.claim](n, args.D, signed=False) for n in range(1, (args.max_n or 3) + 1)]
    else:
        reports = sweep(args.claim, args.max_weight, args.max_m, args.max_n, args.seed, args.workers)
    failed = [r for r in reports if not r.passed]
    if not args.quiet:
        for r in reports:
            if args.format == "json":
                out.write(json.dumps(r.to_json(timing=args.timing)) + "\n")
            else:
                out.write(f"{r.status.upper():4} {r.claim} {json.dumps(encode(r.parameters))}\n")
    summary = {"claim": args.claim, "total": len(reports), "passed": len(reports) - len(failed), "failed": len(failed)}
    if args.format == "json":
        out.write(json.dumps({"summary": summary}) + "\n")
    else:
        out.write(f"{summary['passed']}/{summary['total']} passed\n")
    return 1 if failed else 0


def run(args, out) -> int:
    fmt = args.format
    cmd = args.command

    if cmd == "partitions":
        if args.z_asym is not None:
            parts = enumerate_z_asymmetric(args.weight, args.z_asym)
            if args.max_length is not None:
                parts = [p for p in parts if p.length <= args.max_length]
        else:
            parts = enumerate_partitions(args.weight, args.max_length)
        _emit(parts, "\n".join(str(p) for p in parts), fmt, out)

    elif cmd == "frobenius":
        if args.shape is not None:
            f = frobenius(_shape(args.shape))
            _emit(f, str(f), fmt, out)
        else:
            lam = from_frobenius(_coords(args))
            _emit(lam, f"{lam}\n{_diagram(lam)}", fmt, out)

    elif cmd == "stats":
        lam = _shape(args.shape)
        stats = cell_stats(lam)
        data = {
            "shape": lam,
            "weight": lam.weight,
            "length": lam.length,
            "rank": lam.rank,
            "conjugate": lam.conjugate,
            "frobenius": frobenius(lam),
            "k": k_statistic(lam),
            "content_sum": content_sum(lam),
            "cells": stats,
        }
        text = "\n".join(
            [
                f"shape {lam}  weight {lam.weight}  rank {lam.rank}  conjugate {lam.conjugate}",
                f"k = {data['k']}  content sum = {data['content_sum']}",
                "hooks:",
                _diagram(lam, [s.hook for s in stats]),
                "contents:",
                _diagram(lam, [s.content for s in stats]),
            ]
        )
        _emit(data, text, fmt, out)

    elif cmd == "content-seq":
        if args.shape is not None:
            lam = _shape(args.shape)
            seq = content_sequence(lam)
            labels = diagonal_label(lam)
            data = {**seq.to_json(), "labels": [[list(c), list(lab)] for c, lab in labels.items()]}
            _emit(data, str(seq), fmt, out)
        else:
            if args.seq is None or args.origin is None:
                raise UsageError("give --shape, or --seq with --origin")
            seq = ContentSequence.from_list(parse_parts(args.seq), args.origin)
            lam = partition_from_content_sequence(seq)
            _emit(lam, str(lam), fmt, out)

    elif cmd == "tabloids":
        lam = _shape(args.shape)
        if args.kind == "content" and args.n is None:
            raise UsageError("content tabloids need --n")
        if args.action == "count":
            value = count_content_tabloids(lam, args.n) if args.kind == "content" else count_hook_tabloids(lam)
            _emit(value, str(value), fmt, out)
        elif args.action == "gf":
            if args.kind != "content":
                raise UsageError("gf is defined for content tabloids")
            g = content_gf(lam, args.n)
            _emit(g, str(g), fmt, out)
        else:
            n = args.n if args.kind == "content" else None
            for k, t in enumerate(enumerate_tabloids(lam, args.kind, n, cap=args.cap)):
                if args.limit is not None and k >= args.limit:
                    break
                _emit(t, t.grid() + f"\nnorm {t.norm}\n", fmt, out)

    elif cmd == "bijection":
        if args.action == "verify":
            report = verify_phi(_coords(args), args.m, args.n, cap=args.cap)
            _emit(report, f"{report.status.upper()} phi {report.parameters} ({report.detail})", fmt, out)
            return 0 if report.passed else 1
        if args.shape is None or args.rows is None:
            raise UsageError("--shape and --rows are required")
        t = Tabloid(_shape(args.shape), "content", args.n, _rows(args.rows))
        image = phi(t, args.m) if args.action == "apply" else phi_inverse(t, args.m)
        text = f"{t.grid()}\n-> shape {image.shape}, n={image.n}\n{image.grid()}\nnorm {t.norm} -> {image.norm}"
        _emit(image, text, fmt, out)

    elif cmd == "dim":
        value = dim_hook_content(_shape(args.shape), args.n)
        _emit(value, str(value), fmt, out)

    elif cmd == "schur":
        lam = _shape(args.shape)
        if args.action == "eval":
            if args.points is None:
                raise UsageError("--points is required")
            pts = parse_parts(args.points)
            value = schur_bialternant_eval(lam, pts)
            check = schur_ssyt_eval(lam, pts, cap=args.cap)
            data = {"bialternant": str(value), "ssyt": check}
            _emit(data, f"{value} (tableau sum {check})", fmt, out)
        elif args.action == "specialize":
            if args.n is None:
                raise UsageError("--n is required")
            g = principal_specialization(lam, args.n)
            _emit(g, str(g), fmt, out)
        else:
            if args.start is None or args.count is None:
                raise UsageError("--start and --count are required")
            g = stepped_specialization(lam, args.start, args.count, args.step)
            _emit(g, str(g), fmt, out)

    elif cmd == "verify":
        return run_verify(args, out)

    elif cmd == "backend":
        _emit({"backend": _kernels.BACKEND}, _kernels.BACKEND, fmt, out)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args, sys.stdout)
    except (UsageError, ZasymError) as exc:
        print(f"zasym: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
