"""Command-line interface: ``hexaring <verb> [options]``.

Exit codes: 0 success, 1 other library error, 2 malformed input,
3 violated theorem hypothesis, 4 size cap or long run refused.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from hexaring import buildup, classify, hcode, ring
from hexaring.errors import FormatError, HexaringError
from hexaring.ring import RingElem, RingId, ZERO


def _read(path: str) -> hcode.HCode:
    try:
        return hcode.read_hcode(path)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def cmd_tables(args, out) -> int:
    for z in (None, RingId.H23, RingId.H32):
        title = "addition" if z is None else f"multiplication in {z}"
        print(f"# {title}", file=out)
        print(ring.render_table(z), file=out)
    if args.verify:
        checked = ring.verify_tables()
        print(f"verified {checked} table entries against the closed-form operations", file=out)
    return 0


def cmd_check(args, out) -> int:
    print(hcode.properties(_read(args.file)).render(), file=out)
    return 0


def cmd_dual(args, out) -> int:
    out.write(hcode.format_hcode(hcode.h_dual(_read(args.file))))
    return 0


def cmd_mindist(args, out) -> int:
    d = hcode.h_min_distance(_read(args.file))
    print("none" if d is None else d, file=out)
    return 0


def _symbol(text: str | None, name: str) -> RingElem | None:
    if text is None:
        return None
    if len(text) != 1:
        raise FormatError(f"--{name} must be a single ring symbol, got {text!r}")
    return RingElem.from_symbol(text)


def _digits(text: str) -> tuple[int, ...]:
    text = text.replace(",", "").replace(" ", "")
    if not text or not text.isdigit():
        raise FormatError(f"--x must be a string of digits, got {text!r}")
    return tuple(int(ch) for ch in text)


def _read_genset(path: str, z: RingId) -> buildup.GenSet:
    """An HCode file, or raw generator rows over 0abcde for the ring ``z``.

    Raw rows end at the first comment line after them, so the output of
    ``buildup`` can be fed back in.
    """
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    lines = []
    for ln in (raw.strip() for raw in text.splitlines()):
        if ln.startswith("#"):
            if lines:
                break  # a later section, e.g. the component form printed by buildup
            continue
        if ln:
            lines.append(ln)
    if lines and lines[0].startswith("ring:"):
        C0 = hcode.parse_hcode(text)
        return buildup.GenSet(C0.ring, C0.n, tuple(C0.generators()))
    if not lines:
        raise FormatError(f"{path} holds no generator rows")
    try:
        return buildup.GenSet.parse(z, lines)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def cmd_buildup(args, out) -> int:
    z = RingId.H32 if args.construction == "h32+3" else RingId.H23
    G = _read_genset(args.input, z)
    x = _digits(args.x)
    alpha = _symbol(args.alpha, "alpha")
    beta = _symbol(args.beta, "beta")
    gamma = _symbol(args.gamma, "gamma")
    if args.construction == "h23+2":
        if alpha is None:
            raise FormatError("h23+2 needs --alpha")
        G1 = buildup.build_h23_plus2(G, x, alpha)
        degenerate = alpha == ZERO
    elif args.construction == "h23+3":
        beta = beta if beta is not None else alpha
        if beta is None:
            raise FormatError("h23+3 needs --beta (or --alpha)")
        G1 = buildup.build_h23_plus3(G, x, beta)
        degenerate = beta == ZERO
    else:
        if None in (alpha, beta, gamma):
            raise FormatError("h32+3 needs --alpha, --beta and --gamma")
        G1 = buildup.build_h32_plus3(G, x, alpha, beta, gamma)
        degenerate = ZERO in (alpha, beta)
    if degenerate:
        print("warning: degenerate scalar choice, the new leading rows add no information", file=sys.stderr)
    print("# generating set", file=out)
    print(G1.render(), file=out)
    print("# component form", file=out)
    out.write(hcode.format_hcode(buildup.span_closure(G1)))
    return 0


def cmd_classify(args, out) -> int:
    z = RingId.parse(args.ring)
    if (args.ka is None) != (args.kb is None):
        raise FormatError("--ka and --kb must be given together")
    shapes = [(args.ka, args.kb)] if args.ka is not None else classify.table_shapes(z, args.n)
    for ka, kb in shapes:
        keep = args.emit_codes is not None
        ckpt = args.checkpoint if len(shapes) == 1 else (args.checkpoint and f"{args.checkpoint}.{ka}-{kb}")
        fam = classify.classify(
            z, args.n, ka, kb, jobs=args.jobs, keep_codes=keep, checkpoint=ckpt,
            allow_long=args.allow_long, progress=sys.stderr,
        )
        print(fam.row.machine_line(), file=out, flush=True)
        if keep:
            target = args.emit_codes if len(shapes) == 1 else os.path.join(args.emit_codes, f"{ka}-{kb}")
            classify.emit_codes(fam, target)
    return 0


def cmd_report(args, out) -> int:
    z = RingId.parse(args.ring)
    rows = classify.report_table(
        z, args.nmax, jobs=args.jobs, allow_long=args.allow_long, progress=sys.stderr
    )
    print(classify.render_rows(rows), file=out)
    print(file=out)
    for r in rows:
        print(r.machine_line(), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hexaring", description="Codes over the rings H23 and H32.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("tables", help="print the ring tables")
    p.add_argument("--verify", action="store_true", help="check the tables against the closed-form operations")
    p.set_defaults(func=cmd_tables)

    for verb, func, text in (
        ("check", cmd_check, "print the property report of an HCode file"),
        ("dual", cmd_dual, "print the dual of an HCode file"),
        ("mindist", cmd_mindist, "print the minimum distance of an HCode file"),
    ):
        p = sub.add_parser(verb, help=text)
        p.add_argument("file")
        p.set_defaults(func=func)

    p = sub.add_parser("buildup", help="apply a building-up construction")
    p.add_argument("--construction", required=True, choices=sorted(buildup.CONSTRUCTIONS))
    p.add_argument("--in", dest="input", required=True, metavar="FILE")
    p.add_argument("--x", required=True, metavar="DIGITS")
    p.add_argument("--alpha", metavar="SYM")
    p.add_argument("--beta", metavar="SYM")
    p.add_argument("--gamma", metavar="SYM")
    p.set_defaults(func=cmd_buildup)

    default_jobs = os.cpu_count() or 1
    p = sub.add_parser("classify", help="classify self-orthogonal codes of one length")
    p.add_argument("--ring", required=True, choices=["h23", "h32"])
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--ka", type=int)
    p.add_argument("--kb", type=int)
    p.add_argument("--jobs", type=int, default=default_jobs)
    p.add_argument("--emit-codes", metavar="DIR")
    p.add_argument("--allow-long", action="store_true")
    p.add_argument("--checkpoint", metavar="FILE", help="record finished pairs here and resume from it")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("report", help="print a full classification table")
    p.add_argument("--ring", required=True, choices=["h23", "h32"])
    p.add_argument("--nmax", required=True, type=int)
    p.add_argument("--jobs", type=int, default=default_jobs)
    p.add_argument("--allow-long", action="store_true")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except HexaringError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except AssertionError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
