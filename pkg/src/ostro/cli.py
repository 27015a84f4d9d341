"""ostro: command-line access to the arrays, numeration and verification suites.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bfile, numer, oeis, verify
from .render import RenderSpec, render_garden, render_tower
from .towers import Unsupported, locate

OK, MISMATCH, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _positive_d(text: str) -> int:
    d = int(text)
    if d < 1:
        raise argparse.ArgumentTypeError(f"d must be >= 1, got {d}")
    return d


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ostro", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("garden", help="positive array with its wall column")
    g.add_argument("--d", type=_positive_d, default=2)
    g.add_argument("--rows", type=_nonneg, default=10)
    g.add_argument("--cols", type=_nonneg, default=8)
    g.add_argument("--format", choices=("ascii", "csv", "json"), default="ascii")

    t = sub.add_parser("tower", help="bi-infinite rows with right, red and left walls")
    t.add_argument("--d", type=_positive_d, default=2)
    t.add_argument("--rows", type=_nonneg, default=20)
    t.add_argument("--left", type=_nonneg, default=7, help="columns shown left of the right wall")
    t.add_argument("--right", type=_nonneg, default=1, help="columns shown right of the right wall")
    t.add_argument("--labels", action="store_true")
    t.add_argument("--underline-palindromes", action="store_true")
    t.add_argument("--format", choices=("ascii", "csv", "json"), default="ascii")

    for name, what in (("encode", "Ostrowski word of N >= 0"), ("decode", "value of an msd Ostrowski word"),
                       ("dual-encode", "dual word of any integer"), ("dual-decode", "value of an msd dual word")):
        c = sub.add_parser(name, help=what)
        c.add_argument("--d", type=_positive_d, default=2)
        c.add_argument("value")

    loc = sub.add_parser("locate", help="row and column of N in the positive array")
    loc.add_argument("--d", type=_positive_d, default=2)
    loc.add_argument("N", type=int)

    v = sub.add_parser("verify", help="run a property suite")
    v.add_argument("--suite", choices=verify.SUITES, required=True)
    v.add_argument("--d-min", type=_positive_d, default=2)
    v.add_argument("--d-max", type=int, default=3)
    v.add_argument("--limit", type=_nonneg, default=None)
    v.add_argument("--format", choices=("text", "json"), default="text")

    o = sub.add_parser("oeis", help="compare a generated sequence with a b-file")
    o.add_argument("--id", required=True)
    o.add_argument("--terms", type=_nonneg, default=50)
    o.add_argument("--fixture", type=Path, required=True)
    o.add_argument("--fetch", action="store_true", help="download the b-file to --fixture first")
    return p


def _cmd_garden(a, out):
    out.write(render_garden(RenderSpec(a.d, a.rows, a.cols, 0, a.format)))
    return OK


def _cmd_tower(a, out):
    spec = RenderSpec(a.d, a.rows, a.right, a.left, a.format, a.labels, a.underline_palindromes)
    out.write(render_tower(spec))
    return OK


def _cmd_numeration(a, out):
    ctx = numer.context(a.d)
    if a.command in ("encode", "dual-encode"):
        N = _int(a.value)
        if a.command == "encode":
            if N < 0:
                raise UsageError(f"encode needs N >= 0, got {N}")
            w = numer.encode(ctx, N)
        else:
            w = numer.dual_encode(ctx, N)
        out.write((w.msd(ctx.d) or "0") + "\n")
        return OK
    try:
        digits = numer.parse_digits(a.value, ctx.d)
    except ValueError:
        raise UsageError(f"not a digit string: {a.value!r}") from None
    if digits == (0,):
        digits = ()
    try:
        value = numer.decode(ctx, digits) if a.command == "decode" else numer.dual_decode(ctx, digits)
    except numer.DigitError as e:
        raise UsageError(str(e)) from None
    out.write(f"{value}\n")
    return OK


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"not an integer: {text!r}") from None


def _cmd_locate(a, out):
    if a.N < 1:
        raise UsageError(f"locate needs N >= 1, got {a.N}")
    m, n = locate(a.d, a.N)
    out.write(f"{m} {n}\n")
    return OK


def _cmd_verify(a, out):
    d_values = range(a.d_min, a.d_max + 1)
    checks = verify.run_suite(a.suite, d_values, a.limit)
    ok = all(c.ok for c in checks)
    if a.format == "json":
        json.dump({"suite": a.suite, "d_min": a.d_min, "d_max": a.d_max, "ok": ok,
                   "checks": [c.as_dict() for c in checks]}, out, indent=1)
        out.write("\n")
    else:
        for c in checks:
            line = f"{'PASS' if c.ok else 'FAIL'}  d={c.d}  {c.name} [{c.ref}]  checked={c.checked}"
            if not c.ok:
                line += f"  failures={len(c.failures)} e.g. {c.failures[:3]}"
            for k, n in c.flagged.items():
                line += f"  (rejected form '{k}' fails {n} times)"
            out.write(line + "\n")
        out.write(f"{a.suite}: {'PASS' if ok else 'FAIL'} ({len(checks)} checks)\n")
    return OK if ok else MISMATCH


def _cmd_oeis(a, out):
    if a.id not in oeis.SEQUENCES:
        raise UsageError(f"unknown sequence {a.id}; known: {', '.join(sorted(oeis.SEQUENCES))}")
    if a.fetch:
        a.fixture.write_text(bfile.fetch(a.id))
    if not a.fixture.exists():
        raise UsageError(f"fixture not found: {a.fixture}")
    try:
        bf = bfile.read(a.fixture)
    except bfile.BFileError as e:
        raise UsageError(f"{a.fixture}: {e}") from None
    if a.terms == 0:
        out.write(f"{a.id}: 0 terms, trivial match\n")
        return OK
    if len(bf.entries) < a.terms:
        raise UsageError(f"fixture has only {len(bf.entries)} terms, {a.terms} requested")
    expected = bf.entries[: a.terms]
    got = oeis.generate(a.id, a.terms, bf.offset)
    for (n, want), have in zip(expected, got):
        if want != have:
            out.write(f"{a.id}: MISMATCH at index {n}: fixture {want}, generated {have}\n")
            return MISMATCH
    out.write(f"{a.id}: {a.terms} terms match\n")
    return OK


_COMMANDS = {
    "garden": _cmd_garden,
    "tower": _cmd_tower,
    "encode": _cmd_numeration,
    "decode": _cmd_numeration,
    "dual-encode": _cmd_numeration,
    "dual-decode": _cmd_numeration,
    "locate": _cmd_locate,
    "verify": _cmd_verify,
    "oeis": _cmd_oeis,
}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return _COMMANDS[a.command](a, out)
    except (UsageError, Unsupported) as e:
        print(f"ostro: error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
