"""Command line surface.

Exit codes: 0 success, 1 bad input or usage, 2 verification failure (a
coverage report with failures, or a class partition that fails its sanity
check).  All output is deterministic: identical invocations print identical
bytes.
"""

from __future__ import annotations

import argparse
import sys

from .core import FormesError, QuadraticForm, classify, divisor_witness, reduce_form
from .enumeration import Sign, enumerate_divisor_forms
from .historical import build_table_rows, render_csv, render_markdown
from .indefinite import cycle, divisor_classes, equivalent_indefinite
from .oracle import coverage_report


def _parse_ints(text: str, count: int, what: str) -> tuple[int, ...]:
    parts = text.split(",")
    if len(parts) != count:
        raise FormesError(f"{what} needs {count} comma-separated integers, got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise FormesError(f"{what} must be integers, got {text!r}") from None


def _parse_form(text: str) -> QuadraticForm:
    return QuadraticForm(*_parse_ints(text, 3, "a form literal"))


def _parse_start(text: str) -> tuple[int, int, int]:
    # either a plain l,q,r triple or a divisor-form literal p:q:r[:neg]
    if ":" in text:
        parts = text.split(":")
        neg = False
        if parts and parts[-1] == "neg":
            neg = True
            parts = parts[:-1]
        if len(parts) != 3:
            raise FormesError(f"divisor-form literal must be p:q:r[:neg], got {text!r}")
        try:
            p, q, r = (int(v) for v in parts)
        except ValueError:
            raise FormesError(f"divisor-form literal must be integers, got {text!r}") from None
        return (r, q, p) if neg else (p, q, r)
    return _parse_ints(text, 3, "a start triple")


def _sign(value: str) -> Sign:
    return Sign.PLUS if value == "plus" else Sign.MINUS


def _cmd_reduce(args) -> int:
    f = _parse_form(args.form)
    g, t = reduce_form(f)
    print(f"form: {f}")
    print(f"reduced: {g}")
    print(f"transform: {t}")
    return 0


def _cmd_classify(args) -> int:
    cls = classify(_parse_form(args.form))
    print(f"kind: {cls.kind.value}")
    print(f"k: {cls.k}")
    if cls.h is not None:
        print(f"h: {cls.h}")
    return 0


def _cmd_witness(args) -> int:
    b, c, d = _parse_ints(args.bcd, 3, "--bcd")
    t, u = _parse_ints(args.tu, 2, "--tu")
    w = divisor_witness(QuadraticForm(b, c, d), t, u, args.A)
    print(f"divisor: {w.divisor}")
    print(f"form: {w.form}")
    print(f"args: {w.s},{w.x}")
    print(f"intermediates: b={w.b} c={w.c} E={w.e} theta={w.theta}")
    print(f"check: {w.l}*{w.s}^2 + {w.m}*{w.s}*{w.x} + {w.n}*{w.x}^2 = {w.divisor}")
    return 0


def _cmd_enumerate(args) -> int:
    entries = enumerate_divisor_forms(args.a, _sign(args.sign), not args.all_divisors)
    for e in entries:
        print(e.label())
    return 0


def _cmd_classes(args) -> int:
    classes = divisor_classes(args.a)
    print(f"a: {args.a}")
    print(f"classes: {len(classes)}")
    seen: list = []
    for i, cls in enumerate(classes, start=1):
        members = ", ".join(e.label() for e in cls.members)
        print(f"class {i}: representative {cls.representative.label()}")
        print(f"  members: {members}")
        seen.extend(cls.members)
    # partition sanity: disjoint classes covering the full candidate list
    full = enumerate_divisor_forms(args.a, Sign.MINUS, odd_only=True)
    if len(seen) != len(set(seen)) or set(seen) != set(full):
        print("error: classes do not partition the candidate list", file=sys.stderr)
        return 2
    return 0


def _cmd_equivalent(args) -> int:
    f = _parse_form(args.f)
    g = _parse_form(args.g)
    t = equivalent_indefinite(args.a, f, g)
    if t is None:
        print("equivalent: no")
    else:
        print("equivalent: yes")
        print(f"transform: {t}")
    return 0


def _cmd_cycle(args) -> int:
    c = cycle(args.a, _parse_start(args.start))
    print(f"a: {args.a}")
    print(f"start: {c.start}")
    for s in c.states:
        print(
            f"state {s.index}: q={s.q} r_prev={s.r_prev} r_next={s.r_next} "
            f"m={s.multiplier} parity={s.parity}"
        )
    mu, nu = c.closed_at
    print(f"closure: mu={mu} nu={nu}")
    for g, t in c.reduced_forms.items():
        print(f"reduced: {g} via {t}")
    return 0


def _cmd_verify(args) -> int:
    report = coverage_report(
        args.a, _sign(args.sign), args.t_bound, args.cap, args.rep_bound
    )
    print(
        f"a: {report.a}  sign: {report.sign.value}  t_bound: {report.t_bound}  "
        f"cap: {report.divisor_cap}  rep_bound: {report.rep_bound}"
    )
    for row in report.rows:
        if row.witness_entry is None:
            print(f"d={row.divisor} UNREPRESENTED")
        else:
            y, z = row.witness_args
            print(f"d={row.divisor} form={row.witness_entry.label()} args={y},{z}")
    print(f"failures: {report.failures}")
    return 2 if report.failures else 0


def _cmd_table(args) -> int:
    sign = _sign(args.sign)
    rows = build_table_rows(args.max_a, sign)
    text = render_csv(rows) if args.format == "csv" else render_markdown(rows, sign)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="formes",
        description="Divisor forms of t^2 +- a*u^2: reduction, cycles, classes, tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="reduce a form to |m| <= min(|l|, |n|)")
    p.add_argument("--form", required=True, help="form literal l,m,n")
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("classify", help="sign type and invariant of a form")
    p.add_argument("--form", required=True, help="form literal l,m,n")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("witness", help="represent a divisor of b*t^2 + c*t*u + d*u^2")
    p.add_argument("--bcd", required=True, help="coefficients b,c,d")
    p.add_argument("--tu", required=True, help="coprime arguments t,u")
    p.add_argument("--A", required=True, type=int, help="the divisor to represent")
    p.set_defaults(handler=_cmd_witness)

    p = sub.add_parser("enumerate", help="candidate divisor forms for squarefree a")
    p.add_argument("--a", required=True, type=int)
    p.add_argument("--sign", required=True, choices=["plus", "minus"])
    p.add_argument(
        "--all-divisors",
        action="store_true",
        help="keep forms with both outer coefficients even (even divisors only)",
    )
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("classes", help="equivalence classes of the minus-case forms")
    p.add_argument("--a", required=True, type=int)
    p.set_defaults(handler=_cmd_classes)

    p = sub.add_parser("equivalent", help="decide equivalence of two forms of invariant -4a")
    p.add_argument("--a", required=True, type=int)
    p.add_argument("--f", required=True, help="form literal l,m,n")
    p.add_argument("--g", required=True, help="form literal l,m,n")
    p.set_defaults(handler=_cmd_equivalent)

    p = sub.add_parser("cycle", help="walk the cycle of an indefinite form")
    p.add_argument("--a", required=True, type=int)
    p.add_argument("--start", required=True, help="triple r_lead,q,r_trail or p:q:r[:neg]")
    p.set_defaults(handler=_cmd_cycle)

    p = sub.add_parser("verify", help="brute-force coverage of scanned odd divisors")
    p.add_argument("--a", required=True, type=int)
    p.add_argument("--sign", required=True, choices=["plus", "minus"])
    p.add_argument("--t-bound", type=int, default=50)
    p.add_argument("--cap", type=int, default=500)
    p.add_argument("--rep-bound", type=int, default=60)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("table", help="regenerate the divisor-form tables with flags")
    p.add_argument("--max-a", required=True, type=int)
    p.add_argument("--sign", required=True, choices=["plus", "minus"])
    p.add_argument("--format", required=True, choices=["csv", "md"])
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(handler=_cmd_table)

    return parser


def run(argv: list[str]) -> int:
    """Dispatch one invocation; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors; fold usage into 1
        return 0 if exc.code == 0 else 1
    try:
        return args.handler(args)
    except FormesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
