"""Command-line front end: ``spin9forms <verb> [options]``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage
errors.  Pseudo-random inputs come from a fixed linear congruential
generator seeded by ``--seed``, so identical arguments give identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .berger import ANCHORS, SLOPE_ON_RIGHT, weight_exponent
from .canonical import classify_families, emit_table, spin9_form, tau
from .constants import spin7_reference
from .errors import SpinFormsError, VerificationFailed
from .exterior import evaluate, format_blade, format_form
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="spin9forms", description="Exact invariant forms of the Hopf-type geometries.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    e = sub.add_parser("emit-table", help="print the normalised line-integral form")
    e.add_argument("--dim", type=int, choices=(2, 4, 8), required=True)
    e.add_argument("--format", choices=("text", "json", "csv"), default="text")
    e.add_argument("--raw", action="store_true", help="print the raw integral with its pi power")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=("all",) + SUITES, default="all")
    v.add_argument("--trials", type=int, default=20)
    v.add_argument("--seed", type=int, default=1)

    c = sub.add_parser("charpoly", help="coefficients of det(tI - psi)")
    c.add_argument("--coeff", type=int, choices=(2, 4, 6, 8))
    c.add_argument("--format", choices=("text", "json"), default="text")

    sub.add_parser("families", help="census of the monomials of the Spin(9) form")

    ev = sub.add_parser("eval", help="evaluate a form on vectors read from a file")
    ev.add_argument("--form", choices=("phi7", "spin9", "tau4"), required=True)
    ev.add_argument("--vectors", required=True, help="one vector per line, entries p/q separated by whitespace")

    sub.add_parser("info", help="print conventions")
    return p


def _cmd_emit(args, out):
    out.write(emit_table(args.dim, args.format, raw=args.raw))
    return 0


def _cmd_verify(args, out):
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    names = SUITES if args.suite == "all" else (args.suite,)
    status = 0
    for name in names:
        out.write(f"[{name}]\n")
        try:
            rep = run_suite(name, trials=args.trials, seed=args.seed)
        except VerificationFailed as exc:
            rep = getattr(exc, "report", None)
            for line in rep.lines() if rep else [str(exc)]:
                out.write(f"  {line}\n")
            for item in exc.diff[:10]:
                out.write(f"    diff: {item}\n")
            status = 1
            continue
        for line in rep.lines():
            out.write(f"  {line}\n")
    out.write("ALL PASS\n" if status == 0 else "FAILURES\n")
    return status


def _cmd_charpoly(args, out):
    orders = (args.coeff,) if args.coeff else (2, 4, 6, 8)
    if args.format == "json":
        payload = {
            f"tau{k}": [{"blade": list(b), "coeff": c} for b, c in tau(k).items()] for k in orders
        }
        out.write(json.dumps(payload, indent=1) + "\n")
    else:
        for k in orders:
            t = tau(k)
            out.write(f"tau{k} ({len(t)} terms): {format_form(t) if t else '0'}\n")
    return 0


def _cmd_families(args, out):
    census = classify_families(spin9_form())
    out.write(census.summary() + "\n")
    for f in range(1, 9):
        mags = ",".join(str(m) for m in census.magnitudes[f])
        out.write(f"family {f}: {census.counts[f]} monomials, |coeff| in {{{mags}}}\n")
    out.write(f"Cayley type in families 2, 3: {census.cayley[2]}, {census.cayley[3]}\n")
    return 1 if census.rule_violations else 0


def read_vectors(path: str) -> list[list[Fraction]]:
    vecs = []
    with open(path) as fh:
        for n, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                vecs.append([Fraction(tok) for tok in line.split()])
            except (ValueError, ZeroDivisionError) as exc:
                raise UsageError(f"{path}:{n}: {exc}") from None
    return vecs


def _cmd_eval(args, out):
    form = {"phi7": spin7_reference, "spin9": spin9_form, "tau4": lambda: tau(4)}[args.form]()
    vecs = read_vectors(args.vectors)
    if len(vecs) != form.grade or any(len(v) != form.dim for v in vecs):
        raise UsageError(f"{args.form} needs {form.grade} vectors of length {form.dim}")
    out.write(f"{evaluate(form, vecs)}\n")
    return 0


def _cmd_info(args, out):
    lines = [
        f"spin9forms {__version__}",
        "basis of O: 1, i, j, k, e, f, g, h; C and H are the first 2 and 4 units",
        "Kaehler form of A: sum_{i<j} A_ij dx_i ^ dx_j, i.e. (x, y) -> <x, A y>",
        "Spin(9) involutions: I_1..I_8 = [[0, R_conj(u)], [R_u, 0]] for u = 1, i, ..., h; I_9 = diag(1, -1)",
        "indices 9..16 are printed primed: 9 -> 1', ..., 16 -> 8'",
        "orientation: dx_1 ^ ... ^ dx_16; star(d_B) = sign(B, B^c) d_{B^c}",
    ]
    for n in (2, 4, 8):
        idx, val = ANCHORS[n]
        side = "x m" if SLOPE_ON_RIGHT[n] else "m x"
        lines.append(
            f"dim {n}: lines {{(x, {side})}}, weight (1+|m|^2)^-{weight_exponent(n)}, anchor {format_blade(idx)} = {val}"
        )
    lines.append("pseudo-random inputs: 64-bit LCG (MMIX constants), seed from --seed")
    out.write("\n".join(lines) + "\n")
    return 0


COMMANDS = {
    "emit-table": _cmd_emit,
    "verify": _cmd_verify,
    "charpoly": _cmd_charpoly,
    "families": _cmd_families,
    "eval": _cmd_eval,
    "info": _cmd_info,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.verb](args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except OSError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except SpinFormsError as exc:
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
