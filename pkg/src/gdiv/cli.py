"""Command line interface: ``gdiv <command> [options]``.

Exit status is 0 on success, 1 on usage or input errors, 2 when a
verification fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time

from . import __version__
from .acceptance import run_all
from .bell import bell_series, default_truncation, derive_zeta_exponents, verify_lemma6
from .champions import champion_scan, extremal_construction
from .constants import NonConvergenceError, compute_constant
from .divisors import Family, FunctionFamily, OracleBoundError, evaluate
from .gaussint import GaussInt, parse_gauss
from .primes import classify, factor_gauss, gaussian_primes_up_to
from .summing import lattice_summatory_oracle, residual_analysis

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2

COLUMNS = {
    "eval": ["family", "k", "arg", "value"],
    "factor": ["prime", "exponent", "norm"],
    "primes": ["re", "im", "norm", "class"],
    "bell": ["shift", "coefficient", "exponent", "residual"],
    "sum": ["x", "exact", "main", "residual", "normalized_residual"],
    "constants": ["which", "k", "value", "cutoff", "truncation", "tail_estimate", "method"],
    "champions": ["argument", "n_or_norm", "value", "ratio"],
    "extremal": ["family", "k", "l", "X", "ratio"],
    "verify-all": ["criterion", "passed", "values"],
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: usage error: {message}\n")


def _count(text: str) -> int:
    """Integers, also written as ``1e6`` or ``10**6``."""
    text = text.strip().replace("_", "")
    try:
        if "**" in text:
            b, e = text.split("**")
            return int(b) ** int(e)
        if "e" in text.lower():
            v = float(text)
            if v != int(v):
                raise ValueError
            return int(v)
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _k(text: str) -> int:
    k = _count(text)
    if not 2 <= k <= 64:
        raise argparse.ArgumentTypeError(f"k out of range (2..64): {k}")
    return k


def _family(text: str) -> Family:
    try:
        return Family(text)
    except ValueError:
        choices = ", ".join(f.value for f in Family)
        raise argparse.ArgumentTypeError(f"unknown family {text!r} (choose from {choices})") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gdiv", description="Exponential divisor functions over Z and Z[i].")
    p.add_argument("--version", action="version", version=f"gdiv {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=["text", "json", "csv"], default="text")
        sp.add_argument("--threads", type=_count, default=None, help="worker threads (env GDIV_THREADS)")
        return sp

    sp = add("eval", "value of one function at one argument")
    sp.add_argument("--family", type=_family, required=True)
    sp.add_argument("--k", type=_k, default=2)
    sp.add_argument("--arg", required=True, help="positive integer or a+bi")

    sp = add("factor", "factor a Gaussian integer")
    sp.add_argument("--arg", required=True)

    sp = add("primes", "canonical Gaussian primes up to a norm")
    sp.add_argument("--max-norm", type=_count, required=True)

    sp = add("bell", "Bell series and its zeta-power factorization")
    sp.add_argument("--family", type=_family, required=True)
    sp.add_argument("--k", type=_k, default=2)
    sp.add_argument("--truncation", type=_count, default=None)

    sp = add("sum", "summatory function against its main term")
    sp.add_argument("--family", type=_family, required=True)
    sp.add_argument("--k", type=_k, default=2)
    sp.add_argument("--x", type=_count, default=None)
    sp.add_argument("--xs", default=None, help="comma separated list, e.g. 1e4,1e5,1e6")
    sp.add_argument("--oracle", action="store_true", help="cross-check against lattice enumeration")
    sp.add_argument("--cutoff", type=_count, default=10**6, help="prime cutoff for the constant")

    sp = add("constants", "Euler-product constants")
    sp.add_argument("--which", choices=["C", "Cstar", "A", "B"], required=True)
    sp.add_argument("--k", type=_k, default=2)
    sp.add_argument("--cutoff", type=_count, default=10**6)
    sp.add_argument("--truncation", type=_count, default=64)
    sp.add_argument("--method", choices=["direct", "accelerated"], default="direct")

    sp = add("champions", "running maxima of log f loglog N / log N")
    sp.add_argument("--family", type=_family, required=True)
    sp.add_argument("--k", type=_k, default=2)
    sp.add_argument("--max", type=_count, required=True, dest="x_max")

    sp = add("extremal", "ratio of the product of all primes of norm <= X to the power l")
    sp.add_argument("--family", type=_family, required=True)
    sp.add_argument("--k", type=_k, default=2)
    sp.add_argument("--l", type=_count, required=True)
    sp.add_argument("--X", type=_count, required=True)

    add("verify-all", "run every acceptance check")
    return p


# --------------------------------------------------------------------------
# commands: each returns (rows, extra metadata, verification ok)


def _cmd_eval(a):
    fam = FunctionFamily(a.family, a.k)
    arg = parse_gauss(a.arg) if fam.gaussian else _rational_arg(a.arg)
    value = evaluate(fam, arg)
    return [{"family": a.family.value, "k": a.k, "arg": str(arg), "value": value}], {}, True


def _rational_arg(text: str) -> int:
    z = parse_gauss(text)
    if z.im != 0 or z.re < 1:
        raise ValueError(f"rational families need a positive integer, got {text!r}")
    return z.re


def _cmd_factor(a):
    z = parse_gauss(a.arg)
    f = factor_gauss(z)
    rows = [{"prime": str(q), "exponent": e, "norm": q.norm()} for q, e in f.factors]
    return rows, {"unit": str(f.unit), "value": str(z)}, True


def _cmd_primes(a):
    rows = []
    for q in gaussian_primes_up_to(a.max_norm):
        n = q.norm()
        p = n if q.im != 0 or n == 2 else q.re
        rows.append({"re": q.re, "im": q.im, "norm": n, "class": classify(p).value})
    return rows, {"cutoffs": {"max_norm": a.max_norm}}, True


def _cmd_bell(a):
    fam = FunctionFamily(a.family, a.k)
    T = a.truncation or default_truncation(fam)
    if a.family is Family.GAUSS_ONE:
        raise ValueError("no closed-form factorization for gauss_one")
    rep = verify_lemma6(fam, T)
    s = bell_series(fam, T)
    rows = [
        {
            "shift": j,
            "coefficient": s[j],
            "exponent": rep.closed_form_exponents.get(j, 0),
            "residual": rep.residual[j],
        }
        for j in range(T + 1)
    ]
    meta = {"cutoffs": {"truncation": T}, "report": rep.as_dict()}
    return rows, meta, rep.passed


def _cmd_sum(a):
    fam = FunctionFamily(a.family, a.k)
    if a.xs:
        xs = [_count(t) for t in a.xs.split(",") if t.strip()]
    elif a.x is not None:
        xs = [a.x]
    else:
        raise UsageError("sum needs --x or --xs")
    table = residual_analysis(fam, xs, a.threads, a.cutoff)
    rows = [r.as_row() for r in table.rows]
    meta = {
        "cutoffs": {"prime_cutoff": a.cutoff, "x_max": max(xs)},
        "constant": table.constant,
        "max_over_median": table.max_over_median,
    }
    ok = True
    if a.oracle:
        oracle = {x: lattice_summatory_oracle(fam, x) for x in xs}
        meta["oracle"] = oracle
        ok = all(oracle[r["x"]] == r["exact"] for r in rows)
    return rows, meta, ok


def _cmd_constants(a):
    r = compute_constant(a.which, a.k, a.cutoff, a.truncation, method=a.method)
    row = {
        "which": r.which,
        "k": r.k,
        "value": r.value,
        "cutoff": r.prime_cutoff,
        "truncation": r.series_truncation,
        "tail_estimate": r.tail_estimate,
        "method": r.method,
    }
    return [row], {"cutoffs": {"prime_cutoff": r.prime_cutoff, "truncation": r.series_truncation}}, True


def _cmd_champions(a):
    recs = champion_scan(FunctionFamily(a.family, a.k), a.x_max, a.threads)
    rows = [{"argument": r.argument, "n_or_norm": r.n_or_norm, "value": r.value, "ratio": r.ratio} for r in recs]
    return rows, {"cutoffs": {"max": a.x_max}}, True


def _cmd_extremal(a):
    ratio = extremal_construction(FunctionFamily(a.family, a.k), a.l, a.X)
    row = {"family": a.family.value, "k": a.k, "l": a.l, "X": a.X, "ratio": ratio}
    return [row], {"cutoffs": {"X": a.X}}, True


def _cmd_verify_all(a):
    results = run_all(a.threads)
    rows = [{"criterion": r.name, "passed": r.passed, "values": r.values} for r in results]
    meta = {"timing_by_criterion_ms": {r.name: round(r.seconds * 1000, 1) for r in results}}
    return rows, meta, all(r.passed for r in results)


COMMANDS = {
    "eval": _cmd_eval,
    "factor": _cmd_factor,
    "primes": _cmd_primes,
    "bell": _cmd_bell,
    "sum": _cmd_sum,
    "constants": _cmd_constants,
    "champions": _cmd_champions,
    "extremal": _cmd_extremal,
    "verify-all": _cmd_verify_all,
}


# --------------------------------------------------------------------------
# output


def _parameters(a) -> dict:
    out = {}
    for key, v in sorted(vars(a).items()):
        if key in ("command", "format"):
            continue
        out[key] = v.value if isinstance(v, Family) else v
    return out


def _render(command, a, rows, meta, fmt) -> str:
    if fmt == "json":
        envelope = {
            "command": command,
            "parameters": _parameters(a),
            "rows": rows,
            "metadata": {"version": __version__, "cutoffs": meta.pop("cutoffs", {}), **meta},
        }
        return json.dumps(envelope, indent=2, default=_jsonable) + "\n"
    cols = COLUMNS[command]
    buf = io.StringIO()
    if fmt == "csv":
        w = csv.DictWriter(buf, fieldnames=cols, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({c: json.dumps(v) if isinstance(v, (dict, list)) else v for c, v in r.items()})
        return buf.getvalue()
    # text
    if command == "eval":
        return f"{rows[0]['value']}\n"
    if command == "factor":
        parts = [f"({r['prime']})" + (f"^{r['exponent']}" if r["exponent"] > 1 else "") for r in rows]
        return " * ".join([f"({meta['unit']})"] + parts) + "\n"
    if command == "verify-all":
        lines = []
        for r in rows:
            ms = meta["timing_by_criterion_ms"][r["criterion"]]
            lines.append(f"[{'PASS' if r['passed'] else 'FAIL'}] {r['criterion']} ({ms:.0f} ms)")
        return "\n".join(lines) + "\n"
    lines = ["\t".join(cols)]
    for r in rows:
        lines.append("\t".join(_fmt(r.get(c, "")) for c in cols))
    return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _jsonable(v):
    if isinstance(v, GaussInt):
        return str(v)
    if hasattr(v, "item"):
        return v.item()
    raise TypeError(f"not serializable: {type(v).__name__}")


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    a = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        rows, meta, ok = COMMANDS[a.command](a)
    except UsageError as exc:
        print(f"gdiv: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OracleBoundError as exc:
        print(f"gdiv: resource limit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonConvergenceError as exc:
        print(f"gdiv: nonconvergent configuration: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OverflowError as exc:
        print(f"gdiv: overflow: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"gdiv: invalid input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    meta["timing_ms"] = round((time.perf_counter() - t0) * 1000, 1)
    stdout.write(_render(a.command, a, rows, meta, a.format))
    if not ok:
        print("gdiv: verification failed", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def main() -> None:
    sys.exit(run())
