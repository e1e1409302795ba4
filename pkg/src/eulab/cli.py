"""Command-line front end.

One executable, eight subcommands: factor, omega-e, tau, crho, verify,
refine, search, polyprod.  Primary output is JSON on stdout (CSV optional
for search); diagnostics and a one-line run manifest go to stderr.  Exit
status: 0 success (for verify: every trial passed), 1 at least one bound
failed, 2 usage or malformed input.

Eisenstein integers are written "a,b" for a + b*omega everywhere, with
negative coordinates allowed ("0,-1" is minus omega).  Set files carry one
element per line; blank lines and lines starting with # are skipped.

The manifest's output digest is computed over the output object with the
volatile fields (seconds, nodes_visited) nulled, so identical parameters,
seed and version yield an identical digest even though wall times differ.
"""

from __future__ import annotations

import argparse
import hashlib
import io
import json
import re
import sys
import time
from csv import writer as csv_writer
from pathlib import Path

from eulab import __version__
from eulab.bounds import (
    THEOREMS, c_constants, refine_t1, refine_t2, run_trials, verify_cor1,
    verify_cor2, verify_erdos_turan, verify_rho_minus1, verify_t1, verify_t2,
)
from eulab.core import EInt
from eulab.factor import factor_e, factor_rational, omega_e, tau_e
from eulab.polyprod import (
    SparsePolySpec, build_vectors, check_independence, omega_product,
)
from eulab.search import PairPrimeCache, run_search

VERIFY_TOKENS = ("t1", "t2", "cor1", "cor2", "rho-minus1", "erdos-turan")
_VOLATILE_KEYS = ("seconds", "nodes_visited")

RHO_ONE = EInt(1, 0)


class CliError(Exception):
    """Input problem that should terminate with exit status 2."""


def _f12(value: float) -> float:
    return float(f"{value:.12g}")


def _eint_arg(text: str) -> EInt:
    try:
        return EInt.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _read_lines(path: str):
    try:
        raw = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None
    for lineno, line in enumerate(raw.splitlines(), start=1):
        line = line.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _parse_eint_set(path: str) -> list[EInt]:
    out = []
    for lineno, line in _read_lines(path):
        try:
            out.append(EInt.parse(line))
        except ValueError:
            raise CliError(f"{path}:{lineno}: bad element {line!r}") from None
    if not out:
        raise CliError(f"{path}: no elements")
    return out


def _parse_int_set(path: str) -> list[int]:
    out = []
    for lineno, line in _read_lines(path):
        try:
            out.append(int(line))
        except ValueError:
            raise CliError(f"{path}:{lineno}: bad integer {line!r}") from None
    if not out:
        raise CliError(f"{path}: no elements")
    return out


# --------------------------------------------------------------------------
# subcommand handlers: each returns (output object, exit code)
# --------------------------------------------------------------------------

def _cmd_factor(args) -> tuple[dict, int]:
    if args.n is not None:
        f = factor_rational(args.n)
        return {"n": args.n, "sign": f.sign,
                "factors": [{"p": p, "e": e} for p, e in f.factors]}, 0
    f = factor_e(args.e)
    return {"e": str(args.e), "unit": str(f.unit),
            "factors": [{"p": str(p), "e": e} for p, e in f.factors]}, 0


def _cmd_omega_e(args) -> tuple[dict, int]:
    return {"e": str(args.e), "omega": omega_e(args.e)}, 0


def _cmd_tau(args) -> tuple[dict, int]:
    return {"e": str(args.e), "tau": tau_e(args.e)}, 0


def _cmd_crho(args) -> tuple[dict, int]:
    c = c_constants(args.rho)
    return {
        "rho": str(c.rho),
        "c_rho": str(c.c_rho),
        "tau": c.tau,
        "threshold": c.threshold,
        "bound_constant": _f12(c.bound_constant),
        "primes": [{"pi": str(pc.pi), "gamma": pc.gamma, "delta": pc.delta,
                    "c": pc.c} for pc in c.primes],
    }, 0


def _report_dict(report) -> dict:
    out = report.to_json_dict()
    out["bound"] = _f12(out["bound"])
    return out


def _cmd_verify(args) -> tuple[dict, int]:
    token = args.theorem
    name = token.replace("-", "_")
    if token == "t2":
        if args.rho is None:
            raise CliError("verify t2 needs --rho")
    elif args.rho is not None:
        raise CliError(f"verify {token} does not take --rho")

    if args.set is not None:
        if token in ("t1", "t2", "rho-minus1"):
            elements = _parse_eint_set(args.set)
        else:
            elements = _parse_int_set(args.set)
        if token == "t1":
            reports = [verify_t1(elements)]
        elif token == "t2":
            reports = [verify_t2(elements, args.rho, general=args.general)]
        elif token == "cor1":
            reports = [verify_cor1(elements)]
        elif token == "cor2":
            reports = [verify_cor2(elements)]
        elif token == "rho-minus1":
            reports = [verify_rho_minus1(elements)]
        else:
            reports = [verify_erdos_turan(elements)]
    else:
        reports = run_trials(name, args.trials, args.size, args.range,
                             seed=args.seed, rho=args.rho,
                             general=args.general)

    all_passed = all(r.passed for r in reports)
    out = {
        "theorem": token,
        "rho": None if args.rho is None else str(args.rho),
        "reports": [_report_dict(r) for r in reports],
        "all_passed": all_passed,
    }
    return out, 0 if all_passed else 1


def _cmd_refine(args) -> tuple[dict, int]:
    elements = _parse_eint_set(args.set)
    if args.rho is None or args.rho == RHO_ONE:
        trace = refine_t1(elements)
    else:
        trace = refine_t2(elements, args.rho)
    return {
        "mode": trace.mode,
        "rho": None if trace.rho is None else str(trace.rho),
        "initial": [str(x) for x in trace.initial],
        "sector": trace.sector,
        "steps": [{"prime": str(s.prime), "rule": s.rule,
                   "sizes": list(s.sizes), "kept": s.kept}
                  for s in trace.steps],
        "snapshots": [[str(x) for x in snap] for snap in trace.snapshots],
        "final": [str(x) for x in trace.final],
        "checks": trace.checks,
    }, 0


def _cmd_search(args) -> tuple[dict, int]:
    print(f"building pair table for max element {args.max} ...",
          file=sys.stderr)
    cache = PairPrimeCache(args.max)
    result = run_search(cache, args.k, args.max,
                        primitive_only=args.primitive,
                        all_witnesses=args.all_witnesses,
                        workers=args.workers)
    out = result.to_json_dict()
    out["seconds"] = _f12(out["seconds"])
    return out, 0


def _cmd_polyprod(args) -> tuple[dict, int]:
    try:
        raw = json.loads(Path(args.poly).read_text())
    except OSError as exc:
        raise CliError(f"cannot read {args.poly}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise CliError(f"{args.poly}: invalid JSON ({exc})") from None
    try:
        spec = SparsePolySpec(raw["n"], tuple(raw["r"]), tuple(raw["m"]))
    except (KeyError, TypeError) as exc:
        raise CliError(f"{args.poly}: expected keys n, r, m ({exc})") from None
    set_a = _parse_int_set(args.set_a)
    set_b = _parse_int_set(args.set_b)
    out = {
        "n": spec.n,
        "size_a": len(set(set_a)),
        "size_b": len(set(set_b)),
        "omega": omega_product(spec, set_a, set_b),
        "independence": None,
    }
    if args.check_independence:
        _, b_vecs = build_vectors(spec, set_a, set_b)
        report = check_independence(b_vecs)
        out["independence"] = {
            "independent": report.independent,
            "subsets_checked": report.subsets_checked,
            "singular_subset": None if report.singular_subset is None
            else [list(v) for v in report.singular_subset],
        }
    return out, 0


# --------------------------------------------------------------------------
# output plumbing
# --------------------------------------------------------------------------

def _render_csv(out: dict) -> str:
    buf = io.StringIO()
    w = csv_writer(buf)
    w.writerow(["k", "max", "minimum", "witness_count", "examples"])
    examples = ";".join(" ".join(str(x) for x in wit)
                        for wit in out["witnesses"][:3])
    w.writerow([out["k"], out["max"], out["minimum"], out["witness_count"],
                examples])
    return buf.getvalue()


def _null_volatile(obj):
    if isinstance(obj, dict):
        return {k: None if k in _VOLATILE_KEYS else _null_volatile(v)
                for k, v in obj.items()}
    if isinstance(obj, list):
        return [_null_volatile(v) for v in obj]
    return obj


def output_digest(out: dict) -> str:
    canon = json.dumps(_null_volatile(out), sort_keys=True,
                       separators=(",", ":"))
    return hashlib.sha256(canon.encode()).hexdigest()


def validate_output(subcommand: str, out: dict) -> None:
    """Check the documented shape of a subcommand's JSON output."""
    def need(keys):
        missing = [k for k in keys if k not in out]
        if missing:
            raise ValueError(f"{subcommand} output missing {missing}")

    if subcommand == "factor":
        need(["factors"])
        variant = ("n", "sign") if "n" in out else ("e", "unit")
        need(variant)
        for entry in out["factors"]:
            if set(entry) != {"p", "e"} or not isinstance(entry["e"], int):
                raise ValueError("factor entries must be {p, e}")
    elif subcommand == "omega-e":
        need(["e", "omega"])
    elif subcommand == "tau":
        need(["e", "tau"])
    elif subcommand == "crho":
        need(["rho", "c_rho", "tau", "threshold", "bound_constant", "primes"])
        for entry in out["primes"]:
            if set(entry) != {"pi", "gamma", "delta", "c"}:
                raise ValueError("crho prime entries must be {pi, gamma, delta, c}")
    elif subcommand == "verify":
        need(["theorem", "rho", "reports", "all_passed"])
        for r in out["reports"]:
            for key in ("theorem", "seed", "size", "set", "omega", "bound",
                        "comparison", "passed", "flagged_zero_factor",
                        "witness_primes"):
                if key not in r:
                    raise ValueError(f"verify report missing {key!r}")
            if r["comparison"] not in (">", ">="):
                raise ValueError("bad comparison")
    elif subcommand == "refine":
        need(["mode", "rho", "initial", "sector", "steps", "snapshots",
              "final", "checks"])
        for s in out["steps"]:
            if s["rule"] not in ("uv", "lemma2", "lemma4"):
                raise ValueError(f"bad rule {s['rule']!r}")
    elif subcommand == "search":
        need(["k", "max", "minimum", "witness_count", "witnesses",
              "nodes_visited", "seconds"])
        if out["witness_count"] != len(out["witnesses"]):
            raise ValueError("witness_count disagrees with witnesses")
    elif subcommand == "polyprod":
        need(["n", "size_a", "size_b", "omega", "independence"])
    else:
        raise ValueError(f"unknown subcommand {subcommand!r}")


_HANDLERS = {
    "factor": _cmd_factor,
    "omega-e": _cmd_omega_e,
    "tau": _cmd_tau,
    "crho": _cmd_crho,
    "verify": _cmd_verify,
    "refine": _cmd_refine,
    "search": _cmd_search,
    "polyprod": _cmd_polyprod,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulab",
        description="Eisenstein-integer arithmetic, pair-product prime "
                    "bounds, and exhaustive subset searches.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", help="factor a rational or Eisenstein integer")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int, help="rational integer")
    g.add_argument("--e", type=_eint_arg, help='Eisenstein integer "a,b"')

    p = sub.add_parser("omega-e", help="count distinct Eisenstein prime divisors")
    p.add_argument("--e", type=_eint_arg, required=True)

    p = sub.add_parser("tau", help="divisor count, unit multiples distinct")
    p.add_argument("--e", type=_eint_arg, required=True)

    p = sub.add_parser("crho", help="control constants for a multiplier rho")
    p.add_argument("--rho", type=_eint_arg, required=True)

    p = sub.add_parser("verify", help="randomized bound verification")
    p.add_argument("theorem", choices=VERIFY_TOKENS)
    p.add_argument("--set", help="verify this one set instead of random trials")
    p.add_argument("--rho", type=_eint_arg, help="multiplier (t2 only)")
    p.add_argument("--general", action="store_true",
                   help="force the general machinery for rho = 1,0")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--size", type=int, default=20)
    p.add_argument("--range", type=int, default=100,
                   help="coordinate range (E sets) or max value (integer sets)")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("refine", help="run a refinement chain with trace")
    p.add_argument("--set", required=True)
    p.add_argument("--rho", type=_eint_arg,
                   help="multiplier; omit or pass 1,0 for the additive chain")

    p = sub.add_parser("search", help="minimum omega over k-subsets of 1..M")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--primitive", action="store_true",
                   help="restrict to sets with overall gcd 1")
    p.add_argument("--all-witnesses", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("polyprod", help="vector lift and omega of a sparse "
                                        "polynomial's pair product")
    p.add_argument("--poly", required=True, help="JSON file {n, r, m}")
    p.add_argument("--set-a", required=True, dest="set_a")
    p.add_argument("--set-b", required=True, dest="set_b")
    p.add_argument("--check-independence", action="store_true")

    # "a,b" values with a leading minus ("-1,0") must parse as option
    # values, not flags, so widen the token pattern argparse treats as
    # a negative number on every parser in the tree.
    matcher = re.compile(r"^-\d+$|^-\d*\.\d+$|^-\d+,-?\d+$")
    for sp in (parser, *sub.choices.values()):
        sp._negative_number_matcher = matcher

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        out, code = _HANDLERS[args.command](args)
    except CliError as exc:
        print(f"eulab: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"eulab: {exc}", file=sys.stderr)
        return 2

    if getattr(args, "format", "json") == "csv":
        text = _render_csv(out)
    else:
        text = json.dumps(out, indent=2) + "\n"
    out_path = getattr(args, "out", None)
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)

    params = {k: str(v) if isinstance(v, EInt) else v
              for k, v in vars(args).items() if k != "command"}
    manifest = {
        "subcommand": args.command,
        "params": params,
        "seed": getattr(args, "seed", None),
        "version": __version__,
        "wall_time": _f12(time.perf_counter() - start),
        "output_digest": output_digest(out),
    }
    print(json.dumps(manifest), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
