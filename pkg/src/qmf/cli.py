"""Command-line interface.

Subcommands:
  coeff   print one exact Fourier coefficient (optionally reduced mod M)
  verify  run a congruence-theorem sweep and emit a JSON verdict
  table   dump all box coefficients of a form as CSV or JSON

Exit codes: 0 success (verify: all checks hold), 1 verification or
reduction failure, 2 usage or precondition error. Rationals are always
printed exactly (num/den strings), never as floats. Built forms can be
cached as JSON under --cache DIR (or $QMF_CACHE); a cache hit reproduces
the computed expansion bit for bit.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from . import congr
from .fexp import FourierExpansion
from .forms import build_form
from .tmat import enumerate_psd, parse_tmatrix

DEFAULT_DEPTH = 3
_DEPTH_WARN = 5


def _warn_depth(N: int) -> None:
    if N >= _DEPTH_WARN:
        print(
            f"warning: depth {N} enumerates roughly {52 * N**4 // 2} index "
            "matrices per form; expect long runtimes and large output",
            file=sys.stderr,
        )


def _cache_dir(args) -> str | None:
    return args.cache or os.environ.get("QMF_CACHE")


def _load_form(name: str, N: int, cache: str | None) -> FourierExpansion:
    """Build a named form, round-tripping through the JSON cache if enabled."""
    key = name.strip().upper()
    if cache is None:
        return build_form(key, N)
    path = os.path.join(cache, f"{key}_N{N}.json")
    if os.path.exists(path):
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        return FourierExpansion.from_json_entries(
            data["entries"], data["weight"], data["depth"]
        )
    form = build_form(key, N)
    os.makedirs(cache, exist_ok=True)
    payload = {
        "form": key,
        "weight": form.weight,
        "depth": form.N,
        "entries": form.to_json_entries(),
    }
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)
    os.replace(tmp, path)
    return form


def _residue(a: Fraction, modulus: int):
    """a mod modulus in 0..modulus-1, or None when a is not integral mod it."""
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    try:
        inv = pow(a.denominator, -1, modulus)
    except ValueError:
        return None
    return a.numerator * inv % modulus


def _cmd_coeff(args) -> int:
    T = parse_tmatrix(args.T)
    if not T.is_psd():
        print(
            f"warning: {T} is not positive semidefinite; coefficient is 0",
            file=sys.stderr,
        )
        a = Fraction(0)
    else:
        N = max(args.depth, T.n, T.m)
        _warn_depth(N)
        form = _load_form(args.form, N, _cache_dir(args))
        a = form.coeff(T)
    if args.mod is None:
        print(a)
        return 0
    r = _residue(a, args.mod)
    if r is None:
        print(
            f"error: coefficient {a} is not integral mod {args.mod}",
            file=sys.stderr,
        )
        return 1
    print(f"{a} ≡ {r} (mod {args.mod})")
    return 0


def _cmd_verify(args) -> int:
    N = args.depth
    _warn_depth(N)
    theorem = args.theorem
    if theorem == "ramanujan":
        if args.k is None or args.p is None:
            print("error: verify ramanujan needs --k and --p", file=sys.stderr)
            return 2
        verdicts = [congr.ramanujan_verdict(args.k, args.p, N)]
    elif theorem == "theta":
        verdicts = congr.verify_theta_cong(N)
    elif theorem == "mod23":
        verdicts = [congr.verify_mod23(N)]
    elif theorem == "congeis":
        if args.k is None:
            print("error: verify congeis needs --k", file=sys.stderr)
            return 2
        verdicts = [congr.verify_cong_eis(args.k, N)]
    else:  # ep1
        if args.p is None:
            print("error: verify ep1 needs --p", file=sys.stderr)
            return 2
        verdicts = [congr.verify_ep_minus_one(args.p, N)]
    payload = [v.to_json() for v in verdicts]
    text = json.dumps(payload[0] if len(payload) == 1 else payload, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if all(v.ok for v in verdicts) else 1


def _cmd_table(args) -> int:
    N = args.max
    _warn_depth(N)
    form = _load_form(args.form, N, _cache_dir(args))
    rows = []
    for T in enumerate_psd(N):
        a = form.coeff(T)
        row = {
            "T": str(T),
            "num": str(a.numerator),
            "den": str(a.denominator),
        }
        if args.mod is not None:
            r = _residue(a, args.mod)
            if r is None:
                print(
                    f"error: coefficient at {T} is not integral mod {args.mod}",
                    file=sys.stderr,
                )
                return 1
            row["residue"] = str(r)
        rows.append(row)
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        if args.format == "csv":
            writer = csv.DictWriter(
                out, fieldnames=list(rows[0]), lineterminator="\n"
            )
            writer.writeheader()
            writer.writerows(rows)
        else:
            entries = []
            for row in rows:
                entry = {
                    "T": row["T"],
                    "coeff": {"num": row["num"], "den": row["den"]},
                }
                if "residue" in row:
                    entry["residue"] = row["residue"]
                entries.append(entry)
            out.write(json.dumps(entries, indent=2) + "\n")
    finally:
        if args.out:
            out.close()
    return 0


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmf",
        description=(
            "Exact Fourier coefficients and congruences of degree-2 "
            "quaternionic modular forms over the Hurwitz order"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument(
            "--cache",
            metavar="DIR",
            default=None,
            help="cache built forms as JSON under DIR (default: $QMF_CACHE)",
        )

    p_coeff = sub.add_parser("coeff", help="print one Fourier coefficient")
    p_coeff.add_argument("--form", required=True, help="X10, X12, X14, E<k>H or G<k>H")
    p_coeff.add_argument(
        "--T", required=True, help="index matrix as n,m,a,b,c,d"
    )
    p_coeff.add_argument("--mod", type=int, metavar="M", help="also reduce mod M")
    p_coeff.add_argument(
        "--depth", type=int, default=DEFAULT_DEPTH, help="truncation depth (default 3)"
    )
    add_common(p_coeff)
    p_coeff.set_defaults(func=_cmd_coeff)

    p_verify = sub.add_parser("verify", help="verify a congruence theorem")
    p_verify.add_argument(
        "theorem",
        choices=["ramanujan", "theta", "mod23", "congeis", "ep1"],
        help="which theorem sweep to run",
    )
    p_verify.add_argument("--k", type=int, help="weight parameter")
    p_verify.add_argument("--p", type=int, help="prime modulus parameter")
    p_verify.add_argument(
        "--depth", type=int, default=DEFAULT_DEPTH, help="truncation depth (default 3)"
    )
    p_verify.add_argument("--out", metavar="FILE", help="write the JSON verdict here")
    add_common(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_table = sub.add_parser("table", help="dump box coefficients of a form")
    p_table.add_argument("--form", required=True, help="X10, X12, X14, E<k>H or G<k>H")
    p_table.add_argument(
        "--max", type=int, required=True, help="box depth to enumerate"
    )
    p_table.add_argument("--mod", type=int, metavar="M", help="add a residue column")
    p_table.add_argument(
        "--format", choices=["csv", "json"], default="csv", help="output format"
    )
    p_table.add_argument("--out", metavar="FILE", help="write here instead of stdout")
    add_common(p_table)
    p_table.set_defaults(func=_cmd_table)
    return parser


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
