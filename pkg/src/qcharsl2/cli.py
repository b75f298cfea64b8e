"""Command-line interface.

Drinfeld data is given on the command line as comma-separated "k:m"
tokens (or bare "k" for multiplicity one); integer vectors as
comma-separated lists.  Structured results go to stdout, diagnostics to
stderr; exit status is nonzero on any disagreement or failed check.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import characters, decomp, qstrings, quiver_a, sweeps
from .qstrings import DrinfeldData


def parse_drinfeld(spec):
    """Parse "k:m,k:m,..." (bare "k" means multiplicity 1)."""
    if spec.strip() == "":
        return DrinfeldData()
    pairs = []
    for pos, token in enumerate(spec.split(",")):
        token = token.strip()
        try:
            if ":" in token:
                ks, ms = token.split(":", 1)
                k, m = int(ks), int(ms)
            else:
                k, m = int(token), 1
        except ValueError:
            raise ValueError(f"bad Drinfeld token {token!r} at position {pos}") from None
        if m <= 0:
            raise ValueError(f"multiplicity must be positive in token {token!r} at position {pos}")
        pairs.append((k, m))
    return DrinfeldData(pairs)


def parse_vector(spec):
    if spec.strip() == "":
        return ()
    try:
        return tuple(int(tok) for tok in spec.split(","))
    except ValueError:
        raise ValueError(f"bad integer vector {spec!r}") from None


def _emit(payload, text, fmt):
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _drinfeld_sort_key(dd):
    return dd.items()


def cmd_kr_char(args):
    chi = characters.kr_character(args.n, args.k)
    _emit(chi.to_json(), str(chi), args.format)
    return 0


def cmd_std_char(args):
    chi = characters.standard_character(parse_drinfeld(args.pi))
    _emit(chi.to_json(), str(chi), args.format)
    return 0


def cmd_simple_char(args):
    chi = characters.simple_character(parse_drinfeld(args.pi))
    _emit(chi.to_json(), str(chi), args.format)
    return 0


def cmd_ordering(args):
    order = characters.standard_ordering(parse_drinfeld(args.pi))
    _emit(order, " ".join(map(str, order)), args.format)
    return 0


def cmd_strings(args):
    dec = qstrings.decompose(parse_drinfeld(args.pi))
    text = " + ".join(
        (f"{c}*{s}" if c > 1 else str(s)) for s, c in dec.parts
    ) or "(empty)"
    _emit(dec.to_json(), text, args.format)
    return 0


def cmd_rigid(args):
    summands = quiver_a.rigid_decomposition(parse_vector(args.d))
    items = sorted(summands.items())
    text = " + ".join((f"{c}*{u}" if c > 1 else str(u)) for u, c in items) or "(zero)"
    _emit([{"i": u.i, "j": u.j, "count": c} for u, c in items], text, args.format)
    return 0


def cmd_mult(args):
    q = decomp.MultiplicityQuery(parse_drinfeld(args.pi), parse_drinfeld(args.pitilde))
    closed = decomp.multiplicity_closed(q)
    oracle = decomp.multiplicity_oracle(q)
    if closed is None:
        verdict = "NOT-APPLICABLE"
    elif closed == oracle:
        verdict = "AGREE"
    else:
        verdict = "DISAGREE"
    payload = {"closed": closed, "oracle": oracle, "verdict": verdict}
    closed_text = "N/A" if closed is None else str(closed)
    _emit(payload, f"closed={closed_text} oracle={oracle} {verdict}", args.format)
    return 0 if verdict != "DISAGREE" else 1


def cmd_row(args):
    row = decomp.decomposition_row(parse_drinfeld(args.pi))
    items = sorted(row.items(), key=lambda kv: _drinfeld_sort_key(kv[0]))
    payload = [{"simple": dd.to_json(), "mult": c} for dd, c in items]
    text = "\n".join(f"[M : V({dd})] = {c}" for dd, c in items)
    _emit(payload, text, args.format)
    return 0


def cmd_ic_stalk(args):
    s = quiver_a.stratum(parse_vector(args.w), parse_vector(args.r))
    p = decomp.ic_stalk_poly(decomp.StalkQuery(s, parse_vector(args.k)))
    _emit(p.to_json(), str(p), args.format)
    return 0


def cmd_tsystem_verify(args):
    res = sweeps.sweep_tsystem(nmax=args.nmax, kmin=args.kmin, kmax=args.kmax)
    return _report([res], args.format)


def cmd_sweep_verify(args):
    results = sweeps.run_all(
        window=args.window,
        mult_total=args.mult_cap,
        geo_total=args.geo_total,
        rigid_n=args.rigid_n,
        rigid_total=args.rigid_total,
        stalk_n=args.stalk_n,
        stalk_wmax=args.stalk_wmax,
    )
    return _report(results, args.format)


def _report(results, fmt):
    if fmt == "json":
        print(
            json.dumps(
                [
                    {"sweep": r.name, "checked": r.checked, "failures": r.failures}
                    for r in results
                ],
                sort_keys=True,
            )
        )
    else:
        for r in results:
            print(r.summary())
    for r in results:
        for f in r.failures:
            print(f"FAIL[{r.name}] {f}", file=sys.stderr)
    return 0 if all(r.ok for r in results) else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qcharsl2",
        description="Exact q-characters and decomposition numbers for quantum affine sl2",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(fn=fn)
        return p

    p = add("kr-char", cmd_kr_char, help="character of a Kirillov-Reshetikhin module")
    p.add_argument("--n", type=int, required=True, help="string length")
    p.add_argument("--k", type=int, default=0, help="base spectral exponent")

    p = add("std-char", cmd_std_char, help="character of a standard module")
    p.add_argument("--pi", required=True)

    p = add("simple-char", cmd_simple_char, help="character of a simple module")
    p.add_argument("--pi", required=True)

    p = add("ordering", cmd_ordering, help="admissible tensor ordering of the zeros")
    p.add_argument("--pi", required=True)

    p = add("strings", cmd_strings, help="q-string decomposition of Drinfeld data")
    p.add_argument("--pi", required=True)

    p = add("rigid", cmd_rigid, help="rigid-module decomposition of a dimension vector")
    p.add_argument("--d", required=True, help="comma-separated dimension vector")

    p = add("mult", cmd_mult, help="decomposition number, closed formula vs oracle")
    p.add_argument("--pi", required=True)
    p.add_argument("--pitilde", required=True)

    p = add("row", cmd_row, help="full decomposition row of a standard module")
    p.add_argument("--pi", required=True)

    p = add("ic-stalk", cmd_ic_stalk, help="IC stalk Poincare polynomial")
    p.add_argument("--w", required=True, help="weight vector")
    p.add_argument("--r", required=True, help="rank tuple")
    p.add_argument("--k", required=True, help="rank drop, 0 <= k <= r")

    p = add("tsystem-verify", cmd_tsystem_verify, help="verify the T-system identities")
    p.add_argument("--nmax", type=int, default=5)
    p.add_argument("--kmin", type=int, default=-4)
    p.add_argument("--kmax", type=int, default=4)

    p = add("sweep-verify", cmd_sweep_verify, help="run the full verification grid")
    p.add_argument("--window", type=int, default=4)
    p.add_argument("--mult-cap", type=int, default=6)
    p.add_argument("--geo-total", type=int, default=8)
    p.add_argument("--rigid-n", type=int, default=5)
    p.add_argument("--rigid-total", type=int, default=8)
    p.add_argument("--stalk-n", type=int, default=4)
    p.add_argument("--stalk-wmax", type=int, default=3)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
