"""Command line interface.

Exit status: 0 on success, 2 for usage errors, 3 for precondition, budget or
I/O failures, 1 for internal consistency failures.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from typing import Sequence, TextIO

from . import binom, canonical as canon, colex, constructions, profiles
from .cache import CacheError, GCache, default_path
from .canonical import BudgetExceeded, LevelInconsistency, Profile

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- serialisation of g tables -----------------------------------------------

_TERM = re.compile(r"C\((\d+),(\d+)\)")


def parse_cascade(text: str) -> binom.CascadeRep:
    terms = _TERM.findall(text)
    if not terms or "+".join(f"C({a},{i})" for a, i in terms) != text:
        raise ValueError(f"not a cascade representation: {text!r}")
    pairs = tuple((int(a), int(i)) for a, i in terms)
    return binom.CascadeRep(pairs[0][1], pairs)


def table_to_csv(table: profiles.GTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["l", "g", "cascade"])
    for row in table.rows:
        w.writerow([row.l, row.g, row.cascade_text])
    return buf.getvalue()


def table_from_csv(text: str, n: int, m: int) -> profiles.GTable:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != ["l", "g", "cascade"]:
        raise ValueError(f"unexpected table header {header}")
    rows = []
    for l, g, rep in reader:
        rows.append(profiles.GRow(int(l), int(g), parse_cascade(rep) if m >= 1 else None))
    return profiles.GTable(n, m, tuple(rows))


def table_to_json(table: profiles.GTable) -> str:
    return json.dumps({
        "n": table.n,
        "m": table.m,
        "rows": [
            {"l": r.l, "g": r.g, "cascade": r.cascade_text,
             "terms": [list(t) for t in r.rep.terms] if r.rep else None}
            for r in table.rows
        ],
    })


def table_from_json(text: str) -> profiles.GTable:
    data = json.loads(text)
    rows = tuple(
        profiles.GRow(r["l"], r["g"],
                      binom.CascadeRep(r["terms"][0][1], tuple(tuple(t) for t in r["terms"])) if r["terms"] else None)
        for r in data["rows"]
    )
    return profiles.GTable(data["n"], data["m"], rows)


def table_to_text(table: profiles.GTable) -> str:
    lines = [f"g_{table.n}({table.m}, l)"]
    width = max(len(f"{r.g:,}") for r in table.rows)
    for r in table.rows:
        lines.append(f"{r.l:>4}  {r.g:>{width},}  {r.cascade_text}")
    return "\n".join(lines) + "\n"


# -- argument helpers ----------------------------------------------------------

def _profile_arg(text: str) -> list[int]:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError:
        raw = None
    if not isinstance(raw, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in raw):
        raise argparse.ArgumentTypeError(f"expected a JSON array of integers, got {text!r}")
    return raw


def _subset_arg(text: str) -> colex.Subset:
    try:
        raw = json.loads(text)
        if not isinstance(raw, list):
            raise ValueError
        return colex.as_subset(int(x) for x in raw)
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError(f"expected a JSON array of increasing integers, got {text!r}") from None


def _read_subsets(args, n: int | None) -> list[colex.Subset]:
    if args.input:
        with open(args.input) as fh:
            lines = fh.read().splitlines()
    else:
        lines = sys.stdin.read().splitlines()
    try:
        return colex.parse_subsets(lines, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _level_family(subsets: list[colex.Subset], n: int) -> colex.Family:
    sizes = {len(s) for s in subsets}
    if len(sizes) > 1:
        raise UsageError(f"family mixes levels {sorted(sizes)}")
    level = sizes.pop() if sizes else 0
    return colex.Family(n, level, frozenset(subsets))


def _emit(out: TextIO, fmt: str, text: str, data):
    if fmt == "json":
        out.write(json.dumps(data) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _emit_family(out: TextIO, fmt: str, members, extra: dict | None = None):
    members = list(members)
    if fmt == "json":
        out.write(json.dumps({**(extra or {}), "members": [list(s) for s in members]}) + "\n")
    else:
        for s in members:
            out.write(colex.format_subset(s) + "\n")


def _sorted_mixed(members) -> list[colex.Subset]:
    return sorted(members, key=lambda s: (len(s), colex.rank(s)))


def _open_cache(args) -> GCache | None:
    if args.no_cache:
        return None
    return GCache(args.cache or default_path())


# -- commands ------------------------------------------------------------------

def cmd_repr(args, out):
    rep = binom.cascade(args.K, args.m)
    _emit(out, args.format, f"{args.K} = {rep}",
          {"K": args.K, "m": args.m, "cascade": str(rep), "terms": [list(t) for t in rep.terms]})


def cmd_boundary(args, out):
    value = binom.boundary(args.K, args.m)
    _emit(out, args.format, str(value), {"K": args.K, "m": args.m, "boundary": value})


def cmd_rank(args, out):
    r = colex.rank(args.set)
    _emit(out, args.format, str(r), {"set": list(args.set), "rank": r})


def cmd_unrank(args, out):
    s = colex.unrank(args.K, args.m, args.n)
    _emit(out, args.format, colex.format_subset(s), {"K": args.K, "m": args.m, "n": args.n, "set": list(s)})


def cmd_shadow(args, out):
    subsets = _read_subsets(args, args.n)
    n = args.n if args.n is not None else max((max(s) for s in subsets if s), default=0)
    fam = _level_family(subsets, n)
    result = colex.shadow(fam)
    _emit_family(out, args.format, result.sorted(), {"n": n, "level": result.level, "size": len(result)})


def cmd_shade(args, out):
    subsets = _read_subsets(args, args.n)
    result = colex.shade(_level_family(subsets, args.n))
    _emit_family(out, args.format, result.sorted(), {"n": args.n, "level": result.level, "size": len(result)})


def _profile_for(args) -> Profile:
    if len(args.profile) != args.n + 1:
        raise UsageError(f"profile has {len(args.profile)} entries but --n {args.n} needs {args.n + 1}")
    return Profile(args.n, tuple(args.profile))


def cmd_feasible(args, out):
    p = _profile_for(args)
    verdict = canon.is_cutset_profile(p, level=args.level, all_levels=args.validate_all_levels)
    vectors = canon.uv(p)
    _emit(out, args.format, "true" if verdict else "false", {
        "n": p.n, "profile": list(p.f), "feasible": verdict,
        "u": list(vectors.u), "v": list(vectors.v), "slack": list(canon.slack(p, vectors)),
    })


def cmd_canonical(args, out):
    p = _profile_for(args)
    c = canon.canonical(p, args.pivot)
    if args.emit_sets:
        fams = canon.emit_sets(c, budget=args.budget)
        members = [s for fam in fams for s in fam]
        _emit_family(out, args.format, members, {"n": p.n, "pivot": args.pivot})
        return
    segs = [{"level": s.level, "start": s.start, "end": s.end, "size": len(s),
             "kind": "up" if s.level <= args.pivot else "down"} for s in c.segments]
    lines = [f"u = {list(c.uv.u)}", f"v = {list(c.uv.v)}"]
    for d in segs:
        span = "empty" if d["size"] == 0 else f"ranks {d['start']}..{d['end']}"
        lines.append(f"level {d['level']:>3} {d['kind']:<4} {span} ({d['size']})")
    _emit(out, args.format, "\n".join(lines),
          {"n": p.n, "pivot": args.pivot, "u": list(c.uv.u), "v": list(c.uv.v), "segments": segs})


def cmd_g(args, out):
    n, m, l = args.n, args.m, args.l
    profiles.reduce_band(n, m, l)  # validates
    cache = _open_cache(args)
    value = cache.get(n, m, l) if cache is not None else None
    if value is None:
        value = profiles.g(n, m, l)
        if cache is not None:
            cache.put(n, m, l, value)
            cache.flush()
    rep = binom.cascade(value, m) if m >= 1 else None
    text = f"{value:,}" + (f" = {rep}" if rep else "")
    _emit(out, args.format, text, {"n": n, "m": m, "l": l, "g": value, "cascade": str(rep) if rep else None})


def cmd_table(args, out):
    n, m = args.n, args.m
    l_from = m if args.l_from is None else args.l_from
    l_to = n - m if args.l_to is None else args.l_to
    cache = _open_cache(args)
    known = {}
    if cache is not None:
        for l in range(l_from, l_to + 1):
            v = cache.get(n, m, l)
            if v is not None:
                known[l] = v
    table = profiles.g_table(n, m, l_from, l_to, jobs=args.jobs, known=known)
    if cache is not None:
        for row in table.rows:
            cache.put(n, m, row.l, row.g)
        cache.flush()
    fmt = args.format or "csv"
    if fmt == "csv":
        out.write(table_to_csv(table))
    elif fmt == "json":
        out.write(table_to_json(table) + "\n")
    else:
        out.write(table_to_text(table))


def cmd_bounds(args, out):
    lo, hi = profiles.theorem2_bounds(args.n, args.m, args.l)
    _emit(out, args.format, f"{lo:,} < g_{args.n}({args.m},{args.l}) <= {hi:,}",
          {"n": args.n, "m": args.m, "l": args.l, "lower_exclusive": lo, "upper_inclusive": hi})


def cmd_construct(args, out):
    n, m = args.n, args.m
    verified = None
    if args.kind == "two-level":
        fam = constructions.two_level(n, m)
    elif args.kind == "qrs":
        q, r, s = constructions.qrs(n, m)
        fam = q | r | s
    else:
        l = m + 2 if args.l is None else args.l
        if l == m + 1:
            base = constructions.two_level(n - 1, m)
        elif l == m + 2:
            q, r, s = constructions.qrs(n - 1, m)
            base = q | r | s
        else:
            raise ValueError(f"double supports l = m+1 (two-level) or l = m+2 (qrs), got l={l}")
        fam, verified = constructions.double_by_complements(base, n)
    extra = {"n": n, "kind": args.kind, "profile": list(constructions.profile_of(fam).f)}
    if verified is not None:
        extra["input_verified"] = verified
    if args.format != "json" and verified is False:
        print("warning: input cutset property was not verified", file=sys.stderr)
    _emit_family(out, args.format, _sorted_mixed(fam.members), extra)


def cmd_verify(args, out):
    subsets = _read_subsets(args, args.n)
    fam = constructions.MultiFamily(args.n, frozenset(subsets))
    verdict = constructions.is_cutset(fam)
    _emit(out, args.format, "true" if verdict else "false",
          {"n": args.n, "size": len(fam), "profile": list(constructions.profile_of(fam).f), "cutset": verdict})


def cmd_conjecture(args, out):
    profiles.reduce_band(args.n, args.m, args.l)  # validates
    value = profiles.conjecture_value(args.n, args.m, args.l)
    text = "no conjecture for this range" if value is None else f"conjectured: {value:,}"
    _emit(out, args.format, text,
          {"n": args.n, "m": args.m, "l": args.l, "conjectured": value})


def cmd_identity(args, out):
    left, right = profiles.vertical_identity_sides(args.n, args.m, args.d)
    ok = left == right
    _emit(out, args.format, f"{'true' if ok else 'false'} ({left} {'=' if ok else '!='} {right})",
          {"n": args.n, "m": args.m, "d": args.d, "left": left, "right": right, "holds": ok})


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default=None,
                        help="output format (default: csv for table, text otherwise)")
    common.add_argument("--budget", type=int, default=canon.DEFAULT_BUDGET,
                        help="largest level size to materialise")
    common.add_argument("--cache", default=None, help="g cache file (default: $CUTSET_CACHE or ~/.cache)")
    common.add_argument("--no-cache", action="store_true", help="neither read nor write the g cache")
    common.add_argument("--input", default=None, help="read the family from this file instead of stdin")

    parser = argparse.ArgumentParser(prog="cutset", description="Cutset profiles in the Boolean lattice.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("repr", cmd_repr, "m-binomial representation of K")
    p.add_argument("K", type=int)
    p.add_argument("m", type=int)

    p = add("boundary", cmd_boundary, "boundary operator applied to K")
    p.add_argument("K", type=int)
    p.add_argument("m", type=int)

    p = add("rank", cmd_rank, "colex rank of a subset")
    p.add_argument("set", type=_subset_arg)

    p = add("unrank", cmd_unrank, "subset of a given colex rank")
    p.add_argument("K", type=int)
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)

    p = add("shadow", cmd_shadow, "shadow of a family read from stdin")
    p.add_argument("--n", type=int, default=None)

    p = add("shade", cmd_shade, "shade of a family read from stdin")
    p.add_argument("--n", type=int, required=True)

    p = add("feasible", cmd_feasible, "is the profile the profile of a cutset")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--profile", type=_profile_arg, required=True)
    p.add_argument("--level", type=int, default=None)
    p.add_argument("--validate-all-levels", action="store_true")

    p = add("canonical", cmd_canonical, "canonical collection of a profile")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--profile", type=_profile_arg, required=True)
    p.add_argument("--pivot", type=int, required=True)
    p.add_argument("--emit-sets", action="store_true")

    p = add("g", cmd_g, "compute g_n(m,l)")
    for name in ("n", "m", "l"):
        p.add_argument(name, type=int)

    p = add("table", cmd_table, "g_n(m,l) for a range of l")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--from", dest="l_from", type=int, default=None)
    p.add_argument("--to", dest="l_to", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)

    p = add("bounds", cmd_bounds, "lower and upper bounds on g_n(m,l) for n >> m")
    for name in ("n", "m", "l"):
        p.add_argument(name, type=int)

    p = add("construct", cmd_construct, "explicit cutset constructions")
    p.add_argument("kind", choices=["two-level", "qrs", "double"])
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("l", type=int, nargs="?", default=None)

    p = add("verify", cmd_verify, "chain DP: is the family on stdin a cutset")
    p.add_argument("--n", type=int, required=True)

    p = add("conjecture", cmd_conjecture, "conjectured value of g_n(m,l)")
    for name in ("n", "m", "l"):
        p.add_argument(name, type=int)

    p = add("identity", cmd_identity, "check the vertical binomial identity")
    for name in ("n", "m", "d"):
        p.add_argument(name, type=int)

    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.command != "table" and args.format is None:
        args.format = "text"
    try:
        args.func(args, out)
    except UsageError as exc:
        print(f"cutset: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LevelInconsistency as exc:
        print(f"cutset: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, BudgetExceeded, CacheError, OSError) as exc:
        print(f"cutset: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
