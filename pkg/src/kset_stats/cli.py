"""Command line front end.

Subcommands: ``table``, ``verify``, ``construct``, ``check``.
Exit status: 0 success/match, 1 mismatch, 2 usage or domain error,
3 inconclusive (search budget ran out).
"""

from __future__ import annotations

import argparse
import random
import sys

from . import constructions, formulas
from .constructions import WitnessError
from .core import (
    GroupKind,
    KSetError,
    SetFamily,
    SetSequence,
    first_non_strict_step,
    is_base,
    partition_of,
    redundant_members,
    stab_order,
    StabDescriptor,
)
from .familyfile import FamilyFile
from .oracle import MAX_ENUM_N, stab_order_by_enumeration
from .search import DEFAULT_BUDGET, STATS, SearchConfig, compute

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3

# largest n searched by default, per statistic
GUARDS = {"I": 12, "B": 9, "H": 9, "b": 9}

TSV_COLUMNS = ("n", "k", "group", "stat", "formula", "search", "status")

CLAIMS = ("base", "minimal-base", "independent", "irredundant", "irredundant-base")


class UsageError(Exception):
    pass


def _config(args, n, k, stat) -> SearchConfig:
    return SearchConfig.make(
        n, k, args.group, stat,
        node_budget=args.budget,
        fix_first=not args.no_fix_first,
        deterministic=args.threads == 1,
        threads=args.threads,
    )


def _guard(args, stat, n):
    limit = args.guard if args.guard is not None else GUARDS[stat]
    if n > limit:
        raise UsageError(
            f"n={n} exceeds the resource guard n <= {limit} for stat {stat}; "
            "raise it with --guard if you really want this"
        )


def compare(stat: str, kind: GroupKind, n: int, k: int, report):
    """Return (formula, status) for a search report (or None for no search)."""
    expected = formulas.formula_value(stat, kind is GroupKind.ALT, n, k)
    if report is None:
        return expected, ("-" if expected.known else "unknown")
    if not report.exhausted:
        return expected, "INCONCLUSIVE"
    if expected.known:
        return expected, "MATCH" if report.value == expected.value else "MISMATCH"
    return expected, "RESOLVED" if report.value in expected else "MISMATCH"


def cmd_table(args) -> int:
    kind = GroupKind.parse(args.group)
    if not args.formula_only:
        _guard(args, args.stat, args.n_max)
    out = sys.stdout
    out.write("\t".join(TSV_COLUMNS) + "\n")
    worst = EXIT_OK
    for n in range(max(2, args.n_min), args.n_max + 1):
        ks = range(1, n // 2 + 1) if args.k == "all" else [int(args.k)]
        for k in ks:
            if not 1 <= k <= n // 2:
                continue
            report = None if args.formula_only else compute(_config(args, n, k, args.stat))
            expected, status = compare(args.stat, kind, n, k, report)
            search = "-" if report is None else str(report.value)
            out.write("\t".join(map(str, (n, k, kind.value, args.stat, expected, search, status))) + "\n")
            out.flush()
            if status == "MISMATCH":
                worst = EXIT_MISMATCH
            elif status == "INCONCLUSIVE" and worst == EXIT_OK:
                worst = EXIT_INCONCLUSIVE
    return worst


def _oracle_line(payload, kind: GroupKind, seed: int, samples: int = 50) -> str:
    """Cross-check stabilizer orders of the payload and random subfamilies."""
    n = payload.n
    if n > MAX_ENUM_N:
        return f"oracle: skipped (n > {MAX_ENUM_N})"
    rng = random.Random(seed)
    members = list(payload.members)
    fams = [SetFamily(n, tuple(set(members)))]
    for _ in range(samples):
        size = rng.randint(0, len(members))
        fams.append(SetFamily(n, tuple(set(rng.sample(members, size)))))
    bad = 0
    for fam in fams:
        calc = stab_order(StabDescriptor(kind, partition_of(fam)))
        if stab_order_by_enumeration(fam, kind) != calc:
            bad += 1
    verdict = "agree" if bad == 0 else f"DISAGREE on {bad} families"
    return f"oracle: {verdict} (seed={seed}, families={len(fams)})"


def cmd_verify(args) -> int:
    kind = GroupKind.parse(args.group)
    _guard(args, args.stat, args.n)
    report = compute(_config(args, args.n, args.k, args.stat))
    expected, status = compare(args.stat, kind, args.n, args.k, report)
    print(f"instance: {args.stat}({kind.value}_{args.n}, k={args.k})")
    print(f"formula: {expected}" + ("" if expected.known else " (not settled)"))
    label = "exact" if report.exhausted else f"{report.bound} bound, budget exhausted"
    print(f"search: {report.value} ({label})")
    print(f"witness: {report.witness.as_lists()}")
    print(f"nodes: {report.nodes_explored}")
    if args.oracle:
        print(_oracle_line(report.witness, kind, args.seed))
    if args.witness_out:
        FamilyFile.from_payload(report.witness, kind, args.k).dump(args.witness_out)
        print(f"wrote: {args.witness_out}")
    print(f"status: {status}")
    return {"MATCH": EXIT_OK, "RESOLVED": EXIT_OK, "MISMATCH": EXIT_MISMATCH}.get(status, EXIT_INCONCLUSIVE)


def cmd_construct(args) -> int:
    w = constructions.build(args.kind, args.n, args.k)
    ff = FamilyFile.from_payload(w.payload, w.kind, w.params.k)
    if args.out:
        ff.dump(args.out)
        print(f"wrote: {args.out}")
    else:
        sys.stdout.write(ff.dumps())
    print(f"{w.name}: {w.size} sets, claim {w.claim_label} for {w.kind.value}_{w.params.n}: "
          + ("PASS" if w.verify() else "FAIL"))
    return EXIT_OK


def check_file(ff: FamilyFile, claim: str) -> tuple[bool, str]:
    """Run ``claim`` against the file's payload; returns (passed, detail)."""
    kind = ff.group
    payload = ff.payload
    if claim in ("irredundant", "irredundant-base"):
        if not ff.ordered:
            raise UsageError(f"claim {claim} needs an ordered file (\"ordered\": true)")
        step = first_non_strict_step(payload, kind)
        if step is not None:
            return False, f"step {step} ({payload.members[step - 1]!r}) does not shrink the stabilizer"
        if claim == "irredundant-base" and not is_base(SetFamily(ff.n, tuple(set(payload.members))), kind):
            return False, f"final stabilizer is not trivial; partition {partition_of(payload)!r}"
        return True, f"length {len(payload)}"
    if isinstance(payload, SetSequence):
        if len(set(payload.members)) != len(payload):
            return False, "sequence repeats a set"
        payload = SetFamily(ff.n, payload.members)
    if claim in ("base", "minimal-base") and not is_base(payload, kind):
        return False, f"not a base; partition {partition_of(payload)!r}"
    if claim in ("independent", "minimal-base"):
        redundant = redundant_members(payload, kind)
        if redundant:
            return False, f"redundant member {redundant[-1]!r}"
    return True, f"size {len(payload)}"


def cmd_check(args) -> int:
    ff = FamilyFile.load(args.file)
    ok, detail = check_file(ff, args.claim)
    if args.oracle:
        print(_oracle_line(ff.payload, ff.group, args.seed))
    print(f"{args.claim}: {'PASS' if ok else 'FAIL'} ({detail})")
    return EXIT_OK if ok else EXIT_MISMATCH


def _add_search_flags(p):
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node budget per search")
    p.add_argument("--threads", type=int, default=1, help="worker processes (1 keeps runs deterministic)")
    p.add_argument("--no-fix-first", action="store_true", help="disable symmetry reduction")
    p.add_argument("--guard", type=int, default=None, help="override the per-stat n guard")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kset-stats", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="TSV of formula vs search values")
    p.add_argument("--stat", choices=STATS, required=True)
    p.add_argument("--group", choices=("S", "A"), required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--k", default="all", help="'all' or a single k")
    p.add_argument("--formula-only", action="store_true", help="skip the search column")
    _add_search_flags(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="search one instance and compare to the formula")
    p.add_argument("--stat", choices=STATS, required=True)
    p.add_argument("--group", choices=("S", "A"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check the witness by permutation enumeration")
    p.add_argument("--seed", type=int, default=0, help="seed for oracle sampling")
    p.add_argument("--witness-out", help="write the witness as a family file")
    _add_search_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="emit one of the explicit constructions")
    p.add_argument("--kind", choices=sorted(constructions.BUILDERS), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="check a claim about a family file")
    p.add_argument("file")
    p.add_argument("--claim", choices=CLAIMS, required=True)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, KSetError, WitnessError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
