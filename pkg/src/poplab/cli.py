"""Command line interface.

Subcommands:
    expand       print the classical patterns a POP stands for
    count        count the permutations of one length avoiding a POP
    verify       check catalogue entries against brute force
    scan         enumerate all POPs of one length, count, and match
    conjectures  recheck the conjectured identifications

Exit codes: 0 success, 1 a verification or conjecture mismatch,
2 usage error (including a count past the ceiling), 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .counting import (
    CeilingExceeded,
    DEFAULT_CEILING,
    count_avoiders,
    count_avoiders_prefix,
)
from .oeis import (
    DEFAULT_MIN_OVERLAP,
    OeisDb,
    OeisError,
    match_sequence,
    resolve_db,
)
from .posets import (
    PopError,
    canonical_class,
    enumerate_pops,
    linear_extensions,
    parse_pop,
    symmetry_orbit,
)
from .theorems import all_theorem_ids, check_all_conjectures, verify_all, verify_theorem


def _dump_json(obj, out: str | None) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _pop_text_arg(args: argparse.Namespace) -> str:
    if args.pop is not None and args.pop_positional is not None:
        raise ValueError("give the POP either positionally or with --pop, not both")
    text = args.pop if args.pop is not None else args.pop_positional
    if text is None:
        raise ValueError("a POP is required, e.g. 'k=4; 1>2, 1>3'")
    return text


def cmd_expand(args: argparse.Namespace) -> int:
    pop = parse_pop(_pop_text_arg(args))
    patterns = [str(p) for p in linear_extensions(pop)]
    if args.json:
        _dump_json(
            {"schema": 1, "pop": pop.to_text(), "k": pop.k, "patterns": patterns},
            args.out,
        )
    else:
        for pat in patterns:
            print(pat)
        label = "pattern" if len(patterns) == 1 else "patterns"
        print(f"{len(patterns)} {label}")
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    pop = parse_pop(_pop_text_arg(args))
    if (args.n is None) == (args.nmax is None):
        raise ValueError("give exactly one of --n and --nmax")
    if args.n is not None:
        count = count_avoiders(pop, args.n, ceiling=args.ceiling, jobs=args.jobs)
        if args.json:
            _dump_json(
                {"schema": 1, "pop": pop.to_text(), "n": args.n, "count": count},
                args.out,
            )
        else:
            print(count)
        return 0
    seq = count_avoiders_prefix(pop, args.nmax, ceiling=args.ceiling)
    if args.json:
        _dump_json(
            {
                "schema": 1,
                "pop": pop.to_text(),
                "n_max": args.nmax,
                "counts": list(seq.counts),
            },
            args.out,
        )
    else:
        print(",".join(str(c) for c in seq.counts))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.theorem is not None and args.theorem_positional is not None:
        raise ValueError("give the entry id either positionally or with --theorem")
    theorem = args.theorem if args.theorem is not None else args.theorem_positional
    if theorem is None:
        raise ValueError("an entry id (or 'all') is required")
    if theorem == "all":
        reports = verify_all(args.nmax)
    else:
        reports = [verify_theorem(theorem, args.nmax)]
    payload = {"schema": 1, "reports": [r.to_json() for r in reports]}
    if args.json or args.out:
        _dump_json(payload, args.out)
    if not args.json:
        for r in reports:
            print(r.to_text())
    failed = [r for r in reports if not r.passed]
    if not args.json:
        print(f"{len(reports) - len(failed)}/{len(reports)} entries verified")
    return 1 if failed else 0


def cmd_conjectures(args: argparse.Namespace) -> int:
    reports = check_all_conjectures(args.nmax)
    if args.json or args.out:
        payload = {"schema": 1, "conjectures": [r.to_json() for r in reports]}
        _dump_json(payload, args.out)
    if not args.json:
        for r in reports:
            print(r.to_text())
    return 0 if all(r.supported for r in reports) else 1


def _orbit_counts(pop_text: str, n_max: int) -> list[int]:
    return list(count_avoiders_prefix(parse_pop(pop_text), n_max, ceiling=n_max).counts)


def scan_pops(
    length: int, n_max: int, *, db: OeisDb | None = None, jobs: int = 1
) -> dict:
    """Count every POP of the given length, one orbit representative at
    a time, and match the results against the sequence database.

    Grouping a symmetry orbit under one count sequence is exact; POPs
    in one orbit trade places under reversal and complementation of the
    permutations.  Grouping different orbits with equal counts is only
    empirical at the computed range.
    """
    pops = enumerate_pops(length)
    orbits: dict[int, list] = {}
    for pop in pops:
        orbits.setdefault(canonical_class(pop).code, []).append(pop)
    reps: list[tuple[int, str, list[str]]] = []
    for code in sorted(orbits):
        members = orbits[code]
        rep = min(members, key=lambda p: p.encode())
        reps.append((code, rep.to_text(), sorted(p.to_text() for p in members)))
        orbit = symmetry_orbit(rep)
        if {p.to_text() for p in orbit} != {p.to_text() for p in members}:
            raise AssertionError(f"orbit mismatch for {rep.to_text()}")

    if jobs <= 1:
        all_counts = [_orbit_counts(text, n_max) for _, text, _ in reps]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            all_counts = list(
                pool.map(_orbit_counts, [text for _, text, _ in reps], [n_max] * len(reps))
            )

    distinct = sorted({tuple(c) for c in all_counts})
    class_index = {counts: i + 1 for i, counts in enumerate(distinct)}
    entries = []
    for (code, text, members), counts in zip(reps, all_counts):
        terms = counts[1:]
        matches = (
            match_sequence(db, terms)
            if db is not None and len(terms) >= DEFAULT_MIN_OVERLAP
            else []
        )
        entries.append(
            {
                "pop": text,
                "class_key": code,
                "orbit_size": len(members),
                "members": members,
                "counts": counts,
                "wilf_class": class_index[tuple(counts)],
                "oeis_matches": [
                    {
                        "a_number": m.a_number,
                        "shift": m.shift,
                        "dropped": m.dropped,
                        "overlap": m.overlap,
                    }
                    for m in matches
                ],
            }
        )
    entries.sort(key=lambda e: (e["wilf_class"], e["class_key"]))
    seen_classes: set[int] = set()
    for entry in entries:
        entry["representative"] = entry["wilf_class"] not in seen_classes
        seen_classes.add(entry["wilf_class"])
    return {
        "schema": 1,
        "length": length,
        "n_max": n_max,
        "pop_count": len(pops),
        "orbit_count": len(reps),
        "wilf_class_count": len(distinct),
        "orbit_grouping": "proved for every length",
        "wilf_grouping": f"empirical at n <= {n_max}",
        "orbits": entries,
    }


def cmd_scan(args: argparse.Namespace) -> int:
    db = resolve_db(args.oeis)
    result = scan_pops(args.length, args.nmax, db=db, jobs=args.jobs)
    if args.json or args.out:
        _dump_json(result, args.out)
    if not args.json:
        print(
            f"{result['pop_count']} POPs of length {result['length']}: "
            f"{result['orbit_count']} symmetry orbits (exact), "
            f"{result['wilf_class_count']} distinct count sequences "
            f"at n <= {result['n_max']} (empirical)"
        )
        for entry in result["orbits"]:
            marker = "*" if entry["representative"] else " "
            ids = ",".join(m["a_number"] for m in entry["oeis_matches"]) or "-"
            terms = ",".join(str(c) for c in entry["counts"][1:])
            print(
                f"{marker} class {entry['wilf_class']:3d}  "
                f"{entry['pop']:<40s} [{terms}] {ids}"
            )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poplab",
        description="Exact enumeration of permutations avoiding partially ordered patterns.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="print the patterns a POP stands for")
    p.add_argument("pop_positional", nargs="?", metavar="POP", help="POP text")
    p.add_argument("--pop", help="POP text, e.g. 'k=4; 1>2, 1>3'")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="write JSON to this path")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("count", help="count the avoiders of a POP")
    p.add_argument("pop_positional", nargs="?", metavar="POP", help="POP text")
    p.add_argument("--pop", help="POP text, e.g. 'k=4; 1>2, 1>3'")
    p.add_argument("--n", type=int, help="count one length only")
    p.add_argument("--nmax", type=int, help="print counts for n = 0..nmax")
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="write JSON to this path")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="check catalogue entries against brute force")
    p.add_argument(
        "theorem_positional", nargs="?", metavar="ID", help="an entry id or 'all'"
    )
    p.add_argument("--theorem", help="an entry id or 'all'")
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="write JSON to this path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="enumerate, count, and match all POPs of one length")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--oeis", help="stripped file to match against")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="write JSON to this path")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("conjectures", help="recheck the conjectured identifications")
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="write JSON to this path")
    p.set_defaults(func=cmd_conjectures)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OeisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (CeilingExceeded, PopError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
