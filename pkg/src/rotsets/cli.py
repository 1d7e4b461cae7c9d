"""``rotsets`` command line: orbits, sets, verify, from-seq, graph, count, oracle-check.

Exit status: 0 success, 1 usage or parse error, 2 size bound exceeded,
3 oracle (or counting formula) mismatch.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from typing import List, Optional

from . import oracle
from .arith import RotationNumber
from .enumeration import (
    RepSequence,
    build_graph,
    count_sets_closed,
    count_sets_recursive,
    enumerate_rep_sequences,
    enumerate_sets,
    least_tuple_to_rep,
    orbit_from_rep,
)
from .errors import BoundExceeded, RotsetError
from .rotation import RotationalOrbit, RotationalSet, detect_rotation, verify_set

SCHEMA_VERSION = "1"
MAX_BITS = 4096

EXIT_OK, EXIT_USAGE, EXIT_BOUND, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def frac_json(t: Fraction) -> dict:
    return {"num": str(t.numerator), "den": str(t.denominator)}


def parse_fraction(text: str) -> Fraction:
    try:
        num, den = text.strip().split("/")
        t = Fraction(int(num), int(den))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse angle {text!r}; expected a/b") from None
    if not 0 <= t < 1:
        raise UsageError(f"angle {text} is outside [0, 1)")
    return t


def orbit_record(orbit: RotationalOrbit) -> dict:
    rot = orbit.rotation
    den = orbit.degree**rot.q - 1
    return {
        "rep_sequence": list(least_tuple_to_rep(orbit.least_tuple, rot).terms),
        "least_tuple": list(orbit.least_tuple.digits),
        "angles": [frac_json(t) for t in orbit.angles],
        "common": {"den": str(den), "nums": [str(t * den) for t in orbit.angles]},
    }


def set_record(s: RotationalSet) -> dict:
    return {
        "orbit_count": s.orbit_count,
        "orbits": [orbit_record(o) for o in s.orbits],
        "raw_shift": {"p": s.raw_shift[0], "size": s.raw_shift[1]},
        "reduced": {"p": s.reduced_rotation.p, "q": s.reduced_rotation.q},
    }


def _fmt_angles(angles) -> str:
    return " ".join(f"{t.numerator}/{t.denominator}" for t in angles)


def _digits(xs) -> str:
    return ",".join(map(str, xs))


def _rotation(args) -> RotationNumber:
    d, p, q = args.d, args.p, args.q
    if d is None or p is None or q is None:
        raise UsageError("--d, --p and --q are required")
    if d < 2 or q < 2 or not 1 <= p < q:
        raise UsageError(f"need d >= 2, q >= 2 and 1 <= p < q; got d={d}, p={p}, q={q}")
    g = math.gcd(p, q)
    if g != 1:
        raise UsageError(f"p/q must be in lowest terms; use --p {p // g} --q {q // g}")
    _guard(args, d, q)
    return RotationNumber.of(p, q)


def _guard(args, d: int, q: int) -> None:
    if not args.force and q * math.log2(d) > MAX_BITS:
        raise BoundExceeded(f"{d}^{q} needs more than {MAX_BITS} bits; pass --force to proceed")


def _csv(rows: List[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _document(params: dict, payload) -> str:
    doc = {"schema_version": SCHEMA_VERSION, "parameters": params, "payload": payload}
    return json.dumps(doc, indent=2) + "\n"


def _orbit_rows(orbits) -> List[list]:
    rows = [["rep_sequence", "least_tuple", "angles"]]
    for o in orbits:
        r = orbit_record(o)
        rows.append([_digits(r["rep_sequence"]), _digits(r["least_tuple"]), _fmt_angles(o.angles)])
    return rows


def _orbit_text(o: RotationalOrbit) -> str:
    r = orbit_record(o)
    den = r["common"]["den"]
    return (
        f"rep {_digits(r['rep_sequence'])}  tuple ({_digits(r['least_tuple'])})  "
        f"{{{','.join(r['common']['nums'])}}}/{den}"
    )


def cmd_orbits(args) -> str:
    rot = _rotation(args)
    orbits = [orbit_from_rep(r, rot) for r in enumerate_rep_sequences(args.d, rot.q)]
    params = {"d": args.d, "p": rot.p, "q": rot.q}
    if args.format == "json":
        return _document(params, {"count": len(orbits), "orbits": [orbit_record(o) for o in orbits]})
    if args.format == "csv":
        return _csv(_orbit_rows(orbits))
    lines = [f"{len(orbits)} sigma_{args.d}-rotational orbits with rotation number {rot}"]
    lines += [_orbit_text(o) for o in orbits]
    return "\n".join(lines) + "\n"


def cmd_sets(args) -> str:
    rot = _rotation(args)
    top = max(args.d - 1, 1)
    if args.k is not None and not 1 <= args.k <= top:
        raise UsageError(f"--k must lie in [1, {top}]")
    ks = [args.k] if args.k is not None else list(range(1, top + 1))
    groups = {k: list(enumerate_sets(args.d, rot, k)) for k in ks}
    recursive = count_sets_recursive(args.d, rot.q)
    closed = count_sets_closed(args.d, rot.q)
    params = {"d": args.d, "p": rot.p, "q": rot.q, "k": args.k}
    if args.format == "json":
        payload = {
            "by_k": [
                {"k": k, "count": len(sets), "sets": [set_record(s) for s in sets]}
                for k, sets in groups.items()
            ],
            "counts": {"recursive": recursive, "closed": closed, "total": sum(recursive)},
        }
        return _document(params, payload)
    if args.format == "csv":
        rows = [["set_index", "k", "orbit_index", "rep_sequence", "angles"]]
        index = 0
        for k, sets in groups.items():
            for s in sets:
                for j, o in enumerate(s.orbits):
                    seq = least_tuple_to_rep(o.least_tuple, rot).terms
                    rows.append([index, k, j, _digits(seq), _fmt_angles(o.angles)])
                index += 1
        return _csv(rows)
    lines = []
    for k, sets in groups.items():
        lines.append(f"k={k}: {len(sets)} sets")
        for s in sets:
            den = args.d**rot.q - 1
            lines.append("  {" + ",".join(str(t * den) for t in s.angles) + f"}}/{den}")
    lines.append("N_k recursive: " + " ".join(map(str, recursive)))
    lines.append("N_k closed:    " + " ".join(map(str, closed)))
    lines.append(f"total: {sum(recursive)}")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> str:
    if args.d is None or args.d < 2:
        raise UsageError("--d >= 2 is required")
    texts = [piece for chunk in args.angles for piece in chunk.split(",") if piece.strip()]
    if not texts:
        raise UsageError("no angles given")
    angles = sorted({parse_fraction(t) for t in texts})
    found = detect_rotation(args.d, angles)
    payload = {"rotational": found is not None, "points": [frac_json(t) for t in angles]}
    result = None
    if found is not None:
        result = verify_set(args.d, angles)
        payload.update(set_record(result))
    params = {"d": args.d}
    if args.format == "json":
        return _document(params, payload)
    if args.format == "csv":
        rows = [["rotational", "raw_p", "size", "reduced_p", "reduced_q", "rep_sequence", "angles"]]
        if result is None:
            rows.append(["false", "", "", "", "", "", _fmt_angles(angles)])
        for o in result.orbits if result else ():
            rot = o.rotation
            seq = least_tuple_to_rep(o.least_tuple, rot).terms
            rows.append(["true", *result.raw_shift, rot.p, rot.q, _digits(seq), _fmt_angles(o.angles)])
        return _csv(rows)
    if result is None:
        return f"not sigma_{args.d}-rotational\n"
    p_raw, size = result.raw_shift
    lines = [
        f"sigma_{args.d}-rotational, rotation number {p_raw}/{size} = {result.reduced_rotation}",
        f"{result.orbit_count} orbit(s):",
    ]
    lines += ["  " + _orbit_text(o) for o in result.orbits]
    return "\n".join(lines) + "\n"


def cmd_from_seq(args) -> str:
    rot = _rotation(args)
    if not args.seq:
        raise UsageError("--seq is required")
    try:
        terms = [int(x) for x in args.seq.replace(" ", "").split(",")]
    except ValueError:
        raise UsageError(f"cannot parse sequence {args.seq!r}") from None
    if len(terms) != rot.q:
        raise UsageError(f"sequence has {len(terms)} terms, expected {rot.q}")
    orbit = orbit_from_rep(RepSequence(args.d, tuple(terms)), rot)
    params = {"d": args.d, "p": rot.p, "q": rot.q, "seq": terms}
    if args.format == "json":
        return _document(params, {"orbit": orbit_record(orbit)})
    if args.format == "csv":
        return _csv(_orbit_rows([orbit]))
    return _orbit_text(orbit) + "\n"


def cmd_graph(args) -> str:
    rot = _rotation(args)
    graph = build_graph(args.d, rot)
    labels = [v.label() for v in graph.vertices]
    edges = [(labels[u], labels[v]) for u, v in graph.sorted_edges()]
    if args.format == "dot":
        lines = ["graph rotset {"]
        lines += [f'  "{lab}";' for lab in labels]
        lines += [f'  "{a}" -- "{b}";' for a, b in edges]
        lines.append("}")
        return "\n".join(lines) + "\n"
    cliques = {str(k): len(c) for k, c in sorted(graph.cliques_by_size.items())}
    if args.format == "json":
        payload = {"nodes": labels, "edges": [list(e) for e in edges], "cliques_by_size": cliques}
        return _document({"d": args.d, "p": rot.p, "q": rot.q}, payload)
    if args.format == "csv":
        return _csv([["source", "target"], *map(list, edges)])
    lines = [f"{len(labels)} nodes, {len(edges)} edges"]
    lines += [f"{k}-cliques: {n}" for k, n in cliques.items()]
    lines += [f"{a} -- {b}" for a, b in edges]
    return "\n".join(lines) + "\n"


class _Mismatch(Exception):
    def __init__(self, text):
        self.text = text


def cmd_count(args) -> str:
    d, q = args.d, args.q
    if d is None or q is None or d < 2 or q < 2:
        raise UsageError("--d >= 2 and --q >= 2 are required")
    method = args.method
    recursive = count_sets_recursive(d, q) if method in ("recursive", "both") else None
    closed = count_sets_closed(d, q) if method in ("closed", "both") else None
    counts = recursive if recursive is not None else closed
    params = {"d": d, "q": q, "method": method}
    payload = {"recursive": recursive, "closed": closed, "total": sum(counts)}
    if args.format == "json":
        out = _document(params, payload)
    elif args.format == "csv":
        rows = [["k", "recursive", "closed"]]
        for k in range(len(counts)):
            rows.append([
                k + 1,
                "" if recursive is None else recursive[k],
                "" if closed is None else closed[k],
            ])
        out = _csv(rows)
    else:
        out = "".join(f"N_{k + 1} = {n}\n" for k, n in enumerate(counts)) + f"total = {sum(counts)}\n"
    if method == "both" and recursive != closed:
        raise _Mismatch(out)
    return out


def cmd_oracle_check(args) -> str:
    rot = _rotation(args)
    report = oracle.cross_check(args.d, rot, bound=args.bound, subset_bound=args.subset_bound)
    params = {"d": args.d, "p": rot.p, "q": rot.q, "bound": args.bound}
    if args.format == "json":
        out = _document(params, {
            "orbits_found": report.orbits_found,
            "sets_found_by_k": report.sets_found_by_k,
            "mismatches": report.mismatches,
        })
    elif args.format == "csv":
        rows = [["k", "sets_found"]] + [[k + 1, n] for k, n in enumerate(report.sets_found_by_k)]
        out = _csv(rows)
    else:
        out = (
            f"orbits found: {report.orbits_found}\n"
            f"sets by k: {' '.join(map(str, report.sets_found_by_k))}\n"
            + "".join(f"MISMATCH: {m}\n" for m in report.mismatches)
            + ("ok\n" if report.ok else "")
        )
    if not report.ok:
        raise _Mismatch(out)
    return out


COMMANDS = {
    "orbits": (cmd_orbits, ("json", "csv", "text")),
    "sets": (cmd_sets, ("json", "csv", "text")),
    "verify": (cmd_verify, ("json", "csv", "text")),
    "from-seq": (cmd_from_seq, ("json", "csv", "text")),
    "graph": (cmd_graph, ("json", "csv", "text", "dot")),
    "count": (cmd_count, ("json", "csv", "text")),
    "oracle-check": (cmd_oracle_check, ("json", "csv", "text")),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rotsets", description="Rotational orbits and sets of t -> d*t mod 1.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, formats) in COMMANDS.items():
        sp = sub.add_parser(name)
        sp.add_argument("--d", type=int, required=True, help="degree of the map")
        if name not in ("verify", "count"):
            sp.add_argument("--p", type=int, required=True)
        if name != "verify":
            sp.add_argument("--q", type=int, required=True)
        sp.add_argument("--format", choices=formats, default="json")
        sp.add_argument("--force", action="store_true", help="lift the size guard (may be slow)")
        if name == "sets":
            sp.add_argument("--k", type=int, help="only sets with exactly k orbits")
        if name == "from-seq":
            sp.add_argument("--seq", required=True, help="comma-separated sequence, e.g. 0,1,1,1,2")
        if name == "verify":
            sp.add_argument("angles", nargs="+", help="fractions a/b, space or comma separated")
        if name == "count":
            sp.add_argument("--method", choices=("recursive", "closed", "both"), default="both")
        if name == "oracle-check":
            sp.add_argument("--bound", type=int, default=oracle.DEFAULT_BOUND,
                            help="largest d^q - 1 scanned")
            sp.add_argument("--subset-bound", type=int, default=oracle.DEFAULT_SUBSET_BOUND)
    return parser


def main(argv: Optional[List[str]] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command][0]
    if args.command == "oracle-check" and args.force:
        args.bound = max(args.bound, args.d**args.q - 1)
    try:
        stdout.write(handler(args))
    except BoundExceeded as exc:
        print(f"rotsets: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except _Mismatch as exc:
        stdout.write(exc.text)
        return EXIT_MISMATCH
    except (UsageError, RotsetError) as exc:
        print(f"rotsets: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
