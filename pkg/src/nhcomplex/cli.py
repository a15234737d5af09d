"""Command line entry point: ``nhcomplex <command> ...``.

Exit codes: 0 success, 1 domain error or failed verification, 2 parse/usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .census import CensusEntry, census_balls, census_spheres
from .classify import Classification, classify, verify_decomposition
from .core import (
    ComplexError,
    GroundViolation,
    SimplicialComplex,
    deletion,
    elementary_starring,
    link,
    nerve,
    star,
)
from .dual import DualTrace, alexander_dual, dual_rel_simplex, iterate_duals
from .formats import ParseError, parse_document, serialize, to_json
from .homology import check_alexander_duality, reduced_homology


class UsageError(Exception):
    pass


def _split(arg: str | None) -> list[str]:
    if not arg:
        return []
    return [t for t in arg.replace(",", " ").split() if t]


def _load(path: str) -> SimplicialComplex:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_document(text)[0]
    except (ParseError, GroundViolation) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _facets_text(K: SimplicialComplex) -> str:
    if K.void:
        return "void"
    return " ".join("{" + ",".join(map(str, f)) + "}" for f in K.facet_sets())


def _trace_json(trace: DualTrace) -> dict:
    return {
        "steps": [to_json(s) for s in trace.steps],
        "terminal": trace.terminal.value,
        "simplex_dim": trace.simplex_dim,
        "cycle_entry": trace.cycle_entry,
        "cycle_period": trace.cycle_period,
        "steps_to_terminal": trace.steps_to_terminal,
    }


def _trace_lines(trace: DualTrace) -> list[str]:
    lines = [f"step {i}: {_facets_text(s)}" for i, s in enumerate(trace.steps)]
    tail = f"terminal: {trace.terminal.value}"
    if trace.simplex_dim is not None:
        tail += f" d={trace.simplex_dim}"
    if trace.cycle_entry is not None:
        tail += f" entry={trace.cycle_entry} period={trace.cycle_period}"
    return lines + [tail]


def _emit_complex(out, K: SimplicialComplex, as_json: bool) -> None:
    if as_json:
        out.write(json.dumps(to_json(K), sort_keys=True) + "\n")
    else:
        out.write(serialize(K))


def cmd_classify(args, out) -> int:
    c: Classification = classify(_load(args.file), args.max_steps)
    if args.json:
        doc = {
            "verdict": c.verdict.value,
            "dim": c.dim,
            "homotopy_dim": c.homotopy_dim,
            "steps_to_terminal": c.steps_to_terminal,
            "cycle_entry": c.cycle_entry,
            "cycle_period": c.cycle_period,
        }
        if args.trace:
            doc["trace"] = _trace_json(c.trace)
        out.write(json.dumps(doc, sort_keys=True) + "\n")
        return 0
    out.write(c.describe() + "\n")
    if args.trace:
        out.write("\n".join(_trace_lines(c.trace)) + "\n")
    return 0


def cmd_iterate(args, out) -> int:
    trace = iterate_duals(_load(args.file), args.max_steps)
    if args.json:
        out.write(json.dumps(_trace_json(trace), sort_keys=True) + "\n")
    else:
        out.write("\n".join(_trace_lines(trace)) + "\n")
    return 0


def cmd_dual(args, out) -> int:
    K = _load(args.file)
    if args.tau is not None and args.ground is not None:
        raise UsageError("--tau and --ground are mutually exclusive")
    if args.tau is not None:
        D = dual_rel_simplex(K, _split(args.tau))
    elif args.ground is not None:
        D = alexander_dual(K, _split(args.ground))
    else:
        D = alexander_dual(K)
    _emit_complex(out, D, args.json)
    return 0


def cmd_homology(args, out) -> int:
    h = reduced_homology(_load(args.file), args.coeff)
    if args.json:
        doc = {
            "coeff": h.coeff,
            "betti": {str(d): b for d, b in h.betti.items()},
            "torsion": {str(d): t for d, t in h.torsion.items() if t},
        }
        out.write(json.dumps(doc, sort_keys=True) + "\n")
        return 0
    out.write(f"coeff: {h.coeff}\n")
    out.write("betti: " + " ".join(f"{d}:{b}" for d, b in h.betti.items()) + "\n")
    tors = {d: t for d, t in h.torsion.items() if t}
    if tors:
        out.write("torsion: " + " ".join(f"{d}:{','.join(map(str, t))}" for d, t in tors.items()) + "\n")
    return 0


def _entry_name(e: CensusEntry, i: int) -> str:
    if e.kind == "sphere":
        return f"sphere-d{e.d}-k{e.k}-{i}"
    return f"ball-d{e.d}-{i}"


def cmd_census(args, out) -> int:
    if args.dim < 0:
        raise UsageError("--dim must be non-negative")
    if args.kind == "sphere":
        ks = [args.hdim] if args.hdim is not None else list(range(args.dim + 1))
        groups = {k: census_spheres(args.dim, k) for k in ks}
    else:
        if args.hdim is not None:
            raise UsageError("--hdim applies to spheres only")
        groups = {None: census_balls(args.dim)}
    total = sum(len(v) for v in groups.values())
    entries = [e for v in groups.values() for e in v]
    names = []
    counter: dict = {}
    for e in entries:
        i = counter.get(e.k, 0)
        counter[e.k] = i + 1
        names.append(_entry_name(e, i))

    if args.emit_dir:
        target = Path(args.emit_dir)
        target.mkdir(parents=True, exist_ok=True)
        for e, name in zip(entries, names):
            (target / f"{name}.cplx").write_text(serialize(e.complex, name, [e.construction]), encoding="utf-8")

    if args.json:
        doc = {"kind": args.kind, "dim": args.dim, "total": total}
        if args.kind == "sphere":
            doc["counts"] = {str(k): len(v) for k, v in groups.items()}
        if not args.count_only:
            doc["entries"] = [dict(to_json(e.complex, name), construction=e.construction, d=e.d, k=e.k)
                              for e, name in zip(entries, names)]
        out.write(json.dumps(doc, sort_keys=True) + "\n")
        return 0
    if args.count_only or args.emit_dir:
        parts = [f"k={k}:{len(v)}" for k, v in groups.items() if k is not None]
        out.write(" ".join(parts + [f"total:{total}"]) + "\n")
        return 0
    out.write("\n".join(serialize(e.complex, name, [e.construction]) for e, name in zip(entries, names)))
    return 0


def cmd_nerve(args, out) -> int:
    _emit_complex(out, nerve(_load(args.file)), args.json)
    return 0


def cmd_link(args, out) -> int:
    _emit_complex(out, link(_load(args.file), _split(args.simplex)), args.json)
    return 0


def cmd_star(args, out) -> int:
    _emit_complex(out, star(_load(args.file), _split(args.simplex)), args.json)
    return 0


def cmd_delete(args, out) -> int:
    _emit_complex(out, deletion(_load(args.file), args.vertex), args.json)
    return 0


def cmd_starring(args, out) -> int:
    K = elementary_starring(_load(args.file), _split(args.simplex), args.new_vertex)
    _emit_complex(out, K, args.json)
    return 0


def _verify_results(args, K: SimplicialComplex) -> dict[str, bool]:
    suite = args.suite
    if suite == "duality":
        V = _split(args.ground) if args.ground else None
        return {f"duality {c}": check_alexander_duality(K, V, c) for c in ("q", "p:2")}
    if suite == "links":
        results = {}
        for face in K.faces():
            label = "{" + ",".join(map(str, face)) + "}"
            results[f"link {label}"] = classify(link(K, face)).is_minimal
        return results
    if suite == "deletion":
        return {f"delete {v}": classify(deletion(K, v)).is_minimal for v in K.support}
    if args.ball is None or args.piece is None:
        raise UsageError("--suite decomposition needs --ball and --piece")
    rep = verify_decomposition(K, _load(args.ball), _load(args.piece))
    return dict(rep.checks)


def cmd_verify(args, out) -> int:
    K = _load(args.file)
    results = _verify_results(args, K)
    ok = all(results.values())
    if args.json:
        out.write(json.dumps({"suite": args.suite, "passed": ok, "checks": results}, sort_keys=True) + "\n")
    else:
        for name, good in results.items():
            out.write(f"{name}: {'pass' if good else 'FAIL'}\n")
        out.write(f"{args.suite}: {'pass' if ok else 'FAIL'}\n")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="nhcomplex", description="Minimal NH-balls and NH-spheres.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, with_file=True):
        p = sub.add_parser(name, help=help_text, parents=[common])
        if with_file:
            p.add_argument("file", help="complex document (text or JSON)")
        p.set_defaults(func=func)
        return p

    p = add("classify", cmd_classify, "decide minimal NH-sphere / NH-ball")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--max-steps", type=int, default=None)

    p = add("dual", cmd_dual, "Alexander dual")
    p.add_argument("--tau", default=None, help="extra simplex, e.g. x,y (dual relative to V_K + tau)")
    p.add_argument("--ground", default=None, help="explicit ground set, e.g. a,b,c,d")

    p = add("iterate", cmd_iterate, "sequence of iterated duals")
    p.add_argument("--max-steps", type=int, default=None)

    p = add("homology", cmd_homology, "reduced homology")
    p.add_argument("--coeff", default="z", help="z, q or p:<prime>")

    p = add("census", cmd_census, "minimal NH-spheres / NH-balls of a dimension", with_file=False)
    p.add_argument("--kind", choices=("sphere", "ball"), required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--hdim", type=int, default=None)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--emit-dir", default=None)

    add("nerve", cmd_nerve, "simplicial nerve")
    p = add("link", cmd_link, "link of a simplex")
    p.add_argument("--simplex", required=True)
    p = add("star", cmd_star, "star of a simplex")
    p.add_argument("--simplex", required=True)
    p = add("delete", cmd_delete, "deletion of a vertex")
    p.add_argument("--vertex", required=True)
    p = add("starring", cmd_starring, "elementary starring")
    p.add_argument("--simplex", required=True)
    p.add_argument("--new-vertex", required=True)

    p = add("verify", cmd_verify, "run a verification suite on a complex")
    p.add_argument("--suite", choices=("duality", "links", "deletion", "decomposition"), required=True)
    p.add_argument("--ground", default=None, help="ground set for the duality suite")
    p.add_argument("--ball", default=None, help="B part for the decomposition suite")
    p.add_argument("--piece", default=None, help="L part for the decomposition suite")
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except ComplexError as exc:
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
