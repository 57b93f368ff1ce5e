"""Command-line surface: counting, bound checks, generators, and search.

Exit codes: 0 success, 2 usage error, 3 invalid input, 4 capacity exceeded,
5 proven-bound violation (a bug or a genuine counterexample, labeled loudly).
Conjecture exceedances never affect the exit status.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys
from fractions import Fraction

from . import constructions as cons
from . import forbidding as forb
from . import formats
from . import hypergraph as hg
from . import qlinalg as ql
from . import search as srch
from .entropy import CoverSpec, check_key_inequality, check_shearer
from .entropy import entropy as entropy_of
from .errors import BoundViolationError, CapacityError, ValidationError
from .reports import BoundReport, upper_report

USAGE_EXIT = 2
VALIDATION_EXIT = 3
CAPACITY_EXIT = 4
VIOLATION_EXIT = 5


def _digest_files(paths: list[str]) -> str:
    sha = hashlib.sha256()
    for path in paths:
        with open(path, "rb") as fh:
            sha.update(fh.read())
    return "sha256:" + sha.hexdigest()


def _digest_params(params: str) -> str:
    return "sha256:" + hashlib.sha256(params.encode()).hexdigest()


def _bound_obj(r: BoundReport) -> dict:
    return {
        "quantity": r.quantity,
        "computed": r.computed,
        "bound": r.bound,
        "ratio": r.ratio,
        "satisfied": r.satisfied,
        "source": r.source,
        "kind": r.kind,
        "conjecture": r.conjecture,
        "extra": dict(r.extra),
    }


def _render_value(v) -> str:
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float):
        return format(v, ".12g")
    if isinstance(v, (list, tuple)):
        return " ".join(_render_value(x) for x in v)
    return str(v)


def _render_text(report: dict) -> str:
    lines = [f"command: {' '.join(report['command'])}", f"input:   {report['input_digest']}"]
    quantities = report["quantities"]
    width = max((len(k) for k in quantities), default=0)
    for key, value in quantities.items():
        lines.append(f"{key.ljust(width)} = {_render_value(value)}")
    for b in report["bounds"]:
        rel = "<=" if b["kind"] == "upper" else ">="
        if b["satisfied"]:
            verdict = "ok"
        elif b["conjecture"]:
            verdict = "conjecture exceeded (informational)"
        else:
            verdict = "PROVEN BOUND VIOLATED"
        lines.append(
            f"check: {b['quantity']} = {_render_value(b['computed'])} {rel} "
            f"{_render_value(b['bound'])}  [{b['source']}]  {verdict}"
        )
    for note in report["notes"]:
        lines.append(f"note: {note}")
    lines.append(f"status: {report['status']}")
    return "\n".join(lines) + "\n"


def _parse_ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x != ""]


def _parse_colors(text: str | None, default=("red", "green", "blue")) -> tuple[str, ...]:
    if text is None:
        return tuple(default)
    return tuple(x.strip() for x in text.split(",") if x.strip())


def _parse_vector_set(text: str) -> list[tuple[int, ...]]:
    return [tuple(_parse_ints(part)) for part in text.split(";") if part.strip()]


def _kappa_quantities(rep: hg.KappaReport) -> dict:
    return {
        "T": rep.t_count,
        "C": list(rep.color_counts),
        "ratio": rep.ratio_exact,
        "ratio_real": rep.ratio,
    }


def cmd_validate(args) -> tuple[dict, list[BoundReport], list[str]]:
    h = formats.load_hypergraph(args.input)
    report = hg.validate(h)
    if not report.ok:
        raise ValidationError("; ".join(report.violations))
    return {"vertices": h.n, "edges": len(h.edges), "valid": True}, [], []


def cmd_count(args) -> tuple[dict, list[BoundReport], list[str]]:
    h = formats.load_hypergraph(args.input)
    notes: list[str] = []
    bounds: list[BoundReport] = []
    if args.kind == "rainbow":
        colors = _parse_colors(args.colors)
        t = hg.count_rainbow_cliques(h, args.d, colors)
        return {"T": t, "d": args.d, "colors": list(colors)}, bounds, notes
    if args.kind == "good6":
        j = hg.count_good_6subsets(h)
        n = len(h.edges)
        q = {"J": j, "N": n}
        if n:
            q["ratio"] = Fraction(j * j, n**3)
            notes.append("conjectured optimum for J^2/N^3 is 2/7; exceeding it is not a failure")
        return q, bounds, notes
    if args.kind == "mixed4":
        rep = hg.check_mixed_4subsets(h)
        notes.append("conjectured optimum for J^2/(N2 N3^2) is 3/2; exceeding it is not a failure")
        return (
            {"J": rep.j, "N2": rep.n2, "N3": rep.n3, "ratio": rep.ratio_exact},
            list(rep.reports),
            notes,
        )
    if args.kind == "covering":
        rep = hg.check_color_covering(h, args.delta)
        return (
            {"J": rep.j, "R": rep.color_counts[0], "G": rep.color_counts[1],
             "B": rep.color_counts[2], "ratio": rep.ratio_exact, "delta": args.delta},
            list(rep.reports),
            notes,
        )
    if args.kind == "partial":
        m = hg.count_partial_shadow_targets(h, args.r, args.k)
        return {"m": m, "r": args.r, "k": args.k, "edges": len(h.edges)}, bounds, notes
    raise ValidationError(f"unknown count kind {args.kind!r}")


def cmd_kappa(args) -> tuple[dict, list[BoundReport], list[str]]:
    h = formats.load_hypergraph(args.input)
    colors = _parse_colors(args.colors) if args.colors else None
    rep = hg.kappa_ratio(h, args.d, colors)
    return _kappa_quantities(rep), list(rep.reports), []


def cmd_shadow(args) -> tuple[dict, list[BoundReport], list[str]]:
    fam = formats.set_family_from_obj(formats.load_json(args.family))
    sh = hg.shadow(fam)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(formats.set_family_to_obj(sh), fh)
    return {"family_size": len(fam), "d": fam.d, "shadow_size": len(sh)}, [], []


def cmd_kk(args) -> tuple[dict, list[BoundReport], list[str]]:
    fam = formats.set_family_from_obj(formats.load_json(args.family))
    rep = hg.check_kruskal_katona(fam)
    q = {
        "family_size": len(fam),
        "d": fam.d,
        "t": rep.extra["t"],
        "shadow_size": rep.computed,
        "bound": rep.bound,
    }
    return q, [rep], []


def cmd_qkk(args) -> tuple[dict, list[BoundReport], list[str]]:
    fam = formats.subspace_family_from_obj(formats.load_json(args.family))
    rep = ql.check_q_kruskal_katona(fam)
    q = {
        "family_size": len(fam),
        "q": fam.q,
        "d": fam.d,
        "t": rep.extra["t"],
        "shadow_size": rep.computed,
        "bound": rep.bound,
    }
    return q, [rep], []


def cmd_entropy(args) -> tuple[dict, list[BoundReport], list[str]]:
    if args.key:
        if not args.family:
            raise ValidationError("--key needs --family")
        fam = formats.set_family_from_obj(formats.load_json(args.family))
        rep = check_key_inequality(fam)
        bound = upper_report(
            "max (s_{k+1} + 1 - s_k)",
            max((-g for g in rep.gaps), default=0.0),
            0.0,
            "key inequality 2^{H_k} >= 2^{H_{k+1}} + 1",
            tol=1e-9,
        )
        return {"sizes": list(rep.sizes), "gaps": list(rep.gaps), "ok": rep.ok}, [bound], []
    if not args.dist:
        raise ValidationError("entropy needs --dist (or --key with --family)")
    dist = formats.distribution_from_obj(formats.load_json(args.dist))
    if args.shearer:
        subsets = tuple(tuple(_parse_ints(part)) for part in args.shearer.split(";") if part.strip())
        cover = CoverSpec(dist.arity, subsets, args.k)
        rep = check_shearer(dist, cover)
        return {"k": args.k, "slack": rep.extra["slack"]}, [rep], []
    coords = _parse_ints(args.coords) if args.coords else None
    value = entropy_of(dist, coords)
    return {"H": value, "coords": coords if coords else "all", "support": len(dist.support)}, [], []


def _forbidding_system(args) -> forb.ForbiddingSystem:
    return forb.system_from_name(args.system, args.d, universe_size=args.universe_size)


def _parse_set(sys_name: str, text: str):
    if sys_name.startswith("qlinear"):
        return _parse_vector_set(text)
    return _parse_ints(text)


def cmd_forbidding(args) -> tuple[dict, list[BoundReport], list[str]]:
    system = _forbidding_system(args)
    if args.action == "verify":
        rep = forb.verify_forbidding_axioms(system, mode=args.mode, seed=args.seed)
        if not rep.ok:
            raise BoundViolationError(f"forbidding axioms failed: {rep.violation}")
        note = [] if rep.exhaustive else ["not exhaustively verified (spot-check mode)"]
        return (
            {"system": system.name, "ok": rep.ok, "exhaustive": rep.exhaustive,
             "checked": rep.checked, "c_vector": list(system.c_vector.entries)},
            [],
            note,
        )
    if args.action == "compatible":
        if args.set is None:
            raise ValidationError("compatible needs --set")
        result = forb.is_compatible(system, _parse_set(args.system, args.set))
        q = {"system": system.name, "compatible": result.ok}
        if result.witness:
            q["witness_multiset"] = list(result.witness[0])
            q["witness_extension"] = result.witness[1]
        return q, [], []
    if args.action == "sd":
        if args.set is None:
            raise ValidationError("sd needs --set")
        fam = forb.enumerate_sd(system, _parse_set(args.system, args.set))
        return {"system": system.name, "tuples": len(fam), "d": system.d}, [], []
    if args.action == "gkk":
        if args.family:
            sets = formats.set_family_from_obj(formats.load_json(args.family)).sets
        elif args.subspaces:
            sub = formats.subspace_family_from_obj(formats.load_json(args.subspaces))
            zero = tuple([0] * sub.n)
            sets = [
                sorted(ql.subspace_points(member, sub.q, sub.n) - {zero})
                for member in sub.members
            ]
        else:
            raise ValidationError("gkk needs --family or --subspaces")
        rep = forb.check_generalized_kk(system, sets)
        q = {
            "system": system.name,
            "family_size": rep.extra["family_size"],
            "t": rep.extra["t"],
            "shadow_size": rep.computed,
            "bound": rep.bound,
        }
        return q, [rep], []
    raise ValidationError(f"unknown forbidding action {args.action!r}")


def cmd_construct(args) -> tuple[dict, list[BoundReport], list[str]]:
    name = args.name
    out_obj = None
    if name == "k4-blowup":
        c = cons.k4_blowup(args.n)
    elif name == "rainbow-tripartite":
        c = cons.rainbow_tripartite(args.a, args.b, args.c)
    elif name == "matching":
        c = cons.matching_construction(args.d)
    elif name == "lift":
        if not args.input:
            raise ValidationError("lift needs --input")
        c = cons.kappa_lift(formats.load_hypergraph(args.input))
    elif name == "tetrahedra8":
        c = cons.tetrahedra8()
    elif name == "flats":
        c = cons.flats_example()
    elif name == "tripartite-mixed":
        c = cons.tripartite_mixed(args.n)
    elif name == "complete-family":
        fam = cons.complete_family(args.m, args.d)
        out_obj = formats.set_family_to_obj(fam)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                json.dump(out_obj, fh)
        return {"name": name, "family_size": len(fam), "d": fam.d, "self_check": "passed"}, [], []
    else:
        raise ValidationError(f"unknown construction {name!r}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(formats.hypergraph_to_obj(c.graph), fh)
    q = {"name": c.name, "vertices": c.graph.n, "edges": len(c.graph.edges), "self_check": "passed"}
    for key, value in c.expected.items():
        q[f"expected_{key}"] = value
    return q, [], []


_PROBE_CAPS = {
    "mixed4": (Fraction(9, 2), "shearer 9/2"),
    "covering_delta": (Fraction(6), "joints 6"),
}


def cmd_search(args) -> tuple[dict, list[BoundReport], list[str]]:
    notes: list[str] = []
    bounds: list[BoundReport] = []
    if args.mode == "rainbow-triangle":
        res = srch.search_rainbow_triangle(args.max_vertices, prune=args.prune)
        if res.witness is not None:
            bounds.append(
                upper_report("best ratio", res.best_ratio_exact, Fraction(2), "rainbow triangles 2")
            )
    elif args.mode == "mixed4":
        res = srch.search_mixed_4subsets(args.max_vertices)
        if res.witness is not None:
            bounds.append(
                upper_report("best ratio", res.best_ratio_exact, Fraction(9, 2), "shearer 9/2")
            )
        notes.append("known window for the true optimum: [3/2, 3]")
    elif args.mode == "probe":
        params = {"vertices": args.vertices, "d": args.d, "delta": args.delta}
        res = srch.random_probe(args.problem, params, args.trials, seed=args.seed)
        if res.witness is not None:
            if args.problem == "rainbow_d":
                cap = Fraction(2) if args.d == 3 else Fraction(math.factorial(args.d))
                src = "rainbow triangles 2" if args.d == 3 else "joints d!"
                bounds.append(upper_report("best ratio", res.best_ratio_exact, cap, src))
            elif args.problem in _PROBE_CAPS:
                cap, src = _PROBE_CAPS[args.problem]
                bounds.append(upper_report("best ratio", res.best_ratio_exact, cap, src))
            if args.problem == "good6":
                notes.append("conjectured optimum 2/7; larger values are not failures")
    else:
        raise ValidationError(f"unknown search mode {args.mode!r}")
    if args.out and res.witness is not None:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(formats.hypergraph_to_obj(res.witness), fh)
    q = {
        "problem": res.problem,
        "best_ratio": res.best_ratio_exact if res.witness is not None else "none",
        "best_ratio_real": res.best_ratio if res.witness is not None else "nan",
        "explored": res.explored,
        "exhaustive": res.exhaustive,
    }
    return q, bounds, notes


def cmd_weighted(args) -> tuple[dict, list[BoundReport], list[str]]:
    h = formats.load_hypergraph(args.input)
    rep = hg.weighted_joint_sum(h, args.d)
    bounds = [rep.report]
    q = {"d": args.d, "total_weight": rep.total_weight, "sum": rep.value, "bound": rep.report.bound}
    if args.spectral:
        if args.d != 3:
            raise ValidationError("--spectral applies only to d = 3")
        spec = hg.spectral_trace_check(h)
        q["trace_m2"] = spec.trace2
        q["trace_m3"] = spec.trace3
        bounds.extend(spec.checks)
    return q, bounds, []


def cmd_partial_shadow(args) -> tuple[dict, list[BoundReport], list[str]]:
    h = formats.load_hypergraph(args.input)
    rep = hg.check_partial_shadow_bound(h, args.r, args.k)
    q = {
        "m": rep.extra["m"],
        "x": rep.extra["x"],
        "edges": rep.computed,
        "bound": rep.bound,
        "r": args.r,
        "k": args.k,
    }
    return q, [rep], []


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shadowlab",
        description="Exact counting and bound verification for shadow/clique extremal problems",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit a canonical JSON report")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized operations")
        p.add_argument("--threads", type=int, default=1, help="worker cap (current build runs sequentially)")

    p = sub.add_parser("validate", help="check hypergraph invariants")
    p.add_argument("--input", required=True)
    common(p)

    p = sub.add_parser("count", help="exact counts: rainbow/good6/mixed4/covering/partial")
    p.add_argument("kind", choices=["rainbow", "good6", "mixed4", "covering", "partial"])
    p.add_argument("--input", required=True)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--colors")
    p.add_argument("--delta", type=int, default=0)
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--k", type=int, default=0)
    common(p)

    p = sub.add_parser("kappa", help="clique ratio T^{d-1}/(C_1...C_d) with bounds")
    p.add_argument("--input", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--colors")
    common(p)

    p = sub.add_parser("shadow", help="set-family shadow")
    p.add_argument("--family", required=True)
    p.add_argument("--out")
    common(p)

    p = sub.add_parser("kk", help="shadow bound check for set families")
    p.add_argument("--family", required=True)
    common(p)

    p = sub.add_parser("qkk", help="shadow bound check for subspace families")
    p.add_argument("--family", required=True)
    common(p)

    p = sub.add_parser("entropy", help="entropy of exact distributions; shearer/key checks")
    p.add_argument("--dist")
    p.add_argument("--coords")
    p.add_argument("--shearer", help="cover subsets, e.g. '0,1;1,2;0,2'")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--key", action="store_true", help="key inequality for a set family")
    p.add_argument("--family")
    common(p)

    p = sub.add_parser("forbidding", help="forbidding-system operations")
    p.add_argument("action", choices=["verify", "compatible", "sd", "gkk"])
    p.add_argument("--system", required=True, help="'repeats' or 'qlinear:q,n'")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--universe-size", type=int)
    p.add_argument("--mode", default="auto", choices=["auto", "exhaustive", "spot"])
    p.add_argument("--set", help="elements: ints '0,1,2' or vectors '1,0;0,1'")
    p.add_argument("--family")
    p.add_argument("--subspaces")
    common(p)

    p = sub.add_parser("construct", help="generate a named configuration")
    p.add_argument(
        "name",
        choices=[
            "k4-blowup", "rainbow-tripartite", "matching", "lift",
            "tetrahedra8", "flats", "tripartite-mixed", "complete-family",
        ],
    )
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--c", type=int, default=1)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--input")
    p.add_argument("--out")
    common(p)

    p = sub.add_parser("search", help="exhaustive search or seeded random probe")
    p.add_argument("mode", choices=["rainbow-triangle", "mixed4", "probe"])
    p.add_argument("--max-vertices", type=int, default=4)
    p.add_argument("--prune", action="store_true")
    p.add_argument("--problem", default="rainbow_d", choices=list(srch.PROBE_PROBLEMS))
    p.add_argument("--vertices", type=int, default=8)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--delta", type=int, default=0)
    p.add_argument("--out")
    common(p)

    p = sub.add_parser("weighted", help="geometric-mean weighted clique sum")
    p.add_argument("--input", required=True)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--spectral", action="store_true")
    common(p)

    p = sub.add_parser("partial-shadow", help="partial shadow bound check")
    p.add_argument("--input", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    common(p)

    return parser


_HANDLERS = {
    "validate": cmd_validate,
    "count": cmd_count,
    "kappa": cmd_kappa,
    "shadow": cmd_shadow,
    "kk": cmd_kk,
    "qkk": cmd_qkk,
    "entropy": cmd_entropy,
    "forbidding": cmd_forbidding,
    "construct": cmd_construct,
    "search": cmd_search,
    "weighted": cmd_weighted,
    "partial-shadow": cmd_partial_shadow,
}


def _input_paths(args) -> list[str]:
    paths = []
    for attr in ("input", "family", "dist", "subspaces"):
        value = getattr(args, attr, None)
        if value:
            paths.append(value)
    return paths


def run(argv: list[str]) -> tuple[dict, int]:
    """Execute one command; returns (report dict, exit code)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        raise ValidationError("--threads must be >= 1")
    paths = _input_paths(args)
    digest = _digest_files(paths) if paths else _digest_params(" ".join(argv))
    quantities, bounds, notes = _HANDLERS[args.cmd](args)
    violated = [b for b in bounds if not b.satisfied and not b.conjecture]
    status = VIOLATION_EXIT if violated else 0
    report = {
        "command": list(argv),
        "input_digest": digest,
        "quantities": quantities,
        "bounds": [_bound_obj(b) for b in bounds],
        "notes": notes,
        "status": status,
    }
    return report, status


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        report, status = run(argv)
    except (ValidationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VALIDATION_EXIT
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return CAPACITY_EXIT
    except BoundViolationError as exc:
        print(f"PROVEN BOUND VIOLATED: {exc}", file=sys.stderr)
        return VIOLATION_EXIT
    wants_json = "--json" in argv
    if wants_json:
        print(formats.dumps_canonical(report))
    else:
        sys.stdout.write(_render_text(report))
    if status == VIOLATION_EXIT:
        print("PROVEN BOUND VIOLATED: see the failed checks above", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
