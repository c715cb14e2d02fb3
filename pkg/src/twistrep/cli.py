"""twistrep command line: JSON reports on stdout, a short summary on stderr.

Exit codes: 0 all checks passed, 1 a check failed, 2 usage error, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .analysis import CapExceeded, check_relations, default_cap, enumerate_group, invariant_hermitian_forms, signature
from .fox import fox_derivative, fox_jacobian
from .longmoody import induce, inner_local_system, pure_local_system
from .matrices import identity, mat_eq, mat_mul, mat_pow
from .presentations import CATALOG_NAMES, presentation_catalog
from .reps import (
    MatRep,
    burau_reduced,
    burau_unreduced,
    fibonacci_comparison,
    fibonacci_dim,
    jones_b6,
    weil_basis,
    weil_rep,
)
from .rings import Cyclotomic, Laurent
from .suite import r8_scalar, run_suite
from .words import BraidWord, artin_action, reduce_letters


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# argument parsing helpers


def parse_ring(spec: str):
    """``laurent``, ``cyc:N`` or ``cyc:N@a/N`` -> (ring, embedding or None)."""
    if spec == "laurent":
        return Laurent(), None
    m = re.fullmatch(r"cyc:(\d+)(?:@(-?\d+)/(\d+))?", spec)
    if not m:
        raise UsageError(f"bad ring spec {spec!r} (expected laurent, cyc:N or cyc:N@a/N)")
    n = int(m.group(1))
    if n < 1:
        raise UsageError("cyclotomic order must be positive")
    emb = Fraction(1, n)
    if m.group(2) is not None:
        emb = Fraction(int(m.group(2)), int(m.group(3)))
    return Cyclotomic(n), emb


def build_rep(name: str, ring) -> MatRep:
    """Named representation, or a MatRep JSON file, moved into ``ring``."""
    if name.endswith(".json"):
        rep = MatRep.from_json(json.loads(Path(name).read_text()))
        if ring is not None and rep.ring != ring:
            rep = rep.change_ring(ring)
        return rep
    m = re.fullmatch(r"weil:(\d+):(\d+)", name)
    if m:
        return weil_rep(int(m.group(1)), int(m.group(2)))
    if name == "jones":
        base = jones_b6()
    else:
        m = re.fullmatch(r"(burau|unburau)(\d+)(-hecke)?", name)
        if not m:
            raise UsageError(
                f"unknown rep {name!r} (jones, burauN, burauN-hecke, unburauN, weil:g:k or a .json file)"
            )
        n = int(m.group(2))
        if n < 2:
            raise UsageError("need at least 2 strands")
        if m.group(1) == "unburau":
            if m.group(3):
                raise UsageError("unreduced Burau has no hecke variant")
            base = burau_unreduced(n)
        else:
            base = burau_reduced(n, convention="hecke" if m.group(3) else "signed")
    if isinstance(ring, Laurent):
        return base
    return base.change_ring(ring)


def _emit(report: dict, summary: str, code: int) -> int:
    sys.stdout.write(json.dumps(report, indent=2, sort_keys=True, default=str) + "\n")
    sys.stderr.write(summary.rstrip() + "\n")
    return code


def _report(args, config: dict, result, passed: bool) -> dict:
    return {
        "command": args.command,
        "config": config,
        "passed": passed,
        "result": result,
        "version": __version__,
    }


# ---------------------------------------------------------------------------
# commands


def cmd_verify(args) -> int:
    ring, _ = parse_ring(args.ring)
    rep = build_rep(args.rep, ring)
    try:
        pres = presentation_catalog(args.pres)
    except KeyError as exc:
        raise UsageError(str(exc)) from None
    res = check_relations(rep, pres, args.mode)
    failed = [r["relator"] for r in res["relators"] if r["verdict"] == "fail"]
    summary = f"{args.rep} vs {pres.name} ({args.mode}, {args.ring}): "
    summary += "all relators pass" if not failed else f"FAIL at {', '.join(failed)}"
    config = {"rep": args.rep, "pres": args.pres, "mode": args.mode, "ring": args.ring}
    return _emit(_report(args, config, res, res["passed"]), summary, 0 if res["passed"] else 1)


def cmd_enumerate(args) -> int:
    ring, _ = parse_ring(args.ring)
    rep = build_rep(args.rep, ring)
    cap = args.cap if args.cap is not None else default_cap()
    gens = [rep.images[g] for g in rep.generators]
    res = enumerate_group(gens, mode=args.mode, cap=cap, jobs=args.jobs)
    out = res.to_json()
    summary = (
        f"{args.rep} over {args.ring}: linear order {res.linear_order}, "
        f"scalars {res.scalar_order}, projective order {res.projective_order}"
    )
    config = {"rep": args.rep, "ring": args.ring, "mode": args.mode, "cap": cap}
    return _emit(_report(args, config, out, True), summary, 0)


def cmd_signature(args) -> int:
    ring, emb = parse_ring(args.ring)
    if not isinstance(ring, Cyclotomic):
        raise UsageError("signature needs a cyclotomic ring spec, e.g. cyc:10@3/10")
    rep = build_rep(args.rep, ring)
    forms = invariant_hermitian_forms(rep)
    embeddings = [emb] + [Fraction(e) for e in args.embedding or [] if Fraction(e) != emb]
    result = {"solution_dim": len(forms), "signatures": []}
    for f in forms:
        result["signatures"].append([signature(f, e) for e in embeddings])
    passed = len(forms) > 0
    lines = [f"{args.rep}: {len(forms)} invariant Hermitian form(s)"]
    for sigs in result["signatures"]:
        for s in sigs:
            lines.append(f"  embedding {s['embedding']}: signature {tuple(s['signature'])}")
    config = {"rep": args.rep, "ring": args.ring, "embeddings": [str(e) for e in embeddings]}
    return _emit(_report(args, config, result, passed), "\n".join(lines), 0 if passed else 1)


def cmd_induce(args) -> int:
    beta = MatRep.from_json(json.loads(Path(args.beta).read_text()))
    if args.local_system == "pure":
        data = pure_local_system(beta)
    else:
        t = None
        if args.t is not None:
            t = beta.ring(int(args.t)) if re.fullmatch(r"-?\d+", args.t) else beta.ring.gen() ** int(args.t[1:] or 1)
        data = inner_local_system(beta, t)
    rep = induce(data)
    obj = rep.to_json()
    if args.out:
        Path(args.out).write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    result = {
        "local_system": args.local_system,
        "rank": data.rank,
        "dim": rep.dim,
        "tau": {k: [list(w) for w in v.images] for k, v in data.tau.items()},
        "rep": obj if not args.out else args.out,
    }
    summary = f"induced {args.local_system} representation of dimension {rep.dim}"
    config = {"beta": args.beta, "local_system": args.local_system, "out": args.out}
    return _emit(_report(args, config, result, True), summary, 0)


def cmd_fibdim(args) -> int:
    if args.genus < 0 or args.punctures < 0:
        raise UsageError("genus and punctures must be nonnegative")
    d = fibonacci_dim(args.genus, args.punctures)
    result = {"dim": d, "genus": args.genus, "punctures": args.punctures}
    if args.compare:
        result["comparison"] = fibonacci_comparison(args.genus, args.punctures)
    summary = f"dim W(g={args.genus}, k={args.punctures}) = {d}"
    config = {"genus": args.genus, "punctures": args.punctures}
    return _emit(_report(args, config, result, True), summary, 0)


def cmd_weil(args) -> int:
    if args.k < 2 or args.g < 1:
        raise UsageError("need g >= 1 and k >= 2")
    rep = weil_rep(args.g, args.k)
    one = identity(rep.dim, rep.ring)
    result: dict = {"basis_order": "lexicographic, least significant coordinate first",
                    "basis": [list(m) for m in weil_basis(args.g, args.k)]}
    passed = True
    checks = args.check or ["unitary"]
    for check in checks:
        if check == "unitary":
            res = {n: mat_eq(mat_mul(m, m.dagger()), one) for n, m in rep.images.items()}
            result["unitary"] = res
            passed &= all(res.values())
        elif check == "sl2-relations":
            if args.g != 1:
                raise UsageError("sl2-relations needs g = 1")
            T, S = rep.images["T"], rep.images["S"]
            rel = {
                "S^4": mat_pow(S, 4),
                "(ST)^3 S^-2": mat_mul(mat_pow(mat_mul(S, T), 3), mat_pow(S.dagger(), 2)),
                "T^2k": mat_pow(T, 2 * args.k),
            }
            res = {}
            for name, m in rel.items():
                scalar, in_r8 = r8_scalar(m)
                res[name] = {"scalar": scalar, "in_R8": in_r8, "identity": mat_eq(m, one)}
            result["sl2_relations"] = res
            passed &= all(v["scalar"] and v["in_R8"] for v in res.values())
        else:
            raise UsageError(f"unknown check {check!r}")
    summary = f"Weil g={args.g} k={args.k}: " + ("checks pass" if passed else "a check FAILED")
    config = {"g": args.g, "k": args.k, "checks": checks}
    return _emit(_report(args, config, result, passed), summary, 0 if passed else 1)


def _parse_letters(text: str):
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"bad word {text!r}: expected signed integers") from None


def cmd_fox(args) -> int:
    if args.braid is not None:
        letters = _parse_letters(args.braid)
        phi = artin_action(BraidWord(args.rank, letters))
        jac = fox_jacobian(phi, bar=args.bar)
        result = {"automorphism": [list(w) for w in phi.images],
                  "jacobian": [[str(x) for x in row] for row in jac.entries]}
        summary = f"Fox Jacobian of braid {list(letters)} on F_{args.rank}"
    elif args.word is not None:
        w = reduce_letters(_parse_letters(args.word))
        result = {"word": list(w),
                  "derivatives": {f"x{i}": str(fox_derivative(w, i, args.rank)) for i in range(1, args.rank + 1)}}
        summary = f"Fox derivatives of {list(w)}"
    else:
        raise UsageError("fox needs --word or --braid")
    config = {"rank": args.rank, "bar": args.bar}
    return _emit(_report(args, config, result, True), summary, 0)


def cmd_rep_dump(args) -> int:
    ring, _ = parse_ring(args.ring)
    rep = build_rep(args.name, ring)
    obj = rep.to_json()
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    sys.stderr.write(f"{args.name}: {rep.group}, dim {rep.dim}, ring {rep.ring}\n")
    return 0


def cmd_paper_suite(args) -> int:
    selected = None
    if args.only:
        selected = [int(x) for x in args.only.split(",")]
    results = run_suite(selected)
    if not args.timings:
        for r in results:
            r.pop("seconds", None)
    lines = [f"criterion {r['criterion']:2d} {'PASS' if r['passed'] else 'FAIL'}  {r['title']}" for r in results]
    passed = all(r["passed"] for r in results)
    config = {"only": selected}
    return _emit(_report(args, config, results, passed), "\n".join(lines), 0 if passed else 1)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twistrep", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"twistrep {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check a representation against a presentation")
    v.add_argument("--rep", required=True)
    v.add_argument("--pres", required=True, help=", ".join(CATALOG_NAMES))
    v.add_argument("--mode", choices=["exact", "projective", "auto"], default="exact")
    v.add_argument("--ring", default="laurent")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="enumerate the finite image group")
    e.add_argument("--rep", required=True)
    e.add_argument("--ring", default="cyc:10")
    e.add_argument("--mode", choices=["exact", "projective"], default="projective")
    e.add_argument("--cap", type=int, default=None, help="element cap (default $TWISTREP_CAP or 10^6)")
    e.add_argument("--jobs", type=int, default=1)
    e.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("signature", help="invariant Hermitian forms and their signatures")
    s.add_argument("--rep", required=True)
    s.add_argument("--ring", default="cyc:10@1/10")
    s.add_argument("--embedding", action="append", help="extra embeddings a/n (repeatable)")
    s.set_defaults(func=cmd_signature)

    i = sub.add_parser("induce", help="Long-Moody induction of a braid representation")
    i.add_argument("--local-system", choices=["pure", "inner"], required=True)
    i.add_argument("--beta", required=True, help="MatRep JSON file")
    i.add_argument("--out")
    i.add_argument("--t", help="inner system: rho(x_k) = t I; an integer or q^e written qE")
    i.set_defaults(func=cmd_induce)

    f = sub.add_parser("fibdim", help="Fibonacci conformal block dimension")
    f.add_argument("--genus", type=int, required=True)
    f.add_argument("--punctures", type=int, default=0)
    f.add_argument("--compare", action="store_true", help="include the closed-formula comparison table")
    f.set_defaults(func=cmd_fibdim)

    w = sub.add_parser("weil", help="Weil representation checks")
    w.add_argument("--g", type=int, required=True)
    w.add_argument("--k", type=int, required=True)
    w.add_argument("--check", action="append", choices=["unitary", "sl2-relations"])
    w.set_defaults(func=cmd_weil)

    x = sub.add_parser("fox", help="Fox derivatives and Jacobians")
    x.add_argument("--rank", type=int, required=True)
    x.add_argument("--word")
    x.add_argument("--braid")
    x.add_argument("--bar", action="store_true")
    x.set_defaults(func=cmd_fox)

    r = sub.add_parser("rep", help="representation utilities")
    rsub = r.add_subparsers(dest="rep_command", required=True)
    d = rsub.add_parser("dump", help="print a representation as JSON")
    d.add_argument("--name", required=True)
    d.add_argument("--ring", default="laurent")
    d.set_defaults(func=cmd_rep_dump)

    ps = sub.add_parser("paper-suite", help="run the full acceptance list")
    ps.add_argument("--only", help="comma-separated criterion numbers")
    ps.add_argument("--timings", action="store_true", help="include per-criterion timings")
    ps.set_defaults(func=cmd_paper_suite)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FileNotFoundError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"twistrep: error: {exc}\n")
        return 2
    except CapExceeded as exc:
        sys.stderr.write(f"twistrep: cap exceeded: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
