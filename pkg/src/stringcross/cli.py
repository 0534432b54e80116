"""
Command line interface.

    stringcross words --n 4
    stringcross diagram show --word 1,2,1 --format text
    stringcross crossings list --word 1,2,1 --a 2
    stringcross cone --word 1,2,1
    stringcross polytope --word 1,2,1 --lambda 1,1 --kind nz --points
    stringcross op apply --word 1,2,1 --structure star --x 1,1,0 --op f --a 2
    stringcross star --word-from 1,2,1 --word-to 2,1,2 --x 1,0,0
    stringcross star matrix --n 3
    stringcross crystal graph --word 1,2,1 --lambda 1,1 --structure bz --format dot
    stringcross verify --suite all --n 4 --lambda-cap 2

Exit status: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import lusztig as L
from . import string_crystal as S
from .crossings import CROSSING, RIGOROUS, enumerate_paths
from .oracle import STRUCTURES, generate_graph, make_structure
from .polytopes import bz_ineqs, lattice_points, nz_ineqs, string_cone_ineqs
from .star import star_lusztig, star_matrix_iota0, star_string
from .verify import SUITES, Options, run_suites
from .wiring import ascii_art, build, planar_geometry
from .words import check_word, enumerate_words, format_word, parse_word, rank_of

__all__ = ["main", "build_parser"]


class UsageError(Exception):
    pass


def _vector(text: str) -> tuple[int, ...]:
    try:
        return parse_word(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _word(text: str) -> tuple[int, ...]:
    w = _vector(text)
    try:
        return check_word(w)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "dot"), default="json")
    common.add_argument("--psi-variant", choices=S.PSI_VARIANTS, default="involutive")
    common.add_argument("--e-sign", choices=S.E_SIGNS, default="corrected")

    p = argparse.ArgumentParser(prog="stringcross",
                                description="Crossing formulas for type A crystals.")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("words", parents=[common], help="list the reduced words of w0")
    q.add_argument("--n", type=int, required=True)

    q = sub.add_parser("diagram", parents=[common], help="wiring diagram of a word")
    q.add_argument("action", choices=("show",))
    q.add_argument("--word", type=_word, required=True)

    q = sub.add_parser("crossings", parents=[common], help="a-crossings or rigorous paths")
    q.add_argument("action", choices=("list",))
    q.add_argument("--word", type=_word, required=True)
    q.add_argument("--a", type=int, required=True)
    q.add_argument("--kind", choices=(CROSSING, RIGOROUS), default=CROSSING)

    q = sub.add_parser("cone", parents=[common], help="string cone inequalities")
    q.add_argument("--word", type=_word, required=True)

    q = sub.add_parser("polytope", parents=[common], help="string polytope inequalities")
    q.add_argument("--word", type=_word, required=True)
    q.add_argument("--lambda", dest="lam", type=_vector, required=True)
    q.add_argument("--kind", choices=("bz", "nz"), required=True)
    q.add_argument("--points", action="store_true", help="also enumerate lattice points")

    q = sub.add_parser("op", parents=[common], help="apply a crystal operator")
    q.add_argument("action", choices=("apply",))
    q.add_argument("--word", type=_word, required=True)
    q.add_argument("--structure", choices=STRUCTURES, default=None)
    q.add_argument("--data", choices=("string", "lusztig"), default="string")
    q.add_argument("--lambda", dest="lam", type=_vector, default=None)
    q.add_argument("--x", type=_vector, required=True)
    q.add_argument("--op", choices=("f", "e", "eps", "phi"), required=True)
    q.add_argument("--a", type=int, required=True)

    q = sub.add_parser("star", parents=[common], help="the *-involution")
    q.add_argument("action", nargs="?", choices=("map", "matrix", "lusztig"), default="map")
    q.add_argument("--word-from", type=_word)
    q.add_argument("--word-to", type=_word)
    q.add_argument("--word", type=_word)
    q.add_argument("--x", type=_vector)
    q.add_argument("--n", type=int)

    q = sub.add_parser("crystal", parents=[common], help="crystal graphs")
    q.add_argument("action", choices=("graph",))
    q.add_argument("--word", type=_word, required=True)
    q.add_argument("--lambda", dest="lam", type=_vector, default=None)
    q.add_argument("--structure", choices=STRUCTURES, default="bz")
    q.add_argument("--depth", type=int, default=None,
                   help="f-steps from 0 (required for the infinite structures)")
    q.add_argument("--node-bound", type=int, default=10**6)

    q = sub.add_parser("verify", parents=[common], help="run verification suites")
    q.add_argument("--suite", choices=("all",) + tuple(SUITES), default="all")
    q.add_argument("--n", type=int, default=3)
    q.add_argument("--lambda-cap", type=int, default=2)
    q.add_argument("--samples", type=int, default=1000)
    q.add_argument("--seed", type=int, default=0)
    return p


def _emit(obj, text: str | None, fmt: str, out):
    if fmt == "text" and text is not None:
        print(text, file=out)
    else:
        print(json.dumps(obj), file=out)


def _check_len(word, x, what="--x"):
    if len(x) != len(word):
        raise UsageError(f"{what} needs {len(word)} entries")


def _check_lambda(word, lam, required=True):
    if lam is None:
        if required:
            raise UsageError("--lambda is required here")
        return None
    if len(lam) != rank_of(word) - 1 or min(lam) < 0:
        raise UsageError(f"--lambda needs {rank_of(word) - 1} nonnegative entries")
    return lam


def _check_colour(word, a):
    if not 1 <= a <= rank_of(word) - 1:
        raise UsageError(f"--a must lie in 1..{rank_of(word) - 1}")


def cmd_words(args, out):
    if not 2 <= args.n <= 6:
        raise UsageError("--n must lie in 2..6")
    words = enumerate_words(args.n)
    _emit({"n": args.n, "count": len(words), "words": [list(w) for w in words]},
          "\n".join(format_word(w) for w in words), args.format, out)
    return 0


def cmd_diagram(args, out):
    d = build(args.word)
    geo = planar_geometry(d)
    obj = d.to_json()
    obj["wires"] = {str(p): [[str(x), str(y)] for x, y in pts] for p, pts in geo.items()}
    _emit(obj, ascii_art(d), args.format, out)
    return 0


def cmd_crossings(args, out):
    _check_colour(args.word, args.a)
    paths = enumerate_paths(args.word, args.a, args.kind)
    text = "\n".join(f"{g.label()}  r={list(g.r)}  s={list(g.s)}" for g in paths)
    _emit({"word": list(args.word), "a": args.a, "kind": args.kind,
           "paths": [g.to_json() for g in paths]}, text, args.format, out)
    return 0


def cmd_cone(args, out):
    system = string_cone_ineqs(args.word)
    _emit(system.to_json(), system.to_text(), args.format, out)
    return 0


def cmd_polytope(args, out):
    lam = _check_lambda(args.word, args.lam)
    system = (bz_ineqs if args.kind == "bz" else nz_ineqs)(args.word, lam)
    obj = system.to_json()
    text = system.to_text()
    if args.points:
        pts = lattice_points(system)
        obj["points"] = [list(x) for x in pts]
        text += f"\n# {len(pts)} points\n" + "\n".join(format_word(x) for x in pts)
    _emit(obj, text, args.format, out)
    return 0


def cmd_op(args, out):
    word = args.word
    _check_len(word, args.x)
    _check_colour(word, args.a)
    name = args.structure or ("lusztig" if args.data == "lusztig" else "binf")
    if args.data == "lusztig" and name not in ("lusztig", "lusztig-inf"):
        raise UsageError("--data lusztig goes with --structure lusztig or lusztig-inf")
    if name == "lusztig" and args.lam is None:
        name = "lusztig-inf"
    needs = name in ("bz", "bz-psi", "nz", "nz-literal", "lusztig", "tensor-nz")
    lam = _check_lambda(word, args.lam, required=needs)
    if min(args.x) < 0:
        raise UsageError("--x must be nonnegative")
    st = make_structure(name, word, lam, e_sign=args.e_sign, variant=args.psi_variant)
    x = args.x
    if args.op in ("f", "e"):
        y = getattr(st, args.op)(x, args.a)
        result = list(y) if y is not None else None
    else:
        result = getattr(st, args.op)(x, args.a)
    obj = {"structure": st.describe(), "x": list(x), "op": args.op, "a": args.a,
           "result": result, "epsilon": st.eps(x, args.a), "phi": st.phi(x, args.a),
           "weight": list(st.wt(x))}
    text = "none" if result is None else (format_word(result) if isinstance(result, list)
                                          else str(result))
    _emit(obj, text, args.format, out)
    return 0


def cmd_star(args, out):
    if args.action == "matrix":
        if args.n is None or not 2 <= args.n <= 6:
            raise UsageError("star matrix needs --n in 2..6")
        m = star_matrix_iota0(args.n)
        _emit({"n": args.n, "matrix": m}, "\n".join(" ".join(f"{v:3d}" for v in row)
                                                    for row in m), args.format, out)
        return 0
    if args.x is None:
        raise UsageError("--x is required")
    if args.action == "lusztig":
        if args.word is None:
            raise UsageError("star lusztig needs --word")
        _check_len(args.word, args.x)
        w2, y = star_lusztig(args.word, args.x)
        _emit({"word": list(w2), "x": list(y)}, f"{format_word(w2)} : {format_word(y)}",
              args.format, out)
        return 0
    src = args.word_from or args.word
    if src is None:
        raise UsageError("star needs --word-from")
    dst = args.word_to or src
    if rank_of(src) != rank_of(dst):
        raise UsageError("--word-from and --word-to have different rank")
    _check_len(src, args.x)
    if not string_cone_ineqs(src).contains(args.x):
        raise UsageError("--x is not a string datum of --word-from")
    y = star_string(src, dst, args.x, args.psi_variant)
    _emit({"word_from": list(src), "word_to": list(dst), "x": list(args.x), "result": list(y)},
          format_word(y), args.format, out)
    return 0


def cmd_crystal(args, out):
    name = args.structure
    needs = name in ("bz", "bz-psi", "nz", "nz-literal", "lusztig", "tensor-nz")
    lam = _check_lambda(args.word, args.lam, required=needs)
    st = make_structure(name, args.word, lam, e_sign=args.e_sign, variant=args.psi_variant)
    if not st.bounded and args.depth is None:
        raise UsageError(f"{name} is infinite; pass --depth")
    g = generate_graph(st, node_bound=args.node_bound, depth=args.depth)
    if args.format == "dot":
        print(g.to_dot(), file=out)
    else:
        text = "\n".join(f"{format_word(s)} -{a}-> {format_word(t)}" for s, a, t in g.edge_list())
        _emit(g.to_json(), text, args.format, out)
    return 0


def cmd_verify(args, out):
    if not 2 <= args.n <= 5:
        raise UsageError("--n must lie in 2..5")
    if args.lambda_cap < 0 or args.samples < 1:
        raise UsageError("--lambda-cap must be >= 0 and --samples >= 1")
    opt = Options(n=args.n, lambda_cap=args.lambda_cap, seed=args.seed, samples=args.samples,
                  psi_variant=args.psi_variant, e_sign=args.e_sign)
    results = run_suites(args.suite, opt)
    ok = all(r.ok for r in results)
    if args.format == "text":
        for r in results:
            print(f"{r.status:16s} {r.name:18s} checks={r.checks:<8d} {r.seconds:8.2f}s", file=out)
            for f in r.failures:
                print(f"    {f}", file=out)
    else:
        print(json.dumps({"ok": ok, "n": args.n, "lambda_cap": args.lambda_cap,
                          "results": [r.to_json() for r in results]}, default=str), file=out)
    return 0 if ok else 1


COMMANDS = {"words": cmd_words, "diagram": cmd_diagram, "crossings": cmd_crossings,
            "cone": cmd_cone, "polytope": cmd_polytope, "op": cmd_op, "star": cmd_star,
            "crystal": cmd_crystal, "verify": cmd_verify}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"stringcross: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"stringcross: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
