"""Command-line front end: ``thompsonf <command> ...``.

Output is a JSON envelope (or CSV rows where a table makes sense).  The
envelope holds no wall-clock data unless ``--timing`` is given, so equal
arguments give byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from collections import Counter
from fractions import Fraction

from . import __version__
from .bb import (
    GENSETS, BBParams, SizeCapExceeded, acceptance_fractions, bb_count, bb_density_dp, bb_graph,
    find_special, phi_poly, prune, special_count, xi_root,
)
from .cayley import ConsistencyError, GeneratingSet, ball, build_subgraph, doubling_check, parse_snapshot_json
from .cyclic import BalanceError, decide_trivial
from .element import IDENTITY, nf_from_word, parse_nf, to_tree_pair
from .flow import evac_exists
from .linalg import field_of
from .ring import (
    BasisSpec, RingError, basic_012, default_basis, one_minus_basic, one_minus_family, equal_param_family,
    divisibility_product_check, lift_solution, one_minus, parse_element, relation_to_solution,
    solve_right, to_json_obj, to_monoid_pair, verify_identity,
)
from .trees import catalan, count_forests, enumerate_trees, tree_str
from .triples import gamma_n, scattered_graph, triple_count
from .words import Letter, WordSyntaxError, format_word, parse_word

SCHEMA = 1
BB_COLUMNS = ["n", "k", "genset", "size", "density", "cheeger", "specialCount", "prunedDensity"]

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class Disagreement(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ------------------------------------------------------------------ commands

def cmd_wp(args) -> dict:
    if args.random:
        return _wp_random(args)
    if args.word is None:
        raise UsageError("give a word or --random N")
    word = parse_word(args.word)
    out: dict = {"word": format_word(word)}
    if args.algorithm in ("nf", "both"):
        nf = nf_from_word(word)
        out["nf"] = {"trivial": nf == IDENTITY, "normalForm": str(nf)}
    if args.algorithm in ("cyclic", "both"):
        try:
            v = decide_trivial(word, reduce_between=args.reduce)
            out["cyclic"] = v.as_dict()
        except BalanceError:
            out["cyclic"] = {"trivial": False, "iterations": 0, "trace": [], "note": "x0 exponent sum non-zero"}
    if args.algorithm == "both":
        agree = out["nf"]["trivial"] == out["cyclic"]["trivial"]
        out["agree"] = agree
        if not agree:
            raise Disagreement(f"algorithms disagree on {out['word']}")
    out["trivial"] = out.get("nf", out.get("cyclic"))["trivial"]
    return out


def _wp_random(args) -> dict:
    rng = random.Random(args.seed)
    trivial = mismatches = 0
    for _ in range(args.random):
        n = rng.randint(0, args.length)
        w = tuple(Letter(rng.randint(0, 1), rng.choice((1, -1))) for _ in range(n))
        a = nf_from_word(w) == IDENTITY
        try:
            b = decide_trivial(w).trivial
        except BalanceError:
            b = False
        trivial += a
        mismatches += a != b
    if mismatches:
        raise Disagreement(f"{mismatches} disagreements")
    return {"words": args.random, "maxLength": args.length, "trivial": trivial, "mismatches": 0}


def cmd_nf(args) -> dict:
    g = parse_nf(args.word)
    tp = to_tree_pair(g)
    return {
        "normalForm": str(g),
        "positive": list(g.pos),
        "negative": list(g.neg),
        "identity": g == IDENTITY,
        "treePair": {"domain": tree_str(tp.domain), "range": tree_str(tp.range)},
    }


def _bb_row(p: BBParams, mode: str, cap: int) -> dict:
    if mode == "dp":
        dens = bb_density_dp(p)
        size = bb_count(p.n, p.k)
        pruned = None
    elif mode == "enumerate":
        snap = bb_graph(p, cap, keep_edges=False)
        dens, size = snap.density, snap.size
        if dens != bb_density_dp(p):
            raise ConsistencyError("DP and enumeration densities differ")
        pruned = None
    else:  # prune
        pmode = "isolated" if p.genset == "x1,xb1" else "special-abc"
        rep = prune(p, pmode, cap)
        dens, size, pruned = rep.before, bb_count(p.n, p.k), rep.after
    m = len(GENSETS[p.genset]) // 2
    return {
        "n": p.n, "k": p.k, "genset": p.genset, "size": size,
        "density": str(dens), "cheeger": str(2 * m - dens),
        "specialCount": special_count(p.n, p.k),
        "prunedDensity": None if pruned is None else str(pruned),
    }


def _int_range(text: str) -> list:
    out = []
    for part in str(text).split(","):
        if "-" in part[1:]:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def cmd_bb(args) -> dict:
    rows = []
    for n in _int_range(args.n):
        for k in _int_range(args.k):
            rows.append(_bb_row(BBParams(n, k, args.genset), args.mode, args.cap))
    out = {"columns": BB_COLUMNS, "rows": rows}
    if args.fractions:
        p = BBParams(_int_range(args.n)[-1], _int_range(args.k)[-1], args.genset)
        out["acceptance"] = {a: str(f) for a, f in acceptance_fractions(p).items()}
    if args.witnesses:
        p = BBParams(_int_range(args.n)[-1], _int_range(args.k)[-1], args.genset)
        count, wit = find_special(p, args.witnesses, args.cap)
        out["special"] = {
            "count": count,
            "witnesses": [{"forest": str(w.forest), "atLeftEnd": w.at_left_end} for w in wit],
        }
    return out


def _read_lines(path: str) -> list:
    with open(path) as fh:
        return [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]


def cmd_cayley(args) -> dict:
    A = GeneratingSet.of(args.side, *[w.strip() for w in args.gens.split(",")])
    if args.elements:
        Y = {parse_nf(w) for w in _read_lines(args.elements)}
    else:
        Y = ball(IDENTITY, args.ball, A)
    snap = build_subgraph(Y, A)
    out = {"side": args.side, "gens": [format_word(g) for g in A.gens], "stats": snap.stats()}
    if args.doubling:
        ok, size = doubling_check(Y, list(A.gens), Fraction(args.doubling), args.variant)
        out["doubling"] = {"c": args.doubling, "variant": args.variant, "AY": size, "below": ok}
    if args.export:
        with open(args.export, "w") as fh:
            fh.write(snap.to_json())
        out["exported"] = args.export
    return out


def cmd_evac(args) -> dict:
    with open(args.snapshot) as fh:
        g = parse_snapshot_json(fh.read())
    ok, scheme = evac_exists(g, args.C)
    out = {"C": args.C, "vertices": len(g.vertices), "edges": len(g.edges), "feasible": ok}
    if ok:
        out["usesInversePair"] = scheme.uses_inverse_pair()
        if args.witness:
            with open(args.witness, "w") as fh:
                json.dump({v: [list(e) for e in p] for v, p in sorted(scheme.paths.items())}, fh, indent=1)
            out["witness"] = args.witness
    return out


def _elem(text: str, K):
    return parse_element(text, K)


def cmd_ring(args) -> dict:
    K = field_of(args.field)
    sub = args.ring_cmd
    if sub == "verify":
        if args.preset == "one-minus":
            a, u, b, v = one_minus_basic(K)
        elif args.preset == "012":
            a, b, u, v = basic_012(Fraction(args.alpha), Fraction(args.beta), K)
        else:
            if not all([args.a, args.u, args.b, args.v]):
                raise UsageError("verify needs --preset or all of --a --u --b --v")
            a, u, b, v = (_elem(t, K) for t in (args.a, args.u, args.b, args.v))
        return {"holds": verify_identity(a, u, b, v), "a": str(a), "u": str(u), "b": str(b), "v": str(v)}
    if sub == "solve":
        coeffs = [_elem(t, K) for t in args.coef]
        if len(coeffs) < 2:
            raise UsageError("solve needs at least two --coef")
        basis = default_basis(coeffs, args.D) if args.I is None else BasisSpec(args.D, args.I)
        rep = solve_right(coeffs, basis, K)
        out = rep.as_dict()
        if K.p is not None and rep.kernel_dim:
            # confirm over Q before reporting witnesses
            q = solve_right([parse_element(t) for t in args.coef], basis)
            out["confirmedOverQ"] = q.kernel_dim == rep.kernel_dim
            out["solutionsQ"] = q.as_dict()["solutions"]
        return out
    if sub == "family":
        if args.kind == "one-minus":
            u, v = one_minus_family(args.k, K)
            a, b = one_minus(0, K), one_minus(1, K)
        else:
            a, b, u, v = equal_param_family(Fraction(args.beta), args.k, K)
        return {"kind": args.kind, "k": args.k, "u": to_json_obj(u), "v": to_json_obj(v),
                "verified": verify_identity(a, u, b, v)}
    if sub == "lift":
        _, _, u1, v1 = basic_012(Fraction(args.beta), Fraction(args.beta), K)
        u, v = lift_solution(u1, v1, Fraction(args.alpha), Fraction(args.beta))
        a, b, _, _ = basic_012(Fraction(args.alpha), Fraction(args.beta), K)
        return {"u": to_json_obj(u), "v": to_json_obj(v), "verified": verify_identity(a, u, b, v)}
    if sub == "relation2uv":
        u, v = relation_to_solution(args.word, K)
        mu, mv, g = to_monoid_pair(u, v)
        return {"u": to_json_obj(u), "v": to_json_obj(v),
                "verified": verify_identity(one_minus(0, K), u, one_minus(1, K), v),
                "translate": str(g), "uMonoid": to_json_obj(mu), "vMonoid": to_json_obj(mv)}
    if sub == "divides":
        pairs = [tuple(Fraction(x) for x in p.split(",")) for p in args.pair]
        return {"form": args.form, "holds": divisibility_product_check(pairs, args.form, K)}
    raise UsageError(f"unknown ring command {sub}")


def cmd_gamma(args) -> dict:
    if args.scattered:
        g = scattered_graph(args.n)
    else:
        g = gamma_n(args.n)
    degs = g.degrees()
    out = {
        "n": args.n,
        "vertices": len(g.vertices),
        "geometricEdges": len(g.geometric_edges()),
        "degreeHistogram": {str(d): c for d, c in sorted(Counter(degs.values()).items())},
    }
    if not args.scattered:
        out["expectedVertices"] = triple_count(args.n)
    if args.export:
        with open(args.export, "w") as fh:
            fh.write(g.to_json())
        out["exported"] = args.export
    return out


def cmd_catalan(args) -> dict:
    rows = []
    for n in range(1, args.n + 1):
        rows.append({
            "n": n, "catalan": catalan(n), "trees": len(enumerate_trees(n)),
            "forests": count_forests(n),
            "triples": triple_count(n) if n >= 3 else 0,
        })
    return {"columns": ["n", "catalan", "trees", "forests", "triples"], "rows": rows}


def cmd_phi(args) -> dict:
    rows = []
    for k in _int_range(args.k):
        lo, hi = xi_root(k, Fraction(args.tol))
        rows.append({"k": k, "phi": phi_poly(k), "xiLow": str(lo), "xiHigh": str(hi),
                     "xiApprox": float((lo + hi) / 2)})
    return {"columns": ["k", "phi", "xiLow", "xiHigh", "xiApprox"], "rows": rows,
            "provenance": {"phi": "exact", "xi": "interval"}}


# ------------------------------------------------------------------ parser

def _global_flags(p, top: bool):
    d = (lambda v: v) if top else (lambda v: argparse.SUPPRESS)
    p.add_argument("--format", choices=["json", "csv"], default=d("json"))
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--cap", type=int, default=d(10 ** 7), help="enumeration size cap")
    p.add_argument("--field", default=d("Q"), help="Q or a prime p")
    p.add_argument("--out", default=d(None), help="write the report here instead of stdout")
    p.add_argument("--timing", action="store_true", default=d(False), help="add wall time to the envelope")


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="thompsonf", description="Experiments with Thompson's group F.")
    _global_flags(top, True)
    top.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, False)
    sub = top.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("wp", parents=[common], help="word problem")
    p.add_argument("word", nargs="?")
    p.add_argument("--algorithm", choices=["nf", "cyclic", "both"], default="both")
    p.add_argument("--reduce", action="store_true", help="free-reduce between rounds")
    p.add_argument("--random", type=int, default=0, help="cross-check N seeded random words")
    p.add_argument("--length", type=int, default=24)
    p.set_defaults(func=cmd_wp)

    p = sub.add_parser("nf", parents=[common], help="normal form and tree pair")
    p.add_argument("word")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("bb", parents=[common], help="Belk-Brown automata")
    p.add_argument("--n", required=True, help="value, list or range like 2-12")
    p.add_argument("--k", required=True)
    p.add_argument("--genset", choices=sorted(GENSETS), default="x0,x1")
    p.add_argument("--mode", choices=["enumerate", "dp", "prune"], default="dp")
    p.add_argument("--fractions", action="store_true", help="per-label acceptance fractions")
    p.add_argument("--witnesses", type=int, default=0, help="list up to N special forests")
    p.set_defaults(func=cmd_bb)

    p = sub.add_parser("cayley", parents=[common], help="finite Cayley subgraph statistics")
    p.add_argument("--side", choices=["left", "right"], default="right")
    p.add_argument("--gens", default="x0,x1", help="comma separated generator words")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--ball", type=int, default=1)
    g.add_argument("--elements", help="file with one word per line")
    p.add_argument("--doubling", help="compare |AY| with c|Y| for this c")
    p.add_argument("--variant", choices=["plain", "with-inverses-and-identity"], default="plain")
    p.add_argument("--export", help="write the snapshot JSON here")
    p.set_defaults(func=cmd_cayley)

    p = sub.add_parser("evac", parents=[common], help="evacuation schemes by max-flow")
    p.add_argument("snapshot")
    p.add_argument("--C", type=int, default=1)
    p.add_argument("--witness", help="write witness paths here")
    p.set_defaults(func=cmd_evac)

    p = sub.add_parser("ring", parents=[common], help="group ring identities and solver")
    rs = p.add_subparsers(dest="ring_cmd", required=True, parser_class=_Parser)
    q = rs.add_parser("verify", parents=[common])
    q.add_argument("--preset", choices=["one-minus", "012"])
    q.add_argument("--alpha", default="1")
    q.add_argument("--beta", default="1")
    for name in ("a", "u", "b", "v"):
        q.add_argument(f"--{name}")
    q = rs.add_parser("solve", parents=[common])
    q.add_argument("--coef", action="append", default=[], help="repeat: a_1, a_2, ...")
    q.add_argument("--D", type=int, default=1)
    q.add_argument("--I", type=int, default=None)
    q = rs.add_parser("family", parents=[common])
    q.add_argument("--kind", choices=["one-minus", "equal-param"], default="one-minus")
    q.add_argument("--k", type=int, default=0)
    q.add_argument("--beta", default="1")
    q = rs.add_parser("lift", parents=[common])
    q.add_argument("--alpha", default="2")
    q.add_argument("--beta", default="3")
    q = rs.add_parser("relation2uv", parents=[common])
    q.add_argument("word")
    q = rs.add_parser("divides", parents=[common])
    q.add_argument("--pair", action="append", default=[], help="alpha,beta (repeat)")
    q.add_argument("--form", choices=["indexed", "literal"], default="indexed")
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("gamma", parents=[common], help="triple graphs")
    p.add_argument("n", type=int)
    p.add_argument("--scattered", action="store_true", help="scattered model with n carets")
    p.add_argument("--export")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("catalan", parents=[common], help="tree, forest and triple counts")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_catalan)

    p = sub.add_parser("phi", parents=[common], help="height-capped tree polynomials and roots")
    p.add_argument("k")
    p.add_argument("--tol", default="1/1000000")
    p.set_defaults(func=cmd_phi)
    return top


# ------------------------------------------------------------------ output

def _config(args) -> dict:
    skip = {"func", "out", "timing"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def render(args, result: dict, elapsed=None) -> str:
    if args.format == "csv":
        if "rows" not in result:
            raise UsageError(f"{args.command} has no CSV form; use --format json")
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=result["columns"], lineterminator="\n", extrasaction="ignore")
        w.writeheader()
        for r in result["rows"]:
            w.writerow({k: ("" if v is None else v) for k, v in r.items()})
        return buf.getvalue()
    env = {
        "tool": "thompsonf",
        "version": __version__,
        "schema": SCHEMA,
        "command": args.command,
        "config": _config(args),
        "exact": True,
        "result": result,
    }
    if elapsed is not None:
        env["wallTime"] = round(elapsed, 6)
    return json.dumps(env, indent=1, sort_keys=False) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        result = args.func(args)
        text = render(args, result, time.perf_counter() - t0 if args.timing else None)
    except SizeCapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except (ConsistencyError, Disagreement) as e:
        print(f"internal consistency failure: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, WordSyntaxError, RingError, ValueError, OSError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
