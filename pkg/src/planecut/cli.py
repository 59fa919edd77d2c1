"""Command line front end.

Instance files look like::

    # comment
    maximize 0 1
    subject
    1 0 4
    -5 8 0

Each row ``a1 a2 b`` means ``a1*x1 + a2*x2 <= b``.  The ``maximize`` line
may be left out for commands that ignore the objective.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .closure import (DEFAULT_DEPTH, chvatal_closure, split_closure,
                      split_rank_check)
from .geometry import GeometryError, HalfPlane, Point, Polyhedron
from .hull import polyhedron_hull
from .oracle import (Box, boxed_hull, brute_chvatal_closure, brute_ip,
                     brute_split_closure, verify_divergence)
from .solver import NotPointed, Unbounded, solve
from .svg import region_picture, solve_picture
from .tilt import InvariantViolation

SCHEMA = 1
EXIT_OK, EXIT_INFEASIBLE, EXIT_UNBOUNDED, EXIT_PARSE, EXIT_INVARIANT = 0, 2, 3, 4, 5


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


@dataclass
class Instance:
    objective: tuple[int, int] | None
    rows: list[tuple[int, int, int]]

    def polyhedron(self) -> Polyhedron:
        return Polyhedron.from_rows(self.rows)


def _ints(tokens, line: int, n: int, what: str) -> list[int]:
    if len(tokens) != n:
        col = tokens[-1][0] if tokens else 1
        raise ParseError(f"{what} needs {n} integers, got {len(tokens)}", line, col)
    out = []
    for col, tok in tokens:
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"not an integer: {tok!r}", line, col) from None
    return out


def _tokens(text: str):
    out = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        j = i
        while j < len(text) and not text[j].isspace():
            j += 1
        out.append((i + 1, text[i:j]))
        i = j
    return out


def parse(text: str) -> Instance:
    objective = None
    rows: list[tuple[int, int, int]] = []
    state = "start"
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        head = toks[0][1]
        if state == "start" and head == "maximize":
            objective = tuple(_ints(toks[1:], n, 2, "objective"))
            state = "objective"
        elif state in ("start", "objective") and head == "subject":
            if len(toks) > 1:
                raise ParseError("unexpected text after 'subject'", n, toks[1][0])
            state = "rows"
        elif state == "rows":
            row = tuple(_ints(toks, n, 3, "row"))
            if row[0] == 0 and row[1] == 0:
                raise ParseError("row with zero normal", n, toks[0][0])
            rows.append(row)
        else:
            expect = "'maximize' or 'subject'" if state == "start" else "'subject'"
            raise ParseError(f"expected {expect}, got {head!r}", n, toks[0][0])
    if state != "rows":
        raise ParseError("missing 'subject' section", max(1, len(text.splitlines())), 1)
    if not rows:
        raise ParseError("no rows", max(1, len(text.splitlines())), 1)
    return Instance(objective, rows)


# ----------------------------------------------------------------------------
# JSON encoding


def num(q):
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def enc_point(p: Point | None):
    return None if p is None else [num(p.x1), num(p.x2)]


def enc_row(h: HalfPlane | None):
    return None if h is None else [h.a1, h.a2, num(h.b)]


def enc_poly(P: Polyhedron) -> dict:
    return {"dim": P.dim, "rows": [enc_row(h) for h in P.rows],
            "vertices": [enc_point(v) for v in P.vertices],
            "rays": [list(r) for r in P.rays]}


def enc_record(r) -> dict:
    return {"index": r.index, "kind": r.kind, "rows": r.rows,
            "vertex": enc_point(r.vertex), "late": enc_row(r.late),
            "early": enc_row(r.early), "cut": enc_row(r.cut),
            "pivot": enc_point(r.pivot), "family": r.family, "E": r.E, "L": r.L}


def default_box(*polys: Polyhedron, margin: int = 3) -> Box:
    pts = [v for P in polys if not P.is_empty for v in P.vertices]
    if not pts:
        return Box.square(margin)
    r = max(max(abs(p.x1), abs(p.x2)) for p in pts)
    return Box.square(int(r) + 1 + margin)


# ----------------------------------------------------------------------------
# commands


def cmd_solve(inst: Instance, args) -> tuple[dict, int]:
    if inst.objective is None:
        raise ParseError("solve needs a 'maximize' line", 1, 1)
    P = inst.polyhedron()
    res = solve(P, inst.objective, cap_constant=args.cap_constant)
    out = {"status": res.status, "point": enc_point(res.point),
           "value": None if res.value is None else num(res.value),
           "cuts": len(res.cuts), "iterations": res.iterations}
    if args.trace:
        out["trace"] = [enc_record(r) for r in res.trace]
    if args.check:
        box = Box.square(args.box) if args.box else None
        ref = brute_ip(P, inst.objective, box)
        same = ref.status == res.status and (ref.value is None or ref.value == res.value)
        out["oracle"] = "match" if same else "mismatch"
    if args.svg:
        _write(args.svg, solve_picture(P, res.trace))
    return out, EXIT_OK if res.status == "optimal" else EXIT_INFEASIBLE


def cmd_hull(inst: Instance, args) -> tuple[dict, int]:
    P = inst.polyhedron()
    H = polyhedron_hull(P)
    out = {"status": "infeasible" if H.is_empty else "ok", "hull": enc_poly(H)}
    if args.check:
        box = Box.square(args.box) if args.box else default_box(P, H)
        same = boxed_hull(P, box).same_set(boxed_hull(H, box))
        out["oracle"] = "match" if same else "mismatch"
    if args.svg:
        _write(args.svg, region_picture(P, H))
    return out, EXIT_INFEASIBLE if H.is_empty else EXIT_OK


def _closure_cmd(inst: Instance, args, fn, brute) -> tuple[dict, int]:
    P = inst.polyhedron()
    res = fn(P, args.depth)
    Q = res.closure
    out = {"status": "infeasible" if Q.is_empty else "ok", "closure": enc_poly(Q),
           "rows": [enc_row(h) for h in Q.rows], "certified": res.certified}
    if args.check:
        bound = args.norm_bound or 2 * max(P.max_normal(), 1)
        out["oracle"] = "match" if brute(P, bound).same_set(Q) else "mismatch"
        out["norm_bound"] = bound
    if args.svg:
        _write(args.svg, region_picture(P, Q))
    return out, EXIT_INFEASIBLE if Q.is_empty else EXIT_OK


def cmd_chvatal(inst, args):
    return _closure_cmd(inst, args, chvatal_closure, brute_chvatal_closure)


def cmd_split_closure(inst, args):
    return _closure_cmd(inst, args, split_closure, brute_split_closure)


def cmd_rank(inst: Instance, args) -> tuple[dict, int]:
    P = inst.polyhedron()
    rep = split_rank_check(P, args.depth)
    out = {"status": "ok" if rep.ok else "failure", "rank": rep.rank,
           "hull": enc_poly(rep.hull), "first": enc_poly(rep.first),
           "certified": rep.certified}
    return out, EXIT_OK if rep.ok else EXIT_INVARIANT


def cmd_divergence(args) -> tuple[dict, int]:
    steps = verify_divergence(args.steps)
    ok = all(s.ok for s in steps)
    out = {"status": "reproduced" if ok else "failed", "steps": len(steps)}
    if args.trace:
        out["cuts"] = [enc_row(s.cut) for s in steps]
    if not ok:
        out["first_failure"] = next(s.index for s in steps if not s.ok)
    return out, EXIT_OK if ok else EXIT_INVARIANT


COMMANDS = {"solve": cmd_solve, "hull": cmd_hull, "chvatal": cmd_chvatal,
            "split-closure": cmd_split_closure, "rank": cmd_rank}


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="planecut",
                                 description="Exact cutting planes for two-variable integer programs")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("instance", help="instance file, '-' for stdin")
        p.add_argument("--trace", action="store_true", help="include the iteration trace")
        p.add_argument("--svg", metavar="PATH", help="write a picture")
        p.add_argument("--check", action="store_true", help="compare with the brute-force oracle")
        p.add_argument("--box", type=int, metavar="N", help="oracle box [-N, N]^2")
        p.add_argument("--norm-bound", type=int, metavar="N", help="oracle normal bound")
        p.add_argument("--depth", type=int, default=DEFAULT_DEPTH, metavar="N",
                       help="Chvatal closure enumeration depth")
        p.add_argument("--cap-constant", type=int, default=64, metavar="K",
                       help="iteration cap constant")
    p = sub.add_parser("divergence")
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--trace", action="store_true")
    return ap


def run(argv=None, stdin=None) -> tuple[dict, int]:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "divergence":
            out, code = cmd_divergence(args)
        else:
            if args.instance == "-":
                text = (stdin or sys.stdin).read()
            else:
                with open(args.instance, encoding="utf-8") as f:
                    text = f.read()
            out, code = COMMANDS[args.command](parse(text), args)
    except ParseError as e:
        out, code = {"status": "parse-error", "error": str(e), "line": e.line,
                     "column": e.col}, EXIT_PARSE
    except OSError as e:
        out, code = {"status": "parse-error", "error": str(e)}, EXIT_PARSE
    except Unbounded as e:
        out, code = {"status": "unbounded", "error": str(e)}, EXIT_UNBOUNDED
    except NotPointed as e:
        out, code = {"status": "not-pointed", "error": str(e)}, EXIT_UNBOUNDED
    except (InvariantViolation, GeometryError) as e:
        out, code = {"status": "invariant-violation", "error": str(e)}, EXIT_INVARIANT
    out["schema"] = SCHEMA
    return out, code


def dumps(out: dict) -> str:
    return json.dumps(out, sort_keys=True, separators=(",", ":"))


def main(argv=None) -> int:
    out, code = run(argv)
    print(dumps(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
