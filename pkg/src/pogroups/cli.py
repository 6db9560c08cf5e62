"""Command-line front end: one JSON object per output line.

Exit status: 0 when the verdict is positive or a value was computed, 1 when
the verdict is negative, 2 on malformed input or a domain error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .cones import cone_member, validate_cone
from .dsl import format_rational, format_stack, parse_point, parse_spec
from .errors import DomainError, InputError
from .extensions import directed_join, intersection_harness, is_extension, separating_extension
from .formal import format_formal, fr_dot, fr_sign
from .stacks import Sign, clarify, compare_orders, holder_map, is_archimedean, stack_sign

EXIT_TRUE, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _vec(v):
    return [format_rational(a) for a in v]


def _emit(out, **record):
    out.write(json.dumps(record, separators=(",", ":")) + "\n")


def _load(args):
    return parse_spec(Path(args.file).read_text(encoding="utf-8"))


def cmd_validate(args, out):
    spec = _load(args)
    G = spec.group(args.group)
    ok = True
    for name, C in spec.cones.items():
        try:
            rep = validate_cone(G, C)
        except DomainError as exc:
            _emit(out, object=name, kind="cone", valid=False, reason=str(exc))
            ok = False
            continue
        witness = _vec(rep.pointed_witness) if rep.pure else None
        _emit(out, object=name, kind="cone", pure=rep.pure, directed=rep.directed, witness=witness)
        ok = ok and rep.pure
    for name, S in spec.stacks.items():
        _emit(out, object=name, kind="stack", linear=S.linear, levels=len(S))
        ok = ok and S.linear
    _emit(out, valid=ok, objects=len(spec.names()))
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_closure(args, out):
    spec = _load(args)
    G, C = spec.group(args.group), spec.cone(args.cone)
    p = parse_point(args.point, spec.dim)
    in_group = G.contains(p)
    lam = cone_member(C, p) if in_group else None
    member = lam is not None
    _emit(
        out,
        member=member,
        group_element=in_group,
        coefficients=_vec(lam) if member else None,
    )
    return EXIT_TRUE if member else EXIT_FALSE


def cmd_sign(args, out):
    spec = _load(args)
    S = spec.stack(args.stack)
    p = parse_point(args.point, spec.dim)
    value = next((v for v in (fr_dot(f, p) for f in S.levels) if not v.is_zero()), fr_dot(S.levels[0], p))
    _emit(out, sign=str(stack_sign(S, p)), value=format_formal(value))
    return EXIT_TRUE


def cmd_is_extension(args, out):
    spec = _load(args)
    G, C, S = spec.group(args.group), spec.cone(args.cone), spec.stack(args.stack)
    if S.dim != G.dim:
        raise InputError("dimension mismatch")
    rep = is_extension(S, C, G)
    if rep.is_extension:
        _emit(out, extension=True)
        return EXIT_TRUE
    _emit(out, extension=False, violator=_vec(rep.violating_generator))
    return EXIT_FALSE


def cmd_separate(args, out):
    spec = _load(args)
    G, C = spec.group(args.group), spec.cone(args.cone)
    p = parse_point(args.point, spec.dim)
    S = separating_extension(G, C, p, seed=args.seed)
    _emit(out, stack=format_stack(args.name, S), point=_vec(p), sign=str(stack_sign(S, p)))
    return EXIT_TRUE


def cmd_classify(args, out):
    spec = _load(args)
    G, S = spec.group(args.group), spec.stack(args.stack)
    if not S.linear:
        _emit(out, linear=False, archimedean=None, clarified_levels=len(clarify(S)))
        return EXIT_FALSE
    _emit(out, linear=True, archimedean=is_archimedean(G, S), clarified_levels=len(clarify(S)))
    return EXIT_TRUE


def cmd_equal(args, out):
    spec = _load(args)
    G = spec.group(args.group)
    S1, S2 = spec.stack(args.stack), spec.stack(args.stack2)
    res = compare_orders(G, S1, S2)
    if res.equal:
        _emit(out, equal=True)
        return EXIT_TRUE
    w = res.witness
    _emit(
        out,
        equal=False,
        witness=_vec(w),
        level=res.level,
        signs=[str(stack_sign(S1, w)), str(stack_sign(S2, w))],
    )
    return EXIT_FALSE


def cmd_holder(args, out):
    spec = _load(args)
    G, S = spec.group(args.group), spec.stack(args.stack)
    p = parse_point(args.point, spec.dim)
    if not G.contains(p):
        raise DomainError(f"{_vec(p)} is not a group element")
    h = holder_map(G, S)
    v = h(p)
    _emit(out, value=format_formal(v), decimal=v.to_decimal(args.bits), sign=str(Sign(fr_sign(v))))
    return EXIT_TRUE


def cmd_join(args, out):
    a, b = args.a.replace(",", " ").split(), args.b.replace(",", " ").split()
    if len(a) != len(b):
        raise InputError("points have different dimensions")
    _emit(out, join=_vec(directed_join(parse_point(args.a, len(a)), parse_point(args.b, len(b)))))
    return EXIT_TRUE


def cmd_harness(args, out):
    spec = _load(args)
    G, C = spec.group(args.group), spec.cone(args.cone)
    if args.samples < 0 or args.extensions < 0:
        raise InputError("sample and extension counts must be nonnegative")
    rng = random.Random(f"{args.seed}:samples")
    points = []
    for _ in range(args.samples):
        coeffs = [rng.randint(-args.height, args.height) for _ in G.generators]
        points.append(tuple(sum(c * g[i] for c, g in zip(coeffs, G.generators)) for i in range(spec.dim)))
    rep = intersection_harness(G, C, points, args.extensions, args.seed)
    for pr in rep.points:
        _emit(out, point=_vec(pr.point), member=pr.member, nonneg=pr.nonneg_count, neg=pr.neg_count)
    for v in rep.violations:
        _emit(out, violation=v)
    _emit(out, passed=rep.passed, pool=rep.pool_size, closure_applied=rep.closure_applied)
    return EXIT_TRUE if rep.passed else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="pogroups", description="Orders on torsion-free abelian groups of finite rank.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, fn, help_, *, file=True):
        p = sub.add_parser(name, help=help_)
        if file:
            p.add_argument("file", help="spec file")
        p.set_defaults(fn=fn)
        return p

    p = command("validate", cmd_validate, "check every cone and stack in a file")
    p.add_argument("--group")

    p = command("closure", cmd_closure, "membership in the semiclosed closure")
    p.add_argument("--group")
    p.add_argument("--cone")
    p.add_argument("--point", required=True)

    p = command("sign", cmd_sign, "sign of a point under a stack")
    p.add_argument("--stack")
    p.add_argument("--point", required=True)

    p = command("is-extension", cmd_is_extension, "does a stack extend a cone order")
    p.add_argument("--stack")
    p.add_argument("--cone")
    p.add_argument("--group")

    p = command("separate", cmd_separate, "build an extension making a point negative")
    p.add_argument("--group")
    p.add_argument("--cone")
    p.add_argument("--point", required=True)
    p.add_argument("--name", default="sep", help="name for the printed stack")
    p.add_argument("--seed", type=int, default=None)

    p = command("classify", cmd_classify, "linear and archimedean tests")
    p.add_argument("--stack")
    p.add_argument("--group")

    p = command("equal", cmd_equal, "compare the orders of two stacks")
    p.add_argument("--stack", required=True)
    p.add_argument("--stack2", required=True)
    p.add_argument("--group")

    p = command("holder", cmd_holder, "real value of a point under an archimedean order")
    p.add_argument("--stack")
    p.add_argument("--group")
    p.add_argument("--point", required=True)
    p.add_argument("--bits", type=int, default=64)

    p = command("join", cmd_join, "integer upper bound in the product order", file=False)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = sub.add_parser("harness", help="randomized checks")
    hs = p.add_subparsers(dest="harness", required=True, parser_class=_Parser)
    p = hs.add_parser("intersection", help="closure equals the intersection of extensions")
    p.add_argument("file")
    p.add_argument("--group")
    p.add_argument("--cone")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--extensions", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--height", type=int, default=5, help="coefficient bound for sample points")
    p.set_defaults(fn=cmd_harness)
    return ap


def run_command(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.fn(args, out)
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    except (InputError, DomainError, OSError, UnicodeDecodeError) as exc:
        err.write(f"pogroups: error: {exc}\n")
        return EXIT_ERROR


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
