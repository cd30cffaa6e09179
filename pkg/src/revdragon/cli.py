"""Command-line driver.

Angles are given as signed fractions of a full turn: ``--theta 1/4`` is
pi/2, ``--theta -1/4`` is -pi/2, ``--theta 1/3`` is 2*pi/3.  Complex
parameters are ``re,im``.  Exit status: 0 on success or a passing check,
1 on a failing check, 2 on usage, parse or I/O errors.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Optional, Sequence

from . import fileio, revrep, verify
from .alphabet import Angle, format_word, parse_word
from .errors import RevDragonError
from .ifs import chaos_game, family_ifs, orbit_depth, parse_ifs, preset, preset_params, williams_cloud
from .sequences import Condition, FirstDigitPolicy, RevolvingSequence, enumerate_words
from .series import Family, FamilyParams, evaluate, make_cloud

VALUE_FLAGS = {
    "--theta", "--alpha", "--beta", "--depth", "--tol", "--out", "--seed", "--family",
    "--preset", "--condition", "--length", "--policy", "--word", "--viewport",
    "--depths", "--lengths", "--seq-depth", "--ifs-depth", "--iterations", "--burn-in",
}
_NEGATIVE = re.compile(r"^-[\d.]")


class UsageError(Exception):
    pass


def _complex(text: str) -> complex:
    try:
        re_, im_ = (float(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 're,im', got {text!r}") from None
    return complex(re_, im_)


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(t) for t in text.split(",") if t.strip()]


def _normalize(argv: Sequence[str]) -> list[str]:
    """Glue negative values to their flags so argparse does not read them as options."""
    out: list[str] = []
    i = 0
    argv = list(argv)
    while i < len(argv):
        tok = argv[i]
        if tok in VALUE_FLAGS and i + 1 < len(argv) and _NEGATIVE.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        if _NEGATIVE.match(tok) and "--" not in out:
            out.append("--")
        out.append(tok)
        i += 1
    return out


def _add_params(p: argparse.ArgumentParser, family_required: bool = False):
    p.add_argument("--preset", help="levy, tiling, heighway, twindragon or terdragon")
    p.add_argument("--family", required=family_required, help="x1, x, h1, h, x2sub1, x2, h2sub1, h2, t1, t")
    p.add_argument("--alpha", type=_complex)
    p.add_argument("--beta", type=_complex)
    p.add_argument("--theta", type=Angle.parse)


def _resolve(args, need_family: bool = True) -> tuple[Optional[Family], FamilyParams]:
    fam, params = None, None
    if args.preset:
        fam, params = preset_params(args.preset)
    if getattr(args, "family", None):
        fam = Family.parse(args.family)
    alpha = args.alpha if args.alpha is not None else (params.alpha if params else None)
    theta = args.theta if args.theta is not None else (params.angle if params else None)
    beta = args.beta if args.beta is not None else (params.beta if params else None)
    if alpha is None or theta is None:
        raise UsageError("give --alpha and --theta (or --preset)")
    if need_family and fam is None:
        raise UsageError("give --family (or --preset)")
    return fam, FamilyParams(alpha, theta, beta)


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _policy(text: str) -> FirstDigitPolicy:
    return FirstDigitPolicy(text.lower())


def cmd_enumerate(args) -> int:
    cond = Condition(args.condition.lower())
    lines = [format_word(w.digits) for w in enumerate_words(cond, args.theta, args.length, _policy(args.policy))]
    _emit("".join(line + "\n" for line in lines), args.out)
    return 0


def cmd_evaluate(args) -> int:
    fam, params = _resolve(args)
    word = RevolvingSequence(params.angle, parse_word(args.word, params.angle))
    z = evaluate(fam, params, word)
    _emit(f"{z.real + 0.0:.17g},{z.imag + 0.0:.17g}\n", args.out)
    return 0


def cmd_cloud(args) -> int:
    fam, params = _resolve(args)
    _emit(fileio.format_csv(make_cloud(fam, params, args.depth)), args.out)
    return 0


def cmd_attract(args) -> int:
    if args.ifs:
        with open(args.ifs) as fh:
            system = parse_ifs(fh.read(), label=args.ifs)
    elif args.preset:
        system = preset(args.preset)
    else:
        fam, params = _resolve(args)
        system = family_ifs(fam, params)
    if args.method == "orbit":
        cloud = orbit_depth(system, 0j, args.depth)
    elif args.method == "williams":
        cloud = williams_cloud(system, args.depth)
    else:
        cloud = chaos_game(system, args.iterations, args.seed, args.burn_in)
    _emit(fileio.format_csv(cloud), args.out)
    return 0


def cmd_verify(args) -> int:
    check = args.check
    if check == "count":
        cond = Condition(args.condition.lower())
        angle = args.theta or Angle.parse("1/3")
        report = verify.count_check(cond, _int_list(args.lengths), angle, _policy(args.policy))
    elif check == "scaling":
        _, params = _resolve(args, need_family=False)
        report = verify.check_scaling(params, args.depth, args.tol if args.tol is not None else 1e-12)
    else:
        fam, params = _resolve(args)
        if check == "set-equation":
            report = verify.check_set_equation(fam, params, args.depth, args.tol if args.tol is not None else verify.EXACT_TOL)
        elif check == "rotation-union":
            report = verify.check_rotation_union(fam, params, args.depth, args.tol if args.tol is not None else verify.EXACT_TOL)
        elif check == "convergence":
            report = verify.check_convergence(fam, params, _int_list(args.depths))
        else:
            seq = args.seq_depth if args.seq_depth is not None else args.depth
            ifs_depth = args.ifs_depth if args.ifs_depth is not None else args.depth
            report = verify.check_cross_representation(fam, params, seq, ifs_depth, args.tol)
    _emit(report.to_text(), args.out)
    return 0 if report.passed else 1


def cmd_render(args) -> int:
    cloud = fileio.read_csv(args.input) if args.input != "-" else fileio.parse_csv(sys.stdin.read())
    view = None
    if args.viewport:
        lo_re, hi_re, lo_im, hi_im = (float(t) for t in args.viewport.split(","))
        view = fileio.Viewport(lo_re, hi_re, lo_im, hi_im, args.width, args.height)
    else:
        view = fileio.Viewport.fit(cloud, args.width, args.height)
    _emit(fileio.render(cloud, view, args.mode), args.out)
    return 0


def cmd_revrep(args) -> int:
    if args.action == "encode":
        word = revrep.encode(revrep.GaussianInt.parse(args.value), args.max_len, _policy(args.policy))
        _emit(format_word(word.digits) + "\n", args.out)
    else:
        word = RevolvingSequence(revrep.ANGLE, parse_word(args.value, revrep.ANGLE))
        _emit(f"{revrep.decode(word, _policy(args.policy))}\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="revdragon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list valid digit words")
    p.add_argument("--condition", required=True, choices=["grc", "src", "trc"])
    p.add_argument("--theta", type=Angle.parse, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--policy", default="free", choices=["free", "one"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("evaluate", help="evaluate one word")
    _add_params(p)
    p.add_argument("--word", required=True, help="exponents with z for zero, e.g. 0,z,1")
    p.add_argument("--out")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("cloud", help="series point cloud as CSV")
    _add_params(p)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_cloud)

    p = sub.add_parser("attract", help="IFS point cloud as CSV")
    _add_params(p)
    p.add_argument("--ifs", help="file with one 'a_re,a_im,c_re,c_im,conj' map per line")
    p.add_argument("--method", choices=["orbit", "chaos", "williams"], default="orbit")
    p.add_argument("--depth", type=int, default=10)
    p.add_argument("--iterations", type=int, default=100_000)
    p.add_argument("--burn-in", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_attract)

    p = sub.add_parser("verify", help="run one identity check")
    p.add_argument(
        "check",
        choices=["set-equation", "scaling", "rotation-union", "convergence", "cross-representation", "count"],
    )
    _add_params(p)
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--tol", type=float)
    p.add_argument("--depths", default="4..10")
    p.add_argument("--seq-depth", type=int)
    p.add_argument("--ifs-depth", type=int)
    p.add_argument("--condition", default="grc", choices=["grc", "src", "trc"])
    p.add_argument("--lengths", default="0..8")
    p.add_argument("--policy", default="one", choices=["free", "one"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="CSV cloud to plain PGM")
    p.add_argument("--in", dest="input", required=True, help="CSV path or - for stdin")
    p.add_argument("--out")
    p.add_argument("--width", type=int, default=512)
    p.add_argument("--height", type=int, default=512)
    p.add_argument("--viewport", help="min_re,max_re,min_im,max_im")
    p.add_argument("--mode", choices=["binary", "log_density"], default="binary")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("revrep", help="revolving representations in base 1+i")
    p.add_argument("action", choices=["encode", "decode"])
    p.add_argument("value", help="x,y for encode; digit word for decode")
    p.add_argument("--max-len", type=int, default=12)
    p.add_argument("--policy", default="free", choices=["free", "one"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_revrep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = parser.parse_args(_normalize(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, RevDragonError, ValueError, OSError) as exc:
        print(f"revdragon: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
