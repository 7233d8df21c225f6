"""Command-line entry point: ``qtorus verify|classify|eval|model``.

Exit status: 0 when every counted check passes, 1 on failures, 2 on configuration
or input errors (reported before any computation).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .config import SessionConfig, load_config
from .errors import BadTruncation, CatalogMissing, ConductorMismatch, ConfigError, ExprSyntaxError, IndexOutOfRange
from .model import Model, ModelSpace
from .parser import parse_element
from .suites import SUITES, run_induction, run_model, run_suite
from .torus import ThetaMatrix

INPUT_ERRORS = (ConfigError, ExprSyntaxError, CatalogMissing, BadTruncation, ConductorMismatch, IndexOutOfRange)
MAX_CLASSIFY_N = 4

# used by `model` when no --config is given
DEFAULT_MODEL = SessionConfig(2, ThetaMatrix.from_upper(2, {(1, 2): Fraction(1, 3)}))


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _corep_export(c) -> dict:
    return {"label": [list(c.label[0]), c.label[1]], "dim": c.dim,
            "matrix": [[str(x) for x in row] for row in c.entries]}


def cmd_verify(args) -> int:
    cfg = load_config(args.config)
    rep = run_suite(args.suite, cfg)
    _emit(rep.to_json(), args.out)
    return 0 if rep.passed else 1


def cmd_classify(args) -> int:
    cfg = load_config(args.config)
    if cfg.n > MAX_CLASSIFY_N:
        raise ConfigError(f"classification needs n <= {MAX_CLASSIFY_N}, got n={cfg.n}")
    bound = cfg.degree_bound if args.bound is None else args.bound
    if bound < 0:
        raise ConfigError("--bound must be non-negative")
    rep, cl = run_induction(cfg, bound, formulas=False)
    if args.coreps:
        rep.notes["coreps"] = [_corep_export(c) for c in cl.coreps]
    _emit(rep.to_json(), args.out)
    return 0 if rep.passed else 1


def cmd_eval(args) -> int:
    cfg = load_config(args.config)
    a = parse_element(args.expr, cfg.theta, cfg.conductor, args.kind)
    _emit(str(a), args.out)
    return 0


def cmd_model(args) -> int:
    cfg = load_config(args.config) if args.config else DEFAULT_MODEL
    M = args.M if args.M is not None else cfg.M
    if M <= 0:
        raise ConfigError("--M must be positive")
    ModelSpace(cfg.theta, M, cfg.conductor)  # BadTruncation before any work
    rep = run_model(cfg, M, pairs=args.pairs)
    if args.triplets:
        mdl = Model(ModelSpace(cfg.theta, M, cfg.conductor))
        lines = []
        for (i, k), op in sorted(mdl.U_sparse.items()):
            lines.append(f"# U[{i},{k}]")
            lines.append(str(op))
        with open(args.triplets, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    _emit(rep.to_json(), args.out)
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qtorus", description="Exact checks for the quantum symmetry group G_theta.")
    sub = p.add_subparsers(dest="cmd", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--config", required=True)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classify", help="classify irreducible corepresentations up to a degree bound")
    c.add_argument("--config", required=True)
    c.add_argument("--bound", type=int)
    c.add_argument("--coreps", action="store_true", help="include corep matrices in the report")
    c.add_argument("--out")
    c.set_defaults(func=cmd_classify)

    e = sub.add_parser("eval", help="parse and normalize an element")
    e.add_argument("expr")
    e.add_argument("--config", required=True)
    e.add_argument("--kind", choices=("torus", "multi"))
    e.add_argument("--out")
    e.set_defaults(func=cmd_eval)

    m = sub.add_parser("model", help="check the finite operator model")
    m.add_argument("--M", type=int)
    m.add_argument("--config")
    m.add_argument("--pairs", type=int, default=200)
    m.add_argument("--triplets", help="write U_ik as (row, col, coefficient) lines")
    m.add_argument("--out")
    m.set_defaults(func=cmd_model)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
