# ------------------ betti_cli.py -------------------
"""
Betti Lab - Command Line Entrypoint

Overview for devs:
- One sub-command per job: classify, betti, decompose, pd, scarf, strand,
  check, verify, fuzz (alias: conjectures) and suites.
- Every sub-command shares the same flag block (--method, --field, --format,
  --seed, --max-gens, ...). Values are layered by utils.run_config, so
  BETTI_* env vars and --config YAML work for every command.
- Results go to stdout; warnings, progress and mismatch narratives go to stderr.

Exit statuses:
    0  success
    1  verification mismatch, suite failure, or a violated theorem
    2  usage, parse, field or config error
    3  resource cap exceeded
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Callable

from utils.algebra import formatters as fmt
from utils.algebra.decompose import first_decomposition, second_decomposition
from utils.algebra.errors import (
    AlgebraError,
    FieldSpecError,
    IdealDomainError,
    IdealParseError,
    ResourceCapError,
    TheoremViolationError,
    VerificationMismatchError,
)
from utils.algebra.ideals import MonomialIdeal, classify, load_ideal
from utils.algebra.schema import parse_monomial
from utils.algebra.taylor import build_scarf, build_taylor
from utils.betti_engine import (
    METHODS,
    artinian_check,
    betti,
    characteristic_check,
    is_scarf,
    min_hdeg_check,
    no_nondominant_part_check,
    pd,
    pd2_check,
    pdn_check,
    verify_methods,
)
from utils.conjecture_fuzz import CONJECTURES, FuzzParams, all_suites, conjecture_fuzz, random_batch
from utils.diagnostics import build_narrative
from utils.run_config import ConfigError, RunConfig, configure_logging, load_run_config, read_version

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3

EXIT_CODES: dict[type[Exception], int] = {
    ResourceCapError: EXIT_CAP,
    VerificationMismatchError: EXIT_FAILED,
    TheoremViolationError: EXIT_FAILED,
    IdealParseError: EXIT_USAGE,
    FieldSpecError: EXIT_USAGE,
    ConfigError: EXIT_USAGE,
    IdealDomainError: EXIT_USAGE,
}


def exit_code_for(error: Exception) -> int:
    for cls in type(error).__mro__:
        if cls in EXIT_CODES:
            return EXIT_CODES[cls]
    return EXIT_USAGE


# ---------------- Helpers ----------------

def _ideal(cfg: RunConfig) -> MonomialIdeal:
    return load_ideal(cfg.read_ideal_text())


def _emit(text: str) -> None:
    sys.stdout.write(text.rstrip("\n") + "\n")


def _fuzz_params(cfg: RunConfig) -> FuzzParams:
    return FuzzParams(
        vars=cfg.vars,
        gens=cfg.gens,
        max_exp=cfg.max_exp,
        artinian=cfg.artinian,
        almost_generic=cfg.almost_generic,
        semidominant=cfg.semidominant,
    )


# ---------------- Commands ----------------

def cmd_classify(cfg: RunConfig) -> int:
    M = _ideal(cfg)
    report = classify(M)
    if cfg.output_format == "json":
        _emit(fmt.dumps(fmt.dominance_to_json(M, report)))
    else:
        _emit(fmt.dominance_to_text(M, report))
    return EXIT_OK


def cmd_betti(cfg: RunConfig) -> int:
    M = _ideal(cfg)
    table = betti(M, cfg.method, cfg.field_spec, cap=cfg.max_gens, order_seed=cfg.seed)
    if cfg.output_format == "json":
        _emit(fmt.dumps(fmt.betti_to_json(table)))
    else:
        _emit(fmt.betti_to_text(table, M.variables))
        _emit(fmt.betti_diagram_text(table))
    return EXIT_OK


def cmd_decompose(cfg: RunConfig, tree: bool = False) -> int:
    M = _ideal(cfg)
    if not tree:
        terms = first_decomposition(M, cap=cfg.max_gens)
        if cfg.output_format == "json":
            _emit(fmt.dumps(fmt.terms_to_json(terms)))
        else:
            _emit(fmt.terms_to_text(terms))
        return EXIT_OK
    root = second_decomposition(M, max_depth=cfg.max_depth, cap=cfg.max_gens)
    if cfg.output_format == "json":
        _emit(fmt.dumps(fmt.tree_to_json(root)))
    elif cfg.output_format == "dot":
        _emit(fmt.tree_to_dot(root))
    else:
        _emit(fmt.tree_to_text(root))
        _emit("")
        _emit(fmt.leaves_to_text(root))
    return EXIT_OK


def cmd_pd(cfg: RunConfig) -> int:
    M = _ideal(cfg)
    value = pd(M, cfg.method, cfg.field_spec, cap=cfg.max_gens)
    if cfg.output_format == "json":
        _emit(fmt.dumps({"field": cfg.field, "method": cfg.method, "pd": value}))
    else:
        _emit(str(value))
    return EXIT_OK


def cmd_scarf(cfg: RunConfig) -> int:
    M = _ideal(cfg)
    T = build_taylor(M.generators, n=M.n, cap=cfg.max_gens)
    faces = build_scarf(T)
    scarf = is_scarf(M, cap=cfg.max_gens)
    if cfg.output_format == "json":
        _emit(fmt.dumps({"is_scarf": scarf, "faces": fmt.faces_to_json(faces)}))
    else:
        _emit(fmt.faces_to_text(faces, M.variables))
        _emit(f"# {len(faces)} of {T.size} faces; Scarf complex is {'' if scarf else 'not '}minimal")
    return EXIT_OK


def cmd_strand(cfg: RunConfig, mdeg: str) -> int:
    M = _ideal(cfg)
    T = build_taylor(M.generators, n=M.n, cap=cfg.max_gens)
    l = parse_monomial(mdeg, M.variables)
    if cfg.output_format == "dot":
        _emit(fmt.strand_to_dot(T, l, M.variables))
    elif cfg.output_format == "json":
        _emit(fmt.dumps(fmt.faces_to_json(T.faces_with_mdeg(l))))
    else:
        _emit(fmt.faces_to_text(T.faces_with_mdeg(l), M.variables) or "(no faces)")
    return EXIT_OK


def cmd_check(cfg: RunConfig) -> int:
    M = _ideal(cfg)
    table = betti(M, cfg.method, cfg.field_spec, cap=cfg.max_gens)
    report = characteristic_check(M, table, cap=cfg.max_gens)
    checks = [
        pd2_check(M, table),
        pdn_check(M, table),
        artinian_check(M, table),
        no_nondominant_part_check(M, table, cap=cfg.max_gens),
        min_hdeg_check(M, table),
    ]
    if cfg.output_format == "json":
        _emit(fmt.dumps({
            "characteristic": report.is_characteristic,
            "min_hdeg": report.min_hdeg_ok,
            "checks": [{"name": c.name, "applies": c.applies, "holds": c.holds, "detail": c.detail} for c in checks],
        }))
    else:
        _emit(f"characteristic Betti numbers: {report.is_characteristic}")
        _emit(f"  in minimal homological degrees: {report.min_hdeg_ok}")
        for c in checks:
            state = "n/a" if not c.applies else ("holds" if c.holds else "FAILS")
            _emit(f"{c.name}: {state}{'  ' + c.detail if c.applies and c.detail else ''}")
    return EXIT_FAILED if any(c.failed for c in checks) else EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    field = cfg.field_spec
    if cfg.ideal_text is not None or cfg.input_path is not None:
        batch = [(cfg.seed, _ideal(cfg))]
    else:
        batch = random_batch(cfg.count, cfg.seed, _fuzz_params(cfg))
    rows, mismatches = [], 0
    for s, M in batch:
        cmp = verify_methods(M, field, METHODS, cap=cfg.max_gens, order_seed=s)
        if not cmp.agree:
            mismatches += 1
            logging.error("%s", build_narrative(cmp))
        rows.append({"seed": s, "ideal": [list(g.exponents) for g in M.generators], "agree": cmp.agree,
                     "totals": cmp.tables["oracle"].totals})
    if cfg.output_format == "json":
        _emit(fmt.dumps({"field": str(field), "tested": len(rows), "mismatches": mismatches, "instances": rows}))
    else:
        _emit(f"{len(rows)} ideal(s) over {field}: {mismatches} mismatch(es)")
    if mismatches:
        raise VerificationMismatchError(f"{mismatches} of {len(rows)} ideal(s) got different tables from different methods")
    return EXIT_OK


def cmd_fuzz(cfg: RunConfig) -> int:
    which = [cfg.conjecture] if cfg.conjecture else list(CONJECTURES)
    params = _fuzz_params(cfg)
    reports = [
        conjecture_fuzz(w, params, budget=cfg.count, seed=cfg.seed, method=cfg.method,
                        field=cfg.field_spec, cap=cfg.max_gens)
        for w in which
    ]
    if cfg.output_format == "json":
        docs = [fmt.fuzz_report_to_json(r) for r in reports]
        _emit(fmt.dumps(docs[0] if len(docs) == 1 else docs))
    else:
        for r in reports:
            _emit(fmt.fuzz_report_to_text(r))
    return EXIT_OK


def cmd_suites(cfg: RunConfig, scale: float) -> int:
    results = all_suites(seed=cfg.seed, scale=scale)
    if cfg.output_format == "json":
        _emit(fmt.dumps([fmt.suite_to_json(r) for r in results]))
    else:
        for r in results:
            _emit(fmt.suite_to_text(r))
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAILED


# ---------------- Argument parsing ----------------

def _common_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--method", choices=METHODS, default=None)
    p.add_argument("--field", default=None, help="Q or Fp:<prime>")
    p.add_argument("--format", dest="output_format", choices=("text", "json", "dot"), default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-gens", dest="max_gens", type=int, default=None, help="face cap on the generator count")
    p.add_argument("--max-depth", dest="max_depth", type=int, default=None)
    p.add_argument("--input", dest="input_path", default=None, help="read the ideal from a file ('-' for stdin)")
    p.add_argument("--config", dest="config_path", default=None, help="YAML file of RunConfig values")
    p.add_argument("--log-level", dest="log_level", default=None)
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--vars", type=int, default=None)
    p.add_argument("--gens", type=int, default=None)
    p.add_argument("--max-exp", dest="max_exp", type=int, default=None)
    p.add_argument("--artinian", action="store_true", default=None)
    p.add_argument("--almost-generic", dest="almost_generic", action="store_true", default=None)
    p.add_argument("--semidominant", type=int, default=None, metavar="P")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(prog="betti_cli", description="Multigraded Betti numbers of monomial ideals.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {read_version()}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("classify", "dominance report"),
        ("betti", "multigraded Betti table"),
        ("pd", "projective dimension"),
        ("scarf", "Scarf faces"),
        ("check", "characteristic and pd criteria checks"),
    ):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("ideal", nargs="?", default=None)

    sp = sub.add_parser("decompose", parents=[common], help="structural decomposition")
    sp.add_argument("ideal", nargs="?", default=None)
    sp.add_argument("--tree", action="store_true", help="full recursive decomposition")

    sp = sub.add_parser("strand", parents=[common], help="faces of one multidegree")
    sp.add_argument("ideal", nargs="?", default=None)
    sp.add_argument("--mdeg", required=True, help="multidegree as a monomial, e.g. a^3*b^2*c")

    sp = sub.add_parser("verify", parents=[common], help="compare all three methods")
    sp.add_argument("ideal", nargs="?", default=None)

    for name in ("fuzz", "conjectures"):
        sp = sub.add_parser(name, parents=[common], help="search for conjecture counterexamples")
        sp.add_argument("--conjecture", choices=CONJECTURES, default=None)

    sp = sub.add_parser("suites", parents=[common], help="run the acceptance suites")
    sp.add_argument("--scale", type=float, default=1.0)
    return parser


_OVERRIDE_KEYS = (
    "method", "field", "output_format", "seed", "max_gens", "max_depth", "input_path", "log_level",
    "count", "vars", "gens", "max_exp", "artinian", "almost_generic", "semidominant", "conjecture",
)


def _dispatch(cfg: RunConfig, args: argparse.Namespace) -> int:
    handlers: dict[str, Callable[[], int]] = {
        "classify": lambda: cmd_classify(cfg),
        "betti": lambda: cmd_betti(cfg),
        "decompose": lambda: cmd_decompose(cfg, tree=args.tree),
        "pd": lambda: cmd_pd(cfg),
        "scarf": lambda: cmd_scarf(cfg),
        "strand": lambda: cmd_strand(cfg, args.mdeg),
        "check": lambda: cmd_check(cfg),
        "verify": lambda: cmd_verify(cfg),
        "fuzz": lambda: cmd_fuzz(cfg),
        "conjectures": lambda: cmd_fuzz(cfg),
        "suites": lambda: cmd_suites(cfg, args.scale),
    }
    return handlers[args.command]()


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    overrides: dict[str, Any] = {k: getattr(args, k, None) for k in _OVERRIDE_KEYS}
    overrides["command"] = args.command
    overrides["ideal_text"] = getattr(args, "ideal", None)
    try:
        cfg = load_run_config(overrides, config_path=args.config_path)
    except AlgebraError as e:
        sys.stderr.write(f"error: {e}\n")
        return exit_code_for(e)

    configure_logging(cfg.log_level)
    try:
        return _dispatch(cfg, args)
    except AlgebraError as e:
        logging.error("%s", e)
        return exit_code_for(e)


if __name__ == "__main__":
    sys.exit(main())
