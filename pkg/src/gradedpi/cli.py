"""Command-line front end.

Exit codes: 0 success, 1 negative verdict (not an identity, degenerate
grading), 2 configuration or input error, 3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys

from .config import ConfigError, load_config, parse_universe
from .errors import GradedPIError, InvariantViolation
from .freealg import basis_generators, monomial_word, multihomogeneous_components
from .generic import canonical_form, is_graded_identity
from .monomials import (
    IRREDUCIBLE,
    classify_grading,
    enumerate_monomial_identities,
    is_strong,
    reduce_monomial,
)
from .parsing import Notation, format_word, parse, pretty_print
from .scalars import coefficient_ring, scalar_str

EXIT_OK, EXIT_NEGATIVE, EXIT_CONFIG, EXIT_BUG = 0, 1, 2, 3


class Output:
    """Collects human lines and JSON records; prints one or the other."""

    def __init__(self, as_json: bool, stream):
        self.as_json = as_json
        self.stream = stream

    def emit(self, text: str, record: dict):
        if self.as_json:
            self.stream.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")
        elif text is not None:
            self.stream.write(text + "\n")


def _word(seq) -> str:
    return format_word(monomial_word(seq))


def _unit(pair) -> str:
    return f"e{pair[0]}{pair[1]}" if max(pair) < 10 else f"e{pair[0]},{pair[1]}"


# -- commands -------------------------------------------------------------------------

def cmd_analyze(cfg, args, out):
    B = cfg.algebra
    out.emit(
        f"algebra: M_{B.n} subalgebra of dimension {len(B.units)}, group {B.group}, tuple ({', '.join(map(str, B.tuple_))})",
        {"record": "algebra", "n": B.n, "dimension": len(B.units), "group": str(B.group),
         "tuple": [str(g) for g in B.tuple_]},
    )
    out.emit(
        "support: " + " ".join(str(g) for g in B.support),
        {"record": "support", "degrees": [str(g) for g in B.support]},
    )
    for g in B.support:
        units = B.component_basis(g)
        table = B.partial_map(g).as_dict()
        out.emit(
            f"component {g}: dim {len(units)}; units {' '.join(_unit(u) for u in units)}; "
            f"map {' '.join(f'{i}->{j}' for i, j in table.items())}",
            {"record": "component", "degree": str(g), "dimension": len(units),
             "units": [list(u) for u in units], "map": {str(i): j for i, j in table.items()}},
        )
    return EXIT_OK


def cmd_monomials(cfg, args, out):
    B = cfg.algebra
    bound = args.max_deg if args.max_deg is not None else 2 * B.n - 1
    words = enumerate_monomial_identities(B, bound, args.threads)
    for w in words:
        cert = reduce_monomial(B, w)
        if cert is IRREDUCIBLE:
            text, steps, final = "irreducible", [], w
        else:
            steps, final = cert.to_json(), cert.final
            parts = []
            for s in cert.steps:
                move = f"R1[{s.span[0]},{s.span[1]}]" if s.move == "R1" else f"R2[{s.at}]"
                parts.append(f"{move} -> {_word(s.result)}")
            text = "; ".join(parts)
        out.emit(
            f"{_word(w)}  {text}",
            {"record": "identity", "word": [str(g) for g in w], "monomial": _word(w),
             "certificate": steps, "final": [str(g) for g in final]},
        )
    summary = f"{len(words)} monomial identities up to degree {bound}"
    if not words:
        summary += "; nondegenerate up to bound"
    out.emit(summary, {"record": "summary", "count": len(words), "max_deg": bound})
    return EXIT_OK


def cmd_basis(cfg, args, out):
    B = cfg.algebra
    nt = Notation(B.group)
    for tag, f in basis_generators(B, cfg.degree_universe):
        text = pretty_print(f, nt)
        out.emit(f"{tag} {text}", {"record": "generator", "tag": tag, "polynomial": text})
    return EXIT_OK


def cmd_check(cfg, args, out):
    if args.expr_file:
        try:
            with open(args.expr_file, encoding="utf-8") as fh:
                exprs = [line.strip() for line in fh if line.strip() and not line.startswith("#")]
        except OSError as exc:
            raise ConfigError(f"cannot read {args.expr_file}: {exc.strerror}") from None
    elif args.expr:
        exprs = [args.expr]
    else:
        raise ConfigError("check needs -e EXPR or --expr-file FILE")
    worst = EXIT_OK
    for expr in exprs:
        worst = max(worst, _check_one(cfg, args, out, expr))
    return worst


def _check_one(cfg, args, out, expr):
    B = cfg.algebra
    nt = Notation(B.group, modular=args.modular_literals)
    f = parse(expr, nt)
    ring = coefficient_ring(cfg.modulus)
    verdict = is_graded_identity(B, f, ring)
    out.emit(
        f"identity: {'true' if verdict else 'false'}",
        {"record": "verdict", "identity": verdict, "polynomial": pretty_print(f, nt),
         "field": "Q" if cfg.modulus is None else f"GF({cfg.modulus})"},
    )
    for part, comp in enumerate(multihomogeneous_components(f), start=1):
        cf = canonical_form(B, comp, ring)
        for cls in cf.classes:
            fp = str(cls.fingerprint)
            out.emit(
                f"component {part}: class [{fp}] coefficient sum {scalar_str(cls.coefficient_sum)} "
                f"({len(cls.members)} monomials)",
                {"record": "class", "component": part, "fingerprint": fp,
                 "coefficient_sum": scalar_str(cls.coefficient_sum), "members": len(cls.members)},
            )
        if cf.identity_monomials:
            out.emit(
                f"component {part}: {len(cf.identity_monomials)} monomials are identities",
                {"record": "identity_monomials", "component": part, "count": len(cf.identity_monomials)},
            )
    return EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_classify(cfg, args, out):
    B = cfg.algebra
    c = classify_grading(B, cfg.degree_universe)
    if B.group.is_finite:
        strong = is_strong(B)
        strong_text = "strong" if strong else "not strong"
    else:
        strong, strong_text = None, "strongness undefined for an infinite group"
    if c.nondegenerate:
        text = f"nondegenerate; {strong_text}"
    else:
        text = f"degenerate, witness {_word(c.witness)}; {strong_text}"
    out.emit(
        text,
        {"record": "classification", "nondegenerate": c.nondegenerate,
         "witness": None if c.witness is None else _word(c.witness), "strong": strong,
         "checked_up_to": c.checked_up_to},
    )
    return EXIT_OK if c.nondegenerate else EXIT_NEGATIVE


def cmd_tensor(cfg, args, out):
    from .tensor import model_for, super_group, tensor_evaluate, transform_basis
    from .groups import direct_product

    if cfg.tensor is None:
        raise ConfigError("the configuration has no tensor section")
    B, beta = cfg.algebra, cfg.tensor.beta
    truncation = args.truncation if args.truncation is not None else cfg.tensor.truncation
    if beta.is_grassmann():
        nt = Notation(super_group(B.group), parity=True)
    else:
        nt = Notation(direct_product(B.group, beta.group))
    images = transform_basis(B, beta, cfg.degree_universe)
    arity = max((len(f.variables()) for _, f in images), default=1)
    model = model_for(beta, arity) if truncation is None else _model_at(beta, arity, truncation)
    failures = 0
    for tag, f in images:
        ok = tensor_evaluate(B, model, f, args.threads)
        failures += not ok
        text = pretty_print(f, nt)
        out.emit(f"{tag} {text}", {"record": "transformed", "tag": tag, "polynomial": text, "vanishes": ok})
    out.emit(
        f"verified {len(images) - failures}/{len(images)} on {model!r}",
        {"record": "model_report", "model": repr(model), "checked": len(images), "failures": failures},
    )
    if failures:
        raise InvariantViolation(f"{failures} transported generators do not vanish on {model!r}")
    return EXIT_OK


def _model_at(beta, arity, truncation):
    from .errors import TruncationTooSmallError
    from .tensor import model_for

    if truncation < arity:
        raise TruncationTooSmallError(f"truncation {truncation} is below the largest arity {arity}")
    return model_for(beta, arity, truncation)


def cmd_verify(cfg, args, out):
    from .invariants import run_suite

    results = run_suite(cfg.algebra, cfg.degree_universe, cfg.tensor, args.threads)
    failed = 0
    for name, ok, detail in results:
        failed += not ok
        out.emit(f"{'ok  ' if ok else 'FAIL'} {name}: {detail}",
                 {"record": "check", "name": name, "passed": ok, "detail": detail})
    out.emit(f"{len(results) - failed}/{len(results)} checks passed",
             {"record": "summary", "passed": len(results) - failed, "total": len(results)})
    return EXIT_OK if not failed else EXIT_BUG


COMMANDS = {
    "analyze": cmd_analyze,
    "monomials": cmd_monomials,
    "basis": cmd_basis,
    "check": cmd_check,
    "classify": cmd_classify,
    "tensor": cmd_tensor,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gradedpi", description="Graded polynomial identities of matrix-unit algebras.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--config", required=True, help="JSON job configuration")
    p.add_argument("-e", "--expr", help="polynomial for 'check'")
    p.add_argument("-f", "--expr-file", help="file with one polynomial per line for 'check'")
    p.add_argument("--max-deg", type=int, help="degree bound for 'monomials' (default 2n-1)")
    p.add_argument("--json", action="store_true", help="line-delimited JSON records")
    p.add_argument("--mod-p", type=int, help="work over GF(p)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--degree-universe", help="comma-separated degrees, e.g. 0,1,2")
    p.add_argument("--truncation", type=int, help="model truncation for 'tensor'")
    p.add_argument("--modular-literals", action="store_true", help="reduce cyclic degree literals mod the order")
    return p


def run(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_CONFIG
    if args.threads < 1:
        stderr.write("error: --threads must be at least 1\n")
        return EXIT_CONFIG
    try:
        cfg = load_config(args.config, args.mod_p)
        if args.degree_universe:
            cfg.degree_universe = parse_universe(args.degree_universe, cfg.group)
        return COMMANDS[args.command](cfg, args, Output(args.json, stdout))
    except InvariantViolation as exc:
        stderr.write(f"internal error: {exc}\n")
        return EXIT_BUG
    except (GradedPIError, ValueError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_CONFIG


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
