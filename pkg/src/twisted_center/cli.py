"""Command-line front-end.

Exit codes: 0 on success (whether or not the center is trivial), 2 on bad
input, 3 when the methods disagree.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from importlib import resources

from . import problem as pf
from .center import ALL_METHODS, analyze, greg_brute_force, mixed_rank_brute_force, tensor_combine
from .cocycle import derive_pairing, validate_cocycle
from .errors import InputError, MethodsDisagree, TwistedCenterError
from .group_shape import shapes_with_log_order
from .pairing import format_grid, normalize, random_pairing
from .solver import count_solutions_brute, kernel

EXIT_OK, EXIT_INPUT, EXIT_DISAGREE = 0, 2, 3


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    parser.add_argument("--max-enumeration", type=int, metavar="N", default=None,
                        help="cap on brute-force enumeration (default 1000000)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twisted-center",
        description="Decide whether a twisted group algebra of a finite abelian group "
                    "has trivial center.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full pipeline with cross-checks")
    p.add_argument("file")
    p.add_argument("--methods", default=None,
                   help="comma-separated subset of theorem,kernel,oracle")
    _common(p)

    for name, text in [
        ("normalize", "print the normalized matrix"),
        ("kernel", "print the kernel of the normalized matrix"),
        ("oracle", "brute-force the central elements"),
        ("cocycle-check", "validate a cocycle table and derive its pairing matrix"),
    ]:
        p = sub.add_parser(name, help=text)
        p.add_argument("file")
        _common(p)

    p = sub.add_parser("selftest", help="randomized cross-check of all methods")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=20, help="random matrices per shape")
    p.add_argument("--max-log-order", type=int, default=4,
                   help="largest sum of n*m over the shapes swept")
    _common(p)
    return parser


def _load(args) -> pf.Problem:
    problem = pf.load_problem(args.file)
    if args.max_enumeration is not None:
        problem.settings.max_enumeration = args.max_enumeration
    if getattr(args, "methods", None):
        problem.settings.methods = pf.parse_methods(args.methods, "--methods")
    return problem


def cmd_analyze(args, out) -> int:
    problem = _load(args)
    report = pf.build_report(problem)
    if args.json:
        out.write(pf.dumps(report))
    else:
        out.write(pf.format_report(report, [A.shape for A in problem.components]))
    return EXIT_OK


def cmd_normalize(args, out) -> int:
    problem = _load(args)
    data = []
    for A in problem.components:
        At = normalize(A)
        data.append({"p": A.shape.p, "modulus": At.modulus, "normalized": At.to_lists()})
        if not args.json:
            out.write(f"p = {A.shape.p}: {A.shape}, mod {At.modulus}\n")
            out.write(format_grid(At.entries, A.shape) + "\n")
    if args.json:
        out.write(pf.dumps({"components": data}))
    return EXIT_OK


def cmd_kernel(args, out) -> int:
    problem = _load(args)
    data = []
    for A in problem.components:
        K = kernel(normalize(A))
        entry = {"p": A.shape.p} | pf.kernel_json(K)
        data.append(entry)
        if not args.json:
            out.write(f"p = {A.shape.p}: {A.shape}\n{pf.format_kernel(entry)}\n")
    if args.json:
        out.write(pf.dumps({"components": data}))
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    problem = _load(args)
    cap = problem.settings.max_enumeration
    data = []
    for A in problem.components:
        greg = greg_brute_force(normalize(A), A.shape, cap)
        data.append({
            "p": A.shape.p,
            "group_order": A.shape.order,
            "greg_order": greg.order,
            "trivial": greg.order == 1,
            "greg_generators": [list(g) for g in greg.generators],
        })
        if not args.json:
            status = "trivial" if greg.order == 1 else "NOT trivial"
            out.write(f"p = {A.shape.p}: {A.shape}: {greg.order} central elements of "
                      f"{A.shape.order}, center {status}\n")
    if args.json:
        out.write(pf.dumps({"components": data}))
    return EXIT_OK


def cmd_cocycle_check(args, out) -> int:
    table = pf.load_cocycle(args.file)
    kwargs = {} if args.max_enumeration is None else {"max_order": args.max_enumeration}
    validate_cocycle(table, **kwargs)
    A = derive_pairing(table)
    if args.json:
        out.write(pf.dumps({"cocycle": True, "p": A.shape.p,
                            "blocks": [list(b) for b in A.shape.blocks],
                            "matrix": A.to_lists()}))
    else:
        out.write(f"valid 2-cocycle on {A.shape}\nA_phi:\n{format_grid(A.entries, A.shape)}\n")
    return EXIT_OK


def worked_example() -> pf.Problem:
    text = resources.files("twisted_center").joinpath("data/paper_example.json").read_text()
    return pf.parse_problem(json.loads(text))


def selftest(seed: int, count: int, max_log_order: int, cap: int) -> dict:
    """Three-way agreement sweep plus brute-force checks of kernel counts."""
    rng = random.Random(seed)
    checked = trivial = 0
    report = analyze(worked_example().components[0])
    if not (report.trivial and report.rank == 1 and len(report.methods_agreed) == 3):
        raise MethodsDisagree("worked example is not reproduced")
    for p in (2, 3):
        for total in range(1, max_log_order + 1):
            for shape in shapes_with_log_order(p, total, 3):
                for _ in range(count):
                    A = random_pairing(shape, rng)
                    r = analyze(A, ALL_METHODS, cap)
                    At = normalize(A)
                    if At.modulus**At.size <= cap and r.kernel.size != count_solutions_brute(At, cap):
                        raise MethodsDisagree(f"kernel size mismatch on {shape}: {A.to_lists()}")
                    checked += 1
                    trivial += r.trivial
    for _ in range(count):
        parts = [random_pairing(s, rng) for s in (rng.choice(shapes_with_log_order(2, 2, 3)),
                                                  rng.choice(shapes_with_log_order(3, 2, 3)))]
        combined = tensor_combine([analyze(A) for A in parts])
        if combined.rank != mixed_rank_brute_force(parts, cap):
            raise MethodsDisagree("tensor rank differs from mixed brute force")
    return {"seed": seed, "instances": checked, "trivial": trivial, "tensor_checks": count,
            "disagreements": 0}


def cmd_selftest(args, out) -> int:
    cap = args.max_enumeration or pf.DEFAULT_MAX_ENUMERATION
    result = selftest(args.seed, args.count, args.max_log_order, cap)
    if args.json:
        out.write(pf.dumps(result))
    else:
        out.write(f"selftest seed {result['seed']}: {result['instances']} instances "
                  f"({result['trivial']} trivial), {result['tensor_checks']} tensor checks, "
                  "all methods agree\n")
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "normalize": cmd_normalize,
    "kernel": cmd_kernel,
    "oracle": cmd_oracle,
    "cocycle-check": cmd_cocycle_check,
    "selftest": cmd_selftest,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except MethodsDisagree as exc:
        err.write(f"fatal: {exc}\n")
        if exc.witness:
            err.write(json.dumps(exc.witness, default=str) + "\n")
        return EXIT_DISAGREE
    except TwistedCenterError as exc:
        err.write(f"fatal: {exc}\n")
        return EXIT_DISAGREE


def main() -> None:
    sys.exit(run())
