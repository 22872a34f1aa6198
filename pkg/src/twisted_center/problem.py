"""Problem files and reports.

A problem file is JSON::

    {"components": [{"p": 3, "blocks": [[2, 2], [1, 2]],
                     "matrix": [[0, 1, 1, 1], ...]}],
     "settings": {"max_enumeration": 1000000,
                  "methods": ["theorem", "kernel", "oracle"]}}

``settings`` and each of its keys are optional.  A cocycle file holds a single
component with a dense ``table`` instead of a ``matrix``.
"""

from __future__ import annotations

import json
import re
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from .center import ALL_METHODS, CenterReport, analyze, tensor_combine
from .cocycle import CocycleTable
from .errors import DuplicatePrime, InputError
from .group_shape import DEFAULT_MAX_ENUMERATION, PGroupShape, validate_shape
from .pairing import PairingMatrix, format_grid, normalize, validate_pairing_matrix


@dataclass
class Settings:
    max_enumeration: int = DEFAULT_MAX_ENUMERATION
    methods: list[str] | None = None

    def to_json(self) -> dict:
        out: dict[str, Any] = {"max_enumeration": self.max_enumeration}
        if self.methods is not None:
            out["methods"] = list(self.methods)
        return out


@dataclass
class Problem:
    components: list[PairingMatrix]
    settings: Settings = field(default_factory=Settings)


class LocatedInputError(InputError):
    """An input error prefixed with where in the file it happened."""

    def __init__(self, where: str, cause: Exception):
        super().__init__(f"{where}: {cause}")
        self.where = where
        self.cause = cause


def read_json(path: str | Path) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise InputError(f"{path}: file not found")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}")


def _require(obj: Any, key: str, where: str) -> Any:
    if not isinstance(obj, dict):
        raise InputError(f"{where}: expected an object")
    if key not in obj:
        raise InputError(f"{where}: missing field '{key}'")
    return obj[key]


def parse_shape(entry: Any, where: str) -> PGroupShape:
    p = _require(entry, "p", where)
    blocks = _require(entry, "blocks", where)
    if not isinstance(blocks, list):
        raise InputError(f"{where}.blocks: expected a list of [exponent, multiplicity]")
    try:
        return validate_shape(blocks, p)
    except InputError as exc:
        raise LocatedInputError(where, exc)


def parse_settings(raw: Any) -> Settings:
    if raw is None:
        return Settings()
    if not isinstance(raw, dict):
        raise InputError("settings: expected an object")
    settings = Settings()
    if "max_enumeration" in raw:
        cap = raw["max_enumeration"]
        if not isinstance(cap, int) or cap < 1:
            raise InputError("settings.max_enumeration: expected a positive integer")
        settings.max_enumeration = cap
    if "methods" in raw:
        settings.methods = parse_methods(raw["methods"], "settings.methods")
    return settings


def parse_methods(raw: Any, where: str = "methods") -> list[str]:
    if isinstance(raw, str):
        raw = [m.strip() for m in raw.split(",") if m.strip()]
    if not isinstance(raw, list) or not raw:
        raise InputError(f"{where}: expected a non-empty list of methods")
    bad = [m for m in raw if m not in ALL_METHODS]
    if bad:
        raise InputError(f"{where}: unknown method(s) {bad}; choose from {list(ALL_METHODS)}")
    return [m for m in ALL_METHODS if m in raw]


def parse_problem(data: Any) -> Problem:
    raw_components = _require(data, "components", "problem")
    if not isinstance(raw_components, list) or not raw_components:
        raise InputError("components: expected a non-empty list")
    components, primes = [], set()
    for k, entry in enumerate(raw_components):
        where = f"components[{k}]"
        shape = parse_shape(entry, where)
        if shape.p in primes:
            raise LocatedInputError(where, DuplicatePrime(shape.p))
        primes.add(shape.p)
        matrix = _require(entry, "matrix", where)
        if not isinstance(matrix, list) or not all(isinstance(row, list) for row in matrix):
            raise InputError(f"{where}.matrix: expected a list of rows")
        try:
            components.append(validate_pairing_matrix(shape, matrix))
        except InputError as exc:
            raise LocatedInputError(f"{where}.matrix", exc)
    return Problem(components, parse_settings(data.get("settings")))


def load_problem(path: str | Path) -> Problem:
    return parse_problem(read_json(path))


def load_cocycle(path: str | Path) -> CocycleTable:
    data = read_json(path)
    shape = parse_shape(data, "cocycle")
    table = _require(data, "table", "cocycle")
    if not isinstance(table, list) or not all(isinstance(row, list) for row in table):
        raise InputError("cocycle.table: expected a list of rows")
    try:
        return CocycleTable.from_grid(shape, table)
    except InputError as exc:
        raise LocatedInputError("cocycle.table", exc)


def problem_to_json(problem: Problem) -> dict:
    return {
        "components": [
            {"p": A.shape.p, "blocks": [list(b) for b in A.shape.blocks], "matrix": A.to_lists()}
            for A in problem.components
        ],
        "settings": problem.settings.to_json(),
    }


def _center_json(report: CenterReport) -> dict:
    return {
        "trivial": report.trivial,
        "rank": report.rank,
        "group_order": report.group_order,
        "greg_generators": [list(g) for g in report.greg_generators],
        "methods_agreed": sorted(report.methods_agreed),
    }


def build_report(problem: Problem) -> dict:
    """Analyze every component and combine them; raises MethodsDisagree on conflict."""
    start = time.perf_counter()
    settings = problem.settings
    components, reports = [], []
    for A in sorted(problem.components, key=lambda A: A.shape.p):
        report = analyze(A, settings.methods, settings.max_enumeration)
        reports.append(report)
        entry = {
            "p": A.shape.p,
            "shape": str(A.shape),
            "matrix": A.to_lists(),
            "normalized": normalize(A).to_lists(),
            "modulus": A.shape.modulus,
        }
        K = report.kernel
        if K is not None:
            entry["kernel"] = kernel_json(K)
        entry["center"] = _center_json(report)
        components.append(entry)
    combined = tensor_combine(reports)
    return {
        "input": problem_to_json(problem),
        "components": components,
        "combined": _center_json(combined) | {"primes": list(combined.primes)},
        "timing_seconds": round(time.perf_counter() - start, 6),
    }


def kernel_json(K) -> dict:
    return {
        "size": K.size,
        "modulus": K.modulus,
        "diag_valuations": list(K.diag_valuations),
        "generators": [list(g) for g in K.generators],
        "per_variable": K.describe_variables(),
    }


_FLAT_LIST = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]")


def dumps(report: dict) -> str:
    """Indented JSON with lists of integers kept on one line."""
    text = json.dumps(report, indent=2)
    return _FLAT_LIST.sub(lambda m: "[" + ", ".join(m.group(1).replace(",", " ").split()) + "]",
                          text) + "\n"


def _indent(text: str, prefix: str = "    ") -> str:
    return "\n".join(prefix + line for line in text.splitlines())


def format_center(center: dict) -> str:
    rank = "unknown" if center["rank"] is None else center["rank"]
    status = "trivial" if center["trivial"] else "NOT trivial"
    lines = [
        f"center: {status} (|G_reg| = {rank} of |G| = {center['group_order']})",
        f"methods agreed: {', '.join(center['methods_agreed'])}",
    ]
    gens = center["greg_generators"]
    if gens:
        lines.append("G_reg generators: " + " ".join("(" + ",".join(map(str, g)) + ")" for g in gens))
    return "\n".join(lines)


def format_report(report: dict, shapes: Sequence[PGroupShape] | None = None) -> str:
    out = []
    by_prime = {s.p: s for s in shapes or ()}
    for comp in report["components"]:
        shape = by_prime.get(comp["p"])
        out.append(f"== p = {comp['p']}: {comp['shape']}")
        out.append("A_phi:")
        out.append(_indent(format_grid(comp["matrix"], shape)))
        out.append(f"normalized (mod {comp['modulus']}):")
        out.append(_indent(format_grid(comp["normalized"], shape)))
        if "kernel" in comp:
            out.append(format_kernel(comp["kernel"]))
        out.append(format_center(comp["center"]))
        out.append("")
    if len(report["components"]) > 1:
        out.append(f"== combined over primes {report['combined']['primes']}")
        out.append(format_center(report["combined"]))
    return "\n".join(out).rstrip() + "\n"


def format_kernel(kernel: dict) -> str:
    lines = [
        f"diagonal valuations: {kernel['diag_valuations']}",
        f"kernel of normalized matrix: {kernel['size']} solutions mod {kernel['modulus']}",
    ]
    if kernel["per_variable"]:
        lines.extend("    " + line for line in kernel["per_variable"])
    elif kernel["generators"]:
        lines.append("    spanned by " + " ".join(
            "(" + ",".join(map(str, g)) + ")" for g in kernel["generators"]))
    return "\n".join(lines)
