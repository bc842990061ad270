"""Group every pattern of a given size by its avoidance sequence."""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .errors import InconsistencyError, ParseError
from .genfunc import avoidance_series, fit_minimal_equation
from .polys import PowerSeries
from .trees import avoidance_counts, enumerate_trees, internal_for_leaves, reflect
from .words import WordSet, parse_wordset, tree_to_wordset

log = logging.getLogger(__name__)

METHODS = ("brute", "genfunc", "both")
BRUTE_LIMIT = 19
FIT_TERMS = 60
FIT_MAX_TOTAL = 10


def avoidance_sequence(t: WordSet, N: int, method: str = "both") -> PowerSeries:
    """av_t(0..N) by exhaustive enumeration, by the generating-function system, or both (cross-checked)."""
    if N < 1:
        raise ValueError("need N >= 1")
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    brute = genf = None
    if method in ("brute", "both"):
        brute = PowerSeries(avoidance_counts(t.to_tree(), N))
    if method in ("genfunc", "both"):
        genf = avoidance_series(t, N)
    if brute is not None and genf is not None and brute != genf:
        n = next(i for i, (a, b) in enumerate(zip(brute, genf)) if a != b)
        raise InconsistencyError(
            f"brute force and generating function disagree for {t} at n={n}: {brute[n]} != {genf[n]}")
    return brute if brute is not None else genf


@dataclass
class ClassifyOptions:
    method: str = "auto"
    reflection_reduced: bool = False
    fit_equations: bool = True
    workers: int = 1

    def resolved_method(self, N: int) -> str:
        if self.method == "auto":
            return "brute" if N <= BRUTE_LIMIT else "genfunc"
        return self.method


@dataclass
class WilfClass:
    members: list[str]
    sequence: list[int]
    equation: str | None = None
    equation_certified: bool = False


@dataclass
class WilfClassReport:
    arity: int
    pattern_leaves: int
    terms: int
    method: str
    classes: list[WilfClass] = field(default_factory=list)
    reflection_reduced: bool = False

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, data: dict) -> WilfClassReport:
        _check_report(data)
        classes = [WilfClass(**c) for c in data["classes"]]
        return cls(data["arity"], data["pattern_leaves"], data["terms"], data["method"],
                   classes, data.get("reflection_reduced", False))

    def members(self) -> list[str]:
        return [m for c in self.classes for m in c.members]

    def class_of(self, literal: str) -> WilfClass:
        return next(c for c in self.classes if literal in c.members)

    def summary(self) -> str:
        lines = [f"{len(self.classes)} classes of {self.pattern_leaves}-leaf patterns "
                 f"(arity {self.arity}, n <= {self.terms}, {self.method})"]
        for k, c in enumerate(self.classes, 1):
            mark = " [equation-certified]" if c.equation_certified else ""
            lines.append(f"class {k}: {len(c.members)} members{mark}")
            lines.append("  members:  " + " ".join(c.members))
            lines.append("  sequence: " + ", ".join(map(str, c.sequence)))
            if c.equation:
                lines.append(f"  equation: {c.equation} = 0")
        return "\n".join(lines)


def pattern_family(m: int, L: int, reflection_reduced: bool = False) -> list[WordSet]:
    pats = []
    for T in enumerate_trees(m, L):
        w = tree_to_wordset(T)
        if reflection_reduced and str(tree_to_wordset(reflect(T))) < str(w):
            continue
        pats.append(w)
    return pats


def _profile(args):
    literal, m, N, method, fit = args
    t = parse_wordset(literal, m)
    seq = avoidance_sequence(t, N, method)
    eq = None
    if fit:
        P = fit_minimal_equation(avoidance_series(t, FIT_TERMS - 1), FIT_MAX_TOTAL)
        eq = None if P is None else str(P)
    return literal, list(seq), eq


def classify_patterns(m: int, L: int, N: int = 19, options: ClassifyOptions | None = None) -> WilfClassReport:
    """Partition all L-leaf m-ary patterns into classes that agree on av(0..N)."""
    options = options or ClassifyOptions()
    if internal_for_leaves(m, L) is None:
        raise ValueError(f"no {m}-ary tree has {L} leaves")
    if N < L:
        raise ValueError(f"need N >= L, got N={N} < L={L}")
    method = options.resolved_method(N)
    pats = pattern_family(m, L, options.reflection_reduced)
    jobs = [(str(p), m, N, method, options.fit_equations) for p in pats]
    if options.workers > 1:
        with ProcessPoolExecutor(options.workers) as pool:
            results = list(pool.map(_profile, jobs))
    else:
        results = [_profile(j) for j in jobs]

    groups: dict[tuple[int, ...], list[tuple[str, str | None]]] = {}
    for literal, seq, eq in results:
        groups.setdefault(tuple(seq), []).append((literal, eq))

    classes = []
    for seq in sorted(groups, reverse=True):
        members = sorted(groups[seq])
        eqs = {eq for _, eq in members}
        equation = members[0][1]
        certified = options.fit_equations and len(eqs) == 1 and equation is not None
        classes.append(WilfClass([lit for lit, _ in members], list(seq), equation, certified))
        log.info("class of %d members, av(%d) = %d", len(members), N, seq[-1])
    return WilfClassReport(m, L, N, method, classes, options.reflection_reduced)


# -- persistence --------------------------------------------------------------------

_TOP = {"arity": int, "pattern_leaves": int, "terms": int, "method": str, "classes": list}
_CLASS = {"members": list, "sequence": list, "equation": (str, type(None)), "equation_certified": bool}


def _check_report(data) -> None:
    if not isinstance(data, dict):
        raise ParseError("report must be a JSON object")
    for key, typ in _TOP.items():
        if key not in data:
            raise ParseError(f"report is missing key {key!r}")
        if not isinstance(data[key], typ) or isinstance(data[key], bool) and typ is int:
            raise ParseError(f"report key {key!r} has the wrong type")
    if not isinstance(data.get("reflection_reduced", False), bool):
        raise ParseError("report key 'reflection_reduced' must be a boolean")
    for i, c in enumerate(data["classes"]):
        where = f"classes[{i}]"
        if not isinstance(c, dict):
            raise ParseError(f"{where} must be an object")
        for key, typ in _CLASS.items():
            if key not in c:
                raise ParseError(f"{where} is missing key {key!r}")
            if not isinstance(c[key], typ):
                raise ParseError(f"{where}.{key} has the wrong type")
        if not all(isinstance(s, str) for s in c["members"]):
            raise ParseError(f"{where}.members must hold word-set literals")
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in c["sequence"]):
            raise ParseError(f"{where}.sequence must hold integers")
        extra = set(c) - set(_CLASS)
        if extra:
            raise ParseError(f"{where} has unknown keys {sorted(extra)}")


def write_report(report: WilfClassReport, path) -> None:
    if not report.classes:
        raise ValueError("refusing to write a report with no classes")
    Path(path).write_text(json.dumps(report.to_json(), indent=2) + "\n", encoding="utf-8")


def read_report(path) -> WilfClassReport:
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg} at line {exc.lineno} column {exc.colno}", exc.pos, text) from None
    try:
        return WilfClassReport.from_json(data)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None
