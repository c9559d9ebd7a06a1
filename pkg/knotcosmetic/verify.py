"""
Property suite: every exact identity the engine promises, checked over a diagram corpus
"""

import itertools
import logging
import math
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

from .census import census_scan, make_pool
from .core.diagram import PlanarDiagram, mirror, parse_pd, resolve
from .core.ftinv import crossing_change_report, invariants, murakami_link_checks
from .core.jones import DEFAULT_METHOD, skein_residual
from .cosmetic import admissible_slopes, compare_with_reference, lambda2_difference
from .exceptions import KnotEngineError
from .families import (
    ConwayFormParams,
    a2_closed,
    genus2_form_check,
    genus3_family,
    recursion_checks,
    twist_knot_diagram,
    twobridge_diagram,
    v3_closed,
)

logger = logging.getLogger(__name__)

NAMED_PD = {
    "3_1": "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)",
    "4_1": "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)",
    "5_1": "X(1,6,2,7) X(3,8,4,9) X(5,10,6,1) X(7,2,8,3) X(9,4,10,5)",
    "9_44": "X(18,14,1,13) X(12,2,13,1) X(14,11,15,12) X(10,15,11,16) X(2,7,3,8) "
            "X(8,3,9,4) X(6,9,7,10) X(17,5,18,4) X(5,17,6,16)",
    "hopf": "X(1,3,2,4) X(3,1,4,2)",
}

MAX_REPORTED_FAILURES = 5
CENSUS_ENV = "KNOTCOSMETIC_CENSUS"


@dataclass
class PropertyResult:
    name: str
    cases: int = 0
    failures: List[str] = field(default_factory=list)
    skipped: bool = False
    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    @property
    def status(self) -> str:
        if self.skipped:
            return "SKIP"
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "property": self.name,
            "status": self.status,
            "cases": self.cases,
            "failures": len(self.failures),
            "first_failures": self.failures[:MAX_REPORTED_FAILURES],
            "note": self.note,
        }


def _grid(entry_max: int, m: int):
    values = [v for v in range(-entry_max, entry_max + 1) if v]
    for flat in itertools.product(values, repeat=2 * m):
        yield ConwayFormParams.from_sequence(flat)


def _grid_case(flat: Tuple[int, ...], method: str) -> Optional[str]:
    """None when closed formulas match the generated diagram, else a message"""
    p = ConwayFormParams.from_sequence(flat)
    try:
        inv = invariants(twobridge_diagram(p), method)
    except KnotEngineError as e:
        return f"{p}: {type(e).__name__}: {e}"
    expected = (a2_closed(p), v3_closed(p))
    if (inv.a2, inv.v3) != expected:
        return f"{p}: diagram (a2, v3) = {(inv.a2, inv.v3)}, closed form {expected}"
    return None


def standard_corpus() -> List[Tuple[str, PlanarDiagram]]:
    """Two-bridge forms with m <= 2 and entries +-1, twist knots, named knots and the Hopf link"""
    corpus = []
    for m in (1, 2):
        for p in _grid(1, m):
            corpus.append((str(p), twobridge_diagram(p)))
    for n in range(-4, 5):
        corpus.append((f"twist({n})", twist_knot_diagram(n)))
    for name, text in NAMED_PD.items():
        diagram = parse_pd(text)
        corpus.append((name, diagram))
        if name == "3_1":
            corpus.append(("3_1 mirror", mirror(diagram)))
    return corpus


class PropertySuite:
    """Runs each property family and collects a pass/fail matrix"""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = config or {}
        verify_cfg = self.config.get('verify', {})
        engine_cfg = self.config.get('engine', {})
        census_cfg = self.config.get('census', {})
        self.grid_max = int(verify_cfg.get('grid_max', 2))
        self.genus_max = int(verify_cfg.get('genus_max', 3))
        self.twist_range = int(verify_cfg.get('twist_range', 4))
        self.slope_pmax = int(verify_cfg.get('slope_pmax', 10000))
        self.genus2_grid = int(verify_cfg.get('genus2_grid', 3))
        self.genus3_xmax = int(verify_cfg.get('genus3_xmax', 5))
        self.method = engine_cfg.get('bracket_method', DEFAULT_METHOD)
        self.max_workers = int(engine_cfg.get('max_workers', 4))
        self.executor = engine_cfg.get('executor', 'thread')
        self.reference_csv = census_cfg.get('reference_csv') or os.environ.get(CENSUS_ENV)
        self.tau_source = census_cfg.get('tau_source', 'unspecified')
        self._corpus: Optional[List[Tuple[str, PlanarDiagram]]] = None

        logger.info(f"Property suite: grid |entries| <= {self.grid_max}, m <= {self.genus_max}")

    @property
    def corpus(self) -> List[Tuple[str, PlanarDiagram]]:
        if self._corpus is None:
            self._corpus = standard_corpus()
        return self._corpus

    def _knots(self):
        return [(name, d) for name, d in self.corpus if d.is_knot]

    def checks(self) -> List[Tuple[str, Callable[[PropertyResult], None]]]:
        return [
            ("skein relation", self.check_skein),
            ("V''(1) = -6 a2", self.check_second_derivative),
            ("trefoil normalization", self.check_trefoil),
            ("crossing change + Hoste", self.check_crossing_change),
            ("two-component identities", self.check_link_identities),
            ("closed formulas on grid", self.check_closed_formulas),
            ("genus 2 / genus 3 families", self.check_genus_families),
            ("twist knots", self.check_twist_knots),
            ("census exceptions", self.check_census),
            ("slopes and lambda2", self.check_slopes),
        ]

    def run(self) -> List[PropertyResult]:
        results = []
        for name, check in self.checks():
            result = PropertyResult(name)
            try:
                check(result)
            except KnotEngineError as e:
                logger.error(f"{name}: {type(e).__name__}: {e}")
                result.fail(f"{type(e).__name__}: {e}")
            logger.info(f"{name}: {result.status} ({result.cases} cases)")
            results.append(result)
        return results

    # property families

    def check_skein(self, result: PropertyResult) -> None:
        for name, d in self.corpus:
            for i in range(d.n_crossings):
                result.cases += 1
                residual = skein_residual(resolve(d, i), self.method)
                if not residual.is_zero():
                    result.fail(f"{name} crossing {i}: residual {residual}")

    def check_second_derivative(self, result: PropertyResult) -> None:
        for name, d in self._knots():
            result.cases += 1
            try:
                inv = invariants(d, self.method)
            except KnotEngineError as e:
                result.fail(f"{name}: {e}")
                continue
            if inv.Vpp1 != -6 * inv.a2:
                result.fail(f"{name}: V''(1) = {inv.Vpp1}, a2 = {inv.a2}")

    def check_trefoil(self, result: PropertyResult) -> None:
        inv = invariants(parse_pd(NAMED_PD["3_1"]), self.method)
        result.cases = 1
        if (inv.v2, inv.v3) != (1, 1):
            result.fail(f"right trefoil gave v2 = {inv.v2}, v3 = {inv.v3}")

    def check_crossing_change(self, result: PropertyResult) -> None:
        for name, d in self._knots():
            for i in range(d.n_crossings):
                triple = resolve(d, i)
                if triple.resolved.component_count != 2:
                    continue
                result.cases += 1
                report = crossing_change_report(triple, self.method)
                if not report.holds:
                    result.fail(f"{name} crossing {i}: w3 residual {report.residual}")
                if not report.hoste_holds:
                    result.fail(f"{name} crossing {i}: Hoste residual {report.hoste_residual}")

    def check_link_identities(self, result: PropertyResult) -> None:
        for name, d in self._knots():
            for i in range(d.n_crossings):
                triple = resolve(d, i)
                if triple.resolved.component_count != 2:
                    continue
                result.cases += 1
                report = murakami_link_checks(triple, self.method)
                for check in report.failures():
                    result.fail(f"{name} crossing {i}: {check.name} residual {check.residual}")

    def check_closed_formulas(self, result: PropertyResult) -> None:
        cases = [p.flat for m in range(1, self.genus_max + 1) for p in _grid(self.grid_max, m)]
        result.cases = len(cases)
        with make_pool(self.executor, self.max_workers) as pool:
            for message in pool.map(_grid_case, cases, itertools.repeat(self.method)):
                if message:
                    result.fail(message)
        for flat in cases:
            report = recursion_checks(ConwayFormParams.from_sequence(flat))
            for check in report.failures():
                result.fail(f"{report.params}: {check.name} residual {check.residual}")

    def check_genus_families(self, result: PropertyResult) -> None:
        for p in _grid(self.genus2_grid, 2):
            result.cases += 1
            vanishing = a2_closed(p) == 0 and v3_closed(p) == 0
            if genus2_form_check(p) != vanishing:
                result.fail(f"{p}: form check {genus2_form_check(p)}, a2 = v3 = 0 is {vanishing}")
        for x in range(1, self.genus3_xmax + 1):
            result.cases += 1
            p = genus3_family(x)
            if v3_closed(p) != -x:
                result.fail(f"{p}: v3 = {v3_closed(p)}")
        # diagrams grow by 16 crossings per step in x; keep to the small ones
        for x in range(1, min(self.genus3_xmax, 2) + 1):
            result.cases += 1
            inv = invariants(twobridge_diagram(genus3_family(x)), self.method)
            if inv.v3 != -x:
                result.fail(f"genus3_family({x}) diagram: v3 = {inv.v3}")

    def check_twist_knots(self, result: PropertyResult) -> None:
        for n in range(-self.twist_range, self.twist_range + 1):
            result.cases += 1
            inv = invariants(twist_knot_diagram(n), self.method)
            expected = (-n, (n * n - n) // 2)
            if (inv.a2, inv.v3) != expected:
                result.fail(f"twist({n}): (a2, v3) = {(inv.a2, inv.v3)}, expected {expected}")

    def check_census(self, result: PropertyResult) -> None:
        if not self.reference_csv:
            result.skipped = True
            result.note = f"set census.reference_csv or {CENSUS_ENV}"
            return
        report = census_scan(self.reference_csv, self.max_workers, self.executor,
                             self.method, self.tau_source)
        result.cases = len(report.entries)
        for error in report.errors[:MAX_REPORTED_FAILURES]:
            result.fail(f"row {error['row']} {error['name']}: {error['error']}")
        difference = compare_with_reference(e.name for e in report.exceptions)
        if difference["missing"] or difference["unexpected"]:
            result.fail(f"exception list differs: {difference}")

    def check_slopes(self, result: PropertyResult) -> None:
        fast = [(s.p, s.q) for s in admissible_slopes(self.slope_pmax)]
        slow = brute_force_slopes(self.slope_pmax)
        result.cases += 1
        if fast != slow:
            result.fail(f"admissible_slopes disagrees with brute force ({len(fast)} vs {len(slow)} pairs)")

        rng = random.Random(20)
        pairs = admissible_slopes(min(self.slope_pmax, 200))
        for _ in range(200):
            result.cases += 1
            w3 = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
            s = rng.choice(pairs)
            if (lambda2_difference(w3, s) == 0) != (w3 == 0):
                result.fail(f"lambda2 difference for w3 = {w3}, {s}")


def brute_force_slopes(p_max: int) -> List[Tuple[int, int]]:
    """Plain double loop over p and q"""
    out = []
    for p in range(2, p_max + 1):
        for q in range(1, p + 1):
            if (q * q + 1) % p == 0 and math.gcd(p, q) == 1:
                out.append((p, q))
    return out


def render_matrix(results: List[PropertyResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        line = f"{r.name:<{width}}  {r.status:<4}  {r.cases:>6} cases"
        if r.failures:
            line += f"  first failure: {r.failures[0]}"
        elif r.note:
            line += f"  ({r.note})"
        lines.append(line)
    return "\n".join(lines)
