"""
Census scanning: invariants and verdicts for every row of a knot table

The table is a CSV with header name,crossings,pd,tau. An empty tau cell means
tau is unknown; only an explicit 0 counts as tau = 0.
"""

import json
import logging
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

from .core.diagram import PlanarDiagram, parse_pd, to_pd_text
from .core.ftinv import KnotInvariants, invariants
from .core.jones import DEFAULT_METHOD
from .cosmetic import Verdict, VerdictStatus, verdict
from .exceptions import CensusFormatError, InvalidParameters, KnotEngineError

logger = logging.getLogger(__name__)

REQUIRED_COLUMNS = ("name", "crossings", "pd", "tau")

# pd cell written for a row whose cell count differs from the header
MALFORMED_ROW = "\x00malformed:"


def make_pool(executor: str, max_workers: int):
    """Thread pool by default; a process pool when CPU-bound work should spread across cores"""
    if executor == 'process':
        return ProcessPoolExecutor(max_workers=max_workers)
    return ThreadPoolExecutor(max_workers=max_workers)


@dataclass
class CensusEntry:
    name: str
    crossings: int
    pd: PlanarDiagram
    tau: Optional[int]
    invariants: KnotInvariants
    verdict: Verdict

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "crossings": self.crossings,
            "pd": to_pd_text(self.pd),
            "tau": self.tau,
            "invariants": self.invariants.to_dict(),
            "verdict": self.verdict.to_dict(),
        }


@dataclass
class CensusReport:
    source: str
    tau_source: str
    entries: List[CensusEntry] = field(default_factory=list)
    errors: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def exceptions(self) -> List[CensusEntry]:
        """Entries left INCONCLUSIVE"""
        return [e for e in self.entries if e.verdict.status is VerdictStatus.INCONCLUSIVE]

    @property
    def results(self) -> Dict[str, Any]:
        return {
            'total': len(self.entries) + len(self.errors),
            'success': len(self.entries),
            'failed': len(self.errors),
            'errors': list(self.errors),
        }

    def summary(self) -> Dict[str, Any]:
        summary = {"source": self.source, "tau_source": self.tau_source}
        summary.update(self.results)
        summary["exceptions"] = [e.name for e in self.exceptions]
        return summary

    def to_json_lines(self) -> List[str]:
        lines = [json.dumps(e.to_dict(), sort_keys=True) for e in self.entries]
        lines.append(json.dumps({"summary": self.summary()}, sort_keys=True))
        return lines


def read_census(csv_path: str) -> pd.DataFrame:
    """
    Load a census table with every cell as a string.

    A row with more cells than the header keeps its place: its pd cell is
    replaced by a MALFORMED_ROW marker that evaluate_row turns into a row
    error. Short rows are padded with empty cells.
    """
    try:
        header = pd.read_csv(csv_path, nrows=0, skipinitialspace=True)
    except pd.errors.EmptyDataError:
        logger.warning(f"Census file is empty: {csv_path}")
        return pd.DataFrame(columns=list(REQUIRED_COLUMNS))
    except (OSError, pd.errors.ParserError) as e:
        raise CensusFormatError(f"Cannot read census {csv_path}: {e}")

    columns = [str(c).strip() for c in header.columns]
    missing = [c for c in REQUIRED_COLUMNS if c not in columns]
    if missing:
        raise CensusFormatError(f"census {csv_path} lacks columns {missing}")
    width = len(columns)
    name_at = columns.index("name")
    pd_at = columns.index("pd")

    def keep_bad_line(fields: List[str]) -> List[str]:
        row = [""] * width
        row[name_at] = fields[name_at] if name_at < len(fields) else ""
        row[pd_at] = f"{MALFORMED_ROW}{len(fields)} fields, expected {width}"
        return row

    try:
        frame = pd.read_csv(csv_path, dtype=str, keep_default_na=False, skipinitialspace=True,
                            engine="python", on_bad_lines=keep_bad_line)
    except (OSError, pd.errors.ParserError) as e:
        raise CensusFormatError(f"Cannot read census {csv_path}: {e}")

    frame.columns = columns
    return frame.fillna("")


def _parse_int(text: str, column: str) -> Optional[int]:
    text = (text or "").strip()
    if not text:
        return None
    try:
        return int(text)
    except ValueError:
        raise CensusFormatError(f"{column} must be an integer, got {text!r}")


def evaluate_row(row: int, name: str, crossings: str, pd_text: str, tau: str,
                 method: str = DEFAULT_METHOD) -> Tuple[str, Any]:
    """('success', CensusEntry) or ('error', {'name', 'row', 'error'})"""
    try:
        if pd_text.startswith(MALFORMED_ROW):
            raise CensusFormatError(f"malformed row: {pd_text[len(MALFORMED_ROW):]}")
        count = _parse_int(crossings, "crossings")
        tau_value = _parse_int(tau, "tau")
        diagram = parse_pd(pd_text)
        inv = invariants(diagram, method)
        entry = CensusEntry(name, count if count is not None else diagram.n_crossings,
                            diagram, tau_value, inv, verdict(inv, tau_value))
        return 'success', entry
    except KnotEngineError as e:
        return 'error', {'name': name, 'row': row, 'error': f"{type(e).__name__}: {e}"}


class CensusScanner:
    """Runs evaluate_row over a census in a worker pool, keeping input order"""

    def __init__(self, max_workers: int = 4, executor: str = 'thread',
                 method: str = DEFAULT_METHOD, tau_source: str = 'unspecified'):
        if executor not in ('thread', 'process'):
            raise InvalidParameters(f"executor must be 'thread' or 'process', got {executor!r}")
        self.max_workers = max(1, int(max_workers))
        self.executor = executor
        self.method = method
        self.tau_source = tau_source
        logger.info(f"Census scanner: {self.executor} pool, {self.max_workers} workers, {self.method} bracket")

    def _pool(self):
        return make_pool(self.executor, self.max_workers)

    def scan(self, csv_path: str) -> CensusReport:
        frame = read_census(csv_path)
        return self.scan_frame(frame, str(Path(csv_path)))

    def scan_frame(self, frame: pd.DataFrame, source: str = '<frame>') -> CensusReport:
        report = CensusReport(source, self.tau_source)
        if frame.empty:
            return report

        rows = list(frame[list(REQUIRED_COLUMNS)].itertuples(index=False, name=None))
        outcomes: Dict[int, Tuple[str, Any]] = {}
        seen_names = set()

        with self._pool() as pool:
            future_to_row = {}
            for number, (name, crossings, pd_text, tau) in enumerate(rows, start=1):
                name = name.strip()
                if name in seen_names:
                    outcomes[number] = ('error', {'name': name, 'row': number,
                                                  'error': "CensusFormatError: duplicate knot name"})
                    continue
                seen_names.add(name)
                future = pool.submit(evaluate_row, number, name, crossings, pd_text, tau, self.method)
                future_to_row[future] = number

            for future in as_completed(future_to_row):
                outcomes[future_to_row[future]] = future.result()

        for number in sorted(outcomes):
            status, payload = outcomes[number]
            if status == 'success':
                report.entries.append(payload)
            else:
                logger.warning(f"Census row {number} ({payload['name']}): {payload['error']}")
                report.errors.append(payload)

        logger.info(
            f"Census {source}: {len(report.entries)} knots, {len(report.errors)} errors, "
            f"{len(report.exceptions)} inconclusive"
        )
        return report


def census_scan(csv_path: str, max_workers: int = 4, executor: str = 'thread',
                method: str = DEFAULT_METHOD, tau_source: str = 'unspecified') -> CensusReport:
    return CensusScanner(max_workers, executor, method, tau_source).scan(csv_path)
