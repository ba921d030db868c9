"""
Output format handlers for tables and reports.
Supports CSV and JSON.
"""
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Tuple

from ..coxeter import CoxeterSystem
from ..report import CheckReport
from ..rpoly import RTable

LOG = logging.getLogger("heckeideal.formatters")

SUPPORTED_FORMATS = ("csv", "json")


def save_tables(
    tables: Dict[str, Tuple[RTable, Dict[str, Any]]],
    output_dir: Path,
    system: CoxeterSystem,
    formats: Iterable[str] = ("json",),
) -> List[Path]:
    """
    Save tables in the requested formats.

    Args:
        tables: name -> (table, header)
        output_dir: Where to save
        system: used to print element names
        formats: any of "csv", "json"

    Returns:
        Paths written, in name then format order
    """
    formats = set(formats)
    unknown = formats - set(SUPPORTED_FORMATS)
    if unknown:
        raise ValueError(f"Unknown output format(s) {', '.join(sorted(unknown))}. Valid options: {', '.join(SUPPORTED_FORMATS)}")
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    written: List[Path] = []

    for name in sorted(tables):
        table, header = tables[name]
        if "csv" in formats:
            from .csv_formatter import CSVFormatter
            path = output_dir / f"{name}.csv"
            path.write_text(CSVFormatter().format_table(table, header, system), encoding="utf-8")
            LOG.info("Saved CSV: %s", path.name)
            written.append(path)
        if "json" in formats:
            from .json_formatter import JSONFormatter
            path = output_dir / f"{name}.json"
            path.write_text(JSONFormatter().format_table(table, header, system), encoding="utf-8")
            LOG.info("Saved JSON: %s", path.name)
            written.append(path)
    return written


def save_reports(
    reports: Iterable[CheckReport],
    path: Path,
    metadata: Optional[Dict[str, Any]] = None,
    include_timing: bool = False,
) -> Path:
    from .json_formatter import JSONFormatter
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(JSONFormatter().format_reports(reports, metadata, include_timing), encoding="utf-8")
    LOG.info("Saved reports: %s", path.name)
    return path
