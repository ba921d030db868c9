"""JSON output for R-polynomial tables, r-tables and check reports"""
import json
from typing import Any, Dict, Iterable, Optional

from ..coxeter import CoxeterSystem
from ..report import CheckReport
from ..rpoly import RTable


class JSONFormatter:
    """Stable JSON: sorted keys, two-space indent, no timestamps."""

    def dumps(self, payload: Any) -> str:
        return json.dumps(payload, indent=2, ensure_ascii=False, sort_keys=True) + "\n"

    def table_payload(self, table: RTable, header: Dict[str, Any], system: CoxeterSystem) -> Dict[str, Any]:
        """
        Output structure:
        {
          "header": {"system": ..., "weights": ..., "normalization": ...},
          "index": ["e", "s1", ...],
          "rows": [{"sigma": "e", "tau": "s1", "poly": "q-1", "coefficients": [[[0], -1], [[2], 1]]}, ...]
        }
        """
        return {
            "header": header,
            "index": [system.format(w) for w in table.index],
            "rows": [
                {
                    "sigma": system.format(sigma),
                    "tau": system.format(tau),
                    "poly": str(value),
                    "coefficients": value.to_json(),
                }
                for sigma, tau, value in table.rows()
            ],
        }

    def format_table(self, table: RTable, header: Dict[str, Any], system: CoxeterSystem) -> str:
        return self.dumps(self.table_payload(table, header, system))

    def format_reports(
        self,
        reports: Iterable[CheckReport],
        metadata: Optional[Dict[str, Any]] = None,
        include_timing: bool = False,
    ) -> str:
        reports = list(reports)
        summary = {"pass": 0, "fail": 0, "skipped": 0}
        for r in reports:
            summary[r.status.value] += 1
        return self.dumps({
            "format_version": "1.0",
            "metadata": metadata or {},
            "summary": summary,
            "reports": [r.to_dict(include_timing) for r in reports],
        })
