"""CSV output for R-polynomial tables: '# key: value' header lines, then sigma,tau,poly rows."""
import csv
import io
import json
from typing import Any, Dict

from ..coxeter import CoxeterSystem
from ..rpoly import RTable


class CSVFormatter:

    def format_table(self, table: RTable, header: Dict[str, Any], system: CoxeterSystem) -> str:
        buffer = io.StringIO()
        for key in sorted(header):
            value = header[key]
            text = value if isinstance(value, str) else json.dumps(value, sort_keys=True)
            buffer.write(f"# {key}: {text}\n")
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["sigma", "tau", "poly"])
        for sigma, tau, value in table.rows():
            writer.writerow([system.format(sigma), system.format(tau), str(value)])
        return buffer.getvalue()
