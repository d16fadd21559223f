"""Report envelope shared by every CLI command."""

import json
import logging
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional

import config

logger = logging.getLogger(__name__)


@dataclass
class Report:
    """
    JSON report printed by the CLI.

    Field order is fixed and no timestamps are included, so identical
    inputs give byte-identical output.
    """
    command: str
    inputs: Dict[str, Any]
    results: Dict[str, Any] = field(default_factory=dict)
    tolerance: float = config.DEFAULT_TOL
    status: str = "ok"
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "tool": config.APP_NAME,
            "version": config.VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "tolerance": {"tol": self.tolerance},
            "status": self.status,
            "results": self.results,
        }
        if self.error is not None:
            data["error"] = self.error
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False, default=_fallback)


def _fallback(value: Any) -> Any:
    """Serialize numpy scalars, Fractions and objects with to_json."""
    if hasattr(value, "to_json"):
        return value.to_json()
    if hasattr(value, "item"):
        return value.item()
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    return str(value)


def write_report(report: Report, path: Path) -> Path:
    """
    Write a report atomically (temp file, then rename).

    Args:
        report: Report to write
        path: Target file

    Returns:
        The path written.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    temp_fd, temp_path = tempfile.mkstemp(suffix=".tmp", prefix="report_", dir=path.parent)
    try:
        with os.fdopen(temp_fd, "w", encoding="utf-8") as f:
            f.write(report.to_json())
            f.write("\n")
        os.replace(temp_path, path)
        logger.debug(f"Wrote report to {path}")
    except Exception:
        try:
            os.unlink(temp_path)
        except OSError:
            pass
        raise
    return path
