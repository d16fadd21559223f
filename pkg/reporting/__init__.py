"""Report envelope and PDF rendering."""

from reporting.json_report import Report, write_report

__all__ = ["Report", "write_report"]
