"""
Command-line plumbing: JSON documents and subcommand implementations.

The argparse entrypoint is ``src/app_cli.py``.
"""

from .commands import (
    cmd_analyze,
    cmd_invariant,
    cmd_quantify,
    cmd_random,
    cmd_reconstruct,
    cmd_reproduce,
    cmd_witness,
    render_report,
    render_reproduce,
)
from .documents import (
    MultiStateDocument,
    ReportDocument,
    dumps,
    load_document,
    parse_json_text,
    parse_overlap_table,
    provenance,
)

__all__ = [
    "cmd_analyze",
    "cmd_invariant",
    "cmd_quantify",
    "cmd_random",
    "cmd_reconstruct",
    "cmd_reproduce",
    "cmd_witness",
    "render_report",
    "render_reproduce",
    "MultiStateDocument",
    "ReportDocument",
    "dumps",
    "load_document",
    "parse_json_text",
    "parse_overlap_table",
    "provenance",
]
