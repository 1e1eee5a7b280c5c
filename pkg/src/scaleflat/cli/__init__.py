"""Command line front end and the report pipelines behind it."""

from .documents import DocumentError, family_from_document, system_from_document
from .main import JobConfig, build_parser, main, run_job
from .reports import (
    CheckReport,
    DualReport,
    FibrationReport,
    SelftestReport,
    StructureReport,
    check_report,
    dual_report,
    fibration_report_model,
    render,
    structure_report,
)
from .selftest import run_selftest

__all__ = [
    "DocumentError",
    "family_from_document",
    "system_from_document",
    "JobConfig",
    "build_parser",
    "main",
    "run_job",
    "CheckReport",
    "DualReport",
    "FibrationReport",
    "SelftestReport",
    "StructureReport",
    "check_report",
    "dual_report",
    "fibration_report_model",
    "render",
    "structure_report",
    "run_selftest",
]
