"""
Context module for levikit.

This module provides the RunContext object that gives command handlers access to the loaded
inputs, the configuration and the run report of one CLI invocation.
"""

import sys
import time
import uuid
from pathlib import Path
from typing import Any, Dict, List, Optional, TypeVar

from loguru import logger
from pydantic import BaseModel, Field

from levikit.config import LeviKitConfig, config
from levikit.formats.codec import canonical_json, content_sha256, read_text
from levikit.reports import CheckResult, Report

T = TypeVar("T")


class InputRecord(BaseModel):
    path: str
    sha256: str


class RunReport(BaseModel):
    """Human and machine readable summary of one command."""

    run_id: str
    command: str
    inputs: List[InputRecord] = Field(default_factory=list)
    outputs: List[str] = Field(default_factory=list)
    checks: List[CheckResult] = Field(default_factory=list)
    trace: List[str] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    error: Optional[str] = None
    exit_code: int = 0
    elapsed_seconds: float = 0.0

    def render(self) -> str:
        lines = [f"levikit {self.command}: {'ok' if self.exit_code == 0 else f'exit {self.exit_code}'}"]
        for record in self.inputs:
            lines.append(f"  input  {record.path} (sha256 {record.sha256[:12]})")
        for path in self.outputs:
            lines.append(f"  output {path}")
        if self.trace:
            lines.append("  trace:")
            lines.extend(f"    {step}" for step in self.trace)
        for check in self.checks:
            mark = "pass" if check.passed else "FAIL"
            lines.append(f"  [{mark}] {check.name}" + (f" - {check.detail}" if check.detail else ""))
        for note in self.notes:
            lines.append(f"  note: {note}")
        if self.error:
            lines.append(f"  error: {self.error}")
        lines.append(f"  time: {self.elapsed_seconds:.3f}s")
        return "\n".join(lines)


class RunContext:
    """
    Context object for one levikit command.

    Caches every loaded input by path together with its content hash and collects the checks,
    outputs and notes that make up the run report.
    """

    def __init__(self, command: str, run_config: Optional[LeviKitConfig] = None, run_id: Optional[str] = None):
        """
        Initialize the RunContext object.

        Args:
            command: The command being run.
            run_config: Configuration for this run. If None, uses the global configuration.
            run_id: The run ID.
        """
        self._run_id = run_id or str(uuid.uuid4())
        self._config = run_config or config
        self._cache: Dict[str, Any] = {}
        self._started = time.perf_counter()
        self.report = RunReport(run_id=self._run_id, command=command)

    @property
    def run_id(self) -> str:
        """Get the run ID."""
        return self._run_id

    @property
    def config(self) -> LeviKitConfig:
        return self._config

    def read_input(self, path: str) -> str:
        """
        Read an input file once per run and record its hash.

        Args:
            path: The input path.

        Returns:
            The file contents.
        """
        key = str(Path(path))
        if key not in self._cache:
            text = read_text(path)
            self._cache[key] = text
            self.report.inputs.append(InputRecord(path=key, sha256=content_sha256(text)))
        return self._cache[key]

    def cache_get(self, key: str, default: Optional[T] = None) -> Optional[T]:
        return self._cache.get(key, default)

    def cache_set(self, key: str, value: Any) -> None:
        self._cache[key] = value

    def add_output(self, path: Path) -> None:
        self.report.outputs.append(str(path))

    def add_checks(self, report: Report) -> None:
        self.report.checks.extend(report.checks)

    def add_notes(self, notes: List[str]) -> None:
        self.report.notes.extend(notes)

    def log(self, message: str, level: str = "INFO") -> None:
        """
        Log a message.

        Args:
            message: The message to log.
            level: The log level.
        """
        log_func = getattr(logger, level.lower())
        log_func(f"[{self._run_id[:8]}] {message}")

    def get_config(self) -> Dict[str, Any]:
        """
        Get the current configuration.

        Returns:
            The current configuration as a dictionary.
        """
        return self._config.model_dump()

    def finish(self, exit_code: int, error: Optional[str] = None) -> RunReport:
        self.report.exit_code = exit_code
        self.report.error = error
        self.report.elapsed_seconds = time.perf_counter() - self._started
        return self.report

    def emit_report(self, json_path: Optional[str] = None) -> None:
        """Render the report to standard error and optionally write it as JSON."""
        print(self.report.render(), file=sys.stderr)
        if json_path:
            Path(json_path).write_text(canonical_json(self.report.model_dump()), encoding="utf-8")
