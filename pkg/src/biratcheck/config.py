"""Run configuration shared by the CLI, the scripts and the acceptance suite."""

from __future__ import annotations

from dataclasses import dataclass, replace

DEFAULT_CHARACTERISTIC = 32003


@dataclass(frozen=True)
class AnalysisConfig:
    characteristic: int | None = None  # None: take it from the problem (default 32003)
    order: str = "grevlex"
    degree_cap: int | None = None  # null-space search cap; None means 2 * max degree in psi
    strict: bool = False
    timings: bool = False
    output_format: str = "json"

    def __post_init__(self):
        if self.order not in ("grevlex", "lex"):
            raise ValueError(f"order must be grevlex or lex, not {self.order!r}")
        if self.output_format not in ("json", "text"):
            raise ValueError(f"format must be json or text, not {self.output_format!r}")
        if self.degree_cap is not None and self.degree_cap < 1:
            raise ValueError("degree cap must be positive")

    def merged(self, options: dict) -> "AnalysisConfig":
        """Problem-file options fill in whatever the command line left unset."""
        upd = {}
        if self.degree_cap is None and options.get("degree_cap") is not None:
            upd["degree_cap"] = int(options["degree_cap"])
        if options.get("order") and self.order == "grevlex":
            upd["order"] = options["order"]
        return replace(self, **upd) if upd else self
