"""Bundled, versioned proof scripts and the tools that produce them.

Entries live as ``.cmp`` files in ``v1/``.  :func:`run_corpus` parses and
checks every file in its declared mode and reports per entry.
"""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from ..errors import CMError
from ..hilbert import check_hilbert
from ..kernel_nd import CheckResult, Diagnostic, LogicMode, ProofScript, check_nd, make_result
from ..surface import parse_proof
from ..syntax import Formula
from .builder import ScriptBuilder
from .proofs import (
    ENTRIES, NO_HYPOTHESIS, build_entry, gen_arith_comprehension, numerical_omniscience,
    numerical_omniscience_proof, numerical_omniscience_statement, write_corpus,
)

CORPUS_DIR = Path(__file__).with_name("v1")

__all__ = [
    "CORPUS_DIR", "CorpusEntry", "CorpusReport", "ENTRIES", "NO_HYPOTHESIS", "ScriptBuilder",
    "build_entry", "check_entry", "check_script", "gen_arith_comprehension", "load_corpus",
    "load_entry", "numerical_omniscience_entry", "numerical_omniscience_proof",
    "numerical_omniscience_statement", "run_corpus", "write_corpus",
]


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    mode: LogicMode
    script: ProofScript
    claim: Formula | None
    provenance: str | None
    path: Path | None = None

    @property
    def kernel(self) -> str:
        return self.script.kernel


def check_script(script: ProofScript, mode: LogicMode | str | None = None) -> CheckResult:
    """Check with the kernel the script declares, in ``mode`` or its own mode."""
    mode = LogicMode.parse(mode) if mode is not None else script.mode
    if mode is None:
        raise ValueError("no mode given and the script declares none")
    if script.kernel == "hilbert":
        return check_hilbert(script, mode)
    return check_nd(script, mode)


def check_entry(entry: CorpusEntry, mode: LogicMode | str | None = None) -> CheckResult:
    return check_script(entry.script, entry.mode if mode is None else mode)


def load_entry(path: str | Path) -> CorpusEntry:
    path = Path(path)
    script = parse_proof(path.read_text(encoding="utf-8"), name=path.stem)
    if script.mode is None:
        raise ValueError(f"{path.name} does not declare a mode")
    return CorpusEntry(script.name or path.stem, script.mode, script, script.claim, script.source, path)


def load_corpus(path: str | Path | None = None) -> list[CorpusEntry]:
    root = CORPUS_DIR if path is None else Path(path)
    return [load_entry(p) for p in sorted(root.glob("*.cmp"))]


def numerical_omniscience_entry() -> CorpusEntry:
    script = numerical_omniscience()
    return CorpusEntry(script.name, script.mode, script, script.claim, script.source)


@dataclass(frozen=True)
class CorpusReport:
    results: tuple[tuple[str, CheckResult], ...]

    @property
    def passed(self) -> bool:
        return all(r.accepted for _, r in self.results)

    @property
    def failures(self) -> list[str]:
        return [name for name, r in self.results if not r.accepted]

    def as_dict(self) -> dict:
        return {
            "verdict": "accept" if self.passed else "reject",
            "entries": [{"name": name, **r.as_dict()} for name, r in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def format(self) -> str:
        lines = []
        for name, r in self.results:
            line = f"{'PASS' if r.accepted else 'FAIL'}  {name} [{r.mode.label}]"
            lines.append(line)
            for d in r.diagnostics:
                lines.append(f"      step {d.index}: {d.code}: {d.message}")
        lines.append(f"{len(self.results) - len(self.failures)}/{len(self.results)} entries pass")
        return "\n".join(lines)


def _run_one(path: Path) -> tuple[str, CheckResult]:
    try:
        entry = load_entry(path)
    except CMError as exc:
        where = f" (line {exc.line})" if getattr(exc, "line", None) else ""
        return path.stem, make_result([Diagnostic(0, exc.code, str(exc) + where)], LogicMode.MINIMAL, path.stem)
    except ValueError as exc:
        return path.stem, make_result([Diagnostic(0, "SyntaxError", str(exc))], LogicMode.MINIMAL, path.stem)
    return entry.name, check_entry(entry)


def run_corpus(path: str | Path | None = None, workers: int | None = None) -> CorpusReport:
    """Check every ``.cmp`` file under ``path`` (default: the bundled corpus)."""
    root = CORPUS_DIR if path is None else Path(path)
    files = sorted(root.glob("*.cmp"))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_run_one, files))
    return CorpusReport(tuple(sorted(results, key=lambda r: r[0])))
