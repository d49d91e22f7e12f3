"""Checkers for linearly distributive categories, negations and comonads on finite instances."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable, Mapping

from . import _core

__all__ = [
    "Result",
    "EXIT_PASS",
    "EXIT_FAIL",
    "EXIT_SCHEMA",
    "EXIT_PRECONDITION",
    "load",
    "validate",
    "lift",
    "translate",
    "coincide",
    "compact",
    "equivalence",
    "search",
    "generate",
    "mutate",
    "seed_corpus",
    "summarize",
]

EXIT_PASS = _core.EXIT_PASS
EXIT_FAIL = _core.EXIT_FAIL
EXIT_SCHEMA = _core.EXIT_SCHEMA
EXIT_PRECONDITION = _core.EXIT_PRECONDITION

Instance = Mapping[str, Any] | str | Path


@dataclass(frozen=True)
class Result:
    exit_code: int
    report: dict
    artifact: dict | None = None

    @property
    def ok(self) -> bool:
        return self.exit_code == EXIT_PASS

    @property
    def overall(self) -> str:
        return self.report.get("overall", "")

    def failing(self) -> list[str]:
        return [a["id"] for a in self.report.get("axioms", []) if a.get("verdict") == "fail"]


def load(path: str | Path) -> dict:
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def _text(instance: Instance) -> str:
    if isinstance(instance, Path) or (isinstance(instance, str) and not instance.lstrip().startswith("{")):
        return Path(instance).read_text(encoding="utf-8")
    if isinstance(instance, str):
        return instance
    return json.dumps(instance, ensure_ascii=False)


def _result(raw: tuple[int, str, str | None]) -> Result:
    code, report, artifact = raw
    return Result(code, json.loads(report), json.loads(artifact) if artifact is not None else None)


def _scope(scope: str | Iterable[Any] | None) -> str | None:
    if scope is None or isinstance(scope, str):
        return scope
    return ",".join(str(s) for s in scope)


def validate(instance: Instance, axioms: Iterable[str] = (), scope=None) -> Result:
    return _result(_core.validate(_text(instance), _scope(scope), list(axioms)))


def lift(instance: Instance, scope=None) -> Result:
    return _result(_core.lift(_text(instance), _scope(scope)))


def translate(instance: Instance, to: str, scope=None) -> Result:
    return _result(_core.translate(_text(instance), to, _scope(scope)))


def coincide(instance: Instance, scope=None) -> Result:
    return _result(_core.coincide(_text(instance), _scope(scope)))


def compact(instance: Instance, scope=None) -> Result:
    return _result(_core.compact(_text(instance), _scope(scope)))


def equivalence(instance: Instance, scope=None) -> Result:
    return _result(_core.equivalence(_text(instance), _scope(scope)))


def search(instance: Instance, scope=None) -> Result:
    return _result(_core.search(_text(instance), _scope(scope)))


def generate(name: str, **params: Any) -> Result:
    flat = {k: ",".join(map(str, v)) if isinstance(v, (list, tuple)) else str(v) for k, v in params.items()}
    return _result(_core.generate(name, flat))


def mutate(instance: Instance, descriptor: Mapping[str, Any] | None = None, **fields: Any) -> Result:
    d = dict(descriptor or {}, **fields)
    return _result(_core.mutate(_text(instance), json.dumps(d, ensure_ascii=False)))


def seed_corpus(directory: str | Path) -> Result:
    return _result(_core.seed_corpus(str(directory)))


def summarize(report: Mapping[str, Any]) -> str:
    return _core.summarize(json.dumps(report, ensure_ascii=False))
