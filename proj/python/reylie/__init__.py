"""Exact checks and constructions for Reynolds Lie algebras, bialgebras and the classical Yang-Baxter equation.

Inputs are file paths, ``@name`` catalog references, or dicts (sent as inline JSON).
Rationals inside documents are strings such as ``"-1/4"``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Union

from . import _core
from ._core import InputError

Doc = Union[str, dict, list]

__all__ = [
    "InputError",
    "Report",
    "block",
    "build",
    "build_kinds",
    "catalog",
    "catalog_names",
    "check",
    "check_kinds",
    "fraction",
]


@dataclass(frozen=True)
class Report:
    exit_code: int
    verdict: str
    certificates: list = field(default_factory=list)
    built: Optional[Any] = None
    error: Optional[str] = None
    text: str = ""

    @property
    def passed(self) -> bool:
        return self.exit_code == 0

    def failures(self) -> list:
        return [c for c in self.certificates if not c["pass"]]


def _arg(doc: Optional[Doc]) -> Optional[str]:
    if doc is None:
        return None
    if isinstance(doc, (dict, list)):
        return json.dumps(doc)
    return str(doc)


def _report(packed: str) -> Report:
    j = json.loads(packed)
    rep = j["report"]
    return Report(
        exit_code=j["exit_code"],
        verdict=rep["verdict"],
        certificates=rep["certificates"],
        built=j["built"],
        error=rep.get("error"),
        text=j["text"],
    )


def check(kind: str, *docs: Doc, op: Optional[Doc] = None, r: Optional[Doc] = None, rep: Optional[Doc] = None,
          lam: Optional[Union[str, int, Fraction]] = None, first_only: bool = False) -> Report:
    return _report(_core.check(kind, [_arg(d) for d in docs], _arg(op), _arg(r), _arg(rep),
                               None if lam is None else str(lam), first_only))


def build(kind: str, *docs: Doc, op: Optional[Doc] = None, r: Optional[Doc] = None, rep: Optional[Doc] = None,
          lam: Optional[Union[str, int, Fraction]] = None, rep_kind: str = "adjoint") -> Report:
    return _report(_core.build(kind, [_arg(d) for d in docs], _arg(op), _arg(r), _arg(rep),
                               None if lam is None else str(lam), rep_kind))


def catalog(name: str) -> Report:
    return _report(_core.catalog(name))


def block(q: Union[str, int, Fraction], lo: int, hi: int, drop_singular: bool = False,
          first_only: bool = False) -> Report:
    return _report(_core.block(str(q), lo, hi, drop_singular, first_only))


def check_kinds() -> list:
    return list(_core.check_kinds())


def build_kinds() -> list:
    return list(_core.build_kinds())


def catalog_names() -> list:
    return list(_core.catalog_names())


def fraction(text: Union[str, int]) -> Fraction:
    """Document rational to Fraction, after the library's own parsing."""
    return Fraction(_core.canonical_rational(str(text)))
