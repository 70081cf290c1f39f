"""Cumulative transitivity (CUT) and cautious monotonicity (MON) under two transforms.

``STRICT`` adds a derived non-assumption as a fact; ``ASM`` confirms a
concluded assumption by turning it into a fact and dropping it (with its
contrary and preferences) from the assumptions.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Union

from .framework import Framework, Rule
from .semantics import SemanticsId, extensions


class SettingMismatch(ValueError):
    pass


class Setting(enum.Enum):
    STRICT = "strict"
    ASM = "asm"


class Direction(enum.Enum):
    CUT = "cut"
    MON = "mon"


class Mode(enum.Enum):
    SCEPTICAL = "sceptical"
    CREDULOUS = "credulous"


@dataclass(frozen=True)
class NmrProperty:
    direction: Direction
    mode: Mode

    def __str__(self):
        return f"{self.mode.value} {self.direction.value}"


class Verdict(enum.Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    VACUOUS = "vacuous"


@dataclass
class NmrCase:
    extension: object
    psi: str
    verdict: Verdict
    # E' failing the inclusion (all of them when a credulous case is violated)
    witnesses: list = field(default_factory=list)
    # E' satisfying the inclusion
    supporters: list = field(default_factory=list)


@dataclass
class NmrReport:
    semantics: SemanticsId
    setting: Setting
    prop: NmrProperty
    cases: list = field(default_factory=list)

    @property
    def verdict(self) -> Verdict:
        return Verdict.VIOLATED if self.violations else Verdict.HOLDS

    @property
    def violations(self) -> list:
        return [c for c in self.cases if c.verdict is Verdict.VIOLATED]

    @property
    def non_vacuous(self) -> int:
        return sum(c.verdict is not Verdict.VACUOUS for c in self.cases)

    def to_dict(self) -> dict:
        return {
            "semantics": str(self.semantics),
            "setting": self.setting.value,
            "property": str(self.prop),
            "verdict": self.verdict.value,
            "cases": [
                {
                    "extension": sorted(c.extension.members),
                    "conclusions": sorted(c.extension.conclusions),
                    "psi": c.psi,
                    "verdict": c.verdict.value,
                    "witnesses": [
                        {"assumptions": sorted(w.members), "conclusions": sorted(w.conclusions)}
                        for w in c.witnesses
                    ],
                }
                for c in self.cases
            ],
        }


def transform(fw: Framework, setting: Setting, psi: str) -> Framework:
    rules = fw.rules | {Rule(psi)}
    if setting is Setting.STRICT:
        if psi in fw.assumptions:
            raise SettingMismatch(f"{psi!r} is an assumption; STRICT adds non-assumptions only")
        return Framework(rules, fw.assumptions, fw.contrary, fw.preference)
    if psi not in fw.assumptions:
        raise SettingMismatch(f"{psi!r} is not an assumption; ASM confirms assumptions only")
    kept = fw.assumptions - {psi}
    contrary = {a: c for a, c in fw.contrary.items() if a in kept}
    return Framework(rules, kept, contrary, fw.preference.restrict(kept))


def eligible(fw: Framework, ext, setting: Setting) -> list:
    if setting is Setting.STRICT:
        return sorted(ext.conclusions - fw.assumptions)
    return sorted(ext.conclusions & fw.assumptions)


PsiFilter = Union[None, str, Iterable[str], Callable[[str], bool]]


def _psi_predicate(psi_filter: PsiFilter) -> Callable[[str], bool]:
    if psi_filter is None:
        return lambda s: True
    if isinstance(psi_filter, str):
        return lambda s: s == psi_filter
    if callable(psi_filter):
        return psi_filter
    allowed = frozenset(psi_filter)
    return lambda s: s in allowed


def _included(direction: Direction, cn: frozenset, cn2: frozenset) -> bool:
    return cn2 <= cn if direction is Direction.CUT else cn <= cn2


def evaluate(
    fw: Framework,
    sem: SemanticsId,
    setting: Setting,
    prop: NmrProperty,
    psi_filter: PsiFilter = None,
    bound: Optional[int] = None,
) -> NmrReport:
    keep = _psi_predicate(psi_filter)
    report = NmrReport(sem, setting, prop)
    transformed = {}
    for ext in extensions(fw, sem, bound):
        for psi in eligible(fw, ext, setting):
            if not keep(psi):
                continue
            if psi not in transformed:
                transformed[psi] = extensions(transform(fw, setting, psi), sem, bound).extensions
            exts2 = transformed[psi]
            if not exts2:
                report.cases.append(NmrCase(ext, psi, Verdict.VACUOUS))
                continue
            good = [e2 for e2 in exts2 if _included(prop.direction, ext.conclusions, e2.conclusions)]
            bad = [e2 for e2 in exts2 if e2 not in good]
            sceptical, credulous = not bad, bool(good)
            # a sceptical success over a non-empty set is a credulous success
            assert credulous or not sceptical
            ok = sceptical if prop.mode is Mode.SCEPTICAL else credulous
            report.cases.append(
                NmrCase(ext, psi, Verdict.HOLDS if ok else Verdict.VIOLATED, bad if not ok else [], good)
            )
    return report
