"""Contraposition axioms and preference-handling principles as decision procedures."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .attacks import attacks
from .framework import is_total
from .semantics import (
    Family,
    SemanticsId,
    defends,
    defends_pointwise,
    extensions,
    is_admissible,
    is_conflict_free,
)


class Status(enum.Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    NOT_APPLICABLE = "not-applicable"


@dataclass
class CheckReport:
    name: str
    status: Status = Status.HOLDS
    witnesses: list = field(default_factory=list)
    reason: str = ""

    @property
    def holds(self) -> bool:
        return self.status is not Status.VIOLATED

    def add(self, **witness):
        self.witnesses.append(witness)
        self.status = Status.VIOLATED

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "status": self.status.value,
            "holds": self.holds,
            "reason": self.reason,
            "witnesses": [{k: _jsonable(v) for k, v in w.items()} for w in self.witnesses],
        }


def _jsonable(v):
    if isinstance(v, (set, frozenset)):
        return sorted(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _contrary_supports(fw):
    """Yield (attacked assumption, minimal support mask of its contrary)."""
    idx = fw.index
    for t, m in zip(idx.entry_targets, idx.entry_masks):
        yield idx.order[t], m


def check_contraposition(fw) -> CheckReport:
    idx = fw.index
    report = CheckReport("contraposition")
    for beta, m in _contrary_supports(fw):
        support = idx.names(m)
        for alpha in sorted(support):
            rest = idx.mask(support - {alpha}) | idx.bit[beta]
            if not idx.derives_mask(rest, fw.contrary[alpha]):
                report.add(support=support, attacked=beta, missing=alpha,
                           clause=f"{sorted(idx.names(rest))} does not derive {fw.contrary[alpha]}")
    return report


def check_weak_contraposition(fw) -> CheckReport:
    idx = fw.index
    pre = fw.preference
    report = CheckReport("weak-contraposition")
    for beta, m in _contrary_supports(fw):
        support = idx.names(m)
        below = [a for a in support if pre.lt(a, beta)]
        if not below:
            continue
        # try <=-minimal candidates first; any one discharges the support
        below.sort(key=lambda a: (sum(pre.le(b, a) for b in fw.assumptions), a))
        if not any(idx.derives_mask(idx.mask(support - {a}) | idx.bit[beta], fw.contrary[a]) for a in below):
            report.add(support=support, attacked=beta, candidates=sorted(below),
                       clause="no strictly lower member admits a contrapositive deduction")
    return report


def check_conflict_preservation(fw, sem: SemanticsId) -> CheckReport:
    report = CheckReport(f"conflict-preservation[{sem}]")
    for ext in extensions(fw, sem):
        for a in sorted(ext.members):
            for b in sorted(ext.members):
                if attacks(fw, {a}, {b}):
                    report.add(extension=ext.members, attacker=a, attacked=b)
    return report


def check_empty_preferences(fw, family: Family) -> CheckReport:
    stripped = fw.without_preferences()
    report = CheckReport(f"empty-preferences[{family.value}]")
    plain = extensions(stripped, SemanticsId(family, False)).members()
    pref = extensions(stripped, SemanticsId(family, True)).members()
    for e in sorted(plain ^ pref, key=sorted):
        report.add(extension=e, plain=e in plain, preference_aware=e in pref)
    return report


def maximal_elements(fw) -> frozenset:
    pre = fw.preference
    return frozenset(a for a in fw.assumptions if not any(pre.lt(a, b) for b in fw.assumptions))


def check_maximal_elements(fw, sem: SemanticsId) -> CheckReport:
    report = CheckReport(f"maximal-elements[{sem}]")
    if not is_total(fw.preference, sorted(fw.assumptions)):
        report.status = Status.NOT_APPLICABLE
        report.reason = "preference ordering is not total"
        return report
    top = maximal_elements(fw)
    if not is_conflict_free(fw, top, True):
        report.status = Status.NOT_APPLICABLE
        report.reason = "maximal elements are not <-conflict-free"
        return report
    for ext in extensions(fw, sem):
        if not top <= ext.members:
            report.add(extension=ext.members, maximal=top, missing=top - ext.members)
    return report


def check_principle_one(fw, sem: SemanticsId) -> CheckReport:
    pre = fw.preference
    report = CheckReport(f"principle-one[{sem}]")
    exts = [e.members for e in extensions(fw, sem)]
    for e in exts:
        for e2 in exts:
            gained, lost = e - e2, e2 - e
            if len(gained) != 1 or len(lost) != 1:
                continue
            (better,), (worse,) = gained, lost
            if pre.lt(worse, better):
                report.add(preferred=e, dispreferred=e2, common=e & e2, better=better, worse=worse)
    return report


def check_fundamental_lemma(fw) -> CheckReport:
    """Every <-admissible S defending a and a2 yields an admissible S+{a} defending a2."""
    idx = fw.index
    report = CheckReport("fundamental-lemma")
    for s in _admissible_sets(fw):
        defended = idx.names(idx.kernel.defended(idx.mask(s), True))
        for a in sorted(defended):
            grown = s | {a}
            if not is_admissible(fw, grown, True):
                report.add(admissible=s, added=a, clause="union not <-admissible")
                continue
            for a2 in sorted(defended):
                if not defends(fw, grown, {a2}, True):
                    report.add(admissible=s, added=a, other=a2, clause="union stops defending")
    return report


def _admissible_sets(fw):
    idx = fw.index
    _, adm, _, _ = idx.kernel.classify(True)
    return [idx.names(m) for m in adm]


def check_defence_forms(fw) -> CheckReport:
    """Report <-conflict-free sets where set-defence and member-wise defence disagree."""
    idx = fw.index
    report = CheckReport("defence-forms")
    for m in idx.kernel.conflict_free_sets(True):
        e = idx.names(m)
        if defends(fw, e, e, True) != defends_pointwise(fw, e, True):
            report.add(extension=e, set_form=defends(fw, e, e, True), pointwise=defends_pointwise(fw, e, True))
    return report
