"""Extension semantics for the plain and the preference-aware attack relations."""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from typing import Iterable

from . import kernel
from .attacks import TooLarge

DEFAULT_MAX_ASSUMPTIONS = 20


def max_assumptions() -> int:
    return int(os.environ.get("ABAP_MAX_A", DEFAULT_MAX_ASSUMPTIONS))


class Family(enum.Enum):
    STABLE = "stable"
    COMPLETE = "complete"
    PREFERRED = "preferred"
    GROUNDED = "grounded"
    IDEAL = "ideal"


@dataclass(frozen=True)
class SemanticsId:
    family: Family
    preference_aware: bool = True

    @classmethod
    def parse(cls, name: str, preference_aware: bool = True) -> "SemanticsId":
        if name.startswith("<-"):
            name, preference_aware = name[2:], True
        return cls(Family(name), preference_aware)

    def __str__(self):
        return ("<-" if self.preference_aware else "") + self.family.value


ALL_SEMANTICS = tuple(SemanticsId(f, p) for p in (False, True) for f in Family)


@dataclass(frozen=True)
class Extension:
    members: frozenset
    conclusions: frozenset

    @classmethod
    def of(cls, fw, members: Iterable[str]) -> "Extension":
        members = frozenset(members)
        idx = fw.index
        return cls(members, idx.closure_mask(idx.mask(members)))

    def sort_key(self):
        return tuple(sorted(self.members))


@dataclass
class ExtensionSet:
    """Result of one enumeration: extensions plus diagnostics.

    ``notes`` flags situations the caller may want to surface, e.g. several
    ideal extensions (only guaranteed unique under contraposition).
    """

    semantics: SemanticsId
    extensions: list
    notes: list = field(default_factory=list)

    def members(self) -> set:
        return {e.members for e in self.extensions}

    def __iter__(self):
        return iter(self.extensions)

    def __len__(self):
        return len(self.extensions)


def _check_size(fw, bound=None):
    bound = max_assumptions() if bound is None else bound
    if len(fw.assumptions) > bound:
        raise TooLarge(f"{len(fw.assumptions)} assumptions exceeds the enumeration bound {bound}")


def is_conflict_free(fw, e: Iterable[str], preference_aware: bool = True) -> bool:
    idx = fw.index
    m = idx.mask(e)
    return not idx.kernel.rel(m, m, preference_aware)


def defends(fw, e: Iterable[str], target: Iterable[str], preference_aware: bool = True) -> bool:
    idx = fw.index
    return idx.kernel.set_defends(idx.mask(e), idx.mask(target), preference_aware)


def defends_pointwise(fw, e: Iterable[str], preference_aware: bool = True) -> bool:
    """Whether ``e`` defends each of its members taken as a singleton."""
    idx = fw.index
    m = idx.mask(e)
    return idx.kernel.defended(m, preference_aware) & m == m


def is_admissible(fw, e: Iterable[str], preference_aware: bool = True) -> bool:
    # set-form defence for <-admissibility; the plain relation uses the
    # pointwise form, which coincides with the set form there
    e = frozenset(e)
    if not is_conflict_free(fw, e, preference_aware):
        return False
    if preference_aware:
        return defends(fw, e, e, True)
    return defends_pointwise(fw, e, False)


def def_operator(fw, a: Iterable[str], preference_aware: bool = True) -> frozenset:
    idx = fw.index
    return idx.names(idx.kernel.defended(idx.mask(a), preference_aware))


def grounded_via_lfp(fw, preference_aware: bool = True) -> Extension:
    """Least fixed point of the defence operator, iterated from the empty set.

    Coincides with the <-grounded extension when contraposition holds; it is
    never substituted for the enumerated one.
    """
    idx = fw.index
    cur = 0
    while True:
        nxt = idx.kernel.defended(cur, preference_aware)
        if nxt == cur:
            return Extension.of(fw, idx.names(cur))
        cur = nxt


class _Tables:
    def __init__(self, fw, pref):
        idx = fw.index
        self.cf, self.adm, self.cpl, self.stb = idx.kernel.classify(pref)
        self._preferred = None

    @property
    def preferred(self):
        if self._preferred is None:
            self._preferred = kernel.maximal(self.adm)
        return self._preferred


def _extension_masks(tables: _Tables, family: Family, notes: list) -> list:
    if family is Family.STABLE:
        return tables.stb
    if family is Family.COMPLETE:
        return tables.cpl
    if family is Family.PREFERRED:
        return tables.preferred
    if family is Family.GROUNDED:
        out = kernel.minimal(tables.cpl)
        if len(out) != 1:
            notes.append(f"{len(out)} grounded extensions")
        return out
    inter = -1
    for p in tables.preferred:
        inter &= p
    out = kernel.maximal(e for e in tables.adm if e & inter == e)
    if len(out) != 1:
        notes.append(f"{len(out)} ideal extensions")
    return out


def extensions(fw, sem: SemanticsId, bound: int | None = None) -> ExtensionSet:
    _check_size(fw, bound)
    notes = []
    masks = _extension_masks(_Tables(fw, sem.preference_aware), sem.family, notes)
    return _wrap(fw, sem, masks, notes)


def all_extensions(fw, semantics: Iterable[SemanticsId] = ALL_SEMANTICS, bound: int | None = None) -> dict:
    """Enumerate several semantics sharing one classification pass per relation."""
    _check_size(fw, bound)
    tables = {}
    out = {}
    for sem in semantics:
        if sem.preference_aware not in tables:
            tables[sem.preference_aware] = _Tables(fw, sem.preference_aware)
        notes = []
        masks = _extension_masks(tables[sem.preference_aware], sem.family, notes)
        out[sem] = _wrap(fw, sem, masks, notes)
    return out


def _wrap(fw, sem, masks, notes) -> ExtensionSet:
    idx = fw.index
    exts = sorted((Extension.of(fw, idx.names(m)) for m in masks), key=Extension.sort_key)
    return ExtensionSet(sem, exts, notes)
