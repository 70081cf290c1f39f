"""Reasoning engine for flat assumption-based argumentation with preferences."""
from .framework import (
    ContraryOfNonAssumption,
    EmptyAssumptionSet,
    Framework,
    FrameworkError,
    InconsistentStrictPreference,
    MissingContrary,
    NotFlat,
    Preorder,
    Rule,
    UnknownAssumptionInPreference,
    build_framework,
    is_total,
    lt,
)
from .deduction import SupportSet, closure, derives, minimal_supports
from .attacks import AttackEdge, AttackKind, TooLarge, attack_graph, attacks, lt_attacks
from .semantics import (
    Extension,
    Family,
    SemanticsId,
    def_operator,
    defends,
    extensions,
    grounded_via_lfp,
    is_admissible,
    is_conflict_free,
)
from .dsl import DslSyntaxError, parse, render

__version__ = "0.1.0"
