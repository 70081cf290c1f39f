"""Parser and pretty-printer for the framework description language.

::

    # comment
    assumption alpha, beta .
    contrary alpha : c_alpha .
    rule c_alpha <- beta .
    rule fact <- .
    prefer beta < alpha .
"""
from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field

from .framework import FrameworkError, NotFlat, Rule, build_framework

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)"
    r"|(?P<arrow><-)|(?P<le><=)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[.,:<])"
)
KEYWORDS = ("assumption", "contrary", "rule", "prefer")


class DslSyntaxError(SyntaxError):
    def __init__(self, message, line, column):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


@dataclass
class Token:
    kind: str
    text: str
    line: int
    column: int


@dataclass
class Statement:
    kind: str
    args: tuple
    line: int
    column: int


@dataclass
class DslDocument:
    statements: list = field(default_factory=list)


def tokenize(text: str) -> list:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise DslSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line, line_start = line + 1, m.end()
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, text=None, what=None):
        tok = self.toks[self.i]
        if (kind and tok.kind != kind) or (text and tok.text != text):
            found = tok.text or "end of input"
            raise DslSyntaxError(f"expected {what or text or kind}, found {found!r}", tok.line, tok.column)
        self.i += 1
        return tok

    def ident(self):
        tok = self.peek()
        if tok.kind == "ident" and tok.text in KEYWORDS:
            raise DslSyntaxError(f"keyword {tok.text!r} used as identifier", tok.line, tok.column)
        return self.take("ident", what="identifier").text

    def ident_list(self):
        out = [self.ident()]
        while self.peek().text == ",":
            self.take(text=",")
            out.append(self.ident())
        return out

    def statement(self):
        kw = self.take("ident", what="statement keyword")
        if kw.text == "assumption":
            args = tuple(self.ident_list())
        elif kw.text == "contrary":
            a = self.ident()
            self.take(text=":")
            args = (a, self.ident())
        elif kw.text == "rule":
            head = self.ident()
            self.take("arrow", what="'<-'")
            body = self.ident_list() if self.peek().kind == "ident" else []
            args = (head, tuple(body))
        elif kw.text == "prefer":
            a = self.ident()
            op = self.peek()
            if op.text not in ("<", "<="):
                raise DslSyntaxError(f"expected '<' or '<=', found {op.text!r}", op.line, op.column)
            self.i += 1
            args = (a, op.text, self.ident())
        else:
            raise DslSyntaxError(f"unknown statement {kw.text!r}", kw.line, kw.column)
        self.take(text=".", what="'.'")
        return Statement(kw.text, args, kw.line, kw.column)

    def document(self):
        doc = DslDocument()
        while self.peek().kind != "eof":
            doc.statements.append(self.statement())
        return doc


def parse_document(text: str) -> DslDocument:
    return _Parser(text).document()


def parse(text: str):
    """Parse DSL text into a validated framework."""
    doc = parse_document(text)
    assumptions, contrary, rules = {}, {}, {}
    leq, strict = [], []
    where = {}

    def note(key, st):
        if key in where:
            warnings.warn(f"{st.line}:{st.column}: duplicate declaration of {key[1]!r} collapsed", stacklevel=3)
            return False
        where[key] = st
        return True

    for st in doc.statements:
        if st.kind == "assumption":
            for a in st.args:
                if note(("assumption", a), st):
                    assumptions[a] = st
        elif st.kind == "contrary":
            a, c = st.args
            if a in contrary and contrary[a] != c:
                raise DslSyntaxError(
                    f"conflicting contrary for {a!r}: {contrary[a]!r} vs {c!r}", st.line, st.column
                )
            if note(("contrary", a), st):
                contrary[a] = c
        elif st.kind == "rule":
            r = Rule(st.args[0], st.args[1])
            if note(("rule", str(r)), st):
                rules[r] = st
        else:
            a, op, b = st.args
            if note(("prefer", f"{a} {op} {b}"), st):
                (strict if op == "<" else leq).append((a, b))
                where[("pref-edge", a, b)] = st

    def locate(err):
        edge = getattr(err, "edge", None)
        if edge and ("prefer", f"{edge[0]} < {edge[1]}") in where:
            return where[("prefer", f"{edge[0]} < {edge[1]}")]
        s = err.sentence
        if isinstance(err, NotFlat):
            for r, st in rules.items():
                if r.head == s:
                    return st
        for key in (("assumption", s), ("contrary", s)):
            if key in where:
                return where[key]
        for key, st in where.items():
            if key[0] == "pref-edge" and s in key[1:]:
                return st
        return None

    try:
        return build_framework(rules, assumptions, contrary, leq, strict)
    except FrameworkError as err:
        # keep the specific error type, prefix the source position
        st = locate(err)
        err.line, err.column = (st.line, st.column) if st else (1, 1)
        err.args = (f"{err.line}:{err.column}: {err.args[0]}",)
        raise


def render(fw) -> str:
    """Pretty-print ``fw`` so that ``parse(render(fw)) == fw``."""
    lines = ["assumption " + ", ".join(sorted(fw.assumptions)) + " ."]
    for a in sorted(fw.assumptions):
        lines.append(f"contrary {a} : {fw.contrary[a]} .")
    for r in sorted(fw.rules, key=lambda r: (r.head, sorted(r.body))):
        lines.append(f"rule {r.head} <- {', '.join(sorted(r.body))} .".replace("<-  .", "<- ."))
    pre = fw.preference
    for a, b in sorted(pre.leq):
        if a == b:
            continue
        op = "<" if pre.lt(a, b) else "<="
        lines.append(f"prefer {a} {op} {b} .")
    return "\n".join(lines) + "\n"
