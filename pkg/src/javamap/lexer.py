"""Tokenizer for Java-syntax source text.

Produces a flat token stream with byte offsets so later stages can slice
verbatim source text. Comments are collected separately (they feed comment
counts and attachment); whitespace is discarded. Nothing here validates
syntax beyond token shape: unterminated strings and block comments are
reported and consumed to end of line / end of file.
"""

from __future__ import annotations

import bisect
import re
from dataclasses import dataclass, field

IDENT = "ident"
KEYWORD = "keyword"
NUMBER = "number"
STRING = "string"
CHAR = "char"
OP = "op"
COMMENT = "comment"
EOF = "eof"

KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while true false null""".split()
)

PRIMITIVE_TYPES = frozenset(
    "boolean byte char short int long float double void".split()
)

MODIFIER_KEYWORDS = frozenset(
    """public protected private static final abstract native synchronized
    transient volatile strictfp default""".split()
)

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[\s\x0b\f]+)
  | (?P<comment>//[^\n]*|(?s:/\*.*?\*/))
  | (?P<badcomment>(?s:/\*.*))
  | (?P<textblock>(?s:\"\"\".*?\"\"\"))
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<badstring>"(?:[^"\\\n]|\\.)*)
  | (?P<char>'(?:[^'\\\n]|\\.)*')
  | (?P<badchar>'(?:[^'\\\n]|\\.)*)
  | (?P<number>
        0[xX][0-9a-fA-F_]+[lL]?
      | 0[bB][01_]+[lL]?
      | (?:\d[\d_]*(?:\.[\d_]*)?|\.\d[\d_]*)(?:[eE][+-]?[\d_]+)?[fFdDlL]?
    )
  | (?P<ident>[A-Za-z_$\u00aa-\U0010ffff][A-Za-z0-9_$\u00aa-\U0010ffff]*)
  | (?P<op>
        >>>=|>>>|<<=|>>=|\.\.\.
      | ->|::|\+\+|--|<<|>>|<=|>=|==|!=|&&|\|\||\+=|-=|\*=|/=|%=|&=|\|=|\^=
      | [{}()\[\];,.@<>=+\-*/%&|^!~?:]
    )
  | (?P<bad>.)
    """,
    re.VERBOSE,
)


class Token:
    __slots__ = ("kind", "text", "pos", "line")

    def __init__(self, kind: str, text: str, pos: int, line: int):
        self.kind = kind
        self.text = text
        self.pos = pos
        self.line = line

    @property
    def end(self) -> int:
        return self.pos + len(self.text)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Token({self.kind}, {self.text!r}, line {self.line})"


@dataclass
class LexResult:
    tokens: list[Token] = field(default_factory=list)  # comments excluded
    comments: list[Token] = field(default_factory=list)
    problems: list[tuple[int, str]] = field(default_factory=list)  # (pos, message)
    code_line_count: int = 0
    total_line_count: int = 0
    line_starts: list[int] = field(default_factory=list)

    def line_col(self, pos: int) -> tuple[int, int]:
        line = bisect.bisect_right(self.line_starts, pos)
        return line, pos - self.line_starts[line - 1] + 1


def tokenize(source: str) -> LexResult:
    result = LexResult()
    result.total_line_count = len(source.splitlines())
    result.line_starts = [0] + [m.end() for m in re.finditer(r"\n", source)]

    code_lines: set[int] = set()
    line = 1  # the alternation is exhaustive, so matches are adjacent
    for match in _TOKEN_RE.finditer(source):
        kind = match.lastgroup
        text = match.group()
        pos = match.start()
        newlines = text.count("\n")
        if kind == "ws":
            line += newlines
            continue
        if kind in ("comment", "badcomment"):
            if kind == "badcomment":
                result.problems.append((pos, "unterminated block comment"))
            result.comments.append(Token(COMMENT, text, pos, line))
            line += newlines
            continue
        if kind in ("string", "textblock"):
            token = Token(STRING, text, pos, line)
        elif kind == "badstring":
            result.problems.append((pos, "unterminated string literal"))
            token = Token(STRING, text, pos, line)
        elif kind == "char":
            token = Token(CHAR, text, pos, line)
        elif kind == "badchar":
            result.problems.append((pos, "unterminated character literal"))
            token = Token(CHAR, text, pos, line)
        elif kind == "number":
            token = Token(NUMBER, text, pos, line)
        elif kind == "ident":
            tkind = KEYWORD if text in KEYWORDS else IDENT
            token = Token(tkind, text, pos, line)
        elif kind == "op":
            token = Token(OP, text, pos, line)
        else:  # bad
            result.problems.append((pos, f"unexpected character {text!r}"))
            continue
        result.tokens.append(token)
        code_lines.update(range(line, line + newlines + 1))
        line += newlines

    result.tokens.append(Token(EOF, "", len(source), line))
    result.code_line_count = len(code_lines)
    return result
