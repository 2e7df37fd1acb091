"""Recursive-descent parser turning Java-syntax source into the code model.

The parser is purely syntactic: no classpath, no symbol resolution, no type
binding. It runs in two phases per compilation unit. Phase one parses the
declaration structure (package, types, fields, method signatures) and records
each method body as a token span. Phase two walks the recorded bodies
statement by statement and harvests the method records. Splitting phases lets
body analysis see every field declared anywhere in the file.

Counting and extraction rules (these define the numbers the analyzer reports):

* Lines of code: a line counts when it carries at least one token that is
  neither whitespace nor comment.
* Comments: one per comment token (``//``, ``/*..*/``, ``/**..*/``). A comment
  attaches to the nearest following class or method declaration; comments
  inside a method body attach to that method. Comments that normalize to
  nothing, or that follow every declaration in the file, are discarded.
* Accesses: every read or write of a simple name (not followed by ``(``) or a
  ``this.name`` expression whose name matches a parameter, a local variable in
  scope, or any field declared in the file. The record carries the innermost
  statement text (without its trailing semicolon) or, inside a control-flow
  header, the header expression text. Declarator names themselves are not
  occurrences; names inside initializer expressions are.
* Invocations: every syntactic call site. ``a.b.c(x)`` records ``c``;
  ``new T(...)`` records ``T``; ``super(...)``/``this(...)`` record the
  keyword text. Argument text is the verbatim source between the parentheses,
  wrapped in square brackets. Array creations are not invocations.
* Assignments: one per assignment expression, compound operators included,
  with verbatim left/right texts. Declarator initializers are declarations,
  not assignments.
* Local variables: declaration statements, classic/enhanced ``for`` variables,
  ``try``-with-resources declarations, and ``catch`` parameters.
* Anonymous classes, lambda block bodies, and local classes are scanned for
  invocations and accesses attributed to the enclosing method; they declare no
  model classes and contribute no locals or assignment records.
* Field initializer expressions are consumed but not analyzed (the model has
  no owner to attribute their records to).

Supported grammar subset: packages, imports (consumed), classes, interfaces,
enums (constants become public static attributes), annotation types (modeled
as interfaces), fields, methods, constructors, initializer blocks (merged into
one synthetic ``<init-block>`` method per class), annotations (skipped),
generics (flattened into declared-type text; erased from supertype names), and
lambdas. ``record`` declarations and ``module-info`` files are out of scope
and surface as parse diagnostics.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from pathlib import Path

from .lexer import (
    EOF,
    IDENT,
    KEYWORD,
    MODIFIER_KEYWORDS,
    OP,
    PRIMITIVE_TYPES,
    LexResult,
    Token,
    tokenize,
)
from .model import (
    DEFAULT_PACKAGE,
    INIT_BLOCK_METHOD,
    AccessLevel,
    AccessRecord,
    AssignmentRecord,
    AttributeDecl,
    ClassDecl,
    CodeModel,
    InvocationRecord,
    MethodDecl,
    PackageDecl,
    build_model,
    normalize_comment_text,
)

SEVERITY_ERROR = "error"
SEVERITY_WARNING = "warning"

_ASSIGN_OPS = frozenset(
    ["=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="]
)
_OPENERS = frozenset("([{")
_CLOSERS = frozenset(")]}")
_ACCESS_MODIFIERS = {"public", "protected", "private"}
_GT_CLOSES = {"<": 1, ">": -1, ">>": -2, ">>>": -3}


@dataclass
class SourceUnit:
    """Per-file bookkeeping. Line counts and the declared package are filled
    in by the parser; construct with just path and content."""

    file_path: str
    content: str
    line_count_total: int = 0
    line_count_code: int = 0
    package_name: str = ""


@dataclass
class ParseDiagnostic:
    file_path: str
    line: int
    column: int
    message: str
    severity: str = SEVERITY_ERROR


class _SyntaxProblem(Exception):
    def __init__(self, pos: int, message: str):
        super().__init__(message)
        self.pos = pos
        self.message = message


class _FatalUnit(Exception):
    pass


@dataclass
class _PendingBody:
    method: MethodDecl
    start: int  # token index of '{'
    chain: list[ClassDecl]  # enclosing classes, innermost first


class _Scope:
    """Name resolution context for one method body walk."""

    def __init__(self, params: dict[str, str], chain: list[ClassDecl],
                 file_fields: dict[str, str]):
        self.params = params
        self.locals: dict[str, str] = {}
        self.chain_fields: dict[str, str] = {}
        for cls in chain:
            for attr in cls.attributes:
                self.chain_fields.setdefault(attr.name, attr.declared_type)
        self.file_fields = file_fields
        self.overlays: list[dict[str, str]] = []

    def lookup(self, name: str) -> str | None:
        for overlay in reversed(self.overlays):
            if name in overlay:
                return overlay[name]
        for table in (self.locals, self.params, self.chain_fields, self.file_fields):
            if name in table:
                return table[name]
        return None

    def lookup_field(self, name: str) -> str | None:
        for table in (self.chain_fields, self.file_fields):
            if name in table:
                return table[name]
        return None


class _UnitParser:
    def __init__(self, unit: SourceUnit, lex: LexResult):
        self.unit = unit
        self.src = unit.content
        self.lex = lex
        self.toks = lex.tokens
        self.i = 0
        self.package_name = DEFAULT_PACKAGE
        self.classes: list[ClassDecl] = []
        self.diagnostics: list[ParseDiagnostic] = []
        self.pending: list[_PendingBody] = []
        self.decl_starts: list[tuple[int, list[str]]] = []  # (offset, comments)
        self.body_spans: list[tuple[int, int, list[str]]] = []  # (lo, hi, comments)
        self.init_blocks: dict[int, MethodDecl] = {}  # id(cls) -> synthetic method

    # ------------------------------------------------------------- utilities

    def cur(self) -> Token:
        return self.toks[self.i]

    def peek(self, offset: int = 1) -> Token:
        j = self.i + offset
        return self.toks[j] if j < len(self.toks) else self.toks[-1]

    def at(self, text: str) -> bool:
        return self.toks[self.i].text == text

    def advance(self) -> Token:
        tok = self.toks[self.i]
        if tok.kind != EOF:
            self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.cur()
        if tok.text != text:
            raise _SyntaxProblem(tok.pos, f"expected {text!r}, found {tok.text!r}")
        return self.advance()

    def expect_ident(self) -> Token:
        tok = self.cur()
        if tok.kind != IDENT:
            raise _SyntaxProblem(tok.pos, f"expected identifier, found {tok.text!r}")
        return self.advance()

    def diag(self, pos: int, message: str, severity: str = SEVERITY_ERROR) -> None:
        line, col = self.lex.line_col(pos)
        self.diagnostics.append(
            ParseDiagnostic(self.unit.file_path, line, col, message, severity)
        )

    def match_group(self, i: int) -> int:
        """Index of the closer matching the opener at ``i`` ((), [], {})."""
        depth = 0
        j = i
        while j < len(self.toks):
            text = self.toks[j].text
            if text in _OPENERS:
                depth += 1
            elif text in _CLOSERS:
                depth -= 1
                if depth == 0:
                    return j
            j += 1
        raise _SyntaxProblem(self.toks[i].pos, "unbalanced brackets")

    def text_between(self, lo: int, hi: int) -> str:
        """Verbatim source between token indices [lo, hi), trimmed."""
        if hi <= lo:
            return ""
        return self.src[self.toks[lo].pos: self.toks[hi - 1].end].strip()

    # -------------------------------------------------------------- phase one

    def parse(self) -> None:
        try:
            self._skip_annotations()
            if self.at("package"):
                self.advance()
                self.package_name = self._qualified_name()
                self.expect(";")
            while self.at("import"):
                while self.cur().kind != EOF and not self.at(";"):
                    self.advance()
                if self.at(";"):
                    self.advance()
        except _SyntaxProblem as err:
            self.diag(err.pos, err.message)
            raise _FatalUnit from err
        while self.cur().kind != EOF:
            if self.at(";"):
                self.advance()
                continue
            start = self.cur().pos
            try:
                self._parse_type_decl(None, start)
            except _SyntaxProblem as err:
                self.diag(err.pos, err.message)
                self._recover_toplevel()
        self._analyze_bodies()
        self._attach_comments()

    def _qualified_name(self) -> str:
        parts = [self.expect_ident().text]
        while self.at(".") and self.peek().kind == IDENT:
            self.advance()
            parts.append(self.advance().text)
        return ".".join(parts)

    def _skip_annotations(self) -> None:
        while self.at("@") and self.peek().text != "interface":
            self.advance()
            self._qualified_name()
            if self.at("("):
                self.i = self.match_group(self.i) + 1

    def _parse_modifiers(self) -> tuple[AccessLevel, bool]:
        access = AccessLevel.DEFAULT
        is_static = False
        while True:
            self._skip_annotations()
            tok = self.cur()
            if tok.kind == KEYWORD and tok.text in MODIFIER_KEYWORDS:
                if tok.text in _ACCESS_MODIFIERS and access is AccessLevel.DEFAULT:
                    access = AccessLevel(tok.text)
                if tok.text == "static":
                    is_static = True
                self.advance()
                continue
            return access, is_static

    def _skip_generic_params(self) -> None:
        if not self.at("<"):
            return
        depth = 0
        while self.cur().kind != EOF:
            text = self.advance().text
            depth += _GT_CLOSES.get(text, 0)
            if depth <= 0:
                return
        raise _SyntaxProblem(self.cur().pos, "unterminated type parameters")

    def _erased_type_name(self) -> str:
        name = self._qualified_name()
        self._skip_generic_params()
        while self.at("[") and self.peek().text == "]":
            self.advance()
            self.advance()
        return name

    def _parse_type_decl(self, outer: tuple[str, list[ClassDecl]] | None,
                         start_pos: int) -> None:
        access, _ = self._parse_modifiers()
        if self.at("@") and self.peek().text == "interface":
            self.advance()  # annotation type declaration, modeled as interface
        tok = self.cur()
        if tok.text not in ("class", "interface", "enum"):
            raise _SyntaxProblem(
                tok.pos, f"expected type declaration, found {tok.text!r}"
            )
        keyword = self.advance().text
        is_interface = keyword == "interface"
        is_enum = keyword == "enum"
        name_tok = self.expect_ident()
        outer_name, outer_chain = outer if outer else ("", [])
        full_name = f"{outer_name}.{name_tok.text}" if outer_name else name_tok.text

        cls = ClassDecl(name=full_name, access_level=access,
                        is_interface=is_interface)
        self._skip_generic_params()
        if self.at("extends"):
            self.advance()
            if is_interface:
                cls.super_interfaces.append(self._erased_type_name())
                while self.at(","):
                    self.advance()
                    cls.super_interfaces.append(self._erased_type_name())
            else:
                cls.superclass = self._erased_type_name()
        if self.at("implements"):
            self.advance()
            cls.super_interfaces.append(self._erased_type_name())
            while self.at(","):
                self.advance()
                cls.super_interfaces.append(self._erased_type_name())

        self.classes.append(cls)
        self.decl_starts.append((start_pos, cls.comments))
        chain = [cls] + outer_chain
        self.expect("{")
        if is_enum:
            self._parse_enum_constants(cls)
        while not self.at("}"):
            if self.cur().kind == EOF:
                raise _SyntaxProblem(self.cur().pos,
                                     f"unterminated body of {full_name}")
            if self.at(";"):
                self.advance()
                continue
            member_start = self.cur().pos
            try:
                self._parse_member(cls, name_tok.text, full_name, chain,
                                   member_start)
            except _SyntaxProblem as err:
                self.diag(err.pos, err.message)
                self._recover_member()
        self.expect("}")

    def _parse_enum_constants(self, cls: ClassDecl) -> None:
        while self.cur().kind == IDENT or self.at("@"):
            self._skip_annotations()
            if self.cur().kind != IDENT:
                break
            name_tok = self.advance()
            if self.at("("):  # constant arguments: consumed, not analyzed
                self.i = self.match_group(self.i) + 1
            if self.at("{"):  # constant class body: consumed, not analyzed
                self.i = self.match_group(self.i) + 1
            if any(a.name == name_tok.text for a in cls.attributes):
                self.diag(name_tok.pos,
                          f"duplicate enum constant {name_tok.text} ignored",
                          SEVERITY_WARNING)
            else:
                cls.attributes.append(
                    AttributeDecl(name=name_tok.text,
                                  access_level=AccessLevel.PUBLIC,
                                  declared_type=cls.name.split(".")[-1],
                                  is_static=True)
                )
            if self.at(","):
                self.advance()
                continue
            break
        if self.at(";"):
            self.advance()

    def _parse_member(self, cls: ClassDecl, simple_name: str, full_name: str,
                      chain: list[ClassDecl], start_pos: int) -> None:
        if self.at("{") or (self.at("static") and self.peek().text == "{"):
            if self.at("static"):
                self.advance()
            self._record_init_block(cls, chain, start_pos)
            return
        access, is_static = self._parse_modifiers()
        if self.at("{"):  # modifiers were just 'static' of an initializer block
            self._record_init_block(cls, chain, start_pos)
            return
        if self.cur().text in ("class", "interface", "enum") or (
                self.at("@") and self.peek().text == "interface"):
            self._parse_type_decl((full_name, chain), start_pos)
            return
        self._skip_generic_params()  # generic method or constructor
        tok = self.cur()
        if tok.kind == IDENT and tok.text == simple_name and self.peek().text == "(":
            self.advance()
            method = MethodDecl(name=simple_name, access_level=access,
                                return_type="void", is_static=is_static)
            self._finish_method(cls, method, chain, start_pos)
            return
        type_text = self._parse_type_text()
        name_tok = self.expect_ident()
        if self.at("("):
            method = MethodDecl(name=name_tok.text, access_level=access,
                                return_type=type_text, is_static=is_static)
            self._finish_method(cls, method, chain, start_pos)
        else:
            self._finish_field(cls, access, is_static, type_text, name_tok)

    def _record_init_block(self, cls: ClassDecl, chain: list[ClassDecl],
                           start_pos: int) -> None:
        method = self.init_blocks.get(id(cls))
        if method is None:
            method = MethodDecl(name=INIT_BLOCK_METHOD,
                                access_level=AccessLevel.DEFAULT,
                                return_type="void")
            self.init_blocks[id(cls)] = method
            cls.methods.append(method)
        self.decl_starts.append((start_pos, method.comments))
        lo = self.i
        hi = self.match_group(self.i)
        self.i = hi + 1
        self.pending.append(_PendingBody(method, lo, chain))
        self.body_spans.append((self.toks[lo].pos, self.toks[hi].end,
                                method.comments))

    def _parse_type_text(self) -> str:
        """Declared type as written, generics and dimensions included."""
        start_tok = self.cur()
        if start_tok.kind == KEYWORD and start_tok.text in PRIMITIVE_TYPES:
            self.advance()
        elif start_tok.kind == IDENT:
            self._qualified_name()
            self._skip_generic_params()
        else:
            raise _SyntaxProblem(start_tok.pos,
                                 f"expected type, found {start_tok.text!r}")
        while self.at("[") and self.peek().text == "]":
            self.advance()
            self.advance()
        end_tok = self.toks[self.i - 1]
        return self.src[start_tok.pos: end_tok.end].strip()

    def _finish_method(self, cls: ClassDecl, method: MethodDecl,
                       chain: list[ClassDecl], start_pos: int) -> None:
        self.expect("(")
        while not self.at(")"):
            self._skip_annotations()
            if self.at("final"):
                self.advance()
                self._skip_annotations()
            ptype = self._parse_type_text()
            if self.at("..."):
                self.advance()
                ptype += "..."
            if self.cur().kind == KEYWORD and self.at("this"):
                self.advance()  # receiver parameter, carries no name
            else:
                pname = self.expect_ident().text
                while self.at("[") and self.peek().text == "]":
                    self.advance()
                    self.advance()
                    ptype += "[]"
                if any(pname == existing for existing, _ in method.parameters):
                    self.diag(self.cur().pos,
                              f"duplicate parameter {pname} in {method.name} ignored",
                              SEVERITY_WARNING)
                else:
                    method.parameters.append((pname, ptype))
            if self.at(","):
                self.advance()
        self.expect(")")
        while self.at("[") and self.peek().text == "]":  # C-style return dims
            self.advance()
            self.advance()
        if self.at("throws"):
            self.advance()
            method.exceptions.append(self._erased_type_name())
            while self.at(","):
                self.advance()
                method.exceptions.append(self._erased_type_name())
        if self.at("default"):  # annotation type element default
            self._skip_annotation_default()
        duplicate = method.signature() in {m.signature() for m in cls.methods}
        if duplicate:
            self.diag(start_pos,
                      f"duplicate method {method.name} in class {cls.name} ignored",
                      SEVERITY_WARNING)
        else:
            cls.methods.append(method)
        self.decl_starts.append((start_pos, method.comments))
        if self.at("{"):
            lo = self.i
            hi = self.match_group(self.i)
            self.i = hi + 1
            if not duplicate:
                self.pending.append(_PendingBody(method, lo, chain))
                self.body_spans.append((self.toks[lo].pos, self.toks[hi].end,
                                        method.comments))
        else:
            self.expect(";")

    def _skip_annotation_default(self) -> None:
        self.expect("default")
        depth = 0
        while self.cur().kind != EOF:
            text = self.cur().text
            if text in _OPENERS:
                depth += 1
            elif text in _CLOSERS:
                depth -= 1
            elif text == ";" and depth == 0:
                return
            self.advance()

    def _finish_field(self, cls: ClassDecl, access: AccessLevel, is_static: bool,
                      type_text: str, name_tok: Token) -> None:
        while True:
            name = name_tok.text
            declared = type_text
            while self.at("[") and self.peek().text == "]":
                self.advance()
                self.advance()
                declared += "[]"
            if any(a.name == name for a in cls.attributes):
                self.diag(name_tok.pos,
                          f"duplicate attribute {name} in class {cls.name} ignored",
                          SEVERITY_WARNING)
            else:
                cls.attributes.append(
                    AttributeDecl(name=name, access_level=access,
                                  declared_type=declared,
                                  is_static=True if cls.is_interface else is_static)
                )
            if self.at("="):  # initializer consumed, not analyzed
                self.advance()
                depth = 0
                while self.cur().kind != EOF:
                    text = self.cur().text
                    if text in _OPENERS:
                        depth += 1
                    elif text in _CLOSERS:
                        depth -= 1
                    elif depth == 0 and text in (",", ";"):
                        break
                    self.advance()
            if self.at(","):
                self.advance()
                name_tok = self.expect_ident()
                continue
            self.expect(";")
            return

    def _recover_member(self) -> None:
        depth = 0
        while self.cur().kind != EOF:
            text = self.cur().text
            if text == "{":
                depth += 1
            elif text == "}":
                if depth == 0:
                    return  # class closing brace; leave it for the member loop
                depth -= 1
                if depth == 0:
                    self.advance()
                    return
            elif text == ";" and depth == 0:
                self.advance()
                return
            self.advance()

    def _recover_toplevel(self) -> None:
        depth = 0
        while self.cur().kind != EOF:
            text = self.cur().text
            if text == "{":
                depth += 1
            elif text == "}":
                depth = max(0, depth - 1)
            elif depth == 0 and text in ("class", "interface", "enum"):
                return
            self.advance()

    # -------------------------------------------------------------- phase two

    def _analyze_bodies(self) -> None:
        file_fields: dict[str, str] = {}
        for cls in self.classes:
            for attr in cls.attributes:
                file_fields.setdefault(attr.name, attr.declared_type)
        for body in self.pending:
            scope = _Scope(dict(body.method.parameters), body.chain, file_fields)
            walker = _BodyWalker(self, body.method, scope)
            try:
                walker.walk_block(body.start)
            except _SyntaxProblem as err:
                self.diag(err.pos, f"body analysis stopped: {err.message}",
                          SEVERITY_WARNING)

    # ------------------------------------------------------- comment handling

    def _attach_comments(self) -> None:
        starts = sorted(self.decl_starts, key=lambda item: item[0])
        offsets = [off for off, _ in starts]
        for tok in self.lex.comments:
            text = normalize_comment_text(tok.text)
            if not text:
                continue
            owner: list[str] | None = None
            for lo, hi, comments in self.body_spans:
                if lo < tok.pos < hi:
                    owner = comments
                    break
            if owner is None:
                idx = bisect.bisect_right(offsets, tok.pos)
                if idx < len(offsets):
                    owner = starts[idx][1]
            if owner is not None:
                owner.append(text)


class _BodyWalker:
    """Statement-level walk of one method body, harvesting records."""

    def __init__(self, parser: _UnitParser, method: MethodDecl, scope: _Scope,
                 anon_mode: bool = False):
        self.p = parser
        self.toks = parser.toks
        self.method = method
        self.scope = scope
        self.anon_mode = anon_mode

    def declare_local(self, name: str, declared_type: str) -> None:
        if self.anon_mode:
            if self.scope.overlays:
                self.scope.overlays[-1][name] = declared_type
            return
        self.method.local_variables.append((name, declared_type))
        self.scope.locals[name] = declared_type

    def match_group(self, i: int) -> int:
        return self.p.match_group(i)

    def find_semicolon(self, i: int, stop: int) -> int:
        depth = 0
        j = i
        while j < stop:
            text = self.toks[j].text
            if text in _OPENERS:
                depth += 1
            elif text in _CLOSERS:
                if depth == 0:
                    raise _SyntaxProblem(self.toks[j].pos, "missing semicolon")
                depth -= 1
            elif text == ";" and depth == 0:
                return j
            j += 1
        pos = self.toks[i].pos if i < len(self.toks) else 0
        raise _SyntaxProblem(pos, "missing semicolon")

    # --- statement walking

    def walk_block(self, i: int) -> int:
        """toks[i] must be '{'; walks statements, returns index past '}'."""
        end = self.match_group(i)
        j = i + 1
        while j < end:
            j = self.walk_statement(j, end)
        return end + 1

    def walk_statement(self, i: int, stop: int) -> int:
        tok = self.toks[i]
        text = tok.text
        if text == ";":
            return i + 1
        if text == "{":
            return self.walk_block(i)
        if text in ("if", "while", "switch", "synchronized"):
            if self.toks[i + 1].text != "(":
                raise _SyntaxProblem(tok.pos, f"malformed {text} statement")
            header_close = self.match_group(i + 1)
            self.scan_segment(i + 2, header_close)
            j = header_close + 1
            if text == "switch":
                return self.walk_switch_body(j)
            j = self.walk_statement(j, stop)
            if text == "if" and j < stop and self.toks[j].text == "else":
                j = self.walk_statement(j + 1, stop)
            return j
        if text == "for":
            return self.walk_for(i, stop)
        if text == "do":
            j = self.walk_statement(i + 1, stop)
            if self.toks[j].text != "while":
                raise _SyntaxProblem(self.toks[j].pos, "malformed do statement")
            header_close = self.match_group(j + 1)
            self.scan_segment(j + 2, header_close)
            j = header_close + 1
            if j < len(self.toks) and self.toks[j].text == ";":
                j += 1
            return j
        if text == "try":
            return self.walk_try(i)
        if text in ("return", "throw", "assert"):
            semi = self.find_semicolon(i + 1, stop)
            self.scan_segment(i + 1, semi, text_from=i)
            return semi + 1
        if text in ("break", "continue"):
            return self.find_semicolon(i, stop) + 1
        if text in ("class", "interface", "enum") or (
                text in MODIFIER_KEYWORDS and self._looks_like_local_class(i)):
            return self.skip_local_class(i)
        if tok.kind == IDENT and self.toks[i + 1].text == ":":
            return self.walk_statement(i + 2, stop)  # labeled statement
        decl_end = self.try_declaration(i, stop)
        if decl_end is not None:
            return decl_end
        semi = self.find_semicolon(i, stop)
        self.scan_segment(i, semi)
        return semi + 1

    def _looks_like_local_class(self, i: int) -> bool:
        j = i
        while self.toks[j].text in MODIFIER_KEYWORDS:
            j += 1
        return self.toks[j].text in ("class", "interface", "enum")

    def skip_local_class(self, i: int) -> int:
        """Local class: scan its body like an anonymous class, emit nothing."""
        j = i
        while self.toks[j].text != "{":
            if self.toks[j].kind == EOF:
                raise _SyntaxProblem(self.toks[j].pos, "unterminated local class")
            j += 1
        end = self.match_group(j)
        self.walk_anon_body(j + 1, end)
        return end + 1

    def walk_switch_body(self, i: int) -> int:
        if self.toks[i].text != "{":
            raise _SyntaxProblem(self.toks[i].pos, "malformed switch body")
        end = self.match_group(i)
        j = i + 1
        while j < end:
            text = self.toks[j].text
            if text == "case":
                j += 1
                lo = j
                depth = 0
                while j < end:
                    t = self.toks[j].text
                    if t in _OPENERS:
                        depth += 1
                    elif t in _CLOSERS:
                        depth -= 1
                    elif depth == 0 and t in (":", "->"):
                        break
                    j += 1
                self.scan_segment(lo, j)
                j += 1
            elif text == "default":
                j += 1
                if j < end and self.toks[j].text in (":", "->"):
                    j += 1
            else:
                j = self.walk_statement(j, end)
        return end + 1

    def walk_for(self, i: int, stop: int) -> int:
        if self.toks[i + 1].text != "(":
            raise _SyntaxProblem(self.toks[i].pos, "malformed for statement")
        header_open = i + 1
        header_close = self.match_group(header_open)
        semis: list[int] = []
        depth = 0
        for j in range(header_open + 1, header_close):
            text = self.toks[j].text
            if text in _OPENERS:
                depth += 1
            elif text in _CLOSERS:
                depth -= 1
            elif text == ";" and depth == 0:
                semis.append(j)
        if semis:  # classic for
            init_lo, init_hi = header_open + 1, semis[0]
            if init_hi > init_lo:
                if self.try_declaration(init_lo, init_hi,
                                        region_end=init_hi) is None:
                    self.scan_segment(init_lo, init_hi)
            if len(semis) > 1:
                cond_lo, cond_hi = semis[0] + 1, semis[1]
                if cond_hi > cond_lo:
                    self.scan_segment(cond_lo, cond_hi)
                update_lo, update_hi = semis[1] + 1, header_close
                if update_hi > update_lo:
                    self.scan_segment(update_lo, update_hi)
        else:  # enhanced for
            colon = None
            depth = 0
            for j in range(header_open + 1, header_close):
                text = self.toks[j].text
                if text in _OPENERS:
                    depth += 1
                elif text in _CLOSERS:
                    depth -= 1
                elif text == ":" and depth == 0:
                    colon = j
                    break
            if colon is None or colon < header_open + 2:
                raise _SyntaxProblem(self.toks[header_open].pos,
                                     "malformed for header")
            k = header_open + 1
            while self.toks[k].text in MODIFIER_KEYWORDS:
                k += 1
            var_name = self.toks[colon - 1].text
            var_type = self.p.text_between(k, colon - 1)
            self.declare_local(var_name, var_type or "unknown")
            self.scan_segment(colon + 1, header_close)
        return self.walk_statement(header_close + 1, stop)

    def walk_try(self, i: int) -> int:
        j = i + 1
        if self.toks[j].text == "(":  # try-with-resources
            close = self.match_group(j)
            seg_lo = j + 1
            depth = 0
            for k in range(j + 1, close):
                text = self.toks[k].text
                if text in _OPENERS:
                    depth += 1
                elif text in _CLOSERS:
                    depth -= 1
                elif text == ";" and depth == 0:
                    self._try_resource(seg_lo, k)
                    seg_lo = k + 1
            if close > seg_lo:
                self._try_resource(seg_lo, close)
            j = close + 1
        j = self.walk_block(j)
        while self.toks[j].text == "catch":
            open_paren = j + 1
            close = self.match_group(open_paren)
            k = open_paren + 1
            while self.toks[k].text in MODIFIER_KEYWORDS:
                k += 1
            var_name = self.toks[close - 1].text
            var_type = self.p.text_between(k, close - 1)
            self.declare_local(var_name, var_type or "unknown")
            j = self.walk_block(close + 1)
        if self.toks[j].text == "finally":
            j = self.walk_block(j + 1)
        return j

    def _try_resource(self, lo: int, hi: int) -> None:
        if hi <= lo:
            return
        if self.try_declaration(lo, hi, region_end=hi) is None:
            self.scan_segment(lo, hi)

    # --- declarations

    def try_declaration(self, i: int, stop: int,
                        region_end: int | None = None) -> int | None:
        """Parse a local variable declaration at ``i``; returns the index just
        past it, or None when the tokens do not form a declaration."""
        j = i
        while self.toks[j].text == "final" or self.toks[j].text == "@":
            if self.toks[j].text == "@":
                j += 1
                if self.toks[j].kind != IDENT:
                    return None
                j += 1
                while self.toks[j].text == "." and self.toks[j + 1].kind == IDENT:
                    j += 2
                if self.toks[j].text == "(":
                    j = self.match_group(j) + 1
            else:
                j += 1
        type_end = self.scan_type(j, stop)
        if type_end is None:
            return None
        base_type = self.p.text_between(j, type_end)
        k = type_end
        if self.toks[k].kind != IDENT:
            return None
        probe = k + 1
        while self.toks[probe].text == "[" and self.toks[probe + 1].text == "]":
            probe += 2
        if self.toks[probe].text not in ("=", ",", ";"):
            if region_end is None or probe != region_end:
                return None
        stmt_end = region_end
        if stmt_end is None:
            stmt_end = self.find_semicolon(k, stop)
        stmt_text = self.p.text_between(i, stmt_end)
        while True:
            name = self.toks[k].text
            declared = base_type
            k += 1
            while self.toks[k].text == "[" and self.toks[k + 1].text == "]":
                declared += "[]"
                k += 2
            self.declare_local(name, declared)
            if self.toks[k].text == "=":
                init_lo = k + 1
                depth = 0
                k += 1
                while k < stmt_end:
                    text = self.toks[k].text
                    if text in _OPENERS:
                        depth += 1
                    elif text in _CLOSERS:
                        depth -= 1
                    elif text == "," and depth == 0:
                        break
                    k += 1
                self.scan_segment(init_lo, k, text_override=stmt_text,
                                  allow_assignments=False)
            if k < stmt_end and self.toks[k].text == ",":
                k += 1
                if self.toks[k].kind != IDENT:
                    raise _SyntaxProblem(self.toks[k].pos, "malformed declaration")
                continue
            break
        return stmt_end + 1

    def scan_type(self, i: int, stop: int) -> int | None:
        """End index of a type starting at ``i``, or None if not a type."""
        tok = self.toks[i]
        if tok.kind == KEYWORD and tok.text in PRIMITIVE_TYPES and tok.text != "void":
            j = i + 1
        elif tok.kind == IDENT:
            j = i + 1
            while self.toks[j].text == "." and self.toks[j + 1].kind == IDENT:
                j += 2
            if self.toks[j].text == "<":
                nxt = self._scan_type_args(j, stop)
                if nxt is None:
                    return None
                j = nxt
        else:
            return None
        while self.toks[j].text == "[" and self.toks[j + 1].text == "]":
            j += 2
        return j

    def _scan_type_args(self, i: int, stop: int) -> int | None:
        depth = 0
        j = i
        allowed = {",", ".", "?", "&", "[", "]", "extends", "super"}
        while j < stop:
            tok = self.toks[j]
            text = tok.text
            if text in _GT_CLOSES:
                depth += _GT_CLOSES[text]
            elif tok.kind == IDENT:
                pass
            elif tok.kind == KEYWORD and text in PRIMITIVE_TYPES:
                pass
            elif text in allowed:
                pass
            else:
                return None
            j += 1
            if depth <= 0:
                return j if depth == 0 else None
        return None

    # --- expression segments

    def scan_segment(self, lo: int, hi: int, text_from: int | None = None,
                     text_override: str | None = None,
                     allow_assignments: bool = True) -> None:
        """Harvest records from the expression tokens in [lo, hi).

        ``text_from`` widens the statement text (keywords like ``return``);
        ``text_override`` substitutes it entirely (declaration statements).
        """
        if hi <= lo:
            return
        if text_override is not None:
            stmt_text = text_override
        else:
            start = text_from if text_from is not None else lo
            stmt_text = self.p.text_between(start, hi)

        flat: list[int] = []
        blocks: list[tuple[str, int, int]] = []  # deferred lambda/anon bodies
        j = lo
        while j < hi:
            text = self.toks[j].text
            if text == "{":
                prev = self.toks[j - 1].text if j > lo else ""
                end = self.match_group(j)
                if prev == "->":
                    blocks.append(("lambda", j, end))
                    j = end + 1
                    continue
                if prev == ")":
                    blocks.append(("anon", j, end))
                    j = end + 1
                    continue
                flat.append(j)  # array initializer: contents stay inline
                j += 1
                continue
            flat.append(j)
            j += 1

        if allow_assignments and not self.anon_mode:
            self._scan_assignments(flat, lo, hi)
        self._scan_names(flat, stmt_text)
        for kind, open_idx, end in blocks:
            if kind == "lambda":
                self.scope.overlays.append({})
                sub = _BodyWalker(self.p, self.method, self.scope,
                                  anon_mode=True)
                k = open_idx + 1
                while k < end:
                    k = sub.walk_statement(k, end)
                self.scope.overlays.pop()
            else:
                self.walk_anon_body(open_idx + 1, end)

    def _scan_assignments(self, flat: list[int], tok_lo: int, tok_hi: int) -> None:
        ops: list[tuple[int, int, int]] = []  # (op index, group lo, group hi)
        self._collect_assign_ops(flat, 0, len(flat), tok_lo, tok_hi, ops)
        ops.sort(key=lambda item: item[0])
        for op_idx, group_lo, group_hi in ops:
            prev_ops = [o for o, glo, ghi in ops
                        if glo == group_lo and ghi == group_hi and o < op_idx]
            lhs_lo = (max(prev_ops) + 1) if prev_ops else group_lo
            lhs = self.p.text_between(lhs_lo, op_idx)
            rhs = self.p.text_between(op_idx + 1, group_hi)
            if lhs and rhs:
                self.method.assignments.append(AssignmentRecord(lhs=lhs, rhs=rhs))

    def _collect_assign_ops(self, flat: list[int], f_lo: int, f_hi: int,
                            tok_lo: int, tok_hi: int,
                            out: list[tuple[int, int, int]]) -> None:
        k = f_lo
        while k < f_hi:
            idx = flat[k]
            tok = self.toks[idx]
            if tok.text in _OPENERS:
                inner = 0
                m = k
                while m < f_hi:
                    t = self.toks[flat[m]].text
                    if t in _OPENERS:
                        inner += 1
                    elif t in _CLOSERS:
                        inner -= 1
                        if inner == 0:
                            break
                    m += 1
                if m < f_hi:
                    self._collect_assign_ops(flat, k + 1, m,
                                             flat[k] + 1, flat[m], out)
                k = m + 1
                continue
            if tok.kind == OP and tok.text in _ASSIGN_OPS:
                out.append((idx, tok_lo, tok_hi))
            k += 1

    def _scan_names(self, flat: list[int], stmt_text: str) -> None:
        n = len(flat)
        k = 0
        while k < n:
            idx = flat[k]
            tok = self.toks[idx]
            nxt = self.toks[flat[k + 1]] if k + 1 < n else None
            prev = self.toks[flat[k - 1]] if k > 0 else None

            if tok.kind == KEYWORD and tok.text == "new":
                k = self._scan_new(flat, k, n)
                continue
            if tok.kind == KEYWORD and tok.text in ("super", "this"):
                if nxt is not None and nxt.text == "(":
                    self._emit_invocation(tok.text, flat[k + 1])
                k += 1
                continue
            if tok.kind == IDENT:
                if nxt is not None and nxt.text == "(":
                    self._emit_invocation(tok.text, flat[k + 1])
                    k += 1
                    continue
                if prev is not None and prev.text == ".":
                    before = self.toks[flat[k - 2]] if k >= 2 else None
                    if before is not None and before.kind == KEYWORD \
                            and before.text == "this":
                        declared = self.scope.lookup_field(tok.text) \
                            or self.scope.lookup(tok.text) or "unknown"
                        self._emit_access(tok.text, stmt_text, declared)
                    k += 1
                    continue
                declared = self.scope.lookup(tok.text)
                if declared is not None:
                    self._emit_access(tok.text, stmt_text, declared)
            k += 1

    def _scan_new(self, flat: list[int], k: int, n: int) -> int:
        """Handle 'new Qualified.Name<Args>(...)'; array creations fall through."""
        j = k + 1
        last_name = None
        while j < n:
            tok = self.toks[flat[j]]
            if tok.kind == IDENT or (tok.kind == KEYWORD
                                     and tok.text in PRIMITIVE_TYPES):
                last_name = tok.text
                j += 1
                if j < n and self.toks[flat[j]].text == ".":
                    j += 1
                    continue
            break
        if j < n and self.toks[flat[j]].text == "<":
            depth = 0
            while j < n:
                depth += _GT_CLOSES.get(self.toks[flat[j]].text, 0)
                j += 1
                if depth <= 0:
                    break
        if last_name and j < n and self.toks[flat[j]].text == "(":
            self._emit_invocation(last_name, flat[j])
        return j

    def _emit_invocation(self, name: str, lparen_idx: int) -> None:
        rparen_idx = self.match_group(lparen_idx)
        args = self.p.src[self.toks[lparen_idx].end: self.toks[rparen_idx].pos]
        self.method.invocations.append(
            InvocationRecord(name=name, arguments=f"[{args.strip()}]")
        )

    def _emit_access(self, name: str, stmt_text: str, declared: str) -> None:
        self.method.accesses.append(
            AccessRecord(name=name, declared_type=declared, how_used=stmt_text)
        )

    # --- anonymous class bodies

    def walk_anon_body(self, lo: int, hi: int) -> None:
        """Scan an anonymous/local class body for records, declaring nothing."""
        overlay: dict[str, str] = {}
        # collect field names first so its method bodies can resolve them
        k = lo
        while k < hi:
            text = self.toks[k].text
            if text in ("{", "("):
                k = self.match_group(k) + 1
                continue
            type_end = self.scan_type(k, hi)
            if type_end is not None and self.toks[type_end].kind == IDENT:
                after = type_end + 1
                while self.toks[after].text == "[" and self.toks[after + 1].text == "]":
                    after += 2
                if self.toks[after].text in ("=", ";", ","):
                    overlay[self.toks[type_end].text] = \
                        self.p.text_between(k, type_end)
                k = after
                continue
            k += 1
        self.scope.overlays.append(overlay)
        j = lo
        while j < hi:
            text = self.toks[j].text
            if text == ";":
                j += 1
                continue
            if text == "{":  # initializer block inside the anonymous class
                sub = _BodyWalker(self.p, self.method, self.scope, anon_mode=True)
                j = sub.walk_block(j)
                continue
            j = self._anon_member(j, hi)
        self.scope.overlays.pop()

    def _anon_member(self, i: int, hi: int) -> int:
        j = i
        while self.toks[j].text in MODIFIER_KEYWORDS or self.toks[j].text == "@":
            if self.toks[j].text == "@":
                j += 1
                while self.toks[j].kind == IDENT or self.toks[j].text == ".":
                    j += 1
                if self.toks[j].text == "(":
                    j = self.match_group(j) + 1
            else:
                j += 1
        if self.toks[j].text in ("class", "interface", "enum"):
            return self.skip_local_class(j)
        if self.toks[j].text == "<":
            depth = 0
            while j < hi:
                depth += _GT_CLOSES.get(self.toks[j].text, 0)
                j += 1
                if depth <= 0:
                    break
        if self.toks[j].kind == KEYWORD and self.toks[j].text == "void":
            type_end = j + 1
        else:
            type_end = self.scan_type(j, hi)
        if type_end is not None and self.toks[type_end].kind == IDENT:
            j = type_end + 1
        else:
            return self._skip_to_anon_boundary(j, hi)
        while self.toks[j].text == "[" and self.toks[j + 1].text == "]":
            j += 2
        if self.toks[j].text == "(":  # method: walk its body in anon mode
            j = self.match_group(j) + 1
            while j < hi and self.toks[j].text not in ("{", ";"):
                j += 1
            if j >= hi:
                return hi
            if self.toks[j].text == ";":
                return j + 1
            sub = _BodyWalker(self.p, self.method, self.scope, anon_mode=True)
            return sub.walk_block(j)
        return self._skip_to_anon_boundary(j, hi)  # field declarators

    def _skip_to_anon_boundary(self, i: int, hi: int) -> int:
        depth = 0
        j = i
        while j < hi:
            text = self.toks[j].text
            if text in _OPENERS:
                depth += 1
            elif text in _CLOSERS:
                depth -= 1
            elif text == ";" and depth == 0:
                return j + 1
            j += 1
        return hi


# ------------------------------------------------------------------ public API


def parse_unit(source: SourceUnit) -> tuple[CodeModel, list[ParseDiagnostic]]:
    """Parse one compilation unit into a model fragment.

    The fragment holds the unit's declared package with classes in declaration
    order; project_name is empty. Line counts and the package name are filled
    in on ``source``. Files broken before any structure exists yield a
    fragment with no packages plus error diagnostics.
    """
    fragment, diagnostics, _ = _parse_unit_full(source)
    return fragment, diagnostics


def _parse_unit_full(
    source: SourceUnit,
) -> tuple[CodeModel, list[ParseDiagnostic], bool]:
    lex = tokenize(source.content)
    source.line_count_total = lex.total_line_count
    source.line_count_code = lex.code_line_count
    parser = _UnitParser(source, lex)
    for pos, message in lex.problems:
        parser.diag(pos, message)
    fatal = False
    try:
        parser.parse()
    except _FatalUnit:
        fatal = True
    source.package_name = parser.package_name
    packages: list[PackageDecl] = []
    if not fatal and (parser.classes or parser.package_name != DEFAULT_PACKAGE):
        packages.append(PackageDecl(name=parser.package_name,
                                    classes=parser.classes))
    fragment = CodeModel(project_name="", packages=packages)
    return fragment, parser.diagnostics, fatal


def parse_project(
    root_dir: str | Path,
    project_name: str,
    extensions: tuple[str, ...] = (".java",),
) -> tuple[CodeModel, list[SourceUnit], list[ParseDiagnostic]]:
    """Parse every matching file under ``root_dir`` into one merged model.

    Ancestor packages of every declared package are materialized (empty), the
    merge is deterministic regardless of enumeration order, and files with
    fatal syntax errors are skipped and reported. Raises OSError when the
    root directory is missing.
    """
    root = Path(root_dir)
    if not root.is_dir():
        raise FileNotFoundError(f"source directory not found: {root}")

    files = sorted(
        (p for p in root.rglob("*") if p.is_file() and p.suffix in extensions),
        key=lambda p: p.relative_to(root).as_posix(),
    )
    units: list[SourceUnit] = []
    diagnostics: list[ParseDiagnostic] = []
    package_classes: dict[str, list[ClassDecl]] = {}
    class_origin: dict[tuple[str, str], str] = {}

    for path in files:
        rel = path.relative_to(root).as_posix()
        content = path.read_bytes().decode("utf-8", errors="replace")
        unit = SourceUnit(file_path=rel, content=content)
        fragment, diags, fatal = _parse_unit_full(unit)
        diagnostics.extend(diags)
        if fatal:
            continue
        units.append(unit)
        for pkg in fragment.packages:
            bucket = package_classes.setdefault(pkg.name, [])
            for cls in pkg.classes:
                key = (pkg.name, cls.name)
                if key in class_origin:
                    diagnostics.append(
                        ParseDiagnostic(
                            rel, 1, 1,
                            f"duplicate class {pkg.name}.{cls.name} also declared "
                            f"in {class_origin[key]}; redefinition ignored",
                            SEVERITY_WARNING,
                        )
                    )
                    continue
                class_origin[key] = rel
                bucket.append(cls)

    for name in list(package_classes):
        parts = name.split(".")
        for k in range(1, len(parts)):
            package_classes.setdefault(".".join(parts[:k]), [])

    packages = [PackageDecl(name=name, classes=classes)
                for name, classes in package_classes.items()]
    model = build_model(project_name, packages)
    return model, units, diagnostics
