"""In-memory code model extracted from object-oriented source.

The model is a plain tree: a project owns packages, packages own classes,
classes own attributes and methods, and methods carry the records harvested
from their bodies (local variables, accesses, invocations, assignments,
exception names). Everything is name-based text; there is no symbol
resolution. Treat all model values as immutable once built: sharing them
between threads is safe as long as nobody mutates.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple


class AccessLevel(str, Enum):
    """Declared visibility; ``default`` means no modifier was written."""

    PUBLIC = "public"
    PROTECTED = "protected"
    PRIVATE = "private"
    DEFAULT = "default"


class InheritanceKind(str, Enum):
    EXTENDS = "extends"
    IMPLEMENTS = "implements"


#: Superclass recorded for types with no explicit ``extends`` clause.
IMPLICIT_SUPERCLASS = "Object"

#: Synthetic method collecting records from static/instance initializer blocks.
INIT_BLOCK_METHOD = "<init-block>"

#: Package name used for compilation units without a package declaration.
DEFAULT_PACKAGE = "default"

_IDENTIFIER_RE = re.compile(r"[A-Za-z_$][A-Za-z0-9_$]*\Z")


class ModelError(ValueError):
    """A structural invariant of the code model is violated."""


@dataclass
class AccessRecord:
    """One read or write of a variable/field inside a method body."""

    name: str
    declared_type: str
    how_used: str


@dataclass
class InvocationRecord:
    """One syntactic call site: callee name plus bracketed argument text."""

    name: str
    arguments: str


@dataclass
class AssignmentRecord:
    lhs: str
    rhs: str


@dataclass
class MethodDecl:
    """Method or constructor; constructors carry return_type ``void``."""

    name: str
    access_level: AccessLevel = AccessLevel.DEFAULT
    return_type: str = "void"
    is_static: bool = False
    parameters: list[tuple[str, str]] = field(default_factory=list)
    comments: list[str] = field(default_factory=list)
    local_variables: list[tuple[str, str]] = field(default_factory=list)
    accesses: list[AccessRecord] = field(default_factory=list)
    invocations: list[InvocationRecord] = field(default_factory=list)
    assignments: list[AssignmentRecord] = field(default_factory=list)
    exceptions: list[str] = field(default_factory=list)

    def signature(self) -> tuple[str, tuple[str, ...]]:
        return self.name, tuple(ptype for _, ptype in self.parameters)


@dataclass
class AttributeDecl:
    name: str
    access_level: AccessLevel = AccessLevel.DEFAULT
    declared_type: str = ""
    is_static: bool = False


@dataclass
class ClassDecl:
    """Class or interface declaration; nested types use dotted names."""

    name: str
    access_level: AccessLevel = AccessLevel.DEFAULT
    is_interface: bool = False
    superclass: str = IMPLICIT_SUPERCLASS
    super_interfaces: list[str] = field(default_factory=list)
    comments: list[str] = field(default_factory=list)
    attributes: list[AttributeDecl] = field(default_factory=list)
    methods: list[MethodDecl] = field(default_factory=list)


@dataclass
class PackageDecl:
    name: str
    classes: list[ClassDecl] = field(default_factory=list)


@dataclass
class CodeModel:
    project_name: str
    packages: list[PackageDecl] = field(default_factory=list)


class InheritanceEdge(NamedTuple):
    subclass: str  # qualified "pkg.Class" name
    supertype: str
    kind: InheritanceKind


def valid_package_name(name: str) -> bool:
    return bool(name) and all(_IDENTIFIER_RE.match(seg) for seg in name.split("."))


def build_model(project_name: str, packages: list[PackageDecl]) -> CodeModel:
    """Assemble a model in canonical order, checking structural invariants.

    Packages sort lexicographically by dotted name, classes by name within
    their package; members keep the order they were declared in. Raises
    ModelError on duplicate names or malformed package names.
    """
    seen_packages: set[str] = set()
    for pkg in packages:
        if not valid_package_name(pkg.name):
            raise ModelError(f"invalid package name: {pkg.name!r}")
        if pkg.name in seen_packages:
            raise ModelError(f"duplicate package: {pkg.name}")
        seen_packages.add(pkg.name)
        seen_classes: set[str] = set()
        for cls in pkg.classes:
            if cls.name in seen_classes:
                raise ModelError(f"duplicate class {cls.name} in package {pkg.name}")
            seen_classes.add(cls.name)
            _check_class(pkg.name, cls)
        pkg.classes.sort(key=lambda c: c.name)
    ordered = sorted(packages, key=lambda p: p.name)
    return CodeModel(project_name=project_name, packages=ordered)


def _check_class(pkg_name: str, cls: ClassDecl) -> None:
    if not cls.name:
        raise ModelError(f"unnamed class in package {pkg_name}")
    if cls.is_interface and cls.superclass != IMPLICIT_SUPERCLASS:
        raise ModelError(f"interface {cls.name} cannot extend a class")
    seen_attrs: set[str] = set()
    for attr in cls.attributes:
        if not attr.name or not attr.declared_type:
            raise ModelError(f"incomplete attribute in class {cls.name}")
        if attr.name in seen_attrs:
            raise ModelError(f"duplicate attribute {attr.name} in class {cls.name}")
        seen_attrs.add(attr.name)
    seen_methods: set[tuple[str, tuple[str, ...]]] = set()
    for method in cls.methods:
        sig = method.signature()
        if sig in seen_methods:
            raise ModelError(
                f"duplicate method {method.name}({', '.join(sig[1])}) in class {cls.name}"
            )
        seen_methods.add(sig)
        seen_params: set[str] = set()
        for pname, _ in method.parameters:
            if pname in seen_params:
                raise ModelError(
                    f"duplicate parameter {pname} in {cls.name}.{method.name}"
                )
            seen_params.add(pname)


def lookup_class(model: CodeModel, qualified_name: str) -> ClassDecl | None:
    """Find a class by "pkg.dotted.Name.ClassName" or bare class name.

    Dotted queries are tried at every package/class split point (nested
    classes have dotted names themselves). Returns None when nothing or
    more than one declaration matches.
    """
    matches: list[ClassDecl] = []
    if "." in qualified_name:
        for i, ch in enumerate(qualified_name):
            if ch != ".":
                continue
            pkg_name, cls_name = qualified_name[:i], qualified_name[i + 1:]
            for pkg in model.packages:
                if pkg.name != pkg_name:
                    continue
                for cls in pkg.classes:
                    if cls.name == cls_name:
                        matches.append(cls)
    # A bare name, or a dotted nested-class name used without its package.
    for pkg in model.packages:
        for cls in pkg.classes:
            if cls.name == qualified_name:
                matches.append(cls)
    if len(matches) == 1:
        return matches[0]
    return None


def inheritance_edges(model: CodeModel) -> list[InheritanceEdge]:
    """Explicit inheritance relations, ordered (subclass, kind, supertype).

    Emits one ``extends`` edge per class with an explicit superclass and one
    ``implements`` edge per declared super-interface. Implicit ``Object``
    never appears.
    """
    edges: list[InheritanceEdge] = []
    for pkg in model.packages:
        for cls in pkg.classes:
            qualified = f"{pkg.name}.{cls.name}"
            if cls.superclass != IMPLICIT_SUPERCLASS:
                edges.append(
                    InheritanceEdge(qualified, cls.superclass, InheritanceKind.EXTENDS)
                )
            for iface in cls.super_interfaces:
                edges.append(
                    InheritanceEdge(qualified, iface, InheritanceKind.IMPLEMENTS)
                )
    edges.sort(key=lambda e: (e.subclass, e.kind.value, e.supertype))
    return edges


def normalize_comment_text(raw: str) -> str:
    """Strip comment delimiters and collapse internal whitespace.

    ``raw`` is the full comment token, delimiters included. Javadoc-style
    leading asterisks on continuation lines are dropped. Returns "" for
    comments with no content.
    """
    if raw.startswith("//"):
        body = raw[2:]
    elif raw.startswith("/*"):
        body = raw[2:]
        if body.endswith("*/"):
            body = body[:-2]
        if body.startswith("*"):  # javadoc opener /**
            body = body[1:]
    else:
        body = raw
    lines = [line.lstrip().lstrip("*") for line in body.splitlines()]
    return " ".join(" ".join(lines).split())
