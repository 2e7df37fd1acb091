"""Graph and markup emitters over code models.

Four graph-description (DOT) documents — code organization, inheritance,
invocation, and the per-package polymetric view — plus an SVG tag cloud with
a ``tag,frequency,category`` CSV sidecar. All emitters are deterministic:
the same model yields byte-identical documents.

Invocation edges are matched by callee name only. A call whose name matches
exactly one declared method (constructors included) gets a plain edge; k > 1
matches yield k dotted candidate edges annotated with ``candidates="k"``; no
match routes to one external node per callee name. Every edge carries the
aggregated record count in its label, so summing count/candidates over all
edges reproduces the invocation-record total.

Polymetric boxes scale linearly: width = max(1, NOC * WIDTH_PER_CLASS),
height = max(1, NOM * HEIGHT_PER_METHOD); the paper's figures show boxes but
no scaling law, so the constants here are the documented choice.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .analyzer import PackageMetrics
from .model import CodeModel, IMPLICIT_SUPERCLASS, InheritanceKind, inheritance_edges

WIDTH_PER_CLASS = 0.25
HEIGHT_PER_METHOD = 0.12
MIN_BOX_UNITS = 1.0

TAG_MIN_FONT = 12
TAG_MAX_FONT = 44
_TAG_CANVAS_WIDTH = 1000
_TAG_MARGIN = 16


class GraphKind(str, Enum):
    ORGANIZATION = "organization"
    INHERITANCE = "inheritance"
    INVOCATION = "invocation"
    POLYMETRIC = "polymetric"
    TAGCLOUD = "tagcloud"


@dataclass
class GraphDoc:
    kind: GraphKind
    body: str


@dataclass
class TagEntry:
    tag: str
    frequency: int
    category: str  # package | class | attribute | method


def _q(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


# ------------------------------------------------------------- organization


def emit_organization(model: CodeModel) -> GraphDoc:
    """Nested clusters: project > packages > classes, methods as nodes."""
    out = ["digraph organization {"]
    out.append("\tnode [shape=box];")
    out.append("\tsubgraph cluster_project {")
    out.append(f"\t\tlabel={_q(model.project_name)};")
    for p_idx, pkg in enumerate(model.packages):
        out.append(f"\t\tsubgraph cluster_p{p_idx} {{")
        out.append(f"\t\t\tlabel={_q(pkg.name)};")
        for c_idx, cls in enumerate(pkg.classes):
            out.append(f"\t\t\tsubgraph cluster_p{p_idx}_c{c_idx} {{")
            out.append(f"\t\t\t\tlabel={_q(cls.name)};")
            seen: Counter[str] = Counter()
            for method in cls.methods:
                ordinal = seen[method.name]
                seen[method.name] += 1
                suffix = f"#{ordinal}" if ordinal else ""
                node_id = f"{pkg.name}.{cls.name}.{method.name}{suffix}"
                out.append(f"\t\t\t\t{_q(node_id)} [label={_q(method.name)}];")
            out.append("\t\t\t}")
        out.append("\t\t}")
    out.append("\t}")
    out.append("}")
    return GraphDoc(GraphKind.ORGANIZATION, "\n".join(out) + "\n")


# -------------------------------------------------------------- inheritance


def emit_inheritance(model: CodeModel) -> GraphDoc:
    """Class nodes grouped by package; one edge per inheritance relation.

    ``extends`` edges are solid, ``implements`` dashed. Supertypes that do
    not resolve to exactly one declared class become dashed external nodes.
    """
    qualified: set[str] = set()
    by_simple: dict[str, list[str]] = {}
    for pkg in model.packages:
        for cls in pkg.classes:
            full = f"{pkg.name}.{cls.name}"
            qualified.add(full)
            by_simple.setdefault(cls.name, []).append(full)

    def resolve(name: str) -> str | None:
        if name in qualified:
            return name
        matches = by_simple.get(name, [])
        if len(matches) == 1:
            return matches[0]
        return None

    out = ["digraph inheritance {"]
    out.append("\tnode [shape=box];")
    for p_idx, pkg in enumerate(model.packages):
        out.append(f"\tsubgraph cluster_p{p_idx} {{")
        out.append(f"\t\tlabel={_q(pkg.name)};")
        for cls in pkg.classes:
            out.append(f"\t\t{_q(f'{pkg.name}.{cls.name}')} "
                       f"[label={_q(cls.name)}];")
        out.append("\t}")
    edges = inheritance_edges(model)
    externals: list[str] = []
    for edge in edges:
        if resolve(edge.supertype) is None and edge.supertype not in externals:
            externals.append(edge.supertype)
    for name in sorted(externals):
        out.append(f"\t{_q(f'external:{name}')} "
                   f"[label={_q(name)}, shape=ellipse, style=dashed];")
    for edge in edges:
        target = resolve(edge.supertype)
        target_id = target if target is not None else f"external:{edge.supertype}"
        style = "solid" if edge.kind is InheritanceKind.EXTENDS else "dashed"
        out.append(f"\t{_q(edge.subclass)} -> {_q(target_id)} "
                   f"[style={style}, kind={_q(edge.kind.value)}];")
    out.append("}")
    return GraphDoc(GraphKind.INHERITANCE, "\n".join(out) + "\n")


# ---------------------------------------------------------------- invocation


def emit_invocation(model: CodeModel) -> GraphDoc:
    """Method-level call graph with name-based matching (see module docs)."""
    declared: dict[str, list[str]] = {}  # simple method name -> node ids
    node_order: list[tuple[str, str]] = []  # (node id, label)
    seen_nodes: set[str] = set()
    for pkg in model.packages:
        for cls in pkg.classes:
            for method in cls.methods:
                node_id = f"{pkg.name}.{cls.name}.{method.name}"
                if node_id in seen_nodes:
                    continue  # overloads collapse onto one node
                seen_nodes.add(node_id)
                node_order.append((node_id, f"{cls.name}.{method.name}"))
                declared.setdefault(method.name, []).append(node_id)

    groups: dict[tuple[str, str], int] = {}
    for pkg in model.packages:
        for cls in pkg.classes:
            for method in cls.methods:
                caller = f"{pkg.name}.{cls.name}.{method.name}"
                for record in method.invocations:
                    key = (caller, record.name)
                    groups[key] = groups.get(key, 0) + 1

    out = ["digraph invocation {"]
    out.append("\tnode [shape=box];")
    for node_id, label in node_order:
        out.append(f"\t{_q(node_id)} [label={_q(label)}];")
    externals = sorted({callee for (_, callee) in groups if callee not in declared})
    for name in externals:
        out.append(f"\t{_q(f'external:{name}')} "
                   f"[label={_q(name)}, shape=ellipse, style=dashed];")
    for (caller, callee), count in sorted(groups.items()):
        targets = declared.get(callee)
        if not targets:
            out.append(f"\t{_q(caller)} -> {_q(f'external:{callee}')} "
                       f'[label="{count}", candidates="1", external="true"];')
            continue
        k = len(targets)
        for target in targets:
            style = ", style=dotted" if k > 1 else ""
            out.append(f"\t{_q(caller)} -> {_q(target)} "
                       f'[label="{count}", candidates="{k}"{style}];')
    out.append("}")
    return GraphDoc(GraphKind.INVOCATION, "\n".join(out) + "\n")


# ---------------------------------------------------------------- polymetric


_RECORD_ESCAPES = str.maketrans({
    "{": r"\{", "}": r"\}", "|": r"\|", "<": r"\<", ">": r"\>",
    '"': r"\"", " ": r"\ ",
})


def emit_polymetric(pkg_metrics: list[PackageMetrics]) -> GraphDoc:
    """One record-shaped box per package with its nine metric rows; box
    size scales with NOC (width) and NOM (height)."""
    out = ["digraph polymetric {"]
    out.append("\tnode [shape=record];")
    if not pkg_metrics:
        out.append('\t"empty" [label="no packages"];')
    for vector in sorted(pkg_metrics, key=lambda v: v.package_name):
        rows = "".join(
            f"{key}: {value}\\l" for key, value in vector.as_dict().items()
        )
        label = "{" + vector.package_name.translate(_RECORD_ESCAPES) + "|" + rows + "}"
        width = max(MIN_BOX_UNITS, vector.noc * WIDTH_PER_CLASS)
        height = max(MIN_BOX_UNITS, vector.nom * HEIGHT_PER_METHOD)
        out.append(
            f"\t{_q(vector.package_name)} [label=\"{label}\", "
            f"width={width:.2f}, height={height:.2f}];"
        )
    out.append("}")
    return GraphDoc(GraphKind.POLYMETRIC, "\n".join(out) + "\n")


# ------------------------------------------------------------------ tag cloud


def compute_tags(model: CodeModel) -> list[TagEntry]:
    """Identifier tags: declared names with pooled frequencies.

    Frequency = declaration count (all categories) plus occurrences of the
    name in access and invocation records. A name declared in several
    categories is listed once, under the highest-priority category
    (method > class > attribute > package). Sorted by frequency (descending),
    ties alphabetically.
    """
    decls: dict[str, Counter] = {
        "package": Counter(), "class": Counter(),
        "attribute": Counter(), "method": Counter(),
    }
    occurrences: Counter[str] = Counter()
    for pkg in model.packages:
        decls["package"][pkg.name.split(".")[-1]] += 1
        for cls in pkg.classes:
            decls["class"][cls.name.split(".")[-1]] += 1
            for attr in cls.attributes:
                decls["attribute"][attr.name] += 1
            for method in cls.methods:
                decls["method"][method.name] += 1
                for access in method.accesses:
                    occurrences[access.name] += 1
                for invocation in method.invocations:
                    occurrences[invocation.name] += 1

    entries: list[TagEntry] = []
    tags = set()
    for counter in decls.values():
        tags.update(counter)
    for tag in tags:
        declared = sum(counter[tag] for counter in decls.values())
        for category in ("method", "class", "attribute", "package"):
            if decls[category][tag]:
                break
        entries.append(TagEntry(tag, declared + occurrences[tag], category))
    entries.sort(key=lambda e: (-e.frequency, e.tag))
    return entries


def emit_tagcloud(model: CodeModel,
                  min_font: int = TAG_MIN_FONT,
                  max_font: int = TAG_MAX_FONT) -> tuple[GraphDoc, list[TagEntry]]:
    """SVG tag cloud; font size interpolates linearly over the frequency
    range, and each tag shows its frequency in red square brackets."""
    entries = compute_tags(model)
    texts: list[str] = []
    x, y = float(_TAG_MARGIN), float(_TAG_MARGIN + max_font)
    row_height = max_font + 12
    if entries:
        fmin = min(e.frequency for e in entries)
        fmax = max(e.frequency for e in entries)
        for entry in entries:
            if fmax == fmin:
                size = (min_font + max_font) // 2
            else:
                scale = (entry.frequency - fmin) / (fmax - fmin)
                size = round(min_font + scale * (max_font - min_font))
            note = f"[{entry.frequency}]"
            note_size = max(min_font - 2, size // 2)
            width = len(entry.tag) * size * 0.62 + len(note) * note_size * 0.62 + 18
            if x + width > _TAG_CANVAS_WIDTH - _TAG_MARGIN and x > _TAG_MARGIN:
                x = float(_TAG_MARGIN)
                y += row_height
            texts.append(
                f'<text x="{x:.1f}" y="{y:.1f}" font-size="{size}" '
                f'font-family="sans-serif">{_svg_escape(entry.tag)}</text>'
            )
            note_x = x + len(entry.tag) * size * 0.62 + 4
            texts.append(
                f'<text x="{note_x:.1f}" y="{y:.1f}" font-size="{note_size}" '
                f'font-family="sans-serif" fill="red">{_svg_escape(note)}</text>'
            )
            x += width
    height = int(y + _TAG_MARGIN)
    body = "\n".join(
        [
            f'<svg xmlns="http://www.w3.org/2000/svg" '
            f'width="{_TAG_CANVAS_WIDTH}" height="{height}" '
            f'viewBox="0 0 {_TAG_CANVAS_WIDTH} {height}">',
            '<rect width="100%" height="100%" fill="white"/>',
            *texts,
            "</svg>",
        ]
    ) + "\n"
    return GraphDoc(GraphKind.TAGCLOUD, body), entries


def tag_entries_csv(entries: list[TagEntry]) -> str:
    """The ``tag,frequency,category`` sidecar table."""
    buffer = io.StringIO(newline="")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["tag", "frequency", "category"])
    for entry in entries:
        writer.writerow([entry.tag, entry.frequency, entry.category])
    return buffer.getvalue()


def _svg_escape(text: str) -> str:
    return (text.replace("&", "&amp;").replace("<", "&lt;")
            .replace(">", "&gt;"))
