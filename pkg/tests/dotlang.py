"""Reference parser for the DOT graph-description language.

Transcribed from the DOT language grammar (graph/digraph, statement lists,
node/edge/attr statements, ID=ID assignments, nested subgraphs, quoted and
numeral IDs). Used as the independent acceptance parser for emitted graphs;
it shares no code with the emitters. HTML string IDs and node ports are not
produced by the emitters and are not supported.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import pyparsing as pp


@dataclass
class Node:
    name: str
    attrs: dict[str, str]


@dataclass
class Edge:
    source: str
    target: str
    attrs: dict[str, str]


@dataclass
class Subgraph:
    name: str | None
    statements: list = field(default_factory=list)

    @property
    def label(self) -> str | None:
        for stmt in self.statements:
            if isinstance(stmt, tuple) and stmt[0] == "label":
                return stmt[1]
        return None


@dataclass
class DotFile:
    directed: bool
    name: str | None
    statements: list

    def nodes(self) -> list[Node]:
        return _collect(self.statements, Node)

    def edges(self) -> list[Edge]:
        return _collect(self.statements, Edge)

    def subgraphs(self) -> list[Subgraph]:
        return _collect(self.statements, Subgraph)


def _collect(statements, kind) -> list:
    found = []
    for stmt in statements:
        if isinstance(stmt, kind):
            found.append(stmt)
        if isinstance(stmt, Subgraph):
            found.extend(_collect(stmt.statements, kind))
    return found


def _grammar() -> pp.ParserElement:
    LBRACE, RBRACE, LBRACK, RBRACK, EQ = map(pp.Suppress, "{}[]=")
    SEMI = pp.Suppress(";")

    ident = pp.Regex(r"[A-Za-z_-￿][A-Za-z0-9_-￿]*")
    number = pp.Regex(r"-?(\.[0-9]+|[0-9]+(\.[0-9]*)?)")
    quoted = pp.QuotedString('"', esc_char="\\", multiline=True)
    dot_id = quoted | ident | number

    a_item = pp.Group(dot_id + EQ + dot_id)
    a_list = pp.OneOrMore(a_item + pp.Optional(pp.Suppress(pp.one_of(", ;"))))
    attr_list = pp.OneOrMore(LBRACK + pp.Optional(a_list) + RBRACK)

    def attrs_of(tokens) -> dict[str, str]:
        return {key: value for key, value in tokens}

    stmt = pp.Forward()
    stmt_list = pp.ZeroOrMore(stmt + pp.Optional(SEMI))

    edge_op = pp.one_of("-> --")
    edge_stmt = dot_id + pp.OneOrMore(pp.Suppress(edge_op) + dot_id) \
        + pp.Optional(pp.Group(attr_list))

    def make_edges(tokens):
        names = list(tokens)
        attrs: dict[str, str] = {}
        if names and isinstance(names[-1], pp.ParseResults):
            attrs = attrs_of(names.pop())
        return [Edge(source=a, target=b, attrs=attrs)
                for a, b in zip(names, names[1:])]

    edge_stmt.set_parse_action(make_edges)

    node_stmt = dot_id + pp.Optional(pp.Group(attr_list))
    node_stmt.set_parse_action(
        lambda t: Node(name=t[0],
                       attrs=attrs_of(t[1]) if len(t) > 1 else {})
    )

    attr_stmt = pp.one_of("graph node edge") + pp.Group(attr_list)
    attr_stmt.set_parse_action(lambda t: ("defaults", t[0], attrs_of(t[1])))

    assign_stmt = dot_id + EQ + dot_id
    assign_stmt.set_parse_action(lambda t: (t[0], t[1]))

    subgraph = pp.Optional(pp.Suppress(pp.Keyword("subgraph"))
                           + pp.Optional(dot_id, default=None),
                           default=None) \
        + LBRACE + pp.Group(stmt_list) + RBRACE
    subgraph.set_parse_action(
        lambda t: Subgraph(name=t[0], statements=list(t[1]))
    )

    stmt <<= attr_stmt | subgraph | edge_stmt | assign_stmt | node_stmt

    graph = pp.Optional(pp.Keyword("strict")).suppress() \
        + pp.one_of("graph digraph") \
        + pp.Optional(dot_id, default=None) \
        + LBRACE + pp.Group(stmt_list) + RBRACE
    graph.set_parse_action(
        lambda t: DotFile(directed=t[0] == "digraph", name=t[1],
                          statements=list(t[2]))
    )
    graph.ignore(pp.cpp_style_comment)
    return graph + pp.StringEnd()


_PARSER = _grammar()


def parse_dot(text: str) -> DotFile:
    """Parse a DOT document; raises pyparsing.ParseException when invalid."""
    return _PARSER.parse_string(text, parse_all=True)[0]
