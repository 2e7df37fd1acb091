import re
import xml.etree.ElementTree as ET
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from javamap.analyzer import compute_metrics, compute_package_metrics
from javamap.model import (
    AccessRecord,
    ClassDecl,
    CodeModel,
    InvocationRecord,
    MethodDecl,
    PackageDecl,
    build_model,
    inheritance_edges,
)
from javamap.visualizer import (
    GraphKind,
    compute_tags,
    emit_inheritance,
    emit_invocation,
    emit_organization,
    emit_polymetric,
    emit_tagcloud,
    tag_entries_csv,
)

from dotlang import parse_dot
from modelgen import random_model


def _invocation_total(dot_body: str) -> Fraction:
    """Per-record accounting: ambiguous candidate edges share their group
    count, so summing count/candidates recovers the record total exactly."""
    total = Fraction(0)
    for edge in parse_dot(dot_body).edges():
        total += Fraction(int(edge.attrs["label"]), int(edge.attrs["candidates"]))
    return total


class TestOrganization:
    def test_cluster_tree_matches_model(self, minishapes):
        model, _, _ = minishapes
        doc = emit_organization(model)
        assert doc.kind is GraphKind.ORGANIZATION
        parsed = parse_dot(doc.body)
        (project,) = [s for s in parsed.statements if hasattr(s, "statements")]
        assert project.label == "MiniShapes"
        package_labels = [s.label for s in project.statements
                          if hasattr(s, "statements")]
        assert package_labels == [p.name for p in model.packages]
        threads = [s for s in project.statements if hasattr(s, "statements")]
        core = threads[2]
        class_labels = [s.label for s in core.statements
                        if hasattr(s, "statements")]
        assert class_labels == ["Drawable", "MyLine", "MyOval", "MyRect", "MyShape"]

    def test_method_nodes_equal_nom(self, minishapes):
        model, units, _ = minishapes
        parsed = parse_dot(emit_organization(model).body)
        assert len(parsed.nodes()) == compute_metrics(model, units).nom

    def test_overloaded_methods_get_unique_ids(self, minishapes):
        model, _, _ = minishapes
        parsed = parse_dot(emit_organization(model).body)
        names = [n.name for n in parsed.nodes()]
        assert len(names) == len(set(names))
        assert "Drawing.Shapes.gui.DrawPanel.addShape" in names
        assert "Drawing.Shapes.gui.DrawPanel.addShape#1" in names

    def test_empty_model_has_project_cluster_only(self):
        parsed = parse_dot(emit_organization(CodeModel("bare")).body)
        assert len(parsed.subgraphs()) == 1
        assert parsed.nodes() == []

    def test_basethread_cluster_contains_both_methods(self, basethread):
        model, _, _ = basethread
        parsed = parse_dot(emit_organization(model).body)
        labels = [n.attrs["label"] for n in parsed.nodes()]
        assert labels == ["BaseThread", "run"]


class TestInheritance:
    def test_contains_myline_to_myshape(self, minishapes):
        model, _, _ = minishapes
        parsed = parse_dot(emit_inheritance(model).body)
        pairs = [(e.source, e.target) for e in parsed.edges()]
        assert ("Drawing.Shapes.coreElements.MyLine",
                "Drawing.Shapes.coreElements.MyShape") in pairs

    def test_edge_set_matches_model_operation(self, minishapes):
        model, _, _ = minishapes
        parsed = parse_dot(emit_inheritance(model).body)
        got = sorted((e.source, e.attrs["kind"]) for e in parsed.edges())
        expected = sorted((e.subclass, e.kind.value)
                          for e in inheritance_edges(model))
        assert got == expected

    def test_edge_count_equals_noin(self, minishapes):
        model, units, _ = minishapes
        parsed = parse_dot(emit_inheritance(model).body)
        assert len(parsed.edges()) == compute_metrics(model, units).noin

    def test_single_class_one_node_zero_edges(self):
        model = build_model("one", [PackageDecl("p", [ClassDecl("Solo")])])
        parsed = parse_dot(emit_inheritance(model).body)
        assert len(parsed.nodes()) == 1 and parsed.edges() == []

    def test_styles_distinguish_kinds(self, minishapes):
        model, _, _ = minishapes
        parsed = parse_dot(emit_inheritance(model).body)
        styles = {e.attrs["kind"]: e.attrs["style"] for e in parsed.edges()}
        assert styles == {"extends": "solid", "implements": "dashed"}

    def test_unresolved_supertypes_become_external_nodes(self, minishapes):
        model, _, _ = minishapes
        parsed = parse_dot(emit_inheritance(model).body)
        names = {n.name for n in parsed.nodes()}
        assert "external:Panel" in names and "external:ActionListener" in names


class TestInvocation:
    def test_external_println_edge(self, basethread):
        model, _, _ = basethread
        parsed = parse_dot(emit_invocation(model).body)
        targets = {e.target for e in parsed.edges()}
        assert targets == {"external:println"}
        println_edges = [e for e in parsed.edges()]
        assert all(e.attrs["label"] == "1" for e in println_edges)

    def test_no_bodies_no_edges(self):
        model = build_model("quiet", [PackageDecl("p", [
            ClassDecl("C", methods=[MethodDecl("m")]),
        ])])
        parsed = parse_dot(emit_invocation(model).body)
        assert parsed.edges() == []
        assert len(parsed.nodes()) == 1

    def test_ambiguous_callee_yields_candidate_edges(self, minishapes):
        model, _, _ = minishapes
        parsed = parse_dot(emit_invocation(model).body)
        draw_edges = [e for e in parsed.edges()
                      if e.source == "Drawing.Shapes.gui.DrawPanel.paint"
                      and "draw" in e.target]
        assert len(draw_edges) == 5  # five declared draw methods
        assert all(e.attrs["candidates"] == "5" for e in draw_edges)
        assert all(e.attrs["style"] == "dotted" for e in draw_edges)

    def test_constructor_call_matches_declared_constructor(self, minishapes):
        model, _, _ = minishapes
        parsed = parse_dot(emit_invocation(model).body)
        pairs = [(e.source, e.target) for e in parsed.edges()]
        assert ("Drawing.Shapes.gui.DrawPanel.addShape",
                "Drawing.Shapes.coreElements.MyLine.MyLine") in pairs

    def test_record_accounting_equals_noi(self, minishapes):
        model, units, _ = minishapes
        total = _invocation_total(emit_invocation(model).body)
        assert total == compute_metrics(model, units).noi

    def test_brute_force_edge_multiset(self, minishapes):
        """Independent matcher: rebuild the expected edge multiset straight
        from the records and the declared-name index."""
        model, _, _ = minishapes
        index: dict[str, list[str]] = {}
        for pkg in model.packages:
            for cls in pkg.classes:
                for method in cls.methods:
                    node = f"{pkg.name}.{cls.name}.{method.name}"
                    bucket = index.setdefault(method.name, [])
                    if node not in bucket:
                        bucket.append(node)
        expected: dict[tuple[str, str], int] = {}
        for pkg in model.packages:
            for cls in pkg.classes:
                for method in cls.methods:
                    caller = f"{pkg.name}.{cls.name}.{method.name}"
                    for record in method.invocations:
                        for target in index.get(record.name,
                                                [f"external:{record.name}"]):
                            key = (caller, target)
                            expected[key] = expected.get(key, 0) + 1
        parsed = parse_dot(emit_invocation(model).body)
        got = {(e.source, e.target): int(e.attrs["label"])
               for e in parsed.edges()}
        assert got == expected


class TestPolymetric:
    def test_rows_equal_package_metrics(self, minishapes):
        model, units, _ = minishapes
        vectors = compute_package_metrics(model, units)
        body = emit_polymetric(vectors).body
        for vector in vectors:
            for key, value in vector.as_dict().items():
                assert f"{key}: {value}\\l" in body

    def test_box_scaling(self, minishapes):
        model, units, _ = minishapes
        body = emit_polymetric(compute_package_metrics(model, units)).body
        core = next(line for line in body.splitlines()
                    if line.startswith('\t"Drawing.Shapes.coreElements"'))
        assert "width=1.25" in core  # 5 classes * 0.25
        assert "height=2.76" in core  # 23 methods * 0.12

    def test_single_empty_package(self):
        model = build_model("e", [PackageDecl("p")])
        body = emit_polymetric(compute_package_metrics(model)).body
        parsed = parse_dot(body)
        (node,) = parsed.nodes()
        assert node.name == "p"
        assert "NOC: 0" in body

    def test_empty_input_placeholder(self):
        parsed = parse_dot(emit_polymetric([]).body)
        (node,) = parsed.nodes()
        assert node.name == "empty"


class TestTagCloud:
    def test_declared_once_invoked_twice(self):
        method_a = MethodDecl("draw")
        caller = MethodDecl("go", invocations=[
            InvocationRecord("draw", "[a]"), InvocationRecord("draw", "[b]"),
        ])
        model = build_model("t", [PackageDecl("p", [
            ClassDecl("C", methods=[method_a, caller]),
        ])])
        entries = {e.tag: e for e in compute_tags(model)}
        assert entries["draw"].frequency == 3
        assert entries["draw"].category == "method"

    def test_empty_model(self):
        doc, entries = emit_tagcloud(CodeModel("bare"))
        assert entries == []
        root = ET.fromstring(doc.body)
        assert root.tag.endswith("svg")

    def test_minishapes_cloud_contents(self, minishapes):
        model, _, _ = minishapes
        doc, entries = emit_tagcloud(model)
        tags = {e.tag for e in entries}
        assert {"MyLine", "MyShape", "draw"} <= tags
        assert ET.fromstring(doc.body) is not None
        assert "[6]" in doc.body  # frequency annotation beside the tag

    def test_access_occurrences_counted(self, minishapes):
        model, _, _ = minishapes
        entries = {e.tag: e for e in compute_tags(model)}
        # x1: one field declaration + ten access-record occurrences
        assert entries["x1"].frequency == 11
        assert entries["x1"].category == "attribute"

    def test_package_segments_are_tags(self, minishapes):
        model, _, _ = minishapes
        entries = {e.tag: e for e in compute_tags(model)}
        assert entries["coreElements"].category == "package"
        assert entries["Drawing"].frequency == 1

    def test_sorted_by_frequency_then_name(self, minishapes):
        model, _, _ = minishapes
        entries = compute_tags(model)
        keys = [(-e.frequency, e.tag) for e in entries]
        assert keys == sorted(keys)

    def test_csv_sidecar(self, minishapes):
        model, _, _ = minishapes
        _, entries = emit_tagcloud(model)
        lines = tag_entries_csv(entries).splitlines()
        assert lines[0] == "tag,frequency,category"
        assert len(lines) == len(entries) + 1

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 5_000))
    def test_method_tag_frequency_covers_nom(self, seed):
        model = random_model(seed)
        method_total = sum(e.frequency for e in compute_tags(model)
                           if e.category == "method")
        assert method_total >= compute_metrics(model).nom


class TestFormatValidity:
    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 5_000))
    def test_all_documents_parse(self, seed):
        model = random_model(seed)
        parse_dot(emit_organization(model).body)
        parse_dot(emit_inheritance(model).body)
        parse_dot(emit_invocation(model).body)
        parse_dot(emit_polymetric(compute_package_metrics(model)).body)
        doc, _ = emit_tagcloud(model)
        ET.fromstring(doc.body)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 5_000))
    def test_counts_hold_on_random_models(self, seed):
        model = random_model(seed)
        report = compute_metrics(model)
        assert len(parse_dot(emit_inheritance(model).body).edges()) == report.noin
        assert _invocation_total(emit_invocation(model).body) == report.noi

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 5_000))
    def test_emitters_deterministic(self, seed):
        model = random_model(seed)
        assert emit_organization(model).body == emit_organization(model).body
        assert emit_invocation(model).body == emit_invocation(model).body
        doc_a, entries_a = emit_tagcloud(model)
        doc_b, entries_b = emit_tagcloud(model)
        assert doc_a.body == doc_b.body and entries_a == entries_b
