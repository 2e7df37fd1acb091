"""Metrics and accuracy evaluation over code models.

Ten project-level counters (LOC, NOP, NOC, NOA, NOM, NOCo, NOLv, NOIn, NOI,
NOAc), per-package vectors for the polymetric view, the metrics-file XML
writer, and precision/recall/F-measure of an extracted model against a golden
one. Everything is a pure function over immutable models.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import BinaryIO, Iterable

from .model import CodeModel, IMPLICIT_SUPERCLASS, inheritance_edges
from .parser import SourceUnit
from .xmlio import DEFAULT_ATTRIBUTION, WriteError, attribution_comment, xml_attr_escape

METRIC_KEYS = ("LOC", "NOP", "NOC", "NOA", "NOM", "NOCo", "NOLv", "NOIn",
               "NOI", "NOAc")

EVALUATION_CATEGORIES = ("packages", "classes", "attributes", "methods",
                         "inheritance", "invocations", "accesses")


@dataclass
class MetricsReport:
    project_name: str
    loc: int = 0
    nop: int = 0
    noc: int = 0
    noa: int = 0
    nom: int = 0
    noco: int = 0
    nolv: int = 0
    noin: int = 0
    noi: int = 0
    noac: int = 0
    loc_available: bool = True  # False when the model came from a code file

    def as_dict(self) -> dict[str, int]:
        return {"LOC": self.loc, "NOP": self.nop, "NOC": self.noc,
                "NOA": self.noa, "NOM": self.nom, "NOCo": self.noco,
                "NOLv": self.nolv, "NOIn": self.noin, "NOI": self.noi,
                "NOAc": self.noac}


@dataclass
class PackageMetrics:
    package_name: str
    loc: int = 0
    noc: int = 0
    noa: int = 0
    nom: int = 0
    noco: int = 0
    nolv: int = 0
    noin: int = 0
    noi: int = 0
    noac: int = 0

    def as_dict(self) -> dict[str, int]:
        return {"LOC": self.loc, "NOC": self.noc, "NOA": self.noa,
                "NOM": self.nom, "NOCo": self.noco, "NOLv": self.nolv,
                "NOIn": self.noin, "NOI": self.noi, "NOAc": self.noac}


@dataclass
class CategoryScore:
    retrieved: int
    relevant: int
    correct: int
    precision: float
    recall: float
    f_measure: float


@dataclass
class EvaluationReport:
    project_name: str
    categories: dict[str, CategoryScore]
    micro: CategoryScore


def compute_metrics(model: CodeModel, units: Iterable[SourceUnit] = ()) -> MetricsReport:
    """Project-level counters; LOC comes from the source units and is flagged
    unavailable when none are supplied (model loaded from a code file)."""
    units = list(units)
    report = MetricsReport(project_name=model.project_name)
    report.nop = len(model.packages)
    for pkg in model.packages:
        vector = _package_vector(pkg)
        report.noc += vector.noc
        report.noa += vector.noa
        report.nom += vector.nom
        report.noco += vector.noco
        report.nolv += vector.nolv
        report.noin += vector.noin
        report.noi += vector.noi
        report.noac += vector.noac
    if units:
        report.loc = sum(unit.line_count_code for unit in units)
    else:
        report.loc_available = False
    return report


def compute_package_metrics(model: CodeModel,
                            units: Iterable[SourceUnit] = ()) -> list[PackageMetrics]:
    """One counter vector per package, in model (lexicographic) order.

    Inheritance edges are attributed to the subclass's package. Package LOC
    sums the code lines of the units that declare that package.
    """
    loc_by_package: dict[str, int] = {}
    for unit in units:
        loc_by_package[unit.package_name] = (
            loc_by_package.get(unit.package_name, 0) + unit.line_count_code
        )
    vectors = []
    for pkg in model.packages:
        vector = _package_vector(pkg)
        vector.loc = loc_by_package.get(pkg.name, 0)
        vectors.append(vector)
    return vectors


def _package_vector(pkg) -> PackageMetrics:
    vector = PackageMetrics(package_name=pkg.name)
    for cls in pkg.classes:
        vector.noc += 1
        vector.noa += len(cls.attributes)
        vector.nom += len(cls.methods)
        vector.noco += len(cls.comments)
        if cls.superclass != IMPLICIT_SUPERCLASS:
            vector.noin += 1
        vector.noin += len(cls.super_interfaces)
        for method in cls.methods:
            vector.noco += len(method.comments)
            vector.nolv += len(method.local_variables)
            vector.noi += len(method.invocations)
            vector.noac += len(method.accesses)
    return vector


def write_metrics_file(report: MetricsReport, out: BinaryIO,
                       attribution: str = DEFAULT_ATTRIBUTION) -> int:
    """Metrics XML with all ten counters, byte-stable; returns bytes written."""
    data = metrics_file_bytes(report, attribution)
    try:
        out.write(data)
    except OSError as err:
        raise WriteError(str(err), 0) from err
    return len(data)


def metrics_file_bytes(report: MetricsReport,
                       attribution: str = DEFAULT_ATTRIBUTION) -> bytes:
    rows = (
        ("LinesOfCode", "LOC", report.loc),
        ("NumberOfPackages", "NOP", report.nop),
        ("NumberOfClasses", "NOC", report.noc),
        ("NumberOfAttributes", "NOA", report.noa),
        ("NumberOfMethods", "NOM", report.nom),
        ("NumberOfComments", "NOCo", report.noco),
        ("NumberOfLocalVariables", "NOLv", report.nolv),
        ("NumberOfInheritances", "NOIn", report.noin),
        ("NumberOfInvocations", "NOI", report.noi),
        ("NumberOfAccesses", "NOAc", report.noac),
    )
    out = [attribution_comment(attribution)]
    out.append(f'<Project ProjectName="{xml_attr_escape(report.project_name)}">')
    out.append("\t<Metrics>")
    for element, abbrev, value in rows:
        out.append(f'\t\t<{element} {abbrev}="{value}"/>')
    out.append("\t</Metrics>")
    out.append("</Project>")
    return ("\n".join(out) + "\n").encode("utf-8")


# ----------------------------------------------------------------- evaluation


def evaluate(extracted: CodeModel, golden: CodeModel) -> EvaluationReport:
    """Precision/recall/F per artifact category, plus micro-averaged totals.

    Elements are keyed by fully qualified identity; duplicate records (same
    method, callee, and argument text) are distinguished by an ordinal so each
    occurrence must be matched separately. F is computed from the counts as
    2*correct/(retrieved+relevant), the exact form of 2pr/(p+r).
    """
    categories: dict[str, CategoryScore] = {}
    totals = [0, 0, 0]
    for category in EVALUATION_CATEGORIES:
        left = _identity_set(extracted, category)
        right = _identity_set(golden, category)
        correct = len(left & right)
        score = _score(len(left), len(right), correct)
        categories[category] = score
        totals[0] += len(left)
        totals[1] += len(right)
        totals[2] += correct
    return EvaluationReport(
        project_name=extracted.project_name,
        categories=categories,
        micro=_score(*totals),
    )


def _score(retrieved: int, relevant: int, correct: int) -> CategoryScore:
    if retrieved == 0 and relevant == 0:
        return CategoryScore(0, 0, 0, 1.0, 1.0, 1.0)
    if retrieved == 0 or relevant == 0:
        return CategoryScore(retrieved, relevant, correct, 0.0, 0.0, 0.0)
    return CategoryScore(
        retrieved, relevant, correct,
        precision=correct / retrieved,
        recall=correct / relevant,
        f_measure=2 * correct / (retrieved + relevant),
    )


def _identity_set(model: CodeModel, category: str) -> set:
    items: set = set()
    ordinals: dict = {}

    def add(key) -> None:
        ordinal = ordinals.get(key, 0)
        ordinals[key] = ordinal + 1
        items.add(key + (ordinal,))

    if category == "packages":
        return {(pkg.name,) for pkg in model.packages}
    if category == "inheritance":
        return set(inheritance_edges(model))
    for pkg in model.packages:
        for cls in pkg.classes:
            qualified = f"{pkg.name}.{cls.name}"
            if category == "classes":
                items.add((qualified,))
                continue
            if category == "attributes":
                for attr in cls.attributes:
                    items.add((f"{qualified}.{attr.name}",))
                continue
            for method in cls.methods:
                key = f"{qualified}.{method.name}" \
                      f"({','.join(t for _, t in method.parameters)})"
                if category == "methods":
                    items.add((key,))
                elif category == "invocations":
                    for record in method.invocations:
                        add((key, record.name, record.arguments))
                elif category == "accesses":
                    for record in method.accesses:
                        add((key, record.name, record.declared_type,
                             record.how_used))
    return items


def write_evaluation_file(report: EvaluationReport, out: BinaryIO,
                          attribution: str = DEFAULT_ATTRIBUTION) -> int:
    data = evaluation_file_bytes(report, attribution)
    try:
        out.write(data)
    except OSError as err:
        raise WriteError(str(err), 0) from err
    return len(data)


def evaluation_file_bytes(report: EvaluationReport,
                          attribution: str = DEFAULT_ATTRIBUTION) -> bytes:
    out = [attribution_comment(attribution)]
    out.append(f'<Project ProjectName="{xml_attr_escape(report.project_name)}">')
    out.append("\t<Evaluation>")
    for category in EVALUATION_CATEGORIES:
        score = report.categories[category]
        out.append(
            f'\t\t<Category Name="{category}" Retrieved="{score.retrieved}"'
            f' Relevant="{score.relevant}" Correct="{score.correct}"'
            f' Precision="{score.precision:.6f}" Recall="{score.recall:.6f}"'
            f' FMeasure="{score.f_measure:.6f}"/>'
        )
    micro = report.micro
    out.append(
        f'\t\t<MicroAverage Retrieved="{micro.retrieved}"'
        f' Relevant="{micro.relevant}" Correct="{micro.correct}"'
        f' Precision="{micro.precision:.6f}" Recall="{micro.recall:.6f}"'
        f' FMeasure="{micro.f_measure:.6f}"/>'
    )
    out.append("\t</Evaluation>")
    out.append("</Project>")
    return ("\n".join(out) + "\n").encode("utf-8")


def format_evaluation_table(report: EvaluationReport) -> str:
    """Plain-text table for console output."""
    header = f"{'category':<12} {'retrieved':>9} {'relevant':>9} " \
             f"{'correct':>8} {'P':>8} {'R':>8} {'F':>8}"
    lines = [header, "-" * len(header)]
    rows = list(report.categories.items()) + [("micro", report.micro)]
    for name, score in rows:
        lines.append(
            f"{name:<12} {score.retrieved:>9} {score.relevant:>9} "
            f"{score.correct:>8} {score.precision:>8.4f} "
            f"{score.recall:>8.4f} {score.f_measure:>8.4f}"
        )
    return "\n".join(lines)
