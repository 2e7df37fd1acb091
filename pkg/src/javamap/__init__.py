"""Static analysis of Java-syntax source code.

Parses source into a name-based code model, serializes it to a stable XML
code file, computes ten source-code metrics, renders five kinds of code
visualizations, and scores extraction accuracy against golden models.
"""

from .analyzer import (
    EvaluationReport,
    MetricsReport,
    PackageMetrics,
    compute_metrics,
    compute_package_metrics,
    evaluate,
    write_metrics_file,
)
from .model import (
    AccessLevel,
    AccessRecord,
    AssignmentRecord,
    AttributeDecl,
    ClassDecl,
    CodeModel,
    InheritanceEdge,
    InheritanceKind,
    InvocationRecord,
    MethodDecl,
    PackageDecl,
    inheritance_edges,
    lookup_class,
)
from .parser import ParseDiagnostic, SourceUnit, parse_project, parse_unit
from .visualizer import (
    GraphDoc,
    GraphKind,
    TagEntry,
    emit_inheritance,
    emit_invocation,
    emit_organization,
    emit_polymetric,
    emit_tagcloud,
)
from .xmlio import SchemaError, read_code_file, write_code_file

__version__ = "0.1.0"

__all__ = [
    "AccessLevel",
    "AccessRecord",
    "AssignmentRecord",
    "AttributeDecl",
    "ClassDecl",
    "CodeModel",
    "EvaluationReport",
    "GraphDoc",
    "GraphKind",
    "InheritanceEdge",
    "InheritanceKind",
    "InvocationRecord",
    "MethodDecl",
    "MetricsReport",
    "PackageDecl",
    "PackageMetrics",
    "ParseDiagnostic",
    "SchemaError",
    "SourceUnit",
    "TagEntry",
    "compute_metrics",
    "compute_package_metrics",
    "emit_inheritance",
    "emit_invocation",
    "emit_organization",
    "emit_polymetric",
    "emit_tagcloud",
    "evaluate",
    "inheritance_edges",
    "lookup_class",
    "parse_project",
    "parse_unit",
    "read_code_file",
    "write_code_file",
    "write_metrics_file",
]
