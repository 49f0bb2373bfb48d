#pragma once

#include <array>
#include <string>
#include <vector>

#include "rigiscope/geometry.hpp"

namespace rigiscope {

struct Graph {
    int vertex_count = 0;
    std::vector<std::array<int, 2>> edges;
};

enum class MemberKind { Bar, Cable, Strut };

std::string_view member_kind_name(MemberKind kind);
MemberKind member_kind_from_name(std::string_view name);  // throws ParseError

/// A graph with a configuration in some geometry. Points use one coordinate
/// convention for the whole framework: ambient vectors of length n+1 or
/// model vectors of length n. Member kinds annotate stress-sign reports and
/// never enter matrix or rank computations.
struct Framework {
    Graph graph;
    GeometrySpec geometry = GeometrySpec::euclidean(1);
    Convention convention = Convention::Model;
    std::vector<Vector> points;
    std::vector<MemberKind> member_kinds;  // empty means all bars

    int vertex_count() const { return graph.vertex_count; }
    int edge_count() const { return static_cast<int>(graph.edges.size()); }
    int coord_size() const { return geometry.coord_size(convention); }
    MemberKind kind_of(int edge) const {
        return member_kinds.empty() ? MemberKind::Bar
                                    : member_kinds[static_cast<std::size_t>(edge)];
    }
};

struct ValidationIssue {
    enum class Kind {
        ConventionMismatch,
        PointCount,
        PointSize,
        NonFinite,
        EdgeLoop,
        EdgeDuplicate,
        EdgeIndexOutOfRange,
        MemberKindCount,
        EuclideanPlane,   // ambient euclidean point off the x_{n+1} = 1 plane
        OnAbsolute,       // form value (or 1 - p.p) vanishes
        OffSurface,       // formally admissible membership miss
    };
    enum class Severity { Error, Warning };

    Kind kind;
    Severity severity;
    std::string message;
    int vertex = -1;
    int edge = -1;
};

/// Errors block analysis; warnings mark formally admissible frameworks
/// whose points are off their nominal surface or domain.
struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const;     // no error-severity issues
    bool clean() const;  // no issues at all
    std::string summary() const;
};

ValidationReport validate(const Framework& fw, const Tolerances& tol = {});

/// Throws AbsoluteError when a vertex sits on the absolute, otherwise
/// InvalidFrameworkError, whenever validate() reports an error.
void require_valid(const Framework& fw, const Tolerances& tol = {});

/// Framework file format (UTF-8 JSON). Parsing is strict about field
/// names and shapes; semantic checks (index bounds, loops, membership)
/// belong to validate().
Framework parse_framework(std::string_view text);

/// Canonical serialization: fixed key order, two-space indent, shortest
/// round-trip number representation, trailing newline.
std::string serialize_framework(const Framework& fw);

struct EdgeLengths {
    std::vector<double> values;
    bool invariant_mode = false;
};

/// Per-edge distances under the framework's geometry. Models without a
/// metric distance (exterior-hyperbolic, general forms) require
/// invariant_mode and report the normalized form pairing instead.
EdgeLengths edge_lengths(const Framework& fw, bool invariant_mode = false,
                         const Tolerances& tol = {});

}  // namespace rigiscope
