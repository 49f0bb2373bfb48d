#include "rigiscope/framework.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

namespace rigiscope {

using json = nlohmann::ordered_json;

std::string_view member_kind_name(MemberKind kind) {
    switch (kind) {
        case MemberKind::Bar: return "bar";
        case MemberKind::Cable: return "cable";
        case MemberKind::Strut: return "strut";
    }
    throw Error("member_kind_name: invalid enum");
}

MemberKind member_kind_from_name(std::string_view name) {
    if (name == "bar") return MemberKind::Bar;
    if (name == "cable") return MemberKind::Cable;
    if (name == "strut") return MemberKind::Strut;
    throw ParseError("member kind must be 'bar', 'cable' or 'strut', got '" +
                     std::string(name) + "'");
}

bool ValidationReport::ok() const {
    return std::none_of(issues.begin(), issues.end(), [](const ValidationIssue& i) {
        return i.severity == ValidationIssue::Severity::Error;
    });
}

bool ValidationReport::clean() const { return issues.empty(); }

std::string ValidationReport::summary() const {
    if (issues.empty()) return "valid";
    std::ostringstream out;
    for (std::size_t i = 0; i < issues.size(); ++i) {
        if (i > 0) out << "; ";
        out << (issues[i].severity == ValidationIssue::Severity::Error ? "error: "
                                                                       : "warning: ")
            << issues[i].message;
    }
    return out.str();
}

namespace {

void add_issue(ValidationReport& report, ValidationIssue::Kind kind,
               ValidationIssue::Severity severity, std::string message,
               int vertex = -1, int edge = -1) {
    report.issues.push_back({kind, severity, std::move(message), vertex, edge});
}

void validate_points(const Framework& fw, const Tolerances& tol,
                     ValidationReport& report) {
    using Kind = ValidationIssue::Kind;
    using Sev = ValidationIssue::Severity;
    const GeometrySpec& g = fw.geometry;
    const int expected = fw.coord_size();
    for (int i = 0; i < static_cast<int>(fw.points.size()); ++i) {
        const Vector& p = fw.points[static_cast<std::size_t>(i)];
        if (static_cast<int>(p.size()) != expected) {
            add_issue(report, Kind::PointSize, Sev::Error,
                      "vertex " + std::to_string(i) + ": expected " +
                          std::to_string(expected) + " coordinates, got " +
                          std::to_string(p.size()),
                      i);
            continue;
        }
        if (!p.allFinite()) {
            add_issue(report, Kind::NonFinite, Sev::Error,
                      "vertex " + std::to_string(i) + ": non-finite coordinate", i);
            continue;
        }
        switch (g.model()) {
            case Model::Euclidean:
                if (fw.convention == Convention::Ambient &&
                    std::abs(p(p.size() - 1) - 1.0) > tol.geometric) {
                    add_issue(report, Kind::EuclideanPlane, Sev::Error,
                              "vertex " + std::to_string(i) +
                                  ": ambient euclidean point must have last coordinate 1",
                              i);
                }
                break;
            case Model::SphereAmbient:
            case Model::AmbientForm: {
                const double q = g.form(p, p);
                if (std::abs(q) <= tol.geometric) {
                    add_issue(report, Kind::OnAbsolute, Sev::Error,
                              "vertex " + std::to_string(i) +
                                  ": point lies on the absolute of the form",
                              i);
                    break;
                }
                const double level = g.model() == Model::SphereAmbient ? 1.0 : g.level();
                if (std::abs(q - level) > tol.geometric) {
                    add_issue(report, Kind::OffSurface, Sev::Warning,
                              "vertex " + std::to_string(i) +
                                  ": off the nominal surface (form value " +
                                  std::to_string(q) + ", level " +
                                  std::to_string(level) + "); treated formally",
                              i);
                }
                if (p(p.size() - 1) <= tol.geometric) {
                    add_issue(report, Kind::OffSurface, Sev::Warning,
                              "vertex " + std::to_string(i) +
                                  ": last coordinate is not positive",
                              i);
                }
                break;
            }
            case Model::ProjSphere:
                break;  // the whole of R^n
            case Model::ProjHyperbolic: {
                const double r2 = p.squaredNorm();
                if (std::abs(1.0 - r2) <= tol.geometric) {
                    add_issue(report, Kind::OnAbsolute, Sev::Error,
                              "vertex " + std::to_string(i) + ": on the absolute (p.p = 1)",
                              i);
                } else if (r2 > 1.0) {
                    add_issue(report, Kind::OffSurface, Sev::Warning,
                              "vertex " + std::to_string(i) +
                                  ": outside the unit ball; treated as an "
                                  "exterior-hyperbolic point",
                              i);
                }
                break;
            }
            case Model::ProjExteriorHyperbolic: {
                const double r2 = p.squaredNorm();
                if (std::abs(1.0 - r2) <= tol.geometric) {
                    add_issue(report, Kind::OnAbsolute, Sev::Error,
                              "vertex " + std::to_string(i) + ": on the absolute (p.p = 1)",
                              i);
                } else if (r2 < 1.0) {
                    add_issue(report, Kind::OffSurface, Sev::Warning,
                              "vertex " + std::to_string(i) +
                                  ": inside the unit ball; treated as a hyperbolic point",
                              i);
                }
                break;
            }
        }
    }
}

}  // namespace

ValidationReport validate(const Framework& fw, const Tolerances& tol) {
    using Kind = ValidationIssue::Kind;
    using Sev = ValidationIssue::Severity;
    ValidationReport report;

    if (!fw.geometry.allows(fw.convention)) {
        add_issue(report, Kind::ConventionMismatch, Sev::Error,
                  std::string("model '") + std::string(model_name(fw.geometry.model())) +
                      "' does not allow '" + std::string(convention_name(fw.convention)) +
                      "' coordinates");
    }
    if (static_cast<int>(fw.points.size()) != fw.graph.vertex_count) {
        add_issue(report, Kind::PointCount, Sev::Error,
                  "framework has " + std::to_string(fw.points.size()) +
                      " points for " + std::to_string(fw.graph.vertex_count) +
                      " vertices");
    } else {
        validate_points(fw, tol, report);
    }

    std::set<std::pair<int, int>> seen;
    for (int e = 0; e < fw.edge_count(); ++e) {
        const auto [i, j] = fw.graph.edges[static_cast<std::size_t>(e)];
        if (i < 0 || j < 0 || i >= fw.graph.vertex_count || j >= fw.graph.vertex_count) {
            add_issue(report, Kind::EdgeIndexOutOfRange, Sev::Error,
                      "edge " + std::to_string(e) + " {" + std::to_string(i) + "," +
                          std::to_string(j) + "}: vertex index out of range",
                      -1, e);
            continue;
        }
        if (i == j) {
            add_issue(report, Kind::EdgeLoop, Sev::Error,
                      "edge " + std::to_string(e) + " {" + std::to_string(i) + "," +
                          std::to_string(j) + "}: loop edge",
                      -1, e);
            continue;
        }
        const auto key = std::minmax(i, j);
        if (!seen.insert(key).second) {
            add_issue(report, Kind::EdgeDuplicate, Sev::Error,
                      "edge " + std::to_string(e) + " {" + std::to_string(i) + "," +
                          std::to_string(j) + "}: duplicate edge",
                      -1, e);
        }
    }

    if (!fw.member_kinds.empty() &&
        static_cast<int>(fw.member_kinds.size()) != fw.edge_count()) {
        add_issue(report, Kind::MemberKindCount, Sev::Error,
                  "member_kinds has " + std::to_string(fw.member_kinds.size()) +
                      " entries for " + std::to_string(fw.edge_count()) + " edges");
    }

    return report;
}

void require_valid(const Framework& fw, const Tolerances& tol) {
    const ValidationReport report = validate(fw, tol);
    if (report.ok()) return;
    for (const ValidationIssue& issue : report.issues) {
        if (issue.severity == ValidationIssue::Severity::Error &&
            issue.kind == ValidationIssue::Kind::OnAbsolute) {
            throw AbsoluteError(issue.message);
        }
    }
    throw InvalidFrameworkError("invalid framework: " + report.summary());
}

namespace {

const json& require_field(const json& doc, const char* name) {
    const auto it = doc.find(name);
    if (it == doc.end()) {
        throw ParseError(std::string("missing required field '") + name + "'");
    }
    return *it;
}

int parse_int_field(const json& doc, const char* name) {
    const json& v = require_field(doc, name);
    if (!v.is_number_integer()) {
        throw ParseError(std::string("field '") + name + "' must be an integer");
    }
    return v.get<int>();
}

std::string parse_string_field(const json& doc, const char* name) {
    const json& v = require_field(doc, name);
    if (!v.is_string()) {
        throw ParseError(std::string("field '") + name + "' must be a string");
    }
    return v.get<std::string>();
}

double number_at(const json& v, const std::string& where) {
    if (!v.is_number()) {
        throw ParseError(where + " must be a number");
    }
    return v.get<double>();
}

}  // namespace

Framework parse_framework(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("framework document must be a JSON object");
    }

    static const std::set<std::string> known = {
        "version", "dimension",   "model", "form_coefficients",
        "level",   "coordinates", "vertices", "edges", "member_kinds"};
    for (const auto& item : doc.items()) {
        if (known.find(item.key()) == known.end()) {
            throw ParseError("unknown field '" + item.key() + "'");
        }
    }

    const int version = parse_int_field(doc, "version");
    if (version != 1) {
        throw ParseError("unsupported version " + std::to_string(version) +
                         " (expected 1)");
    }
    const int dimension = parse_int_field(doc, "dimension");
    if (dimension < 1) {
        throw ParseError("field 'dimension' must be >= 1");
    }
    const Model model = model_from_name(parse_string_field(doc, "model"));
    const Convention convention =
        convention_from_name(parse_string_field(doc, "coordinates"));

    GeometrySpec geometry = GeometrySpec::euclidean(1);
    if (model == Model::AmbientForm) {
        const json& coeffs = require_field(doc, "form_coefficients");
        if (!coeffs.is_array() ||
            static_cast<int>(coeffs.size()) != dimension + 1) {
            throw ParseError("field 'form_coefficients' must be an array of n+1 numbers");
        }
        Vector a(dimension + 1);
        for (int i = 0; i <= dimension; ++i) {
            a(i) = number_at(coeffs[static_cast<std::size_t>(i)],
                             "form_coefficients[" + std::to_string(i) + "]");
        }
        const json& level = require_field(doc, "level");
        if (!level.is_number()) {
            throw ParseError("field 'level' must be a number");
        }
        try {
            geometry = GeometrySpec::ambient_form(std::move(a), level.get<double>());
        } catch (const Error& e) {
            throw ParseError(e.what());
        }
    } else {
        if (doc.contains("form_coefficients") || doc.contains("level")) {
            throw ParseError(
                "fields 'form_coefficients' and 'level' are only valid for model "
                "'ambient_form'");
        }
        switch (model) {
            case Model::Euclidean: geometry = GeometrySpec::euclidean(dimension); break;
            case Model::SphereAmbient: geometry = GeometrySpec::sphere(dimension); break;
            case Model::ProjSphere: geometry = GeometrySpec::proj_sphere(dimension); break;
            case Model::ProjHyperbolic:
                geometry = GeometrySpec::proj_hyperbolic(dimension);
                break;
            case Model::ProjExteriorHyperbolic:
                geometry = GeometrySpec::proj_exterior_hyperbolic(dimension);
                break;
            default: break;
        }
    }
    if (!geometry.allows(convention)) {
        throw ParseError("model '" + std::string(model_name(model)) +
                         "' requires '" +
                         std::string(convention_name(geometry.native_convention())) +
                         "' coordinates");
    }

    const json& vertices = require_field(doc, "vertices");
    if (!vertices.is_array()) {
        throw ParseError("field 'vertices' must be an array");
    }
    const int coord_size = geometry.coord_size(convention);
    std::vector<Vector> points;
    points.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const json& row = vertices[i];
        const std::string where = "vertices[" + std::to_string(i) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != coord_size) {
            throw ParseError(where + " must be an array of " +
                             std::to_string(coord_size) + " numbers");
        }
        Vector p(coord_size);
        for (int c = 0; c < coord_size; ++c) {
            p(c) = number_at(row[static_cast<std::size_t>(c)],
                             where + "[" + std::to_string(c) + "]");
        }
        points.push_back(std::move(p));
    }

    const json& edges = require_field(doc, "edges");
    if (!edges.is_array()) {
        throw ParseError("field 'edges' must be an array");
    }
    std::vector<std::array<int, 2>> edge_list;
    edge_list.reserve(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const json& pair = edges[e];
        const std::string where = "edges[" + std::to_string(e) + "]";
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer()) {
            throw ParseError(where + " must be a pair of vertex indices");
        }
        const long long i = pair[0].get<long long>();
        const long long j = pair[1].get<long long>();
        if (i < 0 || j < 0) {
            throw ParseError(where + ": vertex indices must be non-negative");
        }
        edge_list.push_back({static_cast<int>(i), static_cast<int>(j)});
    }

    std::vector<MemberKind> kinds;
    if (doc.contains("member_kinds")) {
        const json& mk = doc["member_kinds"];
        if (!mk.is_array() || mk.size() != edge_list.size()) {
            throw ParseError("field 'member_kinds' must be an array parallel to 'edges'");
        }
        kinds.reserve(mk.size());
        for (std::size_t e = 0; e < mk.size(); ++e) {
            if (!mk[e].is_string()) {
                throw ParseError("member_kinds[" + std::to_string(e) +
                                 "] must be a string");
            }
            kinds.push_back(member_kind_from_name(mk[e].get<std::string>()));
        }
    }

    Framework fw;
    fw.graph = Graph{static_cast<int>(points.size()), std::move(edge_list)};
    fw.geometry = geometry;
    fw.convention = convention;
    fw.points = std::move(points);
    fw.member_kinds = std::move(kinds);
    return fw;
}

std::string serialize_framework(const Framework& fw) {
    json doc;
    doc["version"] = 1;
    doc["dimension"] = fw.geometry.dimension();
    doc["model"] = std::string(model_name(fw.geometry.model()));
    if (fw.geometry.model() == Model::AmbientForm) {
        std::vector<double> coeffs(fw.geometry.form_coefficients().data(),
                                   fw.geometry.form_coefficients().data() +
                                       fw.geometry.form_coefficients().size());
        doc["form_coefficients"] = coeffs;
        doc["level"] = fw.geometry.level();
    }
    doc["coordinates"] = std::string(convention_name(fw.convention));
    json vertices = json::array();
    for (const Vector& p : fw.points) {
        json row = json::array();
        for (Eigen::Index c = 0; c < p.size(); ++c) row.push_back(p(c));
        vertices.push_back(std::move(row));
    }
    doc["vertices"] = std::move(vertices);
    json edges = json::array();
    for (const auto& [i, j] : fw.graph.edges) edges.push_back(json::array({i, j}));
    doc["edges"] = std::move(edges);
    const bool any_nonbar =
        std::any_of(fw.member_kinds.begin(), fw.member_kinds.end(),
                    [](MemberKind k) { return k != MemberKind::Bar; });
    if (any_nonbar) {
        json kinds = json::array();
        for (MemberKind k : fw.member_kinds) {
            kinds.push_back(std::string(member_kind_name(k)));
        }
        doc["member_kinds"] = std::move(kinds);
    }
    return doc.dump(2) + "\n";
}

EdgeLengths edge_lengths(const Framework& fw, bool invariant_mode,
                         const Tolerances& tol) {
    require_valid(fw, tol);
    if (!fw.geometry.has_metric_distance() && !invariant_mode) {
        throw DomainError(
            "edge_lengths: model '" + std::string(model_name(fw.geometry.model())) +
            "' has no metric distance; request invariant mode to report the "
            "normalized form pairing");
    }
    EdgeLengths out;
    out.invariant_mode = !fw.geometry.has_metric_distance();
    out.values.reserve(fw.graph.edges.size());
    for (int e = 0; e < fw.edge_count(); ++e) {
        const auto [i, j] = fw.graph.edges[static_cast<std::size_t>(e)];
        try {
            out.values.push_back(distance(fw.geometry,
                                          fw.points[static_cast<std::size_t>(i)],
                                          fw.points[static_cast<std::size_t>(j)], tol));
        } catch (const DomainError& err) {
            throw DomainError("edge " + std::to_string(e) + " {" + std::to_string(i) +
                              "," + std::to_string(j) + "}: " + err.what());
        }
    }
    return out;
}

}  // namespace rigiscope
