#include "rigiscope/polarity.hpp"

#include <json.hpp>

#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace rigiscope {

using json = nlohmann::ordered_json;

Hyperplane polar_hyperplane(const Vector& exterior_point, const Tolerances& tol) {
    if (exterior_point.size() < 2) {
        throw DimensionError("polar_hyperplane: pole must have length >= 2");
    }
    const double q = signature_form(1, exterior_point, exterior_point);
    if (q <= tol.geometric) {
        throw DomainError("polar_hyperplane: not an exterior point (<p,p> = " +
                          std::to_string(q) + " <= tolerance)");
    }
    Vector pole = exterior_point / std::sqrt(q);
    if (pole(pole.size() - 1) < 0.0) pole = -pole;
    return Hyperplane{std::move(pole)};
}

double hyperplane_angle(const Hyperplane& p, const Hyperplane& q,
                        const Tolerances& tol) {
    if (p.pole.size() != q.pole.size()) {
        throw DimensionError("hyperplane_angle: poles live in different dimensions");
    }
    const double value = signature_form(1, p.pole, q.pole);
    if (std::abs(value) > 1.0 + tol.geometric) {
        throw DomainError("hyperplane_angle: hyperplanes do not intersect "
                          "(ultraparallel, |<p,q>| = " +
                          std::to_string(std::abs(value)) + " > 1)");
    }
    return std::acos(clamp_to_interval(value, -1.0, 1.0, tol.geometric,
                                       "hyperplane angle argument"));
}

AngleSystem make_angle_system(Graph graph, const std::vector<Vector>& poles,
                              const Tolerances& tol, bool formal) {
    if (static_cast<int>(poles.size()) != graph.vertex_count) {
        throw DimensionError("make_angle_system: " + std::to_string(poles.size()) +
                             " poles for " + std::to_string(graph.vertex_count) +
                             " vertices");
    }
    AngleSystem sys;
    sys.hyperplanes.reserve(poles.size());
    for (std::size_t i = 0; i < poles.size(); ++i) {
        try {
            sys.hyperplanes.push_back(polar_hyperplane(poles[i], tol));
        } catch (const DomainError& err) {
            throw DomainError("hyperplane " + std::to_string(i) + ": " + err.what());
        }
    }
    sys.dimension = sys.hyperplanes.empty()
                        ? 0
                        : sys.hyperplanes.front().dimension();
    for (const Hyperplane& h : sys.hyperplanes) {
        if (h.dimension() != sys.dimension) {
            throw DimensionError("make_angle_system: poles have mixed lengths");
        }
    }
    sys.angles.reserve(graph.edges.size());
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        const auto [i, j] = graph.edges[e];
        if (i < 0 || j < 0 || i >= graph.vertex_count || j >= graph.vertex_count) {
            throw DimensionError("make_angle_system: angle edge " + std::to_string(e) +
                                 " out of range");
        }
        try {
            sys.angles.push_back(hyperplane_angle(
                sys.hyperplanes[static_cast<std::size_t>(i)],
                sys.hyperplanes[static_cast<std::size_t>(j)], tol));
        } catch (const DomainError& err) {
            if (!formal) {
                throw DomainError("angle edge " + std::to_string(e) + " {" +
                                  std::to_string(i) + "," + std::to_string(j) +
                                  "}: " + err.what());
            }
            sys.angles.push_back(std::numeric_limits<double>::quiet_NaN());
        }
    }
    sys.graph = std::move(graph);
    return sys;
}

AngleSystem polar_angle_system(const Framework& fw, const Tolerances& tol,
                               bool formal) {
    Framework exterior = fw;
    if (fw.geometry.model() == Model::ProjExteriorHyperbolic) {
        exterior = transfer_framework(
            fw, GeometrySpec::signature_surface(fw.geometry.dimension(), 1, 1.0), tol);
    } else if (fw.geometry.model() != Model::AmbientForm ||
               fw.geometry.signature_k() != 1 || fw.geometry.level() <= 0.0) {
        throw ConventionError(
            "polar_angle_system: needs exterior-hyperbolic points (ambient signature "
            "k = 1 with positive level, or the exterior projective model)");
    }
    return make_angle_system(exterior.graph, exterior.points, tol, formal);
}

Framework polar_framework(const AngleSystem& sys) {
    Framework fw;
    fw.graph = sys.graph;
    fw.geometry = GeometrySpec::signature_surface(std::max(sys.dimension, 1), 1, 1.0);
    fw.convention = Convention::Ambient;
    fw.points.reserve(sys.hyperplanes.size());
    for (const Hyperplane& h : sys.hyperplanes) fw.points.push_back(h.pole);
    return fw;
}

StiffnessRecord stiffness_verdict(const AngleSystem& sys, const Tolerances& tol) {
    StiffnessRecord rec;
    rec.record = rigidity_verdict(polar_framework(sys), tol);
    rec.stiff = rec.record.verdict == Verdict::Rigid;
    return rec;
}

AngleSystem parse_angle_system(std::string_view text, const Tolerances& tol,
                               bool formal) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("angle-system document must be a JSON object");
    }
    for (const auto& item : doc.items()) {
        if (item.key() != "hyperplanes" && item.key() != "angle_edges") {
            throw ParseError("unknown field '" + item.key() + "'");
        }
    }
    if (!doc.contains("hyperplanes") || !doc["hyperplanes"].is_array()) {
        throw ParseError("missing or invalid field 'hyperplanes'");
    }
    if (!doc.contains("angle_edges") || !doc["angle_edges"].is_array()) {
        throw ParseError("missing or invalid field 'angle_edges'");
    }
    std::vector<Vector> poles;
    poles.reserve(doc["hyperplanes"].size());
    for (std::size_t i = 0; i < doc["hyperplanes"].size(); ++i) {
        const json& row = doc["hyperplanes"][i];
        const std::string where = "hyperplanes[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() < 2) {
            throw ParseError(where + " must be an array of at least 2 numbers");
        }
        Vector p(row.size());
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (!row[c].is_number()) {
                throw ParseError(where + "[" + std::to_string(c) + "] must be a number");
            }
            p(static_cast<Eigen::Index>(c)) = row[c].get<double>();
        }
        poles.push_back(std::move(p));
    }
    Graph graph;
    graph.vertex_count = static_cast<int>(poles.size());
    for (std::size_t e = 0; e < doc["angle_edges"].size(); ++e) {
        const json& pair = doc["angle_edges"][e];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer()) {
            throw ParseError("angle_edges[" + std::to_string(e) +
                             "] must be a pair of indices");
        }
        graph.edges.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    return make_angle_system(std::move(graph), poles, tol, formal);
}

std::string serialize_angle_system(const AngleSystem& sys) {
    json doc;
    json planes = json::array();
    for (const Hyperplane& h : sys.hyperplanes) {
        json row = json::array();
        for (Eigen::Index c = 0; c < h.pole.size(); ++c) row.push_back(h.pole(c));
        planes.push_back(std::move(row));
    }
    doc["hyperplanes"] = std::move(planes);
    json edges = json::array();
    for (const auto& [i, j] : sys.graph.edges) edges.push_back(json::array({i, j}));
    doc["angle_edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

bool looks_like_angle_system(std::string_view text) {
    const json doc = json::parse(text, nullptr, false);
    return doc.is_object() && doc.contains("hyperplanes");
}

}  // namespace rigiscope
