#include "rigiscope/reports.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <sstream>

namespace rigiscope {

using json = nlohmann::ordered_json;

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

namespace {

json vector_to_json(const Vector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

json basis_to_json(const Matrix& basis) {
    json out = json::array();
    for (Eigen::Index c = 0; c < basis.cols(); ++c) {
        out.push_back(vector_to_json(basis.col(c)));
    }
    return out;
}

json verdict_body(const VerdictRecord& rec) {
    json doc;
    doc["rank"] = rec.rank;
    doc["motion_dim"] = rec.motion_dim;
    doc["trivial_dim"] = rec.trivial_dim;
    doc["internal_dim"] = rec.internal_dim;
    doc["stress_dim"] = rec.stress_dim;
    doc["verdict"] = std::string(verdict_name(rec.verdict));
    doc["singular_values"] = vector_to_json(rec.singular_values);
    doc["rank_threshold"] = rec.rank_threshold;
    doc["isostatic"] = rec.isostatic.has_value() ? json(*rec.isostatic) : json(nullptr);
    doc["degenerate_edges"] = rec.degenerate_edges;
    return doc;
}

}  // namespace

std::string verdict_report_json(const VerdictRecord& rec) {
    return verdict_body(rec).dump(2) + "\n";
}

std::string stiffness_report_json(const StiffnessRecord& rec) {
    json doc;
    doc["verdict"] = rec.stiff ? "STIFF" : "FLEXIBLE";
    doc["polar_framework"] = verdict_body(rec.record);
    return doc.dump(2) + "\n";
}

std::string matrix_report_json(const RigidityMatrix& m) {
    json doc;
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    doc["model"] = std::string(model_name(m.geometry.model()));
    doc["convention"] = std::string(convention_name(m.convention));
    json row_labels = json::array();
    for (int r = 0; r < m.rows(); ++r) row_labels.push_back(m.row_label(r));
    doc["row_labels"] = std::move(row_labels);
    json col_labels = json::array();
    for (int c = 0; c < m.cols(); ++c) col_labels.push_back(m.col_label(c));
    doc["col_labels"] = std::move(col_labels);
    json values = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        values.push_back(vector_to_json(m.values.row(r).transpose()));
    }
    doc["values"] = std::move(values);
    return doc.dump(2) + "\n";
}

std::string matrix_csv(const RigidityMatrix& m) {
    std::ostringstream out;
    out << "row";
    for (int c = 0; c < m.cols(); ++c) out << ',' << m.col_label(c);
    out << '\n';
    for (int r = 0; r < m.rows(); ++r) {
        out << m.row_label(r);
        for (int c = 0; c < m.cols(); ++c) out << ',' << format_double(m.values(r, c));
        out << '\n';
    }
    return out.str();
}

std::string motion_report_json(const RigidityMatrix& m, const MotionSpace& motions) {
    json doc;
    doc["dimension"] = motions.dimension();
    doc["trivial_dim"] = motions.trivial_dimension;
    doc["internal_dim"] = motions.internal_dimension();
    doc["vertex_count"] = m.vertex_count;
    doc["block_size"] = m.block_size;
    doc["convention"] = std::string(convention_name(m.convention));
    doc["basis"] = basis_to_json(motions.basis);
    return doc.dump(2) + "\n";
}

std::string stress_report_json(const RigidityMatrix& m, const StressSpace& stresses,
                               const std::vector<MemberKind>& member_kinds) {
    json doc;
    doc["dimension"] = stresses.dimension();
    json row_labels = json::array();
    for (int r = 0; r < m.rows(); ++r) row_labels.push_back(m.row_label(r));
    doc["row_labels"] = std::move(row_labels);
    if (!member_kinds.empty()) {
        json kinds = json::array();
        for (MemberKind k : member_kinds) kinds.push_back(std::string(member_kind_name(k)));
        doc["member_kinds"] = std::move(kinds);
    }
    doc["basis"] = basis_to_json(stresses.basis);
    return doc.dump(2) + "\n";
}

std::string equivalence_report_json(const EquivalenceReport& report) {
    json doc;
    doc["rank_E"] = report.rank_euclidean;
    json legs = json::array();
    for (const EquivalenceLeg& leg : report.legs) {
        json entry;
        entry["curvature"] = leg.curvature;
        entry["max_residual"] = leg.factorization.max_residual;
        entry["rank_E"] = leg.factorization.rank_euclidean;
        entry["rank_X"] = leg.factorization.rank_projective;
        entry["det_T"] = leg.factorization.transfer_determinant;
        entry["rank_match"] = leg.rank_match;
        entry["verdict_match"] = leg.verdict_match;
        entry["stress_dim"] = leg.stress_dim;
        entry["max_stress_angle"] = leg.max_stress_angle;
        entry["pass"] = leg.pass;
        legs.push_back(std::move(entry));
    }
    doc["results"] = std::move(legs);
    doc["pass"] = report.pass;
    return doc.dump(2) + "\n";
}

}  // namespace rigiscope
