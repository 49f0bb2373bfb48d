#include "rigiscope/rigidity.hpp"

#include <cmath>
#include <string>

namespace rigiscope {

namespace {

void require_convention(const Framework& fw, Convention wanted, const char* who) {
    if (fw.convention != wanted) {
        throw ConventionError(std::string(who) + ": needs '" +
                              std::string(convention_name(wanted)) +
                              "' coordinates, framework uses '" +
                              std::string(convention_name(fw.convention)) + "'");
    }
}

void check_curvature(int curvature, const char* who) {
    if (curvature != 1 && curvature != -1) {
        throw DomainError(std::string(who) + ": curvature sign must be +1 or -1");
    }
}

}  // namespace

std::string RigidityMatrix::row_label(int row) const {
    const int ne = static_cast<int>(edge_rows.size());
    if (row < 0 || row >= rows()) {
        throw DimensionError("row_label: index out of range");
    }
    if (row < ne) {
        return "edge_" + std::to_string(edge_rows[static_cast<std::size_t>(row)][0]) +
               "_" + std::to_string(edge_rows[static_cast<std::size_t>(row)][1]);
    }
    return "tangent_" + std::to_string(row - ne);
}

std::string RigidityMatrix::col_label(int col) const {
    if (col < 0 || col >= cols()) {
        throw DimensionError("col_label: index out of range");
    }
    return "v" + std::to_string(col / block_size) + "_c" +
           std::to_string(col % block_size);
}

RigidityMatrix rigidity_matrix_euclidean(const Framework& fw, const Tolerances& tol) {
    require_valid(fw, tol);
    require_convention(fw, Convention::Model, "rigidity_matrix_euclidean");
    const int n = fw.geometry.dimension();
    const int v = fw.vertex_count();
    const int ne = fw.edge_count();

    RigidityMatrix out;
    out.values = Matrix::Zero(ne, static_cast<Eigen::Index>(n) * v);
    out.geometry = GeometrySpec::euclidean(n);
    out.convention = Convention::Model;
    out.vertex_count = v;
    out.block_size = n;
    out.edge_rows = fw.graph.edges;
    for (int e = 0; e < ne; ++e) {
        const auto [i, j] = fw.graph.edges[static_cast<std::size_t>(e)];
        const Vector d = fw.points[static_cast<std::size_t>(i)] -
                         fw.points[static_cast<std::size_t>(j)];
        out.values.block(e, static_cast<Eigen::Index>(i) * n, 1, n) = d.transpose();
        out.values.block(e, static_cast<Eigen::Index>(j) * n, 1, n) = -d.transpose();
    }
    return out;
}

RigidityMatrix rigidity_matrix_projective(const Framework& fw, int curvature,
                                          const Tolerances& tol) {
    require_valid(fw, tol);
    require_convention(fw, Convention::Model, "rigidity_matrix_projective");
    check_curvature(curvature, "rigidity_matrix_projective");
    const int n = fw.geometry.dimension();
    const int v = fw.vertex_count();
    const int ne = fw.edge_count();
    const double K = curvature;

    std::vector<double> denom(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) {
        denom[static_cast<std::size_t>(i)] =
            1.0 + K * fw.points[static_cast<std::size_t>(i)].squaredNorm();
        if (std::abs(denom[static_cast<std::size_t>(i)]) <= tol.geometric) {
            throw AbsoluteError("rigidity_matrix_projective: vertex " +
                                std::to_string(i) + " lies on the absolute (p.p = " +
                                std::to_string(-1.0 / K) + ")");
        }
    }

    RigidityMatrix out;
    out.values = Matrix::Zero(ne, static_cast<Eigen::Index>(n) * v);
    out.geometry = fw.geometry.is_projective() &&
                           fw.geometry.curvature_sign() == curvature
                       ? fw.geometry
                       : (curvature > 0 ? GeometrySpec::proj_sphere(n)
                                        : GeometrySpec::proj_hyperbolic(n));
    out.convention = Convention::Model;
    out.vertex_count = v;
    out.block_size = n;
    out.edge_rows = fw.graph.edges;
    for (int e = 0; e < ne; ++e) {
        const auto [i, j] = fw.graph.edges[static_cast<std::size_t>(e)];
        const Vector& pi = fw.points[static_cast<std::size_t>(i)];
        const Vector& pj = fw.points[static_cast<std::size_t>(j)];
        const double dot = pi.dot(pj);
        const Vector kij =
            ((1.0 + K * dot) / denom[static_cast<std::size_t>(i)]) * pi - pj;
        const Vector kji =
            ((1.0 + K * dot) / denom[static_cast<std::size_t>(j)]) * pj - pi;
        out.values.block(e, static_cast<Eigen::Index>(i) * n, 1, n) = kij.transpose();
        out.values.block(e, static_cast<Eigen::Index>(j) * n, 1, n) = kji.transpose();
    }
    return out;
}

RigidityMatrix rigidity_matrix_ambient(const Framework& fw, const Tolerances& tol) {
    require_valid(fw, tol);
    require_convention(fw, Convention::Ambient, "rigidity_matrix_ambient");
    const int m = fw.geometry.ambient_size();
    const int v = fw.vertex_count();
    const int ne = fw.edge_count();
    const bool euclidean = fw.geometry.model() == Model::Euclidean;
    const Vector& a = fw.geometry.form_coefficients();

    RigidityMatrix out;
    out.values = Matrix::Zero(ne + v, static_cast<Eigen::Index>(m) * v);
    out.geometry = fw.geometry;
    out.convention = Convention::Ambient;
    out.vertex_count = v;
    out.block_size = m;
    out.edge_rows = fw.graph.edges;
    out.has_tangency_rows = true;

    for (int e = 0; e < ne; ++e) {
        const auto [i, j] = fw.graph.edges[static_cast<std::size_t>(e)];
        const Vector& pi = fw.points[static_cast<std::size_t>(i)];
        const Vector& pj = fw.points[static_cast<std::size_t>(j)];
        if (euclidean) {
            const Vector d = pi - pj;
            out.values.block(e, static_cast<Eigen::Index>(i) * m, 1, m) = d.transpose();
            out.values.block(e, static_cast<Eigen::Index>(j) * m, 1, m) = -d.transpose();
        } else {
            const Vector wi = a.cwiseProduct(pj);  // coefficient of u_i
            const Vector wj = a.cwiseProduct(pi);  // coefficient of u_j
            out.values.block(e, static_cast<Eigen::Index>(i) * m, 1, m) = wi.transpose();
            out.values.block(e, static_cast<Eigen::Index>(j) * m, 1, m) = wj.transpose();
        }
    }
    for (int k = 0; k < v; ++k) {
        if (euclidean) {
            out.values(ne + k, static_cast<Eigen::Index>(k) * m + (m - 1)) = 1.0;
        } else {
            const Vector w = a.cwiseProduct(fw.points[static_cast<std::size_t>(k)]);
            out.values.block(ne + k, static_cast<Eigen::Index>(k) * m, 1, m) =
                w.transpose();
        }
    }
    return out;
}

RigidityMatrix rigidity_matrix(const Framework& fw, const Tolerances& tol) {
    if (fw.convention == Convention::Ambient) {
        return rigidity_matrix_ambient(fw, tol);
    }
    switch (fw.geometry.model()) {
        case Model::Euclidean: return rigidity_matrix_euclidean(fw, tol);
        case Model::ProjSphere: return rigidity_matrix_projective(fw, +1, tol);
        case Model::ProjHyperbolic:
        case Model::ProjExteriorHyperbolic:
            return rigidity_matrix_projective(fw, -1, tol);
        default:
            throw ConventionError("rigidity_matrix: model '" +
                                  std::string(model_name(fw.geometry.model())) +
                                  "' has no model-convention matrix");
    }
}

MotionSpace motion_space(const RigidityMatrix& m, const Tolerances& tol) {
    return MotionSpace{kernel_basis(m.values, tol.rank_eps), 0};
}

MotionSpace classified_motion_space(const Framework& fw, const Tolerances& tol) {
    MotionSpace motions = motion_space(rigidity_matrix(fw, tol), tol);
    motions.trivial_dimension = trivial_motion_space(fw, tol).restricted_dimension;
    return motions;
}

StressSpace stress_space(const RigidityMatrix& m, const Tolerances& tol) {
    return StressSpace{left_kernel_basis(m.values, tol.rank_eps)};
}

std::vector<Matrix> trivial_motion_generators(const GeometrySpec& spec) {
    const int n = spec.dimension();
    const int m = n + 1;
    std::vector<Matrix> gens;
    gens.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    if (spec.model() == Model::Euclidean) {
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                Matrix g = Matrix::Zero(m, m);
                g(a, b) = 1.0;
                g(b, a) = -1.0;
                gens.push_back(std::move(g));
            }
        }
        for (int a = 0; a < n; ++a) {
            Matrix g = Matrix::Zero(m, m);
            g(a, n) = 1.0;  // translation along axis a
            gens.push_back(std::move(g));
        }
        return gens;
    }
    const Vector d = spec.ambient_counterpart().form_coefficients();
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            Matrix g = Matrix::Zero(m, m);
            g(a, b) = 1.0 / d(a);
            g(b, a) = -1.0 / d(b);
            gens.push_back(std::move(g));
        }
    }
    return gens;
}

TrivialMotionSpace trivial_motion_space(const Framework& fw, const Tolerances& tol) {
    require_valid(fw, tol);
    const int n = fw.geometry.dimension();
    const int v = fw.vertex_count();
    const int cs = fw.coord_size();
    const std::vector<Matrix> gens = trivial_motion_generators(fw.geometry);

    Matrix restricted(static_cast<Eigen::Index>(cs) * v,
                      static_cast<Eigen::Index>(gens.size()));
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const Matrix& gen = gens[g];
        for (int i = 0; i < v; ++i) {
            const Vector& p = fw.points[static_cast<std::size_t>(i)];
            if (fw.convention == Convention::Ambient) {
                restricted.block(static_cast<Eigen::Index>(i) * cs,
                                 static_cast<Eigen::Index>(g), cs, 1) = gen * p;
            } else {
                // Derivative of the projectivized generator flow at the model
                // point: lift to (p, 1), apply A, subtract the radial component.
                Vector lift(n + 1);
                lift.head(n) = p;
                lift(n) = 1.0;
                const Vector w = gen * lift;
                restricted.block(static_cast<Eigen::Index>(i) * cs,
                                 static_cast<Eigen::Index>(g), cs, 1) =
                    w.head(n) - w(n) * p;
            }
        }
    }

    const SvdAnalysis svd = svd_analyze(restricted, tol.rank_eps);
    TrivialMotionSpace out;
    out.basis = svd.left.leftCols(svd.rank);
    out.generator_dimension = static_cast<int>(gens.size());
    out.restricted_dimension = svd.rank;
    return out;
}

std::string_view verdict_name(Verdict v) {
    return v == Verdict::Rigid ? "RIGID" : "FLEXIBLE";
}

bool spanning_configuration(const Framework& fw, const Tolerances& tol) {
    const int v = fw.vertex_count();
    if (v == 0) return false;
    const int cs = fw.coord_size();
    if (fw.convention == Convention::Ambient) {
        Matrix pts(cs, v);
        for (int i = 0; i < v; ++i) pts.col(i) = fw.points[static_cast<std::size_t>(i)];
        return numeric_rank(pts, tol.rank_eps) == cs;
    }
    if (v < 2) return cs == 0;
    Matrix diffs(cs, v - 1);
    for (int i = 1; i < v; ++i) {
        diffs.col(i - 1) =
            fw.points[static_cast<std::size_t>(i)] - fw.points[0];
    }
    return numeric_rank(diffs, tol.rank_eps) == cs;
}

VerdictRecord rigidity_verdict(const Framework& fw, const Tolerances& tol) {
    const RigidityMatrix matrix = rigidity_matrix(fw, tol);
    const SvdAnalysis svd = svd_analyze(matrix.values, tol.rank_eps);
    const TrivialMotionSpace trivial = trivial_motion_space(fw, tol);

    VerdictRecord rec;
    rec.rank = svd.rank;
    rec.motion_dim = matrix.cols() - svd.rank;
    rec.stress_dim = matrix.rows() - svd.rank;
    rec.trivial_dim = trivial.restricted_dimension;
    rec.internal_dim = rec.motion_dim - rec.trivial_dim;
    rec.verdict = rec.motion_dim == rec.trivial_dim ? Verdict::Rigid : Verdict::Flexible;
    rec.singular_values = svd.singular_values;
    rec.rank_threshold = svd.threshold;

    const int n = fw.geometry.dimension();
    if (fw.convention == Convention::Model && fw.vertex_count() >= n + 1 &&
        spanning_configuration(fw, tol)) {
        rec.isostatic = (rec.rank == n * fw.vertex_count() - n * (n + 1) / 2 &&
                         rec.stress_dim == 0 && rec.verdict == Verdict::Rigid);
    }
    for (int e = 0; e < fw.edge_count(); ++e) {
        const auto [i, j] = fw.graph.edges[static_cast<std::size_t>(e)];
        const Vector d = fw.points[static_cast<std::size_t>(i)] -
                         fw.points[static_cast<std::size_t>(j)];
        if (d.lpNorm<Eigen::Infinity>() <= tol.geometric) {
            rec.degenerate_edges.push_back(e);
        }
    }
    return rec;
}

Vector stack_motion(const std::vector<Vector>& per_vertex) {
    Eigen::Index total = 0;
    for (const Vector& u : per_vertex) total += u.size();
    Vector out(total);
    Eigen::Index at = 0;
    for (const Vector& u : per_vertex) {
        out.segment(at, u.size()) = u;
        at += u.size();
    }
    return out;
}

std::vector<Vector> split_motion(const Framework& fw, const Vector& stacked) {
    const int cs = fw.coord_size();
    const int v = fw.vertex_count();
    if (stacked.size() != static_cast<Eigen::Index>(cs) * v) {
        throw DimensionError("split_motion: expected stacked vector of length " +
                             std::to_string(cs * v) + ", got " +
                             std::to_string(stacked.size()));
    }
    std::vector<Vector> out;
    out.reserve(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) {
        out.push_back(stacked.segment(static_cast<Eigen::Index>(i) * cs, cs));
    }
    return out;
}

}  // namespace rigiscope
