#include "rigiscope/transfer.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <utility>

namespace rigiscope {

namespace {

void check_curvature(int curvature, const char* who) {
    if (curvature != 1 && curvature != -1) {
        throw DomainError(std::string(who) + ": curvature sign must be +1 or -1");
    }
}

Framework retagged(const Framework& fw, GeometrySpec geometry) {
    Framework out = fw;
    out.geometry = std::move(geometry);
    return out;
}

/// Homogeneous ray representative of a vertex: ambient points as given,
/// model points lifted to (p, 1).
Vector vertex_ray(const Framework& fw, int vertex) {
    const Vector& p = fw.points[static_cast<std::size_t>(vertex)];
    if (fw.convention == Convention::Ambient) return p;
    Vector lift(p.size() + 1);
    lift.head(p.size()) = p;
    lift(p.size()) = 1.0;
    return lift;
}

[[noreturn]] void rethrow_for_vertex(int vertex, const DomainError& err) {
    std::string msg = err.what();
    if (msg.rfind("vertex ", 0) != 0) {
        msg = "vertex " + std::to_string(vertex) + ": " + msg;
    }
    if (dynamic_cast<const EquatorError*>(&err) != nullptr) throw EquatorError(msg);
    if (dynamic_cast<const AbsoluteError*>(&err) != nullptr) throw AbsoluteError(msg);
    throw DomainError(msg);
}

Vector point_from_ray(const GeometrySpec& target, const Vector& ray, int vertex,
                      const Tolerances& tol) {
    try {
        switch (target.model()) {
            case Model::Euclidean:
            case Model::ProjSphere: {
                return gnomic_project(ray, tol).head(target.dimension()).eval();
            }
            case Model::ProjHyperbolic: {
                const Vector y = gnomic_project(ray, tol).head(target.dimension()).eval();
                const double r2 = y.squaredNorm();
                if (std::abs(1.0 - r2) <= tol.geometric) {
                    throw AbsoluteError("image lies on the absolute (p.p = 1)");
                }
                if (r2 > 1.0) {
                    throw AbsoluteError(
                        "image lies outside the unit ball; not a hyperbolic point");
                }
                return y;
            }
            case Model::ProjExteriorHyperbolic: {
                const Vector y = gnomic_project(ray, tol).head(target.dimension()).eval();
                const double r2 = y.squaredNorm();
                if (std::abs(1.0 - r2) <= tol.geometric) {
                    throw AbsoluteError("image lies on the absolute (p.p = 1)");
                }
                if (r2 < 1.0) {
                    throw AbsoluteError(
                        "image lies inside the unit ball; not an exterior point");
                }
                return y;
            }
            case Model::SphereAmbient:
            case Model::AmbientForm: {
                return normalize_to_surface(target.ambient_counterpart(), ray, tol);
            }
        }
        throw Error("point_from_ray: invalid model enum");
    } catch (const DomainError& err) {
        rethrow_for_vertex(vertex, err);
    }
}

}  // namespace

Matrix transfer_block(const Vector& model_point, int curvature) {
    check_curvature(curvature, "transfer_block");
    const auto n = model_point.size();
    return Matrix::Identity(n, n) +
           static_cast<double>(curvature) * model_point * model_point.transpose();
}

double TransferMatrix::determinant() const {
    double det = 1.0;
    for (const double d : block_determinants) det *= d;
    return det;
}

bool TransferMatrix::singular(double tol) const {
    for (const double d : block_determinants) {
        if (std::abs(d) <= tol) return true;
    }
    return false;
}

Matrix TransferMatrix::dense() const {
    const auto n = static_cast<Eigen::Index>(block_size);
    const auto v = static_cast<Eigen::Index>(blocks.size());
    Matrix out = Matrix::Zero(n * v, n * v);
    for (Eigen::Index i = 0; i < v; ++i) {
        out.block(i * n, i * n, n, n) = blocks[static_cast<std::size_t>(i)];
    }
    return out;
}

Vector TransferMatrix::apply(const Vector& stacked) const {
    const auto n = static_cast<Eigen::Index>(block_size);
    const auto v = static_cast<Eigen::Index>(blocks.size());
    if (stacked.size() != n * v) {
        throw DimensionError("TransferMatrix::apply: stacked vector length mismatch");
    }
    Vector out(stacked.size());
    for (Eigen::Index i = 0; i < v; ++i) {
        out.segment(i * n, n) = blocks[static_cast<std::size_t>(i)] * stacked.segment(i * n, n);
    }
    return out;
}

Vector TransferMatrix::apply_inverse(const Vector& stacked, const Tolerances& tol) const {
    const auto n = static_cast<Eigen::Index>(block_size);
    const auto v = static_cast<Eigen::Index>(blocks.size());
    if (stacked.size() != n * v) {
        throw DimensionError("TransferMatrix::apply_inverse: stacked vector length mismatch");
    }
    Vector out(stacked.size());
    for (Eigen::Index i = 0; i < v; ++i) {
        const double det = block_determinants[static_cast<std::size_t>(i)];
        if (std::abs(det) <= tol.geometric) {
            throw AbsoluteError("TransferMatrix::apply_inverse: block for vertex " +
                                std::to_string(i) + " is singular");
        }
        // (I + K p p')^{-1} = I - (K / (1 + K p.p)) p p'; the block minus the
        // identity is K p p', so the inverse applies with the same rank-1 data.
        const Matrix& b = blocks[static_cast<std::size_t>(i)];
        const Vector seg = stacked.segment(i * n, n);
        const Matrix correction = b - Matrix::Identity(n, n);  // = K p p'
        out.segment(i * n, n) = seg - (correction * seg) / det;
    }
    return out;
}

TransferMatrix transfer_matrix(const Framework& fw, int curvature) {
    check_curvature(curvature, "transfer_matrix");
    if (fw.convention != Convention::Model) {
        throw ConventionError("transfer_matrix: needs model coordinates");
    }
    TransferMatrix out;
    out.curvature = curvature;
    out.block_size = fw.geometry.dimension();
    out.blocks.reserve(fw.points.size());
    out.block_determinants.reserve(fw.points.size());
    for (const Vector& p : fw.points) {
        out.blocks.push_back(transfer_block(p, curvature));
        out.block_determinants.push_back(1.0 +
                                         static_cast<double>(curvature) * p.squaredNorm());
    }
    return out;
}

FactorizationReport verify_factorization(const Framework& fw, int curvature,
                                         const Tolerances& tol) {
    const RigidityMatrix flat = rigidity_matrix_euclidean(fw, tol);
    const RigidityMatrix curved = rigidity_matrix_projective(fw, curvature, tol);
    const TransferMatrix transfer = transfer_matrix(fw, curvature);

    const auto n = static_cast<Eigen::Index>(transfer.block_size);
    Matrix product = Matrix::Zero(curved.values.rows(), curved.values.cols());
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(transfer.blocks.size()); ++i) {
        product.middleCols(i * n, n) =
            curved.values.middleCols(i * n, n) * transfer.blocks[static_cast<std::size_t>(i)];
    }

    FactorizationReport report;
    report.tolerance = tol.geometric;
    report.max_residual = product.size() == 0
                              ? 0.0
                              : (product - flat.values).cwiseAbs().maxCoeff();
    report.rank_euclidean = numeric_rank(flat.values, tol.rank_eps);
    report.rank_projective = numeric_rank(curved.values, tol.rank_eps);
    report.transfer_determinant = transfer.determinant();
    report.pass = report.max_residual <= report.tolerance;
    return report;
}

EquivalenceReport verify_equivalence(const Framework& fw, const Tolerances& tol) {
    if (fw.convention != Convention::Model) {
        throw ConventionError("verify_equivalence: needs a model-convention framework");
    }
    const int n = fw.geometry.dimension();
    const Framework flat = retagged(fw, GeometrySpec::euclidean(n));
    const RigidityMatrix flat_matrix = rigidity_matrix_euclidean(fw, tol);
    const VerdictRecord flat_verdict = rigidity_verdict(flat, tol);
    const StressSpace flat_stress = stress_space(flat_matrix, tol);

    EquivalenceReport report;
    report.rank_euclidean = flat_verdict.rank;
    report.pass = true;
    for (const int curvature : {+1, -1}) {
        EquivalenceLeg leg;
        leg.curvature = curvature;
        leg.factorization = verify_factorization(fw, curvature, tol);

        GeometrySpec curved_spec = GeometrySpec::proj_sphere(n);
        if (curvature < 0) {
            bool any_outside = false;
            for (const Vector& p : fw.points) any_outside |= p.squaredNorm() > 1.0;
            curved_spec = any_outside ? GeometrySpec::proj_exterior_hyperbolic(n)
                                      : GeometrySpec::proj_hyperbolic(n);
        }
        const Framework curved = retagged(fw, curved_spec);
        const VerdictRecord curved_verdict = rigidity_verdict(curved, tol);
        leg.rank_match = curved_verdict.rank == flat_verdict.rank;
        leg.verdict_match = curved_verdict.verdict == flat_verdict.verdict;
        leg.stress_dim = curved_verdict.stress_dim;

        const StressSpace curved_stress =
            stress_space(rigidity_matrix_projective(fw, curvature, tol), tol);
        leg.max_stress_angle =
            curved_stress.dimension() == flat_stress.dimension()
                ? max_principal_angle(curved_stress.basis, flat_stress.basis)
                : std::acos(-1.0) / 2.0;
        leg.pass = leg.factorization.pass && leg.rank_match && leg.verdict_match &&
                   leg.max_stress_angle <= tol.subspace_angle;
        report.pass = report.pass && leg.pass;
        report.legs.push_back(std::move(leg));
    }
    return report;
}

Framework transfer_framework(const Framework& fw, const GeometrySpec& target,
                             const Tolerances& tol) {
    require_valid(fw, tol);
    if (target.dimension() != fw.geometry.dimension()) {
        throw DimensionError("transfer_framework: target dimension " +
                             std::to_string(target.dimension()) +
                             " differs from framework dimension " +
                             std::to_string(fw.geometry.dimension()));
    }
    Framework out;
    out.graph = fw.graph;
    out.geometry = target;
    out.convention = target.native_convention();
    out.member_kinds = fw.member_kinds;
    out.points.reserve(fw.points.size());
    for (int i = 0; i < fw.vertex_count(); ++i) {
        out.points.push_back(point_from_ray(target, vertex_ray(fw, i), i, tol));
    }
    return out;
}

Framework with_convention(const Framework& fw, Convention target, const Tolerances& tol) {
    if (fw.geometry.model() != Model::Euclidean) {
        throw ConventionError("with_convention: only euclidean frameworks switch conventions");
    }
    if (fw.convention == target) return fw;
    require_valid(fw, tol);
    Framework out = fw;
    out.convention = target;
    out.points.clear();
    const int n = fw.geometry.dimension();
    for (const Vector& p : fw.points) {
        if (target == Convention::Ambient) {
            Vector lift(n + 1);
            lift.head(n) = p;
            lift(n) = 1.0;
            out.points.push_back(std::move(lift));
        } else {
            out.points.push_back(p.head(n).eval());
        }
    }
    return out;
}

std::vector<Vector> transfer_motion(const Framework& fw, const Vector& stacked_motion,
                                    const GeometrySpec& target, const Tolerances& tol) {
    require_valid(fw, tol);
    if (target.dimension() != fw.geometry.dimension()) {
        throw DimensionError("transfer_motion: dimension mismatch");
    }
    const std::vector<Vector> motions = split_motion(fw, stacked_motion);
    const int n = fw.geometry.dimension();

    std::vector<Vector> out;
    out.reserve(motions.size());
    for (int i = 0; i < fw.vertex_count(); ++i) {
        const Vector ray = vertex_ray(fw, i);
        const Vector& u = motions[static_cast<std::size_t>(i)];
        try {
            // Source to the flat field at the central projection of the ray.
            Vector hub;
            switch (fw.geometry.model()) {
                case Model::Euclidean:
                    hub = fw.convention == Convention::Ambient ? u.head(n).eval() : u;
                    break;
                case Model::ProjSphere:
                case Model::ProjHyperbolic:
                case Model::ProjExteriorHyperbolic: {
                    const int K = fw.geometry.curvature_sign();
                    const Vector& p = fw.points[static_cast<std::size_t>(i)];
                    const double det = 1.0 + K * p.squaredNorm();
                    if (std::abs(det) <= tol.geometric) {
                        throw AbsoluteError("transfer block is singular (p.p = 1)");
                    }
                    hub = u - (static_cast<double>(K) * p.dot(u) / det) * p;
                    break;
                }
                case Model::SphereAmbient:
                    hub = motion_sphere_to_euclid(ray, u, tol).head(n).eval();
                    break;
                case Model::AmbientForm: {
                    const Vector& a = fw.geometry.form_coefficients();
                    const double nrm = ray.norm();
                    const Vector sphere_point = ray / nrm;
                    const Vector sphere_motion = a.cwiseProduct(u) / nrm;
                    hub = motion_sphere_to_euclid(sphere_point, sphere_motion, tol)
                              .head(n)
                              .eval();
                    break;
                }
            }

            // Flat field to the target convention at the transferred vertex.
            switch (target.model()) {
                case Model::Euclidean:
                    out.push_back(hub);
                    break;
                case Model::ProjSphere:
                case Model::ProjHyperbolic:
                case Model::ProjExteriorHyperbolic: {
                    const Vector m = point_from_ray(target, ray, i, tol);
                    out.push_back(transfer_block(m, target.curvature_sign()) * hub);
                    break;
                }
                case Model::SphereAmbient:
                case Model::AmbientForm: {
                    const Vector flat_point = gnomic_project(ray, tol);
                    Vector flat_motion(n + 1);
                    flat_motion.head(n) = hub;
                    flat_motion(n) = 0.0;
                    const Vector sphere_motion =
                        motion_euclid_to_sphere(flat_point, flat_motion);
                    if (target.model() == Model::SphereAmbient) {
                        out.push_back(sphere_motion);
                    } else {
                        const Vector surface_point = point_from_ray(target, ray, i, tol);
                        const Vector& a = target.form_coefficients();
                        out.push_back(surface_point.norm() *
                                      sphere_motion.cwiseQuotient(a));
                    }
                    break;
                }
            }
        } catch (const DomainError& err) {
            rethrow_for_vertex(i, err);
        }
    }
    return out;
}

Framework cone_framework(const Framework& fw, const Tolerances& tol) {
    require_valid(fw, tol);
    if (fw.geometry.model() != Model::SphereAmbient ||
        fw.convention != Convention::Ambient) {
        throw ConventionError("cone_framework: needs an ambient spherical framework");
    }
    const int n = fw.geometry.dimension();
    const int v = fw.vertex_count();

    Framework out;
    out.geometry = GeometrySpec::euclidean(n + 1);
    out.convention = Convention::Model;
    out.points = fw.points;  // ambient sphere coordinates become flat points
    out.points.push_back(Vector::Zero(n + 1));
    out.graph.vertex_count = v + 1;
    out.graph.edges = fw.graph.edges;
    for (int i = 0; i < v; ++i) out.graph.edges.push_back({i, v});
    if (!fw.member_kinds.empty()) {
        out.member_kinds = fw.member_kinds;
        out.member_kinds.resize(out.graph.edges.size(), MemberKind::Bar);
    }
    return out;
}

Framework apply_projective_transform(const Framework& fw, const Matrix& map,
                                     const Tolerances& tol) {
    require_valid(fw, tol);
    if (fw.geometry.model() != Model::Euclidean ||
        fw.convention != Convention::Model) {
        throw ConventionError(
            "apply_projective_transform: needs a flat model-convention framework");
    }
    const int n = fw.geometry.dimension();
    if (map.rows() != n + 1 || map.cols() != n + 1) {
        throw DimensionError("apply_projective_transform: map must be (n+1)x(n+1)");
    }
    const Eigen::FullPivLU<Matrix> lu(map);
    if (!lu.isInvertible()) {
        throw DomainError("apply_projective_transform: map is singular");
    }
    Framework out = fw;
    for (int i = 0; i < fw.vertex_count(); ++i) {
        Vector lift(n + 1);
        lift.head(n) = fw.points[static_cast<std::size_t>(i)];
        lift(n) = 1.0;
        const Vector image = map * lift;
        if (std::abs(image(n)) <= tol.geometric) {
            throw DomainError("apply_projective_transform: vertex " + std::to_string(i) +
                              " is sent to infinity");
        }
        out.points[static_cast<std::size_t>(i)] = (image.head(n) / image(n)).eval();
    }
    return out;
}

}  // namespace rigiscope
