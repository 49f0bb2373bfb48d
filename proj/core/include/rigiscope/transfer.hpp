#pragma once

#include "rigiscope/rigidity.hpp"

namespace rigiscope {

/// Per-vertex block T_p = I + K p p'. det(T_p) = 1 + K p.p.
Matrix transfer_block(const Vector& model_point, int curvature);

/// Block-diagonal transfer matrix for a model-convention framework.
/// Singularity (a vertex on the absolute for K = -1) is reported, not fatal.
struct TransferMatrix {
    std::vector<Matrix> blocks;
    std::vector<double> block_determinants;  // 1 + K p_i.p_i
    int curvature = 1;
    int block_size = 0;

    double determinant() const;
    bool singular(double tol = 1e-12) const;
    Matrix dense() const;
    Vector apply(const Vector& stacked) const;
    /// Per-block Sherman-Morrison inverse; AbsoluteError on singular blocks.
    Vector apply_inverse(const Vector& stacked, const Tolerances& tol = {}) const;
};

TransferMatrix transfer_matrix(const Framework& fw, int curvature);

/// Residual of the factorization R_X(G,p) T_K(G,p) = R_E(G,p) on the
/// framework's raw model coordinates.
struct FactorizationReport {
    double max_residual = 0.0;
    int rank_euclidean = 0;
    int rank_projective = 0;
    double transfer_determinant = 0.0;
    bool pass = false;
    double tolerance = 0.0;
};

FactorizationReport verify_factorization(const Framework& fw, int curvature,
                                         const Tolerances& tol = {});

/// Factorization, rank equality, verdict agreement and stress-subspace
/// coincidence between the flat matrix and both curved matrices on the
/// same coordinates.
struct EquivalenceLeg {
    int curvature = 1;
    FactorizationReport factorization;
    bool rank_match = false;
    bool verdict_match = false;
    int stress_dim = 0;
    double max_stress_angle = 0.0;
    bool pass = false;
};

struct EquivalenceReport {
    int rank_euclidean = 0;
    std::vector<EquivalenceLeg> legs;
    bool pass = false;
};

EquivalenceReport verify_equivalence(const Framework& fw, const Tolerances& tol = {});

/// Map a framework between geometries of the same dimension by composing
/// central projection and surface normalization along each vertex ray.
/// The result uses the target's native convention.
Framework transfer_framework(const Framework& fw, const GeometrySpec& target,
                             const Tolerances& tol = {});

/// Switch a Euclidean framework between ambient and model coordinates.
Framework with_convention(const Framework& fw, Convention target,
                          const Tolerances& tol = {});

/// Map a first-order motion of fw to the transferred framework, one vector
/// per vertex in the target's native convention.
std::vector<Vector> transfer_motion(const Framework& fw, const Vector& stacked_motion,
                                    const GeometrySpec& target,
                                    const Tolerances& tol = {});

/// Cone on an ambient spherical framework: a flat framework one dimension
/// up with a new apex at the origin joined to every vertex.
Framework cone_framework(const Framework& fw, const Tolerances& tol = {});

/// Apply an invertible homogeneous (n+1)x(n+1) map to a flat model
/// framework; every image vertex must stay finite.
Framework apply_projective_transform(const Framework& fw, const Matrix& map,
                                     const Tolerances& tol = {});

}  // namespace rigiscope
