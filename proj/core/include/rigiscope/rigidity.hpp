#pragma once

#include <optional>

#include "rigiscope/framework.hpp"
#include "rigiscope/linalg.hpp"

namespace rigiscope {

/// Dense rigidity matrix with row/column provenance. Model convention:
/// |E| rows, n columns per vertex. Ambient convention: |E| + v rows
/// (tangency rows follow the edge rows), n+1 columns per vertex.
struct RigidityMatrix {
    Matrix values;
    GeometrySpec geometry = GeometrySpec::euclidean(1);
    Convention convention = Convention::Model;
    int vertex_count = 0;
    int block_size = 0;
    std::vector<std::array<int, 2>> edge_rows;
    bool has_tangency_rows = false;

    int rows() const { return static_cast<int>(values.rows()); }
    int cols() const { return static_cast<int>(values.cols()); }
    std::string row_label(int row) const;
    std::string col_label(int col) const;
};

/// Rows (p_i - p_j | p_j - p_i) on raw R^n coordinates. Accepts any
/// model-convention framework (projective coordinates reinterpreted as flat).
RigidityMatrix rigidity_matrix_euclidean(const Framework& fw,
                                         const Tolerances& tol = {});

/// Rows (k_ij | k_ji) with k_ij = ((1 + K p_i.p_j)/(1 + K p_i.p_i)) p_i - p_j.
/// For curvature -1 every vertex must stay off the absolute p.p = 1.
RigidityMatrix rigidity_matrix_projective(const Framework& fw, int curvature,
                                          const Tolerances& tol = {});

/// Ambient constraint matrix: edge rows pair the form-weighted endpoints,
/// tangency rows pin each motion vector to the surface tangent space
/// (Euclidean: to the e.u = 0 hyperplane).
RigidityMatrix rigidity_matrix_ambient(const Framework& fw,
                                       const Tolerances& tol = {});

/// Dispatch on the framework's convention and model.
RigidityMatrix rigidity_matrix(const Framework& fw, const Tolerances& tol = {});

/// Orthonormal kernel basis: first-order motions of the framework.
/// trivial_dimension is filled by classified_motion_space; a bare
/// motion_space leaves it at zero.
struct MotionSpace {
    Matrix basis;
    int trivial_dimension = 0;
    int dimension() const { return static_cast<int>(basis.cols()); }
    int internal_dimension() const { return dimension() - trivial_dimension; }
};

MotionSpace motion_space(const RigidityMatrix& m, const Tolerances& tol = {});

/// Kernel basis together with the trivial/internal split against the
/// framework's restricted isometry space.
MotionSpace classified_motion_space(const Framework& fw, const Tolerances& tol = {});

/// Orthonormal left-kernel basis: self-stresses (row dependencies),
/// indexed by edge rows and, in ambient convention, the tangency rows.
struct StressSpace {
    Matrix basis;
    int dimension() const { return static_cast<int>(basis.cols()); }
};

StressSpace stress_space(const RigidityMatrix& m, const Tolerances& tol = {});

/// Basis of the pointwise infinitesimal-isometry generators u(x) = A x of
/// the framework's ambient geometry, as (n+1)x(n+1) matrices. For the
/// diagonal form D the generators satisfy A'D + DA = 0; Euclidean
/// generators are affine fields with zero last row. Always n(n+1)/2 of them.
std::vector<Matrix> trivial_motion_generators(const GeometrySpec& spec);

struct TrivialMotionSpace {
    Matrix basis;                  // orthonormal, in the framework's convention
    int generator_dimension = 0;   // n(n+1)/2
    int restricted_dimension = 0;  // rank of the restriction to the vertices
};

/// Restriction of the trivial generator fields to the framework's vertices,
/// expressed in its own coordinate convention: ambient fields A p_i, or the
/// projective derivative fields of the same generators in model coordinates
/// (equivalently the per-vertex transfer blocks applied to affine fields).
TrivialMotionSpace trivial_motion_space(const Framework& fw,
                                        const Tolerances& tol = {});

enum class Verdict { Rigid, Flexible };

std::string_view verdict_name(Verdict v);

struct VerdictRecord {
    Verdict verdict = Verdict::Flexible;
    int rank = 0;
    int motion_dim = 0;
    int trivial_dim = 0;
    int internal_dim = 0;
    int stress_dim = 0;
    std::optional<bool> isostatic;   // advisory; model convention, spanning, v >= n+1
    std::vector<int> degenerate_edges;  // coincident endpoints, rows kept
    Vector singular_values;
    double rank_threshold = 0.0;  // values above this counted toward the rank
};

/// First-order rigidity verdict: RIGID iff the motion space has the same
/// dimension as the restricted trivial space.
VerdictRecord rigidity_verdict(const Framework& fw, const Tolerances& tol = {});

/// Model convention: points affinely span R^n. Ambient convention: points
/// linearly span R^{n+1}.
bool spanning_configuration(const Framework& fw, const Tolerances& tol = {});

/// Stack per-vertex motion vectors into one coordinate vector and back.
Vector stack_motion(const std::vector<Vector>& per_vertex);
std::vector<Vector> split_motion(const Framework& fw, const Vector& stacked);

}  // namespace rigiscope
