#pragma once

#include "rigiscope/transfer.hpp"

namespace rigiscope {

/// Hyperbolic hyperplane { x : <pole, x>_1 = 0 } represented by its
/// exterior pole, normalized to <pole, pole>_1 = 1 with a non-negative
/// last coordinate.
struct Hyperplane {
    Vector pole;
    int dimension() const { return static_cast<int>(pole.size()) - 1; }
};

/// Pole of the hyperplane polar to an exterior point. Requires
/// <p, p>_1 > tol.
Hyperplane polar_hyperplane(const Vector& exterior_point, const Tolerances& tol = {});

/// arccos(<p, q>_1) of the normalized poles. Throws DomainError for
/// non-intersecting (ultraparallel) hyperplanes.
double hyperplane_angle(const Hyperplane& p, const Hyperplane& q,
                        const Tolerances& tol = {});

/// Hyperplanes under pairwise angle constraints. Angles are derived from
/// the poles; NaN marks a formal constraint between ultraparallel planes.
struct AngleSystem {
    Graph graph;
    std::vector<Hyperplane> hyperplanes;
    std::vector<double> angles;
    int dimension = 0;
};

/// Normalizes the poles and computes the constraint angles. Without the
/// formal flag, ultraparallel pairs are rejected.
AngleSystem make_angle_system(Graph graph, const std::vector<Vector>& poles,
                              const Tolerances& tol = {}, bool formal = false);

/// Reinterpret an exterior-hyperbolic point framework as a plane-and-angle
/// system. Accepts ambient signature frameworks (k = 1, level +1) and
/// exterior projective frameworks (lifted first).
AngleSystem polar_angle_system(const Framework& fw, const Tolerances& tol = {},
                               bool formal = false);

/// The exterior point framework whose vertices are the (normalized) poles.
Framework polar_framework(const AngleSystem& sys);

struct StiffnessRecord {
    bool stiff = false;
    VerdictRecord record;  // verdict of the polar point framework
};

/// First-order stiffness of the angle system: builds the polar point
/// framework and runs the ambient rigidity verdict under the k = 1 form.
StiffnessRecord stiffness_verdict(const AngleSystem& sys, const Tolerances& tol = {});

/// Angle-system JSON: {"hyperplanes": [[pole], ...], "angle_edges": [[i,j], ...]}.
AngleSystem parse_angle_system(std::string_view text, const Tolerances& tol = {},
                               bool formal = false);
std::string serialize_angle_system(const AngleSystem& sys);

/// Cheap dispatch: does the document look like an angle system?
bool looks_like_angle_system(std::string_view text);

}  // namespace rigiscope
