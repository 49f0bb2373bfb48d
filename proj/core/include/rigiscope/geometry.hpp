#pragma once

#include <Eigen/Core>

#include <string_view>

#include "rigiscope/errors.hpp"

namespace rigiscope {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Metric models. Ambient models carry n+1 coordinates per point,
/// projective (Klein) models carry n.
enum class Model {
    Euclidean,
    SphereAmbient,
    ProjSphere,
    ProjHyperbolic,
    ProjExteriorHyperbolic,
    AmbientForm,
};

/// Coordinate convention of a framework: ambient vectors in R^{n+1}
/// or projective-model vectors in R^n.
enum class Convention { Ambient, Model };

std::string_view model_name(Model model);
Model model_from_name(std::string_view name);  // throws UnsupportedModelError

std::string_view convention_name(Convention convention);
Convention convention_from_name(std::string_view name);  // throws ParseError

/// Numeric policy threaded through the engine. `geometric` bounds surface
/// membership, tangency and domain clamping; `rank_eps` is the relative
/// singular-value cutoff for rank decisions; `subspace_angle` bounds
/// principal angles when comparing computed subspaces.
struct Tolerances {
    double geometric = 1e-9;
    double rank_eps = 1e-12;
    double subspace_angle = 1e-8;
};

/// Which space a framework lives in: the model together with the data
/// needed to evaluate its bilinear form (coefficients a_1..a_{n+1}),
/// the surface level c, and the curvature sign of projective models.
class GeometrySpec {
public:
    static GeometrySpec euclidean(int dimension);
    static GeometrySpec sphere(int dimension);
    static GeometrySpec proj_sphere(int dimension);
    static GeometrySpec proj_hyperbolic(int dimension);
    static GeometrySpec proj_exterior_hyperbolic(int dimension);
    /// Surface { x : sum_i a_i x_i^2 = level, x_{n+1} > 0 } for nonzero a_i.
    static GeometrySpec ambient_form(Vector coefficients, double level);
    /// Signature surface with k trailing -1 coefficients. k=1, level=-1 is
    /// the hyperboloid model of hyperbolic space; k=1, level=+1 its exterior;
    /// k=0, level=+1 the unit sphere.
    static GeometrySpec signature_surface(int dimension, int k, double level);

    Model model() const { return model_; }
    int dimension() const { return dimension_; }
    int ambient_size() const { return dimension_ + 1; }
    int coord_size(Convention c) const {
        return c == Convention::Ambient ? dimension_ + 1 : dimension_;
    }

    /// Length n+1. Euclidean uses (1,...,1,0), the sole zero coefficient.
    const Vector& form_coefficients() const { return coefficients_; }
    double level() const { return level_; }

    /// +1 for ProjSphere, -1 for ProjHyperbolic/ProjExteriorHyperbolic.
    /// Throws Error for other models.
    int curvature_sign() const;
    /// Trailing -1 count when the coefficients form a signature pattern
    /// (+1...+1,-1...-1); -1 otherwise (including Euclidean).
    int signature_k() const;

    bool is_projective() const;
    bool allows(Convention c) const;
    Convention native_convention() const;
    bool has_metric_distance() const;

    /// Ambient surface realizing a projective model; identity otherwise.
    GeometrySpec ambient_counterpart() const;

    double form(const Vector& x, const Vector& y) const;

    friend bool operator==(const GeometrySpec& a, const GeometrySpec& b);
    friend bool operator!=(const GeometrySpec& a, const GeometrySpec& b) { return !(a == b); }

private:
    GeometrySpec() = default;

    Model model_ = Model::Euclidean;
    int dimension_ = 1;
    Vector coefficients_;
    double level_ = 0.0;
    int curvature_ = 0;
};

/// sum_i a_i x_i y_i for ambient vectors of length n+1.
double bilinear_form(const GeometrySpec& spec, const Vector& x, const Vector& y);

/// Signature form with k trailing sign flips.
double signature_form(int k, const Vector& x, const Vector& y);

/// Negate the last k coordinates. Self-inverse isometry of the dot product.
Vector involution_J(int k, const Vector& x);

/// Model distance (or, for exterior-hyperbolic points, the normalized form
/// invariant; no metric distance exists there and rigidity analysis only
/// needs the form).
double distance(const GeometrySpec& spec, const Vector& x, const Vector& y,
                const Tolerances& tol = {});

/// Central projection x -> x / (e.x); last coordinate of the result is 1.
Vector gnomic_project(const Vector& x, const Tolerances& tol = {});

/// Scale x onto the target ambient surface (sphere or form surface).
Vector normalize_to_surface(const GeometrySpec& target, const Vector& x,
                            const Tolerances& tol = {});

/// Push a sphere tangent vector at p to the central projection:
/// u -> (u - (u.e)e) / (e.p). The result has exact zero e-component.
Vector motion_sphere_to_euclid(const Vector& p, const Vector& u,
                               const Tolerances& tol = {});

/// Inverse direction: v -> (v - (v.q)e) / sqrt(q.q) at the flat point q.
Vector motion_euclid_to_sphere(const Vector& q, const Vector& v);

/// Push a surface tangent vector to the unit sphere: u -> J_k(u)/sqrt(p.p).
Vector motion_X_to_sphere(const Vector& p, const Vector& u, int k);

/// Clamp x into [lo, hi] when within tol of the interval, else DomainError.
double clamp_to_interval(double x, double lo, double hi, double tol,
                         const char* what);

}  // namespace rigiscope
