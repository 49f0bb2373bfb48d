#include "rigiscope/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rigiscope {

namespace {

void check_dimension(int n, const char* who) {
    if (n < 1) {
        throw DimensionError(std::string(who) + ": dimension must be >= 1, got " +
                             std::to_string(n));
    }
}

void check_same_size(const Vector& x, const Vector& y, const char* who) {
    if (x.size() != y.size()) {
        throw DimensionError(std::string(who) + ": vector lengths differ (" +
                             std::to_string(x.size()) + " vs " +
                             std::to_string(y.size()) + ")");
    }
}

void check_ambient(const GeometrySpec& spec, const Vector& x, const char* who) {
    if (static_cast<int>(x.size()) != spec.ambient_size()) {
        throw DimensionError(std::string(who) + ": expected ambient vector of length " +
                             std::to_string(spec.ambient_size()) + ", got " +
                             std::to_string(x.size()));
    }
}

void check_model(const GeometrySpec& spec, const Vector& x, const char* who) {
    if (static_cast<int>(x.size()) != spec.dimension()) {
        throw DimensionError(std::string(who) + ": expected model vector of length " +
                             std::to_string(spec.dimension()) + ", got " +
                             std::to_string(x.size()));
    }
}

}  // namespace

std::string_view model_name(Model model) {
    switch (model) {
        case Model::Euclidean: return "euclidean";
        case Model::SphereAmbient: return "sphere_ambient";
        case Model::ProjSphere: return "proj_sphere";
        case Model::ProjHyperbolic: return "proj_hyperbolic";
        case Model::ProjExteriorHyperbolic: return "proj_exterior_hyperbolic";
        case Model::AmbientForm: return "ambient_form";
    }
    throw Error("model_name: invalid model enum");
}

Model model_from_name(std::string_view name) {
    if (name == "euclidean") return Model::Euclidean;
    if (name == "sphere_ambient") return Model::SphereAmbient;
    if (name == "proj_sphere") return Model::ProjSphere;
    if (name == "proj_hyperbolic") return Model::ProjHyperbolic;
    if (name == "proj_exterior_hyperbolic") return Model::ProjExteriorHyperbolic;
    if (name == "ambient_form") return Model::AmbientForm;
    throw UnsupportedModelError("unsupported model '" + std::string(name) + "'");
}

std::string_view convention_name(Convention convention) {
    return convention == Convention::Ambient ? "ambient" : "model";
}

Convention convention_from_name(std::string_view name) {
    if (name == "ambient") return Convention::Ambient;
    if (name == "model") return Convention::Model;
    throw ParseError("coordinates must be 'ambient' or 'model', got '" +
                     std::string(name) + "'");
}

GeometrySpec GeometrySpec::euclidean(int dimension) {
    check_dimension(dimension, "GeometrySpec::euclidean");
    GeometrySpec s;
    s.model_ = Model::Euclidean;
    s.dimension_ = dimension;
    s.coefficients_ = Vector::Ones(dimension + 1);
    s.coefficients_(dimension) = 0.0;
    s.level_ = 0.0;
    s.curvature_ = 0;
    return s;
}

GeometrySpec GeometrySpec::sphere(int dimension) {
    check_dimension(dimension, "GeometrySpec::sphere");
    GeometrySpec s;
    s.model_ = Model::SphereAmbient;
    s.dimension_ = dimension;
    s.coefficients_ = Vector::Ones(dimension + 1);
    s.level_ = 1.0;
    s.curvature_ = 0;
    return s;
}

GeometrySpec GeometrySpec::proj_sphere(int dimension) {
    check_dimension(dimension, "GeometrySpec::proj_sphere");
    GeometrySpec s;
    s.model_ = Model::ProjSphere;
    s.dimension_ = dimension;
    s.coefficients_ = Vector::Ones(dimension + 1);
    s.level_ = 1.0;
    s.curvature_ = +1;
    return s;
}

GeometrySpec GeometrySpec::proj_hyperbolic(int dimension) {
    check_dimension(dimension, "GeometrySpec::proj_hyperbolic");
    GeometrySpec s;
    s.model_ = Model::ProjHyperbolic;
    s.dimension_ = dimension;
    s.coefficients_ = Vector::Ones(dimension + 1);
    s.coefficients_(dimension) = -1.0;
    s.level_ = -1.0;
    s.curvature_ = -1;
    return s;
}

GeometrySpec GeometrySpec::proj_exterior_hyperbolic(int dimension) {
    check_dimension(dimension, "GeometrySpec::proj_exterior_hyperbolic");
    GeometrySpec s;
    s.model_ = Model::ProjExteriorHyperbolic;
    s.dimension_ = dimension;
    s.coefficients_ = Vector::Ones(dimension + 1);
    s.coefficients_(dimension) = -1.0;
    s.level_ = 1.0;
    s.curvature_ = -1;
    return s;
}

GeometrySpec GeometrySpec::ambient_form(Vector coefficients, double level) {
    const int n = static_cast<int>(coefficients.size()) - 1;
    check_dimension(n, "GeometrySpec::ambient_form");
    for (int i = 0; i <= n; ++i) {
        if (coefficients(i) == 0.0) {
            throw DomainError("GeometrySpec::ambient_form: coefficient a_" +
                              std::to_string(i + 1) + " must be nonzero");
        }
    }
    if (level == 0.0) {
        throw DomainError("GeometrySpec::ambient_form: level must be nonzero");
    }
    GeometrySpec s;
    s.model_ = Model::AmbientForm;
    s.dimension_ = n;
    s.coefficients_ = std::move(coefficients);
    s.level_ = level;
    s.curvature_ = 0;
    return s;
}

GeometrySpec GeometrySpec::signature_surface(int dimension, int k, double level) {
    check_dimension(dimension, "GeometrySpec::signature_surface");
    if (k < 0 || k > dimension + 1) {
        throw DimensionError("GeometrySpec::signature_surface: k must be in [0, n+1]");
    }
    Vector a = Vector::Ones(dimension + 1);
    a.tail(k).setConstant(-1.0);
    return ambient_form(std::move(a), level);
}

int GeometrySpec::curvature_sign() const {
    if (curvature_ == 0) {
        throw Error("curvature sign is defined only for projective models, not '" +
                    std::string(model_name(model_)) + "'");
    }
    return curvature_;
}

int GeometrySpec::signature_k() const {
    const int m = static_cast<int>(coefficients_.size());
    int i = 0;
    while (i < m && coefficients_(i) == 1.0) ++i;
    int k = 0;
    int j = i;
    while (j < m && coefficients_(j) == -1.0) {
        ++j;
        ++k;
    }
    if (j != m) return -1;  // not a signature pattern (e.g. Euclidean)
    return k;
}

bool GeometrySpec::is_projective() const {
    return model_ == Model::ProjSphere || model_ == Model::ProjHyperbolic ||
           model_ == Model::ProjExteriorHyperbolic;
}

bool GeometrySpec::allows(Convention c) const {
    switch (model_) {
        case Model::Euclidean: return true;
        case Model::SphereAmbient:
        case Model::AmbientForm: return c == Convention::Ambient;
        default: return c == Convention::Model;
    }
}

Convention GeometrySpec::native_convention() const {
    return (model_ == Model::SphereAmbient || model_ == Model::AmbientForm)
               ? Convention::Ambient
               : Convention::Model;
}

bool GeometrySpec::has_metric_distance() const {
    switch (model_) {
        case Model::Euclidean:
        case Model::SphereAmbient:
        case Model::ProjSphere:
        case Model::ProjHyperbolic: return true;
        case Model::ProjExteriorHyperbolic: return false;
        case Model::AmbientForm: {
            const int k = signature_k();
            return (k == 0 && level_ > 0.0) || (k == 1 && level_ < 0.0);
        }
    }
    return false;
}

GeometrySpec GeometrySpec::ambient_counterpart() const {
    switch (model_) {
        case Model::ProjSphere: return sphere(dimension_);
        case Model::ProjHyperbolic: return signature_surface(dimension_, 1, -1.0);
        case Model::ProjExteriorHyperbolic: return signature_surface(dimension_, 1, 1.0);
        default: return *this;
    }
}

double GeometrySpec::form(const Vector& x, const Vector& y) const {
    return bilinear_form(*this, x, y);
}

bool operator==(const GeometrySpec& a, const GeometrySpec& b) {
    return a.model_ == b.model_ && a.dimension_ == b.dimension_ &&
           a.level_ == b.level_ && a.curvature_ == b.curvature_ &&
           a.coefficients_ == b.coefficients_;
}

double bilinear_form(const GeometrySpec& spec, const Vector& x, const Vector& y) {
    check_ambient(spec, x, "bilinear_form");
    check_ambient(spec, y, "bilinear_form");
    return (spec.form_coefficients().array() * x.array() * y.array()).sum();
}

double signature_form(int k, const Vector& x, const Vector& y) {
    check_same_size(x, y, "signature_form");
    if (k < 0 || k > x.size()) {
        throw DimensionError("signature_form: k must be in [0, len]");
    }
    const auto m = x.size();
    return x.head(m - k).dot(y.head(m - k)) - x.tail(k).dot(y.tail(k));
}

Vector involution_J(int k, const Vector& x) {
    if (k < 0 || k > x.size()) {
        throw DimensionError("involution_J: k must be in [0, len]");
    }
    Vector y = x;
    y.tail(k) *= -1.0;
    return y;
}

double clamp_to_interval(double x, double lo, double hi, double tol,
                         const char* what) {
    if (x < lo - tol || x > hi + tol) {
        throw DomainError(std::string(what) + ": value " + std::to_string(x) +
                          " outside [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "] beyond tolerance");
    }
    return std::clamp(x, lo, hi);
}

double distance(const GeometrySpec& spec, const Vector& x, const Vector& y,
                const Tolerances& tol) {
    check_same_size(x, y, "distance");
    switch (spec.model()) {
        case Model::Euclidean: {
            if (x.size() != spec.dimension() && x.size() != spec.ambient_size()) {
                throw DimensionError("distance: euclidean point length must be n or n+1");
            }
            return (x - y).norm();
        }
        case Model::SphereAmbient: {
            check_ambient(spec, x, "distance");
            return std::acos(
                clamp_to_interval(x.dot(y), -1.0, 1.0, tol.geometric,
                                  "spherical distance argument"));
        }
        case Model::ProjSphere: {
            check_model(spec, x, "distance");
            const double num = 1.0 + x.dot(y);
            const double den = std::sqrt((1.0 + x.squaredNorm()) * (1.0 + y.squaredNorm()));
            return std::acos(clamp_to_interval(num / den, -1.0, 1.0, tol.geometric,
                                               "projective spherical distance argument"));
        }
        case Model::ProjHyperbolic: {
            check_model(spec, x, "distance");
            const double dx = 1.0 - x.squaredNorm();
            const double dy = 1.0 - y.squaredNorm();
            if (dx <= tol.geometric || dy <= tol.geometric) {
                throw DomainError("distance: hyperbolic point on or outside the unit ball");
            }
            const double arg = (1.0 - x.dot(y)) / std::sqrt(dx * dy);
            if (arg < 1.0 - tol.geometric) {
                throw DomainError("distance: hyperbolic distance argument below 1");
            }
            return std::acosh(std::max(arg, 1.0));
        }
        case Model::ProjExteriorHyperbolic: {
            check_model(spec, x, "distance");
            const double dx = x.squaredNorm() - 1.0;
            const double dy = y.squaredNorm() - 1.0;
            if (dx <= tol.geometric || dy <= tol.geometric) {
                throw DomainError("distance: point is not exterior to the unit ball");
            }
            // The exterior region carries no metric distance; report the
            // invariant pairing of the normalized lifts instead.
            return (x.dot(y) - 1.0) / std::sqrt(dx * dy);
        }
        case Model::AmbientForm: {
            check_ambient(spec, x, "distance");
            const double qx = spec.form(x, x);
            const double qy = spec.form(y, y);
            if (std::abs(qx) <= tol.geometric || std::abs(qy) <= tol.geometric) {
                throw AbsoluteError("distance: point lies on the absolute of the form");
            }
            const double qxy = spec.form(x, y);
            const int k = spec.signature_k();
            if (k == 0 && spec.level() > 0.0) {
                if (qx < 0.0 || qy < 0.0) {
                    throw DomainError("distance: point has negative square norm for a sphere form");
                }
                return std::acos(clamp_to_interval(qxy / std::sqrt(qx * qy), -1.0, 1.0,
                                                   tol.geometric, "spherical distance argument"));
            }
            if (k == 1 && spec.level() < 0.0) {
                if (qx > 0.0 || qy > 0.0) {
                    throw DomainError("distance: point is not on the hyperboloid sheet");
                }
                const double arg = -qxy / std::sqrt(qx * qy);
                if (arg < 1.0 - tol.geometric) {
                    throw DomainError("distance: hyperbolic distance argument below 1");
                }
                return std::acosh(std::max(arg, 1.0));
            }
            if (k == 1 && spec.level() > 0.0) {
                if (qx < 0.0 || qy < 0.0) {
                    throw DomainError("distance: point is not exterior (form value negative)");
                }
                return qxy / std::sqrt(qx * qy);  // invariant, as for the exterior model
            }
            throw DomainError("distance: no metric distance defined for this form; "
                              "rigidity analysis uses the bilinear form only");
        }
    }
    throw Error("distance: invalid model enum");
}

Vector gnomic_project(const Vector& x, const Tolerances& tol) {
    if (x.size() < 2) {
        throw DimensionError("gnomic_project: ambient vector must have length >= 2");
    }
    const double h = x(x.size() - 1);
    if (h <= tol.geometric) {
        throw EquatorError("gnomic_project: point lies on or below the equator (e.x = " +
                           std::to_string(h) + ")");
    }
    Vector y = x / h;
    y(y.size() - 1) = 1.0;
    return y;
}

Vector normalize_to_surface(const GeometrySpec& target, const Vector& x,
                            const Tolerances& tol) {
    check_ambient(target, x, "normalize_to_surface");
    switch (target.model()) {
        case Model::SphereAmbient: {
            const double nrm = x.norm();
            if (nrm <= tol.geometric) {
                throw DomainError("normalize_to_surface: cannot normalize the zero vector");
            }
            return x / nrm;
        }
        case Model::AmbientForm: {
            const double q = target.form(x, x);
            if (std::abs(q) <= tol.geometric) {
                throw AbsoluteError(
                    "normalize_to_surface: point lies on the absolute of the form");
            }
            if ((q > 0.0) != (target.level() > 0.0)) {
                throw DomainError(
                    "normalize_to_surface: form value has the wrong sign for the target surface");
            }
            if (x(x.size() - 1) <= tol.geometric) {
                throw DomainError(
                    "normalize_to_surface: target surface requires a positive last coordinate");
            }
            return x * std::sqrt(target.level() / q);
        }
        default:
            throw ConventionError(
                "normalize_to_surface: target must be an ambient surface "
                "(sphere_ambient or ambient_form)");
    }
}

Vector motion_sphere_to_euclid(const Vector& p, const Vector& u,
                               const Tolerances& tol) {
    check_same_size(p, u, "motion_sphere_to_euclid");
    const double h = p(p.size() - 1);
    if (h <= tol.geometric) {
        throw EquatorError(
            "motion_sphere_to_euclid: point lies on or below the equator");
    }
    Vector w = u;
    w(w.size() - 1) = 0.0;
    return w / h;
}

Vector motion_euclid_to_sphere(const Vector& q, const Vector& v) {
    check_same_size(q, v, "motion_euclid_to_sphere");
    const double s2 = q.squaredNorm();
    if (s2 == 0.0) {
        throw DomainError("motion_euclid_to_sphere: q must be nonzero");
    }
    Vector w = v;
    w(w.size() - 1) -= v.dot(q);
    return w / std::sqrt(s2);
}

Vector motion_X_to_sphere(const Vector& p, const Vector& u, int k) {
    check_same_size(p, u, "motion_X_to_sphere");
    const double s2 = p.squaredNorm();
    if (s2 <= 0.0) {
        throw DomainError("motion_X_to_sphere: p.p must be positive");
    }
    return involution_J(k, u) / std::sqrt(s2);
}

}  // namespace rigiscope
