#include "rigiscope/polytopes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace rigiscope {

namespace {

struct BasePolytope {
    Graph graph;
    std::vector<Vector> points;  // flat model coordinates, circumradius 1
    int dimension = 0;
};

Vector make_point(std::initializer_list<double> coords) {
    Vector p(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index i = 0;
    for (const double c : coords) p(i++) = c;
    return p;
}

/// Regular n-simplex: project the shifted standard basis of R^{n+1} onto
/// the hyperplane orthogonal to (1,...,1), then scale to circumradius 1.
BasePolytope simplex(int n) {
    const int m = n + 1;
    Vector ones = Vector::Ones(m) / std::sqrt(static_cast<double>(m));
    Vector w = ones;
    w(m - 1) -= 1.0;  // Householder direction mapping ones onto the last axis
    const double w2 = w.squaredNorm();

    BasePolytope base;
    base.dimension = n;
    base.graph.vertex_count = m;
    const double radius = std::sqrt(static_cast<double>(n) / m);
    for (int i = 0; i < m; ++i) {
        Vector e = Vector::Zero(m);
        e(i) = 1.0;
        Vector centered = e - Vector::Ones(m) / m;
        if (w2 > 0.0) centered -= (2.0 * w.dot(centered) / w2) * w;
        base.points.push_back((centered.head(n) / radius).eval());
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) base.graph.edges.push_back({i, j});
    }
    return base;
}

BasePolytope octahedron() {
    BasePolytope base;
    base.dimension = 3;
    base.graph.vertex_count = 6;
    for (int axis = 0; axis < 3; ++axis) {
        for (const double sign : {1.0, -1.0}) {
            Vector p = Vector::Zero(3);
            p(axis) = sign;
            base.points.push_back(std::move(p));
        }
    }
    for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
            if (i / 2 == j / 2) continue;  // antipodal pair, not an edge
            base.graph.edges.push_back({i, j});
        }
    }
    return base;
}

BasePolytope icosahedron() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double radius = std::sqrt(1.0 + phi * phi);
    BasePolytope base;
    base.dimension = 3;
    base.graph.vertex_count = 12;
    for (const double a : {1.0, -1.0}) {
        for (const double b : {phi, -phi}) {
            base.points.push_back(make_point({0.0, a, b}) / radius);
            base.points.push_back(make_point({a, b, 0.0}) / radius);
            base.points.push_back(make_point({b, 0.0, a}) / radius);
        }
    }
    // Edges join vertices at the minimal pairwise distance.
    double min_dist = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 12; ++i) {
        for (int j = i + 1; j < 12; ++j) {
            min_dist = std::min(min_dist, (base.points[static_cast<std::size_t>(i)] -
                                           base.points[static_cast<std::size_t>(j)])
                                              .norm());
        }
    }
    for (int i = 0; i < 12; ++i) {
        for (int j = i + 1; j < 12; ++j) {
            const double d = (base.points[static_cast<std::size_t>(i)] -
                              base.points[static_cast<std::size_t>(j)])
                                 .norm();
            if (d < 1.1 * min_dist) base.graph.edges.push_back({i, j});
        }
    }
    return base;
}

BasePolytope bipyramid(int m) {
    if (m < 3) throw DomainError("bipyramid needs at least 3 equatorial vertices");
    BasePolytope base;
    base.dimension = 3;
    base.graph.vertex_count = m + 2;
    for (int j = 0; j < m; ++j) {
        const double theta = 2.0 * std::acos(-1.0) * j / m;
        base.points.push_back(make_point({std::cos(theta), std::sin(theta), 0.0}));
    }
    base.points.push_back(make_point({0.0, 0.0, 1.0}));
    base.points.push_back(make_point({0.0, 0.0, -1.0}));
    for (int j = 0; j < m; ++j) {
        base.graph.edges.push_back({j, (j + 1) % m});
        base.graph.edges.push_back({j, m});
        base.graph.edges.push_back({j, m + 1});
    }
    return base;
}

/// Triangular prism with each quadrilateral face split by one diagonal.
BasePolytope triangulated_prism() {
    const double r = 0.8;
    const double h = 0.6;
    BasePolytope base;
    base.dimension = 3;
    base.graph.vertex_count = 6;
    for (const double z : {-h, h}) {
        for (int j = 0; j < 3; ++j) {
            const double theta = 2.0 * std::acos(-1.0) * j / 3;
            base.points.push_back(make_point({r * std::cos(theta), r * std::sin(theta), z}));
        }
    }
    for (int j = 0; j < 3; ++j) {
        const int k = (j + 1) % 3;
        base.graph.edges.push_back({j, k});          // bottom triangle
        base.graph.edges.push_back({3 + j, 3 + k});  // top triangle
        base.graph.edges.push_back({j, 3 + j});      // vertical
        base.graph.edges.push_back({j, 3 + k});      // face diagonal
    }
    return base;
}

bool parse_parametric(const std::string& name, const std::string& prefix, int* arg) {
    if (name.size() <= prefix.size() + 2 || name.compare(0, prefix.size(), prefix) != 0 ||
        name[prefix.size()] != '(' || name.back() != ')') {
        return false;
    }
    const std::string inner = name.substr(prefix.size() + 1,
                                          name.size() - prefix.size() - 2);
    if (inner.empty() ||
        !std::all_of(inner.begin(), inner.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        return false;
    }
    *arg = std::stoi(inner);
    return true;
}

BasePolytope base_polytope(const std::string& name) {
    int arg = 0;
    if (parse_parametric(name, "simplex", &arg)) {
        if (arg < 1 || arg > 9) throw DomainError("simplex(n) needs 1 <= n <= 9");
        return simplex(arg);
    }
    if (parse_parametric(name, "bipyramid", &arg)) return bipyramid(arg);
    if (name == "octahedron") return octahedron();
    if (name == "icosahedron") return icosahedron();
    if (name == "triangulated-prism") return triangulated_prism();
    throw ParseError("unknown polytope '" + name +
                     "'; expected simplex(n), octahedron, icosahedron, "
                     "bipyramid(m) or triangulated-prism");
}

}  // namespace

std::vector<ExampleDescriptor> example_catalog() {
    return {
        {"simplex(3)", 3, 4, 6, false},
        {"octahedron", 3, 6, 12, false},
        {"icosahedron", 3, 12, 30, false},
        {"bipyramid(5)", 3, 7, 15, false},
        {"triangulated-prism", 3, 6, 12, false},
        {"square-4-cycle", 2, 4, 4, true},
        {"double-banana-3d", 3, 8, 18, true},
        {"degenerate-collinear-triangle", 2, 3, 3, true},
    };
}

Framework canonical_polytope(const std::string& name, const GeometrySpec& geometry,
                             double scale, const Tolerances& tol) {
    if (!(scale > 0.0)) {
        throw DomainError("canonical_polytope: scale must be positive");
    }
    BasePolytope base = base_polytope(name);
    if (geometry.dimension() != base.dimension) {
        throw DimensionError("canonical_polytope: '" + name + "' lives in dimension " +
                             std::to_string(base.dimension) + ", requested geometry has " +
                             std::to_string(geometry.dimension()));
    }
    Framework flat;
    flat.graph = std::move(base.graph);
    flat.geometry = GeometrySpec::euclidean(base.dimension);
    flat.convention = Convention::Model;
    flat.points.reserve(base.points.size());
    for (const Vector& p : base.points) flat.points.push_back((scale * p).eval());
    if (geometry.model() == Model::Euclidean) return flat;
    return transfer_framework(flat, geometry, tol);
}

Framework flexible_example(const std::string& name) {
    Framework fw;
    fw.convention = Convention::Model;
    if (name == "square-4-cycle") {
        fw.geometry = GeometrySpec::euclidean(2);
        fw.graph.vertex_count = 4;
        fw.graph.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
        fw.points = {make_point({-0.5, -0.5}), make_point({0.5, -0.5}),
                     make_point({0.5, 0.5}), make_point({-0.5, 0.5})};
        return fw;
    }
    if (name == "double-banana-3d") {
        // Two triangular bipyramids sharing their two apex vertices; each
        // banana spins independently about the shared hinge line.
        fw.geometry = GeometrySpec::euclidean(3);
        fw.graph.vertex_count = 8;
        fw.points = {
            make_point({0.0, 0.0, 0.8}),     // 0: hinge top
            make_point({0.0, 0.0, -0.8}),    // 1: hinge bottom
            make_point({0.5, 0.0, 0.05}),    // 2..4: first banana equator
            make_point({-0.2, 0.45, -0.03}),
            make_point({-0.28, -0.42, 0.02}),
            make_point({0.04, 0.5, 0.01}),   // 5..7: second banana equator
            make_point({-0.45, -0.21, 0.06}),
            make_point({0.42, -0.3, -0.04}),
        };
        for (const int first : {2, 5}) {
            for (int j = 0; j < 3; ++j) {
                const int a = first + j;
                const int b = first + (j + 1) % 3;
                fw.graph.edges.push_back({a, b});
                fw.graph.edges.push_back({0, a});
                fw.graph.edges.push_back({1, a});
            }
        }
        return fw;
    }
    if (name == "degenerate-collinear-triangle") {
        fw.geometry = GeometrySpec::euclidean(2);
        fw.graph.vertex_count = 3;
        fw.graph.edges = {{0, 1}, {1, 2}, {0, 2}};
        fw.points = {make_point({-0.6, 0.0}), make_point({0.0, 0.0}),
                     make_point({0.6, 0.0})};
        return fw;
    }
    throw ParseError("unknown flexible example '" + name +
                     "'; expected square-4-cycle, double-banana-3d or "
                     "degenerate-collinear-triangle");
}

}  // namespace rigiscope
