#pragma once

#include "rigiscope/transfer.hpp"

namespace rigiscope {

struct ExampleDescriptor {
    std::string name;
    int dimension = 0;
    int vertex_count = 0;
    int edge_count = 0;
    bool flexible = false;
};

/// Names accepted by canonical_polytope and flexible_example.
std::vector<ExampleDescriptor> example_catalog();

/// One-skeleton of a convex polytope with triangulated 2-faces, placed in
/// the requested geometry. Base coordinates are centered with circumradius
/// one, then scaled; hyperbolic targets need the scaled hull inside the
/// unit ball, exterior targets outside it.
/// Names: simplex(n), octahedron, icosahedron, bipyramid(m), triangulated-prism.
Framework canonical_polytope(const std::string& name, const GeometrySpec& geometry,
                             double scale = 1.0, const Tolerances& tol = {});

/// Known flexible controls (flat model convention):
/// square-4-cycle, double-banana-3d, degenerate-collinear-triangle.
Framework flexible_example(const std::string& name);

}  // namespace rigiscope
