// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is pinned here; random batteries use fixed seeds.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "random_frameworks.hpp"
#include "rigiscope/polarity.hpp"
#include "rigiscope/polytopes.hpp"
#include "rigiscope/transfer.hpp"

using namespace rigiscope;

namespace {

struct Criterion {
    int number;
    std::string description;
    std::function<bool(std::string&)> run;
};

bool expect(bool condition, const std::string& detail, std::string& log) {
    if (!condition && log.empty()) log = detail;
    return condition;
}

std::vector<Framework> random_battery(unsigned seed, int count) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick_v(3, 12);
    std::vector<Framework> battery;
    battery.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const int n = 2 + i % 2;
        battery.push_back(testgen::ball_framework(rng, n, pick_v(rng), 0.5, 0.9));
    }
    return battery;
}

const std::vector<std::string>& polytope_names() {
    static const std::vector<std::string> names = {
        "simplex(3)", "octahedron", "icosahedron", "bipyramid(5)",
        "triangulated-prism"};
    return names;
}

// 1. Factorization: residual of R_X T_K - R_E over 200 random frameworks.
bool criterion_factorization(std::string& log) {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const Framework& fw : random_battery(101, 200)) {
        for (const int curvature : {+1, -1}) {
            worst = std::max(worst,
                             verify_factorization(fw, curvature).max_residual);
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream detail;
    detail << "max residual " << worst << ", " << seconds << "s";
    log = detail.str();
    return worst <= 1e-9 && seconds < 5.0;
}

// 2. Rank and verdict equivalence on the same battery; the absolute case
//    must degenerate exactly.
bool criterion_rank_equivalence(std::string& log) {
    bool ok = true;
    for (const Framework& fw : random_battery(101, 200)) {
        const int n = fw.geometry.dimension();
        const RigidityMatrix flat = rigidity_matrix_euclidean(fw);
        const int rank_flat = numeric_rank(flat.values);
        const VerdictRecord flat_verdict = rigidity_verdict(fw);
        for (const int curvature : {+1, -1}) {
            const RigidityMatrix curved = rigidity_matrix_projective(fw, curvature);
            ok &= expect(numeric_rank(curved.values) == rank_flat,
                         "rank mismatch at curvature " + std::to_string(curvature), log);
            Framework tagged = fw;
            tagged.geometry = curvature > 0 ? GeometrySpec::proj_sphere(n)
                                            : GeometrySpec::proj_hyperbolic(n);
            ok &= expect(rigidity_verdict(tagged).verdict == flat_verdict.verdict,
                         "verdict mismatch at curvature " + std::to_string(curvature),
                         log);
        }
    }

    Framework degenerate = random_battery(102, 1).front();
    degenerate.points[0] = degenerate.points[0] / degenerate.points[0].norm();
    const TransferMatrix transfer = transfer_matrix(degenerate, -1);
    ok &= expect(std::abs(transfer.block_determinants[0]) <= 1e-12,
                 "det(T) did not vanish on the absolute", log);
    bool raised = false;
    try {
        rigidity_matrix_projective(degenerate, -1);
    } catch (const AbsoluteError&) {
        raised = true;
    }
    ok &= expect(raised, "absolute error not raised", log);
    if (ok) log = "200 frameworks, both curvatures, degenerate case raises";
    return ok;
}

// 3. Motion transfer: spherical kernel vectors map to flat motions.
bool criterion_motion_transfer(std::string& log) {
    std::mt19937 rng(303);
    std::uniform_int_distribution<int> pick_v(3, 10);
    bool ok = true;
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const int n = 2 + i % 2;
        const Framework sphere =
            testgen::sphere_framework(rng, n, pick_v(rng), 0.5, 0.25);
        const Framework flat = transfer_framework(sphere, GeometrySpec::euclidean(n));
        const RigidityMatrix flat_matrix = rigidity_matrix(flat);
        const Matrix kernel = motion_space(rigidity_matrix(sphere)).basis;
        const Matrix flat_kernel = motion_space(flat_matrix).basis;
        ok &= expect(kernel.cols() == flat_kernel.cols(), "kernel dimension mismatch",
                     log);
        for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
            const Vector mapped = stack_motion(
                transfer_motion(sphere, kernel.col(c), GeometrySpec::euclidean(n)));
            worst = std::max(
                worst, (flat_matrix.values * mapped).lpNorm<Eigen::Infinity>());
        }
    }
    ok &= expect(worst <= 1e-8, "flat residual " + std::to_string(worst), log);
    if (ok) {
        std::ostringstream detail;
        detail << "50 spherical frameworks, max flat residual " << worst;
        log = detail.str();
    }
    return ok;
}

// 4. Stress invariance: left kernels of R_X and R_E coincide.
bool criterion_stress_invariance(std::string& log) {
    std::mt19937 rng(404);
    std::vector<Framework> battery = random_battery(101, 200);
    for (int i = 0; i < 20; ++i) battery.push_back(testgen::stressed_square(rng, 0.6));
    bool ok = true;
    int stressed = 0;
    double worst = 0.0;
    for (const Framework& fw : battery) {
        const StressSpace flat = stress_space(rigidity_matrix_euclidean(fw));
        if (flat.dimension() == 0) continue;
        ++stressed;
        for (const int curvature : {+1, -1}) {
            const StressSpace curved =
                stress_space(rigidity_matrix_projective(fw, curvature));
            ok &= expect(curved.dimension() == flat.dimension(),
                         "stress dimension changed", log);
            if (curved.dimension() == flat.dimension()) {
                worst = std::max(worst,
                                 max_principal_angle(flat.basis, curved.basis));
            }
        }
    }
    ok &= expect(stressed >= 20, "battery produced too few stressed instances", log);
    ok &= expect(worst <= 1e-8, "principal angle " + std::to_string(worst), log);
    if (ok) {
        std::ostringstream detail;
        detail << stressed << " stressed instances, max principal angle " << worst;
        log = detail.str();
    }
    return ok;
}

// 5. Coning: spherical verdicts equal the coned flat verdicts.
bool criterion_coning(std::string& log) {
    std::mt19937 rng(505);
    std::uniform_int_distribution<int> pick_v(3, 9);
    std::vector<Framework> battery;
    for (int i = 0; i < 30; ++i) {
        battery.push_back(testgen::sphere_framework(rng, 2 + i % 2, pick_v(rng), 0.5, 0.2));
    }
    for (const std::string& name : polytope_names()) {
        battery.push_back(transfer_framework(
            canonical_polytope(name, GeometrySpec::euclidean(3), 0.8),
            GeometrySpec::sphere(3)));
    }
    bool ok = true;
    for (const Framework& fw : battery) {
        const Verdict upstairs = rigidity_verdict(fw).verdict;
        const Verdict downstairs = rigidity_verdict(cone_framework(fw)).verdict;
        ok &= expect(upstairs == downstairs, "cone verdict mismatch", log);
    }
    if (ok) log = std::to_string(battery.size()) + " frameworks, 100% agreement";
    return ok;
}

// 6. Convex triangulated polytopes are rigid in all three geometries with
//    identical ranks; octahedron rank is 12.
bool criterion_polytopes(std::string& log) {
    bool ok = true;
    for (const std::string& name :
         {std::string("simplex(3)"), std::string("octahedron"),
          std::string("icosahedron"), std::string("bipyramid(5)")}) {
        const VerdictRecord flat =
            rigidity_verdict(canonical_polytope(name, GeometrySpec::euclidean(3)));
        const VerdictRecord spherical =
            rigidity_verdict(canonical_polytope(name, GeometrySpec::proj_sphere(3)));
        const VerdictRecord hyperbolic = rigidity_verdict(
            canonical_polytope(name, GeometrySpec::proj_hyperbolic(3), 0.5));
        ok &= expect(flat.verdict == Verdict::Rigid, name + " not rigid flat", log);
        ok &= expect(spherical.verdict == Verdict::Rigid, name + " not rigid spherical",
                     log);
        ok &= expect(hyperbolic.verdict == Verdict::Rigid, name + " not rigid hyperbolic",
                     log);
        ok &= expect(flat.rank == spherical.rank && flat.rank == hyperbolic.rank,
                     name + " ranks differ", log);
        if (name == "octahedron") {
            ok &= expect(flat.rank == 12, "octahedron rank != 12", log);
        }
    }
    if (ok) log = "4 polytopes rigid in 3 geometries, ranks equal, octahedron rank 12";
    return ok;
}

// 7. Stiffness of polar angle systems equals the exterior point verdict;
//    the simple convex polytope instance is stiff.
bool criterion_stiffness(std::string& log) {
    bool ok = true;
    for (const std::string& name : polytope_names()) {
        // The formal flag keeps ultraparallel facet pairs (the prism's face
        // diagonals) as matrix-level constraints without a defined angle.
        const Framework exterior = canonical_polytope(
            name, GeometrySpec::signature_surface(3, 1, 1.0), 2.0);
        const StiffnessRecord rec =
            stiffness_verdict(polar_angle_system(exterior, {}, true));
        const VerdictRecord direct = rigidity_verdict(exterior);
        ok &= expect(rec.stiff == (direct.verdict == Verdict::Rigid),
                     name + " stiffness disagrees with the point verdict", log);
    }
    // The simple convex polytope instance proper: the octahedral facet
    // system (its polar is the combinatorial cube) has every pair of
    // constrained hyperplanes intersecting, no formal flag needed.
    {
        const Framework exterior = canonical_polytope(
            "octahedron", GeometrySpec::signature_surface(3, 1, 1.0), 2.0);
        const StiffnessRecord rec = stiffness_verdict(polar_angle_system(exterior));
        ok &= expect(rec.stiff, "octahedral facet system not stiff", log);
    }
    // one under-constrained control: agreement must also hold when flexible
    std::mt19937 rng(707);
    std::normal_distribution<double> gauss;
    std::vector<Vector> poles;
    while (poles.size() < 6) {
        Vector p(4);
        for (int i = 0; i < 4; ++i) p(i) = gauss(rng);
        if (signature_form(1, p, p) > 0.2) poles.push_back(p);
    }
    Graph sparse;
    sparse.vertex_count = 6;
    sparse.edges = {{0, 1}, {2, 3}, {4, 5}};
    const AngleSystem loose = make_angle_system(sparse, poles, {}, true);
    const StiffnessRecord rec = stiffness_verdict(loose);
    const VerdictRecord direct = rigidity_verdict(polar_framework(loose));
    ok &= expect(rec.stiff == (direct.verdict == Verdict::Rigid),
                 "flexible control disagrees", log);
    ok &= expect(!rec.stiff, "under-constrained system reported stiff", log);
    if (ok) log = "5 polytopes + flexible control, stiffness == point verdict";
    return ok;
}

// 8. Projective invariance of rank and verdicts.
bool criterion_projective_invariance(std::string& log) {
    std::mt19937 rng(808);
    std::normal_distribution<double> gauss(0.0, 0.12);
    const Framework octa = canonical_polytope("octahedron", GeometrySpec::euclidean(3));
    bool ok = true;
    int trials = 0;
    while (trials < 100) {
        Matrix map = Matrix::Identity(4, 4);
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) map(r, c) += gauss(rng);
        }
        Framework image;
        try {
            image = apply_projective_transform(octa, map);
        } catch (const DomainError&) {
            continue;  // map pushed a vertex to infinity; resample
        }
        ++trials;
        ok &= expect(numeric_rank(rigidity_matrix(image).values) == 12,
                     "octahedron rank changed", log);
    }

    std::vector<Framework> battery = {
        canonical_polytope("bipyramid(5)", GeometrySpec::euclidean(3)),
        canonical_polytope("triangulated-prism", GeometrySpec::euclidean(3)),
        flexible_example("square-4-cycle"),
        flexible_example("double-banana-3d"),
        flexible_example("degenerate-collinear-triangle"),
    };
    for (const Framework& fw : battery) {
        const Verdict original = rigidity_verdict(fw).verdict;
        const int m = fw.geometry.dimension() + 1;
        int done = 0;
        while (done < 100) {
            Matrix map = Matrix::Identity(m, m);
            for (int r = 0; r < m; ++r) {
                for (int c = 0; c < m; ++c) map(r, c) += gauss(rng);
            }
            Framework image;
            try {
                image = apply_projective_transform(fw, map);
            } catch (const DomainError&) {
                continue;
            }
            ++done;
            ok &= expect(rigidity_verdict(image).verdict == original,
                         "verdict changed under a projective map", log);
        }
    }
    if (ok) log = "100 maps on the octahedron + 100 per battery framework";
    return ok;
}

// 9. Restricted trivial dimensions: n(n+1)/2 for spanning configurations,
//    injective on complete-graph simplices.
bool criterion_trivial_dimensions(std::string& log) {
    std::mt19937 rng(909);
    std::uniform_int_distribution<int> extra(0, 4);
    bool ok = true;
    for (const int n : {2, 3}) {
        for (int i = 0; i < 50; ++i) {
            Framework fw;
            do {
                fw = testgen::ball_framework(rng, n, n + 1 + extra(rng), 0.3, 0.9);
            } while (!spanning_configuration(fw));
            const TrivialMotionSpace triv = trivial_motion_space(fw);
            ok &= expect(triv.restricted_dimension == n * (n + 1) / 2,
                         "restricted dimension off at n=" + std::to_string(n), log);
        }
        for (int i = 0; i < 20; ++i) {
            Framework simplex;
            simplex.geometry = GeometrySpec::euclidean(n);
            simplex.convention = Convention::Model;
            simplex.graph.vertex_count = n + 1;
            for (int a = 0; a <= n; ++a) {
                for (int b = a + 1; b <= n; ++b) simplex.graph.edges.push_back({a, b});
            }
            do {
                simplex.points.clear();
                for (int v = 0; v <= n; ++v) {
                    simplex.points.push_back(testgen::point_in_ball(rng, n, 0.9));
                }
            } while (!spanning_configuration(simplex));
            const TrivialMotionSpace triv = trivial_motion_space(simplex);
            ok &= expect(triv.restricted_dimension == triv.generator_dimension,
                         "complete-graph restriction not injective", log);
            ok &= expect(rigidity_verdict(simplex).verdict == Verdict::Rigid,
                         "complete graph on a spanning simplex not rigid", log);
        }
    }
    if (ok) log = "100 spanning configurations + 40 simplices, exact dimensions";
    return ok;
}

// 10. Negative controls keep one internal flex in every geometry.
bool criterion_negative_controls(std::string& log) {
    bool ok = true;
    for (const std::string& name :
         {std::string("square-4-cycle"), std::string("double-banana-3d")}) {
        const Framework flat = flexible_example(name);
        const int n = flat.geometry.dimension();
        std::vector<Framework> variants = {flat};
        Framework spherical_tag = flat;
        spherical_tag.geometry = GeometrySpec::proj_sphere(n);
        variants.push_back(spherical_tag);
        Framework hyperbolic_tag = flat;
        hyperbolic_tag.geometry = GeometrySpec::proj_hyperbolic(n);
        variants.push_back(hyperbolic_tag);
        variants.push_back(transfer_framework(flat, GeometrySpec::sphere(n)));
        variants.push_back(
            transfer_framework(flat, GeometrySpec::signature_surface(n, 1, -1.0)));
        for (const Framework& fw : variants) {
            const VerdictRecord rec = rigidity_verdict(fw);
            ok &= expect(rec.verdict == Verdict::Flexible, name + " not flexible", log);
            ok &= expect(rec.internal_dim == 1,
                         name + " internal flex count " +
                             std::to_string(rec.internal_dim) + " != 1",
                         log);
        }
    }
    if (ok) log = "square and double banana: internal flex 1 across 5 geometries each";
    return ok;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "factorization R_X T_K = R_E over 200 random frameworks (<= 1e-9, < 5s)",
         criterion_factorization},
        {2, "rank and verdict equivalence; exact degeneration on the absolute",
         criterion_rank_equivalence},
        {3, "spherical kernel vectors transfer to flat motions (<= 1e-8)",
         criterion_motion_transfer},
        {4, "self-stress subspaces coincide (principal angles <= 1e-8)",
         criterion_stress_invariance},
        {5, "coning preserves verdicts on spherical frameworks",
         criterion_coning},
        {6, "convex triangulated polytopes rigid in all geometries, equal ranks",
         criterion_polytopes},
        {7, "polar angle-system stiffness equals the exterior point verdict",
         criterion_stiffness},
        {8, "projective maps preserve rank and verdicts",
         criterion_projective_invariance},
        {9, "restricted trivial dimension n(n+1)/2 on spanning configurations",
         criterion_trivial_dimensions},
        {10, "negative controls keep exactly one internal flex everywhere",
         criterion_negative_controls},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL",
                    criterion.number, criterion.description.c_str(), detail.c_str());
    }
    if (failures > 0) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    } else {
        std::printf("all %zu criteria passed\n", criteria.size());
    }
    return failures == 0 ? 0 : 1;
}
