#include <doctest.h>

#include <cmath>
#include <random>

#include "rigiscope/geometry.hpp"

using namespace rigiscope;

namespace {

Vector vec(std::initializer_list<double> coords) {
    Vector v(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index i = 0;
    for (const double c : coords) v(i++) = c;
    return v;
}

Vector random_vec(std::mt19937& rng, int n, double scale = 1.0) {
    std::normal_distribution<double> gauss(0.0, scale);
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = gauss(rng);
    return v;
}

}  // namespace

TEST_CASE("bilinear form evaluates sum a_i x_i y_i") {
    const GeometrySpec form = GeometrySpec::signature_surface(2, 1, -1.0);
    CHECK(bilinear_form(form, vec({1, 0, 0}), vec({0, 0, 1})) == 0.0);
    CHECK(bilinear_form(form, vec({0, 0, 1}), vec({0, 0, 1})) == -1.0);

    // Hand dot-product oracle: 1*3 + 2*2 + 3*1 = 10.
    const GeometrySpec flat_form = GeometrySpec::ambient_form(vec({1, 1, 1}), 1.0);
    CHECK(bilinear_form(flat_form, vec({1, 2, 3}), vec({3, 2, 1})) == 10.0);

    CHECK_THROWS_AS(bilinear_form(form, vec({1, 0}), vec({0, 0, 1})), DimensionError);
}

TEST_CASE("signature form agrees with the involution identity") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 3;
        const int k = trial % (n + 2);
        const Vector x = random_vec(rng, n + 1);
        const Vector y = random_vec(rng, n + 1);
        CHECK(signature_form(k, x, y) ==
              doctest::Approx(x.dot(involution_J(k, y))).epsilon(1e-12));
    }
}

TEST_CASE("involution negates trailing coordinates and preserves dot products") {
    CHECK(involution_J(1, vec({1, 2, 3})) == vec({1, 2, -3}));
    CHECK(involution_J(0, vec({1, 2, 3})) == vec({1, 2, 3}));
    CHECK(involution_J(3, vec({1, 2, 3})) == vec({-1, -2, -3}));
    CHECK_THROWS_AS(involution_J(4, vec({1, 2, 3})), DimensionError);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const Vector x = random_vec(rng, 4);
        const Vector y = random_vec(rng, 4);
        const int k = trial % 5;
        CHECK(involution_J(k, involution_J(k, x)).isApprox(x, 1e-15));
        CHECK(involution_J(k, x).dot(involution_J(k, y)) ==
              doctest::Approx(x.dot(y)).epsilon(1e-12));
    }
}

TEST_CASE("projective spherical distance matches the lifted arc length") {
    const GeometrySpec ps = GeometrySpec::proj_sphere(2);
    CHECK(distance(ps, vec({0, 0}), vec({0, 0})) == doctest::Approx(0.0));

    // Oracle: lift x -> (x,1)/|(x,1)| and apply arccos of the dot product.
    const Vector x = vec({0, 0});
    const Vector y = vec({1, 0});
    const Vector lx = vec({0, 0, 1});
    const Vector ly = vec({1, 0, 1}) / std::sqrt(2.0);
    CHECK(distance(ps, x, y) ==
          doctest::Approx(std::acos(lx.dot(ly))).epsilon(1e-14));
    CHECK(distance(ps, x, y) == doctest::Approx(std::acos(-1.0) / 4).epsilon(1e-14));

    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const Vector a = random_vec(rng, 3, 0.7);
        const Vector b = random_vec(rng, 3, 0.7);
        const GeometrySpec ps3 = GeometrySpec::proj_sphere(3);
        Vector la(4), lb(4);
        la << a, 1.0;
        lb << b, 1.0;
        la.normalize();
        lb.normalize();
        CHECK(distance(ps3, a, b) ==
              doctest::Approx(std::acos(la.dot(lb))).epsilon(1e-11));
        CHECK(distance(ps3, a, b) == doctest::Approx(distance(ps3, b, a)));
    }
}

TEST_CASE("projective hyperbolic distance matches the hyperboloid lift") {
    const GeometrySpec ph = GeometrySpec::proj_hyperbolic(2);
    const Vector x = vec({0, 0});
    const Vector y = vec({std::tanh(1.0), 0});
    CHECK(distance(ph, x, y) == doctest::Approx(1.0).epsilon(1e-12));

    // Oracle: lift to <x,x>_1 = -1 and apply arccosh(-<x,y>_1).
    std::mt19937 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        Vector a = random_vec(rng, 2, 0.3);
        Vector b = random_vec(rng, 2, 0.3);
        if (a.norm() >= 0.95) a *= 0.5;
        if (b.norm() >= 0.95) b *= 0.5;
        Vector la(3), lb(3);
        la << a, 1.0;
        lb << b, 1.0;
        la /= std::sqrt(1.0 - a.squaredNorm());
        lb /= std::sqrt(1.0 - b.squaredNorm());
        const double pairing = la.head(2).dot(lb.head(2)) - la(2) * lb(2);
        CHECK(distance(ph, a, b) ==
              doctest::Approx(std::acosh(std::max(1.0, -pairing))).epsilon(1e-10));
    }

    CHECK_THROWS_AS(distance(ph, vec({1.0, 0}), vec({0, 0})), DomainError);
    CHECK_THROWS_AS(distance(ph, vec({1.5, 0}), vec({0, 0})), DomainError);
}

TEST_CASE("exterior-hyperbolic distance reports the normalized invariant") {
    const GeometrySpec pd = GeometrySpec::proj_exterior_hyperbolic(2);
    const Vector x = vec({2.0, 0.0});
    const Vector y = vec({0.0, 3.0});
    const double value = distance(pd, x, y);
    CHECK(value == doctest::Approx(-1.0 / (std::sqrt(3.0) * std::sqrt(8.0))));
    CHECK(distance(pd, x, x) == doctest::Approx(1.0));
    CHECK_THROWS_AS(distance(pd, vec({0.5, 0.0}), y), DomainError);
}

TEST_CASE("spherical distance clamps arguments only within tolerance") {
    const GeometrySpec sphere = GeometrySpec::sphere(2);
    const Vector p = vec({0, 0, 1});
    CHECK(distance(sphere, p, p) == doctest::Approx(0.0));
    const Vector q = vec({0, 0, 1 + 1e-11});
    CHECK(distance(sphere, p, q) == doctest::Approx(0.0));
    const Vector bad = vec({0, 0, 1.1});
    CHECK_THROWS_AS(distance(sphere, p, bad), DomainError);
}

TEST_CASE("gnomic projection fixes the pole and rejects the equator") {
    CHECK(gnomic_project(vec({0, 0, 1})) == vec({0, 0, 1}));
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(gnomic_project(vec({s, 0, s})).isApprox(vec({1, 0, 1}), 1e-15));
    CHECK_THROWS_AS(gnomic_project(vec({0, 1, 0})), EquatorError);
    CHECK_THROWS_AS(gnomic_project(vec({0, 1, -0.5})), EquatorError);
}

TEST_CASE("gnomic projection is constant along rays") {
    std::mt19937 rng(31);
    const GeometrySpec sphere = GeometrySpec::sphere(2);
    for (int trial = 0; trial < 50; ++trial) {
        Vector x = random_vec(rng, 3);
        x(2) = std::abs(x(2)) + 0.05;
        const Vector direct = gnomic_project(x);
        const Vector via_sphere = gnomic_project(normalize_to_surface(sphere, x));
        CHECK((direct - via_sphere).lpNorm<Eigen::Infinity>() <= 1e-12);
        CHECK(direct(2) == 1.0);
    }
}

TEST_CASE("normalize_to_surface scales onto spheres and form surfaces") {
    const GeometrySpec sphere = GeometrySpec::sphere(2);
    CHECK(normalize_to_surface(sphere, vec({0, 0, 2})) == vec({0, 0, 1}));

    const GeometrySpec hyperboloid = GeometrySpec::signature_surface(2, 1, -1.0);
    CHECK(normalize_to_surface(hyperboloid, vec({0, 0, 2})) == vec({0, 0, 1}));
    CHECK_THROWS_AS(normalize_to_surface(hyperboloid, vec({1, 0, 1})), AbsoluteError);
    CHECK_THROWS_AS(normalize_to_surface(hyperboloid, vec({2, 0, 1})), DomainError);

    const GeometrySpec exterior = GeometrySpec::signature_surface(2, 1, 1.0);
    const Vector pole = normalize_to_surface(exterior, vec({4, 0, 2}));
    CHECK(signature_form(1, pole, pole) == doctest::Approx(1.0));
}

TEST_CASE("sphere-to-flat motion map strips the vertical component") {
    CHECK(motion_sphere_to_euclid(vec({0, 0, 1}), vec({1, 0, 0})) == vec({1, 0, 0}));
    CHECK(motion_sphere_to_euclid(vec({0, 0, 1}), vec({0, 0, 5})) == vec({0, 0, 0}));

    const double s = 1.0 / std::sqrt(2.0);
    const Vector p = vec({s, 0, s});
    const Vector u = vec({s, 0, -s});  // tangent: p.u = 0
    const Vector image = motion_sphere_to_euclid(p, u);
    CHECK(image.isApprox(vec({1, 0, 0}), 1e-14));
    CHECK(image(2) == 0.0);

    CHECK_THROWS_AS(motion_sphere_to_euclid(vec({1, 0, 0}), vec({0, 1, 0})),
                    EquatorError);
}

TEST_CASE("flat-to-sphere motion map lands in the tangent space") {
    CHECK(motion_euclid_to_sphere(vec({0, 0, 1}), vec({1, 0, 0})) == vec({1, 0, 0}));
    CHECK(motion_euclid_to_sphere(vec({1, 0, 1}), vec({0, 1, 0}))
              .isApprox(vec({0, 1, 0}) / std::sqrt(2.0), 1e-15));

    std::mt19937 rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        Vector q = random_vec(rng, 3);
        q(2) = 1.0;
        Vector v = random_vec(rng, 3);
        v(2) = 0.0;
        const Vector w = motion_euclid_to_sphere(q, v);
        const Vector lifted = q / q.norm();
        CHECK(std::abs(lifted.dot(w)) <= 1e-12);
        // Round trip reproduces the flat vector on tangent data.
        const Vector back = motion_sphere_to_euclid(lifted, w);
        CHECK(back.isApprox(v, 1e-12));
    }
}

TEST_CASE("surface-to-sphere motion map applies the involution and scale") {
    const Vector p = vec({0, 0, 1});
    CHECK(motion_X_to_sphere(p, vec({1, 0, 0}), 1) == vec({1, 0, 0}));
    CHECK(motion_X_to_sphere(vec({0, 0, 2}), vec({0, 1, 1}), 1)
              .isApprox(vec({0, 1, -1}) / 2.0, 1e-15));
    CHECK(motion_X_to_sphere(vec({0.6, 0, 0.8}), vec({1, 2, 3}), 0) ==
          vec({1, 2, 3}));
}

TEST_CASE("distances are symmetric and vanish on the diagonal") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        const Vector a = random_vec(rng, 2, 0.3);
        const Vector b = random_vec(rng, 2, 0.3);
        for (const GeometrySpec& spec :
             {GeometrySpec::euclidean(2), GeometrySpec::proj_sphere(2),
              GeometrySpec::proj_hyperbolic(2)}) {
            CHECK(distance(spec, a, b) == doctest::Approx(distance(spec, b, a)));
            CHECK(distance(spec, a, a) == doctest::Approx(0.0).epsilon(1e-9));
        }
        Vector la(3), lb(3);
        la << a, 1.0;
        lb << b, 1.0;
        const GeometrySpec sphere = GeometrySpec::sphere(2);
        const Vector sa = normalize_to_surface(sphere, la);
        const Vector sb = normalize_to_surface(sphere, lb);
        CHECK(distance(sphere, sa, sb) == doctest::Approx(distance(sphere, sb, sa)));
        CHECK(distance(sphere, sa, sa) == doctest::Approx(0.0).epsilon(1e-7));
    }
}

TEST_CASE("geometry specs validate their inputs") {
    CHECK_THROWS_AS(GeometrySpec::euclidean(0), DimensionError);
    CHECK_THROWS_AS(GeometrySpec::ambient_form(vec({1, 0, 1}), 1.0), DomainError);
    CHECK_THROWS_AS(GeometrySpec::ambient_form(vec({1, 1, 1}), 0.0), DomainError);
    CHECK_THROWS_AS(GeometrySpec::euclidean(2).curvature_sign(), Error);
    CHECK(GeometrySpec::proj_sphere(2).curvature_sign() == 1);
    CHECK(GeometrySpec::proj_hyperbolic(2).curvature_sign() == -1);
    CHECK(GeometrySpec::proj_exterior_hyperbolic(2).curvature_sign() == -1);
    CHECK(GeometrySpec::sphere(3).signature_k() == 0);
    CHECK(GeometrySpec::proj_hyperbolic(3).signature_k() == 1);
    CHECK(GeometrySpec::euclidean(3).signature_k() == -1);
    CHECK(model_from_name("proj_hyperbolic") == Model::ProjHyperbolic);
    CHECK_THROWS_AS(model_from_name("poincare"), UnsupportedModelError);
}
