#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "spins/error.hpp"
#include "spins/geometry.hpp"

using spins::FaceImage;
using spins::FiniteSphere;
using spins::FlatPlane;
using spins::InversionSphere;
using spins::Vec;

namespace {

// Determinant by Gaussian elimination with partial pivoting; test-side
// oracle, independent of the analytic Jacobian formula.
double det(std::vector<Vec> m) {
    const std::size_t n = m.size();
    double d = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
        }
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            d = -d;
        }
        if (m[c][c] == 0.0) return 0.0;
        d *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = m[r][c] / m[c][c];
            for (std::size_t cc = c; cc < n; ++cc) m[r][cc] -= f * m[c][cc];
        }
    }
    return d;
}

double fd_jacobian_abs_det(const InversionSphere& sphere, const Vec& x,
                           double step) {
    const std::size_t n = x.size();
    std::vector<Vec> jac(n, Vec(n));
    for (std::size_t j = 0; j < n; ++j) {
        Vec hi = x, lo = x;
        hi[j] += step;
        lo[j] -= step;
        const Vec fhi = spins::invert(sphere, hi);
        const Vec flo = spins::invert(sphere, lo);
        for (std::size_t i = 0; i < n; ++i) {
            jac[i][j] = (fhi[i] - flo[i]) / (2.0 * step);
        }
    }
    return std::abs(det(std::move(jac)));
}

Vec random_unit(std::mt19937_64& gen, std::size_t n) {
    std::normal_distribution<double> normal;
    Vec v(n);
    double len = 0.0;
    do {
        for (double& c : v) c = normal(gen);
        len = spins::norm(v);
    } while (len < 1e-3);
    for (double& c : v) c /= len;
    return v;
}

}  // namespace

TEST_CASE("points on the inversion sphere are fixed") {
    const InversionSphere sphere{{0.0, 0.0}, 1.0};
    const Vec image = spins::invert(sphere, {1.0, 0.0});
    CHECK(image[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(image[1] == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("one-step inversion arithmetic") {
    const InversionSphere sphere{{0.0, 0.0}, std::sqrt(2.0)};
    const Vec image = spins::invert(sphere, {1.0, 0.0});
    CHECK(image[0] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(image[1] == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("inversion is an involution") {
    std::mt19937_64 gen(1234);
    std::uniform_real_distribution<double> unif(-2.0, 2.0);
    std::uniform_real_distribution<double> radius(0.3, 3.0);
    for (int n : {1, 2, 3, 5}) {
        for (int rep = 0; rep < 200; ++rep) {
            InversionSphere sphere;
            sphere.center.resize(n);
            for (double& c : sphere.center) c = unif(gen);
            sphere.radius = radius(gen);
            Vec x(n);
            do {
                for (double& c : x) c = unif(gen);
            } while (spins::distance(x, sphere.center) < 1e-2);
            const Vec back = spins::invert(sphere, spins::invert(sphere, x));
            for (int j = 0; j < n; ++j) {
                CHECK(back[j] ==
                      doctest::Approx(x[j]).epsilon(1e-10).scale(1.0));
            }
        }
    }
}

TEST_CASE("inversion at the center is rejected") {
    const InversionSphere sphere{{0.5, 0.5}, 2.0};
    CHECK_THROWS_AS(spins::invert(sphere, {0.5, 0.5}),
                    spins::CenterCoincidenceError);
    CHECK_THROWS_AS(spins::invert(sphere, {0.5 + 1e-14, 0.5}),
                    spins::CenterCoincidenceError);
    CHECK_THROWS_AS(spins::inversion_abs_jacobian(sphere, {0.5, 0.5}),
                    spins::CenterCoincidenceError);
}

TEST_CASE("jacobian magnitude on and off the sphere") {
    const InversionSphere sphere{{0.0, 0.0}, 1.0};
    CHECK(spins::inversion_abs_jacobian(sphere, {1.0, 0.0}) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(spins::inversion_abs_jacobian(sphere, {0.5, 0.0}) ==
          doctest::Approx(16.0).epsilon(1e-14));
}

TEST_CASE("jacobian matches the finite-difference determinant") {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> unif(-1.5, 1.5);
    std::uniform_real_distribution<double> radius(0.5, 2.0);
    for (int n : {1, 2, 3, 4}) {
        for (int rep = 0; rep < 25; ++rep) {
            InversionSphere sphere;
            sphere.center.resize(n);
            for (double& c : sphere.center) c = unif(gen);
            sphere.radius = radius(gen);
            Vec x(n);
            do {
                for (double& c : x) c = unif(gen);
            } while (spins::distance(x, sphere.center) < 0.4);
            const double analytic = spins::inversion_abs_jacobian(sphere, x);
            const double numeric = fd_jacobian_abs_det(sphere, x, 1e-6);
            CHECK(numeric == doctest::Approx(analytic).epsilon(1e-5));
        }
    }
}

TEST_CASE("jacobians at a point and its image cancel") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int rep = 0; rep < 50; ++rep) {
        InversionSphere sphere{{unif(gen), unif(gen), unif(gen)}, 1.3};
        Vec x{unif(gen) + 2.0, unif(gen), unif(gen)};
        const double ja = spins::inversion_abs_jacobian(sphere, x);
        const double jb =
            spins::inversion_abs_jacobian(sphere, spins::invert(sphere, x));
        CHECK(ja * jb == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("coordinate plane images") {
    const double r2 = std::sqrt(2.0);
    SUBCASE("finite sphere through the origin") {
        const auto image =
            spins::invert_coordinate_plane({{1.0, 0.0}, r2}, 0, 0.0);
        const auto& s = std::get<FiniteSphere>(image);
        CHECK(s.center[0] == doctest::Approx(0.0));
        CHECK(s.center[1] == doctest::Approx(0.0));
        CHECK(s.radius == doctest::Approx(1.0));
    }
    SUBCASE("generic center") {
        const auto image =
            spins::invert_coordinate_plane({{0.5, 0.3}, r2}, 0, 0.0);
        const auto& s = std::get<FiniteSphere>(image);
        CHECK(s.center[0] == doctest::Approx(-1.5));
        CHECK(s.center[1] == doctest::Approx(0.3));
        CHECK(s.radius == doctest::Approx(2.0));
    }
    SUBCASE("center on the plane fixes it") {
        const auto image =
            spins::invert_coordinate_plane({{0.0, 0.3}, r2}, 0, 0.0);
        const auto& p = std::get<FlatPlane>(image);
        CHECK(p.unit_normal[0] == doctest::Approx(1.0));
        CHECK(p.unit_normal[1] == doctest::Approx(0.0));
        CHECK(p.offset == doctest::Approx(0.0));
    }
}

TEST_CASE("sum plane image") {
    const double r2 = std::sqrt(2.0);
    SUBCASE("worked 2-d case") {
        const auto image = spins::invert_sum_plane({{0.5, 0.0}, r2});
        const auto& s = std::get<FiniteSphere>(image);
        CHECK(s.center[0] == doctest::Approx(2.5));
        CHECK(s.center[1] == doctest::Approx(2.0));
        CHECK(s.radius == doctest::Approx(2.0 * r2));
    }
    SUBCASE("center summing to one fixes the plane") {
        const auto image = spins::invert_sum_plane({{0.25, 0.75}, r2});
        const auto& p = std::get<FlatPlane>(image);
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        CHECK(p.unit_normal[0] == doctest::Approx(inv_sqrt2));
        CHECK(p.unit_normal[1] == doctest::Approx(inv_sqrt2));
        CHECK(p.offset == doctest::Approx(inv_sqrt2));
    }
    SUBCASE("sampled plane points land on the image sphere") {
        std::mt19937_64 gen(3);
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        InversionSphere sphere{{0.2, 0.5, -0.1}, r2};
        const auto image = spins::invert_sum_plane(sphere);
        const auto& s = std::get<FiniteSphere>(image);
        for (int rep = 0; rep < 1000; ++rep) {
            // Random point with coordinates summing to one.
            Vec x{unif(gen), unif(gen), 0.0};
            x[2] = 1.0 - x[0] - x[1];
            const Vec image_point = spins::invert(sphere, x);
            CHECK(spins::distance(image_point, s.center) ==
                  doctest::Approx(s.radius).epsilon(1e-8));
        }
    }
}

TEST_CASE("unit ball image") {
    const double r2 = std::sqrt(2.0);
    SUBCASE("worked 2-d case") {
        const auto image = spins::invert_unit_ball({{0.5, 0.5}, r2});
        const auto& s = std::get<FiniteSphere>(image);
        CHECK(s.center[0] == doctest::Approx(2.5));
        CHECK(s.center[1] == doctest::Approx(2.5));
        CHECK(s.radius == doctest::Approx(4.0));
    }
    SUBCASE("surface point maps onto the image sphere") {
        const InversionSphere sphere{{0.5, 0.5}, r2};
        const Vec image_point = spins::invert(sphere, {1.0, 0.0});
        CHECK(image_point[0] == doctest::Approx(2.5));
        CHECK(image_point[1] == doctest::Approx(-1.5));
        const auto image = spins::invert_unit_ball(sphere);
        const auto& s = std::get<FiniteSphere>(image);
        CHECK(spins::distance(image_point, s.center) ==
              doctest::Approx(4.0).epsilon(1e-12));
    }
    SUBCASE("center on the sphere degenerates to a plane") {
        const InversionSphere sphere{{1.0, 0.0}, r2};
        const auto image = spins::invert_unit_ball(sphere);
        REQUIRE(std::holds_alternative<FlatPlane>(image));
        const auto& p = std::get<FlatPlane>(image);
        // Plane-fit oracle: invert surface samples away from the center and
        // fit a line by principal components; the returned plane must agree.
        std::mt19937_64 gen(11);
        std::uniform_real_distribution<double> angle(0.7, 5.58);
        std::vector<Vec> pts;
        for (int rep = 0; rep < 64; ++rep) {
            const double a = angle(gen);
            pts.push_back(
                spins::invert(sphere, {std::cos(a), std::sin(a)}));
        }
        double mx = 0.0, my = 0.0;
        for (const Vec& q : pts) {
            mx += q[0];
            my += q[1];
        }
        mx /= pts.size();
        my /= pts.size();
        double sxx = 0.0, sxy = 0.0, syy = 0.0;
        for (const Vec& q : pts) {
            sxx += (q[0] - mx) * (q[0] - mx);
            sxy += (q[0] - mx) * (q[1] - my);
            syy += (q[1] - my) * (q[1] - my);
        }
        // Normal = eigenvector of the smaller eigenvalue of the 2x2 scatter.
        const double tr = sxx + syy;
        const double disc = std::sqrt((sxx - syy) * (sxx - syy) + 4 * sxy * sxy);
        const double lam_min = 0.5 * (tr - disc);
        Vec normal{sxy, lam_min - sxx};
        if (spins::norm(normal) < 1e-12) normal = {1.0, 0.0};
        const double len = spins::norm(normal);
        normal[0] /= len;
        normal[1] /= len;
        if (normal[0] < 0) {
            normal[0] = -normal[0];
            normal[1] = -normal[1];
        }
        const double fitted_offset = normal[0] * mx + normal[1] * my;
        for (const Vec& q : pts) {
            CHECK(std::abs(spins::dot(q, normal) - fitted_offset) < 1e-8);
            CHECK(spins::distance_to_face_image(q, image) < 1e-8);
        }
        CHECK(normal[0] == doctest::Approx(p.unit_normal[0]).epsilon(1e-8));
        CHECK(normal[1] ==
              doctest::Approx(p.unit_normal[1]).epsilon(1e-8).scale(1.0));
        CHECK(fitted_offset == doctest::Approx(p.offset).epsilon(1e-8).scale(1.0));
    }
    SUBCASE("sampled sphere points land on the image sphere in 3-d") {
        std::mt19937_64 gen(17);
        const InversionSphere sphere{{0.3, -0.4, 0.6}, 1.7};
        const auto image = spins::invert_unit_ball(sphere);
        const auto& s = std::get<FiniteSphere>(image);
        for (int rep = 0; rep < 1000; ++rep) {
            const Vec x = random_unit(gen, 3);
            if (spins::distance(x, sphere.center) < 0.05) continue;
            const Vec image_point = spins::invert(sphere, x);
            CHECK(spins::distance(image_point, s.center) ==
                  doctest::Approx(s.radius).epsilon(1e-8));
        }
    }
}

TEST_CASE("fixed faces map onto themselves") {
    // Center on the plane x_0 = 0: images of plane points stay on the plane.
    const InversionSphere sphere{{0.0, 0.4, 0.1}, std::sqrt(2.0)};
    std::mt19937_64 gen(23);
    std::uniform_real_distribution<double> unif(-2.0, 2.0);
    for (int rep = 0; rep < 200; ++rep) {
        Vec x{0.0, unif(gen), unif(gen)};
        if (spins::distance(x, sphere.center) < 1e-2) continue;
        const Vec image = spins::invert(sphere, x);
        CHECK(std::abs(image[0]) < 1e-12);
    }
}

TEST_CASE("distance to face images") {
    const FaceImage sphere_image = FiniteSphere{{-1.5, 0.3}, 2.0};
    CHECK(spins::distance_to_face_image({6.0, 0.3}, sphere_image) ==
          doctest::Approx(5.5).epsilon(1e-14));
    CHECK(spins::distance_to_face_image({0.5, 0.3}, sphere_image) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    const FaceImage plane_image = FlatPlane{{1.0, 0.0}, 0.0};
    CHECK(spins::distance_to_face_image({3.0, 7.0}, plane_image) ==
          doctest::Approx(3.0).epsilon(1e-14));
}
