#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "spins/domain.hpp"
#include "spins/error.hpp"

using spins::Domain;
using spins::Face;
using spins::Hypercube;
using spins::InversionSphere;
using spins::ProjectedSimplex;
using spins::SphereSector;
using spins::Vec;

namespace {

Vec random_in_domain(const Domain& domain, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const int n = spins::dimension(domain);
    const double edge =
        std::holds_alternative<Hypercube>(domain)
            ? std::get<Hypercube>(domain).edge
            : 1.0;
    Vec x(n);
    for (;;) {
        for (double& c : x) c = edge * unif(gen);
        if (spins::contains(domain, x)) return x;
    }
}

}  // namespace

TEST_CASE("membership checks") {
    CHECK(spins::contains(ProjectedSimplex{2}, {0.3, 0.3}));
    CHECK_FALSE(spins::contains(SphereSector{3}, {0.8, 0.8, 0.0}));
    CHECK(spins::contains(Hypercube{10, 3.0},
                          Vec(10, 1.0)));
    CHECK_FALSE(spins::contains(ProjectedSimplex{2}, {0.7, 0.4}));
    CHECK_FALSE(spins::contains(Hypercube{2, 3.0}, {3.1, 1.0}));
}

TEST_CASE("nearest-face projection") {
    SUBCASE("sum plane") {
        auto [alpha, face] =
            spins::project_to_face(ProjectedSimplex{2}, {0.45, 0.45});
        CHECK(face.kind == Face::Kind::SumPlane);
        CHECK(alpha[0] == doctest::Approx(0.5));
        CHECK(alpha[1] == doctest::Approx(0.5));
    }
    SUBCASE("coordinate tie resolves to the later axis") {
        auto [alpha, face] =
            spins::project_to_face(ProjectedSimplex{2}, {0.2, 0.2});
        CHECK(face.kind == Face::Kind::CoordinatePlane);
        CHECK(face.axis == 1);
        CHECK(alpha[0] == doctest::Approx(0.2));
        CHECK(alpha[1] == doctest::Approx(0.0));
    }
    SUBCASE("radial projection in the sector") {
        auto [alpha, face] =
            spins::project_to_face(SphereSector{2}, {0.6, 0.6});
        CHECK(face.kind == Face::Kind::SphereSurface);
        const double half_sqrt2 = std::sqrt(2.0) / 2.0;
        CHECK(alpha[0] == doctest::Approx(half_sqrt2));
        CHECK(alpha[1] == doctest::Approx(half_sqrt2));
    }
    SUBCASE("hypercube upper face") {
        auto [alpha, face] =
            spins::project_to_face(Hypercube{2, 3.0}, {1.0, 2.9});
        CHECK(face.kind == Face::Kind::CoordinatePlane);
        CHECK(face.axis == 1);
        CHECK(face.offset == doctest::Approx(3.0));
        CHECK(alpha[1] == doctest::Approx(3.0));
    }
    SUBCASE("boundary points are rejected") {
        CHECK_THROWS_AS(
            spins::project_to_face(ProjectedSimplex{2}, {0.0, 0.4}),
            spins::BoundaryPointError);
        CHECK_THROWS_AS(
            spins::project_to_face(ProjectedSimplex{2}, {0.5, 0.5}),
            spins::BoundaryPointError);
    }
    SUBCASE("projection distance is minimal and lands on the boundary") {
        std::mt19937_64 gen(5);
        for (const Domain& domain :
             {Domain{ProjectedSimplex{3}}, Domain{SphereSector{3}},
              Domain{Hypercube{3, 2.0}}}) {
            for (int rep = 0; rep < 200; ++rep) {
                const Vec x = random_in_domain(domain, gen);
                if (spins::boundary_distance(domain, x) < 1e-6) continue;
                auto [alpha, face] = spins::project_to_face(domain, x);
                CHECK(spins::distance(x, alpha) ==
                      doctest::Approx(spins::boundary_distance(domain, x))
                          .epsilon(1e-12));
                CHECK(spins::boundary_distance(domain, alpha) < 1e-10);
            }
        }
    }
}

TEST_CASE("enveloping radii dominate sampled diameters") {
    CHECK(spins::enveloping_radius(ProjectedSimplex{2}) ==
          doctest::Approx(std::sqrt(2.0)));
    CHECK(spins::enveloping_radius(Hypercube{10, 3.0}) ==
          doctest::Approx(3.0 * std::sqrt(10.0)));
    CHECK(spins::enveloping_radius(SphereSector{3}) ==
          doctest::Approx(std::sqrt(2.0)));

    std::mt19937_64 gen(29);
    for (const Domain& domain :
         {Domain{ProjectedSimplex{3}}, Domain{SphereSector{3}},
          Domain{Hypercube{4, 2.5}}}) {
        const double radius = spins::enveloping_radius(domain);
        double sup = 0.0;
        for (int rep = 0; rep < 100000; ++rep) {
            sup = std::max(sup, spins::distance(random_in_domain(domain, gen),
                                                random_in_domain(domain, gen)));
        }
        CHECK(sup <= radius + 1e-12);
    }
}

TEST_CASE("eta on the unit interval") {
    // 1-d analogue: domain [0,1] with faces {x=0} and {sum x = 1}.
    const Domain interval = ProjectedSimplex{1};
    const InversionSphere sphere{{0.0}, 1.0};
    SUBCASE("lower-branch point") {
        const Vec delta = spins::invert(sphere, {0.25});
        CHECK(delta[0] == doctest::Approx(4.0));
        CHECK(spins::eta(interval, sphere, delta) == doctest::Approx(3.0));
    }
    SUBCASE("branch boundary") {
        const Vec delta = spins::invert(sphere, {0.5});
        CHECK(spins::eta(interval, sphere, delta) == doctest::Approx(1.0));
    }
}

TEST_CASE("eta matches a dense boundary-sampling oracle") {
    const Domain domain = ProjectedSimplex{2};
    const Vec x{0.3, 0.3};
    auto [alpha, face] = spins::project_to_face(domain, x);
    const InversionSphere sphere{alpha, spins::enveloping_radius(domain)};
    const Vec delta = spins::invert(sphere, x);
    const double eta = spins::eta(domain, sphere, delta);

    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double best = std::numeric_limits<double>::infinity();
    for (int rep = 0; rep < 100000; ++rep) {
        // One random point per boundary face of the projected simplex.
        const double t = unif(gen);
        const Vec candidates[3] = {
            {0.0, t}, {t, 0.0}, {t, 1.0 - t}};
        for (const Vec& b : candidates) {
            if (spins::distance(b, sphere.center) < 1e-9) continue;
            best = std::min(best,
                            spins::distance(delta, spins::invert(sphere, b)));
        }
    }
    CHECK(best == doctest::Approx(eta).epsilon(1e-3));
}

TEST_CASE("eta grows without bound toward the projected face") {
    const Domain domain = ProjectedSimplex{2};
    double previous = 0.0;
    for (int m = 3; m <= 20; ++m) {
        const double off = std::pow(2.0, -m);
        const Vec x{0.4, off};
        auto [alpha, face] = spins::project_to_face(domain, x);
        const InversionSphere sphere{alpha, spins::enveloping_radius(domain)};
        const double eta =
            spins::eta(domain, sphere, spins::invert(sphere, x));
        CHECK(eta > previous);
        previous = eta;
    }
    CHECK(previous > 1e5);
}

TEST_CASE("the eta ball back-maps into the domain") {
    std::mt19937_64 gen(37);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (const Domain& domain :
         {Domain{ProjectedSimplex{2}}, Domain{SphereSector{2}},
          Domain{Hypercube{2, 3.0}}}) {
        const Vec x = random_in_domain(domain, gen);
        if (spins::boundary_distance(domain, x) < 1e-3) continue;
        auto [alpha, face] = spins::project_to_face(domain, x);
        const InversionSphere sphere{alpha, spins::enveloping_radius(domain)};
        const Vec delta = spins::invert(sphere, x);
        const double eta = spins::eta(domain, sphere, delta);
        for (int rep = 0; rep < 10000; ++rep) {
            // Uniform draw in the eta-ball around delta.
            Vec dir{normal(gen), normal(gen)};
            const double len = spins::norm(dir);
            if (len < 1e-12) continue;
            const double radius = eta * std::sqrt(unif(gen));
            Vec p{delta[0] + radius * dir[0] / len,
                  delta[1] + radius * dir[1] / len};
            const Vec back = spins::invert(sphere, p);
            CHECK(spins::contains(domain, back));
        }
    }
}

TEST_CASE("interior grid images are distinct and regionally separated") {
    // Composite map x -> T_{P(x), sqrt(2)}(x) on the projected 2-simplex.
    const Domain domain = ProjectedSimplex{2};
    const double r = spins::enveloping_radius(domain);
    const int grid = 60;
    std::set<std::pair<double, double>> images;
    int count = 0;
    for (int i = 1; i < grid; ++i) {
        for (int j = 1; j < grid; ++j) {
            const Vec x{i / static_cast<double>(grid),
                        j / static_cast<double>(grid)};
            if (x[0] + x[1] >= 1.0 - 1e-9) continue;
            auto [alpha, face] = spins::project_to_face(domain, x);
            const Vec image = spins::invert({alpha, r}, x);
            images.insert({image[0], image[1]});
            ++count;
            if (face.kind == Face::Kind::CoordinatePlane && face.axis == 0) {
                CHECK(image[0] >= 2.0 - 1e-9);
                CHECK(image[1] >= -1e-9);
                CHECK(image[1] <= 1.0 + 1e-9);
            } else if (face.kind == Face::Kind::CoordinatePlane) {
                CHECK(image[1] >= 2.0 - 1e-9);
                CHECK(image[0] >= -1e-9);
                CHECK(image[0] <= 1.0 + 1e-9);
            } else {
                CHECK(image[0] <= 1e-9);
                CHECK(image[1] <= 1e-9);
            }
        }
    }
    CHECK(static_cast<int>(images.size()) == count);
}

TEST_CASE("drop and restore components") {
    CHECK(spins::drop_component({0.2, 0.3, 0.5}, 2) == Vec{0.2, 0.3});
    CHECK(spins::drop_component({1.0, 0.0, 0.0}, 0) == Vec{0.0, 0.0});
    CHECK(spins::restore_component({0.2, 0.3}, 2) == Vec{0.2, 0.3, 0.5});
    CHECK(spins::restore_component({0.0, 0.0}, 0) == Vec{1.0, 0.0, 0.0});
    CHECK_THROWS_AS(spins::restore_component({0.6, 0.5}, 0),
                    spins::InvalidProjectionError);

    std::mt19937_64 gen(41);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int rep = 0; rep < 100; ++rep) {
        Vec theta{unif(gen), unif(gen), unif(gen), unif(gen)};
        const double total = spins::sum(theta);
        for (double& v : theta) v /= total;
        const int i = rep % 4;
        const Vec back =
            spins::restore_component(spins::drop_component(theta, i), i);
        for (int j = 0; j < 4; ++j) {
            CHECK(back[j] == doctest::Approx(theta[j]).epsilon(1e-12));
        }
    }
}

TEST_CASE("rescaling preserves complement ratios") {
    const Vec out = spins::rescale_complement({0.2, 0.3, 0.5}, 0, 0.4);
    CHECK(out[0] == doctest::Approx(0.4));
    CHECK(out[1] == doctest::Approx(0.225));
    CHECK(out[2] == doctest::Approx(0.375));
    CHECK(out[1] / out[2] == doctest::Approx(0.3 / 0.5).epsilon(1e-14));
    CHECK(spins::sum(out) == doctest::Approx(1.0).epsilon(1e-12));

    SUBCASE("identity when the value is unchanged") {
        const Vec same = spins::rescale_complement({0.2, 0.3, 0.5}, 1, 0.3);
        CHECK(same[0] == doctest::Approx(0.2));
        CHECK(same[1] == doctest::Approx(0.3));
        CHECK(same[2] == doctest::Approx(0.5));
    }
    SUBCASE("degenerate full-mass component") {
        CHECK_THROWS_AS(spins::rescale_complement({1.0, 0.0}, 0, 0.4),
                        spins::DegenerateStateError);
    }
    SUBCASE("order statistics of the complement are unchanged") {
        std::mt19937_64 gen(43);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        for (int rep = 0; rep < 100; ++rep) {
            Vec theta{unif(gen), unif(gen), unif(gen), unif(gen)};
            const double total = spins::sum(theta);
            for (double& v : theta) v /= total;
            const Vec out2 = spins::rescale_complement(theta, 1, unif(gen));
            CHECK(spins::sum(out2) == doctest::Approx(1.0).epsilon(1e-12));
            CHECK((theta[0] < theta[2]) == (out2[0] < out2[2]));
            CHECK((theta[0] < theta[3]) == (out2[0] < out2[3]));
            CHECK((theta[2] < theta[3]) == (out2[2] < out2[3]));
        }
    }
}
