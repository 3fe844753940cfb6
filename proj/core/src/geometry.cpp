#include "spins/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spins/error.hpp"

namespace spins {

namespace {

void check_dimensions(const InversionSphere& sphere, const Vec& x) {
    if (sphere.center.size() != x.size() || x.empty()) {
        throw std::invalid_argument("inversion: dimension mismatch");
    }
}

}  // namespace

double degeneracy_tolerance(const InversionSphere& sphere) {
    return 1e-12 * std::max(1.0, sphere.radius);
}

Vec invert(const InversionSphere& sphere, const Vec& x) {
    check_dimensions(sphere, x);
    const double d2 = squared_distance(x, sphere.center);
    const double tol = degeneracy_tolerance(sphere);
    if (d2 < tol * tol) {
        throw CenterCoincidenceError(
            "invert: point coincides with the inversion center");
    }
    const double scale = sphere.radius * sphere.radius / d2;
    Vec out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        out[j] = sphere.center[j] + scale * (x[j] - sphere.center[j]);
    }
    return out;
}

double inversion_abs_jacobian(const InversionSphere& sphere, const Vec& x) {
    check_dimensions(sphere, x);
    const double d = distance(x, sphere.center);
    if (d < degeneracy_tolerance(sphere)) {
        throw CenterCoincidenceError(
            "inversion_abs_jacobian: point coincides with the center");
    }
    const auto n = static_cast<double>(x.size());
    return std::pow(sphere.radius / d, 2.0 * n);
}

FaceImage invert_coordinate_plane(const InversionSphere& sphere, int axis,
                                  double plane_offset) {
    const int n = static_cast<int>(sphere.center.size());
    if (axis < 0 || axis >= n) {
        throw std::invalid_argument("invert_coordinate_plane: bad axis");
    }
    const double gap = sphere.center[axis] - plane_offset;
    if (std::abs(gap) <= degeneracy_tolerance(sphere)) {
        // Center on the plane: the plane is fixed.
        Vec normal(n, 0.0);
        normal[axis] = 1.0;
        return FlatPlane{std::move(normal), plane_offset};
    }
    const double r2 = sphere.radius * sphere.radius;
    Vec center = sphere.center;
    center[axis] -= r2 / (2.0 * gap);
    return FiniteSphere{std::move(center), r2 / (2.0 * std::abs(gap))};
}

FaceImage invert_sum_plane(const InversionSphere& sphere) {
    const int n = static_cast<int>(sphere.center.size());
    const double sigma = sum(sphere.center);
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    if (std::abs(sigma - 1.0) <= degeneracy_tolerance(sphere)) {
        return FlatPlane{Vec(n, inv_sqrt_n), inv_sqrt_n};
    }
    const double rho =
        sphere.radius * sphere.radius / (2.0 * (sigma - 1.0));
    Vec center(n);
    for (int j = 0; j < n; ++j) center[j] = sphere.center[j] - rho;
    return FiniteSphere{std::move(center),
                        std::sqrt(static_cast<double>(n)) * std::abs(rho)};
}

FaceImage invert_unit_ball(const InversionSphere& sphere) {
    const int n = static_cast<int>(sphere.center.size());
    const double lambda = squared_norm(sphere.center) - 1.0;
    const double r2 = sphere.radius * sphere.radius;
    if (std::abs(lambda) <= 2.0 * degeneracy_tolerance(sphere)) {
        // Center on the unit sphere: the image is the plane perpendicular
        // to the center direction through the image of the antipode.
        const double len = norm(sphere.center);
        Vec normal(n);
        for (int j = 0; j < n; ++j) normal[j] = sphere.center[j] / len;
        // invert(-c) = c (1 - r^2 / (4 |c|^2 / ... )) reduces, with |c| = 1,
        // to c (1 - r^2 / 2); its projection on the normal is the offset.
        return FlatPlane{std::move(normal), len * (1.0 - r2 / 2.0)};
    }
    const double factor = 1.0 - r2 / lambda;
    Vec center(n);
    for (int j = 0; j < n; ++j) center[j] = sphere.center[j] * factor;
    return FiniteSphere{std::move(center), r2 / std::abs(lambda)};
}

double distance_to_face_image(const Vec& point, const FaceImage& image) {
    if (const auto* s = std::get_if<FiniteSphere>(&image)) {
        if (s->center.size() != point.size()) {
            throw std::invalid_argument(
                "distance_to_face_image: dimension mismatch");
        }
        return std::abs(distance(point, s->center) - s->radius);
    }
    const auto& plane = std::get<FlatPlane>(image);
    if (plane.unit_normal.size() != point.size()) {
        throw std::invalid_argument(
            "distance_to_face_image: dimension mismatch");
    }
    return std::abs(dot(point, plane.unit_normal) - plane.offset);
}

}  // namespace spins
