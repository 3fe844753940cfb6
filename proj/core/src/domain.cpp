#include "spins/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "spins/error.hpp"

namespace spins {

namespace {

void check_dim(const Domain& domain, const Vec& x) {
    if (static_cast<int>(x.size()) != dimension(domain)) {
        throw std::invalid_argument("domain: dimension mismatch");
    }
}

double domain_extent(const Domain& domain) {
    if (const auto* cube = std::get_if<Hypercube>(&domain)) {
        return cube->edge;
    }
    return 1.0;
}

/// Projection of x onto one face and the distance to it. Distances are the
/// usual point-to-plane / point-to-sphere formulas; x is assumed inside.
std::pair<Vec, double> face_projection(const Domain& domain, const Face& face,
                                       const Vec& x) {
    switch (face.kind) {
        case Face::Kind::CoordinatePlane: {
            Vec p = x;
            p[face.axis] = face.offset;
            return {std::move(p), std::abs(x[face.axis] - face.offset)};
        }
        case Face::Kind::SumPlane: {
            const auto n = static_cast<double>(x.size());
            const double excess = (sum(x) - 1.0) / n;
            Vec p(x.size());
            for (std::size_t j = 0; j < x.size(); ++j) p[j] = x[j] - excess;
            return {std::move(p), std::abs(excess) * std::sqrt(n)};
        }
        case Face::Kind::SphereSurface: {
            const double len = norm(x);
            if (len <= 0.0) {
                // The origin is a boundary corner of the sector; callers
                // reject boundary states before projecting.
                throw BoundaryPointError(
                    "project_to_face: cannot project the origin radially");
            }
            Vec p(x.size());
            for (std::size_t j = 0; j < x.size(); ++j) p[j] = x[j] / len;
            return {std::move(p), std::abs(1.0 - len)};
        }
    }
    throw std::logic_error("unreachable face kind");
}

}  // namespace

int dimension(const Domain& domain) {
    return std::visit([](const auto& d) { return d.dim; }, domain);
}

std::vector<Face> boundary_faces(const Domain& domain) {
    const int n = dimension(domain);
    std::vector<Face> faces;
    for (int j = 0; j < n; ++j) {
        faces.push_back({Face::Kind::CoordinatePlane, j, 0.0});
    }
    if (const auto* cube = std::get_if<Hypercube>(&domain)) {
        for (int j = 0; j < n; ++j) {
            faces.push_back({Face::Kind::CoordinatePlane, j, cube->edge});
        }
    } else if (std::holds_alternative<ProjectedSimplex>(domain)) {
        faces.push_back({Face::Kind::SumPlane, 0, 0.0});
    } else {
        faces.push_back({Face::Kind::SphereSurface, 0, 0.0});
    }
    return faces;
}

bool contains(const Domain& domain, const Vec& x) {
    check_dim(domain, x);
    if (const auto* cube = std::get_if<Hypercube>(&domain)) {
        for (double v : x) {
            if (v < 0.0 || v > cube->edge) return false;
        }
        return true;
    }
    for (double v : x) {
        if (v < 0.0) return false;
    }
    if (std::holds_alternative<ProjectedSimplex>(domain)) {
        return sum(x) <= 1.0;
    }
    return squared_norm(x) <= 1.0;
}

double boundary_distance(const Domain& domain, const Vec& x) {
    check_dim(domain, x);
    double best = std::numeric_limits<double>::infinity();
    for (const Face& face : boundary_faces(domain)) {
        if (face.kind == Face::Kind::SphereSurface && squared_norm(x) == 0.0) {
            return 0.0;  // at the sector corner
        }
        best = std::min(best, face_projection(domain, face, x).second);
    }
    return best;
}

double interior_tolerance(const Domain& domain) {
    return 1e-12 * std::max(1.0, domain_extent(domain));
}

std::pair<Vec, Face> project_to_face(const Domain& domain, const Vec& x) {
    check_dim(domain, x);
    const auto faces = boundary_faces(domain);
    Vec best_point;
    Face best_face;
    double best_dist = std::numeric_limits<double>::infinity();
    for (const Face& face : faces) {
        auto [point, dist] = face_projection(domain, face, x);
        // <= sends exact ties to the later face in enumeration order.
        if (dist <= best_dist) {
            best_dist = dist;
            best_point = std::move(point);
            best_face = face;
        }
    }
    if (best_dist <= interior_tolerance(domain)) {
        throw BoundaryPointError(
            "project_to_face: point lies on the domain boundary");
    }
    return {std::move(best_point), best_face};
}

double enveloping_radius(const Domain& domain) {
    if (const auto* cube = std::get_if<Hypercube>(&domain)) {
        return cube->edge * std::sqrt(static_cast<double>(cube->dim));
    }
    return std::sqrt(2.0);
}

FaceImage invert_face(const InversionSphere& sphere, const Face& face) {
    switch (face.kind) {
        case Face::Kind::CoordinatePlane:
            return invert_coordinate_plane(sphere, face.axis, face.offset);
        case Face::Kind::SumPlane:
            return invert_sum_plane(sphere);
        case Face::Kind::SphereSurface:
            return invert_unit_ball(sphere);
    }
    throw std::logic_error("unreachable face kind");
}

double eta(const Domain& domain, const InversionSphere& sphere,
           const Vec& delta) {
    double best = std::numeric_limits<double>::infinity();
    for (const Face& face : boundary_faces(domain)) {
        best = std::min(best,
                        distance_to_face_image(delta, invert_face(sphere, face)));
    }
    return best;
}

bool is_simplex_point(const Vec& theta, double tol) {
    if (theta.empty() || !all_finite(theta)) return false;
    for (double v : theta) {
        if (v < 0.0) return false;
    }
    return std::abs(sum(theta) - 1.0) <= tol;
}

Vec drop_component(const Vec& theta, int i) {
    if (i < 0 || i >= static_cast<int>(theta.size())) {
        throw std::invalid_argument("drop_component: index out of range");
    }
    Vec out;
    out.reserve(theta.size() - 1);
    for (int j = 0; j < static_cast<int>(theta.size()); ++j) {
        if (j != i) out.push_back(theta[j]);
    }
    return out;
}

Vec restore_component(const Vec& theta_minus, int i) {
    if (i < 0 || i > static_cast<int>(theta_minus.size())) {
        throw std::invalid_argument("restore_component: index out of range");
    }
    double remainder = 1.0 - sum(theta_minus);
    if (remainder < 0.0) {
        if (remainder < -1e-10) {
            throw InvalidProjectionError(
                "restore_component: components sum beyond one");
        }
        remainder = 0.0;
    }
    Vec out;
    out.reserve(theta_minus.size() + 1);
    out.insert(out.end(), theta_minus.begin(), theta_minus.begin() + i);
    out.push_back(remainder);
    out.insert(out.end(), theta_minus.begin() + i, theta_minus.end());
    return out;
}

Vec rescale_complement(const Vec& theta, int i, double new_value) {
    if (i < 0 || i >= static_cast<int>(theta.size())) {
        throw std::invalid_argument("rescale_complement: index out of range");
    }
    const double rest = 1.0 - theta[i];
    if (rest <= 0.0) {
        throw DegenerateStateError(
            "rescale_complement: component already carries the full mass");
    }
    const double factor = (1.0 - new_value) / rest;
    Vec out(theta.size());
    for (int j = 0; j < static_cast<int>(theta.size()); ++j) {
        out[j] = theta[j] * factor;
    }
    out[i] = new_value;
    return out;
}

}  // namespace spins
