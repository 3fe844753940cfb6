#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "spins/geometry.hpp"
#include "spins/vec.hpp"

namespace spins {

/// The projected simplex {x in R^n : x_j >= 0, sum_j x_j <= 1}, i.e. the
/// probability simplex in R^(n+1) with one component dropped.
struct ProjectedSimplex {
    int dim = 1;
};

/// Nonnegative sector of the closed unit ball: {x : x_j >= 0, |x| <= 1}.
struct SphereSector {
    int dim = 1;
};

/// Cube [0, edge]^n with one vertex at the origin.
struct Hypercube {
    int dim = 1;
    double edge = 1.0;
};

using Domain = std::variant<ProjectedSimplex, SphereSector, Hypercube>;

/// One boundary face of a Domain.
struct Face {
    enum class Kind { CoordinatePlane, SumPlane, SphereSurface };
    Kind kind = Kind::CoordinatePlane;
    int axis = 0;       // CoordinatePlane only
    double offset = 0;  // CoordinatePlane only (0 or the cube edge)
};

int dimension(const Domain& domain);

/// Faces in canonical enumeration order: coordinate planes at offset 0 by
/// ascending axis, then (hypercube) offset-edge planes by ascending axis,
/// then the sum plane or sphere surface. Projection ties are resolved toward
/// the later face in this order.
std::vector<Face> boundary_faces(const Domain& domain);

/// Closed membership test: all face inequalities hold.
bool contains(const Domain& domain, const Vec& x);

/// Minimum distance from an interior point to the boundary faces.
double boundary_distance(const Domain& domain, const Vec& x);

/// Points closer to the boundary than this are rejected as chain states.
double interior_tolerance(const Domain& domain);

/// Nearest-face projection of an interior point, ties toward the later face
/// in enumeration order. Throws BoundaryPointError when x lies on the
/// boundary (within interior_tolerance).
std::pair<Vec, Face> project_to_face(const Domain& domain, const Vec& x);

/// Radius large enough that the domain fits inside a sphere of that radius
/// centered at any boundary point (the domain diameter, with sqrt(2) for
/// both the projected simplex and the sector).
double enveloping_radius(const Domain& domain);

/// Analytic image of one face under inversion.
FaceImage invert_face(const InversionSphere& sphere, const Face& face);

/// Radius of the maximal ball around delta = invert(sphere, x) that stays
/// inside the inverted domain image: the minimum distance from delta to the
/// face images.
double eta(const Domain& domain, const InversionSphere& sphere,
           const Vec& delta);

// --- simplex point utilities -------------------------------------------
//
// A simplex point is a vector theta in R^k with theta_j >= 0 summing to 1.

bool is_simplex_point(const Vec& theta, double tol = 1e-10);

/// Remove component i; the result lies in ProjectedSimplex(k-1).
Vec drop_component(const Vec& theta, int i);

/// Insert 1 - sum(theta_minus) at position i. Throws InvalidProjectionError
/// when the remainder is negative beyond tolerance.
Vec restore_component(const Vec& theta_minus, int i);

/// Set component i to new_value and rescale the others to keep their
/// relative ratios and the unit sum. Throws DegenerateStateError when
/// theta_i = 1.
Vec rescale_complement(const Vec& theta, int i, double new_value);

}  // namespace spins
