#pragma once

#include <variant>

#include "spins/vec.hpp"

namespace spins {

/// Sphere S_c(r) in R^n defining the inversion map
///
///     invert(x) = c + r^2 (x - c) / |x - c|^2 ,
///
/// an involution exchanging the inside and outside of the sphere.
struct InversionSphere {
    Vec center;
    double radius = 1.0;
};

/// Image of a boundary face under inversion when the face is a sphere of
/// finite radius.
struct FiniteSphere {
    Vec center;
    double radius = 0.0;
};

/// Image of a boundary face that the inversion fixes (center on the face):
/// the hyperplane {x : x . unit_normal = offset}.
struct FlatPlane {
    Vec unit_normal;
    double offset = 0.0;
};

using FaceImage = std::variant<FiniteSphere, FlatPlane>;

/// Distance below which a point is considered to coincide with the
/// inversion center: 1e-12 * max(1, r).
double degeneracy_tolerance(const InversionSphere& sphere);

/// Inversion of x in the sphere. Throws CenterCoincidenceError when x is
/// within degeneracy_tolerance of the center.
Vec invert(const InversionSphere& sphere, const Vec& x);

/// |det J| of the inversion at x: (r / |x - center|)^(2n).
double inversion_abs_jacobian(const InversionSphere& sphere, const Vec& x);

/// Image of the hyperplane {x_axis = plane_offset}. A finite sphere unless
/// the inversion center lies on the plane, in which case the plane is fixed.
FaceImage invert_coordinate_plane(const InversionSphere& sphere, int axis,
                                  double plane_offset);

/// Image of the hyperplane {sum_j x_j = 1}. Fixed when the center sums to 1.
FaceImage invert_sum_plane(const InversionSphere& sphere);

/// Image of the unit sphere {|x| = 1}, the boundary of the unit ball. When
/// the inversion center lies on the unit sphere the image degenerates to a
/// plane: the one perpendicular to the center direction passing through the
/// image of the antipodal point.
FaceImage invert_unit_ball(const InversionSphere& sphere);

/// Distance from a point to a face image: | |p - c| - radius | for a finite
/// sphere, |p . n - offset| for a plane.
double distance_to_face_image(const Vec& point, const FaceImage& image);

}  // namespace spins
