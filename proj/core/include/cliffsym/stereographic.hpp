#pragma once

// Stereographic projection of S^2 and S^3 from the pole (0,..,0,1) onto the
// equatorial plane/space, the extension of the projection to ambient points,
// and the correspondence between spheres/planes downstairs and hyperplane
// sections of the sphere upstairs.

#include <algorithm>
#include <cmath>
#include <variant>

#include "cliffsym/error.hpp"
#include "cliffsym/vec.hpp"

namespace cliffsym {

// Points whose last coordinate is within this distance of 1 are rejected
// rather than projected to enormous coordinates.
inline constexpr double kPoleGuard = 1e-12;

// pi(x, y, z) = (x, y) / (1 - z); input must lie on S^2 and off the pole.
Vec2 project_s2(const Vec3& p);

// The same formula applied to any point of R^3 off the plane z = 1; realizes
// the line-through-the-pole construction for ambient points.
Vec2 extended_project(const Vec3& p);

// pi^-1(a, b) = (2a, 2b, |a|^2 - 1) / (|a|^2 + 1); total on R^2.
Vec3 inverse_s2(const Vec2& a);

// Dimension analogues one step up.
Vec3 project_s3(const Vec4& p);
Vec4 inverse_s3(const Vec3& a);

struct CircleR2 {
  Vec2 center;
  double radius = 1.0;
};

// The line {a : normal . a = offset}.
struct LineR2 {
  Vec2 normal;
  double offset = 0.0;
};

struct SphereR3 {
  Vec3 center;
  double radius = 1.0;
};

// The plane {a : normal . a = offset}.
struct PlaneR3 {
  Vec3 normal;
  double offset = 0.0;
};

// The hyperplane {x in R^4 : normal . x = offset}.  Normals are kept exactly
// as produced by the lift formulas (unnormalized); two hyperplanes are the
// same set iff their (normal, offset) rows are proportional.
struct HyperplaneR4 {
  Vec4 normal;
  double offset = 0.0;

  bool proportional_to(const HyperplaneR4& other, double tol = 1e-9) const;
};

using SphereOrPlane = std::variant<SphereR3, PlaneR3>;
using CircleOrLine = std::variant<CircleR2, LineR2>;

// Image under projection of the equator circle rotated by phi about the
// y-axis and then by psi about the z-axis: the circle with center
// (cos psi tan phi, sin psi tan phi) and radius |sec phi|, degenerating to a
// line through the origin when cos phi = 0.
CircleOrLine rotated_equator_image(double phi, double psi);

// Projection of the section of S^3 cut by a hyperplane: a sphere when the
// pole is off the hyperplane, a plane when the pole lies on it.  Throws
// degenerate_intersection when the section is empty or a single point.
SphereOrPlane hyperplane_image(const HyperplaneR4& h);

// Hyperplanes whose S^3 sections project onto the given sphere/plane.
HyperplaneR4 lift_sphere(const SphereR3& s);
HyperplaneR4 lift_plane(const PlaneR3& p);

// Apex of the right circular cone tangent to the unit sphere along the small
// circle cut by the plane (unit-scaled normal n, offset e, 0 < |e| < 1):
// n / e.  Its extended projection is the center of the projected circle.
Vec3 cone_point(const PlaneR3& circle_plane);
Vec4 cone_point(const HyperplaneR4& circle_plane);

// Unsigned angle in [0, pi] between two nonzero tangent vectors.
template <int N>
double angle_between(const Vec<N>& t1, const Vec<N>& t2) {
  const double n1 = norm(t1);
  const double n2 = norm(t2);
  if (n1 < 1e-300 || n2 < 1e-300) {
    throw std::invalid_argument("angle_between: zero tangent vector");
  }
  const double c = dot(t1, t2) / (n1 * n2);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace cliffsym
