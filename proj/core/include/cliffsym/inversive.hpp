#pragma once

// Reflection about circles and spheres (inversion), reflection of R^4 about
// a hyperplane through the origin, the conjugation of the two by
// stereographic projection, and the classical Steiner/Apollonius circle
// families with their symmetry data.

#include <span>
#include <vector>

#include "cliffsym/error.hpp"
#include "cliffsym/stereographic.hpp"
#include "cliffsym/vec.hpp"

namespace cliffsym {

template <int N>
struct InversionSphere {
  Vec<N> center;
  double radius = 1.0;
};

using InversionCircle2 = InversionSphere<2>;
using InversionSphere3 = InversionSphere<3>;

// p' = rho^2 (p - a) / |p - a|^2 + a.  Fixes the sphere pointwise, swaps
// inside and outside, and is an involution away from the center.
template <int N>
Vec<N> invert(const Vec<N>& p, const InversionSphere<N>& s) {
  const Vec<N> d = p - s.center;
  const double n2 = norm2(d);
  if (n2 < 1e-12 * 1e-12) {
    throw geometry_error(errc::center_inversion, "point at the inversion center maps to infinity");
  }
  return s.center + (s.radius * s.radius / n2) * d;
}

// x - 2 (x.n / |n|^2) n: reflection of R^4 about the hyperplane through the
// origin with normal n.  Preserves norms, so it restricts to S^3.
Vec4 reflect_hyperplane(const Vec4& x, const Vec4& normal);

// pi o Psi o pi^-1 applied to p, where Psi is the hyperplane reflection
// fixing the lift of s.  Defined when the lift passes through the origin
// (s is the image of a great sphere); equals invert() for spheres and the
// Euclidean mirror for planes.
Vec3 conjugate_reflection(const SphereOrPlane& s, const Vec3& p);

// A line of sphere centers: sphere centered at distance d from `base` along
// the line has radius sqrt(d^2 + rho0^2).
struct SymmetryLine {
  Vec3 base;
  Vec3 direction;  // unit
  double rho0 = 1.0;
};

// Symmetry sphere centered at a point of the line.  The point must lie on
// the line within 1e-9.
InversionSphere3 symmetry_sphere_at(const SymmetryLine& line, const Vec3& a);

// Same sphere indexed by the signed line parameter t.
InversionSphere3 symmetry_sphere_param(const SymmetryLine& line, double t);

struct SteinerPair {
  Vec2 a1;
  Vec2 a2;
};

// `count` circles through both points, centers on the perpendicular bisector
// at a symmetric geometric grid of offsets, followed by the member of the
// family with infinite radius: the line through a1 and a2.
std::vector<CircleOrLine> steiner_circles(const SteinerPair& pair, int count);

// The circle of the orthogonal family with the given center, which must lie
// on the line through a1, a2 outside the closed segment between them.
CircleR2 apollonius_circle(const SteinerPair& pair, const Vec2& center);

// True iff reflecting the sample set about n_lines evenly spaced lines
// through `center` reproduces it within Hausdorff distance tol.
bool euclidean_symmetry_check(std::span<const Vec2> points, const Vec2& center, int n_lines,
                              double tol);

}  // namespace cliffsym
