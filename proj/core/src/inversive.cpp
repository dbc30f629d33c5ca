#include "cliffsym/inversive.hpp"

#include <cmath>
#include <limits>

namespace cliffsym {

Vec4 reflect_hyperplane(const Vec4& x, const Vec4& normal) {
  const double n2 = norm2(normal);
  if (n2 < 1e-300) {
    throw std::invalid_argument("reflect_hyperplane: zero normal");
  }
  return x - (2.0 * dot(x, normal) / n2) * normal;
}

Vec3 conjugate_reflection(const SphereOrPlane& s, const Vec3& p) {
  const HyperplaneR4 h = std::holds_alternative<SphereR3>(s)
                             ? lift_sphere(std::get<SphereR3>(s))
                             : lift_plane(std::get<PlaneR3>(s));
  if (std::abs(h.offset) > 1e-9 * norm(h.normal)) {
    throw geometry_error(errc::not_great_sphere,
                         "lift does not pass through the origin; reflection is not defined by a "
                         "hyperplane mirror");
  }
  return project_s3(reflect_hyperplane(inverse_s3(p), h.normal));
}

InversionSphere3 symmetry_sphere_at(const SymmetryLine& line, const Vec3& a) {
  const Vec3 rel = a - line.base;
  const double t = dot(rel, line.direction);
  if (norm(rel - t * line.direction) > 1e-9 * (1.0 + std::abs(t))) {
    throw std::invalid_argument("symmetry_sphere_at: point is not on the line");
  }
  return {a, std::sqrt(t * t + line.rho0 * line.rho0)};
}

InversionSphere3 symmetry_sphere_param(const SymmetryLine& line, double t) {
  return {line.base + t * line.direction, std::sqrt(t * t + line.rho0 * line.rho0)};
}

std::vector<CircleOrLine> steiner_circles(const SteinerPair& pair, int count) {
  if (count < 1) {
    throw std::invalid_argument("steiner_circles: count must be at least 1");
  }
  const Vec2 chord = pair.a2 - pair.a1;
  const double rho0 = 0.5 * norm(chord);
  if (rho0 < 1e-12) {
    throw std::invalid_argument("steiner_circles: points coincide");
  }
  const Vec2 m0 = 0.5 * (pair.a1 + pair.a2);
  const Vec2 up = normalized(perp(chord));

  std::vector<CircleOrLine> out;
  out.reserve(static_cast<std::size_t>(count) + 1);
  // Center offsets 0, +-rho0, +-2 rho0, +-4 rho0, ... along the bisector.
  for (int i = 0; i < count; ++i) {
    double s = 0.0;
    if (i > 0) {
      const double mag = rho0 * std::ldexp(1.0, (i - 1) / 2);
      s = (i % 2 == 1) ? mag : -mag;
    }
    const Vec2 center = m0 + s * up;
    out.push_back(CircleR2{center, std::sqrt(s * s + rho0 * rho0)});
  }
  out.push_back(LineR2{up, dot(up, pair.a1)});
  return out;
}

CircleR2 apollonius_circle(const SteinerPair& pair, const Vec2& center) {
  const Vec2 chord = pair.a2 - pair.a1;
  const double rho0 = 0.5 * norm(chord);
  if (rho0 < 1e-12) {
    throw std::invalid_argument("apollonius_circle: points coincide");
  }
  const Vec2 m0 = 0.5 * (pair.a1 + pair.a2);
  const Vec2 rel = center - m0;
  const double d = norm(rel);
  if (std::abs(cross(rel, chord)) > 1e-9 * norm(chord) * (1.0 + d)) {
    throw std::invalid_argument("apollonius_circle: center is not on the line through the pair");
  }
  if (d <= rho0) {
    throw geometry_error(errc::center_in_forbidden_segment,
                         "center lies on the segment between the base points");
  }
  return {center, std::sqrt(d * d - rho0 * rho0)};
}

bool euclidean_symmetry_check(std::span<const Vec2> points, const Vec2& center, int n_lines,
                              double tol) {
  if (points.empty() || n_lines < 1) return true;
  for (int k = 0; k < n_lines; ++k) {
    const double ang = M_PI * static_cast<double>(k) / static_cast<double>(n_lines);
    const Vec2 u{std::cos(ang), std::sin(ang)};
    // Reflection about a line is an isometric involution, so the one-sided
    // Hausdorff distance from the reflected set to the set is symmetric.
    for (const Vec2& p : points) {
      const Vec2 rel = p - center;
      const Vec2 refl = center + 2.0 * dot(rel, u) * u - rel;
      double best = std::numeric_limits<double>::infinity();
      for (const Vec2& q : points) {
        best = std::min(best, distance(refl, q));
        if (best <= tol) break;
      }
      if (best > tol) return false;
    }
  }
  return true;
}

}  // namespace cliffsym
