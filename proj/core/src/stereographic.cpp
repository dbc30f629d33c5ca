#include "cliffsym/stereographic.hpp"

#include <cmath>

namespace cliffsym {

Vec2 project_s2(const Vec3& p) {
  if (std::abs(norm(p) - 1.0) > 1e-9) {
    throw geometry_error(errc::not_on_sphere, "point is not on the unit sphere");
  }
  if (1.0 - p[2] < kPoleGuard) {
    throw geometry_error(errc::pole_projection, "point is at the projection pole");
  }
  const double f = 1.0 / (1.0 - p[2]);
  return {f * p[0], f * p[1]};
}

Vec2 extended_project(const Vec3& p) {
  if (std::abs(1.0 - p[2]) < kPoleGuard) {
    throw geometry_error(errc::pole_projection, "point lies on the plane z = 1");
  }
  const double f = 1.0 / (1.0 - p[2]);
  return {f * p[0], f * p[1]};
}

Vec3 inverse_s2(const Vec2& a) {
  const double n2 = norm2(a);
  const double f = 1.0 / (n2 + 1.0);
  return {2.0 * f * a[0], 2.0 * f * a[1], f * (n2 - 1.0)};
}

Vec3 project_s3(const Vec4& p) {
  if (std::abs(norm(p) - 1.0) > 1e-9) {
    throw geometry_error(errc::not_on_sphere, "point is not on the unit three-sphere");
  }
  if (1.0 - p[3] < kPoleGuard) {
    throw geometry_error(errc::pole_projection, "point is at the projection pole");
  }
  const double f = 1.0 / (1.0 - p[3]);
  return {f * p[0], f * p[1], f * p[2]};
}

Vec4 inverse_s3(const Vec3& a) {
  const double n2 = norm2(a);
  const double f = 1.0 / (n2 + 1.0);
  return {2.0 * f * a[0], 2.0 * f * a[1], 2.0 * f * a[2], f * (n2 - 1.0)};
}

bool HyperplaneR4::proportional_to(const HyperplaneR4& other, double tol) const {
  // Compare the rows (normal, offset) up to a nonzero scalar by normalizing
  // both and fixing the relative sign from the larger inner product.
  const double na = std::sqrt(norm2(normal) + offset * offset);
  const double nb = std::sqrt(norm2(other.normal) + other.offset * other.offset);
  if (na < 1e-300 || nb < 1e-300) return false;
  const double ip = (dot(normal, other.normal) + offset * other.offset) / (na * nb);
  const double sign = ip >= 0.0 ? 1.0 : -1.0;
  double dev = std::abs(offset / na - sign * other.offset / nb);
  for (int i = 0; i < 4; ++i) {
    dev = std::max(dev, std::abs(normal[i] / na - sign * other.normal[i] / nb));
  }
  return dev <= tol;
}

CircleOrLine rotated_equator_image(double phi, double psi) {
  const double c = std::cos(phi);
  if (std::abs(c) < 1e-12) {
    // The rotated equator passes through the pole; its image is the line
    // through the origin perpendicular to (cos psi, sin psi).
    return LineR2{{std::cos(psi), std::sin(psi)}, 0.0};
  }
  const double t = std::tan(phi);
  return CircleR2{{std::cos(psi) * t, std::sin(psi) * t}, std::abs(1.0 / c)};
}

SphereOrPlane hyperplane_image(const HyperplaneR4& h) {
  const Vec3 head{h.normal[0], h.normal[1], h.normal[2]};
  const double n4 = h.normal[3];
  const double scale = norm(h.normal);
  if (scale < 1e-300) {
    throw std::invalid_argument("hyperplane_image: zero normal");
  }
  if (std::abs(n4 - h.offset) <= 1e-12 * scale) {
    // Pole on the hyperplane: the section projects to a plane.
    if (norm(head) <= 1e-12 * scale) {
      throw geometry_error(errc::degenerate_intersection,
                           "hyperplane touches the sphere only at the pole");
    }
    return PlaneR3{head, n4};
  }
  const double d = n4 - h.offset;
  const Vec3 center = (-1.0 / d) * head;
  const double r2 = (n4 + h.offset) / d + norm2(head) / (d * d);
  if (r2 <= 1e-12) {
    throw geometry_error(errc::degenerate_intersection,
                         "hyperplane misses the sphere or is tangent to it");
  }
  return SphereR3{center, std::sqrt(r2)};
}

HyperplaneR4 lift_sphere(const SphereR3& s) {
  const double k = s.radius * s.radius - norm2(s.center);
  return {{-2.0 * s.center[0], -2.0 * s.center[1], -2.0 * s.center[2], k + 1.0}, k - 1.0};
}

HyperplaneR4 lift_plane(const PlaneR3& p) {
  return {{p.normal[0], p.normal[1], p.normal[2], p.offset}, p.offset};
}

namespace {

template <int N>
Vec<N> cone_point_impl(const Vec<N>& normal, double offset) {
  const double n = norm(normal);
  if (n < 1e-300) {
    throw std::invalid_argument("cone_point: zero normal");
  }
  const double e = offset / n;
  if (std::abs(e) <= 1e-9) {
    throw geometry_error(errc::great_circle,
                         "great circles have no cone point; reflect in the plane instead");
  }
  if (std::abs(e) >= 1.0 - 1e-12) {
    throw std::invalid_argument("cone_point: plane does not cut the sphere in a circle");
  }
  return normal / (n * e);
}

}  // namespace

Vec3 cone_point(const PlaneR3& circle_plane) {
  return cone_point_impl<3>(circle_plane.normal, circle_plane.offset);
}

Vec4 cone_point(const HyperplaneR4& circle_plane) {
  return cone_point_impl<4>(circle_plane.normal, circle_plane.offset);
}

}  // namespace cliffsym
