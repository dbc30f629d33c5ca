#include "cliffsym/clifford.hpp"

#include <cmath>

namespace cliffsym {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// A unit vector perpendicular to the (unit) direction, chosen from the least
// aligned coordinate axis; used for deterministic off-line fault injection.
Vec3 perpendicular_to(const Vec3& dir) {
  int least = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(dir[i]) < std::abs(dir[least])) least = i;
  }
  const Vec3 e = Vec3::axis(least);
  return normalized(e - dot(e, dir) * dir);
}

double torus_membership_defect(const Vec4& q) {
  return std::max(std::abs(q[0] * q[0] + q[1] * q[1] - 0.5),
                  std::abs(q[2] * q[2] + q[3] * q[3] - 0.5));
}

}  // namespace

std::vector<TorusPoint> sample_torus(int n_alpha, int n_beta) {
  if (n_alpha < 3 || n_beta < 3) {
    throw std::invalid_argument("sample_torus: grid must be at least 3x3");
  }
  std::vector<TorusPoint> out;
  out.reserve(static_cast<std::size_t>(n_alpha) * static_cast<std::size_t>(n_beta));
  for (int i = 0; i < n_alpha; ++i) {
    const double alpha = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n_alpha);
    const double ca = std::cos(alpha) * kInvSqrt2;
    const double sa = std::sin(alpha) * kInvSqrt2;
    for (int j = 0; j < n_beta; ++j) {
      const double beta = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n_beta);
      out.push_back({{ca, sa, std::cos(beta) * kInvSqrt2, std::sin(beta) * kInvSqrt2},
                     alpha, beta});
    }
  }
  return out;
}

double projected_residual(const Vec3& p, const Rotation4& r) {
  return torus_membership_defect(r.inverse().apply(inverse_s3(p)));
}

double canonical_torus_implicit(const Vec3& p) {
  const double rxy = std::hypot(p[0], p[1]);
  if (rxy < 1e-12) {
    throw std::invalid_argument("canonical_torus_implicit: undefined on the z-axis");
  }
  const double d = rxy - std::sqrt(2.0);
  return d * d + p[2] * p[2] - 1.0;
}

std::vector<SymmetryLine> symmetry_lines(const Rotation4& r) {
  const So4Decomposition d = decompose_so4(r);

  // Reduce psi modulo pi into (-pi/2, pi/2]; the projected surface has that
  // period in psi.
  double psi = std::remainder(d.psi, M_PI);
  if (psi <= -M_PI / 2.0 + 1e-15) psi += M_PI;

  std::vector<SymmetryLine> canonical;
  const double s = std::sin(psi);
  const double c = std::cos(psi);
  if (std::abs(s) <= kDegenerateAngleTol) {
    // Unrotated projection: a surface of revolution about the z-axis.
    canonical.push_back({{0.0, 0.0, 0.0}, Vec3::axis(2), 1.0});
  } else if (std::abs(c) <= kDegenerateAngleTol) {
    // The vertical family degenerates at a quarter turn; only the horizontal
    // line survives.
    canonical.push_back({{-c / s, 0.0, 0.0}, Vec3::axis(1), 1.0 / std::abs(s)});
  } else {
    canonical.push_back({{s / c, 0.0, 0.0}, Vec3::axis(2), 1.0 / std::abs(c)});
    canonical.push_back({{-c / s, 0.0, 0.0}, Vec3::axis(1), 1.0 / std::abs(s)});
  }

  // Transport by the residual factor, which acts on the projection as its
  // leading 3x3 rotation.
  Mat3 block{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) block(i, j) = d.r0.matrix()(i, j);
  std::vector<SymmetryLine> out;
  out.reserve(canonical.size());
  for (const SymmetryLine& line : canonical) {
    out.push_back({block * line.base, block * line.direction, line.rho0});
  }
  return out;
}

std::vector<InversionSphere3> symmetry_sphere_family(const SymmetryLine& line,
                                                     std::span<const double> params) {
  std::vector<InversionSphere3> out;
  out.reserve(params.size());
  for (double t : params) out.push_back(symmetry_sphere_param(line, t));
  return out;
}

ProjectedTorus project_torus(const Rotation4& r, int n_alpha, int n_beta) {
  ProjectedTorus out{r, {}, 0};
  for (const TorusPoint& tp : sample_torus(n_alpha, n_beta)) {
    const Vec4 x = r.apply(tp.point);
    if (1.0 - x[3] < kSamplePoleGuard) {
      ++out.excluded;
      continue;
    }
    const double f = 1.0 / (1.0 - x[3]);
    out.samples.push_back({f * x[0], f * x[1], f * x[2]});
  }
  return out;
}

SymmetryCertificate verify_symmetry(const Rotation4& r, const VerifyOptions& opts) {
  if (opts.n_alpha < 8 || opts.n_beta < 8) {
    throw std::invalid_argument("verify_symmetry: grid must be at least 8x8");
  }
  if (opts.n_centers < 1 || opts.tol <= 0.0) {
    throw std::invalid_argument("verify_symmetry: need at least one center and positive tol");
  }

  const ProjectedTorus projected = project_torus(r, opts.n_alpha, opts.n_beta);

  SymmetryCertificate cert;
  cert.lines = symmetry_lines(r);
  for (SymmetryLine& line : cert.lines) line.rho0 += opts.rho0_offset;
  cert.tolerance = opts.tol;
  cert.total_samples = opts.n_alpha * opts.n_beta;
  cert.excluded_samples = projected.excluded;

  for (std::size_t li = 0; li < cert.lines.size(); ++li) {
    const SymmetryLine& line = cert.lines[li];
    const Vec3 off = opts.center_offset != 0.0
                         ? opts.center_offset * perpendicular_to(line.direction)
                         : Vec3{};
    for (int ci = 0; ci < opts.n_centers; ++ci) {
      const double t = opts.n_centers == 1
                           ? 0.0
                           : -opts.center_span + 2.0 * opts.center_span * static_cast<double>(ci) /
                                                     static_cast<double>(opts.n_centers - 1);
      InversionSphere3 sphere = symmetry_sphere_param(line, t);
      sphere.center = sphere.center + off;

      double worst = 0.0;
      for (const Vec3& p : projected.samples) {
        if (distance(p, sphere.center) < 1e-6) continue;
        worst = std::max(worst, projected_residual(invert(p, sphere), r));
      }
      cert.per_center.push_back({static_cast<int>(li), t, sphere.center, sphere.radius, worst});
      cert.max_residual = std::max(cert.max_residual, worst);
    }
  }
  cert.pass = cert.max_residual <= cert.tolerance;
  return cert;
}

bool torus_invariance_check(const Rotation4& r) {
  for (const TorusPoint& tp : sample_torus(32, 32)) {
    if (torus_membership_defect(r.apply(tp.point)) > 1e-10) return false;
  }
  return true;
}

double commute_projection_check(const Rotation4& r0, std::span<const Vec4> points) {
  double dev = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double want = i == 3 ? 1.0 : 0.0;
    dev = std::max(dev, std::abs(r0.matrix()(3, i) - want));
    dev = std::max(dev, std::abs(r0.matrix()(i, 3) - want));
  }
  if (dev > 1e-9) {
    throw std::invalid_argument("commute_projection_check: rotation does not fix e4");
  }
  Mat3 block{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) block(i, j) = r0.matrix()(i, j);

  double worst = 0.0;
  for (const Vec4& x : points) {
    const Vec3 lhs = project_s3(r0.apply(x));
    const Vec3 rhs = block * project_s3(x);
    worst = std::max(worst, max_abs_diff(lhs, rhs));
  }
  return worst;
}

QuarterPeriodResiduals quarter_period_check(double psi) {
  const Rotation4 r_psi = rotation_xw(psi);
  const Rotation4 r_quarter = rotation_xw(psi + M_PI / 2.0);
  const Rotation4 r_half = rotation_xw(psi + M_PI);
  const Rotation3 x_quarter_turn = elementary_rotation<3>(2, 3, M_PI / 2.0);

  QuarterPeriodResiduals res;
  const ProjectedTorus q = project_torus(r_psi, 32, 32);
  for (const Vec3& p : q.samples) {
    res.quarter = std::max(res.quarter, projected_residual(x_quarter_turn.apply(p), r_quarter));
    res.half_turn = std::max(res.half_turn, projected_residual(p, r_half));
  }
  return res;
}

}  // namespace cliffsym
