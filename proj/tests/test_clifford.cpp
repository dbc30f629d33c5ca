#include <doctest.h>

#include <vector>

#include "cliffsym/clifford.hpp"
#include "support/test_support.hpp"

using namespace cliffsym;
using testsupport::Rng;

namespace {

double membership_defect(const Vec4& q) {
  return std::max(std::abs(q[0] * q[0] + q[1] * q[1] - 0.5),
                  std::abs(q[2] * q[2] + q[3] * q[3] - 0.5));
}

// The eight sign/swap operations of one coordinate pair.
Vec2 pair_op(int op, double a, double b) {
  switch (op) {
    case 0: return {a, b};
    case 1: return {a, -b};
    case 2: return {-a, b};
    case 3: return {-a, -b};
    case 4: return {b, a};
    case 5: return {b, -a};
    case 6: return {-b, a};
    default: return {-b, -a};
  }
}

Rotation4 random_block_rotation(Rng& rng) {
  return extend_to_r4(random_rotation<3>(rng));
}

}  // namespace

TEST_CASE("torus sampling") {
  const auto pts = sample_torus(32, 32);
  REQUIRE(pts.size() == 32 * 32);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(max_abs_diff(pts.front().point, Vec4{r, 0.0, r, 0.0}) < 1e-15);
  for (const TorusPoint& tp : pts) {
    CHECK(membership_defect(tp.point) < 1e-15);
  }

  const auto small = sample_torus(4, 4);
  CHECK(small.size() == 16);
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i + 1; j < small.size(); ++j) {
      CHECK(max_abs_diff(small[i].point, small[j].point) > 1e-12);
    }
  }

  CHECK_THROWS_AS(sample_torus(2, 8), std::invalid_argument);
}

TEST_CASE("projected membership residual") {
  const Rotation4 id = Rotation4::identity();
  const ProjectedTorus canon = project_torus(id, 16, 16);
  CHECK(canon.excluded == 0);
  for (const Vec3& p : canon.samples) {
    CHECK(projected_residual(p, id) < 1e-12);
  }

  CHECK(projected_residual(Vec3{}, id) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("sign and swap switches preserve the torus") {
  for (const TorusPoint& tp : sample_torus(8, 8)) {
    const Vec4& x = tp.point;
    for (int op = 0; op < 8; ++op) {
      const Vec2 xy = pair_op(op, x[0], x[1]);
      CHECK(membership_defect(Vec4{xy[0], xy[1], x[2], x[3]}) < 1e-12);
      const Vec2 zw = pair_op(op, x[2], x[3]);
      CHECK(membership_defect(Vec4{x[0], x[1], zw[0], zw[1]}) < 1e-12);
    }
  }
}

TEST_CASE("implicit form of the canonical projection") {
  const double s2 = std::sqrt(2.0);
  // Zeros of the closed form, cross-checked against the pullback residual.
  for (const Vec3& p : {Vec3{1.0 + s2, 0.0, 0.0}, Vec3{s2 - 1.0, 0.0, 0.0},
                        Vec3{1.0 / s2, 0.0, 1.0 / s2}}) {
    CHECK(std::abs(canonical_torus_implicit(p)) < 1e-14);
    CHECK(projected_residual(p, Rotation4::identity()) < 1e-14);
  }

  CHECK_THROWS_AS(canonical_torus_implicit(Vec3{0.0, 0.0, 1.0}), std::invalid_argument);

  // The zero set is a surface of revolution about the z-axis.
  Rng rng(61);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  const ProjectedTorus canon = project_torus(Rotation4::identity(), 24, 24);
  for (const Vec3& p : canon.samples) {
    const Rotation3 spin = elementary_rotation<3>(1, 2, angle(rng));
    CHECK(std::abs(canonical_torus_implicit(spin.apply(p))) < 1e-10);
  }

  // The x,z-plane slice consists of the two unit circles centered at
  // (+-sqrt(2), 0).
  for (const Vec3& p : canon.samples) {
    if (std::abs(p[1]) > 1e-9) continue;
    const double near = std::abs((p[0] - s2) * (p[0] - s2) + p[2] * p[2] - 1.0);
    const double far = std::abs((p[0] + s2) * (p[0] + s2) + p[2] * p[2] - 1.0);
    CHECK(std::min(near, far) < 1e-8);
  }
}

TEST_CASE("projected membership agrees with the closed form under block rotations") {
  Rng rng(62);
  for (int iter = 0; iter < 20; ++iter) {
    const Rotation3 r3 = random_rotation<3>(rng);
    const Rotation4 r0 = extend_to_r4(r3);
    const ProjectedTorus q = project_torus(r0, 16, 16);
    for (const Vec3& p : q.samples) {
      CHECK(projected_residual(p, r0) < 1e-10);
      CHECK(std::abs(canonical_torus_implicit(r3.inverse().apply(p))) < 1e-10);
    }
    // Both routes reject a point pushed off the surface.
    const Vec3 off = q.samples.front() + Vec3{0.05, 0.0, 0.0};
    const double implicitDefect = std::abs(canonical_torus_implicit(r3.inverse().apply(off)));
    CHECK(projected_residual(off, r0) > 1e-4);
    CHECK(implicitDefect > 1e-4);
  }
}

TEST_CASE("symmetry lines of the projected torus") {
  const auto idLines = symmetry_lines(Rotation4::identity());
  REQUIRE(idLines.size() == 1);
  CHECK(max_abs_diff(idLines[0].base, Vec3{}) == 0.0);
  CHECK(max_abs_diff(idLines[0].direction, Vec3::axis(2)) == 0.0);
  CHECK(idLines[0].rho0 == 1.0);

  const auto quarterEighth = symmetry_lines(rotation_xw(M_PI / 4.0));
  REQUIRE(quarterEighth.size() == 2);
  const double s2 = std::sqrt(2.0);
  CHECK(max_abs_diff(quarterEighth[0].base, Vec3{1.0, 0.0, 0.0}) < 1e-12);
  CHECK(max_abs_diff(quarterEighth[0].direction, Vec3::axis(2)) < 1e-12);
  CHECK(quarterEighth[0].rho0 == doctest::Approx(s2).epsilon(1e-12));
  CHECK(max_abs_diff(quarterEighth[1].base, Vec3{-1.0, 0.0, 0.0}) < 1e-12);
  CHECK(max_abs_diff(quarterEighth[1].direction, Vec3::axis(1)) < 1e-12);
  CHECK(quarterEighth[1].rho0 == doctest::Approx(s2).epsilon(1e-12));

  // At a quarter turn only the horizontal line survives.
  const auto quarter = symmetry_lines(rotation_xw(M_PI / 2.0));
  REQUIRE(quarter.size() == 1);
  CHECK(max_abs_diff(quarter[0].base, Vec3{}) < 1e-9);
  CHECK(max_abs_diff(quarter[0].direction, Vec3::axis(1)) < 1e-12);
  CHECK(quarter[0].rho0 == doctest::Approx(1.0).epsilon(1e-12));

  // A leading block rotation transports the lines rigidly.
  Rng rng(63);
  for (int iter = 0; iter < 20; ++iter) {
    const Rotation3 r3 = random_rotation<3>(rng);
    const double psi = 0.4;
    const auto moved = symmetry_lines(extend_to_r4(r3) * rotation_xw(psi));
    const auto canonical = symmetry_lines(rotation_xw(psi));
    REQUIRE(moved.size() == canonical.size());
    for (std::size_t i = 0; i < moved.size(); ++i) {
      CHECK(max_abs_diff(moved[i].base, r3.apply(canonical[i].base)) < 1e-10);
      CHECK(max_abs_diff(moved[i].direction, r3.apply(canonical[i].direction)) < 1e-10);
      CHECK(moved[i].rho0 == doctest::Approx(canonical[i].rho0).epsilon(1e-12));
    }
  }
}

TEST_CASE("sphere families along the symmetry lines") {
  const double psi = M_PI / 5.0;
  const SymmetryLine vertical{{std::tan(psi), 0.0, 0.0}, Vec3::axis(2), 1.0 / std::cos(psi)};
  for (double c : {-1.5, 0.0, 0.4, 2.0}) {
    const InversionSphere3 s = symmetry_sphere_param(vertical, c / std::cos(psi));
    CHECK(max_abs_diff(s.center, Vec3{std::tan(psi), 0.0, c / std::cos(psi)}) < 1e-12);
    CHECK(s.radius * s.radius ==
          doctest::Approx((1.0 + c * c) / (std::cos(psi) * std::cos(psi))).epsilon(1e-12));
  }
  CHECK(symmetry_sphere_param(vertical, 0.0).radius == vertical.rho0);

  const SymmetryLine horizontal{{-1.0 / std::tan(psi), 0.0, 0.0}, Vec3::axis(1),
                                1.0 / std::sin(psi)};
  for (double phi : {0.3, 1.0, 2.2}) {
    const double cot = 1.0 / std::tan(phi);
    const InversionSphere3 s = symmetry_sphere_param(horizontal, cot / std::sin(psi));
    CHECK(s.radius * s.radius ==
          doctest::Approx((1.0 + cot * cot) / (std::sin(psi) * std::sin(psi))).epsilon(1e-12));
  }

  const auto family = symmetry_sphere_family(vertical, std::vector<double>{-1.0, 0.0, 1.0});
  REQUIRE(family.size() == 3);
  CHECK(family[1].radius == vertical.rho0);
}

TEST_CASE("symmetry certificates for presets") {
  for (double psi : {0.0, M_PI / 8.0}) {
    const SymmetryCertificate cert = verify_symmetry(rotation_xw(psi));
    CHECK(cert.pass);
    CHECK(cert.max_residual <= 1e-9);
    CHECK(cert.per_center.size() == cert.lines.size() * 11);
  }
}

TEST_CASE("certificates are falsifiable") {
  VerifyOptions bad;
  bad.rho0_offset = 0.1;
  const SymmetryCertificate wrongRadius = verify_symmetry(rotation_xw(M_PI / 8.0), bad);
  CHECK_FALSE(wrongRadius.pass);
  CHECK(wrongRadius.max_residual > 1e-3);

  VerifyOptions off;
  off.center_offset = 0.1;
  const SymmetryCertificate wrongCenter = verify_symmetry(rotation_xw(M_PI / 8.0), off);
  CHECK_FALSE(wrongCenter.pass);
  CHECK(wrongCenter.max_residual > 1e-3);
}

TEST_CASE("random rotations certify at desk scale") {
  Rng rng(64);
  for (int iter = 0; iter < 4; ++iter) {
    const Rotation4 r = random_rotation<4>(rng);
    const SymmetryCertificate cert = verify_symmetry(r);
    CHECK(cert.pass);
  }
}

TEST_CASE("torus invariance under coordinate-pair rotations") {
  Rng rng(65);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  for (int iter = 0; iter < 5; ++iter) {
    CHECK(torus_invariance_check(rotation_xy(angle(rng))));
    CHECK(torus_invariance_check(rotation_zw(angle(rng))));
    CHECK(torus_invariance_check(rotation_xy(angle(rng)) * rotation_zw(angle(rng))));
  }
  CHECK_FALSE(torus_invariance_check(rotation_xw(M_PI / 3.0)));
}

TEST_CASE("projection commutes with rotations fixing the pole axis") {
  Rng rng(66);
  std::vector<Vec4> pts;
  while (pts.size() < 500) {
    const Vec4 p = testsupport::random_unit<4>(rng);
    if (p[3] < 0.9) pts.push_back(p);
  }
  CHECK(commute_projection_check(Rotation4::identity(), pts) == 0.0);
  for (int iter = 0; iter < 10; ++iter) {
    CHECK(commute_projection_check(random_block_rotation(rng), pts) < 1e-12);
  }
  CHECK_THROWS_AS(commute_projection_check(rotation_xw(0.3), pts), std::invalid_argument);
}

TEST_CASE("quarter and half period identities") {
  for (double psi : {0.0, M_PI / 8.0, M_PI / 4.0}) {
    const QuarterPeriodResiduals res = quarter_period_check(psi);
    CHECK(res.quarter < 1e-10);
    CHECK(res.half_turn < 1e-10);
  }
}
