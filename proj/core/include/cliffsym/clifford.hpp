#pragma once

// The Clifford torus {x^2 + y^2 = 1/2 = z^2 + w^2} in S^3: sampling, the
// rotate-then-project pipeline, membership residuals for the projected
// surface, the symmetry lines determined by a rotation, and the numerical
// certificate that every candidate symmetry sphere maps the projection to
// itself.

#include <span>
#include <vector>

#include "cliffsym/decompose.hpp"
#include "cliffsym/inversive.hpp"
#include "cliffsym/rotation.hpp"
#include "cliffsym/stereographic.hpp"
#include "cliffsym/vec.hpp"

namespace cliffsym {

// Projected samples closer to the pole than this (in the 1 - w sense) are
// excluded and counted instead of being projected to huge coordinates.
inline constexpr double kSamplePoleGuard = 1e-6;

struct TorusPoint {
  Vec4 point;
  double alpha = 0.0;
  double beta = 0.0;
};

// Uniform parameter grid (cos a, sin a, cos b, sin b) / sqrt(2); both counts
// must be at least 3.
std::vector<TorusPoint> sample_torus(int n_alpha, int n_beta);

// Membership residual of p in the projection of the rotated torus: pull p
// back through the projection and the rotation, then measure the defect of
// the two defining equations.  Zero exactly on the surface.
double projected_residual(const Vec3& p, const Rotation4& r);

// Implicit form of the unrotated projection, a torus of revolution about the
// z-axis: (sqrt(x^2 + y^2) - sqrt(2))^2 + z^2 - 1.  Undefined on the z-axis.
double canonical_torus_implicit(const Vec3& p);

// The symmetry lines of the projected torus for this rotation: the z-axis
// for psi = 0, otherwise a vertical and (when defined) a horizontal line,
// all transported by the rotation's leading 3x3 factor.  Vertical precedes
// horizontal in the result.
std::vector<SymmetryLine> symmetry_lines(const Rotation4& r);

// Spheres of the line's family at the given signed parameters.
std::vector<InversionSphere3> symmetry_sphere_family(const SymmetryLine& line,
                                                     std::span<const double> params);

struct ProjectedTorus {
  Rotation4 rotation;
  std::vector<Vec3> samples;
  int excluded = 0;
};

ProjectedTorus project_torus(const Rotation4& r, int n_alpha, int n_beta);

struct CenterResidual {
  int line_index = 0;
  double t = 0.0;
  Vec3 center;
  double radius = 0.0;
  double max_residual = 0.0;
};

struct SymmetryCertificate {
  std::vector<SymmetryLine> lines;
  std::vector<CenterResidual> per_center;
  double tolerance = 0.0;
  bool pass = false;
  int total_samples = 0;
  int excluded_samples = 0;
  double max_residual = 0.0;
};

struct VerifyOptions {
  int n_alpha = 64;
  int n_beta = 64;
  int n_centers = 11;
  double center_span = 3.0;
  double tol = 1e-9;
  // Fault injection for negative controls: enlarge every rho0, or push the
  // sphere centers off the line by a fixed perpendicular offset.
  double rho0_offset = 0.0;
  double center_offset = 0.0;
};

// Reflect every projected sample in every candidate sphere and record the
// worst membership residual per center; passes iff all maxima are within
// tolerance.  Samples landing within 1e-6 of a sphere center are skipped
// for that sphere only.
SymmetryCertificate verify_symmetry(const Rotation4& r, const VerifyOptions& opts = {});

// True iff the sampled torus maps into the torus under r within 1e-10.
bool torus_invariance_check(const Rotation4& r);

// Max over the samples of |pi(r0 x) - r0_3x3 pi(x)|; r0 must fix e4.
double commute_projection_check(const Rotation4& r0, std::span<const Vec4> points);

struct QuarterPeriodResiduals {
  double quarter = 0.0;    // Q(psi + pi/2) against the x-axis quarter turn of Q(psi)
  double half_turn = 0.0;  // Q(psi + pi) against Q(psi)
};

// Residuals for the two periodicity identities of the projected family.
QuarterPeriodResiduals quarter_period_check(double psi);

}  // namespace cliffsym
