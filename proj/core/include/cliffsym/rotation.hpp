#pragma once

// Validated rotation matrices, elementary coordinate-plane rotations, and
// trivial extensions to higher dimensions.
//
// Conventions used throughout the library:
//   * matrices act on column vectors from the left,
//   * angles are radians,
//   * coordinate axes are numbered 1..n when naming a rotation plane, so
//     the elementary rotation of axes (k, j) carries cos(psi) at (k,k) and
//     (j,j), -sin(psi) at (k,j) and sin(psi) at (j,k).

#include <array>
#include <cmath>
#include <random>
#include <span>
#include <utility>

#include "cliffsym/error.hpp"
#include "cliffsym/vec.hpp"

namespace cliffsym {

// Default tolerance when accepting a matrix as a rotation.
inline constexpr double kValidationTol = 1e-9;

template <int N>
class Rotation {
 public:
  Rotation() : m_(Mat<N>::identity()) {}

  // Accepts m iff it is orthogonal with determinant +1, both within tol.
  // A clean reflection (det ~ -1) is reported as determinant_minus_one so
  // callers can tell it apart from a generally malformed matrix.
  static Rotation validate(const Mat<N>& m, double tol = kValidationTol) {
    const double defect = orthogonality_defect(m);
    if (defect > tol) {
      throw geometry_error(errc::not_orthogonal,
                           "matrix is not orthogonal (defect " + std::to_string(defect) + ")");
    }
    const double det = determinant(m);
    if (std::abs(det - 1.0) > tol) {
      if (std::abs(det + 1.0) <= tol) {
        throw geometry_error(errc::determinant_minus_one,
                             "matrix is a reflection (determinant -1), not a rotation");
      }
      throw geometry_error(errc::not_orthogonal,
                           "matrix determinant " + std::to_string(det) + " is not +1");
    }
    return Rotation(m);
  }

  // Wraps a matrix known to be a rotation by construction (products of
  // validated rotations, closed-form trig matrices).
  static Rotation unchecked(const Mat<N>& m) { return Rotation(m); }

  static Rotation identity() { return Rotation(); }

  const Mat<N>& matrix() const { return m_; }

  Vec<N> apply(const Vec<N>& x) const { return m_ * x; }
  Vec<N> operator()(const Vec<N>& x) const { return m_ * x; }

  Rotation inverse() const { return Rotation(m_.transposed()); }

  friend Rotation operator*(const Rotation& a, const Rotation& b) {
    return Rotation(a.m_ * b.m_);
  }

 private:
  explicit Rotation(const Mat<N>& m) : m_(m) {}

  Mat<N> m_;
};

using Rotation2 = Rotation<2>;
using Rotation3 = Rotation<3>;
using Rotation4 = Rotation<4>;

// Rotation of the single coordinate plane (k, j), axes 1-based, k < j.
template <int N>
Rotation<N> elementary_rotation(int k, int j, double psi) {
  if (k < 1 || j > N || k >= j) {
    throw std::invalid_argument("elementary rotation needs axes 1 <= k < j <= n");
  }
  Mat<N> m = Mat<N>::identity();
  const double c = std::cos(psi);
  const double s = std::sin(psi);
  m(k - 1, k - 1) = c;
  m(j - 1, j - 1) = c;
  m(k - 1, j - 1) = -s;
  m(j - 1, k - 1) = s;
  return Rotation<N>::unchecked(m);
}

// Embeds a K-dimensional rotation into dimension N: acts as r on the span of
// the axes listed in `indices` (1-based, strictly increasing) and fixes the
// remaining axes.
template <int N, int K>
Rotation<N> trivial_extension(const Rotation<K>& r, const std::array<int, K>& indices) {
  static_assert(K <= N, "extension target must not shrink the dimension");
  for (int i = 0; i < K; ++i) {
    if (indices[static_cast<std::size_t>(i)] < 1 || indices[static_cast<std::size_t>(i)] > N) {
      throw std::invalid_argument("trivial extension index out of range");
    }
    if (i > 0 && indices[static_cast<std::size_t>(i)] <= indices[static_cast<std::size_t>(i - 1)]) {
      throw std::invalid_argument("trivial extension indices must be strictly increasing");
    }
  }
  Mat<N> m = Mat<N>::identity();
  for (int a = 0; a < K; ++a) {
    for (int b = 0; b < K; ++b) {
      m(indices[static_cast<std::size_t>(a)] - 1, indices[static_cast<std::size_t>(b)] - 1) =
          r.matrix()(a, b);
    }
  }
  return Rotation<N>::unchecked(m);
}

// Convenience: embed a 3D rotation as the upper-left block of a 4D rotation
// fixing the last axis.
inline Rotation4 extend_to_r4(const Rotation3& r) {
  return trivial_extension<4, 3>(r, {1, 2, 3});
}

// The coordinate-plane rotations of R^4 used by the torus pipeline.
inline Rotation4 rotation_xy(double theta) { return elementary_rotation<4>(1, 2, theta); }
inline Rotation4 rotation_zw(double phi) { return elementary_rotation<4>(3, 4, phi); }
inline Rotation4 rotation_xw(double psi) { return elementary_rotation<4>(1, 4, psi); }

// The rotations of R^3 about the z- and y-axis with the convention that the
// y-axis rotation sends e3 to (-sin phi, 0, cos phi).
inline Rotation3 rotation_z(double psi) { return elementary_rotation<3>(1, 2, psi); }
inline Rotation3 rotation_y(double phi) { return elementary_rotation<3>(1, 3, phi); }

// Samples pairwise: true iff |f(x) - f(y)| == |x - y| within tol for every
// provided pair.
template <int N, typename F>
bool is_rigid_motion_on_samples(F&& f, std::span<const std::pair<Vec<N>, Vec<N>>> samples,
                                double tol) {
  if (samples.size() < 2) {
    throw std::invalid_argument("rigid-motion sampling needs at least two point pairs");
  }
  for (const auto& [x, y] : samples) {
    const double before = distance(x, y);
    const double after = distance(f(x), f(y));
    if (std::abs(after - before) > tol) return false;
  }
  return true;
}

// Random element of SO(N): product of ten elementary rotations with angles
// uniform in [0, 2*pi).  Stays inside the group by construction.
template <int N, typename URBG>
Rotation<N> random_rotation(URBG& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_int_distribution<int> axis(1, N);
  Rotation<N> r = Rotation<N>::identity();
  for (int i = 0; i < 10; ++i) {
    int k = axis(rng);
    int j = axis(rng);
    while (j == k) j = axis(rng);
    if (k > j) std::swap(k, j);
    r = r * elementary_rotation<N>(k, j, angle(rng));
  }
  return r;
}

}  // namespace cliffsym
