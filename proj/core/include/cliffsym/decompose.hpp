#pragma once

// Constructive decompositions of SO(3) and SO(4), factorization into
// elementary coordinate-plane rotations, invariant-plane (block) form, and
// the one-parameter rotation path through a given rotation.

#include <vector>

#include "cliffsym/rotation.hpp"
#include "cliffsym/vec.hpp"

namespace cliffsym {

// Angle threshold below which a degenerate branch is taken and the free
// angle gauged to zero.
inline constexpr double kDegenerateAngleTol = 1e-9;

// R = Rz(psi) * Ry(phi) * Rz(theta).
struct ZyzAngles {
  double theta = 0.0;
  double phi = 0.0;
  double psi = 0.0;
};

// Gauge: phi in [0, pi]; when sin(phi) ~ 0 the outer angle psi is set to 0
// and the whole planar rotation is carried by theta.  Reconstruction, not
// uniqueness of the triple, is the contract.
ZyzAngles decompose_so3(const Rotation3& r);
Rotation3 zyz_rotation(const ZyzAngles& a);

// R = r0 * Rxw(psi) * Rzw(phi) * Rxy(theta), where r0 fixes the last axis
// (last row and column equal to e4).
struct So4Decomposition {
  Rotation4 r0;
  double psi = 0.0;
  double phi = 0.0;
  double theta = 0.0;
};

// Branch: psi in [0, pi/2] with sin(psi), cos(psi) >= 0.  When sin(psi) ~ 0
// theta is gauged to 0; when cos(psi) ~ 0 phi is gauged to 0.  Throws
// block_form_failure if the residual factor fails to fix e4, which would
// indicate a defect in the construction rather than bad input.
So4Decomposition decompose_so4(const Rotation4& r);
Rotation4 so4_rotation(const So4Decomposition& d);

// One elementary rotation of the coordinate plane (k, j), axes 1-based.
struct ElementaryFactor {
  int k = 1;
  int j = 2;
  double angle = 0.0;
};

// An ordered product of elementary rotations; the last factor in the list
// acts first on vectors, i.e. compose() multiplies factors left to right.
template <int N>
struct ElementaryFactorization {
  std::vector<ElementaryFactor> factors;

  Rotation<N> compose() const {
    Rotation<N> r = Rotation<N>::identity();
    for (const ElementaryFactor& f : factors) {
      r = r * elementary_rotation<N>(f.k, f.j, f.angle);
    }
    return r;
  }
};

// Elementary factors whose composition maps v to w.  Requires |v| = |w| > 0
// within 1e-9; at most 2(N-1) factors.
template <int N>
ElementaryFactorization<N> align_vectors(const Vec<N>& v, const Vec<N>& w);

// Factors r into at most N(N-1)/2 elementary rotations by reducing the last
// column to the last axis and recursing on the leading block.
template <int N>
ElementaryFactorization<N> elementary_factorization(const Rotation<N>& r);

// Orthonormal basis in which r is block diagonal: an identity block of size
// fixed_dim followed by one 2x2 rotation block per angle.  Angles are
// nonzero and lie in (-pi, pi]; a negative angle appears only when needed to
// keep the change of basis inside SO(N).
template <int N>
struct PlaneBlockForm {
  Rotation<N> basis;
  int fixed_dim = N;
  std::vector<double> angles;

  Mat<N> block_matrix() const {
    Mat<N> m = Mat<N>::identity();
    int at = fixed_dim;
    for (double theta : angles) {
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      m(at, at) = c;
      m(at, at + 1) = -s;
      m(at + 1, at) = s;
      m(at + 1, at + 1) = c;
      at += 2;
    }
    return m;
  }
};

template <int N>
PlaneBlockForm<N> plane_block_form(const Rotation<N>& r);

// One-parameter subgroup through r: path(0) = identity, path(1) = r, and
// path(s) * path(t) = path(s + t).  Built by scaling the block-form angles.
template <int N>
Rotation<N> rotation_path(const Rotation<N>& r, double t);

extern template ElementaryFactorization<2> align_vectors(const Vec2&, const Vec2&);
extern template ElementaryFactorization<3> align_vectors(const Vec3&, const Vec3&);
extern template ElementaryFactorization<4> align_vectors(const Vec4&, const Vec4&);
extern template ElementaryFactorization<2> elementary_factorization(const Rotation2&);
extern template ElementaryFactorization<3> elementary_factorization(const Rotation3&);
extern template ElementaryFactorization<4> elementary_factorization(const Rotation4&);
extern template PlaneBlockForm<2> plane_block_form(const Rotation2&);
extern template PlaneBlockForm<3> plane_block_form(const Rotation3&);
extern template PlaneBlockForm<4> plane_block_form(const Rotation4&);
extern template Rotation2 rotation_path(const Rotation2&, double);
extern template Rotation3 rotation_path(const Rotation3&, double);
extern template Rotation4 rotation_path(const Rotation4&, double);

}  // namespace cliffsym
