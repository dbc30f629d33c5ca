#include "cliffsym/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace cliffsym {

namespace {

// Floor under which a plane's sine is treated as zero and the plane as part
// of the fixed space.
constexpr double kSinFloor = 1e-12;

template <int N>
Vec<N> column_prefix(const Mat<N>& m, int col, int upto) {
  Vec<N> v{};
  for (int i = 0; i < upto; ++i) v[i] = m(i, col);
  return v;
}

// Factors whose composition maps the unit axis e_m to the unit vector u,
// where u has support in the first m coordinates.  At most m - 1 factors:
// one Givens rotation per component, accumulated into coordinate m.
template <int N>
std::vector<ElementaryFactor> factors_axis_to(Vec<N> c, int m) {
  std::vector<ElementaryFactor> out;
  for (int k = m - 1; k >= 1; --k) {
    const double a = c[k - 1];
    const double b = c[m - 1];
    if (std::abs(a) < 1e-15 && b > 0.0) continue;
    const double delta = std::atan2(a, b);
    c[m - 1] = std::hypot(a, b);
    c[k - 1] = 0.0;
    out.push_back({k, m, -delta});
  }
  return out;
}

std::vector<ElementaryFactor> reversed_negated(const std::vector<ElementaryFactor>& fs) {
  std::vector<ElementaryFactor> out(fs.rbegin(), fs.rend());
  for (ElementaryFactor& f : out) f.angle = -f.angle;
  return out;
}

}  // namespace

ZyzAngles decompose_so3(const Rotation3& r) {
  const Vec3 u = r.matrix().col(2);  // image of e3
  const double s = std::hypot(u[0], u[1]);
  const double phi = std::atan2(s, u[2]);  // in [0, pi]
  const double psi = s > kDegenerateAngleTol ? std::atan2(-u[1], -u[0]) : 0.0;
  // The residual rotation fixes e3 and acts as a plane rotation on x,y.
  const Rotation3 rest = (rotation_z(psi) * rotation_y(phi)).inverse() * r;
  const double theta = std::atan2(rest.matrix()(1, 0), rest.matrix()(0, 0));
  return {theta + 0.0, phi + 0.0, psi + 0.0};  // + 0.0 drops negative zeros
}

Rotation3 zyz_rotation(const ZyzAngles& a) {
  return rotation_z(a.psi) * rotation_y(a.phi) * rotation_z(a.theta);
}

So4Decomposition decompose_so4(const Rotation4& r) {
  const Mat4& m = r.matrix();
  const double m41 = m(3, 0), m42 = m(3, 1), m43 = m(3, 2), m44 = m(3, 3);
  const double sp = std::hypot(m41, m42);  // sin(psi) >= 0
  const double cp = std::hypot(m43, m44);  // cos(psi) >= 0
  const double psi = std::atan2(sp, cp);  // in [0, pi/2]
  const double theta = sp > kDegenerateAngleTol ? std::atan2(-m42, m41) + 0.0 : 0.0;
  const double phi = cp > kDegenerateAngleTol ? std::atan2(m43, m44) + 0.0 : 0.0;

  const Rotation4 n = rotation_xw(psi) * rotation_zw(phi) * rotation_xy(theta);
  const Rotation4 r0 = r * n.inverse();

  double dev = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double want = i == 3 ? 1.0 : 0.0;
    dev = std::max(dev, std::abs(r0.matrix()(3, i) - want));
    dev = std::max(dev, std::abs(r0.matrix()(i, 3) - want));
  }
  if (dev > 1e-9) {
    throw geometry_error(errc::block_form_failure,
                         "residual factor does not fix e4 (deviation " + std::to_string(dev) +
                             "); decomposition is inconsistent");
  }
  return {r0, psi, phi, theta};
}

Rotation4 so4_rotation(const So4Decomposition& d) {
  return d.r0 * rotation_xw(d.psi) * rotation_zw(d.phi) * rotation_xy(d.theta);
}

template <int N>
ElementaryFactorization<N> align_vectors(const Vec<N>& v, const Vec<N>& w) {
  const double nv = norm(v);
  const double nw = norm(w);
  if (nv < 1e-12 || nw < 1e-12) {
    throw std::invalid_argument("align_vectors: zero vector");
  }
  if (std::abs(nv - nw) > 1e-9 * std::max(1.0, nv)) {
    throw std::invalid_argument("align_vectors: norms differ");
  }
  if (max_abs_diff(v, w) <= 1e-12 * std::max(1.0, nv)) {
    return {};
  }
  // Map v -> e_N -> w; inverting the first leg reverses and negates it.
  const std::vector<ElementaryFactor> to_v = factors_axis_to<N>(v / nv, N);
  const std::vector<ElementaryFactor> to_w = factors_axis_to<N>(w / nw, N);
  ElementaryFactorization<N> out;
  out.factors = to_w;
  const std::vector<ElementaryFactor> back = reversed_negated(to_v);
  out.factors.insert(out.factors.end(), back.begin(), back.end());
  return out;
}

template <int N>
ElementaryFactorization<N> elementary_factorization(const Rotation<N>& r) {
  ElementaryFactorization<N> out;
  Mat<N> m = r.matrix();
  for (int dim = N; dim >= 3; --dim) {
    const Vec<N> u = normalized(column_prefix(m, dim - 1, dim));
    const std::vector<ElementaryFactor> f = factors_axis_to<N>(u, dim);
    // Strip the factors off the front: m <- compose(f)^-1 * m, after which m
    // fixes e_dim and the recursion continues on the leading block.
    for (const ElementaryFactor& g : f) {
      m = elementary_rotation<N>(g.k, g.j, -g.angle).matrix() * m;
    }
    out.factors.insert(out.factors.end(), f.begin(), f.end());
  }
  const double theta = std::atan2(m(1, 0), m(0, 0));
  if (std::abs(theta) > 1e-15) {
    out.factors.push_back({1, 2, theta});
  }
  return out;
}

namespace {

// Plane cosines of the rotation with multiplicities, eigenvalue-1 planes
// included.  Two cosines closer than 1e-9 are merged.
template <int N>
std::vector<std::pair<double, int>> plane_cosines(const Mat<N>& m) {
  const auto clamp1 = [](double x) { return std::clamp(x, -1.0, 1.0); };
  if constexpr (N == 2) {
    return {{clamp1(0.5 * (m(0, 0) + m(1, 1))), 1}};
  } else if constexpr (N == 3) {
    const double tr = m(0, 0) + m(1, 1) + m(2, 2);
    return {{clamp1(0.5 * (tr - 1.0)), 1}};
  } else {
    // The four unit eigenvalues come in conjugate pairs, so the cosines are
    // the roots of 4x^2 - 2 tr x + (c2 - 2) with c2 the sum of 2x2 principal
    // minors.
    const double tr = m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3);
    double c2 = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) c2 += m(i, i) * m(j, j) - m(i, j) * m(j, i);
    const double q = c2 - 2.0;
    const double disc = std::max(0.0, tr * tr - 4.0 * q);
    const double root = std::sqrt(disc);
    const double x1 = clamp1(0.25 * (tr + root));
    const double x2 = clamp1(0.25 * (tr - root));
    if (std::abs(x1 - x2) < 1e-9) return {{clamp1(0.5 * (x1 + x2)), 2}};
    return {{x1, 1}, {x2, 1}};
  }
}

template <int N>
void orthonormalize(std::vector<Vec<N>>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) vs[i] = vs[i] - dot(vs[i], vs[j]) * vs[j];
    vs[i] = normalized(vs[i]);
  }
}

// Orthonormal basis of the nullspace of a, which is known to have the given
// nullity; full-pivot elimination, then back substitution per free column.
template <int N>
std::vector<Vec<N>> nullspace(Mat<N> a, int nullity) {
  std::array<int, N> colp{};
  for (int j = 0; j < N; ++j) colp[static_cast<std::size_t>(j)] = j;
  int rank = N - nullity;
  for (int step = 0; step < rank; ++step) {
    int pi = step, pj = step;
    double best = -1.0;
    for (int i = step; i < N; ++i)
      for (int j = step; j < N; ++j)
        if (std::abs(a(i, j)) > best) {
          best = std::abs(a(i, j));
          pi = i;
          pj = j;
        }
    if (best < 1e-13) {
      rank = step;  // flatter than expected; everything left is nullspace
      break;
    }
    for (int j = 0; j < N; ++j) std::swap(a(step, j), a(pi, j));
    for (int i = 0; i < N; ++i) std::swap(a(i, step), a(i, pj));
    std::swap(colp[static_cast<std::size_t>(step)], colp[static_cast<std::size_t>(pj)]);
    const double piv = a(step, step);
    for (int i = step + 1; i < N; ++i) {
      const double f = a(i, step) / piv;
      for (int j = step; j < N; ++j) a(i, j) -= f * a(step, j);
    }
  }
  std::vector<Vec<N>> basis;
  for (int free = rank; free < N; ++free) {
    std::array<double, N> x{};
    x[static_cast<std::size_t>(free)] = 1.0;
    for (int i = rank - 1; i >= 0; --i) {
      double s = a(i, free);
      for (int j = i + 1; j < rank; ++j) s += a(i, j) * x[static_cast<std::size_t>(j)];
      x[static_cast<std::size_t>(i)] = -s / a(i, i);
    }
    Vec<N> v{};
    for (int j = 0; j < N; ++j) v[colp[static_cast<std::size_t>(j)]] = x[static_cast<std::size_t>(j)];
    basis.push_back(v);
  }
  orthonormalize(basis);
  return basis;
}

template <int N>
Vec<N> project_onto_span(const std::vector<Vec<N>>& span, const Vec<N>& v) {
  Vec<N> r{};
  for (const Vec<N>& b : span) r = r + dot(v, b) * b;
  return r;
}

}  // namespace

template <int N>
PlaneBlockForm<N> plane_block_form(const Rotation<N>& r) {
  const Mat<N>& m = r.matrix();
  const Mat<N> mt = m.transposed();
  const Mat<N> sym = 0.5 * (m + mt);
  const Mat<N> skew = 0.5 * (m - mt);
  const Mat<N> gram = (-1.0) * (skew * skew);  // PSD; sin^2 on each rotating plane

  struct Pair {
    Vec<N> b1, b2;
    double angle;
  };
  std::vector<Vec<N>> fixed_cols;
  std::vector<Pair> pairs;

  for (const auto& [c, mult] : plane_cosines(m)) {
    int space_dim = 2 * mult;
    if constexpr (N == 3) {
      if (c >= 1.0 - 1e-9) space_dim = 3;  // fixed axis merges with the plane
    }
    std::vector<Vec<N>> rest;
    if constexpr (N == 3) {
      if (space_dim < 3 && c < 1.0 - 1e-9) {
        // the odd fixed axis lives in its own eigenspace of the symmetric part
        auto axis = nullspace<N>(sym - Mat<N>::identity(), 1);
        fixed_cols.insert(fixed_cols.end(), axis.begin(), axis.end());
      }
    }
    {
      Mat<N> shifted = sym;
      for (int i = 0; i < N; ++i) shifted(i, i) -= c;
      rest = space_dim == N ? std::vector<Vec<N>>() : nullspace<N>(shifted, space_dim);
      if (space_dim == N) {
        for (int i = 0; i < N; ++i) rest.push_back(Vec<N>::axis(i));
      }
    }

    // Peel rotating planes: the top eigenvector of the skew Gram matrix
    // restricted to the eigenspace lies in the plane of largest |sin|.
    while (rest.size() >= 2) {
      Vec<N> v{};
      double best = -1.0;
      for (const Vec<N>& b : rest) {
        const Vec<N> img = project_onto_span(rest, gram * b);
        if (norm(img) > best) {
          best = norm(img);
          v = b;
        }
      }
      if (best < kSinFloor * kSinFloor) break;
      for (int it = 0; it < 100; ++it) {
        v = normalized(project_onto_span(rest, gram * v));
      }
      const double c_loc = dot(v, m * v);
      const Vec<N> w = m * v - c_loc * v;
      const double sn = norm(w);
      if (sn < kSinFloor) break;
      const Vec<N> b2 = w / sn;
      pairs.push_back({v, b2, std::atan2(sn, c_loc)});
      // remove the plane from the working span
      std::vector<Vec<N>> next;
      for (const Vec<N>& b : rest) {
        Vec<N> res = b - dot(b, v) * v - dot(b, b2) * b2;
        for (const Vec<N>& n : next) res = res - dot(res, n) * n;
        if (norm(res) > 1e-6) next.push_back(normalized(res));
      }
      rest = std::move(next);
    }

    // Whatever is left rotates by 0 or pi.
    for (std::size_t i = 0; i < rest.size(); ++i) {
      const double c_loc = dot(rest[i], m * rest[i]);
      if (c_loc < 0.0) {
        if (i + 1 >= rest.size()) {
          throw geometry_error(errc::block_form_failure, "unpaired flip direction");
        }
        pairs.push_back({rest[i], rest[i + 1], M_PI});
        ++i;
      } else {
        fixed_cols.push_back(rest[i]);
      }
    }
  }

  std::vector<Vec<N>> cols = fixed_cols;
  std::vector<double> angles;
  for (const Pair& p : pairs) {
    cols.push_back(p.b1);
    cols.push_back(p.b2);
    angles.push_back(p.angle);
  }
  if (static_cast<int>(cols.size()) != N) {
    throw geometry_error(errc::block_form_failure, "invariant planes do not span the space");
  }
  orthonormalize(cols);

  Mat<N> basis{};
  for (int j = 0; j < N; ++j) basis.set_col(j, cols[static_cast<std::size_t>(j)]);
  const int k = static_cast<int>(fixed_cols.size());

  if (determinant(basis) < 0.0) {
    // Restore orientation without disturbing the block structure: negate a
    // fixed column if there is one, else the second column of a pi block,
    // else flip the last plane and the sign of its angle.
    if (k > 0) {
      basis.set_col(0, -basis.col(0));
    } else {
      int pi_block = -1;
      for (std::size_t b = 0; b < angles.size(); ++b) {
        if (angles[b] > M_PI - 1e-12) pi_block = static_cast<int>(b);
      }
      const int b = pi_block >= 0 ? pi_block : static_cast<int>(angles.size()) - 1;
      const int col = k + 2 * b + 1;
      basis.set_col(col, -basis.col(col));
      if (pi_block < 0) angles[static_cast<std::size_t>(b)] = -angles[static_cast<std::size_t>(b)];
    }
  }

  PlaneBlockForm<N> out{Rotation<N>::validate(basis, 1e-9), k, angles};
  const Mat<N> recon = basis.transposed() * m * basis;
  if (max_abs_diff(recon, out.block_matrix()) > 1e-6) {
    throw geometry_error(errc::block_form_failure, "block reconstruction residual too large");
  }
  return out;
}

template <int N>
Rotation<N> rotation_path(const Rotation<N>& r, double t) {
  PlaneBlockForm<N> f = plane_block_form(r);
  for (double& a : f.angles) a *= t;
  const Mat<N> b = f.basis.matrix();
  return Rotation<N>::unchecked(b * f.block_matrix() * b.transposed());
}

template ElementaryFactorization<2> align_vectors(const Vec2&, const Vec2&);
template ElementaryFactorization<3> align_vectors(const Vec3&, const Vec3&);
template ElementaryFactorization<4> align_vectors(const Vec4&, const Vec4&);
template ElementaryFactorization<2> elementary_factorization(const Rotation2&);
template ElementaryFactorization<3> elementary_factorization(const Rotation3&);
template ElementaryFactorization<4> elementary_factorization(const Rotation4&);
template PlaneBlockForm<2> plane_block_form(const Rotation2&);
template PlaneBlockForm<3> plane_block_form(const Rotation3&);
template PlaneBlockForm<4> plane_block_form(const Rotation4&);
template Rotation2 rotation_path(const Rotation2&, double);
template Rotation3 rotation_path(const Rotation3&, double);
template Rotation4 rotation_path(const Rotation4&, double);

}  // namespace cliffsym
