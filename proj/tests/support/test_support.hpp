#pragma once

// Shared helpers for the test suites: seeded generators, independent
// geometric oracles (circle/sphere fits, section samplers), and a small
// dense solver used only by the oracles.

#include <array>
#include <random>
#include <vector>

#include "cliffsym/rotation.hpp"
#include "cliffsym/stereographic.hpp"
#include "cliffsym/vec.hpp"

namespace testsupport {

using cliffsym::Mat;
using cliffsym::Vec;
using cliffsym::Vec2;
using cliffsym::Vec3;
using cliffsym::Vec4;

using Rng = std::mt19937_64;

template <int N>
Vec<N> random_vec(Rng& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Vec<N> v{};
  for (int i = 0; i < N; ++i) v[i] = u(rng);
  return v;
}

template <int N>
Vec<N> random_unit(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec<N> v{};
  double n = 0.0;
  while (n < 1e-6) {
    for (int i = 0; i < N; ++i) v[i] = g(rng);
    n = cliffsym::norm(v);
  }
  return v / n;
}

// Solves the K x K system a x = b by Gaussian elimination with partial
// pivoting; the oracle systems here are tiny and well conditioned.
template <int K>
std::array<double, K> solve_dense(std::array<std::array<double, K>, K> a,
                                  std::array<double, K> b) {
  for (int col = 0; col < K; ++col) {
    int piv = col;
    for (int r = col + 1; r < K; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (int r = col + 1; r < K; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < K; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::array<double, K> x{};
  for (int r = K - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < K; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return x;
}

// Algebraic (Kasa) circle/sphere fit: linear least squares for the center
// and radius; exact when the points lie exactly on a sphere.
template <int N>
struct SphereFit {
  Vec<N> center;
  double radius;
};

template <int N>
SphereFit<N> fit_sphere(const std::vector<Vec<N>>& pts) {
  constexpr int K = N + 1;
  std::array<std::array<double, K>, K> ata{};
  std::array<double, K> atb{};
  for (const Vec<N>& p : pts) {
    std::array<double, K> row{};
    for (int i = 0; i < N; ++i) row[i] = 2.0 * p[i];
    row[N] = 1.0;
    const double rhs = cliffsym::norm2(p);
    for (int i = 0; i < K; ++i) {
      for (int j = 0; j < K; ++j) ata[i][j] += row[i] * row[j];
      atb[i] += row[i] * rhs;
    }
  }
  const std::array<double, K> x = solve_dense<K>(ata, atb);
  SphereFit<N> fit{};
  for (int i = 0; i < N; ++i) fit.center[i] = x[i];
  fit.radius = std::sqrt(x[N] + cliffsym::norm2(fit.center));
  return fit;
}

inline Vec2 circumcenter(const Vec2& p1, const Vec2& p2, const Vec2& p3) {
  const std::array<std::array<double, 2>, 2> a{{{2.0 * (p2[0] - p1[0]), 2.0 * (p2[1] - p1[1])},
                                                {2.0 * (p3[0] - p1[0]), 2.0 * (p3[1] - p1[1])}}};
  const std::array<double, 2> b{cliffsym::norm2(p2) - cliffsym::norm2(p1),
                                cliffsym::norm2(p3) - cliffsym::norm2(p1)};
  const std::array<double, 2> x = solve_dense<2>(a, b);
  return {x[0], x[1]};
}

// Orthonormal basis of the complement of a unit vector.
template <int N>
std::vector<Vec<N>> complement_basis(const Vec<N>& unit) {
  std::vector<Vec<N>> basis{unit};
  for (int i = 0; i < N && static_cast<int>(basis.size()) < N; ++i) {
    Vec<N> cand = Vec<N>::axis(i);
    for (const Vec<N>& b : basis) cand = cand - cliffsym::dot(cand, b) * b;
    if (cliffsym::norm(cand) > 1e-3) basis.push_back(cliffsym::normalized(cand));
  }
  basis.erase(basis.begin());
  return basis;
}

// Random point of the section of the unit sphere S^{N-1} cut by the
// affine hyperplane {n . x = e}; requires a nontrivial section.
template <int N>
Vec<N> random_section_point(const Vec<N>& normal, double offset, Rng& rng) {
  const Vec<N> unit = cliffsym::normalized(normal);
  const double e = offset / cliffsym::norm(normal);
  const double rho = std::sqrt(1.0 - e * e);
  const std::vector<Vec<N>> basis = complement_basis(unit);
  Vec<N - 1> dir{};
  {
    std::normal_distribution<double> g(0.0, 1.0);
    double n = 0.0;
    while (n < 1e-6) {
      for (int i = 0; i + 1 < N; ++i) dir[i] = g(rng);
      n = cliffsym::norm(dir);
    }
    dir = dir / n;
  }
  Vec<N> p = e * unit;
  for (int i = 0; i + 1 < N; ++i) p = p + rho * dir[i] * basis[static_cast<std::size_t>(i)];
  return p;
}

// Uniformly spread points of the circle cut from S^2 by the plane
// {n . x = e}, |e| < 1.
inline std::vector<Vec3> circle_on_sphere(const Vec3& normal, double offset, int count) {
  const Vec3 unit = cliffsym::normalized(normal);
  const double e = offset / cliffsym::norm(normal);
  const double rho = std::sqrt(1.0 - e * e);
  const std::vector<Vec3> basis = complement_basis(unit);
  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double t = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(count);
    pts.push_back(e * unit + rho * std::cos(t) * basis[0] + rho * std::sin(t) * basis[1]);
  }
  return pts;
}

}  // namespace testsupport
