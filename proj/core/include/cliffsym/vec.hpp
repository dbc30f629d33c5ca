#pragma once

// Fixed-size vectors and square matrices for dimensions 2..4.
// All values are immutable-by-convention plain aggregates; every operation
// returns a fresh value.

#include <array>
#include <cmath>
#include <cstddef>

namespace cliffsym {

template <int N>
struct Vec {
  static_assert(N >= 2 && N <= 4, "supported dimensions are 2, 3, 4");

  std::array<double, N> c{};

  static constexpr int dim = N;

  constexpr double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  constexpr double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

  // Standard basis vector e_{i+1} (0-based i).
  static constexpr Vec axis(int i) {
    Vec v{};
    v[i] = 1.0;
    return v;
  }
};

using Vec2 = Vec<2>;
using Vec3 = Vec<3>;
using Vec4 = Vec<4>;

template <int N>
constexpr Vec<N> operator+(const Vec<N>& a, const Vec<N>& b) {
  Vec<N> r{};
  for (int i = 0; i < N; ++i) r[i] = a[i] + b[i];
  return r;
}

template <int N>
constexpr Vec<N> operator-(const Vec<N>& a, const Vec<N>& b) {
  Vec<N> r{};
  for (int i = 0; i < N; ++i) r[i] = a[i] - b[i];
  return r;
}

template <int N>
constexpr Vec<N> operator-(const Vec<N>& a) {
  Vec<N> r{};
  for (int i = 0; i < N; ++i) r[i] = -a[i];
  return r;
}

template <int N>
constexpr Vec<N> operator*(double s, const Vec<N>& a) {
  Vec<N> r{};
  for (int i = 0; i < N; ++i) r[i] = s * a[i];
  return r;
}

template <int N>
constexpr Vec<N> operator*(const Vec<N>& a, double s) {
  return s * a;
}

template <int N>
constexpr Vec<N> operator/(const Vec<N>& a, double s) {
  return (1.0 / s) * a;
}

template <int N>
constexpr double dot(const Vec<N>& a, const Vec<N>& b) {
  double s = 0.0;
  for (int i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}

template <int N>
constexpr double norm2(const Vec<N>& a) {
  return dot(a, a);
}

template <int N>
inline double norm(const Vec<N>& a) {
  return std::sqrt(norm2(a));
}

template <int N>
inline double distance(const Vec<N>& a, const Vec<N>& b) {
  return norm(a - b);
}

template <int N>
inline Vec<N> normalized(const Vec<N>& a) {
  return a / norm(a);
}

template <int N>
inline double max_abs_diff(const Vec<N>& a, const Vec<N>& b) {
  double m = 0.0;
  for (int i = 0; i < N; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Counterclockwise perpendicular in the plane.
inline constexpr Vec2 perp(const Vec2& a) { return Vec2{-a[1], a[0]}; }

inline constexpr double cross(const Vec2& a, const Vec2& b) {
  return a[0] * b[1] - a[1] * b[0];
}

// Row-major square matrix acting on column vectors from the left.
template <int N>
struct Mat {
  static_assert(N >= 2 && N <= 4, "supported dimensions are 2, 3, 4");

  std::array<double, N * N> a{};

  static constexpr int dim = N;

  constexpr double operator()(int i, int j) const {
    return a[static_cast<std::size_t>(i * N + j)];
  }
  constexpr double& operator()(int i, int j) {
    return a[static_cast<std::size_t>(i * N + j)];
  }

  static constexpr Mat identity() {
    Mat m{};
    for (int i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  constexpr Mat transposed() const {
    Mat t{};
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  constexpr Vec<N> row(int i) const {
    Vec<N> v{};
    for (int j = 0; j < N; ++j) v[j] = (*this)(i, j);
    return v;
  }

  constexpr Vec<N> col(int j) const {
    Vec<N> v{};
    for (int i = 0; i < N; ++i) v[i] = (*this)(i, j);
    return v;
  }

  constexpr void set_col(int j, const Vec<N>& v) {
    for (int i = 0; i < N; ++i) (*this)(i, j) = v[i];
  }
};

using Mat2 = Mat<2>;
using Mat3 = Mat<3>;
using Mat4 = Mat<4>;

template <int N>
constexpr Mat<N> operator*(const Mat<N>& a, const Mat<N>& b) {
  Mat<N> r{};
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k) {
      const double aik = a(i, k);
      for (int j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

template <int N>
constexpr Vec<N> operator*(const Mat<N>& m, const Vec<N>& v) {
  Vec<N> r{};
  for (int i = 0; i < N; ++i) {
    double s = 0.0;
    for (int j = 0; j < N; ++j) s += m(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

template <int N>
constexpr Mat<N> operator+(const Mat<N>& a, const Mat<N>& b) {
  Mat<N> r{};
  for (int i = 0; i < N * N; ++i) r.a[static_cast<std::size_t>(i)] = a.a[static_cast<std::size_t>(i)] + b.a[static_cast<std::size_t>(i)];
  return r;
}

template <int N>
constexpr Mat<N> operator-(const Mat<N>& a, const Mat<N>& b) {
  Mat<N> r{};
  for (int i = 0; i < N * N; ++i) r.a[static_cast<std::size_t>(i)] = a.a[static_cast<std::size_t>(i)] - b.a[static_cast<std::size_t>(i)];
  return r;
}

template <int N>
constexpr Mat<N> operator*(double s, const Mat<N>& a) {
  Mat<N> r{};
  for (int i = 0; i < N * N; ++i) r.a[static_cast<std::size_t>(i)] = s * a.a[static_cast<std::size_t>(i)];
  return r;
}

inline constexpr double determinant(const Mat2& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

inline constexpr double determinant(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

inline constexpr double determinant(const Mat4& m) {
  double det = 0.0;
  for (int j = 0; j < 4; ++j) {
    Mat3 minor{};
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int c = 0; c < 4; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    const double cofactor = ((j % 2) == 0 ? 1.0 : -1.0) * m(0, j) * determinant(minor);
    det += cofactor;
  }
  return det;
}

template <int N>
inline double max_abs(const Mat<N>& m) {
  double r = 0.0;
  for (double x : m.a) r = std::max(r, std::abs(x));
  return r;
}

template <int N>
inline double max_abs_diff(const Mat<N>& a, const Mat<N>& b) {
  return max_abs(a - b);
}

// Largest entry of M^T M - I; zero for an orthogonal matrix.
template <int N>
inline double orthogonality_defect(const Mat<N>& m) {
  return max_abs_diff(m.transposed() * m, Mat<N>::identity());
}

}  // namespace cliffsym
