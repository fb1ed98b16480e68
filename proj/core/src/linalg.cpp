#include "horizon/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace horizon {

Vec operator+(const Vec& x, const Vec& y) {
  Vec r(x.n);
  for (int i = 0; i < x.n; ++i) r[i] = x[i] + y[i];
  return r;
}

Vec operator-(const Vec& x, const Vec& y) {
  Vec r(x.n);
  for (int i = 0; i < x.n; ++i) r[i] = x[i] - y[i];
  return r;
}

Vec operator*(double s, const Vec& x) {
  Vec r(x.n);
  for (int i = 0; i < x.n; ++i) r[i] = s * x[i];
  return r;
}

Mat operator+(const Mat& x, const Mat& y) {
  Mat r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) r(i, j) = x(i, j) + y(i, j);
  return r;
}

Mat operator-(const Mat& x, const Mat& y) {
  Mat r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) r(i, j) = x(i, j) - y(i, j);
  return r;
}

Mat operator*(double s, const Mat& x) {
  Mat r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) r(i, j) = s * x(i, j);
  return r;
}

double dot(const Vec& x, const Vec& y) {
  double s = 0.0;
  for (int i = 0; i < x.n; ++i) s += x[i] * y[i];
  return s;
}

double pair(const Mat& g, const Vec& x, const Vec& y) {
  double s = 0.0;
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) s += x[i] * g(i, j) * y[j];
  return s;
}

Vec mat_vec(const Mat& m, const Vec& x) {
  Vec r(m.n);
  for (int i = 0; i < m.n; ++i) {
    double s = 0.0;
    for (int j = 0; j < m.n; ++j) s += m(i, j) * x[j];
    r[i] = s;
  }
  return r;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  Mat r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      double s = 0.0;
      for (int k = 0; k < x.n; ++k) s += x(i, k) * y(k, j);
      r(i, j) = s;
    }
  return r;
}

Mat transpose(const Mat& m) {
  Mat r(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) r(i, j) = m(j, i);
  return r;
}

namespace {

// LU factorization with partial pivoting, in place. Returns the permutation.
// Throws if a pivot is exactly zero or not finite.
std::array<int, kMaxDim> lu_factor(Mat& m) {
  std::array<int, kMaxDim> perm{};
  const int n = m.n;
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(m(r, col)) > std::fabs(m(piv, col))) piv = r;
    if (piv != col) {
      std::swap(m.a[piv], m.a[col]);
      std::swap(perm[piv], perm[col]);
    }
    const double d = m(col, col);
    if (d == 0.0 || !std::isfinite(d))
      throw SingularMatrixError("singular matrix in LU factorization");
    for (int r = col + 1; r < n; ++r) {
      const double f = m(r, col) / d;
      m(r, col) = f;
      for (int c = col + 1; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return perm;
}

Vec lu_solve(const Mat& lu, const std::array<int, kMaxDim>& perm, const Vec& b) {
  const int n = lu.n;
  Vec x(n);
  for (int i = 0; i < n; ++i) x[i] = b[perm[i]];
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) x[i] -= lu(i, j) * x[j];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) x[i] -= lu(i, j) * x[j];
    x[i] /= lu(i, i);
  }
  return x;
}

}  // namespace

double det(const Mat& m) {
  Mat lu = m;
  double sign = 1.0;
  const int n = m.n;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(lu(r, col)) > std::fabs(lu(piv, col))) piv = r;
    if (piv != col) {
      std::swap(lu.a[piv], lu.a[col]);
      sign = -sign;
    }
    const double d = lu(col, col);
    if (d == 0.0) return 0.0;
    for (int r = col + 1; r < n; ++r) {
      const double f = lu(r, col) / d;
      for (int c = col + 1; c < n; ++c) lu(r, c) -= f * lu(col, c);
    }
  }
  double p = sign;
  for (int i = 0; i < n; ++i) p *= lu(i, i);
  return p;
}

Vec solve(Mat m, Vec b) {
  const auto perm = lu_factor(m);
  return lu_solve(m, perm, b);
}

Mat invert(const Mat& m) {
  Mat lu = m;
  const auto perm = lu_factor(lu);
  Mat inv(m.n);
  for (int col = 0; col < m.n; ++col) {
    Vec e(m.n);
    e[col] = 1.0;
    Vec x = lu_solve(lu, perm, e);
    for (int r = 0; r < m.n; ++r) inv(r, col) = x[r];
  }
  return inv;
}

void sym_eigen(const Mat& m, Vec& values, Mat& vectors) {
  const int n = m.n;
  Mat a = m;
  Mat v = Mat::identity(n);
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-300) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }
  values = Vec(n);
  for (int i = 0; i < n; ++i) values[i] = a(i, i);
  // Sort ascending, permuting eigenvector columns along.
  for (int i = 0; i < n; ++i) {
    int lo = i;
    for (int j = i + 1; j < n; ++j)
      if (values[j] < values[lo]) lo = j;
    if (lo != i) {
      std::swap(values.a[i], values.a[lo]);
      for (int k = 0; k < n; ++k) std::swap(v.a[k][i], v.a[k][lo]);
    }
  }
  vectors = v;
}

double frobenius_norm(const Mat& m) {
  double s = 0.0;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) s += m(i, j) * m(i, j);
  return std::sqrt(s);
}

double max_abs(const Mat& m) {
  double s = 0.0;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) s = std::max(s, std::fabs(m(i, j)));
  return s;
}

double max_abs(const Vec& x) {
  double s = 0.0;
  for (int i = 0; i < x.n; ++i) s = std::max(s, std::fabs(x[i]));
  return s;
}

double norm(const Vec& x) { return std::sqrt(dot(x, x)); }

}  // namespace horizon
