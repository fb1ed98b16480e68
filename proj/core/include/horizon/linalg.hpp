#ifndef HORIZON_LINALG_HPP
#define HORIZON_LINALG_HPP

#include <array>
#include <cmath>

#include "horizon/errors.hpp"

// Dense linear algebra for dimensions up to 4, which is all a chartwise
// tensor computation ever needs. Fixed-capacity value types, no allocation.

namespace horizon {

inline constexpr int kMaxDim = 4;

struct Vec {
  int n = 0;
  std::array<double, kMaxDim> a{};

  Vec() = default;
  explicit Vec(int dim) : n(dim) {}
  Vec(std::initializer_list<double> xs) : n(static_cast<int>(xs.size())) {
    int i = 0;
    for (double x : xs) a[i++] = x;
  }

  double& operator[](int i) { return a[i]; }
  double operator[](int i) const { return a[i]; }
};

struct Mat {
  int n = 0;
  std::array<std::array<double, kMaxDim>, kMaxDim> a{};

  Mat() = default;
  explicit Mat(int dim) : n(dim) {}

  double& operator()(int i, int j) { return a[i][j]; }
  double operator()(int i, int j) const { return a[i][j]; }

  static Mat identity(int dim) {
    Mat m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }
};

/// Rank-3 array, used for Christoffel symbols Gamma^k_{ij} stored as [k][i][j].
struct Rank3 {
  int n = 0;
  double a[kMaxDim][kMaxDim][kMaxDim] = {};
  explicit Rank3(int dim = 0) : n(dim) {}
};

/// Rank-4 array, used for the lowered curvature tensor R_{ijkl} and for
/// Christoffel gradients d_l Gamma^k_{ij} stored as [l][k][i][j].
struct Rank4 {
  int n = 0;
  double a[kMaxDim][kMaxDim][kMaxDim][kMaxDim] = {};
  explicit Rank4(int dim = 0) : n(dim) {}
};

Vec operator+(const Vec& x, const Vec& y);
Vec operator-(const Vec& x, const Vec& y);
Vec operator*(double s, const Vec& x);
Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat operator*(double s, const Mat& x);

double dot(const Vec& x, const Vec& y);
/// Bilinear pairing x^i g_{ij} y^j.
double pair(const Mat& g, const Vec& x, const Vec& y);
Vec mat_vec(const Mat& m, const Vec& x);
Mat mat_mul(const Mat& x, const Mat& y);
Mat transpose(const Mat& m);

double det(const Mat& m);

/// Solves m x = b by LU with partial pivoting. Throws SingularMatrixError.
Vec solve(Mat m, Vec b);

/// Inverse by LU. Throws SingularMatrixError.
Mat invert(const Mat& m);

/// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Eigenvalues ascending; eigenvectors returned as the columns of `vectors`.
void sym_eigen(const Mat& m, Vec& values, Mat& vectors);

double frobenius_norm(const Mat& m);
double max_abs(const Mat& m);
double max_abs(const Vec& x);
double norm(const Vec& x);

}  // namespace horizon

#endif
