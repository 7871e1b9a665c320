#ifndef CUBICZETA_SMALLMAT_HPP
#define CUBICZETA_SMALLMAT_HPP

#include <array>
#include <vector>

#include "cubiczeta/errors.hpp"
#include "cubiczeta/rat.hpp"

namespace cz {

template <typename T>
using Vec3 = std::array<T, 3>;

template <typename T>
struct Mat3 {
  std::array<std::array<T, 3>, 3> a{};

  static Mat3 identity() {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.a[i][j] = T(i == j ? 1 : 0);
    return r;
  }

  std::array<T, 3>& operator[](size_t i) { return a[i]; }
  const std::array<T, 3>& operator[](size_t i) const { return a[i]; }

  T det() const {
    T d = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]);
    d = d - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]);
    d = d + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    return d;
  }

  // adj(A) with A * adj(A) = det(A) * I
  Mat3 adjugate() const {
    Mat3 r;
    r.a[0][0] = a[1][1] * a[2][2] - a[1][2] * a[2][1];
    r.a[0][1] = a[0][2] * a[2][1] - a[0][1] * a[2][2];
    r.a[0][2] = a[0][1] * a[1][2] - a[0][2] * a[1][1];
    r.a[1][0] = a[1][2] * a[2][0] - a[1][0] * a[2][2];
    r.a[1][1] = a[0][0] * a[2][2] - a[0][2] * a[2][0];
    r.a[1][2] = a[0][2] * a[1][0] - a[0][0] * a[1][2];
    r.a[2][0] = a[1][0] * a[2][1] - a[1][1] * a[2][0];
    r.a[2][1] = a[0][1] * a[2][0] - a[0][0] * a[2][1];
    r.a[2][2] = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    return r;
  }

  Mat3 transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.a[i][j] = a[j][i];
    return r;
  }

  Mat3 mul(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        T s = a[i][0] * o.a[0][j];
        s = s + a[i][1] * o.a[1][j];
        s = s + a[i][2] * o.a[2][j];
        r.a[i][j] = s;
      }
    return r;
  }

  Vec3<T> mul_vec(const Vec3<T>& v) const {
    Vec3<T> r;
    for (int i = 0; i < 3; ++i) {
      T s = a[i][0] * v[0];
      s = s + a[i][1] * v[1];
      s = s + a[i][2] * v[2];
      r[i] = s;
    }
    return r;
  }

  bool operator==(const Mat3& o) const { return a == o.a; }
};

using IMat3 = Mat3<Int>;
using QMat3 = Mat3<Rat>;

// Hermite normal form of the row span: upper triangular, positive diagonal,
// entries above a pivot reduced into [0, pivot).  Requires full rank 3.
IMat3 hnf_rows(std::vector<Vec3<Int>> rows);

// is v an integer combination of the rows of H (H from hnf_rows)?
bool hnf_contains(const IMat3& H, const Vec3<Int>& v);

// diag(S) = U * A * V with U, V unimodular and s1 | s2 | s3, all positive
struct Snf3 {
  Vec3<Int> s;
  IMat3 U, V;
};
Snf3 snf3(const IMat3& A);

QMat3 inverse(const QMat3& A);
Vec3<Rat> solve3(const QMat3& A, const Vec3<Rat>& b);

}  // namespace cz

#endif
