#include "cubiczeta/smallmat.hpp"

#include <algorithm>

namespace cz {

namespace {

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void row_sub(Vec3<Int>& r, const Vec3<Int>& s, const Int& q) {
  for (int j = 0; j < 3; ++j) r[j] -= q * s[j];
}

}  // namespace

IMat3 hnf_rows(std::vector<Vec3<Int>> rows) {
  size_t r = 0;
  for (int col = 0; col < 3 && r < rows.size(); ++col) {
    for (;;) {
      // smallest nonzero |entry| in this column at or below row r
      size_t best = rows.size();
      for (size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || cmp(abs(rows[i][col]), abs(rows[best][col])) < 0) best = i;
      }
      if (best == rows.size()) throw singular_matrix("rank-deficient lattice basis");
      std::swap(rows[r], rows[best]);
      bool clear = true;
      for (size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Int q = fdiv(rows[i][col], rows[r][col]);
        row_sub(rows[i], rows[r], q);
        if (rows[i][col] != 0) clear = false;
      }
      if (clear) break;
    }
    if (rows[r][col] < 0)
      for (int j = 0; j < 3; ++j) rows[r][j] = -rows[r][j];
    ++r;
  }
  if (r < 3) throw singular_matrix("rank-deficient lattice basis");
  // reduce entries above each pivot
  for (int col = 1; col < 3; ++col)
    for (int i = 0; i < col; ++i) {
      Int q = fdiv(rows[i][col], rows[col][col]);
      row_sub(rows[i], rows[col], q);
    }
  IMat3 H;
  for (int i = 0; i < 3; ++i) H[i] = rows[i];
  return H;
}

bool hnf_contains(const IMat3& H, const Vec3<Int>& v) {
  Vec3<Int> y = v;
  for (int j = 0; j < 3; ++j) {
    if (!mpz_divisible_p(y[j].get_mpz_t(), H[j][j].get_mpz_t())) return false;
    Int q = y[j] / H[j][j];
    row_sub(y, H[j], q);
  }
  return y[0] == 0 && y[1] == 0 && y[2] == 0;
}

Snf3 snf3(const IMat3& A) {
  IMat3 M = A;
  IMat3 U = IMat3::identity();
  IMat3 V = IMat3::identity();

  auto swap_rows = [&](int i, int j) {
    std::swap(M.a[i], M.a[j]);
    std::swap(U.a[i], U.a[j]);
  };
  auto swap_cols = [&](int i, int j) {
    for (int k = 0; k < 3; ++k) {
      std::swap(M.a[k][i], M.a[k][j]);
      std::swap(V.a[k][i], V.a[k][j]);
    }
  };
  auto row_op = [&](int dst, int src, const Int& q) {  // row dst -= q * row src
    for (int k = 0; k < 3; ++k) {
      M.a[dst][k] -= q * M.a[src][k];
      U.a[dst][k] -= q * U.a[src][k];
    }
  };
  auto col_op = [&](int dst, int src, const Int& q) {
    for (int k = 0; k < 3; ++k) {
      M.a[k][dst] -= q * M.a[k][src];
      V.a[k][dst] -= q * V.a[k][src];
    }
  };
  auto negate_row = [&](int i) {
    for (int k = 0; k < 3; ++k) {
      M.a[i][k] = -M.a[i][k];
      U.a[i][k] = -U.a[i][k];
    }
  };

  for (int t = 0; t < 3; ++t) {
    for (;;) {
      int bi = -1, bj = -1;
      for (int i = t; i < 3; ++i)
        for (int j = t; j < 3; ++j) {
          if (M[i][j] == 0) continue;
          if (bi < 0 || cmp(abs(M[i][j]), abs(M[bi][bj])) < 0) {
            bi = i;
            bj = j;
          }
        }
      if (bi < 0) throw singular_matrix("singular matrix in Smith reduction");
      if (bi != t) swap_rows(t, bi);
      if (bj != t) swap_cols(t, bj);
      if (M[t][t] < 0) negate_row(t);

      bool clear = true;
      for (int i = t + 1; i < 3; ++i)
        if (M[i][t] != 0) {
          row_op(i, t, fdiv(M[i][t], M[t][t]));
          if (M[i][t] != 0) clear = false;
        }
      for (int j = t + 1; j < 3; ++j)
        if (M[t][j] != 0) {
          col_op(j, t, fdiv(M[t][j], M[t][t]));
          if (M[t][j] != 0) clear = false;
        }
      if (!clear) continue;

      // pivot must divide the rest of the block
      bool divides = true;
      for (int i = t + 1; i < 3 && divides; ++i)
        for (int j = t + 1; j < 3 && divides; ++j)
          if (!mpz_divisible_p(M[i][j].get_mpz_t(), M[t][t].get_mpz_t())) {
            row_op(t, i, Int(-1));  // fold row i into row t and restart
            divides = false;
          }
      if (divides) break;
    }
  }

  Snf3 out;
  out.s = {M[0][0], M[1][1], M[2][2]};
  out.U = U;
  out.V = V;
  return out;
}

QMat3 inverse(const QMat3& A) {
  Rat d = A.det();
  if (d == 0) throw singular_matrix("matrix not invertible");
  QMat3 adj = A.adjugate();
  QMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      r[i][j] = adj[i][j] / d;
      r[i][j].canonicalize();
    }
  return r;
}

Vec3<Rat> solve3(const QMat3& A, const Vec3<Rat>& b) {
  Rat d = A.det();
  if (d == 0) throw singular_matrix("singular linear system");
  Vec3<Rat> x = A.adjugate().mul_vec(b);
  for (auto& c : x) {
    c /= d;
    c.canonicalize();
  }
  return x;
}

}  // namespace cz
