#include "cubiczeta/dedekind.hpp"

#include <vector>

#include "cubiczeta/bernoulli.hpp"
#include "cubiczeta/errors.hpp"

namespace cz {

namespace {

long checked_degree(const std::array<long, 3>& r) {
  long mx = 0;
  for (long ri : r) {
    if (ri < 0) throw error("dedekind sum needs nonnegative degrees");
    mx = std::max(mx, ri);
  }
  return mx;
}

// value tables row by row: table[i][s] = ~B_{r_i}(s / det) for s in [0, |det|)
std::vector<std::vector<Rat>> build_tables(const Int& det, const std::array<long, 3>& r) {
  BernoulliTable bern(static_cast<unsigned>(checked_degree(r)));
  unsigned n = static_cast<unsigned>(Int(abs(det)).get_ui());
  std::vector<std::vector<Rat>> table(3);
  for (int i = 0; i < 3; ++i) {
    table[i].reserve(n);
    for (unsigned s = 0; s < n; ++s)
      table[i].push_back(bern.periodic(static_cast<unsigned>(r[i]), make_rat(Int(s), det)));
  }
  return table;
}

long fold(const Int& x, long n) {
  Int m = x % n;
  if (m < 0) m += n;
  return m.get_si();
}

}  // namespace

Rat dedekind_sum_direct(const IMat3& A, const std::array<long, 3>& r, uint64_t budget) {
  Int det = A.det();
  if (det == 0) throw singular_matrix("dedekind sum of a singular matrix");
  Int n = abs(det);
  if (n * n * n > budget)
    throw budget_exceeded("direct dedekind sum has " + int_str(n * n * n) + " terms");

  auto table = build_tables(det, r);
  IMat3 adj = A.adjugate();
  long nn = n.get_si();
  long step[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) step[i][j] = fold(adj[i][j], nn);

  Rat total(0);
  long s0[3] = {0, 0, 0};
  for (long k0 = 0; k0 < nn; ++k0) {
    long s1[3];
    for (int i = 0; i < 3; ++i) s1[i] = s0[i];
    for (long k1 = 0; k1 < nn; ++k1) {
      long s2[3];
      for (int i = 0; i < 3; ++i) s2[i] = s1[i];
      for (long k2 = 0; k2 < nn; ++k2) {
        total += table[0][s2[0]] * table[1][s2[1]] * table[2][s2[2]];
        for (int i = 0; i < 3; ++i)
          if ((s2[i] += step[i][2]) >= nn) s2[i] -= nn;
      }
      for (int i = 0; i < 3; ++i)
        if ((s1[i] += step[i][1]) >= nn) s1[i] -= nn;
    }
    for (int i = 0; i < 3; ++i)
      if ((s0[i] += step[i][0]) >= nn) s0[i] -= nn;
  }
  return total;
}

Rat dedekind_sum_reduced(const IMat3& A, const std::array<long, 3>& r, uint64_t budget) {
  Int det = A.det();
  if (det == 0) throw singular_matrix("dedekind sum of a singular matrix");
  Int n = abs(det);
  long nn = n.get_si();

  // image lattice L = adj(A) Z^3 + det Z^3, as columns
  IMat3 adj = A.adjugate();
  std::vector<Vec3<Int>> gens;
  for (int j = 0; j < 3; ++j) gens.push_back({adj[0][j], adj[1][j], adj[2][j]});
  for (int i = 0; i < 3; ++i) {
    Vec3<Int> e{Int(0), Int(0), Int(0)};
    e[i] = n;
    gens.push_back(e);
  }
  IMat3 hcol = hnf_rows(std::move(gens)).transpose();

  // det Z^3 = hcol K Z^3 with K integral; cosets of det Z^3 in L correspond
  // to Z^3 / K Z^3, enumerated through the Smith form of K
  Int hdet = hcol.det();
  IMat3 hadj = hcol.adjugate();
  IMat3 K;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Int num = n * hadj[i][j];
      if (!mpz_divisible_p(num.get_mpz_t(), hdet.get_mpz_t()))
        throw error("coset lattice is not integral");
      K[i][j] = num / hdet;
    }
  Snf3 smith = snf3(K);

  Int reps = smith.s[0] * smith.s[1] * smith.s[2];
  if (reps > budget)
    throw budget_exceeded("reduced dedekind sum has " + int_str(reps) + " cosets");
  Int mult = abs(hdet);
  if (reps * mult != n * n * n) throw error("coset count mismatch");

  // g = hcol U^{-1} t mod det, t ranging over the Smith boxes
  IMat3 uinv = smith.U.adjugate();
  if (smith.U.det() == -1)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) uinv[i][j] = -uinv[i][j];
  IMat3 G = hcol.mul(uinv);
  long step[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) step[i][j] = fold(G[i][j], nn);

  auto table = build_tables(det, r);
  long b0 = smith.s[0].get_si(), b1 = smith.s[1].get_si(), b2 = smith.s[2].get_si();

  Rat total(0);
  long s0[3] = {0, 0, 0};
  for (long t0 = 0; t0 < b0; ++t0) {
    long s1[3];
    for (int i = 0; i < 3; ++i) s1[i] = s0[i];
    for (long t1 = 0; t1 < b1; ++t1) {
      long s2[3];
      for (int i = 0; i < 3; ++i) s2[i] = s1[i];
      for (long t2 = 0; t2 < b2; ++t2) {
        total += table[0][s2[0]] * table[1][s2[1]] * table[2][s2[2]];
        for (int i = 0; i < 3; ++i)
          if ((s2[i] += step[i][2]) >= nn) s2[i] -= nn;
      }
      for (int i = 0; i < 3; ++i)
        if ((s1[i] += step[i][1]) >= nn) s1[i] -= nn;
    }
    for (int i = 0; i < 3; ++i)
      if ((s0[i] += step[i][0]) >= nn) s0[i] -= nn;
  }
  return total * Rat(mult);
}

}  // namespace cz
