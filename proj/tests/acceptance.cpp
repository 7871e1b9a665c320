// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cubiczeta/criterion.hpp"
#include "cubiczeta/dedekind.hpp"
#include "cubiczeta/factor.hpp"
#include "cubiczeta/oracles.hpp"
#include "cubiczeta/partial_zeta.hpp"
#include "cubiczeta/siegel.hpp"

using namespace cz;

namespace {

int failures = 0;

void gate(int num, const char* name, const std::function<bool()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("[%s] %2d. %s  [%.1fs]%s\n", ok ? "PASS" : "FAIL", num, name, secs,
              note.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

Rat family_over(long m, long den) {
  Int M(m);
  Int p = M * (((((M + 3) * M - 5) * M - 15) * M + 4) * M + 12);
  return make_rat(p, Int(den));
}

Rat m1_display(long m) {
  Int M(m);
  Int p = ((((((((Int(4) * M + 54) * M + 304) * M + 979) * M + 2119) * M + 3234) * M +
             3327) *
                M +
            2067) *
               M +
           72) *
              M -
          714;
  return -Rat(p) / 2835;
}

Rat m2_display(long m) {
  Int M(m);
  Int p = ((((((((Int(4) * M + 54) * M + 304) * M + 985) * M + 2137) * M + 3204) * M +
             3237) *
                M +
            2091) *
               M +
           144) *
              M -
          714;
  return Rat(p) / 2835;
}

std::vector<CriterionReport> sweep_100;  // shared by gates 4 and 5

bool all_hnf_matrices_agree() {
  // every Hermite form with positive diagonal product <= 12, plus a
  // negated-row variant, against all degree triples r_i <= 4
  long checked = 0;
  for (long d1 = 1; d1 <= 12; ++d1)
    for (long d2 = 1; d1 * d2 <= 12; ++d2)
      for (long d3 = 1; d1 * d2 * d3 <= 12; ++d3)
        for (long b12 = 0; b12 < d2; ++b12)
          for (long b13 = 0; b13 < d3; ++b13)
            for (long b23 = 0; b23 < d3; ++b23) {
              IMat3 A;
              A[0] = {Int(d1), Int(b12), Int(b13)};
              A[1] = {Int(0), Int(d2), Int(b23)};
              A[2] = {Int(0), Int(0), Int(d3)};
              // dense variant with negative determinant: negate the top row,
              // then add the first two rows into the third
              IMat3 B = A;
              for (int j = 0; j < 3; ++j) B[0][j] = -A[0][j];
              for (int j = 0; j < 3; ++j) B[2][j] = A[2][j] + A[0][j] + A[1][j];
              for (long r1 = 0; r1 <= 4; ++r1)
                for (long r2 = 0; r2 <= 4; ++r2)
                  for (long r3 = 0; r3 <= 4; ++r3) {
                    std::array<long, 3> r{r1, r2, r3};
                    if (dedekind_sum_direct(A, r) != dedekind_sum_reduced(A, r))
                      return false;
                    if (dedekind_sum_direct(B, r) != dedekind_sum_reduced(B, r))
                      return false;
                    ++checked;
                  }
            }
  return checked > 0;
}

}  // namespace

int main() {
  gate(1, "closed form of zeta_K(2,P) for m = 4..8", [] {
    auto t0 = std::chrono::steady_clock::now();
    for (long m = 4; m <= 8; ++m) {
      FieldSpec spec(m);
      PartialZetaEngine eng(spec);
      if (eng.partial_zeta_2().q != family_over(m, 945)) return false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return secs < 600.0;
  });

  gate(2, "per-term lattice and boundary values for m = 4..8", [] {
    for (long m = 4; m <= 8; ++m) {
      FieldSpec spec(m);
      PartialZetaEngine eng(spec);
      if (eng.m_term(2, 1).q != m1_display(m)) return false;
      if (eng.m_term(2, 2).q != m2_display(m)) return false;
      if (eng.c_term(2, 1).q != make_rat(2, 45)) return false;
      if (eng.c_term(2, 2).q != make_rat(-2, 45)) return false;
    }
    return true;
  });

  gate(3, "divisor-sum value at m = 4 meets the partial closed form", [] {
    auto t0 = std::chrono::steady_clock::now();
    FieldSpec spec(4);
    SiegelReport rep = siegel_report(spec);
    bool ok = rep.elements.size() == 7 && rep.sigma_total == 42 &&
              rep.zeta_minus1 == make_rat(-2, 3) &&
              rep.zeta_minus1 == closed_form_partial_minus1(4);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return ok && secs < 10.0;
  });

  gate(4, "all-prime criterion over valid m <= 100 picks out {4,5,6,8}", [] {
    auto t0 = std::chrono::steady_clock::now();
    sweep_100 = criterion_sweep(4, 100);
    std::set<long> hit, skipped;
    for (const auto& rep : sweep_100) {
      if (!rep.failure.empty()) return false;
      if (rep.skipped) {
        skipped.insert(rep.m);
        continue;
      }
      if (rep.all_prime) hit.insert(rep.m);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return hit == std::set<long>{4, 5, 6, 8} &&
           skipped == std::set<long>{24, 73, 91} && secs < 300.0;
  });

  gate(5, "divisor-sum zeta never exceeds the partial zeta, m <= 100", [] {
    if (sweep_100.empty()) return false;
    for (const auto& rep : sweep_100) {
      if (rep.skipped) continue;
      if (!(rep.zeta_siegel <= rep.zeta_partial)) return false;
      if ((rep.zeta_siegel == rep.zeta_partial) != rep.all_prime) return false;
    }
    return true;
  });

  gate(6, "norm multisets match the index-set polynomial, m <= 100", [] {
    for (long m = 4; m <= 100; ++m) {
      Int d(2 * m - 5);
      if (f_st(m, 2, 3) != d * d) return false;
      if (!validate_m(m).ok()) continue;
      FieldSpec spec(m);
      if (!norm_multiset_check(spec)) return false;
      size_t want = static_cast<size_t>((m * m + m - 6) / 2);
      if (enumerate_S1(spec).size() != want || T_set(m).size() != want) return false;
    }
    return true;
  });

  gate(7, "primality pattern with the lone square at (2,3), m in {4,5,6,8}", [] {
    for (long m : {4L, 5L, 6L, 8L})
      if (!square_norm_exception_check(FieldSpec(m))) return false;
    return true;
  });

  gate(8, "reduced lattice sums equal brute force; odd degrees vanish", [] {
    if (!all_hnf_matrices_agree()) return false;
    for (long m = 4; m <= 8; ++m) {
      FieldSpec spec(m);
      PartialZetaEngine eng(spec);
      eng.zeta_sum(2);
      if (eng.parity_checks() == 0) return false;
    }
    return true;
  });

  gate(9, "euler product and analytic class number cross-checks", [] {
    for (long m : {4L, 5L, 6L, 8L}) {
      FieldSpec spec(m);
      EulerTruncation tr = euler_zeta2(spec, 1000000);
      if (2.0 * tr.value.rad_double() >= 1e-4) return false;
      Rat q = closed_form_partial_zeta2(m);
      Int d3 = spec.disc() * spec.disc() * spec.disc();
      RealBall exact = RealBall::from_rat(q, 128)
                           .mul(RealBall::pi(128).pow_si(6))
                           .div(RealBall::from_int(d3, 128).sqrt());
      if (!exact.inside(tr.value)) return false;
    }
    for (long m = 4; m <= 30; ++m) {
      if (!validate_m(m).ok()) continue;
      FieldSpec spec(m);
      long h = 0;
      for (uint64_t bound : {20000ULL, 50000ULL, 200000ULL, 1000000ULL}) {
        try {
          h = analytic_class_number(spec, bound).rounded;
          break;
        } catch (const inconclusive_estimate&) {
        }
      }
      bool expect_one = (m == 4 || m == 5 || m == 6 || m == 8);
      if (expect_one != (h == 1)) return false;
      if (!expect_one && h < 2) return false;
    }
    return true;
  });

  gate(10, "dual basis, codifferent generator, and labeling invariance", [] {
    for (long m : {4L, 5L, 6L, 8L, 10L}) {
      FieldSpec spec(m);
      auto dual = dual_basis(spec);
      FieldElem alpha = FieldElem::alpha(spec);
      std::array<FieldElem, 3> w{FieldElem::from_int(spec, 1), alpha, alpha * alpha};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if ((w[i] * dual[j]).trace() != Rat(i == j ? 1 : 0)) return false;
      if (!(codifferent_generator(spec) == dual[2])) return false;

      PartialZetaEngine plain(spec);
      PartialZetaEngine swapped(spec, Labeling{3, 2});
      for (const IMat3* EB : {&plain.matrices().EB1, &plain.matrices().EB2})
        if ((*EB)[0][0] != 0 || (*EB)[0][1] != 0 || (*EB)[0][2] != 1) return false;
      if (!(plain.zeta_sum(2) == swapped.zeta_sum(2))) return false;
    }
    return true;
  });

  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
