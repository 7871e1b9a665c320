#include "doctest.h"

#include <random>

#include "cubiczeta/factor.hpp"
#include "cubiczeta/ideal.hpp"

using namespace cz;

TEST_CASE("prime splitting at small primes, m = 4") {
  FieldSpec k(4);

  auto d3 = decompose_prime(k, Int(3));
  REQUIRE(d3.size() == 2);
  CHECK(d3[0].f == 1);
  CHECK(d3[0].e == 1);
  CHECK(d3[1].f == 2);
  CHECK(d3[1].e == 1);
  CHECK(d3[0].norm() == 3);
  CHECK(d3[1].norm() == 9);

  auto d5 = decompose_prime(k, Int(5));
  REQUIRE(d5.size() == 2);
  CHECK(d5[0].f == 1);
  CHECK(d5[1].f == 2);

  // the discriminant prime ramifies
  auto d257 = decompose_prime(k, Int(257));
  unsigned total = 0;
  bool ramified = false;
  for (const auto& P : d257) {
    total += P.e * P.f;
    if (P.e >= 2) ramified = true;
  }
  CHECK(total == 3);
  CHECK(ramified);
}

TEST_CASE("splitting degrees always sum to 3") {
  long bad_total = 0, bad_ramified = 0;
  for (long m = 4; m <= 100; ++m) {
    FieldSpec k(m);
    if (!k.valid()) continue;
    for (uint64_t p : primes_up_to(1000)) {
      auto sh = splitting_type(k, Int((unsigned long)p));
      unsigned total = 0;
      for (auto [e, f] : sh) total += e * f;
      if (total != 3) ++bad_total;
      if (!mpz_divisible_ui_p(k.disc().get_mpz_t(), p)) {
        for (auto [e, f] : sh)
          if (e != 1) ++bad_ramified;
      }
    }
  }
  CHECK(bad_total == 0);
  CHECK(bad_ramified == 0);
}

TEST_CASE("splitting_type agrees with full decomposition") {
  FieldSpec k(10);
  for (uint64_t p : primes_up_to(200)) {
    auto full = decompose_prime(k, Int((unsigned long)p));
    auto fast = splitting_type(k, Int((unsigned long)p));
    REQUIRE(full.size() == fast.size());
    // same multiset of (e, f)
    std::vector<std::pair<unsigned, unsigned>> a, b;
    for (const auto& P : full) a.emplace_back(P.e, P.f);
    b = fast;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("prime ideal lattices have the right index") {
  for (long m : {4L, 5L, 10L}) {
    FieldSpec k(m);
    for (uint64_t p : primes_up_to(60)) {
      for (const auto& P : decompose_prime(k, Int((unsigned long)p))) {
        CHECK(abs(P.lattice.det()) == P.norm());
        // closed under multiplication by alpha
        FieldElem a = FieldElem::alpha(k);
        for (int i = 0; i < 3; ++i) {
          FieldElem row(k, Rat(P.lattice[i][0]), Rat(P.lattice[i][1]), Rat(P.lattice[i][2]));
          FieldElem ra = row * a;
          Vec3<Int> v{ra.coord(0).get_num(), ra.coord(1).get_num(), ra.coord(2).get_num()};
          CHECK(hnf_contains(P.lattice, v));
        }
      }
    }
  }
}

TEST_CASE("different generator") {
  FieldSpec k4(4);
  FieldElem d4 = different_generator(k4);
  CHECK(d4.coord(0) == -5);
  CHECK(d4.coord(1) == -8);
  CHECK(d4.coord(2) == 3);
  CHECK(abs(d4.norm()) == 257);

  FieldSpec k5(5);
  FieldElem d5 = different_generator(k5);
  CHECK(d5.coord(0) == -6);
  CHECK(d5.coord(1) == -10);
  CHECK(abs(d5.norm()) == 697);

  // |N(f'(alpha))| equals the discriminant for the whole family
  for (long m = 4; m <= 60; ++m) {
    FieldSpec k(m);
    CHECK(abs(different_generator(k).norm().get_num()) == k.disc());
    CHECK(different_generator(k).norm() == -Rat(k.disc()));
  }
}

TEST_CASE("codifferent spans the inverse different") {
  // f'(alpha) * w~j must be integral with unit-index lattice
  for (long m : {4L, 5L, 6L, 10L, 17L}) {
    FieldSpec k(m);
    FieldElem d = different_generator(k);
    auto dual = dual_basis(k);
    std::vector<Vec3<Int>> rows;
    for (const auto& w : dual) {
      FieldElem x = d * w;
      for (int i = 0; i < 3; ++i) REQUIRE(rat_is_integer(x.coord(i)));
      rows.push_back({x.coord(0).get_num(), x.coord(1).get_num(), x.coord(2).get_num()});
    }
    IMat3 H = hnf_rows(std::move(rows));
    CHECK(H == IMat3::identity());
  }
}

TEST_CASE("valuations") {
  FieldSpec k(4);
  FieldElem a = FieldElem::alpha(k);
  for (uint64_t pl : {3ULL, 5ULL, 257ULL}) {
    Int p((unsigned long)pl);
    auto dec = decompose_prime(k, p);
    FieldElem pe = FieldElem::from_int(k, pl);
    for (const auto& P : dec) {
      CHECK(valuation(pe, P) == P.e);
      CHECK(valuation(a, P) == 0);  // unit
    }
  }

  // norm-9 point: nu has dual-basis coordinates (1, 1, 7); nu * f'(alpha) = -2 - 3a + a^2
  FieldElem mu(k, make_rat(-2, 1), make_rat(-3, 1), make_rat(1, 1));
  CHECK(abs(mu.norm()) == 9);
  auto d3 = decompose_prime(k, Int(3));
  REQUIRE(d3[1].f == 2);
  CHECK(valuation(mu, d3[1]) == 1);
  CHECK(valuation(mu, d3[0]) == 0);
}

TEST_CASE("principal ideal factorization") {
  FieldSpec k(4);
  FieldElem a = FieldElem::alpha(k);

  auto unit = factor_principal(k, a);
  CHECK(unit.factors.empty());
  CHECK(unit.norm == 1);

  // N(1 + 3a) = -5: a single degree-1 prime above 5
  FieldElem e5(k, make_rat(1, 1), make_rat(3, 1), make_rat(0, 1));
  CHECK(e5.norm() == -5);
  auto f5 = factor_principal(k, e5);
  REQUIRE(f5.factors.size() == 1);
  CHECK(f5.factors[0].first.f == 1);
  CHECK(f5.factors[0].second == 1);
  CHECK(sigma1(f5) == 6);
  CHECK(is_prime_ideal(f5));

  // N(a - 3) = 25 and a - 3 lies in the degree-1 prime, so (a - 3) is its square
  FieldElem e25 = a - FieldElem::from_int(k, 3);
  CHECK(e25.norm() == 25);
  auto f25 = factor_principal(k, e25);
  REQUIRE(f25.factors.size() == 1);
  CHECK(f25.factors[0].first.f == 1);
  CHECK(f25.factors[0].second == 2);
  CHECK(sigma1(f25) == 31);
  CHECK_FALSE(is_prime_ideal(f25));

  // norm-9 point factors as a single degree-2 prime
  FieldElem mu9(k, make_rat(-2, 1), make_rat(-3, 1), make_rat(1, 1));
  auto f9 = factor_principal(k, mu9);
  REQUIRE(f9.factors.size() == 1);
  CHECK(f9.factors[0].first.f == 2);
  CHECK(f9.factors[0].second == 1);
  CHECK(f9.norm == 9);
  CHECK(sigma1(f9) == 10);
  CHECK(is_prime_ideal(f9));

  // powers and products
  FieldElem x = a * a + FieldElem::from_int(k, 2);  // some integral element
  auto fx = factor_principal(k, x);
  Int reconstructed = 1;
  for (const auto& [P, v] : fx.factors)
    for (unsigned i = 0; i < v; ++i) reconstructed *= P.norm();
  CHECK(reconstructed == fx.norm);
}

TEST_CASE("norm multiplicativity of principal factorizations") {
  FieldSpec k(5);
  PrimeDecompositionCache cache(k);
  std::mt19937 rng(4242);
  std::uniform_int_distribution<long> d(-5, 5);
  int done = 0;
  for (int t = 0; t < 60 && done < 25; ++t) {
    FieldElem x(k, make_rat(d(rng), 1), make_rat(d(rng), 1), make_rat(d(rng), 1));
    FieldElem y(k, make_rat(d(rng), 1), make_rat(d(rng), 1), make_rat(d(rng), 1));
    if (x.is_zero() || y.is_zero()) continue;
    auto fx = factor_principal(k, x, &cache);
    auto fy = factor_principal(k, y, &cache);
    auto fxy = factor_principal(k, x * y, &cache);
    CHECK(fxy.norm == fx.norm * fy.norm);
    ++done;
  }
  CHECK(done == 25);
}

TEST_CASE("sigma1 multiplicativity and the prime test") {
  FieldSpec k(4);
  PrimeDecompositionCache cache(k);
  // sigma1 of P1 * P2 with norms 3 and 5: (1+3)(1+5) if the element splits that way
  FieldElem mu9(k, make_rat(-2, 1), make_rat(-3, 1), make_rat(1, 1));
  auto f9 = factor_principal(k, mu9, &cache);
  CHECK(sigma1(f9) == 1 + f9.norm);  // prime ideal

  // (3) = P1 * P2 in K_4: sigma1 = (1+3)(1+9) = 40, not prime
  auto f3 = factor_principal(k, FieldElem::from_int(k, 3), &cache);
  REQUIRE(f3.factors.size() == 2);
  CHECK(f3.norm == 27);
  CHECK(sigma1(f3) == 40);
  CHECK_FALSE(is_prime_ideal(f3));
  CHECK(sigma1(f3) != 1 + f3.norm);

  // square of a prime: (mu9^2) = P^2, sigma1 = 1 + 9 + 81
  auto fsq = factor_principal(k, mu9 * mu9, &cache);
  REQUIRE(fsq.factors.size() == 1);
  CHECK(fsq.factors[0].second == 2);
  CHECK(sigma1(fsq) == 91);
  CHECK_FALSE(is_prime_ideal(fsq));

  // is_prime_ideal agrees with the sigma1 characterization
  for (const auto& I : {f9, f3, fsq}) CHECK(is_prime_ideal(I) == (sigma1(I) == 1 + I.norm));
}
