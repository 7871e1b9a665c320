#include "doctest.h"

#include "cubiczeta/factor.hpp"

using namespace cz;

TEST_CASE("prime sieve") {
  const auto ps = primes_up_to(100);
  CHECK(ps[0] == 2);
  CHECK(ps[24] == 97);  // 25 primes below 100
  const auto big = primes_up_to(10000);
  CHECK(big.size() >= 1229);
  CHECK(big[1228] == 9973);
}

TEST_CASE("primality") {
  CHECK(is_prime(Int(2)));
  CHECK(is_prime(Int(257)));
  CHECK(is_prime(Int(233)));
  CHECK_FALSE(is_prime(Int(1)));
  CHECK_FALSE(is_prime(Int(0)));
  CHECK_FALSE(is_prime(Int(-7)));
  CHECK_FALSE(is_prime(Int(697)));  // 17 * 41
  CHECK(is_prime(Int("1000000007")));
  CHECK_FALSE(is_prime(Int("1000000007") * Int("998244353")));
}

TEST_CASE("factorize small and medium") {
  auto f = factorize(Int(360));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::make_pair(Int(2), 3u));
  CHECK(f[1] == std::make_pair(Int(3), 2u));
  CHECK(f[2] == std::make_pair(Int(5), 1u));

  f = factorize(Int(-697));
  REQUIRE(f.size() == 2);
  CHECK(f[0].first == 17);
  CHECK(f[1].first == 41);

  f = factorize(Int(1));
  CHECK(f.empty());

  // semiprime beyond the trial bound
  Int n = Int("1000003") * Int("1000033");
  f = factorize(n);
  REQUIRE(f.size() == 2);
  CHECK(f[0].first == Int("1000003"));
  CHECK(f[1].first == Int("1000033"));

  // product reconstructs
  Int m = Int("963761198400");  // highly composite
  Int prod = 1;
  for (const auto& [p, e] : factorize(m))
    for (unsigned i = 0; i < e; ++i) prod *= p;
  CHECK(prod == m);
}

TEST_CASE("squarefree") {
  CHECK(is_squarefree(Int(257)));
  CHECK(is_squarefree(Int(233)));
  CHECK(is_squarefree(Int(10)));
  CHECK_FALSE(is_squarefree(Int(12)));
  CHECK_FALSE(is_squarefree(Int(49)));
  CHECK_FALSE(is_squarefree(Int(0)));
  CHECK_FALSE(is_squarefree(Int(356377)));  // 7^3 * 1039
}

TEST_CASE("prime list is truncated to the requested bound") {
  // a factorize call grows the shared sieve; later small requests must not leak it
  factorize(Int("1000003") * Int("1000033"));
  auto ps = primes_up_to(100);
  CHECK(ps.size() == 25);
  CHECK(ps.back() == 97);
  CHECK(primes_up_to(2).size() == 1);
  CHECK(primes_up_to(1).empty());
}
