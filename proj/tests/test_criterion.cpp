#include "doctest.h"

#include <set>

#include "cubiczeta/criterion.hpp"
#include "cubiczeta/partial_zeta.hpp"

using namespace cz;

TEST_CASE("class number one members") {
  for (long m : {4L, 5L, 6L, 8L}) {
    FieldSpec spec(m);
    CriterionReport rep = criterion_check(spec);
    CAPTURE(m);
    CHECK(rep.all_prime);
    CHECK(rep.witnesses.empty());
    CHECK(rep.zeta_siegel == rep.zeta_partial);
    CHECK(rep.zeta_partial == closed_form_partial_minus1(m));
  }

  CriterionReport r4 = criterion_check(FieldSpec(4));
  CHECK(r4.zeta_partial == make_rat(-2, 3));
  CriterionReport r8 = criterion_check(FieldSpec(8));
  CHECK(r8.zeta_partial == Rat(-44));
}

TEST_CASE("witnesses at a class number above one") {
  FieldSpec spec(7);
  CriterionReport rep = criterion_check(spec);
  CHECK_FALSE(rep.all_prime);
  REQUIRE(!rep.witnesses.empty());
  CHECK(rep.zeta_siegel < rep.zeta_partial);
  CHECK(rep.zeta_partial == Rat(-20));

  for (const auto& w : rep.witnesses) {
    CHECK_FALSE(is_prime_ideal(w.ideal));
    CHECK(sigma1(w.ideal) > w.ideal.norm + 1);
  }
}

TEST_CASE("square-norm exception") {
  for (long m : {4L, 5L, 6L, 8L}) {
    CAPTURE(m);
    CHECK(square_norm_exception_check(FieldSpec(m)));
  }
  CHECK_THROWS_AS(square_norm_exception_check(FieldSpec(7)), error);
}

TEST_CASE("sweep over small m") {
  auto reports = criterion_sweep(4, 30);
  REQUIRE(reports.size() == 27);

  std::set<long> prime_ms;
  for (const auto& rep : reports) {
    CAPTURE(rep.m);
    CHECK(rep.failure.empty());
    if (rep.m == 24) {
      CHECK(rep.skipped);
      CHECK_FALSE(rep.validity.ok());
      CHECK_FALSE(rep.validity.reason.empty());
      continue;
    }
    CHECK_FALSE(rep.skipped);
    CHECK(rep.witnesses.empty() == rep.all_prime);
    CHECK(rep.zeta_siegel <= rep.zeta_partial);
    CHECK((rep.zeta_siegel == rep.zeta_partial) == rep.all_prime);
    if (rep.all_prime) prime_ms.insert(rep.m);
  }
  CHECK(prime_ms == std::set<long>{4, 5, 6, 8});
}

TEST_CASE("invalid m rejected directly") {
  CHECK_THROWS_AS(criterion_check(FieldSpec(24)), error);
}
