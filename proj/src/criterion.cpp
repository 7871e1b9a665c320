#include "cubiczeta/criterion.hpp"

#include <utility>

#include "cubiczeta/errors.hpp"
#include "cubiczeta/factor.hpp"
#include "cubiczeta/partial_zeta.hpp"

namespace cz {

CriterionReport criterion_check(const FieldSpec& spec) {
  if (!spec.valid())
    throw error("criterion needs a maximal order: " + spec.validity().reason);

  CriterionReport rep;
  rep.m = spec.m();
  rep.validity = spec.validity();

  PrimeDecompositionCache cache(spec);
  FieldElem dgen = different_generator(spec);
  Int sigma_total = 0;
  rep.all_prime = true;
  for (const auto& el : enumerate_S1(spec)) {
    FieldElem mu = el.nu * dgen;
    FactoredIdeal I = factor_principal(spec, mu, &cache);
    sigma_total += sigma1(I);
    if (!is_prime_ideal(I)) {
      rep.all_prime = false;
      rep.witnesses.push_back({el.b, el.c, std::move(I)});
    }
  }
  rep.zeta_siegel = make_rat(-sigma_total, Int(63));
  rep.zeta_partial = closed_form_partial_minus1(spec.m());

  if (rep.all_prime != (rep.zeta_siegel == rep.zeta_partial))
    throw error("ideal primality and the zeta comparison disagree at m = " +
                std::to_string(spec.m()));
  return rep;
}

bool square_norm_exception_check(const FieldSpec& spec) {
  const long m = spec.m();
  if (m != 4 && m != 5 && m != 6 && m != 8)
    throw error("square-norm check applies to the class-number-one list only");

  const Int square = Int(2 * m - 5) * Int(2 * m - 5);
  for (const auto& pt : T_set(m)) {
    Int v = f_st(m, pt.s, pt.t);
    if (pt.s == 2 && pt.t == 3) {
      if (v != square) return false;
    } else if (!is_prime(v)) {
      return false;
    }
  }

  PrimeDecompositionCache cache(spec);
  FieldElem dgen = different_generator(spec);
  bool found = false;
  for (const auto& el : enumerate_S1(spec)) {
    FactoredIdeal I = factor_principal(spec, el.nu * dgen, &cache);
    if (I.norm != square) continue;
    found = true;
    if (!is_prime_ideal(I) || I.factors[0].first.f != 2) return false;
  }
  return found;
}

std::vector<CriterionReport> criterion_sweep(long lo, long hi) {
  std::vector<CriterionReport> out;
  for (long m = lo; m <= hi; ++m) {
    ValidityReport v = validate_m(m);
    if (!v.ok()) {
      CriterionReport rep;
      rep.m = m;
      rep.validity = v;
      rep.skipped = true;
      out.push_back(std::move(rep));
      continue;
    }
    FieldSpec spec(m);
    try {
      out.push_back(criterion_check(spec));
    } catch (const error& e) {
      CriterionReport rep;
      rep.m = m;
      rep.validity = v;
      rep.failure = e.what();
      out.push_back(std::move(rep));
    }
  }
  return out;
}

}  // namespace cz
