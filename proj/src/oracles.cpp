#include "cubiczeta/oracles.hpp"

#include <cmath>
#include <cstdlib>

#include "cubiczeta/errors.hpp"
#include "cubiczeta/factor.hpp"
#include "cubiczeta/ideal.hpp"

namespace cz {

EulerTruncation euler_zeta2(const FieldSpec& spec, uint64_t prime_bound,
                            mpfr_prec_t bits) {
  if (!spec.valid())
    throw error("euler product needs a maximal order: " + spec.validity().reason);
  if (prime_bound < 4) throw error("prime bound below 4 leaves no tail control");

  RealBall acc(1, bits);
  uint64_t terms = 0;
  for (uint64_t p : primes_up_to(prime_bound)) {
    Int P(static_cast<unsigned long>(p));
    Rat local(1);
    for (const auto& ef : splitting_type(spec, P)) {
      Int pf = int_pow(P, 2 * ef.second);
      local *= make_rat(pf, pf - 1);
    }
    acc = acc.mul(RealBall::from_rat(local, bits));
    ++terms;
  }

  // Remaining factors multiply by at most exp(sum_{p > B} 4 p^{-2}) <= 1 + 8/B,
  // so [1, 1 + 8/B] encloses the tail.
  Rat half_tail = make_rat(4, static_cast<long>(prime_bound));
  RealBall tail = RealBall::from_rat(Rat(1) + half_tail, bits).widened(half_tail);
  return {prime_bound, acc.mul(tail), terms};
}

RealBall regulator(const FieldSpec& spec, mpfr_prec_t bits) {
  std::array<RealBall, 2> la, lb;
  for (int i = 0; i < 2; ++i) {
    RealBall r = spec.root(i + 1, bits);
    la[i] = r.abs().log();
    lb[i] = (r.add(RealBall(1, bits))).abs().log();
  }
  RealBall det = la[0].mul(lb[1]).sub(la[1].mul(lb[0]));
  RealBall R = det.abs();
  if (R.certain_sign() != 1)
    throw error("regulator not certified positive");
  return R;
}

ClassNumberEstimate analytic_class_number(const FieldSpec& spec,
                                          uint64_t prime_bound, const Rat& margin) {
  if (!spec.valid())
    throw error("class number estimate needs a maximal order: " +
                spec.validity().reason);

  const mpfr_prec_t bits = 192;
  RealBall rho(1, bits);
  for (uint64_t p : primes_up_to(prime_bound)) {
    Int P(static_cast<unsigned long>(p));
    Rat local = make_rat(Int(P - 1), P);  // the zeta factor 1 - 1/p
    for (const auto& ef : splitting_type(spec, P)) {
      Int pf = int_pow(P, ef.second);
      local *= make_rat(pf, pf - 1);
    }
    rho = rho.mul(RealBall::from_rat(local, bits));
  }

  RealBall R = regulator(spec, bits);
  RealBall sqrtD = RealBall::from_int(spec.disc(), bits).sqrt();
  RealBall est = rho.mul(sqrtD).div(R.mul(RealBall(4, bits)));

  double mid = est.mid_double();
  long n = std::lround(mid);
  double off = std::abs(mid - static_cast<double>(n)) + est.rad_double();
  if (n < 1 || off > margin.get_d())
    throw inconclusive_estimate("estimate " + est.str(8) +
                                " not settled at prime bound " +
                                std::to_string(prime_bound));
  return {est, n};
}

}  // namespace cz
