#ifndef CUBICZETA_ORACLES_HPP
#define CUBICZETA_ORACLES_HPP

#include <cstdint>

#include "cubiczeta/ball.hpp"
#include "cubiczeta/field.hpp"
#include "cubiczeta/rat.hpp"

namespace cz {

struct EulerTruncation {
  uint64_t prime_bound = 0;
  RealBall value;
  uint64_t terms_used = 0;  // primes up to the bound
};

// Truncated Euler product for zeta_K(2): prod over p <= bound of
// prod over P | p of (1 - N(P)^{-2})^{-1}.  The neglected tail is folded
// into the radius, so the ball encloses the exact zeta_K(2).
EulerTruncation euler_zeta2(const FieldSpec& spec, uint64_t prime_bound,
                            mpfr_prec_t bits = 128);

struct ClassNumberEstimate {
  RealBall estimate;
  long rounded = 0;
};

// h ~ rho * sqrt(D) / (4R): residue rho from the zeta_K/zeta ratio product
// truncated at prime_bound, regulator R from the unit logs of alpha and
// alpha + 1.  The truncation error is not bounded rigorously, so this is a
// heuristic cross-check; throws inconclusive_estimate when the value is not
// within the margin of a positive integer (retry with a larger bound).
ClassNumberEstimate analytic_class_number(const FieldSpec& spec,
                                          uint64_t prime_bound,
                                          const Rat& margin = Rat(1, 5));

// regulator of the unit pair (alpha, alpha + 1), certified positive
RealBall regulator(const FieldSpec& spec, mpfr_prec_t bits = 192);

}  // namespace cz

#endif
