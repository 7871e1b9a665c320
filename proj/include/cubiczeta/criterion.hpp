#ifndef CUBICZETA_CRITERION_HPP
#define CUBICZETA_CRITERION_HPP

#include <string>
#include <vector>

#include "cubiczeta/field.hpp"
#include "cubiczeta/ideal.hpp"
#include "cubiczeta/rat.hpp"
#include "cubiczeta/siegel.hpp"

namespace cz {

// A non-prime ideal (nu) D_K, identified by the dual coordinates of nu.
struct CriterionWitness {
  long b = 0;
  long c = 0;
  FactoredIdeal ideal;
};

struct CriterionReport {
  long m = 0;
  ValidityReport validity;
  bool skipped = false;    // set by sweep for invalid m
  std::string failure;     // set by sweep when a check threw
  bool all_prime = false;
  std::vector<CriterionWitness> witnesses;  // empty iff all_prime
  Rat zeta_partial;  // zeta_K(-1, P), closed form
  Rat zeta_siegel;   // -(1/63) * sum of divisor-norm sums
};

// Class number one test: factor (nu) D_K for every trace-one totally
// positive nu in the inverse different and record the composite ones.
// Throws if primality and the zeta comparison ever disagree.
CriterionReport criterion_check(const FieldSpec& spec);

// For m in {4, 5, 6, 8}: the norm polynomial is a rational prime at every
// index point except (2, 3), where it is (2m-5)^2 and the ideal is an
// inert degree-two prime.
bool square_norm_exception_check(const FieldSpec& spec);

// Reports for each m in [lo, hi]; invalid m are marked skipped, other
// per-m failures are recorded and the sweep continues.
std::vector<CriterionReport> criterion_sweep(long lo, long hi);

}  // namespace cz

#endif
