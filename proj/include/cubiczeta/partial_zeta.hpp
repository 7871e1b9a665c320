#ifndef CUBICZETA_PARTIAL_ZETA_HPP
#define CUBICZETA_PARTIAL_ZETA_HPP

#include <array>
#include <map>

#include "cubiczeta/field.hpp"
#include "cubiczeta/qpid.hpp"
#include "cubiczeta/smallmat.hpp"

namespace cz {

// Matrices entering the partial zeta evaluation over W = O_K with basis
// (1, alpha, alpha^2):
//   E_nu  rows (1,1,1), (eps_nu conjugates), (eps1*eps2 conjugates)
//   B     entries rho^(i) * w_j^(i), rho the codifferent generator
// The product E_nu * B has exact integer entries Tr(u_i * rho * w_j); both
// are certified against each other during construction.
struct ZetaMatrices {
  IMat3 EB1, EB2;
  Int det_EB1, det_EB2;
  Rat N_rho;       // exact norm of the codifferent generator
  int sign_det_B;  // certified sign of det B
  int sign_L;      // certified sign of the unit log determinant
};

// Evaluates the rank-two-unit cone decomposition of the partial zeta value
// attached to the principal class: two lattice-sum terms (M) and two
// correction terms (C), each an exact rational multiple of pi^(3k) D^(-3/2).
class PartialZetaEngine {
 public:
  explicit PartialZetaEngine(const FieldSpec& spec, Labeling lab = {},
                             PrecisionSchedule sched = PrecisionSchedule::from_env());

  const ZetaMatrices& matrices() const { return mats_; }

  // M(k, nu): the tau pair is (eps1, eps2) for nu = 1 and (eps2, eps1) for
  // nu = 2, as in the four-term total below
  QPiD m_term(long k, int nu);
  QPiD c_term(long k, int nu);

  // M(k,1) + M(k,2) + C(k,1) + C(k,2)
  QPiD zeta_sum(long k);

  // zeta_K(2, P) = 1/2 * zeta_sum(2); exact shape (pi^6, D^(-3/2))
  QPiD partial_zeta_2();

  // every Dedekind sum with an odd degree entry must vanish; the engine
  // asserts this on each occurrence and counts the checks
  long parity_checks() const { return parity_checks_; }

 private:
  Int trace(std::array<long, 6> e);

  const FieldSpec* spec_;
  Labeling lab_;
  PrecisionSchedule sched_;
  FieldElem eps1_, eps2_;
  ZetaMatrices mats_;
  std::map<std::array<long, 6>, Int> trace_memo_;
  long parity_checks_ = 0;
};

// functional equation specialization: z = q * pi^6 * D^(-3/2)  ->  -q/8
Rat reflect_to_minus1(const QPiD& z);

// m (m^5 + 3m^4 - 5m^3 - 15m^2 + 4m + 12) / 945
Rat closed_form_partial_zeta2(long m);

// -m (m^5 + 3m^4 - 5m^3 - 15m^2 + 4m + 12) / 7560
Rat closed_form_partial_minus1(long m);

}  // namespace cz

#endif
