#ifndef CUBICZETA_FIELD_HPP
#define CUBICZETA_FIELD_HPP

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "cubiczeta/ball.hpp"
#include "cubiczeta/rat.hpp"
#include "cubiczeta/smallmat.hpp"

namespace cz {

// The family of totally real cubic fields K_m = Q[x]/(f_m) with
//   f_m(x) = x^3 - m*x^2 - (m+1)*x - 1,  m >= 4.
// All three roots are real: a3 in (-1, -1/2), a2 in (-1/2, 0), a1 in (m, m+2).

enum class Validity { valid_case_i, valid_case_ii, invalid };

struct ValidityReport {
  Validity kind;
  std::string reason;  // set when invalid
  bool ok() const { return kind != Validity::invalid; }
};

class FieldSpec {
 public:
  explicit FieldSpec(long m);

  long m() const { return m_; }
  const Int& disc() const { return disc_; }
  const ValidityReport& validity() const { return validity_; }
  bool valid() const { return validity_.ok(); }

  // f_m coefficients, constant term first: {-1, -(m+1), -m, 1}
  const std::array<Int, 4>& poly() const { return coeffs_; }
  Rat poly_at(const Rat& x) const;
  Rat poly_deriv_at(const Rat& x) const;

  // certified enclosure of the idx-th root (idx 1 = largest, 3 = smallest),
  // with radius below 2^-bits
  RealBall root(int idx, mpfr_prec_t bits) const;

 private:
  long m_;
  Int disc_;
  std::array<Int, 4> coeffs_;
  ValidityReport validity_;

  struct Bracket {
    Rat lo, hi;  // f changes sign across [lo, hi]
  };
  mutable std::mutex root_mutex_;
  mutable std::array<Bracket, 3> brackets_;  // index 0 ~ root 1 (largest)
};

ValidityReport validate_m(long m);

class FieldElem {
 public:
  FieldElem() : spec_(nullptr) {}
  FieldElem(const FieldSpec& spec, Rat a0, Rat a1, Rat a2);
  static FieldElem from_int(const FieldSpec& spec, long value);
  static FieldElem alpha(const FieldSpec& spec);

  const FieldSpec& spec() const { return *spec_; }
  const Rat& coord(int i) const { return c_[i]; }
  const std::array<Rat, 3>& coords() const { return c_; }

  bool is_zero() const;
  bool is_integral() const;
  bool operator==(const FieldElem& o) const;

  FieldElem add(const FieldElem& o) const;
  FieldElem sub(const FieldElem& o) const;
  FieldElem mul(const FieldElem& o) const;
  FieldElem mul_scalar(const Rat& q) const;
  FieldElem inv() const;  // throws division_by_zero on 0
  FieldElem pow(long e) const;

  Rat trace() const;
  Rat norm() const;

  // multiplication-by-x matrix over the basis (1, alpha, alpha^2):
  // column j holds the coordinates of x * basis_j
  QMat3 mul_matrix() const;

  // certified enclosure of the embedding sending alpha to root(idx)
  RealBall embed(int root_idx, mpfr_prec_t bits) const;

  std::string str() const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) { return a.add(b); }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a.sub(b); }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) { return a.mul(b); }

 private:
  const FieldSpec* spec_;
  std::array<Rat, 3> c_;
};

// Which roots play the roles of the first and second conjugate (x' and x'');
// x itself is always the largest root.  The default follows the natural
// descending order; swapping tests conjugate-label independence.
struct Labeling {
  int second = 2;
  int third = 3;
};

// embedding of x at position pos in (x, x', x'') under the labeling
RealBall embed_labeled(const FieldElem& x, int pos, const Labeling& lab, mpfr_prec_t bits);

// dual basis (w~1, w~2, w~3) of (1, alpha, alpha^2) under the trace pairing
std::array<FieldElem, 3> dual_basis(const FieldSpec& spec);

// w~3 in closed form; equals dual_basis(spec)[2]
FieldElem codifferent_generator(const FieldSpec& spec);

// fundamental units alpha and alpha+1, plus the certified sign of the
// 2x2 logarithmic determinant L
struct UnitSystem {
  FieldElem eps1;  // alpha
  FieldElem eps2;  // alpha + 1
  int L_sign;
};
UnitSystem unit_system(const FieldSpec& spec, const Labeling& lab = {});

// Trace over the degree-6 closure of
//   prod_i alpha_(s(i))^e[i] * (alpha_(s(i))+1)^e[3+i]
// summed over all six root permutations s; certified exact integer.
Int galois_trace(const FieldSpec& spec, const std::array<long, 6>& e,
                 const PrecisionSchedule& sched = PrecisionSchedule::from_env());

// certified sign with precision escalation; fn(prec) recomputes the ball
template <typename F>
int certified_sign(F&& fn, const PrecisionSchedule& sched = PrecisionSchedule::from_env()) {
  for (mpfr_prec_t p = sched.start;; p *= 2) {
    if (p > sched.cap) throw precision_exhausted("sign not resolved within precision cap");
    RealBall b = fn(p);
    if (auto s = b.certain_sign()) return *s;
  }
}

}  // namespace cz

#endif
