#ifndef CUBICZETA_BALL_HPP
#define CUBICZETA_BALL_HPP

#include <mpfr.h>

#include <optional>
#include <string>

#include "cubiczeta/errors.hpp"
#include "cubiczeta/rat.hpp"

namespace cz {

// Certified real interval [mid - rad, mid + rad].  The midpoint carries the
// working precision; the radius is tracked upward at a small fixed precision
// so every arithmetic op yields an enclosure of the exact result.
class RealBall {
 public:
  RealBall();
  explicit RealBall(long v, mpfr_prec_t prec = 64);
  RealBall(const RealBall& o);
  RealBall(RealBall&& o) noexcept;
  RealBall& operator=(const RealBall& o);
  RealBall& operator=(RealBall&& o) noexcept;
  ~RealBall();

  static RealBall from_rat(const Rat& q, mpfr_prec_t prec);
  static RealBall from_int(const Int& z, mpfr_prec_t prec);
  // exact point interval from a double (used for coarse bounds only)
  static RealBall from_double(double d, mpfr_prec_t prec = 64);

  mpfr_prec_t precision() const { return mpfr_get_prec(mid_); }

  RealBall add(const RealBall& o) const;
  RealBall sub(const RealBall& o) const;
  RealBall mul(const RealBall& o) const;
  RealBall div(const RealBall& o) const;  // throws division_by_zero if o straddles 0
  RealBall neg() const;
  RealBall abs() const;
  RealBall pow_si(long e) const;
  RealBall sqrt() const;  // throws sign_unresolved if not certainly >= 0
  RealBall log() const;   // throws sign_unresolved if not certainly > 0

  static RealBall pi(mpfr_prec_t prec);

  // same midpoint, radius increased by |extra|
  RealBall widened(const Rat& extra) const;

  bool contains_zero() const;
  // +1 / -1 when the ball is strictly one-signed, nullopt otherwise
  std::optional<int> certain_sign() const;
  // true if [lo, hi] of this ball lies inside the other ball
  bool inside(const RealBall& o) const;
  bool contains_rat(const Rat& q) const;

  // unique integer in the ball, if there is exactly one
  std::optional<Int> reconstruct_int() const;

  // exact endpoints mid -+ rad as rationals (mid and rad are dyadic)
  Rat lower_rat() const;
  Rat upper_rat() const;

  double mid_double() const;
  double rad_double() const;
  std::string str(size_t digits = 20) const;

  // rad <= 2^-k roughly; used for convergence checks
  bool radius_below(long two_exp) const;

  friend RealBall operator+(const RealBall& a, const RealBall& b) { return a.add(b); }
  friend RealBall operator-(const RealBall& a, const RealBall& b) { return a.sub(b); }
  friend RealBall operator*(const RealBall& a, const RealBall& b) { return a.mul(b); }
  friend RealBall operator/(const RealBall& a, const RealBall& b) { return a.div(b); }
  friend RealBall operator-(const RealBall& a) { return a.neg(); }

 private:
  static RealBall zero_at(mpfr_prec_t prec);
  void bump_rad_ulp();  // absorb midpoint rounding error into the radius

  mpfr_t mid_;
  mpfr_t rad_;  // always finite, >= 0, RNDU arithmetic
};

// Doubling precision ladder for "compute until certain" loops.
struct PrecisionSchedule {
  mpfr_prec_t start = 128;
  mpfr_prec_t cap = 1 << 14;

  static PrecisionSchedule from_env();  // honours CUBICZETA_MAX_BITS
};

}  // namespace cz

#endif
