#include "cubiczeta/ball.hpp"

#include <cstdlib>
#include <sstream>

namespace cz {

namespace {
constexpr mpfr_prec_t kRadPrec = 32;
}

RealBall::RealBall() {
  mpfr_init2(mid_, 64);
  mpfr_init2(rad_, kRadPrec);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

RealBall RealBall::zero_at(mpfr_prec_t prec) {
  RealBall r;
  mpfr_set_prec(r.mid_, prec);
  mpfr_set_zero(r.mid_, 1);
  return r;
}

RealBall::RealBall(long v, mpfr_prec_t prec) {
  mpfr_init2(mid_, prec);
  mpfr_init2(rad_, kRadPrec);
  mpfr_set_zero(rad_, 1);
  mpfr_set_si(mid_, v, MPFR_RNDN);
  bump_rad_ulp();  // a long may not fit at tiny precision
}

RealBall::RealBall(const RealBall& o) {
  mpfr_init2(mid_, mpfr_get_prec(o.mid_));
  mpfr_init2(rad_, kRadPrec);
  mpfr_set(mid_, o.mid_, MPFR_RNDN);
  mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

RealBall::RealBall(RealBall&& o) noexcept {
  mpfr_init2(mid_, 2);
  mpfr_init2(rad_, 2);
  mpfr_swap(mid_, o.mid_);
  mpfr_swap(rad_, o.rad_);
}

RealBall& RealBall::operator=(const RealBall& o) {
  if (this != &o) {
    mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
  }
  return *this;
}

RealBall& RealBall::operator=(RealBall&& o) noexcept {
  if (this != &o) {
    mpfr_swap(mid_, o.mid_);
    mpfr_swap(rad_, o.rad_);
  }
  return *this;
}

RealBall::~RealBall() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

void RealBall::bump_rad_ulp() {
  // one ulp of the midpoint, computed without assuming the rounding was tight
  if (mpfr_zero_p(mid_)) return;
  mpfr_t ulp;
  mpfr_init2(ulp, kRadPrec);
  mpfr_set_ui_2exp(ulp, 1, mpfr_get_exp(mid_) - mpfr_get_prec(mid_) + 1, MPFR_RNDU);
  mpfr_add(rad_, rad_, ulp, MPFR_RNDU);
  mpfr_clear(ulp);
}

RealBall RealBall::from_rat(const Rat& q, mpfr_prec_t prec) {
  RealBall r = zero_at(prec);
  int inexact = mpfr_set_q(r.mid_, q.get_mpq_t(), MPFR_RNDN);
  if (inexact != 0) r.bump_rad_ulp();
  return r;
}

RealBall RealBall::from_int(const Int& z, mpfr_prec_t prec) {
  RealBall r = zero_at(prec);
  int inexact = mpfr_set_z(r.mid_, z.get_mpz_t(), MPFR_RNDN);
  if (inexact != 0) r.bump_rad_ulp();
  return r;
}

RealBall RealBall::from_double(double d, mpfr_prec_t prec) {
  RealBall r = zero_at(prec);
  mpfr_set_d(r.mid_, d, MPFR_RNDN);  // exact for prec >= 53
  return r;
}

RealBall RealBall::add(const RealBall& o) const {
  RealBall r = zero_at(std::max(precision(), o.precision()));
  int inexact = mpfr_add(r.mid_, mid_, o.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, rad_, o.rad_, MPFR_RNDU);
  if (inexact != 0) r.bump_rad_ulp();
  return r;
}

RealBall RealBall::sub(const RealBall& o) const {
  RealBall r = zero_at(std::max(precision(), o.precision()));
  int inexact = mpfr_sub(r.mid_, mid_, o.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, rad_, o.rad_, MPFR_RNDU);
  if (inexact != 0) r.bump_rad_ulp();
  return r;
}

RealBall RealBall::mul(const RealBall& o) const {
  RealBall r = zero_at(std::max(precision(), o.precision()));
  int inexact = mpfr_mul(r.mid_, mid_, o.mid_, MPFR_RNDN);
  // |a||rb| + |b||ra| + |ra||rb|
  mpfr_t t, u;
  mpfr_init2(t, kRadPrec);
  mpfr_init2(u, kRadPrec);
  mpfr_abs(t, mid_, MPFR_RNDU);
  mpfr_mul(t, t, o.rad_, MPFR_RNDU);
  mpfr_abs(u, o.mid_, MPFR_RNDU);
  mpfr_mul(u, u, rad_, MPFR_RNDU);
  mpfr_add(t, t, u, MPFR_RNDU);
  mpfr_mul(u, rad_, o.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, t, u, MPFR_RNDU);
  mpfr_clear(t);
  mpfr_clear(u);
  if (inexact != 0) r.bump_rad_ulp();
  return r;
}

RealBall RealBall::div(const RealBall& o) const {
  if (o.contains_zero()) throw division_by_zero("ball division by interval containing zero");
  RealBall r = zero_at(std::max(precision(), o.precision()));
  int inexact = mpfr_div(r.mid_, mid_, o.mid_, MPFR_RNDN);
  // lower bound on |denominator| over the interval
  mpfr_t lb, t, u;
  mpfr_init2(lb, kRadPrec);
  mpfr_init2(t, kRadPrec);
  mpfr_init2(u, kRadPrec);
  mpfr_abs(lb, o.mid_, MPFR_RNDD);
  mpfr_sub(lb, lb, o.rad_, MPFR_RNDD);
  // rad = (|a| rb + |b| ra) / (|b| lb)  bounds |a/b - mid_a/mid_b| over the box
  mpfr_abs(t, mid_, MPFR_RNDU);
  mpfr_mul(t, t, o.rad_, MPFR_RNDU);
  mpfr_abs(u, o.mid_, MPFR_RNDU);
  mpfr_mul(u, u, rad_, MPFR_RNDU);
  mpfr_add(t, t, u, MPFR_RNDU);
  mpfr_abs(u, o.mid_, MPFR_RNDD);
  mpfr_mul(u, u, lb, MPFR_RNDD);
  mpfr_div(r.rad_, t, u, MPFR_RNDU);
  mpfr_clear(lb);
  mpfr_clear(t);
  mpfr_clear(u);
  if (inexact != 0) r.bump_rad_ulp();
  return r;
}

RealBall RealBall::neg() const {
  RealBall r(*this);
  mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
  return r;
}

RealBall RealBall::abs() const {
  if (!contains_zero()) {
    RealBall r(*this);
    mpfr_abs(r.mid_, r.mid_, MPFR_RNDN);
    return r;
  }
  // straddles zero: [0, |mid| + rad]
  RealBall r = zero_at(precision());
  mpfr_t hi;
  mpfr_init2(hi, kRadPrec);
  mpfr_abs(hi, mid_, MPFR_RNDU);
  mpfr_add(hi, hi, rad_, MPFR_RNDU);
  mpfr_div_2ui(r.mid_, hi, 1, MPFR_RNDU);
  mpfr_set(r.rad_, r.mid_, MPFR_RNDU);
  mpfr_clear(hi);
  return r;
}

RealBall RealBall::pow_si(long e) const {
  if (e == 0) return RealBall(1, precision());
  bool inv = e < 0;
  unsigned long n = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  RealBall acc(1, precision());
  RealBall base(*this);
  while (n > 0) {
    if (n & 1) acc = acc.mul(base);
    base = base.mul(base);
    n >>= 1;
  }
  if (inv) return RealBall(1, precision()).div(acc);
  return acc;
}

RealBall RealBall::sqrt() const {
  auto s = certain_sign();
  if (!(s && *s > 0) && !(mpfr_zero_p(mid_) && mpfr_zero_p(rad_)))
    throw sign_unresolved("sqrt of interval not certainly nonnegative");
  RealBall r = zero_at(precision());
  int inexact = mpfr_sqrt(r.mid_, mid_, MPFR_RNDN);
  // |sqrt(x) - sqrt(m)| <= ra / (2 sqrt(lo))
  if (!mpfr_zero_p(rad_)) {
    mpfr_t lo, den;
    mpfr_init2(lo, kRadPrec);
    mpfr_init2(den, kRadPrec);
    mpfr_set(lo, mid_, MPFR_RNDD);
    mpfr_sub(lo, lo, rad_, MPFR_RNDD);
    mpfr_sqrt(den, lo, MPFR_RNDD);
    mpfr_mul_2ui(den, den, 1, MPFR_RNDD);
    mpfr_div(r.rad_, rad_, den, MPFR_RNDU);
    mpfr_clear(lo);
    mpfr_clear(den);
  }
  if (inexact != 0) r.bump_rad_ulp();
  return r;
}

RealBall RealBall::log() const {
  auto s = certain_sign();
  if (!(s && *s > 0)) throw sign_unresolved("log of interval not certainly positive");
  RealBall r = zero_at(precision());
  int inexact = mpfr_log(r.mid_, mid_, MPFR_RNDN);
  // |log x - log m| <= ra / lo
  mpfr_t lo;
  mpfr_init2(lo, kRadPrec);
  mpfr_set(lo, mid_, MPFR_RNDD);
  mpfr_sub(lo, lo, rad_, MPFR_RNDD);
  mpfr_div(r.rad_, rad_, lo, MPFR_RNDU);
  mpfr_clear(lo);
  if (inexact != 0) r.bump_rad_ulp();
  return r;
}

RealBall RealBall::pi(mpfr_prec_t prec) {
  RealBall r = zero_at(prec);
  mpfr_const_pi(r.mid_, MPFR_RNDN);
  r.bump_rad_ulp();
  return r;
}

RealBall RealBall::widened(const Rat& extra) const {
  RealBall r(*this);
  mpfr_t x;
  mpfr_init2(x, kRadPrec);
  mpfr_set_q(x, extra.get_mpq_t(), MPFR_RNDU);
  mpfr_abs(x, x, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, x, MPFR_RNDU);
  mpfr_clear(x);
  return r;
}

bool RealBall::contains_zero() const {
  mpfr_t a;
  mpfr_init2(a, kRadPrec);
  mpfr_abs(a, mid_, MPFR_RNDD);
  bool in = mpfr_cmp(a, rad_) <= 0;
  mpfr_clear(a);
  return in;
}

std::optional<int> RealBall::certain_sign() const {
  if (contains_zero()) return std::nullopt;
  return mpfr_sgn(mid_) > 0 ? 1 : -1;
}

bool RealBall::inside(const RealBall& o) const {
  // [m - r, m + r] subset of [om - orad, om + orad]
  mpfr_t d, sum;
  mpfr_init2(d, kRadPrec + 16);
  mpfr_init2(sum, kRadPrec + 16);
  mpfr_sub(d, mid_, o.mid_, MPFR_RNDU);
  mpfr_abs(d, d, MPFR_RNDU);
  mpfr_add(d, d, rad_, MPFR_RNDU);
  bool ok = mpfr_cmp(d, o.rad_) <= 0;
  mpfr_clear(d);
  mpfr_clear(sum);
  return ok;
}

bool RealBall::contains_rat(const Rat& q) const {
  // |q - mid| <= rad, checked in upward arithmetic with exact q
  mpfr_t qq, d;
  mpfr_prec_t p = std::max<mpfr_prec_t>(precision() + 64, 128);
  mpfr_init2(qq, p);
  mpfr_init2(d, p);
  mpfr_set_q(qq, q.get_mpq_t(), MPFR_RNDN);
  mpfr_sub(d, qq, mid_, MPFR_RNDA);
  mpfr_abs(d, d, MPFR_RNDU);
  // allow one ulp slack for the representation of q
  mpfr_t slack;
  mpfr_init2(slack, kRadPrec);
  if (!mpfr_zero_p(qq))
    mpfr_set_ui_2exp(slack, 1, mpfr_get_exp(qq) - p + 1, MPFR_RNDU);
  else
    mpfr_set_zero(slack, 1);
  mpfr_add(slack, slack, rad_, MPFR_RNDU);
  bool in = mpfr_cmp(d, slack) <= 0;
  mpfr_clear(qq);
  mpfr_clear(d);
  mpfr_clear(slack);
  return in;
}

std::optional<Int> RealBall::reconstruct_int() const {
  mpfr_t lo, hi;
  mpfr_prec_t p = precision() + 64;
  mpfr_init2(lo, p);
  mpfr_init2(hi, p);
  mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
  mpfr_add(hi, mid_, rad_, MPFR_RNDU);
  mpfr_ceil(lo, lo);
  mpfr_floor(hi, hi);
  std::optional<Int> out;
  if (mpfr_cmp(lo, hi) == 0) {
    Int z;
    mpfr_get_z(z.get_mpz_t(), lo, MPFR_RNDN);
    out = z;
  }
  mpfr_clear(lo);
  mpfr_clear(hi);
  return out;
}

Rat RealBall::lower_rat() const {
  Rat m, r;
  mpfr_get_q(m.get_mpq_t(), mid_);
  mpfr_get_q(r.get_mpq_t(), rad_);
  return m - r;
}

Rat RealBall::upper_rat() const {
  Rat m, r;
  mpfr_get_q(m.get_mpq_t(), mid_);
  mpfr_get_q(r.get_mpq_t(), rad_);
  return m + r;
}

double RealBall::mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }
double RealBall::rad_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }

std::string RealBall::str(size_t digits) const {
  std::ostringstream os;
  char* m = nullptr;
  mpfr_asprintf(&m, "%.*Rg", static_cast<int>(digits), mid_);
  os << m << " +/- ";
  mpfr_free_str(m);
  char* r = nullptr;
  mpfr_asprintf(&r, "%.3Rg", rad_);
  os << r;
  mpfr_free_str(r);
  return os.str();
}

bool RealBall::radius_below(long two_exp) const {
  if (mpfr_zero_p(rad_)) return true;
  return mpfr_get_exp(rad_) <= two_exp;
}

PrecisionSchedule PrecisionSchedule::from_env() {
  PrecisionSchedule s;
  if (const char* v = std::getenv("CUBICZETA_MAX_BITS")) {
    long cap = std::strtol(v, nullptr, 10);
    if (cap >= 64) s.cap = static_cast<mpfr_prec_t>(cap);
  }
  return s;
}

}  // namespace cz
