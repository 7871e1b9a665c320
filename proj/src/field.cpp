#include "cubiczeta/field.hpp"

#include <sstream>

#include "cubiczeta/factor.hpp"

namespace cz {

ValidityReport validate_m(long m) {
  if (m < 4) return {Validity::invalid, "m below 4"};
  Int d = Int(m) * m + m - 3;
  d = d * d - 32;
  if (m % 7 != 3) {
    if (!is_squarefree(d)) return {Validity::invalid, "discriminant not squarefree"};
    return {Validity::valid_case_i, ""};
  }
  if (m % 49 == 24) return {Validity::invalid, "order not maximal at 7"};
  if (!mpz_divisible_ui_p(d.get_mpz_t(), 49)) return {Validity::invalid, "discriminant pattern broken at 7"};
  if (!is_squarefree(d / 49)) return {Validity::invalid, "discriminant/49 not squarefree"};
  return {Validity::valid_case_ii, ""};
}

FieldSpec::FieldSpec(long m) : m_(m) {
  if (m < 1) throw error("field parameter must be positive");
  disc_ = Int(m) * m + m - 3;
  disc_ = disc_ * disc_ - 32;
  coeffs_ = {Int(-1), Int(-(m + 1)), Int(-m), Int(1)};
  validity_ = validate_m(m);
  // initial sign-change brackets for the three real roots
  brackets_[0] = {make_rat(m, 1), make_rat(m + 2, 1)};
  brackets_[1] = {make_rat(-1, 2), make_rat(0, 1)};
  brackets_[2] = {make_rat(-1, 1), make_rat(-1, 2)};
}

Rat FieldSpec::poly_at(const Rat& x) const {
  Rat acc = Rat(coeffs_[3]);
  for (int i = 2; i >= 0; --i) acc = acc * x + Rat(coeffs_[i]);
  acc.canonicalize();
  return acc;
}

Rat FieldSpec::poly_deriv_at(const Rat& x) const {
  // 3x^2 - 2mx - (m+1)
  Rat acc = make_rat(3, 1) * x * x - make_rat(2 * m_, 1) * x - make_rat(m_ + 1, 1);
  acc.canonicalize();
  return acc;
}

RealBall FieldSpec::root(int idx, mpfr_prec_t bits) const {
  if (idx < 1 || idx > 3) throw error("root index out of range");
  std::lock_guard<std::mutex> lock(root_mutex_);
  Bracket& br = brackets_[idx - 1];
  // bisect until the bracket is tighter than the requested radius
  Rat width = br.hi - br.lo;
  Rat target = make_rat(1, 1);
  for (mpfr_prec_t i = 0; i < bits + 4; ++i) target /= 2;
  int sign_lo = sgn(poly_at(br.lo));
  if (sign_lo == 0) {
    // rational root would contradict irreducibility; defensive only
    throw error("rational root encountered");
  }
  while (width > target) {
    Rat mid = (br.lo + br.hi) / 2;
    mid.canonicalize();
    int sm = sgn(poly_at(mid));
    if (sm == 0) throw error("rational root encountered");
    if (sm == sign_lo)
      br.lo = mid;
    else
      br.hi = mid;
    width = (br.hi - br.lo);
  }
  Rat mid = (br.lo + br.hi) / 2;
  mid.canonicalize();
  Rat rad = (br.hi - br.lo) / 2;
  rad.canonicalize();
  return RealBall::from_rat(mid, bits + 16).widened(rad);
}

FieldElem::FieldElem(const FieldSpec& spec, Rat a0, Rat a1, Rat a2) : spec_(&spec) {
  c_ = {std::move(a0), std::move(a1), std::move(a2)};
  for (auto& q : c_) q.canonicalize();
}

FieldElem FieldElem::from_int(const FieldSpec& spec, long value) {
  return FieldElem(spec, make_rat(value, 1), Rat(0), Rat(0));
}

FieldElem FieldElem::alpha(const FieldSpec& spec) {
  return FieldElem(spec, Rat(0), Rat(1), Rat(0));
}

bool FieldElem::is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }

bool FieldElem::is_integral() const {
  return rat_is_integer(c_[0]) && rat_is_integer(c_[1]) && rat_is_integer(c_[2]);
}

bool FieldElem::operator==(const FieldElem& o) const { return c_ == o.c_; }

FieldElem FieldElem::add(const FieldElem& o) const {
  return FieldElem(*spec_, c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2]);
}

FieldElem FieldElem::sub(const FieldElem& o) const {
  return FieldElem(*spec_, c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2]);
}

FieldElem FieldElem::mul(const FieldElem& o) const {
  long m = spec_->m();
  // alpha^3 = m*alpha^2 + (m+1)*alpha + 1
  // alpha^4 = (m^2+m+1)*alpha^2 + (m^2+2m+1)*alpha + m
  std::array<Rat, 5> p{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p[i + j] += c_[i] * o.c_[j];
  Rat mq = make_rat(m, 1);
  Rat a0 = p[0] + p[3] + mq * p[4];
  Rat a1 = p[1] + (mq + 1) * p[3] + (mq * mq + mq + 1) * p[4];
  Rat a2 = p[2] + mq * p[3] + (mq * mq + mq + 1) * p[4];
  return FieldElem(*spec_, a0, a1, a2);
}

FieldElem FieldElem::mul_scalar(const Rat& q) const {
  return FieldElem(*spec_, c_[0] * q, c_[1] * q, c_[2] * q);
}

QMat3 FieldElem::mul_matrix() const {
  FieldElem a = FieldElem::alpha(*spec_);
  FieldElem xa = mul(a);
  FieldElem xa2 = xa.mul(a);
  QMat3 M;
  for (int i = 0; i < 3; ++i) {
    M[i][0] = c_[i];
    M[i][1] = xa.c_[i];
    M[i][2] = xa2.c_[i];
  }
  return M;
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw division_by_zero("inverse of zero field element");
  Vec3<Rat> x = solve3(mul_matrix(), {Rat(1), Rat(0), Rat(0)});
  return FieldElem(*spec_, x[0], x[1], x[2]);
}

FieldElem FieldElem::pow(long e) const {
  if (e == 0) return from_int(*spec_, 1);
  FieldElem base = e < 0 ? inv() : *this;
  unsigned long n = e < 0 ? -e : e;
  FieldElem acc = from_int(*spec_, 1);
  while (n) {
    if (n & 1) acc = acc.mul(base);
    base = base.mul(base);
    n >>= 1;
  }
  return acc;
}

Rat FieldElem::trace() const {
  long m = spec_->m();
  // Tr(1) = 3, Tr(alpha) = m, Tr(alpha^2) = m^2 + 2(m+1)
  Rat t = make_rat(3, 1) * c_[0] + make_rat(m, 1) * c_[1] + make_rat(m * m + 2 * m + 2, 1) * c_[2];
  t.canonicalize();
  return t;
}

Rat FieldElem::norm() const {
  Rat n = mul_matrix().det();
  n.canonicalize();
  return n;
}

RealBall FieldElem::embed(int root_idx, mpfr_prec_t bits) const {
  RealBall r = spec_->root(root_idx, bits);
  RealBall v = RealBall::from_rat(c_[2], bits);
  v = v * r + RealBall::from_rat(c_[1], bits);
  v = v * r + RealBall::from_rat(c_[0], bits);
  return v;
}

std::string FieldElem::str() const {
  std::ostringstream os;
  os << rat_str(c_[0]) << " + " << rat_str(c_[1]) << "*a + " << rat_str(c_[2]) << "*a^2";
  return os.str();
}

RealBall embed_labeled(const FieldElem& x, int pos, const Labeling& lab, mpfr_prec_t bits) {
  int idx = pos == 0 ? 1 : (pos == 1 ? lab.second : lab.third);
  return x.embed(idx, bits);
}

std::array<FieldElem, 3> dual_basis(const FieldSpec& spec) {
  FieldElem a = FieldElem::alpha(spec);
  std::array<FieldElem, 3> w{FieldElem::from_int(spec, 1), a, a.mul(a)};
  QMat3 gram;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) gram[i][j] = w[i].mul(w[j]).trace();
  QMat3 gi = inverse(gram);
  // w~j = sum_i (G^-1)_ij w_i; G symmetric so row/column does not matter
  std::array<FieldElem, 3> dual;
  for (int j = 0; j < 3; ++j) {
    FieldElem acc = FieldElem::from_int(spec, 0);
    for (int i = 0; i < 3; ++i) acc = acc.add(w[i].mul_scalar(gi[i][j]));
    dual[j] = acc;
  }
  return dual;
}

FieldElem codifferent_generator(const FieldSpec& spec) {
  long m = spec.m();
  Int c0 = Int(m) * m * m + 5 * Int(m) * m + 5 * m + 4;
  Int c1 = 2 * Int(m) * m * m + 7 * Int(m) * m + 7 * m + 9;
  Int c2 = -2 * (Int(m) * m + 3 * m + 3);
  Rat scale = make_rat(Int(-1), spec.disc());
  return FieldElem(spec, Rat(c0) * scale, Rat(c1) * scale, Rat(c2) * scale);
}

UnitSystem unit_system(const FieldSpec& spec, const Labeling& lab) {
  UnitSystem u;
  u.eps1 = FieldElem::alpha(spec);
  u.eps2 = FieldElem(spec, Rat(1), Rat(1), Rat(0));
  auto L_ball = [&](mpfr_prec_t p) {
    auto lg = [&](const FieldElem& e, int pos_num, int pos_den) {
      RealBall num = embed_labeled(e, pos_num, lab, p).abs();
      RealBall den = embed_labeled(e, pos_den, lab, p).abs();
      return num.div(den).log();
    };
    return lg(u.eps1, 0, 2) * lg(u.eps2, 1, 2) - lg(u.eps1, 1, 2) * lg(u.eps2, 0, 2);
  };
  u.L_sign = certified_sign(L_ball);
  return u;
}

Int galois_trace(const FieldSpec& spec, const std::array<long, 6>& e, const PrecisionSchedule& sched) {
  static const int perms[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  for (mpfr_prec_t p = sched.start;; p *= 2) {
    if (p > sched.cap) throw precision_exhausted("galois trace not certified within precision cap");
    RealBall roots[4] = {RealBall(), spec.root(1, p), spec.root(2, p), spec.root(3, p)};
    RealBall one(1, p);
    RealBall total(0, p);
    for (const auto& perm : perms) {
      RealBall term = one;
      for (int i = 0; i < 3; ++i) {
        const RealBall& r = roots[perm[i]];
        if (e[i] != 0) term = term * r.pow_si(e[i]);
        if (e[3 + i] != 0) {
          RealBall rp1 = r + one;
          term = term * rp1.pow_si(e[3 + i]);
        }
      }
      total = total + term;
    }
    if (auto z = total.reconstruct_int()) return *z;
  }
}

}  // namespace cz
