#include "cubiczeta/partial_zeta.hpp"

#include <algorithm>
#include <utility>

#include "cubiczeta/bernoulli.hpp"
#include "cubiczeta/dedekind.hpp"
#include "cubiczeta/errors.hpp"

namespace cz {

namespace {

Int factorial(long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Rat rat_pow(const Rat& q, long e) {
  Rat r(1);
  for (long i = 0; i < e; ++i) r *= q;
  return r;
}

int sign_of(const Int& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

void require_even_k(long k) {
  if (k < 2 || k % 2 != 0) throw error("zeta term parameter must be even and at least 2");
}

}  // namespace

std::string qpid_str(const QPiD& v) {
  std::string s = rat_str(v.q);
  if (v.q == 0) return s;
  if (v.pi_power != 0) s += " * pi^" + std::to_string(v.pi_power);
  if (v.d_half_power != 0) {
    if (v.d_half_power % 2 == 0)
      s += " * D^(" + std::to_string(v.d_half_power / 2) + ")";
    else
      s += " * D^(" + std::to_string(v.d_half_power) + "/2)";
  }
  return s;
}

PartialZetaEngine::PartialZetaEngine(const FieldSpec& spec, Labeling lab, PrecisionSchedule sched)
    : spec_(&spec), lab_(lab), sched_(sched) {
  if (!spec.valid()) throw error("partial zeta needs a maximal order: " + spec.validity().reason);

  UnitSystem us = unit_system(spec, lab);
  eps1_ = us.eps1;
  eps2_ = us.eps2;
  mats_.sign_L = us.L_sign;

  FieldElem rho = codifferent_generator(spec);
  mats_.N_rho = rho.norm();

  std::array<FieldElem, 3> w = {FieldElem::from_int(spec, 1), FieldElem::alpha(spec),
                                FieldElem::alpha(spec) * FieldElem::alpha(spec)};
  FieldElem e12 = eps1_ * eps2_;
  std::array<std::array<FieldElem, 3>, 2> u = {
      std::array<FieldElem, 3>{FieldElem::from_int(spec, 1), eps1_, e12},
      std::array<FieldElem, 3>{FieldElem::from_int(spec, 1), eps2_, e12}};

  IMat3* exact[2] = {&mats_.EB1, &mats_.EB2};
  for (int nu = 0; nu < 2; ++nu)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Rat t = (u[nu][i] * rho * w[j]).trace();
        if (!rat_is_integer(t)) throw error("unit-cone matrix entry is not integral");
        (*exact[nu])[i][j] = t.get_num();
      }
  mats_.det_EB1 = mats_.EB1.det();
  mats_.det_EB2 = mats_.EB2.det();

  // certify the exact entries against the embedding product, and the sign of
  // det B, at escalating precision
  for (mpfr_prec_t p = sched_.start;; p *= 2) {
    if (p > sched_.cap) throw precision_exhausted("unit-cone matrices not certified within cap");
    Mat3<RealBall> B;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) B[i][j] = embed_labeled(rho * w[j], i, lab_, p);
    std::array<Mat3<RealBall>, 2> E;
    for (int nu = 0; nu < 2; ++nu)
      for (int i = 0; i < 3; ++i) {
        E[nu][0][i] = RealBall::from_int(Int(1), p);
        E[nu][1][i] = embed_labeled(nu == 0 ? eps1_ : eps2_, i, lab_, p);
        E[nu][2][i] = embed_labeled(e12, i, lab_, p);
      }

    bool sharp = true;
    for (int nu = 0; nu < 2 && sharp; ++nu) {
      Mat3<RealBall> prod = E[nu].mul(B);
      for (int i = 0; i < 3 && sharp; ++i)
        for (int j = 0; j < 3 && sharp; ++j) {
          if (!prod[i][j].radius_below(-1)) {
            sharp = false;
            break;
          }
          if (!prod[i][j].contains_rat(Rat((*exact[nu])[i][j])))
            throw error("embedding product disagrees with exact matrix entries");
        }
    }
    if (!sharp) continue;

    if (auto s = B.det().certain_sign()) {
      mats_.sign_det_B = *s;
      break;
    }
  }
}

Int PartialZetaEngine::trace(std::array<long, 6> e) {
  // the trace is invariant under permuting the three (base, shifted) slots
  std::array<std::pair<long, long>, 3> slots = {
      std::make_pair(e[0], e[3]), std::make_pair(e[1], e[4]), std::make_pair(e[2], e[5])};
  std::sort(slots.begin(), slots.end());
  std::array<long, 6> key = {slots[0].first,  slots[1].first,  slots[2].first,
                             slots[0].second, slots[1].second, slots[2].second};
  auto it = trace_memo_.find(key);
  if (it != trace_memo_.end()) return it->second;
  Int v = galois_trace(*spec_, key, sched_);
  trace_memo_.emplace(key, v);
  return v;
}

QPiD PartialZetaEngine::m_term(long k, int nu) {
  require_even_k(k);
  if (nu != 1 && nu != 2) throw error("term index must be 1 or 2");
  long K = 3 * k;

  const IMat3& EB = nu == 1 ? mats_.EB1 : mats_.EB2;
  const Int& det = nu == 1 ? mats_.det_EB1 : mats_.det_EB2;
  if (det == 0) return {Rat(0), K, -3};
  int sign_det_E = sign_of(det) * mats_.sign_det_B;

  IMat3 EBt = EB.transpose();
  Rat lattice_part(0);
  for (long m1 = 0; m1 <= K; ++m1)
    for (long m2 = 0; m2 <= K - m1; ++m2) {
      Int c0 = multinomial_ext(K, m1, m2);
      if (c0 == 0) continue;
      long m3 = K - m1 - m2;
      Rat bsum = dedekind_sum_reduced(EBt, {m1, m2, m3});
      if (m1 % 2 || m2 % 2 || m3 % 2) {
        if (bsum != 0) throw error("odd-degree lattice sum failed to vanish");
        ++parity_checks_;
        continue;
      }
      if (bsum == 0) continue;

      Int inner(0);
      for (long k1 = 0; k1 < k; ++k1)
        for (long k2 = 0; k2 < k; ++k2)
          for (long u1 = 0; u1 < k; ++u1)
            for (long u2 = 0; u2 < k; ++u2) {
              Int c1 = multinomial_ext(m1 - 1, k - 1 - (k1 + k2), k - 1 - (u1 + u2));
              if (c1 == 0) continue;
              Int c2 = multinomial_ext(m2 - 1, k1, u1);
              if (c2 == 0) continue;
              Int c3 = multinomial_ext(K - 1 - (m1 + m2), k2, u2);
              if (c3 == 0) continue;
              long a0 = k1 + k2;
              long a1 = u1 + u2;
              long a2 = K - 2 - (m1 + k1 + k2 + u1 + u2);
              long b0 = k2;
              long b1 = u2;
              long b2 = K - 1 - (m1 + m2 + k2 + u2);
              // the first exponent triple rides the tau_1 conjugates, the
              // second the tau_2 conjugates; tau_1 is eps1 only for nu = 1
              std::array<long, 6> e = nu == 1 ? std::array<long, 6>{a0, a1, a2, b0, b1, b2}
                                              : std::array<long, 6>{b0, b1, b2, a0, a1, a2};
              inner += c1 * c2 * c3 * trace(e);
            }
      lattice_part += Rat(c0) * bsum * Rat(inner);
    }

  Rat pref(mats_.sign_L * (nu == 1 ? -1 : 1) * sign_det_E);
  pref *= make_rat(Int(1) << K, Int(6) * factorial(K));
  if ((K / 2) % 2) pref = -pref;
  pref *= rat_pow(mats_.N_rho, k) / abs(mats_.N_rho);
  pref /= Rat(det * det);

  return {pref * lattice_part * Rat(spec_->disc()), K, -3};
}

QPiD PartialZetaEngine::c_term(long k, int nu) {
  require_even_k(k);
  if (nu != 1 && nu != 2) throw error("term index must be 1 or 2");
  long K = 3 * k;

  const Int& det = nu == 1 ? mats_.det_EB1 : mats_.det_EB2;
  if (det == 0) return {Rat(0), K, -3};
  int sign_det_E = sign_of(det) * mats_.sign_det_B;

  const FieldElem& t1 = nu == 1 ? eps1_ : eps2_;
  const FieldElem& t2 = nu == 1 ? eps2_ : eps1_;

  auto emb = [&](const FieldElem& x, int pos, mpfr_prec_t p) {
    return embed_labeled(x, pos, lab_, p);
  };
  // the nine sign brackets, as functions of (i, i', i'') = (0, 1, 2)
  auto pair_bracket = [&](int i, int j) {
    return [&, i, j](mpfr_prec_t p) {
      RealBall d1 = emb(t1, i, p) * emb(t2, i, p) - emb(t1, j, p) * emb(t2, j, p);
      return d1 * (emb(t1, i, p) - emb(t1, j, p));
    };
  };
  auto wedge_bracket = [&](int i, int j, int l) {
    return [&, i, j, l](mpfr_prec_t p) {
      return emb(t1, l, p) * (emb(t1, i, p) - emb(t1, j, p)) * (emb(t2, j, p) - emb(t2, i, p));
    };
  };
  auto norm_bracket = [&](int i, int j, int l) {
    return [&, i, j, l](mpfr_prec_t p) {
      RealBall d1 = emb(t1, i, p) * emb(t2, i, p) - emb(t1, j, p) * emb(t2, j, p);
      return emb(t1, l, p) * (emb(t2, i, p) - emb(t2, j, p)) * d1;
    };
  };
  auto certified = [&](auto&& fn) {
    try {
      return certified_sign(fn, sched_);
    } catch (const precision_exhausted&) {
      throw sign_unresolved("correction bracket sign did not resolve; possibly exactly zero");
    }
  };

  long plain = 0;
  plain += certified(pair_bracket(0, 1));
  plain += certified(pair_bracket(1, 2));
  plain += certified(pair_bracket(2, 0));
  plain += certified(wedge_bracket(0, 1, 2));
  plain += certified(wedge_bracket(1, 2, 0));
  plain += certified(wedge_bracket(2, 0, 1));
  long normed = 0;
  normed += certified(norm_bracket(0, 1, 2));
  normed += certified(norm_bracket(1, 2, 0));
  normed += certified(norm_bracket(2, 0, 1));
  Rat brackets = Rat(plain) + t2.norm() * Rat(normed);

  BernoulliTable bern(static_cast<unsigned>(K - 2));
  Rat pref(mats_.sign_L * (nu == 1 ? 1 : -1) * sign_det_E);
  Int fk1 = factorial(k - 1);
  pref *= make_rat(Int(1) << K, Int(12) * Int(K - 2) * fk1 * fk1 * fk1);
  if ((K / 2) % 2) pref = -pref;
  pref *= bern.number(static_cast<unsigned>(K - 2));
  pref *= rat_pow(mats_.N_rho, k) / abs(mats_.N_rho);

  return {pref * brackets * Rat(spec_->disc()), K, -3};
}

QPiD PartialZetaEngine::zeta_sum(long k) {
  return m_term(k, 1) + m_term(k, 2) + c_term(k, 1) + c_term(k, 2);
}

QPiD PartialZetaEngine::partial_zeta_2() {
  QPiD z = zeta_sum(2);
  z.q /= 2;
  return z;
}

Rat reflect_to_minus1(const QPiD& z) {
  if (z.pi_power != 6 || z.d_half_power != -3)
    throw shape_mismatch("reflection needs the (pi^6, D^(-3/2)) shape");
  return -z.q / 8;
}

namespace {
Rat family_poly(long m) {
  Int M(m);
  Int p = ((((M + 3) * M - 5) * M - 15) * M + 4) * M + 12;
  return Rat(M * p);
}
}  // namespace

Rat closed_form_partial_zeta2(long m) { return family_poly(m) / 945; }

Rat closed_form_partial_minus1(long m) { return -family_poly(m) / 7560; }

}  // namespace cz
