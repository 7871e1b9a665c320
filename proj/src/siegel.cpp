#include "cubiczeta/siegel.hpp"

#include <algorithm>
#include <utility>

#include "cubiczeta/errors.hpp"

namespace cz {

namespace {

Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

// Dual basis embeddings wt[j][i] = w~_{j+1} at root i+1, at a precision
// where no w~3 embedding straddles zero (it never vanishes, so the loop
// terminates).
std::array<std::array<RealBall, 3>, 3> dual_embeddings(
    const std::array<FieldElem, 3>& dual, const PrecisionSchedule& sched) {
  for (mpfr_prec_t p = sched.start;; p *= 2) {
    if (p > sched.cap)
      throw precision_exhausted("dual basis embeddings not separated from zero");
    std::array<std::array<RealBall, 3>, 3> wt;
    bool ok = true;
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) {
        wt[j][i] = dual[j].embed(i + 1, p);
        if (j == 2 && wt[j][i].contains_zero()) ok = false;
      }
    if (ok) return wt;
  }
}

}  // namespace

std::vector<S1Element> enumerate_S1(const FieldSpec& spec,
                                    const PrecisionSchedule& sched) {
  if (!spec.valid())
    throw error("enumeration needs a maximal order: " + spec.validity().reason);

  const long m = spec.m();
  auto dual = dual_basis(spec);
  auto wt = dual_embeddings(dual, sched);

  std::vector<S1Element> out;
  // b = Tr(nu alpha) is a convex combination of the roots, so it lies in
  // (alpha_3, alpha_1) subset (-1, m + 2).
  for (long b = 0; b <= m + 1; ++b) {
    // For each embedding, 0 < base + c * d < 1 pins c between the two
    // endpoint quotients; intersect the three enclosures.
    bool empty = false;
    Rat lo, hi;
    bool first = true;
    for (int i = 0; i < 3 && !empty; ++i) {
      RealBall base = wt[0][i].add(wt[1][i].mul(RealBall(b, wt[0][i].precision())));
      const RealBall& d = wt[2][i];
      RealBall q0 = base.neg().div(d);
      RealBall q1 = (RealBall(1, base.precision()).sub(base)).div(d);
      Rat l = std::min(q0.lower_rat(), q1.lower_rat());
      Rat h = std::max(q0.upper_rat(), q1.upper_rat());
      if (first) {
        lo = l;
        hi = h;
        first = false;
      } else {
        lo = std::max(lo, l);
        hi = std::min(hi, h);
      }
      if (lo > hi) empty = true;
    }
    if (empty) continue;

    FieldElem base_elem = dual[0] + dual[1].mul_scalar(make_rat(b));
    Int c_lo = rat_ceil(lo), c_hi = rat_floor(hi);
    if (c_lo > c_hi) continue;
    if (!c_lo.fits_slong_p() || !c_hi.fits_slong_p())
      throw error("candidate box unreasonably large");
    for (long c = c_lo.get_si(); c <= c_hi.get_si(); ++c) {
      FieldElem nu = base_elem + dual[2].mul_scalar(make_rat(c));
      bool positive = true;
      for (int i = 0; i < 3 && positive; ++i) {
        int s = certified_sign(
            [&](mpfr_prec_t p) { return nu.embed(i + 1, p); }, sched);
        positive = (s > 0);
      }
      if (!positive) continue;
      S1Element el;
      el.b = b;
      el.c = c;
      el.nu = nu;
      for (int i = 0; i < 3; ++i) el.emb[i] = nu.embed(i + 1, sched.start);
      out.push_back(std::move(el));
    }
  }

  std::sort(out.begin(), out.end(), [](const S1Element& x, const S1Element& y) {
    return x.b != y.b ? x.b < y.b : x.c < y.c;
  });
  return out;
}

std::vector<LatticePoint> T_set(long m) {
  if (m < 4) throw error("index set needs m >= 4");
  std::vector<LatticePoint> T;
  T.reserve(static_cast<size_t>((m * m + m - 6) / 2));
  for (long t = 1; t <= m - 1; ++t) T.push_back({1, t});
  for (long s = 2; s <= m - 2; ++s)
    for (long t = s; t <= m; ++t) T.push_back({s, t});
  T.push_back({m - 1, m});
  return T;
}

Int f_st(long m, long s, long t) {
  Int mm(m), ss(s), tt(t);
  Int c2 = ss * (tt + 1 - ss);
  Int c1 = (tt - 2) * ss * ss - (tt * tt - tt) * ss - (tt * tt + tt);
  Int c0 = ss * ss * ss - 2 * ss * ss - (tt * tt - 3 * tt - 1) * ss +
           tt * tt * tt - tt - 1;
  return (c2 * mm + c1) * mm + c0;
}

SiegelReport siegel_report(const FieldSpec& spec, PrimeDecompositionCache* cache) {
  PrimeDecompositionCache local(spec);
  if (!cache) cache = &local;

  FieldElem dgen = different_generator(spec);
  SiegelReport rep;
  rep.sigma_total = 0;
  rep.all_prime = true;
  for (const auto& el : enumerate_S1(spec)) {
    FieldElem mu = el.nu * dgen;
    if (!mu.is_integral())
      throw error("product with the different generator must be integral");
    FactoredIdeal I = factor_principal(spec, mu, cache);
    SiegelElementReport r;
    r.b = el.b;
    r.c = el.c;
    r.norm = I.norm;
    r.sigma = sigma1(I);
    r.prime = is_prime_ideal(I);
    rep.sigma_total += r.sigma;
    rep.all_prime = rep.all_prime && r.prime;
    rep.elements.push_back(std::move(r));
  }
  rep.zeta_minus1 = make_rat(-rep.sigma_total, Int(63));
  return rep;
}

Rat siegel_zeta_minus1(const FieldSpec& spec) {
  return siegel_report(spec).zeta_minus1;
}

bool norm_multiset_check(const FieldSpec& spec) {
  FieldElem dgen = different_generator(spec);
  Rat dn = dgen.norm();

  std::vector<Int> lhs;
  for (const auto& el : enumerate_S1(spec)) {
    Rat n = el.nu.norm() * dn;
    if (!rat_is_integer(n))
      throw error("ideal norm came out non-integral");
    lhs.push_back(abs(n.get_num()));
  }

  std::vector<Int> rhs;
  for (const auto& pt : T_set(spec.m()))
    rhs.push_back(abs(f_st(spec.m(), pt.s, pt.t)));

  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  return lhs == rhs;
}

}  // namespace cz
