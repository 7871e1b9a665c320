#include "cubiczeta/bernoulli.hpp"

#include <cassert>

namespace cz {

BernoulliTable::BernoulliTable(unsigned max_degree) {
  extend(max_degree);
}

void BernoulliTable::extend(unsigned max_degree) {
  if (!numbers_.empty() && max_degree < numbers_.size()) return;
  unsigned old = static_cast<unsigned>(numbers_.size());
  numbers_.resize(max_degree + 1);
  polys_.resize(max_degree + 1);
  for (unsigned n = old; n <= max_degree; ++n) {
    if (n == 0) {
      numbers_[0] = 1;
    } else {
      // B_n = -1/(n+1) * sum_{k<n} binom(n+1, k) B_k
      Rat s = 0;
      for (unsigned k = 0; k < n; ++k) s += make_rat(binomial(n + 1, k), 1) * numbers_[k];
      numbers_[n] = s / make_rat(-(static_cast<long>(n) + 1), 1);
    }
    // B_n(x) = sum_k binom(n, k) B_{n-k} x^k
    std::vector<Rat> coeffs(n + 1);
    for (unsigned k = 0; k <= n; ++k)
      coeffs[k] = make_rat(binomial(n, k), 1) * numbers_[n - k];
    polys_[n] = std::move(coeffs);
  }
}

const Rat& BernoulliTable::number(unsigned n) const {
  assert(n < numbers_.size());
  return numbers_[n];
}

const std::vector<Rat>& BernoulliTable::poly(unsigned n) const {
  assert(n < polys_.size());
  return polys_[n];
}

Rat BernoulliTable::poly_at(unsigned n, const Rat& x) const {
  const auto& c = poly(n);
  Rat acc = 0;
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

Rat BernoulliTable::periodic(unsigned n, const Rat& x) const {
  if (n == 1 && rat_is_integer(x)) return Rat(0);
  return poly_at(n, rat_frac(x));
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int multinomial_ext(long k, long l, long m) {
  if (l >= 0 && m >= 0) {
    if (k >= 0 && k - l - m >= 0) {
      Int r = binomial(k, l);
      r *= binomial(k - l, m);
      return r;
    }
    if (k == -1) {
      Int r = binomial(l + m, l);
      if ((l + m) % 2 != 0) r = -r;
      return r;
    }
  }
  return Int(0);
}

}  // namespace cz
