#ifndef CUBICZETA_BERNOULLI_HPP
#define CUBICZETA_BERNOULLI_HPP

#include <vector>

#include "cubiczeta/rat.hpp"

namespace cz {

// Bernoulli numbers (B1 = -1/2 convention) and polynomials, cached up to a
// requested degree.
class BernoulliTable {
 public:
  explicit BernoulliTable(unsigned max_degree = 8);

  const Rat& number(unsigned n) const;

  // B_n(x) coefficients, constant term first
  const std::vector<Rat>& poly(unsigned n) const;

  Rat poly_at(unsigned n, const Rat& x) const;

  // periodic Bernoulli: B_n(x - floor(x)), except 0 for n = 1 at integers
  Rat periodic(unsigned n, const Rat& x) const;

  unsigned max_degree() const { return static_cast<unsigned>(numbers_.size()) - 1; }

 private:
  void extend(unsigned max_degree);

  std::vector<Rat> numbers_;
  std::vector<std::vector<Rat>> polys_;
};

// binomial with integer args, 0 outside the triangle
Int binomial(long n, long k);

// Extended multinomial coefficient (k over l, m):
//   k!/(l! m! (k-l-m)!)            for k, l, m, k-l-m all >= 0
//   (-1)^(l+m) * binom(l+m, l)     for k = -1, l >= 0, m >= 0
//   0                              otherwise
Int multinomial_ext(long k, long l, long m);

}  // namespace cz

#endif
