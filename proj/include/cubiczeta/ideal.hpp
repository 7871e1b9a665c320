#ifndef CUBICZETA_IDEAL_HPP
#define CUBICZETA_IDEAL_HPP

#include <map>
#include <vector>

#include "cubiczeta/field.hpp"
#include "cubiczeta/smallmat.hpp"

namespace cz {

// Prime ideal (p, g(alpha)) of the ring of integers Z[alpha].
struct PrimeIdeal {
  Int p;
  std::vector<Int> g;  // monic factor of f_m mod p, coefficients in [0, p)
  unsigned e;          // ramification index
  unsigned f;          // residue degree = deg g
  IMat3 lattice;       // HNF row basis over the coordinates (1, alpha, alpha^2)

  Int norm() const { return int_pow(p, f); }
};

// Factoring f_m mod p mirrors the splitting of p because (1, alpha, alpha^2)
// is an integral basis for valid m.
std::vector<PrimeIdeal> decompose_prime(const FieldSpec& spec, const Int& p);

// Splitting shape only: (e, f) pairs, no lattices.  Cheap path for Euler
// products over many primes.
std::vector<std::pair<unsigned, unsigned>> splitting_type(const FieldSpec& spec, const Int& p);

// generator of the different: f_m'(alpha) = 3 alpha^2 - 2m alpha - (m+1)
FieldElem different_generator(const FieldSpec& spec);

// largest j with x in P^j, for integral nonzero x
unsigned valuation(const FieldElem& x, const PrimeIdeal& P);

struct FactoredIdeal {
  std::vector<std::pair<PrimeIdeal, unsigned>> factors;  // exponents >= 1
  Int norm;
};

class PrimeDecompositionCache {
 public:
  explicit PrimeDecompositionCache(const FieldSpec& spec) : spec_(&spec) {}
  const std::vector<PrimeIdeal>& decomposition(const Int& p);

 private:
  const FieldSpec* spec_;
  std::map<Int, std::vector<PrimeIdeal>> cache_;
};

// prime factorization of the principal ideal (x), x integral and nonzero
FactoredIdeal factor_principal(const FieldSpec& spec, const FieldElem& x,
                               PrimeDecompositionCache* cache = nullptr);

// sum of norms of all ideal divisors
Int sigma1(const FactoredIdeal& I);

bool is_prime_ideal(const FactoredIdeal& I);

}  // namespace cz

#endif
