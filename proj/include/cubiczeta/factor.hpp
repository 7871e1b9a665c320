#ifndef CUBICZETA_FACTOR_HPP
#define CUBICZETA_FACTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "cubiczeta/errors.hpp"
#include "cubiczeta/rat.hpp"

namespace cz {

// primes <= bound, shared sieve, grows on demand
std::vector<uint64_t> primes_up_to(uint64_t bound);

bool is_prime(const Int& n);

// sorted (prime, exponent) pairs of |n|; n must be nonzero
std::vector<std::pair<Int, unsigned>> factorize(const Int& n, uint64_t rho_budget = 50'000'000);

bool is_squarefree(const Int& n);

}  // namespace cz

#endif
