#ifndef CUBICZETA_DEDEKIND_HPP
#define CUBICZETA_DEDEKIND_HPP

#include <array>
#include <cstdint>

#include "cubiczeta/rat.hpp"
#include "cubiczeta/smallmat.hpp"

namespace cz {

// Generalized three-dimensional Dedekind--Bernoulli sum attached to an
// integer matrix A with det A != 0:
//
//   B(r, A) = sum over k in [0, |det A|)^3 of
//             prod_i ~B_{r_i}( (adj(A) k)_i / det A )
//
// where ~B is the periodic Bernoulli polynomial (with the value 0 at
// integers when r_i = 1).
//
// The direct form walks all |det A|^3 lattice points.  The reduced form
// groups points by their image adj(A) k  mod  det A * Z^3, which collapses
// the sum to [Z^3 : L] - fold fewer terms (L the image lattice).  Both
// return the same exact rational.

Rat dedekind_sum_direct(const IMat3& A, const std::array<long, 3>& r,
                        uint64_t budget = 1'000'000'000);

Rat dedekind_sum_reduced(const IMat3& A, const std::array<long, 3>& r,
                         uint64_t budget = 1'000'000'000);

}  // namespace cz

#endif
