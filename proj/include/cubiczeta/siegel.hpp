#ifndef CUBICZETA_SIEGEL_HPP
#define CUBICZETA_SIEGEL_HPP

#include <array>
#include <vector>

#include "cubiczeta/ball.hpp"
#include "cubiczeta/field.hpp"
#include "cubiczeta/ideal.hpp"
#include "cubiczeta/rat.hpp"

namespace cz {

// Trace-one totally positive element of the inverse different, written over
// the dual basis of (1, alpha, alpha^2) as w~1 + b w~2 + c w~3.
struct S1Element {
  long b = 0;
  long c = 0;
  FieldElem nu;
  std::array<RealBall, 3> emb;  // certified enclosures, each inside (0, 1)
};

// All such elements, sorted by (b, c).  The set is finite: the embeddings
// of any member lie in (0, 1), which traps b = Tr(nu alpha) and
// c = Tr(nu alpha^2) in integer boxes.
std::vector<S1Element> enumerate_S1(
    const FieldSpec& spec,
    const PrecisionSchedule& sched = PrecisionSchedule::from_env());

struct LatticePoint {
  long s = 0;
  long t = 0;
};

// Index pairs (s, t) enumerating S1: row s = 1 runs t = 1..m-1, rows
// s = 2..m-2 run t = s..m, and the final row holds the single pair
// (m-1, m).  Size (m^2 + m - 6) / 2.
std::vector<LatticePoint> T_set(long m);

// Closed form for the absolute norm of (nu) D_K at lattice point (s, t).
Int f_st(long m, long s, long t);

struct SiegelElementReport {
  long b = 0;
  long c = 0;
  Int norm;    // N((nu) D_K)
  Int sigma;   // sum of divisor norms
  bool prime = false;
};

struct SiegelReport {
  std::vector<SiegelElementReport> elements;  // sorted by (b, c)
  Int sigma_total;
  Rat zeta_minus1;  // -(1/63) * sigma_total
  bool all_prime = false;
};

SiegelReport siegel_report(const FieldSpec& spec,
                           PrimeDecompositionCache* cache = nullptr);

Rat siegel_zeta_minus1(const FieldSpec& spec);

// The multiset {N((nu) D_K) : nu in S1} must equal {|f_st(m, s, t)| : (s, t)
// in T_set(m)}.
bool norm_multiset_check(const FieldSpec& spec);

}  // namespace cz

#endif
