#ifndef CUBICZETA_QPID_HPP
#define CUBICZETA_QPID_HPP

#include <string>

#include "cubiczeta/errors.hpp"
#include "cubiczeta/rat.hpp"

namespace cz {

// An exact number of the form q * pi^pi_power * D^(d_half_power / 2), with D
// the field discriminant kept symbolic.  Addition only combines like shapes.
struct QPiD {
  Rat q;
  long pi_power = 0;
  long d_half_power = 0;
};

inline QPiD operator+(const QPiD& a, const QPiD& b) {
  if (a.pi_power != b.pi_power || a.d_half_power != b.d_half_power)
    throw shape_mismatch("adding values with different pi or sqrt(D) powers");
  return {a.q + b.q, a.pi_power, a.d_half_power};
}

inline bool operator==(const QPiD& a, const QPiD& b) {
  return a.q == b.q && a.pi_power == b.pi_power && a.d_half_power == b.d_half_power;
}

std::string qpid_str(const QPiD& v);

}  // namespace cz

#endif
