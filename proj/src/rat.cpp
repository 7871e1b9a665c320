#include "cubiczeta/rat.hpp"

#include <cctype>
#include <stdexcept>

namespace cz {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw division_by_zero("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();  // mpq_class(num, den) does not canonicalize on its own
  return q;
}

Rat make_rat(long num, long den) {
  return make_rat(Int(num), Int(den));
}

Int rat_floor(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

Rat rat_frac(const Rat& q) {
  Rat r = q - Rat(rat_floor(q));
  r.canonicalize();
  return r;
}

bool rat_is_integer(const Rat& q) {
  return q.get_den() == 1;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw error("empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw error("bad rational literal: " + s);
  }
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw error("bad rational literal: " + s);
  if (q.get_den() == 0) throw division_by_zero("rational with zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string int_str(const Int& z) {
  return z.get_str();
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace cz
