#include "cubiczeta/ideal.hpp"

#include <algorithm>
#include <cassert>

#include "cubiczeta/factor.hpp"

namespace cz {

namespace {

// dense univariate arithmetic mod p; coefficients normalized into [0, p)
using Poly = std::vector<Int>;

Int mod_p(const Int& a, const Int& p) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return r;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_sub(const Poly& a, const Poly& b, const Int& p) {
  Poly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < r.size(); ++i) {
    Int v = (i < a.size() ? a[i] : Int(0)) - (i < b.size() ? b[i] : Int(0));
    r[i] = mod_p(v, p);
  }
  trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, const Int& p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& c : r) c = mod_p(c, p);
  trim(r);
  return r;
}

Int inv_mod(const Int& a, const Int& p) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
    throw error("non-invertible leading coefficient");
  return r;
}

// remainder of a by b (b nonzero), both mod p
Poly poly_rem(Poly a, const Poly& b, const Int& p) {
  trim(a);
  int db = degree(b);
  Int lead_inv = inv_mod(b.back(), p);
  while (degree(a) >= db) {
    Int c = mod_p(a.back() * lead_inv, p);
    int shift = degree(a) - db;
    for (int i = 0; i <= db; ++i) a[i + shift] = mod_p(a[i + shift] - c * b[i], p);
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, const Int& p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Int li = inv_mod(a.back(), p);
    for (auto& c : a) c = mod_p(c * li, p);
  }
  return a;
}

// base^e mod (f, p)
Poly poly_powmod(Poly base, Int e, const Poly& f, const Int& p) {
  Poly r{Int(1)};
  base = poly_rem(std::move(base), f, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = poly_rem(poly_mul(r, base, p), f, p);
    base = poly_rem(poly_mul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

Int poly_eval(const Poly& a, const Int& x, const Int& p) {
  Int acc = 0;
  for (size_t i = a.size(); i-- > 0;) acc = mod_p(acc * x + a[i], p);
  return acc;
}

// roots of a squarefree product of linear factors, via repeated
// (x+t)^((p-1)/2) splitting; p odd, deg g in {2, 3}
void split_linear(const Poly& g, const Int& p, std::vector<Int>& roots) {
  int d = degree(g);
  if (d <= 0) return;
  if (d == 1) {
    // g = x + c  (monic) -> root = -c
    roots.push_back(mod_p(-g[0], p));
    return;
  }
  Int half = (p - 1) / 2;
  for (Int t = 0;; ++t) {
    if (t > p) throw error("linear splitting failed to terminate");
    Poly shifted{mod_p(t, p), Int(1)};
    Poly w = poly_powmod(shifted, half, g, p);
    w = poly_sub(w, Poly{Int(1)}, p);
    Poly h = poly_gcd(w, g, p);
    int dh = degree(h);
    if (dh > 0 && dh < d) {
      split_linear(h, p, roots);
      // divide g by h
      Poly q;  // long division to get the cofactor
      {
        Poly a = g;
        int dHH = degree(h);
        q.assign(degree(a) - dHH + 1, Int(0));
        Int li = inv_mod(h.back(), p);
        while (degree(a) >= dHH && !a.empty()) {
          Int c = mod_p(a.back() * li, p);
          int shift = degree(a) - dHH;
          q[shift] = c;
          for (int i = 0; i <= dHH; ++i) a[i + shift] = mod_p(a[i + shift] - c * h[i], p);
          trim(a);
        }
      }
      split_linear(q, p, roots);
      return;
    }
  }
}

std::vector<Int> roots_mod_p(const Poly& fbar, const Int& p) {
  std::vector<Int> roots;
  if (p < 64) {
    for (Int r = 0; r < p; ++r)
      if (poly_eval(fbar, r, p) == 0) roots.push_back(r);
    return roots;
  }
  // distinct-root part: gcd(x^p - x, f)
  Poly xp = poly_powmod(Poly{Int(0), Int(1)}, p, fbar, p);
  Poly g = poly_gcd(poly_sub(xp, Poly{Int(0), Int(1)}, p), fbar, p);
  split_linear(g, p, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

// divide (x - r) out of a, return quotient; remainder must vanish
Poly divide_root(const Poly& a, const Int& r, const Int& p) {
  Poly q(a.size() - 1, Int(0));
  Int carry = 0;
  for (size_t i = a.size(); i-- > 1;) {
    carry = mod_p(a[i] + carry, p);
    q[i - 1] = carry;
    carry = mod_p(carry * r, p);
  }
  return q;
}

FieldElem elem_from_poly(const FieldSpec& spec, const Poly& g) {
  std::array<Rat, 3> c{Rat(0), Rat(0), Rat(0)};
  for (size_t i = 0; i < g.size() && i < 3; ++i) c[i] = Rat(g[i]);
  FieldElem x(spec, c[0], c[1], c[2]);
  return x;
}

IMat3 ideal_lattice(const FieldSpec& spec, const Int& p, const Poly& g) {
  std::vector<Vec3<Int>> rows;
  for (int i = 0; i < 3; ++i) {
    Vec3<Int> r{Int(0), Int(0), Int(0)};
    r[i] = p;
    rows.push_back(r);
  }
  if (degree(g) < 3) {
    FieldElem ge = elem_from_poly(spec, g);
    FieldElem a = FieldElem::alpha(spec);
    FieldElem cur = ge;
    for (int j = 0; j < 3; ++j) {
      Vec3<Int> r;
      for (int i = 0; i < 3; ++i) {
        const Rat& q = cur.coord(i);
        if (!rat_is_integer(q)) throw error("non-integral ideal generator");
        r[i] = q.get_num();
      }
      rows.push_back(r);
      cur = cur * a;
    }
  }
  return hnf_rows(std::move(rows));
}

Vec3<Int> integral_coords(const FieldElem& x) {
  Vec3<Int> v;
  for (int i = 0; i < 3; ++i) {
    if (!rat_is_integer(x.coord(i))) throw error("element is not integral");
    v[i] = x.coord(i).get_num();
  }
  return v;
}

// product of two ideal lattices (rows as elements)
IMat3 lattice_mul(const FieldSpec& spec, const IMat3& A, const IMat3& B) {
  std::vector<Vec3<Int>> rows;
  for (int i = 0; i < 3; ++i) {
    FieldElem ai(spec, Rat(A[i][0]), Rat(A[i][1]), Rat(A[i][2]));
    for (int j = 0; j < 3; ++j) {
      FieldElem bj(spec, Rat(B[j][0]), Rat(B[j][1]), Rat(B[j][2]));
      rows.push_back(integral_coords(ai * bj));
    }
  }
  return hnf_rows(std::move(rows));
}

}  // namespace

std::vector<PrimeIdeal> decompose_prime(const FieldSpec& spec, const Int& p) {
  if (!is_prime(p)) throw error("decompose_prime needs a prime");
  if (!spec.valid()) throw error("prime decomposition needs a maximal order");
  long m = spec.m();
  Poly fbar{mod_p(Int(-1), p), mod_p(Int(-(m + 1)), p), mod_p(Int(-m), p), Int(1)};
  trim(fbar);

  std::vector<Int> roots = roots_mod_p(fbar, p);
  std::vector<PrimeIdeal> out;
  Poly cof = fbar;
  for (const Int& r : roots) {
    unsigned e = 0;
    while (degree(cof) >= 1 && poly_eval(cof, r, p) == 0) {
      cof = divide_root(cof, r, p);
      ++e;
    }
    PrimeIdeal P;
    P.p = p;
    P.g = {mod_p(-r, p), Int(1)};
    P.e = e;
    P.f = 1;
    out.push_back(std::move(P));
  }
  if (degree(cof) > 0) {
    PrimeIdeal P;
    P.p = p;
    P.g = cof;
    P.e = 1;
    P.f = static_cast<unsigned>(degree(cof));
    out.push_back(std::move(P));
  }
  unsigned total = 0;
  for (const auto& P : out) total += P.e * P.f;
  if (total != 3) throw error("splitting degrees do not sum to 3");
  std::sort(out.begin(), out.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
    if (a.f != b.f) return a.f < b.f;
    return a.g < b.g;
  });
  for (auto& P : out) P.lattice = ideal_lattice(spec, p, P.g);
  return out;
}

std::vector<std::pair<unsigned, unsigned>> splitting_type(const FieldSpec& spec, const Int& p) {
  // same factorization, lattices skipped
  long m = spec.m();
  Poly fbar{mod_p(Int(-1), p), mod_p(Int(-(m + 1)), p), mod_p(Int(-m), p), Int(1)};
  trim(fbar);
  std::vector<Int> roots = roots_mod_p(fbar, p);
  std::vector<std::pair<unsigned, unsigned>> out;
  Poly cof = fbar;
  for (const Int& r : roots) {
    unsigned e = 0;
    while (degree(cof) >= 1 && poly_eval(cof, r, p) == 0) {
      cof = divide_root(cof, r, p);
      ++e;
    }
    out.emplace_back(e, 1u);
  }
  if (degree(cof) > 0) out.emplace_back(1u, static_cast<unsigned>(degree(cof)));
  return out;
}

FieldElem different_generator(const FieldSpec& spec) {
  long m = spec.m();
  return FieldElem(spec, make_rat(-(m + 1), 1), make_rat(-2 * m, 1), make_rat(3, 1));
}

unsigned valuation(const FieldElem& x, const PrimeIdeal& P) {
  if (x.is_zero()) throw error("valuation of zero");
  Vec3<Int> v = integral_coords(x);
  if (!hnf_contains(P.lattice, v)) return 0;
  const FieldSpec& spec = x.spec();
  IMat3 power = P.lattice;
  unsigned k = 1;
  for (;;) {
    power = lattice_mul(spec, power, P.lattice);
    if (!hnf_contains(power, v)) return k;
    ++k;
    if (k > 200) throw error("runaway valuation");
  }
}

const std::vector<PrimeIdeal>& PrimeDecompositionCache::decomposition(const Int& p) {
  auto it = cache_.find(p);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(p, decompose_prime(*spec_, p)).first->second;
}

FactoredIdeal factor_principal(const FieldSpec& spec, const FieldElem& x, PrimeDecompositionCache* cache) {
  if (x.is_zero()) throw error("cannot factor the zero ideal");
  Rat n = x.norm();
  if (!rat_is_integer(n)) throw error("element is not integral");
  Int N = abs(n.get_num());

  FactoredIdeal out;
  out.norm = N;
  if (N == 1) return out;

  PrimeDecompositionCache local(spec);
  PrimeDecompositionCache& dc = cache ? *cache : local;

  for (const auto& [p, vp] : factorize(N)) {
    unsigned seen = 0;
    for (const PrimeIdeal& P : dc.decomposition(p)) {
      unsigned v = valuation(x, P);
      if (v > 0) {
        out.factors.emplace_back(P, v);
        seen += v * P.f;
      }
    }
    if (seen != vp) throw error("ideal valuations do not account for the norm");
  }
  return out;
}

Int sigma1(const FactoredIdeal& I) {
  Int total = 1;
  for (const auto& [P, v] : I.factors) {
    Int np = P.norm();
    Int geo = 1, pw = 1;
    for (unsigned i = 0; i < v; ++i) {
      pw *= np;
      geo += pw;
    }
    total *= geo;
  }
  return total;
}

bool is_prime_ideal(const FactoredIdeal& I) {
  return I.factors.size() == 1 && I.factors[0].second == 1;
}

}  // namespace cz
