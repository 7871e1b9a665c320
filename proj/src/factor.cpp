#include "cubiczeta/factor.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace cz {

namespace {

constexpr uint64_t kTrialBound = 1'000'000;

std::vector<uint64_t> sieve_primes(uint64_t bound) {
  std::vector<bool> comp(bound + 1, false);
  std::vector<uint64_t> ps;
  for (uint64_t i = 2; i <= bound; ++i) {
    if (comp[i]) continue;
    ps.push_back(i);
    for (uint64_t j = i * i; j <= bound; j += i) comp[j] = true;
  }
  return ps;
}

std::mutex g_prime_mutex;
std::shared_ptr<const std::vector<uint64_t>> g_primes;
uint64_t g_prime_bound = 0;

// snapshot of the cached sieve; may extend past `bound`
std::shared_ptr<const std::vector<uint64_t>> cached_primes(uint64_t bound) {
  std::lock_guard<std::mutex> lock(g_prime_mutex);
  if (bound > g_prime_bound || !g_primes) {
    uint64_t b = std::max<uint64_t>(bound, 1024);
    g_primes = std::make_shared<const std::vector<uint64_t>>(sieve_primes(b));
    g_prime_bound = b;
  }
  return g_primes;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t n) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

uint64_t gcd64(uint64_t a, uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Brent's cycle variant of Pollard rho; returns a nontrivial factor of
// composite odd n, or 0 if the iteration budget runs out.
uint64_t pollard_brent(uint64_t n, uint64_t& budget) {
  for (uint64_t c = 1;; ++c) {
    uint64_t x = 2, y = 2, d = 1;
    uint64_t power = 1, lam = 1;
    while (d == 1) {
      if (budget == 0) return 0;
      if (lam == power) {
        x = y;
        power *= 2;
        lam = 0;
      }
      y = (mulmod(y, y, n) + c) % n;
      ++lam;
      --budget;
      uint64_t diff = x > y ? x - y : y - x;
      if (diff == 0) break;  // cycle with this c, try next
      d = gcd64(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_u64(uint64_t n, std::map<Int, unsigned>& out, uint64_t& budget) {
  if (n == 1) return;
  if (mpz_probab_prime_p(Int(static_cast<unsigned long>(n)).get_mpz_t(), 32) != 0) {
    out[Int(static_cast<unsigned long>(n))]++;
    return;
  }
  uint64_t d = pollard_brent(n, budget);
  if (d == 0) throw factorization_timeout("factoring budget exhausted");
  factor_u64(d, out, budget);
  factor_u64(n / d, out, budget);
}

// Pollard rho on mpz for inputs beyond 64 bits.
Int pollard_mpz(const Int& n, uint64_t& budget) {
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    while (d == 1) {
      if (budget == 0) return Int(0);
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      budget -= 1;
      Int diff = abs(x - y);
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_mpz(const Int& n, std::map<Int, unsigned>& out, uint64_t& budget) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 32) != 0) {
    out[n]++;
    return;
  }
  if (n.fits_ulong_p()) {
    factor_u64(n.get_ui(), out, budget);
    return;
  }
  Int d = pollard_mpz(n, budget);
  if (d == 0) throw factorization_timeout("factoring budget exhausted");
  factor_mpz(d, out, budget);
  factor_mpz(n / d, out, budget);
}

}  // namespace

std::vector<uint64_t> primes_up_to(uint64_t bound) {
  auto ps = cached_primes(bound);
  auto end = std::upper_bound(ps->begin(), ps->end(), bound);
  return std::vector<uint64_t>(ps->begin(), end);
}

bool is_prime(const Int& n) {
  if (n <= 1) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

std::vector<std::pair<Int, unsigned>> factorize(const Int& n, uint64_t rho_budget) {
  Int v = abs(n);
  if (v == 0) throw error("factorize(0)");
  std::map<Int, unsigned> acc;
  // strip small primes first
  auto ps_snap = cached_primes(65536);
  const auto& ps = *ps_snap;
  for (uint64_t p : ps) {
    if (v == 1) break;
    if (Int(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p) > v) break;
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
      acc[Int(static_cast<unsigned long>(p))]++;
      v /= static_cast<unsigned long>(p);
    }
  }
  if (v > 1) {
    if (is_prime(v)) {
      acc[v]++;
    } else {
      // continue trial division up to the full bound before rho
      auto ps2_snap = cached_primes(kTrialBound);
      const auto& ps2 = *ps2_snap;
      for (size_t i = 0; i < ps2.size() && v > 1; ++i) {
        uint64_t p = ps2[i];
        if (p <= 65536) continue;
        if (Int(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p) > v) break;
        while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
          acc[Int(static_cast<unsigned long>(p))]++;
          v /= static_cast<unsigned long>(p);
        }
      }
      if (v > 1) factor_mpz(v, acc, rho_budget);
    }
  }
  std::vector<std::pair<Int, unsigned>> out(acc.begin(), acc.end());
  return out;
}

bool is_squarefree(const Int& n) {
  if (n == 0) return false;
  for (const auto& [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) return false;
  }
  return true;
}

}  // namespace cz
