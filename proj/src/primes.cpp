#include "covercalc/primes.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "covercalc/error.hpp"

namespace covercalc {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

constexpr unsigned kTrialBound = 10000;

mpz_class brent_rho(const mpz_class& n, unsigned long c) {
  mpz_class y = 2, x, ys, q = 1, g = 1, diff;
  const unsigned long m = 128;
  unsigned long r = 1;
  auto step = [&](mpz_class& v) {
    v = v * v + c;
    v %= n;
  };
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        step(y);
        diff = abs(x - y);
        q = q * diff % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
  } while (g == 1);
  if (g == n) {
    // Backtrack one step at a time from the last saved position.
    do {
      step(ys);
      diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void factor_into(const mpz_class& n, std::vector<mpz_class>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  mpz_class d = n;
  for (unsigned long c = 1; d == n; ++c) d = brent_rho(n, c);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t w : kWitnesses) {
    if (n % w == 0) return n == w;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

void require_prime(std::uint64_t p, const char* what) {
  if (!is_prime(p)) {
    throw DomainError(std::string(what) + ": " + std::to_string(p) + " is not prime");
  }
}

PrimeSet::PrimeSet(std::vector<mpz_class> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  for (const auto& q : primes_) {
    if (!is_prime(q)) throw DomainError("PrimeSet: " + q.get_str() + " is not prime");
  }
}

bool PrimeSet::contains(const mpz_class& q) const {
  return std::binary_search(primes_.begin(), primes_.end(), q);
}

bool PrimeSet::is_subset_of(const PrimeSet& other) const {
  return std::includes(other.primes_.begin(), other.primes_.end(), primes_.begin(), primes_.end());
}

mpz_class PrimeSet::product() const {
  mpz_class r = 1;
  for (const auto& q : primes_) r *= q;
  return r;
}

PrimeSet PrimeSet::unite(const PrimeSet& other) const {
  PrimeSet r;
  std::set_union(primes_.begin(), primes_.end(), other.primes_.begin(), other.primes_.end(),
                 std::back_inserter(r.primes_));
  return r;
}

std::string PrimeSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) s += ", ";
    s += primes_[i].get_str();
  }
  return s + "}";
}

PrimeSet prime_factors(const mpz_class& m) {
  if (m < 1) throw DomainError("prime_factors: argument must be >= 1, got " + m.get_str());
  std::vector<mpz_class> found;
  mpz_class rest = m;
  for (unsigned long d = 2; d < kTrialBound && d * d <= rest; d += (d == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      found.emplace_back(d);
      while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
    }
  }
  factor_into(rest, found);
  return PrimeSet(std::move(found));
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace covercalc
