#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace covercalc {

/// Deterministic Miller-Rabin (exact for every 64-bit input).
bool is_prime(std::uint64_t n);

/// Exact for n < 2^64; above that, GMP's BPSW-plus-Miller-Rabin test.
bool is_prime(const mpz_class& n);

/// Throws DomainError naming `what` unless p is prime.
void require_prime(std::uint64_t p, const char* what);

/// Sorted set of distinct primes.
class PrimeSet {
 public:
  PrimeSet() = default;
  /// Sorts and deduplicates; throws DomainError on a non-prime entry.
  explicit PrimeSet(std::vector<mpz_class> primes);

  const std::vector<mpz_class>& primes() const { return primes_; }
  bool empty() const { return primes_.empty(); }
  std::size_t size() const { return primes_.size(); }

  bool contains(const mpz_class& q) const;
  bool is_subset_of(const PrimeSet& other) const;
  mpz_class product() const;
  PrimeSet unite(const PrimeSet& other) const;

  /// "{2, 3}" style.
  std::string to_string() const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<mpz_class> primes_;
};

/// Distinct prime divisors of m, by trial division followed by Brent's
/// variant of Pollard rho. Throws DomainError for m < 1.
PrimeSet prime_factors(const mpz_class& m);

/// All primes <= limit, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

}  // namespace covercalc
