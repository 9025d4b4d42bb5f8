#include <doctest.h>

#include <random>

#include "covercalc/error.hpp"
#include "covercalc/primes.hpp"
#include "oracles.hpp"

using namespace covercalc;

namespace {

PrimeSet set_of(std::initializer_list<unsigned long> xs) {
  std::vector<mpz_class> v;
  for (auto x : xs) v.emplace_back(x);
  return PrimeSet(v);
}

}  // namespace

TEST_CASE("prime_factors examples") {
  CHECK(prime_factors(3) == set_of({3}));
  CHECK(prime_factors(15) == set_of({3, 5}));
  CHECK(prime_factors(720) == set_of({2, 3, 5}));
  CHECK(prime_factors(1).empty());
  CHECK_THROWS_AS(prime_factors(0), DomainError);
  CHECK_THROWS_AS(prime_factors(-4), DomainError);
}

TEST_CASE("prime_factors matches trial division") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> dist(1, 5'000'000);
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t m = dist(rng);
    std::vector<mpz_class> expect;
    for (auto q : covercalc::testing::trial_division_primes(m)) expect.emplace_back(static_cast<unsigned long>(q));
    CHECK(prime_factors(mpz_class(static_cast<unsigned long>(m))).primes() == expect);
  }
}

TEST_CASE("prime_factors on large inputs needs Pollard rho") {
  // 2^64 - 1 = 3 * 5 * 17 * 257 * 641 * 65537 * 6700417
  mpz_class m;
  mpz_ui_pow_ui(m.get_mpz_t(), 2, 64);
  m -= 1;
  CHECK(prime_factors(m) == set_of({3, 5, 17, 257, 641, 65537, 6700417}));
  // product of two primes above the trial-division bound
  const mpz_class semi = mpz_class(1000003) * mpz_class(998244353);
  CHECK(prime_factors(semi) == set_of({1000003, 998244353}));
  // 3^40 - 1, factors include 1181, 6481, 3541, 36901, 41, 61, 11, 13, 5, 2, 7
  mpz_class n;
  mpz_ui_pow_ui(n.get_mpz_t(), 3, 40);
  n -= 1;
  const PrimeSet s = prime_factors(n);
  CHECK(s.product() > 1);
  mpz_class rest = n;
  for (const auto& q : s.primes()) {
    CHECK(is_prime(q));
    CHECK(mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t()));
    while (mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) rest /= q;
  }
  CHECK(rest == 1);
}

TEST_CASE("is_prime") {
  CHECK_FALSE(is_prime(std::uint64_t{0}));
  CHECK_FALSE(is_prime(std::uint64_t{1}));
  CHECK(is_prime(std::uint64_t{2}));
  CHECK(is_prime(std::uint64_t{18446744073709551557ULL}));
  CHECK_FALSE(is_prime(std::uint64_t{3215031751ULL}));  // strong pseudoprime to 2, 3, 5, 7
  mpz_class mersenne;
  mpz_ui_pow_ui(mersenne.get_mpz_t(), 2, 127);
  mersenne -= 1;
  CHECK(is_prime(mersenne));
  CHECK_FALSE(is_prime(mersenne + 2));
}

TEST_CASE("PrimeSet rejects composites and supports set algebra") {
  CHECK_THROWS_AS(set_of({2, 4}), DomainError);
  const PrimeSet a = set_of({5, 2, 2});
  CHECK(a.primes() == std::vector<mpz_class>{2, 5});
  CHECK(set_of({2}).is_subset_of(a));
  CHECK_FALSE(set_of({3}).is_subset_of(a));
  CHECK(PrimeSet().is_subset_of(a));
  CHECK(a.unite(set_of({3})) == set_of({2, 3, 5}));
  CHECK(a.to_string() == "{2, 5}");
  CHECK(primes_up_to(20) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});
}
