#include "covercalc/branched_cover.hpp"

#include <set>
#include <string>

#include "covercalc/error.hpp"

namespace covercalc {

CoverOrder fox_order(const AlexanderPoly& alexander, std::uint64_t n) {
  if (n == 0) throw DomainError("fox_order: n must be >= 1");
  mpz_class r = resultant(IntPoly::t_pow_minus_one(n), alexander.tilde());
  return {n, abs(r)};
}

bool is_zp_homology_sphere(const AlexanderPoly& alexander, std::uint64_t n, std::uint64_t p) {
  require_prime(p, "is_zp_homology_sphere");
  if (n == 0) throw DomainError("is_zp_homology_sphere: n must be >= 1");
  const ModPoly f = ModPoly::reduce(alexander.tilde(), p);
  if (f.is_zero()) throw DataError("Alexander polynomial vanishes mod " + std::to_string(p));
  // A factor t of f never meets t^n - 1, so only the stripped part matters.
  const ModPoly g = strip_t_power(f);
  if (g.degree() <= 0) return true;
  const ModPoly one(p, {1});
  const ModPoly t_n_minus_one = powmod_t(n, g) - one;
  return gcd_fp(g, t_n_minus_one).degree() == 0;
}

PrimeSet skp_set(const IntPoly& f, std::uint64_t p) {
  require_prime(p, "skp_set");
  const ModPoly reduced = ModPoly::reduce(f, p);
  if (reduced.is_zero()) throw DataError("polynomial vanishes identically mod " + std::to_string(p));
  PrimeSet out;
  std::set<long> degrees;
  for (const auto& e : irreducible_factor_degrees(reduced).entries) degrees.insert(e.degree);
  for (long d : degrees) {
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), p, static_cast<unsigned long>(d));
    m -= 1;
    out = out.unite(prime_factors(m));
  }
  return out;
}

bool admissible(std::uint64_t n, const PrimeSet& s) {
  const mpz_class nn(static_cast<unsigned long>(n));
  for (const auto& q : s.primes()) {
    if (mpz_divisible_p(nn.get_mpz_t(), q.get_mpz_t())) return false;
  }
  return true;
}

std::vector<std::uint64_t> admissible_primes(const Knot& k, std::uint64_t p, std::uint64_t limit) {
  const PrimeSet s = skp_set(k, p);
  std::vector<std::uint64_t> out;
  for (std::uint64_t n : primes_up_to(limit)) {
    if (admissible(n, s)) out.push_back(n);
  }
  return out;
}

HfkDimBound hfk_dim_upper(std::uint64_t delta, std::uint64_t n) {
  if (delta < 2) throw DomainError("hfk_dim_upper: arc index must be >= 2");
  if (n < 1) throw DomainError("hfk_dim_upper: n must be >= 1");
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(delta));
  HfkDimBound b;
  mpz_pow_ui(b.loose.get_mpz_t(), fact.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_cdiv_q_2exp(b.tight.get_mpz_t(), b.loose.get_mpz_t(), static_cast<mp_bitcnt_t>(delta - 1));
  return b;
}

}  // namespace covercalc
