#pragma once

// Homology of cyclic branched covers of knots and the prime sets that
// control when those covers are Z/p-homology spheres.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "covercalc/knot_model.hpp"
#include "covercalc/laurent_poly.hpp"
#include "covercalc/primes.hpp"

namespace covercalc {

/// |H_1| of the n-fold cyclic branched cover; order 0 encodes an infinite
/// group.
struct CoverOrder {
  std::uint64_t n = 1;
  mpz_class order = 1;

  bool infinite() const { return order == 0; }
};

/// |Res(t^n - 1, tilde Delta)|. Throws DomainError for n = 0.
CoverOrder fox_order(const AlexanderPoly& alexander, std::uint64_t n);
inline CoverOrder fox_order(const Knot& k, std::uint64_t n) { return fox_order(k.alexander, n); }

/// Whether the n-fold branched cover has no p-torsion and finite H_1,
/// decided by gcd(t^n - 1, tilde Delta) over F_p rather than by the
/// (possibly enormous) resultant.
bool is_zp_homology_sphere(const AlexanderPoly& alexander, std::uint64_t n, std::uint64_t p);
inline bool is_zp_homology_sphere(const Knot& k, std::uint64_t n, std::uint64_t p) {
  return is_zp_homology_sphere(k.alexander, n, p);
}

/// Primes dividing prod_j (p^{d_j} - 1), where d_j runs over the degrees of
/// the irreducible factors of f mod p other than t. Depends on f only
/// through its reduction mod p. Throws DataError if f vanishes mod p.
PrimeSet skp_set(const IntPoly& f, std::uint64_t p);
inline PrimeSet skp_set(const Knot& k, std::uint64_t p) { return skp_set(k.alexander.tilde(), p); }

/// True iff no element of s divides n.
bool admissible(std::uint64_t n, const PrimeSet& s);

/// Primes n <= limit with admissible(n, skp_set(k, p)), ascending.
std::vector<std::uint64_t> admissible_primes(const Knot& k, std::uint64_t p, std::uint64_t limit);

/// Upper bounds on the knot Floer homology of the lifted knot in the n-fold
/// cover, from a grid diagram with arc index delta:
/// tight = ceil((delta!)^n / 2^(delta-1)), loose = (delta!)^n.
struct HfkDimBound {
  mpz_class tight;
  mpz_class loose;
};

HfkDimBound hfk_dim_upper(std::uint64_t delta, std::uint64_t n);

}  // namespace covercalc
