#pragma once

// Numeric bounds relating arc index and genus to dilatation, hyperbolic
// volume and Gromov norm of fibered knot complements, together with the
// genus bookkeeping used for satellite decompositions.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace covercalc {

struct Constants {
  /// Volume of the regular ideal hyperbolic tetrahedron, to 10 significant digits.
  static constexpr double v3 = 1.014941606;
};

/// log(delta!): exact factorial for delta <= 20, log-gamma above.
double log_factorial(std::uint64_t delta);

/// (3 pi / v3) (2g - 1) log(delta!). Requires g >= 1, delta >= 2.
double gromov_norm_bound(long genus, std::uint64_t delta);

/// 3 pi |chi| log(dilatation). Requires chi <= -1 and dilatation > 1.
double km_volume_bound(long chi, double dilatation);

/// A fixed-point count of the n-th iterate, or anything known to bound it
/// from above (such as an HFK dimension bound for the n-fold cover).
struct FixSample {
  std::uint64_t n = 1;
  mpz_class count = 1;
};

struct DilatationEstimate {
  /// min over samples of count^(1/n); an upper bound on the dilatation as
  /// long as every count really bounds the fixed points of its iterate.
  double upper = 0.0;
  std::vector<FixSample> witnesses;
  /// Index into witnesses of the sample attaining the minimum.
  std::size_t best = 0;
  /// Set when some sample has count 0. Such samples are ignored; upper is 0
  /// if no sample has a positive count.
  bool degenerate = false;
};

/// Throws DomainError on an empty list, n = 0, negative counts, or n values
/// that are not strictly increasing.
DilatationEstimate dilatation_upper(std::span<const FixSample> samples);

/// (|p|-1)(|q|-1)/2 for coprime |p|, |q| >= 2.
long torus_knot_genus(long p, long q);

/// |q| g(C) + g(T(p,q)) for the (p,q)-cable of a companion of genus g(C);
/// |q| >= 2, gcd(|p|,|q|) = 1, and T(+-1,q) is the unknot.
long cable_genus(long p, long q, long companion_genus);

/// Genus of a connected sum. Throws DomainError on an empty list.
long connected_sum_genus(std::span<const long> genera);

struct SatelliteOrbit {
  long winding = 1;          // m_j
  long companion_genus = 1;  // g(C^j)
};

/// A claimed fibered satellite decomposition: the fiber of genus g is the
/// outermost piece (Euler characteristic outer_chi) together with m_j
/// copies of the fiber of each companion.
struct SatelliteProfile {
  long total_genus = 1;
  long outer_chi = -1;
  std::vector<SatelliteOrbit> orbits;

  /// Throws DomainError if a field is out of range.
  void validate() const;
};

/// 2g - 1 == -outer_chi + sum_j m_j (2 g_j - 1).
bool satellite_euler_check(const SatelliteProfile& profile);

/// g >= m g(C).
bool winding_bound_check(long genus, long winding, long companion_genus);

/// Gromov norm of a satellite from its pieces (additivity under JSJ).
double gromov_aggregate(double outer_bound, std::span<const double> companion_norms);

}  // namespace covercalc
