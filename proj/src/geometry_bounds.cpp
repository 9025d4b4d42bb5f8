#include "covercalc/geometry_bounds.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "covercalc/error.hpp"

namespace covercalc {

namespace {

constexpr double kThreePi = 3.0 * std::numbers::pi;

// log of a positive big integer, accurate to double precision.
double log_mpz(const mpz_class& x) {
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
}

}  // namespace

double log_factorial(std::uint64_t delta) {
  if (delta <= 20) {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= delta; ++i) f *= i;
    return std::log(static_cast<double>(f));
  }
  return std::lgamma(static_cast<double>(delta) + 1.0);
}

double gromov_norm_bound(long genus, std::uint64_t delta) {
  if (genus < 1) throw DomainError("gromov_norm_bound: genus must be >= 1");
  if (delta < 2) throw DomainError("gromov_norm_bound: arc index must be >= 2");
  return kThreePi / Constants::v3 * static_cast<double>(2 * genus - 1) * log_factorial(delta);
}

double km_volume_bound(long chi, double dilatation) {
  if (chi > -1) throw DomainError("km_volume_bound: Euler characteristic must be <= -1");
  if (!(dilatation > 1.0)) throw DomainError("km_volume_bound: dilatation must exceed 1");
  return kThreePi * static_cast<double>(-chi) * std::log(dilatation);
}

DilatationEstimate dilatation_upper(std::span<const FixSample> samples) {
  if (samples.empty()) throw DomainError("dilatation_upper: no samples");
  DilatationEstimate est;
  est.witnesses.assign(samples.begin(), samples.end());
  bool have = false;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const FixSample& s = samples[i];
    if (s.n < 1) throw DomainError("dilatation_upper: n must be >= 1");
    if (i > 0 && s.n <= samples[i - 1].n) throw DomainError("dilatation_upper: n values must be strictly increasing");
    if (s.count < 0) throw DomainError("dilatation_upper: negative count");
    if (s.count == 0) {
      est.degenerate = true;
      continue;
    }
    double root;
    mpz_class r;
    if (mpz_root(r.get_mpz_t(), s.count.get_mpz_t(), static_cast<unsigned long>(s.n)) != 0) {
      root = r.get_d();  // exact integer root
    } else {
      root = std::exp(log_mpz(s.count) / static_cast<double>(s.n));
    }
    if (!have || root < est.upper) {
      est.upper = root;
      est.best = i;
      have = true;
    }
  }
  return est;
}

long torus_knot_genus(long p, long q) {
  const long ap = std::labs(p), aq = std::labs(q);
  if (ap < 2 || aq < 2) throw DomainError("torus_knot_genus: need |p|, |q| >= 2");
  if (std::gcd(ap, aq) != 1) throw DomainError("torus_knot_genus: p and q must be coprime");
  return (ap - 1) * (aq - 1) / 2;
}

long cable_genus(long p, long q, long companion_genus) {
  const long ap = std::labs(p), aq = std::labs(q);
  if (aq < 2) throw DomainError("cable_genus: need |q| >= 2");
  if (std::gcd(ap, aq) != 1) throw DomainError("cable_genus: p and q must be coprime");
  if (companion_genus < 1) throw DomainError("cable_genus: companion genus must be >= 1");
  return aq * companion_genus + (ap - 1) * (aq - 1) / 2;
}

long connected_sum_genus(std::span<const long> genera) {
  if (genera.empty()) throw DomainError("connected_sum_genus: empty list");
  long g = 0;
  for (long x : genera) {
    if (x < 1) throw DomainError("connected_sum_genus: summand genera must be >= 1");
    g += x;
  }
  return g;
}

void SatelliteProfile::validate() const {
  if (total_genus < 1) throw DomainError("SatelliteProfile: total genus must be >= 1");
  if (outer_chi > -1) throw DomainError("SatelliteProfile: outer Euler characteristic must be <= -1");
  for (const auto& o : orbits) {
    if (o.winding < 1) throw DomainError("SatelliteProfile: winding numbers must be >= 1");
    if (o.companion_genus < 1) throw DomainError("SatelliteProfile: companion genera must be >= 1");
  }
}

bool satellite_euler_check(const SatelliteProfile& profile) {
  long rhs = -profile.outer_chi;
  for (const auto& o : profile.orbits) rhs += o.winding * (2 * o.companion_genus - 1);
  return 2 * profile.total_genus - 1 == rhs;
}

bool winding_bound_check(long genus, long winding, long companion_genus) {
  return genus >= winding * companion_genus;
}

double gromov_aggregate(double outer_bound, std::span<const double> companion_norms) {
  if (outer_bound < 0) throw DomainError("gromov_aggregate: negative outer bound");
  double sum = outer_bound;
  for (double c : companion_norms) {
    if (c < 0) throw DomainError("gromov_aggregate: negative companion norm");
    sum += c;
  }
  return sum;
}

}  // namespace covercalc
