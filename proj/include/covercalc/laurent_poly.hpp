#pragma once

// Exact univariate polynomial arithmetic over Z and over prime fields F_p.
//
// IntPoly and ModPoly are immutable-by-convention value types: every
// operation returns a fresh value and the stored coefficient sequence is
// always trimmed (no zero leading coefficient), so degree() is O(1) and
// equality is structural.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace covercalc {

// ---------------------------------------------------------------------------
// IntPoly: polynomial with arbitrary-precision integer coefficients.
// ---------------------------------------------------------------------------

class IntPoly {
 public:
  IntPoly() = default;
  /// coeffs[i] is the coefficient of t^i; trailing zeros are trimmed.
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const mpz_class& c);
  static IntPoly monomial(const mpz_class& c, std::size_t degree);
  /// t^n - 1
  static IntPoly t_pow_minus_one(std::size_t n);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const mpz_class& lead() const;
  /// Coefficient of t^i, zero past the degree.
  mpz_class coeff(std::size_t i) const;
  std::span<const mpz_class> coeffs() const { return coeffs_; }

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const mpz_class& c, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  /// Human-readable form, e.g. "t^2 - t + 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// gcd of the coefficients (nonnegative; 0 for the zero polynomial).
mpz_class content(const IntPoly& f);
/// f / content(f), with positive leading coefficient.
IntPoly primitive_part(const IntPoly& f);

/// lc(b)^(deg a - deg b + 1) * a  mod  b, computed without fractions.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// The quotient a / b when b divides a in Z[t], otherwise nullopt.
/// Throws DomainError when b is zero.
std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b);

/// Primitive gcd in Z[t], normalized to a positive leading coefficient.
/// gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Horner evaluation.
mpz_class eval_at(const IntPoly& f, const mpz_class& x);

/// Res(f, g) by the subresultant polynomial remainder sequence.
/// Zero when either argument is zero.
mpz_class resultant(const IntPoly& f, const IntPoly& g);

/// Res(f, g) as the determinant of the Sylvester matrix, evaluated by
/// fraction-free Bareiss elimination. Independent of resultant(); used as
/// its oracle. Throws DomainError on zero input.
mpz_class resultant_sylvester(const IntPoly& f, const IntPoly& g);

/// Determinant of a square integer matrix via Bareiss elimination.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m);

// ---------------------------------------------------------------------------
// ModPoly: polynomial over F_p.
// ---------------------------------------------------------------------------

class ModPoly {
 public:
  /// Residues are reduced into [0, p). Throws DomainError unless p is prime.
  ModPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs);
  ModPoly(std::uint64_t modulus, std::initializer_list<long> coeffs);

  /// Image of f under Z[t] -> F_p[t].
  static ModPoly reduce(const IntPoly& f, std::uint64_t modulus);

  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::uint64_t lead() const;
  std::uint64_t coeff(std::size_t i) const;
  std::span<const std::uint64_t> coeffs() const { return coeffs_; }

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  friend bool operator==(const ModPoly& a, const ModPoly& b) = default;

  ModPoly monic() const;
  ModPoly derivative() const;

  std::string to_string() const;

 private:
  struct Unchecked {};
  ModPoly(Unchecked, std::uint64_t modulus, std::vector<std::uint64_t> coeffs);
  void trim();

  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> coeffs_;

  friend std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
  friend ModPoly powmod_t(std::uint64_t exponent, const ModPoly& modulus_poly);
  friend ModPoly pth_root(const ModPoly& f);
  friend ModPoly strip_t_power(const ModPoly& f);
  friend ModPoly pow_mod(const ModPoly& base, std::uint64_t exponent,
                         const ModPoly& modulus_poly);
};

/// Quotient and remainder; throws DomainError on a zero divisor or on
/// mismatched moduli.
std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);

/// Monic gcd; gcd(0, 0) = 0. Throws DomainError on mismatched moduli.
ModPoly gcd_fp(const ModPoly& f, const ModPoly& g);

/// base^exponent mod modulus_poly.
ModPoly pow_mod(const ModPoly& base, std::uint64_t exponent, const ModPoly& modulus_poly);

/// t^exponent mod modulus_poly.
ModPoly powmod_t(std::uint64_t exponent, const ModPoly& modulus_poly);

/// f / t^a with a maximal (drops the factor t entirely).
ModPoly strip_t_power(const ModPoly& f);

/// Monic product of the distinct irreducible factors of f (f nonzero).
ModPoly squarefree_part(const ModPoly& f);

struct DegreeCount {
  long degree;
  long count;
  friend bool operator==(const DegreeCount&, const DegreeCount&) = default;
};

/// Degrees of distinct irreducible factors; degrees strictly increasing.
struct DegreeMultiset {
  std::vector<DegreeCount> entries;

  long total_degree() const;
  bool empty() const { return entries.empty(); }
  friend bool operator==(const DegreeMultiset&, const DegreeMultiset&) = default;
};

/// Distinct-degree factorization of a monic squarefree f with f(0) != 0.
DegreeMultiset distinct_degree_factorization(const ModPoly& f);

/// Degrees of the irreducible factors of f other than t, each distinct
/// factor counted once. Throws DomainError on the zero polynomial.
DegreeMultiset irreducible_factor_degrees(const ModPoly& f);

}  // namespace covercalc
