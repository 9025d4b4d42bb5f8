#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "covercalc/laurent_poly.hpp"

namespace covercalc {

/// Symmetric Laurent polynomial with integer coefficients, normalized so
/// that coeff(-i) == coeff(i) and the value at t = 1 is exactly +1.
///
/// Stored as 2d+1 coefficients for exponents -d..d, where d is the half
/// degree. The unknot is d = 0 with coefficients [1].
class AlexanderPoly {
 public:
  /// The unknot polynomial 1.
  AlexanderPoly();

  /// Coefficients for exponents -d..d in ascending order. Throws DataError
  /// on even length, a palindrome violation, a zero outer coefficient, or
  /// a value at 1 other than +-1. A value of -1 is fixed by negation.
  static AlexanderPoly from_symmetric(std::vector<mpz_class> coeffs);
  static AlexanderPoly from_symmetric(std::span<const long> coeffs);

  /// Normalizes an ordinary polynomial known only up to a unit +-t^k.
  static AlexanderPoly from_polynomial_up_to_unit(const IntPoly& f);

  long half_degree() const { return (static_cast<long>(coeffs_.size()) - 1) / 2; }
  std::span<const mpz_class> coeffs() const { return coeffs_; }
  /// Coefficient of t^exponent, zero outside -d..d.
  mpz_class coeff(long exponent) const;

  /// t^d * Delta(t) as an ordinary polynomial of degree 2d.
  IntPoly tilde() const;

  /// e.g. "t - 1 + t^-1".
  std::string to_string() const;

  friend bool operator==(const AlexanderPoly&, const AlexanderPoly&) = default;

 private:
  std::vector<mpz_class> coeffs_;
};

inline IntPoly tilde(const AlexanderPoly& a) { return a.tilde(); }

/// Alexander polynomial of a connected sum.
AlexanderPoly alexander_mul(const AlexanderPoly& a, const AlexanderPoly& b);

using SeifertMatrix = std::vector<std::vector<long>>;

/// Normalized det(V - t V^T). Throws DataError when V is not square or the
/// determinant does not evaluate to +-1 at t = 1.
AlexanderPoly alexander_from_seifert(const SeifertMatrix& v);

struct Knot {
  std::string name;
  AlexanderPoly alexander;
  std::optional<long> genus;
  std::optional<long> arc_index;
  bool fibered = false;
  std::optional<SeifertMatrix> seifert;
};

/// Throws DataError describing the first violated record invariant.
void validate(const Knot& k);

/// Ordered collection of validated knots with unique names.
class KnotTable {
 public:
  KnotTable() = default;
  explicit KnotTable(std::vector<Knot> entries);

  const std::vector<Knot>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const Knot* find(std::string_view name) const;
  /// Throws DataError for an unknown name.
  const Knot& at(std::string_view name) const;

 private:
  std::vector<Knot> entries_;
};

/// Parses and validates a knot-table JSON document.
KnotTable load_table(std::string_view document);
KnotTable load_table_file(const std::filesystem::path& path);

std::string_view bundled_table_json();
const KnotTable& bundled_table();

}  // namespace covercalc
