#pragma once

// Necessary conditions for a ribbon concordance J <= K. A passing report
// means only that none of the implemented checks obstructs the pair; it is
// never a proof that J <= K. The same checks apply verbatim to strong
// homotopy-ribbon concordance, since each one uses only divisibility of
// Alexander polynomials and homology of branched covers.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "covercalc/knot_model.hpp"

namespace covercalc {

enum class Verdict { pass, fail, skipped };

std::string_view to_string(Verdict v);
/// Inverse of to_string; throws DataError on unknown text.
Verdict verdict_from_string(std::string_view s);

struct CheckResult {
  std::string id;
  Verdict verdict = Verdict::skipped;
  std::string detail;
};

struct ObstructionReport {
  std::string j;
  std::string k;
  std::vector<CheckResult> checks;

  /// True iff no check failed; skipped checks do not count either way.
  bool overall() const;
  /// "not obstructed" or "obstructed by <first failing id>".
  std::string summary() const;
};

struct ObstructParams {
  std::vector<std::uint64_t> primes{2, 3, 5};
  std::uint64_t max_n = 30;
};

/// tilde Delta_J divides tilde Delta_K in Z[t] up to sign.
bool alexander_divides(const Knot& j, const Knot& k);

/// For fibered J: genus(J) = halfdeg Delta_J must not exceed genus(K).
/// Skipped when J is not fibered or the genus of K is unknown.
CheckResult fibered_genus_check(const Knot& j, const Knot& k);

/// skp_set(J, p) is a subset of skp_set(K, p).
CheckResult skp_containment(const Knot& j, const Knot& k, std::uint64_t p);

/// |H_1(Sigma_n(J))| divides |H_1(Sigma_n(K))|; only evaluated when
/// Delta_J divides Delta_K and both orders are finite.
CheckResult h1_order_divisibility(const Knot& j, const Knot& k, std::uint64_t n);

/// Runs every check. The h1 checks cover each n <= max_n for which the
/// n-fold cover of K is guaranteed to be a Z/p-homology sphere for some p
/// in params.primes (every n when that list is empty).
ObstructionReport obstruct(const Knot& j, const Knot& k, const ObstructParams& params = {});

/// Names of the table entries J with obstruct(J, K).overall(), in table
/// order. K itself is always listed (appended if absent from the table).
std::vector<std::string> filter_predecessors(const Knot& k, const KnotTable& table,
                                             const ObstructParams& params = {});

nlohmann::json to_json(const ObstructionReport& r);
/// Throws DataError when fields are missing or malformed.
ObstructionReport report_from_json(const nlohmann::json& j);

}  // namespace covercalc
