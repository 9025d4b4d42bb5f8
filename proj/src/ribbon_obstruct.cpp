#include "covercalc/ribbon_obstruct.hpp"

#include <algorithm>

#include "covercalc/branched_cover.hpp"
#include "covercalc/error.hpp"

namespace covercalc {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::skipped:
      return "skipped";
  }
  return "skipped";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "skipped") return Verdict::skipped;
  throw DataError("unknown verdict '" + std::string(s) + "'");
}

bool ObstructionReport::overall() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.verdict == Verdict::fail; });
}

std::string ObstructionReport::summary() const {
  for (const auto& c : checks) {
    if (c.verdict == Verdict::fail) return "obstructed by " + c.id;
  }
  return "not obstructed";
}

bool alexander_divides(const Knot& j, const Knot& k) {
  return exact_quotient(k.alexander.tilde(), j.alexander.tilde()).has_value();
}

CheckResult fibered_genus_check(const Knot& j, const Knot& k) {
  CheckResult r{"fib_genus", Verdict::skipped, ""};
  if (!j.fibered) {
    r.detail = j.name + " is not fibered";
    return r;
  }
  const long gj = j.alexander.half_degree();
  if (!k.genus) {
    r.detail = "genus of " + k.name + " unknown";
    return r;
  }
  r.verdict = gj <= *k.genus ? Verdict::pass : Verdict::fail;
  r.detail = "g(" + j.name + ") = " + std::to_string(gj) + (gj <= *k.genus ? " <= " : " > ") + "g(" + k.name +
             ") = " + std::to_string(*k.genus);
  return r;
}

CheckResult skp_containment(const Knot& j, const Knot& k, std::uint64_t p) {
  require_prime(p, "skp_containment");
  const PrimeSet sj = skp_set(j, p);
  const PrimeSet sk = skp_set(k, p);
  const bool ok = sj.is_subset_of(sk);
  return {"skp_subset:" + std::to_string(p), ok ? Verdict::pass : Verdict::fail,
          sj.to_string() + (ok ? " is a subset of " : " is not a subset of ") + sk.to_string()};
}

namespace {

CheckResult h1_check(const Knot& j, const Knot& k, std::uint64_t n, bool divides) {
  CheckResult r{"h1_div:" + std::to_string(n), Verdict::skipped, ""};
  if (!divides) {
    r.detail = "Alexander polynomial of " + j.name + " does not divide that of " + k.name;
    return r;
  }
  const CoverOrder oj = fox_order(j, n);
  const CoverOrder ok = fox_order(k, n);
  if (oj.infinite() || ok.infinite()) {
    r.detail = "infinite H_1 in the " + std::to_string(n) + "-fold cover";
    return r;
  }
  const bool d = mpz_divisible_p(ok.order.get_mpz_t(), oj.order.get_mpz_t()) != 0;
  r.verdict = d ? Verdict::pass : Verdict::fail;
  r.detail = oj.order.get_str() + (d ? " divides " : " does not divide ") + ok.order.get_str();
  return r;
}

}  // namespace

CheckResult h1_order_divisibility(const Knot& j, const Knot& k, std::uint64_t n) {
  if (n == 0) throw DomainError("h1_order_divisibility: n must be >= 1");
  return h1_check(j, k, n, alexander_divides(j, k));
}

ObstructionReport obstruct(const Knot& j, const Knot& k, const ObstructParams& params) {
  if (params.max_n < 1) throw DomainError("obstruct: max_n must be >= 1");
  for (std::uint64_t p : params.primes) require_prime(p, "obstruct");

  ObstructionReport report{j.name, k.name, {}};
  const bool divides = alexander_divides(j, k);
  report.checks.push_back({"alex_div", divides ? Verdict::pass : Verdict::fail,
                           "(" + j.alexander.to_string() + (divides ? ") divides (" : ") does not divide (") +
                               k.alexander.to_string() + ")"});
  report.checks.push_back(fibered_genus_check(j, k));

  std::vector<PrimeSet> k_sets;
  for (std::uint64_t p : params.primes) {
    report.checks.push_back(skp_containment(j, k, p));
    k_sets.push_back(skp_set(k, p));
  }
  for (std::uint64_t n = 1; n <= params.max_n; ++n) {
    const bool guaranteed = k_sets.empty() || std::any_of(k_sets.begin(), k_sets.end(),
                                                          [n](const PrimeSet& s) { return admissible(n, s); });
    if (guaranteed) report.checks.push_back(h1_check(j, k, n, divides));
  }
  return report;
}

std::vector<std::string> filter_predecessors(const Knot& k, const KnotTable& table, const ObstructParams& params) {
  std::vector<std::string> out;
  bool saw_k = false;
  for (const Knot& j : table.entries()) {
    if (j.name == k.name) saw_k = true;
    if (obstruct(j, k, params).overall()) out.push_back(j.name);
  }
  if (!saw_k) out.push_back(k.name);
  return out;
}

nlohmann::json to_json(const ObstructionReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"id", c.id}, {"verdict", std::string(to_string(c.verdict))}, {"detail", c.detail}});
  }
  return {{"candidate", {{"j", r.j}, {"k", r.k}}},
          {"checks", std::move(checks)},
          {"overall", r.overall() ? "pass" : "fail"},
          {"summary", r.summary()}};
}

ObstructionReport report_from_json(const nlohmann::json& j) {
  try {
    ObstructionReport r;
    r.j = j.at("candidate").at("j").get<std::string>();
    r.k = j.at("candidate").at("k").get<std::string>();
    for (const auto& c : j.at("checks")) {
      r.checks.push_back({c.at("id").get<std::string>(), verdict_from_string(c.at("verdict").get<std::string>()),
                          c.at("detail").get<std::string>()});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed obstruction report: ") + e.what());
  }
}

}  // namespace covercalc
