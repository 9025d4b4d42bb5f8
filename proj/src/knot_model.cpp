#include "covercalc/knot_model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "covercalc/error.hpp"

namespace covercalc {

AlexanderPoly::AlexanderPoly() : coeffs_{mpz_class(1)} {}

AlexanderPoly AlexanderPoly::from_symmetric(std::vector<mpz_class> coeffs) {
  if (coeffs.size() % 2 == 0) {
    throw DataError("Alexander polynomial needs an odd number of coefficients, got " +
                    std::to_string(coeffs.size()));
  }
  const std::size_t n = coeffs.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (coeffs[i] != coeffs[n - 1 - i]) throw DataError("Alexander polynomial is not palindromic");
  }
  if (n > 1 && coeffs.front() == 0) throw DataError("Alexander polynomial has a zero outer coefficient");
  mpz_class at_one = 0;
  for (const auto& c : coeffs) at_one += c;
  if (at_one == -1) {
    for (auto& c : coeffs) c = -c;
  } else if (at_one != 1) {
    throw DataError("Alexander polynomial must evaluate to +-1 at t=1, got " + at_one.get_str());
  }
  AlexanderPoly a;
  a.coeffs_ = std::move(coeffs);
  return a;
}

AlexanderPoly AlexanderPoly::from_symmetric(std::span<const long> coeffs) {
  std::vector<mpz_class> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return from_symmetric(std::move(v));
}

AlexanderPoly AlexanderPoly::from_polynomial_up_to_unit(const IntPoly& f) {
  if (f.is_zero()) throw DataError("Alexander polynomial cannot be zero");
  const auto c = f.coeffs();
  auto first = std::find_if(c.begin(), c.end(), [](const mpz_class& x) { return x != 0; });
  return from_symmetric(std::vector<mpz_class>(first, c.end()));
}

mpz_class AlexanderPoly::coeff(long exponent) const {
  const long d = half_degree();
  if (exponent < -d || exponent > d) return 0;
  return coeffs_[static_cast<std::size_t>(exponent + d)];
}

IntPoly AlexanderPoly::tilde() const { return IntPoly(coeffs_); }

std::string AlexanderPoly::to_string() const {
  const long d = half_degree();
  std::ostringstream os;
  bool first = true;
  for (long e = d; e >= -d; --e) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(e + d)];
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || e == 0) os << mag.get_str();
    if (e != 0) os << "t";
    if (e != 0 && e != 1) os << "^" << e;
  }
  return os.str();
}

AlexanderPoly alexander_mul(const AlexanderPoly& a, const AlexanderPoly& b) {
  const IntPoly prod = a.tilde() * b.tilde();
  return AlexanderPoly::from_symmetric(std::vector<mpz_class>(prod.coeffs().begin(), prod.coeffs().end()));
}

namespace {

// Fraction-free elimination over Z[t]; every division is exact.
IntPoly polynomial_determinant(std::vector<std::vector<IntPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPoly{1};
  bool negate = false;
  IntPoly prev{1};
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return {};
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto q = exact_quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        if (!q) throw std::logic_error("polynomial_determinant: inexact Bareiss step");
        m[i][j] = std::move(*q);
      }
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace

AlexanderPoly alexander_from_seifert(const SeifertMatrix& v) {
  const std::size_t n = v.size();
  for (const auto& row : v) {
    if (row.size() != n) throw DataError("Seifert matrix is not square");
  }
  std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = IntPoly{v[i][j], -v[j][i]};
  }
  const IntPoly det = polynomial_determinant(std::move(m));
  const mpz_class at_one = eval_at(det, 1);
  if (at_one != 1 && at_one != -1) {
    throw DataError("invalid Seifert matrix: det(V - V^T) = " + at_one.get_str() + ", expected +-1");
  }
  return AlexanderPoly::from_polynomial_up_to_unit(det);
}

void validate(const Knot& k) {
  if (k.name.empty()) throw DataError("knot name must be nonempty");
  const std::string who = "knot '" + k.name + "': ";
  const long d = k.alexander.half_degree();
  if (k.genus) {
    if (*k.genus < 0) throw DataError(who + "genus must be nonnegative");
    if (d > *k.genus) {
      throw DataError(who + "Alexander half-degree " + std::to_string(d) + " exceeds genus " +
                      std::to_string(*k.genus));
    }
    if (k.fibered && d != *k.genus) {
      throw DataError(who + "fibered knot must have genus equal to Alexander half-degree (" +
                      std::to_string(*k.genus) + " vs " + std::to_string(d) + ")");
    }
  }
  if (k.arc_index && *k.arc_index < 2) throw DataError(who + "arc index must be >= 2");
  if (k.seifert) {
    AlexanderPoly from_v;
    try {
      from_v = alexander_from_seifert(*k.seifert);
    } catch (const DataError& e) {
      throw DataError(who + e.what());
    }
    if (!(from_v == k.alexander)) {
      throw DataError(who + "Seifert matrix gives " + from_v.to_string() + " but stored polynomial is " +
                      k.alexander.to_string());
    }
  }
}

KnotTable::KnotTable(std::vector<Knot> entries) : entries_(std::move(entries)) {
  std::unordered_set<std::string> seen;
  for (const auto& k : entries_) {
    validate(k);
    if (!seen.insert(k.name).second) throw DataError("duplicate knot name '" + k.name + "'");
  }
}

const Knot* KnotTable::find(std::string_view name) const {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const Knot& k) { return k.name == name; });
  return it == entries_.end() ? nullptr : &*it;
}

const Knot& KnotTable::at(std::string_view name) const {
  if (const Knot* k = find(name)) return *k;
  throw DataError("unknown knot '" + std::string(name) + "'");
}

namespace {

using nlohmann::json;

long as_long(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw DataError(what + " must be an integer");
  return v.get<long>();
}

Knot parse_knot(const json& obj, std::size_t index) {
  const std::string where = "table entry " + std::to_string(index);
  if (!obj.is_object()) throw DataError(where + " is not an object");
  Knot k;
  if (!obj.contains("name") || !obj["name"].is_string()) throw DataError(where + ": missing string 'name'");
  k.name = obj["name"].get<std::string>();
  const std::string who = where + " ('" + k.name + "')";

  if (!obj.contains("alexander") || !obj["alexander"].is_array()) {
    throw DataError(who + ": missing array 'alexander'");
  }
  std::vector<mpz_class> coeffs;
  for (const auto& c : obj["alexander"]) {
    if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<long>());
    } else if (c.is_string()) {
      // Arbitrary-precision coefficients may be given as decimal strings.
      try {
        coeffs.emplace_back(c.get<std::string>());
      } catch (const std::invalid_argument&) {
        throw DataError(who + ": bad coefficient '" + c.get<std::string>() + "'");
      }
    } else {
      throw DataError(who + ": Alexander coefficients must be integers");
    }
  }
  try {
    k.alexander = AlexanderPoly::from_symmetric(std::move(coeffs));
  } catch (const DataError& e) {
    throw DataError(who + ": " + e.what());
  }

  if (!obj.contains("fibered") || !obj["fibered"].is_boolean()) {
    throw DataError(who + ": missing boolean 'fibered'");
  }
  k.fibered = obj["fibered"].get<bool>();
  if (obj.contains("genus") && !obj["genus"].is_null()) k.genus = as_long(obj["genus"], who + ": genus");
  if (obj.contains("arc_index") && !obj["arc_index"].is_null()) {
    k.arc_index = as_long(obj["arc_index"], who + ": arc_index");
  }
  if (obj.contains("seifert") && !obj["seifert"].is_null()) {
    const json& s = obj["seifert"];
    if (!s.is_array()) throw DataError(who + ": 'seifert' must be an array of rows");
    SeifertMatrix v;
    for (const auto& row : s) {
      if (!row.is_array()) throw DataError(who + ": Seifert rows must be arrays");
      std::vector<long> r;
      for (const auto& x : row) r.push_back(as_long(x, who + ": Seifert entry"));
      v.push_back(std::move(r));
    }
    k.seifert = std::move(v);
  }
  return k;
}

}  // namespace

KnotTable load_table(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("knot table parse error: ") + e.what());
  }
  if (!doc.is_array()) throw DataError("knot table must be a JSON array");
  std::vector<Knot> knots;
  knots.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) knots.push_back(parse_knot(doc[i], i));
  return KnotTable(std::move(knots));
}

KnotTable load_table_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open knot table '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_table(ss.str());
}

const KnotTable& bundled_table() {
  static const KnotTable table = load_table(bundled_table_json());
  return table;
}

}  // namespace covercalc
