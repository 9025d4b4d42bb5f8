#include "covercalc/laurent_poly.hpp"

#include <algorithm>
#include <sstream>

#include "covercalc/error.hpp"
#include "covercalc/primes.hpp"

namespace covercalc {

namespace {

using u128 = unsigned __int128;

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= p - b ? a - (p - b) : a + b;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid on signed 128-bit values.
  __int128 r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s0 < 0) s0 += p;
  return static_cast<std::uint64_t>(s0);
}

void require_same_modulus(const ModPoly& a, const ModPoly& b, const char* what) {
  if (a.modulus() != b.modulus()) {
    throw DomainError(std::string(what) + ": modulus mismatch (" + std::to_string(a.modulus()) +
                      " vs " + std::to_string(b.modulus()) + ")");
  }
}

}  // namespace

ModPoly::ModPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs)
    : p_(modulus), coeffs_(std::move(coeffs)) {
  require_prime(modulus, "ModPoly modulus");
  for (auto& c : coeffs_) c %= p_;
  trim();
}

ModPoly::ModPoly(std::uint64_t modulus, std::initializer_list<long> coeffs) : p_(modulus) {
  require_prime(modulus, "ModPoly modulus");
  coeffs_.reserve(coeffs.size());
  const auto m = static_cast<__int128>(p_);
  for (long c : coeffs) coeffs_.push_back(static_cast<std::uint64_t>((c % m + m) % m));
  trim();
}

ModPoly::ModPoly(Unchecked, std::uint64_t modulus, std::vector<std::uint64_t> coeffs)
    : p_(modulus), coeffs_(std::move(coeffs)) {
  trim();
}

ModPoly ModPoly::reduce(const IntPoly& f, std::uint64_t modulus) {
  require_prime(modulus, "ModPoly modulus");
  std::vector<std::uint64_t> v;
  v.reserve(f.coeffs().size());
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  for (const auto& c : f.coeffs()) v.push_back(mpz_fdiv_ui(c.get_mpz_t(), modulus));
  return ModPoly(Unchecked{}, modulus, std::move(v));
}

void ModPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint64_t ModPoly::lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

std::uint64_t ModPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b, "ModPoly +");
  std::vector<std::uint64_t> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = add_mod(a.coeff(i), b.coeff(i), a.p_);
  return ModPoly(ModPoly::Unchecked{}, a.p_, std::move(v));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b, "ModPoly -");
  std::vector<std::uint64_t> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = sub_mod(a.coeff(i), b.coeff(i), a.p_);
  return ModPoly(ModPoly::Unchecked{}, a.p_, std::move(v));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b, "ModPoly *");
  if (a.is_zero() || b.is_zero()) return ModPoly(ModPoly::Unchecked{}, a.p_, {});
  std::vector<std::uint64_t> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      v[i + j] = add_mod(v[i + j], mul_mod(a.coeffs_[i], b.coeffs_[j], a.p_), a.p_);
    }
  }
  return ModPoly(ModPoly::Unchecked{}, a.p_, std::move(v));
}

ModPoly ModPoly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  const std::uint64_t inv = inv_mod(lead(), p_);
  std::vector<std::uint64_t> v = coeffs_;
  for (auto& c : v) c = mul_mod(c, inv, p_);
  return ModPoly(Unchecked{}, p_, std::move(v));
}

ModPoly ModPoly::derivative() const {
  std::vector<std::uint64_t> v;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v.push_back(mul_mod(coeffs_[i], i % p_, p_));
  return ModPoly(Unchecked{}, p_, std::move(v));
}

std::string ModPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const std::uint64_t c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  os << " (mod " << p_ << ")";
  return os.str();
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b, "divmod");
  if (b.is_zero()) throw DomainError("divmod: zero divisor");
  const std::uint64_t p = a.p_;
  if (a.degree() < b.degree()) return {ModPoly(ModPoly::Unchecked{}, p, {}), a};
  std::vector<std::uint64_t> r = a.coeffs_;
  const auto& bc = b.coeffs_;
  const std::size_t db = bc.size() - 1;
  std::vector<std::uint64_t> q(r.size() - db, 0);
  const std::uint64_t inv = inv_mod(bc.back(), p);
  for (std::size_t top = r.size(); top-- > db;) {
    if (r[top] == 0) continue;
    const std::uint64_t qt = mul_mod(r[top], inv, p);
    const std::size_t shift = top - db;
    q[shift] = qt;
    for (std::size_t i = 0; i <= db; ++i) r[shift + i] = sub_mod(r[shift + i], mul_mod(qt, bc[i], p), p);
  }
  return {ModPoly(ModPoly::Unchecked{}, p, std::move(q)), ModPoly(ModPoly::Unchecked{}, p, std::move(r))};
}

ModPoly gcd_fp(const ModPoly& f, const ModPoly& g) {
  require_same_modulus(f, g, "gcd_fp");
  ModPoly a = f, b = g;
  while (!b.is_zero()) {
    ModPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ModPoly pow_mod(const ModPoly& base, std::uint64_t exponent, const ModPoly& modulus_poly) {
  require_same_modulus(base, modulus_poly, "pow_mod");
  const std::uint64_t p = base.p_;
  ModPoly result = divmod(ModPoly(ModPoly::Unchecked{}, p, {1}), modulus_poly).second;
  ModPoly b = divmod(base, modulus_poly).second;
  while (exponent) {
    if (exponent & 1) result = divmod(result * b, modulus_poly).second;
    exponent >>= 1;
    if (exponent) b = divmod(b * b, modulus_poly).second;
  }
  return result;
}

ModPoly powmod_t(std::uint64_t exponent, const ModPoly& modulus_poly) {
  return pow_mod(ModPoly(ModPoly::Unchecked{}, modulus_poly.p_, {0, 1}), exponent, modulus_poly);
}

ModPoly strip_t_power(const ModPoly& f) {
  auto first = std::find_if(f.coeffs_.begin(), f.coeffs_.end(), [](std::uint64_t c) { return c != 0; });
  return ModPoly(ModPoly::Unchecked{}, f.p_, std::vector<std::uint64_t>(first, f.coeffs_.end()));
}

// For f with f' = 0, f = h(t^p) = h(t)^p; returns h.
ModPoly pth_root(const ModPoly& f) {
  std::vector<std::uint64_t> v;
  for (std::size_t i = 0; i < f.coeffs_.size(); i += f.p_) v.push_back(f.coeffs_[i]);
  return ModPoly(ModPoly::Unchecked{}, f.p_, std::move(v));
}

ModPoly squarefree_part(const ModPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree_part: zero polynomial");
  ModPoly m = f.monic();
  if (m.degree() <= 0) return m;
  const ModPoly d = m.derivative();
  if (d.is_zero()) return squarefree_part(pth_root(m));
  const ModPoly g = gcd_fp(m, d);
  if (g.degree() == 0) return m;
  // w collects the irreducibles whose multiplicity is prime to p; what is
  // left of g after removing them is a p-th power.
  const ModPoly w = divmod(m, g).first;
  ModPoly rest = g;
  for (ModPoly y = gcd_fp(rest, w); y.degree() > 0; y = gcd_fp(rest, w)) rest = divmod(rest, y).first;
  if (rest.degree() == 0) return w;
  return (w * squarefree_part(pth_root(rest))).monic();
}

long DegreeMultiset::total_degree() const {
  long s = 0;
  for (const auto& e : entries) s += e.degree * e.count;
  return s;
}

DegreeMultiset distinct_degree_factorization(const ModPoly& f) {
  DegreeMultiset out;
  ModPoly rest = f.monic();
  const std::uint64_t p = f.modulus();
  const ModPoly t(p, {0, 1});
  ModPoly h = divmod(t, rest).second;
  for (long d = 1; 2 * d <= rest.degree(); ++d) {
    h = pow_mod(h, p, rest);
    const ModPoly g = gcd_fp(h - t, rest);
    if (g.degree() > 0) {
      out.entries.push_back({d, g.degree() / d});
      rest = divmod(rest, g).first;
      h = divmod(h, rest).second;
    }
  }
  if (rest.degree() > 0) out.entries.push_back({rest.degree(), 1});
  return out;
}

DegreeMultiset irreducible_factor_degrees(const ModPoly& f) {
  if (f.is_zero()) throw DomainError("irreducible_factor_degrees: zero polynomial");
  const ModPoly s = strip_t_power(f);
  if (s.degree() <= 0) return {};
  return distinct_degree_factorization(squarefree_part(s));
}

}  // namespace covercalc
