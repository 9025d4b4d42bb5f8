#include "covercalc/laurent_poly.hpp"

#include <algorithm>
#include <sstream>

#include "covercalc/error.hpp"

namespace covercalc {

namespace {

mpz_class ipow(const mpz_class& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

mpz_class divexact(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

IntPoly divexact(const IntPoly& f, const mpz_class& c) {
  std::vector<mpz_class> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : out) x = divexact(x, c);
  return IntPoly(std::move(out));
}

}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t degree) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::t_pow_minus_one(std::size_t n) {
  std::vector<mpz_class> v(n + 1);
  v[0] -= 1;
  v[n] += 1;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPoly::lead() const {
  static const mpz_class kZero = 0;
  return coeffs_.empty() ? kZero : coeffs_.back();
}

mpz_class IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly operator*(const mpz_class& c, const IntPoly& a) {
  std::vector<mpz_class> v(a.coeffs_.begin(), a.coeffs_.end());
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

mpz_class content(const IntPoly& f) {
  mpz_class g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  mpz_class c = content(f);
  if (f.lead() < 0) c = -c;
  return divexact(f, c);
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo_remainder: zero divisor");
  if (a.degree() < b.degree()) return a;
  std::vector<mpz_class> r(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const mpz_class& lb = bc.back();
  // Every step scales the running remainder by lc(b) and cancels its top
  // term, so the total scale is lc(b)^(deg a - deg b + 1) exactly.
  for (long top = a.degree(); top >= b.degree(); --top) {
    const auto ut = static_cast<std::size_t>(top);
    mpz_class lr = r[ut];
    for (std::size_t i = 0; i < ut; ++i) r[i] *= lb;
    const std::size_t shift = ut - db;
    for (std::size_t i = 0; i < db; ++i) r[shift + i] -= lr * bc[i];
    r[ut] = 0;
  }
  return IntPoly(std::move(r));
}

std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("exact_quotient: zero divisor");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> r(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<mpz_class> q(r.size() - db);
  for (long top = a.degree(); top >= b.degree(); --top) {
    const auto ut = static_cast<std::size_t>(top);
    if (r[ut] == 0) continue;
    if (!mpz_divisible_p(r[ut].get_mpz_t(), bc.back().get_mpz_t())) return std::nullopt;
    mpz_class qt = divexact(r[ut], bc.back());
    const std::size_t shift = ut - db;
    q[shift] = qt;
    for (std::size_t i = 0; i <= db; ++i) r[shift + i] -= qt * bc[i];
  }
  for (const auto& c : r) {
    if (c != 0) return std::nullopt;
  }
  return IntPoly(std::move(q));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.lead() < 0 ? -b : b;
  if (b.is_zero()) return a.lead() < 0 ? -a : a;
  mpz_class c;
  {
    const mpz_class ca = content(a), cb = content(b);
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return c * primitive_part(x);
}

mpz_class eval_at(const IntPoly& f, const mpz_class& x) {
  mpz_class acc = 0;
  const auto c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Subresultant PRS (Collins / Brown), following the classical
// formulation with content extraction and the g, h scaling sequence.
mpz_class resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  if (f.degree() == 0) return ipow(f.lead(), static_cast<unsigned long>(g.degree()));
  if (g.degree() == 0) return ipow(g.lead(), static_cast<unsigned long>(f.degree()));

  IntPoly a = f, b = g;
  int sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
  }
  const mpz_class ca = content(a), cb = content(b);
  a = divexact(a, ca);
  b = divexact(b, cb);
  const mpz_class scale = ipow(ca, static_cast<unsigned long>(b.degree())) *
                          ipow(cb, static_cast<unsigned long>(a.degree()));

  mpz_class gs = 1, hs = 1;
  for (;;) {
    const long da = a.degree(), db = b.degree();
    const auto delta = static_cast<unsigned long>(da - db);
    if ((da & 1) && (db & 1)) sign = -sign;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = divexact(r, gs * ipow(hs, delta));
    gs = a.lead();
    if (delta > 0) hs = divexact(ipow(gs, delta), ipow(hs, delta - 1));
    if (b.degree() == 0) break;
  }
  const auto da = static_cast<unsigned long>(a.degree());
  const mpz_class last = divexact(ipow(b.lead(), da), ipow(hs, da - 1));
  return sign * scale * last;
}

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw DomainError("bareiss_determinant: matrix is not square");
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  return n == 0 ? mpz_class(1) : sign * m[n - 1][n - 1];
}

mpz_class resultant_sylvester(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant_sylvester: zero polynomial");
  const auto m = static_cast<std::size_t>(f.degree());
  const auto n = static_cast<std::size_t>(g.degree());
  const std::size_t size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<mpz_class>> s(size, std::vector<mpz_class>(size));
  // Rows hold coefficients from the highest power down.
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t i = 0; i <= m; ++i) s[row][row + i] = f.coeffs()[m - i];
  }
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t i = 0; i <= n; ++i) s[n + row][row + i] = g.coeffs()[n - i];
  }
  return bareiss_determinant(std::move(s));
}

}  // namespace covercalc
