// Licensed under the Apache License 2.0 (see LICENSE file).

#include "bdisc/unipoly.hpp"

#include <algorithm>

#include "bdisc/error.hpp"

namespace bdisc {

UniPoly::UniPoly(std::vector<Rational> coeffs, std::string var) : c_(std::move(coeffs)), var_(std::move(var)) {
  trim();
}

UniPoly UniPoly::constant(const Rational& c, std::string var) { return UniPoly({c}, std::move(var)); }

UniPoly UniPoly::monomial(const Rational& c, int degree, std::string var) {
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v), std::move(var));
}

UniPoly UniPoly::from_roots(std::span<const Rational> roots, std::string var) {
  UniPoly p = constant(1, var);
  for (const auto& r : roots) p = p * UniPoly({-r, Rational(1)}, var);
  return p;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<size_t>(i)];
}

const Rational& UniPoly::leading() const {
  if (c_.empty()) throw Error(Errc::ZeroPolynomial, "leading coefficient of the zero polynomial");
  return c_.back();
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int UniPoly::sign_at(const Rational& x) const { return sgn(eval(x)); }

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly({}, var_);
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UniPoly(std::move(d), var_);
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  return Rational(1) / leading() * *this;
}

UniPoly UniPoly::with_var(std::string var) const { return UniPoly(c_, std::move(var)); }

UniPoly UniPoly::operator-() const {
  std::vector<Rational> v(c_);
  for (auto& x : v) x = -x;
  return UniPoly(std::move(v), var_);
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UniPoly(std::move(v), a.var_);
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly({}, a.var_);
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(v), a.var_);
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
  std::vector<Rational> v(p.c_);
  for (auto& x : v) x *= s;
  return UniPoly(std::move(v), p.var_);
}

std::string UniPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (!unit || i == 0) out += compact_string(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += var_;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(Errc::ZeroPolynomial, "division by the zero polynomial");
  std::vector<Rational> r(a.coeffs());
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {UniPoly({}, a.var()), a};
  std::vector<Rational> q(static_cast<size_t>(da - db) + 1);
  const Rational inv = 1 / b.leading();
  for (int i = da; i >= db; --i) {
    const Rational t = r[static_cast<size_t>(i)] * inv;
    q[static_cast<size_t>(i - db)] = t;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(i - db + j)] -= t * b.coeffs()[static_cast<size_t>(j)];
  }
  r.resize(static_cast<size_t>(db));
  return {UniPoly(std::move(q), a.var()), UniPoly(std::move(r), a.var())};
}

namespace {

// lc(b)^k * (a mod b) over Z, content removed.
std::vector<Integer> primitive_pseudo_remainder(std::vector<Integer> r, const std::vector<Integer>& b) {
  const size_t db = b.size() - 1;
  while (r.size() > db && !r.empty()) {
    const size_t shift = r.size() - 1 - db;
    const Integer lr = r.back();
    for (auto& c : r) c *= b.back();
    for (size_t j = 0; j <= db; ++j) r[shift + j] -= lr * b[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  Integer g = 0;
  for (const auto& c : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

}  // namespace

// Primitive remainder sequence over Z: the coefficients stay near the size of
// the subresultants instead of growing like the Q-Euclid ones.
UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) return UniPoly({}, a.var());
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  std::vector<Integer> x = primitive_integer_coeffs(a), y = primitive_integer_coeffs(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    std::vector<Integer> r = primitive_pseudo_remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rational> c;
  c.reserve(x.size());
  for (auto& v : x) c.emplace_back(v);
  return UniPoly(std::move(c), a.var()).monic();
}

std::vector<Integer> primitive_integer_coeffs(const UniPoly& p) {
  std::vector<Integer> out;
  if (p.is_zero()) return out;
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (out.back() < 0) g = -g;
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return out;
}

SquarefreeDecomposition squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "squarefree decomposition of 0");
  UniPoly g = gcd(p, p.derivative());
  if (g.is_zero()) g = UniPoly::constant(1, p.var());
  UniPoly sq = divmod(p, g).first;
  return {g.with_var(p.var()), sq.monic().with_var(p.var())};
}

Rational resultant(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(Errc::ZeroPolynomial, "resultant with the zero polynomial");
  UniPoly a = f, b = g;
  Rational acc = 1;
  while (true) {
    const int da = a.degree(), db = b.degree();
    if (db == 0) {
      Rational r = acc;
      for (int i = 0; i < da; ++i) r *= b.leading();
      return r;
    }
    if (da == 0) {
      Rational r = acc;
      for (int i = 0; i < db; ++i) r *= a.leading();
      return r;
    }
    // res(a, b) = (-1)^(da db) lc(b)^(da - deg r) res(b, r),  r = a mod b
    UniPoly r = divmod(a, b).second;
    if (r.is_zero()) return 0;
    if ((da * db) % 2 == 1) acc = -acc;
    for (int i = 0; i < da - r.degree(); ++i) acc *= b.leading();
    a = std::move(b);
    b = std::move(r);
  }
}

UniPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys, std::string var) {
  if (xs.size() != ys.size()) throw Error(Errc::ArityMismatch, "interpolation needs matching point lists");
  const size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      if (xs[i] == xs[i - j]) throw Error(Errc::Internal, "interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    }
  UniPoly out({}, var);
  for (size_t k = n; k-- > 0;) out = out * UniPoly({-xs[k], 1}, var) + UniPoly::constant(dd[k], var);
  return out;
}

Rational root_bound(const UniPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "root bound of 0");
  Rational m = 0;
  const Rational lc = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeffs()[static_cast<size_t>(i)]) / lc));
  return m + 1;
}

}  // namespace bdisc
