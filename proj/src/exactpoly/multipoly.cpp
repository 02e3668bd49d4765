// Licensed under the Apache License 2.0 (see LICENSE file).

#include "bdisc/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "bdisc/error.hpp"

namespace bdisc {

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& c) {
  MultiPoly p(std::move(vars));
  if (c != 0) p.terms_.emplace(Monomial(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::string_view name) {
  MultiPoly p(std::move(vars));
  const int i = p.var_index(name);
  if (i < 0) throw Error(Errc::ArityMismatch, "unknown variable " + std::string(name));
  Monomial m(p.vars_.size(), 0);
  m[static_cast<size_t>(i)] = 1;
  p.terms_.emplace(std::move(m), 1);
  return p;
}

MultiPoly MultiPoly::term(std::vector<std::string> vars, const Rational& c, Monomial exps) {
  MultiPoly p(std::move(vars));
  if (exps.size() != p.vars_.size()) throw Error(Errc::ArityMismatch, "monomial arity");
  if (c != 0) p.terms_.emplace(std::move(exps), c);
  return p;
}

MultiPoly MultiPoly::from_coefficients(std::span<const MultiPoly> coeffs, std::string_view var) {
  if (coeffs.empty()) throw Error(Errc::Internal, "from_coefficients needs at least one coefficient");
  MultiPoly out(coeffs.front().vars());
  const int vi = out.var_index(var);
  if (vi < 0) throw Error(Errc::ArityMismatch, "unknown variable " + std::string(var));
  for (size_t i = 0; i < coeffs.size(); ++i) {
    out.check_same_vars(coeffs[i]);
    for (const auto& [m, c] : coeffs[i].terms_) {
      Monomial mm = m;
      mm[static_cast<size_t>(vi)] += static_cast<std::uint32_t>(i);
      out.add_term(mm, c);
    }
  }
  return out;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
}

Rational MultiPoly::constant_value() const {
  auto it = terms_.find(Monomial(vars_.size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::var_index(std::string_view name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

int MultiPoly::degree(std::string_view var) const {
  const int vi = var_index(var);
  if (vi < 0) return terms_.empty() ? -1 : 0;
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[static_cast<size_t>(vi)]));
  return d;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (auto e : m) s += static_cast<int>(e);
    d = std::max(d, s);
  }
  return d;
}

const std::pair<const Monomial, Rational>& MultiPoly::leading_term() const {
  if (terms_.empty()) throw Error(Errc::ZeroPolynomial, "leading term of the zero polynomial");
  return *terms_.begin();
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) throw Error(Errc::ArityMismatch, "evaluation point arity");
  // cache powers per variable
  std::vector<std::vector<Rational>> pw(vars_.size(), std::vector<Rational>{Rational(1)});
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto& cache = pw[i];
      while (cache.size() <= m[i]) cache.push_back(cache.back() * point[i]);
      t *= cache[m[i]];
    }
    acc += t;
  }
  return acc;
}

template <class T>
static T eval_float(const MultiPoly& p, std::span<const T> point) {
  if (point.size() != p.arity()) throw Error(Errc::ArityMismatch, "evaluation point arity");
  T acc = 0;
  for (const auto& [m, c] : p.terms()) {
    T t = static_cast<T>(c.get_d());
    for (size_t i = 0; i < m.size(); ++i)
      for (std::uint32_t e = 0; e < m[i]; ++e) t *= point[i];
    acc += t;
  }
  return acc;
}

double MultiPoly::eval_double(std::span<const double> point) const { return eval_float(*this, point); }

long double MultiPoly::eval_long_double(std::span<const long double> point) const {
  return eval_float(*this, point);
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::string_view var) const {
  const int vi = var_index(var);
  if (vi < 0) return {*this};
  std::vector<MultiPoly> out(static_cast<size_t>(std::max(degree(var), 0)) + 1, MultiPoly(vars_));
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    const auto e = mm[static_cast<size_t>(vi)];
    mm[static_cast<size_t>(vi)] = 0;
    out[e].terms_.emplace(std::move(mm), c);
  }
  return out;
}

MultiPoly MultiPoly::derivative(std::string_view var) const {
  MultiPoly out(vars_);
  const int vi = var_index(var);
  if (vi < 0) return out;
  for (const auto& [m, c] : terms_) {
    const auto e = m[static_cast<size_t>(vi)];
    if (e == 0) continue;
    Monomial mm = m;
    mm[static_cast<size_t>(vi)] = e - 1;
    out.add_term(mm, c * static_cast<unsigned long>(e));
  }
  return out;
}

MultiPoly MultiPoly::substitute(std::string_view var, const MultiPoly& value) const {
  check_same_vars(value);
  const auto coeffs = coefficients_in(var);
  // Horner in the substituted value
  MultiPoly acc(vars_);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * value + *it;
  return acc;
}

MultiPoly MultiPoly::specialize(std::span<const std::string> names, std::span<const Rational> values) const {
  if (names.size() != values.size()) throw Error(Errc::ArityMismatch, "specialize: names/values size");
  std::vector<std::string> keep;
  std::vector<int> fixed(vars_.size(), -1);
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(names.begin(), names.end(), vars_[i]);
    if (it == names.end())
      keep.push_back(vars_[i]);
    else
      fixed[i] = static_cast<int>(it - names.begin());
  }
  for (const auto& n : names)
    if (var_index(n) < 0) throw Error(Errc::ArityMismatch, "specialize: unknown variable " + n);
  MultiPoly out(keep);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    Monomial mm;
    for (size_t i = 0; i < m.size(); ++i) {
      if (fixed[i] < 0) {
        mm.push_back(m[i]);
      } else if (m[i] > 0) {
        Rational v;
        mpz_pow_ui(v.get_num_mpz_t(), values[static_cast<size_t>(fixed[i])].get_num_mpz_t(), m[i]);
        mpz_pow_ui(v.get_den_mpz_t(), values[static_cast<size_t>(fixed[i])].get_den_mpz_t(), m[i]);
        t *= v;
      }
    }
    out.add_term(mm, t);
  }
  return out;
}

MultiPoly MultiPoly::with_vars(std::vector<std::string> vars) const {
  MultiPoly out(std::move(vars));
  std::vector<int> map(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) map[i] = out.var_index(vars_[i]);
  for (const auto& [m, c] : terms_) {
    Monomial mm(out.vars_.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (map[i] < 0) throw Error(Errc::ArityMismatch, "with_vars: variable " + vars_[i] + " is in use");
      mm[static_cast<size_t>(map[i])] = m[i];
    }
    out.add_term(mm, c);
  }
  return out;
}

UniPoly MultiPoly::to_unipoly(std::string_view var) const {
  const int vi = var_index(var);
  std::vector<Rational> c;
  for (const auto& [m, coef] : terms_) {
    for (size_t i = 0; i < m.size(); ++i)
      if (static_cast<int>(i) != vi && m[i] != 0)
        throw Error(Errc::ArityMismatch, "to_unipoly: polynomial depends on " + vars_[i]);
    const size_t e = vi < 0 ? 0 : m[static_cast<size_t>(vi)];
    if (c.size() <= e) c.resize(e + 1);
    c[e] += coef;
  }
  return UniPoly(std::move(c), std::string(var));
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& p, std::vector<std::string> vars, std::string_view var) {
  MultiPoly out(std::move(vars));
  const int vi = out.var_index(var);
  if (vi < 0) throw Error(Errc::ArityMismatch, "from_unipoly: unknown variable " + std::string(var));
  for (int i = 0; i <= p.degree(); ++i) {
    Monomial m(out.vars_.size(), 0);
    m[static_cast<size_t>(vi)] = static_cast<std::uint32_t>(i);
    out.add_term(m, p.coeff(i));
  }
  return out;
}

Integer MultiPoly::denominator_lcm() const {
  Integer l = 1;
  for (const auto& [m, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

MultiPoly MultiPoly::primitive() const {
  if (terms_.empty()) return *this;
  const Integer l = denominator_lcm();
  Integer g = 0;
  for (const auto& [m, c] : terms_) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale(l, g);
  scale.canonicalize();
  if (terms_.begin()->second < 0) scale = -scale;
  return scale * *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

void MultiPoly::check_same_vars(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw Error(Errc::ArityMismatch, "polynomials over different variable lists");
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_vars(b);
  MultiPoly out(a.vars_);
  Monomial m(a.vars_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

MultiPoly operator*(const Rational& s, const MultiPoly& p) {
  MultiPoly out(p.vars_);
  if (s == 0) return out;
  out.terms_ = p.terms_;
  for (auto& [m, c] : out.terms_) c *= s;
  return out;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result = constant(vars_, 1), base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return result;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += compact_string(mag);
    } else {
      if (mag != 1) out += compact_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

MultiPoly MultiPoly::parse(std::string_view text, std::vector<std::string> vars) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(Errc::Parse, "empty polynomial text");
  MultiPoly out(std::move(vars));
  if (s == "0") return out;
  size_t pos = 0;
  while (pos < s.size()) {
    int sgn_term = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sgn_term = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw Error(Errc::Parse, "expected '+' or '-' in polynomial text");
    }
    size_t end = s.find_first_of("+-", pos);
    if (end == std::string::npos) end = s.size();
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw Error(Errc::Parse, "empty term in polynomial text");
    Rational coef = sgn_term;
    Monomial m(out.vars_.size(), 0);
    size_t fp = 0;
    while (fp <= term.size()) {
      size_t fe = term.find('*', fp);
      if (fe == std::string::npos) fe = term.size();
      const std::string factor = term.substr(fp, fe - fp);
      if (factor.empty()) throw Error(Errc::Parse, "empty factor in '" + term + "'");
      if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
        coef *= parse_rational(factor);
      } else {
        const auto caret = factor.find('^');
        const std::string name = factor.substr(0, caret);
        const int vi = out.var_index(name);
        if (vi < 0) throw Error(Errc::Parse, "unknown variable '" + name + "'");
        unsigned long e = 1;
        if (caret != std::string::npos) {
          const std::string exp = factor.substr(caret + 1);
          if (exp.empty() || !std::all_of(exp.begin(), exp.end(), [](char ch) { return std::isdigit(ch); }))
            throw Error(Errc::Parse, "bad exponent in '" + factor + "'");
          e = std::stoul(exp);
        }
        m[static_cast<size_t>(vi)] += static_cast<std::uint32_t>(e);
      }
      fp = fe + 1;
    }
    out.add_term(m, coef);
    pos = end;
  }
  return out;
}

namespace {

bool divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw Error(Errc::ZeroPolynomial, "division by the zero polynomial");
  if (a.vars() != b.vars()) throw Error(Errc::ArityMismatch, "exact_divide over different variable lists");
  if (b.is_constant()) return Rational(1) / b.constant_value() * a;
  const auto& [lm, lc] = b.leading_term();
  MultiPoly q(a.vars()), r = a;
  Monomial tm(lm.size());
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading_term();
    if (!divides(lm, rm)) throw Error(Errc::NotExact, "polynomial division is not exact");
    for (size_t i = 0; i < tm.size(); ++i) tm[i] = rm[i] - lm[i];
    const MultiPoly t = MultiPoly::term(a.vars(), rc / lc, tm);
    q += t;
    r -= t * b;
  }
  return q;
}

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m) {
  const size_t n = m.size();
  if (n == 0) throw Error(Errc::Internal, "determinant of an empty matrix");
  const auto vars = m[0][0].vars();
  int sgn_det = 1;
  MultiPoly prev = MultiPoly::constant(vars, 1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return MultiPoly(vars);
      std::swap(m[k], m[piv]);
      sgn_det = -sgn_det;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact_divide(num, prev);
      }
    }
    prev = m[k][k];
  }
  return Rational(sgn_det) * m[n - 1][n - 1];
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::string_view var) {
  if (f.vars() != g.vars()) throw Error(Errc::ArityMismatch, "resultant over different variable lists");
  const int n = f.degree(var), m = g.degree(var);
  if (n <= 0 || m <= 0) throw Error(Errc::DegreeZero, "resultant needs positive degree in " + std::string(var));
  std::vector<std::string> rest;
  for (const auto& v : f.vars())
    if (v != var) rest.push_back(v);
  const Integer lf = f.denominator_lcm(), lg = g.denominator_lcm();
  auto fc = (Rational(lf) * f).coefficients_in(var);
  auto gc = (Rational(lg) * g).coefficients_in(var);
  for (auto& c : fc) c = c.with_vars(rest);
  for (auto& c : gc) c = c.with_vars(rest);
  const size_t size = static_cast<size_t>(n + m);
  std::vector<std::vector<MultiPoly>> syl(size, std::vector<MultiPoly>(size, MultiPoly(rest)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) syl[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = fc[static_cast<size_t>(n - j)];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j)
      syl[static_cast<size_t>(m + i)][static_cast<size_t>(i + j)] = gc[static_cast<size_t>(m - j)];
  MultiPoly det = bareiss_determinant(std::move(syl));
  Integer scale_f, scale_g;
  mpz_pow_ui(scale_f.get_mpz_t(), lf.get_mpz_t(), static_cast<unsigned long>(m));
  mpz_pow_ui(scale_g.get_mpz_t(), lg.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(1, 1) / Rational(scale_f * scale_g) * det;
}

namespace {

int main_var(const MultiPoly& a, const MultiPoly& b) {
  for (size_t i = 0; i < a.vars().size(); ++i)
    if (a.degree(a.vars()[i]) > 0 || b.degree(a.vars()[i]) > 0) return static_cast<int>(i);
  return -1;
}

MultiPoly content_in(const MultiPoly& p, std::string_view v) {
  MultiPoly g(p.vars());
  for (const auto& c : p.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

MultiPoly pseudo_remainder(MultiPoly r, const MultiPoly& b, std::string_view v) {
  const int db = b.degree(v);
  const auto bc = b.coefficients_in(v);
  const MultiPoly& lb = bc.back();
  const int vi = b.var_index(v);
  while (!r.is_zero() && r.degree(v) >= db) {
    const int dr = r.degree(v);
    const MultiPoly lr = r.coefficients_in(v).back();
    Monomial shift(r.vars().size(), 0);
    shift[static_cast<size_t>(vi)] = static_cast<std::uint32_t>(dr - db);
    r = lb * r - lr * MultiPoly::term(r.vars(), 1, shift) * b;
    r = r.primitive();
  }
  return r;
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars() != b.vars()) throw Error(Errc::ArityMismatch, "gcd over different variable lists");
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(a.vars(), 1);
  const std::string v = a.vars()[static_cast<size_t>(main_var(a, b))];
  if (a.degree(v) == 0) return gcd(a, content_in(b, v));
  if (b.degree(v) == 0) return gcd(content_in(a, v), b);
  const MultiPoly ca = content_in(a, v), cb = content_in(b, v);
  MultiPoly pa = exact_divide(a, ca), pb = exact_divide(b, cb);
  const MultiPoly c = gcd(ca, cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  while (!pb.is_zero() && pb.degree(v) > 0) {
    MultiPoly r = pseudo_remainder(pa, pb, v);
    pa = std::move(pb);
    pb = r.is_zero() ? r : exact_divide(r, content_in(r, v));
  }
  MultiPoly gv = pb.is_zero() ? exact_divide(pa, content_in(pa, v)) : MultiPoly::constant(a.vars(), 1);
  return (c * gv).primitive();
}

MultiPoly squarefree_part(const MultiPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "squarefree part of 0");
  if (p.is_constant()) return MultiPoly::constant(p.vars(), 1);
  const std::string v = p.vars()[static_cast<size_t>(main_var(p, p))];
  const MultiPoly c = content_in(p, v);
  const MultiPoly pp = exact_divide(p, c);
  const MultiPoly g = gcd(pp, pp.derivative(v));
  return (exact_divide(pp, g) * squarefree_part(c)).primitive();
}

UniPoly restrict_to_segment(const MultiPoly& f, std::span<const Rational> l0, std::span<const Rational> l1) {
  if (l0.size() != f.arity() || l1.size() != f.arity())
    throw Error(Errc::ArityMismatch, "segment endpoints do not match the polynomial's variables");
  std::vector<std::vector<UniPoly>> pw(f.arity());
  for (size_t i = 0; i < f.arity(); ++i) pw[i].push_back(UniPoly::constant(1, "t"));
  UniPoly acc({}, "t");
  for (const auto& [m, c] : f.terms()) {
    UniPoly t = UniPoly::constant(c, "t");
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto& cache = pw[i];
      const UniPoly lin({l0[i], l1[i] - l0[i]}, "t");
      while (cache.size() <= m[i]) cache.push_back(cache.back() * lin);
      t = t * cache[m[i]];
    }
    acc = acc + t;
  }
  return acc;
}

bool proportional(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars() != b.vars() || a.is_zero() || b.is_zero() || a.terms().size() != b.terms().size()) return false;
  const Rational ratio = a.terms().begin()->second / b.terms().begin()->second;
  auto ib = b.terms().begin();
  for (auto ia = a.terms().begin(); ia != a.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second != ratio * ib->second) return false;
  }
  return true;
}

}  // namespace bdisc
