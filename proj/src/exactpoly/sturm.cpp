// Licensed under the Apache License 2.0 (see LICENSE file).

#include <functional>

#include "bdisc/error.hpp"
#include "bdisc/unipoly.hpp"

namespace bdisc {

namespace {

using IntPoly = std::vector<Integer>;  // constant term first, no trailing zeros

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Returns lc(b)^e * (a mod b) for the number e of reduction steps taken.
IntPoly sparse_pseudo_remainder(IntPoly r, const IntPoly& b, int& steps) {
  steps = 0;
  const int db = degree(b);
  const Integer& lb = b.back();
  while (degree(r) >= db) {
    const int shift = degree(r) - db;
    const Integer lr = r.back();
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(shift + j)] -= lr * b[static_cast<size_t>(j)];
    trim(r);
    ++steps;
  }
  return r;
}

// sign of p(n/d) for d > 0, via the homogenized value sum c_i n^i d^(k-i).
int sign_at(const IntPoly& p, const Integer& n, const Integer& d) {
  if (p.empty()) return 0;
  Integer acc = p.back();
  Integer pw = 1;
  for (int i = degree(p) - 1; i >= 0; --i) {
    pw *= d;
    acc = acc * n + p[static_cast<size_t>(i)] * pw;
  }
  return sgn(acc);
}

}  // namespace

SturmChain::SturmChain(const UniPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "Sturm chain of the zero polynomial");
  // the chain of p itself ends in gcd(p, p'); only a nonconstant gcd needs the squarefree part
  if (build(primitive_integer_coeffs(p))) {
    squarefree_ = p;
    return;
  }
  input_squarefree_ = false;
  squarefree_ = squarefree_decomposition(p).squarefree_part;
  chain_.clear();
  build(primitive_integer_coeffs(squarefree_));
}

bool SturmChain::build(IntPoly p0) {
  chain_.push_back(std::move(p0));
  if (degree(chain_.front()) < 1) return true;
  const IntPoly& f = chain_.front();
  IntPoly p1(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) p1[i - 1] = f[i] * static_cast<unsigned long>(i);
  make_primitive(p1);
  chain_.push_back(std::move(p1));
  while (degree(chain_.back()) > 0) {
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    int steps = 0;
    IntPoly r = sparse_pseudo_remainder(a, b, steps);
    if (r.empty()) return false;
    // r = lc(b)^steps * rem; the next chain entry is -rem up to a positive factor
    const bool flip = !(b.back() < 0 && steps % 2 == 1);
    make_primitive(r);
    if (flip)
      for (auto& c : r) c = -c;
    chain_.push_back(std::move(r));
  }
  return true;
}

int SturmChain::sign_at(const Rational& x) const { return bdisc::sign_at(chain_.front(), x.get_num(), x.get_den()); }

int SturmChain::variations_at(const Rational& x) const {
  int prev = 0, v = 0;
  for (const auto& p : chain_) {
    const int s = bdisc::sign_at(p, x.get_num(), x.get_den());
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int SturmChain::variations_at_infinity(int direction) const {
  int prev = 0, v = 0;
  for (const auto& p : chain_) {
    int s = sgn(p.back());
    if (direction < 0 && degree(p) % 2 == 1) s = -s;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int SturmChain::count_half_open(const Rational* lo, const Rational* hi) const {
  const int vlo = lo ? variations_at(*lo) : variations_at_infinity(-1);
  const int vhi = hi ? variations_at(*hi) : variations_at_infinity(+1);
  return vlo - vhi;
}

int SturmChain::count(const Interval& iv) const {
  if (degree(chain_.front()) < 1) return 0;
  if (iv.is_point()) return is_root(*iv.lo()) ? 1 : 0;
  const Rational* lo = iv.lo() ? &*iv.lo() : nullptr;
  const Rational* hi = iv.hi() ? &*iv.hi() : nullptr;
  int n = count_half_open(lo, hi);
  if (lo && iv.lo_closed() && is_root(*lo)) ++n;
  if (hi && !iv.hi_closed() && is_root(*hi)) --n;
  return n;
}

int SturmChain::count_all() const { return count(Interval::whole()); }

int sturm_count(const UniPoly& p, const Interval& iv) { return SturmChain(p).count(iv); }

namespace {

int coefficient_variations(const IntPoly& p) {
  int prev = 0, v = 0;
  for (const auto& c : p) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

// q(x) = q(x + 1), in place
void taylor_shift_one(IntPoly& q) {
  const size_t n = q.size();
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = n - 1; j-- > i;) q[j] += q[j + 1];
}

// p has no root in the open interval (0, 1)
bool descartes_clear(const IntPoly& p, int depth) {
  // (1 + x)^n p(1 / (1 + x)) maps (0, 1) onto (0, inf)
  IntPoly q(p.rbegin(), p.rend());
  taylor_shift_one(q);
  const int v = coefficient_variations(q);
  if (v == 0) return true;
  if (v == 1 || depth == 0) return false;  // one variation means one root
  const int n = degree(p);
  IntPoly left = p;  // 2^n p(x / 2)
  for (int i = 0; i <= n; ++i) mpz_mul_2exp(left[i].get_mpz_t(), left[i].get_mpz_t(), static_cast<unsigned long>(n - i));
  IntPoly right = left;
  taylor_shift_one(right);
  if (right.front() == 0) return false;  // p(1/2) = 0
  return descartes_clear(left, depth - 1) && descartes_clear(right, depth - 1);
}

}  // namespace

bool descartes_excludes_unit_interval(const UniPoly& p, int max_depth) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "root exclusion for 0");
  const IntPoly c = primitive_integer_coeffs(p);
  if (degree(c) < 1) return true;
  Integer at_one = 0;
  for (const auto& x : c) at_one += x;
  if (c.front() == 0 || at_one == 0) return false;
  return descartes_clear(c, max_depth);
}

RootSignature root_signature(const UniPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "root signature of 0");
  const SturmChain chain(p);
  RootSignature sig;
  sig.neg = chain.count(Interval::below(0));
  sig.pos = chain.count(Interval::above(0));
  sig.zero_is_root = p.coeff(0) == 0;
  sig.is_squarefree = chain.input_squarefree();
  return sig;
}

std::vector<Interval> isolate_real_roots(const UniPoly& p, const Rational& max_width) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "root isolation of 0");
  if (max_width <= 0) throw Error(Errc::Internal, "isolation width must be positive");
  const SturmChain chain(p);
  std::vector<Interval> out;
  const Rational bound = root_bound(chain.squarefree()) + 1;
  std::function<void(const Rational&, const Rational&, int)> split = [&](const Rational& lo, const Rational& hi,
                                                                         int n) {
    if (n == 0) return;
    if (n == 1 && hi - lo <= max_width) {
      out.push_back(Interval::open(lo, hi));
      return;
    }
    const Rational mid = (lo + hi) / 2;
    const bool mid_root = chain.is_root(mid);
    const int left = chain.count(Interval::open(lo, mid));
    split(lo, mid, left);
    if (mid_root) out.push_back(Interval::point(mid));
    split(mid, hi, n - left - (mid_root ? 1 : 0));
  };
  split(-bound, bound, chain.count(Interval::open(-bound, bound)));
  return out;
}

Interval refine_root(const SturmChain& chain, Interval iv, const Rational& max_width) {
  while (!iv.is_point() && iv.width() > max_width) {
    const Rational lo = *iv.lo(), hi = *iv.hi();
    const Rational mid = (lo + hi) / 2;
    if (chain.is_root(mid)) return Interval::point(mid);
    iv = chain.count(Interval::open(lo, mid)) == 1 ? Interval::open(lo, mid) : Interval::open(mid, hi);
  }
  return iv;
}

Rational separating_rational(const SturmChain& chain, Interval left, Interval right) {
  for (int guard = 0; guard < 4096; ++guard) {
    const Rational& lhi = *left.hi();
    const Rational& rlo = *right.lo();
    if (lhi < rlo) return (lhi + rlo) / 2;
    if (lhi > rlo) throw Error(Errc::Internal, "separating_rational: overlapping isolating intervals");
    if (!chain.is_root(lhi)) return lhi;
    if (!left.is_point()) left = refine_root(chain, left, left.width() / 2);
    if (!right.is_point()) right = refine_root(chain, right, right.width() / 2);
  }
  throw Error(Errc::Internal, "separating_rational did not converge");
}

}  // namespace bdisc
