// Licensed under the Apache License 2.0 (see LICENSE file).

#include "bdisc/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

#include "bdisc/error.hpp"

namespace bdisc {

void Viewport::validate() const {
  if (!(x_min < x_max) || !(y_min < y_max)) throw Error(Errc::EmptyViewport, "viewport range is empty");
  if (width <= 0 || height <= 0) throw Error(Errc::EmptyViewport, "viewport has no pixels");
  if (samples < 16) throw Error(Errc::EmptyViewport, "viewport needs at least 16 samples per axis");
}

namespace {

using LD = long double;

// Two doubles carry more than the 64 mantissa bits of a long double.
LD to_ld(const Rational& q) {
  const mpf_class f(q, 192);
  const double hi = f.get_d();
  const mpf_class rest = f - hi;
  return static_cast<LD>(hi) + static_cast<LD>(rest.get_d());
}

Rational snap(LD v, bool up) {
  const LD s = v * 8;
  Rational r(Integer(static_cast<long>(up ? std::ceil(s) : std::floor(s))), Integer(8));
  r.canonicalize();
  return r;
}

std::string num(LD v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.2f", static_cast<double>(v));
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

struct Frame {
  LD x0, x1, y0, y1, w, h;
  explicit Frame(const Viewport& vp)
      : x0(to_ld(vp.x_min)), x1(to_ld(vp.x_max)), y0(to_ld(vp.y_min)), y1(to_ld(vp.y_max)), w(vp.width), h(vp.height) {}
  LD px(LD x) const { return (x - x0) / (x1 - x0) * w; }
  LD py(LD y) const { return (y1 - y) / (y1 - y0) * h; }
  bool near(const PlotPoint& p) const {
    const LD dx = x1 - x0, dy = y1 - y0;
    return p.first > x0 - 4 * dx && p.first < x1 + 4 * dx && p.second > y0 - 4 * dy && p.second < y1 + 4 * dy;
  }
};

LD horner(const UniPoly& p, LD s) {
  LD acc = 0;
  for (size_t i = p.coeffs().size(); i-- > 0;) acc = acc * s + to_ld(p.coeffs()[i]);
  return acc;
}

// Real roots of p as long doubles, ascending.
std::vector<LD> real_roots(const UniPoly& p) {
  std::vector<LD> out;
  if (p.degree() <= 0) return out;
  const SturmChain chain(p);
  for (Interval iv : isolate_real_roots(p, Rational(1, 1 << 10))) {
    if (!iv.is_point()) iv = refine_root(chain, iv, Rational(1, Integer(1) << 64));
    out.push_back(iv.is_point() ? to_ld(*iv.lo()) : to_ld((*iv.lo() + *iv.hi()) / 2));
  }
  return out;
}

// Zero set of f written as  lead * u^2 + lin(s) * u + con(s) = 0  over a parameter
// s (u is the other coordinate). G(s) = lin^2 - 4 lead con is the support polynomial.
struct QuadraticSolve {
  bool param_is_x = false;  // B: s = x, u = y; F4: s = y, u = x
  LD lead = 1;
  UniPoly lin, con, support;
};

PlotPoint make_point(const QuadraticSolve& q, LD s, LD u) { return q.param_is_x ? PlotPoint{s, u} : PlotPoint{u, s}; }

std::vector<std::vector<PlotPoint>> trace_quadratic(const QuadraticSolve& q, LD s_lo, LD s_hi, int samples) {
  std::vector<LD> roots = real_roots(q.support);
  std::vector<LD> cuts{s_lo};
  for (LD r : roots)
    if (r > s_lo && r < s_hi) cuts.push_back(r);
  cuts.push_back(s_hi);
  auto is_root = [&](LD s) { return std::find(roots.begin(), roots.end(), s) != roots.end(); };
  std::vector<std::vector<PlotPoint>> out;
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    const LD a = cuts[k], b = cuts[k + 1];
    if (horner(q.support, (a + b) / 2) <= 0) continue;
    std::vector<LD> ss{a};
    const LD step = (s_hi - s_lo) / samples;
    for (LD s = s_lo + step * std::ceil((a - s_lo) / step); s < b; s += step)
      if (s > a) ss.push_back(s);
    for (int i = 1; i < 64; ++i) ss.push_back(a + (b - a) * i / 64);
    ss.push_back(b);
    std::sort(ss.begin(), ss.end());
    ss.erase(std::unique(ss.begin(), ss.end()), ss.end());
    std::vector<PlotPoint> plus, minus;
    for (LD s : ss) {
      const LD g = (s == a && is_root(a)) || (s == b && is_root(b)) ? 0 : std::max<LD>(0, horner(q.support, s));
      const LD root = std::sqrt(g), lin = horner(q.lin, s);
      plus.push_back(make_point(q, s, (-lin + root) / (2 * q.lead)));
      minus.push_back(make_point(q, s, (-lin - root) / (2 * q.lead)));
    }
    const bool left_closed = is_root(a), right_closed = is_root(b);
    if (right_closed) {
      std::vector<PlotPoint> loop = plus;
      loop.insert(loop.end(), minus.rbegin(), minus.rend());
      out.push_back(std::move(loop));
    } else if (left_closed) {
      std::vector<PlotPoint> loop(plus.rbegin(), plus.rend());
      loop.insert(loop.end(), minus.begin(), minus.end());
      out.push_back(std::move(loop));
    } else {
      out.push_back(std::move(plus));
      out.push_back(std::move(minus));
    }
  }
  return out;
}

std::optional<QuadraticSolve> quadratic_form(const SingularityClass& cls, const Parameter& lambda) {
  const UniPoly h = boundary_polynomial(cls, lambda);
  QuadraticSolve q;
  switch (cls.family()) {
    case Family::B:
      q.param_is_x = true;
      q.lead = cls.quadratic_sign();
      q.lin = UniPoly({}, "x");
      q.con = h;
      break;
    case Family::F4: {
      const Rational &a = lambda[0], &c = lambda[2];
      q.lead = cls.sign();
      q.lin = UniPoly({a, c}, "y");
      q.con = h;
      break;
    }
    case Family::C: return std::nullopt;
  }
  q.support = q.lin * q.lin - Rational(4 * static_cast<int>(q.lead)) * q.con;
  return q;
}

std::vector<std::vector<PlotPoint>> clip(const std::vector<std::vector<PlotPoint>>& lines, const Frame& fr) {
  std::vector<std::vector<PlotPoint>> out;
  for (const auto& line : lines) {
    std::vector<PlotPoint> cur;
    for (const auto& p : line) {
      if (std::isfinite(static_cast<double>(p.first)) && std::isfinite(static_cast<double>(p.second)) && fr.near(p)) {
        cur.push_back(p);
      } else if (!cur.empty()) {
        if (cur.size() > 1) out.push_back(std::move(cur));
        cur.clear();
      }
    }
    if (cur.size() > 1) out.push_back(std::move(cur));
  }
  return out;
}

std::vector<std::vector<PlotPoint>> curve(const SingularityClass& cls, const Parameter& lambda, const Viewport& vp,
                                          const Frame& fr) {
  if (auto q = quadratic_form(cls, lambda)) {
    const LD lo = q->param_is_x ? fr.x0 : fr.y0, hi = q->param_is_x ? fr.x1 : fr.y1;
    return clip(trace_quadratic(*q, lo, hi, vp.samples), fr);
  }
  // C: q x y + h(y) = 0, a graph x = -h(y) / (q y) away from y = 0
  const UniPoly h = boundary_polynomial(cls, lambda);
  const LD qs = cls.quadratic_sign();
  std::vector<std::vector<PlotPoint>> lines(2);
  const int n = vp.samples * 4;
  for (int i = 0; i <= n; ++i) {
    const LD y = fr.y0 + (fr.y1 - fr.y0) * i / n;
    if (y == 0) continue;
    lines[y < 0 ? 0 : 1].push_back({-horner(h, y) / (qs * y), y});
  }
  if (h.coeff(0) == 0) lines.push_back({{fr.x0, 0}, {fr.x1, 0}});
  return clip(lines, fr);
}

int count_crossings(const std::vector<std::vector<PlotPoint>>& lines) {
  int n = 0;
  for (const auto& line : lines) {
    int prev = 0;
    for (const auto& p : line) {
      const int s = p.first > 0 ? 1 : p.first < 0 ? -1 : 0;
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++n;
      prev = s;
    }
  }
  return n;
}

std::string svg_header(const Viewport& vp, const std::string& title) {
  const std::string w = std::to_string(vp.width), h = std::to_string(vp.height);
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" + h +
         "\" viewBox=\"0 0 " + w + " " + h + "\">\n<title>" + title + "</title>\n<rect width=\"" + w + "\" height=\"" + h +
         "\" fill=\"white\"/>\n";
}

std::string parameter_text(const Parameter& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + compact_string(p[i]);
  return s + ")";
}

}  // namespace

ZeroSetFigure render_zero_set(const SingularityClass& cls, const Parameter& lambda, const Viewport& vp) {
  vp.validate();
  const MultiPoly f = deformation_polynomial(cls, lambda);
  const Frame fr(vp);
  ZeroSetFigure fig;
  fig.polylines = curve(cls, lambda, vp, fr);
  fig.boundary_crossings = count_crossings(fig.polylines);

  std::string svg = svg_header(vp, cls.tag() + " " + parameter_text(lambda));
  // shade {f <= 0}: one rect per run of negative cells in each row
  svg += "<g fill=\"#3b6ea5\" fill-opacity=\"0.3\" stroke=\"none\">\n";
  const int n = vp.samples;
  const LD cw = fr.w / n, ch = fr.h / n;
  for (int r = 0; r < n; ++r) {
    const LD y = fr.y1 - (fr.y1 - fr.y0) * (r + LD(0.5)) / n;
    int run = -1;
    for (int c = 0; c <= n; ++c) {
      bool inside = false;
      if (c < n) {
        const LD pt[2] = {fr.x0 + (fr.x1 - fr.x0) * (c + LD(0.5)) / n, y};
        inside = f.eval_long_double(pt) <= 0;
      }
      if (inside && run < 0) run = c;
      if (!inside && run >= 0) {
        svg += "<rect x=\"" + num(run * cw) + "\" y=\"" + num(r * ch) + "\" width=\"" + num((c - run) * cw) +
               "\" height=\"" + num(ch) + "\"/>\n";
        run = -1;
      }
    }
  }
  svg += "</g>\n";
  if (fr.x0 <= 0 && 0 <= fr.x1) {
    const std::string x = num(fr.px(0));
    svg += "<line x1=\"" + x + "\" y1=\"0.00\" x2=\"" + x + "\" y2=\"" + num(fr.h) +
           "\" stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"4,3\"/>\n";
  }
  svg += "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" stroke-linejoin=\"round\">\n";
  for (const auto& line : fig.polylines) {
    svg += "<polyline points=\"";
    for (size_t i = 0; i < line.size(); ++i) svg += (i ? " " : "") + num(fr.px(line[i].first)) + "," + num(fr.py(line[i].second));
    svg += "\"/>\n";
  }
  svg += "</g>\n</svg>\n";
  fig.svg = std::move(svg);
  return fig;
}

Viewport fit_viewport(const SingularityClass& cls, const Parameter& lambda) {
  std::vector<PlotPoint> pts{{0, 0}};
  const UniPoly h = boundary_polynomial(cls, lambda);
  if (auto q = quadratic_form(cls, lambda)) {
    std::vector<LD> ss = real_roots(h);
    for (LD r : real_roots(q->support)) ss.push_back(r);
    for (LD r : real_roots(q->support.derivative())) ss.push_back(r);
    for (LD s : ss) {
      const LD g = std::max<LD>(0, horner(q->support, s)), lin = horner(q->lin, s);
      for (LD sg : {-1, 1}) pts.push_back(make_point(*q, s, (-lin + sg * std::sqrt(g)) / (2 * q->lead)));
    }
  } else {
    const LD qs = cls.quadratic_sign();
    for (LD r : real_roots(h)) {
      pts.push_back({0, r});
      for (LD dy : {-0.5L, 0.5L})
        if (r + dy != 0) pts.push_back({-horner(h, r + dy) / (qs * (r + dy)), r + dy});
    }
  }
  LD x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  for (const auto& [x, y] : pts) {
    x0 = std::min(x0, x), x1 = std::max(x1, x), y0 = std::min(y0, y), y1 = std::max(y1, y);
  }
  auto widen = [](LD& lo, LD& hi) {
    const LD pad = std::max<LD>(1, (hi - lo) / 8);
    lo -= pad, hi += pad;
    lo = std::max<LD>(lo, -50), hi = std::min<LD>(hi, 50);
  };
  widen(x0, x1);
  widen(y0, y1);
  Viewport vp;
  vp.x_min = snap(x0, false), vp.x_max = snap(x1, true);
  vp.y_min = snap(y0, false), vp.y_max = snap(y1, true);
  return vp;
}

namespace {

// F(v_1, ..., v_n) with every v_i replaced by a polynomial over the two axes.
MultiPoly compose(const MultiPoly& f, const std::vector<MultiPoly>& subs, const std::vector<std::string>& axes) {
  MultiPoly out(axes);
  std::vector<std::vector<MultiPoly>> pw(subs.size());
  for (size_t i = 0; i < subs.size(); ++i) pw[i].push_back(MultiPoly::constant(axes, 1));
  for (const auto& [m, c] : f.terms()) {
    MultiPoly t = MultiPoly::constant(axes, c);
    for (size_t i = 0; i < m.size(); ++i) {
      while (pw[i].size() <= m[i]) pw[i].push_back(pw[i].back() * subs[i]);
      t = t * pw[i][m[i]];
    }
    out += t;
  }
  return out;
}

std::vector<PlotSegment> march(const MultiPoly& p, const Frame& fr, int n) {
  std::vector<LD> v(static_cast<size_t>((n + 1) * (n + 1)));
  auto X = [&](int i) { return fr.x0 + (fr.x1 - fr.x0) * i / n; };
  auto Y = [&](int j) { return fr.y0 + (fr.y1 - fr.y0) * j / n; };
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) {
      const LD pt[2] = {X(i), Y(j)};
      v[static_cast<size_t>(j * (n + 1) + i)] = p.eval_long_double(pt);
    }
  auto at = [&](int i, int j) { return v[static_cast<size_t>(j * (n + 1) + i)]; };
  std::vector<PlotSegment> out;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      // corners counter-clockwise from bottom-left
      const int ci[4] = {i, i + 1, i + 1, i}, cj[4] = {j, j, j + 1, j + 1};
      std::vector<PlotPoint> hits;
      for (int e = 0; e < 4; ++e) {
        const LD a = at(ci[e], cj[e]), b = at(ci[(e + 1) % 4], cj[(e + 1) % 4]);
        if ((a < 0) == (b < 0)) continue;
        const LD t = a / (a - b);
        hits.push_back({X(ci[e]) + t * (X(ci[(e + 1) % 4]) - X(ci[e])), Y(cj[e]) + t * (Y(cj[(e + 1) % 4]) - Y(cj[e]))});
      }
      if (hits.size() >= 2) out.push_back({hits[0], hits[1]});
      if (hits.size() == 4) out.push_back({hits[2], hits[3]});
    }
  return out;
}

std::string segments_path(const std::vector<PlotSegment>& segs, const Frame& fr) {
  std::string d;
  for (const auto& [a, b] : segs) {
    if (!d.empty()) d += " ";
    d += "M" + num(fr.px(a.first)) + "," + num(fr.py(a.second)) + " L" + num(fr.px(b.first)) + "," + num(fr.py(b.second));
  }
  return d;
}

}  // namespace

SliceFigure render_parameter_slice(const SingularityClass& cls, const std::vector<std::pair<std::string, Rational>>& fixed,
                                   const std::pair<std::string, std::string>& axes, const Viewport& vp) {
  vp.validate();
  const std::vector<std::string> names = cls.param_names();
  auto index_of = [&](const std::string& n) {
    const auto it = std::find(names.begin(), names.end(), n);
    return it == names.end() ? -1 : static_cast<int>(it - names.begin());
  };
  const int ia = index_of(axes.first), ib = index_of(axes.second);
  if (ia < 0 || ib < 0 || ia == ib) throw Error(Errc::BadAxes, "axes must be two distinct parameters of " + cls.tag());
  const std::vector<std::string> ax{axes.first, axes.second};
  std::vector<MultiPoly> subs(names.size(), MultiPoly::constant(ax, 0));
  subs[static_cast<size_t>(ia)] = MultiPoly::variable(ax, axes.first);
  subs[static_cast<size_t>(ib)] = MultiPoly::variable(ax, axes.second);
  for (const auto& [n, v] : fixed) {
    const int i = index_of(n);
    if (i < 0 || i == ia || i == ib) throw Error(Errc::BadAxes, "cannot fix '" + n + "' on this slice");
    subs[static_cast<size_t>(i)] = MultiPoly::constant(ax, v);
  }

  MultiPoly sigma0, sigma1;
  if (cls.family() == Family::F4) {
    if (cls.sign() < 0) subs[0] = -subs[0], subs[3] = -subs[3];
    sigma0 = compose(f4_sigma0_eliminant(), subs, ax);
    sigma1 = compose(f4_sigma1_polynomial(), subs, ax);
  } else {
    std::vector<std::string> vx = ax;
    vx.push_back("x");
    const unsigned mu = static_cast<unsigned>(cls.mu());
    MultiPoly h = MultiPoly::term(vx, cls.h_leading_sign(), {0, 0, mu});
    for (unsigned i = 1; i <= mu; ++i)
      h += subs[i - 1].with_vars(vx) * MultiPoly::term(vx, 1, {0, 0, mu - i});
    const MultiPoly disc = resultant(h, h.derivative("x"), "x");
    const MultiPoly& at_zero = subs[mu - 1];
    sigma0 = cls.family() == Family::B ? disc : at_zero;
    sigma1 = cls.family() == Family::B ? at_zero : disc;
  }

  const Frame fr(vp);
  SliceFigure fig;
  fig.sigma0 = march(sigma0, fr, vp.samples);
  fig.sigma1 = march(sigma1, fr, vp.samples);
  std::string title = cls.tag() + " slice (" + axes.first + ", " + axes.second + ")";
  for (const auto& [n, v] : fixed) title += " " + n + "=" + compact_string(v);
  std::string svg = svg_header(vp, title);
  svg += "<g stroke=\"#bbbbbb\" stroke-width=\"0.5\">\n";
  if (fr.x0 <= 0 && 0 <= fr.x1) svg += "<line x1=\"" + num(fr.px(0)) + "\" y1=\"0.00\" x2=\"" + num(fr.px(0)) + "\" y2=\"" + num(fr.h) + "\"/>\n";
  if (fr.y0 <= 0 && 0 <= fr.y1) svg += "<line x1=\"0.00\" y1=\"" + num(fr.py(0)) + "\" x2=\"" + num(fr.w) + "\" y2=\"" + num(fr.py(0)) + "\"/>\n";
  svg += "</g>\n";
  svg += "<path class=\"sigma0\" fill=\"none\" stroke=\"#b03a2e\" stroke-width=\"1.5\" d=\"" + segments_path(fig.sigma0, fr) + "\"/>\n";
  svg += "<path class=\"sigma1\" fill=\"none\" stroke=\"#1f618d\" stroke-width=\"1.5\" stroke-dasharray=\"6,2\" d=\"" +
         segments_path(fig.sigma1, fr) + "\"/>\n";
  svg += "</svg>\n";
  fig.svg = std::move(svg);
  return fig;
}

std::string figure_file_name(const SingularityClass& cls, const Parameter& lambda) {
  // FNV-1a over the exact parameter text
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const auto& s : parameter_strings(lambda)) {
    for (unsigned char ch : s + ";") {
      hash ^= ch;
      hash *= 0x100000001b3ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return cls.tag() + "_" + buf + ".svg";
}

}  // namespace bdisc
