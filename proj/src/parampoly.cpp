#include "superbialg/parampoly.hpp"

#include <cmath>
#include <map>

namespace sbg {

namespace {

ParamMono mono_mul(const ParamMono& a, const ParamMono& b) {
  ParamMono r;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.push_back({a[i].first, a[i].second + b[j].second});
      ++i;
      ++j;
    }
  }
  return r;
}

// a / b when b divides a componentwise.
std::optional<ParamMono> mono_div(const ParamMono& a, const ParamMono& b) {
  ParamMono r;
  std::size_t i = 0;
  for (const auto& [s, e] : b) {
    while (i < a.size() && a[i].first < s) r.push_back(a[i++]);
    if (i == a.size() || a[i].first != s || a[i].second < e) return std::nullopt;
    if (a[i].second > e) r.push_back({s, a[i].second - e});
    ++i;
  }
  while (i < a.size()) r.push_back(a[i++]);
  return r;
}

} // namespace

ParamPoly ParamPoly::variable(SymId s, int exp) {
  if (SymbolTable::instance().is_odd(s)) throw std::invalid_argument("ParamPoly over odd symbol");
  ParamPoly p;
  if (exp < 0) throw std::invalid_argument("ParamPoly exponent must be >= 0");
  if (exp == 0) return ParamPoly(1);
  p.terms_.push_back({Rational(1), {{s, exp}}});
  return p;
}

Rational ParamPoly::constant_value() const {
  if (is_zero()) return Rational(0);
  if (!is_constant()) throw std::logic_error("ParamPoly not constant");
  return terms_[0].c;
}

void ParamPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return mono_less(a.m, b.m); });
  std::vector<Term> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c += t.c;
      if (out.back().c.is_zero()) out.pop_back();
    } else if (!t.c.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

bool ParamPoly::equal(const std::vector<Term>& a, const std::vector<Term>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].c != b[i].c || a[i].m != b[i].m) return false;
  return true;
}

bool ParamPoly::operator<(const ParamPoly& o) const {
  for (std::size_t i = 0; i < std::min(terms_.size(), o.terms_.size()); ++i) {
    if (terms_[i].m != o.terms_[i].m) return mono_less(terms_[i].m, o.terms_[i].m);
    if (terms_[i].c != o.terms_[i].c) return terms_[i].c < o.terms_[i].c;
  }
  return terms_.size() < o.terms_.size();
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  ParamPoly r;
  r.terms_ = terms_;
  r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
  r.normalize();
  return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  ParamPoly r;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) r.terms_.push_back({a.c * b.c, mono_mul(a.m, b.m)});
  r.normalize();
  return r;
}

ParamPoly ParamPoly::operator*(const Rational& c) const {
  ParamPoly r = *this;
  if (c.is_zero()) return ParamPoly();
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

ParamPoly ParamPoly::substitute(SymId s, const Rational& v) const {
  ParamPoly r;
  for (const auto& t : terms_) {
    Rational c = t.c;
    ParamMono m;
    for (const auto& [id, e] : t.m) {
      if (id == s)
        c *= v.pow(e);
      else
        m.push_back({id, e});
    }
    r.terms_.push_back({c, std::move(m)});
  }
  r.normalize();
  return r;
}

std::vector<SymId> ParamPoly::variables() const {
  std::vector<SymId> v;
  for (const auto& t : terms_)
    for (const auto& [id, e] : t.m)
      if (std::find(v.begin(), v.end(), id) == v.end()) v.push_back(id);
  std::sort(v.begin(), v.end());
  return v;
}

int ParamPoly::degree_in(SymId s) const {
  int d = 0;
  for (const auto& t : terms_)
    for (const auto& [id, e] : t.m)
      if (id == s) d = std::max(d, e);
  return d;
}

double ParamPoly::eval(const std::vector<std::pair<SymId, double>>& point) const {
  double acc = 0;
  for (const auto& t : terms_) {
    double v = t.c.to_double();
    for (const auto& [id, e] : t.m) {
      double x = 0;
      bool found = false;
      for (const auto& [sid, val] : point)
        if (sid == id) {
          x = val;
          found = true;
          break;
        }
      if (!found) throw std::invalid_argument("eval: no value for symbol " + SymbolTable::instance().name(id));
      v *= std::pow(x, e);
    }
    acc += v;
  }
  return acc;
}

std::string ParamPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.c;
    if (!first) {
      out += c.negative() ? " - " : " + ";
      if (c.negative()) c = -c;
    } else if (c.negative()) {
      out += "-";
      c = -c;
    }
    first = false;
    bool wrote = false;
    if (!c.is_one() || t.m.empty()) {
      out += c.str();
      wrote = true;
    }
    for (const auto& [id, e] : t.m) {
      if (wrote) out += "*";
      out += SymbolTable::instance().name(id);
      if (e != 1) out += "^" + std::to_string(e);
      wrote = true;
    }
  }
  return out;
}

Rational ParamPoly::content() const {
  if (is_zero()) return Rational(0);
  // gcd of numerators over lcm of denominators, sign of the leading term.
  std::int64_t num_gcd = 0;
  std::int64_t den_lcm = 1;
  for (const auto& t : terms_) {
    num_gcd = std::gcd(num_gcd, std::abs(t.c.num()));
    den_lcm = detail::checked_mul(den_lcm / std::gcd(den_lcm, t.c.den()), t.c.den());
  }
  Rational c(num_gcd, den_lcm);
  if (terms_.back().c.negative()) c = -c;
  return c;
}

ParamPoly ParamPoly::primitive_part() const {
  if (is_zero()) return *this;
  Rational c = content();
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.c /= c;
  return r;
}

std::optional<ParamPoly> ParamPoly::divided_by(const ParamPoly& o) const {
  if (o.is_zero()) return std::nullopt;
  if (o.is_constant()) return *this * (Rational(1) / o.constant_value());
  ParamPoly rem = *this;
  ParamPoly quo;
  const Term& lead = o.terms_.back();
  int guard = 0;
  while (!rem.is_zero()) {
    if (++guard > 10000) return std::nullopt;
    const Term& rl = rem.terms_.back();
    auto m = mono_div(rl.m, lead.m);
    if (!m) return std::nullopt;
    ParamPoly piece;
    piece.terms_.push_back({rl.c / lead.c, *m});
    quo = quo + piece;
    rem = rem - piece * o;
  }
  return quo;
}

std::optional<ParamPoly> ParamPoly::sqrt() const {
  if (is_zero()) return ParamPoly();
  if (is_constant()) {
    Rational c = constant_value();
    if (c.negative()) return std::nullopt;
    auto isqrt = [](std::int64_t v) -> std::optional<std::int64_t> {
      std::int64_t r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
      for (std::int64_t d = -1; d <= 1; ++d)
        if ((r + d) >= 0 && (r + d) * (r + d) == v) return r + d;
      return std::nullopt;
    };
    auto n = isqrt(c.num());
    auto d = isqrt(c.den());
    if (!n || !d) return std::nullopt;
    return ParamPoly(Rational(*n, *d));
  }
  // Non-constant: try leading-term square root then verify.
  const Term& lead = terms_.back();
  ParamMono half;
  for (const auto& [id, e] : lead.m) {
    if (e % 2) return std::nullopt;
    half.push_back({id, e / 2});
  }
  ParamPoly lc(lead.c);
  auto lr = lc.sqrt();
  if (!lr) return std::nullopt;
  // Candidate by long division: s = lead_sqrt + rest, solve (s)^2 = this.
  ParamPoly s;
  s.terms_.push_back({lr->constant_value(), half});
  ParamPoly rem = *this - s * s;
  int guard = 0;
  while (!rem.is_zero()) {
    if (++guard > 64) return std::nullopt;
    // next term t satisfies 2*s_lead*t = rem_lead
    const Term& rl = rem.terms_.back();
    auto m = mono_div(rl.m, half);
    if (!m) return std::nullopt;
    ParamPoly t;
    t.terms_.push_back({rl.c / (lr->constant_value() * Rational(2)), *m});
    s = s + t;
    rem = *this - s * s;
  }
  return s;
}

ParamPoly ParamPoly::gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  if (a.is_constant() || b.is_constant()) return ParamPoly(1);

  // Recurse on the highest variable present; univariate primitive euclidean.
  auto va = a.variables();
  auto vb = b.variables();
  SymId x = std::max(va.back(), vb.back());

  auto coeffs_in = [&](const ParamPoly& p) {
    std::map<int, ParamPoly> by_deg;
    for (const auto& t : p.terms_) {
      int d = 0;
      ParamMono rest;
      for (const auto& [id, e] : t.m) {
        if (id == x)
          d = e;
        else
          rest.push_back({id, e});
      }
      ParamPoly piece;
      piece.terms_.push_back({t.c, rest});
      by_deg[d] = by_deg[d] + piece;
    }
    return by_deg;
  };

  auto poly_content_in = [&](const ParamPoly& p) {
    ParamPoly g;
    for (auto& [d, c] : coeffs_in(p)) g = gcd(g, c);
    return g;
  };

  auto from_coeffs = [&](const std::map<int, ParamPoly>& cs) {
    ParamPoly r;
    for (const auto& [d, c] : cs)
      r = r + c * ParamPoly::variable(x, d) * ParamPoly(1);
    return r;
  };
  (void)from_coeffs;

  ParamPoly ca = poly_content_in(a);
  ParamPoly cb = poly_content_in(b);
  ParamPoly cg = gcd(ca, cb);

  auto divide_out = [&](const ParamPoly& p, const ParamPoly& c) {
    auto q = p.divided_by(c);
    return q ? *q : p;
  };
  ParamPoly pa = divide_out(a, ca);
  ParamPoly pb = divide_out(b, cb);

  // Pseudo-remainder loop in x.
  auto deg = [&](const ParamPoly& p) { return p.degree_in(x); };
  ParamPoly u = pa, v = pb;
  if (deg(u) < deg(v)) std::swap(u, v);
  int guard = 0;
  while (!v.is_zero() && deg(v) > 0) {
    if (++guard > 200) return ParamPoly(1);
    auto ucs = coeffs_in(u);
    auto vcs = coeffs_in(v);
    int du = deg(u), dv = deg(v);
    ParamPoly vl = vcs[dv];
    // pseudo-divide: rem = vl^(du-dv+1) * u mod v
    ParamPoly rem = u;
    for (int d = du; d >= dv && !rem.is_zero(); d = deg(rem)) {
      auto rcs = coeffs_in(rem);
      ParamPoly rl = rcs[d];
      if (d < dv) break;
      rem = rem * vl - v * rl * ParamPoly::variable(x, d - dv);
      if (deg(rem) == d && !rem.is_zero()) break; // no progress; bail out
    }
    u = v;
    v = rem.is_zero() ? rem : divide_out(rem, poly_content_in(rem));
  }
  ParamPoly result = v.is_zero() ? u : ParamPoly(1);
  result = divide_out(result, poly_content_in(result));
  result = cg * result;
  return result.primitive_part();
}

} // namespace sbg
