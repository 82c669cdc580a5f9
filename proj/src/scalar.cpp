#include "superbialg/scalar.hpp"

#include <algorithm>
#include <cmath>

namespace sbg {

namespace {

const SymbolTable& tab() { return SymbolTable::instance(); }

bool term_factors_less(const Term& a, const Term& b) {
  if (a.grass != b.grass) return a.grass < b.grass;
  if (a.mono != b.mono) return a.mono < b.mono;
  if (a.exps != b.exps) return std::lexicographical_compare(a.exps.begin(), a.exps.end(), b.exps.begin(), b.exps.end());
  if (a.trig != b.trig) return std::lexicographical_compare(a.trig.begin(), a.trig.end(), b.trig.begin(), b.trig.end());
  return false;
}

bool term_factors_equal(const Term& a, const Term& b) {
  return a.grass == b.grass && a.mono == b.mono && a.exps == b.exps && a.trig == b.trig;
}

// Sorts a Grassmann word, tracking the transposition sign. Returns false when
// a symbol repeats (the term vanishes).
bool sort_grass(std::vector<SymId>& g, Rational& coeff) {
  for (std::size_t i = 1; i < g.size(); ++i)
    for (std::size_t j = i; j > 0 && tab().grass_before(g[j], g[j - 1]); --j) {
      std::swap(g[j], g[j - 1]);
      coeff = -coeff;
    }
  for (std::size_t i = 1; i < g.size(); ++i)
    if (g[i] == g[i - 1]) return false;
  return true;
}

void sort_mono(std::vector<std::pair<SymId, int>>& m) {
  std::sort(m.begin(), m.end(), [](auto& a, auto& b) { return a.first < b.first; });
  std::vector<std::pair<SymId, int>> out;
  for (auto& [s, e] : m) {
    if (!out.empty() && out.back().first == s)
      out.back().second += e;
    else
      out.push_back({s, e});
  }
  m.clear();
  for (auto& [s, e] : out)
    if (e != 0) m.push_back({s, e});
}

// Fully canonicalizes one raw term; sin^2 elimination can split it into
// several terms, all appended to `out`.
void canonicalize_term(Term t, std::vector<Term>& out) {
  if (t.coeff.is_zero()) return;
  sort_mono(t.mono);
  for (auto& [s, e] : t.mono)
    if (e < 0) throw DivisionError("negative power of symbol '" + tab().name(s) + "' in term");

  if (!sort_grass(t.grass, t.coeff)) return;

  // exp factors: merge per coordinate.
  std::sort(t.exps.begin(), t.exps.end(), [](auto& a, auto& b) { return a.coord < b.coord; });
  {
    std::vector<ExpFactor> merged;
    for (auto& f : t.exps) {
      if (!merged.empty() && merged.back().coord == f.coord)
        merged.back().lambda = merged.back().lambda + f.lambda;
      else
        merged.push_back(std::move(f));
    }
    t.exps.clear();
    for (auto& f : merged)
      if (!f.lambda.is_zero()) t.exps.push_back(std::move(f));
  }

  // trig factors: canonical frequency sign, merge, zero-frequency removal.
  {
    std::vector<TrigFactor> fixed;
    for (auto& f : t.trig) {
      if (f.cospow == 0 && f.sinpow == 0) continue;
      if (f.freq.is_zero()) {
        if (f.sinpow > 0) return; // sin(0) = 0
        continue;                 // cos(0) = 1
      }
      if (f.freq.content().negative()) {
        f.freq = -f.freq;
        if (f.sinpow % 2) t.coeff = -t.coeff;
      }
      fixed.push_back(std::move(f));
    }
    std::sort(fixed.begin(), fixed.end(), [](auto& a, auto& b) {
      if (a.coord != b.coord) return a.coord < b.coord;
      return a.freq < b.freq;
    });
    std::vector<TrigFactor> merged;
    for (auto& f : fixed) {
      if (!merged.empty() && merged.back().coord == f.coord && merged.back().freq == f.freq) {
        merged.back().cospow += f.cospow;
        merged.back().sinpow += f.sinpow;
      } else {
        merged.push_back(std::move(f));
      }
    }
    t.trig = std::move(merged);
  }

  // sin^2 -> 1 - cos^2 (split and recurse).
  for (std::size_t i = 0; i < t.trig.size(); ++i) {
    if (t.trig[i].sinpow >= 2) {
      Term a = t, b = t;
      a.trig[i].sinpow -= 2;
      b.trig[i].sinpow -= 2;
      b.trig[i].cospow += 2;
      b.coeff = -b.coeff;
      canonicalize_term(std::move(a), out);
      canonicalize_term(std::move(b), out);
      return;
    }
  }
  out.push_back(std::move(t));
}

} // namespace

Scalar::Scalar(Rational c) : den_(Rational(1)) {
  if (!c.is_zero()) num_.push_back(Term{c, {}, {}, {}, {}});
}

Scalar Scalar::symbol(SymId s, int exp) {
  Scalar r;
  r.den_ = ParamPoly(1);
  if (exp == 0) return Scalar(Rational(1));
  if (tab().is_odd(s)) {
    if (exp < 0) throw DivisionError("negative power of odd symbol '" + tab().name(s) + "'");
    if (exp > 1) return Scalar(); // odd symbols square to zero
    r.num_.push_back(Term{Rational(1), {}, {}, {}, {s}});
    return r;
  }
  if (exp < 0) {
    if (tab().is_coordinate(s)) throw DivisionError("negative power of coordinate '" + tab().name(s) + "'");
    r.num_.push_back(Term{Rational(1), {}, {}, {}, {}});
    r.den_ = ParamPoly::variable(s, -exp);
    return r;
  }
  r.num_.push_back(Term{Rational(1), {{s, exp}}, {}, {}, {}});
  return r;
}

Scalar Scalar::symbol(const std::string& name, int exp) { return symbol(sym(name), exp); }

Scalar Scalar::exp_factor(ParamPoly lambda, SymId coord) {
  if (tab().is_odd(coord) || !tab().is_coordinate(coord))
    throw std::invalid_argument("exp argument must be an even coordinate");
  Scalar r;
  std::vector<ExpFactor> e;
  e.push_back({coord, std::move(lambda)});
  r.num_.push_back(Term{Rational(1), {}, std::move(e), {}, {}});
  r.normalize();
  return r;
}

Scalar Scalar::cos_factor(ParamPoly freq, SymId coord) {
  if (tab().is_odd(coord) || !tab().is_coordinate(coord))
    throw std::invalid_argument("cos argument must be an even coordinate");
  Scalar r;
  std::vector<TrigFactor> f;
  f.push_back({coord, std::move(freq), 1, 0});
  r.num_.push_back(Term{Rational(1), {}, {}, std::move(f), {}});
  r.normalize();
  return r;
}

Scalar Scalar::sin_factor(ParamPoly freq, SymId coord) {
  if (tab().is_odd(coord) || !tab().is_coordinate(coord))
    throw std::invalid_argument("sin argument must be an even coordinate");
  Scalar r;
  std::vector<TrigFactor> f;
  f.push_back({coord, std::move(freq), 0, 1});
  r.num_.push_back(Term{Rational(1), {}, {}, std::move(f), {}});
  r.normalize();
  return r;
}

Scalar Scalar::from_parampoly(const ParamPoly& p) {
  Scalar r;
  for (const auto& t : p.terms()) {
    std::vector<std::pair<SymId, int>> mono(t.m.begin(), t.m.end());
    r.num_.push_back(Term{t.c, std::move(mono), {}, {}, {}});
  }
  r.normalize();
  return r;
}

Scalar make_scalar(std::vector<Term> terms, ParamPoly den) {
  Scalar r;
  r.num_ = std::move(terms);
  r.den_ = std::move(den);
  if (r.den_.is_zero()) throw DivisionError("zero denominator");
  r.normalize();
  return r;
}

bool Scalar::is_one() const {
  return num_.size() == 1 && den_.is_one() && num_[0].coeff.is_one() && num_[0].mono.empty() &&
         num_[0].exps.empty() && num_[0].trig.empty() && num_[0].grass.empty();
}

std::optional<Parity> Scalar::parity() const {
  if (num_.empty()) return std::nullopt;
  Parity p = num_[0].parity();
  for (const auto& t : num_)
    if (t.parity() != p) return std::nullopt;
  return p;
}

Parity Scalar::parity_or_throw(const char* context) const {
  if (is_zero()) return Parity::even;
  auto p = parity();
  if (!p) throw ParityError(std::string("non-homogeneous parity in ") + context);
  return *p;
}

void Scalar::normalize() {
  std::vector<Term> out;
  for (auto& t : num_) canonicalize_term(std::move(t), out);
  std::sort(out.begin(), out.end(), term_factors_less);
  num_.clear();
  for (auto& t : out) {
    if (!num_.empty() && term_factors_equal(num_.back(), t)) {
      num_.back().coeff += t.coeff;
      if (num_.back().coeff.is_zero()) num_.pop_back();
    } else if (!t.coeff.is_zero()) {
      num_.push_back(std::move(t));
    }
  }
  reduce_fraction();
}

void Scalar::reduce_fraction() {
  if (num_.empty()) {
    den_ = ParamPoly(1);
    return;
  }
  // Pull the denominator's rational content into the coefficients.
  Rational c = den_.content();
  if (!c.is_one()) {
    den_ = den_.primitive_part();
    for (auto& t : num_) t.coeff /= c;
  }
  if (den_.is_one()) return;

  // Group terms by their non-parameter factor signature and extract each
  // group's parameter polynomial; gcd against the denominator.
  struct Group {
    Term key; // coefficient/parameter part stripped
    ParamPoly poly;
  };
  std::vector<Group> groups;
  auto split = [](const Term& t) {
    Term key = t;
    key.coeff = Rational(1);
    ParamMono pm;
    std::vector<std::pair<SymId, int>> rest;
    for (auto& [s, e] : key.mono) {
      if (!tab().is_coordinate(s))
        pm.push_back({s, e});
      else
        rest.push_back({s, e});
    }
    key.mono = std::move(rest);
    return std::pair<Term, ParamMono>(std::move(key), std::move(pm));
  };
  for (const auto& t : num_) {
    auto [key, pm] = split(t);
    ParamPolyBuilder b;
    b.add(t.coeff, pm);
    ParamPoly piece = b.take();
    bool found = false;
    for (auto& g : groups)
      if (term_factors_equal(g.key, key)) {
        g.poly = g.poly + piece;
        found = true;
        break;
      }
    if (!found) groups.push_back({std::move(key), piece});
  }
  ParamPoly g = den_;
  for (const auto& gr : groups) {
    if (g.is_constant()) break;
    g = ParamPoly::gcd(g, gr.poly);
  }
  if (!g.is_constant()) {
    auto dq = den_.divided_by(g);
    if (!dq) throw std::logic_error("fraction reduction: gcd does not divide the denominator");
    std::vector<std::optional<ParamPoly>> quotients;
    for (auto& gr : groups) {
      quotients.push_back(gr.poly.divided_by(g));
      if (!quotients.back()) throw std::logic_error("fraction reduction: gcd does not divide a numerator");
    }
    den_ = *dq;
    std::vector<Term> rebuilt;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      auto& gr = groups[gi];
      auto& q = quotients[gi];
      for (const auto& pt : q->terms()) {
        Term t = gr.key;
        t.coeff = pt.c;
        for (const auto& [s, e] : pt.m) t.mono.push_back({s, e});
        sort_mono(t.mono);
        rebuilt.push_back(std::move(t));
      }
    }
    std::sort(rebuilt.begin(), rebuilt.end(), term_factors_less);
    num_ = std::move(rebuilt);
    Rational c2 = den_.content();
    if (!c2.is_one()) {
      den_ = den_.primitive_part();
      for (auto& t : num_) t.coeff /= c2;
    }
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& t : r.num_) t.coeff = -t.coeff;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r;
  if (den_ == o.den_) {
    r.num_ = num_;
    r.num_.insert(r.num_.end(), o.num_.begin(), o.num_.end());
    r.den_ = den_;
    r.normalize();
    return r;
  }
  ParamPoly g = ParamPoly::gcd(den_, o.den_);
  ParamPoly la = *o.den_.divided_by(g);
  ParamPoly lb = *den_.divided_by(g);
  Scalar sa = Scalar::from_parampoly(la);
  Scalar sb = Scalar::from_parampoly(lb);
  for (const auto& t : num_)
    for (const auto& f : sa.num_) {
      auto prods = mul_terms(t, f);
      r.num_.insert(r.num_.end(), prods.begin(), prods.end());
    }
  for (const auto& t : o.num_)
    for (const auto& f : sb.num_) {
      auto prods = mul_terms(t, f);
      r.num_.insert(r.num_.end(), prods.begin(), prods.end());
    }
  r.den_ = den_ * la;
  r.normalize();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

std::vector<Term> Scalar::mul_terms(const Term& a, const Term& b) {
  Term t;
  t.coeff = a.coeff * b.coeff;
  t.mono = a.mono;
  t.mono.insert(t.mono.end(), b.mono.begin(), b.mono.end());
  t.exps = a.exps;
  t.exps.insert(t.exps.end(), b.exps.begin(), b.exps.end());
  t.trig = a.trig;
  t.trig.insert(t.trig.end(), b.trig.begin(), b.trig.end());
  t.grass = a.grass;
  t.grass.insert(t.grass.end(), b.grass.begin(), b.grass.end());
  std::vector<Term> out;
  canonicalize_term(std::move(t), out);
  return out;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  for (const auto& a : num_)
    for (const auto& b : o.num_) {
      auto prods = mul_terms(a, b);
      r.num_.insert(r.num_.end(), prods.begin(), prods.end());
    }
  r.den_ = den_ * o.den_;
  r.normalize();
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(den_ == o.den_) || num_.size() != o.num_.size()) return false;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i].coeff != o.num_[i].coeff || !term_factors_equal(num_[i], o.num_[i])) return false;
  }
  return true;
}

bool Scalar::operator<(const Scalar& o) const { return str() < o.str(); }

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r(Rational(1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Scalar Scalar::body() const {
  Scalar r;
  r.den_ = den_;
  for (const auto& t : num_)
    if (t.grass.empty()) r.num_.push_back(t);
  r.normalize();
  return r;
}

bool Scalar::has_odd() const {
  for (const auto& t : num_)
    if (!t.grass.empty()) return true;
  return false;
}

bool Scalar::is_param_rational() const {
  for (const auto& t : num_) {
    if (!t.grass.empty() || !t.exps.empty() || !t.trig.empty()) return false;
    for (auto& [s, e] : t.mono)
      if (tab().is_coordinate(s)) return false;
  }
  return true;
}

bool Scalar::depends_on(SymId s) const {
  for (const auto& t : num_) {
    for (auto& [m, e] : t.mono)
      if (m == s) return true;
    for (auto& f : t.exps)
      if (f.coord == s || f.lambda.degree_in(s) > 0) return true;
    for (auto& f : t.trig)
      if (f.coord == s || f.freq.degree_in(s) > 0) return true;
    for (auto& g : t.grass)
      if (g == s) return true;
  }
  return den_.degree_in(s) > 0;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionError("division by zero");
  Scalar b = body();
  if (b.is_zero()) throw DivisionError("division by nilpotent scalar");

  Scalar binv;
  if (b.is_param_rational()) {
    // flip the fraction: collect the numerator as a parameter polynomial
    ParamPolyBuilder pb;
    for (const auto& t : b.num_) {
      ParamMono m;
      for (auto& [s, e] : t.mono) m.push_back({s, e});
      pb.add(t.coeff, m);
    }
    ParamPoly p = pb.take();
    Scalar flipped = Scalar::from_parampoly(b.den_);
    binv = make_scalar(flipped.num_, p);
  } else if (b.num_.size() == 1) {
    const Term& t = b.num_[0];
    if (!t.trig.empty()) throw DivisionError("division by trigonometric factor is unsupported");
    for (auto& [s, e] : t.mono)
      if (tab().is_coordinate(s)) throw DivisionError("division by coordinate polynomial is unsupported");
    Term it;
    it.coeff = Rational(1) / t.coeff;
    for (const auto& f : t.exps) it.exps.push_back({f.coord, -f.lambda});
    ParamMono m;
    for (auto& [s, e] : t.mono) m.push_back({s, e});
    std::vector<Term> terms;
    for (const auto& dt : den_.terms()) {
      Term nt = it;
      nt.coeff *= dt.c;
      for (auto& [s, e] : dt.m) nt.mono.push_back({s, e});
      terms.push_back(std::move(nt));
    }
    ParamPolyBuilder pb;
    pb.add(Rational(1), m);
    binv = make_scalar(std::move(terms), pb.take());
  } else {
    throw DivisionError("scalar is not invertible in the supported subring");
  }

  // Full inverse via the nilpotent part: 1/(b(1+n)) = (sum (-n)^k) / b.
  Scalar n = (*this - b) * binv;
  Scalar series(Rational(1));
  Scalar power(Rational(1));
  for (int k = 0; k < 64; ++k) {
    power = power * (-n);
    if (power.is_zero()) break;
    series = series + power;
    if (k == 63) throw DivisionError("non-terminating inverse series");
  }
  return series * binv;
}

Scalar Scalar::derive(SymId u, bool left) const {
  if (!tab().is_coordinate(u)) throw std::invalid_argument("derive: '" + tab().name(u) + "' is a parameter");
  Scalar r;
  r.den_ = den_;
  const bool odd = tab().is_odd(u);
  for (const auto& t : num_) {
    if (odd) {
      auto it = std::find(t.grass.begin(), t.grass.end(), u);
      if (it == t.grass.end()) continue;
      std::size_t idx = static_cast<std::size_t>(it - t.grass.begin());
      std::size_t passed = left ? idx : t.grass.size() - 1 - idx;
      Term d = t;
      d.grass.erase(d.grass.begin() + static_cast<std::ptrdiff_t>(idx));
      if (passed % 2) d.coeff = -d.coeff;
      r.num_.push_back(std::move(d));
      continue;
    }
    // polynomial part
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i].first != u) continue;
      Term d = t;
      d.coeff *= Rational(t.mono[i].second);
      if (--d.mono[i].second == 0) d.mono.erase(d.mono.begin() + static_cast<std::ptrdiff_t>(i));
      r.num_.push_back(std::move(d));
    }
    // exponential part
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i].coord != u) continue;
      for (const auto& lt : t.exps[i].lambda.terms()) {
        Term d = t;
        d.coeff *= lt.c;
        for (auto& [s, e] : lt.m) d.mono.push_back({s, e});
        r.num_.push_back(std::move(d));
      }
    }
    // trigonometric part
    for (std::size_t i = 0; i < t.trig.size(); ++i) {
      if (t.trig[i].coord != u) continue;
      const TrigFactor& f = t.trig[i];
      auto with_freq_coeff = [&](Term d) {
        std::vector<Term> parts;
        for (const auto& ft : f.freq.terms()) {
          Term p = d;
          p.coeff *= ft.c;
          for (auto& [s, e] : ft.m) p.mono.push_back({s, e});
          parts.push_back(std::move(p));
        }
        return parts;
      };
      if (f.cospow > 0) { // d cos^c = -c mu cos^(c-1) sin
        Term d = t;
        d.coeff *= Rational(-f.cospow);
        d.trig[i].cospow -= 1;
        d.trig[i].sinpow += 1;
        auto parts = with_freq_coeff(std::move(d));
        r.num_.insert(r.num_.end(), parts.begin(), parts.end());
      }
      if (f.sinpow > 0) { // d sin^s = s mu cos sin^(s-1)
        Term d = t;
        d.coeff *= Rational(f.sinpow);
        d.trig[i].sinpow -= 1;
        d.trig[i].cospow += 1;
        auto parts = with_freq_coeff(std::move(d));
        r.num_.insert(r.num_.end(), parts.begin(), parts.end());
      }
    }
  }
  r.normalize();
  return r;
}

Scalar Scalar::substitute_param(SymId p, const Rational& v) const {
  ParamPoly d = den_.substitute(p, v);
  if (d.is_zero()) throw DivisionError("substitution " + tab().name(p) + "=" + v.str() + " vanishes a denominator");
  Scalar r;
  r.den_ = d;
  for (const auto& t : num_) {
    Term n = t;
    n.mono.clear();
    for (auto& [s, e] : t.mono) {
      if (s == p)
        n.coeff *= v.pow(e);
      else
        n.mono.push_back({s, e});
    }
    for (auto& f : n.exps) f.lambda = f.lambda.substitute(p, v);
    for (auto& f : n.trig) f.freq = f.freq.substitute(p, v);
    r.num_.push_back(std::move(n));
  }
  r.normalize();
  return r;
}

Scalar Scalar::substitute_coord_zero(SymId u) const {
  Scalar r;
  r.den_ = den_;
  for (const auto& t : num_) {
    bool dead = false;
    Term n = t;
    n.mono.clear();
    n.exps.clear();
    n.trig.clear();
    for (auto& [s, e] : t.mono) {
      if (s == u)
        dead = true;
      else
        n.mono.push_back({s, e});
    }
    for (auto& f : t.exps)
      if (f.coord != u) n.exps.push_back(f);
    for (auto& f : t.trig) {
      if (f.coord != u)
        n.trig.push_back(f);
      else if (f.sinpow > 0)
        dead = true; // sin(0) = 0, cos(0) = 1
    }
    if (std::find(t.grass.begin(), t.grass.end(), u) != t.grass.end()) dead = true;
    if (!dead) r.num_.push_back(std::move(n));
  }
  r.normalize();
  return r;
}

Scalar Scalar::substitute_coord_scaled(SymId u, const Rational& c, SymId v) const {
  if (tab().is_odd(u)) throw std::invalid_argument("substitute_coord_scaled: use substitute_odd for odd symbols");
  if (c.is_zero()) return substitute_coord_zero(u);
  Scalar r;
  r.den_ = den_;
  for (const auto& t : num_) {
    Term n = t;
    n.mono.clear();
    for (auto& [s, e] : t.mono) {
      if (s == u) {
        n.coeff *= c.pow(e);
        n.mono.push_back({v, e});
      } else {
        n.mono.push_back({s, e});
      }
    }
    for (auto& f : n.exps)
      if (f.coord == u) {
        f.coord = v;
        f.lambda = f.lambda * c;
      }
    for (auto& f : n.trig)
      if (f.coord == u) {
        f.coord = v;
        f.freq = f.freq * c;
      }
    r.num_.push_back(std::move(n));
  }
  r.normalize();
  return r;
}

Scalar Scalar::substitute_coord_sum(SymId u, SymId u1, SymId u2) const {
  if (tab().is_odd(u)) throw std::invalid_argument("substitute_coord_sum: even coordinates only");
  Scalar acc;
  for (const auto& t : num_) {
    Term base = t;
    base.mono.clear();
    base.exps.clear();
    base.trig.clear();
    Scalar factor(Rational(1));
    for (auto& [s, e] : t.mono) {
      if (s != u) {
        base.mono.push_back({s, e});
        continue;
      }
      Scalar sum = Scalar::symbol(u1) + Scalar::symbol(u2);
      factor = factor * sum.pow(e);
    }
    for (auto& f : t.exps) {
      if (f.coord != u) {
        base.exps.push_back(f);
        continue;
      }
      factor = factor * exp_factor(f.lambda, u1) * exp_factor(f.lambda, u2);
    }
    for (auto& f : t.trig) {
      if (f.coord != u) {
        base.trig.push_back(f);
        continue;
      }
      Scalar c1 = cos_factor(f.freq, u1), c2 = cos_factor(f.freq, u2);
      Scalar s1 = sin_factor(f.freq, u1), s2 = sin_factor(f.freq, u2);
      Scalar cs = c1 * c2 - s1 * s2;
      Scalar sn = s1 * c2 + c1 * s2;
      factor = factor * cs.pow(f.cospow) * sn.pow(f.sinpow);
    }
    Scalar piece = make_scalar({base}, ParamPoly(1)) * factor;
    acc = acc + piece;
  }
  return make_scalar(acc.num_, acc.den_ * den_);
}

Scalar Scalar::substitute_odd(SymId z, const Rational& c, SymId w) const {
  Scalar r;
  r.den_ = den_;
  for (const auto& t : num_) {
    Term n = t;
    bool replaced = false;
    for (auto& g : n.grass)
      if (g == z) {
        g = w;
        replaced = true;
      }
    if (replaced) {
      if (c.is_zero()) continue;
      n.coeff *= c;
    }
    r.num_.push_back(std::move(n));
  }
  r.normalize();
  return r;
}

GrassValue Scalar::eval(const std::vector<std::pair<SymId, double>>& point,
                        const std::vector<std::pair<SymId, int>>& odd_bits) const {
  GrassValue out;
  double dden = den_.eval(point);
  if (dden == 0.0) throw DivisionError("denominator vanishes at evaluation point");
  auto coord_val = [&](SymId s) {
    for (const auto& [id, v] : point)
      if (id == s) return v;
    throw std::invalid_argument("eval: no value for symbol " + tab().name(s));
  };
  for (const auto& t : num_) {
    double v = t.coeff.to_double();
    for (auto& [s, e] : t.mono) v *= std::pow(coord_val(s), e);
    for (auto& f : t.exps) v *= std::exp(f.lambda.eval(point) * coord_val(f.coord));
    for (auto& f : t.trig) {
      double arg = f.freq.eval(point) * coord_val(f.coord);
      v *= std::pow(std::cos(arg), f.cospow) * std::pow(std::sin(arg), f.sinpow);
    }
    std::uint32_t mask = 0;
    for (auto g : t.grass) {
      int bit = -1;
      for (const auto& [id, b] : odd_bits)
        if (id == g) bit = b;
      if (bit < 0) throw std::invalid_argument("eval: no generator bit for odd symbol " + tab().name(g));
      mask |= (1u << bit);
    }
    out[mask] += v / dden;
  }
  return out;
}

} // namespace sbg
