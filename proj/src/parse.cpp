/*
 * parse.cpp
 * ---------
 * Canonical printing and parsing of scalar expressions. The printed form is
 * itself a valid input, and parse_scalar(s.str()) == s.
 */
#include <cctype>
#include <sstream>

#include "superbialg/scalar.hpp"

namespace sbg {

namespace {

// Wraps a parameter polynomial for use inside exp/cos/sin arguments.
std::string poly_arg(const ParamPoly& p, const std::string& coord) {
  if (p.is_one()) return coord;
  if (p.is_constant() && p.constant_value() == Rational(-1)) return "-" + coord;
  if (p.terms().size() == 1) return p.str() + "*" + coord;
  return "(" + p.str() + ")*" + coord;
}

void print_term(std::ostream& os, const Term& t, bool first) {
  Rational c = t.coeff;
  if (first) {
    if (c.negative()) {
      os << "-";
      c = -c;
    }
  } else {
    os << (c.negative() ? " - " : " + ");
    if (c.negative()) c = -c;
  }
  const auto& tab = SymbolTable::instance();
  std::vector<std::string> factors;
  for (auto& [s, e] : t.mono) {
    std::string f = tab.name(s);
    if (e != 1) f += "^" + std::to_string(e);
    factors.push_back(f);
  }
  for (auto& f : t.exps) factors.push_back("exp(" + poly_arg(f.lambda, tab.name(f.coord)) + ")");
  for (auto& f : t.trig) {
    std::string arg = poly_arg(f.freq, tab.name(f.coord));
    if (f.cospow > 0) {
      std::string s = "cos(" + arg + ")";
      if (f.cospow != 1) s += "^" + std::to_string(f.cospow);
      factors.push_back(s);
    }
    if (f.sinpow > 0) {
      std::string s = "sin(" + arg + ")";
      if (f.sinpow != 1) s += "^" + std::to_string(f.sinpow);
      factors.push_back(s);
    }
  }
  for (auto g : t.grass) factors.push_back(tab.name(g));

  bool wrote = false;
  if (!c.is_one() || factors.empty()) {
    os << c.str();
    wrote = true;
  }
  for (auto& f : factors) {
    if (wrote) os << "*";
    os << f;
    wrote = true;
  }
}

class Parser {
public:
  explicit Parser(const std::string& text) : s_(text) {}

  Scalar parse() {
    Scalar r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + msg);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Scalar expr() {
    Scalar acc = term();
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Scalar term() {
    Scalar acc = factor();
    for (;;) {
      if (eat('*'))
        acc = acc * factor();
      else if (eat('/'))
        acc = acc / factor();
      else
        return acc;
    }
  }

  Scalar factor() {
    if (eat('-')) return -factor();
    Scalar base = primary();
    if (eat('^')) {
      bool neg = eat('-');
      std::string digits = read_digits();
      if (digits.empty()) fail("expected integer exponent");
      int e = std::stoi(digits);
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  std::string read_digits() {
    skip_ws();
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
    return d;
  }

  Scalar primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string n = read_digits();
      if (peek() == '/') {
        // Allow the rational literal form n/d only when followed by a digit;
        // otherwise leave '/' to the term parser.
        std::size_t save = pos_;
        ++pos_;
        std::string d = read_digits();
        if (!d.empty()) return Scalar(Rational(std::stoll(n), std::stoll(d)));
        pos_ = save;
      }
      return Scalar(Rational(std::stoll(n)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name = read_name();
      if (name == "exp" || name == "cos" || name == "sin") {
        if (!eat('(')) fail("expected '(' after " + name);
        Scalar arg = expr();
        if (!eat(')')) fail("expected ')'");
        auto [freq, coord] = linear_coordinate_form(arg, name);
        if (name == "exp") return Scalar::exp_factor(freq, coord);
        if (name == "cos") return Scalar::cos_factor(freq, coord);
        return Scalar::sin_factor(freq, coord);
      }
      if (!SymbolTable::instance().contains(name)) fail("unknown symbol '" + name + "'");
      return Scalar::symbol(name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string read_name() {
    std::string name;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '~' || c == '_') {
        name += c;
        ++pos_;
      } else {
        break;
      }
    }
    return name;
  }

  // Decomposes an exp/cos/sin argument as (parameter polynomial) * coordinate.
  static std::pair<ParamPoly, SymId> linear_coordinate_form(const Scalar& arg, const std::string& fn) {
    if (arg.is_zero()) throw std::invalid_argument(fn + " argument must contain a coordinate");
    if (!arg.denominator().is_one())
      throw std::invalid_argument(fn + " argument must be polynomial in parameters");
    SymId coord = 0;
    bool have = false;
    ParamPolyBuilder b;
    for (const auto& t : arg.terms()) {
      if (!t.exps.empty() || !t.trig.empty() || !t.grass.empty())
        throw std::invalid_argument(fn + " argument must be (parameters) * coordinate");
      ParamMono m;
      SymId this_coord = 0;
      bool found = false;
      for (auto& [s, e] : t.mono) {
        if (SymbolTable::instance().is_coordinate(s)) {
          if (found || e != 1) throw std::invalid_argument(fn + " argument must be linear in one coordinate");
          this_coord = s;
          found = true;
        } else {
          m.push_back({s, e});
        }
      }
      if (!found) throw std::invalid_argument(fn + " argument must contain a coordinate");
      if (have && this_coord != coord)
        throw std::invalid_argument(fn + " argument mixes coordinates");
      coord = this_coord;
      have = true;
      b.add(t.coeff, m);
    }
    return {b.take(), coord};
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

} // namespace

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool wrap = !den_.is_one() && num_.size() > 1;
  if (wrap) os << "(";
  bool first = true;
  for (const auto& t : num_) {
    print_term(os, t, first);
    first = false;
  }
  if (wrap) os << ")";
  if (!den_.is_one()) {
    bool dwrap = den_.terms().size() > 1 ||
                 (den_.terms().size() == 1 && !(den_.terms()[0].c.is_one() && den_.terms()[0].m.size() == 1));
    os << "/" << (dwrap ? "(" : "") << den_.str() << (dwrap ? ")" : "");
  }
  return os.str();
}

Scalar parse_scalar(const std::string& text) { return Parser(text).parse(); }

} // namespace sbg
