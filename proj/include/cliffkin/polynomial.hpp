#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliffkin/errors.hpp"
#include "cliffkin/rational.hpp"

namespace cliffkin {

/// Natural variable order: alphabetic prefix, then numeric suffix (a2 < a10 < c0 < x0).
struct VariableOrder {
  bool operator()(std::string_view a, std::string_view b) const {
    auto split = [](std::string_view s) {
      std::size_t k = s.size();
      while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
      return std::pair{s.substr(0, k), s.substr(k)};
    };
    auto [pa, na] = split(a);
    auto [pb, nb] = split(b);
    if (pa != pb) return pa < pb;
    if (na.size() != nb.size()) return na.size() < nb.size();
    return na < nb;
  }
};

/// Power product; variables kept sorted by VariableOrder, exponents positive.
class Monomial {
 public:
  using Power = std::pair<std::string, unsigned>;

  Monomial() = default;

  static Monomial variable(std::string name, unsigned exponent = 1) {
    Monomial m;
    if (exponent > 0) m.powers_.emplace_back(std::move(name), exponent);
    return m;
  }

  static Monomial from_powers(std::vector<Power> powers) {
    Monomial m;
    for (auto& [v, e] : powers) m = m * variable(std::move(v), e);
    return m;
  }

  [[nodiscard]] const std::vector<Power>& powers() const { return powers_; }
  [[nodiscard]] bool is_one() const { return powers_.empty(); }

  [[nodiscard]] unsigned degree() const {
    unsigned d = 0;
    for (const auto& p : powers_) d += p.second;
    return d;
  }

  [[nodiscard]] unsigned exponent(std::string_view var) const {
    for (const auto& p : powers_)
      if (p.first == var) return p.second;
    return 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    VariableOrder less;
    auto i = a.powers_.begin(), j = b.powers_.begin();
    while (i != a.powers_.end() || j != b.powers_.end()) {
      if (j == b.powers_.end() || (i != a.powers_.end() && less(i->first, j->first))) {
        out.powers_.push_back(*i++);
      } else if (i == a.powers_.end() || less(j->first, i->first)) {
        out.powers_.push_back(*j++);
      } else {
        out.powers_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Power> powers_;
};

/// Graded lexicographic, descending: the map iterates in printing order.
struct GradedLexOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    VariableOrder less;
    const auto& pa = a.powers();
    const auto& pb = b.powers();
    auto i = pa.begin(), j = pb.begin();
    while (i != pa.end() || j != pb.end()) {
      unsigned ea = 0, eb = 0;
      if (j == pb.end() || (i != pa.end() && less(i->first, j->first))) {
        ea = (i++)->second;
      } else if (i == pa.end() || less(j->first, i->first)) {
        eb = (j++)->second;
      } else {
        ea = (i++)->second;
        eb = (j++)->second;
      }
      if (ea != eb) return ea > eb;
    }
    return false;
  }
};

/// Sparse multivariate polynomial with exact rational coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GradedLexOrder>;

  Polynomial() = default;
  explicit Polynomial(int c) : Polynomial(Rational(c)) {}
  explicit Polynomial(const Rational& c) {
    if (!cliffkin::is_zero(c)) terms_.emplace(Monomial{}, c);
  }

  static Polynomial variable(std::string name) {
    Polynomial p;
    p.terms_.emplace(Monomial::variable(std::move(name)), Rational(1));
    return p;
  }

  static Polynomial term(Monomial m, const Rational& c) {
    Polynomial p;
    if (!cliffkin::is_zero(c)) p.terms_.emplace(std::move(m), c);
    return p;
  }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  [[nodiscard]] Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  [[nodiscard]] Rational constant_term() const { return coefficient(Monomial{}); }

  /// -1 for the zero polynomial.
  [[nodiscard]] int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
    return d;
  }

  [[nodiscard]] bool is_homogeneous(unsigned degree) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return t.first.degree() == degree; });
  }

  /// Variables occurring with nonzero exponent, natural order.
  [[nodiscard]] std::vector<std::string> variables() const {
    std::set<std::string, VariableOrder> vars;
    for (const auto& [m, c] : terms_)
      for (const auto& pw : m.powers()) vars.insert(pw.first);
    return {vars.begin(), vars.end()};
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial& operator*=(const Rational& s) {
    if (cliffkin::is_zero(s)) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }

  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Exact value under a full assignment of the occurring variables.
  [[nodiscard]] Rational eval(const std::map<std::string, Rational, std::less<>>& assignment) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
      Rational v = c;
      for (const auto& [var, e] : m.powers()) {
        auto it = assignment.find(var);
        if (it == assignment.end()) throw MissingVariable("no value for variable '" + var + "'");
        for (unsigned k = 0; k < e; ++k) v *= it->second;
      }
      total += v;
    }
    return total;
  }

  /// Positive rational c with p = c * q, q integral with coprime coefficients.
  [[nodiscard]] Rational content() const {
    if (terms_.empty()) return 1;
    mpz_class num = 0, den = 1;
    for (const auto& [m, c] : terms_) {
      num = gcd(num, mpz_class(c.get_num()));
      den = lcm(den, mpz_class(c.get_den()));
    }
    Rational r(num, den);
    r.canonicalize();
    return abs(r);
  }

  /// Divided by its content, with the leading (first printed) coefficient positive.
  [[nodiscard]] Polynomial normalized() const {
    if (terms_.empty()) return *this;
    Rational s = 1 / content();
    if (sgn(terms_.begin()->second) < 0) s = -s;
    return *this * s;
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (cliffkin::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (cliffkin::is_zero(it->second)) terms_.erase(it);
    }
  }

  Terms terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

inline std::string to_string(const Monomial& m) {
  std::string s;
  for (const auto& [v, e] : m.powers()) {
    if (!s.empty()) s += '*';
    s += v;
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s;
}

/// Human-readable rendering, e.g. "a0^2 + 2*a0*c0 - 1/2*x1".
inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool neg = sgn(c) < 0;
    Rational mag = abs(c);
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += to_string(m);
    }
  }
  return out;
}

namespace detail {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : s_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(s_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= Rational(1 / d.constant_term());
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      Polynomial out(1);
      for (unsigned k = 0; k < e; ++k) out *= base;
      return out;
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Polynomial(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return Polynomial::variable(std::string(s_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses + - * / ^ and parentheses over integers and identifiers. Division only by constants.
inline Polynomial parse_polynomial(std::string_view text) { return detail::PolynomialParser(text).parse(); }

}  // namespace cliffkin
