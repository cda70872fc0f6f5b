#pragma once
// Exact multivariate Laurent polynomials over the rationals.

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hb {

using Rational = mpq_class;

/// Polynomial in variables of type Var with rational coefficients.
/// Var must be totally ordered and provide `bool laurent() const`
/// (whether negative exponents are allowed) and `std::string str() const`.
template <class Var>
class Poly {
 public:
  using Monomial = std::vector<std::pair<Var, int>>;
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(long c) { if (c != 0) terms_[{}] = c; }
  Poly(const Rational& c) { if (c != 0) terms_[{}] = c; }

  static Poly var(const Var& v, int e = 1) {
    Poly p;
    if (e != 0 && !v.laurent() && e < 0) throw std::domain_error("negative exponent on " + v.str());
    Monomial m;
    if (e != 0) m.push_back({v, e});
    p.terms_[m] = 1;
    return p;
  }
  static Poly monomial(const Monomial& m, const Rational& c) {
    Poly p;
    if (c != 0) p.terms_[m] = c;
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  Rational constant() const {
    auto it = terms_.find({});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  std::size_t size() const { return terms_.size(); }

  Poly& operator+=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) r.add_term(mul_mono(ma, mb), ca * cb);
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend bool operator<(const Poly& a, const Poly& b) { return a.terms_ < b.terms_; }

  Poly pow(unsigned e) const {
    Poly r(1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  /// Substitute rational values; unbound variables stay symbolic.
  template <class Bindings>
  Poly specialize(const Bindings& vals) const {
    Poly r;
    for (auto& [m, c] : terms_) {
      Rational coef = c;
      Monomial rest;
      for (auto& [v, e] : m) {
        auto it = vals.find(v);
        if (it == vals.end()) {
          rest.push_back({v, e});
          continue;
        }
        if (it->second == 0) {
          if (e < 0) throw std::domain_error("zero binding for invertible symbol " + v.str());
          coef = 0;
          break;
        }
        coef *= rat_pow(it->second, e);
      }
      if (coef != 0) r.add_term(rest, coef);
    }
    return r;
  }

  /// Substitute polynomials for variables (ring endomorphism).
  template <class Subst>
  Poly substitute(const Subst& sub) const {
    Poly r;
    for (auto& [m, c] : terms_) {
      Poly t(c);
      for (auto& [v, e] : m) {
        auto it = sub.find(v);
        if (it == sub.end()) {
          t = t * var(v, e);
        } else {
          if (e < 0) throw std::domain_error("cannot substitute into negative power");
          t = t * it->second.pow(static_cast<unsigned>(e));
        }
      }
      r += t;
    }
    return r;
  }

  /// Apply f to every coefficient-carrying variable set; used for semilinear maps.
  template <class F>
  Poly map_vars(F f) const {
    Poly r;
    for (auto& [m, c] : terms_) {
      Poly t(c);
      for (auto& [v, e] : m) t = t * var(f(v), e);
      r += t;
    }
    return r;
  }

  std::vector<Var> variables() const {
    std::vector<Var> out;
    for (auto& [m, c] : terms_)
      for (auto& [v, e] : m) {
        bool seen = false;
        for (auto& w : out) seen = seen || (w == v);
        if (!seen) out.push_back(v);
      }
    return out;
  }

  /// Render as `coef * v^e * w + ...`; terms in descending monomial order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      Rational a = abs(c);
      bool neg = c < 0;
      if (first) s += neg ? "-" : "";
      else s += neg ? " - " : " + ";
      first = false;
      std::string body;
      if (m.empty() || a != 1) body = a.get_str();
      for (auto& [v, e] : m) {
        if (!body.empty()) body += " * ";
        body += v.str();
        if (e != 1) body += "^" + std::to_string(e);
      }
      s += body;
    }
    return s;
  }

 private:
  Terms terms_;

  static Rational rat_pow(const Rational& x, int e) {
    Rational r = 1, b = x;
    bool inv = e < 0;
    unsigned k = static_cast<unsigned>(inv ? -e : e);
    while (k) {
      if (k & 1) r *= b;
      k >>= 1;
      if (k) b *= b;
    }
    if (inv) r = 1 / r;
    return r;
  }

  static Monomial mul_mono(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        r.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        r.push_back(b[j++]);
      } else {
        int e = a[i].second + b[j].second;
        if (e != 0) r.push_back({a[i].first, e});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
};

/// Letter code shared with the free group module: 2u for u, 2u+1 for u^-1.
inline std::string render_word_codes(const std::vector<int>& codes) {
  if (codes.empty()) return "e";
  std::string s;
  for (int c : codes) s += ((c & 1) ? "U" : "u") + std::to_string(c >> 1);
  return s;
}

inline std::vector<int> parse_word_codes(const std::string& s) {
  std::vector<int> out;
  if (s == "e" || s.empty()) return out;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (ch != 'u' && ch != 'U') throw std::invalid_argument("bad word letter in '" + s + "'");
    std::size_t j = i + 1;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i + 1) throw std::invalid_argument("missing core index in '" + s + "'");
    int u = std::stoi(s.substr(i + 1, j - i - 1));
    if (u < 1) throw std::invalid_argument("core index must be positive in '" + s + "'");
    out.push_back(2 * u + (ch == 'U' ? 1 : 0));
    i = j;
  }
  return out;
}

/// Coefficient ring symbol: q, a circle parameter c[key], or a cyclotomic parameter b[u,i].
struct Symbol {
  enum Kind : int { Q = 0, Circle = 1, Cyclo = 2 };
  Kind kind = Q;
  std::vector<int> key;  // circle key letter codes
  int u = 0, i = 0;      // cyclotomic slot

  static Symbol q() { return Symbol{}; }
  static Symbol circle(std::vector<int> k) { Symbol s; s.kind = Circle; s.key = std::move(k); return s; }
  static Symbol cyclo(int u, int i) { Symbol s; s.kind = Cyclo; s.u = u; s.i = i; return s; }

  bool laurent() const { return kind == Q; }
  std::string str() const {
    switch (kind) {
      case Q: return "q";
      case Circle: return "c[" + render_word_codes(key) + "]";
      default: return "b[" + std::to_string(u) + "," + std::to_string(i) + "]";
    }
  }
  friend bool operator<(const Symbol& a, const Symbol& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.kind == Circle) {
      if (a.key.size() != b.key.size()) return a.key.size() < b.key.size();
      return a.key < b.key;
    }
    return std::pair(a.u, a.i) < std::pair(b.u, b.i);
  }
  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.kind == b.kind && a.key == b.key && a.u == b.u && a.i == b.i;
  }
};

using ScalarPoly = Poly<Symbol>;
using Bindings = std::map<Symbol, Rational>;

inline ScalarPoly q_poly(int e = 1) { return ScalarPoly::var(Symbol::q(), e); }
/// q - q^-1
inline ScalarPoly delta_poly() { return q_poly(1) - q_poly(-1); }
inline ScalarPoly circle_poly(const std::vector<int>& key) { return ScalarPoly::var(Symbol::circle(key)); }
inline ScalarPoly cyclo_poly(int u, int i) { return ScalarPoly::var(Symbol::cyclo(u, i)); }

inline ScalarPoly specialize(const ScalarPoly& a, const Bindings& b) {
  for (auto& [s, v] : b)
    if (s.kind == Symbol::Q && v == 0) throw std::domain_error("q must be bound to a nonzero value");
  return a.specialize(b);
}

// ---- prime field evaluation ----

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 r = 1, x = b % p;
  while (e) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}
inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("not invertible mod p");
  return mod_pow(a, p - 2, p);
}
inline std::uint64_t rational_mod(const Rational& r, std::uint64_t p) {
  mpz_class n = r.get_num() % mpz_class(static_cast<unsigned long>(p));
  if (n < 0) n += static_cast<unsigned long>(p);
  mpz_class d = r.get_den() % mpz_class(static_cast<unsigned long>(p));
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(n.get_ui()) * mod_inv(d.get_ui(), p)) % p);
}

/// Evaluate in F_p; every symbol must be bound.
inline std::uint64_t eval_mod(const ScalarPoly& a, const std::map<Symbol, std::uint64_t>& vals,
                              std::uint64_t p) {
  unsigned __int128 acc = 0;
  for (auto& [m, c] : a.terms()) {
    unsigned __int128 t = rational_mod(c, p);
    for (auto& [v, e] : m) {
      auto it = vals.find(v);
      if (it == vals.end()) throw std::domain_error("unbound symbol " + v.str());
      std::uint64_t x = e >= 0 ? mod_pow(it->second, e, p) : mod_pow(mod_inv(it->second, p), -e, p);
      t = t * x % p;
    }
    acc = (acc + t) % p;
  }
  return static_cast<std::uint64_t>(acc);
}

// ---- text parsing ----

namespace detail {
struct PolyParser {
  const std::string& s;
  std::size_t pos = 0;

  void ws() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }
  bool eat(char c) {
    ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at " + std::to_string(pos) + ": " + what + " in '" + s + "'");
  }
  long integer() {
    ws();
    std::size_t st = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (st == pos || (pos == st + 1 && !std::isdigit(static_cast<unsigned char>(s[st])))) fail("integer expected");
    return std::stol(s.substr(st, pos - st));
  }
  ScalarPoly expr() {
    ScalarPoly r;
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    ScalarPoly t = term();
    r = neg ? -t : t;
    for (;;) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else break;
    }
    return r;
  }
  ScalarPoly term() {
    ScalarPoly r = factor();
    while (eat('*')) r = r * factor();
    return r;
  }
  ScalarPoly factor() {
    ScalarPoly base = atom();
    if (eat('^')) {
      long e = integer();
      if (e >= 0) return base.pow(static_cast<unsigned>(e));
      if (base.size() == 1 && !base.terms().begin()->first.empty() && base.terms().begin()->second == 1) {
        auto m = base.terms().begin()->first;
        if (m.size() == 1) return ScalarPoly::var(m[0].first, static_cast<int>(m[0].second * e));
      }
      if (base.is_constant() && base.constant() != 0) return ScalarPoly(Rational(1) / base.constant()).pow(-e);
      fail("negative power of a non-monomial");
    }
    return base;
  }
  ScalarPoly atom() {
    ws();
    if (pos >= s.size()) fail("unexpected end");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      ScalarPoly r = expr();
      if (!eat(')')) fail("')' expected");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = pos;
      while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
      return ScalarPoly(Rational(s.substr(st, pos - st)));
    }
    if (c == 'q') { ++pos; return q_poly(1); }
    if (c == 'c' || c == 'b') {
      ++pos;
      if (!eat('[')) fail("'[' expected");
      std::size_t close = s.find(']', pos);
      if (close == std::string::npos) fail("']' expected");
      std::string inner = s.substr(pos, close - pos);
      pos = close + 1;
      if (c == 'c') return circle_poly(parse_word_codes(inner));
      auto comma = inner.find(',');
      if (comma == std::string::npos) fail("b[u,i] expected");
      return cyclo_poly(std::stoi(inner.substr(0, comma)), std::stoi(inner.substr(comma + 1)));
    }
    fail(std::string("unexpected '") + c + "'");
  }
};
}  // namespace detail

/// Parse the rendering grammar (also accepts parentheses).
inline ScalarPoly parse_scalar(const std::string& text) {
  detail::PolyParser p{text};
  ScalarPoly r = p.expr();
  p.ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

/// Parse a single symbol name such as `q`, `c[u1]`, `b[1,2]`.
inline Symbol parse_symbol(const std::string& text) {
  ScalarPoly p = parse_scalar(text);
  if (p.size() != 1) throw std::invalid_argument("not a symbol: " + text);
  auto& [m, c] = *p.terms().begin();
  if (c != 1 || m.size() != 1 || m[0].second != 1) throw std::invalid_argument("not a symbol: " + text);
  return m[0].first;
}

}  // namespace hb
