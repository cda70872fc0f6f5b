#pragma once
// Text formats: Hecke elements, diagram JSON and diagram elements.

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hb/diagram.hpp"
#include "hb/element.hpp"
#include "hb/hecke.hpp"

namespace hb {

/// Malformed element or diagram text.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

/// Grammar: sums and products of scalars (q, b[u,i], c[key], rationals),
/// L(u,i), tau<u>, H<k>, id and one-line permutations [2,1,3], with integer
/// powers. Juxtaposition is multiplication.
struct HeckeParser {
  const std::string& s;
  const HeckeAlgebra& A;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at " + std::to_string(pos) + ": " + what + " in '" + s + "'");
  }
  void ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_word(const std::string& w) {
    ws();
    if (s.compare(pos, w.size(), w) != 0) return false;
    std::size_t end = pos + w.size();
    if (end < s.size() && std::isalpha(static_cast<unsigned char>(s[end]))) return false;
    pos = end;
    return true;
  }
  int integer() {
    ws();
    std::size_t st = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (digits == pos) fail("integer expected");
    return std::stoi(s.substr(st, pos - st));
  }

  HeckeElem scalar(const ScalarPoly& c) {
    HeckeElem r;
    add_term(r, CoxNormalForm::identity(A.n), c);
    return r;
  }

  HeckeElem expr() {
    HeckeElem r;
    bool neg = eat('-');
    if (!neg) eat('+');
    add_into(r, term(), ScalarPoly(neg ? -1 : 1));
    for (;;) {
      if (eat('+')) add_into(r, term());
      else if (eat('-')) add_into(r, term(), ScalarPoly(-1));
      else return r;
    }
  }
  bool starts_atom() {
    ws();
    if (pos >= s.size()) return false;
    char c = s[pos];
    return c == '(' || c == '[' || std::isalnum(static_cast<unsigned char>(c));
  }
  HeckeElem term() {
    HeckeElem r = factor();
    for (;;) {
      if (eat('*')) r = A.multiply(r, factor());
      else if (starts_atom()) r = A.multiply(r, factor());
      else return r;
    }
  }
  HeckeElem power(const HeckeElem& x, int e, const std::optional<HeckeElem>& inverse) {
    if (e < 0 && !inverse) fail("negative power of a non-invertible factor");
    const HeckeElem& b = e < 0 ? *inverse : x;
    HeckeElem r = A.one();
    for (int k = 0; k < std::abs(e); ++k) r = A.multiply(r, b);
    return r;
  }
  HeckeElem factor() {
    std::optional<HeckeElem> inverse;
    HeckeElem base = atom(inverse);
    if (eat('^')) return power(base, integer(), inverse);
    return base;
  }
  HeckeElem atom(std::optional<HeckeElem>& inverse) {
    ws();
    if (pos >= s.size()) fail("unexpected end");
    const char c = s[pos];
    if (c == '(') {
      ++pos;
      HeckeElem r = expr();
      if (!eat(')')) fail("')' expected");
      if (r.size() == 1 && r.begin()->first == CoxNormalForm::identity(A.n)) {
        const ScalarPoly& v = r.begin()->second;
        if (v.is_constant() && v.constant() != 0) inverse = scalar(ScalarPoly(Rational(1) / v.constant()));
      }
      return r;
    }
    if (c == '[') {
      ++pos;
      std::vector<int> p;
      while (!eat(']')) {
        p.push_back(integer() - 1);
        eat(',');
        if (pos >= s.size()) fail("']' expected");
      }
      if (static_cast<int>(p.size()) != A.n) fail("permutation of the wrong size");
      Perm w{p};
      std::vector<int> seen(A.n, 0);
      for (int x : p)
        if (x < 0 || x >= A.n || seen[x]++) fail("not a permutation");
      HeckeElem r = A.one();
      for (int k : w.reduced_word()) r = A.multiply(r, A.H(k));
      return r;
    }
    if (eat_word("id")) return A.one();
    if (c == 'L' && pos + 1 < s.size() && s[pos + 1] == '(') {
      pos += 2;
      int u = integer();
      if (!eat(',')) fail("',' expected");
      int i = integer();
      if (!eat(')')) fail("')' expected");
      if (u < 1 || u > A.g || i < 1 || i > A.n) fail("L index out of range");
      inverse = A.L(u, i, true);
      return A.L(u, i);
    }
    if (c == 'H' || (c == 't' && s.compare(pos, 3, "tau") == 0)) {
      pos += c == 'H' ? 1 : 3;
      if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("generator index expected");
      int k = integer();
      if (c == 'H') {
        if (k < 1 || k >= A.n) fail("H index out of range");
        inverse = A.H_inverse(k);
        return A.H(k);
      }
      if (k < 1 || k > A.g) fail("tau index out of range");
      inverse = A.L(k, 1, true);
      return A.L(k, 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == 'b' || c == 'c') {
      PolyParser p{s, pos};
      ScalarPoly v;
      try {
        v = p.atom();
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
      pos = p.pos;
      if (v.size() == 1) {
        auto& [m, coef] = *v.terms().begin();
        if (m.empty()) inverse = scalar(ScalarPoly(Rational(1) / coef));
        else if (m.size() == 1 && coef == 1) inverse = scalar(ScalarPoly::var(m[0].first, -static_cast<int>(m[0].second)));
      }
      return scalar(v);
    }
    fail(std::string("unexpected '") + c + "'");
  }
};

}  // namespace detail

/// Parse a Hecke element, e.g. `(q - q^-1) * L(1,2)^2 * H1 H2 + 3 * id`.
inline HeckeElem parse_hecke(const std::string& text, const HeckeAlgebra& A) {
  detail::HeckeParser p{text, A};
  HeckeElem r = p.expr();
  p.ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

// ---------------------------------------------------------------------------
// Diagram JSON: {"n_bottom":n,"n_top":m,"pairs":[["b1","t1"],...],"decor":{"b1-t1":"u1U2"}}
// Each pair is listed from its origin; a decoration is read from the first
// point of its key.

inline std::string point_name(int p, int nb) { return p < nb ? "b" + std::to_string(p + 1) : "t" + std::to_string(p - nb + 1); }

inline int parse_point(const std::string& s, int nb, int nt) {
  if (s.size() < 2 || (s[0] != 'b' && s[0] != 't')) throw ParseError("bad point '" + s + "'");
  int k = 0;
  try {
    std::size_t used = 0;
    k = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw ParseError("bad point '" + s + "'");
  } catch (const std::logic_error&) {
    throw ParseError("bad point '" + s + "'");
  }
  const int lim = s[0] == 'b' ? nb : nt;
  if (k < 1 || k > lim) throw ParseError("point '" + s + "' out of range");
  return s[0] == 'b' ? k - 1 : nb + k - 1;
}

template <class Word>
nlohmann::ordered_json diagram_json(const Diagram<Word>& d) {
  nlohmann::ordered_json j;
  j["n_bottom"] = d.nb;
  j["n_top"] = d.nt;
  j["pairs"] = nlohmann::ordered_json::array();
  j["decor"] = nlohmann::ordered_json::object();
  for (int p = 0; p < d.size(); ++p) {
    if (!d.is_origin(p)) continue;
    std::string a = point_name(p, d.nb), b = point_name(d.mate[p], d.nb);
    j["pairs"].push_back({a, b});
    if (!d.word[p].is_one()) j["decor"][a + "-" + b] = d.word[p].str();
  }
  return j;
}

template <class Word>
Diagram<Word> diagram_from_json(const nlohmann::json& j) {
  try {
    const int nb = j.at("n_bottom").get<int>(), nt = j.at("n_top").get<int>();
    if (nb < 0 || nt < 0) throw ParseError("negative point count");
    Diagram<Word> d(nb, nt);
    std::map<std::pair<int, int>, Word> decor;
    if (j.contains("decor"))
      for (auto it = j.at("decor").begin(); it != j.at("decor").end(); ++it) {
        const std::string k = it.key();
        auto dash = k.find('-');
        if (dash == std::string::npos) throw ParseError("bad decoration key '" + k + "'");
        int a = parse_point(k.substr(0, dash), nb, nt), b = parse_point(k.substr(dash + 1), nb, nt);
        decor[{a, b}] = Word::parse(it.value().template get<std::string>());
      }
    for (auto& pr : j.at("pairs")) {
      if (pr.size() != 2) throw ParseError("pair must have two points");
      int a = parse_point(pr[0].get<std::string>(), nb, nt), b = parse_point(pr[1].get<std::string>(), nb, nt);
      Word w = Word::one();
      if (auto it = decor.find({a, b}); it != decor.end()) w = it->second, decor.erase(it);
      else if (auto it2 = decor.find({b, a}); it2 != decor.end()) w = it2->second.reversed(), decor.erase(it2);
      d.join(a, b, w);
    }
    if (!decor.empty()) throw ParseError("decoration on a pair that does not exist");
    d.validate();
    return d;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad diagram: ") + e.what());
  }
}

/// Lines `coef * <diagram-json>`; the coefficient defaults to 1.
template <class Word>
std::string diagram_element_str(const Element<Diagram<Word>>& x) {
  if (x.empty()) return "0\n";
  std::string s;
  for (auto& [d, c] : x) {
    std::string cs = c.str();
    bool simple = cs.find_first_of("+ ") == std::string::npos ||
                  (cs[0] == '-' && cs.find_first_of("+ ", 1) == std::string::npos);
    if (!simple) cs = "(" + cs + ")";
    s += cs + " * " + diagram_json(d).dump() + "\n";
  }
  return s;
}

template <class Word>
Element<Diagram<Word>> parse_diagram_element(const std::string& text) {
  Element<Diagram<Word>> r;
  std::istringstream is(text);
  std::string line;
  bool any = false;
  while (std::getline(is, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line.substr(first) == "0") {
      any = true;
      continue;
    }
    auto brace = line.find('{');
    if (brace == std::string::npos) throw ParseError("diagram expected in '" + line + "'");
    std::string coef = line.substr(0, brace);
    auto last = coef.find_last_not_of(" \t");
    coef = last == std::string::npos ? "" : coef.substr(0, last + 1);
    ScalarPoly c(1);
    if (!coef.empty()) {
      if (coef.back() != '*') throw ParseError("'*' expected before the diagram in '" + line + "'");
      coef.pop_back();
      try {
        c = parse_scalar(coef);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    }
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line.substr(brace));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad JSON: ") + e.what());
    }
    add_term(r, diagram_from_json<Word>(j), c);
    any = true;
  }
  if (!any) throw ParseError("empty element");
  return r;
}

}  // namespace hb
