// hb: dimensions, products, cell reports and verification suites for
// handlebody diagram algebras.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hb/checks.hpp"
#include "hb/io.hpp"

namespace {

using namespace hb;
using json = nlohmann::ordered_json;

enum Exit : int { kOk = 0, kVerifyFailed = 1, kConfig = 2, kParse = 3, kUnbound = 4 };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string kind = "tl";
  int g = 0, n = 1;
  std::vector<int> d;
  std::vector<std::string> sets;
  std::string format = "tsv";
  std::optional<int> max_len;
  int e = 0;
  std::optional<int> lambda;

  Bindings bind;
};

bool cyclotomic(const std::string& k) { return k == "blob" || k == "cbrauer" || k == "checke"; }

std::size_t enumeration_cap() {
  if (const char* s = std::getenv("HB_ENUM_CAP")) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(s, &used);
      if (used == std::string(s).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw ConfigError(std::string("HB_ENUM_CAP must be a positive integer, got '") + s + "'");
  }
  return 1000000;
}

void finish_config(Config& c) {
  static const std::set<std::string> kinds{"tl", "blob", "brauer", "cbrauer", "hecke", "checke", "coxeter"};
  if (!kinds.count(c.kind)) throw ConfigError("unknown kind '" + c.kind + "'");
  if (c.n < 1) throw ConfigError("n must be positive");
  if (c.g < 0) throw ConfigError("g must be non-negative");
  if (c.kind == "brauer" && c.g != 0) throw ConfigError("kind brauer is the classical algebra; use cbrauer for g > 0");
  if (cyclotomic(c.kind)) {
    if (static_cast<int>(c.d.size()) != c.g) throw ConfigError("need one degree per core: -d has " + std::to_string(c.d.size()) + " entries, g = " + std::to_string(c.g));
    for (int x : c.d)
      if (x < 1) throw ConfigError("degrees must be positive");
  } else if (!c.d.empty()) {
    throw ConfigError("-d only applies to blob, cbrauer and checke");
  }
  if (c.format != "tsv" && c.format != "json") throw ConfigError("format must be tsv or json");
  if (c.max_len && *c.max_len < 0) throw ConfigError("max-len must be non-negative");
  for (auto& s : c.sets) {
    auto eq = s.rfind('=');
    if (eq == std::string::npos) throw ConfigError("--set expects symbol=value, got '" + s + "'");
    try {
      Symbol sym = parse_symbol(s.substr(0, eq));
      ScalarPoly v = parse_scalar(s.substr(eq + 1));
      if (!v.is_constant()) throw ConfigError("--set value must be a number in '" + s + "'");
      if (sym.kind == Symbol::Q && v.constant() == 0) throw ConfigError("q must be nonzero");
      c.bind[sym] = v.constant();
    } catch (const std::invalid_argument& e) {
      throw ConfigError("bad --set '" + s + "': " + e.what());
    }
  }
}

CycloParams params_of(const Config& c) { return CycloParams(c.g, c.d); }

std::string read_arg(const std::string& a) {
  std::ifstream in(a);
  if (!in) return a;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json number_json(const mpz_class& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

// ---------------------------------------------------------------------------

int cmd_bn(const Config& c) {
  if (!cyclotomic(c.kind) && c.g != 0) throw ConfigError("bn needs a degree vector; use --kind blob, cbrauer or checke");
  mpz_class v = blob_number(c.g, c.d);
  if (c.format == "json") std::cout << json{{"g", c.g}, {"d", c.d}, {"blob_number", number_json(v)}}.dump() << "\n";
  else std::cout << "blob_number\n" << v << "\n";
  return kOk;
}

int cmd_dim(const Config& c) {
  std::optional<mpz_class> formula;
  auto factorial = [](int n) {
    mpz_class f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
  };
  const std::string& k = c.kind;
  if (k == "tl") formula = c.g == 0 ? std::optional(catalan(c.n)) : std::nullopt;
  else if (k == "blob") formula = blob_dim(c.g, c.d, c.n);
  else if (k == "brauer" || k == "cbrauer") formula = brauer_dim(c.g, c.d, c.n);
  else if (k == "checke") {
    mpz_class f = 1;
    for (int i = 0; i < c.n; ++i) f *= blob_number(c.g, c.d);
    formula = f * factorial(c.n);
  } else if (c.g == 0) formula = factorial(c.n);

  const std::size_t cap = enumeration_cap();
  std::optional<std::size_t> count;
  std::string note;
  if (formula && *formula > cap) {
    note = "enumeration skipped: " + formula->get_str() + " exceeds the cap " + std::to_string(cap);
  } else if (k == "tl") {
    if (c.g == 0 || c.max_len) count = TLAlgebra{c.g, c.n}.enumerate(c.max_len.value_or(0)).size();
    else note = "infinite; pass --max-len to count decorations up to a length";
  } else if (k == "blob") {
    count = enumerate_blob_basis(c.g, c.d, c.n).size();
  } else if (k == "brauer" || k == "cbrauer") {
    count = enumerate_clapped_basis(c.g, c.d, c.n).size();
  } else if (k == "checke") {
    count = cyclo_hecke_basis(params_of(c), c.n).size();
  } else if (c.g == 0) {
    count = all_perms(c.n).size();
  } else {
    note = "infinite";
  }
  if (!note.empty()) std::cerr << "hb: " << note << "\n";

  if (c.format == "json") {
    json j{{"kind", c.kind}, {"g", c.g}, {"d", c.d}, {"n", c.n}};
    j["formula"] = formula ? number_json(*formula) : json("inf");
    j["enumerated"] = count ? json(*count) : json(nullptr);
    if (k == "tl" && c.max_len) j["max_len"] = *c.max_len;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "formula\tenumerated\n"
              << (formula ? formula->get_str() : "inf") << "\t" << (count ? std::to_string(*count) : "-") << "\n";
  }
  return kOk;
}

template <class Word, class Alg>
int mul_diagrams(const Config& c, const Alg& A, const std::string& xs, const std::string& ys) {
  Element<Diagram<Word>> x, y;
  try {
    x = parse_diagram_element<Word>(xs);
    y = parse_diagram_element<Word>(ys);
  } catch (const ParseError& e) {
    std::cerr << "hb: " << e.what() << "\n";
    return kParse;
  }
  for (auto* e : {&x, &y})
    for (auto& [dg, coef] : *e)
      if (dg.nb != c.n || dg.nt != c.n) {
        std::cerr << "hb: diagram has " << dg.nb << " bottom and " << dg.nt << " top points, expected " << c.n << "\n";
        return kParse;
      }
  auto r = specialize(A.multiply(x, y), c.bind);
  if (c.format == "json") {
    json terms = json::array();
    for (auto& [dg, coef] : r) terms.push_back({{"coef", coef.str()}, {"diagram", diagram_json(dg)}});
    std::cout << json{{"terms", terms}}.dump() << "\n";
  } else {
    std::cout << diagram_element_str(r);
  }
  return kOk;
}

int cmd_mul(const Config& c, const std::string& xa, const std::string& ya) {
  const std::string xs = read_arg(xa), ys = read_arg(ya);
  const std::string& k = c.kind;
  if (k == "tl") return mul_diagrams<FreeWord>(c, TLAlgebra{c.g, c.n}, xs, ys);
  if (k == "blob") return mul_diagrams<MonoidWord>(c, BlobAlgebra(c.n, params_of(c)), xs, ys);
  if (k == "brauer" || k == "cbrauer") return mul_diagrams<MonoidWord>(c, BrauerAlgebra(c.n, params_of(c)), xs, ys);
  if (k == "coxeter") {
    CoxNormalForm m;
    try {
      m = cox_normal_form(BraidWord::parse(xs) * BraidWord::parse(ys), c.g, c.n);
    } catch (const std::invalid_argument& e) {
      std::cerr << "hb: " << e.what() << "\n";
      return kParse;
    }
    if (c.format == "json") std::cout << json{{"normal_form", m.str()}, {"word", m.to_word().str()}}.dump() << "\n";
    else std::cout << m.str() << "\n";
    return kOk;
  }
  HeckeAlgebra A(c.g, c.n, c.bind);
  HeckeElem x, y;
  try {
    x = parse_hecke(xs, A);
    y = parse_hecke(ys, A);
  } catch (const ParseError& e) {
    std::cerr << "hb: " << e.what() << "\n";
    return kParse;
  }
  if (k == "hecke") {
    auto r = specialize(A.multiply(x, y), c.bind);
    if (c.format == "json") {
      json terms = json::array();
      for (auto it = r.rbegin(); it != r.rend(); ++it)
        terms.push_back({{"coef", it->second.str()}, {"monomial", hecke_monomial_str(it->first)}});
      std::cout << json{{"terms", terms}}.dump() << "\n";
    } else {
      std::cout << hecke_str(r) << "\n";
    }
    return kOk;
  }
  CycloHecke<RationalField> Q(c.n, params_of(c), RationalField{c.bind});
  auto r = Q.reduce(Q.multiply(Q.vec(x), Q.vec(y)));
  if (c.format == "json") {
    json terms = json::array();
    for (auto it = r.rbegin(); it != r.rend(); ++it)
      terms.push_back({{"coef", it->second.get_str()}, {"monomial", hecke_monomial_str(it->first.m)}});
    std::cout << json{{"terms", terms}}.dump() << "\n";
  } else {
    std::cout << Q.str(r) << "\n";
  }
  return kOk;
}

/// F_p for the cyclotomic Hecke algebra: --e fixes q at a root of unity,
/// an unbound q is generic (q = 2), and every b[u,i] must be bound.
PrimeField hecke_field(const Config& c) {
  PrimeField f = c.e >= 2 ? root_of_unity_field(c.e) : PrimeField{};
  auto reduce = [&f](const Rational& v) {
    mpz_class num = v.get_num() % static_cast<unsigned long>(f.p), den = v.get_den() % static_cast<unsigned long>(f.p);
    if (num < 0) num += static_cast<unsigned long>(f.p);
    if (den == 0) throw ConfigError("value " + v.get_str() + " is not defined mod " + std::to_string(f.p));
    return f.mul(num.get_ui(), f.inv(den.get_ui()));
  };
  for (auto& [s, v] : c.bind) {
    if (s.kind == Symbol::Q && c.e >= 2) throw ConfigError("--e fixes q; do not also --set q");
    if (s.kind == Symbol::Circle) continue;
    f.vals[s] = reduce(v);
  }
  if (!f.vals.count(Symbol::q())) f.vals[Symbol::q()] = 2;
  for (int u = 1; u <= c.g; ++u)
    for (int i = 1; i <= c.d[u - 1]; ++i)
      if (!f.vals.count(Symbol::cyclo(u, i))) throw UnboundSymbol("unbound symbol " + Symbol::cyclo(u, i).str());
  return f;
}

template <class F>
std::vector<GramReport> cell_reports(const Config& c, const CellDatum<F>& d) {
  if (!c.lambda) return apex_report(d);
  for (int l = 0; l < static_cast<int>(d.lambda_names.size()); ++l)
    if (d.lambda_names[l] == std::to_string(*c.lambda) || l == *c.lambda) {
      if (d.bottoms[l].empty()) break;
      return {gram(d, l)};
    }
  throw ConfigError("no cell with label " + std::to_string(*c.lambda));
}

std::vector<GramReport> reports(const Config& c) {
  const std::string& k = c.kind;
  std::optional<mpz_class> size;
  if (k == "tl" && c.g == 0) size = catalan(c.n);
  if (k == "blob") size = blob_dim(c.g, c.d, c.n);
  if (k == "brauer" || k == "cbrauer") size = brauer_dim(c.g, c.d, c.n);
  if (size && *size > enumeration_cap())
    throw ConfigError("basis of size " + size->get_str() + " exceeds the cap " + std::to_string(enumeration_cap()));
  RationalField f{c.bind};
  if (k == "tl") return cell_reports(c, tl_cell_datum(TLAlgebra{c.g, c.n}, c.max_len.value_or(c.g == 0 ? 0 : 1), f));
  if (k == "blob") return cell_reports(c, blob_cell_datum(BlobAlgebra(c.n, params_of(c)), f));
  if (k == "brauer" || k == "cbrauer") return cell_reports(c, brauer_cell_datum(BrauerAlgebra(c.n, params_of(c)), f));
  if (k == "checke" || (k == "hecke" && c.g == 0)) {
    auto A = std::make_shared<const CycloHecke<PrimeField>>(c.n, k == "hecke" ? CycloParams(0, {}) : params_of(c),
                                                            hecke_field(c));
    return cell_reports(c, murphy_cell_datum(A));
  }
  throw ConfigError("cell reports need kind tl, blob, brauer, cbrauer, checke or hecke with g = 0");
}

int cmd_apexes(const Config& c) {
  auto rs = reports(c);
  if (c.format == "json") {
    json arr = json::array();
    for (auto& r : rs)
      arr.push_back({{"lambda", r.name},
                     {"m", r.m},
                     {"sandwich_dim", r.sandwich_dim},
                     {"gram_rank", r.rank},
                     {"apex", r.apex},
                     {"simples", r.simples}});
    std::cout << arr.dump() << "\n";
  } else {
    std::cout << "lambda\t|M_lambda|\tsandwich-dim\tgram-rank\tapex\tsimples\n";
    for (auto& r : rs)
      std::cout << r.name << "\t" << r.m << "\t" << r.sandwich_dim << "\t" << r.rank << "\t" << (r.apex ? "yes" : "no")
                << "\t" << r.simples << "\n";
  }
  return kOk;
}

int cmd_gram(const Config& c) {
  auto rs = reports(c);
  if (c.format == "json") {
    json arr = json::array();
    for (auto& r : rs)
      arr.push_back({{"lambda", r.name}, {"rank", r.rank}, {"apex", r.apex}, {"consistent", r.consistent}, {"matrix", r.matrix}});
    std::cout << arr.dump() << "\n";
    return kOk;
  }
  for (auto& r : rs) {
    std::cout << "# lambda " << r.name << "\trank " << r.rank << "\tapex " << (r.apex ? "yes" : "no") << "\n";
    for (auto& row : r.matrix) {
      for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? "\t" : "") << row[j];
      std::cout << "\n";
    }
  }
  return kOk;
}

int cmd_verify(const Config& c, const std::vector<std::string>& names) {
  auto suites = verify_suites();
  std::vector<NamedCheck> todo;
  for (auto& name : names) {
    if (name == "all") {
      auto acc = acceptance_checks();
      todo.insert(todo.end(), acc.begin(), acc.end());
      continue;
    }
    auto it = std::find_if(suites.begin(), suites.end(), [&](const NamedCheck& s) { return s.name == name; });
    if (it == suites.end()) {
      std::string known;
      for (auto& s : suites) known += " " + s.name;
      throw ConfigError("unknown suite '" + name + "'; known:" + known + " all");
    }
    todo.push_back(*it);
  }
  bool ok = true;
  json arr = json::array();
  for (auto& s : todo) {
    auto r = s.run();
    ok = ok && r.pass;
    if (c.format == "json") arr.push_back({{"suite", s.name}, {"pass", r.pass}, {"detail", r.detail}});
    else std::cout << (r.pass ? "PASS" : "FAIL") << "\t" << s.name << "\t" << r.detail << "\n";
  }
  if (c.format == "json") std::cout << arr.dump() << "\n";
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Handlebody diagram algebras: dimensions, products, cell reports and checks"};
  app.require_subcommand(1);
  Config c;
  auto common = [&c](CLI::App* s) {
    s->add_option("--kind", c.kind, "tl, blob, brauer, cbrauer, hecke, checke or coxeter");
    s->add_option("-g", c.g, "number of cores");
    s->add_option("-n", c.n, "number of strands");
    s->add_option("-d", c.d, "degree of each core (cyclotomic kinds)")->delimiter(',');
    s->add_option("--set", c.sets, "bind a parameter, e.g. c[e]=2 or b[1,1]=1/2");
    s->add_option("--format", c.format, "tsv or json");
  };
  auto* dim = app.add_subcommand("dim", "formula dimension next to the enumerated basis size");
  common(dim);
  dim->add_option("--max-len", c.max_len, "decoration length bound for tl with g > 0");

  std::string xa, ya;
  auto* mul = app.add_subcommand("mul", "product of two elements (file names or literal text)");
  common(mul);
  mul->add_option("x", xa, "left factor")->required();
  mul->add_option("y", ya, "right factor")->required();

  auto* apexes = app.add_subcommand("apexes", "per-cell Gram rank, apex flag and simple count");
  common(apexes);
  apexes->add_option("--max-len", c.max_len, "decoration length bound for tl with g > 0");
  apexes->add_option("--e", c.e, "quantum characteristic for hecke/checke (q a primitive 2e-th root of unity)");

  auto* gramc = app.add_subcommand("gram", "Gram matrices of the cells");
  common(gramc);
  gramc->add_option("--max-len", c.max_len, "decoration length bound for tl with g > 0");
  gramc->add_option("--e", c.e, "quantum characteristic for hecke/checke");
  gramc->add_option("--lambda", c.lambda, "only this cell");

  auto* bn = app.add_subcommand("bn", "blob number of a degree vector");
  common(bn);

  std::vector<std::string> suites;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suites, "suite names, or all")->required();
  verify->add_option("--format", c.format, "tsv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }

  try {
    finish_config(c);
    if (*dim) return cmd_dim(c);
    if (*mul) return cmd_mul(c, xa, ya);
    if (*apexes) return cmd_apexes(c);
    if (*gramc) return cmd_gram(c);
    if (*bn) return cmd_bn(c);
    if (*verify) return cmd_verify(c, suites);
  } catch (const ConfigError& e) {
    std::cerr << "hb: " << e.what() << "\n";
    return kConfig;
  } catch (const UnboundSymbol& e) {
    std::cerr << "hb: " << e.what() << "\n";
    return kUnbound;
  } catch (const ParseError& e) {
    std::cerr << "hb: " << e.what() << "\n";
    return kParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hb: " << e.what() << "\n";
    return kConfig;
  }
  return kConfig;
}
