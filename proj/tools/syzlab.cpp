// syzlab: Betti tables, normality, regularity and theorem audits for
// projective varieties embedded by (sub)linear systems.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "syzlab/checks.hpp"
#include "syzlab/errors.hpp"
#include "syzlab/geometry.hpp"
#include "syzlab/groebner.hpp"
#include "syzlab/koszul.hpp"
#include "syzlab/resolution.hpp"
#include "syzlab/suites.hpp"

using namespace syz;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kMismatch = 2, kResource = 3, kBadConfig = 4 };

struct Opts {
  std::string fixture = "veronese";
  std::string fixture_config;
  int n = 2, d = 3, m = 3, t = 0;
  std::string twists = "1,2";
  std::string sextic;
  std::uint64_t seed = 1;
  int retries = 8;
  std::string field = "Q";
  int imax = 3, jmax = 3;
  std::string format = "pretty";
  std::string cache_dir;
  // betti
  std::string module = "S";
  std::string path = "both";
  std::string ring = "x,y,z";
  std::string ideal;
  // table2
  int tmin = 0, tmax = 4;
  // audit
  std::string suite = "example1";
  // build-e / koszul
  int bound = 4;
  std::string input;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& x : split(s, ',')) {
    try {
      out.push_back(std::stoi(x));
    } catch (const std::exception&) {
      throw MalformedInput("not an integer list: '" + s + "'");
    }
  }
  return out;
}

// key = value fixture file (kind, n, d, twists, sextic, m, t, seed, field,
// degree_bound); flags given on the command line win over the file.
void apply_fixture_config(CLI::App* sub, Opts& o) {
  std::ifstream in(o.fixture_config);
  if (!in) throw MalformedInput("cannot read '" + o.fixture_config + "'");
  auto given = [&](const char* flag) {
    auto* opt = sub->get_option_no_throw(flag);
    return opt && opt->count() > 0;
  };
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto eq = line.find('=');
    auto parts = split(line.substr(0, eq), ' ');
    if (eq == std::string::npos || parts.size() != 1)
      throw MalformedInput(o.fixture_config + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = parts[0];
    std::string value = line.substr(eq + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    value.erase(value.find_last_not_of(" \t\r") + 1);
    auto number = [&]() -> long long {
      try {
        std::size_t used = 0;
        long long x = std::stoll(value, &used);
        if (used == value.size()) return x;
      } catch (const std::exception&) {
      }
      throw MalformedInput(o.fixture_config + ":" + std::to_string(lineno) + ": '" + key + "' needs an integer");
    };
    if (key == "kind") {
      if (!given("--fixture")) o.fixture = value;
    } else if (key == "n") {
      if (!given("--n")) o.n = static_cast<int>(number());
    } else if (key == "d") {
      if (!given("--d")) o.d = static_cast<int>(number());
    } else if (key == "m") {
      if (!given("--m")) o.m = static_cast<int>(number());
    } else if (key == "t") {
      if (!given("--t")) o.t = static_cast<int>(number());
    } else if (key == "seed") {
      if (!given("--seed")) o.seed = static_cast<std::uint64_t>(number());
    } else if (key == "twists") {
      if (!given("--twists")) o.twists = value;
    } else if (key == "sextic") {
      if (!given("--sextic")) o.sextic = value;
    } else if (key == "field") {
      if (!given("--field")) o.field = value;
    } else if (key == "degree_bound") {
      int b = static_cast<int>(number());
      if (sub->get_option_no_throw("--bound") && !given("--bound")) o.bound = b;
      if (sub->get_option_no_throw("--jmax") && !given("--jmax")) o.jmax = b - 1;
    } else {
      throw MalformedInput(o.fixture_config + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (o.t < 0) throw MalformedInput("t must be >= 0");
}

GroebnerCache cache_of(const Opts& o) { return GroebnerCache::from_environment(o.cache_dir); }

EmbeddedVariety make_fixture(const Opts& o) {
  Field f = Field::parse(o.field);
  EmbeddedVariety v;
  if (o.fixture == "veronese") {
    v = veronese(o.n, o.d, f);
  } else if (o.fixture == "twisted-cubic") {
    v = veronese(1, 3, f);
  } else if (o.fixture == "scroll") {
    v = rational_scroll(int_list(o.twists), f);
  } else if (o.fixture == "hyperelliptic" || o.fixture == "g2") {
    std::vector<mpq_class> c = default_sextic();
    if (!o.sextic.empty()) {
      c.clear();
      for (const auto& x : split(o.sextic, ',')) {
        try {
          c.emplace_back(x);
        } catch (const std::exception&) {
          throw MalformedInput("bad sextic coefficient '" + x + "'");
        }
        c.back().canonicalize();
      }
    }
    v = hyperelliptic_g2(c, o.m, f);
  } else {
    throw MalformedInput("unknown fixture '" + o.fixture + "'");
  }
  if (o.t > 0) {
    GroebnerCache cache = cache_of(o);
    v = project(v, o.t, o.seed, o.retries, &cache);
  }
  return v;
}

void print_table(const BettiTable& b, const std::string& format, std::ostream& out) {
  if (format == "json")
    out << b.to_json() << "\n";
  else if (format == "tsv")
    out << b.to_tsv();
  else
    out << b.to_pretty();
}

int cmd_betti(const Opts& o) {
  if (o.imax < 0 || o.jmax < 0) throw MalformedInput("bounds must be >= 0");
  std::optional<BettiTable> kz, res;
  std::string name;
  if (o.fixture == "ideal") {
    Field f = Field::parse(o.field);
    auto ring = Ring::standard(split(o.ring, ','));
    std::vector<Polynomial> gens;
    for (const auto& g : split(o.ideal, ';')) gens.push_back(Polynomial::parse(g, ring, f));
    Ideal I(ring, f, gens);
    name = "ideal";
    res = minimal_betti(GradedPresentation::quotient(minimal_generators(I)), o.imax, o.jmax);
  } else {
    EmbeddedVariety v = make_fixture(o);
    name = v.descriptor();
    GradedModuleData e = build_E(v, o.jmax + 1);
    GradedModuleData mod;
    if (o.module == "E")
      mod = e;
    else if (o.module == "S")
      mod = generated_by_degree_zero(e);
    else if (o.module == "R")
      mod = birkenhake(e);
    else
      throw MalformedInput("module must be E, S or R");
    if (o.path == "koszul" || o.path == "both") kz = koszul_table(mod, o.imax, o.jmax);
    if (o.path == "resolution" || o.path == "both") {
      if (o.module == "S") {
        GroebnerCache cache = cache_of(o);
        Ideal I = minimal_generators(image_ideal(v, &cache));
        res = minimal_betti(GradedPresentation::quotient(I), o.imax, o.jmax);
      } else {
        res = minimal_betti(present_E(mod, o.jmax + 1), o.imax, o.jmax);
      }
    }
    if (!kz && !res) throw MalformedInput("path must be koszul, resolution or both");
  }
  bool agree = !(kz && res) || kz->same_cells(*res);
  if (o.format == "json") {
    ojson j;
    j["fixture"] = name;
    j["module"] = o.fixture == "ideal" ? "S/I" : o.module;
    if (kz) j["koszul"] = ojson::parse(kz->to_json());
    if (res) j["resolution"] = ojson::parse(res->to_json());
    if (kz && res) j["agree"] = agree;
    std::cout << j.dump(2) << "\n";
  } else {
    if (o.format == "pretty") std::cout << name << " module " << (o.fixture == "ideal" ? "S/I" : o.module) << "\n";
    if (kz) print_table(*kz, o.format, std::cout);
    if (res) print_table(*res, o.format, std::cout);
    if (kz && res) std::cout << (agree ? "paths agree" : "paths DISAGREE") << "\n";
  }
  return agree ? kOk : kMismatch;
}

int cmd_table2(const Opts& o) {
  if (o.tmin < 0 || o.tmax > 4 || o.tmin > o.tmax) throw MalformedInput("t range must lie in [0,4]");
  Field f = Field::parse(o.field);
  GroebnerCache cache = cache_of(o);
  ojson rows = ojson::array();
  bool all = true;
  for (int t = o.tmin; t <= o.tmax; ++t) {
    Table2Row row = table2_row(t, o.seed, f, &cache);
    all = all && row.match;
    ojson r;
    r["t"] = t;
    r["ambient"] = row.ambient;
    r["first_normal_k"] = row.first_normal;
    r["regularity"] = row.regularity;
    r["expected_first_normal_k"] = row.expected.first;
    r["expected_regularity"] = row.expected.second;
    r["match"] = row.match;
    std::string defects;
    for (long x : row.defects) defects += (defects.empty() ? "" : ",") + std::to_string(x);
    r["defects"] = defects;
    if (row.heuristic) r["heuristic"] = true;
    rows.push_back(r);
  }
  if (o.format == "json") {
    std::cout << rows.dump(2) << "\n";
  } else {
    std::cout << "t\tambient\tfirst_normal_k\tregularity\texpected_first_normal_k\texpected_regularity\tmatch\tdefects";
    if (!f.is_rational()) std::cout << "\theuristic";
    std::cout << "\n";
    for (const auto& r : rows) {
      std::cout << r["t"] << "\t" << r["ambient"] << "\t" << r["first_normal_k"] << "\t" << r["regularity"] << "\t"
                << r["expected_first_normal_k"] << "\t" << r["expected_regularity"] << "\t"
                << (r["match"].get<bool>() ? "yes" : "no") << "\t" << r["defects"].get<std::string>();
      if (!f.is_rational()) std::cout << "\ttrue";
      std::cout << "\n";
    }
  }
  return all ? kOk : kMismatch;
}

int cmd_audit(const Opts& o) {
  std::vector<AuditReport> reports = run_suite(o.suite, Field::parse(o.field), o.seed);
  int violations = 0;
  ojson all = ojson::array();
  for (const auto& r : reports) {
    violations += r.violations();
    all.push_back(ojson::parse(r.to_json()));
  }
  bool heuristic = !Field::parse(o.field).is_rational();
  if (o.format == "json") {
    ojson j;
    j["suite"] = o.suite;
    if (heuristic) j["heuristic"] = true;
    j["reports"] = all;
    j["violations"] = violations;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << r.fixture << "\n";
      for (const auto& c : r.claims) {
        std::cout << "  " << (c.violated() ? "VIOLATION " : c.asserted ? "ok        " : "info      ") << c.name;
        if (c.k) std::cout << (c.name.rfind("curve_bound", 0) == 0 ? " l=" : " k=") << *c.k;
        std::cout << ": computed " << c.computed << " " << c.relation << " " << c.predicted;
        if (c.defect) std::cout << " (defect " << *c.defect << ")";
        if (!c.note.empty()) std::cout << "  [" << c.note << "]";
        std::cout << "\n";
      }
      for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
    }
    std::cout << violations << " violation(s)" << (heuristic ? " (heuristic: prime field)" : "") << "\n";
  }
  return violations == 0 ? kOk : kMismatch;
}

int cmd_build_e(const Opts& o) {
  if (o.bound < 1) throw MalformedInput("bound must be >= 1");
  std::cout << build_E(make_fixture(o), o.bound).to_json() << "\n";
  return kOk;
}

int cmd_koszul(const Opts& o) {
  std::string text;
  if (o.input.empty() || o.input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(o.input);
    if (!in) throw MalformedInput("cannot read '" + o.input + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  GradedModuleData e = GradedModuleData::from_json(text);
  print_table(koszul_table(e, o.imax, o.jmax), o.format, std::cout);
  return kOk;
}

int cmd_groebner(const Opts& o) {
  Field f = Field::parse(o.field);
  auto ring = Ring::standard(split(o.ring, ','));
  std::vector<Polynomial> gens;
  for (const auto& g : split(o.ideal, ';')) gens.push_back(Polynomial::parse(g, ring, f));
  GroebnerBasis gb = buchberger(Ideal(ring, f, gens));
  if (o.format == "json") {
    ojson j;
    j["order"] = gb.order;
    j["field"] = f.label();
    j["basis"] = ojson::array();
    for (const auto& g : gb.basis) j["basis"].push_back(g.to_string());
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& g : gb.basis) std::cout << g.to_string() << "\n";
  }
  return kOk;
}

void fixture_flags(CLI::App* c, Opts& o) {
  c->add_option("--fixture-config", o.fixture_config, "key = value fixture file");
  c->add_option("--fixture", o.fixture, "veronese | twisted-cubic | scroll | hyperelliptic | ideal");
  c->add_option("--n", o.n, "veronese: P^n");
  c->add_option("--d", o.d, "veronese: O(d)");
  c->add_option("--twists", o.twists, "scroll: comma separated a_i");
  c->add_option("--m", o.m, "hyperelliptic: L = m K_inf");
  c->add_option("--sextic", o.sextic, "hyperelliptic: c0,..,c6 (default x^6 - 1)");
  c->add_option("--t", o.t, "projection codimension")->check(CLI::NonNegativeNumber);
  c->add_option("--seed", o.seed, "projection seed");
  c->add_option("--retries", o.retries, "projection draws before giving up")->check(CLI::PositiveNumber);
  c->add_option("--field", o.field, "Q | Fp | F<prime>");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"syzlab: syzygies, normality and regularity of projected varieties"};
  app.set_config("--config", "", "key = value file with any of the flags");
  app.require_subcommand(1);
  app.fallthrough();
  Opts o;
  app.add_option("--format", o.format, "json | tsv | pretty")->check(CLI::IsMember({"json", "tsv", "pretty"}));
  app.add_option("--cache-dir", o.cache_dir, "Groebner basis cache (SYZLAB_CACHE_DIR overrides)");

  auto* betti = app.add_subcommand("betti", "Betti table by the Koszul and resolution paths");
  fixture_flags(betti, o);
  betti->add_option("--imax", o.imax, "last homological step");
  betti->add_option("--jmax", o.jmax, "last row");
  betti->add_option("--module", o.module, "S = coordinate ring, E = section module, R = k + V + E_2 + ...");
  betti->add_option("--path", o.path, "koszul | resolution | both");
  betti->add_option("--ring", o.ring, "ideal fixture: variable names");
  betti->add_option("--ideal", o.ideal, "ideal fixture: generators separated by ';'");

  auto* table2 = app.add_subcommand("table2", "normality and regularity of projected cubic Veronese surfaces");
  table2->add_option("--tmin", o.tmin);
  table2->add_option("--tmax", o.tmax);
  table2->add_option("--seed", o.seed);
  table2->add_option("--field", o.field);

  auto* audit = app.add_subcommand("audit", "theorem audits over a fixture suite");
  audit->add_option("--suite", o.suite, "green-g2 | scrolls | example1 | effect");
  audit->add_option("--seed", o.seed);
  audit->add_option("--field", o.field);

  auto* builde = app.add_subcommand("build-e", "section module E as JSON");
  fixture_flags(builde, o);
  builde->add_option("--bound", o.bound, "last degree");

  auto* koszul = app.add_subcommand("koszul", "Betti table of a module given as JSON");
  koszul->add_option("--input", o.input, "file (default stdin)");
  koszul->add_option("--imax", o.imax);
  koszul->add_option("--jmax", o.jmax);

  auto* groebner = app.add_subcommand("groebner", "reduced Groebner basis (grevlex)");
  groebner->add_option("--ring", o.ring, "variable names");
  groebner->add_option("--ideal", o.ideal, "generators separated by ';'")->required();
  groebner->add_option("--field", o.field);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadConfig;
  }

  try {
    for (auto* sub : {betti, builde})
      if (*sub && !o.fixture_config.empty()) apply_fixture_config(sub, o);
    if (*betti) return cmd_betti(o);
    if (*table2) return cmd_table2(o);
    if (*audit) return cmd_audit(o);
    if (*builde) return cmd_build_e(o);
    if (*koszul) return cmd_koszul(o);
    if (*groebner) return cmd_groebner(o);
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const RetriesExhausted& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const NotFound& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const MalformedInput& e) {
    std::cerr << "bad configuration: " << e.what() << "\n";
    return kBadConfig;
  } catch (const Unsupported& e) {
    std::cerr << "bad configuration: " << e.what() << "\n";
    return kBadConfig;
  } catch (const InsufficientData& e) {
    std::cerr << "bad configuration: " << e.what() << "\n";
    return kBadConfig;
  } catch (const IncompletePresentation& e) {
    std::cerr << "bad configuration: " << e.what() << "\n";
    return kBadConfig;
  } catch (const RangeTooSmall& e) {
    std::cerr << "bad configuration: " << e.what() << "\n";
    return kBadConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}
