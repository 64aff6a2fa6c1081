#include "syzlab/checks.hpp"

#include <algorithm>
#include <json.hpp>

#include "syzlab/errors.hpp"

namespace syz {

namespace {

long binom(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long q = 1; q <= k; ++q) r = r * (n - k + q) / q;
  return r;
}

// h^r(O_{P^r}(k)) by Serre duality.
long top_cohomology_of_P(int r, int k) { return k <= -r - 1 ? binom(-k - 1, r) : 0; }

std::string fixture_name(const EmbeddedVariety& v) { return v.descriptor(); }

}  // namespace

Analyzer::Analyzer(EmbeddedVariety v, KoszulOptions opts) : v_(std::move(v)), opts_(opts) {}

void Analyzer::ensure(int bound) {
  if (bound <= bound_) return;
  // Rebuilding is cheap next to the Koszul work; grow in steps of two so a
  // scan over k does not rebuild every time.
  int b = std::max(bound, bound_ + 2);
  e_ = build_E(v_, b);
  s_ = generated_by_degree_zero(e_);
  bound_ = b;
}

const GradedModuleData& Analyzer::E(int bound) {
  ensure(bound);
  return e_;
}

const GradedModuleData& Analyzer::S(int bound) {
  ensure(bound);
  return s_;
}

long Analyzer::defect(int k) {
  if (k < 0) return 0;
  ensure(k);
  return static_cast<long>(e_.dims[k]) - static_cast<long>(s_.dims[k]);
}

int NormalityReport::first_normal() const {
  int k0 = records.empty() ? 1 : records.back().k + 1;
  for (auto it = records.rbegin(); it != records.rend() && it->defect == 0; ++it) k0 = it->k;
  return k0;
}

NormalityReport normality_report(Analyzer& a, int kmax) {
  if (kmax < 1) throw MalformedInput("normality window must start at k = 1");
  NormalityReport rep;
  const auto& s = a.S(kmax);
  const auto& e = a.E(kmax);
  long n = static_cast<long>(a.variety().dimV());
  for (int k = 1; k <= kmax; ++k) {
    NormalityRecord r;
    r.k = k;
    r.sym_dim = binom(n - 1 + k, k);
    r.rank = static_cast<long>(s.dims[k]);
    r.e_dim = static_cast<long>(e.dims[k]);
    r.defect = r.e_dim - r.rank;
    if (r.defect < 0) throw Error("restriction rank exceeds dim E_k");
    rep.records.push_back(r);
  }
  return rep;
}

std::pair<bool, long> k_normality(Analyzer& a, int k) {
  if (k < 1) throw MalformedInput("k-normality needs k >= 1");
  long d = a.defect(k);
  return {d == 0, d};
}

std::pair<bool, long> k_normality(const EmbeddedVariety& v, int k) {
  Analyzer a(v);
  return k_normality(a, k);
}

long ideal_sheaf_cohomology(Analyzer& a, int i, int k) {
  const auto& v = a.variety();
  int r = v.ambient();
  if (r < 2 || v.dim() >= r) throw Unsupported("needs a proper subvariety of P^r, r >= 2");
  if (i < 1) throw Unsupported("ideal sheaf cohomology is tabulated for i >= 1");
  if (i > r) return 0;
  if (i == 1) return k >= 1 ? a.defect(k) : 0;
  if (i < r) return oracle_h(v, i - 1, k);
  return oracle_h(v, r - 1, k) + top_cohomology_of_P(r, k);
}

long ideal_sheaf_cohomology(const EmbeddedVariety& v, int i, int k) {
  Analyzer a(v);
  return ideal_sheaf_cohomology(a, i, k);
}

RegularityReport mumford_regularity(Analyzer& a, int search_bound, bool with_betti) {
  if (search_bound < 2) throw MalformedInput("regularity search bound must be >= 2");
  int r = a.variety().ambient();
  RegularityReport rep;
  rep.search_bound = search_bound;
  auto regular = [&](int m) {
    bool ok = true;
    for (int i = 1; i <= r; ++i) {
      long h = ideal_sheaf_cohomology(a, i, m - i);
      rep.table[{i, m - i}] = h;
      if (h != 0) ok = false;
    }
    return ok;
  };
  int found = 0;
  for (int m = 1; m <= search_bound && !found; ++m)
    if (regular(m)) found = m;
  if (!found) throw NotFound("no m <= " + std::to_string(search_bound) + " is a regularity index");
  rep.mumford = found;
  // m-regular implies (m+1)-regular; check it on the table as a sanity test.
  if (!regular(found + 1))
    throw Error("table is " + std::to_string(found) + "-regular but not " + std::to_string(found + 1) + "-regular");

  if (with_betti) {
    int jmax = found + 1;
    const auto& s = a.S(jmax + 1);
    BettiTable b = koszul_table(s, static_cast<int>(s.dimV), jmax, a.options());
    try {
      rep.betti = regularity_from_betti(b);
      rep.agreement = *rep.betti == found;
    } catch (const RangeTooSmall& ex) {
      rep.agreement = false;
      rep.note = std::string("Betti regularity undecided: ") + ex.what();
    }
  }
  return rep;
}

RegularityReport mumford_regularity(const EmbeddedVariety& v, int search_bound, bool with_betti) {
  Analyzer a(v);
  return mumford_regularity(a, search_bound, with_betti);
}

GenerationReport generation_degrees(Analyzer& a) {
  int reg = mumford_regularity(a, 16).mumford;
  const auto& s = a.S(reg);
  KoszulCalculator kc(s, a.options());
  GenerationReport rep;
  for (int j = 1; j + 1 <= reg; ++j) {
    long k = kc.betti(1, j);
    if (k == 0) continue;
    rep.degrees[j + 1] = k;
    rep.max_degree = j + 1;
  }
  return rep;
}

int generation_degree(const EmbeddedVariety& v) {
  Analyzer a(v);
  return generation_degrees(a).max_degree;
}

bool Claim::holds() const {
  if (relation == "<=") return computed <= predicted;
  return computed == predicted;
}

int AuditReport::violations() const {
  return static_cast<int>(std::count_if(claims.begin(), claims.end(), [](const Claim& c) { return c.violated(); }));
}

std::string AuditReport::to_json() const {
  nlohmann::ordered_json j;
  j["fixture"] = fixture;
  j["claims"] = nlohmann::ordered_json::array();
  for (const auto& c : claims) {
    nlohmann::ordered_json o;
    o["name"] = c.name;
    if (c.k) o[c.name == "curve_bound" ? "l" : "k"] = *c.k;
    bool boolean = c.name == "k_normality" || c.name == "nps" || c.name == "np" || c.name == "h1_vanishing";
    if (boolean) {
      o["predicted"] = c.predicted != 0;
      o["computed"] = c.computed != 0;
    } else {
      o["relation"] = c.relation;
      o["predicted"] = c.predicted;
      o["computed"] = c.computed;
    }
    if (c.defect) o["defect"] = *c.defect;
    o["asserted"] = c.asserted;
    o["violation"] = c.violated();
    if (!c.note.empty()) o["note"] = c.note;
    j["claims"].push_back(o);
  }
  j["violations"] = violations();
  if (!notes.empty()) j["notes"] = notes;
  return j.dump(2);
}

AuditReport audit_theorem_effect(const EmbeddedVariety& v_base, int p, int t, std::uint64_t seed, int window) {
  if (!v_base.complete()) throw MalformedInput("the base embedding must be linearly normal");
  if (t < 0 || t > p) throw MalformedInput("need 0 <= t <= p");
  AuditReport rep;
  rep.fixture = fixture_name(v_base) + " p=" + std::to_string(p) + " t=" + std::to_string(t);

  bool h1 = certify_h1_vanishing(v_base);
  rep.claims.push_back({"h1_vanishing", std::nullopt, "==", 1, h1, std::nullopt, false,
                        "H^1(L^j) = 0 for j >= 2 from the cohomology oracle"});
  Analyzer base(v_base);
  NpsResult np = nps_check(base.E(window + 1), p, window, base.options());
  Claim npc{"np", p, "==", 1, np.holds, std::nullopt, false, ""};
  if (np.first_failure)
    npc.note = "k_" + std::to_string(np.first_failure->first) + "," + std::to_string(np.first_failure->second) + " != 0";
  rep.claims.push_back(npc);
  if (!h1 || !np.holds) {
    rep.notes.push_back("hypotheses not met: nothing is predicted");
    return rep;
  }

  EmbeddedVariety proj = project(v_base, t, seed);
  rep.fixture = fixture_name(proj) + " from " + fixture_name(v_base) + " p=" + std::to_string(p);
  Analyzer a(proj);
  int q = p - t;
  NpsResult nps = nps_check(a.E(window + 1), q, window, a.options());
  Claim nc{"nps", q, "==", 1, nps.holds, std::nullopt, true, ""};
  if (nps.first_failure)
    nc.note = "k_" + std::to_string(nps.first_failure->first) + "," + std::to_string(nps.first_failure->second) + " != 0";
  rep.claims.push_back(nc);

  bool ns1 = q >= 1 ? nps.holds : nps_check(a.E(window + 1), 1, window, a.options()).holds;
  bool predicted = t <= p - 1 || ns1;
  if (t <= p - 1)
    rep.notes.push_back("t <= p-1: normality, regularity and generation follow from N_p");
  else if (ns1)
    rep.notes.push_back("t = p but N^S_1 holds: normality, regularity and generation follow from N^S_1");
  else
    rep.notes.push_back("t = p and N^S_1 fails: normality, regularity and generation are reported, not predicted");

  int m = regularity_of_OX(v_base);
  int bound = std::max(m + 1, t + 2);
  RegularityReport reg = mumford_regularity(a, bound + 4);
  rep.claims.push_back({"regularity", std::nullopt, "<=", bound, reg.mumford, std::nullopt, predicted,
                        "m = " + std::to_string(m)});
  int kmax = std::max(t + 3, reg.mumford);
  for (int k = t + 1; k <= kmax; ++k) {
    auto [normal, defect] = k_normality(a, k);
    rep.claims.push_back({"k_normality", k, "==", 1, normal, defect, predicted, ""});
  }
  rep.notes.push_back("normality for k > " + std::to_string(kmax) + " follows from " +
                      std::to_string(reg.mumford) + "-regularity (k-normal for k >= reg - 1)");
  GenerationReport gen = generation_degrees(a);
  std::string multiset;
  for (auto [deg, cnt] : gen.degrees) multiset += (multiset.empty() ? "" : ", ") + std::to_string(cnt) + " in degree " + std::to_string(deg);
  rep.claims.push_back({"generation_degree", std::nullopt, "<=", t + 2, gen.max_degree, std::nullopt, predicted,
                        "minimal generators: " + multiset});
  rep.notes.push_back("Koszul rows j = 2.." + std::to_string(window) + " checked");
  return rep;
}

AuditReport audit_bounds(Analyzer& a) {
  const auto& v = a.variety();
  AuditReport rep;
  rep.fixture = fixture_name(v);
  int n = v.dim(), d = v.degree(), r = v.ambient();
  bool rational_scroll = v.kind == FixtureKind::scroll || (v.kind == FixtureKind::veronese && v.n == 1);
  bool curve = n == 1;
  if (!rational_scroll && !curve) throw Unsupported("bounds apply to rational scrolls and curves");
  int reg = mumford_regularity(a, d + 2).mumford;
  if (rational_scroll)
    rep.claims.push_back({"scroll_bound", std::nullopt, "<=", d - (r - n) + 1, reg, std::nullopt, true,
                          "reg <= d - (r - n) + 1"});
  if (curve && r >= 3) {
    int genus = v.kind == FixtureKind::hyperelliptic ? 2 : 0;
    for (int l = 0; l <= std::min(r - 2, genus); ++l) {
      // The excluded case: complete embeddings of degree >= 2g + 2 with l = g.
      if (v.complete() && d >= 2 * genus + 2 && l == genus) continue;
      Claim c{"curve_bound", l, "<=", d - r + 2 - l, reg, std::nullopt, true, "reg <= d - r + 2 - l"};
      rep.claims.push_back(c);
    }
  }
  return rep;
}

AuditReport audit_bounds(const EmbeddedVariety& v) {
  Analyzer a(v);
  return audit_bounds(a);
}

NpsResult ntilde_check(Analyzer& a, int p, int window) {
  GradedModuleData r = birkenhake(a.E(window + 1));
  // R needs no H^1 certificate: the window is what is reported.
  KoszulCalculator kc(r, a.options());
  NpsResult res;
  res.window = window;
  res.holds = true;
  for (int i = 0; i <= p && res.holds; ++i)
    for (int j = 2; j <= window; ++j)
      if (kc.betti(i, j) != 0) {
        res.holds = false;
        res.first_failure = std::make_pair(i, j);
        break;
      }
  return res;
}

bool ntilde_check(const EmbeddedVariety& v, int p) {
  Analyzer a(v);
  return ntilde_check(a, p).holds;
}

}  // namespace syz
