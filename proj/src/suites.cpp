#include "syzlab/suites.hpp"

#include <algorithm>

#include "syzlab/errors.hpp"

namespace syz {

namespace {

const std::pair<int, int> kTable2[] = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}};

// Claims with a fixed expected value (outside the audit functions).
Claim expect(std::string name, std::optional<int> k, long predicted, long computed, std::string note = "") {
  return Claim{std::move(name), k, "==", predicted, computed, std::nullopt, true, std::move(note)};
}

AuditReport green_g2(const Field& f) {
  AuditReport rep;
  rep.fixture = "hyperelliptic genus 2, m = 3 and m = 4";
  Analyzer a3(hyperelliptic_g2(default_sextic(), 3, f));
  Analyzer a4(hyperelliptic_g2(default_sextic(), 4, f));
  const int w = 4;
  auto np = [&](Analyzer& a, int p) { return nps_check(a.E(w + 1), p, w, a.options()).holds; };
  rep.claims.push_back(expect("np", 0, 1, np(a3, 0), "m=3, degree 6"));
  rep.claims.push_back(expect("np", 1, 1, np(a3, 1), "m=3, degree 6 = 2g+2"));
  rep.claims.push_back(expect("np", 2, 0, np(a3, 2), "m=3: hyperelliptic, degree 2g+2"));
  rep.claims.push_back(expect("np", 3, 1, np(a4, 3), "m=4, degree 8 = 2g+1+3"));
  rep.claims.push_back(expect("np", 4, 0, np(a4, 4), "m=4: hyperelliptic, degree 2g+4"));
  rep.notes.push_back("Koszul rows j = 2.." + std::to_string(w) + " checked");
  return rep;
}

std::vector<AuditReport> scrolls(const Field& f, std::uint64_t seed) {
  std::vector<EmbeddedVariety> fx;
  fx.push_back(veronese(1, 3, f));
  fx.push_back(rational_scroll({1, 2}, f));
  fx.push_back(rational_scroll({2, 2}, f));
  fx.push_back(project(rational_scroll({2, 3}, f), 1, seed));
  fx.push_back(project(rational_scroll({3, 3}, f), 1, seed));
  fx.push_back(project(rational_scroll({3, 3}, f), 2, seed));
  fx.push_back(project(rational_scroll({4}, f), 1, seed));
  fx.push_back(project(hyperelliptic_g2(default_sextic(), 3, f), 1, seed));
  fx.push_back(project(hyperelliptic_g2(default_sextic(), 4, f), 2, seed));
  std::vector<AuditReport> out;
  for (const auto& v : fx) out.push_back(audit_bounds(v));
  return out;
}

std::vector<AuditReport> example1(const Field& f, std::uint64_t seed) {
  EmbeddedVariety base = hyperelliptic_g2(default_sextic(), 3, f);
  Analyzer a(project(base, 1, seed));
  AuditReport rep;
  rep.fixture = a.variety().descriptor();
  auto [normal, defect] = k_normality(a, 2);
  Claim c = expect("k_normality", 2, 0, normal, "h^0(O_P3(2)) = 10 < h^0(2B) = 11");
  c.defect = defect;
  rep.claims.push_back(c);
  rep.claims.push_back(expect("h1_ideal", 2, 1, ideal_sheaf_cohomology(a, 1, 2), "dim H^1(I_X(2))"));
  int reg = mumford_regularity(a, 8).mumford;
  rep.claims.push_back(expect("regularity", std::nullopt, 4, reg, "exactly 4-regular"));
  Analyzer b(base);
  rep.claims.push_back(expect("np", 2, 0, nps_check(b.E(5), 2, 4, b.options()).holds, "N_2 fails upstream"));
  AuditReport noma = audit_bounds(a);
  for (const auto& cl : noma.claims)
    if (cl.name == "curve_bound" && cl.k == 1)
      rep.claims.push_back(expect("curve_bound_equality", 1, cl.predicted, cl.computed, "6 - 3 + 2 - 1 = 4"));
  return {rep, audit_theorem_effect(base, 1, 1, seed)};
}

std::vector<AuditReport> effect(const Field& f, std::uint64_t seed) {
  std::vector<AuditReport> out;
  EmbeddedVariety v23 = veronese(2, 3, f);
  for (int t = 0; t <= 2; ++t) out.push_back(audit_theorem_effect(v23, 6, t, seed));
  out.push_back(audit_theorem_effect(veronese(2, 2, f), 3, 1, seed));
  EmbeddedVariety g4 = hyperelliptic_g2(default_sextic(), 4, f);
  for (int t = 1; t <= 3; ++t) out.push_back(audit_theorem_effect(g4, 3, t, seed));
  out.push_back(audit_theorem_effect(hyperelliptic_g2(default_sextic(), 3, f), 1, 1, seed));
  out.push_back(audit_theorem_effect(rational_scroll({3, 3}, f), 3, 2, seed));
  return out;
}

}  // namespace

std::pair<int, int> table2_expected(int t) {
  if (t < 0 || t > 4) throw MalformedInput("t range must lie in [0,4]");
  return kTable2[t];
}

Table2Row table2_row(int t, std::uint64_t seed, const Field& field, const GroebnerCache* cache) {
  Table2Row row;
  row.t = t;
  row.expected = table2_expected(t);
  EmbeddedVariety v = veronese(2, 3, field);
  if (t > 0) v = project(v, t, seed, 8, cache);
  Analyzer a(v);
  RegularityReport reg = mumford_regularity(a, 10);
  NormalityReport nr = normality_report(a, std::max(t + 3, reg.mumford));
  row.ambient = v.ambient();
  row.first_normal = nr.first_normal();
  row.regularity = reg.mumford;
  row.match = row.first_normal == row.expected.first && row.regularity == row.expected.second;
  for (const auto& rec : nr.records) row.defects.push_back(rec.defect);
  row.heuristic = !field.is_rational();
  return row;
}

std::vector<AuditReport> run_suite(const std::string& name, const Field& field, std::uint64_t seed) {
  if (name == "green-g2") return {green_g2(field)};
  if (name == "scrolls") return scrolls(field, seed);
  if (name == "example1") return example1(field, seed);
  if (name == "effect") return effect(field, seed);
  throw MalformedInput("unknown suite '" + name + "' (green-g2, scrolls, example1, effect)");
}

}  // namespace syz
