#include <algorithm>

#include "doctest.h"
#include "json.hpp"
#include "syzlab/errors.hpp"
#include "syzlab/geometry.hpp"
#include "syzlab/koszul.hpp"

using namespace syz;

namespace {

long binom(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// k[z_0..z_{n-1}] itself as graded module data (monomials of degree l in
// lex order, multiplication by z_a).
GradedModuleData polynomial_ring(std::size_t n, int bound) {
  auto ring = Ring::standard("z", n);
  std::vector<std::vector<Monomial>> mons;
  for (int l = 0; l <= bound; ++l) mons.push_back(monomials_of_degree(*ring, l));
  GradedModuleData e;
  e.dimV = n;
  for (const auto& m : mons) e.dims.push_back(m.size());
  e.mult.resize(bound);
  for (int l = 0; l < bound; ++l)
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<SparseVector> cols;
      std::vector<int> ex(n, 0);
      ex[a] = 1;
      Monomial za = Monomial::from_exponents(ex);
      for (const auto& mu : mons[l]) {
        auto it = std::find(mons[l + 1].begin(), mons[l + 1].end(), mu * za);
        cols.push_back({{static_cast<std::uint32_t>(it - mons[l + 1].begin()), FieldElement(1)}});
      }
      e.mult[l].push_back(Matrix::from_columns(mons[l + 1].size(), cols, Field::rationals()));
    }
  return e;
}

// Euler characteristic of the degree-d strand of the Koszul complex, from the
// dimensions alone: sum_i (-1)^i C(n, i) dim E_{d-i}.
long koszul_euler(const GradedModuleData& e, int d) {
  long s = 0;
  for (int i = 0; i <= static_cast<int>(e.dimV) && i <= d; ++i)
    s += (i % 2 ? -1 : 1) * binom(static_cast<long>(e.dimV), i) * static_cast<long>(e.dims[d - i]);
  return s;
}

void check_euler(const GradedModuleData& e, const BettiTable& b, int dmax) {
  for (int d = 0; d <= dmax; ++d) {
    long s = 0;
    for (int i = 0; i <= std::min(d, b.imax); ++i) s += (i % 2 ? -1 : 1) * b.at(i, d - i);
    CHECK_MESSAGE(s == koszul_euler(e, d), "internal degree " << d);
  }
}

}  // namespace

TEST_CASE("rational normal curves have the Eagon-Northcott Betti numbers") {
  for (int d = 2; d <= 5; ++d) {
    GradedModuleData e = build_E(veronese(1, d), 4);
    BettiTable b = koszul_table(e, d, 3);
    CHECK(b.at(0, 0) == 1);
    for (int i = 1; i <= d; ++i) {
      CHECK_MESSAGE(b.at(i, 1) == i * binom(d, i + 1), "d=" << d << " i=" << i);
      CHECK(b.at(i, 2) == 0);
      CHECK(b.at(i, 3) == 0);
    }
  }
}

TEST_CASE("the polynomial ring has only k_{0,0}") {
  GradedModuleData e = polynomial_ring(3, 5);
  BettiTable b = koszul_table(e, 3, 4);
  for (const auto& [cell, k] : b.entries) CHECK(k == (cell == std::make_pair(0, 0) ? 1 : 0));
}

TEST_CASE("k_{0,1} of E is the codimension t of V") {
  for (int t = 1; t <= 2; ++t) {
    GradedModuleData e = build_E(project(veronese(2, 3), t, 7), 2);
    CHECK(koszul_betti(e, 0, 1) == t);
    CHECK(koszul_betti(e, 0, 0) == 1);
  }
}

TEST_CASE("Betti tables satisfy the Koszul Euler characteristic") {
  GradedModuleData c = build_E(veronese(1, 3), 5);
  check_euler(c, koszul_table(c, 4, 4), 4);
  GradedModuleData g = generated_by_degree_zero(build_E(project(hyperelliptic_g2(default_sextic(), 3), 1, 1), 5));
  check_euler(g, koszul_table(g, 4, 4), 4);
  GradedModuleData v = build_E(veronese(2, 2), 4);
  check_euler(v, koszul_table(v, 6, 3), 3);
}

TEST_CASE("cubic Veronese surface: N_6 holds, N_7 fails at k_{7,2}") {
  GradedModuleData e = build_E(veronese(2, 3), 5);
  NpsResult r6 = nps_check(e, 6, 4);
  CHECK(r6.holds);
  CHECK(r6.window == 4);
  NpsResult r7 = nps_check(e, 7, 4);
  CHECK_FALSE(r7.holds);
  REQUIRE(r7.first_failure);
  CHECK(*r7.first_failure == std::make_pair(7, 2));
  CHECK(koszul_betti(e, 7, 2) == 1);
}

TEST_CASE("genus 2, degree 6: N_1 holds and N_2 fails") {
  GradedModuleData e = build_E(hyperelliptic_g2(default_sextic(), 3), 5);
  CHECK(nps_check(e, 1).holds);
  NpsResult r = nps_check(e, 2);
  CHECK_FALSE(r.holds);
  CHECK(*r.first_failure == std::make_pair(2, 2));
}

TEST_CASE("nps_check needs the H^1 certificate") {
  GradedModuleData e = polynomial_ring(2, 5);
  CHECK_THROWS_AS(nps_check(e, 1), VanishingCertificateMissing);
}

TEST_CASE("non-commuting multiplication maps are rejected") {
  GradedModuleData e = polynomial_ring(2, 3);
  std::swap(e.mult[1][0], e.mult[1][1]);
  CHECK_THROWS_AS(e.validate(true), MalformedInput);
  CHECK_THROWS_AS(KoszulCalculator{e}, MalformedInput);
}

TEST_CASE("graded module JSON round trip") {
  GradedModuleData e = build_E(project(veronese(2, 2), 1, 3), 3);
  std::string text = e.to_json();
  GradedModuleData back = GradedModuleData::from_json(text);
  CHECK(back.to_json() == text);
  CHECK(koszul_table(back, 3, 2).same_cells(koszul_table(e, 3, 2)));
  CHECK_THROWS_AS(GradedModuleData::from_json("{\"dimV\": 2}"), MalformedInput);
  CHECK_THROWS_AS(GradedModuleData::from_json("not json"), MalformedInput);
}

TEST_CASE("missing pieces and size caps") {
  GradedModuleData e = build_E(veronese(2, 2), 2);
  CHECK_THROWS_AS(koszul_betti(e, 1, 2), InsufficientData);
  KoszulOptions tiny;
  tiny.cap = 10;
  CHECK_THROWS_AS(koszul_betti(e, 2, 1, tiny), ResourceLimit);
}

TEST_CASE("mod-p certification agrees with plain rational ranks") {
  GradedModuleData e = generated_by_degree_zero(build_E(project(hyperelliptic_g2(default_sextic(), 3), 1, 2), 4));
  KoszulOptions plain;
  plain.certify_mod_p = false;
  BettiTable a = koszul_table(e, 4, 3);
  BettiTable b = koszul_table(e, 4, 3, plain);
  CHECK(a.same_cells(b));
  CHECK_FALSE(a.heuristic());
}

TEST_CASE("prime field tables are marked heuristic") {
  GradedModuleData e = build_E(veronese(1, 3, Field::prime(32003)), 3);
  BettiTable b = koszul_table(e, 2, 2);
  CHECK(b.heuristic());
  CHECK(nlohmann::json::parse(b.to_json()).at("heuristic") == true);
  CHECK(b.at(1, 1) == 3);
}

TEST_CASE("Artinian reduction keeps the Betti numbers") {
  GradedModuleData e = build_E(veronese(2, 2), 5);
  GradedModuleData r = artinian_reduction(e, 3, 11);
  CHECK(r.dimV == 3);
  BettiTable full = koszul_table(e, 3, 3);
  BettiTable red = koszul_table(r, 3, 3);
  CHECK(full.same_cells(red));
  GradedModuleData g = build_E(hyperelliptic_g2(default_sextic(), 3), 5);
  CHECK(koszul_table(artinian_reduction(g, 2, 5), 3, 3).same_cells(koszul_table(g, 3, 3)));
}

TEST_CASE("submodules: S(X) and R") {
  EmbeddedVariety v = project(hyperelliptic_g2(default_sextic(), 3), 1, 1);
  GradedModuleData e = build_E(v, 4);
  GradedModuleData s = generated_by_degree_zero(e);
  // h^0(O_P3(2)) = 10 < h^0(2B) = 11
  CHECK(s.dims[2] == 10);
  CHECK(e.dims[2] == 11);
  CHECK(restriction_ranks(e) == std::vector<std::size_t>(s.dims.begin(), s.dims.end()));
  GradedModuleData r = birkenhake(e);
  CHECK(r.dims[1] == 4);
  CHECK(r.dims[2] == 11);
  CHECK(r.dims[3] == e.dims[3]);
}
