#include <random>

#include "doctest.h"
#include "syzlab/errors.hpp"
#include "syzlab/poly.hpp"

using namespace syz;

namespace {

// C(n + k, k) without overflow for the small sizes used here
long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

RingMap twisted_cubic() {
  auto S = Ring::standard("x", 4);
  auto T = Ring::standard({"s", "t"});
  std::vector<Polynomial> imgs;
  for (int i = 0; i < 4; ++i) imgs.push_back(Polynomial::monomial(T, Monomial::from_exponents({3 - i, i}), 1));
  return RingMap(S, T, imgs);
}

Polynomial random_poly(std::mt19937_64& rng, const RingPtr& R, int deg) {
  auto mons = monomials_of_degree(*R, deg);
  std::vector<Term> t;
  for (const auto& m : mons)
    if (rng() % 3 == 0) t.push_back({m, FieldElement(mpq_class(long(rng() % 11) - 5, 1 + long(rng() % 3)))});
  return Polynomial::from_terms(R, Field::rationals(), t);
}

}  // namespace

TEST_CASE("monomials_of_degree: named cases") {
  auto P2 = Ring::standard("x", 3);
  CHECK(monomials_of_degree(*P2, 3).size() == 10);
  auto zero = monomials_of_degree(*P2, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == Monomial());
  CHECK(monomials_of_degree(*Ring::standard({"s", "t"}), 6).size() == 7);
  CHECK(monomials_of_degree(*P2, -1).empty());
}

TEST_CASE("monomial counts are binomial and the list is strictly decreasing") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto R = Ring::standard("x", n);
    for (int d = 0; d <= 6; ++d) {
      auto mons = monomials_of_degree(*R, d);
      CHECK(long(mons.size()) == binom(long(n) - 1 + d, d));
      for (std::size_t i = 1; i < mons.size(); ++i) CHECK(R->compare(mons[i - 1], mons[i]) > 0);
    }
  }
}

TEST_CASE("grevlex order on three variables") {
  auto R = Ring::standard({"x", "y", "z"});
  auto m = [](std::vector<int> e) { return Monomial::from_exponents(e); };
  // x^2 > xy > y^2 > xz > yz > z^2
  auto mons = monomials_of_degree(*R, 2);
  std::vector<Monomial> expect = {m({2, 0, 0}), m({1, 1, 0}), m({0, 2, 0}), m({1, 0, 1}), m({0, 1, 1}), m({0, 0, 2})};
  CHECK(mons == expect);
  CHECK(R->compare(m({0, 0, 3}), m({2, 0, 0})) > 0);
}

TEST_CASE("weighted and bigraded rings") {
  auto W = std::make_shared<const Ring>(std::vector<std::string>{"y", "u", "w"},
                                        std::vector<std::vector<int>>{{3}, {1}, {1}});
  // degree 6: y^2, y*(deg 3 in u,w) x4, deg 6 in u,w x7
  CHECK(monomials_of_degree(*W, 6).size() == 1 + 4 + 7);
  auto B = std::make_shared<const Ring>(std::vector<std::string>{"s", "t", "l1", "l2"},
                                        std::vector<std::vector<int>>{{0, 1}, {0, 1}, {1, 2}, {1, 1}});
  for (const auto& mono : monomials_of_degree(*B, std::vector<int>{2, 4})) CHECK(B->multidegree(mono) == std::vector<int>{2, 4});
  // l1^2; l1 l2 * (s,t); l2^2 * deg 2 in s,t
  CHECK(monomials_of_degree(*B, std::vector<int>{2, 4}).size() == 1 + 2 + 3);
  CHECK_THROWS_AS(Ring({"a", "a"}, {{1}, {1}}), MalformedInput);
  CHECK_THROWS_AS(Ring({"a"}, {{0}}), MalformedInput);
}

TEST_CASE("polynomial arithmetic") {
  auto R = Ring::standard({"s", "t"});
  auto s = Polynomial::variable(R, 0), t = Polynomial::variable(R, 1);
  CHECK(((s + t) * (s - t)).to_string() == "s^2 - t^2");
  CHECK((s - s).is_zero());
  CHECK((s * s * t).multidegree() == std::vector<int>{3});
  CHECK_FALSE((s * s + t).is_homogeneous());
  auto other = Ring::standard({"a", "b"});
  CHECK_THROWS_AS(s + Polynomial::variable(other, 0), MalformedInput);
  CHECK_THROWS_AS(s + Polynomial::variable(R, 0, Field::prime(7)), MalformedInput);
}

TEST_CASE("parse and print round trip") {
  auto R = Ring::standard("x", 3);
  auto p = Polynomial::parse("3*x0^2*x1 - 1/2*x2^3", R);
  CHECK(p.size() == 2);
  CHECK(Polynomial::parse(p.to_string(), R) == p);
  CHECK(Polynomial::parse("  -x0 + 2/4 * x1*x1 ", R).to_string() == "1/2*x1^2 - x0");
  CHECK(Polynomial::parse("0", R).is_zero());
  CHECK(Polynomial::parse("x0 - x0", R).is_zero());
  CHECK(Polynomial::parse("5", R).to_string() == "5");
  CHECK_THROWS_AS(Polynomial::parse("x0 +", R), MalformedInput);
  CHECK_THROWS_AS(Polynomial::parse("q^2", R), MalformedInput);
  CHECK(Polynomial::parse("x0 + 32004*x1", R, Field::prime(32003)).to_string() == "x0 + x1");

  std::mt19937_64 rng(99);
  for (int i = 0; i < 30; ++i) {
    auto q = random_poly(rng, R, 1 + int(rng() % 4));
    CHECK(Polynomial::parse(q.to_string(), R) == q);
  }
}

TEST_CASE("ring map: twisted cubic") {
  auto f = twisted_cubic();
  auto S = f.source();
  CHECK(f.image_degree() == std::vector<int>{3});
  CHECK(apply_map(f, Polynomial::parse("x0*x2 - x1^2", S)).is_zero());
  CHECK(apply_map(f, Polynomial::parse("x0*x3 - x1*x2", S)).is_zero());
  CHECK(apply_map(f, Polynomial::parse("x0", S)).to_string() == "s^3");
  CHECK(apply_map(f, Polynomial::parse("x0*x3 + x1*x2", S)).to_string() == "2*s^3*t^3");
  CHECK_THROWS_AS(apply_map(f, Polynomial::parse("s", f.target())), MalformedInput);
}

TEST_CASE("ring maps are homomorphisms and identity maps fix everything") {
  auto f = twisted_cubic();
  auto S = f.source();
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 20; ++i) {
    auto p = random_poly(rng, S, 1 + int(rng() % 3));
    auto q = random_poly(rng, S, 1 + int(rng() % 3));
    CHECK(f.apply(p * q) == f.apply(p) * f.apply(q));
    auto q2 = random_poly(rng, S, 2);
    auto p2 = random_poly(rng, S, 2);
    CHECK(f.apply(p2 + q2) == f.apply(p2) + f.apply(q2));
    if (!p.is_zero()) CHECK(f.apply(p).multidegree() == std::vector<int>{3 * p.multidegree()[0]});
  }
  std::vector<Polynomial> vars;
  for (std::size_t v = 0; v < 4; ++v) vars.push_back(Polynomial::variable(S, v));
  RingMap id(S, S, vars);
  for (int i = 0; i < 10; ++i) {
    auto p = random_poly(rng, S, int(rng() % 4));
    CHECK(id.apply(p) == p);
  }
}

TEST_CASE("ring map construction is validated") {
  auto S = Ring::standard("x", 2);
  auto T = Ring::standard({"s", "t"});
  auto s = Polynomial::variable(T, 0), t = Polynomial::variable(T, 1);
  CHECK_THROWS_AS(RingMap(S, T, {s}), MalformedInput);
  CHECK_THROWS_AS(RingMap(S, T, {s, t * t}), MalformedInput);
  CHECK_THROWS_AS(RingMap(S, T, {s, s * s + t}), MalformedInput);
}
