#include <doctest.h>

#include <map>
#include <random>

#include "shilovkit/distinguish.hpp"
#include "shilovkit/verify.hpp"

using namespace shilovkit;

namespace {

Certificate dist(const char* a, const char* b) { return distinguish(parse_domain(a), parse_domain(b)); }

} // namespace

TEST_CASE("VI vs IV(27) separates at the pi_9 step") {
  const auto c = dist("VI", "IV(27)");
  const auto* s = c.separated();
  REQUIRE(s);
  CHECK(s->step == Step::Pi9);
  CHECK(s->invariant == "pi9_nonzero");
  CHECK(s->lhs == "yes");
  CHECK(s->rhs == "no");
  CHECK_FALSE(s->anchor.empty());
  CHECK(explain(c).find("pi9") != std::string::npos);
}

TEST_CASE("I(6,6) vs III(8) separates at the pi_2 step") {
  // Oracle: list tube Shilov dimensions <= 40 by family formula and confirm
  // 36 is hit by both I(6,6) (q^2) and III(8) (n(n+1)/2).
  std::multimap<std::int64_t, std::string> tube_dims;
  for (std::int64_t q = 1; q * q <= 40; ++q) tube_dims.emplace(q * q, "I(" + std::to_string(q) + "," + std::to_string(q) + ")");
  for (std::int64_t n = 2; n * (n + 1) / 2 <= 40; ++n) tube_dims.emplace(n * (n + 1) / 2, "III(" + std::to_string(n) + ")");
  auto [lo, hi] = tube_dims.equal_range(36);
  std::vector<std::string> at36;
  for (auto it = lo; it != hi; ++it) at36.push_back(it->second);
  CHECK(at36 == std::vector<std::string>{"I(6,6)", "III(8)"});

  const auto c = dist("I(6,6)", "III(8)");
  REQUIRE(c.separated());
  CHECK(c.separated()->step == Step::Pi2);
  CHECK(c.separated()->lhs == "no");
  CHECK(c.separated()->rhs == "yes");
}

TEST_CASE("V vs equal-dimension type I separates at the torsion step") {
  for (const char* other : {"I(5,4)", "I(7,2)"}) {
    const auto c = dist("V", other);
    REQUIRE(c.separated());
    CHECK(c.separated()->step == Step::Torsion);
    CHECK(c.separated()->invariant == "h_torsion_free");
    CHECK(c.separated()->lhs == "no");
    CHECK(c.separated()->rhs == "yes");
  }
}

TEST_CASE("II(7) vs I(6,3) separates on cover polynomials with generator steps 4 and 2") {
  const auto c = dist("II(7)", "I(6,3)");
  const auto* s = c.separated();
  REQUIRE(s);
  CHECK(s->step == Step::CoverPoincare);
  REQUIRE(s->lhs_generators);
  REQUIRE(s->rhs_generators);
  CHECK(s->lhs_generators->generators == DegreeMultiset{5, 9, 13});
  CHECK(s->rhs_generators->generators == DegreeMultiset{7, 9, 11});
  CHECK(s->lhs_generators->generators->progression_step() == 4);
  CHECK(s->rhs_generators->generators->progression_step() == 2);
  CHECK(s->lhs_generators->to_string() == "{5, 9, 13} (step 4)");
}

TEST_CASE("IV(8) vs I(1,1) x I(4,1) is inconclusive") {
  const auto c = dist("IV(8)", "I(1,1) x I(4,1)");
  REQUIRE(c.is_inconclusive());
  CHECK(c.step() == Step::Exhausted);
  CHECK(reducible_lie_ball_pattern(parse_domain("IV(8)"), parse_domain("I(1,1) x I(4,1)")) == 4);
  const auto text = explain(c);
  CHECK(text.find("homeomorphic") != std::string::npos);
  CHECK(text.find("irreducible") != std::string::npos);
}

TEST_CASE("generic inconclusive products do not claim the Lie ball pattern") {
  const auto c = dist("I(1,1) x I(2,1)", "I(2,2)");
  REQUIRE(c.is_inconclusive());
  CHECK_FALSE(reducible_lie_ball_pattern(parse_domain("I(1,1) x I(2,1)"), parse_domain("I(2,2)")));
  CHECK(explain(c).find("no licensed invariant") != std::string::npos);
}

TEST_CASE("isomorphic certificates") {
  const auto c = dist("I(3,3)", "I(3,3)");
  CHECK(c.is_isomorphic());
  CHECK(explain(c) == "identical canonical type I(3,3)");
  CHECK(dist("IV(6) x I(2,1)", "I(2,1) x IV(6)").is_isomorphic());
  CHECK_FALSE(dist("I(1,1) x I(4,1)", "I(1,1) x I(4,1) x I(1,1)").is_isomorphic());
}

TEST_CASE("earlier steps win when several invariants differ") {
  // Tube vs non-tube is decided before dimension.
  CHECK(dist("I(2,2)", "I(5,4)").separated()->step == Step::Pi1FreeRank);
  // Different dimensions within tube type.
  CHECK(dist("III(3)", "IV(7)").separated()->step == Step::ShilovDim);
  // Same dimension 27: VI vs III is impossible (27 is not triangular), VI vs IV(27) uses pi_9.
  CHECK(dist("VI", "IV(28)").separated()->step == Step::ShilovDim);
  // I(3,3) vs IV(9): tie at dimension 9, pi_9 unknown for IV(9), cover decides.
  CHECK(dist("I(3,3)", "IV(9)").separated()->step == Step::CoverPoincare);
}

TEST_CASE("property: symmetry and reflexivity over the bound-120 sweep") {
  const auto domains = enumerate_domains(120);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, domains.size() - 1);
  for (const auto& d : domains) CHECK(distinguish(d, d).is_isomorphic());
  for (int trial = 0; trial < 2000; ++trial) {
    const auto& a = domains[pick(rng)];
    const auto& b = domains[pick(rng)];
    const auto ab = distinguish(a, b);
    const auto ba = distinguish(b, a);
    CAPTURE(a.to_string());
    CAPTURE(b.to_string());
    CHECK(ab.step() == ba.step());
    if (const auto* s = ab.separated()) {
      const auto* t = ba.separated();
      REQUIRE(t);
      CHECK(s->invariant == t->invariant);
      CHECK(s->lhs == t->rhs);
      CHECK(s->rhs == t->lhs);
      CHECK(s->lhs != s->rhs);
    }
    if (a != b) CHECK_FALSE(ab.is_inconclusive());
  }
}

TEST_CASE("property: step 7 fires exactly when recovered generators differ") {
  const auto domains = enumerate_domains(200);
  std::size_t fired = 0;
  for (std::size_t i = 0; i < domains.size(); ++i) {
    for (std::size_t j = i + 1; j < domains.size(); ++j) {
      const auto c = distinguish(domains[i], domains[j]);
      const auto* s = c.separated();
      if (!s || s->step != Step::CoverPoincare) continue;
      ++fired;
      REQUIRE(s->lhs_generators);
      REQUIRE(s->rhs_generators);
      const auto& g1 = s->lhs_generators->generators;
      const auto& g2 = s->rhs_generators->generators;
      if (g1 && g2) CHECK(*g1 != *g2);
    }
  }
  CHECK(fired > 0);
}
