#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "shilovkit/graded.hpp"

using namespace shilovkit;

namespace {

GradedPoly from_oracle(const std::map<std::int64_t, long long>& coeffs) {
  std::map<GradedPoly::Degree, mpz_class> m;
  for (auto [d, c] : coeffs) m[d] = static_cast<long>(c);
  return GradedPoly(std::move(m));
}

GradedPoly poly(std::initializer_list<std::pair<const GradedPoly::Degree, mpz_class>> terms) {
  return GradedPoly(std::map<GradedPoly::Degree, mpz_class>(terms));
}

} // namespace

TEST_CASE("GradedPoly basics") {
  CHECK(GradedPoly().is_zero());
  CHECK(GradedPoly().to_string() == "0");
  CHECK(GradedPoly::one().to_string() == "1");
  CHECK(poly({{0, 1}, {3, 0}, {5, 2}}).terms().size() == 2); // zero dropped
  CHECK(poly({{0, 1}, {1, 1}, {5, 1}, {6, 1}}).to_string() == "1 + t^1 + t^5 + t^6");
  CHECK(poly({{0, -1}, {2, 3}, {4, -1}}).to_string() == "-1 + 3*t^2 - t^4");
  CHECK(poly({{0, 1}, {1, 1}}) + poly({{1, -1}}) == GradedPoly::one());
  CHECK_THROWS_AS(poly({{-1, 1}}), std::invalid_argument);

  const auto p = poly({{0, 1}, {2, 3}, {5, 1}});
  CHECK(p.evaluate(2) == 1 + 12 + 32);
  CHECK(p.evaluate(0) == 1);
  CHECK(p.evaluate(-1) == 1 + 3 - 1);
  CHECK(p.coefficient(2) == 3);
  CHECK(p.coefficient(3) == 0);
}

TEST_CASE("exterior_poincare examples") {
  CHECK(exterior_poincare({}) == GradedPoly::one());
  CHECK(exterior_poincare({1, 5}).to_string() == "1 + t^1 + t^5 + t^6");
  // Expected value produced by the subset-enumeration oracle, then frozen.
  CHECK(from_oracle(oracle::exterior_by_subsets({1, 3, 5})) ==
        poly({{0, 1}, {1, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {8, 1}, {9, 1}}));
  CHECK(exterior_poincare({1, 3, 5}).to_string() == "1 + t^1 + t^3 + t^4 + t^5 + t^6 + t^8 + t^9");
  CHECK(exterior_poincare({3, 3}).to_string() == "1 + 2*t^3 + t^6");
  CHECK_THROWS_AS(DegreeMultiset({0, 3}), std::invalid_argument);
}

TEST_CASE("kunneth examples") {
  const auto s1 = exterior_poincare({1});
  CHECK(kunneth(s1, exterior_poincare({5})).to_string() == "1 + t^1 + t^5 + t^6");
  const auto p = exterior_poincare({3, 7, 9});
  CHECK(kunneth(p, GradedPoly::one()) == p);
  CHECK(kunneth(s1, exterior_poincare({26})).to_string() == "1 + t^1 + t^26 + t^27");
  CHECK(kunneth(p, GradedPoly()).is_zero());
}

TEST_CASE("recover_generators examples and failures") {
  CHECK(recover_generators(GradedPoly::one()).empty());
  CHECK(recover_generators(poly({{0, 1}, {1, 1}, {5, 1}, {6, 1}})) == DegreeMultiset{1, 5});
  CHECK(recover_generators(exterior_poincare({5, 9, 13})) == DegreeMultiset{5, 9, 13});
  CHECK(recover_generators(exterior_poincare({3, 3, 7})) == DegreeMultiset{3, 3, 7});

  CHECK_THROWS_AS(recover_generators(poly({{0, 1}, {2, 1}})), NotExteriorForm);
  CHECK_THROWS_AS(recover_generators(GradedPoly()), NotExteriorForm);
  CHECK_THROWS_AS(recover_generators(poly({{0, 2}, {1, 2}})), NotExteriorForm);
  CHECK_THROWS_AS(recover_generators(poly({{0, 1}, {1, -1}})), NotExteriorForm);
  CHECK_THROWS_AS(recover_generators(poly({{0, 1}, {1, 2}})), NotExteriorForm);
  CHECK_THROWS_AS(recover_generators(poly({{0, 1}, {1, 1}, {2, 1}})), NotExteriorForm);
  CHECK_THROWS_AS(recover_generators(poly({{0, 1}, {3, 1}, {5, 1}})), NotExteriorForm);
  // (1+t)(1+t^8): the Z-cover of an odd Lie sphere is not exterior on odd generators.
  CHECK_THROWS_AS(recover_generators(kunneth(exterior_poincare({1}), exterior_poincare({8}))),
                  NotExteriorForm);
}

TEST_CASE("top_degree") {
  // Oracle: the largest subset sum is the full sum 1+3+5+7 = 16 = dim U(4).
  const auto expanded = oracle::exterior_by_subsets({1, 3, 5, 7});
  CHECK(expanded.rbegin()->first == 16);
  CHECK(top_degree(exterior_poincare({1, 3, 5, 7})) == 16);
  CHECK(top_degree(GradedPoly::one()) == 0);
  CHECK(top_degree(kunneth(exterior_poincare({1}), exterior_poincare({5}))) == 6);
  CHECK_THROWS_AS(top_degree(GradedPoly()), std::domain_error);
}

TEST_CASE("DegreeMultiset helpers") {
  CHECK(DegreeMultiset{9, 5, 13}.to_string() == "{5, 9, 13}");
  CHECK(DegreeMultiset{9, 5, 13}.progression_step() == 4);
  CHECK(DegreeMultiset{7, 9, 11}.progression_step() == 2);
  CHECK(DegreeMultiset{27}.progression_step() == 0);
  CHECK(DegreeMultiset{1, 3, 7}.progression_step() == 0);
  CHECK(DegreeMultiset{1, 5}.merged({3}) == DegreeMultiset{1, 3, 5});
  CHECK(DegreeMultiset{1, 5, 9}.sum() == 15);
}

TEST_CASE("property: exterior polynomials against the subset oracle and structural laws") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto degs = oracle::random_odd_multiset(rng, 41, 8);
    const DegreeMultiset s(degs);
    const auto p = exterior_poincare(s);

    CHECK(p == from_oracle(oracle::exterior_by_subsets(degs)));
    CHECK(recover_generators(p) == s);
    CHECK(top_degree(p) == s.sum());
    CHECK(euler_characteristic(p) == (s.empty() ? 1 : 0));
    CHECK(is_palindromic(p));
    for (const auto& [deg, c] : p.terms()) CHECK(c > 0);

    const DegreeMultiset t(oracle::random_odd_multiset(rng, 41, 8));
    CHECK(exterior_poincare(s.merged(t)) == kunneth(p, exterior_poincare(t)));
  }
}

TEST_CASE("is_palindromic rejects lopsided polynomials") {
  CHECK_FALSE(is_palindromic(poly({{0, 1}, {1, 2}, {2, 1}, {3, 3}})));
  CHECK(is_palindromic(poly({{0, 1}, {1, 2}, {2, 2}, {3, 1}})));
}
