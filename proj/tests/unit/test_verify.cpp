#include <doctest.h>

#include <algorithm>

#include "../oracles.hpp"
#include "shilovkit/verify.hpp"

using namespace shilovkit;

namespace {

std::vector<std::string> names(const std::vector<DomainSpec>& ds) {
  std::vector<std::string> out;
  for (const auto& d : ds) out.push_back(d.to_string());
  return out;
}

bool has_pair(const std::vector<Coincidence>& cs, const char* a, const char* b) {
  const auto x = parse_domain(a), y = parse_domain(b);
  return std::any_of(cs.begin(), cs.end(), [&](const Coincidence& c) {
    return (c.lhs == x && c.rhs == y) || (c.lhs == y && c.rhs == x);
  });
}

} // namespace

TEST_CASE("enumerate_domains matches the brute-force grid") {
  CHECK(names(enumerate_domains(10)) ==
        std::vector<std::string>{"I(1,1)", "I(2,1)", "I(2,2)", "I(3,1)", "I(4,1)", "I(5,1)", "III(2)", "IV(5)"});
  CHECK(names(enumerate_domains(2)) == std::vector<std::string>{"I(1,1)"});
  for (std::int64_t bound : {3, 10, 33, 54, 100, 250}) {
    CAPTURE(bound);
    CHECK(names(enumerate_domains(bound)) == oracle::enumerate_by_grid(bound));
  }
  const auto at54 = names(enumerate_domains(54));
  CHECK(std::count(at54.begin(), at54.end(), "VI") == 1);
  CHECK(std::count(at54.begin(), at54.end(), "V") == 1);
  const auto at53 = names(enumerate_domains(53));
  CHECK(std::count(at53.begin(), at53.end(), "VI") == 0);
  CHECK_THROWS_AS(enumerate_domains(1), std::invalid_argument);
}

TEST_CASE("enumerate_products") {
  const auto ps = enumerate_products(6, 2);
  CHECK(names(ps) == std::vector<std::string>{"I(1,1)", "I(1,1) x I(1,1)", "I(1,1) x I(2,1)", "I(2,1)", "I(3,1)",
                                              "III(2)"});
  for (const auto& p : enumerate_products(30, 3)) {
    CHECK(ambient_dim(p) <= 30);
    CHECK(p.factors().size() <= 3);
  }
}

TEST_CASE("verify_theorem at small and medium bounds") {
  const auto r = verify_theorem(60);
  CHECK(r.verified());
  CHECK(r.failures.empty());
  CHECK(r.domain_count == enumerate_domains(60).size());
  CHECK(r.pair_count == r.domain_count * (r.domain_count - 1) / 2);
  std::vector<std::string> checks;
  for (const auto& c : r.identity_checks) {
    CHECK_MESSAGE(c.pass, c.name << ": " << c.detail);
    checks.push_back(c.name);
  }
  for (const char* n : {"tube_halving", "degree_sum", "nontube_shilov_dim", "lie_sphere_parity", "pi1_rank_vs_tube",
                        "type_v_alexander"})
    CHECK(std::find(checks.begin(), checks.end(), n) != checks.end());

  const auto vi = distinguish(parse_domain("VI"), parse_domain("IV(27)"));
  CHECK(vi.step() == Step::Pi9);
}

TEST_CASE("verify_theorem is deterministic across thread counts") {
  const auto a = verify_theorem(150, {1});
  const auto b = verify_theorem(150, {3});
  CHECK(a.domain_count == b.domain_count);
  CHECK(a.pair_count == b.pair_count);
  CHECK(a.failures.size() == b.failures.size());
  CHECK(a.verified());
  CHECK(b.verified());
}

TEST_CASE("property: domain counts are monotone in the bound") {
  std::size_t prev = 0;
  for (std::int64_t bound = 2; bound <= 200; bound += 7) {
    const auto n = enumerate_domains(bound).size();
    CHECK(n >= prev);
    prev = n;
  }
}

TEST_CASE("find_coincidences") {
  const auto cs = find_coincidences(20, 2);
  CHECK(has_pair(cs, "IV(6)", "I(1,1) x I(3,1)"));
  CHECK(has_pair(cs, "IV(8)", "I(1,1) x I(4,1)"));
  CHECK(has_pair(cs, "I(2,2)", "I(1,1) x I(2,1)"));
  CHECK_FALSE(has_pair(cs, "IV(5)", "I(1,1) x I(2,1)"));
  for (const auto& c : cs) {
    CHECK(c.lhs != c.rhs);
    CHECK(agree_on_known_fields(invariant_vector(c.lhs), invariant_vector(c.rhs)));
    CHECK(c.shared.shilov_dim == invariant_vector(c.lhs).shilov_dim);
    // Only products coincide: irreducibles are always separated.
    CHECK_FALSE((c.lhs.is_irreducible() && c.rhs.is_irreducible()));
  }
  CHECK(find_coincidences(20, 1).empty());
  CHECK(find_coincidences(60, 1).empty());
  CHECK_THROWS_AS(find_coincidences(20, 0), std::invalid_argument);

  // Deterministic output.
  const auto again = find_coincidences(20, 2);
  REQUIRE(again.size() == cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    CHECK(again[i].lhs == cs[i].lhs);
    CHECK(again[i].rhs == cs[i].rhs);
  }
}

TEST_CASE("every IV(2n) in range coincides with I(1,1) x I(n,1)") {
  const auto cs = find_coincidences(40, 2);
  for (std::int64_t n = 3; n <= 10; ++n) {
    const auto iv = "IV(" + std::to_string(2 * n) + ")";
    const auto prod = "I(1,1) x I(" + std::to_string(n) + ",1)";
    CAPTURE(n);
    CHECK(has_pair(cs, iv.c_str(), prod.c_str()));
  }
}
