// Test-only reference computations. These deliberately avoid the library's
// code paths: expansion by subset enumeration instead of repeated
// multiplication, dimension formulas written from matrix sizes instead of
// the tables, and so on.

#ifndef SHILOVKIT_TESTS_ORACLES_HPP_
#define SHILOVKIT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

/// Coefficients of prod (1 + t^d) by summing t^{sum S} over all subsets S.
inline std::map<std::int64_t, long long> exterior_by_subsets(const std::vector<std::int64_t>& degrees) {
  std::map<std::int64_t, long long> out;
  const std::size_t n = degrees.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) s += degrees[i];
    ++out[s];
  }
  return out;
}

/// Real dimension of the domain from its matrix model: p x q complex
/// matrices; n x n skew-symmetric (n(n-1)/2 complex entries); n x n
/// symmetric (n(n+1)/2 complex entries); the Lie ball in C^n; the
/// exceptional ones have complex dimension 16 and 27.
inline std::int64_t complex_dim(char family, std::int64_t a, std::int64_t b = 0) {
  switch (family) {
    case '1': return a * b;
    case '2': return a * (a - 1) / 2;
    case '3': return a * (a + 1) / 2;
    case '4': return a;
    case '5': return 16;
    case '6': return 27;
  }
  return -1;
}

/// Brute-force listing of canonical irreducibles with real dimension <= bound,
/// scanning a generous parameter grid.
inline std::vector<std::string> enumerate_by_grid(std::int64_t bound) {
  std::vector<std::tuple<int, std::int64_t, std::int64_t, std::string>> rows;
  for (std::int64_t p = 1; p <= bound; ++p)
    for (std::int64_t q = 1; q <= p; ++q)
      if (2 * complex_dim('1', p, q) <= bound)
        rows.emplace_back(1, p, q, "I(" + std::to_string(p) + "," + std::to_string(q) + ")");
  for (std::int64_t n = 5; n <= bound; ++n)
    if (2 * complex_dim('2', n) <= bound) rows.emplace_back(2, n, 0, "II(" + std::to_string(n) + ")");
  for (std::int64_t n = 2; n <= bound; ++n)
    if (2 * complex_dim('3', n) <= bound) rows.emplace_back(3, n, 0, "III(" + std::to_string(n) + ")");
  for (std::int64_t n = 5; n <= bound; ++n)
    if (2 * complex_dim('4', n) <= bound) rows.emplace_back(4, n, 0, "IV(" + std::to_string(n) + ")");
  if (2 * complex_dim('5', 0) <= bound) rows.emplace_back(5, 0, 0, "V");
  if (2 * complex_dim('6', 0) <= bound) rows.emplace_back(6, 0, 0, "VI");
  std::sort(rows.begin(), rows.end());
  std::vector<std::string> out;
  for (auto& r : rows) out.push_back(std::get<3>(r));
  return out;
}

/// Random multiset of odd degrees in [1, max_degree] with at most max_size elements.
inline std::vector<std::int64_t> random_odd_multiset(std::mt19937_64& rng, std::int64_t max_degree,
                                                     std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> size_dist(0, max_size);
  std::uniform_int_distribution<std::int64_t> deg_dist(0, (max_degree - 1) / 2);
  std::vector<std::int64_t> out(size_dist(rng));
  for (auto& d : out) d = 2 * deg_dist(rng) + 1;
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace oracle

#endif // SHILOVKIT_TESTS_ORACLES_HPP_
