#include "shilovkit/verify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "shilovkit/shilov_model.hpp"

namespace shilovkit {

std::vector<DomainSpec> enumerate_domains(std::int64_t bound) {
  if (bound < 2) throw std::invalid_argument("dimension bound must be at least 2");

  std::vector<Irreducible> out;
  for (std::int64_t p = 1; 2 * p <= bound; ++p)
    for (std::int64_t q = 1; q <= p && 2 * p * q <= bound; ++q) out.push_back(Irreducible::type_i(p, q));
  for (std::int64_t n = 5; n * (n - 1) <= bound; ++n) out.push_back(Irreducible::type_ii(n));
  for (std::int64_t n = 2; n * (n + 1) <= bound; ++n) out.push_back(Irreducible::type_iii(n));
  for (std::int64_t n = 5; 2 * n <= bound; ++n) out.push_back(Irreducible::type_iv(n));
  if (bound >= 32) out.push_back(Irreducible::type_v());
  if (bound >= 54) out.push_back(Irreducible::type_vi());

  std::sort(out.begin(), out.end());
  return {out.begin(), out.end()};
}

namespace {

void extend_products(const std::vector<Irreducible>& pool, std::size_t from, std::int64_t budget,
                     int slots, std::vector<Irreducible>& current, std::vector<DomainSpec>& out) {
  if (!current.empty()) out.push_back(DomainSpec::product(current));
  if (slots == 0) return;
  for (std::size_t i = from; i < pool.size(); ++i) {
    const auto dim = ambient_dim(pool[i]);
    if (dim > budget) continue;
    current.push_back(pool[i]);
    extend_products(pool, i, budget - dim, slots - 1, current, out);
    current.pop_back();
  }
}

} // namespace

std::vector<DomainSpec> enumerate_products(std::int64_t bound, int max_factors) {
  if (max_factors < 1) throw std::invalid_argument("at least one factor is required");
  std::vector<Irreducible> pool;
  for (const auto& d : enumerate_domains(bound)) pool.push_back(d.irreducible());
  std::vector<DomainSpec> out;
  std::vector<Irreducible> current;
  extend_products(pool, 0, bound, max_factors, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool VerificationReport::identities_pass() const {
  return std::all_of(identity_checks.begin(), identity_checks.end(),
                     [](const IdentityCheck& c) { return c.pass; });
}

namespace {

struct Tally {
  std::size_t checked = 0;
  std::vector<std::string> bad;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (!ok) bad.push_back(what);
  }

  IdentityCheck finish(std::string name, const std::string& noun) const {
    std::string detail = std::to_string(checked) + " " + noun + " checked";
    if (!bad.empty()) {
      detail += "; mismatches:";
      for (std::size_t i = 0; i < bad.size() && i < 10; ++i) detail += " " + bad[i];
      if (bad.size() > 10) detail += " ...";
    }
    return {std::move(name), bad.empty() && checked > 0, detail};
  }
};

std::vector<IdentityCheck> identity_checks(const std::vector<DomainSpec>& domains,
                                           const std::vector<InvariantVector>& vectors) {
  Tally halving, degree_sum, table, parity, pi1_rank;
  for (std::size_t i = 0; i < domains.size(); ++i) {
    const Irreducible& d = domains[i].irreducible();
    const InvariantVector& v = vectors[i];
    const std::int64_t mdim = model_dim(shilov_model(d));
    const std::string name = d.to_string();

    const bool tube = tube_class(d) == TubeClass::Tube;
    if (tube) halving.record(2 * mdim == ambient_dim(d), name);

    pi1_rank.record(v.pi1.free_rank == (tube ? 1 : 0) && v.pi1.is_trivial == !tube, name);

    if (v.cover_poincare) degree_sum.record(top_degree(*v.cover_poincare) == v.shilov_dim, name);

    if (!tube) {
      std::int64_t expected = 0;
      switch (d.family()) {
        case Family::I: {
          const auto p = d.param(0), q = d.param(1);
          expected = 2 * p * q - q * q;
          break;
        }
        case Family::II: {
          const auto q = d.param(0) / 2;
          expected = 2 * q * q + 3 * q;
          break;
        }
        case Family::V: expected = 24; break;
        default: break;
      }
      table.record(mdim == expected, name);
    }

    if (d.family() == Family::IV) {
      const auto n = d.param(0);
      const bool even = n % 2 == 0;
      parity.record(lie_sphere_bundle_trivial(n) == even && lie_sphere_orientable(n) == even &&
                      v.orientable == (even ? TriState::Yes : TriState::No),
                    name);
    }
  }

  std::vector<IdentityCheck> out;
  out.push_back(halving.finish("tube_halving", "tube domains"));
  out.push_back(degree_sum.finish("degree_sum", "cover polynomials"));
  out.push_back(table.finish("nontube_shilov_dim", "non-tube domains"));
  out.push_back(parity.finish("lie_sphere_parity", "Lie spheres"));
  out.push_back(pi1_rank.finish("pi1_rank_vs_tube", "domains"));
  const auto alex = type_v_alexander_check();
  out.push_back({"type_v_alexander", alex.holds(), alex.to_string()});
  return out;
}

InvariantVector meet(const InvariantVector& a, const InvariantVector& b) {
  auto same = [](TriState x, TriState y) { return x == y ? x : TriState::Unknown; };
  InvariantVector m;
  m.shilov_dim = a.shilov_dim;
  m.pi1 = a.pi1;
  m.pi1.finite_part_known_trivial = a.pi1.finite_part_known_trivial && b.pi1.finite_part_known_trivial;
  m.pi2_nonzero = same(a.pi2_nonzero, b.pi2_nonzero);
  m.pi9_nonzero = same(a.pi9_nonzero, b.pi9_nonzero);
  m.h_torsion_free = same(a.h_torsion_free, b.h_torsion_free);
  m.orientable = same(a.orientable, b.orientable);
  if (cover_kinds_comparable(a, b)) {
    m.cover_poincare = a.cover_poincare;
    m.cover_kind = a.cover_kind == b.cover_kind ? a.cover_kind : CoverKind::CanonicalZCover;
  }
  return m;
}

} // namespace

VerificationReport verify_theorem(std::int64_t bound, VerifyOptions options) {
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  report.max_ambient_dim = bound;
  const auto domains = enumerate_domains(bound);
  report.domain_count = domains.size();

  std::vector<InvariantVector> vectors;
  vectors.reserve(domains.size());
  for (const auto& d : domains) vectors.push_back(invariant_vector(d));

  const std::size_t n = domains.size();
  report.pair_count = n < 2 ? 0 : n * (n - 1) / 2;

  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                          : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));

  struct Partial {
    std::vector<std::pair<std::size_t, std::size_t>> failed;
    std::vector<std::string> reasons;
    std::vector<std::pair<std::size_t, std::size_t>> coincident;
  };
  std::vector<Partial> partials(threads);

  auto work = [&](unsigned t) {
    Partial& out = partials[t];
    for (std::size_t i = t; i < n; i += threads) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const Certificate c = distinguish(domains[i], vectors[i], domains[j], vectors[j]);
        if (c.is_inconclusive()) {
          out.failed.emplace_back(i, j);
          out.reasons.push_back("inconclusive: " + std::get<Inconclusive>(c.outcome).reason);
        } else if (c.is_isomorphic()) {
          out.failed.emplace_back(i, j);
          out.reasons.push_back("distinct specs certified isomorphic");
        }
        if (vectors[i].shilov_dim == vectors[j].shilov_dim && agree_on_known_fields(vectors[i], vectors[j]))
          out.coincident.emplace_back(i, j);
      }
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  std::vector<std::tuple<std::size_t, std::size_t, std::string>> failed;
  std::vector<std::pair<std::size_t, std::size_t>> coincident;
  for (auto& p : partials) {
    for (std::size_t k = 0; k < p.failed.size(); ++k)
      failed.emplace_back(p.failed[k].first, p.failed[k].second, std::move(p.reasons[k]));
    coincident.insert(coincident.end(), p.coincident.begin(), p.coincident.end());
  }
  std::sort(failed.begin(), failed.end());
  std::sort(coincident.begin(), coincident.end());
  for (auto& [i, j, why] : failed) report.failures.push_back({domains[i], domains[j], std::move(why)});
  for (auto [i, j] : coincident)
    report.coincidences.push_back({domains[i], domains[j], meet(vectors[i], vectors[j])});

  report.identity_checks = identity_checks(domains, vectors);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<Coincidence> find_coincidences(std::int64_t bound, int max_factors) {
  const auto specs = enumerate_products(bound, max_factors);
  std::vector<InvariantVector> vectors;
  vectors.reserve(specs.size());
  for (const auto& s : specs) vectors.push_back(invariant_vector(s));

  // Only vectors with equal dimension and pi_1 can agree.
  std::map<std::tuple<std::int64_t, std::int64_t, bool>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < specs.size(); ++i)
    buckets[{vectors[i].shilov_dim, vectors[i].pi1.free_rank, vectors[i].pi1.is_trivial}].push_back(i);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [key, members] : buckets)
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        if (agree_on_known_fields(vectors[members[a]], vectors[members[b]]))
          pairs.emplace_back(members[a], members[b]);
  std::sort(pairs.begin(), pairs.end());

  std::vector<Coincidence> out;
  for (auto [i, j] : pairs) out.push_back({specs[i], specs[j], meet(vectors[i], vectors[j])});
  return out;
}

} // namespace shilovkit
