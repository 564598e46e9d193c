// Bounded exhaustive checks: pairwise separation of all canonical irreducible
// domains up to a dimension bound, cross-module identities, and a search for
// indistinguishable products.

#ifndef SHILOVKIT_VERIFY_HPP_
#define SHILOVKIT_VERIFY_HPP_

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "shilovkit/distinguish.hpp"
#include "shilovkit/domains.hpp"
#include "shilovkit/invariants.hpp"

namespace shilovkit {

/// All canonical irreducible domains with ambient_dim <= max_ambient_dim, in
/// spec order (family, then parameters). Throws std::invalid_argument if the
/// bound is below 2.
std::vector<DomainSpec> enumerate_domains(std::int64_t max_ambient_dim);

/// Products of 1..max_factors irreducibles (unordered, repetition allowed)
/// with total ambient dimension <= max_ambient_dim, in spec order.
std::vector<DomainSpec> enumerate_products(std::int64_t max_ambient_dim, int max_factors);

struct PairFailure {
  DomainSpec lhs;
  DomainSpec rhs;
  std::string reason;
};

struct IdentityCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct Coincidence {
  DomainSpec lhs;
  DomainSpec rhs;
  /// Fields known on both sides; the rest Unknown / unavailable.
  InvariantVector shared;
};

struct VerificationReport {
  std::int64_t max_ambient_dim = 0;
  std::size_t domain_count = 0;
  std::size_t pair_count = 0;
  std::vector<PairFailure> failures;
  std::vector<IdentityCheck> identity_checks;
  std::vector<Coincidence> coincidences;
  std::chrono::duration<double> elapsed{};

  bool identities_pass() const;
  /// No failures and every identity check passes.
  bool verified() const { return failures.empty() && identities_pass(); }
};

struct VerifyOptions {
  /// Worker threads for the pairwise sweep; 0 picks hardware concurrency.
  unsigned threads = 1;
};

/// Runs distinguish on every unordered pair of distinct enumerated domains.
/// A pair fails if the certificate is Inconclusive or Isomorphic. Identity
/// checks: tube halving, degree-sum law, non-tube Shilov dimension table,
/// Lie sphere parity, pi_1 rank versus tube class, type V duality arithmetic.
VerificationReport verify_theorem(std::int64_t max_ambient_dim, VerifyOptions options = {});

/// Pairs of structurally distinct products (up to max_factors factors,
/// ambient dim <= bound) whose invariant vectors agree on every field known
/// on both sides. Throws std::invalid_argument if max_factors < 1.
std::vector<Coincidence> find_coincidences(std::int64_t max_ambient_dim, int max_factors);

} // namespace shilovkit

#endif // SHILOVKIT_VERIFY_HPP_
