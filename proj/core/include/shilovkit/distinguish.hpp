// Certificate-producing separation of Shilov boundaries.
//
// Invariants are compared in a fixed order, and the first one that differs
// is reported together with the fact that licenses it:
//
//   1 structural equality of canonical specs   -> Isomorphic
//   2 free rank of pi_1 (tube vs non-tube)
//   3 Shilov dimension
//   4 pi_9 nonvanishing     (both sides known)
//   5 pi_2 nonvanishing     (both sides known)
//   6 integral torsion      (both sides known)
//   7 cover Poincare polynomial (comparable cover kinds only)
//   8 nothing separates                        -> Inconclusive
//
// For two distinct irreducible domains step 8 is never reached.

#ifndef SHILOVKIT_DISTINGUISH_HPP_
#define SHILOVKIT_DISTINGUISH_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "shilovkit/domains.hpp"
#include "shilovkit/graded.hpp"
#include "shilovkit/invariants.hpp"

namespace shilovkit {

enum class Step : int {
  Structural = 1,
  Pi1FreeRank = 2,
  ShilovDim = 3,
  Pi9 = 4,
  Pi2 = 5,
  Torsion = 6,
  CoverPoincare = 7,
  Exhausted = 8,
};

/// Invariant name compared at a step, e.g. "pi9_nonzero".
std::string_view step_invariant(Step s);

/// Exterior generators recovered from a cover polynomial at step 7; empty
/// when the polynomial is not an exterior algebra on odd generators.
struct GeneratorSummary {
  std::optional<DegreeMultiset> generators;

  /// "{5, 9, 13} (step 4)", "{27}", or "not exterior on odd generators".
  std::string to_string() const;
};

struct Isomorphic {
  DomainSpec spec;
};

struct SeparatedBy {
  Step step;
  std::string invariant;
  std::string lhs;
  std::string rhs;
  std::string anchor;
  std::optional<GeneratorSummary> lhs_generators;
  std::optional<GeneratorSummary> rhs_generators;
};

struct Inconclusive {
  std::string reason;
  std::string anchor;
};

struct Certificate {
  std::string lhs_spec;
  std::string rhs_spec;
  std::variant<Isomorphic, SeparatedBy, Inconclusive> outcome;

  bool is_isomorphic() const { return std::holds_alternative<Isomorphic>(outcome); }
  bool is_inconclusive() const { return std::holds_alternative<Inconclusive>(outcome); }
  const SeparatedBy* separated() const { return std::get_if<SeparatedBy>(&outcome); }

  /// Step at which the procedure stopped.
  Step step() const;
};

Certificate distinguish(const DomainSpec& d1, const DomainSpec& d2);

/// Same, with invariant vectors already computed for both sides.
Certificate distinguish(const DomainSpec& d1, const InvariantVector& v1,
                        const DomainSpec& d2, const InvariantVector& v2);

/// Human-readable account of the certificate; deterministic.
std::string explain(const Certificate& c);

/// If {a, b} = {IV(2n), I(1,1) x I(n,1)} for some n, returns n.
std::optional<std::int64_t> reducible_lie_ball_pattern(const DomainSpec& a, const DomainSpec& b);

} // namespace shilovkit

#endif // SHILOVKIT_DISTINGUISH_HPP_
