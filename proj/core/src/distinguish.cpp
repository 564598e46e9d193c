#include "shilovkit/distinguish.hpp"

namespace shilovkit {

std::string_view step_invariant(Step s) {
  switch (s) {
    case Step::Structural: return "canonical_spec";
    case Step::Pi1FreeRank: return "pi1_free_rank";
    case Step::ShilovDim: return "shilov_dim";
    case Step::Pi9: return "pi9_nonzero";
    case Step::Pi2: return "pi2_nonzero";
    case Step::Torsion: return "h_torsion_free";
    case Step::CoverPoincare: return "cover_poincare";
    case Step::Exhausted: return "none";
  }
  return "none";
}

std::string GeneratorSummary::to_string() const {
  if (!generators) return "not exterior on odd generators";
  std::string s = generators->to_string();
  if (auto step = generators->progression_step()) s += " (step " + std::to_string(step) + ")";
  return s;
}

Step Certificate::step() const {
  if (is_isomorphic()) return Step::Structural;
  if (const auto* s = separated()) return s->step;
  return Step::Exhausted;
}

namespace {

constexpr const char* kPi1Anchor =
  "the free rank of pi_1 of the Shilov boundary is 1 exactly for tube type and 0 otherwise (Koranyi-Wolf)";
constexpr const char* kDimAnchor =
  "homotopy-equivalent closed manifolds have equal dimension, the top degree of nonzero integral cohomology";
constexpr const char* kPi9Anchor =
  "pi_9 is nonzero for S^1 . E6/F4 but vanishes for Lie spheres covered by S^1 x S^{n-1}, n-1 > 9";
constexpr const char* kPi2Anchor =
  "pi_2 vanishes for the type I, II and IV boundaries but not for U(n)/O(n)";
constexpr const char* kTorsionAnchor =
  "complex Stiefel manifolds have torsion-free integral cohomology, SO(10)/SO(7) does not";
constexpr const char* kCoverAnchor =
  "cohomology rings differ as graded algebras: the exterior generator degrees do not match";

std::optional<GeneratorSummary> summarize(const GradedPoly& p) {
  try {
    return GeneratorSummary{recover_generators(p)};
  } catch (const NotExteriorForm&) {
    return GeneratorSummary{std::nullopt};
  }
}

Certificate separated(const DomainSpec& d1, const DomainSpec& d2, Step step, std::string lhs,
                      std::string rhs, const char* anchor) {
  return {d1.to_string(), d2.to_string(),
          SeparatedBy{step, std::string(step_invariant(step)), std::move(lhs), std::move(rhs), anchor,
                      std::nullopt, std::nullopt}};
}

bool both_known_and_differ(TriState a, TriState b) {
  return a != TriState::Unknown && b != TriState::Unknown && a != b;
}

} // namespace

std::optional<std::int64_t> reducible_lie_ball_pattern(const DomainSpec& a, const DomainSpec& b) {
  auto match = [](const DomainSpec& lie, const DomainSpec& prod) -> std::optional<std::int64_t> {
    if (!lie.is_irreducible() || lie.irreducible().family() != Family::IV) return std::nullopt;
    const auto m = lie.irreducible().param(0);
    if (m % 2 != 0) return std::nullopt;
    const auto n = m / 2;
    if (prod == DomainSpec::product({Irreducible::type_i(1, 1), Irreducible::type_i(n, 1)})) return n;
    return std::nullopt;
  };
  if (auto n = match(a, b)) return n;
  return match(b, a);
}

Certificate distinguish(const DomainSpec& d1, const DomainSpec& d2) {
  return distinguish(d1, invariant_vector(d1), d2, invariant_vector(d2));
}

Certificate distinguish(const DomainSpec& d1, const InvariantVector& v1,
                        const DomainSpec& d2, const InvariantVector& v2) {
  if (d1 == d2) return {d1.to_string(), d2.to_string(), Isomorphic{d1}};

  if (v1.pi1.free_rank != v2.pi1.free_rank)
    return separated(d1, d2, Step::Pi1FreeRank, std::to_string(v1.pi1.free_rank),
                     std::to_string(v2.pi1.free_rank), kPi1Anchor);

  if (v1.shilov_dim != v2.shilov_dim)
    return separated(d1, d2, Step::ShilovDim, std::to_string(v1.shilov_dim),
                     std::to_string(v2.shilov_dim), kDimAnchor);

  struct TriStep {
    Step step;
    TriState a, b;
    const char* anchor;
  };
  const TriStep tri_steps[] = {
    {Step::Pi9, v1.pi9_nonzero, v2.pi9_nonzero, kPi9Anchor},
    {Step::Pi2, v1.pi2_nonzero, v2.pi2_nonzero, kPi2Anchor},
    {Step::Torsion, v1.h_torsion_free, v2.h_torsion_free, kTorsionAnchor},
  };
  for (const auto& t : tri_steps)
    if (both_known_and_differ(t.a, t.b))
      return separated(d1, d2, t.step, std::string(tri_state_name(t.a)),
                       std::string(tri_state_name(t.b)), t.anchor);

  if (cover_kinds_comparable(v1, v2) && !(*v1.cover_poincare == *v2.cover_poincare)) {
    auto c = separated(d1, d2, Step::CoverPoincare, v1.cover_poincare->to_string(),
                       v2.cover_poincare->to_string(), kCoverAnchor);
    auto& s = std::get<SeparatedBy>(c.outcome);
    s.lhs_generators = summarize(*v1.cover_poincare);
    s.rhs_generators = summarize(*v2.cover_poincare);
    return c;
  }

  if (auto n = reducible_lie_ball_pattern(d1, d2)) {
    const auto m = std::to_string(2 * *n);
    return {d1.to_string(), d2.to_string(),
            Inconclusive{"IV(" + m + ") and I(1,1) x I(" + std::to_string(*n) + ",1) have homeomorphic "
                         "Shilov boundaries; the separation result needs irreducible domains",
                         "L^" + m + " -> S^1 is a trivial S^" + std::to_string(2 * *n - 1) +
                           "-bundle, so L^" + m + " = S^1 x S^" + std::to_string(2 * *n - 1) +
                           " = U(1) x U(" + std::to_string(*n) + ")/U(" + std::to_string(*n - 1) + ")"}};
  }
  return {d1.to_string(), d2.to_string(),
          Inconclusive{"no licensed invariant separates these Shilov boundaries",
                       "invariants known on both sides agree; Unknown entries are never used"}};
}

std::string explain(const Certificate& c) {
  if (const auto* iso = std::get_if<Isomorphic>(&c.outcome))
    return "identical canonical type " + iso->spec.to_string();

  if (const auto* s = c.separated()) {
    std::string out = c.lhs_spec + " and " + c.rhs_spec + " are separated at step " +
                      std::to_string(static_cast<int>(s->step)) + " by " + s->invariant + ": " +
                      s->lhs + " vs " + s->rhs + ".\n  reason: " + s->anchor;
    if (s->lhs_generators && s->rhs_generators)
      out += "\n  generators: " + s->lhs_generators->to_string() + " vs " + s->rhs_generators->to_string();
    return out;
  }

  const auto& inc = std::get<Inconclusive>(c.outcome);
  return c.lhs_spec + " and " + c.rhs_spec + ": inconclusive. " + inc.reason + ".\n  reason: " + inc.anchor;
}

} // namespace shilovkit
