// Homotopy and cohomology invariants of Shilov boundaries.
//
// Nothing here is derived from first principles: every nontrivial entry is a
// cited fact about a specific homogeneous space, and each carries an anchor
// string naming its source. Entries without a source are TriState::Unknown.

#ifndef SHILOVKIT_INVARIANTS_HPP_
#define SHILOVKIT_INVARIANTS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shilovkit/domains.hpp"
#include "shilovkit/graded.hpp"

namespace shilovkit {

enum class TriState : std::uint8_t { Yes, No, Unknown };

/// "yes", "no", "unknown".
std::string_view tri_state_name(TriState t);

/// Product rule for nonvanishing of pi_k (direct sums): any Yes gives Yes,
/// all No gives No, otherwise Unknown.
TriState combine_any(TriState a, TriState b);

/// Product rule for properties that hold for a product iff they hold for
/// every factor (torsion-freeness, orientability): any No gives No, all Yes
/// gives Yes, otherwise Unknown.
TriState combine_all(TriState a, TriState b);

struct Pi1Desc {
  std::int64_t free_rank = 0;
  bool is_trivial = true;
  bool finite_part_known_trivial = true;

  std::string to_string() const;

  friend bool operator==(const Pi1Desc&, const Pi1Desc&) = default;
};

/// Which space a cover polynomial describes.
enum class CoverKind : std::uint8_t { Self, Universal, CanonicalZCover, Unavailable };

/// "self", "universal", "canonical-Z-cover", "unavailable".
std::string_view cover_kind_name(CoverKind k);

struct CoverPoincare {
  GradedPoly poly;
  CoverKind kind;
};

struct Citation {
  std::string field;
  std::string anchor;
};

struct InvariantVector {
  std::int64_t shilov_dim = 0;
  Pi1Desc pi1;
  TriState pi2_nonzero = TriState::Unknown;
  TriState pi9_nonzero = TriState::Unknown;
  /// Integral cohomology of the simply connected cover.
  TriState h_torsion_free = TriState::Unknown;
  TriState orientable = TriState::Unknown;
  std::optional<GradedPoly> cover_poincare;
  CoverKind cover_kind = CoverKind::Unavailable;
  std::vector<Citation> citations;
};

Pi1Desc pi1_of(const Irreducible& d);
TriState pi2_nonzero_of(const Irreducible& d);
TriState pi9_nonzero_of(const Irreducible& d);
TriState torsion_free_of(const Irreducible& d);

/// Computed only for Lie spheres (type IV); Unknown elsewhere.
TriState orientable_of(const Irreducible& d);

/// Generators {1, 3, ..., 2q-1} of H*(U(q)).
DegreeMultiset unitary_generators(std::int64_t q);

/// Cover Poincare polynomial, or nullopt for types III, V and VI.
std::optional<CoverPoincare> cover_poincare_of(const Irreducible& d);

InvariantVector invariant_vector(const Irreducible& d);
InvariantVector invariant_vector(const DomainSpec& d);

/// Whether the cover polynomials of two vectors describe comparable spaces:
/// equal kinds, or a mix of self and canonical-Z-cover when the free ranks of
/// pi_1 agree. Both polynomials must be present.
bool cover_kinds_comparable(const InvariantVector& a, const InvariantVector& b);

/// True iff no field known on both sides differs: shilov_dim, pi_1, each
/// tri-state where neither side is Unknown, and the cover polynomial where
/// comparable. This is the "no licensed invariant separates" relation.
bool agree_on_known_fields(const InvariantVector& a, const InvariantVector& b);

/// Anchor for the given field name, or empty if the field is not cited.
std::string citation_for(const InvariantVector& v, std::string_view field);

/// Inputs to the type V simple-connectivity argument. Defaults are computed
/// from the domain and model tables.
struct AlexanderInputs {
  std::int64_t domain_dim;       // real dimension of D_V
  std::int64_t shilov_dim;       // dimension of its Shilov boundary
  std::int64_t fiber_dim;        // real dimension of the fibre D_{I(5,1)}
  std::int64_t cited_base_dim;   // dim of rank-1 tripotents, from the classical tables
};

AlexanderInputs default_alexander_inputs();

struct AlexanderTrace {
  std::int64_t boundary_sphere_dim = 0; // dD is a sphere of this dimension
  std::int64_t shilov_dim = 0;
  std::int64_t fiber_dim = 0;
  std::int64_t base_dim = 0;            // boundary_sphere_dim - fiber_dim
  std::int64_t duality_degree = 0;      // boundary_sphere_dim - 1 - 1

  bool boundary_ok = false;  // sphere dimension 31
  bool shilov_ok = false;    // 24
  bool fiber_ok = false;     // 10
  bool base_ok = false;      // 21, and equal to the cited value
  bool vanishing_ok = false; // duality_degree > base_dim, so H_29 of the complement is 0

  bool holds() const { return boundary_ok && shilov_ok && fiber_ok && base_ok && vanishing_ok; }
  std::string to_string() const;
};

/// Checks the dimension arithmetic showing pi_1 of the type V Shilov boundary
/// vanishes: H^1(S, pi) is Alexander dual to H_29 of dD minus S, which is
/// homotopy equivalent to a 21-manifold.
AlexanderTrace type_v_alexander_check();
AlexanderTrace type_v_alexander_check(const AlexanderInputs& in);

} // namespace shilovkit

#endif // SHILOVKIT_INVARIANTS_HPP_
