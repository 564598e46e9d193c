// Symbolic models of Shilov boundaries as homogeneous spaces, Lie spheres,
// or (almost) products of those.

#ifndef SHILOVKIT_SHILOV_MODEL_HPP_
#define SHILOVKIT_SHILOV_MODEL_HPP_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "shilovkit/domains.hpp"

namespace shilovkit {

enum class GroupKind : std::uint8_t { U, SU, Sp, O, SO, E6, F4, Circle };

/// A compact Lie group named by series and index. E6, F4 and Circle ignore n.
struct CompactGroup {
  GroupKind kind;
  std::int64_t n = 0;

  static CompactGroup unitary(std::int64_t n) { return {GroupKind::U, n}; }
  static CompactGroup special_unitary(std::int64_t n) { return {GroupKind::SU, n}; }
  static CompactGroup symplectic(std::int64_t n) { return {GroupKind::Sp, n}; }
  static CompactGroup orthogonal(std::int64_t n) { return {GroupKind::O, n}; }
  static CompactGroup special_orthogonal(std::int64_t n) { return {GroupKind::SO, n}; }
  static CompactGroup e6() { return {GroupKind::E6, 0}; }
  static CompactGroup f4() { return {GroupKind::F4, 0}; }
  static CompactGroup circle() { return {GroupKind::Circle, 0}; }

  /// Real dimension. O(n) and SO(n) agree; component count is not tracked.
  std::int64_t dim() const;

  std::string to_string() const;

  friend bool operator==(const CompactGroup&, const CompactGroup&) = default;
};

/// K / (L_1 x ... x L_k). `exact` is false when the quotient describes the
/// boundary only up to a finite cover.
struct QuotientModel {
  CompactGroup numerator;
  std::vector<CompactGroup> denominator;
  bool exact = true;

  friend bool operator==(const QuotientModel&, const QuotientModel&) = default;
};

/// L^n = T . S^{n-1} in C^n, i.e. (S^1 x S^{n-1}) / (Z/2) with the diagonal
/// antipodal action.
struct LieSphereModel {
  std::int64_t n;

  friend bool operator==(const LieSphereModel&, const LieSphereModel&) = default;
};

struct ShilovModel;

/// Cartesian product of models. `almost` marks a product that holds only up
/// to finite covering (the type VI boundary).
struct ProductModel {
  std::vector<ShilovModel> factors;
  bool almost = false;

  friend bool operator==(const ProductModel&, const ProductModel&);
};

struct ShilovModel {
  std::variant<QuotientModel, LieSphereModel, ProductModel> shape;

  /// False if this model, or any part of it, is known only up to finite cover.
  bool exact() const;

  std::string to_string() const;

  friend bool operator==(const ShilovModel&, const ShilovModel&) = default;
};

inline bool operator==(const ProductModel& a, const ProductModel& b) {
  return a.almost == b.almost && a.factors == b.factors;
}

ShilovModel shilov_model(const Irreducible& d);
ShilovModel shilov_model(const DomainSpec& d);

/// dim K - sum dim L_i for quotients, n for L^n, sum over product factors.
std::int64_t model_dim(const ShilovModel& m);

/// Whether (S^1 x S^{n-1}) / (Z/2) is orientable. Throws for n < 5.
bool lie_sphere_orientable(std::int64_t n);

/// Whether the fibration L^n -> S^1 with fibre S^{n-1} is trivial. Throws for n < 5.
bool lie_sphere_bundle_trivial(std::int64_t n);

/// Degree of the antipodal map on S^k, namely (-1)^{k+1}.
int antipodal_degree(std::int64_t sphere_dim);

} // namespace shilovkit

#endif // SHILOVKIT_SHILOV_MODEL_HPP_
