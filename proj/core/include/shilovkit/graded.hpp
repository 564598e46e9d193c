// Exact one-variable polynomials for Poincare series, and the exterior
// algebra presentation used to compare cohomology rings.

#ifndef SHILOVKIT_GRADED_HPP_
#define SHILOVKIT_GRADED_HPP_

#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace shilovkit {

/// Polynomial in t with arbitrary-precision integer coefficients. Stored
/// sparsely; zero coefficients are never kept.
class GradedPoly {
public:
  using Degree = std::int64_t;

  GradedPoly() = default;
  explicit GradedPoly(std::map<Degree, mpz_class> coefficients);

  static GradedPoly one() { return monomial(0); }
  static GradedPoly monomial(Degree degree, const mpz_class& coefficient = 1);

  mpz_class coefficient(Degree degree) const;
  const std::map<Degree, mpz_class>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  mpz_class evaluate(const mpz_class& t) const;

  /// Ascending degrees, e.g. "1 + t^1 + t^5 + t^6"; "0" for the zero polynomial.
  std::string to_string() const;

  friend GradedPoly operator+(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  friend bool operator==(const GradedPoly& a, const GradedPoly& b) { return a.terms_ == b.terms_; }

private:
  std::map<Degree, mpz_class> terms_;
};

/// Sorted multiset of positive generator degrees.
class DegreeMultiset {
public:
  DegreeMultiset() = default;
  DegreeMultiset(std::initializer_list<std::int64_t> degrees);
  /// Throws std::invalid_argument on a nonpositive degree.
  explicit DegreeMultiset(std::vector<std::int64_t> degrees);

  const std::vector<std::int64_t>& degrees() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  bool empty() const noexcept { return degrees_.empty(); }
  std::int64_t sum() const;

  /// Multiset union.
  DegreeMultiset merged(const DegreeMultiset& other) const;

  /// Common difference if the degrees form an arithmetic progression of
  /// length at least two, else 0.
  std::int64_t progression_step() const;

  /// "{1, 5, 9}".
  std::string to_string() const;

  friend bool operator==(const DegreeMultiset&, const DegreeMultiset&) = default;

private:
  std::vector<std::int64_t> degrees_;
};

class NotExteriorForm : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// prod_{d in gens} (1 + t^d).
GradedPoly exterior_poincare(const DegreeMultiset& gens);

/// Poincare polynomial of a product space: the polynomial product.
GradedPoly kunneth(const GradedPoly& p, const GradedPoly& q);

/// Inverse of exterior_poincare on odd generators. Repeatedly strips the
/// factor (1 + t^d) for the smallest positive degree d present, by exact long
/// division. Throws NotExteriorForm when the input is not a product of such
/// factors with odd d.
DegreeMultiset recover_generators(const GradedPoly& p);

/// Highest degree with a nonzero coefficient. Throws std::domain_error on 0.
GradedPoly::Degree top_degree(const GradedPoly& p);

/// Value at t = -1.
mpz_class euler_characteristic(const GradedPoly& p);

/// Coefficient of k equals coefficient of top - k for all k.
bool is_palindromic(const GradedPoly& p);

} // namespace shilovkit

#endif // SHILOVKIT_GRADED_HPP_
