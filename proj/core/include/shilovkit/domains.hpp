// Irreducible bounded symmetric domains by Cartan type, and finite products.

#ifndef SHILOVKIT_DOMAINS_HPP_
#define SHILOVKIT_DOMAINS_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shilovkit {

enum class Family : std::uint8_t { I, II, III, IV, V, VI };

std::string_view family_name(Family f);

/// Number of integer parameters a family takes: 2 for I, 1 for II/III/IV, 0 for V/VI.
std::size_t family_arity(Family f);

enum class TubeClass : std::uint8_t { Tube, NonTube };

std::string_view tube_class_name(TubeClass t);

class DomainError : public std::invalid_argument {
public:
  enum class Kind { Syntax, Arity, Range };

  DomainError(Kind kind, const std::string& msg)
    : std::invalid_argument(msg), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

// Parameters above this are rejected so that every dimension formula fits in
// 64-bit arithmetic with room to spare.
inline constexpr std::int64_t kMaxParameter = 1 << 20;

/// A single Cartan-type domain in its canonical parameter range:
/// I(p,q) p >= q >= 1, II(n) n >= 5, III(n) n >= 2, IV(n) n >= 5, V, VI.
/// Construction validates; an Irreducible value is always canonical.
class Irreducible {
public:
  /// Throws DomainError (Arity or Range) on bad parameters.
  Irreducible(Family family, std::span<const std::int64_t> params);

  static Irreducible type_i(std::int64_t p, std::int64_t q);
  static Irreducible type_ii(std::int64_t n);
  static Irreducible type_iii(std::int64_t n);
  static Irreducible type_iv(std::int64_t n);
  static Irreducible type_v();
  static Irreducible type_vi();

  Family family() const noexcept { return family_; }
  const std::vector<std::int64_t>& params() const noexcept { return params_; }

  /// Parameter i; precondition i < arity.
  std::int64_t param(std::size_t i) const { return params_.at(i); }

  std::string to_string() const;

  friend auto operator<=>(const Irreducible&, const Irreducible&) = default;
  friend bool operator==(const Irreducible&, const Irreducible&) = default;

private:
  Family family_;
  std::vector<std::int64_t> params_;
};

/// Either one irreducible domain or a product of several. Factors are kept
/// sorted, so two products compare equal iff they agree up to reordering.
class DomainSpec {
public:
  DomainSpec(Irreducible d); // NOLINT(google-explicit-constructor)

  /// Throws DomainError if `factors` is empty.
  static DomainSpec product(std::vector<Irreducible> factors);

  bool is_irreducible() const noexcept { return factors_.size() == 1; }

  /// The single factor; throws std::logic_error for products.
  const Irreducible& irreducible() const;

  const std::vector<Irreducible>& factors() const noexcept { return factors_; }

  std::string to_string() const;

  friend auto operator<=>(const DomainSpec&, const DomainSpec&) = default;
  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;

private:
  explicit DomainSpec(std::vector<Irreducible> factors);

  std::vector<Irreducible> factors_;
};

/// Grammar: FAMILY [ "(" int { "," int } ")" ] { "x" FAMILY [...] }.
/// Family letters are case-insensitive and whitespace is ignored.
DomainSpec parse_domain(std::string_view text);

/// Real dimension of the domain.
std::int64_t ambient_dim(const Irreducible& d);
std::int64_t ambient_dim(const DomainSpec& d);

std::int64_t rank(const Irreducible& d);
std::int64_t rank(const DomainSpec& d);

TubeClass tube_class(const Irreducible& d);

/// Throws DomainError when `d` is a product.
TubeClass tube_class(const DomainSpec& d);

} // namespace shilovkit

#endif // SHILOVKIT_DOMAINS_HPP_
