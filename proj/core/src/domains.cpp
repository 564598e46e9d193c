#include "shilovkit/domains.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>

namespace shilovkit {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::III: return "III";
    case Family::IV: return "IV";
    case Family::V: return "V";
    case Family::VI: return "VI";
  }
  return "?";
}

std::size_t family_arity(Family f) {
  switch (f) {
    case Family::I: return 2;
    case Family::II:
    case Family::III:
    case Family::IV: return 1;
    case Family::V:
    case Family::VI: return 0;
  }
  return 0;
}

std::string_view tube_class_name(TubeClass t) {
  return t == TubeClass::Tube ? "tube" : "non-tube";
}

namespace {

[[noreturn]] void range_error(const std::string& msg) {
  throw DomainError(DomainError::Kind::Range, msg);
}

void check_range(Family family, const std::vector<std::int64_t>& ps) {
  for (std::int64_t v : ps)
    if (v > kMaxParameter)
      range_error(std::string(family_name(family)) + " parameter " + std::to_string(v) +
                  " exceeds the supported maximum " + std::to_string(kMaxParameter));
  switch (family) {
    case Family::I:
      if (!(ps[0] >= ps[1] && ps[1] >= 1))
        range_error("I(p,q) requires p ≥ q ≥ 1");
      break;
    case Family::II:
      if (ps[0] < 5) range_error("II(n) requires n ≥ 5");
      break;
    case Family::III:
      if (ps[0] < 2) range_error("III(n) requires n ≥ 2");
      break;
    case Family::IV:
      if (ps[0] < 5) range_error("IV(n) requires n ≥ 5");
      break;
    case Family::V:
    case Family::VI:
      break;
  }
}

} // namespace

Irreducible::Irreducible(Family family, std::span<const std::int64_t> params)
  : family_(family), params_(params.begin(), params.end()) {
  if (params_.size() != family_arity(family))
    throw DomainError(DomainError::Kind::Arity,
                      std::string(family_name(family)) + " takes " +
                        std::to_string(family_arity(family)) + " parameter(s), got " +
                        std::to_string(params_.size()));
  check_range(family, params_);
}

Irreducible Irreducible::type_i(std::int64_t p, std::int64_t q) {
  const std::int64_t ps[] = {p, q};
  return Irreducible(Family::I, ps);
}

Irreducible Irreducible::type_ii(std::int64_t n) {
  const std::int64_t ps[] = {n};
  return Irreducible(Family::II, ps);
}

Irreducible Irreducible::type_iii(std::int64_t n) {
  const std::int64_t ps[] = {n};
  return Irreducible(Family::III, ps);
}

Irreducible Irreducible::type_iv(std::int64_t n) {
  const std::int64_t ps[] = {n};
  return Irreducible(Family::IV, ps);
}

Irreducible Irreducible::type_v() { return Irreducible(Family::V, {}); }
Irreducible Irreducible::type_vi() { return Irreducible(Family::VI, {}); }

std::string Irreducible::to_string() const {
  std::string s(family_name(family_));
  if (!params_.empty()) {
    s += '(';
    for (std::size_t i = 0; i < params_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(params_[i]);
    }
    s += ')';
  }
  return s;
}

DomainSpec::DomainSpec(Irreducible d) : factors_{std::move(d)} {}

DomainSpec::DomainSpec(std::vector<Irreducible> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
}

DomainSpec DomainSpec::product(std::vector<Irreducible> factors) {
  if (factors.empty())
    throw DomainError(DomainError::Kind::Syntax, "a product needs at least one factor");
  return DomainSpec(std::move(factors));
}

const Irreducible& DomainSpec::irreducible() const {
  if (!is_irreducible())
    throw std::logic_error("domain " + to_string() + " is a product");
  return factors_.front();
}

std::string DomainSpec::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " x ";
    s += factors_[i].to_string();
  }
  return s;
}

namespace {

[[noreturn]] void syntax_error(std::string_view text, const std::string& what) {
  throw DomainError(DomainError::Kind::Syntax,
                    "cannot parse domain \"" + std::string(text) + "\": " + what);
}

Irreducible parse_factor(std::string_view whole, std::string_view f) {
  std::size_t i = 0;
  std::string letters;
  while (i < f.size() && std::isalpha(static_cast<unsigned char>(f[i])))
    letters += static_cast<char>(std::toupper(static_cast<unsigned char>(f[i++])));
  if (letters.empty()) syntax_error(whole, "expected a family name (I..VI)");

  static constexpr Family kAll[] = {Family::I, Family::II, Family::III,
                                    Family::IV, Family::V, Family::VI};
  auto it = std::find_if(std::begin(kAll), std::end(kAll),
                         [&](Family fam) { return family_name(fam) == letters; });
  if (it == std::end(kAll)) syntax_error(whole, "unknown family \"" + letters + "\"");

  std::vector<std::int64_t> params;
  if (i < f.size()) {
    if (f[i] != '(') syntax_error(whole, "expected '(' after family name");
    ++i;
    for (;;) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(f.data() + i, f.data() + f.size(), v);
      if (ec == std::errc::result_out_of_range)
        range_error("parameter out of range in \"" + std::string(whole) + "\"");
      if (ec != std::errc() || v < 0) syntax_error(whole, "expected a nonnegative integer");
      i = static_cast<std::size_t>(ptr - f.data());
      params.push_back(v);
      if (i < f.size() && f[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    if (i >= f.size() || f[i] != ')') syntax_error(whole, "expected ')'");
    ++i;
    if (i != f.size()) syntax_error(whole, "trailing characters after ')'");
  }
  return Irreducible(*it, params);
}

} // namespace

DomainSpec parse_domain(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.empty()) syntax_error(text, "empty input");

  std::vector<Irreducible> factors;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = compact.find_first_of("xX", start);
    std::string_view piece(compact.data() + start,
                           (pos == std::string::npos ? compact.size() : pos) - start);
    if (piece.empty()) syntax_error(text, "empty product factor");
    factors.push_back(parse_factor(text, piece));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return DomainSpec::product(std::move(factors));
}

std::int64_t ambient_dim(const Irreducible& d) {
  switch (d.family()) {
    case Family::I: return 2 * d.param(0) * d.param(1);
    case Family::II: {
      const std::int64_t n = d.param(0);
      const std::int64_t q = n / 2;
      // 2q(2q-1) for n = 2q, 2q(2q+1) for n = 2q+1; both equal n(n-1).
      return n % 2 == 0 ? 2 * q * (2 * q - 1) : 2 * q * (2 * q + 1);
    }
    case Family::III: return d.param(0) * (d.param(0) + 1);
    case Family::IV: return 2 * d.param(0);
    case Family::V: return 32;
    case Family::VI: return 54;
  }
  return 0;
}

std::int64_t ambient_dim(const DomainSpec& d) {
  std::int64_t sum = 0;
  for (const auto& f : d.factors()) sum += ambient_dim(f);
  return sum;
}

std::int64_t rank(const Irreducible& d) {
  switch (d.family()) {
    case Family::I: return d.param(1);
    case Family::II: return d.param(0) / 2;
    case Family::III: return d.param(0);
    case Family::IV:
    case Family::V: return 2;
    case Family::VI: return 3;
  }
  return 0;
}

std::int64_t rank(const DomainSpec& d) {
  std::int64_t sum = 0;
  for (const auto& f : d.factors()) sum += rank(f);
  return sum;
}

TubeClass tube_class(const Irreducible& d) {
  switch (d.family()) {
    case Family::I: return d.param(0) == d.param(1) ? TubeClass::Tube : TubeClass::NonTube;
    case Family::II: return d.param(0) % 2 == 0 ? TubeClass::Tube : TubeClass::NonTube;
    case Family::III:
    case Family::IV:
    case Family::VI: return TubeClass::Tube;
    case Family::V: return TubeClass::NonTube;
  }
  return TubeClass::NonTube;
}

TubeClass tube_class(const DomainSpec& d) {
  if (!d.is_irreducible())
    throw DomainError(DomainError::Kind::Arity,
                      "tube class is defined for irreducible domains only, got " + d.to_string());
  return tube_class(d.irreducible());
}

} // namespace shilovkit
