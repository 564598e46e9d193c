#include "shilovkit/graded.hpp"

#include <algorithm>
#include <numeric>

namespace shilovkit {

GradedPoly::GradedPoly(std::map<Degree, mpz_class> coefficients) : terms_(std::move(coefficients)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first < 0) throw std::invalid_argument("negative degree in graded polynomial");
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }
}

GradedPoly GradedPoly::monomial(Degree degree, const mpz_class& coefficient) {
  return GradedPoly({{degree, coefficient}});
}

mpz_class GradedPoly::coefficient(Degree degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class GradedPoly::evaluate(const mpz_class& t) const {
  // Horner over the sparse terms, highest degree first.
  mpz_class acc = 0;
  Degree prev = terms_.empty() ? 0 : terms_.rbegin()->first;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(prev - it->first));
    acc = acc * scale + it->second;
    prev = it->first;
  }
  mpz_class tail;
  mpz_pow_ui(tail.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(prev));
  return acc * tail;
}

std::string GradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [deg, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (deg == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "t^" + std::to_string(deg);
    }
  }
  return out;
}

GradedPoly operator+(const GradedPoly& a, const GradedPoly& b) {
  auto terms = a.terms_;
  for (const auto& [deg, c] : b.terms_) terms[deg] += c;
  return GradedPoly(std::move(terms));
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  std::map<GradedPoly::Degree, mpz_class> terms;
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) terms[da + db] += ca * cb;
  return GradedPoly(std::move(terms));
}

DegreeMultiset::DegreeMultiset(std::initializer_list<std::int64_t> degrees)
  : DegreeMultiset(std::vector<std::int64_t>(degrees)) {}

DegreeMultiset::DegreeMultiset(std::vector<std::int64_t> degrees) : degrees_(std::move(degrees)) {
  for (auto d : degrees_)
    if (d <= 0) throw std::invalid_argument("generator degrees must be positive");
  std::sort(degrees_.begin(), degrees_.end());
}

std::int64_t DegreeMultiset::sum() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0});
}

DegreeMultiset DegreeMultiset::merged(const DegreeMultiset& other) const {
  std::vector<std::int64_t> all = degrees_;
  all.insert(all.end(), other.degrees_.begin(), other.degrees_.end());
  return DegreeMultiset(std::move(all));
}

std::int64_t DegreeMultiset::progression_step() const {
  if (degrees_.size() < 2) return 0;
  const std::int64_t step = degrees_[1] - degrees_[0];
  for (std::size_t i = 2; i < degrees_.size(); ++i)
    if (degrees_[i] - degrees_[i - 1] != step) return 0;
  return step;
}

std::string DegreeMultiset::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(degrees_[i]);
  }
  return out + "}";
}

GradedPoly exterior_poincare(const DegreeMultiset& gens) {
  GradedPoly p = GradedPoly::one();
  for (auto d : gens.degrees()) p = p * GradedPoly({{0, 1}, {d, 1}});
  return p;
}

GradedPoly kunneth(const GradedPoly& p, const GradedPoly& q) { return p * q; }

DegreeMultiset recover_generators(const GradedPoly& p) {
  if (p.is_zero()) throw NotExteriorForm("zero polynomial has no exterior presentation");
  for (const auto& [deg, c] : p.terms())
    if (c < 0) throw NotExteriorForm("negative coefficient at degree " + std::to_string(deg));
  if (p.coefficient(0) != 1) throw NotExteriorForm("constant term is not 1");

  std::vector<mpz_class> dense(static_cast<std::size_t>(top_degree(p)) + 1);
  for (const auto& [deg, c] : p.terms()) dense[static_cast<std::size_t>(deg)] = c;

  std::vector<std::int64_t> found;
  for (;;) {
    std::size_t d = 1;
    while (d < dense.size() && dense[d] == 0) ++d;
    if (d >= dense.size()) break; // p == 1
    if (d % 2 == 0)
      throw NotExteriorForm("lowest remaining degree " + std::to_string(d) + " is even");

    // Divide by 1 + t^d: q_k = p_k - q_{k-d}, then the top d coefficients of
    // the remainder must vanish.
    const std::size_t qtop = dense.size() - 1 - d;
    std::vector<mpz_class> quotient(qtop + 1);
    for (std::size_t k = 0; k <= qtop; ++k)
      quotient[k] = k >= d ? dense[k] - quotient[k - d] : dense[k];
    for (std::size_t k = qtop + 1; k < dense.size(); ++k)
      if (dense[k] != (k >= d ? quotient[k - d] : mpz_class(0)))
        throw NotExteriorForm("1 + t^" + std::to_string(d) + " does not divide exactly");
    for (std::size_t k = 0; k <= qtop; ++k)
      if (quotient[k] < 0)
        throw NotExteriorForm("quotient by 1 + t^" + std::to_string(d) + " has a negative coefficient");

    found.push_back(static_cast<std::int64_t>(d));
    dense = std::move(quotient);
  }
  return DegreeMultiset(std::move(found));
}

GradedPoly::Degree top_degree(const GradedPoly& p) {
  if (p.is_zero()) throw std::domain_error("top degree of the zero polynomial");
  return p.terms().rbegin()->first;
}

mpz_class euler_characteristic(const GradedPoly& p) { return p.evaluate(-1); }

bool is_palindromic(const GradedPoly& p) {
  if (p.is_zero()) return true;
  const auto top = top_degree(p);
  for (const auto& [deg, c] : p.terms())
    if (p.coefficient(top - deg) != c) return false;
  return true;
}

} // namespace shilovkit
