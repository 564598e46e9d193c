#include "shilovkit/shilov_model.hpp"

#include <stdexcept>

namespace shilovkit {

std::int64_t CompactGroup::dim() const {
  switch (kind) {
    case GroupKind::U: return n * n;
    case GroupKind::SU: return n * n - 1;
    case GroupKind::Sp: return n * (2 * n + 1);
    case GroupKind::O:
    case GroupKind::SO: return n * (n - 1) / 2;
    case GroupKind::E6: return 78;
    case GroupKind::F4: return 52;
    case GroupKind::Circle: return 1;
  }
  return 0;
}

std::string CompactGroup::to_string() const {
  auto indexed = [this](const char* name) { return std::string(name) + "(" + std::to_string(n) + ")"; };
  switch (kind) {
    case GroupKind::U: return indexed("U");
    case GroupKind::SU: return indexed("SU");
    case GroupKind::Sp: return indexed("Sp");
    case GroupKind::O: return indexed("O");
    case GroupKind::SO: return indexed("SO");
    case GroupKind::E6: return "E6";
    case GroupKind::F4: return "F4";
    case GroupKind::Circle: return "S^1";
  }
  return "?";
}

namespace {

bool exact_impl(const ShilovModel& m) {
  return std::visit(
    [](const auto& s) -> bool {
      using T = std::decay_t<decltype(s)>;
      if constexpr (std::is_same_v<T, QuotientModel>) {
        return s.exact;
      } else if constexpr (std::is_same_v<T, LieSphereModel>) {
        return true;
      } else {
        if (s.almost) return false;
        for (const auto& f : s.factors)
          if (!exact_impl(f)) return false;
        return true;
      }
    },
    m.shape);
}

std::string render(const ShilovModel& m, bool nested) {
  return std::visit(
    [nested](const auto& s) -> std::string {
      using T = std::decay_t<decltype(s)>;
      if constexpr (std::is_same_v<T, QuotientModel>) {
        std::string out = s.numerator.to_string();
        if (s.denominator.size() == 1) {
          out += "/" + s.denominator.front().to_string();
        } else if (s.denominator.size() > 1) {
          out += "/(";
          for (std::size_t i = 0; i < s.denominator.size(); ++i) {
            if (i) out += " x ";
            out += s.denominator[i].to_string();
          }
          out += ")";
        }
        return out;
      } else if constexpr (std::is_same_v<T, LieSphereModel>) {
        return "L^" + std::to_string(s.n);
      } else {
        std::string out;
        for (std::size_t i = 0; i < s.factors.size(); ++i) {
          if (i) out += s.almost ? " . " : " x ";
          out += render(s.factors[i], true);
        }
        return nested ? "(" + out + ")" : out;
      }
    },
    m.shape);
}

} // namespace

bool ShilovModel::exact() const { return exact_impl(*this); }

std::string ShilovModel::to_string() const {
  std::string s = render(*this, false);
  if (!exact()) s += " (up to finite cover)";
  return s;
}

ShilovModel shilov_model(const Irreducible& d) {
  using G = CompactGroup;
  switch (d.family()) {
    case Family::I: {
      const auto p = d.param(0), q = d.param(1);
      QuotientModel m{G::unitary(p), {}, true};
      if (p > q) m.denominator.push_back(G::unitary(p - q));
      return {m};
    }
    case Family::II: {
      const auto n = d.param(0);
      if (n % 2 == 0) return {QuotientModel{G::unitary(n), {G::symplectic(n / 2)}, true}};
      return {QuotientModel{G::unitary(n), {G::symplectic(n / 2), G::circle()}, true}};
    }
    case Family::III:
      return {QuotientModel{G::unitary(d.param(0)), {G::orthogonal(d.param(0))}, true}};
    case Family::IV:
      return {LieSphereModel{d.param(0)}};
    case Family::V:
      // Simply connected, hence equal to its universal cover SO(10)/SO(7).
      return {QuotientModel{G::special_orthogonal(10), {G::special_orthogonal(7)}, true}};
    case Family::VI: {
      ProductModel pm;
      pm.almost = true;
      pm.factors.push_back({QuotientModel{G::circle(), {}, false}});
      pm.factors.push_back({QuotientModel{G::e6(), {G::f4()}, false}});
      return {pm};
    }
  }
  throw std::logic_error("unhandled family");
}

ShilovModel shilov_model(const DomainSpec& d) {
  if (d.is_irreducible()) return shilov_model(d.irreducible());
  ProductModel pm;
  for (const auto& f : d.factors()) pm.factors.push_back(shilov_model(f));
  return {pm};
}

std::int64_t model_dim(const ShilovModel& m) {
  return std::visit(
    [](const auto& s) -> std::int64_t {
      using T = std::decay_t<decltype(s)>;
      if constexpr (std::is_same_v<T, QuotientModel>) {
        std::int64_t dim = s.numerator.dim();
        for (const auto& g : s.denominator) dim -= g.dim();
        return dim;
      } else if constexpr (std::is_same_v<T, LieSphereModel>) {
        return s.n;
      } else {
        std::int64_t dim = 0;
        for (const auto& f : s.factors) dim += model_dim(f);
        return dim;
      }
    },
    m.shape);
}

int antipodal_degree(std::int64_t sphere_dim) {
  if (sphere_dim < 0) throw std::invalid_argument("sphere dimension must be nonnegative");
  // x -> -x on S^k is a composite of k+1 reflections.
  return (sphere_dim + 1) % 2 == 0 ? 1 : -1;
}

namespace {

void require_lie_sphere_index(std::int64_t n) {
  if (n < 5) throw std::invalid_argument("Lie sphere L^n requires n ≥ 5, got " + std::to_string(n));
}

} // namespace

bool lie_sphere_orientable(std::int64_t n) {
  require_lie_sphere_index(n);
  // The free Z/2 action on S^1 x S^{n-1} preserves orientation iff the product
  // of the antipodal degrees on both factors is +1.
  return antipodal_degree(1) * antipodal_degree(n - 1) == 1;
}

bool lie_sphere_bundle_trivial(std::int64_t n) {
  require_lie_sphere_index(n);
  // The associated bundle over S^1 is classified by the path component of the
  // antipodal map in Homeo(S^{n-1}), and pi_0 is detected by the degree.
  return antipodal_degree(n - 1) == 1;
}

} // namespace shilovkit
