#include "shilovkit/invariants.hpp"

#include <algorithm>

#include "shilovkit/shilov_model.hpp"

namespace shilovkit {

std::string_view tri_state_name(TriState t) {
  switch (t) {
    case TriState::Yes: return "yes";
    case TriState::No: return "no";
    case TriState::Unknown: return "unknown";
  }
  return "unknown";
}

TriState combine_any(TriState a, TriState b) {
  if (a == TriState::Yes || b == TriState::Yes) return TriState::Yes;
  if (a == TriState::No && b == TriState::No) return TriState::No;
  return TriState::Unknown;
}

TriState combine_all(TriState a, TriState b) {
  if (a == TriState::No || b == TriState::No) return TriState::No;
  if (a == TriState::Yes && b == TriState::Yes) return TriState::Yes;
  return TriState::Unknown;
}

std::string Pi1Desc::to_string() const {
  if (is_trivial) return "trivial";
  std::string s = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  if (!finite_part_known_trivial) s += " (+ finite part unknown)";
  return s;
}

std::string_view cover_kind_name(CoverKind k) {
  switch (k) {
    case CoverKind::Self: return "self";
    case CoverKind::Universal: return "universal";
    case CoverKind::CanonicalZCover: return "canonical-Z-cover";
    case CoverKind::Unavailable: return "unavailable";
  }
  return "unavailable";
}

namespace {

template <class T>
struct Cited {
  T value;
  std::string anchor;
};

constexpr const char* kSilent = "no cited statement for this type; left unknown";

Cited<Pi1Desc> pi1_fact(const Irreducible& d) {
  if (tube_class(d) == TubeClass::Tube)
    return {{1, false, true},
            "tube type: pi_1 = Z, the norm map onto S^1 having connected, simply connected fibres "
            "(free rank 1 characterizes tube type, Koranyi-Wolf)"};
  if (d.family() == Family::V)
    return {{0, true, true},
            "type V: the boundary is SO(10)/SO(7), simply connected; H^1(S; pi) is Alexander dual "
            "to H_29 of a complement homotopic to a 21-manifold"};
  return {{0, true, true},
          "non-tube I/II: boundary K/L with pi_1(L) -> pi_1(K) an isomorphism, so pi_1(K/L) = 0"};
}

Cited<TriState> pi2_fact(const Irreducible& d) {
  switch (d.family()) {
    case Family::III:
      return {TriState::Yes,
              "U(n)/O(n): pi_2 maps onto the torsion of pi_1(O(n)) in the homotopy sequence of "
              "O(n) -> U(n) -> U(n)/O(n), while pi_2(U(n)) = 0"};
    case Family::I:
      return {TriState::No,
              "U(p)/U(p-q): pi_2 of a Lie group vanishes and pi_1(U(p-q)) -> pi_1(U(p)) is injective"};
    case Family::II:
      return {TriState::No,
              "U(n)/Sp(n/2) and U(2r+1)/(Sp(r) x S^1): pi_2 vanishes by the homotopy sequence of "
              "the unitary fibration"};
    case Family::IV:
      return {TriState::No, "Lie sphere L^n is finitely covered by S^1 x S^{n-1}, n-1 >= 4, so pi_2 = 0"};
    case Family::V:
    case Family::VI:
      break;
  }
  return {TriState::Unknown, kSilent};
}

Cited<TriState> pi9_fact(const Irreducible& d) {
  if (d.family() == Family::VI)
    return {TriState::Yes, "E6/F4 has pi_9 of rank >= 1, and S^1 x E6/F4 finitely covers the boundary"};
  if (d.family() == Family::IV && d.param(0) - 1 > 9)
    return {TriState::No, "L^n is finitely covered by S^1 x S^{n-1}; pi_9(S^{n-1}) = 0 for n-1 > 9"};
  return {TriState::Unknown, kSilent};
}

Cited<TriState> torsion_fact(const Irreducible& d) {
  if (d.family() == Family::I)
    return {TriState::Yes,
            "complex Stiefel manifolds U(p)/U(p-q) have torsion-free integral cohomology "
            "(Borel 1953, Prop. 9.1)"};
  if (d.family() == Family::V)
    return {TriState::No,
            "H*(SO(10)/SO(7); Z) = H*(SO(9)/SO(7); Z), which has torsion (Borel 1953, Props. 10.1, 10.4)"};
  return {TriState::Unknown, kSilent};
}

Cited<TriState> orientable_fact(const Irreducible& d) {
  if (d.family() == Family::IV)
    return {lie_sphere_orientable(d.param(0)) ? TriState::Yes : TriState::No,
            "(S^1 x S^{n-1})/(Z/2) is orientable iff the antipodal map of S^{n-1} preserves "
            "orientation, i.e. iff n is even"};
  return {TriState::Unknown, "orientability is computed for Lie spheres only"};
}

DegreeMultiset arithmetic_degrees(std::int64_t first, std::int64_t last, std::int64_t step) {
  std::vector<std::int64_t> ds;
  for (std::int64_t d = first; d <= last; d += step) ds.push_back(d);
  return DegreeMultiset(std::move(ds));
}

std::optional<Cited<CoverPoincare>> cover_fact(const Irreducible& d) {
  switch (d.family()) {
    case Family::I: {
      const auto p = d.param(0), q = d.param(1);
      if (p == q)
        return Cited<CoverPoincare>{
          {exterior_poincare(unitary_generators(q)), CoverKind::Self},
          "H*(U(q)) is exterior on generators of degrees 1, 3, ..., 2q-1 (Borel); the listing "
          "1, 3, ..., 4q-1 is rejected since its degree sum 4q^2 exceeds dim U(q) = q^2"};
      return Cited<CoverPoincare>{
        {exterior_poincare(arithmetic_degrees(2 * (p - q) + 1, 2 * p - 1, 2)), CoverKind::Self},
        "H*(U(p)/U(p-q)) = H*(S^{2(p-q)+1} x ... x S^{2p-1}) (Borel 1953, Prop. 9.1)"};
    }
    case Family::II: {
      const auto n = d.param(0);
      if (n % 2 == 0)
        return Cited<CoverPoincare>{
          {exterior_poincare(arithmetic_degrees(1, 2 * n - 3, 4)), CoverKind::Self},
          "H*(U(2q)/Sp(q)) is exterior on generators of degrees 1, 5, ..., 4q-3 (Borel 1953, Prop. 31.3)"};
      const auto r = n / 2;
      return Cited<CoverPoincare>{
        {exterior_poincare(arithmetic_degrees(5, 4 * r + 1, 4)), CoverKind::Self},
        "U(2r+1)/Sp(r) = S^1 x B since H^2(B) = 0 kills the Chern class; with H*(U(2r+1)/Sp(r)) = "
        "H*(S^1 x S^5 x ... x S^{4r+1}), Kunneth gives H*(B) = H*(S^5 x ... x S^{4r+1})"};
    }
    case Family::IV: {
      const auto n = d.param(0);
      return Cited<CoverPoincare>{
        {kunneth(GradedPoly({{0, 1}, {1, 1}}), GradedPoly({{0, 1}, {n - 1, 1}})), CoverKind::CanonicalZCover},
        "every finite cover of L^n with pi_1 = Z is S^1 x S^{n-1}, Poincare polynomial (1+t)(1+t^{n-1})"};
    }
    case Family::III:
    case Family::V:
    case Family::VI:
      break;
  }
  return std::nullopt;
}

CoverKind combine_kinds(CoverKind a, CoverKind b) {
  if (a == CoverKind::Unavailable || b == CoverKind::Unavailable) return CoverKind::Unavailable;
  if (a == b) return a;
  const auto mixed_z = [](CoverKind x, CoverKind y) {
    return x == CoverKind::Self && y == CoverKind::CanonicalZCover;
  };
  if (mixed_z(a, b) || mixed_z(b, a)) return CoverKind::CanonicalZCover;
  return CoverKind::Unavailable;
}

} // namespace

Pi1Desc pi1_of(const Irreducible& d) { return pi1_fact(d).value; }
TriState pi2_nonzero_of(const Irreducible& d) { return pi2_fact(d).value; }
TriState pi9_nonzero_of(const Irreducible& d) { return pi9_fact(d).value; }
TriState torsion_free_of(const Irreducible& d) { return torsion_fact(d).value; }
TriState orientable_of(const Irreducible& d) { return orientable_fact(d).value; }

DegreeMultiset unitary_generators(std::int64_t q) { return arithmetic_degrees(1, 2 * q - 1, 2); }

std::optional<CoverPoincare> cover_poincare_of(const Irreducible& d) {
  auto f = cover_fact(d);
  if (!f) return std::nullopt;
  return std::move(f->value);
}

InvariantVector invariant_vector(const Irreducible& d) {
  InvariantVector v;
  const ShilovModel model = shilov_model(d);
  v.shilov_dim = model_dim(model);
  v.citations.push_back({"shilov_dim", "dimension of the boundary model " + model.to_string()});

  auto pi1 = pi1_fact(d);
  v.pi1 = pi1.value;
  v.citations.push_back({"pi1", std::move(pi1.anchor)});

  auto pi2 = pi2_fact(d);
  v.pi2_nonzero = pi2.value;
  v.citations.push_back({"pi2_nonzero", std::move(pi2.anchor)});

  auto pi9 = pi9_fact(d);
  v.pi9_nonzero = pi9.value;
  v.citations.push_back({"pi9_nonzero", std::move(pi9.anchor)});

  auto tor = torsion_fact(d);
  v.h_torsion_free = tor.value;
  v.citations.push_back({"h_torsion_free", std::move(tor.anchor)});

  auto ori = orientable_fact(d);
  v.orientable = ori.value;
  v.citations.push_back({"orientable", std::move(ori.anchor)});

  if (auto cover = cover_fact(d)) {
    v.cover_poincare = std::move(cover->value.poly);
    v.cover_kind = cover->value.kind;
    v.citations.push_back({"cover_poincare", std::move(cover->anchor)});
  } else {
    v.cover_kind = CoverKind::Unavailable;
    v.citations.push_back({"cover_poincare", "no cover Poincare polynomial is cited for this type"});
  }
  return v;
}

InvariantVector invariant_vector(const DomainSpec& d) {
  if (d.is_irreducible()) return invariant_vector(d.irreducible());

  InvariantVector v;
  v.pi2_nonzero = TriState::No;
  v.pi9_nonzero = TriState::No;
  v.h_torsion_free = TriState::Yes;
  v.orientable = TriState::Yes;
  v.cover_poincare = GradedPoly::one();
  v.cover_kind = CoverKind::Self;

  for (const auto& f : d.factors()) {
    InvariantVector fv = invariant_vector(f);
    v.shilov_dim += fv.shilov_dim;
    v.pi1.free_rank += fv.pi1.free_rank;
    v.pi1.is_trivial = v.pi1.is_trivial && fv.pi1.is_trivial;
    v.pi1.finite_part_known_trivial = v.pi1.finite_part_known_trivial && fv.pi1.finite_part_known_trivial;
    v.pi2_nonzero = combine_any(v.pi2_nonzero, fv.pi2_nonzero);
    v.pi9_nonzero = combine_any(v.pi9_nonzero, fv.pi9_nonzero);
    v.h_torsion_free = combine_all(v.h_torsion_free, fv.h_torsion_free);
    v.orientable = combine_all(v.orientable, fv.orientable);

    v.cover_kind = combine_kinds(v.cover_kind, fv.cover_kind);
    if (v.cover_kind == CoverKind::Unavailable || !fv.cover_poincare)
      v.cover_poincare.reset();
    else
      v.cover_poincare = kunneth(*v.cover_poincare, *fv.cover_poincare);

    const std::string prefix = f.to_string() + ": ";
    for (auto& c : fv.citations) v.citations.push_back({c.field, prefix + c.anchor});
  }
  if (!v.cover_poincare) v.cover_kind = CoverKind::Unavailable;
  return v;
}

bool cover_kinds_comparable(const InvariantVector& a, const InvariantVector& b) {
  if (!a.cover_poincare || !b.cover_poincare) return false;
  if (a.cover_kind == b.cover_kind) return a.cover_kind != CoverKind::Unavailable;
  const auto in_z_family = [](CoverKind k) {
    return k == CoverKind::Self || k == CoverKind::CanonicalZCover;
  };
  return in_z_family(a.cover_kind) && in_z_family(b.cover_kind) &&
         a.pi1.free_rank == b.pi1.free_rank;
}

namespace {

bool tri_states_conflict(TriState a, TriState b) {
  return a != TriState::Unknown && b != TriState::Unknown && a != b;
}

} // namespace

bool agree_on_known_fields(const InvariantVector& a, const InvariantVector& b) {
  if (a.shilov_dim != b.shilov_dim) return false;
  if (a.pi1.free_rank != b.pi1.free_rank || a.pi1.is_trivial != b.pi1.is_trivial) return false;
  if (tri_states_conflict(a.pi2_nonzero, b.pi2_nonzero)) return false;
  if (tri_states_conflict(a.pi9_nonzero, b.pi9_nonzero)) return false;
  if (tri_states_conflict(a.h_torsion_free, b.h_torsion_free)) return false;
  if (tri_states_conflict(a.orientable, b.orientable)) return false;
  if (cover_kinds_comparable(a, b) && !(*a.cover_poincare == *b.cover_poincare)) return false;
  return true;
}

std::string citation_for(const InvariantVector& v, std::string_view field) {
  std::string out;
  for (const auto& c : v.citations) {
    if (c.field != field) continue;
    if (!out.empty()) out += "; ";
    out += c.anchor;
  }
  return out;
}

AlexanderInputs default_alexander_inputs() {
  const auto v = Irreducible::type_v();
  return {ambient_dim(v), model_dim(shilov_model(v)), ambient_dim(Irreducible::type_i(5, 1)),
          // dim U + dim V for type V, rank 1, in Satake's tables.
          21};
}

AlexanderTrace type_v_alexander_check() { return type_v_alexander_check(default_alexander_inputs()); }

AlexanderTrace type_v_alexander_check(const AlexanderInputs& in) {
  AlexanderTrace t;
  t.boundary_sphere_dim = in.domain_dim - 1;
  t.shilov_dim = in.shilov_dim;
  t.fiber_dim = in.fiber_dim;
  // The complement Y fibres over X with contractible fibre D_{I(5,1)}, and Y
  // is open in the boundary sphere.
  t.base_dim = t.boundary_sphere_dim - t.fiber_dim;
  // H^q(S) ~ H_{N-q-1}(S^N \ S) at q = 1.
  t.duality_degree = t.boundary_sphere_dim - 1 - 1;

  t.boundary_ok = t.boundary_sphere_dim == 31;
  t.shilov_ok = t.shilov_dim == 24;
  t.fiber_ok = t.fiber_dim == 10;
  t.base_ok = t.base_dim == 21 && t.base_dim == in.cited_base_dim;
  t.vanishing_ok = t.duality_degree > t.base_dim;
  return t;
}

std::string AlexanderTrace::to_string() const {
  auto mark = [](bool ok) { return ok ? "ok" : "FAIL"; };
  return "boundary = S^" + std::to_string(boundary_sphere_dim) + " [" + mark(boundary_ok) + "], " +
         "shilov dim " + std::to_string(shilov_dim) + " [" + mark(shilov_ok) + "], " +
         "fiber dim " + std::to_string(fiber_dim) + " [" + mark(fiber_ok) + "], " +
         "base dim " + std::to_string(base_dim) + " [" + mark(base_ok) + "], " +
         std::to_string(duality_degree) + " > " + std::to_string(base_dim) + " [" +
         mark(vanishing_ok) + "]";
}

} // namespace shilovkit
