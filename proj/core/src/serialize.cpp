#include "shilovkit/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "shilovkit/shilov_model.hpp"

namespace shilovkit {

using nlohmann::json;

namespace {

json generators_json(const std::optional<GeneratorSummary>& g) {
  if (!g || !g->generators) return nullptr;
  return g->generators->degrees();
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::optional<DegreeMultiset> try_generators(const GradedPoly& p) {
  try {
    return recover_generators(p);
  } catch (const NotExteriorForm&) {
    return std::nullopt;
  }
}

} // namespace

json to_json(const InvariantVector& v, bool cite) {
  json citations = json::array();
  if (cite)
    for (const auto& c : v.citations) citations.push_back({{"field", c.field}, {"anchor", c.anchor}});
  return {
    {"shilov_dim", v.shilov_dim},
    {"pi1_free_rank", v.pi1.free_rank},
    {"pi1_trivial", v.pi1.is_trivial},
    {"pi2_nonzero", tri_state_name(v.pi2_nonzero)},
    {"pi9_nonzero", tri_state_name(v.pi9_nonzero)},
    {"h_torsion_free", tri_state_name(v.h_torsion_free)},
    {"orientable", tri_state_name(v.orientable)},
    {"cover_kind", cover_kind_name(v.cover_kind)},
    {"cover_poincare", v.cover_poincare ? json(v.cover_poincare->to_string()) : json(nullptr)},
    {"citations", std::move(citations)},
  };
}

json to_json(const Certificate& c, bool cite) {
  json j = {
    {"lhs_spec", c.lhs_spec},
    {"rhs_spec", c.rhs_spec},
    {"step", static_cast<int>(c.step())},
    {"invariant", nullptr},
    {"lhs", nullptr},
    {"rhs", nullptr},
    {"anchor", nullptr},
    {"lhs_generators", nullptr},
    {"rhs_generators", nullptr},
    {"reason", nullptr},
  };
  if (const auto* iso = std::get_if<Isomorphic>(&c.outcome)) {
    j["result"] = "isomorphic";
    j["invariant"] = step_invariant(Step::Structural);
    j["lhs"] = j["rhs"] = iso->spec.to_string();
  } else if (const auto* s = c.separated()) {
    j["result"] = "separated";
    j["invariant"] = s->invariant;
    j["lhs"] = s->lhs;
    j["rhs"] = s->rhs;
    if (cite) j["anchor"] = s->anchor;
    j["lhs_generators"] = generators_json(s->lhs_generators);
    j["rhs_generators"] = generators_json(s->rhs_generators);
  } else {
    const auto& inc = std::get<Inconclusive>(c.outcome);
    j["result"] = "inconclusive";
    j["reason"] = inc.reason;
    if (cite) j["anchor"] = inc.anchor;
  }
  j["explanation"] = explain(c);
  return j;
}

json to_json(const Coincidence& c) {
  return {{"lhs", c.lhs.to_string()}, {"rhs", c.rhs.to_string()}, {"shared", to_json(c.shared, false)}};
}

json to_json(const VerificationReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"lhs", f.lhs.to_string()}, {"rhs", f.rhs.to_string()}, {"reason", f.reason}});
  json checks = json::array();
  for (const auto& c : r.identity_checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  json coincidences = json::array();
  for (const auto& c : r.coincidences) coincidences.push_back(to_json(c));
  return {
    {"max_ambient_dim", r.max_ambient_dim},
    {"domain_count", r.domain_count},
    {"pair_count", r.pair_count},
    {"verified", r.verified()},
    {"failures", std::move(failures)},
    {"identity_checks", std::move(checks)},
    {"coincidences", std::move(coincidences)},
    {"elapsed_ms", std::chrono::duration<double, std::milli>(r.elapsed).count()},
  };
}

json domain_info_json(const DomainSpec& d, bool cite) {
  const ShilovModel model = shilov_model(d);
  const InvariantVector v = invariant_vector(d);
  json j = {
    {"spec", d.to_string()},
    {"irreducible", d.is_irreducible()},
    {"ambient_dim", ambient_dim(d)},
    {"rank", rank(d)},
    {"tube_class", d.is_irreducible() ? json(tube_class_name(tube_class(d))) : json(nullptr)},
    {"shilov_model", model.to_string()},
    {"model_exact", model.exact()},
    {"model_dim", model_dim(model)},
    {"invariants", to_json(v, cite)},
    {"cover_generators", nullptr},
    {"lie_sphere", nullptr},
  };
  if (v.cover_poincare)
    if (auto g = try_generators(*v.cover_poincare)) j["cover_generators"] = g->degrees();
  if (d.is_irreducible() && d.irreducible().family() == Family::IV) {
    const auto n = d.irreducible().param(0);
    j["lie_sphere"] = {{"n", n},
                       {"orientable", lie_sphere_orientable(n)},
                       {"bundle_trivial", lie_sphere_bundle_trivial(n)}};
  }
  return j;
}

std::string domain_info_text(const DomainSpec& d, bool cite) {
  const ShilovModel model = shilov_model(d);
  const InvariantVector v = invariant_vector(d);
  std::ostringstream out;
  auto row = [&out](const std::string& k, const std::string& val) { out << pad(k, 17) << val << '\n'; };

  row("domain", d.to_string());
  row("ambient dim", std::to_string(ambient_dim(d)));
  row("rank", std::to_string(rank(d)));
  row("tube class", d.is_irreducible() ? std::string(tube_class_name(tube_class(d))) : "n/a (product)");
  row("shilov model", model.to_string());
  row("model dim", std::to_string(model_dim(model)));
  if (d.is_irreducible() && d.irreducible().family() == Family::IV) {
    const auto n = d.irreducible().param(0);
    row("lie sphere", "L^" + std::to_string(n) + " = (S^1 x S^" + std::to_string(n - 1) + ")/(Z/2)");
    row("  orientable", lie_sphere_orientable(n) ? "yes" : "no");
    row("  bundle trivial", lie_sphere_bundle_trivial(n) ? "yes" : "no");
  }
  out << "invariants\n";
  row("  shilov_dim", std::to_string(v.shilov_dim));
  row("  pi1", v.pi1.to_string());
  row("  pi2_nonzero", std::string(tri_state_name(v.pi2_nonzero)));
  row("  pi9_nonzero", std::string(tri_state_name(v.pi9_nonzero)));
  row("  h_torsion_free", std::string(tri_state_name(v.h_torsion_free)));
  row("  orientable", std::string(tri_state_name(v.orientable)));
  if (v.cover_poincare) {
    row("  cover", v.cover_poincare->to_string() + " [" + std::string(cover_kind_name(v.cover_kind)) + "]");
    if (auto g = try_generators(*v.cover_poincare)) row("  generators", g->to_string());
  } else {
    row("  cover", "unavailable");
  }
  if (cite) {
    out << "citations\n";
    for (const auto& c : v.citations) out << "  " << pad(c.field, 15) << c.anchor << '\n';
  }
  return out.str();
}

std::string certificate_text(const Certificate& c, bool cite) {
  std::ostringstream out;
  if (c.is_isomorphic()) {
    out << "isomorphic: " << explain(c) << '\n';
    return out.str();
  }
  if (const auto* s = c.separated()) {
    out << "separated at step " << static_cast<int>(s->step) << " (" << s->invariant << ")\n"
        << "  " << c.lhs_spec << ": " << s->lhs << '\n'
        << "  " << c.rhs_spec << ": " << s->rhs << '\n';
    if (s->lhs_generators && s->rhs_generators)
      out << "  generators: " << s->lhs_generators->to_string() << " vs "
          << s->rhs_generators->to_string() << '\n';
    if (cite) out << "  reason: " << s->anchor << '\n';
    return out.str();
  }
  const auto& inc = std::get<Inconclusive>(c.outcome);
  out << "inconclusive: " << c.lhs_spec << " vs " << c.rhs_spec << "\n  " << inc.reason << '\n';
  if (cite) out << "  reason: " << inc.anchor << '\n';
  return out.str();
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "max ambient dim  " << r.max_ambient_dim << '\n'
      << "domains          " << r.domain_count << '\n'
      << "pairs            " << r.pair_count << '\n'
      << "failures         " << r.failures.size() << '\n';
  for (const auto& f : r.failures)
    out << "  " << f.lhs.to_string() << " vs " << f.rhs.to_string() << ": " << f.reason << '\n';
  out << "identity checks\n";
  for (const auto& c : r.identity_checks)
    out << "  " << (c.pass ? "PASS " : "FAIL ") << pad(c.name, 20) << c.detail << '\n';
  out << "coincidences     " << r.coincidences.size() << '\n';
  for (const auto& c : r.coincidences)
    out << "  " << c.lhs.to_string() << " ~ " << c.rhs.to_string() << '\n';
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed.count());
  out << "elapsed          " << elapsed << " s\n"
      << "result           " << (r.verified() ? "VERIFIED" : "FAILED") << '\n';
  return out.str();
}

std::string coincidences_text(const std::vector<Coincidence>& cs) {
  std::ostringstream out;
  out << cs.size() << " coincidence(s)\n";
  for (const auto& c : cs) {
    out << "  " << c.lhs.to_string() << " ~ " << c.rhs.to_string() << "  (shilov dim "
        << c.shared.shilov_dim << ", pi1 " << c.shared.pi1.to_string();
    if (c.shared.cover_poincare) out << ", cover " << c.shared.cover_poincare->to_string();
    out << ")\n";
  }
  return out.str();
}

} // namespace shilovkit
