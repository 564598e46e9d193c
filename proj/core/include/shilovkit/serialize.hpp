// JSON documents and text rendering for invariant vectors, certificates and
// verification reports. Field names are stable.

#ifndef SHILOVKIT_SERIALIZE_HPP_
#define SHILOVKIT_SERIALIZE_HPP_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shilovkit/distinguish.hpp"
#include "shilovkit/domains.hpp"
#include "shilovkit/invariants.hpp"
#include "shilovkit/verify.hpp"

namespace shilovkit {

/// {"shilov_dim", "pi1_free_rank", "pi1_trivial", "pi2_nonzero", "pi9_nonzero",
///  "h_torsion_free", "orientable", "cover_kind", "cover_poincare", "citations"}.
/// Tri-states are "yes"/"no"/"unknown"; cover_poincare is null when
/// unavailable; citations is empty when `cite` is false.
nlohmann::json to_json(const InvariantVector& v, bool cite = true);

/// {"result", "step", "invariant", "lhs", "rhs", "anchor", ...}. result is
/// "isomorphic", "separated" or "inconclusive".
nlohmann::json to_json(const Certificate& c, bool cite = true);

nlohmann::json to_json(const Coincidence& c);

/// Mirrors VerificationReport; elapsed is reported as "elapsed_ms".
nlohmann::json to_json(const VerificationReport& r);

/// Everything `info` prints: ambient dim, rank, tube class, model, model dim,
/// invariant vector, and Lie sphere data for type IV.
nlohmann::json domain_info_json(const DomainSpec& d, bool cite = true);

std::string domain_info_text(const DomainSpec& d, bool cite = true);
std::string certificate_text(const Certificate& c, bool cite = true);
std::string report_text(const VerificationReport& r);
std::string coincidences_text(const std::vector<Coincidence>& cs);

} // namespace shilovkit

#endif // SHILOVKIT_SERIALIZE_HPP_
