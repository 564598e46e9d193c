#include "cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "shilovkit/distinguish.hpp"
#include "shilovkit/domains.hpp"
#include "shilovkit/serialize.hpp"
#include "shilovkit/verify.hpp"

namespace shilovkit::cli {

namespace {

bool parse_or_report(const std::string& text, std::optional<DomainSpec>& spec, std::ostream& err) {
  try {
    spec = parse_domain(text);
    return true;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return false;
  }
}

} // namespace

int cmd_info(const std::string& text, const Output& o, std::ostream& out, std::ostream& err) {
  std::optional<DomainSpec> spec;
  if (!parse_or_report(text, spec, err)) return kUsage;
  if (o.format == OutputFormat::Json)
    out << domain_info_json(*spec, o.cite).dump(2) << '\n';
  else
    out << domain_info_text(*spec, o.cite);
  return kOk;
}

int cmd_distinguish(const std::string& lhs, const std::string& rhs, const Output& o, std::ostream& out,
                    std::ostream& err) {
  std::optional<DomainSpec> a, b;
  if (!parse_or_report(lhs, a, err) || !parse_or_report(rhs, b, err)) return kUsage;
  const Certificate c = distinguish(*a, *b);
  if (o.format == OutputFormat::Json)
    out << to_json(c, o.cite).dump(2) << '\n';
  else
    out << certificate_text(c, o.cite);
  return c.is_inconclusive() ? kInconclusive : kOk;
}

int cmd_verify(std::int64_t max_dim, unsigned threads, const Output& o, std::ostream& out, std::ostream& err) {
  if (max_dim < 2) {
    err << "error: --max-dim must be at least 2\n";
    return kUsage;
  }
  const VerificationReport r = verify_theorem(max_dim, {threads});
  if (o.format == OutputFormat::Json)
    out << to_json(r).dump(2) << '\n';
  else
    out << report_text(r);
  return r.verified() ? kOk : kVerificationFailed;
}

int cmd_coincidences(std::int64_t max_dim, int factors, const Output& o, std::ostream& out, std::ostream& err) {
  if (max_dim < 2 || factors < 1) {
    err << "error: --max-dim must be at least 2 and --factors at least 1\n";
    return kUsage;
  }
  const auto cs = find_coincidences(max_dim, factors);
  if (o.format == OutputFormat::Json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& c : cs) list.push_back(to_json(c));
    nlohmann::json doc = {{"max_ambient_dim", max_dim}, {"max_factors", factors}, {"coincidences", list}};
    out << doc.dump(2) << '\n';
  } else {
    out << coincidences_text(cs);
  }
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shilov boundary invariants of irreducible bounded symmetric domains"};
  app.name("shilovkit");
  app.require_subcommand(1);

  std::string format = "text";
  bool no_cite = false;
  auto add_output_flags = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--no-cite", no_cite, "Omit citations");
  };

  std::string spec, lhs, rhs;
  std::int64_t max_dim = 400;
  std::int64_t coincidence_dim = 20;
  int factors = 2;
  unsigned threads = 1;

  auto* info = app.add_subcommand("info", "Show the Shilov model and invariant vector of a domain");
  info->add_option("spec", spec, "Domain, e.g. \"I(3,2)\" or \"I(1,1) x I(4,1)\"")->required();
  add_output_flags(info);

  auto* dist = app.add_subcommand("distinguish", "Certify whether two domains' Shilov boundaries differ");
  dist->add_option("lhs", lhs, "First domain")->required();
  dist->add_option("rhs", rhs, "Second domain")->required();
  add_output_flags(dist);

  auto* verify = app.add_subcommand("verify", "Separate all irreducible domains up to a dimension bound");
  verify->add_option("--max-dim", max_dim, "Largest ambient real dimension")
    ->capture_default_str()
    ->check(CLI::Range(std::int64_t{2}, kMaxParameter));
  verify->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
  add_output_flags(verify);

  auto* coin = app.add_subcommand("coincidences", "Find products whose invariants cannot be told apart");
  coin->add_option("--max-dim", coincidence_dim, "Largest ambient real dimension")
    ->capture_default_str()
    ->check(CLI::Range(std::int64_t{2}, kMaxParameter));
  coin->add_option("--factors", factors, "Maximum number of product factors")
    ->capture_default_str()
    ->check(CLI::Range(1, 8));
  add_output_flags(coin);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Output o{format == "json" ? OutputFormat::Json : OutputFormat::Text, !no_cite};
  if (*info) return cmd_info(spec, o, out, err);
  if (*dist) return cmd_distinguish(lhs, rhs, o, out, err);
  if (*verify) return cmd_verify(max_dim, threads, o, out, err);
  return cmd_coincidences(coincidence_dim, factors, o, out, err);
}

} // namespace shilovkit::cli
