// Command-line front end: info, distinguish, verify, coincidences.

#ifndef SHILOVKIT_TOOLS_CLI_HPP_
#define SHILOVKIT_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>

namespace shilovkit::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kVerificationFailed = 2,
  kInconclusive = 3,
};

enum class OutputFormat { Text, Json };

struct Output {
  OutputFormat format = OutputFormat::Text;
  bool cite = true;
};

int cmd_info(const std::string& spec, const Output& o, std::ostream& out, std::ostream& err);
int cmd_distinguish(const std::string& lhs, const std::string& rhs, const Output& o, std::ostream& out,
                    std::ostream& err);
int cmd_verify(std::int64_t max_dim, unsigned threads, const Output& o, std::ostream& out, std::ostream& err);
int cmd_coincidences(std::int64_t max_dim, int factors, const Output& o, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace shilovkit::cli

#endif // SHILOVKIT_TOOLS_CLI_HPP_
