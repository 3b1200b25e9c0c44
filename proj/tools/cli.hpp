#ifndef OPSOME_TOOLS_CLI_HPP
#define OPSOME_TOOLS_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <opsome/partitions.hpp>
#include <opsome/verify.hpp>

namespace opsome::cli
{

enum class OutputFormat { text, json, csv };

std::optional<OutputFormat> parse_format(std::string_view s);

inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;

// Smallest order `verify` accepts.
inline constexpr std::size_t min_verify_order = 64;

struct CommandResult {
    std::string output;
    std::string error;
    int exit_code = exit_ok;
};

CommandResult cmd_table(std::size_t max_n, OutputFormat format);
CommandResult cmd_verify(std::size_t order, const std::vector<std::string> &selection, OutputFormat format,
                         unsigned jobs = 1);
CommandResult cmd_oracle_check(unsigned max_n, OutputFormat format);
CommandResult cmd_claims(OutputFormat format);

// 0 when every non-informational report passed, 1 otherwise.
int exit_code_for(const std::vector<verify::Report> &reports);

std::string render_table(const std::vector<StatRecord> &rows, OutputFormat format);
std::string render_reports(const std::vector<verify::Report> &reports, std::size_t order, OutputFormat format);

// Integers that fit in 64 bits become JSON numbers; larger ones become
// decimal strings. integer_from_json accepts both.
nlohmann::json integer_to_json(const Integer &v);
Integer integer_from_json(const nlohmann::json &j);

nlohmann::json report_to_json(const verify::Report &r);
// Throws std::invalid_argument on unknown kind or status strings.
verify::Report report_from_json(const nlohmann::json &j);

// Full command line entry point; returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace opsome::cli

#endif
