#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "abcdoo/ckb.hpp"
#include "abcdoo/params.hpp"

namespace abcdoo::cli {

enum class Command { generate, measure, ckb };

struct RunConfig {
    Command command = Command::generate;
    Parameters params;
    CkbSpec ckb;
    std::filesystem::path out_dir = ".";
    std::optional<std::filesystem::path> degree_file;  ///< one degree per line
    std::optional<std::filesystem::path> size_file;    ///< one primary community size per line
    std::filesystem::path input_edges;                 ///< measure
    std::filesystem::path input_memberships;           ///< measure
    bool emit_coordinates = false;
    bool emit_provenance = false;
    bool emit_stats = false;
};

/// Raised for malformed command lines; maps to exit status 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown for --help; text is the usage for the requested subcommand.
struct HelpRequested {
    std::string text;
};

/// Parses "key = value" lines; '#' starts a comment. Keys are flag names.
std::vector<std::pair<std::string, std::string>> parse_config_text(const std::string& text);

/// args[0] is the subcommand. Config-file keys are applied first and command
/// line flags override them. When config_text is empty, a --config flag in
/// args names the file to read. Throws UsageError or ValidationError.
RunConfig parse_config(const std::vector<std::string>& args, std::optional<std::string> config_text = std::nullopt);

int run_generate(const RunConfig& cfg);
int run_measure(const RunConfig& cfg);
int run_ckb(const RunConfig& cfg);

/// Full driver: 0 success, 2 validation, 3 generation failure.
int main(int argc, char** argv);

} // namespace abcdoo::cli
