#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace shy::cli {

enum class ReportFormat { text, json };

/// Exit statuses shared by every command.
enum ExitStatus : int {
    exit_success = 0,        // property holds / audit passed / construction done
    exit_property_false = 1, // expectation failed or counterexample found
    exit_input_error = 2,    // unreadable, malformed or inconsistent input
};

struct RunConfig {
    std::string command; // check, components, product, wedge, enumerate, verify
    std::string suite;   // verify only; "all" runs every suite
    std::optional<std::filesystem::path> domain;
    std::optional<std::filesystem::path> codomain;
    std::optional<std::filesystem::path> map;
    std::vector<std::filesystem::path> inputs; // positional files
    std::optional<std::filesystem::path> out;
    std::optional<std::string> expect;
    std::optional<std::string> junction; // JSON point, wedge only
    std::optional<std::string> filter;   // enumerate only
    std::optional<std::uint64_t> limit;  // enumerate only
    std::optional<std::int64_t> bound;
    std::map<std::string, std::int64_t> params; // suite knobs: xlen, ylen, m, n, kmax, k, radius
    bool count_only = false;
    ReportFormat format = ReportFormat::text;
};

/// Runs one command. Reports go to `out` (or config.out), diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it. --help exits 0; usage errors exit 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace shy::cli
