#ifndef OTCERT_CLI_HPP
#define OTCERT_CLI_HPP

// Job specifications, built-in examples and report generation behind the
// otcert command-line tool.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "otcert/interval.hpp"

namespace otcert::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
    kCertified = 0,
    kRefuted = 1,
    kHeuristic = 2,
    kInvalidDatum = 3,
    kInternalFailure = 4,
};

struct ParseError : std::runtime_error {
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line(line),
          column(column) {}
    int line;
    int column;
};

/// Input job. Vectors are integer coordinates, constant term first.
struct JobSpec {
    std::string name;
    std::vector<Integer> polynomial;
    std::vector<std::vector<Integer>> units;
    std::vector<std::vector<Integer>> subfield_hints;
    std::optional<std::vector<int>> real_order;
    std::optional<std::vector<bool>> conjugate;
    std::optional<long> precision_bits;
    std::optional<long> exponent_bound;
    std::optional<long> height_bound;
    std::optional<long> word_bound;
    std::optional<double> tolerance;
    std::optional<std::uint64_t> seed;
    /// "text" or "json".
    std::optional<std::string> format;
};

/// Key-value text, or JSON when the first non-blank character is '{'.
/// Throws ParseError with a 1-based position.
JobSpec parse_jobspec(std::string_view text);
/// Key-value rendering accepted by parse_jobspec.
std::string render_jobspec(const JobSpec& spec);

std::vector<std::string> builtin_example_names();
/// Short description of a built-in example; empty for unknown names.
std::string builtin_example_summary(std::string_view name);
std::optional<JobSpec> builtin_example(std::string_view name);

/// Settings after merging defaults, the job file, environment and flags.
struct Options {
    long precision_bits = 192;
    long exponent_bound = 10;
    long height_bound = 3;
    std::optional<long> word_bound;
    double tolerance = 1e-30;
    std::uint64_t seed = 1;
    bool json = false;
    bool timings = false;
    long samples = 100;
    /// witness: 1-based generator index, or an explicit element.
    std::optional<long> witness_generator;
    std::optional<std::vector<Integer>> witness_element;
    std::optional<std::vector<Integer>> witness_translation;
    /// orbit: starting point as (re, im) pairs.
    std::optional<std::vector<std::pair<double, double>>> point;
};

/// Values given explicitly on the command line or in the environment.
struct Overrides {
    std::optional<long> precision_bits, exponent_bound, height_bound, word_bound;
    std::optional<double> tolerance;
    std::optional<std::uint64_t> seed;
    std::optional<bool> json;
};

/// defaults < job file < overrides.
Options resolve_options(const JobSpec& spec, const Overrides& overrides, Options base = {});

struct RunResult {
    nlohmann::json report;
    int exit_code = kInternalFailure;
    std::string text;
};

/// analyze, certify, witness or orbit on a job.
RunResult run(std::string_view command, const JobSpec& spec, const Options& options);
/// The injectivity spot check on the two built-in examples.
RunResult run_injectivity(const Options& options);
/// Report for a job that could not be read.
RunResult parse_failure(std::string_view command, const std::string& message, std::optional<ParseError> where);

/// {"mid": decimal string, "rad_log2": exponent or null when exact}.
nlohmann::json number_json(const Interval& x);

/// Integers as JSON numbers when they fit in 64 bits, strings otherwise.
nlohmann::json integer_json(const Integer& x);

}  // namespace otcert::cli

#endif
