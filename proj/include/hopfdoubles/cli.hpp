#pragma once

// File formats, named verification suites and report output behind the
// hopfdoubles command-line tool.
//
// Algebra files are JSON with one structure-constant entry per line and a
// fixed key order, so writing a parsed canonical file reproduces it byte for
// byte. Scalars are strings: "3/4" over Q, "2 mod 5" over F_5.

#include "hopfdoubles/doubles.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hopfdoubles {

inline constexpr int kAlgebraFormatVersion = 1;
inline constexpr int kReportSchemaVersion = 1;

struct ParseOptions {
    bool skip_axioms = false;
};

std::string serialize_algebra(const HopfData& h);
/// Throws ParseError (with line and column), FieldMismatch, or AxiomViolation
/// when the axioms fail (not checked with skip_axioms).
HopfData parse_algebra_file(std::string_view text, ParseOptions options = {});

/// A double with its factors, derived multiplication, straightening rule and
/// recipe; Hopf data is included when present.
std::string serialize_double(const DoubleAlgebra& d);
DoubleAlgebra parse_double_file(std::string_view text);

struct RunReport {
    std::string suite;
    std::string instance;
    std::map<std::string, int> params;
    std::vector<VerificationReport> checks;
    double wall_time_s = 0;
    std::optional<std::uint64_t> seed;

    bool passed() const { return all_passed(checks); }
};

std::string report_to_json(const RunReport& r);
RunReport report_from_json(std::string_view text);
/// Human-readable; every failed witness in full.
std::string format_report(const RunReport& r);

struct SuiteParams {
    std::optional<int> k, m, l, n, k1, cutoff;
    bool skip_axioms = false;
    /// Largest Hopf algebra dimension accepted for exhaustive sweeps.
    std::size_t max_dim = 64;
};

std::vector<std::string> suite_names();

/// A registered instance name (with --cutoff filling in a missing N for the
/// graded families) or a path to an algebra file.
HopfData resolve_instance(const std::string& instance, const SuiteParams& params);

/// Throws UnknownSuite, UnknownInstance, and whatever the suite itself raises.
RunReport run_suite(const std::string& suite, const std::string& instance, const SuiteParams& params = {});

std::vector<std::string> export_recipes();
/// Builds the named double for an instance. Throws RecipeMismatch for an
/// unknown recipe and the build errors of the construction.
DoubleAlgebra build_export(const std::string& recipe, const std::string& instance, const SuiteParams& params = {});

/// 0 pass, 1 verification failure, 2 usage or constraint error, 3 parse error.
int exit_code_for(ErrorKind kind);

}  // namespace hopfdoubles
