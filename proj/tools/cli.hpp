#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fracsl/convergence.hpp"
#include "fracsl/problem.hpp"

namespace fracsl::cli {

enum class Mode { solve, study, validate };
enum class Format { csv, json };

/// Everything one invocation needs; identical configs produce byte-identical
/// output.
struct RunConfig {
    Mode mode = Mode::solve;
    double alpha = 0.5;
    double lambda = -3.0;
    std::string q_text = "0";
    double b = 1.0;
    double boundary_value = 1.0;  // L
    std::size_t intervals = 0;    // solve mode
    std::vector<std::size_t> n_list;
    std::vector<ProbeFraction> probes;  // study mode; defaults to 1/4, 1/2, 3/4
    std::string output_path;            // empty: stdout
    Format format = Format::csv;
    int precision = 8;
};

/// Parse q_text and build the ProblemSpec; parse failures become
/// std::domain_error with the byte offset in the message.
ProblemSpec to_problem(const RunConfig& config);

/// "1/4,1/2,3/4" or "0.25,0.5,0.75" (mixing allowed).
std::vector<ProbeFraction> parse_probes(const std::string& text);

/// "256,512,1024" -> {256, 512, 1024}.
std::vector<std::size_t> parse_n_list(const std::string& text);

void write_solve_csv(std::ostream& out, const Solution& solution, int precision);
void write_solve_json(std::ostream& out, const RunConfig& config, const Solution& solution);
void write_study_csv(std::ostream& out, const std::vector<ConvergenceRecord>& records,
                     int precision);
void write_study_json(std::ostream& out, const RunConfig& config, const Solution& finest,
                      const std::vector<ConvergenceRecord>& records);

/// Run the validation battery, one "name: PASS/FAIL" line per check.
/// Returns 0 when everything passes, 2 otherwise.
int run_validate(const RunConfig& config, std::ostream& out);

/// Full command line. Exit codes: 0 success, 1 domain/config/parse error,
/// 2 numerical failure.
int run(int argc, const char* const* argv);

}  // namespace fracsl::cli
