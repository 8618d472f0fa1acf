#pragma once

// Command-line front end and the verification suites it shares with the
// acceptance driver.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qsp/relations.hpp"

namespace qsp {

struct SuiteOptions {
    // Each suite has its own a_ij range and degree bound; these override them.
    std::optional<std::vector<int>> aij_range;
    std::optional<int> max_degree;
    std::vector<std::pair<int, int>> weights = kDefaultWeights;
    int uni_order = 12;  // S for the univariate series
    int biv_s = 10;      // (S, T) for the bivariate ones
    int biv_t = 6;
    std::string mutation;  // test hook; empty in normal use
};

const std::vector<std::string>& suite_names();
// Runs a named suite ("all" runs every suite in order); throws UsageError for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});
Json report_to_json(const SuiteReport& r);
std::string report_to_text(const SuiteReport& r);

enum class Subcommand { poly, relation, verify };

struct Command {
    Subcommand sub = Subcommand::poly;
    std::string family;
    std::optional<int> m, n;
    int N = 2;
    int a = 0;
    int di = 1;
    int dj = 1;
    StarCase star_case = StarCase::I;
    bool examples = false;
    Format format = Format::text;
    std::string suite = "all";
    SuiteOptions suite_options;
};

const std::vector<std::string>& poly_families();

// Thrown by parse_args for --help; carries the usage text.
struct HelpRequested {
    std::string text;
};

// Throws UsageError naming the offending flag.
Command parse_args(const std::vector<std::string>& args);
// Writes the result to out; returns 0 on success, 1 on a failed verification.
int execute(const Command& c, std::ostream& out);
// Full driver: parse, execute, map errors to exit codes (usage 2, failure 1).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "0..-4" or "-2" into the listed integers.
std::vector<int> parse_int_range(const std::string& s);

}  // namespace qsp
