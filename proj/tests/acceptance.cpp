// Acceptance driver: one PASS/FAIL line per criterion. Every check is an exact
// equality in Q(q), so there is no numeric tolerance; only the time budgets vary.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qsp/cli.hpp"

using namespace qsp;

namespace {

constexpr double kTolerance = 0.0;  // exact arithmetic

struct Criterion {
    int id;
    const char* title;
    double budget_s;  // <= 0: no budget
    std::function<SuiteReport()> run;
};

SuiteReport suites(const std::vector<std::string>& names, const SuiteOptions& opt = {}) {
    SuiteReport all{"combined", {}};
    for (const auto& n : names) all.merge(run_suite(n, opt));
    return all;
}

// The genfun suite plus a run with a corrupted eta coefficient, which must fail.
SuiteReport genfun_with_mutation() {
    SuiteReport r = run_suite("genfun");
    SuiteOptions opt;
    opt.mutation = "eta-f3";
    const SuiteReport m = run_suite("genfun", opt);
    std::string where;
    for (const auto& p : m.points)
        if (!p.pass && where.empty()) where = p.params + ": " + p.detail;
    r.add("mutated eta coefficient rejects the suite", !m.pass(), where.empty() ? "mutation not detected" : where);
    return r;
}

SuiteReport axioms() {
    SuiteReport r = run_suite("axioms");
    const FiltrationStats s = filtration_stats();
    r.add("filtration over criteria 6-10 applications=" + std::to_string(s.applications),
          s.applications > 0 && s.violations == 0, std::to_string(s.violations) + " violations");
    return r;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Chebyshev golden values", 1, [] { return suites({"cheby"}); }},
        {2, "Hermite identities", 10, [] { return suites({"hermite"}); }},
        {3, "bivariate vs univariate Serre expansions", 10, [] { return suites({"serre-bi-uni"}); }},
        {4, "P_N recursion vs closed form", 10, [] { return suites({"pn"}); }},
        {5, "generating functions", 60, genfun_with_mutation},
        {6, "ansatz, cases I-III", 120,
         [] {
             reset_filtration_stats();
             return suites({"star-case1", "star-case2", "star-case3"});
         }},
        {7, "relation, case I", 60, [] { return suites({"theorem-case1"}); }},
        {8, "relation, case II and worked examples", 120, [] { return suites({"theorem-case2", "examples"}); }},
        {9, "relation, case III and its sums", 30, [] { return suites({"theorem-case3", "sums"}); }},
        {10, "engine axioms", 0, axioms},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        SuiteReport rep;
        std::string err;
        try {
            rep = c.run();
        } catch (const std::exception& e) {
            err = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = c.budget_s <= 0 || secs < c.budget_s;
        const bool ok = err.empty() && rep.pass() && in_time;
        all_ok = all_ok && ok;

        char budget[32] = "no budget";
        if (c.budget_s > 0) std::snprintf(budget, sizeof budget, "budget %.0fs", c.budget_s);
        std::printf("%s criterion %d: %s (%zu points, %.2fs, %s, tolerance %g)\n", ok ? "PASS" : "FAIL", c.id,
                    c.title, rep.points.size(), secs, budget, kTolerance);
        if (!err.empty()) std::printf("    error: %s\n", err.c_str());
        if (!in_time) std::printf("    over budget\n");
        for (const auto& p : rep.points)
            if (!p.pass) std::printf("    FAIL %s: %s\n", p.params.c_str(), p.detail.c_str());
        std::fflush(stdout);
    }
    return all_ok ? 0 : 1;
}
