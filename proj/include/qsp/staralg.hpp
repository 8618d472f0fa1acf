#pragma once

// Star-product rewriting on normal forms  L * F_i^m [F_j F_i^n] * R  of the
// partial parabolic algebra, for the three rank-two cases.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qsp/orthopoly.hpp"

namespace qsp {

// F_i^m, or F_i^m F_j F_i^n when sandwich is set.
struct FWord {
    bool sandwich = false;
    int m = 0;
    int n = 0;

    static FWord pure(int m);
    static FWord sw(int m, int n);
    int degree() const { return sandwich ? m + n + 1 : m; }
    std::string to_text() const;
    std::string to_latex() const;
    friend auto operator<=>(const FWord&, const FWord&) = default;
    friend bool operator==(const FWord&, const FWord&) = default;
};

struct StarKey {
    Monomial left;
    FWord word;
    Monomial right;
    friend auto operator<=>(const StarKey&, const StarKey&) = default;
    friend bool operator==(const StarKey&, const StarKey&) = default;
};

class StarElement {
public:
    StarElement() = default;
    explicit StarElement(TablePtr table) : table_(std::move(table)) {}
    static StarElement word(const TablePtr& table, FWord w, const RationalQ& c = RationalQ(1));

    const TablePtr& table() const { return table_; }
    const std::map<StarKey, RationalQ>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    int degree() const;  // -1 for zero
    RationalQ coeff(const StarKey& k) const;

    // Adds c * left * w * right; the monomials must respect the symbol sides.
    void add(const RationalQ& c, const Monomial& left, FWord w, const Monomial& right);

    StarElement operator-() const;
    StarElement& operator+=(const StarElement& o);
    StarElement& operator-=(const StarElement& o);
    friend StarElement operator+(StarElement a, const StarElement& b) { return a += b; }
    friend StarElement operator-(StarElement a, const StarElement& b) { return a -= b; }
    friend bool operator==(const StarElement& a, const StarElement& b);

    StarElement scaled(const RationalQ& s) const;
    // Multiplies by a coefficient polynomial whose symbols are all right-side
    // (attached after the word) or all left-side (attached before it).
    StarElement times_right(const CoeffPoly& c) const;
    StarElement times_left(const CoeffPoly& c) const;

    std::string to_text() const;
    std::string to_latex() const;

private:
    void check_table(const TablePtr& t);
    TablePtr table_;
    std::map<StarKey, RationalQ> terms_;
};

// Global counters over every rule application since the last reset.
struct FiltrationStats {
    std::uint64_t applications = 0;
    std::uint64_t violations = 0;
};
FiltrationStats filtration_stats();
void reset_filtration_stats();

// Rule engine for one case and one Cartan datum. The primed engine realizes the
// star product for the parameter family c' (symbols Z', d', ...).
class StarEngine {
public:
    StarEngine(StarCase c, const RankTwoData& data, TablePtr table = nullptr, bool primed = false);

    StarCase star_case() const { return case_; }
    const RankTwoData& data() const { return data_; }
    const TablePtr& table() const { return table_; }
    bool primed() const { return primed_; }

    StarElement one() const;
    StarElement word(FWord w) const { return StarElement::word(table_, w); }

    StarElement left_Fi(const StarElement& e) const;
    StarElement left_Fj(const StarElement& e) const;
    StarElement right_Fi(const StarElement& e) const;

    // F_i^{*k} and F_i^{*s} * F_j * F_i^{*t}, memoized.
    const StarElement& power_Fi(int k) const;
    const StarElement& sandwich_star(int s, int t) const;

    StarElement eval_poly(const OrthoPoly& p) const;
    StarElement insertion(const OrthoPoly& w) const;

    // b_i^2/4 and the symbol monomials the rules use.
    CoeffPoly beta() const;
    CoeffPoly d_symbol() const;
    CoeffPoly dt_symbol() const;

private:
    struct RuleTerm {
        RationalQ c;
        Monomial left;
        FWord word;
        Monomial right;
    };
    using Rule = std::vector<RuleTerm>;

    Rule rule_left_Fi(const FWord& w) const;
    Rule rule_left_Fj(const FWord& w) const;
    Rule rule_right_Fi(const FWord& w) const;
    StarElement apply(const StarElement& e, Rule (StarEngine::*rule)(const FWord&) const, bool from_right,
                      bool fj) const;
    RationalQ qi(long k) const { return data_.qi(k); }

    StarCase case_;
    RankTwoData data_;
    TablePtr table_;
    bool primed_;
    RationalQ beta_scalar_, Q_, r_, lambda_, qdiff_inv_;
    Monomial beta_mono_, d_mono_, dt_mono_;
    Monomial ci_right_, cj_right_;  // c_i K_jK_i^{-1} Z_j and c_j K_iK_j^{-1} Z_i
    int e_kji_ = 0, e_kij_ = 0;     // F_i-crossing exponents of the K markers

    mutable std::vector<StarElement> powers_;
    mutable std::map<std::pair<int, int>, StarElement> sandwiches_;
    mutable std::vector<std::vector<OrthoPoly>> rho_, sigma_;  // right action, case II
};

// Free-function forms; the table defaults to the case's standard table.
StarElement star_left_Fi(const StarElement& e, StarCase c, const RankTwoData& data);
StarElement star_eval_poly(const OrthoPoly& p, StarCase c, const RankTwoData& data);
StarElement insertion(const OrthoPoly& w, StarCase c, const RankTwoData& data);

struct StarReport {
    bool pass = true;
    std::string detail;
    StarElement remainder;
};

// F_i^m F_j F_i^n against its star-side expansion.
StarReport verify_ansatz(int m, int n, StarCase c, const RankTwoData& data);
StarReport verify_ansatz(int m, int n, const StarEngine& eng);

// Formal bar map: scalars barred, symbols sent to their bar images, words fixed.
StarElement phi_map(const StarElement& e);

// The algebra map (A, *) -> (A, *') on elements with pure words only: each
// F_i^k = w_k(F_i)^* goes to v_k(F_i)^{*'}. The target engine must carry the
// same case and datum with the opposite priming.
StarElement phi_star(const StarElement& e, const StarEngine& source, const StarEngine& target);

// Closed-form C and D terms of case II, evaluated in the engine.
StarElement case2_C_closed(const StarEngine& eng);
StarElement case2_D_closed(const StarEngine& eng);
// d~ sum_n (-1)^n [N, n] sigma_{N-n,n}(F_i)^*, and the rho analogue times d.
StarElement case2_D_bruteforce(const StarEngine& eng);
StarElement case2_C_bruteforce(const StarEngine& eng);
// The star-side Serre combination A (insertions) for cases I and II.
StarElement serre_insertion_sum(const StarEngine& eng);
// sum_n (-1)^n [N, n] F_i^{N-n} F_j F_i^n as classical words.
StarElement serre_classical(const StarEngine& eng);
// Right side of the case III relation.
StarElement case3_rhs(const StarEngine& eng);

// Remainder of the star-Serre relation in normal form; zero when it holds.
StarElement serre_star_reduce(StarCase c, const RankTwoData& data);
StarElement serre_star_reduce(const StarEngine& eng);

// (F_i * e) * F_i against F_i * (e * F_i).
StarReport check_associativity(const StarElement& e, const StarEngine& eng);
// F_i * (F_i * e) against F_i^{*2} * e with F_i^{*2} decomposed along w_k.
StarReport check_square_action(const StarElement& e, const StarEngine& eng);

}  // namespace qsp
