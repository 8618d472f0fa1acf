#pragma once

// Polynomials in x (and y) over a CoeffPoly ring, and the Hermite, Chebyshev,
// U, P, rho and sigma families.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsp/coeffring.hpp"

namespace qsp {

class OrthoPoly {
public:
    using Key = std::pair<int, int>;  // (x exponent, y exponent)

    OrthoPoly() = default;
    explicit OrthoPoly(int arity) : arity_(arity) {}
    static OrthoPoly constant(const CoeffPoly& c, int arity = 1);
    static OrthoPoly x(int arity = 1);
    static OrthoPoly y();
    static OrthoPoly term(int i, int j, const CoeffPoly& c, int arity);

    int arity() const { return arity_; }
    const std::map<Key, CoeffPoly>& terms() const { return terms_; }
    const TablePtr& table() const { return table_; }
    bool is_zero() const { return terms_.empty(); }
    CoeffPoly coeff(int i, int j = 0) const;
    int degree_x() const;  // -1 for zero
    int total_degree() const;

    OrthoPoly operator-() const;
    OrthoPoly& operator+=(const OrthoPoly& o);
    OrthoPoly& operator-=(const OrthoPoly& o);
    friend OrthoPoly operator+(OrthoPoly a, const OrthoPoly& b) { return a += b; }
    friend OrthoPoly operator-(OrthoPoly a, const OrthoPoly& b) { return a -= b; }
    friend OrthoPoly operator*(const OrthoPoly& a, const OrthoPoly& b);
    friend bool operator==(const OrthoPoly& a, const OrthoPoly& b);

    OrthoPoly scaled(const RationalQ& s) const;
    OrthoPoly times(const CoeffPoly& c) const;
    OrthoPoly mul_x(int k = 1) const;
    OrthoPoly mul_y(int k = 1) const;
    OrthoPoly subst_x_scale(const RationalQ& c) const;  // x -> c x
    OrthoPoly swap_xy() const;
    OrthoPoly as_bivariate() const;
    OrthoPoly as_y() const;  // univariate p(x) -> p(y)
    OrthoPoly bar() const;   // cp_bar on every coefficient

    // True iff every x-exponent has the parity of p (univariate use).
    bool has_parity(int p) const;

    // Variable names are substituted verbatim (e.g. "F_i" for star evaluation).
    std::string to_text(const std::string& x = "x", const std::string& y = "y") const;
    std::string to_latex(const std::string& x = "x", const std::string& y = "y") const;

private:
    void add_term(const Key& k, const CoeffPoly& c);
    int arity_ = 1;
    TablePtr table_;
    std::map<Key, CoeffPoly> terms_;
};

// b_i^2 / 4 = 𝒵 / (q_i - q_i^{-1})^2, over the primed symbol when asked.
CoeffPoly quarter_b2(const RankTwoData& data, const TablePtr& table, bool primed = false);

// ------------------------------------------------------------ Hermite

enum class HermiteVariant { plain, w, v };

// H_m(x; base).
OrthoPoly hermite_plain(int m, const RationalQ& base);
// w_m(x; q_i^2) or v_m = w_m(x; q_i^{-2}) over the 𝒵 symbol.
OrthoPoly hermite_w(int m, const RankTwoData& data, const TablePtr& table, bool primed = false);
OrthoPoly hermite_v(int m, const RankTwoData& data, const TablePtr& table, bool primed = false);
// Same families, all indices 0..M.
std::vector<OrthoPoly> hermite_w_upto(int M, const RankTwoData& data, const TablePtr& table, bool primed = false);
std::vector<OrthoPoly> hermite_v_upto(int M, const RankTwoData& data, const TablePtr& table, bool primed = false);
// The sum form of v_m in terms of w_{m-2k}.
OrthoPoly hermite_v_sum(int m, const RankTwoData& data, const TablePtr& table, bool primed = false);

// H_{m,n}(x, y; base, r) from the bivariate three-term recursion.
OrthoPoly hermite_biv_plain(int m, int n, const RationalQ& base, const RationalQ& r);
// w_{m,n}(x, y) with r = q_i^{a_ij}.
OrthoPoly hermite_biv_w(int m, int n, const RankTwoData& data, const TablePtr& table, bool primed = false);
// Table of w_{m,n} for m <= M, n <= N, indexed [m][n].
std::vector<std::vector<OrthoPoly>> hermite_biv_w_table(int M, int N, const RankTwoData& data,
                                                          const TablePtr& table, bool primed = false);

// Expansion of the bivariate families in products of univariate ones.
OrthoPoly expand_biv_in_uni_plain(int m, int n, const RationalQ& base, const RationalQ& r);
OrthoPoly expand_biv_in_uni_w(int m, int n, const RankTwoData& data, const TablePtr& table, bool primed = false);

enum class SerreSide { bivariate, uni_wv, uni_vw };
// sum_n (-1)^n [1-a, n]_{q_i} times the chosen side, with r = q_i^a.
OrthoPoly serre_combination_biv(int a, SerreSide side, const RankTwoData& data, const TablePtr& table,
                                bool primed = false);

// ---------------------------------------------------------- Chebyshev

// C_n(x; base, r) from the three-term recursion; C_{-1} = 0.
OrthoPoly cheby_plain(int n, const RationalQ& base, const RationalQ& r);
// Classical Chebyshev U_n from U_{n+1} = 2x U_n - U_{n-1}.
OrthoPoly chebyshev_U_classical(int n);

enum class ChebyVariant { plain, rescaled_u, rescaled_u_inverse };
// plain: C_n(x; q_i^2, q_i^{2a}). rescaled_u: (b/2)^n C_n(x/b; q_i^2, q_i^{2a}).
// rescaled_u_inverse: the same with q_i replaced by q_i^{-1}.
OrthoPoly cheby_deformed(int n, int a, ChebyVariant v, const RankTwoData& data, const TablePtr& table = nullptr,
                         bool primed = false);
// The rescaled family built from its own recursion, u_1 = x.
OrthoPoly rescaled_u_recursion(int n, int a, bool inverse, const RankTwoData& data, const TablePtr& table,
                               bool primed = false);
// The recursion with u_1 = 2x, as written in the statement-of-results section.
OrthoPoly rescaled_u_statement_form(int n, int a, const RankTwoData& data, const TablePtr& table);

// (b/2)^D p(x/b) for a polynomial whose x-exponents have the parity of D.
OrthoPoly rescale_by_b(const OrthoPoly& p, int D, const RankTwoData& data, const TablePtr& table,
                       bool primed = false);

// U_{m,n}(x; base, r).
OrthoPoly cheby_U_plain(int m, int n, const RationalQ& base, const RationalQ& r);
// Table of U_{m,n}(x; base, r) for m <= M, n <= N, indexed [m][n].
std::vector<std::vector<OrthoPoly>> cheby_U_table(int M, int N, const RationalQ& base, const RationalQ& r);
// U_{m,n}(x; q_i^2, q_i^{2 a_ij}).
OrthoPoly cheby_biv_U(int m, int n, const RankTwoData& data);

// ------------------------------------------------------- rho / sigma

enum class RhoSigma { rho, sigma };
OrthoPoly rho_sigma(int m, int n, RhoSigma which, const RankTwoData& data, const TablePtr& table);
std::vector<std::vector<OrthoPoly>> rho_sigma_table(int M, int N, RhoSigma which, const RankTwoData& data,
                                                     const TablePtr& table);
// rho_{m,n} via the rescaled U_{m,n}.
OrthoPoly rho_via_U(int m, int n, const RankTwoData& data, const TablePtr& table);

// sum_m (-1)^m [N,m]_{q_i} rho_{N-m,m} (or sigma), N = 1 - a_ij.
OrthoPoly rho_serre_combination(RhoSigma which, const RankTwoData& data, const TablePtr& table);
// Closed form of the rho combination through C_{N-2}.
OrthoPoly rho_serre_closed(const RankTwoData& data, const TablePtr& table);
// Intermediate form through P_N.
OrthoPoly rho_serre_via_P(const RankTwoData& data, const TablePtr& table);

// ------------------------------------------------------------ P_N

enum class PForm { recursion, closed };
// P_N(x; q^{d}) with r = q^{2d(1-N)}; d is the symmetrizer of node i.
OrthoPoly serre_P(int N, PForm form, int d = 1);
// omega_{N,k}(q^d).
RationalQ serre_omega(int N, int k, int d = 1);

}  // namespace qsp
