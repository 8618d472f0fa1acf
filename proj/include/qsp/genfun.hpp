#pragma once

// Truncated power series in s and t over Q(q)[x] and the generating-function checks.

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qsp/orthopoly.hpp"

namespace qsp {

class TruncSeries {
public:
    using Key = std::pair<int, int>;  // (s exponent, t exponent)

    TruncSeries(int S, int T) : S_(S), T_(T) {}
    static TruncSeries one(int S, int T);
    // Polynomial in s, t given by coefficient list entries (i, j) -> p.
    static TruncSeries from_terms(int S, int T, const std::map<Key, OrthoPoly>& terms);

    int order_s() const { return S_; }
    int order_t() const { return T_; }
    const std::map<Key, OrthoPoly>& terms() const { return c_; }
    OrthoPoly coeff(int i, int j = 0) const;
    void set_coeff(int i, int j, const OrthoPoly& p);

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend bool operator==(const TruncSeries& a, const TruncSeries& b);

    TruncSeries scale_poly(const OrthoPoly& p) const;
    TruncSeries shift(int ds, int dt) const;          // multiply by s^ds t^dt
    TruncSeries subst_s_scale(const RationalQ& c) const;  // s -> c s

private:
    void check_orders(const TruncSeries& o) const;
    void put(const Key& k, const OrthoPoly& p);
    int S_, T_;
    std::map<Key, OrthoPoly> c_;
};

enum class SeriesKind { eta, eta_tilde, psi, phi };

// Generic builders with explicit base and r.
TruncSeries build_eta(int S, const RationalQ& base, const RationalQ& r);
TruncSeries build_eta_tilde(int S, const RationalQ& base, const RationalQ& r);
TruncSeries build_psi(int S, int T, const RationalQ& base);
TruncSeries build_phi(int S, int T, const RationalQ& base, const RationalQ& r);

// eta, eta_tilde, psi use base q_i and r = q_i^a; phi uses base q_i^2 and r = q_i^{2a}.
TruncSeries series_build(SeriesKind which, int a, int S, int T, const RankTwoData& data);

struct SeriesReport {
    bool pass = true;
    int s_exp = -1;
    int t_exp = -1;
    std::string lhs;  // rendered coefficient on the failing monomial
    std::string rhs;
    std::string describe() const;
};

// Compares two series coefficient-wise, reporting the first mismatch in (s, t) order.
SeriesReport compare_series(const TruncSeries& lhs, const TruncSeries& rhs);

// Functional equations in denominator-free form; the series argument allows mutation tests.
SeriesReport check_eta_equation(const TruncSeries& eta, const RationalQ& base, const RationalQ& r);
SeriesReport check_eta_tilde_equation(const TruncSeries& et, const RationalQ& base, const RationalQ& r);
SeriesReport check_psi_equation(const TruncSeries& psi, const RationalQ& base);
SeriesReport check_phi_psi(const TruncSeries& phi, const TruncSeries& eta, const TruncSeries& psi);

SeriesReport check_functional_equation(SeriesKind which, int a, int S, int T, const RankTwoData& data);
SeriesReport check_phi_identity(int a, int S, int T, const RankTwoData& data);

// Solves the eta functional equation order by order (f_n for n <= S).
std::vector<OrthoPoly> eta_coefficients_from_equation(int S, const RationalQ& base, const RationalQ& r);

}  // namespace qsp
