#include "qsp/genfun.hpp"

#include <sstream>

namespace qsp {

// ---------------------------------------------------------- TruncSeries

TruncSeries TruncSeries::one(int S, int T) {
    TruncSeries r(S, T);
    r.put({0, 0}, OrthoPoly::constant(CoeffPoly(1)));
    return r;
}

TruncSeries TruncSeries::from_terms(int S, int T, const std::map<Key, OrthoPoly>& terms) {
    TruncSeries r(S, T);
    for (const auto& [k, p] : terms)
        if (k.first <= S && k.second <= T) r.put(k, p);
    return r;
}

void TruncSeries::put(const Key& k, const OrthoPoly& p) {
    if (k.first > S_ || k.second > T_ || k.first < 0 || k.second < 0) return;
    auto [it, fresh] = c_.emplace(k, p);
    if (!fresh) it->second += p;
    if (it->second.is_zero()) c_.erase(it);
}

OrthoPoly TruncSeries::coeff(int i, int j) const {
    auto it = c_.find({i, j});
    return it == c_.end() ? OrthoPoly(1) : it->second;
}

void TruncSeries::set_coeff(int i, int j, const OrthoPoly& p) {
    if (i > S_ || j > T_ || i < 0 || j < 0) throw OrderMismatch("coefficient beyond truncation order");
    c_.erase({i, j});
    put({i, j}, p);
}

void TruncSeries::check_orders(const TruncSeries& o) const {
    if (S_ != o.S_ || T_ != o.T_) throw OrderMismatch("series truncated at different orders");
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    check_orders(o);
    for (const auto& [k, p] : o.c_) put(k, p);
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    check_orders(o);
    for (const auto& [k, p] : o.c_) put(k, -p);
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check_orders(b);
    TruncSeries r(a.S_, a.T_);
    for (const auto& [ka, pa] : a.c_)
        for (const auto& [kb, pb] : b.c_) {
            const int i = ka.first + kb.first;
            const int j = ka.second + kb.second;
            if (i <= a.S_ && j <= a.T_) r.put({i, j}, pa * pb);
        }
    return r;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.S_ == b.S_ && a.T_ == b.T_ && a.c_ == b.c_;
}

TruncSeries TruncSeries::scale_poly(const OrthoPoly& p) const {
    TruncSeries r(S_, T_);
    for (const auto& [k, c] : c_) r.put(k, c * p);
    return r;
}

TruncSeries TruncSeries::shift(int ds, int dt) const {
    TruncSeries r(S_, T_);
    for (const auto& [k, c] : c_) r.put({k.first + ds, k.second + dt}, c);
    return r;
}

TruncSeries TruncSeries::subst_s_scale(const RationalQ& s) const {
    TruncSeries r(S_, T_);
    for (const auto& [k, c] : c_) r.put(k, c.scaled(s.pow(k.first)));
    return r;
}

// ------------------------------------------------------------ builders

namespace {

OrthoPoly xpoly(long c1) { return OrthoPoly::x().scaled(RationalQ(c1)); }

OrthoPoly constp(const RationalQ& c) { return OrthoPoly::constant(CoeffPoly(c)); }

// Series that is a polynomial in s: sum_k p_k s^k.
TruncSeries s_poly(int S, int T, const std::vector<OrthoPoly>& p) {
    std::map<TruncSeries::Key, OrthoPoly> m;
    for (size_t k = 0; k < p.size(); ++k)
        if (!p[k].is_zero()) m.emplace(TruncSeries::Key{static_cast<int>(k), 0}, p[k]);
    return TruncSeries::from_terms(S, T, m);
}

}  // namespace

TruncSeries build_eta(int S, const RationalQ& base, const RationalQ& r) {
    TruncSeries e(S, 0);
    for (int n = 0; n <= S; ++n) {
        const RationalQ den = RationalQ(1) - base.pow(n + 2);
        if (den.is_zero()) throw PoleInCoefficient("1 - q^{n+2} vanishes");
        e.set_coeff(n, 0, cheby_plain(n, base, r).scaled(den.inverse()));
    }
    return e;
}

namespace {

// r^{n/2} C_n(r^{-1/2} x): parity makes every power of r integral.
OrthoPoly cheby_tilde(int n, const RationalQ& base, const RationalQ& r) {
    const OrthoPoly c = cheby_plain(n, base, r);
    OrthoPoly out(1);
    for (const auto& [k, v] : c.terms())
        out += OrthoPoly::term(k.first, 0, v.scaled(r.pow((n - k.first) / 2)), 1);
    return out;
}

}  // namespace

TruncSeries build_eta_tilde(int S, const RationalQ& base, const RationalQ& r) {
    TruncSeries e(S, 0);
    for (int n = 0; n <= S; ++n) {
        const RationalQ den = q_pochhammer(base * r, base, n + 1);
        if (den.is_zero()) throw PoleInCoefficient("(qr; q)_{" + std::to_string(n + 1) + "} vanishes");
        const RationalQ f = q_pochhammer(base * base, base, n) / den;
        e.set_coeff(n, 0, cheby_tilde(n, base, r).scaled(f));
    }
    return e;
}

TruncSeries build_psi(int S, int T, const RationalQ& base) {
    TruncSeries p(S, T);
    std::vector<OrthoPoly> H;
    for (int k = 0; k <= S + T; ++k) H.push_back(hermite_plain(k, base));
    for (int m = 0; m <= S; ++m)
        for (int n = 0; n <= T; ++n) {
            const RationalQ f = (q_pochhammer(base, base, m) * q_pochhammer(base, base, n)).inverse();
            p.set_coeff(m, n, H[m + n].scaled(f));
        }
    return p;
}

TruncSeries build_phi(int S, int T, const RationalQ& base, const RationalQ& r) {
    TruncSeries p(S, T);
    const auto U = cheby_U_table(S, T, base, r);
    for (int m = 0; m <= S; ++m)
        for (int n = 0; n <= T; ++n) {
            const RationalQ f = (q_pochhammer(base, base, m) * q_pochhammer(base, base, n)).inverse();
            p.set_coeff(m, n, U[m][n].scaled(f));
        }
    return p;
}

TruncSeries series_build(SeriesKind which, int a, int S, int T, const RankTwoData& data) {
    switch (which) {
        case SeriesKind::eta: return build_eta(S, data.qi(1), data.qi(a));
        case SeriesKind::eta_tilde: return build_eta_tilde(S, data.qi(1), data.qi(a));
        case SeriesKind::psi: return build_psi(S, T, data.qi(1));
        case SeriesKind::phi: return build_phi(S, T, data.qi(2), data.qi(2L * a));
    }
    throw Error("series_build: unknown series");
}

// -------------------------------------------------------------- checks

std::string SeriesReport::describe() const {
    if (pass) return "pass";
    std::ostringstream os;
    os << "mismatch at s^" << s_exp << " t^" << t_exp << ": " << lhs << " != " << rhs;
    return os.str();
}

SeriesReport compare_series(const TruncSeries& lhs, const TruncSeries& rhs) {
    SeriesReport rep;
    for (int i = 0; i <= lhs.order_s(); ++i)
        for (int j = 0; j <= lhs.order_t(); ++j) {
            const OrthoPoly a = lhs.coeff(i, j);
            const OrthoPoly b = rhs.coeff(i, j);
            if (!(a == b)) {
                rep.pass = false;
                rep.s_exp = i;
                rep.t_exp = j;
                rep.lhs = a.to_text();
                rep.rhs = b.to_text();
                return rep;
            }
        }
    return rep;
}

SeriesReport check_eta_equation(const TruncSeries& eta, const RationalQ& base, const RationalQ& r) {
    const int S = eta.order_s();
    const int T = eta.order_t();
    // base^2 (1 - 2xs + s^2) eta(base s) = (1 - 2xs + r^{-1} s^2) eta(s) - 1
    const TruncSeries left = s_poly(S, T, {constp(base * base), xpoly(-2).scaled(base * base), constp(base * base)}) *
                             eta.subst_s_scale(base);
    const TruncSeries right =
        s_poly(S, T, {constp(RationalQ(1)), xpoly(-2), constp(r.inverse())}) * eta - TruncSeries::one(S, T);
    return compare_series(left, right);
}

SeriesReport check_eta_tilde_equation(const TruncSeries& et, const RationalQ& base, const RationalQ& r) {
    const int S = et.order_s();
    const int T = et.order_t();
    // base r (1 - 2 r^{-1} base x s + r^{-1} base^2 s^2) et(base s) = (1 - 2xs + s^2) et(s) - 1
    const RationalQ br = base * r;
    const TruncSeries left =
        s_poly(S, T, {constp(br), xpoly(-2).scaled(base * base), constp(base * base * base)}) * et.subst_s_scale(base);
    const TruncSeries right =
        s_poly(S, T, {constp(RationalQ(1)), xpoly(-2), constp(RationalQ(1))}) * et - TruncSeries::one(S, T);
    return compare_series(left, right);
}

SeriesReport check_psi_equation(const TruncSeries& psi, const RationalQ& base) {
    const int S = psi.order_s();
    const int T = psi.order_t();
    // (1 - t s) psi(base s, t) = (1 - 2xs + s^2) psi(s, t)
    const TruncSeries scaled = psi.subst_s_scale(base);
    const TruncSeries left = scaled - scaled.shift(1, 1);
    const TruncSeries right = s_poly(S, T, {constp(RationalQ(1)), xpoly(-2), constp(RationalQ(1))}) * psi;
    return compare_series(left, right);
}

SeriesReport check_phi_psi(const TruncSeries& phi, const TruncSeries& eta, const TruncSeries& psi) {
    TruncSeries eta2(psi.order_s(), psi.order_t());
    for (const auto& [k, p] : eta.terms()) eta2.set_coeff(k.first, 0, p);
    TruncSeries rhs = TruncSeries(psi.order_s(), psi.order_t()) - (eta2 * psi).shift(2, 0);
    return compare_series(phi, rhs);
}

SeriesReport check_functional_equation(SeriesKind which, int a, int S, int T, const RankTwoData& data) {
    switch (which) {
        case SeriesKind::eta:
            return check_eta_equation(series_build(which, a, S, 0, data), data.qi(1), data.qi(a));
        case SeriesKind::eta_tilde:
            return check_eta_tilde_equation(series_build(which, a, S, 0, data), data.qi(1), data.qi(a));
        case SeriesKind::psi: return check_psi_equation(series_build(which, a, S, T, data), data.qi(1));
        case SeriesKind::phi: return check_phi_identity(a, S, T, data);
    }
    throw Error("check_functional_equation: unknown series");
}

SeriesReport check_phi_identity(int a, int S, int T, const RankTwoData& data) {
    const RationalQ base = data.qi(2);
    const RationalQ r = data.qi(2L * a);
    return check_phi_psi(build_phi(S, T, base, r), build_eta(S, base, r), build_psi(S, T, base));
}

std::vector<OrthoPoly> eta_coefficients_from_equation(int S, const RationalQ& base, const RationalQ& r) {
    // Coefficient of s^n: (base^{n+2} - 1) f_n + 2x (1 - base^{n+1}) f_{n-1}
    //                     + (base^n - r^{-1}) f_{n-2} + [n = 0] = 0.
    std::vector<OrthoPoly> f;
    for (int n = 0; n <= S; ++n) {
        OrthoPoly acc(1);
        if (n == 0) acc += constp(RationalQ(1));
        if (n >= 1) acc += xpoly(2).scaled(RationalQ(1) - base.pow(n + 1)) * f[n - 1];
        if (n >= 2) acc += f[n - 2].scaled(base.pow(n) - r.inverse());
        f.push_back(acc.scaled((RationalQ(1) - base.pow(n + 2)).inverse()));
    }
    return f;
}

}  // namespace qsp
