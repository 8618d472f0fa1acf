#include "qsp/orthopoly.hpp"

#include <algorithm>

namespace qsp {

// ------------------------------------------------------------ OrthoPoly

OrthoPoly OrthoPoly::constant(const CoeffPoly& c, int arity) { return term(0, 0, c, arity); }

OrthoPoly OrthoPoly::x(int arity) { return term(1, 0, CoeffPoly(1), arity); }

OrthoPoly OrthoPoly::y() { return term(0, 1, CoeffPoly(1), 2); }

OrthoPoly OrthoPoly::term(int i, int j, const CoeffPoly& c, int arity) {
    if (arity == 1 && j != 0) throw Error("univariate polynomial with a y exponent");
    OrthoPoly p(arity);
    p.add_term({i, j}, c);
    return p;
}

void OrthoPoly::add_term(const Key& k, const CoeffPoly& c) {
    table_ = common_table(table_, c.table());
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CoeffPoly OrthoPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? CoeffPoly() : it->second;
}

int OrthoPoly::degree_x() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int OrthoPoly::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

OrthoPoly OrthoPoly::operator-() const {
    OrthoPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

OrthoPoly& OrthoPoly::operator+=(const OrthoPoly& o) {
    arity_ = std::max(arity_, o.arity_);
    table_ = common_table(table_, o.table_);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

OrthoPoly& OrthoPoly::operator-=(const OrthoPoly& o) { return *this += -o; }

OrthoPoly operator*(const OrthoPoly& a, const OrthoPoly& b) {
    OrthoPoly r(std::max(a.arity_, b.arity_));
    r.table_ = common_table(a.table_, b.table_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
}

bool operator==(const OrthoPoly& a, const OrthoPoly& b) { return a.terms_ == b.terms_; }

OrthoPoly OrthoPoly::scaled(const RationalQ& s) const {
    OrthoPoly r(arity_);
    r.table_ = table_;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c.scaled(s));
    return r;
}

OrthoPoly OrthoPoly::times(const CoeffPoly& c) const {
    OrthoPoly r(arity_);
    r.table_ = common_table(table_, c.table());
    for (const auto& [k, v] : terms_) r.add_term(k, v * c);
    return r;
}

OrthoPoly OrthoPoly::mul_x(int k) const {
    OrthoPoly r(arity_);
    r.table_ = table_;
    for (const auto& [key, c] : terms_) r.terms_.emplace(Key{key.first + k, key.second}, c);
    return r;
}

OrthoPoly OrthoPoly::mul_y(int k) const {
    OrthoPoly r(2);
    r.table_ = table_;
    for (const auto& [key, c] : terms_) r.terms_.emplace(Key{key.first, key.second + k}, c);
    return r;
}

OrthoPoly OrthoPoly::subst_x_scale(const RationalQ& s) const {
    OrthoPoly r(arity_);
    r.table_ = table_;
    for (const auto& [k, c] : terms_) r.add_term(k, c.scaled(s.pow(k.first)));
    return r;
}

OrthoPoly OrthoPoly::swap_xy() const {
    OrthoPoly r(2);
    r.table_ = table_;
    for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.second, k.first}, c);
    return r;
}

OrthoPoly OrthoPoly::as_bivariate() const {
    OrthoPoly r = *this;
    r.arity_ = 2;
    return r;
}

OrthoPoly OrthoPoly::as_y() const {
    if (arity_ != 1) throw Error("as_y expects a univariate polynomial");
    return as_bivariate().swap_xy();
}

OrthoPoly OrthoPoly::bar() const {
    OrthoPoly r(arity_);
    r.table_ = table_;
    for (const auto& [k, c] : terms_) r.add_term(k, cp_bar(c));
    return r;
}

bool OrthoPoly::has_parity(int p) const {
    for (const auto& [k, c] : terms_)
        if (((k.first - p) % 2 + 2) % 2 != 0) return false;
    return true;
}

namespace {

std::string var_text(const std::string& v, int e) {
    if (e == 0) return "";
    if (e == 1) return v;
    return v + "^" + std::to_string(e);
}

std::string var_latex(const std::string& v, int e) {
    if (e == 0) return "";
    if (e == 1) return v;
    return v + "^{" + std::to_string(e) + "}";
}

}  // namespace

namespace {

std::string render_poly(const std::map<std::pair<int, int>, CoeffPoly>& terms, bool latex, const std::string& xv,
                        const std::string& yv) {
    std::vector<std::pair<bool, std::string>> out;
    const std::string sep = latex ? " " : "*";
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [k, c] = *it;
        std::string v = latex ? var_latex(xv, k.first) : var_text(xv, k.first);
        const std::string vy = latex ? var_latex(yv, k.second) : var_text(yv, k.second);
        if (!vy.empty()) v += (v.empty() ? "" : sep) + vy;
        const auto parts = c.signed_terms(latex);
        if (parts.size() == 1) {
            const auto& [neg, body] = parts[0];
            if (v.empty())
                out.emplace_back(neg, body);
            else
                out.emplace_back(neg, body == "1" ? v : body + sep + v);
        } else {
            const std::string inner = join_signed(parts);
            const std::string par = latex ? "\\left(" + inner + "\\right)" : "(" + inner + ")";
            out.emplace_back(false, v.empty() ? par : par + sep + v);
        }
    }
    return join_signed(out);
}

}  // namespace

std::string OrthoPoly::to_text(const std::string& xv, const std::string& yv) const {
    return render_poly(terms_, false, xv, yv);
}

std::string OrthoPoly::to_latex(const std::string& xv, const std::string& yv) const {
    return render_poly(terms_, true, xv, yv);
}

// ------------------------------------------------------------ helpers

CoeffPoly quarter_b2(const RankTwoData& data, const TablePtr& table, bool primed) {
    const RationalQ qd = data.qi_diff();
    return CoeffPoly::symbol(table, primed ? sym::Zp : sym::Z).scaled(RationalQ(1) / (qd * qd));
}

namespace {

RationalQ one_minus(const RationalQ& t) { return RationalQ(1) - t; }

}  // namespace

// ------------------------------------------------------------ Hermite

OrthoPoly hermite_plain(int m, const RationalQ& base) {
    if (m < 0) return OrthoPoly(1);
    OrthoPoly prev(1), cur = OrthoPoly::constant(CoeffPoly(1));
    const OrthoPoly two_x = OrthoPoly::x().scaled(RationalQ(2));
    RationalQ bk(1);  // base^k
    for (int k = 0; k < m; ++k) {
        OrthoPoly next = two_x * cur - prev.scaled(one_minus(bk));
        prev = std::move(cur);
        cur = std::move(next);
        bk *= base;
    }
    return cur;
}

namespace {

// w-type recursion x p_k = p_{k+1} + beta (1 - Q^k) p_{k-1}.
std::vector<OrthoPoly> rescaled_hermite(int M, const RationalQ& Q, const CoeffPoly& beta) {
    std::vector<OrthoPoly> out;
    if (M < 0) return out;
    out.push_back(OrthoPoly::constant(CoeffPoly(1)));
    const OrthoPoly xp = OrthoPoly::x();
    RationalQ Qk(1);
    for (int k = 0; k < M; ++k) {
        OrthoPoly next = xp * out[k];
        if (k > 0) next -= out[k - 1].times(beta.scaled(one_minus(Qk)));
        out.push_back(std::move(next));
        Qk *= Q;
    }
    return out;
}

}  // namespace

std::vector<OrthoPoly> hermite_w_upto(int M, const RankTwoData& data, const TablePtr& table, bool primed) {
    return rescaled_hermite(M, data.qi(2), quarter_b2(data, table, primed));
}

std::vector<OrthoPoly> hermite_v_upto(int M, const RankTwoData& data, const TablePtr& table, bool primed) {
    return rescaled_hermite(M, data.qi(-2), quarter_b2(data, table, primed));
}

OrthoPoly hermite_w(int m, const RankTwoData& data, const TablePtr& table, bool primed) {
    if (m < 0) return OrthoPoly(1);
    return hermite_w_upto(m, data, table, primed)[m];
}

OrthoPoly hermite_v(int m, const RankTwoData& data, const TablePtr& table, bool primed) {
    if (m < 0) return OrthoPoly(1);
    return hermite_v_upto(m, data, table, primed)[m];
}

namespace {

// eta(k) = (q - q^{-1})^k q^{-k(k+1)/2} (b^2/4)^k with q = q_i.
CoeffPoly eta_k(int k, const RankTwoData& data, const TablePtr& table, bool primed) {
    const RationalQ s = data.qi_diff().pow(k) * data.qi(-static_cast<long>(k) * (k + 1) / 2);
    return quarter_b2(data, table, primed).pow(k).scaled(s);
}

}  // namespace

OrthoPoly hermite_v_sum(int m, const RankTwoData& data, const TablePtr& table, bool primed) {
    if (m < 0) return OrthoPoly(1);
    const auto w = hermite_w_upto(m, data, table, primed);
    OrthoPoly r(1);
    for (int k = 0; 2 * k <= m; ++k) {
        RationalQ s = data.qi(k) * q_factorial(m, data.di) / (q_factorial(m - 2 * k, data.di) * q_factorial(k, data.di));
        if (k % 2) s = -s;
        r += w[m - 2 * k].times(eta_k(k, data, table, primed).scaled(s));
    }
    return r;
}

OrthoPoly hermite_biv_plain(int m, int n, const RationalQ& base, const RationalQ& r) {
    if (m < 0 || n < 0) return OrthoPoly(2);
    // rows[k][j] = H_{k,j}
    std::vector<std::vector<OrthoPoly>> h(m + 1, std::vector<OrthoPoly>(n + 1, OrthoPoly(2)));
    for (int j = 0; j <= n; ++j) h[0][j] = hermite_plain(j, base).as_y();
    const OrthoPoly two_x = OrthoPoly::x(2).scaled(RationalQ(2));
    RationalQ bk(1);
    for (int k = 0; k < m; ++k) {
        RationalQ bj(1);
        for (int j = 0; j <= n; ++j) {
            OrthoPoly next = two_x * h[k][j];
            if (k > 0) next -= h[k - 1][j].scaled(one_minus(bk));
            if (j > 0) next -= h[k][j - 1].scaled(bk * one_minus(bj) * r);
            h[k + 1][j] = std::move(next);
            bj *= base;
        }
        bk *= base;
    }
    return h[m][n];
}

std::vector<std::vector<OrthoPoly>> hermite_biv_w_table(int M, int N, const RankTwoData& data,
                                                          const TablePtr& table, bool primed) {
    std::vector<std::vector<OrthoPoly>> w(M + 1, std::vector<OrthoPoly>(N + 1, OrthoPoly(2)));
    const auto wy = hermite_w_upto(N, data, table, primed);
    for (int j = 0; j <= N; ++j) w[0][j] = wy[j].as_y();
    const CoeffPoly beta = quarter_b2(data, table, primed);
    const RationalQ Q = data.qi(2);
    const RationalQ r = data.qi(data.aij);
    const OrthoPoly xp = OrthoPoly::x(2);
    RationalQ Qk(1);
    for (int k = 0; k < M; ++k) {
        RationalQ Qj(1);
        for (int j = 0; j <= N; ++j) {
            OrthoPoly next = xp * w[k][j];
            if (k > 0) next -= w[k - 1][j].times(beta.scaled(one_minus(Qk)));
            if (j > 0) next -= w[k][j - 1].times(beta.scaled(Qk * one_minus(Qj) * r));
            w[k + 1][j] = std::move(next);
            Qj *= Q;
        }
        Qk *= Q;
    }
    return w;
}

OrthoPoly hermite_biv_w(int m, int n, const RankTwoData& data, const TablePtr& table, bool primed) {
    if (m < 0 || n < 0) return OrthoPoly(2);
    return hermite_biv_w_table(m, n, data, table, primed)[m][n];
}

OrthoPoly expand_biv_in_uni_plain(int m, int n, const RationalQ& base, const RationalQ& r) {
    if (m < 0 || n < 0) return OrthoPoly(2);
    auto poch = [&](int k) { return q_pochhammer(base, base, k); };
    OrthoPoly out(2);
    for (int k = 0; k <= std::min(m, n); ++k) {
        RationalQ s = base.pow(static_cast<long>(k) * (k - 1) / 2) * poch(m) * poch(n) * r.pow(k) /
                      (poch(m - k) * poch(n - k) * poch(k));
        if (k % 2) s = -s;
        out += (hermite_plain(m - k, base).as_bivariate() * hermite_plain(n - k, base).as_y()).scaled(s);
    }
    return out;
}

OrthoPoly expand_biv_in_uni_w(int m, int n, const RankTwoData& data, const TablePtr& table, bool primed) {
    if (m < 0 || n < 0) return OrthoPoly(2);
    const auto w = hermite_w_upto(std::max(m, n), data, table, primed);
    const int di = data.di;
    OrthoPoly out(2);
    for (int k = 0; k <= std::min(m, n); ++k) {
        const RationalQ s = data.qi(static_cast<long>(data.aij) * k + static_cast<long>(k) * (m + n)) *
                            q_binomial(m, k, di) * q_binomial(n, k, di) * q_factorial(k, di);
        out += (w[m - k].as_bivariate() * w[n - k].as_y()).times(eta_k(k, data, table, primed).scaled(s));
    }
    return out;
}

OrthoPoly serre_combination_biv(int a, SerreSide side, const RankTwoData& data, const TablePtr& table,
                                bool primed) {
    if (a > 0) throw UnsupportedCase("Serre combination needs a <= 0");
    const int N = 1 - a;
    RankTwoData d = data;
    d.aij = a;  // r = q_i^a; only a_ij and d_i enter the polynomials
    OrthoPoly out(2);
    std::vector<std::vector<OrthoPoly>> wb;
    std::vector<OrthoPoly> w, v;
    if (side == SerreSide::bivariate) {
        wb = hermite_biv_w_table(N, N, d, table, primed);
    } else {
        w = hermite_w_upto(N, d, table, primed);
        v = hermite_v_upto(N, d, table, primed);
    }
    for (int n = 0; n <= N; ++n) {
        RationalQ s = q_binomial(N, n, data.di);
        if (n % 2) s = -s;
        OrthoPoly t(2);
        switch (side) {
            case SerreSide::bivariate: t = wb[N - n][n]; break;
            case SerreSide::uni_wv: t = w[N - n].as_bivariate() * v[n].as_y(); break;
            case SerreSide::uni_vw: t = v[N - n].as_bivariate() * w[n].as_y(); break;
        }
        out += t.scaled(s);
    }
    return out;
}

// ---------------------------------------------------------- Chebyshev

namespace {

// (r^{-1} - base^{k}) / (1 - base^{k})
RationalQ cheby_coeff(int k, const RationalQ& base, const RationalQ& r) {
    const RationalQ bk = base.pow(k);
    return (r.inverse() - bk) / one_minus(bk);
}

}  // namespace

OrthoPoly cheby_plain(int n, const RationalQ& base, const RationalQ& r) {
    if (n < 0) return OrthoPoly(1);
    OrthoPoly prev = OrthoPoly::constant(CoeffPoly(1));
    if (n == 0) return prev;
    const OrthoPoly two_x = OrthoPoly::x().scaled(RationalQ(2));
    OrthoPoly cur = two_x;
    for (int k = 1; k < n; ++k) {
        OrthoPoly next = two_x * cur - prev.scaled(cheby_coeff(k + 1, base, r));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

OrthoPoly chebyshev_U_classical(int n) {
    if (n < 0) return OrthoPoly(1);
    OrthoPoly prev = OrthoPoly::constant(CoeffPoly(1));
    if (n == 0) return prev;
    const OrthoPoly two_x = OrthoPoly::x().scaled(RationalQ(2));
    OrthoPoly cur = two_x;
    for (int k = 1; k < n; ++k) {
        OrthoPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

OrthoPoly rescale_by_b(const OrthoPoly& p, int D, const RankTwoData& data, const TablePtr& table, bool primed) {
    OrthoPoly out(p.arity());
    if (p.is_zero()) return out;
    const CoeffPoly beta = quarter_b2(data, table, primed);
    for (const auto& [k, c] : p.terms()) {
        const int gap = D - k.first;
        if (gap < 0 || gap % 2) throw UnsupportedCase("rescale_by_b: exponent parity does not match");
        const RationalQ s = RationalQ(mpq_class(1, 1)) / RationalQ(2).pow(k.first);
        out += OrthoPoly::term(k.first, k.second, (c * beta.pow(gap / 2)).scaled(s), p.arity());
    }
    return out;
}

OrthoPoly cheby_deformed(int n, int a, ChebyVariant v, const RankTwoData& data, const TablePtr& table,
                         bool primed) {
    const bool inverse = v == ChebyVariant::rescaled_u_inverse;
    const RationalQ base = data.qi(inverse ? -2 : 2);
    const RationalQ r = data.qi(inverse ? -2L * a : 2L * a);
    OrthoPoly c = cheby_plain(n, base, r);
    if (v == ChebyVariant::plain) return c;
    if (!table) throw TableMismatch("rescaled Chebyshev polynomials need a symbol table");
    return rescale_by_b(c, n, data, table, primed);
}

OrthoPoly rescaled_u_recursion(int n, int a, bool inverse, const RankTwoData& data, const TablePtr& table,
                               bool primed) {
    if (n < 0) return OrthoPoly(1);
    const RationalQ base = data.qi(inverse ? -2 : 2);
    const RationalQ r = data.qi(inverse ? -2L * a : 2L * a);
    const CoeffPoly beta = quarter_b2(data, table, primed);
    OrthoPoly prev = OrthoPoly::constant(CoeffPoly(1));
    if (n == 0) return prev;
    const OrthoPoly xp = OrthoPoly::x();
    OrthoPoly cur = xp;
    for (int k = 1; k < n; ++k) {
        OrthoPoly next = xp * cur - prev.times(beta.scaled(cheby_coeff(k + 1, base, r)));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

OrthoPoly rescaled_u_statement_form(int n, int a, const RankTwoData& data, const TablePtr& table) {
    if (n < 0) return OrthoPoly(1);
    const RationalQ base = data.qi(2);
    const RationalQ r = data.qi(2L * a);
    const CoeffPoly beta = quarter_b2(data, table);
    OrthoPoly prev = OrthoPoly::constant(CoeffPoly(1));
    if (n == 0) return prev;
    const OrthoPoly two_x = OrthoPoly::x().scaled(RationalQ(2));
    OrthoPoly cur = two_x;
    for (int k = 1; k < n; ++k) {
        OrthoPoly next = two_x * cur - prev.times(beta.scaled(cheby_coeff(k + 1, base, r)));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

OrthoPoly cheby_U_plain(int m, int n, const RationalQ& base, const RationalQ& r) {
    if (m < 0 || n < 0) return OrthoPoly(1);
    return cheby_U_table(m, n, base, r)[m][n];
}

std::vector<std::vector<OrthoPoly>> cheby_U_table(int m, int n, const RationalQ& base, const RationalQ& r) {
    std::vector<OrthoPoly> H;
    for (int k = 0; k <= m + n; ++k) H.push_back(hermite_plain(k, base));
    std::vector<std::vector<OrthoPoly>> U(m + 1, std::vector<OrthoPoly>(n + 1, OrthoPoly(1)));
    const OrthoPoly two_x = OrthoPoly::x().scaled(RationalQ(2));
    const RationalQ rinv = r.inverse();
    RationalQ bk(1);
    for (int k = 0; k < m; ++k) {
        RationalQ bj(1);
        for (int j = 0; j <= n; ++j) {
            OrthoPoly next = two_x * U[k][j];
            if (k > 0) {
                next -= U[k - 1][j].scaled(one_minus(bk) * rinv);
                next -= H[k + j - 1].scaled(one_minus(bk));
            }
            if (j > 0) next -= U[k][j - 1].scaled(bk * one_minus(bj));
            U[k + 1][j] = std::move(next);
            bj *= base;
        }
        bk *= base;
    }
    return U;
}

OrthoPoly cheby_biv_U(int m, int n, const RankTwoData& data) {
    return cheby_U_plain(m, n, data.qi(2), data.qi(2L * data.aij));
}

// ------------------------------------------------------- rho / sigma

std::vector<std::vector<OrthoPoly>> rho_sigma_table(int M, int N, RhoSigma which, const RankTwoData& data,
                                                     const TablePtr& table) {
    const int a = data.aij;
    const auto w = hermite_w_upto(M + N, data, table);
    const CoeffPoly beta = quarter_b2(data, table);
    const RationalQ Q = data.qi(2);
    const RationalQ lam_inv = data.lambda().inverse();
    const bool rho = which == RhoSigma::rho;
    // rho:   q^a x p_{m,n}    = p_{m+1,n} + beta(1-Q^m) p_{m-1,n} + beta(1-Q^n) Q^m q^a p_{m,n-1}
    //                           + q^{(m-1)a} (1-Q^m)/lambda w_{m+n-1}
    // sigma: q^{-a} x p_{m,n} = (same two terms) - q^{-(m-1)a} (1-Q^{m+n})/lambda w_{m+n-1}
    const RationalQ xfac = data.qi(rho ? a : -a);
    std::vector<std::vector<OrthoPoly>> p(M + 1, std::vector<OrthoPoly>(N + 1, OrthoPoly(1)));
    const OrthoPoly xp = OrthoPoly::x();
    RationalQ Qm(1);
    for (int m = 0; m < M; ++m) {
        RationalQ Qn(1);
        for (int n = 0; n <= N; ++n) {
            OrthoPoly next = (xp * p[m][n]).scaled(xfac);
            if (m > 0) next -= p[m - 1][n].times(beta.scaled(one_minus(Qm)));
            if (n > 0) next -= p[m][n - 1].times(beta.scaled(one_minus(Qn) * Qm * data.qi(a)));
            if (m + n >= 1) {
                RationalQ src = rho ? data.qi(static_cast<long>(m - 1) * a) * one_minus(Qm)
                                    : -data.qi(-static_cast<long>(m - 1) * a) * one_minus(Qm * Qn);
                next -= w[m + n - 1].scaled(src * lam_inv);
            }
            p[m + 1][n] = std::move(next);
            Qn *= Q;
        }
        Qm *= Q;
    }
    return p;
}

OrthoPoly rho_sigma(int m, int n, RhoSigma which, const RankTwoData& data, const TablePtr& table) {
    if (m < 0 || n < 0) return OrthoPoly(1);
    return rho_sigma_table(m, n, which, data, table)[m][n];
}

OrthoPoly rho_via_U(int m, int n, const RankTwoData& data, const TablePtr& table) {
    if (m < 0 || n < 0) return OrthoPoly(1);
    const OrthoPoly U = cheby_biv_U(m, n, data);
    const RationalQ s = data.qi(static_cast<long>(m - 2) * data.aij) / data.lambda();
    return rescale_by_b(U, m + n - 2, data, table).scaled(s);
}

OrthoPoly rho_serre_combination(RhoSigma which, const RankTwoData& data, const TablePtr& table) {
    const int N = 1 - data.aij;
    const auto p = rho_sigma_table(N, N, which, data, table);
    OrthoPoly out(1);
    for (int m = 0; m <= N; ++m) {
        RationalQ s = q_binomial(N, m, data.di);
        if (m % 2) s = -s;
        out += p[N - m][m].scaled(s);
    }
    return out;
}

OrthoPoly rho_serre_closed(const RankTwoData& data, const TablePtr& table) {
    const int N = 1 - data.aij;
    const RationalQ Q = data.qi(2);
    const OrthoPoly C = cheby_plain(N - 2, Q, data.qi(2L * (1 - N)));
    const RationalQ s =
        -data.qi(static_cast<long>(N - 2) * (1 - N)) / data.lambda() * q_pochhammer(Q, Q, N - 1);
    return rescale_by_b(C, N - 2, data, table).scaled(s);
}

OrthoPoly rho_serre_via_P(const RankTwoData& data, const TablePtr& table) {
    const int N = 1 - data.aij;
    RationalQ s = data.qi(2L * (N - 1)) / data.lambda();
    if (N % 2) s = -s;
    return rescale_by_b(serre_P(N, PForm::recursion, data.di), N - 2, data, table).scaled(s);
}

// ------------------------------------------------------------ P_N

OrthoPoly serre_P(int N, PForm form, int d) {
    if (N < 1) throw UnsupportedCase("P_N needs N >= 1");
    const RationalQ q = RationalQ::qpow(d);
    const RationalQ Q = RationalQ::qpow(2L * d);
    const RationalQ r = RationalQ::qpow(2L * d * (1 - N));
    if (form == PForm::closed) {
        RationalQ s = RationalQ::qpow(static_cast<long>(d) * (1 - N) * N) * q_pochhammer(Q, Q, N - 1);
        if ((N - 1) % 2) s = -s;
        return cheby_plain(N - 2, Q, r).scaled(s);
    }
    OrthoPoly out(1);
    for (int m = 0; m <= N; ++m) {
        RationalQ s = q_binomial(N, m, d) * q.pow(static_cast<long>(1 - N) * m);
        if (m % 2) s = -s;
        out += cheby_U_plain(m, N - m, Q, r).scaled(s);
    }
    return out;
}

RationalQ serre_omega(int N, int k, int d) {
    const RationalQ Q = RationalQ::qpow(2L * d);
    RationalQ s;
    for (int m = std::max(k, 0); m <= N; ++m) {
        RationalQ t = q_binomial(N, m, d) * q_pochhammer(Q, Q, m) / q_pochhammer(Q, Q, m - k) *
                      RationalQ::qpow(static_cast<long>(d) * (1 - N) * m);
        if ((m - 1) % 2) t = -t;
        s += t;
    }
    return s;
}

}  // namespace qsp
