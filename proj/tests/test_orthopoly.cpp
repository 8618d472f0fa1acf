#include "doctest.h"
#include "qsp/orthopoly.hpp"

using namespace qsp;

namespace {

const RationalQ q = RationalQ::q();
const RationalQ one(1);

OrthoPoly c(const RationalQ& v) { return OrthoPoly::constant(CoeffPoly(v)); }
OrthoPoly X() { return OrthoPoly::x(); }

struct Fix {
    RankTwoData d = RankTwoData::from_aij(-2, 1, 1);
    TablePtr t = declare_standard_table(d, StarCase::II);
    CoeffPoly Z = CoeffPoly::symbol(t, sym::Z);
};

}  // namespace

TEST_CASE("univariate Hermite families") {
    Fix f;
    CHECK(hermite_plain(0, q) == c(one));
    CHECK(hermite_plain(2, q) == X().mul_x().scaled(RationalQ(4)) - c(one - q));
    CHECK(hermite_plain(-1, q).is_zero());
    const RationalQ qd = q - q.inverse();
    CHECK(hermite_w(2, f.d, f.t) == X().mul_x() - OrthoPoly::constant(f.Z.scaled((one - q * q) / (qd * qd))));
    CHECK(hermite_w(0, f.d, f.t) == c(one));
    for (int m = 0; m <= 6; ++m) {
        CHECK(hermite_w(m, f.d, f.t) == hermite_w_upto(6, f.d, f.t)[m]);
        CHECK(hermite_v(m, f.d, f.t) == hermite_v_upto(6, f.d, f.t)[m]);
        CHECK(hermite_v_sum(m, f.d, f.t) == hermite_v(m, f.d, f.t));
    }
}

TEST_CASE("bivariate Hermite families") {
    Fix f;
    const RationalQ r = q.pow(-2);
    CHECK(hermite_biv_w(0, 3, f.d, f.t) == hermite_w(3, f.d, f.t).as_y());
    CHECK(hermite_biv_plain(-1, 2, q, r).is_zero());
    CHECK(hermite_biv_plain(0, 1, q, r) == OrthoPoly::y().scaled(RationalQ(2)));
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n) {
            CHECK(hermite_biv_plain(m, n, q, r) == hermite_biv_plain(n, m, q, r).swap_xy());
            CHECK(expand_biv_in_uni_w(m, n, f.d, f.t) == hermite_biv_w(m, n, f.d, f.t));
            CHECK(hermite_biv_w_table(4, 4, f.d, f.t)[m][n] == hermite_biv_w(m, n, f.d, f.t));
        }
}

TEST_CASE("Serre combinations") {
    const RankTwoData d0 = RankTwoData::from_aij(0, 1, 1);
    const TablePtr t0 = declare_standard_table(d0, StarCase::II);
    const OrthoPoly xy = X().as_bivariate() - OrthoPoly::y();
    CHECK(serre_combination_biv(0, SerreSide::bivariate, d0, t0) == xy);
    CHECK(serre_combination_biv(0, SerreSide::uni_wv, d0, t0) == xy);
    Fix f;
    const OrthoPoly b = serre_combination_biv(-2, SerreSide::bivariate, f.d, f.t);
    CHECK(b == serre_combination_biv(-2, SerreSide::uni_wv, f.d, f.t));
    CHECK(b == serre_combination_biv(-2, SerreSide::uni_vw, f.d, f.t));
}

TEST_CASE("bar swaps the w and v families") {
    Fix f;
    for (int m = 0; m <= 6; ++m) {
        CHECK(hermite_w(m, f.d, f.t).bar() == hermite_v(m, f.d, f.t, true));
        CHECK(hermite_v(m, f.d, f.t).bar() == hermite_w(m, f.d, f.t, true));
    }
}

TEST_CASE("deformed Chebyshev polynomials") {
    const RankTwoData d{0, 0, 1, 1};
    for (int a : {0, -1, -3}) {
        const RationalQ Q = q * q, ri = q.pow(-2 * a);
        const RationalQ k2 = (ri - Q * Q) / (one - Q * Q);
        CHECK(cheby_deformed(2, a, ChebyVariant::plain, d) == X().mul_x().scaled(RationalQ(4)) - c(k2));
    }
    CHECK(cheby_deformed(2, 0, ChebyVariant::plain, d) == chebyshev_U_classical(2));
    CHECK(chebyshev_U_classical(3) == X().mul_x(2).scaled(RationalQ(8)) - X().scaled(RationalQ(4)));
    CHECK(cheby_plain(-1, q, q).is_zero());
    for (int n = 0; n <= 8; ++n) CHECK(cheby_plain(n, q, one) == chebyshev_U_classical(n));
    CHECK_THROWS_AS(cheby_deformed(2, -1, ChebyVariant::rescaled_u, d), TableMismatch);
}

TEST_CASE("rescaled Chebyshev polynomials") {
    Fix f;
    for (int n = 0; n <= 6; ++n)
        for (bool inv : {false, true})
            CHECK(cheby_deformed(n, -3, inv ? ChebyVariant::rescaled_u_inverse : ChebyVariant::rescaled_u, f.d, f.t) ==
                  rescaled_u_recursion(n, -3, inv, f.d, f.t));
    // The recursion started at u_1 = 2x is a different family (only u_0 agrees).
    CHECK(rescaled_u_statement_form(0, -3, f.d, f.t) == c(one));
    CHECK_FALSE(rescaled_u_statement_form(1, -3, f.d, f.t) == cheby_deformed(1, -3, ChebyVariant::rescaled_u, f.d, f.t));
    CHECK_THROWS_AS(rescale_by_b(X(), 2, f.d, f.t), UnsupportedCase);
}

TEST_CASE("U_{m,n}, rho and sigma") {
    Fix f;
    for (int n = 0; n <= 3; ++n) CHECK(cheby_biv_U(0, n, f.d).is_zero());
    const RationalQ l = f.d.lambda();
    const auto sig = rho_sigma_table(3, 3, RhoSigma::sigma, f.d, f.t);
    const auto rho = rho_sigma_table(3, 3, RhoSigma::rho, f.d, f.t);
    const RankTwoData d1 = RankTwoData::from_aij(-1, 1, 1);
    const TablePtr t1 = declare_standard_table(d1, StarCase::II);
    CHECK(rho_sigma(2, 0, RhoSigma::sigma, d1, t1) == c((one - q * q) / d1.lambda()));
    for (int n = 0; n <= 3; ++n) {
        CHECK(rho[1][n].is_zero());
        CHECK(rho[0][n].is_zero());
        CHECK(sig[0][n].is_zero());
        if (n >= 1) CHECK(sig[1][n] == hermite_w(n - 1, f.d, f.t).scaled(q.pow(-2) * (one - q.pow(2 * n)) / l));
    }
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; m + n <= 4; ++n) CHECK(rho_via_U(m, n, f.d, f.t) == rho_sigma(m, n, RhoSigma::rho, f.d, f.t));
    CHECK(rho_serre_combination(RhoSigma::rho, f.d, f.t) == rho_serre_closed(f.d, f.t));
    CHECK(rho_serre_via_P(f.d, f.t) == rho_serre_closed(f.d, f.t));
}

TEST_CASE("P_N and omega") {
    CHECK(serre_P(2, PForm::closed) == c(-q.pow(-2) * (one - q * q)));
    CHECK(serre_P(2, PForm::recursion) == serre_P(2, PForm::closed));
    for (int N = 1; N <= 5; ++N) CHECK(serre_P(N, PForm::recursion, 2) == serre_P(N, PForm::closed, 2));
    const RationalQ Q = q * q;
    CHECK(serre_omega(3, 3) == q_pochhammer(Q, Q, 3) * q.pow(-6));
    CHECK(serre_omega(3, 1).is_zero());
    CHECK_THROWS_AS(serre_P(0, PForm::closed), UnsupportedCase);
}

TEST_CASE("polynomial plumbing") {
    Fix f;
    const OrthoPoly p = X().mul_x().scaled(q) + OrthoPoly::constant(f.Z);
    CHECK(p.subst_x_scale(RationalQ(2)) == X().mul_x().scaled(q * 4) + OrthoPoly::constant(f.Z));
    CHECK((p * p).degree_x() == 4);
    CHECK(p.has_parity(0));
    CHECK_FALSE((p + X()).has_parity(0));
    CHECK(p.to_text() == "q*x^2 + Z");
    CHECK(p.to_text("F_i") == "q*F_i^2 + Z");
    CHECK(p.to_latex() == "q x^{2} + \\mathcal{Z}_i");
    CHECK(OrthoPoly(1).to_text() == "0");
    CHECK(quarter_b2(f.d, f.t) == f.Z.scaled(one / ((q - q.inverse()) * (q - q.inverse()))));
}
