#include "doctest.h"
#include "qsp/genfun.hpp"
#include "support.hpp"

using namespace qsp;

namespace {

const RationalQ q = RationalQ::q();
const RationalQ one(1);

OrthoPoly c(const RationalQ& v) { return OrthoPoly::constant(CoeffPoly(v)); }

TruncSeries random_series(std::mt19937& g, int S, int T) {
    std::map<TruncSeries::Key, OrthoPoly> m;
    for (int i = 0; i <= S; ++i)
        for (int j = 0; j <= T; ++j)
            m[{i, j}] = c(test::random_rational(g)) + OrthoPoly::x().scaled(test::random_rational(g));
    return TruncSeries::from_terms(S, T, m);
}

}  // namespace

TEST_CASE("series ring laws on random samples") {
    std::mt19937 g(31);
    for (int k = 0; k < 6; ++k) {
        const TruncSeries a = random_series(g, 4, 2), b = random_series(g, 4, 2), d = random_series(g, 4, 2);
        CHECK((a * b) * d == a * (b * d));
        CHECK(a * (b + d) == a * b + a * d);
        CHECK(a * b == b * a);
        CHECK(a * TruncSeries::one(4, 2) == a);
    }
}

TEST_CASE("shift, rescaling and truncation") {
    const TruncSeries one_ = TruncSeries::one(3, 1);
    const TruncSeries st = one_.shift(1, 1);
    CHECK(st.coeff(1, 1) == c(one));
    CHECK(st.coeff(0, 0).is_zero());
    CHECK(one_.shift(4, 0).terms().empty());
    const TruncSeries sq = TruncSeries::from_terms(3, 1, {{{2, 0}, c(one)}});
    CHECK(sq.subst_s_scale(q).coeff(2, 0) == c(q * q));
    CHECK((st * st).coeff(2, 2).is_zero());
    CHECK_THROWS_AS(one_ + TruncSeries::one(2, 1), OrderMismatch);
}

TEST_CASE("series leading coefficients") {
    const RankTwoData d = RankTwoData::from_aij(-2, 1, 1);
    CHECK(series_build(SeriesKind::eta, -2, 6, 0, d).coeff(0) == c(one / (one - q * q)));
    CHECK(series_build(SeriesKind::psi, -2, 4, 3, d).coeff(0, 0) == c(one));
    const TruncSeries phi = series_build(SeriesKind::phi, -2, 5, 3, d);
    for (int n = 0; n <= 3; ++n) {
        CHECK(phi.coeff(0, n).is_zero());
        CHECK(phi.coeff(1, n).is_zero());
    }
    CHECK_THROWS_AS(series_build(SeriesKind::eta_tilde, -1, 4, 0, d), PoleInCoefficient);
}

TEST_CASE("functional equations hold") {
    const RankTwoData d = RankTwoData::from_aij(-1, 1, 1);
    const RankTwoData d2 = RankTwoData::from_aij(-2, 2, 1);
    for (int a : {0, -1, -3}) {
        CHECK(check_functional_equation(SeriesKind::eta, a, 8, 0, d).pass);
        CHECK(check_functional_equation(SeriesKind::eta, a, 6, 0, d2).pass);
        CHECK(check_phi_identity(a, 6, 3, d).pass);
    }
    for (int a : {0, 1, 2}) CHECK(check_functional_equation(SeriesKind::eta_tilde, a, 8, 0, d).pass);
    CHECK(check_functional_equation(SeriesKind::psi, 0, 6, 4, d).pass);
}

TEST_CASE("eta coefficients are recovered from the equation") {
    const RationalQ r = q.pow(-3);
    const auto f = eta_coefficients_from_equation(7, q, r);
    const TruncSeries eta = build_eta(7, q, r);
    REQUIRE(f.size() == 8);
    for (int n = 0; n <= 7; ++n) CHECK(f[n] == eta.coeff(n));
}

TEST_CASE("a corrupted coefficient is reported at its own order") {
    const RationalQ r = q.pow(-2);
    TruncSeries eta = build_eta(8, q, r);
    eta.set_coeff(3, 0, eta.coeff(3).scaled(RationalQ(2)));
    const SeriesReport rep = check_eta_equation(eta, q, r);
    CHECK_FALSE(rep.pass);
    CHECK(rep.s_exp == 3);
    CHECK(rep.t_exp == 0);
    CHECK(rep.describe().rfind("mismatch at s^3 t^0", 0) == 0);

    TruncSeries psi = build_psi(5, 3, q);
    psi.set_coeff(2, 1, psi.coeff(2, 1) + c(one));
    const SeriesReport p = check_psi_equation(psi, q);
    CHECK_FALSE(p.pass);
    CHECK(p.s_exp == 2);
    CHECK(p.t_exp == 1);
}
