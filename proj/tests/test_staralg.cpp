#include "doctest.h"
#include "qsp/staralg.hpp"

using namespace qsp;

namespace {

const RationalQ q = RationalQ::q();
const RationalQ one(1);

}  // namespace

TEST_CASE("F_i * F_i picks up the b^2/4 correction") {
    for (StarCase c : {StarCase::I, StarCase::II}) {
        const StarEngine eng(c, RankTwoData::from_aij(-2, 1, 1));
        const StarElement expect =
            eng.word(FWord::pure(2)) + eng.one().times_right(eng.beta().scaled(one - q * q));
        CHECK(eng.power_Fi(2) == expect);
        CHECK(eng.left_Fi(eng.word(FWord::pure(1))) == expect);
    }
    const StarEngine e3(StarCase::III, RankTwoData::from_aij(-1, 1, 1));
    CHECK(e3.power_Fi(2) == e3.word(FWord::pure(2)));
}

TEST_CASE("powers of F_i are the Hermite ansatz") {
    for (StarCase c : {StarCase::I, StarCase::II}) {
        const RankTwoData d = RankTwoData::from_aij(-1, 1, 1);
        const StarEngine eng(c, d);
        for (int k = 0; k <= 6; ++k) CHECK(eng.eval_poly(hermite_w(k, d, eng.table())) == eng.word(FWord::pure(k)));
    }
}

TEST_CASE("ansatz for sandwiches") {
    for (StarCase c : {StarCase::I, StarCase::II, StarCase::III})
        for (int a : {0, -1, -3})
            for (int m = 0; m <= 3; ++m)
                for (int n = 0; m + n <= 4; ++n) {
                    const StarReport r = verify_ansatz(m, n, c, RankTwoData::from_aij(a, 1, 1));
                    CHECK_MESSAGE(r.pass, r.detail);
                }
    CHECK(verify_ansatz(2, 2, StarCase::II, RankTwoData::from_aij(-2, 1, 2)).pass);
}

TEST_CASE("the star Serre relation reduces to zero") {
    for (StarCase c : {StarCase::I, StarCase::II})
        for (int a : {0, -1, -2, -4}) CHECK(serre_star_reduce(c, RankTwoData::from_aij(a, 1, 1)).is_zero());
    CHECK(serre_star_reduce(StarCase::III, RankTwoData::from_aij(-2, 1, 1)).is_zero());
    CHECK(serre_star_reduce(StarCase::II, RankTwoData::from_aij(-1, 2, 1)).is_zero());
}

TEST_CASE("case II C and D terms") {
    const StarEngine eng(StarCase::II, RankTwoData::from_aij(-2, 1, 1));
    CHECK(case2_C_closed(eng) == case2_C_bruteforce(eng));
    CHECK(case2_D_closed(eng) == case2_D_bruteforce(eng));
    const StarEngine primed(StarCase::II, eng.data(), nullptr, true);
    CHECK(phi_star(case2_C_closed(eng), eng, primed) == case2_D_closed(primed));
}

TEST_CASE("phi maps and their domain") {
    const StarEngine eng(StarCase::II, RankTwoData::from_aij(-1, 1, 1));
    const StarEngine primed(StarCase::II, eng.data(), nullptr, true);
    const StarElement w = eng.word(FWord::pure(2)).scaled(q);
    CHECK(phi_map(phi_map(w)) == w);
    CHECK(phi_map(w).coeff(StarKey{{}, FWord::pure(2), {}}) == q.inverse());
    CHECK(phi_star(eng.word(FWord::pure(3)), eng, primed) == primed.eval_poly(hermite_v(3, eng.data(), primed.table(), true)));
    CHECK_THROWS_AS(phi_star(eng.word(FWord::sw(0, 0)), eng, primed), ShapeError);
}

TEST_CASE("shape and crossing errors") {
    const StarEngine eng(StarCase::II, RankTwoData::from_aij(-1, 1, 1));
    CHECK_THROWS_AS(eng.left_Fj(eng.word(FWord::sw(1, 0))), ShapeError);
    // d has no commutation rule with F_j
    CHECK_THROWS_AS(eng.left_Fj(eng.one().times_left(eng.d_symbol())), NonCommutingCross);
    CHECK_THROWS_AS(eng.one().times_right(CoeffPoly::symbol(eng.table(), sym::d)), ShapeError);
    CHECK_THROWS_AS(eng.eval_poly(OrthoPoly::y()), ShapeError);
}

TEST_CASE("associativity and square action") {
    for (StarCase c : {StarCase::I, StarCase::II, StarCase::III}) {
        const StarEngine eng(c, RankTwoData::from_aij(-2, 1, 1));
        for (int m = 0; m <= 2; ++m) {
            CHECK(check_associativity(eng.word(FWord::pure(m)), eng).pass);
            CHECK(check_square_action(eng.word(FWord::pure(m)), eng).pass);
            for (int n = 0; n <= 2; ++n) {
                CHECK(check_associativity(eng.word(FWord::sw(m, n)), eng).pass);
                if (c != StarCase::II) CHECK(check_square_action(eng.word(FWord::sw(m, n)), eng).pass);
            }
        }
    }
}

TEST_CASE("rules never raise the filtration degree") {
    reset_filtration_stats();
    const StarEngine eng(StarCase::II, RankTwoData::from_aij(-3, 1, 1));
    (void)eng.sandwich_star(3, 2);
    const FiltrationStats s = filtration_stats();
    CHECK(s.applications > 0);
    CHECK(s.violations == 0);
    CHECK(eng.sandwich_star(3, 2).degree() == 6);
}

TEST_CASE("rendering of words") {
    CHECK(FWord::pure(0).to_text() == "1");
    CHECK(FWord::sw(2, 0).degree() == 3);
    const StarEngine eng(StarCase::I, RankTwoData::from_aij(-1, 1, 1));
    CHECK_FALSE(eng.power_Fi(2).to_text().empty());
    CHECK_FALSE(eng.power_Fi(2).to_latex().empty());
}
