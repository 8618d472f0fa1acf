#include "doctest.h"
#include "qsp/relations.hpp"

using namespace qsp;

namespace {

const RationalQ q = RationalQ::q();
const RationalQ one(1);

}  // namespace

TEST_CASE("relation holds in every case") {
    for (StarCase c : {StarCase::I, StarCase::II})
        for (int a = 0; a >= -4; --a)
            for (auto [di, dj] : kDefaultWeights) {
                if (!RankTwoData::realizable(a, di, dj)) continue;
                const RankTwoData d = RankTwoData::from_aij(a, di, dj);
                const RelationStatement r = build_relation(c, d);
                const StarEngine eng(c, d);
                CHECK(r.N == 1 - a);
                CHECK(r.lhs.size() == static_cast<size_t>(r.N + 1));
                CHECK(relation_defect(r, eng).is_zero());
            }
    for (int a : {0, -1, -3}) {
        const RankTwoData d = RankTwoData::from_aij(a, 1, 1);
        CHECK(relation_defect(build_relation(StarCase::III, d), StarEngine(StarCase::III, d)).is_zero());
    }
}

TEST_CASE("right sides by case") {
    const RankTwoData d = RankTwoData::from_aij(-2, 1, 1);
    CHECK(build_relation(StarCase::I, d).rhs.empty());
    CHECK(build_relation(StarCase::II, RankTwoData::from_aij(0, 1, 1)).rhs.empty());

    const RelationStatement r2 = build_relation(StarCase::II, d);
    REQUIRE(r2.rhs.size() == 2);
    const StarEngine eng(StarCase::II, d);
    // rhs = -(C + D)
    CHECK(r2.rhs_value(eng) == -(case2_C_closed(eng) + case2_D_closed(eng)));

    const RelationStatement r3 = build_relation(StarCase::III, d);
    REQUIRE(r3.rhs.size() == 2);
    CHECK(r3.lhs.front().insertion.is_zero());
    const RationalQ Q = q * q, qd = q - q.inverse();
    CHECK(r3.rhs[0].scalar == q.pow(-3) * q_pochhammer(Q, Q, 3) / (qd * qd));
    CHECK(r3.rhs[0].poly.degree_x() == 2);
    CHECK_THROWS_AS(build_relation(StarCase::III, RankTwoData::from_aij(-2, 1, 2)), UnsupportedCase);
}

TEST_CASE("JSON form") {
    const RankTwoData d = RankTwoData::from_aij(-1, 1, 1);
    const RelationStatement r = build_relation(StarCase::II, d);
    const Json j = relation_to_json(r, true);
    for (const char* k : {"case", "cartan", "lhs", "rhs", "verified"}) CHECK(j.contains(k));
    CHECK(j["case"] == "II");
    CHECK(j["cartan"]["aij"] == -1);
    CHECK(j["lhs"].size() == 3);
    CHECK(j["lhs"][0].contains("insertion"));
    CHECK_FALSE(relation_to_json(build_relation(StarCase::III, d), true)["lhs"][0].contains("insertion"));

    const RelationStatement back = relation_from_json(j);
    const StarEngine eng(StarCase::II, d);
    CHECK(back.lhs_value(eng) == r.lhs_value(eng));
    CHECK(back.rhs_value(eng) == r.rhs_value(eng));
    CHECK(check_round_trip(r, eng).pass);
    CHECK_THROWS_AS(relation_from_json(Json::parse(R"({"case": "II"})")), ParseError);
}

TEST_CASE("rendering") {
    const RankTwoData d = RankTwoData::from_aij(-1, 1, 1);
    const RelationStatement r = build_relation(StarCase::II, d);
    const std::string tex = render_relation(r, Format::latex, true);
    CHECK(tex.find("\\begin{multline*}") != std::string::npos);
    CHECK(tex.find("\\curvearrowright") != std::string::npos);
    CHECK(render_relation(r, Format::text, true).find("verified") != std::string::npos);
    CHECK(Json::parse(render_relation(r, Format::json, true))["verified"] == true);
    CHECK(emit_relation(StarCase::I, d, Format::text) == render_relation(build_relation(StarCase::I, d), Format::text, true));
    CHECK(parse_format("json") == Format::json);
    CHECK_THROWS_AS(parse_format("yaml"), UsageError);
}

TEST_CASE("worked examples") {
    const auto rows = example_rows();
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) {
        CHECK_MESSAGE(r.match, "a_ij=" << r.aij);
        CHECK(r.engine == r.expected);
        CHECK(r.rhs == r.expected);
        CHECK(r.remark == r.expected);
    }
    CHECK(rows[0].expected.is_zero());
    CHECK(Json::parse(example_table(Format::json)).size() == 4);
}

TEST_CASE("theorem suites and case III sums") {
    const SuiteReport rep = verify_theorem(StarCase::II, {0, -1, -2});
    CHECK(rep.pass());
    CHECK_FALSE(rep.points.empty());
    CHECK(verify_theorem(StarCase::III, {-1, -2}).pass());
    CHECK(check_case3_sums(8).pass);

    SuiteReport a{"x", {}};
    a.add("p=1", true);
    SuiteReport b{"y", {}};
    b.add("p=2", false, "boom");
    a.merge(b);
    CHECK(a.points.size() == 2);
    CHECK_FALSE(a.pass());
}
