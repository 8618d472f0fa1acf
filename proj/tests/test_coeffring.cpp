#include "doctest.h"
#include "qsp/coeffring.hpp"

using namespace qsp;

namespace {

const RationalQ q = RationalQ::q();

TablePtr case2() { return declare_standard_table(RankTwoData::from_aij(-2, 1, 1), StarCase::II); }

}  // namespace

TEST_CASE("standard tables declare sides, crossings and bar images") {
    const TablePtr t = case2();
    const auto& d = t->entry(t->index(sym::d));
    CHECK(d.side == Side::left);
    CHECK(d.comm_fi == -2);
    CHECK_FALSE(d.comm_fj.has_value());
    CHECK(t->entry(t->index(sym::d)).bar_image == sym::dtp);
    CHECK(t->entry(t->index(sym::Z)).side == Side::right);
    CHECK_FALSE(t->entry(t->index(sym::Z)).comm_fj.has_value());

    const TablePtr t1 = declare_standard_table(RankTwoData::from_aij(-1, 1, 1), StarCase::I);
    CHECK(t1->entry(t1->index(sym::Z)).comm_fj == 0);
    CHECK_FALSE(t1->find(sym::d).has_value());

    const TablePtr t3 = declare_standard_table(RankTwoData::from_aij(-1, 1, 1), StarCase::III);
    CHECK(t3->entry(t3->index(sym::Kji)).comm_fi == -3);
    CHECK_THROWS_AS(declare_standard_table(RankTwoData::from_aij(-2, 1, 2), StarCase::III), UnsupportedCase);
    CHECK_THROWS_AS(t->index("nope"), TableMismatch);
}

TEST_CASE("symbol tables reject duplicates and broken bar tables") {
    CHECK_THROWS_AS(SymbolTable({{"a", "a", Side::right, 0, 0, ""}, {"a", "a", Side::right, 0, 0, ""}}),
                    UnsupportedCase);
    CHECK_THROWS_AS(SymbolTable({{"a", "a", Side::right, 0, 0, "b"}}), MissingBarImage);
    CHECK_THROWS_AS(SymbolTable({{"a", "a", Side::right, 0, 0, "b"},
                                 {"b", "b", Side::right, 0, 0, "c"},
                                 {"c", "c", Side::right, 0, 0, "a"}}),
                    UnsupportedCase);
}

TEST_CASE("polynomial arithmetic over symbols") {
    const TablePtr t = case2();
    const CoeffPoly Z = CoeffPoly::symbol(t, sym::Z);
    const CoeffPoly d = CoeffPoly::symbol(t, sym::d);
    const CoeffPoly a = Z.scaled(q) + d;
    const CoeffPoly b = Z - CoeffPoly(q.inverse());
    CHECK(a * b == b * a);
    CHECK((a + b) * a == a * a + b * a);
    CHECK(a.pow(2) == a * a);
    CHECK((a - a).is_zero());
    CHECK(CoeffPoly(3).is_scalar());
    CHECK(b.scalar_part() == -q.inverse());
    CHECK(cp_arith(a, b, CpOp::mul) == a * b);
    CHECK(cp_arith(a, b, CpOp::scale, q) == a.scaled(q));
}

TEST_CASE("bar sends symbols to their images and is an involution") {
    const TablePtr t = case2();
    const CoeffPoly x = CoeffPoly::symbol(t, sym::Z).scaled(q) + CoeffPoly::symbol(t, sym::d, 2);
    const CoeffPoly bx = cp_bar(x);
    CHECK(bx == CoeffPoly::symbol(t, sym::Zp).scaled(q.inverse()) + CoeffPoly::symbol(t, sym::dtp, 2));
    CHECK(cp_bar(bx) == x);
    CHECK(cp_bar(x * bx) == bx * x);
}

TEST_CASE("operands over different tables do not mix") {
    const TablePtr t = case2();
    const TablePtr other = declare_standard_table(RankTwoData::from_aij(-1, 1, 1), StarCase::I);
    const CoeffPoly a = CoeffPoly::symbol(t, sym::Z);
    const CoeffPoly b = CoeffPoly::symbol(other, sym::Z);
    CHECK_THROWS_AS(a + b, TableMismatch);
    CHECK_NOTHROW(a + CoeffPoly(1));
    // structurally equal tables are interchangeable
    CHECK_NOTHROW(a + CoeffPoly::symbol(case2(), sym::d));
}

TEST_CASE("rendering") {
    const TablePtr t = case2();
    const CoeffPoly Z = CoeffPoly::symbol(t, sym::Z);
    CHECK(Z.to_text() == "Z");
    CHECK(Z.to_latex() == "\\mathcal{Z}_i");
    CHECK(CoeffPoly(0).to_text() == "0");
    CHECK((Z.scaled(q) - CoeffPoly::symbol(t, sym::dt)).to_text() == "-dt + q*Z");
    CHECK(monomial_text(t.get(), monomial_of(t->index(sym::Z), 2)) == "Z^2");
    CHECK(parse_case("II") == StarCase::II);
    CHECK_THROWS_AS(parse_case("IV"), UnsupportedCase);
}
