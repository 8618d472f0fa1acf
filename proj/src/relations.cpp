#include "qsp/relations.hpp"

#include <sstream>

namespace qsp {

Format parse_format(const std::string& s) {
    if (s == "latex") return Format::latex;
    if (s == "json") return Format::json;
    if (s == "text") return Format::text;
    throw UsageError("unknown format '" + s + "'");
}

// ------------------------------------------------------------ statement

namespace {

RationalQ serre_sign(int N, int n, int d) { return q_binomial(N, n, d) * RationalQ(n % 2 ? -1 : 1); }

Monomial case3_marker(const SymbolTable& t, bool ci) {
    return ci ? monomial_of(t.index(sym::ci)) * monomial_of(t.index(sym::Kji)) * monomial_of(t.index(sym::Zj))
              : monomial_of(t.index(sym::cj)) * monomial_of(t.index(sym::Kij)) * monomial_of(t.index(sym::Zi));
}

}  // namespace

RelationStatement build_relation(StarCase c, const RankTwoData& data) {
    data.validate();
    const TablePtr t = declare_standard_table(data, c);
    RelationStatement r;
    r.star_case = c;
    r.data = data;
    r.N = 1 - data.aij;
    const int N = r.N;
    const int a = data.aij;

    if (c == StarCase::III) {
        for (int n = 0; n <= N; ++n) r.lhs.push_back({serre_sign(N, n, data.di), N - n, n, OrthoPoly(2)});
        const RationalQ qd = data.qi_diff();
        const RationalQ den = (qd * qd).inverse();
        const OrthoPoly xp = OrthoPoly::term(N - 1, 0, CoeffPoly(1), 1);
        r.rhs.push_back({data.qi(-N) * q_pochhammer(data.qi(2), data.qi(2), N) * den, CoeffPoly(1), xp,
                         CoeffPoly::term(t, case3_marker(*t, true), RationalQ(1))});
        r.rhs.push_back({data.qi(1) * q_pochhammer(data.qi(-2), data.qi(-2), N) * den, CoeffPoly(1), xp,
                         CoeffPoly::term(t, case3_marker(*t, false), RationalQ(1))});
        return r;
    }

    const auto W = hermite_biv_w_table(N, N, data, t);
    for (int n = 0; n <= N; ++n) r.lhs.push_back({serre_sign(N, n, data.di), N - n, n, W[N - n][n]});

    // Case II with a_ij = 0 would need u_{-1}; the whole term is taken as 0.
    if (c == StarCase::II && -a - 1 >= 0) {
        const long e = static_cast<long>(a) * (a + 1);
        const RationalQ l = data.lambda().inverse();
        const RationalQ pre = data.qi(-e) * q_pochhammer(data.qi(2), data.qi(2), -a);
        const RationalQ pre_bar = data.qi(e) * q_pochhammer(data.qi(-2), data.qi(-2), -a);
        r.rhs.push_back({pre * l, CoeffPoly::symbol(t, sym::d), cheby_deformed(-a - 1, a, ChebyVariant::rescaled_u, data, t),
                         CoeffPoly(1)});
        r.rhs.push_back({-pre_bar * l, CoeffPoly::symbol(t, sym::dt),
                         cheby_deformed(-a - 1, a, ChebyVariant::rescaled_u_inverse, data, t), CoeffPoly(1)});
    }
    return r;
}

StarElement RelationStatement::lhs_value(const StarEngine& eng) const {
    StarElement out(eng.table());
    for (const auto& s : lhs) {
        const StarElement v =
            star_case == StarCase::III ? eng.sandwich_star(s.m, s.n) : eng.insertion(s.insertion);
        out += v.scaled(s.coeff);
    }
    return out;
}

StarElement RelationStatement::rhs_value(const StarEngine& eng) const {
    StarElement out(eng.table());
    for (const auto& p : rhs) out += eng.eval_poly(p.poly).times_left(p.left).times_right(p.right).scaled(p.scalar);
    return out;
}

// ---------------------------------------------------------------- JSON

Json relation_to_json(const RelationStatement& r, bool verified) {
    Json lhs = Json::array();
    for (const auto& s : r.lhs) {
        Json t{{"coeff", to_json(s.coeff)}, {"m", s.m}, {"n", s.n}};
        if (r.star_case != StarCase::III) t["insertion"] = to_json(s.insertion);
        lhs.push_back(t);
    }
    Json rhs = Json::array();
    for (const auto& p : r.rhs)
        rhs.push_back({{"scalar", to_json(p.scalar)},
                       {"left", to_json(p.left)},
                       {"poly", to_json(p.poly)},
                       {"right", to_json(p.right)}});
    return Json{{"case", case_name(r.star_case)},
                {"cartan", to_json(r.data)},
                {"lhs", lhs},
                {"rhs", rhs},
                {"verified", verified}};
}

RelationStatement relation_from_json(const Json& j) {
    try {
        RelationStatement r;
        r.star_case = parse_case(j.at("case").get<std::string>());
        r.data = data_from_json(j.at("cartan"));
        r.N = 1 - r.data.aij;
        const TablePtr t = declare_standard_table(r.data, r.star_case);
        for (const auto& s : j.at("lhs")) {
            SerreTerm term{rational_from_json(s.at("coeff")), s.at("m").get<int>(), s.at("n").get<int>(), OrthoPoly(2)};
            if (r.star_case != StarCase::III) term.insertion = poly_from_json(s.at("insertion"), t);
            r.lhs.push_back(std::move(term));
        }
        for (const auto& p : j.at("rhs"))
            r.rhs.push_back({rational_from_json(p.at("scalar")), coeff_from_json(p.at("left"), t),
                             poly_from_json(p.at("poly"), t), coeff_from_json(p.at("right"), t)});
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("relation: ") + e.what());
    }
}

// ----------------------------------------------------------- rendering

namespace {

std::string cp_factor(const CoeffPoly& c, bool latex) {
    if (c.is_scalar() && c.scalar_part().is_one()) return "";
    const auto parts = c.signed_terms(latex);
    if (parts.size() == 1 && !parts[0].first) return parts[0].second;
    const std::string inner = join_signed(parts);
    return latex ? "\\left(" + inner + "\\right)" : "(" + inner + ")";
}

std::string glue(const std::vector<std::string>& parts, bool latex) {
    std::string s;
    for (const auto& p : parts)
        if (!p.empty()) s += (s.empty() ? "" : (latex ? " " : "*")) + p;
    return s.empty() ? "1" : s;
}

std::string star_power(int k, bool latex) {
    if (k == 0) return "";
    if (k == 1) return "F_i";
    return latex ? "F_i^{\\ast " + std::to_string(k) + "}" : "F_i^*" + std::to_string(k);
}

std::string lhs_text(const RelationStatement& r, bool latex) {
    std::vector<std::pair<bool, std::string>> out;
    for (const auto& s : r.lhs) {
        bool neg = false;
        const std::string f = factor_text(s.coeff, latex, neg);
        std::string body;
        if (r.star_case == StarCase::III) {
            std::vector<std::string> w;
            if (s.m) w.push_back(star_power(s.m, latex));
            w.push_back("F_j");
            if (s.n) w.push_back(star_power(s.n, latex));
            std::string joined;
            for (const auto& x : w) joined += (joined.empty() ? "" : (latex ? " \\ast " : " * ")) + x;
            body = latex ? joined : "(" + joined + ")";
        } else if (latex) {
            body = "F_j \\curvearrowright \\Big[" + s.insertion.to_latex() +
                   "\\Big]_{(x,y) = (F_i \\stackrel{\\ast}{,} F_i)}";
        } else {
            body = "F_j ~> [" + s.insertion.to_text() + "](x, y = F_i *, F_i)";
        }
        out.emplace_back(neg, glue({f, body}, latex));
    }
    return join_signed(out);
}

std::string rhs_text(const RelationStatement& r, bool latex) {
    std::vector<std::pair<bool, std::string>> out;
    for (const auto& p : r.rhs) {
        bool neg = false;
        const std::string f = factor_text(p.scalar, latex, neg);
        const std::string poly = latex ? "\\left(" + p.poly.to_latex("F_i") + "\\right)^{\\ast}"
                                       : "(" + p.poly.to_text("F_i") + ")^*";
        const bool trivial = p.poly == OrthoPoly::constant(CoeffPoly(1));
        out.emplace_back(neg, glue({f, cp_factor(p.left, latex), trivial ? "" : poly, cp_factor(p.right, latex)}, latex));
    }
    return join_signed(out);
}

std::string header(const RelationStatement& r) {
    return "case " + case_name(r.star_case) + ", " + r.data.to_string() + ", N=" + std::to_string(r.N);
}

}  // namespace

std::string render_relation(const RelationStatement& r, Format f, bool verified) {
    if (f == Format::json) return relation_to_json(r, verified).dump(2) + "\n";
    std::ostringstream os;
    if (f == Format::latex) {
        os << "% " << header(r) << (verified ? ", verified" : ", NOT verified") << "\n";
        if (r.star_case == StarCase::III) os << "% here \\mathcal{Z}_i = q_i c_i Z_j and \\mathcal{Z}_j = q_j c_j Z_i\n";
        os << "\\begin{multline*}\n  " << lhs_text(r, true) << " \\\\\n  = " << rhs_text(r, true)
           << "\n\\end{multline*}\n";
    } else {
        os << header(r) << "\n";
        os << "  lhs: " << lhs_text(r, false) << "\n";
        os << "  rhs: " << rhs_text(r, false) << "\n";
        os << "  verified: " << (verified ? "yes" : "no") << "\n";
    }
    return os.str();
}

StarReport check_round_trip(const RelationStatement& r, const StarEngine& eng) {
    const RelationStatement back = relation_from_json(Json::parse(relation_to_json(r, true).dump()));
    StarReport rep;
    const StarElement dl = back.lhs_value(eng) - r.lhs_value(eng);
    const StarElement dr = back.rhs_value(eng) - r.rhs_value(eng);
    rep.remainder = dl + dr;
    rep.pass = dl.is_zero() && dr.is_zero() && back.N == r.N && back.star_case == r.star_case && back.data == r.data;
    if (!rep.pass) rep.detail = "round trip changed the relation: lhs by " + dl.to_text() + ", rhs by " + dr.to_text();
    return rep;
}

StarElement relation_defect(const RelationStatement& r, const StarEngine& eng) {
    return r.lhs_value(eng) - r.rhs_value(eng) - serre_classical(eng);
}

std::string emit_relation(StarCase c, const RankTwoData& data, Format f) {
    const RelationStatement r = build_relation(c, data);
    const StarEngine eng(c, data);
    const bool ok = relation_defect(r, eng).is_zero() && check_round_trip(r, eng).pass;
    return render_relation(r, f, ok);
}

// ------------------------------------------------------------ reports

bool SuiteReport::pass() const {
    for (const auto& p : points)
        if (!p.pass) return false;
    return true;
}

void SuiteReport::add(std::string params, bool ok, std::string detail) {
    points.push_back({std::move(params), ok, ok ? std::string() : std::move(detail)});
}

void SuiteReport::merge(const SuiteReport& o) { points.insert(points.end(), o.points.begin(), o.points.end()); }

SuiteReport verify_theorem(StarCase c, const std::vector<int>& aij_range,
                           const std::vector<std::pair<int, int>>& weights) {
    SuiteReport rep;
    rep.suite = "theorem-case" + case_name(c);
    for (int a : aij_range)
        for (const auto& [di, dj] : weights) {
            if (!RankTwoData::realizable(a, di, dj)) continue;
            if (c == StarCase::III && di != dj) continue;
            const RankTwoData data = RankTwoData::from_aij(a, di, dj);
            const std::string p = "case=" + case_name(c) + " " + data.to_string();
            const StarEngine eng(c, data);
            const RelationStatement r = build_relation(c, data);

            const StarElement defect = relation_defect(r, eng);
            rep.add(p + " check=relation", defect.is_zero(), "defect " + defect.to_text());
            const StarElement red = serre_star_reduce(eng);
            rep.add(p + " check=reduce", red.is_zero(), "remainder " + red.to_text());
            const StarReport rt = check_round_trip(r, eng);
            rep.add(p + " check=round-trip", rt.pass, rt.detail);

            if (c != StarCase::II) continue;
            const StarEngine primed(c, data, eng.table(), true);
            const StarElement C = case2_C_closed(eng);
            const StarElement D = case2_D_closed(eng);
            rep.add(p + " check=C-vs-rho", C == case2_C_bruteforce(eng), "closed C differs from the rho combination");
            const OrthoPoly rc = rho_serre_combination(RhoSigma::rho, data, eng.table());
            rep.add(p + " check=rho-closed", rc == rho_serre_closed(data, eng.table()),
                    "rho combination " + rc.to_text() + " differs from its closed form");
            rep.add(p + " check=D-vs-sigma", D == case2_D_bruteforce(eng), "closed D differs from the sigma combination");
            const StarElement phiCp = phi_star(case2_C_closed(primed), primed, eng);
            rep.add(p + " check=D-vs-phi", D == phiCp, "Phi(C') = " + phiCp.to_text() + " but D = " + D.to_text());
            const StarElement phiC = phi_star(C, eng, primed);
            rep.add(p + " check=phi-C", phiC == case2_D_closed(primed), "Phi(C) differs from D'");
            rep.add(p + " check=rhs-is-minus-CD", r.rhs_value(eng) == -(C + D), "assembled right side is not -(C + D)");
        }
    return rep;
}

// ------------------------------------------------------------ examples

std::vector<ExampleRow> example_rows() {
    std::vector<ExampleRow> rows;
    const RationalQ q = RationalQ::q();
    const RationalQ qd = q - q.inverse();
    const RationalQ two = q + q.inverse();
    for (int a : {0, -1, -2, -3}) {
        const RankTwoData data = RankTwoData::from_aij(a, 1, 1);
        const StarEngine eng(StarCase::II, data);
        const TablePtr& t = eng.table();
        const Monomial d = monomial_of(t->index(sym::d));
        const Monomial dt = monomial_of(t->index(sym::dt));
        const Monomial Z = monomial_of(t->index(sym::Z));
        ExampleRow row;
        row.aij = a;
        row.expected = StarElement(t);
        switch (a) {
            case 0: row.printed = "0"; break;
            case -1:
                row.printed = "-(q d + q^-1 dt)/((q - q^-1)(q - q^-1))";
                row.expected.add(-q / (qd * qd), d, FWord::pure(0), {});
                row.expected.add(-q.inverse() / (qd * qd), dt, FWord::pure(0), {});
                break;
            case -2:
                row.printed = "[2] (q d - q^-1 dt)/(q - q^-1) F_i";
                row.expected.add(two * q / qd, d, FWord::pure(1), {});
                row.expected.add(-two * q.inverse() / qd, dt, FWord::pure(1), {});
                break;
            case -3: {
                row.printed =
                    "-[2] (q^3 - q^-3)/(q - q^-1) (d + dt) F_i^*2 - (q^3 - q^-3)/((q - q^-1)^2 (q - q^-1)) (q^3 d + q^-3 dt) Z";
                const RationalQ s3 = q.pow(3) - q.pow(-3);
                const CoeffPoly dd = CoeffPoly::term(t, d, RationalQ(1)) + CoeffPoly::term(t, dt, RationalQ(1));
                row.expected += eng.power_Fi(2).times_left(dd).scaled(-two * s3 / qd);
                row.expected.add(-s3 * q.pow(3) / qd.pow(3), d, FWord::pure(0), Z);
                row.expected.add(-s3 * q.pow(-3) / qd.pow(3), dt, FWord::pure(0), Z);
                break;
            }
        }
        const StarElement classical = serre_classical(eng);
        row.engine = serre_insertion_sum(eng) - classical;
        row.rhs = build_relation(StarCase::II, data).rhs_value(eng);
        row.remark = eng.insertion(serre_combination_biv(a, SerreSide::uni_wv, data, t)) - classical;
        row.match = row.expected == row.engine && row.engine == row.rhs && row.remark == row.engine;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string example_table(Format f) {
    const auto rows = example_rows();
    std::ostringstream os;
    if (f == Format::json) {
        Json arr = Json::array();
        for (const auto& r : rows)
            arr.push_back({{"aij", r.aij},
                           {"printed", r.printed},
                           {"expected", to_json(r.expected)},
                           {"engine", to_json(r.engine)},
                           {"match", r.match}});
        return arr.dump(2) + "\n";
    }
    if (f == Format::latex) {
        os << "\\begin{tabular}{c l l c}\n$a_{ij}$ & expected & engine & match \\\\ \\hline\n";
        for (const auto& r : rows)
            os << r.aij << " & $" << r.expected.to_latex() << "$ & $" << r.engine.to_latex() << "$ & "
               << (r.match ? "yes" : "no") << " \\\\\n";
        os << "\\end{tabular}\n";
        return os.str();
    }
    for (const auto& r : rows) {
        os << "a_ij=" << r.aij << "  [" << (r.match ? "match" : "MISMATCH") << "]\n";
        os << "  printed:  " << r.printed << "\n";
        os << "  expected: " << r.expected.to_text() << "\n";
        os << "  engine:   " << r.engine.to_text() << "\n";
    }
    return os.str();
}

// -------------------------------------------------------- case III sums

StarReport check_case3_sums(int L) {
    StarReport rep;
    const RationalQ q = RationalQ::q();
    const RationalQ Q = q * q;
    const RationalQ Qi = Q.inverse();
    auto fail = [&](const std::string& what, int l) {
        rep.pass = false;
        rep.detail += (rep.detail.empty() ? "" : "; ") + what + " at l=" + std::to_string(l);
    };
    for (int l = 1; l <= L; ++l) {
        RationalQ s1, s2, t1, t2;
        const int a = 1 - l;
        for (int n = 0; n <= l; ++n) {
            const RationalQ b = serre_sign(l, n, 1);
            s1 += b * q.pow(static_cast<long>(n) * (l + 1));
            s2 += b * q.pow(static_cast<long>(n) * (l - 1));
            t1 += b * q.pow(static_cast<long>(n) * (2 - a)) * q_integer_nonsym(l - n, Q);
            t2 += b * q.pow(static_cast<long>(n) * (a - 2)) * q_integer_nonsym(n, Q);
        }
        if (!(s1 == q_pochhammer(Q, Q, l))) fail("binomial sum with q^{n(l+1)}", l);
        if (!s2.is_zero()) fail("binomial sum with q^{n(l-1)}", l);
        const RationalQ k = -q.inverse() / (q - q.inverse());
        if (!(t1 == k * q_pochhammer(Q, Q, l))) fail("weighted sum with (l-n)_{q^2}", l);
        if (!(t2 == k * q_pochhammer(Qi, Qi, l))) fail("weighted sum with (n)_{q^2}", l);
    }
    return rep;
}

}  // namespace qsp
