#include <functional>
#include <map>
#include <sstream>

#include "qsp/cli.hpp"
#include "qsp/genfun.hpp"

namespace qsp {

namespace {

std::vector<int> span(int hi, int lo) {
    std::vector<int> v;
    for (int a = hi; a >= lo; --a) v.push_back(a);
    return v;
}

struct Ctx {
    const SuiteOptions& opt;
    SuiteReport& rep;

    std::vector<int> range(int hi, int lo) const { return opt.aij_range ? *opt.aij_range : span(hi, lo); }
    int bound(int def) const { return opt.max_degree ? *opt.max_degree : def; }
    void add(const std::string& p, bool ok, const std::string& detail = "mismatch") { rep.add(p, ok, detail); }
    void add(const std::string& p, const StarReport& r) { rep.add(p, r.pass, r.detail); }
    void add(const std::string& p, const SeriesReport& r) { rep.add(p, r.pass, r.describe()); }
    bool mutated(const std::string& m) const { return opt.mutation == m; }
};

std::string kv(const std::string& k, long v) { return k + "=" + std::to_string(v); }

OrthoPoly cpoly(const RationalQ& c) { return OrthoPoly::constant(CoeffPoly(c)); }

// ---------------------------------------------------------- orthopoly

void suite_cheby(Ctx& c) {
    const int nmax = c.bound(8);
    const RationalQ q = RationalQ::q();
    for (int a : c.range(0, -4))
        for (int di : {1, 2}) {
            const RankTwoData d{0, 0, di, 1};
            const RationalQ Q = d.qi(2);
            const RationalQ ri = d.qi(-2L * a);
            const OrthoPoly x = OrthoPoly::x();
            const RationalQ k2 = (ri - Q * Q) / (RationalQ(1) - Q * Q);
            const RationalQ k3 = (ri - Q.pow(3)) / (RationalQ(1) - Q.pow(3));
            const OrthoPoly du2 = x.mul_x().scaled(RationalQ(4)) - cpoly(k2);
            const OrthoPoly du3 = x.mul_x(2).scaled(RationalQ(8)) - x.scaled(RationalQ(2) * (k2 + k3));
            const std::string p = kv("a", a) + " " + kv("d_i", di);
            c.add("C_2 closed " + p, cheby_deformed(2, a, ChebyVariant::plain, d) == du2);
            c.add("C_3 closed " + p, cheby_deformed(3, a, ChebyVariant::plain, d) == du3);
            const TablePtr t = declare_standard_table(d, StarCase::II);
            for (int n = 0; n <= nmax; ++n) {
                const OrthoPoly cn = cheby_deformed(n, a, ChebyVariant::plain, d);
                c.add("C_n parity " + p + " " + kv("n", n),
                      cn.has_parity(n % 2) && cn.degree_x() == n && cn.coeff(n) == CoeffPoly(RationalQ(2).pow(n)));
                for (bool inv : {false, true})
                    c.add(std::string(inv ? "u~_n" : "u_n") + " recursion " + p + " " + kv("n", n),
                          cheby_deformed(n, a, inv ? ChebyVariant::rescaled_u_inverse : ChebyVariant::rescaled_u, d, t) ==
                              rescaled_u_recursion(n, a, inv, d, t));
            }
        }
    for (int n = 0; n <= nmax; ++n)
        c.add("C_n(x;q,1)=U_n " + kv("n", n), cheby_plain(n, q, RationalQ(1)) == chebyshev_U_classical(n));
}

void suite_hermite(Ctx& c) {
    const int biv = c.bound(6);
    const int sym = std::min(biv, 5);
    const int vm = c.bound(8);
    const RationalQ q = RationalQ::q();
    for (int a : c.range(0, -5))
        for (int di : {1, 2}) {
            const RankTwoData d = RankTwoData::from_aij(a, di, 1);
            const TablePtr t = declare_standard_table(d, StarCase::II);
            const std::string p = kv("a", a) + " " + kv("d_i", di);
            const RationalQ r = d.qi(a);
            if (a >= -4)
                for (int m = 0; m <= biv; ++m)
                    for (int n = 0; n <= biv; ++n) {
                        const std::string pm = p + " " + kv("m", m) + " " + kv("n", n);
                        c.add("H_mn in uni " + pm,
                              expand_biv_in_uni_plain(m, n, d.qi(1), r) == hermite_biv_plain(m, n, d.qi(1), r));
                        c.add("w_mn in uni " + pm, expand_biv_in_uni_w(m, n, d, t) == hermite_biv_w(m, n, d, t));
                    }
            for (int m = 0; m <= sym; ++m)
                for (int n = 0; n <= sym; ++n)
                    c.add("H_mn symmetry " + p + " " + kv("m", m) + " " + kv("n", n),
                          hermite_biv_plain(m, n, q, r) == hermite_biv_plain(n, m, q, r).swap_xy());
            for (int m = 0; m <= vm; ++m) {
                const std::string pm = p + " " + kv("m", m);
                c.add("v_m sum form " + pm, hermite_v_sum(m, d, t) == hermite_v(m, d, t));
                c.add("bar w_m = v'_m " + pm, hermite_w(m, d, t).bar() == hermite_v(m, d, t, true));
                c.add("bar w'_m = v_m " + pm, hermite_w(m, d, t, true).bar() == hermite_v(m, d, t));
                const OrthoPoly w = hermite_w(m, d, t);
                c.add("w_m monic parity " + pm, w.has_parity(m % 2) && w.degree_x() == m && w.coeff(m) == CoeffPoly(1));
            }
            c.add("bar Serre combination " + p, serre_combination_biv(a, SerreSide::bivariate, d, t).bar() ==
                                                    serre_combination_biv(a, SerreSide::bivariate, d, t, true));
        }
}

void suite_serre_bi_uni(Ctx& c) {
    for (int a : c.range(0, -6))
        for (const auto& [di, dj] : c.opt.weights) {
            if (!RankTwoData::realizable(a, di, dj)) continue;
            const RankTwoData d = RankTwoData::from_aij(a, di, dj);
            const TablePtr t = declare_standard_table(d, StarCase::II);
            const OrthoPoly b = serre_combination_biv(a, SerreSide::bivariate, d, t);
            const std::string p = d.to_string();
            c.add("bivariate = w v " + p, b == serre_combination_biv(a, SerreSide::uni_wv, d, t));
            c.add("bivariate = v w " + p, b == serre_combination_biv(a, SerreSide::uni_vw, d, t));
        }
}

void suite_pn(Ctx& c) {
    const int Nmax = c.bound(7);
    for (int dd : {1, 2})
        for (int N = 1; N <= Nmax; ++N) {
            const std::string p = kv("N", N) + " " + kv("d", dd);
            c.add("P_N closed " + p, serre_P(N, PForm::recursion, dd) == serre_P(N, PForm::closed, dd));
            for (int k = 0; k < N; ++k) c.add("omega vanishes " + p + " " + kv("k", k), serre_omega(N, k, dd).is_zero());
            const RationalQ Q = RationalQ::qpow(2L * dd);
            RationalQ top = RationalQ::qpow(static_cast<long>(dd) * (1 - N) * N) * q_pochhammer(Q, Q, N);
            if ((N - 1) % 2) top = -top;
            c.add("omega top " + p, serre_omega(N, N, dd) == top);
        }
}

void suite_rho(Ctx& c) {
    const int deg = c.bound(6);
    for (int a : c.range(0, -5))
        for (const auto& [di, dj] : c.opt.weights) {
            if (!RankTwoData::realizable(a, di, dj)) continue;
            const RankTwoData d = RankTwoData::from_aij(a, di, dj);
            const TablePtr t = declare_standard_table(d, StarCase::II);
            const std::string p = d.to_string();
            const RationalQ l = d.lambda();
            if (a >= -3) {
                const auto rho = rho_sigma_table(deg, deg, RhoSigma::rho, d, t);
                const auto sig = rho_sigma_table(deg, deg, RhoSigma::sigma, d, t);
                for (int m = 0; m <= deg; ++m)
                    for (int n = 0; m + n <= deg; ++n)
                        c.add("rho via U " + p + " " + kv("m", m) + " " + kv("n", n), rho_via_U(m, n, d, t) == rho[m][n]);
                for (int n = 0; n < deg; ++n) {
                    c.add("rho_1n = 0 " + p + " " + kv("n", n), rho[1][n].is_zero());
                    const RationalQ s = d.qi(a) * (RationalQ(1) - d.qi(2L * n)) / l;
                    c.add("sigma_1n " + p + " " + kv("n", n), sig[1][n] == hermite_w(n - 1, d, t).scaled(s));
                }
                c.add("sigma_20 " + p, sig[2][0] == cpoly((RationalQ(1) - d.qi(2)) / l));
            }
            const OrthoPoly comb = rho_serre_combination(RhoSigma::rho, d, t);
            c.add("rho combination closed " + p, comb == rho_serre_closed(d, t));
            c.add("rho combination via P " + p, comb == rho_serre_via_P(d, t));
        }
}

// ------------------------------------------------------------- genfun

TruncSeries bumped(TruncSeries s, int i, int j) {
    s.set_coeff(i, j, s.coeff(i, j) + cpoly(RationalQ(1)));
    return s;
}

void expect_detect(Ctx& c, const std::string& p, const SeriesReport& r) {
    const std::string where = "first mismatch at s^" + std::to_string(r.s_exp) + " t^" + std::to_string(r.t_exp);
    c.add("mutation detected " + p + (r.pass ? "" : " (" + where + ")"), !r.pass, "perturbed series still passes");
}

void suite_genfun(Ctx& c) {
    const int S = c.opt.uni_order;
    const int bS = c.opt.biv_s;
    const int bT = c.opt.biv_t;
    const RankTwoData d{0, 0, 1, 1};
    const RationalQ q = RationalQ::q();
    for (int a : c.range(0, -6)) {
        TruncSeries eta = build_eta(S, q, q.pow(a));
        if (c.mutated("eta-f3")) eta = bumped(eta, 3, 0);
        c.add("eta equation " + kv("a", a) + " " + kv("S", S), check_eta_equation(eta, q, q.pow(a)));
        const auto f = eta_coefficients_from_equation(S, q, q.pow(a));
        bool same = true;
        for (int n = 0; n <= S; ++n) same = same && f[n] == eta.coeff(n);
        c.add("eta coefficients from equation " + kv("a", a), same);
    }
    for (int a : {0, 1, 2})
        c.add("eta~ equation " + kv("a", a) + " " + kv("S", S),
              check_functional_equation(SeriesKind::eta_tilde, a, S, 0, d));
    try {
        build_eta_tilde(S, q, q.inverse());
        c.add("eta~ pole at a=-1", false, "no pole reported");
    } catch (const PoleInCoefficient&) {
        c.add("eta~ pole at a=-1", true);
    }
    c.add("psi equation " + kv("S", bS) + " " + kv("T", bT), check_psi_equation(build_psi(bS, bT, q), q));
    for (int a : c.range(0, -4))
        c.add("phi = -s^2 eta psi " + kv("a", a), check_phi_identity(a, bS, bT, d));

    // Each check must notice a single perturbed coefficient.
    expect_detect(c, "eta f_3", check_eta_equation(bumped(build_eta(S, q, q.pow(-2)), 3, 0), q, q.pow(-2)));
    expect_detect(c, "eta~ f_2", check_eta_tilde_equation(bumped(build_eta_tilde(S, q, q), 2, 0), q, q));
    expect_detect(c, "psi (2,1)", check_psi_equation(bumped(build_psi(bS, bT, q), 2, 1), q));
    const RationalQ Q = q * q;
    expect_detect(c, "phi (3,1)",
                  check_phi_psi(bumped(build_phi(bS, bT, Q, Q.pow(-2)), 3, 1), build_eta(bS, Q, Q.pow(-2)),
                                build_psi(bS, bT, Q)));
}

// ------------------------------------------------------------ staralg

std::vector<RankTwoData> grid(const Ctx& c, StarCase sc, const std::vector<int>& as) {
    std::vector<RankTwoData> out;
    for (int a : as)
        for (const auto& [di, dj] : c.opt.weights) {
            if (!RankTwoData::realizable(a, di, dj)) continue;
            if (sc == StarCase::III && di != dj) continue;
            out.push_back(RankTwoData::from_aij(a, di, dj));
        }
    return out;
}

void suite_ansatz(Ctx& c, StarCase sc) {
    const int deg = c.bound(7);
    for (const RankTwoData& d : grid(c, sc, c.range(0, -4))) {
        const StarEngine eng(sc, d);
        for (int m = 0; m <= deg; ++m)
            for (int n = 0; m + n <= deg; ++n)
                c.add("ansatz case=" + case_name(sc) + " " + d.to_string() + " " + kv("m", m) + " " + kv("n", n),
                      verify_ansatz(m, n, eng));
    }
}

void suite_theorem(Ctx& c, StarCase sc) {
    c.rep.merge(verify_theorem(sc, c.range(0, -4), c.opt.weights));
    if (c.mutated("relation-coeff")) {
        const RankTwoData d = RankTwoData::from_aij(-2, 1, 1);
        RelationStatement r = build_relation(sc, d);
        r.lhs[1].coeff *= RationalQ::q();
        const StarElement defect = relation_defect(r, StarEngine(sc, d));
        c.add("mutated relation case=" + case_name(sc), defect.is_zero(), "defect " + defect.to_text());
    }
}

void suite_examples(Ctx& c) {
    for (const auto& row : example_rows())
        c.add("example case=II " + kv("a_ij", row.aij), row.match,
              "expected " + row.expected.to_text() + ", engine " + row.engine.to_text());
}

void suite_sums(Ctx& c) {
    const int L = c.bound(10);
    c.add("case III sums " + kv("l_max", L), check_case3_sums(L));
}

void suite_axioms(Ctx& c) {
    const int deg = std::min(c.bound(3), 3);
    const FiltrationStats before = filtration_stats();
    for (StarCase sc : {StarCase::I, StarCase::II, StarCase::III})
        for (const RankTwoData& d : grid(c, sc, c.range(0, -4))) {
            const StarEngine eng(sc, d);
            const std::string p = "case=" + case_name(sc) + " " + d.to_string();
            for (int m = 0; m <= deg; ++m) {
                const StarElement pure = eng.word(FWord::pure(m));
                c.add("associativity " + p + " F_i^" + std::to_string(m), check_associativity(pure, eng));
                c.add("square action " + p + " F_i^" + std::to_string(m), check_square_action(pure, eng));
                for (int n = 0; n <= deg; ++n) {
                    const StarElement sw = eng.word(FWord::sw(m, n));
                    const std::string w = " " + kv("m", m) + " " + kv("n", n);
                    c.add("associativity " + p + w, check_associativity(sw, eng));
                    // In case II the w_2 coefficient Z does not cross F_j, so only pure words apply.
                    if (sc != StarCase::II) c.add("square action " + p + w, check_square_action(sw, eng));
                }
            }
        }
    const FiltrationStats after = filtration_stats();
    const auto apps = after.applications - before.applications;
    const auto viol = after.violations - before.violations;
    c.add("filtration on " + std::to_string(apps) + " rule applications", apps > 0 && viol == 0,
          std::to_string(viol) + " violations");
}

using SuiteFn = std::function<void(Ctx&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"cheby", suite_cheby},
        {"hermite", suite_hermite},
        {"serre-bi-uni", suite_serre_bi_uni},
        {"pn", suite_pn},
        {"rho", suite_rho},
        {"genfun", suite_genfun},
        {"star-case1", [](Ctx& c) { suite_ansatz(c, StarCase::I); }},
        {"star-case2", [](Ctx& c) { suite_ansatz(c, StarCase::II); }},
        {"star-case3", [](Ctx& c) { suite_ansatz(c, StarCase::III); }},
        {"theorem-case1", [](Ctx& c) { suite_theorem(c, StarCase::I); }},
        {"theorem-case2", [](Ctx& c) { suite_theorem(c, StarCase::II); }},
        {"theorem-case3", [](Ctx& c) { suite_theorem(c, StarCase::III); }},
        {"examples", suite_examples},
        {"sums", suite_sums},
        {"axioms", suite_axioms},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [n, f] : registry()) v.push_back(n);
        v.push_back("all");
        return v;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    SuiteReport rep;
    rep.suite = name;
    Ctx c{opt, rep};
    bool found = false;
    for (const auto& [n, f] : registry())
        if (name == "all" || name == n) {
            found = true;
            f(c);
        }
    if (!found) throw UsageError("unknown suite '" + name + "'");
    return rep;
}

Json report_to_json(const SuiteReport& r) {
    Json pts = Json::array();
    for (const auto& p : r.points) {
        Json j{{"params", p.params}, {"pass", p.pass}};
        if (!p.pass) j["detail"] = p.detail;
        pts.push_back(j);
    }
    return Json{{"suite", r.suite}, {"points", pts}, {"pass", r.pass()}};
}

std::string report_to_text(const SuiteReport& r) {
    std::ostringstream os;
    size_t failed = 0;
    for (const auto& p : r.points)
        if (!p.pass) {
            ++failed;
            os << "FAIL " << p.params << ": " << p.detail << "\n";
        }
    os << "suite " << r.suite << ": " << r.points.size() << " points, " << failed << " failed -> "
       << (failed ? "FAIL" : "PASS") << "\n";
    return os.str();
}

}  // namespace qsp
