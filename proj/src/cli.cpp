#include "qsp/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>
#include <regex>

namespace qsp {

const std::vector<std::string>& poly_families() {
    static const std::vector<std::string> f = {"hermite", "hermite-w",   "hermite-v",   "hermite-biv", "hermite-biv-w",
                                               "cheby",   "cheby-u",     "cheby-u-inv", "chebyshev-U", "U",
                                               "rho",     "sigma",       "P"};
    return f;
}

std::vector<int> parse_int_range(const std::string& s) {
    static const std::regex one(R"(\s*(-?\d+)\s*)");
    static const std::regex two(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
    std::smatch m;
    if (std::regex_match(s, m, one)) return {std::stoi(m[1])};
    if (!std::regex_match(s, m, two)) throw UsageError("--aij-range: expected 'a..b' or an integer, got '" + s + "'");
    const int a = std::stoi(m[1]);
    const int b = std::stoi(m[2]);
    std::vector<int> v;
    for (int k = a;; k += (b >= a ? 1 : -1)) {
        v.push_back(k);
        if (k == b) break;
    }
    return v;
}

namespace {

std::vector<std::pair<int, int>> parse_weights(const std::string& s) {
    static const std::regex item(R"((\d+):(\d+))");
    std::vector<std::pair<int, int>> out;
    std::string rest = s;
    size_t pos = 0;
    while (pos <= rest.size()) {
        const size_t comma = rest.find(',', pos);
        const std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::smatch m;
        if (!std::regex_match(tok, m, item)) throw UsageError("--weights: expected 'di:dj,...', got '" + s + "'");
        out.emplace_back(std::stoi(m[1]), std::stoi(m[2]));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// QSP_MAX_DEGREE, when set, overrides every suite's degree bound.
std::optional<int> env_max_degree() {
    const char* v = std::getenv("QSP_MAX_DEGREE");
    if (!v || !*v) return std::nullopt;
    static const std::regex num(R"(\d{1,2})");
    if (!std::regex_match(v, num)) throw UsageError(std::string("QSP_MAX_DEGREE: not a degree bound: '") + v + "'");
    return std::stoi(v);
}

void add_format(CLI::App* app, std::string& fmt) {
    app->add_option("--format", fmt, "latex, json or text")->check(CLI::IsMember({"latex", "json", "text"}));
}

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Deformed quantum Serre relations: polynomials, relations and verification suites", "qsp"};
    app.require_subcommand(1);
    Command c;
    std::string fmt = "text";
    int m = -1, n = -1;

    auto* poly = app.add_subcommand("poly", "print one polynomial of a family");
    poly->add_option("--family", c.family, "polynomial family")->required()->check(CLI::IsMember(poly_families()));
    poly->add_option("--m", m, "first index")->check(CLI::Range(0, 40));
    poly->add_option("--n", n, "second (or only) index")->check(CLI::Range(0, 40));
    poly->add_option("--N", c.N, "P_N index")->check(CLI::Range(1, 13));
    poly->add_option("--a", c.a, "a_ij")->check(CLI::Range(-12, 12));
    poly->add_option("--di", c.di, "symmetrizer d_i")->check(CLI::Range(1, 4));
    poly->add_option("--dj", c.dj, "symmetrizer d_j")->check(CLI::Range(1, 4));
    add_format(poly, fmt);

    std::string case_str = "I";
    auto* rel = app.add_subcommand("relation", "print and verify the relation for one Cartan datum");
    rel->add_option("--case", case_str, "I, II or III")->check(CLI::IsMember({"I", "II", "III"}));
    rel->add_option("--a", c.a, "a_ij")->check(CLI::Range(-12, 0));
    rel->add_option("--di", c.di, "symmetrizer d_i")->check(CLI::Range(1, 4));
    rel->add_option("--dj", c.dj, "symmetrizer d_j")->check(CLI::Range(1, 4));
    rel->add_flag("--examples", c.examples, "print the worked case II examples instead");
    add_format(rel, fmt);

    std::string range, weights;
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", c.suite, "suite name")->check(CLI::IsMember(suite_names()));
    ver->add_option("--aij-range", range, "a..b or a single a_ij");
    ver->add_option("--weights", weights, "di:dj pairs, comma separated");
    ver->add_option("--S", c.suite_options.uni_order, "univariate truncation order")->check(CLI::Range(2, 40));
    ver->add_option("--S2", c.suite_options.biv_s, "bivariate s order")->check(CLI::Range(2, 30));
    ver->add_option("--T", c.suite_options.biv_t, "bivariate t order")->check(CLI::Range(1, 30));
    ver->add_option("--mutate", c.suite_options.mutation, "")->group("");  // test hook
    ver->add_option("--format", fmt, "json or text")->check(CLI::IsMember({"json", "text"}));

    std::vector<const char*> argv{"qsp"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    for (auto* sub : app.get_subcommands())
        if (sub->get_name() == "poly")
            c.sub = Subcommand::poly;
        else if (sub->get_name() == "relation")
            c.sub = Subcommand::relation;
        else
            c.sub = Subcommand::verify;

    c.format = parse_format(fmt);
    if (m >= 0) c.m = m;
    if (n >= 0) c.n = n;
    c.star_case = parse_case(case_str);
    if (!range.empty()) c.suite_options.aij_range = parse_int_range(range);
    if (!weights.empty()) c.suite_options.weights = parse_weights(weights);
    c.suite_options.max_degree = env_max_degree();
    if (c.suite_options.mutation.size() && c.suite_options.mutation != "eta-f3" &&
        c.suite_options.mutation != "relation-coeff")
        throw UsageError("--mutate: unknown hook '" + c.suite_options.mutation + "'");
    return c;
}

namespace {

OrthoPoly family_poly(const Command& c, std::string& label) {
    const std::string& f = c.family;
    const bool biv = f == "hermite-biv" || f == "hermite-biv-w" || f == "U" || f == "rho" || f == "sigma";
    if (biv && (!c.m || !c.n)) throw UsageError("--m and --n are required for family " + f);
    if (!biv && f != "P" && !c.n && !c.m) throw UsageError("--n is required for family " + f);
    const int k = c.n ? *c.n : (c.m ? *c.m : 0);
    const RankTwoData flat{0, 0, c.di, c.dj};
    auto paired = [&] { return RankTwoData::from_aij(c.a, c.di, c.dj); };
    const TablePtr t = declare_standard_table(flat, StarCase::II);
    label = f;
    if (f == "hermite") return hermite_plain(k, flat.qi(1));
    if (f == "hermite-w") return hermite_w(k, flat, t);
    if (f == "hermite-v") return hermite_v(k, flat, t);
    if (f == "hermite-biv") return hermite_biv_plain(*c.m, *c.n, flat.qi(1), flat.qi(c.a));
    if (f == "cheby") return cheby_deformed(k, c.a, ChebyVariant::plain, flat);
    if (f == "cheby-u") return cheby_deformed(k, c.a, ChebyVariant::rescaled_u, flat, t);
    if (f == "cheby-u-inv") return cheby_deformed(k, c.a, ChebyVariant::rescaled_u_inverse, flat, t);
    if (f == "chebyshev-U") return chebyshev_U_classical(k);
    if (f == "P") return serre_P(c.N, PForm::closed, c.di);
    const RankTwoData d = paired();
    const TablePtr pt = declare_standard_table(d, StarCase::II);
    if (f == "hermite-biv-w") return hermite_biv_w(*c.m, *c.n, d, pt);
    if (f == "U") return cheby_biv_U(*c.m, *c.n, d);
    if (f == "rho") return rho_sigma(*c.m, *c.n, RhoSigma::rho, d, pt);
    if (f == "sigma") return rho_sigma(*c.m, *c.n, RhoSigma::sigma, d, pt);
    throw UsageError("--family: unknown family " + f);
}

int exec_poly(const Command& c, std::ostream& out) {
    std::string label;
    const OrthoPoly p = family_poly(c, label);
    switch (c.format) {
        case Format::latex: out << p.to_latex() << "\n"; break;
        case Format::text: out << p.to_text() << "\n"; break;
        case Format::json: {
            Json params{{"a", c.a}, {"di", c.di}, {"dj", c.dj}};
            if (c.m) params["m"] = *c.m;
            if (c.n) params["n"] = *c.n;
            if (c.family == "P") params["N"] = c.N;
            out << Json{{"family", label}, {"params", params}, {"poly", to_json(p)}}.dump(2) << "\n";
            break;
        }
    }
    return 0;
}

int exec_relation(const Command& c, std::ostream& out) {
    if (c.examples) {
        out << example_table(c.format);
        for (const auto& r : example_rows())
            if (!r.match) return 1;
        return 0;
    }
    const RankTwoData d = RankTwoData::from_aij(c.a, c.di, c.dj);
    const RelationStatement r = build_relation(c.star_case, d);
    const StarEngine eng(c.star_case, d);
    const bool ok = relation_defect(r, eng).is_zero() && check_round_trip(r, eng).pass;
    out << render_relation(r, c.format, ok);
    return ok ? 0 : 1;
}

int exec_verify(const Command& c, std::ostream& out) {
    const SuiteReport rep = run_suite(c.suite, c.suite_options);
    if (c.format == Format::json)
        out << report_to_json(rep).dump(2) << "\n";
    else
        out << report_to_text(rep);
    return rep.pass() ? 0 : 1;
}

}  // namespace

int execute(const Command& c, std::ostream& out) {
    switch (c.sub) {
        case Subcommand::poly: return exec_poly(c, out);
        case Subcommand::relation: return exec_relation(c, out);
        case Subcommand::verify: return exec_verify(c, out);
    }
    return 2;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return execute(parse_args(args), out);
    } catch (const HelpRequested& h) {
        out << h.text;
        return 0;
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const UnsupportedCase& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qsp
