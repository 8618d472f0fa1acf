#include "qsp/serialize.hpp"

namespace qsp {

namespace {

template <class F>
auto guarded(const char* what, F f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

}  // namespace

Json to_json(const RationalQ& c) { return c.to_text(); }

Json to_json(const RankTwoData& d) { return Json{{"aij", d.aij}, {"aji", d.aji}, {"di", d.di}, {"dj", d.dj}}; }

Json to_json(const Monomial& m, const SymbolTable* t) {
    Json j = Json::object();
    for (size_t k = 0; k < kMaxSymbols; ++k) {
        if (!m.e[k]) continue;
        if (!t) throw TableMismatch("monomial with symbols but no table");
        j[t->entry(k).name] = static_cast<int>(m.e[k]);
    }
    return j;
}

Json to_json(const CoeffPoly& c) {
    Json arr = Json::array();
    for (const auto& [m, v] : c.terms()) arr.push_back({{"scalar", to_json(v)}, {"symbols", to_json(m, c.table().get())}});
    return arr;
}

Json to_json(const OrthoPoly& p) {
    Json terms = Json::array();
    for (const auto& [k, c] : p.terms()) terms.push_back({{"x", k.first}, {"y", k.second}, {"coeff", to_json(c)}});
    return Json{{"arity", p.arity()}, {"terms", terms}};
}

Json to_json(const FWord& w) {
    Json j{{"m", w.m}};
    if (w.sandwich) j["n"] = w.n;
    return j;
}

Json to_json(const StarElement& e) {
    Json arr = Json::array();
    const SymbolTable* t = e.table().get();
    for (const auto& [k, c] : e.terms())
        arr.push_back({{"scalar", to_json(c)},
                       {"left", to_json(k.left, t)},
                       {"word", to_json(k.word)},
                       {"right", to_json(k.right, t)}});
    return arr;
}

RationalQ rational_from_json(const Json& j) {
    return guarded("rational", [&] { return parse_rational(j.get<std::string>()); });
}

RankTwoData data_from_json(const Json& j) {
    return guarded("cartan", [&] {
        RankTwoData d{j.at("aij").get<int>(), j.at("aji").get<int>(), j.at("di").get<int>(), j.at("dj").get<int>()};
        d.validate();
        return d;
    });
}

Monomial monomial_from_json(const Json& j, const TablePtr& table) {
    return guarded("monomial", [&] {
        Monomial m;
        for (const auto& [name, e] : j.items()) {
            if (!table) throw TableMismatch("symbol '" + name + "' without a table");
            const int v = e.get<int>();
            if (v < 0 || v > 255) throw ParseError("exponent out of range for '" + name + "'");
            m = m * monomial_of(table->index(name), v);
        }
        return m;
    });
}

CoeffPoly coeff_from_json(const Json& j, const TablePtr& table) {
    return guarded("coefficient", [&] {
        CoeffPoly c;
        for (const auto& t : j)
            c += CoeffPoly::term(table, monomial_from_json(t.at("symbols"), table), rational_from_json(t.at("scalar")));
        return c;
    });
}

OrthoPoly poly_from_json(const Json& j, const TablePtr& table) {
    return guarded("polynomial", [&] {
        const int arity = j.at("arity").get<int>();
        if (arity != 1 && arity != 2) throw ParseError("arity must be 1 or 2");
        OrthoPoly p(arity);
        for (const auto& t : j.at("terms"))
            p += OrthoPoly::term(t.at("x").get<int>(), t.at("y").get<int>(), coeff_from_json(t.at("coeff"), table),
                                 arity);
        return p;
    });
}

FWord word_from_json(const Json& j) {
    return guarded("word", [&] {
        const int m = j.at("m").get<int>();
        return j.contains("n") ? FWord::sw(m, j.at("n").get<int>()) : FWord::pure(m);
    });
}

StarElement star_from_json(const Json& j, const TablePtr& table) {
    return guarded("star element", [&] {
        StarElement e(table);
        for (const auto& t : j)
            e.add(rational_from_json(t.at("scalar")), monomial_from_json(t.at("left"), table),
                  word_from_json(t.at("word")), monomial_from_json(t.at("right"), table));
        return e;
    });
}

}  // namespace qsp
