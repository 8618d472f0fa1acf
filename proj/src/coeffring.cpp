#include "qsp/coeffring.hpp"

#include <set>

namespace qsp {

std::string case_name(StarCase c) {
    switch (c) {
        case StarCase::I: return "I";
        case StarCase::II: return "II";
        case StarCase::III: return "III";
    }
    return "?";
}

StarCase parse_case(const std::string& s) {
    if (s == "I" || s == "1") return StarCase::I;
    if (s == "II" || s == "2") return StarCase::II;
    if (s == "III" || s == "3") return StarCase::III;
    throw UnsupportedCase("unknown case '" + s + "'");
}

// ---------------------------------------------------------- SymbolTable

SymbolTable::SymbolTable(std::vector<SymbolEntry> entries) : entries_(std::move(entries)) {
    if (entries_.size() > kMaxSymbols) throw UnsupportedCase("too many symbols in table");
    validate();
}

std::optional<size_t> SymbolTable::find(const std::string& name) const {
    for (size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k].name == name) return k;
    return std::nullopt;
}

size_t SymbolTable::index(const std::string& name) const {
    auto k = find(name);
    if (!k) throw TableMismatch("symbol '" + name + "' is not declared");
    return *k;
}

void SymbolTable::validate() const {
    std::set<std::string> names;
    for (const auto& e : entries_)
        if (!names.insert(e.name).second) throw UnsupportedCase("duplicate symbol " + e.name);
    for (const auto& e : entries_) {
        if (e.bar_image.empty()) continue;
        auto k = find(e.bar_image);
        if (!k) throw MissingBarImage("bar image '" + e.bar_image + "' of " + e.name + " undeclared");
        if (entries_[*k].bar_image != e.name)
            throw UnsupportedCase("bar table is not involutive at " + e.name);
    }
}

bool operator==(const SymbolTable& a, const SymbolTable& b) {
    if (a.entries_.size() != b.entries_.size()) return false;
    for (size_t k = 0; k < a.entries_.size(); ++k) {
        const auto& x = a.entries_[k];
        const auto& y = b.entries_[k];
        if (x.name != y.name || x.side != y.side || x.comm_fi != y.comm_fi || x.comm_fj != y.comm_fj ||
            x.bar_image != y.bar_image)
            return false;
    }
    return true;
}

TablePtr declare_standard_table(const RankTwoData& data, StarCase c) {
    data.validate();
    std::vector<SymbolEntry> e;
    const int pair = data.di * data.aij;  // (alpha_i, alpha_j)
    switch (c) {
        case StarCase::I:
            e.push_back({sym::Z, "\\mathcal{Z}_i", Side::right, 0, 0, sym::Zp});
            e.push_back({sym::Zp, "\\mathcal{Z}'_i", Side::right, 0, 0, sym::Z});
            break;
        case StarCase::II:
            e.push_back({sym::Z, "\\mathcal{Z}_i", Side::right, 0, std::nullopt, sym::Zp});
            e.push_back({sym::Zp, "\\mathcal{Z}'_i", Side::right, 0, std::nullopt, sym::Z});
            e.push_back({sym::d, "d_{ij}", Side::left, pair, std::nullopt, sym::dtp});
            e.push_back({sym::dt, "\\widetilde{d_{ij}}", Side::left, -pair, std::nullopt, sym::dp});
            e.push_back({sym::dp, "d'_{ij}", Side::left, pair, std::nullopt, sym::dt});
            e.push_back({sym::dtp, "\\widetilde{d'_{ij}}", Side::left, -pair, std::nullopt, sym::d});
            break;
        case StarCase::III: {
            if (data.aij != data.aji || data.di != data.dj)
                throw UnsupportedCase("case III needs a symmetric pairing, got " + data.to_string());
            // F_i K_beta = q^{(beta, alpha_i)} K_beta F_i with beta = alpha_j - alpha_i.
            const int ki = pair - 2 * data.di;
            const int kj = 2 * data.dj - data.dj * data.aji;
            e.push_back({sym::ci, "c_i", Side::right, 0, 0, sym::cip});
            e.push_back({sym::cj, "c_j", Side::right, 0, 0, sym::cjp});
            e.push_back({sym::Zi, "Z_i", Side::right, 0, 0, sym::Zip});
            e.push_back({sym::Zj, "Z_j", Side::right, 0, 0, sym::Zjp});
            e.push_back({sym::Kji, "K_jK_i^{-1}", Side::right, ki, kj, sym::Kij});
            e.push_back({sym::Kij, "K_iK_j^{-1}", Side::right, -ki, -kj, sym::Kji});
            e.push_back({sym::cip, "c'_i", Side::right, 0, 0, sym::ci});
            e.push_back({sym::cjp, "c'_j", Side::right, 0, 0, sym::cj});
            e.push_back({sym::Zip, "Z'_i", Side::right, 0, 0, sym::Zi});
            e.push_back({sym::Zjp, "Z'_j", Side::right, 0, 0, sym::Zj});
            break;
        }
    }
    return std::make_shared<const SymbolTable>(std::move(e));
}

// ------------------------------------------------------------- Monomial

bool Monomial::is_one() const {
    for (auto x : e)
        if (x) return false;
    return true;
}

int Monomial::total_degree() const {
    int s = 0;
    for (auto x : e) s += x;
    return s;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (size_t k = 0; k < kMaxSymbols; ++k) {
        const int v = e[k] + o.e[k];
        if (v > 255) throw Error("symbol exponent overflow");
        r.e[k] = static_cast<std::uint8_t>(v);
    }
    return r;
}

Monomial monomial_of(size_t index, int exponent) {
    if (index >= kMaxSymbols || exponent < 0 || exponent > 255) throw Error("bad monomial");
    Monomial m;
    m.e[index] = static_cast<std::uint8_t>(exponent);
    return m;
}

std::string monomial_text(const SymbolTable* t, const Monomial& m) {
    std::string s;
    for (size_t k = 0; k < kMaxSymbols; ++k) {
        if (!m.e[k]) continue;
        if (!s.empty()) s += "*";
        s += t ? t->entry(k).name : "s" + std::to_string(k);
        if (m.e[k] > 1) s += "^" + std::to_string(m.e[k]);
    }
    return s;
}

std::string monomial_latex(const SymbolTable* t, const Monomial& m) {
    std::string s;
    for (size_t k = 0; k < kMaxSymbols; ++k) {
        if (!m.e[k]) continue;
        if (!s.empty()) s += " ";
        const std::string base = t ? t->entry(k).latex : "s_" + std::to_string(k);
        if (m.e[k] > 1)
            s += "\\left(" + base + "\\right)^{" + std::to_string(m.e[k]) + "}";
        else
            s += base;
    }
    return s;
}

// ------------------------------------------------------------ CoeffPoly

TablePtr common_table(const TablePtr& a, const TablePtr& b) {
    if (!a) return b;
    if (!b || a == b) return a;
    if (*a == *b) return a;
    throw TableMismatch("operands live over different symbol tables");
}

CoeffPoly::CoeffPoly(const RationalQ& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

CoeffPoly CoeffPoly::symbol(const TablePtr& table, const std::string& name, int exponent) {
    if (!table) throw TableMismatch("symbol without a table");
    return term(table, monomial_of(table->index(name), exponent), RationalQ(1));
}

CoeffPoly CoeffPoly::term(const TablePtr& table, const Monomial& m, const RationalQ& c) {
    CoeffPoly r;
    r.table_ = table;
    if (!m.is_one() && !table) throw TableMismatch("symbolic monomial without a table");
    if (table)
        for (size_t k = table->size(); k < kMaxSymbols; ++k)
            if (m.e[k]) throw TableMismatch("monomial references an undeclared symbol");
    if (!c.is_zero()) r.terms_.emplace(m, c);
    return r;
}

bool CoeffPoly::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

RationalQ CoeffPoly::scalar_part() const { return coeff(Monomial{}); }

RationalQ CoeffPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RationalQ() : it->second;
}

CoeffPoly CoeffPoly::operator-() const {
    CoeffPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
    table_ = common_table(table_, o.table_);
    for (const auto& [m, c] : o.terms_) {
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) { return *this += -o; }

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
    CoeffPoly r;
    r.table_ = common_table(a.table_, b.table_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            const Monomial m = ma * mb;
            RationalQ c = ca * cb;
            auto [it, fresh] = r.terms_.emplace(m, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& o) { return *this = *this * o; }

bool operator==(const CoeffPoly& a, const CoeffPoly& b) {
    if (a.terms_ != b.terms_) return false;
    if (a.is_scalar() && b.is_scalar()) return true;
    common_table(a.table_, b.table_);
    return true;
}

CoeffPoly CoeffPoly::scaled(const RationalQ& s) const {
    if (s.is_zero()) {
        CoeffPoly r;
        r.table_ = table_;
        return r;
    }
    CoeffPoly r = *this;
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
}

CoeffPoly CoeffPoly::pow(int k) const {
    if (k < 0) throw NegativeIndex("negative power of a CoeffPoly");
    CoeffPoly r(1);
    r.table_ = table_;
    for (int j = 0; j < k; ++j) r *= *this;
    return r;
}

CoeffPoly CoeffPoly::with_table(const TablePtr& t) const {
    CoeffPoly r = *this;
    r.table_ = common_table(t, table_);
    return r;
}

CoeffPoly cp_arith(const CoeffPoly& a, const CoeffPoly& b, CpOp op, const RationalQ& s) {
    switch (op) {
        case CpOp::add: return a + b;
        case CpOp::sub: return a - b;
        case CpOp::mul: return a * b;
        case CpOp::scale: return a.scaled(s);
    }
    throw Error("cp_arith: unknown op");
}

CoeffPoly cp_bar(const CoeffPoly& a) {
    CoeffPoly r;
    r.table_ = a.table_;
    for (const auto& [m, c] : a.terms_) {
        Monomial img;
        for (size_t k = 0; k < kMaxSymbols; ++k) {
            if (!m.e[k]) continue;
            const auto& ent = a.table_->entry(k);
            if (ent.bar_image.empty()) throw MissingBarImage("symbol " + ent.name + " has no bar image");
            img = img * monomial_of(a.table_->index(ent.bar_image), m.e[k]);
        }
        RationalQ v = c.bar();
        auto [it, fresh] = r.terms_.emplace(img, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

std::vector<std::pair<bool, std::string>> CoeffPoly::signed_terms(bool latex) const {
    std::vector<std::pair<bool, std::string>> out;
    for (const auto& [m, c] : terms_) {
        bool neg = false;
        const std::string f = factor_text(c, latex, neg);
        const std::string mono = latex ? monomial_latex(table_.get(), m) : monomial_text(table_.get(), m);
        std::string body = f;
        if (!mono.empty()) body += (body.empty() ? "" : (latex ? " " : "*")) + mono;
        if (body.empty()) body = "1";
        out.emplace_back(neg, body);
    }
    return out;
}

std::string CoeffPoly::to_text() const { return join_signed(signed_terms(false)); }

std::string CoeffPoly::to_latex() const { return join_signed(signed_terms(true)); }

}  // namespace qsp
