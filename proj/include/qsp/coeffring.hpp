#pragma once

// Commutative polynomial ring in opaque formal symbols over Q(q).

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qsp/qfield.hpp"

namespace qsp {

enum class StarCase { I, II, III };
std::string case_name(StarCase c);
StarCase parse_case(const std::string& s);

enum class Side { left, right };

struct SymbolEntry {
    std::string name;   // identifier used in JSON and text output
    std::string latex;  // LaTeX rendering
    Side side = Side::right;
    // Exponent e with F * S = q^e S * F; empty means the symbol does not q-commute.
    std::optional<int> comm_fi;
    std::optional<int> comm_fj;
    std::string bar_image;  // empty when the symbol has no bar image
};

inline constexpr size_t kMaxSymbols = 12;

class SymbolTable {
public:
    explicit SymbolTable(std::vector<SymbolEntry> entries);

    size_t size() const { return entries_.size(); }
    const SymbolEntry& entry(size_t k) const { return entries_.at(k); }
    const std::vector<SymbolEntry>& entries() const { return entries_; }
    std::optional<size_t> find(const std::string& name) const;
    size_t index(const std::string& name) const;  // throws if absent

    // Checks unique names and an involutive bar table.
    void validate() const;

    friend bool operator==(const SymbolTable& a, const SymbolTable& b);

private:
    std::vector<SymbolEntry> entries_;
};

using TablePtr = std::shared_ptr<const SymbolTable>;

// Symbol table of a case: 𝒵 (b^2 is rendered from it) and the primed copies for
// case I; additionally d, d̃ for case II; c, Z and the K-markers for case III.
TablePtr declare_standard_table(const RankTwoData& data, StarCase c);

// Names used by the standard tables.
namespace sym {
inline constexpr const char* Z = "Z";
inline constexpr const char* Zp = "Z'";
inline constexpr const char* d = "d";
inline constexpr const char* dt = "dt";
inline constexpr const char* dp = "d'";
inline constexpr const char* dtp = "dt'";
inline constexpr const char* ci = "c_i";
inline constexpr const char* cj = "c_j";
inline constexpr const char* Zi = "Z_i";
inline constexpr const char* Zj = "Z_j";
inline constexpr const char* cip = "c_i'";
inline constexpr const char* cjp = "c_j'";
inline constexpr const char* Zip = "Z_i'";
inline constexpr const char* Zjp = "Z_j'";
inline constexpr const char* Kji = "KjKi^-1";
inline constexpr const char* Kij = "KiKj^-1";
}  // namespace sym

// Exponent vector over a table.
struct Monomial {
    std::array<std::uint8_t, kMaxSymbols> e{};

    bool is_one() const;
    int total_degree() const;
    Monomial operator*(const Monomial& o) const;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial monomial_of(size_t index, int exponent = 1);

// Scalars are CoeffPolys without a table; they combine with any table.
class CoeffPoly {
public:
    CoeffPoly() = default;
    CoeffPoly(const RationalQ& c);  // NOLINT(google-explicit-constructor)
    CoeffPoly(long c) : CoeffPoly(RationalQ(c)) {}  // NOLINT(google-explicit-constructor)
    static CoeffPoly symbol(const TablePtr& table, const std::string& name, int exponent = 1);
    static CoeffPoly term(const TablePtr& table, const Monomial& m, const RationalQ& c);

    const TablePtr& table() const { return table_; }
    const std::map<Monomial, RationalQ>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // True if only the empty monomial occurs (or zero).
    bool is_scalar() const;
    RationalQ scalar_part() const;  // coefficient of the empty monomial
    RationalQ coeff(const Monomial& m) const;

    CoeffPoly operator-() const;
    CoeffPoly& operator+=(const CoeffPoly& o);
    CoeffPoly& operator-=(const CoeffPoly& o);
    CoeffPoly& operator*=(const CoeffPoly& o);
    friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
    friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
    friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
    friend bool operator==(const CoeffPoly& a, const CoeffPoly& b);

    CoeffPoly scaled(const RationalQ& s) const;
    CoeffPoly pow(int k) const;
    // Applies f to every scalar coefficient.
    template <class F>
    CoeffPoly map_scalars(F f) const {
        CoeffPoly r;
        r.table_ = table_;
        for (const auto& [m, c] : terms_) {
            RationalQ v = f(c);
            if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
        }
        return r;
    }
    CoeffPoly with_table(const TablePtr& t) const;

    std::string to_text() const;
    std::string to_latex() const;
    // The terms as (negative, body) pairs for embedding in larger sums.
    std::vector<std::pair<bool, std::string>> signed_terms(bool latex) const;

private:
    friend CoeffPoly cp_bar(const CoeffPoly& a);
    TablePtr table_;
    std::map<Monomial, RationalQ> terms_;
};

enum class CpOp { add, sub, mul, scale };
CoeffPoly cp_arith(const CoeffPoly& a, const CoeffPoly& b, CpOp op, const RationalQ& s = RationalQ(1));
// Bars the scalars and sends every symbol to its bar image.
CoeffPoly cp_bar(const CoeffPoly& a);

// Resolves the table shared by two operands; throws TableMismatch.
TablePtr common_table(const TablePtr& a, const TablePtr& b);

// Renders a monomial over a table ("Z^2*d" or "\mathcal{Z} d").
std::string monomial_text(const SymbolTable* t, const Monomial& m);
std::string monomial_latex(const SymbolTable* t, const Monomial& m);

}  // namespace qsp
