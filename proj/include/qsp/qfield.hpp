#pragma once

// Exact arithmetic in Q(q) and the q-combinatorial primitives built on it.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "qsp/errors.hpp"

namespace qsp {

// Dense univariate polynomial in q with rational coefficients.
// The coefficient vector never has a trailing zero; the zero polynomial is empty.
class QPoly {
public:
    QPoly() = default;
    QPoly(long c);  // NOLINT(google-explicit-constructor)
    explicit QPoly(const mpq_class& c);
    explicit QPoly(std::vector<mpq_class> coeffs);

    static QPoly monomial(const mpq_class& c, int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    int valuation() const;
    bool is_monomial() const;
    const mpq_class& lc() const { return c_.back(); }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class coeff(int k) const;

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    QPoly scaled(const mpq_class& s) const;
    QPoly shifted(int k) const;  // multiply by q^k, k >= -valuation()
    QPoly monic() const;
    // Reverse coefficient order: q^deg * p(1/q).
    QPoly reversed() const;
    QPoly subst_power(int d) const;  // p(q^d)

    static void divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem);
    // Division known to be exact; throws if not.
    static QPoly exact_div(const QPoly& a, const QPoly& b);
    // Monic greatest common divisor (zero only when both inputs are zero).
    static QPoly gcd(const QPoly& a, const QPoly& b);

private:
    void trim();
    std::vector<mpq_class> c_;
};

// Element of Q(q) as num/den in lowest terms with a monic denominator.
class RationalQ {
public:
    RationalQ() : num_(), den_(1) {}
    RationalQ(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit RationalQ(const mpq_class& c) : num_(c), den_(1) {}
    explicit RationalQ(const QPoly& p) : num_(p), den_(1) {}
    RationalQ(const QPoly& num, const QPoly& den);

    // q^k for any integer k.
    static RationalQ qpow(long k);
    static RationalQ q() { return qpow(1); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    // True when the denominator is a power of q.
    bool is_laurent() const { return den_.is_monomial(); }

    RationalQ operator-() const;
    RationalQ& operator+=(const RationalQ& o);
    RationalQ& operator-=(const RationalQ& o);
    RationalQ& operator*=(const RationalQ& o);
    RationalQ& operator/=(const RationalQ& o);
    friend RationalQ operator+(RationalQ a, const RationalQ& b) { return a += b; }
    friend RationalQ operator-(RationalQ a, const RationalQ& b) { return a -= b; }
    friend RationalQ operator*(RationalQ a, const RationalQ& b) { return a *= b; }
    friend RationalQ operator/(RationalQ a, const RationalQ& b) { return a /= b; }
    friend bool operator==(const RationalQ& a, const RationalQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalQ inverse() const;
    RationalQ pow(long k) const;
    RationalQ bar() const;               // q -> 1/q
    RationalQ subst_power(int d) const;  // q -> q^d
    // Evaluates at a rational point; throws DivisionByZero at a pole.
    mpq_class eval(const mpq_class& at) const;

    std::string to_text() const;
    std::string to_latex() const;

private:
    void canonicalize();
    QPoly num_;
    QPoly den_;
};

enum class RfOp { add, sub, mul, div, neg, pow };
// Dispatcher over the field operations; k is the exponent for RfOp::pow.
RationalQ rf_arith(const RationalQ& a, const RationalQ& b, RfOp op, long k = 0);
inline RationalQ rf_bar(const RationalQ& a) { return a.bar(); }
inline RationalQ rf_subst_power(const RationalQ& a, int d) { return a.subst_power(d); }

// Renders c as a multiplicative factor: "" for 1, the bare term for a single
// signed monomial (its sign is moved to neg), and a parenthesized form otherwise.
std::string factor_text(const RationalQ& c, bool latex, bool& neg);
// Joins (negative, body) pairs into "a + b - c"; "0" when empty.
std::string join_signed(const std::vector<std::pair<bool, std::string>>& terms);

// Parses the text form produced by RationalQ::to_text.
RationalQ parse_rational(const std::string& text);

// Balanced [n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d}); defined for every integer n.
RationalQ q_integer(long n, int d = 1);
// Nonsymmetric (n)_p = 1 + p + ... + p^{n-1}.
RationalQ q_integer_nonsym(long n, const RationalQ& p);
// Balanced [n]_{q^d}! for n >= 0.
RationalQ q_factorial(long n, int d = 1);
// Balanced Gaussian binomial in q^d; zero for k outside [0, n].
RationalQ q_binomial(long n, long k, int d = 1);
// (t; base)_k = prod_{j<k} (1 - t base^j).
RationalQ q_pochhammer(const RationalQ& t, const RationalQ& base, long k);

// Cartan datum of a rank-two pair (i, j).
struct RankTwoData {
    int aij = 0;
    int aji = 0;
    int di = 1;
    int dj = 1;

    // Validates symmetrizability and sign conventions; throws UnsupportedCase.
    void validate() const;
    // Builds a datum with a_ji determined by d_i a_ij = d_j a_ji.
    static RankTwoData from_aij(int aij, int di = 1, int dj = 1);
    static bool realizable(int aij, int di, int dj);

    RationalQ qi(long k = 1) const { return RationalQ::qpow(static_cast<long>(di) * k); }
    RationalQ qj(long k = 1) const { return RationalQ::qpow(static_cast<long>(dj) * k); }
    // q_i - q_i^{-1}
    RationalQ qi_diff() const { return qi(1) - qi(-1); }
    RationalQ qj_diff() const { return qj(1) - qj(-1); }
    // (q_i - q_i^{-1})^2 (q_j - q_j^{-1})
    RationalQ lambda() const;

    friend bool operator==(const RankTwoData&, const RankTwoData&) = default;
    std::string to_string() const;
};

}  // namespace qsp
