#include "qsp/qfield.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace qsp {

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(long c) {
    if (c != 0) c_.emplace_back(c);
}

QPoly::QPoly(const mpq_class& c) {
    if (sgn(c) != 0) c_.push_back(c);
}

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const mpq_class& c, int k) {
    QPoly p;
    if (sgn(c) == 0) return p;
    p.c_.assign(static_cast<size_t>(k) + 1, mpq_class(0));
    p.c_[k] = c;
    return p;
}

void QPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

int QPoly::valuation() const {
    for (size_t k = 0; k < c_.size(); ++k)
        if (sgn(c_[k]) != 0) return static_cast<int>(k);
    return 0;
}

bool QPoly::is_monomial() const {
    if (c_.empty()) return false;
    for (size_t k = 0; k + 1 < c_.size(); ++k)
        if (sgn(c_[k]) != 0) return false;
    return true;
}

mpq_class QPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    mpq_class t;
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (sgn(b.c_[j]) == 0) continue;
            mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
            r.c_[i + j] += t;
        }
    }
    r.trim();
    return r;
}

QPoly QPoly::scaled(const mpq_class& s) const {
    if (sgn(s) == 0) return {};
    QPoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

QPoly QPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    QPoly r;
    if (k > 0) {
        r.c_.assign(static_cast<size_t>(k), mpq_class(0));
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    } else {
        if (-k > valuation()) throw Error("QPoly::shifted: negative power");
        r.c_.assign(c_.begin() + (-k), c_.end());
    }
    return r;
}

QPoly QPoly::monic() const {
    if (is_zero()) return {};
    return scaled(1 / lc());
}

QPoly QPoly::reversed() const {
    QPoly r;
    r.c_.assign(c_.rbegin(), c_.rend());
    r.trim();
    return r;
}

QPoly QPoly::subst_power(int d) const {
    if (d <= 0) throw Error("subst_power: exponent must be positive");
    if (d == 1 || degree() <= 0) return *this;
    QPoly r;
    r.c_.assign(static_cast<size_t>(degree()) * d + 1, mpq_class(0));
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k * d] = c_[k];
    return r;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    rem = a;
    quo = QPoly();
    if (a.degree() < b.degree()) return;
    const int db = b.degree();
    const mpq_class inv = 1 / b.lc();
    std::vector<mpq_class> q(static_cast<size_t>(a.degree() - db) + 1, mpq_class(0));
    std::vector<mpq_class>& r = rem.c_;
    mpq_class t;
    for (int k = a.degree(); k >= db; --k) {
        if (sgn(r[k]) == 0) continue;
        const mpq_class f = r[k] * inv;
        q[k - db] = f;
        for (int j = 0; j <= db; ++j) {
            if (sgn(b.c_[j]) == 0) continue;
            mpq_mul(t.get_mpq_t(), f.get_mpq_t(), b.c_[j].get_mpq_t());
            r[k - db + j] -= t;
        }
    }
    rem.trim();
    quo = QPoly(std::move(q));
}

QPoly QPoly::exact_div(const QPoly& a, const QPoly& b) {
    QPoly quo, rem;
    divmod(a, b, quo, rem);
    if (!rem.is_zero()) throw Error("QPoly::exact_div: inexact division");
    return quo;
}

namespace {

using ZVec = std::vector<mpz_class>;

// Clears denominators and removes the content; the sign is normalized so that
// the leading coefficient is positive.
ZVec primitive_integer(const QPoly& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    ZVec z(p.coeffs().size());
    mpz_class g = 0;
    for (size_t k = 0; k < z.size(); ++k) {
        z[k] = p.coeffs()[k].get_num() * (l / p.coeffs()[k].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[k].get_mpz_t());
    }
    if (z.back() < 0) g = -g;
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return z;
}

void make_primitive(ZVec& z) {
    while (!z.empty() && z.back() == 0) z.pop_back();
    if (z.empty()) return;
    mpz_class g = 0;
    for (const auto& c : z) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    if (z.back() < 0) g = -g;
    if (g != 1)
        for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Primitive pseudo-remainder sequence; returns the primitive gcd.
ZVec primitive_gcd(ZVec a, ZVec b) {
    if (a.size() < b.size()) std::swap(a, b);
    mpz_class t;
    while (!b.empty()) {
        const size_t db = b.size() - 1;
        const mpz_class lb = b.back();
        while (a.size() >= b.size() && !a.empty()) {
            const size_t shift = a.size() - b.size();
            const mpz_class la = a.back();
            for (auto& c : a) c *= lb;
            for (size_t j = 0; j <= db; ++j) {
                mpz_mul(t.get_mpz_t(), la.get_mpz_t(), b[j].get_mpz_t());
                a[shift + j] -= t;
            }
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        make_primitive(a);
        std::swap(a, b);
    }
    return a;
}

}  // namespace

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    const int va = a.valuation();
    const int vb = b.valuation();
    const int v = std::min(va, vb);
    if (a.is_monomial() || b.is_monomial() || a.degree() - va == 0 || b.degree() - vb == 0)
        return monomial(1, v);
    ZVec za = primitive_integer(a.shifted(-va));
    ZVec zb = primitive_integer(b.shifted(-vb));
    ZVec g = primitive_gcd(std::move(za), std::move(zb));
    std::vector<mpq_class> gc(g.size());
    for (size_t k = 0; k < g.size(); ++k) gc[k] = mpq_class(g[k]);
    return QPoly(std::move(gc)).monic().shifted(v);
}

// ------------------------------------------------------------ RationalQ

RationalQ::RationalQ(const QPoly& num, const QPoly& den) : num_(num), den_(den) { canonicalize(); }

void RationalQ::canonicalize() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
        den_ = QPoly(1);
        return;
    }
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = QPoly::exact_div(num_, g);
        den_ = QPoly::exact_div(den_, g);
    }
    if (den_.lc() != 1) {
        const mpq_class inv = 1 / den_.lc();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalQ RationalQ::qpow(long k) {
    RationalQ r;
    if (k >= 0) {
        r.num_ = QPoly::monomial(1, static_cast<int>(k));
    } else {
        r.num_ = QPoly(1);
        r.den_ = QPoly::monomial(1, static_cast<int>(-k));
    }
    return r;
}

bool RationalQ::is_one() const { return den_.degree() == 0 && num_.degree() == 0 && num_.lc() == 1; }

RationalQ RationalQ::operator-() const {
    RationalQ r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalQ& RationalQ::operator+=(const RationalQ& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        canonicalize();
        return *this;
    }
    // Henrici: with g = gcd(b, d), only gcd(num, g) can cancel.
    const QPoly g = QPoly::gcd(den_, o.den_);
    if (g.degree() == 0) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        if (num_.is_zero()) den_ = QPoly(1);
        return *this;
    }
    const QPoly bg = QPoly::exact_div(den_, g);
    const QPoly dg = QPoly::exact_div(o.den_, g);
    QPoly n = num_ * dg + o.num_ * bg;
    if (n.is_zero()) return *this = RationalQ();
    const QPoly g2 = QPoly::gcd(n, g);
    if (g2.degree() > 0) {
        n = QPoly::exact_div(n, g2);
        den_ = bg * QPoly::exact_div(o.den_, g2);
    } else {
        den_ = bg * o.den_;
    }
    num_ = std::move(n);
    return *this;
}

RationalQ& RationalQ::operator-=(const RationalQ& o) { return *this += -o; }

RationalQ& RationalQ::operator*=(const RationalQ& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RationalQ();
    const QPoly g1 = QPoly::gcd(num_, o.den_);
    const QPoly g2 = QPoly::gcd(o.num_, den_);
    QPoly a = g1.degree() > 0 ? QPoly::exact_div(num_, g1) : num_;
    QPoly d = g1.degree() > 0 ? QPoly::exact_div(o.den_, g1) : o.den_;
    QPoly c = g2.degree() > 0 ? QPoly::exact_div(o.num_, g2) : o.num_;
    QPoly b = g2.degree() > 0 ? QPoly::exact_div(den_, g2) : den_;
    num_ = a * c;
    den_ = b * d;
    // Both factors of the new denominator are monic, so den_ stays monic.
    return *this;
}

RationalQ RationalQ::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    RationalQ r;
    r.num_ = den_;
    r.den_ = num_;
    const mpq_class inv = 1 / r.den_.lc();
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
    return r;
}

RationalQ& RationalQ::operator/=(const RationalQ& o) {
    if (o.is_zero()) throw DivisionByZero("division by the zero function");
    return *this *= o.inverse();
}

RationalQ RationalQ::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    RationalQ r(1), b = *this;
    while (k > 0) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k > 0) b *= b;
    }
    return r;
}

RationalQ RationalQ::bar() const {
    if (is_zero()) return *this;
    // p(1/q) = q^{-deg p} * reversed(p)
    return RationalQ(num_.reversed().shifted(den_.degree()), den_.reversed().shifted(num_.degree()));
}

RationalQ RationalQ::subst_power(int d) const {
    RationalQ r;
    r.num_ = num_.subst_power(d);
    r.den_ = den_.subst_power(d);
    // q -> q^d preserves coprimality and monicity.
    return r;
}

mpq_class RationalQ::eval(const mpq_class& at) const {
    auto horner = [&](const QPoly& p) {
        mpq_class v = 0;
        for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) v = v * at + *it;
        return v;
    };
    const mpq_class d = horner(den_);
    if (sgn(d) == 0) throw DivisionByZero("evaluation at a pole");
    return horner(num_) / d;
}

RationalQ rf_arith(const RationalQ& a, const RationalQ& b, RfOp op, long k) {
    switch (op) {
        case RfOp::add: return a + b;
        case RfOp::sub: return a - b;
        case RfOp::mul: return a * b;
        case RfOp::div: return a / b;
        case RfOp::neg: return -a;
        case RfOp::pow: return a.pow(k);
    }
    throw Error("rf_arith: unknown op");
}

// --------------------------------------------------------------- output

namespace {

struct Term {
    mpq_class c;
    int e;
};

std::vector<Term> terms_desc(const QPoly& p, int shift) {
    std::vector<Term> t;
    for (int k = p.degree(); k >= 0; --k)
        if (sgn(p.coeffs()[k]) != 0) t.push_back({p.coeffs()[k], k + shift});
    return t;
}

std::string text_sum(const std::vector<Term>& terms) {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [c, e] : terms) {
        mpq_class a = abs(c);
        const bool neg = sgn(c) < 0;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        std::string var;
        if (e == 1)
            var = "q";
        else if (e != 0)
            var = "q^" + std::to_string(e);
        if (var.empty())
            s += a.get_str();
        else if (a == 1)
            s += var;
        else
            s += a.get_str() + "*" + var;
    }
    return s;
}

std::string latex_coeff(const mpq_class& a) {
    if (a.get_den() == 1) return a.get_num().get_str();
    return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

std::string latex_sum(const std::vector<Term>& terms) {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [c, e] : terms) {
        mpq_class a = abs(c);
        const bool neg = sgn(c) < 0;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        std::string var;
        if (e == 1)
            var = "q";
        else if (e != 0)
            var = "q^{" + std::to_string(e) + "}";
        if (var.empty())
            s += latex_coeff(a);
        else if (a == 1)
            s += var;
        else
            s += latex_coeff(a) + " " + var;
    }
    return s;
}

}  // namespace

std::string RationalQ::to_text() const {
    if (is_laurent()) return text_sum(terms_desc(num_, -den_.degree()));
    const auto nt = terms_desc(num_, 0);
    const std::string n = text_sum(nt);
    return (nt.size() == 1 ? n : "(" + n + ")") + "/(" + text_sum(terms_desc(den_, 0)) + ")";
}

std::string RationalQ::to_latex() const {
    if (is_laurent()) return latex_sum(terms_desc(num_, -den_.degree()));
    auto nt = terms_desc(num_, 0);
    const bool neg = nt.size() == 1 && sgn(nt[0].c) < 0;
    if (neg) nt[0].c = -nt[0].c;
    return (neg ? "-\\frac{" : "\\frac{") + latex_sum(nt) + "}{" + latex_sum(terms_desc(den_, 0)) + "}";
}

std::string factor_text(const RationalQ& c, bool latex, bool& neg) {
    neg = false;
    const auto& nc = c.num().coeffs();
    const bool single = std::count_if(nc.begin(), nc.end(), [](const mpq_class& x) { return sgn(x) != 0; }) == 1;
    if (single) {
        RationalQ a = c;
        if (sgn(c.num().lc()) < 0) {
            neg = true;
            a = -c;
        }
        if (a.is_one()) return "";
        return latex ? a.to_latex() : a.to_text();
    }
    return latex ? "\\left(" + c.to_latex() + "\\right)" : "(" + c.to_text() + ")";
}

std::string join_signed(const std::vector<std::pair<bool, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [neg, body] : terms) {
        if (s.empty())
            s = (neg ? "-" : "") + body;
        else
            s += (neg ? " - " : " + ") + body;
    }
    return s;
}

// ---------------------------------------------------------------- parse

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    RationalQ parse() {
        RationalQ v = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) {
        throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    long integer() {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        long v = std::stol(s_.substr(start, pos_ - start));
        return neg ? -v : v;
    }
    RationalQ factor() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RationalQ v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'q') {
            ++pos_;
            long e = 1;
            if (eat('^')) {
                if (eat('{')) {
                    e = integer();
                    if (!eat('}')) fail("expected '}'");
                } else {
                    e = integer();
                }
            }
            return RationalQ::qpow(e);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RationalQ(mpq_class(mpz_class(s_.substr(start, pos_ - start))));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
    RationalQ product() {
        RationalQ v = factor();
        for (;;) {
            if (eat('*'))
                v *= factor();
            else if (eat('/'))
                v /= factor();
            else
                return v;
        }
    }
    RationalQ expr() {
        skip();
        bool neg = eat('-');
        RationalQ v = product();
        if (neg) v = -v;
        for (;;) {
            if (eat('+'))
                v += product();
            else if (eat('-'))
                v -= product();
            else
                return v;
        }
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

RationalQ parse_rational(const std::string& text) { return Parser(text).parse(); }

// ------------------------------------------------------ q-combinatorics

RationalQ q_integer(long n, int d) {
    if (n < 0) return -q_integer(-n, d);
    if (n == 0) return RationalQ();
    // sum_{k<n} q^{d(n-1-2k)}
    const int top = static_cast<int>(d * (n - 1));
    QPoly num;
    for (long k = 0; k < n; ++k) num += QPoly::monomial(1, static_cast<int>(d * (2 * (n - 1 - k))));
    return RationalQ(num, QPoly::monomial(1, top));
}

RationalQ q_integer_nonsym(long n, const RationalQ& p) {
    if (n < 0) throw NegativeIndex("nonsymmetric q-integer with n = " + std::to_string(n));
    RationalQ s, pk(1);
    for (long j = 0; j < n; ++j) {
        s += pk;
        pk *= p;
    }
    return s;
}

RationalQ q_factorial(long n, int d) {
    if (n < 0) throw NegativeIndex("q-factorial of " + std::to_string(n));
    RationalQ r(1);
    for (long k = 2; k <= n; ++k) r *= q_integer(k, d);
    return r;
}

RationalQ q_binomial(long n, long k, int d) {
    if (n < 0) throw NegativeIndex("q-binomial with n = " + std::to_string(n));
    if (k < 0 || k > n) return RationalQ();
    k = std::min(k, n - k);
    RationalQ r(1);
    for (long t = 1; t <= k; ++t) r = r * q_integer(n - k + t, d) / q_integer(t, d);
    return r;
}

RationalQ q_pochhammer(const RationalQ& t, const RationalQ& base, long k) {
    if (k < 0) throw NegativeIndex("q-Pochhammer with k = " + std::to_string(k));
    RationalQ r(1), tb = t;
    for (long j = 0; j < k; ++j) {
        r *= RationalQ(1) - tb;
        tb *= base;
    }
    return r;
}

// --------------------------------------------------------- RankTwoData

void RankTwoData::validate() const {
    if (di < 1 || dj < 1) throw UnsupportedCase("symmetrizer entries must be positive");
    if (aij > 0 || aji > 0) throw UnsupportedCase("off-diagonal Cartan entries must be nonpositive");
    if ((aij == 0) != (aji == 0)) throw UnsupportedCase("a_ij = 0 must coincide with a_ji = 0");
    if (di * aij != dj * aji) throw UnsupportedCase("d_i a_ij != d_j a_ji for " + to_string());
}

bool RankTwoData::realizable(int aij, int di, int dj) {
    return aij <= 0 && di >= 1 && dj >= 1 && (di * aij) % dj == 0;
}

RankTwoData RankTwoData::from_aij(int aij, int di, int dj) {
    if (!realizable(aij, di, dj))
        throw UnsupportedCase("no integral a_ji for a_ij=" + std::to_string(aij) + ", d_i=" +
                              std::to_string(di) + ", d_j=" + std::to_string(dj));
    RankTwoData r{aij, di * aij / dj, di, dj};
    r.validate();
    return r;
}

RationalQ RankTwoData::lambda() const { return qi_diff() * qi_diff() * qj_diff(); }

std::string RankTwoData::to_string() const {
    std::ostringstream os;
    os << "a_ij=" << aij << ",a_ji=" << aji << ",d_i=" << di << ",d_j=" << dj;
    return os.str();
}

}  // namespace qsp
