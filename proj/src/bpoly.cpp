#include "newt/bpoly.hpp"

#include <algorithm>
#include <cctype>

#include "newt/errors.hpp"

namespace newt {

long long BPoly::deg_x() const {
    long long d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.a);
    return d;
}

long long BPoly::deg_y() const {
    long long d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.b);
    return d;
}

long long BPoly::order() const {
    if (terms_.empty()) throw zero_polynomial();
    long long o = -1;
    for (auto& [m, c] : terms_) {
        long long t = m.a + m.b;
        if (o < 0 || t < o) o = t;
    }
    return o;
}

long long BPoly::x_content() const {
    if (terms_.empty()) return 0;
    long long v = -1;
    for (auto& [m, c] : terms_) v = (v < 0) ? m.a : std::min(v, m.a);
    return v;
}

long long BPoly::y_content() const {
    if (terms_.empty()) return 0;
    long long v = -1;
    for (auto& [m, c] : terms_) v = (v < 0) ? m.b : std::min(v, m.b);
    return v;
}

Mono BPoly::lead_lex() const {
    if (terms_.empty()) throw zero_polynomial();
    return terms_.rbegin()->first;
}

BPoly BPoly::operator-() const {
    BPoly r;
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

BPoly BPoly::operator+(const BPoly& o) const {
    BPoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m.a, m.b, c);
    return r;
}

BPoly BPoly::operator-(const BPoly& o) const {
    BPoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m.a, m.b, -c);
    return r;
}

BPoly BPoly::operator*(const BPoly& o) const {
    BPoly r;
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) r.add_term(m1.a + m2.a, m1.b + m2.b, c1 * c2);
    return r;
}

BPoly BPoly::operator*(const Rat& c) const {
    BPoly r;
    if (c == 0) return r;
    for (auto& [m, cc] : terms_) r.terms_[m] = cc * c;
    return r;
}

BPoly BPoly::pow(long long e) const {
    BPoly r(Rat(1));
    BPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

BPoly BPoly::shift(long long da, long long db) const {
    BPoly r;
    for (auto& [m, c] : terms_) r.terms_[{m.a + da, m.b + db}] = c;
    return r;
}

BPoly BPoly::unshift(long long da, long long db) const {
    BPoly r;
    for (auto& [m, c] : terms_) {
        if (m.a < da || m.b < db) throw error("monomial does not divide polynomial");
        r.terms_[{m.a - da, m.b - db}] = c;
    }
    return r;
}

BPoly BPoly::derivative_x() const {
    BPoly r;
    for (auto& [m, c] : terms_)
        if (m.a > 0) r.terms_[{m.a - 1, m.b}] = c * Rat(static_cast<long>(m.a));
    return r;
}

BPoly BPoly::derivative_y() const {
    BPoly r;
    for (auto& [m, c] : terms_)
        if (m.b > 0) r.terms_[{m.a, m.b - 1}] = c * Rat(static_cast<long>(m.b));
    return r;
}

Rat BPoly::eval(const Rat& x, const Rat& y) const {
    Rat s(0);
    for (auto& [m, c] : terms_) {
        Rat t = c;
        if (m.a) {
            mpz_class num, den;
            mpz_pow_ui(num.get_mpz_t(), x.get_num().get_mpz_t(), static_cast<unsigned long>(m.a));
            mpz_pow_ui(den.get_mpz_t(), x.get_den().get_mpz_t(), static_cast<unsigned long>(m.a));
            t *= make_rat(num, den);
        }
        if (m.b) {
            mpz_class num, den;
            mpz_pow_ui(num.get_mpz_t(), y.get_num().get_mpz_t(), static_cast<unsigned long>(m.b));
            mpz_pow_ui(den.get_mpz_t(), y.get_den().get_mpz_t(), static_cast<unsigned long>(m.b));
            t *= make_rat(num, den);
        }
        s += t;
    }
    return s;
}

std::vector<Rat> BPoly::eval_x0() const {
    std::vector<Rat> out;
    for (auto& [m, c] : terms_) {
        if (m.a != 0) continue;
        if (static_cast<long long>(out.size()) <= m.b) out.resize(m.b + 1, Rat(0));
        out[m.b] += c;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<Rat> BPoly::eval_y(const Rat& c) const {
    std::vector<Rat> out;
    for (auto& [m, co] : terms_) {
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), c.get_num().get_mpz_t(), static_cast<unsigned long>(m.b));
        mpz_pow_ui(den.get_mpz_t(), c.get_den().get_mpz_t(), static_cast<unsigned long>(m.b));
        Rat t = co * make_rat(num, den);
        if (t == 0) continue;
        if (static_cast<long long>(out.size()) <= m.a) out.resize(m.a + 1, Rat(0));
        out[m.a] += t;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BPoly BPoly::divide_exact(const BPoly& o) const {
    if (o.is_zero()) throw error("division by the zero polynomial");
    BPoly rem = *this;
    BPoly quot;
    const Mono lo = o.lead_lex();
    const Rat lc = o.terms().rbegin()->second;
    while (!rem.is_zero()) {
        Mono lr = rem.lead_lex();
        if (lr.a < lo.a || lr.b < lo.b) throw error("inexact polynomial division");
        Mono q{lr.a - lo.a, lr.b - lo.b};
        Rat qc = rem.terms().rbegin()->second / lc;
        quot.add_term(q.a, q.b, qc);
        rem = rem - o * BPoly::monomial(q.a, q.b, qc);
    }
    return quot;
}

bool BPoly::divides(const BPoly& o) const {
    if (is_zero()) return o.is_zero();
    if (o.is_zero()) return true;
    BPoly rem = o;
    const Mono lo = lead_lex();
    const Rat lc = terms().rbegin()->second;
    while (!rem.is_zero()) {
        Mono lr = rem.lead_lex();
        if (lr.a < lo.a || lr.b < lo.b) return false;
        Rat qc = rem.terms().rbegin()->second / lc;
        rem = rem - *this * BPoly::monomial(lr.a - lo.a, lr.b - lo.b, qc);
    }
    return true;
}

BPoly BPoly::normalized() const {
    if (terms_.empty()) return BPoly();
    // Clear denominators, divide by the integer content, fix the sign of the
    // lex-leading coefficient.
    Int den_lcm = 1;
    for (auto& [m, c] : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    Int num_gcd = 0;
    for (auto& [m, c] : terms_) {
        Int n = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rat scale = make_rat(den_lcm, num_gcd);
    if (terms_.rbegin()->second * scale < 0) scale = -scale;
    return *this * scale;
}

namespace {

void append_mono(std::string& s, const char* var, long long e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += var;
    if (e != 1) {
        s += "^";
        s += std::to_string(e);
    }
}

} // namespace

std::string BPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Descending lex so the leading term prints first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Mono& m = it->first;
        Rat c = it->second;
        bool neg = c < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (neg) c = -c;
        std::string mono;
        append_mono(mono, "x", m.a);
        append_mono(mono, "y", m.b);
        if (mono.empty()) {
            out += rat_to_string(c);
        } else if (c == 1) {
            out += mono;
        } else {
            out += rat_to_string(c) + "*" + mono;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw syntax_error("expected integer", start);
        return Int(s.substr(start, pos - start));
    }

    BPoly expr() {
        bool neg = false;
        skip_ws();
        if (accept('-')) {
            neg = true;
        } else {
            accept('+');
        }
        BPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    BPoly term() {
        BPoly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    BPoly factor() {
        BPoly base = atom();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            std::size_t at = pos;
            Int e = integer();
            if (e < 0 || !e.fits_slong_p()) throw syntax_error("exponent out of range", at);
            base = base.pow(e.get_si());
        }
        return base;
    }

    BPoly atom() {
        skip_ws();
        std::size_t at = pos;
        if (pos >= s.size()) throw syntax_error("unexpected end of input", at);
        char c = s[pos];
        if (c == '(') {
            ++pos;
            BPoly inner = expr();
            if (!accept(')')) throw syntax_error("expected ')'", pos);
            return inner;
        }
        if (c == '-' || c == '+') {
            ++pos;
            BPoly inner = factor();
            return c == '-' ? -inner : inner;
        }
        if (c == 'x') {
            ++pos;
            return BPoly::var_x();
        }
        if (c == 'y') {
            ++pos;
            return BPoly::var_y();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = integer();
            if (accept('/')) {
                skip_ws();
                std::size_t dat = pos;
                Int den = integer();
                if (den == 0) throw syntax_error("zero denominator", dat);
                return BPoly(make_rat(num, den));
            }
            return BPoly(Rat(num));
        }
        throw syntax_error(std::string("unexpected character '") + c + "'", at);
    }
};

} // namespace

BPoly parse_poly(const std::string& text) {
    Parser p(text);
    BPoly result = p.expr();
    if (!p.eof()) throw syntax_error("trailing input", p.pos);
    return result;
}

// ---------------------------------------------------------------------------
// UPoly
// ---------------------------------------------------------------------------

Rat UPoly::eval(const Rat& v) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(out));
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return UPoly(std::move(out));
}

UPoly UPoly::operator-() const {
    std::vector<Rat> out = c_;
    for (auto& c : out) c = -c;
    return UPoly(std::move(out));
}

UPoly UPoly::deflate(const Rat& r) const {
    if (is_zero()) throw zero_polynomial();
    // Synthetic division by (X - r).
    std::vector<Rat> q(c_.size() > 1 ? c_.size() - 1 : 0, Rat(0));
    Rat carry(0);
    for (long long i = degree(); i >= 1; --i) {
        carry = c_[i] + carry;
        q[i - 1] = carry;
        carry *= r;
    }
    if (c_[0] + carry != 0) throw error("deflation by a non-root");
    return UPoly(std::move(q));
}

std::string UPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (long long i = degree(); i >= 0; --i) {
        Rat c = c_[i];
        if (c == 0) continue;
        bool neg = c < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (neg) c = -c;
        if (i == 0) {
            out += rat_to_string(c);
        } else {
            std::string mono = (i == 1) ? "X" : "X^" + std::to_string(i);
            out += (c == 1) ? mono : rat_to_string(c) + "*" + mono;
        }
    }
    return out;
}

} // namespace newt
