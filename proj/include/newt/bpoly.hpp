#ifndef NEWT_BPOLY_HPP
#define NEWT_BPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "newt/rational.hpp"

namespace newt {

// Exponent pair (alpha, beta) for x^alpha y^beta.
struct Mono {
    long long a = 0; // x exponent
    long long b = 0; // y exponent
    friend bool operator==(const Mono&, const Mono&) = default;
    friend auto operator<=>(const Mono&, const Mono&) = default; // lex, x first
};

// Sparse bivariate polynomial over Q. No zero coefficients are stored, so the
// key set of `terms` is exactly the support. Immutable by convention: all
// operations return fresh values.
class BPoly {
  public:
    using TermMap = std::map<Mono, Rat>;

    BPoly() = default;
    explicit BPoly(const Rat& c) {
        if (c != 0) terms_[{0, 0}] = c;
    }
    static BPoly monomial(long long a, long long b, const Rat& c = Rat(1)) {
        BPoly p;
        if (c != 0) p.terms_[{a, b}] = c;
        return p;
    }
    static BPoly var_x() { return monomial(1, 0); }
    static BPoly var_y() { return monomial(0, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Coefficient of x^a y^b (zero if absent).
    Rat coeff(long long a, long long b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
    }
    // Unit in Q[[x,y]]: nonzero constant term.
    bool is_local_unit() const { return coeff(0, 0) != 0; }

    long long deg_x() const;
    long long deg_y() const;
    // min over the support of (alpha + beta); throws zero_polynomial on 0.
    long long order() const;
    // Largest a with x^a | f (resp. y). Zero polynomial -> 0.
    long long x_content() const;
    long long y_content() const;
    Mono lead_lex() const; // greatest monomial, lex with x before y

    BPoly operator-() const;
    BPoly operator+(const BPoly& o) const;
    BPoly operator-(const BPoly& o) const;
    BPoly operator*(const BPoly& o) const;
    BPoly operator*(const Rat& c) const;
    bool operator==(const BPoly& o) const { return terms_ == o.terms_; }

    BPoly pow(long long e) const;
    BPoly shift(long long da, long long db) const;    // multiply by x^da y^db
    BPoly unshift(long long da, long long db) const;  // divide by x^da y^db (must divide)
    BPoly derivative_x() const;
    BPoly derivative_y() const;

    Rat eval(const Rat& x, const Rat& y) const;
    // f(0, y) as coefficients by y-degree (for Weierstrass-type inspection).
    std::vector<Rat> eval_x0() const;
    // f(x, c): collapse y; returns coefficients by x-degree.
    std::vector<Rat> eval_y(const Rat& c) const;

    // Exact division; throws error if o does not divide *this.
    BPoly divide_exact(const BPoly& o) const;
    bool divides(const BPoly& o) const; // *this | o

    // Integer-primitive form with the lex-leading coefficient positive.
    BPoly normalized() const;

    std::string to_string() const;

    void add_term(long long a, long long b, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find({a, b});
        if (it == terms_.end()) {
            terms_[{a, b}] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

  private:
    TermMap terms_;
};

inline BPoly operator*(const Rat& c, const BPoly& p) { return p * c; }

// Parses the expression grammar: integers, rationals a/b, x, y, + - * ^,
// parentheses; '^' over '*' over '+'/'-'; no implicit multiplication.
// Throws syntax_error with the byte offset of the problem.
BPoly parse_poly(const std::string& text);

// Univariate polynomial over Q, coefficients indexed by degree. Trailing
// zeros are trimmed, so back() is the leading coefficient of a nonzero value.
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UPoly constant(const Rat& c) { return UPoly(std::vector<Rat>{c}); }

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    Rat coeff(long long i) const {
        return (i < 0 || i >= static_cast<long long>(c_.size())) ? Rat(0) : c_[i];
    }
    Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

    Rat eval(const Rat& v) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-() const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    // Quotient by (X - r); remainder must be zero unless allow_remainder.
    UPoly deflate(const Rat& r) const;

    std::string to_string() const; // in the variable "X"

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

} // namespace newt

#endif
