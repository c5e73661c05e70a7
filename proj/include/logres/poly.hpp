#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "logres/monomial.hpp"
#include "logres/rational.hpp"

namespace logres {

struct Term {
    Monomial mono;
    Rational coeff;
};

namespace detail {
// Strict descending degrevlex; used as the canonical storage order of Poly.
struct DegrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomial_compare(a, b, MonomialOrder::degrevlex()) > 0;
    }
};
}  // namespace detail

// Sparse multivariate polynomial over Q. Terms are kept sorted strictly
// descending under degrevlex; no zero coefficients are stored.
class Poly {
public:
    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}
    Poly(int nvars, const Rational& c) : nvars_(nvars) {
        if (c != 0) terms_.push_back({Monomial(nvars), c});
    }
    Poly(Monomial m, const Rational& c) : nvars_(m.nvars()) {
        if (c != 0) terms_.push_back({std::move(m), c});
    }

    static Poly variable(int nvars, int i) {
        return Poly(Monomial::variable(nvars, i), Rational(1));
    }
    static Poly constant(int nvars, const Rational& c) { return Poly(nvars, c); }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::vector<Term>& terms() const { return terms_; }

    // Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const Term& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    bool is_homogeneous() const {
        for (const Term& t : terms_)
            if (t.mono.degree() != terms_.front().mono.degree()) return false;
        return true;
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
    }

    // Largest term under ord. Storage order is degrevlex, so other orders scan.
    const Term& leading_term(const MonomialOrder& ord = MonomialOrder::degrevlex()) const {
        if (terms_.empty()) throw input_error("leading_term of zero polynomial");
        if (ord == MonomialOrder::degrevlex()) return terms_.front();
        const Term* best = &terms_.front();
        for (const Term& t : terms_)
            if (monomial_compare(t.mono, best->mono, ord) > 0) best = &t;
        return *best;
    }

    Poly operator-() const {
        Poly r = *this;
        for (Term& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    Poly operator+(const Poly& o) const {
        check_ring(o);
        Poly r(nvars_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        detail::DegrevlexGreater gt;
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            if (terms_[i].mono == o.terms_[j].mono) {
                Rational c = terms_[i].coeff + o.terms_[j].coeff;
                if (c != 0) r.terms_.push_back({terms_[i].mono, c});
                ++i, ++j;
            } else if (gt(terms_[i].mono, o.terms_[j].mono)) {
                r.terms_.push_back(terms_[i++]);
            } else {
                r.terms_.push_back(o.terms_[j++]);
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
        return r;
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        check_ring(o);
        std::map<Monomial, Rational, detail::DegrevlexGreater> acc;
        for (const Term& a : terms_)
            for (const Term& b : o.terms_) {
                Monomial m = a.mono * b.mono;
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(std::move(m), a.coeff * b.coeff);
                else
                    it->second += a.coeff * b.coeff;
            }
        Poly r(nvars_);
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) r.terms_.push_back({m, c});
        return r;
    }

    Poly operator*(const Rational& c) const {
        if (c == 0) return Poly(nvars_);
        Poly r = *this;
        for (Term& t : r.terms_) t.coeff *= c;
        return r;
    }

    // this * (c * m), a single-term product; keeps sortedness.
    Poly times_term(const Monomial& m, const Rational& c) const {
        if (c == 0) return Poly(nvars_);
        Poly r(nvars_);
        r.terms_.reserve(terms_.size());
        for (const Term& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
        return r;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const {
        if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
                return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Rational coeff_of(const Monomial& m) const {
        for (const Term& t : terms_)
            if (t.mono == m) return t.coeff;
        return Rational(0);
    }

private:
    void check_ring(const Poly& o) const {
        if (nvars_ != o.nvars_) throw input_error("polynomial ring mismatch");
    }

    int nvars_ = 0;
    std::vector<Term> terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

// Formal partial derivative with respect to variable i.
inline Poly partial_derivative(const Poly& f, int i) {
    if (i < 0 || i >= f.nvars()) throw input_error("partial_derivative: index out of range");
    Poly r(f.nvars());
    for (const Term& t : f.terms()) {
        int e = t.mono[i];
        if (e == 0) continue;
        std::vector<int> exps = t.mono.exponents();
        exps[i] -= 1;
        r += Poly(Monomial(std::move(exps)), t.coeff * e);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Text form. Canonical output: terms in descending degrevlex, each printed
// as c*x1^a1*...*xl^al with zero exponents omitted.
// ---------------------------------------------------------------------------

inline std::string variable_name(int i) { return "x" + std::to_string(i + 1); }

inline std::string monomial_to_string(const Monomial& m) {
    std::string s;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += variable_name(i);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

inline std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const Term& t : p.terms()) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        first = false;
        Rational a = abs(c);
        std::string ms = monomial_to_string(t.mono);
        if (ms.empty())
            s += rational_to_string(a);
        else if (a == 1)
            s += ms;
        else
            s += rational_to_string(a) + "*" + ms;
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << poly_to_string(p); }

namespace detail {

// Recursive-descent parser for sums of products:
//   expr := [+-] term ([+-] term)*
//   term := factor ('*' factor)*
//   factor := rational | var ['^' int]
// Variables: x1..xl; aliases x,y,z,t accepted when l <= 4.
class PolyParser {
public:
    PolyParser(const std::string& s, int nvars) : s_(s), nvars_(nvars) {}

    Poly parse() {
        Poly r = parse_expr();
        skip_ws();
        if (pos_ != s_.size())
            throw input_error("unexpected character '" + std::string(1, s_[pos_]) +
                              "' at offset " + std::to_string(pos_) + " in '" + s_ + "'");
        return r;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly parse_expr() {
        Poly r(nvars_);
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        while (true) {
            Poly t = parse_term();
            r += neg ? -t : t;
            skip_ws();
            if (eat('-'))
                neg = true;
            else if (eat('+'))
                neg = false;
            else
                break;
        }
        return r;
    }

    Poly parse_term() {
        Poly r = parse_factor();
        while (eat('*')) r *= parse_factor();
        return r;
    }

    Poly parse_factor() {
        skip_ws();
        if (pos_ >= s_.size()) throw input_error("unexpected end of polynomial '" + s_ + "'");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_variable();
        throw input_error("unexpected character '" + std::string(1, c) + "' at offset " +
                          std::to_string(pos_) + " in '" + s_ + "'");
    }

    Poly parse_number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string num = s_.substr(start, pos_ - start);
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            skip_ws();
            std::size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (dstart == pos_) throw input_error("missing denominator in '" + s_ + "'");
            num += "/" + s_.substr(dstart, pos_ - dstart);
        }
        return Poly::constant(nvars_, parse_rational(num));
    }

    Poly parse_variable() {
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        int idx = variable_index(name);
        int power = 1;
        if (eat('^')) {
            skip_ws();
            std::size_t estart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (estart == pos_) throw input_error("missing exponent in '" + s_ + "'");
            power = std::stoi(s_.substr(estart, pos_ - estart));
        }
        return Poly(Monomial::variable(nvars_, idx, power), Rational(1));
    }

    int variable_index(const std::string& name) const {
        if (name.size() >= 2 && name[0] == 'x' &&
            std::isdigit(static_cast<unsigned char>(name[1]))) {
            int i = std::stoi(name.substr(1));
            if (i >= 1 && i <= nvars_) return i - 1;
        }
        static const std::string aliases = "xyzt";
        if (name.size() == 1 && nvars_ <= 4) {
            auto p = aliases.find(name[0]);
            if (p != std::string::npos && static_cast<int>(p) < nvars_)
                return static_cast<int>(p);
        }
        throw input_error("unknown variable '" + name + "' in a ring with " +
                          std::to_string(nvars_) + " variables");
    }

    const std::string& s_;
    int nvars_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Poly parse_poly(const std::string& s, int nvars) {
    return detail::PolyParser(s, nvars).parse();
}

}  // namespace logres
