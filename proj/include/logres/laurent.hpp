#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "logres/rational.hpp"

namespace logres {

// Laurent polynomial in one variable x over Z.
class LaurentZ {
public:
    LaurentZ() = default;
    LaurentZ(int lo, std::vector<Integer> coeffs) : lo_(lo), c_(std::move(coeffs)) { trim(); }

    static LaurentZ zero() { return {}; }
    static LaurentZ one() { return monomial(0, 1); }
    static LaurentZ monomial(int e, Integer c) {
        LaurentZ p;
        if (c != 0) {
            p.lo_ = e;
            p.c_ = {std::move(c)};
        }
        return p;
    }
    // 1 - x^d
    static LaurentZ one_minus_power(int d) {
        std::vector<Integer> c(d + 1, 0);
        c[0] = 1;
        c[d] = -1;
        return LaurentZ(0, std::move(c));
    }
    // 1 + x + ... + x^(d-1)
    static LaurentZ geometric(int d) { return LaurentZ(0, std::vector<Integer>(d, 1)); }

    bool is_zero() const { return c_.empty(); }
    int min_exp() const { return lo_; }
    int max_exp() const { return lo_ + static_cast<int>(c_.size()) - 1; }

    Integer coeff(int e) const {
        if (is_zero() || e < lo_ || e > max_exp()) return 0;
        return c_[e - lo_];
    }

    LaurentZ operator-() const {
        LaurentZ r = *this;
        for (Integer& v : r.c_) v = -v;
        return r;
    }

    LaurentZ operator+(const LaurentZ& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        int lo = std::min(lo_, o.lo_);
        int hi = std::max(max_exp(), o.max_exp());
        std::vector<Integer> c(hi - lo + 1, 0);
        for (int e = lo_; e <= max_exp(); ++e) c[e - lo] += coeff(e);
        for (int e = o.lo_; e <= o.max_exp(); ++e) c[e - lo] += o.coeff(e);
        return LaurentZ(lo, std::move(c));
    }
    LaurentZ operator-(const LaurentZ& o) const { return *this + (-o); }

    LaurentZ operator*(const LaurentZ& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<Integer> c(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
        return LaurentZ(lo_ + o.lo_, std::move(c));
    }

    LaurentZ operator*(const Integer& k) const {
        if (k == 0) return {};
        LaurentZ r = *this;
        for (Integer& v : r.c_) v *= k;
        return r;
    }

    // multiply by x^e
    LaurentZ shifted(int e) const {
        LaurentZ r = *this;
        r.lo_ += e;
        return r;
    }

    LaurentZ& operator+=(const LaurentZ& o) { return *this = *this + o; }
    LaurentZ& operator-=(const LaurentZ& o) { return *this = *this - o; }

    bool operator==(const LaurentZ& o) const { return lo_ == o.lo_ && c_ == o.c_; }
    bool operator!=(const LaurentZ& o) const { return !(*this == o); }

    Integer eval_one() const {
        Integer s = 0;
        for (const Integer& v : c_) s += v;
        return s;
    }

    // Exact quotient by (1-x)^k, if it exists.
    std::optional<LaurentZ> divided_by_one_minus_x(int k) const {
        LaurentZ p = *this;
        for (int round = 0; round < k; ++round) {
            if (p.is_zero()) continue;
            // (1-x) q = p  =>  q_e = p_e + q_{e-1}
            std::vector<Integer> q(p.c_.size() - 1, 0);
            Integer carry = 0;
            for (std::size_t i = 0; i + 1 < p.c_.size(); ++i) {
                carry += p.c_[i];
                q[i] = carry;
            }
            if (carry + p.c_.back() != 0) return std::nullopt;
            p = LaurentZ(p.lo_, std::move(q));
        }
        return p;
    }

    bool divisible_by_one_minus_x() const { return eval_one() == 0; }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        bool first = true;
        for (int e = max_exp(); e >= lo_; --e) {
            Integer c = coeff(e);
            if (c == 0) continue;
            if (first)
                s += (c < 0 ? "-" : "");
            else
                s += (c < 0 ? " - " : " + ");
            first = false;
            Integer a = abs(c);
            std::string mono;
            if (e != 0) {
                mono = var;
                if (e != 1) mono += "^" + std::to_string(e);
            }
            if (mono.empty())
                s += a.get_str();
            else if (a == 1)
                s += mono;
            else
                s += a.get_str() + "*" + mono;
        }
        return s;
    }

private:
    void trim() {
        std::size_t front = 0;
        while (front < c_.size() && c_[front] == 0) ++front;
        std::size_t back = c_.size();
        while (back > front && c_[back - 1] == 0) --back;
        if (front == back) {
            c_.clear();
            lo_ = 0;
        } else {
            c_ = std::vector<Integer>(c_.begin() + front, c_.begin() + back);
            lo_ += static_cast<int>(front);
        }
    }

    int lo_ = 0;
    std::vector<Integer> c_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentZ& p) { return os << p.to_string(); }

// Rational function n(x) / (1-x)^e in canonical form: either e == 0 or the
// numerator is not divisible by (1-x).
class HilbertSeries {
public:
    HilbertSeries() = default;
    HilbertSeries(LaurentZ num, int denom_pow) : num_(std::move(num)), pow_(denom_pow) {
        if (pow_ < 0) throw input_error("negative denominator exponent");
        canonicalize();
    }

    static HilbertSeries zero() { return {}; }
    static HilbertSeries constant(Integer c) { return HilbertSeries(LaurentZ::monomial(0, c), 0); }

    const LaurentZ& numerator() const { return num_; }
    int denom_pow() const { return pow_; }
    bool is_zero() const { return num_.is_zero(); }

    // numerator over denominator (1-x)^target, target >= pow_.
    LaurentZ numerator_at(int target) const {
        if (target < pow_) throw input_error("denominator exponent too small");
        LaurentZ n = num_;
        for (int i = pow_; i < target; ++i) n = n * LaurentZ::one_minus_power(1);
        return n;
    }

    HilbertSeries operator+(const HilbertSeries& o) const {
        int target = std::max(pow_, o.pow_);
        return HilbertSeries(numerator_at(target) + o.numerator_at(target), target);
    }
    HilbertSeries operator-(const HilbertSeries& o) const {
        int target = std::max(pow_, o.pow_);
        return HilbertSeries(numerator_at(target) - o.numerator_at(target), target);
    }
    HilbertSeries operator*(const LaurentZ& f) const { return HilbertSeries(num_ * f, pow_); }
    HilbertSeries shifted(int e) const { return HilbertSeries(num_.shifted(e), pow_); }

    bool operator==(const HilbertSeries& o) const { return pow_ == o.pow_ && num_ == o.num_; }
    bool operator!=(const HilbertSeries& o) const { return !(*this == o); }

    // Power-series coefficient of x^p.
    Integer coefficient(int p) const {
        if (num_.is_zero()) return 0;
        if (pow_ == 0) return num_.coeff(p);
        Integer s = 0;
        for (int j = num_.min_exp(); j <= std::min(p, num_.max_exp()); ++j) {
            // coeff of x^(p-j) in (1-x)^-pow = C(pow-1 + p-j, pow-1)
            Integer b = 1;
            for (int i = 1; i <= pow_ - 1; ++i) {
                b *= (p - j) + i;
                b /= i;
            }
            s += num_.coeff(j) * b;
        }
        return s;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s = "(" + num_.to_string() + ")";
        if (pow_ > 0) {
            s += " / (1-x)";
            if (pow_ > 1) s += "^" + std::to_string(pow_);
        }
        return s;
    }

private:
    void canonicalize() {
        if (num_.is_zero()) {
            pow_ = 0;
            return;
        }
        while (pow_ > 0 && num_.divisible_by_one_minus_x()) {
            num_ = *num_.divided_by_one_minus_x(1);
            --pow_;
        }
    }

    LaurentZ num_;
    int pow_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const HilbertSeries& h) {
    return os << h.to_string();
}

}  // namespace logres
