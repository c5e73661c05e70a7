#pragma once

#include <string>
#include <vector>

#include "logres/laurent.hpp"

namespace logres {

// Element of Z[x, x^-1, t], stored as a polynomial in t with Laurent
// coefficients. The variable u below abbreviates t(1-x) - 1.
class PsiPolynomial {
public:
    PsiPolynomial() = default;
    explicit PsiPolynomial(std::vector<LaurentZ> t_coeffs) : c_(std::move(t_coeffs)) { trim(); }

    static PsiPolynomial zero() { return {}; }
    static PsiPolynomial constant(LaurentZ c) { return PsiPolynomial({std::move(c)}); }
    static PsiPolynomial t_power(int q, LaurentZ c) {
        std::vector<LaurentZ> v(q + 1);
        v[q] = std::move(c);
        return PsiPolynomial(std::move(v));
    }
    // u = t(1-x) - 1
    static PsiPolynomial u() {
        return PsiPolynomial({LaurentZ::monomial(0, -1), LaurentZ::one_minus_power(1)});
    }

    bool is_zero() const { return c_.empty(); }
    int t_degree() const { return static_cast<int>(c_.size()) - 1; }
    LaurentZ t_coeff(int q) const {
        if (q < 0 || q > t_degree()) return LaurentZ::zero();
        return c_[q];
    }

    PsiPolynomial operator-() const {
        PsiPolynomial r = *this;
        for (LaurentZ& c : r.c_) c = -c;
        return r;
    }
    PsiPolynomial operator+(const PsiPolynomial& o) const {
        std::vector<LaurentZ> v(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = t_coeff(static_cast<int>(i)) + o.t_coeff(static_cast<int>(i));
        return PsiPolynomial(std::move(v));
    }
    PsiPolynomial operator-(const PsiPolynomial& o) const { return *this + (-o); }
    PsiPolynomial operator*(const PsiPolynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<LaurentZ> v(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
        return PsiPolynomial(std::move(v));
    }
    PsiPolynomial operator*(const LaurentZ& f) const {
        PsiPolynomial r = *this;
        for (LaurentZ& c : r.c_) c = c * f;
        r.trim();
        return r;
    }

    bool operator==(const PsiPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const PsiPolynomial& o) const { return !(*this == o); }

    PsiPolynomial times_u_power(int k) const {
        PsiPolynomial r = *this;
        for (int i = 0; i < k; ++i) r = r * u();
        return r;
    }

    // Exact division by u^k = (t(1-x) - 1)^k; failure is an invariant
    // violation (the decomposition identities guarantee exactness).
    PsiPolynomial divided_by_u_power(int k) const {
        PsiPolynomial r = *this;
        for (int i = 0; i < k; ++i) r = r.divided_by_u();
        return r;
    }

    // Evaluate at x = 1; result is a plain integer polynomial in t.
    LaurentZ eval_x1() const {
        LaurentZ p;
        for (std::size_t q = 0; q < c_.size(); ++q)
            p += LaurentZ::monomial(static_cast<int>(q), c_[q].eval_one());
        return p;
    }

    // Evaluate at t = 1; result is a Laurent polynomial in x.
    LaurentZ eval_t1() const {
        LaurentZ p;
        for (const LaurentZ& c : c_) p += c;
        return p;
    }

    Integer eval_x1_t1() const { return eval_x1().eval_one(); }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int q = t_degree(); q >= 0; --q) {
            if (c_[q].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c_[q].to_string() + ")";
            if (q >= 1) {
                s += "*t";
                if (q > 1) s += "^" + std::to_string(q);
            }
        }
        return s;
    }

private:
    PsiPolynomial divided_by_u() const {
        if (is_zero()) return {};
        if (t_degree() < 1) throw internal_error("psi division: degree too small");
        std::vector<LaurentZ> q(c_.size() - 1);
        PsiPolynomial rem = *this;
        const LaurentZ one_minus_x = LaurentZ::one_minus_power(1);
        for (int deg = rem.t_degree(); deg >= 1; --deg) {
            LaurentZ top = rem.t_coeff(deg);
            if (top.is_zero()) continue;
            auto div = top.divided_by_one_minus_x(1);
            if (!div)
                throw internal_error("psi division by t(1-x)-1 is not exact (coefficient " +
                                     top.to_string() + ")");
            q[deg - 1] = *div;
            rem = rem - PsiPolynomial::t_power(deg - 1, *div) * u();
        }
        if (!rem.is_zero())
            throw internal_error("psi division by t(1-x)-1 leaves remainder " + rem.to_string());
        return PsiPolynomial(std::move(q));
    }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<LaurentZ> c_;
};

inline std::ostream& operator<<(std::ostream& os, const PsiPolynomial& p) {
    return os << p.to_string();
}

// Psi(M^bullet, x, t) = sum_q Poin(M^q, x) (t(1-x)-1)^q for a family of
// series sharing the denominator (1-x)^e. The numerator of the result must
// be exactly divisible by the denominator (the polynomiality property); a
// failure signals an engine bug and raises internal_error.
inline PsiPolynomial psi_of_series(const std::vector<HilbertSeries>& family) {
    int target = 0;
    for (const HilbertSeries& h : family) target = std::max(target, h.denom_pow());
    PsiPolynomial num;
    PsiPolynomial upow = PsiPolynomial::constant(LaurentZ::one());
    for (const HilbertSeries& h : family) {
        num = num + upow * PsiPolynomial::constant(h.numerator_at(target));
        upow = upow * PsiPolynomial::u();
    }
    std::vector<LaurentZ> coeffs;
    for (int q = 0; q <= num.t_degree(); ++q) {
        auto div = num.t_coeff(q).divided_by_one_minus_x(target);
        if (!div)
            throw internal_error(
                "psi numerator is not divisible by (1-x)^" + std::to_string(target) +
                " at t^" + std::to_string(q) + "; this violates the polynomiality property");
        coeffs.push_back(*div);
    }
    return PsiPolynomial(std::move(coeffs));
}

}  // namespace logres
