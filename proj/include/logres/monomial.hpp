#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "logres/rational.hpp"

namespace logres {

// Exponent vector of fixed length (the ambient variable count).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : exp_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<int> exps)
        : exp_(std::move(exps)), deg_(std::accumulate(exp_.begin(), exp_.end(), 0)) {
        for (int e : exp_)
            if (e < 0) throw input_error("negative exponent in monomial");
    }

    int nvars() const { return static_cast<int>(exp_.size()); }
    int degree() const { return deg_; }
    int operator[](int i) const { return exp_[i]; }
    const std::vector<int>& exponents() const { return exp_; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (int i = 0; i < nvars(); ++i) r.exp_[i] += o.exp_[i];
        r.deg_ += o.deg_;
        return r;
    }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < nvars(); ++i)
            if (exp_[i] > o.exp_[i]) return false;
        return true;
    }

    // Quotient o / this; caller must ensure divisibility.
    Monomial divide_into(const Monomial& o) const {
        Monomial r = o;
        for (int i = 0; i < nvars(); ++i) r.exp_[i] -= exp_[i];
        r.deg_ = o.deg_ - deg_;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        r.deg_ = 0;
        for (int i = 0; i < a.nvars(); ++i) {
            r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
            r.deg_ += r.exp_[i];
        }
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < a.nvars(); ++i)
            if (a.exp_[i] > 0 && b.exp_[i] > 0) return false;
        return true;
    }

    static Monomial variable(int nvars, int i, int power = 1) {
        Monomial m(nvars);
        m.exp_[i] = power;
        m.deg_ = power;
        return m;
    }

    bool operator==(const Monomial& o) const { return exp_ == o.exp_; }
    bool operator!=(const Monomial& o) const { return exp_ != o.exp_; }

private:
    std::vector<int> exp_;
    int deg_ = 0;
};

// A total, multiplicative well-order on monomials. Block is an elimination
// order: degrevlex on the leading `block` variables first, then degrevlex
// on the rest.
struct MonomialOrder {
    enum class Kind : std::uint8_t { Degrevlex, Lex, Block };

    Kind kind = Kind::Degrevlex;
    int block = 0;

    static MonomialOrder degrevlex() { return {Kind::Degrevlex, 0}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder elimination(int first_block) { return {Kind::Block, first_block}; }

    bool operator==(const MonomialOrder&) const = default;
};

namespace detail {

// Degrevlex on the index range [lo, hi): total degree, then the *smaller*
// exponent at the rightmost differing index wins.
inline int cmp_degrevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace detail

// Returns -1, 0 or 1 as a <, =, > b under ord.
inline int monomial_compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    if (a.nvars() != b.nvars())
        throw input_error("monomial_compare: length mismatch");
    const int n = a.nvars();
    switch (ord.kind) {
        case MonomialOrder::Kind::Degrevlex:
            if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
            return detail::cmp_degrevlex_range(a, b, 0, n);
        case MonomialOrder::Kind::Lex:
            for (int i = 0; i < n; ++i)
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            return 0;
        case MonomialOrder::Kind::Block: {
            int split = std::min(ord.block, n);
            int c = detail::cmp_degrevlex_range(a, b, 0, split);
            if (c != 0) return c;
            return detail::cmp_degrevlex_range(a, b, split, n);
        }
    }
    return 0;
}

}  // namespace logres
