#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "logres/poly.hpp"

namespace logres {

// Element of a free module S^r with a degree shift per generator. The
// component at position j of an element homogeneous of internal degree e is
// a homogeneous polynomial of degree e - shift[j].
struct FreeModuleElement {
    std::vector<Poly> comps;

    FreeModuleElement() = default;
    explicit FreeModuleElement(std::vector<Poly> c) : comps(std::move(c)) {}
    static FreeModuleElement zero(int nvars, int rank) {
        return FreeModuleElement(std::vector<Poly>(rank, Poly(nvars)));
    }
    static FreeModuleElement unit(int nvars, int rank, int pos) {
        FreeModuleElement e = zero(nvars, rank);
        e.comps[pos] = Poly::constant(nvars, 1);
        return e;
    }

    int rank() const { return static_cast<int>(comps.size()); }
    bool is_zero() const {
        return std::all_of(comps.begin(), comps.end(), [](const Poly& p) { return p.is_zero(); });
    }

    // Internal degree; -1 for zero. Throws if not homogeneous w.r.t. shifts.
    int degree(const std::vector<int>& shifts) const {
        int d = -1;
        for (int j = 0; j < rank(); ++j) {
            if (comps[j].is_zero()) continue;
            if (!comps[j].is_homogeneous())
                throw input_error("inhomogeneous module element component");
            int dj = comps[j].degree() + shifts[j];
            if (d >= 0 && dj != d) throw input_error("inhomogeneous module element");
            d = dj;
        }
        return d;
    }

    bool is_homogeneous(const std::vector<int>& shifts) const {
        int d = -1;
        for (int j = 0; j < rank(); ++j) {
            if (comps[j].is_zero()) continue;
            if (!comps[j].is_homogeneous()) return false;
            int dj = comps[j].degree() + shifts[j];
            if (d >= 0 && dj != d) return false;
            d = dj;
        }
        return true;
    }

    FreeModuleElement operator+(const FreeModuleElement& o) const {
        FreeModuleElement r = *this;
        for (int j = 0; j < rank(); ++j) r.comps[j] += o.comps[j];
        return r;
    }
    FreeModuleElement operator-() const {
        FreeModuleElement r = *this;
        for (Poly& p : r.comps) p = -p;
        return r;
    }
    FreeModuleElement operator-(const FreeModuleElement& o) const { return *this + (-o); }
    FreeModuleElement operator*(const Poly& f) const {
        FreeModuleElement r = *this;
        for (Poly& p : r.comps) p = p * f;
        return r;
    }
    bool operator==(const FreeModuleElement& o) const { return comps == o.comps; }
};

// One term of a flattened module element.
struct ModTerm {
    int pos;
    Monomial mono;
    Rational coeff;
};

// Term-over-position order extending a base monomial order, weighted by the
// generator shifts so that comparisons respect the grading. Positions below
// `front` form a dominant block; that is how eliminations are phrased at the
// module level (the back block holds syzygy coordinates).
struct ModuleOrder {
    MonomialOrder base;
    std::vector<int> shifts;
    int front = 0;

    int rank() const { return static_cast<int>(shifts.size()); }

    // -1, 0, 1 as a <, =, > b.
    int compare(const ModTerm& a, const ModTerm& b) const {
        if (front > 0) {
            bool fa = a.pos < front, fb = b.pos < front;
            if (fa != fb) return fa ? 1 : -1;
        }
        int da = a.mono.degree() + shifts[a.pos];
        int db = b.mono.degree() + shifts[b.pos];
        if (da != db) return da < db ? -1 : 1;
        int c = monomial_compare(a.mono, b.mono, base);
        if (c != 0) return c;
        if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
        return 0;
    }
};

// Flattened module element: terms sorted strictly descending under the
// active ModuleOrder. Engine-internal representation.
struct ModVec {
    std::vector<ModTerm> terms;

    bool is_zero() const { return terms.empty(); }
    const ModTerm& lead() const { return terms.front(); }

    static ModVec from_element(const FreeModuleElement& e, const ModuleOrder& ord) {
        ModVec v;
        for (int j = 0; j < e.rank(); ++j)
            for (const Term& t : e.comps[j].terms()) v.terms.push_back({j, t.mono, t.coeff});
        std::sort(v.terms.begin(), v.terms.end(),
                  [&](const ModTerm& a, const ModTerm& b) { return ord.compare(a, b) > 0; });
        return v;
    }

    FreeModuleElement to_element(int nvars, int rank) const {
        FreeModuleElement e = FreeModuleElement::zero(nvars, rank);
        for (const ModTerm& t : terms) e.comps[t.pos] += Poly(t.mono, t.coeff);
        return e;
    }

    ModVec times_term(const Monomial& m, const Rational& c) const {
        ModVec r;
        if (c == 0) return r;
        r.terms.reserve(terms.size());
        for (const ModTerm& t : terms) r.terms.push_back({t.pos, t.mono * m, t.coeff * c});
        return r;
    }

    void scale(const Rational& c) {
        for (ModTerm& t : terms) t.coeff *= c;
    }

    void make_monic() {
        if (terms.empty()) return;
        Rational inv = 1 / terms.front().coeff;
        if (inv != 1) scale(inv);
    }

    static ModVec add(const ModVec& a, const ModVec& b, const ModuleOrder& ord) {
        ModVec r;
        r.terms.reserve(a.terms.size() + b.terms.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms.size() && j < b.terms.size()) {
            int c = ord.compare(a.terms[i], b.terms[j]);
            if (c == 0) {
                Rational s = a.terms[i].coeff + b.terms[j].coeff;
                if (s != 0) r.terms.push_back({a.terms[i].pos, a.terms[i].mono, s});
                ++i, ++j;
            } else if (c > 0) {
                r.terms.push_back(a.terms[i++]);
            } else {
                r.terms.push_back(b.terms[j++]);
            }
        }
        for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
        for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
        return r;
    }

    // a - (m, c) * b
    static ModVec sub_mult(const ModVec& a, const Monomial& m, const Rational& c, const ModVec& b,
                           const ModuleOrder& ord) {
        return add(a, b.times_term(m, -c), ord);
    }

    bool operator==(const ModVec& o) const {
        if (terms.size() != o.terms.size()) return false;
        for (std::size_t i = 0; i < terms.size(); ++i)
            if (terms[i].pos != o.terms[i].pos || terms[i].mono != o.terms[i].mono ||
                terms[i].coeff != o.terms[i].coeff)
                return false;
        return true;
    }
};

}  // namespace logres
