#pragma once

#include <map>
#include <string>
#include <vector>

#include "logres/groebner.hpp"
#include "logres/laurent.hpp"
#include "logres/linalg.hpp"

namespace logres {

// Linear subspace of C^l, stored as the reduced row echelon form of the
// matrix of linear forms vanishing on it. The RREF is the canonical key of
// the subspace; rank = codimension.
class LinearSubspace {
public:
    LinearSubspace(int ambient_dim, QMatrix forms) : ambient_(ambient_dim), forms_(std::move(forms)) {
        for (const QRow& r : forms_)
            if (static_cast<int>(r.size()) != ambient_)
                throw input_error("linear form length mismatch");
        rref(forms_);
    }

    static LinearSubspace whole_space(int ambient_dim) { return LinearSubspace(ambient_dim, {}); }

    int ambient_dim() const { return ambient_; }
    int codim() const { return static_cast<int>(forms_.size()); }
    int dim() const { return ambient_ - codim(); }
    const QMatrix& forms() const { return forms_; }

    bool operator==(const LinearSubspace& o) const {
        return ambient_ == o.ambient_ && forms_ == o.forms_;
    }
    bool operator!=(const LinearSubspace& o) const { return !(*this == o); }

    // set containment: *this contains other
    bool contains(const LinearSubspace& other) const {
        for (const QRow& f : forms_)
            if (!in_row_space(other.forms_, f)) return false;
        return true;
    }

    static LinearSubspace intersect(const LinearSubspace& a, const LinearSubspace& b) {
        QMatrix m = a.forms_;
        m.insert(m.end(), b.forms_.begin(), b.forms_.end());
        return LinearSubspace(a.ambient_, std::move(m));
    }

    std::string key() const {
        std::string s = std::to_string(codim());
        for (const QRow& r : forms_)
            for (const Rational& q : r) s += "," + rational_to_string(q);
        return s;
    }

    std::vector<Poly> linear_forms() const {
        std::vector<Poly> out;
        for (const QRow& r : forms_) {
            Poly f(ambient_);
            for (int i = 0; i < ambient_; ++i)
                if (r[i] != 0) f += Poly::variable(ambient_, i) * r[i];
            out.push_back(std::move(f));
        }
        return out;
    }

    Ideal linear_ideal() const { return Ideal(ambient_, linear_forms()); }

private:
    int ambient_;
    QMatrix forms_;
};

// Central equidimensional subspace arrangement. The empty arrangement is
// allowed as a degenerate case (it plays the role of X_V).
class Arrangement {
public:
    Arrangement(int ambient_dim, std::vector<LinearSubspace> comps)
        : ambient_(ambient_dim), comps_(std::move(comps)) {
        for (const LinearSubspace& c : comps_) {
            if (c.ambient_dim() != ambient_) throw input_error("component ambient mismatch");
            if (c.codim() == 0) throw input_error("component equals the ambient space");
            if (c.codim() != comps_.front().codim())
                throw input_error("arrangement is not equidimensional");
        }
        for (std::size_t i = 0; i < comps_.size(); ++i)
            for (std::size_t j = i + 1; j < comps_.size(); ++j)
                if (comps_[i] == comps_[j]) throw input_error("duplicate component");
    }

    int ambient_dim() const { return ambient_; }
    int size() const { return static_cast<int>(comps_.size()); }
    bool empty() const { return comps_.empty(); }
    const std::vector<LinearSubspace>& components() const { return comps_; }

    // common codimension k; -1 for the empty arrangement
    int codim() const { return comps_.empty() ? -1 : comps_.front().codim(); }

private:
    int ambient_;
    std::vector<LinearSubspace> comps_;
};

// I_X = intersection of the component linear ideals; the unit ideal for the
// empty arrangement.
inline Ideal vanishing_ideal(const Arrangement& A) {
    const int n = A.ambient_dim();
    if (A.empty()) return Ideal(n, {Poly::constant(n, 1)});
    Ideal I = A.components()[0].linear_ideal();
    for (int i = 1; i < A.size(); ++i) I = ideal_intersect(I, A.components()[i].linear_ideal());
    return I;
}

struct LatticeNode {
    LinearSubspace space;
    int dim;
    std::vector<int> components;  // indices i with space inside X_i
    Integer mobius;               // mu(V, Y)
};

// Intersection lattice, ordered by reverse inclusion: i <= j iff the j-th
// subspace is contained in the i-th. Node 0 is the ambient space V.
class IntersectionLattice {
public:
    explicit IntersectionLattice(const Arrangement& A) : ambient_(A.ambient_dim()) {
        std::map<std::string, LinearSubspace> pool;
        LinearSubspace V = LinearSubspace::whole_space(ambient_);
        pool.emplace(V.key(), V);
        for (const LinearSubspace& c : A.components()) pool.emplace(c.key(), c);
        // closure under intersections with components
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<LinearSubspace> current;
            for (const auto& [k, s] : pool) current.push_back(s);
            for (const LinearSubspace& s : current)
                for (const LinearSubspace& c : A.components()) {
                    LinearSubspace m = LinearSubspace::intersect(s, c);
                    if (pool.emplace(m.key(), m).second) grew = true;
                }
        }
        for (const auto& [k, s] : pool) {
            LatticeNode node{s, s.dim(), {}, Integer(0)};
            for (int i = 0; i < A.size(); ++i)
                if (A.components()[i].contains(s)) node.components.push_back(i);
            nodes_.push_back(std::move(node));
        }
        std::sort(nodes_.begin(), nodes_.end(), [](const LatticeNode& a, const LatticeNode& b) {
            if (a.dim != b.dim) return a.dim > b.dim;
            return a.space.key() < b.space.key();
        });
        compute_mobius();
    }

    int ambient_dim() const { return ambient_; }
    int size() const { return static_cast<int>(nodes_.size()); }
    const std::vector<LatticeNode>& nodes() const { return nodes_; }
    const LatticeNode& node(int i) const { return nodes_[i]; }

    // partial order: i <= j iff nodes_[j].space is contained in nodes_[i].space
    bool leq(int i, int j) const { return nodes_[i].space.contains(nodes_[j].space); }

    int find(const LinearSubspace& s) const {
        for (int i = 0; i < size(); ++i)
            if (nodes_[i].space == s) return i;
        return -1;
    }

    // interval Mobius function mu(Z, Y) for Z <= Y
    Integer interval_mobius(int z, int y) const {
        if (!leq(z, y)) return 0;
        auto it = interval_cache_.find({z, y});
        if (it != interval_cache_.end()) return it->second;
        Integer m;
        if (z == y) {
            m = 1;
        } else {
            m = 0;
            for (int w = 0; w < size(); ++w)
                if (w != y && leq(z, w) && leq(w, y)) m -= interval_mobius(z, w);
        }
        interval_cache_.emplace(std::make_pair(z, y), m);
        return m;
    }

private:
    void compute_mobius() {
        // nodes are sorted by decreasing dimension; mu(V)=1, interval sums vanish
        for (int y = 0; y < size(); ++y) {
            if (y == 0) {
                nodes_[y].mobius = 1;
                continue;
            }
            Integer m = 0;
            for (int z = 0; z < y; ++z)
                if (leq(z, y) && z != y) m -= nodes_[z].mobius;
            nodes_[y].mobius = m;
        }
    }

    int ambient_;
    std::vector<LatticeNode> nodes_;
    mutable std::map<std::pair<int, int>, Integer> interval_cache_;
};

inline IntersectionLattice intersection_lattice(const Arrangement& A) {
    return IntersectionLattice(A);
}

// chi(X, t) = sum over the lattice of mu(Y) t^dim(Y); integer polynomial in
// t of degree exactly l, monic.
inline LaurentZ characteristic_polynomial(const IntersectionLattice& L) {
    LaurentZ chi;
    for (const LatticeNode& n : L.nodes()) chi += LaurentZ::monomial(n.dim, n.mobius);
    if (chi.max_exp() != L.ambient_dim() || chi.coeff(L.ambient_dim()) != 1)
        throw internal_error("characteristic polynomial degree invariant violated");
    return chi;
}

inline LaurentZ characteristic_polynomial(const Arrangement& A) {
    return characteristic_polynomial(IntersectionLattice(A));
}

// X_Y: the components containing Y. For Y = V this is the empty arrangement
// (no proper component contains the ambient space).
inline Arrangement subarrangement_at(const Arrangement& A, const LinearSubspace& Y) {
    std::vector<LinearSubspace> comps;
    for (const LinearSubspace& c : A.components())
        if (c.contains(Y)) comps.push_back(c);
    return Arrangement(A.ambient_dim(), std::move(comps));
}

// mobius restricted to a lattice element by index, for reports
inline Arrangement subarrangement_at(const Arrangement& A, const IntersectionLattice& L, int node) {
    if (node < 0 || node >= L.size()) throw input_error("lattice node out of range");
    return subarrangement_at(A, L.node(node).space);
}

}  // namespace logres
