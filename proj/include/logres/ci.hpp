#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "logres/arrangement.hpp"

namespace logres {

// A reduced complete intersection arrangement C containing X, presented
// through its hyperplane grid: column j holds the linear factors of h_j.
// The components of C are the intersections of one hyperplane per column.
struct CIData {
    std::vector<std::vector<Poly>> columns;   // linear factors, one list per j
    std::vector<Poly> hs;                     // h_j = product of column j
    std::vector<int> degrees;                 // d_j = deg h_j
    int total_degree = 0;                     // d = sum d_j
    Ideal ideal;                              // I_C = <h_1, ..., h_k>
    std::vector<LinearSubspace> components;   // the grid intersections
    bool user_supplied = false;
    unsigned long seed = 0;
    int coeff_bound = 0;

    int codim() const { return static_cast<int>(columns.size()); }
    int nvars() const { return ideal.nvars(); }
};

struct CIVerification {
    bool forms_ok = false;          // factors are nonzero linear forms
    bool regular_sequence = false;  // codim <h_1..h_j> = j for all j
    bool contains_x = false;        // every h_j vanishes on X
    bool grid_dims_ok = false;      // every grid intersection has dim l-k
    bool grid_distinct = false;     // grid intersections pairwise distinct
    std::vector<std::string> failures;

    bool ok() const {
        return forms_ok && regular_sequence && contains_x && grid_dims_ok && grid_distinct;
    }
};

namespace detail {

inline void enumerate_tuples(const std::vector<int>& sizes, std::vector<int>& tuple, std::size_t j,
                             const std::function<void(const std::vector<int>&)>& fn) {
    if (j == sizes.size()) {
        fn(tuple);
        return;
    }
    for (int i = 0; i < sizes[j]; ++i) {
        tuple[j] = i;
        enumerate_tuples(sizes, tuple, j + 1, fn);
    }
}

inline QRow linear_form_coefficients(const Poly& f) {
    QRow row(f.nvars(), Rational(0));
    for (const Term& t : f.terms()) {
        if (t.mono.degree() != 1) throw input_error("not a linear form: " + poly_to_string(f));
        for (int i = 0; i < f.nvars(); ++i)
            if (t.mono[i] == 1) row[i] = t.coeff;
    }
    return row;
}

}  // namespace detail

// The grid intersections, one subspace per choice of a factor in each column.
inline std::vector<LinearSubspace> grid_components(const std::vector<std::vector<Poly>>& columns,
                                                   int nvars) {
    std::vector<int> sizes;
    for (const auto& col : columns) sizes.push_back(static_cast<int>(col.size()));
    std::vector<LinearSubspace> out;
    std::vector<int> tuple(columns.size(), 0);
    detail::enumerate_tuples(sizes, tuple, 0, [&](const std::vector<int>& t) {
        QMatrix m;
        for (std::size_t j = 0; j < columns.size(); ++j)
            m.push_back(detail::linear_form_coefficients(columns[j][t[j]]));
        out.push_back(LinearSubspace(nvars, std::move(m)));
    });
    return out;
}

inline CIVerification verify_ci(const Arrangement& A, const CIData& C) {
    CIVerification v;
    const int n = A.ambient_dim();
    const int k = C.codim();

    v.forms_ok = true;
    for (const auto& col : C.columns)
        for (const Poly& f : col)
            if (f.is_zero() || f.degree() != 1 || !f.is_homogeneous()) {
                v.forms_ok = false;
                v.failures.push_back("factor is not a nonzero linear form: " + poly_to_string(f));
            }
    if (!v.forms_ok) return v;

    if (!A.empty() && k != A.codim()) {
        v.failures.push_back("codimension of C differs from the arrangement");
        return v;
    }

    // regular sequence: the codimension grows by one with each h_j
    v.regular_sequence = true;
    for (int j = 1; j <= k; ++j) {
        Ideal partial(n, std::vector<Poly>(C.hs.begin(), C.hs.begin() + j));
        if (partial.codimension() != j) {
            v.regular_sequence = false;
            v.failures.push_back("h_1..h_" + std::to_string(j) + " is not a regular sequence");
        }
    }

    // X inside C: every h_j vanishes on X
    Ideal IX = vanishing_ideal(A);
    v.contains_x = true;
    for (const Poly& h : C.hs)
        if (!IX.contains(h)) {
            v.contains_x = false;
            v.failures.push_back("h does not vanish on the arrangement: " + poly_to_string(h));
        }

    // grid conditions: intersections have dimension l-k and are distinct,
    // which certifies that I_C is radical
    v.grid_dims_ok = true;
    v.grid_distinct = true;
    std::vector<LinearSubspace> comps = grid_components(C.columns, n);
    for (const LinearSubspace& s : comps)
        if (s.codim() != k) {
            v.grid_dims_ok = false;
            v.failures.push_back("a grid intersection has codimension " +
                                 std::to_string(s.codim()) + " instead of " + std::to_string(k));
        }
    for (std::size_t a = 0; a < comps.size(); ++a)
        for (std::size_t b = a + 1; b < comps.size(); ++b)
            if (comps[a] == comps[b]) {
                v.grid_distinct = false;
                v.failures.push_back("two grid intersections coincide");
            }
    return v;
}

// Assembles CIData from factor columns and verifies it.
inline CIData make_ci(const Arrangement& A, std::vector<std::vector<Poly>> columns,
                      bool user_supplied) {
    CIData C;
    C.columns = std::move(columns);
    const int n = A.ambient_dim();
    for (const auto& col : C.columns) {
        if (col.empty()) throw input_error("empty factor column in complete intersection");
        Poly h = Poly::constant(n, 1);
        for (const Poly& f : col) h *= f;
        C.hs.push_back(h);
        C.degrees.push_back(h.degree());
        C.total_degree += h.degree();
    }
    C.ideal = Ideal(n, C.hs);
    C.user_supplied = user_supplied;
    CIVerification v = verify_ci(A, C);
    if (!v.ok()) {
        std::string msg = "complete intersection verification failed:";
        for (const std::string& f : v.failures) msg += "\n  " + f;
        throw construction_error(msg);
    }
    C.components = grid_components(C.columns, n);
    return C;
}

// Randomized-then-verified construction of a generic reduced complete
// intersection containing A. Hyperplane (i, j) contains the i-th component;
// the candidate form is rejected unless it avoids every other component and
// the span of every <= k previously chosen forms.
inline CIData build_generic_ci(const Arrangement& A, unsigned long seed, int coeff_bound = 4) {
    if (A.empty()) throw input_error("cannot build a complete intersection for the empty arrangement");
    const int n = A.ambient_dim();
    const int k = A.codim();
    const int s = A.size();

    std::mt19937_64 rng(seed);
    int bound = std::max(1, coeff_bound);

    for (int escalation = 0; escalation < 6; ++escalation) {
        std::vector<std::vector<Poly>> columns(k);
        std::vector<QRow> chosen;  // all accepted forms so far, in proof order
        bool failed = false;

        // proof order: all k hyperplanes of component 1, then component 2, ...
        for (int i = 0; i < s && !failed; ++i) {
            const QMatrix& rows = A.components()[i].forms();
            for (int j = 0; j < k && !failed; ++j) {
                bool accepted = false;
                for (int attempt = 0; attempt < 64 && !accepted; ++attempt) {
                    std::uniform_int_distribution<int> dist(-bound, bound);
                    QRow cand(n, Rational(0));
                    bool nonzero = false;
                    for (int r = 0; r < k; ++r) {
                        int c = dist(rng);
                        if (c == 0) continue;
                        nonzero = true;
                        for (int v = 0; v < n; ++v) cand[v] += Rational(c) * rows[r][v];
                    }
                    if (!nonzero) continue;

                    bool ok = true;
                    // (alpha) X_n not inside the hyperplane for n != i
                    for (int m = 0; m < s && ok; ++m) {
                        if (m == i) continue;
                        if (in_row_space(A.components()[m].forms(), cand)) ok = false;
                    }
                    // (beta) candidate avoids the span of every subset of
                    // at most k previous forms
                    const int prev = static_cast<int>(chosen.size());
                    std::vector<int> subset;
                    auto check_subsets = [&](auto&& self, int start, int depth) -> bool {
                        if (depth > 0) {
                            QMatrix m;
                            for (int idx : subset) m.push_back(chosen[idx]);
                            rref(m);
                            if (in_row_space(m, cand)) return false;
                        }
                        if (depth == k) return true;
                        for (int idx = start; idx < prev; ++idx) {
                            subset.push_back(idx);
                            bool good = self(self, idx + 1, depth + 1);
                            subset.pop_back();
                            if (!good) return false;
                        }
                        return true;
                    };
                    if (ok) ok = check_subsets(check_subsets, 0, 0);

                    if (ok) {
                        Poly f(n);
                        for (int v = 0; v < n; ++v)
                            if (cand[v] != 0) f += Poly::variable(n, v) * cand[v];
                        columns[j].push_back(f);
                        chosen.push_back(cand);
                        accepted = true;
                    }
                }
                if (!accepted) failed = true;
            }
        }
        if (!failed) {
            CIData C = make_ci(A, std::move(columns), /*user_supplied=*/false);
            C.seed = seed;
            C.coeff_bound = bound;
            return C;
        }
        bound *= 2;
    }
    throw construction_error(
        "generic complete intersection construction exhausted its retry budget (s=" +
        std::to_string(s) + ", k=" + std::to_string(k) + ", final coefficient bound " +
        std::to_string(bound) + ")");
}

// Radicality certificate: <h_1, ..., h_k> equals the intersection of the
// component linear ideals. Exponential in the component count; intended for
// tests and small inputs.
inline bool radical_certificate(const CIData& C) {
    if (C.components.empty()) return false;
    Ideal meet = C.components[0].linear_ideal();
    for (std::size_t i = 1; i < C.components.size(); ++i)
        meet = ideal_intersect(meet, C.components[i].linear_ideal());
    return meet.equals(C.ideal);
}

}  // namespace logres
