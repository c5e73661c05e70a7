#pragma once

#include <vector>

#include "logres/ci.hpp"
#include "logres/hilbert.hpp"
#include "logres/psi.hpp"
#include "logres/resolution.hpp"

namespace logres {

inline int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<int>(r);
}

// The q-element subsets of {0..l-1} in lexicographic order; they index the
// basis dx_I of Omega^q.
inline std::vector<std::vector<int>> q_subsets(int l, int q) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == q) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < l; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Matrix of (df ^ -) : Omega^q -> Omega^(q+1) on the dx_I bases. Inserting
// dx_j in front of dx_I and sorting it into place costs the sign (-1)^p with
// p the number of indices of I below j.
inline std::vector<std::vector<Poly>> wedge_matrix(const Poly& f, int l, int q) {
    auto sources = q_subsets(l, q);
    auto targets = q_subsets(l, q + 1);
    std::map<std::vector<int>, int> target_index;
    for (std::size_t j = 0; j < targets.size(); ++j) target_index[targets[j]] = static_cast<int>(j);

    std::vector<std::vector<Poly>> m(targets.size(), std::vector<Poly>(sources.size(), Poly(l)));
    for (std::size_t i = 0; i < sources.size(); ++i) {
        const std::vector<int>& I = sources[i];
        for (int j = 0; j < l; ++j) {
            if (std::find(I.begin(), I.end(), j) != I.end()) continue;
            Poly dj = partial_derivative(f, j);
            if (dj.is_zero()) continue;
            std::vector<int> J = I;
            J.insert(std::lower_bound(J.begin(), J.end(), j), j);
            int below = static_cast<int>(std::lower_bound(I.begin(), I.end(), j) - I.begin());
            Rational sign = (below % 2 == 0) ? 1 : -1;
            m[target_index[J]][i] += dj * sign;
        }
    }
    return m;
}

// h * Omega^q(log X/C) inside S^binom(l,q): the kernel of the maps
// a |-> f_i a into (S/I_C)^binom(l,q) and a |-> df_i ^ a into
// (S/I_C)^binom(l,q+1), over the generators f_i of I_X.
struct LogFormModule {
    int q = 0;
    Submodule module;       // internal, shifts all zero
    HilbertSeries series;   // carries the global x^-d twist
};

inline LogFormModule logform_module(const Arrangement& A, const CIData& C, int q) {
    const int l = A.ambient_dim();
    if (q < 0 || q > l) throw input_error("form degree out of range");
    const std::vector<int> ambient(binomial(l, q), 0);
    const std::vector<int> target(binomial(l, q + 1), 0);

    std::vector<KernelConstraint> constraints;
    Submodule quotient_q1 = ideal_times_free(C.ideal, target);
    Ideal IX = vanishing_ideal(A);
    for (const Poly& f : IX.groebner_basis()) {
        constraints.push_back(KernelConstraint::scalar(f, C.ideal));
        if (q == l) continue;
        std::vector<std::vector<Poly>> wm = wedge_matrix(f, l, q);
        bool zero = true;
        for (const auto& row : wm)
            for (const Poly& p : row)
                if (!p.is_zero()) zero = false;
        if (zero) continue;
        constraints.push_back(
            KernelConstraint::linear_map(std::move(wm), target, quotient_q1.generators()));
    }

    LogFormModule out;
    out.q = q;
    out.module = preimage_kernel(l, ambient, constraints);
    out.series = hilbert_series_of_submodule(out.module, -C.total_degree);
    return out;
}

// Closed-form series of (1/h) I_C Omega^q from the Koszul complex:
// binom(l,q) x^-d (1 - prod_i (1 - x^(d_i))) / (1-x)^l.
inline HilbertSeries koszul_series(const CIData& C, int q, int l) {
    if (q < 0 || q > l) return HilbertSeries::zero();
    LaurentZ prod = LaurentZ::one();
    for (int d : C.degrees) prod = prod * LaurentZ::one_minus_power(d);
    LaurentZ num = (LaurentZ::one() - prod) * Integer(binomial(l, q));
    return HilbertSeries(num.shifted(-C.total_degree), l);
}

// Everything the Solomon-Terao harness needs about one arrangement relative
// to a fixed complete intersection.
struct LogformAnalysis {
    int l = 0, k = 0, d = 0;
    std::vector<LogFormModule> modules;      // q = 0..l
    std::vector<HilbertSeries> log_series;   // q = 0..l
    std::vector<HilbertSeries> koszul;       // q = 0..l
    std::vector<HilbertSeries> residues;     // p = 0..l-k
    PsiPolynomial psi_log, psi_koszul, psi_residue, psi_tilde;
};

// The empty arrangement short-circuits: its log modules are the Koszul
// modules and all residue modules vanish.
inline LogformAnalysis analyze_logforms(const Arrangement& A, const CIData& C) {
    LogformAnalysis R;
    R.l = A.ambient_dim();
    R.k = C.codim();
    R.d = C.total_degree;

    for (int q = 0; q <= R.l; ++q) R.koszul.push_back(koszul_series(C, q, R.l));
    R.psi_koszul = psi_of_series(R.koszul);

    if (A.empty()) {
        R.log_series = R.koszul;
        R.residues.assign(R.l - R.k + 1, HilbertSeries::zero());
        R.psi_log = R.psi_koszul;
        R.psi_residue = PsiPolynomial::zero();
        R.psi_tilde = R.psi_koszul;
        return R;
    }

    for (int q = 0; q <= R.l; ++q) {
        R.modules.push_back(logform_module(A, C, q));
        R.log_series.push_back(R.modules.back().series);
    }
    // the q < k collapse: log forms of low degree are exactly the Koszul part
    for (int q = 0; q < R.k; ++q)
        if (R.log_series[q] != R.koszul[q])
            throw internal_error("log-form series disagrees with the Koszul series at q = " +
                                 std::to_string(q) + " < k");

    R.psi_log = psi_of_series(R.log_series);

    // residue route 1: strip the Koszul part and the degree-k twist
    PsiPolynomial diff = R.psi_log - R.psi_koszul;
    R.psi_residue = (diff * LaurentZ::monomial(R.k, 1)).divided_by_u_power(R.k);

    // residue route 2: per-degree series out of the exact sequence
    for (int p = 0; p <= R.l - R.k; ++p)
        R.residues.push_back((R.log_series[p + R.k] - R.koszul[p + R.k]).shifted(R.k));
    PsiPolynomial route2 = psi_of_series(R.residues);
    if (route2 != R.psi_residue)
        throw internal_error("residue psi routes disagree: " + R.psi_residue.to_string() +
                             " vs " + route2.to_string());

    LaurentZ sign_twist = LaurentZ::monomial(-R.k, (R.k % 2 == 0) ? -1 : 1);
    R.psi_tilde = R.psi_koszul + R.psi_residue.times_u_power(R.k) * sign_twist;
    return R;
}

}  // namespace logres
