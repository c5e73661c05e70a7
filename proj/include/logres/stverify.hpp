#pragma once

#include <chrono>
#include <future>
#include <string>
#include <vector>

#include "logres/logforms.hpp"

namespace logres {

struct NodeResult {
    int dim = 0;
    int num_components = 0;
    std::string key;
    LaurentZ chi;                 // chi(X_Y, t)
    LaurentZ psi_residue_at_1;    // Psi(R^bullet_{X_Y}, 1, t)
    Integer condition_value;      // Psi(R^bullet_{X_Y}, 1, 1)
    bool formula_holds = false;   // chi = t^l - Psi(R,1,t)
    PsiPolynomial psi_residue;    // full bivariate value
    LaurentZ g;                   // G(Y) = t^l - Psi(R,1,t)
};

struct VerificationReport {
    int ambient_dim = 0;
    int codim = 0;
    std::vector<int> ci_degrees;
    std::vector<NodeResult> nodes;         // ordered by (dim desc, key)
    bool hypothesis_holds = false;         // Psi(R,1,1) = 1 at every Y != V
    bool formula_all_nodes = false;
    bool theorem_consistent = true;        // hypothesis => formula everywhere
    double elapsed_seconds = 0.0;
    unsigned long seed = 0;
    int coeff_bound = 0;
    bool ci_user_supplied = false;
};

namespace detail {

// Per-node work items run concurrently; the shared complete intersection is
// warmed up front so concurrent reads never touch a cold cache.
inline NodeResult verify_lattice_node(const Arrangement& A, const CIData& C,
                                      const LatticeNode& node) {
    const LaurentZ tl = LaurentZ::monomial(A.ambient_dim(), 1);
    Arrangement XY = subarrangement_at(A, node.space);
    LogformAnalysis an = analyze_logforms(XY, C);

    NodeResult r;
    r.dim = node.dim;
    r.num_components = static_cast<int>(XY.size());
    r.key = node.space.key();
    r.chi = XY.empty() ? tl : characteristic_polynomial(XY);
    r.psi_residue = an.psi_residue;
    r.psi_residue_at_1 = an.psi_residue.eval_x1();
    r.condition_value = an.psi_residue.eval_x1_t1();
    r.g = tl - r.psi_residue_at_1;
    r.formula_holds = (r.chi == r.g);
    return r;
}

}  // namespace detail

// Walks the whole intersection lattice with one fixed complete intersection
// C (containing X, hence every X_Y) and evaluates the generalized
// Solomon-Terao formula at every node. Nodes are verified concurrently; the
// report is assembled in lattice order (dimension descending, canonical key).
inline VerificationReport verify_solomon_terao(const Arrangement& A, const CIData& C) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.ambient_dim = A.ambient_dim();
    rep.codim = C.codim();
    rep.ci_degrees = C.degrees;
    rep.seed = C.seed;
    rep.coeff_bound = C.coeff_bound;
    rep.ci_user_supplied = C.user_supplied;

    IntersectionLattice L(A);
    C.ideal.groebner_basis();  // immutable and shareable once computed

    std::vector<std::future<NodeResult>> pending;
    for (int i = 0; i < L.size(); ++i)
        pending.push_back(std::async(std::launch::async, [&A, &C, &L, i] {
            return detail::verify_lattice_node(A, C, L.node(i));
        }));

    rep.hypothesis_holds = true;
    rep.formula_all_nodes = true;
    for (auto& f : pending) {
        NodeResult r = f.get();
        if (r.num_components > 0 && r.condition_value != 1) rep.hypothesis_holds = false;
        if (!r.formula_holds) rep.formula_all_nodes = false;
        rep.nodes.push_back(std::move(r));
    }
    // Soundness: the hypothesis forces the formula; a violation
    // can only mean an engine bug.
    rep.theorem_consistent = !(rep.hypothesis_holds && !rep.formula_all_nodes);
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// ---------------------------------------------------------------------------
// Closed forms for complete intersection curves (k = l-1).
// ---------------------------------------------------------------------------

struct CiCurveClosedForms {
    PsiPolynomial psi_log;   // Psi(Omega^bullet(log C), x, t)
    PsiPolynomial psi_res;   // Psi(R_C^bullet, x, t)
    LaurentZ chi;            // t^l - D t + (D - 1), D = d_1 ... d_{l-1}
};

inline CiCurveClosedForms ci_curve_closed_forms(const CIData& C, int l) {
    if (C.codim() != l - 1)
        throw input_error("closed forms require a complete intersection curve (k = l-1)");
    const int d = C.total_degree;

    LaurentZ prod_one_minus = LaurentZ::one();
    LaurentZ prod_geo = LaurentZ::one();
    Integer D = 1;
    for (int di : C.degrees) {
        prod_one_minus = prod_one_minus * LaurentZ::one_minus_power(di);
        prod_geo = prod_geo * LaurentZ::geometric(di);
        D *= di;
    }

    CiCurveClosedForms out;
    // Psi of the Koszul family: t^l x^-d (1 - prod(1 - x^(d_i)))
    PsiPolynomial psi_koszul =
        PsiPolynomial::t_power(l, (LaurentZ::one() - prod_one_minus).shifted(-d));
    // Psi of the residues: 1 + x^(l-d-1) (t-1) prod(1 + x + ... + x^(d_i - 1))
    LaurentZ block = prod_geo.shifted(l - d - 1);
    out.psi_res = PsiPolynomial::constant(LaurentZ::one() - block) +
                  PsiPolynomial::t_power(1, block);
    out.psi_log = psi_koszul +
                  out.psi_res.times_u_power(l - 1) * LaurentZ::monomial(-(l - 1), 1);
    out.chi = LaurentZ::monomial(l, 1) - LaurentZ::monomial(1, D) + LaurentZ::monomial(0, D - 1);
    return out;
}

// ---------------------------------------------------------------------------
// Independent oracle for singular line arrangements: the residue series from
// the ideal of the complementary components of C.
// ---------------------------------------------------------------------------

struct LineResidueOracle {
    HilbertSeries r0;  // Poin(R_X, x)   = x^(l-d) Poin(I_Y/I_C, x) + 1
    HilbertSeries r1;  // Poin(R_X^1, x) = x^(l-d-1) Poin(I_Y/I_C, x)
};

inline LineResidueOracle line_residue_oracle(const Arrangement& A, const CIData& C) {
    const int l = A.ambient_dim();
    if (A.empty() || A.codim() != l - 1)
        throw input_error("line residue oracle requires a line arrangement");
    if (A.size() < 2)
        throw input_error("line residue oracle requires a singular arrangement (>= 2 lines)");

    std::vector<LinearSubspace> rest;
    for (const LinearSubspace& c : C.components) {
        bool in_x = false;
        for (const LinearSubspace& x : A.components())
            if (c == x) in_x = true;
        if (!in_x) rest.push_back(c);
    }
    if (rest.empty())
        throw input_error(
            "X equals C: the quotient route degenerates, use the complete intersection "
            "closed forms instead");

    Ideal IY = rest[0].linear_ideal();
    for (std::size_t i = 1; i < rest.size(); ++i)
        IY = ideal_intersect(IY, rest[i].linear_ideal());

    HilbertSeries bar_IY = hilbert_series_of_ideal(IY) - hilbert_series_of_ideal(C.ideal);
    const int d = C.total_degree;
    LineResidueOracle out;
    out.r0 = bar_IY.shifted(l - d) + HilbertSeries::constant(1);
    out.r1 = bar_IY.shifted(l - d - 1);
    return out;
}

// ---------------------------------------------------------------------------
// The four conditions of the characteristic-polynomial criterion, evaluated
// on G(Y) = t^l - Psi(R_{X_Y}, 1, t).
// ---------------------------------------------------------------------------

struct CharacterizationDiagnostics {
    bool a_holds = false;  // G(V) = t^l
    bool b_holds = false;  // G(Y)|_{t=1} = 0 for Y != V
    bool c_holds = false;  // t^dim(Y) divides G(Y)
    bool d_holds = false;  // deg_t sum_{Z <= Y} mu(Z,Y) G(Z) <= dim Y
    std::vector<LaurentZ> g;  // per lattice node, same order as the report
};

inline CharacterizationDiagnostics characterization_diagnostics(const Arrangement& A,
                                                                const CIData& C) {
    const int l = A.ambient_dim();
    const LaurentZ tl = LaurentZ::monomial(l, 1);
    IntersectionLattice L(A);

    CharacterizationDiagnostics diag;
    for (int i = 0; i < L.size(); ++i) {
        Arrangement XY = subarrangement_at(A, L.node(i).space);
        LogformAnalysis an = analyze_logforms(XY, C);
        diag.g.push_back(tl - an.psi_residue.eval_x1());
    }

    diag.a_holds = (diag.g[0] == tl);
    diag.b_holds = true;
    diag.c_holds = true;
    diag.d_holds = true;
    for (int y = 0; y < L.size(); ++y) {
        const LaurentZ& g = diag.g[y];
        if (y != 0 && g.eval_one() != 0) diag.b_holds = false;
        if (!g.is_zero() && g.min_exp() < L.node(y).dim) diag.c_holds = false;
        LaurentZ sum;
        for (int z = 0; z < L.size(); ++z)
            if (L.leq(z, y)) sum += diag.g[z] * L.interval_mobius(z, y);
        if (!sum.is_zero() && sum.max_exp() > L.node(y).dim) diag.d_holds = false;
    }
    return diag;
}

}  // namespace logres
