#pragma once

#include <map>
#include <vector>

#include "logres/hilbert.hpp"

namespace logres {

// Minimal generating set of a homogeneous submodule: generators whose images
// form a basis of M / mM (graded Nakayama). Candidates are processed in
// ascending degree; g is redundant iff it lies in mM + <kept so far>.
inline std::vector<FreeModuleElement> minimal_generators(const Submodule& M) {
    if (!M.is_homogeneous()) throw input_error("minimal_generators: inhomogeneous module");
    if (M.is_zero_module()) return {};
    const int n = M.nvars();

    std::vector<FreeModuleElement> sorted = M.generators();
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](const FreeModuleElement& a, const FreeModuleElement& b) {
                         return a.degree(M.shifts()) < b.degree(M.shifts());
                     });

    std::vector<FreeModuleElement> mm;  // generators of m * M
    for (const FreeModuleElement& g : sorted)
        for (int v = 0; v < n; ++v) mm.push_back(g * Poly::variable(n, v));

    std::vector<FreeModuleElement> kept;
    for (const FreeModuleElement& g : sorted) {
        std::vector<FreeModuleElement> test = mm;
        test.insert(test.end(), kept.begin(), kept.end());
        Submodule T(n, M.shifts(), std::move(test));
        if (!T.contains(g)) kept.push_back(g);
    }
    return kept;
}

// Graded free resolution  0 <- M <- F_0 <- F_1 <- ...  Step j records the
// internal generator degrees of F_j and the matrix F_j -> F_{j-1} (columns as
// elements of F_{j-1}; for j = 0 the columns live in the ambient module).
struct FreeResolution {
    struct Step {
        std::vector<int> degrees;                 // sorted ascending
        std::vector<FreeModuleElement> columns;   // one per generator
    };
    int nvars = 0;
    std::vector<int> ambient_shifts;
    std::vector<Step> steps;

    int length() const { return static_cast<int>(steps.size()); }

    // Betti multiset of step j in the displayed convention S(d - e).
    std::map<int, int> betti(int j, int degree_twist) const {
        std::map<int, int> b;
        for (int e : steps[j].degrees) b[degree_twist - e] += 1;
        return b;
    }
};

inline FreeResolution minimal_free_resolution(const Submodule& M) {
    FreeResolution res;
    res.nvars = M.nvars();
    res.ambient_shifts = M.shifts();

    std::vector<int> shifts = M.shifts();
    std::vector<FreeModuleElement> gens = minimal_generators(M);
    while (!gens.empty()) {
        FreeResolution::Step step;
        for (const FreeModuleElement& g : gens) step.degrees.push_back(g.degree(shifts));
        step.columns = gens;
        // no unit entries in a minimal resolution
        if (res.length() > 0)
            for (const FreeModuleElement& g : gens)
                for (const Poly& c : g.comps)
                    if (!c.is_zero() && c.degree() == 0)
                        throw internal_error("unit entry in minimal resolution matrix");
        std::vector<int> next_shifts = step.degrees;
        std::sort(step.degrees.begin(), step.degrees.end());
        res.steps.push_back(std::move(step));
        if (res.length() > res.nvars + 1)
            throw internal_error("resolution exceeds the ambient variable count");

        Submodule syz = syzygies_of(res.nvars, shifts, gens);
        shifts = std::move(next_shifts);
        gens = syz.is_zero_module() ? std::vector<FreeModuleElement>{} : minimal_generators(syz);
    }
    return res;
}

inline FreeResolution minimal_free_resolution(const Ideal& I) {
    std::vector<FreeModuleElement> gens;
    for (const Poly& f : I.generators()) gens.push_back(FreeModuleElement({f}));
    return minimal_free_resolution(Submodule(I.nvars(), {0}, gens));
}

// Alternating sum over the resolution steps; equals the series of the
// resolved module.
inline HilbertSeries series_from_resolution(const FreeResolution& R, int nvars, int offset = 0) {
    LaurentZ num;
    int sign = 1;
    for (const FreeResolution::Step& step : R.steps) {
        for (int e : step.degrees) num += LaurentZ::monomial(e, sign);
        sign = -sign;
    }
    return HilbertSeries(num.shifted(offset), nvars);
}

// Composing consecutive matrices gives zero; used as a test oracle.
inline bool resolution_composes_to_zero(const FreeResolution& R) {
    for (std::size_t j = 1; j < R.steps.size(); ++j) {
        const auto& cols = R.steps[j].columns;        // elements of F_{j-1}
        const auto& prev = R.steps[j - 1].columns;    // elements of F_{j-2} / ambient
        for (const FreeModuleElement& c : cols) {
            FreeModuleElement acc =
                FreeModuleElement::zero(R.nvars, prev.empty() ? 0 : prev[0].rank());
            for (std::size_t i = 0; i < prev.size(); ++i) acc = acc + prev[i] * c.comps[i];
            if (!acc.is_zero()) return false;
        }
    }
    return true;
}

}  // namespace logres
