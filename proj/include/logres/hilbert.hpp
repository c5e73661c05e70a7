#pragma once

#include <vector>

#include "logres/groebner.hpp"
#include "logres/laurent.hpp"

namespace logres {

namespace detail {

inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            if (gens[j].divides(gens[i]) && !(gens[i] == gens[j] && j > i)) redundant = true;
        }
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

// Numerator K(x) of Poin(S/I, x) = K(x) / (1-x)^l for a monomial ideal I,
// by pivot splitting: K(I) = K(I + (x_v)) + x * K(I : x_v).
inline LaurentZ quotient_numerator(std::vector<Monomial> gens, int nvars) {
    gens = minimalize_monomials(std::move(gens));
    if (gens.empty()) return LaurentZ::one();
    for (const Monomial& m : gens)
        if (m.is_one()) return LaurentZ::zero();

    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
            if (!Monomial::coprime(gens[i], gens[j])) coprime = false;
    if (coprime) {
        LaurentZ k = LaurentZ::one();
        for (const Monomial& m : gens) k = k * LaurentZ::one_minus_power(m.degree());
        return k;
    }

    // most frequent variable
    std::vector<int> freq(nvars, 0);
    for (const Monomial& m : gens)
        for (int v = 0; v < nvars; ++v)
            if (m[v] > 0) ++freq[v];
    int pivot = 0;
    for (int v = 1; v < nvars; ++v)
        if (freq[v] > freq[pivot]) pivot = v;

    std::vector<Monomial> plus = gens;
    plus.push_back(Monomial::variable(nvars, pivot));
    std::vector<Monomial> colon;
    for (const Monomial& m : gens) {
        std::vector<int> e = m.exponents();
        if (e[pivot] > 0) e[pivot] -= 1;
        colon.push_back(Monomial(std::move(e)));
    }
    return quotient_numerator(std::move(plus), nvars) +
           quotient_numerator(std::move(colon), nvars).shifted(1);
}

}  // namespace detail

// Hilbert-Poincare series of a homogeneous submodule M of a shifted free
// module, computed from the leading-term module and shifted by x^offset.
inline HilbertSeries hilbert_series_of_submodule(
    const Submodule& M, int offset = 0, const MonomialOrder& ord = MonomialOrder::degrevlex()) {
    if (M.is_zero_module()) return HilbertSeries::zero();
    if (!M.is_homogeneous()) throw input_error("hilbert series of inhomogeneous module");
    const int l = M.nvars();
    std::vector<std::vector<Monomial>> lead_by_pos(M.rank());
    for (const ModVec& v : M.groebner_basis(ord)) lead_by_pos[v.lead().pos].push_back(v.lead().mono);
    LaurentZ num;
    for (int j = 0; j < M.rank(); ++j) {
        if (lead_by_pos[j].empty()) continue;
        LaurentZ k = detail::quotient_numerator(lead_by_pos[j], l);
        num += (LaurentZ::one() - k).shifted(M.shifts()[j]);
    }
    return HilbertSeries(num.shifted(offset), l);
}

inline HilbertSeries hilbert_series_of_ideal(const Ideal& I, int offset = 0,
                                             const MonomialOrder& ord = MonomialOrder::degrevlex()) {
    std::vector<FreeModuleElement> gens;
    for (const Poly& f : I.generators()) gens.push_back(FreeModuleElement({f}));
    return hilbert_series_of_submodule(Submodule(I.nvars(), {0}, gens), offset, ord);
}

// Series of the ambient shifted free module S^r.
inline HilbertSeries hilbert_series_of_free(int nvars, const std::vector<int>& shifts,
                                            int offset = 0) {
    LaurentZ num;
    for (int s : shifts) num += LaurentZ::monomial(s, 1);
    return HilbertSeries(num.shifted(offset), nvars);
}

// Series of the quotient (free ambient) / M.
inline HilbertSeries hilbert_series_of_quotient(const Submodule& M, int offset = 0) {
    return hilbert_series_of_free(M.nvars(), M.shifts(), offset) -
           hilbert_series_of_submodule(M, offset);
}

}  // namespace logres
