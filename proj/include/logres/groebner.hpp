#pragma once

#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "logres/free_module.hpp"

namespace logres {
namespace gb {

// Reducer lookup table: basis indices grouped by leading position.
struct LeadIndex {
    std::vector<std::vector<int>> by_pos;

    explicit LeadIndex(int rank) : by_pos(rank) {}
    void add(const std::vector<ModVec>& basis, int i) {
        by_pos[basis[i].lead().pos].push_back(i);
    }
    const ModVec* find(const std::vector<ModVec>& basis, const ModTerm& t) const {
        for (int i : by_pos[t.pos]) {
            if (basis[i].is_zero()) continue;
            if (basis[i].lead().mono.divides(t.mono)) return &basis[i];
        }
        return nullptr;
    }
};

inline ModVec normal_form_indexed(ModVec p, const std::vector<ModVec>& basis,
                                  const LeadIndex& index, const ModuleOrder& ord) {
    ModVec rem;
    while (!p.is_zero()) {
        const ModTerm& lt = p.lead();
        const ModVec* reducer = index.find(basis, lt);
        if (reducer) {
            p = ModVec::sub_mult(p, reducer->lead().mono.divide_into(lt.mono), lt.coeff, *reducer,
                                 ord);
        } else {
            rem.terms.push_back(lt);
            p.terms.erase(p.terms.begin());
        }
    }
    return rem;
}

// Full normal form: no term of the result is divisible by any leading term
// of the basis. Basis elements are assumed monic.
inline ModVec normal_form(ModVec p, const std::vector<ModVec>& basis, const ModuleOrder& ord) {
    LeadIndex index(ord.rank());
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
        if (!basis[i].is_zero()) index.add(basis, i);
    return normal_form_indexed(std::move(p), basis, index, ord);
}

// S-vector of two monic elements with leading terms at the same position.
inline ModVec s_vector(const ModVec& f, const ModVec& g, const ModuleOrder& ord) {
    const ModTerm& lf = f.lead();
    const ModTerm& lg = g.lead();
    Monomial L = Monomial::lcm(lf.mono, lg.mono);
    ModVec a = f.times_term(lf.mono.divide_into(L), 1);
    ModVec b = g.times_term(lg.mono.divide_into(L), 1);
    return ModVec::add(a, b.times_term(Monomial(lf.mono.nvars()), -1), ord);
}

// Buchberger with normal pair selection (minimal lcm degree first,
// deterministic index tie-break), the product criterion (rank one) and the
// chain criterion. Returns the reduced monic basis, sorted ascending by
// leading term; canonical for the order.
inline std::vector<ModVec> buchberger(std::vector<ModVec> basis, const ModuleOrder& ord) {
    std::erase_if(basis, [](const ModVec& v) { return v.is_zero(); });
    for (ModVec& v : basis) v.make_monic();

    const bool rank_one = ord.rank() == 1 && ord.front == 0;
    LeadIndex index(ord.rank());
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) index.add(basis, i);

    // (lcm shifted degree, i, j)
    std::set<std::tuple<int, int, int>> queue;
    std::set<std::pair<int, int>> treated;
    auto push_pairs = [&](int j) {
        const ModTerm& lj = basis[j].lead();
        for (int i = 0; i < j; ++i) {
            const ModTerm& li = basis[i].lead();
            if (li.pos != lj.pos) continue;
            Monomial L = Monomial::lcm(li.mono, lj.mono);
            queue.insert({L.degree() + ord.shifts[li.pos], i, j});
        }
    };
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

    auto is_treated = [&](int a, int b) {
        return treated.count({std::min(a, b), std::max(a, b)}) > 0;
    };

    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        treated.insert({i, j});
        const ModTerm& li = basis[i].lead();
        const ModTerm& lj = basis[j].lead();
        // Product criterion (valid in the rank-one case only).
        if (rank_one && Monomial::coprime(li.mono, lj.mono)) continue;
        // Chain criterion: some k divides the lcm and both flanking pairs
        // were already treated.
        Monomial L = Monomial::lcm(li.mono, lj.mono);
        bool skip = false;
        for (int k : index.by_pos[li.pos]) {
            if (k == i || k == j) continue;
            if (basis[k].lead().mono.divides(L) && is_treated(i, k) && is_treated(j, k)) {
                skip = true;
                break;
            }
        }
        if (skip) continue;
        ModVec r = normal_form_indexed(s_vector(basis[i], basis[j], ord), basis, index, ord);
        if (!r.is_zero()) {
            r.make_monic();
            basis.push_back(std::move(r));
            index.add(basis, static_cast<int>(basis.size()) - 1);
            push_pairs(static_cast<int>(basis.size()) - 1);
        }
    }

    // Auto-reduce: drop elements whose lead is divisible by another lead,
    // then tail-reduce the survivors.
    std::vector<ModVec> kept;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const ModTerm& a = basis[i].lead();
            const ModTerm& b = basis[j].lead();
            if (a.pos == b.pos && b.mono.divides(a.mono) &&
                !(a.mono == b.mono && j > i))  // between equal leads keep the first
                redundant = true;
        }
        if (!redundant) kept.push_back(basis[i]);
    }
    std::vector<ModVec> reduced;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<ModVec> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        ModVec r = normal_form(kept[i], others, ord);
        if (!r.is_zero()) {
            r.make_monic();
            reduced.push_back(std::move(r));
        }
    }
    std::sort(reduced.begin(), reduced.end(), [&](const ModVec& a, const ModVec& b) {
        return ord.compare(a.lead(), b.lead()) < 0;
    });
    return reduced;
}

}  // namespace gb

// ---------------------------------------------------------------------------
// Ideal: finitely generated ideal of S with a cached reduced Groebner basis.
// ---------------------------------------------------------------------------

class Ideal {
public:
    Ideal() = default;
    Ideal(int nvars, std::vector<Poly> gens) : nvars_(nvars), gens_(std::move(gens)) {
        std::erase_if(gens_, [](const Poly& p) { return p.is_zero(); });
        for (const Poly& p : gens_)
            if (p.nvars() != nvars_) throw input_error("ideal generator ring mismatch");
    }

    int nvars() const { return nvars_; }
    const std::vector<Poly>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    bool is_homogeneous() const {
        for (const Poly& p : gens_)
            if (!p.is_homogeneous()) return false;
        return true;
    }

    const std::vector<Poly>& groebner_basis(
        const MonomialOrder& ord = MonomialOrder::degrevlex()) const {
        if (!gb_ || gb_ord_ != ord) {
            ModuleOrder mord{ord, {0}, 0};
            std::vector<ModVec> in;
            for (const Poly& p : gens_)
                in.push_back(ModVec::from_element(FreeModuleElement({p}), mord));
            std::vector<ModVec> out = gb::buchberger(std::move(in), mord);
            std::vector<Poly> res;
            for (const ModVec& v : out) res.push_back(v.to_element(nvars_, 1).comps[0]);
            gb_ = std::move(res);
            gb_ord_ = ord;
        }
        return *gb_;
    }

    Poly normal_form(const Poly& f, const MonomialOrder& ord = MonomialOrder::degrevlex()) const {
        if (f.nvars() != nvars_) throw input_error("normal_form: ring mismatch");
        ModuleOrder mord{ord, {0}, 0};
        std::vector<ModVec> basis;
        for (const Poly& p : groebner_basis(ord))
            basis.push_back(ModVec::from_element(FreeModuleElement({p}), mord));
        ModVec r = gb::normal_form(ModVec::from_element(FreeModuleElement({f}), mord), basis, mord);
        return r.to_element(nvars_, 1).comps[0];
    }

    bool contains(const Poly& f) const { return normal_form(f).is_zero(); }

    bool contains_ideal(const Ideal& other) const {
        for (const Poly& g : other.gens_)
            if (!contains(g)) return false;
        return true;
    }

    bool equals(const Ideal& other) const {
        return contains_ideal(other) && other.contains_ideal(*this);
    }

    // Krull dimension of S/I, computed from the leading-term ideal: the
    // largest size of a variable subset meeting the support of no leading
    // term. Returns -1 for the unit ideal.
    int dimension() const {
        if (gens_.empty()) return nvars_;
        std::vector<Monomial> lts;
        for (const Poly& p : groebner_basis()) {
            if (p.is_constant()) return -1;
            lts.push_back(p.leading_term().mono);
        }
        int best = -1;
        for (unsigned mask = 0; mask < (1u << nvars_); ++mask) {
            bool ok = true;
            for (const Monomial& m : lts) {
                bool inside = true;
                for (int i = 0; i < nvars_ && inside; ++i)
                    if (m[i] > 0 && !(mask >> i & 1u)) inside = false;
                if (inside) {
                    ok = false;
                    break;
                }
            }
            if (ok) best = std::max(best, __builtin_popcount(mask));
        }
        return best;
    }

    int codimension() const { return nvars_ - dimension(); }

private:
    int nvars_ = 0;
    std::vector<Poly> gens_;
    mutable std::optional<std::vector<Poly>> gb_;
    mutable MonomialOrder gb_ord_;
};

// I cap J via the single auxiliary variable trick: eliminate u from
// u*I + (1-u)*J with u as its own leading elimination block.
inline Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
    if (I.nvars() != J.nvars()) throw input_error("ideal_intersect: ring mismatch");
    const int n = I.nvars();
    if (I.is_zero() || J.is_zero()) return Ideal(n, {});

    auto lift = [&](const Poly& p) {
        // u becomes variable 0; x_i shifts to slot i+1.
        Poly q(n + 1);
        for (const Term& t : p.terms()) {
            std::vector<int> e(n + 1, 0);
            for (int i = 0; i < n; ++i) e[i + 1] = t.mono[i];
            q += Poly(Monomial(std::move(e)), t.coeff);
        }
        return q;
    };
    Poly u = Poly::variable(n + 1, 0);
    Poly one_minus_u = Poly::constant(n + 1, 1) - u;
    std::vector<Poly> gens;
    for (const Poly& f : I.generators()) gens.push_back(u * lift(f));
    for (const Poly& g : J.generators()) gens.push_back(one_minus_u * lift(g));

    Ideal big(n + 1, std::move(gens));
    std::vector<Poly> result;
    for (const Poly& p : big.groebner_basis(MonomialOrder::elimination(1))) {
        bool has_u = false;
        for (const Term& t : p.terms())
            if (t.mono[0] > 0) has_u = true;
        if (has_u) continue;
        Poly q(n);
        for (const Term& t : p.terms()) {
            std::vector<int> e(n);
            for (int i = 0; i < n; ++i) e[i] = t.mono[i + 1];
            q += Poly(Monomial(std::move(e)), t.coeff);
        }
        result.push_back(std::move(q));
    }
    return Ideal(n, std::move(result));
}

// ---------------------------------------------------------------------------
// Submodule of a shifted free module S^r.
// ---------------------------------------------------------------------------

class Submodule {
public:
    Submodule() = default;
    Submodule(int nvars, std::vector<int> shifts, std::vector<FreeModuleElement> gens)
        : nvars_(nvars), shifts_(std::move(shifts)), gens_(std::move(gens)) {
        std::erase_if(gens_, [](const FreeModuleElement& e) { return e.is_zero(); });
        for (const FreeModuleElement& e : gens_)
            if (e.rank() != rank()) throw input_error("submodule generator rank mismatch");
    }

    static Submodule full(int nvars, std::vector<int> shifts) {
        std::vector<FreeModuleElement> gens;
        for (int j = 0; j < static_cast<int>(shifts.size()); ++j)
            gens.push_back(FreeModuleElement::unit(nvars, static_cast<int>(shifts.size()), j));
        return Submodule(nvars, std::move(shifts), std::move(gens));
    }

    int nvars() const { return nvars_; }
    int rank() const { return static_cast<int>(shifts_.size()); }
    const std::vector<int>& shifts() const { return shifts_; }
    const std::vector<FreeModuleElement>& generators() const { return gens_; }
    bool is_zero_module() const { return gens_.empty(); }

    bool is_homogeneous() const {
        for (const FreeModuleElement& e : gens_)
            if (!e.is_homogeneous(shifts_)) return false;
        return true;
    }

    ModuleOrder module_order(const MonomialOrder& base = MonomialOrder::degrevlex()) const {
        return ModuleOrder{base, shifts_, 0};
    }

    const std::vector<ModVec>& groebner_basis(
        const MonomialOrder& base = MonomialOrder::degrevlex()) const {
        if (!gb_ || gb_ord_ != base) {
            ModuleOrder ord = module_order(base);
            std::vector<ModVec> in;
            for (const FreeModuleElement& e : gens_) in.push_back(ModVec::from_element(e, ord));
            gb_ = gb::buchberger(std::move(in), ord);
            gb_ord_ = base;
        }
        return *gb_;
    }

    std::vector<FreeModuleElement> groebner_basis_elements(
        const MonomialOrder& base = MonomialOrder::degrevlex()) const {
        std::vector<FreeModuleElement> out;
        for (const ModVec& v : groebner_basis(base)) out.push_back(v.to_element(nvars_, rank()));
        return out;
    }

    FreeModuleElement normal_form(const FreeModuleElement& e,
                                  const MonomialOrder& base = MonomialOrder::degrevlex()) const {
        if (e.rank() != rank()) throw input_error("normal_form: ambient mismatch");
        ModuleOrder ord = module_order(base);
        ModVec r = gb::normal_form(ModVec::from_element(e, ord), groebner_basis(base), ord);
        return r.to_element(nvars_, rank());
    }

    bool contains(const FreeModuleElement& e) const { return normal_form(e).is_zero(); }

    bool contains_module(const Submodule& other) const {
        for (const FreeModuleElement& g : other.gens_)
            if (!contains(g)) return false;
        return true;
    }

    bool equals(const Submodule& other) const {
        return contains_module(other) && other.contains_module(*this);
    }

private:
    int nvars_ = 0;
    std::vector<int> shifts_;
    std::vector<FreeModuleElement> gens_;
    mutable std::optional<std::vector<ModVec>> gb_;
    mutable MonomialOrder gb_ord_;
};

inline Submodule ideal_times_free(const Ideal& I, const std::vector<int>& shifts) {
    std::vector<FreeModuleElement> gens;
    const int r = static_cast<int>(shifts.size());
    for (int j = 0; j < r; ++j)
        for (const Poly& f : I.generators()) {
            FreeModuleElement e = FreeModuleElement::zero(I.nvars(), r);
            e.comps[j] = f;
            gens.push_back(std::move(e));
        }
    return Submodule(I.nvars(), shifts, std::move(gens));
}

// ---------------------------------------------------------------------------
// Syzygies. Computed by an elimination order on S^r (+) S^m: the ambient
// positions dominate, so basis elements with vanishing ambient part have
// leads in the syzygy block and generate the first syzygy module of the
// given generating set.
// ---------------------------------------------------------------------------

// Generators of { u in S^m : sum_i u_i images[i] lies in <quotient> }. The
// images carry tracking coordinates; the quotient generators do not, so
// their internal syzygies never materialize.
inline Submodule membership_lift_kernel(int nvars, const std::vector<int>& target_shifts,
                                        const std::vector<FreeModuleElement>& images,
                                        const std::vector<int>& coord_shifts,
                                        const std::vector<FreeModuleElement>& quotient,
                                        const MonomialOrder& base = MonomialOrder::degrevlex()) {
    const int r = static_cast<int>(target_shifts.size());
    const int m = static_cast<int>(images.size());
    std::vector<int> ext_shifts = target_shifts;
    ext_shifts.insert(ext_shifts.end(), coord_shifts.begin(), coord_shifts.end());
    ModuleOrder ord{base, ext_shifts, r};

    std::vector<ModVec> in;
    for (int i = 0; i < m; ++i) {
        FreeModuleElement e = FreeModuleElement::zero(nvars, r + m);
        for (int j = 0; j < r; ++j) e.comps[j] = images[i].comps[j];
        e.comps[r + i] = Poly::constant(nvars, 1);
        in.push_back(ModVec::from_element(e, ord));
    }
    for (const FreeModuleElement& q : quotient) {
        FreeModuleElement e = FreeModuleElement::zero(nvars, r + m);
        for (int j = 0; j < r; ++j) e.comps[j] = q.comps[j];
        in.push_back(ModVec::from_element(e, ord));
    }
    std::vector<ModVec> out = gb::buchberger(std::move(in), ord);

    std::vector<FreeModuleElement> syz;
    for (const ModVec& v : out) {
        if (v.is_zero() || v.lead().pos < r) continue;  // target part nonzero
        FreeModuleElement full = v.to_element(nvars, r + m);
        FreeModuleElement proj = FreeModuleElement::zero(nvars, m);
        for (int i = 0; i < m; ++i) proj.comps[i] = full.comps[r + i];
        syz.push_back(std::move(proj));
    }
    return Submodule(nvars, coord_shifts, std::move(syz));
}

// First syzygies of an explicit list of generators. The result lives in S^m
// with the induced shifts (the internal degrees of the generators); for
// inhomogeneous input the induced shifts are zero.
inline Submodule syzygies_of(int nvars, const std::vector<int>& shifts,
                             const std::vector<FreeModuleElement>& gens,
                             const MonomialOrder& base = MonomialOrder::degrevlex()) {
    const int m = static_cast<int>(gens.size());
    std::vector<int> syz_shifts(m, 0);
    bool graded = true;
    for (const FreeModuleElement& g : gens)
        if (!g.is_homogeneous(shifts)) graded = false;
    if (graded)
        for (int i = 0; i < m; ++i) syz_shifts[i] = gens[i].is_zero() ? 0 : gens[i].degree(shifts);
    return membership_lift_kernel(nvars, shifts, gens, syz_shifts, {}, base);
}

inline Submodule syzygies(const Submodule& M, const MonomialOrder& base = MonomialOrder::degrevlex()) {
    return syzygies_of(M.nvars(), M.shifts(), M.generators(), base);
}

inline Submodule syzygies(const Ideal& I, const MonomialOrder& base = MonomialOrder::degrevlex()) {
    std::vector<FreeModuleElement> gens;
    for (const Poly& f : I.generators()) gens.push_back(FreeModuleElement({f}));
    return syzygies_of(I.nvars(), {0}, gens, base);
}

// ---------------------------------------------------------------------------
// Preimage kernels: { a in S^r : M_c a in N_c for every constraint c }.
// ---------------------------------------------------------------------------

// One linear constraint: a polynomial matrix into a shifted free module
// together with the target quotient submodule. A scalar constraint is the
// diagonal map a |-> f a into (S/I)^ambient; it acts componentwise, which
// the kernel computation exploits.
struct KernelConstraint {
    std::optional<Poly> scalar_multiplier;
    Ideal scalar_quotient;

    std::vector<int> target_shifts;
    std::vector<std::vector<Poly>> matrix;  // target_rank x ambient_rank
    std::vector<FreeModuleElement> quotient_gens;

    static KernelConstraint scalar(const Poly& f, const Ideal& quotient) {
        KernelConstraint c;
        c.scalar_multiplier = f;
        c.scalar_quotient = quotient;
        return c;
    }

    static KernelConstraint linear_map(std::vector<std::vector<Poly>> m,
                                       std::vector<int> target_shifts,
                                       std::vector<FreeModuleElement> quotient) {
        KernelConstraint c;
        c.matrix = std::move(m);
        c.target_shifts = std::move(target_shifts);
        c.quotient_gens = std::move(quotient);
        return c;
    }

    FreeModuleElement apply(const FreeModuleElement& a, int nvars) const {
        const int tr = static_cast<int>(target_shifts.size());
        FreeModuleElement out = FreeModuleElement::zero(nvars, tr);
        for (int j = 0; j < tr; ++j)
            for (int i = 0; i < a.rank(); ++i)
                if (!matrix[j][i].is_zero() && !a.comps[i].is_zero())
                    out.comps[j] += matrix[j][i] * a.comps[i];
        return out;
    }
};

namespace detail {

// { a in S : f a in I } for each (f, I) pair in turn, accumulated as a
// rank-one kernel. Returns a Groebner basis of the resulting ideal.
inline std::vector<Poly> scalar_colon_kernel(
    int nvars, const std::vector<std::pair<const Poly*, const Ideal*>>& pairs,
    const MonomialOrder& base) {
    std::vector<Poly> gens = {Poly::constant(nvars, 1)};
    for (const auto& [f, I] : pairs) {
        if (I->contains(*f)) continue;  // the constraint is vacuous
        std::vector<FreeModuleElement> images;
        std::vector<int> coord_shifts;
        for (const Poly& g : gens) {
            Poly img = g * (*f);
            coord_shifts.push_back(img.is_zero() ? 0 : img.degree());
            images.push_back(FreeModuleElement({std::move(img)}));
        }
        std::vector<FreeModuleElement> quotient;
        for (const Poly& q : I->generators()) quotient.push_back(FreeModuleElement({q}));
        Submodule syz = membership_lift_kernel(nvars, {0}, images, coord_shifts, quotient, base);

        std::vector<Poly> lifted;
        for (const FreeModuleElement& s : syz.generators()) {
            Poly a(nvars);
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (!s.comps[i].is_zero()) a += gens[i] * s.comps[i];
            if (!a.is_zero()) lifted.push_back(std::move(a));
        }
        gens = Ideal(nvars, std::move(lifted)).groebner_basis(base);
        if (gens.empty()) break;
    }
    return gens;
}

}  // namespace detail

// Intersects the constraints one at a time. Scalar constraints act
// componentwise and fold into a single rank-one colon computation; every
// matrix constraint stacks the images of the current kernel generators with
// the quotient generators, takes the membership lift in the (small) target
// module and maps the tracking block back. The returned generating set is
// the reduced Groebner basis of the kernel, hence canonical for the order.
inline Submodule preimage_kernel(int nvars, const std::vector<int>& ambient_shifts,
                                 const std::vector<KernelConstraint>& constraints,
                                 const MonomialOrder& base = MonomialOrder::degrevlex()) {
    const int r = static_cast<int>(ambient_shifts.size());

    std::vector<std::pair<const Poly*, const Ideal*>> scalar_pairs;
    for (const KernelConstraint& c : constraints)
        if (c.scalar_multiplier) scalar_pairs.push_back({&*c.scalar_multiplier, &c.scalar_quotient});

    Submodule kernel = Submodule::full(nvars, ambient_shifts);
    if (!scalar_pairs.empty()) {
        std::vector<Poly> colon = detail::scalar_colon_kernel(nvars, scalar_pairs, base);
        std::vector<FreeModuleElement> gens;
        for (int j = 0; j < r; ++j)
            for (const Poly& g : colon) {
                FreeModuleElement e = FreeModuleElement::zero(nvars, r);
                e.comps[j] = g;
                gens.push_back(std::move(e));
            }
        kernel = Submodule(nvars, ambient_shifts, std::move(gens));
    }

    for (const KernelConstraint& c : constraints) {
        if (c.scalar_multiplier) continue;
        for (const FreeModuleElement& q : c.quotient_gens)
            if (!q.is_homogeneous(c.target_shifts))
                throw input_error("preimage_kernel: inhomogeneous quotient generator");
        const std::vector<FreeModuleElement>& kg = kernel.generators();
        if (kg.empty()) break;

        std::vector<FreeModuleElement> images;
        std::vector<int> coord_shifts;
        for (const FreeModuleElement& g : kg) {
            FreeModuleElement img = c.apply(g, nvars);
            if (!img.is_homogeneous(c.target_shifts))
                throw input_error("preimage_kernel: inhomogeneous constraint image");
            coord_shifts.push_back(img.is_zero() ? 0 : img.degree(c.target_shifts));
            images.push_back(std::move(img));
        }
        Submodule syz =
            membership_lift_kernel(nvars, c.target_shifts, images, coord_shifts, c.quotient_gens, base);

        std::vector<FreeModuleElement> lifted;
        for (const FreeModuleElement& s : syz.generators()) {
            FreeModuleElement a = FreeModuleElement::zero(nvars, r);
            for (std::size_t i = 0; i < kg.size(); ++i)
                if (!s.comps[i].is_zero()) a = a + kg[i] * s.comps[i];
            if (!a.is_zero()) lifted.push_back(std::move(a));
        }
        Submodule next(nvars, ambient_shifts, std::move(lifted));
        kernel = Submodule(nvars, ambient_shifts, next.groebner_basis_elements(base));
    }
    Submodule result(nvars, ambient_shifts, kernel.groebner_basis_elements(base));

    // every returned generator satisfies every constraint; a failure here is
    // an engine bug
    for (const KernelConstraint& c : constraints) {
        if (c.scalar_multiplier) {
            for (const FreeModuleElement& g : result.generators())
                for (const Poly& comp : g.comps)
                    if (!comp.is_zero() &&
                        !c.scalar_quotient.contains(comp * (*c.scalar_multiplier)))
                        throw internal_error("preimage kernel generator violates a scalar constraint");
        } else {
            Submodule quotient(nvars, c.target_shifts, c.quotient_gens);
            for (const FreeModuleElement& g : result.generators())
                if (!quotient.contains(c.apply(g, nvars)))
                    throw internal_error("preimage kernel generator violates a matrix constraint");
        }
    }
    return result;
}

}  // namespace logres
