#include <catch2/catch_amalgamated.hpp>

#include "logres/groebner.hpp"
#include "support/test_util.hpp"

using namespace logres;
using logres::testing::Rng;

namespace {

Ideal ideal4(std::initializer_list<const char*> gens) {
    std::vector<Poly> ps;
    for (const char* s : gens) ps.push_back(parse_poly(s, 4));
    return Ideal(4, ps);
}

Ideal ideal(int nvars, std::initializer_list<const char*> gens) {
    std::vector<Poly> ps;
    for (const char* s : gens) ps.push_back(parse_poly(s, nvars));
    return Ideal(nvars, ps);
}

// Buchberger criterion, checked from scratch against the returned basis.
bool all_s_pairs_reduce(const Ideal& I, const MonomialOrder& ord) {
    const auto& basis = I.groebner_basis(ord);
    ModuleOrder mord{ord, {0}, 0};
    std::vector<ModVec> flat;
    for (const Poly& p : basis) flat.push_back(ModVec::from_element(FreeModuleElement({p}), mord));
    for (std::size_t i = 0; i < flat.size(); ++i)
        for (std::size_t j = i + 1; j < flat.size(); ++j) {
            ModVec s = gb::s_vector(flat[i], flat[j], mord);
            if (!gb::normal_form(s, flat, mord).is_zero()) return false;
        }
    return true;
}

}  // namespace

namespace {
bool basis_is(const std::vector<Poly>& basis, std::vector<Poly> expected) {
    if (basis.size() != expected.size()) return false;
    for (const Poly& b : basis) {
        auto it = std::find(expected.begin(), expected.end(), b);
        if (it == expected.end()) return false;
        expected.erase(it);
    }
    return true;
}
}  // namespace

TEST_CASE("groebner basis of a monomial ideal is itself") {
    Ideal I = ideal4({"x*y", "z*t"});
    CHECK(basis_is(I.groebner_basis(), {parse_poly("x*y", 4), parse_poly("z*t", 4)}));
}

TEST_CASE("duplicate generators auto-reduce") {
    Ideal I = ideal(2, {"x", "x"});
    auto basis = I.groebner_basis();
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == parse_poly("x", 2));
}

TEST_CASE("linear system under lex") {
    Ideal I = ideal(2, {"x + y", "x - y"});
    CHECK(basis_is(I.groebner_basis(MonomialOrder::lex()),
                   {parse_poly("x", 2), parse_poly("y", 2)}));
}

TEST_CASE("buchberger criterion holds post-hoc") {
    CHECK(all_s_pairs_reduce(ideal(3, {"x^2 + y^2 - 1", "x*y - 1"}), MonomialOrder::degrevlex()));
    CHECK(all_s_pairs_reduce(ideal(3, {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"}),
                             MonomialOrder::degrevlex()));
    CHECK(all_s_pairs_reduce(ideal(3, {"x^2 - y", "x^3 - x"}), MonomialOrder::lex()));
    Rng rng(512);
    for (int round = 0; round < 8; ++round) {
        Ideal I(2, {testing::random_poly(rng, 2, 3, 3), testing::random_poly(rng, 2, 3, 3)});
        CHECK(all_s_pairs_reduce(I, MonomialOrder::degrevlex()));
    }
}

TEST_CASE("normal forms against the quadric pair") {
    Ideal I = ideal4({"x*y", "z*t"});
    CHECK(I.normal_form(parse_poly("x*y*z", 4)).is_zero());
    CHECK(I.normal_form(parse_poly("x", 4)) == parse_poly("x", 4));
    CHECK(I.normal_form(parse_poly("x*t + z*t", 4)) == parse_poly("x*t", 4));
    SECTION("idempotent on random inputs") {
        Rng rng(5);
        for (int round = 0; round < 10; ++round) {
            Poly f = testing::random_poly(rng, 4, 4, 5);
            Poly r = I.normal_form(f);
            CHECK(I.normal_form(r) == r);
            CHECK(I.contains(f - r));
        }
    }
}

TEST_CASE("normal form ring mismatch") {
    Ideal I = ideal(2, {"x"});
    CHECK_THROWS_AS(I.normal_form(parse_poly("x", 3)), input_error);
}

TEST_CASE("membership certificates reduce to zero") {
    // elements built as explicit combinations a*g1 + b*g2 lie in the ideal
    Rng rng(404);
    Ideal I = ideal(3, {"x*y - z^2", "y^3 + x*z"});
    for (int round = 0; round < 10; ++round) {
        Poly a = testing::random_poly(rng, 3, 2, 3);
        Poly b = testing::random_poly(rng, 3, 2, 3);
        Poly f = a * I.generators()[0] + b * I.generators()[1];
        CHECK(I.normal_form(f).is_zero());
    }
    CHECK_FALSE(I.normal_form(parse_poly("x", 3)).is_zero());
}

TEST_CASE("ideal intersection examples") {
    SECTION("two planes in C^4") {
        Ideal I = ideal4({"x", "z"});
        Ideal J = ideal4({"y", "t"});
        Ideal expected = ideal4({"x*y", "x*t", "y*z", "z*t"});
        CHECK(ideal_intersect(I, J).equals(expected));
    }
    SECTION("self intersection") {
        Ideal I = ideal(3, {"x^2 - y", "z"});
        CHECK(ideal_intersect(I, I).equals(I));
    }
    SECTION("principal ideals meet in the lcm") {
        Ideal I = ideal(2, {"x"});
        Ideal J = ideal(2, {"y"});
        CHECK(ideal_intersect(I, J).equals(ideal(2, {"x*y"})));
    }
}

TEST_CASE("intersection membership on sampled products") {
    Rng rng(31);
    Ideal I = ideal(3, {"x*y - z^2", "y^2"});
    Ideal J = ideal(3, {"x + z", "y*z"});
    Ideal K = ideal_intersect(I, J);
    // two-sided membership on generators
    for (const Poly& g : K.generators()) {
        CHECK(I.contains(g));
        CHECK(J.contains(g));
    }
    for (int round = 0; round < 12; ++round) {
        Poly f = testing::random_poly(rng, 3, 3, 3);
        bool both = I.contains(f) && J.contains(f);
        CHECK(K.contains(f) == both);
    }
}

TEST_CASE("syzygies of a regular sequence are Koszul") {
    Submodule syz = syzygies(ideal4({"x*y", "z*t"}));
    REQUIRE(syz.generators().size() == 1);
    REQUIRE(syz.shifts() == std::vector<int>({2, 2}));
    const FreeModuleElement& s = syz.generators()[0];
    // (zt, -xy) up to sign
    bool direct = s.comps[0] == parse_poly("z*t", 4) && s.comps[1] == -parse_poly("x*y", 4);
    bool flipped = s.comps[0] == -parse_poly("z*t", 4) && s.comps[1] == parse_poly("x*y", 4);
    CHECK((direct || flipped));
    CHECK(s.degree(syz.shifts()) == 4);
}

TEST_CASE("syzygies of a nonzerodivisor vanish") {
    Submodule syz = syzygies(ideal(2, {"x"}));
    CHECK(syz.is_zero_module());
}

TEST_CASE("syzygies of two variables") {
    Submodule syz = syzygies(ideal(2, {"x", "y"}));
    REQUIRE(syz.generators().size() == 1);
    const FreeModuleElement& s = syz.generators()[0];
    bool direct = s.comps[0] == parse_poly("y", 2) && s.comps[1] == -parse_poly("x", 2);
    bool flipped = s.comps[0] == -parse_poly("y", 2) && s.comps[1] == parse_poly("x", 2);
    CHECK((direct || flipped));
}

TEST_CASE("syzygy matrix times generator matrix is zero") {
    Rng rng(222);
    for (int round = 0; round < 6; ++round) {
        std::vector<Poly> gens = {testing::random_poly(rng, 3, 2, 3),
                                  testing::random_poly(rng, 3, 2, 3),
                                  testing::random_poly(rng, 3, 2, 2)};
        Ideal I(3, gens);
        Submodule syz = syzygies(I);
        for (const FreeModuleElement& s : syz.generators()) {
            Poly acc(3);
            for (std::size_t i = 0; i < I.generators().size(); ++i)
                acc += s.comps[i] * I.generators()[i];
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("module groebner basis and membership") {
    // submodule of S^2 generated by (x, y), (y, x)
    std::vector<FreeModuleElement> gens;
    gens.push_back(FreeModuleElement({parse_poly("x", 2), parse_poly("y", 2)}));
    gens.push_back(FreeModuleElement({parse_poly("y", 2), parse_poly("x", 2)}));
    Submodule M(2, {0, 0}, gens);
    CHECK(M.contains(FreeModuleElement({parse_poly("x + y", 2), parse_poly("x + y", 2)})));
    CHECK_FALSE(M.contains(FreeModuleElement({parse_poly("x", 2), parse_poly("x", 2)})));
    FreeModuleElement nf =
        M.normal_form(FreeModuleElement({parse_poly("x", 2), parse_poly("y", 2)}));
    CHECK(nf.is_zero());
}

TEST_CASE("preimage kernel with no constraints is the full module") {
    Submodule K = preimage_kernel(3, {0, 0, 0}, {});
    CHECK(K.rank() == 3);
    CHECK(K.equals(Submodule::full(3, {0, 0, 0})));
}

TEST_CASE("preimage kernel of a scalar constraint is a colon module") {
    // { a in S : x*a in <x^2, y> } = <x, y>
    Ideal target(2, {parse_poly("x^2", 2), parse_poly("y", 2)});
    KernelConstraint c = KernelConstraint::scalar(parse_poly("x", 2), target);
    Submodule K = preimage_kernel(2, {0}, {c});
    Submodule expected(2, {0},
                       {FreeModuleElement({parse_poly("x", 2)}),
                        FreeModuleElement({parse_poly("y", 2)})});
    CHECK(K.equals(expected));
}

TEST_CASE("preimage kernel of a matrix constraint") {
    // { (a, b) in S^2 : x a + y b in <x^2, x y, y^2> } contains (x, 0), (0, y),
    // (y, -x) and nothing of degree zero
    Ideal target(2, {parse_poly("x^2", 2), parse_poly("x*y", 2), parse_poly("y^2", 2)});
    std::vector<FreeModuleElement> qgens;
    for (const Poly& g : target.generators()) qgens.push_back(FreeModuleElement({g}));
    KernelConstraint c = KernelConstraint::linear_map(
        {{parse_poly("x", 2), parse_poly("y", 2)}}, {0}, qgens);
    Submodule K = preimage_kernel(2, {0, 0}, {c});
    Submodule expected(2, {0, 0},
                       {FreeModuleElement({parse_poly("x", 2), Poly(2)}),
                        FreeModuleElement({Poly(2), parse_poly("y", 2)}),
                        FreeModuleElement({parse_poly("y", 2), Poly(2)}),
                        FreeModuleElement({Poly(2), parse_poly("x", 2)})});
    CHECK(K.equals(expected));
}

TEST_CASE("preimage kernel is canonical under generator reordering") {
    Ideal target(2, {parse_poly("x^2", 2), parse_poly("y", 2)});
    Ideal target_swapped(2, {parse_poly("y", 2), parse_poly("x^2", 2)});
    KernelConstraint c1 = KernelConstraint::scalar(parse_poly("x", 2), target);
    KernelConstraint c2 = KernelConstraint::scalar(parse_poly("x", 2), target_swapped);
    Submodule K1 = preimage_kernel(2, {0}, {c1});
    Submodule K2 = preimage_kernel(2, {0}, {c2});
    REQUIRE(K1.generators().size() == K2.generators().size());
    for (std::size_t i = 0; i < K1.generators().size(); ++i)
        CHECK(K1.generators()[i] == K2.generators()[i]);
}

TEST_CASE("module order laws") {
    Rng rng(818);
    ModuleOrder ord{MonomialOrder::degrevlex(), {0, 2, 1}, 0};
    ModuleOrder elim{MonomialOrder::degrevlex(), {0, 2, 1}, 1};
    for (int round = 0; round < 200; ++round) {
        ModTerm a{static_cast<int>(rng() % 3), testing::random_monomial(rng, 3, 3), Rational(1)};
        ModTerm b{static_cast<int>(rng() % 3), testing::random_monomial(rng, 3, 3), Rational(1)};
        Monomial w = testing::random_monomial(rng, 3, 2);
        for (const ModuleOrder& o : {ord, elim}) {
            int c = o.compare(a, b);
            CHECK(c == -o.compare(b, a));
            ModTerm aw{a.pos, a.mono * w, a.coeff};
            ModTerm bw{b.pos, b.mono * w, b.coeff};
            CHECK(o.compare(aw, bw) == c);
        }
        // elimination block dominates regardless of degree
        if (a.pos == 0 && b.pos != 0) CHECK(elim.compare(a, b) > 0);
    }
}

TEST_CASE("krull dimension from leading terms") {
    CHECK(ideal(3, {}).dimension() == 3);
    CHECK(ideal(3, {"x"}).dimension() == 2);
    CHECK(ideal(3, {"x*y", "y*z", "z*x"}).dimension() == 1);
    CHECK(ideal(3, {"x", "y", "z"}).dimension() == 0);
    CHECK(ideal(3, {"x", "y", "z", "1"}).dimension() == -1);
    CHECK(ideal4({"x*y", "z*t"}).dimension() == 2);
}
