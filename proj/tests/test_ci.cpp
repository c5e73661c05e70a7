#include <catch2/catch_amalgamated.hpp>

#include "logres/ci.hpp"
#include "support/arrangements.hpp"

using namespace logres;
using namespace logres::testing;

namespace {
std::vector<std::vector<Poly>> columns(int nvars,
                                       std::initializer_list<std::initializer_list<const char*>> cs) {
    std::vector<std::vector<Poly>> out;
    for (auto col : cs) {
        std::vector<Poly> c;
        for (const char* s : col) c.push_back(parse_poly(s, nvars));
        out.push_back(std::move(c));
    }
    return out;
}
}  // namespace

TEST_CASE("trivial complete intersection of a single plane") {
    Arrangement A(4, {coord_subspace(4, {0, 2})});
    CIData C = make_ci(A, columns(4, {{"x"}, {"z"}}), true);
    CHECK(C.degrees == std::vector<int>({1, 1}));
    CHECK(C.total_degree == 2);
    CHECK(verify_ci(A, C).ok());
    REQUIRE(C.components.size() == 1);
    CHECK(C.components[0] == coord_subspace(4, {0, 2}));
}

TEST_CASE("the user-supplied quadric pair for the surface arrangement") {
    Arrangement A = two_planes_c4();
    CIData C = make_ci(A, columns(4, {{"x", "y"}, {"z", "t"}}), true);
    CHECK(C.hs[0] == parse_poly("x*y", 4));
    CHECK(C.hs[1] == parse_poly("z*t", 4));
    CHECK(C.degrees == std::vector<int>({2, 2}));
    CHECK(C.total_degree == 4);
    REQUIRE(C.components.size() == 4);

    SECTION("components of C not in X generate the stated ideal") {
        std::vector<LinearSubspace> rest;
        for (const LinearSubspace& c : C.components) {
            bool in_x = false;
            for (const LinearSubspace& x : A.components())
                if (c == x) in_x = true;
            if (!in_x) rest.push_back(c);
        }
        REQUIRE(rest.size() == 2);
        Ideal IY = ideal_intersect(rest[0].linear_ideal(), rest[1].linear_ideal());
        CHECK(IY.equals(Ideal(4, {parse_poly("x*y", 4), parse_poly("x*z", 4), parse_poly("y*t", 4),
                                  parse_poly("z*t", 4)})));
    }

    SECTION("radicality certificate") { CHECK(radical_certificate(C)); }
}

TEST_CASE("a repeated hyperplane in one column fails the distinctness check") {
    Arrangement A = two_planes_c4();
    CHECK_THROWS_AS(make_ci(A, columns(4, {{"x", "x"}, {"z", "t"}}), true), construction_error);
}

TEST_CASE("a squared factor fails radicality via distinctness") {
    Arrangement A(4, {coord_subspace(4, {0, 2})});
    // h1 = x^2 supplied as the factor column [x, x]
    CIData C;
    C.columns = columns(4, {{"x", "x"}, {"z"}});
    for (const auto& col : C.columns) {
        Poly h = Poly::constant(4, 1);
        for (const Poly& f : col) h *= f;
        C.hs.push_back(h);
    }
    C.ideal = Ideal(4, C.hs);
    CIVerification v = verify_ci(A, C);
    CHECK_FALSE(v.ok());
    CHECK_FALSE(v.grid_distinct);
    // the regular-sequence and containment conditions alone do hold
    CHECK(v.regular_sequence);
    CHECK(v.contains_x);
}

TEST_CASE("wrong-degree data is rejected") {
    Arrangement A = two_planes_c4();
    CHECK_THROWS_AS(make_ci(A, columns(4, {{"x*y"}, {"z"}}), true), construction_error);
}

TEST_CASE("generic complete intersection for the three axes") {
    Arrangement A = three_axes_c3();
    CIData C = build_generic_ci(A, 2024);
    CHECK(C.codim() == 2);
    CHECK(C.degrees == std::vector<int>({3, 3}));
    CHECK(verify_ci(A, C).ok());
    CHECK(C.components.size() == 9);

    SECTION("determinism") {
        CIData C2 = build_generic_ci(A, 2024);
        CHECK(C2.columns == C.columns);
        CIData C3 = build_generic_ci(A, 2025);
        CHECK(C3.columns != C.columns);
    }
    SECTION("regular sequence invariant") {
        for (int j = 1; j <= 2; ++j) {
            Ideal partial(3, std::vector<Poly>(C.hs.begin(), C.hs.begin() + j));
            CHECK(partial.codimension() == j);
        }
    }
    SECTION("x is contained in c") {
        Ideal IX = vanishing_ideal(A);
        for (const Poly& h : C.hs) CHECK(IX.contains(h));
    }
    SECTION("radicality certificate for the nine lines") { CHECK(radical_certificate(C)); }
}

TEST_CASE("generic complete intersection for the surface arrangement") {
    Arrangement A = two_planes_c4();
    CIData C = build_generic_ci(A, 7);
    CHECK(verify_ci(A, C).ok());
    CHECK(C.degrees == std::vector<int>({2, 2}));
    CHECK(C.components.size() == 4);
}
