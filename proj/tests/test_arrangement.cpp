#include <catch2/catch_amalgamated.hpp>

#include "logres/arrangement.hpp"
#include "support/arrangements.hpp"

using namespace logres;
using namespace logres::testing;

TEST_CASE("lattice of the two-plane surface arrangement") {
    Arrangement A = two_planes_c4();
    IntersectionLattice L(A);
    REQUIRE(L.size() == 4);
    CHECK(L.node(0).dim == 4);  // V
    CHECK(L.node(1).dim == 2);
    CHECK(L.node(2).dim == 2);
    CHECK(L.node(3).dim == 0);  // origin
    CHECK(L.node(0).mobius == 1);
    CHECK(L.node(1).mobius == -1);
    CHECK(L.node(2).mobius == -1);
    CHECK(L.node(3).mobius == 1);
    LaurentZ chi = characteristic_polynomial(L);
    // t^4 - 2t^2 + 1
    CHECK(chi == LaurentZ(0, {Integer(1), Integer(0), Integer(-2), Integer(0), Integer(1)}));
}

TEST_CASE("lattice of a single subspace") {
    Arrangement A(4, {coord_subspace(4, {0, 2})});
    IntersectionLattice L(A);
    REQUIRE(L.size() == 2);
    CHECK(L.node(1).mobius == -1);
    // chi = t^4 - t^2
    CHECK(characteristic_polynomial(L) ==
          LaurentZ(0, {Integer(0), Integer(0), Integer(-1), Integer(0), Integer(1)}));
}

TEST_CASE("lattice of the three coordinate axes") {
    Arrangement A = three_axes_c3();
    IntersectionLattice L(A);
    REQUIRE(L.size() == 5);  // V, three lines, origin
    CHECK(L.node(4).dim == 0);
    CHECK(L.node(4).mobius == 2);
    // chi = t^3 - 3t + 2
    CHECK(characteristic_polynomial(L) ==
          LaurentZ(0, {Integer(2), Integer(-3), Integer(0), Integer(1)}));
}

TEST_CASE("empty arrangement has chi = t^l") {
    Arrangement A(3, {});
    CHECK(characteristic_polynomial(A) == LaurentZ::monomial(3, 1));
}

TEST_CASE("mobius interval sums vanish") {
    for (const Arrangement& A : {two_planes_c4(), three_axes_c3()}) {
        IntersectionLattice L(A);
        for (int y = 0; y < L.size(); ++y) {
            if (y == 0) continue;
            Integer sum = 0;
            for (int z = 0; z < L.size(); ++z)
                if (L.leq(z, y)) sum += L.node(z).mobius;
            CHECK(sum == 0);
            // interval version mu(z, y)
            for (int z = 0; z < L.size(); ++z) {
                if (!L.leq(z, y) || z == y) continue;
                Integer isum = 0;
                for (int w = 0; w < L.size(); ++w)
                    if (L.leq(z, w) && L.leq(w, y)) isum += L.interval_mobius(z, w);
                CHECK(isum == 0);
            }
        }
    }
}

TEST_CASE("lattice is closed under intersections") {
    Arrangement A = three_axes_c3();
    IntersectionLattice L(A);
    for (int i = 0; i < L.size(); ++i)
        for (int j = 0; j < L.size(); ++j) {
            LinearSubspace m = LinearSubspace::intersect(L.node(i).space, L.node(j).space);
            CHECK(L.find(m) >= 0);
        }
}

TEST_CASE("subarrangements at lattice nodes") {
    Arrangement A = two_planes_c4();
    IntersectionLattice L(A);
    // at the origin: both planes
    CHECK(subarrangement_at(A, L.node(3).space).size() == 2);
    // at a plane: just that plane
    CHECK(subarrangement_at(A, L.node(1).space).size() == 1);
    // at V: the empty arrangement
    CHECK(subarrangement_at(A, L.node(0).space).empty());

    Arrangement axes = three_axes_c3();
    IntersectionLattice LA(axes);
    for (int i = 1; i <= 3; ++i) CHECK(subarrangement_at(axes, LA.node(i).space).size() == 1);
}

TEST_CASE("vanishing ideals") {
    CHECK(vanishing_ideal(two_planes_c4())
              .equals(Ideal(4, {parse_poly("x*y", 4), parse_poly("x*t", 4), parse_poly("y*z", 4),
                                parse_poly("z*t", 4)})));
    Arrangement single(4, {coord_subspace(4, {0, 2})});
    CHECK(vanishing_ideal(single).equals(Ideal(4, {parse_poly("x", 4), parse_poly("z", 4)})));
    CHECK(vanishing_ideal(three_axes_c3())
              .equals(Ideal(3, {parse_poly("x*y", 3), parse_poly("y*z", 3), parse_poly("z*x", 3)})));
    // empty arrangement: the unit ideal
    CHECK(vanishing_ideal(Arrangement(3, {})).contains(Poly::constant(3, 1)));
}

TEST_CASE("vanishing ideal of a subarrangement contains the full one") {
    Arrangement A = three_axes_c3();
    Ideal full = vanishing_ideal(A);
    IntersectionLattice L(A);
    for (int i = 0; i < L.size(); ++i) {
        Ideal sub = vanishing_ideal(subarrangement_at(A, L.node(i).space));
        CHECK(sub.contains_ideal(full));
    }
}

TEST_CASE("equidimensionality and duplicates are rejected") {
    CHECK_THROWS_AS(Arrangement(3, {coord_subspace(3, {0}), coord_subspace(3, {0, 1})}),
                    input_error);
    CHECK_THROWS_AS(Arrangement(3, {coord_subspace(3, {0}), coord_subspace(3, {0})}), input_error);
}

TEST_CASE("finite-field point counts match chi for hyperplane arrangements") {
    const long p = 101;
    SECTION("two coordinate lines in C^2") {
        Arrangement A = hyperplanes(2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
        LaurentZ chi = characteristic_polynomial(A);
        Integer expected = 0;
        for (int e = 0; e <= chi.max_exp(); ++e) {
            Integer pe = 1;
            for (int i = 0; i < e; ++i) pe *= p;
            expected += chi.coeff(e) * pe;
        }
        CHECK(Integer(complement_point_count_mod_p(A, p)) == expected);
    }
    SECTION("four hyperplanes in C^3") {
        Arrangement A = hyperplanes(3, {{Rational(1), Rational(0), Rational(0)},
                                        {Rational(0), Rational(1), Rational(0)},
                                        {Rational(0), Rational(0), Rational(1)},
                                        {Rational(1), Rational(1), Rational(1)}});
        LaurentZ chi = characteristic_polynomial(A);
        Integer expected = 0;
        for (int e = 0; e <= chi.max_exp(); ++e) {
            Integer pe = 1;
            for (int i = 0; i < e; ++i) pe *= p;
            expected += chi.coeff(e) * pe;
        }
        CHECK(Integer(complement_point_count_mod_p(A, p)) == expected);
    }
    SECTION("braid-like arrangement with a rational slope") {
        Arrangement A = hyperplanes(3, {{Rational(1), Rational(-1), Rational(0)},
                                        {Rational(0), Rational(1), Rational(-1)},
                                        {Rational(1), Rational(0), Rational(-1)},
                                        {Rational(1, 2), Rational(1), Rational(0)}});
        LaurentZ chi = characteristic_polynomial(A);
        Integer expected = 0;
        for (int e = 0; e <= chi.max_exp(); ++e) {
            Integer pe = 1;
            for (int i = 0; i < e; ++i) pe *= p;
            expected += chi.coeff(e) * pe;
        }
        CHECK(Integer(complement_point_count_mod_p(A, p)) == expected);
    }
}
