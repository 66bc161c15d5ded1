#include <doctest.h>

#include "omf/gftower.hpp"
#include "omf/intpoly.hpp"
#include "test_util.hpp"

using namespace omf;
using omftest::Rng;

TEST_CASE("content_valuation") {
    CHECK(content_valuation(IntPoly{16, 8}, 2) == ValInf(Rat(3)));
    CHECK(content_valuation(IntPoly::zero(), 5).is_infinite());
    CHECK(content_valuation(IntPoly{4, 8, 4, 0, 1}, 2) == ValInf(Rat(0)));
    CHECK_THROWS_AS((void)content_valuation(IntPoly{1}, 6), om_error);
}

TEST_CASE("phi_expansion matches the worked development") {
    IntPoly f{4, 8, 4, 0, 1};            // x^4 + 4x^2 + 8x + 4
    IntPoly phi{-2, 0, 1};               // x^2 - 2
    auto a = phi_expansion(f, phi);
    REQUIRE(a.size() == 3);
    CHECK(a[0] == IntPoly{16, 8});       // bx + c + 2a + 4 with a=4,b=8,c=4
    CHECK(a[1] == IntPoly{8});           // a + 4
    CHECK(a[2] == IntPoly{1});
}

TEST_CASE("phi_expansion identities") {
    IntPoly phi{3, 1, 1};
    auto a = phi_expansion(phi, phi);
    REQUIRE(a.size() == 2);
    CHECK(a[0].is_zero());
    CHECK(a[1] == IntPoly{1});

    auto b = phi_expansion(IntPoly{1, 0, 0, 1}, IntPoly::x());
    REQUIRE(b.size() == 4);
    CHECK(b[0] == IntPoly{1});
    CHECK(b[1].is_zero());
    CHECK(b[2].is_zero());
    CHECK(b[3] == IntPoly{1});

    CHECK_THROWS_AS((void)phi_expansion(IntPoly{1, 1}, IntPoly{2, 2}), om_error);
    CHECK_THROWS_AS((void)phi_expansion(IntPoly{1, 1}, IntPoly{5}), om_error);
    CHECK_THROWS_AS((void)phi_expansion(IntPoly::zero(), IntPoly::x()), om_error);
}

TEST_CASE("phi_expansion round trip (1000 random cases)") {
    Rng rng(101);
    for (int it = 0; it < 1000; ++it) {
        IntPoly P = omftest::random_poly(rng, 9, 50);
        IntPoly phi = omftest::random_poly(rng, 3, 30, true);
        if (phi.degree() < 1) continue;
        auto a = phi_expansion(P, phi);
        IntPoly back;
        for (size_t i = a.size(); i-- > 0;) back = back * phi + a[i];
        CHECK(back == P);
        for (const auto& c : a) CHECK((c.is_zero() || c.degree() < phi.degree()));
    }
}

TEST_CASE("resultant agrees with roots and with the Sylvester oracle") {
    CHECK(resultant(IntPoly{2, 1}, IntPoly{6, 1}) == 4);
    CHECK(resultant(IntPoly::x(), IntPoly{-5, 1}) == -5);

    IntPoly f{4, 8, 4, 0, 1};
    Int r = resultant(f, f.derivative());
    CHECK(p_valuation(r, Int(2)) == 12);

    Rng rng(202);
    for (int it = 0; it < 300; ++it) {
        IntPoly P = omftest::random_poly(rng, 6, 20);
        IntPoly Q = omftest::random_poly(rng, 6, 20);
        if (P.is_constant() && Q.is_constant()) continue;
        CHECK(resultant(P, Q) == omftest::sylvester_resultant(P, Q));
    }
    CHECK_THROWS_AS((void)resultant(IntPoly::zero(), IntPoly{1, 1}), om_error);
}

TEST_CASE("content valuation is additive on products (Gauss)") {
    Rng rng(303);
    for (long long p : {2ll, 3ll, 5ll}) {
        for (int it = 0; it < 200; ++it) {
            IntPoly P = omftest::random_poly(rng, 5, 40);
            IntPoly Q = omftest::random_poly(rng, 5, 40);
            CHECK(content_valuation(P * Q, p) == content_valuation(P, p) + content_valuation(Q, p));
        }
    }
}

TEST_CASE("reduce_mod_p") {
    FieldTower t2(2), t5(5);
    CHECK(reduce_mod_p(t2, IntPoly{4, 8, 4, 0, 1}) == omftest::tpoly(t2, 0, {0, 0, 0, 0, 1}));
    CHECK(reduce_mod_p(t5, IntPoly{5, 5}).is_zero());
    CHECK(reduce_mod_p(t5, IntPoly{1, 0, 1}) == omftest::tpoly(t5, 0, {1, 0, 1}));
}

TEST_CASE("squarefree_part and gcd_z") {
    IntPoly f = IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{-3, 1};
    IntPoly rad = squarefree_part(f);
    CHECK(rad == IntPoly{1, 1} * IntPoly{-3, 1});
    CHECK(squarefree_part(rad) == rad);
    IntPoly g = gcd_z(f, f.derivative());
    CHECK(g == IntPoly{1, 1});
}
