#include <doctest.h>

#include <sstream>

#include "omf/montes.hpp"
#include "test_util.hpp"

using namespace omf;
using omftest::Rng;
using omftest::tpoly;

namespace {

IntPoly family(long long a, long long b, long long c) {
    return IntPoly{c, b, a, 0, 1};
}

struct Expected {
    size_t nfactors;
    long long degree;
    long long e, f;
    std::vector<long long> ind;
};

void check_case(const IntPoly& f, const Expected& ex) {
    MontesResult res = montes_factor(f, 2);
    REQUIRE(res.factors.size() == ex.nfactors);
    for (const auto& rep : res.factors) {
        CHECK(rep.degree == ex.degree);
        CHECK(rep.e == to_int(ex.e));
        CHECK(rep.f_res == to_int(ex.f));
    }
    REQUIRE(res.ledger.per_order.size() == ex.ind.size());
    for (size_t i = 0; i < ex.ind.size(); ++i)
        CHECK(res.ledger.per_order[i] == to_int(ex.ind[i]));
}

} // namespace

TEST_CASE("golden quartic family over Q_2") {
    check_case(family(4, 8, 4), {1, 4, 4, 1, {2, 1}});
    check_case(family(8, 8, 4), {1, 4, 4, 1, {2, 1, 0}});
    check_case(family(4, 8, 28), {1, 4, 2, 2, {2, 1, 1}});
    check_case(family(4, 8, 12), {2, 2, 2, 1, {2, 1, 1}});
}

TEST_CASE("montes_factor input validation") {
    CHECK_THROWS_AS((void)montes_factor(IntPoly{1, 2}, 2), om_error);             // not monic
    CHECK_THROWS_AS((void)montes_factor(IntPoly{4, 8, 4, 0, 1}, 15), om_error);   // not prime
    IntPoly square = IntPoly{1, 1} * IntPoly{1, 1};
    CHECK_THROWS_AS((void)montes_factor(square, 2), om_error);                    // not separable
}

TEST_CASE("simple shapes") {
    {
        // irreducible mod p: one unramified factor, complete at order 0
        MontesResult res = montes_factor(IntPoly{1, 1, 1}, 2);
        REQUIRE(res.factors.size() == 1);
        CHECK(res.factors[0].degree == 2);
        CHECK(res.factors[0].e == 1);
        CHECK(res.factors[0].f_res == 2);
        CHECK(res.ledger.total() == 0);
    }
    {
        // Eisenstein: totally ramified, ind = 0
        MontesResult res = montes_factor(IntPoly{2, 2, 0, 1}, 2);
        REQUIRE(res.factors.size() == 1);
        CHECK(res.factors[0].e == 3);
        CHECK(res.factors[0].f_res == 1);
        CHECK(res.ledger.total() == 0);
    }
    {
        // split linears: ind(f) = sum of pairwise v_p of root differences
        IntPoly f = IntPoly{-2, 1} * IntPoly{-6, 1} * IntPoly{-1, 1};
        MontesResult res = montes_factor(f, 2);
        CHECK(res.factors.size() == 3);
        CHECK(res.ledger.total() == 2); // v(4) + v(1) + v(5)
    }
}

TEST_CASE("unramified residual towers") {
    // x^4 + 4x^2 + 16 = (x^2+2x+4)(x^2-2x+4), each factor unramified
    // quadratic over Q_2 (residual y^2+y+1); Res of the pair is -4 alpha
    // taken over the roots, i.e. 64, so ind = 1 + 1 + v_2(64) = 8.
    IntPoly f{16, 0, 4, 0, 1};
    MontesResult res = montes_factor(f, 2);
    REQUIRE(res.factors.size() == 2);
    for (const auto& rep : res.factors) {
        CHECK(rep.degree == 2);
        CHECK(rep.e == 1);
        CHECK(rep.f_res == 2);
    }
    CHECK(res.ledger.total() == 8);
    ResBreakdown rb = res_valuation(IntPoly{4, 2, 1}, IntPoly{4, -2, 1}, 2);
    CHECK(rb.exact_resultant == 64);
    CHECK(rb.valuation == 6);
}

TEST_CASE("a deep type with two residual-degree extensions") {
    // pinned by the always-on double-entry checks: degree = e*f, the end2
    // floor reconciliation, and v_2(Res(approx, f)) = deg f * quality
    IntPoly f{-16, -32, 128, 16, -4, -48, -24, 0, 1};
    MontesResult res = montes_factor(f, 2);
    REQUIRE(res.factors.size() == 1);
    const FactorReport& rep = res.factors[0];
    CHECK(rep.degree == 8);
    CHECK(rep.e == 2);
    CHECK(rep.f_res == 4);
    CHECK(res.ledger.total() == 16);
    const OMType& t = rep.complete_type;
    REQUIRE(t.order() == 3);
    CHECK(t.level(1).f == 2);
    CHECK(t.level(3).f == 2);
    REQUIRE(!rep.approx_quality.is_infinite());
    Rat expect = Rat(rep.degree) * rep.approx_quality.finite();
    CHECK(to_int(p_valuation(resultant(rep.approx, f), Int(2))) == expect.num());
}

TEST_CASE("towers with an unramified base") {
    {
        // (x^2+x+1)^2 + 2: ramified square root of -2 over the unramified
        // quadratic; one factor, e = f = 2, index zero
        IntPoly f{3, 2, 3, 2, 1};
        MontesResult res = montes_factor(f, 2);
        REQUIRE(res.factors.size() == 1);
        CHECK(res.factors[0].e == 2);
        CHECK(res.factors[0].f_res == 2);
        CHECK(res.ledger.total() == 0);
        CHECK(res.factors[0].complete_type.f0() == 2);
    }
    {
        // (x^2+x+1)^2 + 4: the order-1 polygon has index 1 with weight
        // f_0 = 2, and the branch completes at order 2 (v_2(disc f) = 8
        // = 2 ind + v_2(d_L) with a discriminant-exponent-2 quadratic)
        IntPoly f{5, 2, 3, 2, 1};
        MontesResult res = montes_factor(f, 2);
        REQUIRE(res.factors.size() == 1);
        CHECK(res.factors[0].e == 2);
        CHECK(res.factors[0].f_res == 2);
        REQUIRE(res.ledger.per_order.size() == 2);
        CHECK(res.ledger.per_order[0] == 2);
        CHECK(res.ledger.per_order[1] == 0);
    }
}

TEST_CASE("ledger carries per-type and pairwise entries") {
    MontesResult res = montes_factor(family(4, 8, 12), 2);
    Int per_type_sum(0);
    for (const auto& e : res.ledger.per_type) {
        CHECK(e.ind_t >= 0);
        per_type_sum += e.ind_t;
    }
    CHECK(per_type_sum == res.ledger.total());
    // the two degree-2 factors share orders 1..3 with contributions 2, 1, 1
    REQUIRE(res.ledger.res_pairs.size() == 1);
    CHECK(res.ledger.res_pairs[0].value == 4);
}

TEST_CASE("exact-factor emission") {
    MontesResult res = montes_factor(family(4, 8, 12), 2);
    int exact = 0;
    for (const auto& rep : res.factors) {
        if (rep.from_infinite_side) {
            ++exact;
            CHECK(rep.exact);
            CHECK(rep.approx_quality.is_infinite());
            CHECK(rep.approx == IntPoly{2, 2, 1});
            // the emitted representative really divides f
            IntPoly q, r;
            family(4, 8, 12).divrem_monic(rep.approx, q, r);
            CHECK(r.is_zero());
        }
    }
    CHECK(exact == 1);
}

TEST_CASE("approximation quality against the exact resultant") {
    // v_p(Res(phi, f)) = deg(f) * v(phi(theta)) for one complete factor
    for (auto f : {family(8, 8, 4), family(4, 8, 28)}) {
        MontesResult res = montes_factor(f, 2);
        REQUIRE(res.factors.size() == 1);
        const FactorReport& rep = res.factors[0];
        REQUIRE(!rep.approx_quality.is_infinite());
        Int r = resultant(rep.approx, f);
        Rat expect = Rat(rep.degree) * rep.approx_quality.finite();
        CHECK(expect.is_integer());
        CHECK(to_int(p_valuation(r, Int(2))) == expect.num());
    }
}

TEST_CASE("ind_at_order reproduces the ledger") {
    IntPoly f = family(4, 8, 28);
    FieldTower base(2);
    auto facs = factor_poly(base, reduce_mod_p(base, f));
    REQUIRE(facs.size() == 1);
    std::vector<OMType> nodes;
    nodes.push_back(OMType::order0(2, facs[0].first));
    CHECK(ind_at_order(f, nodes) == 2); // ind_1(f)

    // ind_2(f) = 1 in both order-2 cases of the family
    nodes[0].ensure_representative();
    FieldTower tw = nodes[0].tower();
    std::vector<OMType> order1;
    order1.push_back(nodes[0].extended(1, 2, tpoly(tw, 1, {1, 1})));
    CHECK(ind_at_order(f, order1) == 1);
    CHECK(ind_at_order(family(4, 8, 4), order1) == 1);
}

TEST_CASE("local basis exponents") {
    {
        // degree-1 factor: J = {0}, empty sum
        MontesResult res = montes_factor(IntPoly{-3, 1}, 2);
        LocalBasisData lb = local_basis_exponents(res.factors[0]);
        CHECK(lb.floor_sum_end2 == 0);
        CHECK(lb.entries.size() == 1);
    }
    {
        MontesResult res = montes_factor(family(4, 8, 4), 2);
        LocalBasisData lb = local_basis_exponents(res.factors[0]);
        CHECK(lb.floor_sum_end2 == 3);
        REQUIRE(lb.nu.size() == 2);
        CHECK(lb.nu[0] == Rat(1, 2));
        CHECK(lb.nu[1] == Rat(7, 4));
    }
    {
        MontesResult res = montes_factor(family(4, 8, 28), 2);
        LocalBasisData lb = local_basis_exponents(res.factors[0]);
        CHECK(lb.floor_sum_end2 == 4);
    }
    {
        OMType t0 = OMType::order0(2, tpoly(FieldTower(2), 0, {0, 1}));
        CHECK_THROWS_AS((void)local_basis_exponents(t0, 2), om_error);
    }
}

TEST_CASE("res_t on the worked pairs") {
    IntPoly P{2, 1}, Q{6, 1};
    OMType t0 = OMType::order0(2, tpoly(FieldTower(2), 0, {0, 1}));
    {
        // omega = 0 for a polynomial coprime to phi_1 mod p
        ValInf r = res_t(IntPoly{1, 1}, Q, t0);
        CHECK(r == ValInf(Rat(0)));
    }
    CHECK(res_t(P, Q, t0) == ValInf(Rat(1)));
    {
        OMType t0b = t0;
        t0b.set_representative(IntPoly::x());
        FieldTower tw = t0b.tower();
        OMType t1 = t0b.extended(1, 1, tpoly(tw, 1, {1, 1}));
        CHECK(t1.ensure_representative() == IntPoly{2, 1});
        CHECK(res_t(P, Q, t1) == ValInf(Rat(1)));
        // both divisible by phi_r: infinite
        CHECK(res_t(P * IntPoly{1, 1}, P * IntPoly{-1, 1}, t1).is_infinite());
    }
}

TEST_CASE("res_t over multi-sided polygons") {
    // P = (x+2)(x+4), Q = (x+6)(x+8): both order-1 polygons have two sides
    // (slopes -2,-1 and -3,-1), res pairing 2+1+1+1 = 5; the shared branch
    // (x; -1, y+1) contributes 1 more, matching v_2(Res) = 6.
    IntPoly P = IntPoly{2, 1} * IntPoly{4, 1};
    IntPoly Q = IntPoly{6, 1} * IntPoly{8, 1};
    OMType t0 = OMType::order0(2, tpoly(FieldTower(2), 0, {0, 1}));
    CHECK(res_t(P, Q, t0) == ValInf(Rat(5)));
    ResBreakdown rb = res_valuation(P, Q, 2);
    CHECK(rb.valuation == 6);
    REQUIRE(rb.per_order.size() == 2);
    CHECK(rb.per_order[0] == 5);
    CHECK(rb.per_order[1] == 1);
}

TEST_CASE("resultant theorem walk") {
    {
        ResBreakdown rb = res_valuation(IntPoly{2, 1}, IntPoly{6, 1}, 2);
        CHECK(rb.exact_resultant == 4);
        CHECK(rb.valuation == 2);
        REQUIRE(rb.per_order.size() == 2);
        CHECK(rb.per_order[0] == 1);
        CHECK(rb.per_order[1] == 1);
    }
    {
        // x+2 vs x+34 agree deeply 2-adically: several orders before separation
        ResBreakdown rb = res_valuation(IntPoly{2, 1}, IntPoly{2 + 32, 1}, 2);
        CHECK(rb.valuation == 5);
        Int sum(0);
        for (const auto& v : rb.per_order) sum += v;
        CHECK(sum == 5);
    }
    CHECK_THROWS_AS((void)res_valuation(IntPoly{2, 1}, IntPoly{2, 1}, 2), om_error);
}

TEST_CASE("random termination and ledger consistency") {
    // montes_factor carries always-on asserts for the shape lemma, the
    // termination bound, degree conservation, e*f consistency and the end2
    // reconciliation; this drives them over random inputs.
    Rng rng(333);
    int done = 0;
    for (long long p : {2ll, 3ll}) {
        for (int it = 0; it < 25; ++it) {
            IntPoly f = omftest::random_poly(rng, 8, 60, true);
            if (f.degree() < 1) continue;
            if (resultant(f, f.derivative()) == 0) continue;
            MontesResult res = montes_factor(f, p);
            CHECK(to_int(res.orders_used) <= res.ledger.total() + 1);
            long long degsum = 0;
            for (const auto& rep : res.factors) degsum += rep.degree;
            CHECK(degsum == f.degree());
            ++done;
        }
    }
    CHECK(done > 30);
}

TEST_CASE("trace output mentions every order") {
    std::ostringstream tr;
    (void)montes_factor(family(4, 8, 28), 2, &tr);
    std::string s = tr.str();
    CHECK(s.find("[order 0]") != std::string::npos);
    CHECK(s.find("[order 1]") != std::string::npos);
    CHECK(s.find("[order 3]") != std::string::npos);
    CHECK(s.find("R_{-1/2}(f) = y^2+[1]") != std::string::npos);
    CHECK(s.find("complete") != std::string::npos);
}
