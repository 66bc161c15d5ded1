#include <doctest.h>

#include <map>

#include "omf/gftower.hpp"
#include "test_util.hpp"

using namespace omf;
using omftest::Rng;
using omftest::tpoly;

namespace {

FieldTower f2_tower() { return FieldTower(2); }

// F_2 -> F_2[y]/(y+1) (trivial) -> used by the z^(-3) example
FieldTower f2_y1() { return FieldTower(2).extended(tpoly(FieldTower(2), 0, {1, 1})); }

// F_4 = F_2[y]/(y^2+y+1)
FieldTower f4() { return FieldTower(2).extended(tpoly(FieldTower(2), 0, {1, 1, 1})); }

TowerPoly remultiply(const FieldTower& t, const std::vector<std::pair<TowerPoly, int>>& fs,
                     const TowerElem& lc, int level) {
    TowerPoly prod = t.pconst(level, lc);
    for (const auto& [g, m] : fs)
        for (int i = 0; i < m; ++i) prod = t.pmul(prod, g);
    return prod;
}

} // namespace

TEST_CASE("tower arithmetic on small worked examples") {
    {
        FieldTower t = f2_y1();
        TowerElem z = t.gen(1); // class of y mod y+1, i.e. 1
        CHECK(z == t.one(1));
        CHECK(tower_pow(t, z, Int(-3)) == t.one(1));
    }
    {
        FieldTower t(5);
        CHECK(tower_inv(t, t.from_int(0, 2)) == t.from_int(0, 3));
        CHECK_THROWS_AS((void)tower_inv(t, t.zero(0)), om_error);
    }
    {
        FieldTower t = f4();
        TowerElem z = t.gen(1);
        TowerElem z2 = tower_mul(t, z, z);
        CHECK(z2 == t.add(z, t.one(1))); // z^2 = z + 1
    }
    {
        FieldTower t = f4();
        CHECK_THROWS_AS((void)tower_add(t, t.one(0), t.one(1)), om_error);
    }
}

TEST_CASE("factor_poly on the worked residuals") {
    FieldTower t = f2_tower();
    {
        auto fs = factor_poly(t, tpoly(t, 0, {1, 0, 1})); // y^2 + 1 over F_2
        REQUIRE(fs.size() == 1);
        CHECK(fs[0].first == tpoly(t, 0, {1, 1}));
        CHECK(fs[0].second == 2);
    }
    {
        auto fs = factor_poly(t, tpoly(t, 0, {1, 1, 1})); // irreducible
        REQUIRE(fs.size() == 1);
        CHECK(fs[0].first == tpoly(t, 0, {1, 1, 1}));
        CHECK(fs[0].second == 1);
    }
    {
        FieldTower t3(3);
        auto fs = factor_poly(t3, tpoly(t3, 0, {0, -1, 0, 1})); // y^3 - y
        REQUIRE(fs.size() == 3);
        CHECK(fs[0].first == tpoly(t3, 0, {0, 1}));
        CHECK(fs[1].first == tpoly(t3, 0, {1, 1}));
        CHECK(fs[2].first == tpoly(t3, 0, {2, 1}));
        for (const auto& [g, m] : fs) CHECK(m == 1);
    }
    CHECK_THROWS_AS((void)factor_poly(t, t.pzero(0)), om_error);
}

TEST_CASE("ord_factor") {
    FieldTower t = f2_tower();
    TowerPoly y1 = tpoly(t, 0, {1, 1});
    CHECK(ord_factor(t, t.pmul(y1, y1), y1) == 2);
    CHECK(ord_factor(t, tpoly(t, 0, {1, 1, 1}), y1) == 0);
    FieldTower t3(3);
    CHECK(ord_factor(t3, tpoly(t3, 0, {0, 0, 0, 0, 1}), tpoly(t3, 0, {0, 1})) == 4);
}

TEST_CASE("factor_poly remultiplies to the input (500 cases, levels 0-2)") {
    Rng rng(404);
    std::vector<FieldTower> towers;
    towers.push_back(FieldTower(2));
    towers.push_back(f4());
    towers.push_back(f4().extended([] {
        // y^2 + y + z over F_4 (z a generator) is irreducible
        FieldTower t = f4();
        TowerPoly psi{1, {t.gen(1), t.one(1), t.one(1)}};
        return psi;
    }()));
    towers.push_back(FieldTower(3));
    towers.push_back(FieldTower(3).extended(tpoly(FieldTower(3), 0, {1, 0, 1}))); // y^2+1 over F_3
    for (int it = 0; it < 500; ++it) {
        const FieldTower& t = towers[static_cast<size_t>(it) % towers.size()];
        int level = t.height();
        long long deg = rng.range(1, 8);
        Int q = t.field_size(level);
        std::vector<TowerElem> cs;
        for (long long i = 0; i < deg; ++i)
            cs.push_back(t.elem_by_index(level, to_int(rng.range(0, 1 << 16)) % q));
        cs.push_back(t.elem_by_index(level, Int(1) + to_int(rng.range(0, 1 << 16)) % (q - 1)));
        TowerPoly g = t.pfrom_coeffs(level, std::move(cs));
        if (g.is_zero() || g.degree() < 1) continue;
        auto fs = factor_poly(t, g);
        CHECK(remultiply(t, fs, g.c.back(), level) == g);
        long long degsum = 0;
        for (const auto& [f, m] : fs) {
            degsum += f.degree() * m;
            CHECK(t.pis_monic(f));
        }
        CHECK(degsum == g.degree());
    }
}

TEST_CASE("irreducible factor counts match necklace counting") {
    // factor y^(q^d) - y: the number of degree-k irreducible factors must be
    // the necklace count for every k | d
    for (long long p : {2ll, 3ll}) {
        FieldTower t(p);
        Int q = t.field_size(0);
        for (long long d = 1; d <= 4; ++d) {
            if (p == 3 && d == 4) continue; // 3^4 = 81 coefficients; keep the test quick
            long long n = 1;
            for (long long i = 0; i < d; ++i) n *= p;
            std::vector<TowerElem> cs(static_cast<size_t>(n) + 1, t.zero(0));
            cs[1] = t.neg(t.one(0));
            cs[static_cast<size_t>(n)] = t.one(0);
            auto fs = factor_poly(t, t.pfrom_coeffs(0, std::move(cs)));
            std::map<long long, Int> by_degree;
            for (const auto& [g, m] : fs) {
                CHECK(m == 1);
                by_degree[g.degree()] += 1;
            }
            for (long long k = 1; k <= d; ++k) {
                if (d % k != 0) continue;
                CHECK(by_degree[k] == irreducible_count(q, k));
            }
        }
    }
}

TEST_CASE("field axioms on random triples") {
    Rng rng(505);
    std::vector<FieldTower> towers{f4(), FieldTower(5),
                                   FieldTower(3).extended(tpoly(FieldTower(3), 0, {2, 2, 1}))};
    for (const auto& t : towers) {
        int level = t.height();
        Int q = t.field_size(level);
        for (int it = 0; it < 60; ++it) {
            TowerElem a = t.elem_by_index(level, to_int(rng.range(0, 1000)) % q);
            TowerElem b = t.elem_by_index(level, to_int(rng.range(0, 1000)) % q);
            TowerElem c = t.elem_by_index(level, to_int(rng.range(0, 1000)) % q);
            CHECK(t.mul(a, t.mul(b, c)) == t.mul(t.mul(a, b), c));
            CHECK(t.mul(a, t.add(b, c)) == t.add(t.mul(a, b), t.mul(a, c)));
            if (!a.is_zero()) {
                CHECK(t.mul(a, t.inv(a)) == t.one(level));
                CHECK(t.pow(a, q - 1) == t.one(level));
            }
        }
    }
}

TEST_CASE("tower extension validates psi") {
    FieldTower t2(2);
    CHECK_THROWS_AS((void)t2.extended(tpoly(t2, 0, {1, 0, 1})), om_error); // (y+1)^2
    FieldTower t = f4();
    CHECK_THROWS_AS((void)t.extended(TowerPoly{1, {t.zero(1), t.one(1)}}), om_error); // psi = y
    CHECK_THROWS_AS((void)t.extended(TowerPoly{1, {t.gen(1), t.gen(1)}}), om_error);  // not monic
}
