#ifndef OMF_TEST_UTIL_HPP
#define OMF_TEST_UTIL_HPP

#include <vector>

#include "omf/gftower.hpp"
#include "omf/intpoly.hpp"
#include "omf/polygons.hpp"

namespace omftest {

struct Rng {
    unsigned long long s;
    explicit Rng(unsigned long long seed) : s(seed) {}
    unsigned long long next() {
        unsigned long long z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long long range(long long lo, long long hi) { // inclusive
        return lo + static_cast<long long>(next() % static_cast<unsigned long long>(hi - lo + 1));
    }
};

inline omf::IntPoly random_poly(Rng& rng, long long maxdeg, long long cmax, bool monic = false) {
    long long d = rng.range(monic ? 1 : 0, maxdeg);
    std::vector<omf::Int> cs;
    for (long long i = 0; i < d; ++i) cs.push_back(omf::to_int(rng.range(-cmax, cmax)));
    cs.push_back(monic ? omf::Int(1) : omf::to_int(rng.range(1, cmax)));
    return omf::IntPoly(std::move(cs));
}

/// Exact Sylvester-matrix determinant by fraction-free Bareiss elimination;
/// the independent oracle for the subresultant implementation.
inline omf::Int sylvester_resultant(const omf::IntPoly& P, const omf::IntPoly& Q) {
    using omf::Int;
    long long m = P.degree(), n = Q.degree();
    if (m == 0 && n == 0) return Int(1);
    long long N = m + n;
    std::vector<std::vector<Int>> M(static_cast<size_t>(N),
                                    std::vector<Int>(static_cast<size_t>(N), Int(0)));
    for (long long r = 0; r < n; ++r)
        for (long long j = 0; j <= m; ++j) M[size_t(r)][size_t(r + j)] = P.coeff(m - j);
    for (long long r = 0; r < m; ++r)
        for (long long j = 0; j <= n; ++j) M[size_t(n + r)][size_t(r + j)] = Q.coeff(n - j);
    Int prev(1);
    int sign = 1;
    for (long long k = 0; k < N - 1; ++k) {
        if (M[size_t(k)][size_t(k)] == 0) {
            long long sw = -1;
            for (long long r = k + 1; r < N; ++r)
                if (M[size_t(r)][size_t(k)] != 0) { sw = r; break; }
            if (sw < 0) return Int(0);
            std::swap(M[size_t(k)], M[size_t(sw)]);
            sign = -sign;
        }
        for (long long i = k + 1; i < N; ++i)
            for (long long j = k + 1; j < N; ++j) {
                Int num = M[size_t(i)][size_t(j)] * M[size_t(k)][size_t(k)] -
                          M[size_t(i)][size_t(k)] * M[size_t(k)][size_t(j)];
                M[size_t(i)][size_t(j)] = omf::divexact(num, prev);
            }
        prev = M[size_t(k)][size_t(k)];
    }
    return sign > 0 ? M[size_t(N - 1)][size_t(N - 1)] : -M[size_t(N - 1)][size_t(N - 1)];
}

/// Direct region enumeration of Remark "ind(N) counts lattice points":
/// integer points strictly right of the first finite vertex, strictly above
/// the horizontal through the last vertex, on or below the polygon -- plus
/// the full columns under the infinite side. Independent of both in-library
/// index routes.
inline omf::Int region_lattice_count(const omf::PrincipalPolygon& N) {
    using omf::Int;
    using omf::Rat;
    Int count(0);
    Rat yend = N.end_y();
    for (long long x = N.begin_x(); x < N.start_x(); ++x) {
        // infinite column: y in (yend, start_y]
        for (Int y = yend.floor() + 1; Rat(y) <= N.start_y(); y += 1)
            if (Rat(y) > yend) count += 1;
    }
    for (long long x = N.start_x() + 1; x <= N.end_x(); ++x) {
        omf::ValInf yv = N.y_at(x);
        for (Int y = yend.floor() + 1; omf::ValInf(Rat(y)) <= yv; y += 1)
            if (Rat(y) > yend) count += 1;
    }
    return count;
}

inline omf::TowerPoly tpoly(const omf::FieldTower& t, int level, std::initializer_list<long long> cs) {
    std::vector<omf::TowerElem> v;
    for (long long c : cs) v.push_back(t.from_int(level, omf::to_int(c)));
    return t.pfrom_coeffs(level, std::move(v));
}

} // namespace omftest

#endif
