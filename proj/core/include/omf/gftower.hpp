#ifndef OMF_GFTOWER_HPP
#define OMF_GFTOWER_HPP

#include <string>
#include <utility>
#include <vector>

#include "omf/bigint.hpp"
#include "omf/intpoly.hpp"

namespace omf {

/// An element of a tower field F_k. Level 0 is the prime field F_p (value v0);
/// an element of F_k for k >= 1 is a polynomial of degree < f_{k-1} over
/// F_{k-1}, stored in sub with trailing zeros trimmed.
struct TowerElem {
    int level = 0;
    unsigned long long v0 = 0;
    std::vector<TowerElem> sub;

    bool is_zero() const { return level == 0 ? v0 == 0 : sub.empty(); }
    bool operator==(const TowerElem& o) const;
    bool operator!=(const TowerElem& o) const { return !(*this == o); }
};

/// Polynomial in y over the tower field F_level; trailing zeros trimmed.
struct TowerPoly {
    int level = 0;
    std::vector<TowerElem> c;

    bool is_zero() const { return c.empty(); }
    long long degree() const {
        require(!is_zero(), errc::zero_polynomial, "degree of the zero polynomial");
        return static_cast<long long>(c.size()) - 1;
    }
    const TowerElem& coeff(long long i) const;
    bool operator==(const TowerPoly& o) const { return level == o.level && c == o.c; }
    bool operator!=(const TowerPoly& o) const { return !(*this == o); }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

/// The tower F_0 = F_p <= F_1 <= ... <= F_h with F_{i+1} = F_i[y]/(psi_i).
/// Every psi_i is verified monic irreducible over F_i on extension, and
/// psi_i != y for i >= 1. Immutable values; extend() returns a new tower.
class FieldTower {
public:
    explicit FieldTower(long long p);

    long long p() const { return p_; }
    /// Number of extensions; fields are F_0 .. F_height.
    int height() const { return static_cast<int>(psis_.size()); }
    const TowerPoly& psi(int i) const; // defining polynomial of F_{i+1} over F_i
    long long fdeg(int i) const;       // f_i = deg psi_i
    /// |F_k| = p^(f_0 ... f_{k-1}).
    Int field_size(int k) const;

    /// Extended tower with one more level on top.
    FieldTower extended(const TowerPoly& psi) const;

    // --- element arithmetic in F_k (levels checked) ---
    TowerElem zero(int level) const;
    TowerElem one(int level) const;
    TowerElem from_int(int level, const Int& n) const;
    /// z_{k-1}: the class of y in F_k = F_{k-1}[y]/(psi_{k-1}); level >= 1.
    TowerElem gen(int level) const;
    /// F_j -> F_k coefficient embedding, j <= k.
    TowerElem embed(const TowerElem& a, int level) const;

    TowerElem add(const TowerElem& a, const TowerElem& b) const;
    TowerElem sub(const TowerElem& a, const TowerElem& b) const;
    TowerElem neg(const TowerElem& a) const;
    TowerElem mul(const TowerElem& a, const TowerElem& b) const;
    TowerElem inv(const TowerElem& a) const;
    /// a^e with e any integer (negative needs a != 0).
    TowerElem pow(const TowerElem& a, const Int& e) const;

    /// Deterministic enumeration of F_level: index 0 is 0, 1 is 1, ...
    TowerElem elem_by_index(int level, const Int& idx) const;
    Int elem_to_index(const TowerElem& a) const;
    /// Total order on elements of one level (by enumeration index).
    int cmp(const TowerElem& a, const TowerElem& b) const;

    // --- polynomial arithmetic over F_level ---
    TowerPoly pzero(int level) const { return TowerPoly{level, {}}; }
    TowerPoly pconst(int level, const TowerElem& a) const;
    TowerPoly py(int level) const; // the polynomial y
    TowerPoly pfrom_coeffs(int level, std::vector<TowerElem> cs) const;
    TowerPoly padd(const TowerPoly& a, const TowerPoly& b) const;
    TowerPoly psub(const TowerPoly& a, const TowerPoly& b) const;
    TowerPoly pmul(const TowerPoly& a, const TowerPoly& b) const;
    TowerPoly pmul_elem(const TowerPoly& a, const TowerElem& s) const;
    void pdivrem(const TowerPoly& a, const TowerPoly& b, TowerPoly& q, TowerPoly& r) const;
    TowerPoly pmod(const TowerPoly& a, const TowerPoly& b) const;
    TowerPoly pmonic(const TowerPoly& a) const;
    TowerPoly pgcd(const TowerPoly& a, const TowerPoly& b) const; // monic gcd
    TowerPoly pderiv(const TowerPoly& a) const;
    TowerPoly ppow_mod(const TowerPoly& base, const Int& e, const TowerPoly& mod) const;
    TowerPoly ppow(const TowerPoly& base, unsigned long e) const;
    /// Evaluate a polynomial over F_j at an element of F_k, j <= k.
    TowerElem peval(const TowerPoly& a, const TowerElem& x) const;
    /// Reduce a polynomial of level k-1 into an element of F_k (mod psi_{k-1}).
    TowerElem elem_from_poly(const TowerPoly& a) const;
    /// Representative polynomial over F_{k-1} of an element of F_k.
    TowerPoly poly_from_elem(const TowerElem& a) const;
    bool pis_monic(const TowerPoly& a) const { return !a.is_zero() && a.c.back() == one(a.level); }
    int pcmp(const TowerPoly& a, const TowerPoly& b) const;
    std::string pstr(const TowerPoly& a) const;
    std::string estr(const TowerElem& a) const;

    bool is_irreducible(const TowerPoly& a) const;

private:
    FieldTower() = default;
    void check_level(int level) const {
        check_internal(level >= 0 && level <= height(), "tower level out of range");
    }

    long long p_ = 0;
    std::vector<TowerPoly> psis_;
    std::vector<long long> fdeg_;
};

/// Element arithmetic entry points with checked operand levels.
TowerElem tower_add(const FieldTower& t, const TowerElem& a, const TowerElem& b);
TowerElem tower_mul(const FieldTower& t, const TowerElem& a, const TowerElem& b);
TowerElem tower_inv(const FieldTower& t, const TowerElem& a);
TowerElem tower_pow(const FieldTower& t, const TowerElem& a, const Int& e);

/// Complete factorization over the coefficient field of g: squarefree
/// decomposition, then distinct-degree and deterministic equal-degree
/// splitting. Factors are monic irreducible, sorted by (degree, coefficient
/// order); multiplying them back with the leading coefficient restores g.
std::vector<std::pair<TowerPoly, int>> factor_poly(const FieldTower& t, const TowerPoly& g);

/// Largest k with psi^k | g.
long long ord_factor(const FieldTower& t, const TowerPoly& g, const TowerPoly& psi);

/// Coefficientwise reduction of an integer polynomial into F_p[y].
TowerPoly reduce_mod_p(const FieldTower& t, const IntPoly& P);

/// Number of monic irreducible polynomials of degree d over F_q (necklace
/// counting); used as a test oracle and for sanity checks.
Int irreducible_count(const Int& q, long long d);

} // namespace omf

#endif
