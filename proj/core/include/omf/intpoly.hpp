#ifndef OMF_INTPOLY_HPP
#define OMF_INTPOLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "omf/bigint.hpp"
#include "omf/rational.hpp"

namespace omf {

/// Dense univariate polynomial over Z. coeffs()[i] is the coefficient of x^i;
/// trailing zeros are trimmed, so the zero polynomial has no coefficients and
/// its degree is not a number (is_zero() is the sentinel, never -1 arithmetic).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long long> coeffs) {
        for (long long v : coeffs) c_.push_back(to_int(v));
        trim();
    }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(const Int& a) { return IntPoly(std::vector<Int>{a}); }
    /// c * x^k
    static IntPoly monomial(const Int& c, long long k);
    static IntPoly x() { return IntPoly({0, 1}); }

    bool is_zero() const { return c_.empty(); }
    long long degree() const {
        require(!is_zero(), errc::zero_polynomial, "degree of the zero polynomial");
        return static_cast<long long>(c_.size()) - 1;
    }
    const Int& leading() const {
        require(!is_zero(), errc::zero_polynomial, "leading coefficient of the zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !is_zero() && c_.back() == 1; }
    bool is_constant() const { return c_.size() <= 1; }

    Int coeff(long long i) const {
        if (i < 0 || i >= static_cast<long long>(c_.size())) return Int(0);
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<Int>& coeffs() const { return c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& a) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    /// Multiply by x^k.
    IntPoly shifted(long long k) const;
    IntPoly pow(unsigned long e) const;
    IntPoly derivative() const;
    Int eval(const Int& x0) const;

    /// Division with remainder by a monic divisor; exact over Z.
    void divrem_monic(const IntPoly& d, IntPoly& q, IntPoly& r) const;

    /// Canonical byte key, used for memoization tables.
    std::string key() const;
    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

/// min_j v_p(coeff_j); infinity iff P = 0. p must be prime.
ValInf content_valuation(const IntPoly& P, long long p);

/// The phi-adic development (a_0, ..., a_n) with P = sum a_i phi^i and
/// deg a_i < deg phi. phi must be monic and nonconstant.
std::vector<IntPoly> phi_expansion(const IntPoly& P, const IntPoly& phi);

/// Exact resultant by a fraction-free subresultant chain; the sign follows the
/// Sylvester determinant convention Res(P,Q) = lc(P)^deg Q * prod Q(alpha_i).
Int resultant(const IntPoly& P, const IntPoly& Q);

/// gcd over Z, primitive and with positive leading coefficient.
IntPoly gcd_z(const IntPoly& A, const IntPoly& B);

/// f / gcd(f, f'), the squarefree part (radical) of a monic f, still monic.
IntPoly squarefree_part(const IntPoly& f);

} // namespace omf

#endif
