#include "omf/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace omf {

IntPoly IntPoly::monomial(const Int& c, long long k) {
    if (c == 0) return IntPoly();
    std::vector<Int> v(static_cast<size_t>(k) + 1, to_int(0));
    v.back() = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()), to_int(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()), to_int(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> v(c_);
    for (auto& x : v) x = -x;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> v(c_.size() + o.c_.size() - 1, to_int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const Int& a) const {
    if (a == 0) return IntPoly();
    std::vector<Int> v(c_);
    for (auto& x : v) x *= a;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::shifted(long long k) const {
    if (is_zero()) return IntPoly();
    std::vector<Int> v(static_cast<size_t>(k), to_int(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return IntPoly(std::move(v));
}

IntPoly IntPoly::pow(unsigned long e) const {
    IntPoly r = IntPoly::constant(1);
    IntPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * to_int(static_cast<long>(i));
    return IntPoly(std::move(v));
}

Int IntPoly::eval(const Int& x0) const {
    Int r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x0 + c_[i];
    return r;
}

void IntPoly::divrem_monic(const IntPoly& d, IntPoly& q, IntPoly& r) const {
    require(d.is_monic() && d.degree() >= 1, errc::bad_key_polynomial,
            "divisor must be monic of positive degree");
    std::vector<Int> rem(c_);
    long long dd = d.degree();
    long long n = static_cast<long long>(rem.size()) - 1;
    if (n < dd) {
        q = IntPoly();
        r = *this;
        return;
    }
    std::vector<Int> quo(static_cast<size_t>(n - dd) + 1, to_int(0));
    for (long long i = n; i >= dd; --i) {
        Int c = rem[static_cast<size_t>(i)];
        if (c == 0) continue;
        quo[static_cast<size_t>(i - dd)] = c;
        for (long long j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(i - dd + j)] -= c * d.coeff(j);
    }
    q = IntPoly(std::move(quo));
    rem.resize(static_cast<size_t>(dd));
    r = IntPoly(std::move(rem));
}

std::string IntPoly::key() const {
    std::ostringstream os;
    for (const auto& a : c_) os << a.get_str(62) << ',';
    return os.str();
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long long i = degree(); i >= 0; --i) {
        Int a = coeff(i);
        if (a == 0) continue;
        if (!first) os << (a > 0 ? "+" : "-");
        else if (a < 0) os << "-";
        Int m = abs(a);
        if (i == 0 || m != 1) os << to_string(m);
        if (i > 0) {
            if (m != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

ValInf content_valuation(const IntPoly& P, long long p) {
    require_prime(p);
    if (P.is_zero()) return ValInf::infinity();
    Int pz = to_int(p);
    long long best = -1;
    for (const auto& a : P.coeffs()) {
        if (a == 0) continue;
        long long v = p_valuation(a, pz);
        if (best < 0 || v < best) best = v;
        if (best == 0) break;
    }
    return ValInf(Rat(best));
}

std::vector<IntPoly> phi_expansion(const IntPoly& P, const IntPoly& phi) {
    require(!phi.is_zero() && phi.is_monic() && phi.degree() >= 1, errc::bad_key_polynomial,
            "phi must be monic of positive degree");
    require(!P.is_zero(), errc::zero_polynomial, "phi_expansion of the zero polynomial");
    std::vector<IntPoly> out;
    IntPoly cur = P;
    while (!cur.is_zero()) {
        IntPoly q, r;
        cur.divrem_monic(phi, q, r);
        out.push_back(r);
        cur = q;
    }
    return out;
}

namespace {

// Pseudo-remainder: lc(B)^(degA-degB+1) * A mod B.
IntPoly prem(const IntPoly& A, const IntPoly& B) {
    IntPoly r = A;
    long long db = B.degree();
    const Int& b = B.leading();
    long long steps = A.degree() - db + 1;
    for (long long k = 0; k < steps; ++k) {
        if (r.is_zero() || r.degree() < db) {
            r = r * b;
            continue;
        }
        long long dr = r.degree();
        IntPoly t = B.shifted(dr - db) * r.leading();
        r = r * b - t;
        check_internal(r.is_zero() || r.degree() < dr, "prem did not reduce the degree");
    }
    return r;
}

Int content_z(const IntPoly& P) {
    Int g = 0;
    for (const auto& a : P.coeffs()) g = gcd(g, a);
    return g;
}

} // namespace

Int resultant(const IntPoly& P, const IntPoly& Q) {
    require(!P.is_zero() && !Q.is_zero(), errc::zero_polynomial, "resultant of the zero polynomial");
    // Fraction-free subresultant chain (Cohen, "A Course in Computational
    // Algebraic Number Theory", Algorithm 3.3.7).
    IntPoly A = P, B = Q;
    int s = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        std::swap(A, B);
    }
    if (B.degree() == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), B.leading().get_mpz_t(), static_cast<unsigned long>(A.degree()));
        return s * r;
    }
    Int g(1), h(1);
    while (true) {
        long long delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        IntPoly R = prem(A, B);
        A = B;
        Int hd = pow_int(h, static_cast<unsigned long>(delta));
        if (R.is_zero()) return to_int(0);
        {
            std::vector<Int> v(R.coeffs());
            for (auto& x : v) x = divexact(x, g * hd);
            B = IntPoly(std::move(v));
        }
        g = A.leading();
        // h <- g^delta * h^(1-delta)
        if (delta > 0) h = divexact(pow_int(g, static_cast<unsigned long>(delta)),
                                    pow_int(h, static_cast<unsigned long>(delta - 1)));
        if (B.degree() == 0) break;
    }
    Int num = pow_int(B.leading(), static_cast<unsigned long>(A.degree()));
    Int den = pow_int(h, static_cast<unsigned long>(A.degree() - 1));
    return s * divexact(num, den);
}

IntPoly gcd_z(const IntPoly& A, const IntPoly& B) {
    if (A.is_zero() && B.is_zero()) return IntPoly();
    if (A.is_zero() || B.is_zero()) {
        IntPoly r = A.is_zero() ? B : A;
        Int c = content_z(r);
        std::vector<Int> v(r.coeffs());
        for (auto& x : v) x = divexact(x, r.leading() < 0 ? -c : c);
        return IntPoly(std::move(v));
    }
    // Primitive PRS via pseudo-remainders; fine at the sizes we handle.
    Int cont = gcd(content_z(A), content_z(B));
    IntPoly a = A, b = B;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero() && b.degree() > 0) {
        IntPoly r = prem(a, b);
        a = b;
        if (r.is_zero()) {
            b = IntPoly();
            break;
        }
        Int c = content_z(r);
        std::vector<Int> v(r.coeffs());
        for (auto& x : v) x = divexact(x, c);
        b = IntPoly(std::move(v));
    }
    if (!b.is_zero()) return IntPoly::constant(cont); // coprime up to content
    Int c = content_z(a);
    std::vector<Int> v(a.coeffs());
    for (auto& x : v) x = divexact(x, a.leading() < 0 ? -c : c);
    IntPoly g(std::move(v));
    return g * cont;
}

IntPoly squarefree_part(const IntPoly& f) {
    require(f.is_monic(), errc::not_monic, "squarefree_part expects a monic polynomial");
    if (f.degree() == 0) return f;
    IntPoly g = gcd_z(f, f.derivative());
    if (g.is_constant()) return f;
    IntPoly q, r;
    f.divrem_monic(g, q, r); // g is monic: it divides the monic f and has lc dividing 1
    check_internal(r.is_zero(), "squarefree_part: gcd does not divide f");
    return q;
}

} // namespace omf
