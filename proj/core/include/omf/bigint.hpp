#ifndef OMF_BIGINT_HPP
#define OMF_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "omf/errors.hpp"

namespace omf {

/// Exact arbitrary-precision integer.
using Int = mpz_class;

// mpz_class has no long long constructor; funnel all integer conversions
// through these.
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }
inline Int to_int(unsigned long long v) { return Int(static_cast<unsigned long>(v)); }
inline Int to_int(long v) { return Int(v); }
inline Int to_int(unsigned long v) { return Int(v); }
inline Int to_int(int v) { return Int(v); }
inline Int to_int(unsigned v) { return Int(v); }
inline Int to_int(const Int& v) { return v; }
inline Int to_int(const std::string& s) { return Int(s); }

inline Int int_from_string(const std::string& s) { return Int(s); }
inline std::string to_string(const Int& a) { return a.get_str(); }

inline bool fits_ll(const Int& a) { return a.fits_slong_p(); }
inline long long to_ll(const Int& a) {
    check_internal(a.fits_slong_p(), "integer does not fit in a machine word");
    return a.get_si();
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// v_p(a) for a != 0.
inline long long p_valuation(const Int& a, const Int& p) {
    check_internal(a != 0, "p_valuation of zero");
    Int rest;
    return static_cast<long long>(mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()));
}

/// Floor division (round toward -infinity), matching valuation conventions.
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int divexact(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    check_internal(r == 0, "divexact: division is not exact");
    return q;
}

inline unsigned long long mulmod_u64(unsigned long long a, unsigned long long b, unsigned long long m) {
    return static_cast<unsigned long long>((static_cast<unsigned __int128>(a) * b) % m);
}

inline unsigned long long powmod_u64(unsigned long long a, unsigned long long e, unsigned long long m) {
    unsigned long long r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(unsigned long long n) {
    if (n < 2) return false;
    for (unsigned long long q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    unsigned long long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (unsigned long long a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        unsigned long long x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

inline void require_prime(long long p) {
    if (p >= 2 && is_prime_u64(static_cast<unsigned long long>(p))) return;
    throw om_error(errc::not_prime, "p = " + std::to_string(p) + " is not a prime");
}

} // namespace omf

#endif
