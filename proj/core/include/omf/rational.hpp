#ifndef OMF_RATIONAL_HPP
#define OMF_RATIONAL_HPP

#include <string>

#include "omf/bigint.hpp"
#include "omf/errors.hpp"

namespace omf {

/// Exact rational, always reduced, denominator >= 1.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(static_cast<long>(n)), den_(1) {}
    Rat(const Int& n) : num_(n), den_(1) {}
    Rat(const Int& n, const Int& d) : num_(n), den_(d) { normalize(); }
    Rat(long long n, long long d) : num_(static_cast<long>(n)), den_(static_cast<long>(d)) { normalize(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return sgn(num_); }

    Int floor() const { return fdiv(num_, den_); }

    Rat operator-() const { return Rat(unreduced{}, -num_, den_); }
    Rat operator+(const Rat& o) const { return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    Rat operator-(const Rat& o) const { return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
    Rat operator*(const Rat& o) const { return Rat(num_ * o.num_, den_ * o.den_); }
    Rat operator/(const Rat& o) const {
        require(o.num_ != 0, errc::division_by_zero, "rational division by zero");
        return Rat(num_ * o.den_, den_ * o.num_);
    }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rat& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator>=(const Rat& o) const { return o <= *this; }

    std::string str() const {
        if (den_ == 1) return to_string(num_);
        return to_string(num_) + "/" + to_string(den_);
    }

private:
    struct unreduced {};
    Rat(unreduced, const Int& n, const Int& d) : num_(n), den_(d) {}

    void normalize() {
        check_internal(den_ != 0, "rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        Int g = gcd(num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    Int num_, den_;
};

/// A nonnegative rational value or +infinity; infinity absorbs addition and
/// dominates every comparison.
class ValInf {
public:
    ValInf() : inf_(true) {}
    ValInf(const Rat& v) : inf_(false), v_(v) {}
    ValInf(long long v) : inf_(false), v_(v) {}
    static ValInf infinity() { return ValInf(); }

    bool is_infinite() const { return inf_; }
    const Rat& finite() const {
        check_internal(!inf_, "finite() on infinite value");
        return v_;
    }

    ValInf operator+(const ValInf& o) const {
        if (inf_ || o.inf_) return infinity();
        return ValInf(v_ + o.v_);
    }
    ValInf operator+(const Rat& o) const { return inf_ ? infinity() : ValInf(v_ + o); }

    bool operator==(const ValInf& o) const {
        if (inf_ || o.inf_) return inf_ == o.inf_;
        return v_ == o.v_;
    }
    bool operator!=(const ValInf& o) const { return !(*this == o); }
    bool operator<(const ValInf& o) const {
        if (inf_) return false;
        if (o.inf_) return true;
        return v_ < o.v_;
    }
    bool operator<=(const ValInf& o) const { return *this < o || *this == o; }
    bool operator>(const ValInf& o) const { return o < *this; }
    bool operator>=(const ValInf& o) const { return o <= *this; }

    std::string str() const { return inf_ ? "inf" : v_.str(); }

private:
    bool inf_;
    Rat v_;
};

inline ValInf min(const ValInf& a, const ValInf& b) { return a <= b ? a : b; }

} // namespace omf

#endif
