#include "omf/gftower.hpp"

#include <algorithm>
#include <sstream>

namespace omf {

bool TowerElem::operator==(const TowerElem& o) const {
    if (level != o.level) return false;
    if (level == 0) return v0 == o.v0;
    return sub == o.sub;
}

const TowerElem& TowerPoly::coeff(long long i) const {
    static const TowerElem kZero{};
    if (i < 0 || i >= static_cast<long long>(c.size())) {
        // zero of the right level is only needed for comparisons; callers
        // treat any zero alike, so a level-0 zero is fine here.
        return kZero;
    }
    return c[static_cast<size_t>(i)];
}

FieldTower::FieldTower(long long p) : p_(p) {
    require_prime(p);
    require(p < (1ll << 31), errc::unsupported, "primes must be < 2^31");
}

const TowerPoly& FieldTower::psi(int i) const {
    check_internal(i >= 0 && i < height(), "psi index out of range");
    return psis_[static_cast<size_t>(i)];
}

long long FieldTower::fdeg(int i) const {
    check_internal(i >= 0 && i < height(), "fdeg index out of range");
    return fdeg_[static_cast<size_t>(i)];
}

Int FieldTower::field_size(int k) const {
    check_level(k);
    unsigned long e = 1;
    for (int i = 0; i < k; ++i) e *= static_cast<unsigned long>(fdeg_[static_cast<size_t>(i)]);
    return pow_int(to_int(p_), e);
}

FieldTower FieldTower::extended(const TowerPoly& psi) const {
    check_internal(psi.level == height(), "psi must live over the top field");
    require(!psi.is_zero() && psi.degree() >= 1, errc::bad_key_polynomial,
            "defining polynomial must be nonconstant");
    require(pis_monic(psi), errc::bad_key_polynomial, "defining polynomial must be monic");
    if (height() >= 1) {
        bool is_y = psi.degree() == 1 && psi.c[0].is_zero();
        require(!is_y, errc::bad_key_polynomial, "psi_i = y is not allowed above level 0");
    }
    require(is_irreducible(psi), errc::bad_key_polynomial,
            "defining polynomial is not irreducible: " + pstr(psi));
    FieldTower t = *this;
    t.psis_.push_back(psi);
    t.fdeg_.push_back(psi.degree());
    return t;
}

TowerElem FieldTower::zero(int level) const {
    check_level(level);
    TowerElem e;
    e.level = level;
    return e;
}

TowerElem FieldTower::one(int level) const { return from_int(level, 1); }

TowerElem FieldTower::from_int(int level, const Int& n) const {
    check_level(level);
    TowerElem e;
    e.level = 0;
    Int m = n % to_int(p_);
    if (m < 0) m += to_int(p_);
    e.v0 = m.get_ui();
    return embed(e, level);
}

TowerElem FieldTower::gen(int level) const {
    check_internal(level >= 1 && level <= height(), "gen needs level >= 1");
    long long f = fdeg(level - 1);
    if (f == 1) {
        // psi = y + c, so z = -c embedded one level up.
        const TowerPoly& ps = psi(level - 1);
        TowerElem z = neg(ps.c.empty() ? zero(level - 1) : ps.c[0]);
        TowerElem e;
        e.level = level;
        if (!z.is_zero()) e.sub = {z};
        return e;
    }
    TowerElem e;
    e.level = level;
    e.sub = {zero(level - 1), one(level - 1)};
    return e;
}

TowerElem FieldTower::embed(const TowerElem& a, int level) const {
    check_level(level);
    check_internal(a.level <= level, "cannot embed downward");
    TowerElem e = a;
    while (e.level < level) {
        TowerElem up;
        up.level = e.level + 1;
        if (!e.is_zero()) up.sub = {e};
        e = std::move(up);
    }
    return e;
}

TowerElem FieldTower::add(const TowerElem& a, const TowerElem& b) const {
    check_internal(a.level == b.level, "level mismatch in add");
    if (a.level == 0) {
        TowerElem e;
        e.level = 0;
        e.v0 = (a.v0 + b.v0) % static_cast<unsigned long long>(p_);
        return e;
    }
    TowerElem e;
    e.level = a.level;
    size_t n = std::max(a.sub.size(), b.sub.size());
    e.sub.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        const TowerElem& x = i < a.sub.size() ? a.sub[i] : zero(a.level - 1);
        const TowerElem& y = i < b.sub.size() ? b.sub[i] : zero(a.level - 1);
        e.sub.push_back(add(x, y));
    }
    while (!e.sub.empty() && e.sub.back().is_zero()) e.sub.pop_back();
    return e;
}

TowerElem FieldTower::neg(const TowerElem& a) const {
    if (a.level == 0) {
        TowerElem e;
        e.level = 0;
        e.v0 = a.v0 == 0 ? 0 : static_cast<unsigned long long>(p_) - a.v0;
        return e;
    }
    TowerElem e;
    e.level = a.level;
    e.sub.reserve(a.sub.size());
    for (const auto& x : a.sub) e.sub.push_back(neg(x));
    return e;
}

TowerElem FieldTower::sub(const TowerElem& a, const TowerElem& b) const { return add(a, neg(b)); }

TowerElem FieldTower::mul(const TowerElem& a, const TowerElem& b) const {
    check_internal(a.level == b.level, "level mismatch in mul");
    if (a.level == 0) {
        TowerElem e;
        e.level = 0;
        e.v0 = mulmod_u64(a.v0, b.v0, static_cast<unsigned long long>(p_));
        return e;
    }
    if (a.is_zero() || b.is_zero()) return zero(a.level);
    int lo = a.level - 1;
    TowerPoly pa{lo, a.sub}, pb{lo, b.sub};
    TowerPoly prod = pmul(pa, pb);
    TowerPoly red = pmod(prod, psi(lo));
    TowerElem e;
    e.level = a.level;
    e.sub = std::move(red.c);
    return e;
}

TowerElem FieldTower::inv(const TowerElem& a) const {
    require(!a.is_zero(), errc::division_by_zero, "inverse of zero");
    if (a.level == 0) {
        unsigned long long r = powmod_u64(a.v0, static_cast<unsigned long long>(p_ - 2),
                                          static_cast<unsigned long long>(p_));
        TowerElem e;
        e.level = 0;
        e.v0 = r;
        return e;
    }
    // Extended Euclid on (rep(a), psi) over F_{level-1}.
    int lo = a.level - 1;
    TowerPoly r0 = psi(lo), r1{lo, a.sub};
    TowerPoly s0 = pzero(lo), s1 = pconst(lo, one(lo));
    while (!r1.is_zero() && r1.degree() > 0) {
        TowerPoly q, r;
        pdivrem(r0, r1, q, r);
        TowerPoly s = psub(s0, pmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    check_internal(!r1.is_zero(), "inv: element shares a factor with psi");
    TowerElem c = inv(r1.c[0]); // r1 is a nonzero constant
    TowerPoly s = pmul_elem(s1, c);
    s = pmod(s, psi(lo));
    TowerElem e;
    e.level = a.level;
    e.sub = std::move(s.c);
    return e;
}

TowerElem FieldTower::pow(const TowerElem& a, const Int& e) const {
    if (e < 0) {
        require(!a.is_zero(), errc::division_by_zero, "negative power of zero");
        return pow(inv(a), -e);
    }
    TowerElem r = one(a.level);
    TowerElem b = a;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = mul(r, b);
        b = mul(b, b);
        k >>= 1;
    }
    return r;
}

TowerElem FieldTower::elem_by_index(int level, const Int& idx) const {
    check_level(level);
    if (level == 0) {
        Int m = idx % to_int(p_);
        if (m < 0) m += to_int(p_);
        TowerElem e;
        e.level = 0;
        e.v0 = m.get_ui();
        return e;
    }
    Int q = field_size(level - 1);
    Int rest = idx;
    TowerElem e;
    e.level = level;
    long long f = fdeg(level - 1);
    for (long long i = 0; i < f && rest != 0; ++i) {
        Int digit = rest % q;
        rest /= q;
        e.sub.push_back(elem_by_index(level - 1, digit));
    }
    while (!e.sub.empty() && e.sub.back().is_zero()) e.sub.pop_back();
    return e;
}

Int FieldTower::elem_to_index(const TowerElem& a) const {
    if (a.level == 0) return to_int(static_cast<unsigned long>(a.v0));
    Int q = field_size(a.level - 1);
    Int r = 0;
    for (size_t i = a.sub.size(); i-- > 0;) r = r * q + elem_to_index(a.sub[i]);
    return r;
}

int FieldTower::cmp(const TowerElem& a, const TowerElem& b) const {
    check_internal(a.level == b.level, "level mismatch in cmp");
    Int ia = elem_to_index(a), ib = elem_to_index(b);
    return ia < ib ? -1 : (ia == ib ? 0 : 1);
}

TowerPoly FieldTower::pconst(int level, const TowerElem& a) const {
    TowerPoly r{level, {}};
    if (!a.is_zero()) r.c = {a};
    return r;
}

TowerPoly FieldTower::py(int level) const {
    return TowerPoly{level, {zero(level), one(level)}};
}

TowerPoly FieldTower::pfrom_coeffs(int level, std::vector<TowerElem> cs) const {
    for (auto& c : cs)
        if (c.level != level) c = embed(c, level);
    TowerPoly r{level, std::move(cs)};
    r.trim();
    return r;
}

TowerPoly FieldTower::padd(const TowerPoly& a, const TowerPoly& b) const {
    check_internal(a.level == b.level, "level mismatch in padd");
    TowerPoly r{a.level, {}};
    size_t n = std::max(a.c.size(), b.c.size());
    r.c.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        TowerElem x = i < a.c.size() ? a.c[i] : zero(a.level);
        TowerElem y = i < b.c.size() ? b.c[i] : zero(a.level);
        r.c.push_back(add(x, y));
    }
    r.trim();
    return r;
}

TowerPoly FieldTower::psub(const TowerPoly& a, const TowerPoly& b) const {
    TowerPoly nb{b.level, {}};
    nb.c.reserve(b.c.size());
    for (const auto& x : b.c) nb.c.push_back(neg(x));
    return padd(a, nb);
}

TowerPoly FieldTower::pmul(const TowerPoly& a, const TowerPoly& b) const {
    check_internal(a.level == b.level, "level mismatch in pmul");
    if (a.is_zero() || b.is_zero()) return pzero(a.level);
    TowerPoly r{a.level, std::vector<TowerElem>(a.c.size() + b.c.size() - 1, zero(a.level))};
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = add(r.c[i + j], mul(a.c[i], b.c[j]));
    r.trim();
    return r;
}

TowerPoly FieldTower::pmul_elem(const TowerPoly& a, const TowerElem& s) const {
    if (s.is_zero()) return pzero(a.level);
    TowerPoly r{a.level, {}};
    r.c.reserve(a.c.size());
    for (const auto& x : a.c) r.c.push_back(mul(x, s));
    r.trim();
    return r;
}

namespace {

bool elem_is_one(const TowerElem& a) {
    const TowerElem* e = &a;
    while (e->level > 0) {
        if (e->sub.size() != 1) return false;
        e = &e->sub.front();
    }
    return e->v0 == 1;
}

} // namespace

void FieldTower::pdivrem(const TowerPoly& a, const TowerPoly& b, TowerPoly& q, TowerPoly& r) const {
    check_internal(a.level == b.level, "level mismatch in pdivrem");
    require(!b.is_zero(), errc::division_by_zero, "polynomial division by zero");
    long long db = b.degree();
    bool monic = elem_is_one(b.c.back());
    TowerElem lead_inv = monic ? TowerElem{} : inv(b.c.back());
    r = a;
    q = pzero(a.level);
    if (a.is_zero() || a.degree() < db) return;
    q.c.assign(static_cast<size_t>(a.degree() - db) + 1, zero(a.level));
    while (!r.is_zero() && r.degree() >= db) {
        long long dr = r.degree();
        TowerElem c = monic ? r.c.back() : mul(r.c.back(), lead_inv);
        q.c[static_cast<size_t>(dr - db)] = c;
        for (long long j = 0; j <= db; ++j) {
            size_t idx = static_cast<size_t>(dr - db + j);
            if (b.c[static_cast<size_t>(j)].is_zero()) continue;
            r.c[idx] = sub(r.c[idx], mul(c, b.c[static_cast<size_t>(j)]));
        }
        r.trim();
    }
    q.trim();
}

TowerPoly FieldTower::pmod(const TowerPoly& a, const TowerPoly& b) const {
    TowerPoly q, r;
    pdivrem(a, b, q, r);
    return r;
}

TowerPoly FieldTower::pmonic(const TowerPoly& a) const {
    require(!a.is_zero(), errc::zero_polynomial, "cannot normalize the zero polynomial");
    if (a.c.back() == one(a.level)) return a;
    return pmul_elem(a, inv(a.c.back()));
}

TowerPoly FieldTower::pgcd(const TowerPoly& a, const TowerPoly& b) const {
    TowerPoly x = a, y = b;
    while (!y.is_zero()) {
        TowerPoly r = pmod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return pmonic(x);
}

TowerPoly FieldTower::pderiv(const TowerPoly& a) const {
    if (a.c.size() <= 1) return pzero(a.level);
    TowerPoly r{a.level, {}};
    r.c.reserve(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i)
        r.c.push_back(mul(a.c[i], from_int(a.level, to_int(static_cast<unsigned long>(i)))));
    r.trim();
    return r;
}

TowerPoly FieldTower::ppow_mod(const TowerPoly& base, const Int& e, const TowerPoly& mod) const {
    check_internal(e >= 0, "ppow_mod needs a nonnegative exponent");
    TowerPoly r = pconst(base.level, one(base.level));
    TowerPoly b = pmod(base, mod);
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = pmod(pmul(r, b), mod);
        b = pmod(pmul(b, b), mod);
        k >>= 1;
    }
    return r;
}

TowerPoly FieldTower::ppow(const TowerPoly& base, unsigned long e) const {
    TowerPoly r = pconst(base.level, one(base.level));
    TowerPoly b = base;
    while (e) {
        if (e & 1) r = pmul(r, b);
        b = pmul(b, b);
        e >>= 1;
    }
    return r;
}

TowerElem FieldTower::peval(const TowerPoly& a, const TowerElem& x) const {
    check_internal(a.level <= x.level, "peval: argument below coefficient level");
    TowerElem r = zero(x.level);
    for (size_t i = a.c.size(); i-- > 0;) r = add(mul(r, x), embed(a.c[i], x.level));
    return r;
}

TowerElem FieldTower::elem_from_poly(const TowerPoly& a) const {
    int level = a.level + 1;
    check_level(level);
    TowerPoly red = pmod(a, psi(a.level));
    TowerElem e;
    e.level = level;
    e.sub = std::move(red.c);
    return e;
}

TowerPoly FieldTower::poly_from_elem(const TowerElem& a) const {
    check_internal(a.level >= 1, "poly_from_elem needs level >= 1");
    TowerPoly r{a.level - 1, a.sub};
    r.trim();
    return r;
}

int FieldTower::pcmp(const TowerPoly& a, const TowerPoly& b) const {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size() ? -1 : 1;
    for (size_t i = 0; i < a.c.size(); ++i) {
        int c = cmp(a.c[i], b.c[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string FieldTower::estr(const TowerElem& a) const {
    if (a.level == 0) return std::to_string(a.v0);
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < a.sub.size(); ++i) {
        if (i) os << ',';
        os << estr(a.sub[i]);
    }
    os << ']';
    return os.str();
}

std::string FieldTower::pstr(const TowerPoly& a) const {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i].is_zero()) continue;
        if (!first) os << "+";
        bool is_one = a.c[i] == one(a.level);
        if (i == 0 || !is_one) os << estr(a.c[i]);
        if (i > 0) {
            if (!is_one) os << "*";
            os << "y";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

bool FieldTower::is_irreducible(const TowerPoly& a) const {
    if (a.is_zero() || a.degree() < 1) return false;
    auto fs = factor_poly(*this, a);
    return fs.size() == 1 && fs[0].second == 1;
}

TowerElem tower_add(const FieldTower& t, const TowerElem& a, const TowerElem& b) {
    require(a.level == b.level, errc::level_mismatch, "operands live at different tower levels");
    return t.add(a, b);
}

TowerElem tower_mul(const FieldTower& t, const TowerElem& a, const TowerElem& b) {
    require(a.level == b.level, errc::level_mismatch, "operands live at different tower levels");
    return t.mul(a, b);
}

TowerElem tower_inv(const FieldTower& t, const TowerElem& a) { return t.inv(a); }

TowerElem tower_pow(const FieldTower& t, const TowerElem& a, const Int& e) { return t.pow(a, e); }

namespace {

// c^(q/p): the p-th root in F_q.
TowerElem pth_root(const FieldTower& t, const TowerElem& a) {
    Int q = t.field_size(a.level);
    return t.pow(a, q / to_int(t.p()));
}

TowerPoly poly_pth_root(const FieldTower& t, const TowerPoly& g) {
    long long p = t.p();
    TowerPoly r{g.level, {}};
    for (size_t i = 0; i < g.c.size(); i += static_cast<size_t>(p)) {
        r.c.push_back(pth_root(t, g.c[i]));
    }
    r.trim();
    return r;
}

void squarefree_decompose(const FieldTower& t, TowerPoly g, int scale,
                          std::vector<std::pair<TowerPoly, int>>& out) {
    long long p = t.p();
    TowerPoly d = t.pderiv(g);
    if (d.is_zero()) {
        // g is a polynomial in y^p
        squarefree_decompose(t, poly_pth_root(t, g), scale * static_cast<int>(p), out);
        return;
    }
    TowerPoly c = t.pgcd(g, d);
    TowerPoly q, r;
    t.pdivrem(g, c, q, r);
    check_internal(r.is_zero(), "squarefree: gcd does not divide");
    TowerPoly w = q;
    int i = 1;
    while (!(w.degree() == 0)) {
        TowerPoly y = t.pgcd(w, c);
        t.pdivrem(w, y, q, r);
        check_internal(r.is_zero(), "squarefree: inner division not exact");
        if (q.degree() > 0) out.emplace_back(q, i * scale);
        w = y;
        t.pdivrem(c, y, q, r);
        check_internal(r.is_zero(), "squarefree: c division not exact");
        c = q;
        ++i;
    }
    if (c.degree() > 0) squarefree_decompose(t, poly_pth_root(t, c), scale * static_cast<int>(p), out);
}

// Deterministic equal-degree splitting of a monic product of degree-d
// irreducibles (Cantor-Zassenhaus; trace construction in characteristic 2).
// Trial elements come from a fixed-seed counter-driven generator: plain
// digit enumeration can stall for thousands of steps when only a high
// coefficient separates the factors, while this sequence is still identical
// on every run.
void equal_degree_split(const FieldTower& t, const TowerPoly& g, long long d,
                        std::vector<TowerPoly>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    Int q = t.field_size(g.level);
    unsigned long long counter = 0x0edf5eed2bad1dEAull;
    auto next = [&counter]() {
        unsigned long long z = (counter += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    while (true) {
        TowerPoly a{g.level, {}};
        {
            long long deg_bound = g.degree();
            for (long long i = 0; i < deg_bound; ++i)
                a.c.push_back(t.elem_by_index(g.level, to_int(next()) % q));
            a.trim();
        }
        if (a.is_zero() || a.degree() == 0) continue;
        TowerPoly h;
        if (t.p() == 2) {
            // absolute trace: a + a^2 + a^4 + ... over F_2, q^d = 2^(m d)
            unsigned long m = mpz_sizeinbase(q.get_mpz_t(), 2) - 1; // q = 2^m
            TowerPoly tr = t.pzero(g.level);
            TowerPoly cur = t.pmod(a, g);
            for (unsigned long i = 0; i < m * static_cast<unsigned long>(d); ++i) {
                tr = t.padd(tr, cur);
                cur = t.pmod(t.pmul(cur, cur), g);
            }
            h = t.pgcd(tr, g);
        } else {
            Int e = (pow_int(q, static_cast<unsigned long>(d)) - 1) / 2;
            TowerPoly b = t.ppow_mod(a, e, g);
            b = t.psub(b, t.pconst(g.level, t.one(g.level)));
            h = t.pgcd(b, g);
        }
        if (!h.is_zero() && h.degree() > 0 && h.degree() < g.degree()) {
            TowerPoly q2, r2;
            t.pdivrem(g, h, q2, r2);
            check_internal(r2.is_zero(), "EDF: split factor does not divide");
            equal_degree_split(t, h, d, out);
            equal_degree_split(t, q2, d, out);
            return;
        }
    }
}

} // namespace

std::vector<std::pair<TowerPoly, int>> factor_poly(const FieldTower& t, const TowerPoly& g) {
    require(!g.is_zero(), errc::zero_polynomial, "factor_poly of the zero polynomial");
    std::vector<std::pair<TowerPoly, int>> out;
    if (g.degree() == 0) return out;
    TowerPoly mon = t.pmonic(g);

    std::vector<std::pair<TowerPoly, int>> sqf;
    squarefree_decompose(t, mon, 1, sqf);

    Int q = t.field_size(g.level);
    for (const auto& [part, mult] : sqf) {
        // distinct-degree on the squarefree part
        TowerPoly u = part;
        TowerPoly h = t.py(g.level);
        h = t.pmod(h, u);
        long long d = 0;
        while (!(u.degree() == 0) && 2 * (d + 1) <= u.degree()) {
            ++d;
            h = t.ppow_mod(h, q, u);
            TowerPoly diff = t.psub(h, t.pmod(t.py(g.level), u));
            TowerPoly gg = t.pgcd(diff, u);
            if (!gg.is_zero() && gg.degree() > 0) {
                std::vector<TowerPoly> irr;
                equal_degree_split(t, gg, d, irr);
                for (auto& f : irr) out.emplace_back(std::move(f), mult);
                TowerPoly q2, r2;
                t.pdivrem(u, gg, q2, r2);
                check_internal(r2.is_zero(), "DDF: factor does not divide");
                u = q2;
                h = t.pmod(h, u);
            }
        }
        if (u.degree() > 0) out.emplace_back(u, mult);
    }

    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        if (a.first.c.size() != b.first.c.size()) return a.first.c.size() < b.first.c.size();
        return t.pcmp(a.first, b.first) < 0;
    });
    return out;
}

long long ord_factor(const FieldTower& t, const TowerPoly& g, const TowerPoly& psi) {
    require(!g.is_zero(), errc::zero_polynomial, "ord_factor of the zero polynomial");
    require(!psi.is_zero() && t.pis_monic(psi) && psi.degree() >= 1, errc::bad_key_polynomial,
            "psi must be monic of positive degree");
    long long k = 0;
    TowerPoly cur = g;
    while (cur.degree() >= psi.degree()) {
        TowerPoly q, r;
        t.pdivrem(cur, psi, q, r);
        if (!r.is_zero()) break;
        ++k;
        cur = q;
        if (cur.degree() == 0) break;
    }
    return k;
}

TowerPoly reduce_mod_p(const FieldTower& t, const IntPoly& P) {
    TowerPoly r{0, {}};
    if (P.is_zero()) return r;
    r.c.reserve(static_cast<size_t>(P.degree()) + 1);
    for (const auto& a : P.coeffs()) r.c.push_back(t.from_int(0, a));
    r.trim();
    return r;
}

Int irreducible_count(const Int& q, long long d) {
    // (1/d) sum_{e | d} mu(e) q^(d/e)
    Int total = 0;
    for (long long e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        // Moebius mu(e) by trial factorization (e is tiny here).
        long long n = e;
        int mu = 1;
        for (long long f = 2; f * f <= n; ++f) {
            if (n % f == 0) {
                n /= f;
                if (n % f == 0) { mu = 0; break; }
                mu = -mu;
            }
        }
        if (mu != 0 && n > 1) mu = -mu;
        if (mu == 0) continue;
        total += to_int(mu) * pow_int(q, static_cast<unsigned long>(d / e));
    }
    return divexact(total, to_int(d));
}

} // namespace omf
