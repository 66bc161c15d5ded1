#include "omf/omtypes.hpp"

#include <algorithm>
#include <atomic>
#include <functional>

namespace omf {

namespace {

std::atomic<long long> g_checks{0};

void bezout_pair(long long h, long long e, long long& ell, long long& ellp) {
    // ell*h - ellp*e = 1 with 0 <= ell < e
    check_internal(e >= 1 && h >= 1, "slope data must be positive");
    for (long long l = 0; l < e; ++l) {
        if ((l * h) % e == 1 % e) {
            ell = l;
            ellp = (l * h - 1) / e;
            return;
        }
    }
    check_internal(false, "no Bezout pair: h and e are not coprime");
}

long long gcd_ll(long long a, long long b) {
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct SplitMix {
    unsigned long long s;
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

} // namespace

IntPoly lift_to_z(const FieldTower& t, const TowerPoly& g) {
    check_internal(g.level == 0, "lift_to_z expects a prime-field polynomial");
    (void)t;
    std::vector<Int> v;
    v.reserve(g.c.size());
    for (const auto& c : g.c) v.emplace_back(static_cast<unsigned long>(c.v0));
    return IntPoly(std::move(v));
}

long long OMType::checks_run() { return g_checks.load(); }

OMType OMType::order0(long long p, const TowerPoly& psi0) {
    require_prime(p);
    OMType t;
    t.p_ = p;
    t.tower_ = FieldTower(p).extended(psi0);
    t.verify_value_formulas();
    t.self_check();
    return t;
}

OMType OMType::extended(long long h, long long e, const TowerPoly& psi) const {
    require(has_representative(), errc::incomplete_type,
            "cannot extend a type before its representative exists");
    require(h >= 1 && e >= 1 && gcd_ll(h, e) == 1, errc::bad_key_polynomial,
            "slope must be -h/e with h,e positive coprime");
    OMType child = *this;
    child.rep_.reset();
    child.rep_v_ = 0;
    child.tower_ = tower_.extended(psi);
    TypeLevel lev;
    lev.phi = *rep_;
    lev.h = h;
    lev.e = e;
    lev.psi = psi;
    lev.f = psi.degree();
    lev.m = lev.phi.degree();
    bezout_pair(h, e, lev.ell, lev.ellp);
    lev.V = rep_v_;
    child.levels_.push_back(std::move(lev));
    child.verify_value_formulas();
    child.self_check();
    return child;
}

const TypeLevel& OMType::level(int i) const {
    check_internal(i >= 1 && i <= order(), "type level out of range");
    return levels_[static_cast<size_t>(i - 1)];
}

const IntPoly& OMType::representative() const {
    require(has_representative(), errc::incomplete_type, "no representative set");
    return *rep_;
}

long long OMType::m(int r) const {
    check_internal(r >= 1 && r <= order() + 1, "m(r) out of range");
    long long v = f0();
    for (int i = 1; i < r; ++i) v *= level(i).e * level(i).f;
    return v;
}

Int OMType::e_prod(int r) const {
    Int v(1);
    for (int i = 1; i < r; ++i) v *= to_int(level(i).e);
    return v;
}

Int OMType::f_prod(int r) const {
    Int v = to_int(f0());
    for (int i = 1; i < r; ++i) v *= to_int(level(i).f);
    return v;
}

Int OMType::v_phi(int r) const {
    check_internal(r >= 1 && r <= order() + 1, "v_phi out of range");
    if (r <= order()) return level(r).V;
    if (order() == 0) return to_int(0); // v_1(phi_1) = 0 for a monic lift
    const TypeLevel& lev = level(order());
    return to_int(lev.e) * to_int(lev.f) * (to_int(lev.e) * lev.V + to_int(lev.h));
}

const IntPoly& OMType::phi_at(int r) const {
    check_internal(r >= 1 && r <= order() + 1, "phi_at out of range");
    if (r <= order()) return level(r).phi;
    return representative();
}

const std::vector<IntPoly>& OMType::expansion(const IntPoly& P, int r, Workspace& ws) const {
    auto key = std::make_pair(r, P.key());
    auto it = ws.expansions.find(key);
    if (it != ws.expansions.end()) return it->second;
    auto [pos, ok] = ws.expansions.emplace(key, phi_expansion(P, phi_at(r)));
    return pos->second;
}

Int OMType::v_order(const IntPoly& P, int r, Workspace* ws) const {
    require(!P.is_zero(), errc::zero_polynomial, "v_r of the zero polynomial");
    check_internal(r >= 1 && r <= order() + 1, "v_order out of range");
    Workspace local;
    Workspace& W = ws ? *ws : local;
    if (r == 1) {
        ValInf c = content_valuation(P, p_);
        return c.finite().num();
    }
    auto key = std::make_pair(r, P.key());
    auto it = W.values.find(key);
    if (it != W.values.end()) return it->second;
    const TypeLevel& lev = level(r - 1);
    Int w = to_int(lev.e) * lev.V + to_int(lev.h); // v_r(phi_{r-1})
    const auto& as = expansion(P, r - 1, W);
    bool any = false;
    Int best(0);
    for (size_t i = 0; i < as.size(); ++i) {
        if (as[i].is_zero()) continue;
        Int u = to_int(lev.e) * v_order(as[i], r - 1, &W) + to_int(static_cast<long>(i)) * w;
        if (!any || u < best) best = u;
        any = true;
    }
    check_internal(any, "empty phi-adic development");
    W.values.emplace(key, best);
    return best;
}

NewtonData OMType::newton_polygon(const IntPoly& P, int r, Workspace* ws) const {
    require(!P.is_zero(), errc::zero_polynomial, "Newton polygon of the zero polynomial");
    check_internal(r >= 1 && r <= order() + 1, "newton_polygon out of range");
    Workspace local;
    Workspace& W = ws ? *ws : local;
    NewtonData nd;
    nd.coeffs = expansion(P, r, W);
    Int w = v_phi(r);
    long long ord_phi = 0;
    bool leading = true;
    for (size_t i = 0; i < nd.coeffs.size(); ++i) {
        PolyPoint pt;
        pt.x = static_cast<long long>(i);
        if (nd.coeffs[i].is_zero()) {
            pt.y = ValInf::infinity();
            if (leading) ++ord_phi;
        } else {
            leading = false;
            pt.y = ValInf(Rat(v_order(nd.coeffs[i], r, &W) + to_int(static_cast<long>(i)) * w));
        }
        nd.points.push_back(pt);
    }
    nd.polygon = principal_envelope(nd.points);
    // Lemma "shape": the infinite side has length ord_phi(P) and the total
    // length is omega_r(P). Both are kept as always-on checks.
    check_internal(nd.polygon.inf_length() == ord_phi,
                   "infinite side length differs from ord_phi");
    check_internal(nd.polygon.length() == omega(P, r, &W),
                   "polygon length differs from omega_r");
    ++g_checks;
    return nd;
}

long long OMType::omega(const IntPoly& P, int r, Workspace* ws) const {
    require(!P.is_zero(), errc::zero_polynomial, "omega of the zero polynomial");
    check_internal(r >= 1 && r <= order() + 1, "omega out of range");
    Workspace local;
    Workspace& W = ws ? *ws : local;
    if (r == 1) {
        Int v = v_order(P, 1, &W);
        std::vector<Int> cs;
        Int pw = pow_int(to_int(p_), static_cast<unsigned long>(to_ll(v)));
        for (const auto& a : P.coeffs()) cs.push_back(divexact(a, pw));
        TowerPoly red = reduce_mod_p(tower_, IntPoly(std::move(cs)));
        return ord_factor(tower_, red, psi0());
    }
    const TypeLevel& lev = level(r - 1);
    TowerPoly R = residual(P, r - 1, lev.h, lev.e, &W);
    return ord_factor(tower_, R, lev.psi);
}

Workspace::ResData OMType::res_data(const IntPoly& a, int r, Workspace& ws) const {
    auto key = std::make_pair(r, a.key());
    auto it = ws.residuals.find(key);
    if (it != ws.residuals.end()) return it->second;
    const TypeLevel& lev = level(r);
    NewtonData nd = newton_polygon(a, r, &ws);
    PolySide S = lambda_component(nd.polygon, Rat(-lev.h, lev.e));
    Workspace::ResData rd;
    rd.s = S.start_x();
    rd.R = residual(a, r, lev.h, lev.e, &ws);
    ws.residuals.emplace(key, rd);
    return rd;
}

TowerElem OMType::residual_coeff(const IntPoly& a, const Int& u, int r, Workspace& ws) const {
    check_internal(!a.is_zero(), "residual coefficient of a zero coefficient");
    TowerElem c;
    if (r == 1) {
        // u = v_1(a); the residue of a/p^u in F_1 = F_p[y]/(psi_0).
        Int pw = pow_int(to_int(p_), static_cast<unsigned long>(to_ll(u)));
        std::vector<Int> cs;
        for (const auto& x : a.coeffs()) cs.push_back(divexact(x, pw));
        TowerPoly red = reduce_mod_p(tower_, IntPoly(std::move(cs)));
        c = tower_.elem_from_poly(red);
    } else {
        const TypeLevel& lev = level(r - 1);
        Workspace::ResData rd = res_data(a, r - 1, ws);
        Int tw = divexact(to_int(rd.s) - to_int(lev.ell) * u, to_int(lev.e));
        TowerElem z = tower_.gen(r); // z_{r-1}
        TowerElem val = tower_.peval(rd.R, z);
        c = tower_.mul(tower_.pow(z, tw), val);
    }
    check_internal(!c.is_zero(), "residual coefficient vanished on the polygon");
    return c;
}

TowerPoly OMType::residual(const IntPoly& P, int r, long long lambda_h, long long lambda_e,
                           Workspace* ws) const {
    require(!P.is_zero(), errc::zero_polynomial, "residual of the zero polynomial");
    require(lambda_h >= 1 && lambda_e >= 1 && gcd_ll(lambda_h, lambda_e) == 1,
            errc::bad_key_polynomial, "lambda must be -h/e in lowest terms");
    Workspace local;
    Workspace& W = ws ? *ws : local;
    NewtonData nd = newton_polygon(P, r, &W);
    PolySide S = lambda_component(nd.polygon, Rat(-lambda_h, lambda_e));
    long long s = S.start_x();
    long long d = S.degree();
    std::vector<TowerElem> cs;
    cs.reserve(static_cast<size_t>(d) + 1);
    for (long long j = 0; j <= d; ++j) {
        long long i = s + j * lambda_e;
        const PolyPoint& pt = nd.points[static_cast<size_t>(i)];
        ValInf yline = nd.polygon.y_at(i);
        if (pt.y.is_infinite() || pt.y != yline) {
            cs.push_back(tower_.zero(r));
        } else {
            cs.push_back(residual_coeff(nd.coeffs[static_cast<size_t>(i)], pt.y.finite().num(), r, W));
        }
    }
    check_internal(!cs.front().is_zero() && !cs.back().is_zero(),
                   "residual polynomial must have nonzero ends");
    TowerPoly R = tower_.pfrom_coeffs(r, std::move(cs));
    check_internal(R.degree() == d, "residual degree differs from the side degree");
    return R;
}

TowerPoly OMType::residual_on_side(const IntPoly& P, int r, const PolySide& T,
                                   Workspace* ws) const {
    require(!P.is_zero(), errc::zero_polynomial, "residual of the zero polynomial");
    require(!T.is_infinite(), errc::bad_key_polynomial, "T must have finite slope");
    Workspace local;
    Workspace& W = ws ? *ws : local;
    NewtonData nd = newton_polygon(P, r, &W);
    Rat slope = T.slope();
    long long s0 = T.start_x();
    long long s1 = T.end_x();
    auto line_at = [&](long long x) { return T.start_y() + slope * Rat(x - s0); };
    for (long long i = s0; i <= s1; ++i) {
        if (i < 0 || i >= static_cast<long long>(nd.points.size())) continue; // a_i = 0
        const PolyPoint& pt = nd.points[static_cast<size_t>(i)];
        if (pt.y.is_infinite()) continue;
        require(pt.y.finite() >= line_at(i), errc::not_above_side,
                "a development point lies strictly below T");
    }
    long long e = to_ll(T.e());
    long long d = T.degree();
    std::vector<TowerElem> cs;
    for (long long j = 0; j <= d; ++j) {
        long long i = s0 + j * e;
        bool on = false;
        if (i >= 0 && i < static_cast<long long>(nd.points.size())) {
            const PolyPoint& pt = nd.points[static_cast<size_t>(i)];
            if (!pt.y.is_infinite() && pt.y.finite() == line_at(i) && pt.y == nd.polygon.y_at(i))
                on = true;
        }
        if (on) {
            cs.push_back(residual_coeff(nd.coeffs[static_cast<size_t>(i)],
                                        nd.points[static_cast<size_t>(i)].y.finite().num(), r, W));
        } else {
            cs.push_back(tower_.zero(r));
        }
    }
    return tower_.pfrom_coeffs(r, std::move(cs));
}

Int OMType::twist_exponent(const IntPoly& a, long long i, int r, Workspace* ws) const {
    require(!a.is_zero(), errc::zero_polynomial, "twist exponent of the zero polynomial");
    check_internal(r >= 2 && r <= order() + 1, "twist_exponent needs 2 <= r <= order+1");
    Workspace local;
    Workspace& W = ws ? *ws : local;
    const TypeLevel& lev = level(r - 1);
    Int u = v_order(a, r, &W) + to_int(i) * v_phi(r);
    Workspace::ResData rd = res_data(a, r - 1, W);
    return divexact(to_int(rd.s) - to_int(lev.ell) * u, to_int(lev.e));
}

ExponentVector OMType::ratfun(RatFun kind, int i) const {
    int k = order();
    auto zero_vec = [&]() {
        ExponentVector ev;
        ev.n.assign(static_cast<size_t>(k) + 2, to_int(0));
        return ev;
    };
    auto combine = [&](const ExponentVector& a, const Int& ca, const ExponentVector& b,
                       const Int& cb) {
        ExponentVector ev = zero_vec();
        for (size_t t = 0; t < ev.n.size(); ++t) ev.n[t] = ca * a.n[t] + cb * b.n[t];
        return ev;
    };
    std::function<ExponentVector(int)> phi_v, pi_v;
    pi_v = [&](int j) -> ExponentVector {
        // pi_1 = p; pi_{j} = Phi_{j-1}^(ell_{j-1}) / pi_{j-1}^(ellp_{j-1})
        require(j >= 1 && j <= k + 1, errc::level_out_of_range, "pi index out of range");
        ExponentVector ev = zero_vec();
        if (j == 1) {
            ev.n[0] = 1;
            return ev;
        }
        const TypeLevel& lev = level(j - 1);
        return combine(phi_v(j - 1), to_int(lev.ell), pi_v(j - 1), to_int(-lev.ellp));
    };
    phi_v = [&](int j) -> ExponentVector {
        // Phi_j = phi_j / pi_{j-1}^(f_{j-1} v_j(phi_{j-1}))
        require(j >= 1 && j <= k + 1, errc::level_out_of_range, "Phi index out of range");
        ExponentVector unit = zero_vec();
        unit.n[static_cast<size_t>(j)] = 1;
        if (j == 1) return unit;
        const TypeLevel& lo = level(j - 1);
        Int vj_prev = to_int(lo.e) * lo.V + to_int(lo.h); // v_j(phi_{j-1})
        return combine(unit, to_int(1), pi_v(j - 1), -to_int(lo.f) * vj_prev);
    };
    switch (kind) {
    case RatFun::Phi:
        return phi_v(i);
    case RatFun::pi:
        return pi_v(i);
    case RatFun::gamma: {
        require(i >= 1 && i <= k, errc::level_out_of_range, "gamma index out of range");
        const TypeLevel& lev = level(i);
        return combine(phi_v(i), to_int(lev.e), pi_v(i), to_int(-lev.h));
    }
    }
    throw internal_error("unknown rational function kind");
}

Int OMType::v_of_phi(int j, int r) const {
    check_internal(j >= 1 && j <= r && r <= order() + 1, "v_of_phi out of range");
    if (j == r) {
        if (r == 1) return to_int(0);
        const TypeLevel& lev = level(r - 1);
        return to_int(lev.e) * to_int(lev.f) * (to_int(lev.e) * lev.V + to_int(lev.h));
    }
    const TypeLevel& lj = level(j);
    Int v = to_int(lj.e) * lj.V + to_int(lj.h); // v_{j+1}(phi_j)
    for (int t = j + 1; t <= r - 1; ++t) v *= to_int(level(t).e);
    return v;
}

Int OMType::v_of_exponents(const ExponentVector& ev, int r) const {
    check_internal(static_cast<int>(ev.n.size()) >= r, "exponent vector too short");
    Int v = ev.n[0] * e_prod(r);
    for (size_t j = 1; j < ev.n.size(); ++j) {
        if (ev.n[j] == 0) continue;
        check_internal(static_cast<int>(j) <= r, "exponent beyond the v_r domain");
        v += ev.n[j] * v_of_phi(static_cast<int>(j), r);
    }
    return v;
}

ValueBound OMType::value_bound_at_root(const IntPoly& P, int r, long long lambda_h,
                                       long long lambda_e, const TowerPoly* psi_top,
                                       Workspace* ws) const {
    require(!P.is_zero(), errc::zero_polynomial, "value bound of the zero polynomial");
    Workspace local;
    Workspace& W = ws ? *ws : local;
    NewtonData nd = newton_polygon(P, r, &W);
    PolySide S = lambda_component(nd.polygon, Rat(-lambda_h, lambda_e));
    Rat H = S.start_y() + Rat(lambda_h, lambda_e) * Rat(S.start_x());
    ValueBound out;
    out.bound = H / Rat(e_prod(r));
    TowerPoly R = residual(P, r, lambda_h, lambda_e, &W);
    if (psi_top) {
        out.exact = !tower_.pmod(R, *psi_top).is_zero();
    } else {
        // Without the top residual we can only certify constants (a nonzero
        // constant evaluates to a nonzero value in any extension).
        out.exact = R.degree() == 0;
    }
    return out;
}

void OMType::set_representative(const IntPoly& phi) {
    int k = order();
    require(phi.is_monic(), errc::bad_key_polynomial, "representative must be monic");
    require(!phi.is_zero() && phi.degree() == m(k + 1), errc::bad_key_polynomial,
            "representative must have degree m_{r}");
    if (k == 0) {
        TowerPoly red = reduce_mod_p(tower_, phi);
        require(red == psi0(), errc::bad_key_polynomial,
                "phi_1 must reduce to psi_0 modulo p");
        rep_ = phi;
        rep_v_ = 0;
        ++g_checks;
        return;
    }
    const TypeLevel& lev = level(k);
    Workspace ws;
    NewtonData nd = newton_polygon(phi, k, &ws);
    require(nd.polygon.inf_length() == 0 && nd.polygon.sides().size() == 1,
            errc::bad_key_polynomial, "N_k(phi) must be one-sided of finite slope");
    const PolySide& S = nd.polygon.sides().front();
    require(S.slope() == Rat(-lev.h, lev.e), errc::bad_key_polynomial,
            "N_k(phi) must have slope lambda_k");
    require(nd.polygon.length() == lev.e * lev.f, errc::bad_key_polynomial,
            "N_k(phi) must have length e_k f_k");
    TowerPoly R = residual(phi, k, lev.h, lev.e, &ws);
    require(tower_.pmonic(R) == lev.psi, errc::bad_key_polynomial,
            "R_k(phi) must be a constant multiple of psi_k");
    Int v = v_order(phi, k + 1, &ws);
    Int expected = to_int(lev.e) * to_int(lev.f) * (to_int(lev.e) * lev.V + to_int(lev.h));
    check_internal(v == expected, "v_{k+1}(phi_{k+1}) violates the recursion");
    rep_ = phi;
    rep_v_ = v;
    ++g_checks;
}

const IntPoly& OMType::ensure_representative() {
    if (rep_) return *rep_;
    int k = order();
    if (k == 0) {
        set_representative(lift_to_z(tower_, psi0()));
        return *rep_;
    }
    const TypeLevel& lev = level(k);
    Int W = to_int(lev.e) * lev.V + to_int(lev.h);          // v_{k+1}(phi_k)
    Int V = to_int(lev.e) * to_int(lev.f) * W;              // target v_{k+1}(phi_{k+1})
    TowerElem c1 = tower_.one(k);
    if (k >= 2) {
        const TypeLevel& below = level(k - 1);
        Int exp = -divexact(to_int(below.ell) * lev.V, to_int(below.e));
        c1 = tower_.pow(tower_.gen(k), exp);
    }
    TowerElem c = tower_.pow(c1, to_int(lev.e) * to_int(lev.f));
    // phi(y) = c * (psi_k - y^{f_k}), nonzero of degree < f_k
    TowerPoly ymf = tower_.pzero(k);
    ymf.c.assign(static_cast<size_t>(lev.f) + 1, tower_.zero(k));
    ymf.c.back() = tower_.one(k);
    ymf.trim();
    TowerPoly phiy = tower_.pmul_elem(tower_.psub(lev.psi, ymf), c);
    check_internal(!phiy.is_zero() && phiy.degree() < lev.f, "degenerate residual target");
    IntPoly P = construct_p(k + 1, V, phiy);
    IntPoly cand = lev.phi.pow(static_cast<unsigned long>(lev.e * lev.f)) + P;
    try {
        set_representative(cand);
    } catch (const om_error& e) {
        // the constructed polynomial failing its own postconditions is a bug
        throw internal_error(std::string("constructed representative rejected: ") + e.what());
    }
    return *rep_;
}

IntPoly OMType::construct_p(int r, const Int& V, const TowerPoly& phi_y) const {
    check_internal(r >= 2 && r <= order() + 1, "construct_p out of range");
    const TypeLevel& lev = level(r - 1); // level r-1 data: lambda_{r-1}, psi_{r-1}
    check_internal(!phi_y.is_zero() && phi_y.level == r - 1 && phi_y.degree() < lev.f,
                   "construct_p: bad residual target");
    // T: the greatest side inside the line of slope lambda_{r-1} with ordinate
    // V/e_{r-1} at the origin, integer end points.
    Int s_big = (to_int(lev.ell) * V) % to_int(lev.e);
    if (s_big < 0) s_big += to_int(lev.e);
    long long s = to_ll(s_big);
    Int u = divexact(V - to_int(s) * to_int(lev.h), to_int(lev.e));
    check_internal(u >= 0, "construct_p: side falls below the axis");

    IntPoly out;
    for (long long j = 0; j < lev.f; ++j) {
        TowerElem cj = j < static_cast<long long>(phi_y.c.size()) ? phi_y.c[static_cast<size_t>(j)]
                                                                  : tower_.zero(r - 1);
        if (cj.is_zero()) continue;
        Int uj = u - to_int(j) * to_int(lev.h);
        check_internal(uj >= 0, "construct_p: negative ordinate on T");
        IntPoly term;
        if (r == 2) {
            // cj in F_1: lift its representative over F_0 to Z[x].
            IntPoly lift = lift_to_z(tower_, tower_.poly_from_elem(cj));
            Int pw = pow_int(to_int(p_), static_cast<unsigned long>(to_ll(uj)));
            term = lift * pw;
        } else {
            const TypeLevel& below = level(r - 2);
            Int Vj = uj - (to_int(s) + to_int(j) * to_int(lev.e)) * lev.V;
            Int sj_big = (to_int(below.ell) * Vj) % to_int(below.e);
            if (sj_big < 0) sj_big += to_int(below.e);
            Int exp = divexact(to_int(below.ell) * uj - sj_big, to_int(below.e));
            TowerElem twisted = tower_.mul(tower_.pow(tower_.gen(r - 1), exp), cj);
            TowerPoly phi_j = tower_.poly_from_elem(twisted);
            term = construct_p(r - 1, Vj, phi_j);
        }
        out = out + term * lev.phi.pow(static_cast<unsigned long>(s + j * lev.e));
    }
    check_internal(!out.is_zero() && out.degree() < m(r), "construct_p: degree overflow");
    return out;
}

void OMType::verify_value_formulas() const {
    int r = order() + 1;
    // direct polygon recursion vs the closed formulas of the value
    // proposition, for every phi_j of the type
    for (int j = 1; j <= order(); ++j) {
        Workspace ws;
        Int direct = v_order(level(j).phi, r, &ws);
        check_internal(direct == v_of_phi(j, r), "closed formula for v_r(phi_j) failed");
    }
    for (int i = 1; i <= order(); ++i) {
        Int prod(1);
        for (int t = i + 1; t <= r - 1; ++t) prod *= to_int(level(t).e);
        check_internal(v_of_exponents(ratfun(RatFun::Phi, i), r) == prod * to_int(level(i).h),
                       "v_r(Phi_i) formula failed");
        check_internal(v_of_exponents(ratfun(RatFun::pi, i + 1), r) == prod,
                       "v_r(pi_{i+1}) formula failed");
        check_internal(v_of_exponents(ratfun(RatFun::gamma, i), r) == 0,
                       "v_r(gamma_i) formula failed");
    }
    ++g_checks;
}

void OMType::self_check() const {
    // Cheap seeded spot checks of the valuation axioms and the
    // pseudo-valuation law, run on every constructed type.
    int r = order() + 1;
    SplitMix rng{0x5eedull ^ (static_cast<unsigned long long>(p_) << 20) ^
                 static_cast<unsigned long long>(order())};
    auto rand_poly = [&](long long maxdeg) {
        std::vector<Int> cs;
        long long d = rng.range(0, maxdeg);
        for (long long i = 0; i <= d; ++i) {
            long long c = rng.range(-p_ * p_, p_ * p_);
            cs.push_back(to_int(c));
        }
        IntPoly P{std::move(cs)};
        return P.is_zero() ? IntPoly::constant(1) : P;
    };
    long long maxdeg = std::min<long long>(2 * m(r), 6);
    Workspace ws;
    for (int it = 0; it < 3; ++it) {
        IntPoly P = rand_poly(maxdeg), Q = rand_poly(maxdeg);
        Int vp = v_order(P, r, &ws), vq = v_order(Q, r, &ws);
        check_internal(v_order(P * Q, r, &ws) == vp + vq, "v_r is not multiplicative");
        IntPoly Sm = P + Q;
        if (!Sm.is_zero())
            check_internal(v_order(Sm, r, &ws) >= std::min(vp, vq), "v_r violates the ultrametric");
        if (vp == vq && P != Q) {
            long long op = omega(P, r, &ws), oq = omega(Q, r, &ws);
            if (op != oq) {
                check_internal(omega(P - Q, r, &ws) == std::min(op, oq),
                               "omega_r pseudo-valuation law failed");
            }
        }
        ++g_checks;
    }
}

} // namespace omf
