#include "omf/montes.hpp"

#include <algorithm>
#include <ostream>

namespace omf {

namespace {

void trace_node(std::ostream* tr, int r, const OMType& t, const NewtonData& nd) {
    if (!tr) return;
    *tr << "[order " << r << "] phi_" << r << " = " << t.phi_at(r).str() << "\n  points:";
    for (const auto& pt : nd.points) *tr << " (" << pt.x << "," << pt.y.str() << ")";
    *tr << "\n  " << polygon_to_ascii(nd.polygon, nd.points);
}

FactorReport make_report(OMType node, const IntPoly& f, bool from_inf) {
    FactorReport rep;
    int R = node.order();
    rep.degree = node.m(R + 1);
    rep.e = node.e_prod(R + 1);
    rep.f_res = node.f_prod(R + 1);
    rep.from_infinite_side = from_inf;
    rep.approx = node.ensure_representative();
    if (from_inf) {
        rep.exact = true;
        rep.approx_quality = ValInf::infinity();
    } else {
        Workspace ws;
        NewtonData nd = node.newton_polygon(f, R + 1, &ws);
        check_internal(nd.polygon.length() == 1, "complete type with omega > 1");
        if (nd.polygon.inf_length() == 1) {
            rep.exact = true;
            rep.approx_quality = ValInf::infinity();
        } else {
            const PolySide& S = nd.polygon.sides().front();
            check_internal(S.e() == 1, "length-one side must have integral slope");
            rep.approx_quality =
                ValInf(Rat(node.v_phi(R + 1) + to_int(S.degree()) * S.h(), node.e_prod(R + 1)));
        }
    }
    for (int s = 1; s <= R; ++s) {
        Int E = to_int(rep.degree / node.m(s));
        const TypeLevel& lev = node.level(s);
        Int d = divexact(E, to_int(lev.e));
        Int H = d * to_int(lev.h);
        rep.ind_contrib.push_back(node.f_prod(s) * divexact(E * H - E - H + d, to_int(2)));
    }
    rep.complete_type = std::move(node);
    return rep;
}

// (E, H) of the one-sided order-s polygon of a factor, H infinite when the
// factor is phi_s itself.
struct SideData {
    Int E;
    Int H;
    bool inf = false;
};

SideData factor_side(const FactorReport& rep, int s) {
    const OMType& t = rep.complete_type;
    SideData sd;
    if (s > t.order()) {
        check_internal(rep.from_infinite_side && s == t.order() + 1,
                       "queried branch data beyond the factor's levels");
        sd.E = 1;
        sd.inf = true;
        return sd;
    }
    sd.E = to_int(rep.degree / t.m(s));
    const TypeLevel& lev = t.level(s);
    sd.H = divexact(sd.E * to_int(lev.h), to_int(lev.e));
    return sd;
}

} // namespace

Int pair_res_contribution(const FactorReport& a, const FactorReport& b) {
    const OMType& ta = a.complete_type;
    const OMType& tb = b.complete_type;
    if (!(ta.psi0() == tb.psi0())) return to_int(0);
    int Ra = ta.order(), Rb = tb.order();
    int shared = 0;
    while (shared < std::min(Ra, Rb)) {
        const TypeLevel& la = ta.level(shared + 1);
        const TypeLevel& lb = tb.level(shared + 1);
        if (la.phi == lb.phi && la.h == lb.h && la.e == lb.e && la.psi == lb.psi)
            ++shared;
        else
            break;
    }
    // whoever has no level shared+1 must be the factor emitted on the
    // infinite side of the shared node
    check_internal(shared < Ra || (a.from_infinite_side && shared == Ra),
                   "two factors passed through one complete node");
    check_internal(shared < Rb || (b.from_infinite_side && shared == Rb),
                   "two factors passed through one complete node");
    Int total(0);
    for (int s = 1; s <= shared; ++s) {
        // identical slope on both sides: min{E H', E' H} = E E' h/e
        SideData da = factor_side(a, s);
        SideData db = factor_side(b, s);
        const TypeLevel& lev = ta.level(s);
        total += ta.f_prod(s) * divexact(da.E * db.E * to_int(lev.h), to_int(lev.e));
    }
    SideData da = factor_side(a, shared + 1);
    SideData db = factor_side(b, shared + 1);
    check_internal(!(da.inf && db.inf), "two infinite sides at one node");
    Int cross;
    if (da.inf)
        cross = da.E * db.H;
    else if (db.inf)
        cross = db.E * da.H;
    else
        cross = std::min(da.E * db.H, db.E * da.H);
    total += ta.f_prod(shared + 1) * cross;
    return total;
}

LocalBasisData local_basis_exponents(const OMType& node, long long multiplicity) {
    require(multiplicity == 1, errc::incomplete_type,
            "local basis exponents need a complete type");
    int R = node.order();
    LocalBasisData out;
    // nu_s = sum_{i<=s} (e_i f_i ... e_{s-1} f_{s-1}) h_i / (e_1...e_i)
    for (int s = 1; s <= R; ++s) {
        Rat nu(0);
        Int eprod(1);
        for (int i = 1; i <= s; ++i) {
            eprod *= to_int(node.level(i).e);
            Int scale(1);
            for (int t = i; t < s; ++t) scale *= to_int(node.level(t).e) * to_int(node.level(t).f);
            nu = nu + Rat(scale * to_int(node.level(i).h), eprod);
        }
        out.nu.push_back(nu);
    }
    out.b.push_back(node.f0());
    for (int s = 1; s <= R; ++s) out.b.push_back(node.level(s).e * node.level(s).f);
    // enumerate J
    std::vector<long long> j(out.b.size(), 0);
    Int floor0(0);
    while (true) {
        Rat nuj(0);
        for (int s = 1; s <= R; ++s) nuj = nuj + Rat(j[static_cast<size_t>(s)]) * out.nu[static_cast<size_t>(s - 1)];
        out.entries.emplace_back(j, nuj);
        if (j[0] == 0) floor0 += nuj.floor();
        size_t k = 0;
        while (k < j.size()) {
            if (++j[k] < out.b[k]) break;
            j[k] = 0;
            ++k;
        }
        if (k == j.size()) break;
    }
    out.floor_sum_end2 = to_int(node.f0()) * floor0;
    return out;
}

LocalBasisData local_basis_exponents(const FactorReport& rep) {
    return local_basis_exponents(rep.complete_type, 1);
}

MontesResult montes_factor(const IntPoly& f, long long p, std::ostream* trace) {
    require_prime(p);
    require(f.is_monic(), errc::not_monic, "input polynomial must be monic");
    require(f.degree() >= 1, errc::not_monic, "input polynomial must be nonconstant");
    if (f.degree() >= 1) {
        Int disc = resultant(f, f.derivative());
        require(f.degree() == 1 || disc != 0, errc::not_separable,
                "input polynomial has repeated factors; pass its squarefree part");
    }

    MontesResult out;
    FieldTower base(p);
    TowerPoly fbar = reduce_mod_p(base, f);
    auto order0 = factor_poly(base, fbar);

    std::vector<OMType> pending;
    for (const auto& [psi0, mult] : order0) {
        OMType t0 = OMType::order0(p, psi0);
        if (trace)
            *trace << "[order 0] psi_0 = " << base.pstr(psi0) << "  multiplicity " << mult
                   << (mult == 1 ? "  (complete)" : "") << "\n";
        if (mult == 1)
            out.factors.push_back(make_report(std::move(t0), f, false));
        else
            pending.push_back(std::move(t0));
    }

    for (int r = 1; !pending.empty(); ++r) {
        out.orders_used = r;
        std::vector<OMType> next;
        Int indr(0);
        for (auto& node : pending) {
            node.ensure_representative();
            Workspace ws;
            NewtonData nd = node.newton_polygon(f, r, &ws);
            Int ind_t = node.f_prod(r) * polygon_index(nd.polygon);
            check_internal(ind_t >= 0, "negative type index");
            out.ledger.per_type.push_back({r, ind_t});
            indr += ind_t;
            trace_node(trace, r, node, nd);
            if (nd.polygon.inf_length() > 0) {
                check_internal(nd.polygon.inf_length() == 1,
                               "separable input divisible by phi_r^2");
                if (trace) *trace << "  -> exact factor " << node.representative().str() << "\n";
                out.factors.push_back(make_report(node, f, true));
            }
            for (const auto& S : nd.polygon.sides()) {
                long long h = to_ll(S.h()), e = to_ll(S.e());
                TowerPoly R = node.residual(f, r, h, e, &ws);
                if (trace)
                    *trace << "  R_{-" << h << "/" << e << "}(f) = " << node.tower().pstr(R)
                           << "\n";
                auto facs = factor_poly(node.tower(), R);
                for (const auto& [psi, mult] : facs) {
                    OMType child = node.extended(h, e, psi);
                    if (trace)
                        *trace << "  -> branch lambda=-" << h << "/" << e << " psi="
                               << node.tower().pstr(psi) << " multiplicity " << mult
                               << (mult == 1 ? " (complete)" : "") << "\n";
                    if (mult == 1)
                        out.factors.push_back(make_report(std::move(child), f, false));
                    else
                        next.push_back(std::move(child));
                }
            }
        }
        out.ledger.per_order.push_back(indr);
        // By the index theorem a zero order index forces completeness.
        if (!next.empty())
            check_internal(indr > 0, "incomplete types survived an order of index zero");
        pending = std::move(next);
    }

    // Termination bound: the order counter never exceeds ind(f) + 1.
    check_internal(to_int(out.orders_used) <= out.ledger.total() + 1,
                   "order counter exceeded ind(f) + 1");

    // Degree conservation and e*f consistency.
    long long degsum = 0;
    for (const auto& rep : out.factors) {
        degsum += rep.degree;
        check_internal(to_int(rep.degree) == rep.e * rep.f_res, "degree != e * f");
    }
    check_internal(degsum == f.degree(), "factor degrees do not sum to deg f");

    // Ledger reconciliation: sum of per-factor floor sums (end2) plus the
    // pairwise Res contributions recovers sum_r ind_r(f) (end1).
    Int rhs(0);
    for (const auto& rep : out.factors) {
        LocalBasisData lb = local_basis_exponents(rep);
        Int own(0);
        for (const auto& c : rep.ind_contrib) own += c;
        check_internal(lb.floor_sum_end2 == own,
                       "local basis floors differ from the factor's index contributions");
        rhs += lb.floor_sum_end2;
    }
    for (size_t i = 0; i < out.factors.size(); ++i)
        for (size_t j = i + 1; j < out.factors.size(); ++j) {
            Int v = pair_res_contribution(out.factors[i], out.factors[j]);
            if (v != 0) out.ledger.res_pairs.push_back({i, j, v});
            rhs += v;
        }
    check_internal(out.ledger.total() == rhs, "index ledger does not reconcile");
    return out;
}

Int ind_at_order(const IntPoly& f, std::vector<OMType>& nodes) {
    Int total(0);
    for (auto& node : nodes) {
        int r = node.order() + 1;
        node.ensure_representative();
        Workspace ws;
        NewtonData nd = node.newton_polygon(f, r, &ws);
        total += node.f_prod(r) * polygon_index(nd.polygon);
    }
    return total;
}

ValInf res_t(const IntPoly& P, const IntPoly& Q, OMType t) {
    require(P.is_monic() && Q.is_monic(), errc::not_monic, "Res_t expects monic polynomials");
    int r = t.order() + 1;
    t.ensure_representative();
    Workspace ws;
    if (t.omega(P, r, &ws) == 0 || t.omega(Q, r, &ws) == 0) return ValInf(Rat(0));
    NewtonData np = t.newton_polygon(P, r, &ws);
    NewtonData nq = t.newton_polygon(Q, r, &ws);
    if (np.polygon.inf_length() > 0 && nq.polygon.inf_length() > 0) return ValInf::infinity();
    auto sides = [](const NewtonData& nd) {
        std::vector<std::pair<Int, ValInf>> v; // (E, H)
        if (nd.polygon.inf_length() > 0)
            v.emplace_back(to_int(nd.polygon.inf_length()), ValInf::infinity());
        for (const auto& s : nd.polygon.sides())
            v.emplace_back(to_int(s.length()), ValInf(Rat(to_int(s.degree()) * s.h())));
        return v;
    };
    Int total(0);
    for (const auto& [E, H] : sides(np))
        for (const auto& [E2, H2] : sides(nq)) {
            // min{E H2, E2 H}; at most one height is infinite here
            if (H.is_infinite())
                total += E * H2.finite().num();
            else if (H2.is_infinite())
                total += E2 * H.finite().num();
            else
                total += std::min(E * H2.finite().num(), E2 * H.finite().num());
        }
    return ValInf(Rat(t.f_prod(r) * total));
}

namespace {

void res_walk(const IntPoly& P, const IntPoly& Q, OMType t, std::vector<Int>& per_order,
              const Int& budget) {
    int r = t.order() + 1;
    check_internal(to_int(r) <= budget + 2, "resultant walk exceeded its valuation budget");
    t.ensure_representative();
    Workspace ws;
    NewtonData np = t.newton_polygon(P, r, &ws);
    NewtonData nq = t.newton_polygon(Q, r, &ws);
    check_internal(!(np.polygon.inf_length() > 0 && nq.polygon.inf_length() > 0),
                   "coprime inputs share a representative");
    ValInf rt = res_t(P, Q, t);
    if (static_cast<size_t>(r) > per_order.size()) per_order.resize(static_cast<size_t>(r), to_int(0));
    per_order[static_cast<size_t>(r - 1)] += rt.finite().num();
    // shared extensions: common finite slopes with a common residual factor
    for (const auto& sp : np.polygon.sides()) {
        for (const auto& sq : nq.polygon.sides()) {
            if (!(sp.slope() == sq.slope())) continue;
            long long h = to_ll(sp.h()), e = to_ll(sp.e());
            TowerPoly RP = t.residual(P, r, h, e, &ws);
            TowerPoly RQ = t.residual(Q, r, h, e, &ws);
            auto fp = factor_poly(t.tower(), RP);
            auto fq = factor_poly(t.tower(), RQ);
            for (const auto& [psi, m1] : fp)
                for (const auto& [psi2, m2] : fq)
                    if (psi == psi2) res_walk(P, Q, t.extended(h, e, psi), per_order, budget);
        }
    }
}

} // namespace

ResBreakdown res_valuation(const IntPoly& P, const IntPoly& Q, long long p) {
    require_prime(p);
    require(P.is_monic() && Q.is_monic(), errc::not_monic, "resultant walk expects monic inputs");
    ResBreakdown out;
    out.exact_resultant = resultant(P, Q);
    require(out.exact_resultant != 0, errc::common_factor, "inputs share a factor");
    out.valuation = (abs(out.exact_resultant) == 1)
                        ? to_int(0)
                        : to_int(p_valuation(out.exact_resultant, to_int(p)));
    if (P.degree() == 0 || Q.degree() == 0) return out;

    FieldTower base(p);
    auto fp = factor_poly(base, reduce_mod_p(base, P));
    auto fq = factor_poly(base, reduce_mod_p(base, Q));
    for (const auto& [psi, m1] : fp)
        for (const auto& [psi2, m2] : fq)
            if (psi == psi2) res_walk(P, Q, OMType::order0(p, psi), out.per_order, out.valuation);

    Int total(0);
    for (const auto& v : out.per_order) total += v;
    check_internal(total == out.valuation,
                   "resultant theorem: per-order sum does not match v_p(Res)");
    return out;
}

} // namespace omf
