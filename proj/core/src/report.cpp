#include "omf/report.hpp"

#include <sstream>

namespace omf {

namespace {

using nlohmann::json;

json elem_to_json(const TowerElem& e) {
    if (e.level == 0) return std::to_string(e.v0);
    json arr = json::array();
    for (const auto& s : e.sub) arr.push_back(elem_to_json(s));
    return arr;
}

json coeff_strings(const IntPoly& P) {
    json arr = json::array();
    for (const auto& c : P.coeffs()) arr.push_back(to_string(c));
    return arr;
}

json factor_to_json(const FactorReport& rep) {
    json f;
    f["degree"] = std::to_string(rep.degree);
    f["e"] = to_string(rep.e);
    f["f"] = to_string(rep.f_res);
    const OMType& t = rep.complete_type;
    f["psi0"] = tower_poly_to_json(t.tower(), t.psi0());
    json levels = json::array();
    for (int i = 1; i <= t.order(); ++i) {
        const TypeLevel& lev = t.level(i);
        json l;
        l["phi"] = coeff_strings(lev.phi);
        l["slope"] = "-" + std::to_string(lev.h) + "/" + std::to_string(lev.e);
        l["psi"] = tower_poly_to_json(t.tower(), lev.psi);
        l["f"] = std::to_string(lev.f);
        levels.push_back(std::move(l));
    }
    f["levels"] = std::move(levels);
    f["approximation"] = coeff_strings(rep.approx);
    f["approx_quality"] = rep.approx_quality.str();
    f["exact"] = rep.exact;
    json ind = json::array();
    for (const auto& c : rep.ind_contrib) ind.push_back(to_string(c));
    f["ind_contributions"] = std::move(ind);
    return f;
}

} // namespace

nlohmann::json tower_poly_to_json(const FieldTower& t, const TowerPoly& g) {
    (void)t;
    json arr = json::array();
    for (const auto& c : g.c) arr.push_back(elem_to_json(c));
    return arr;
}

nlohmann::json report_to_json(const MontesResult& result, const IntPoly& input, long long p,
                              bool squarefree_applied, double elapsed_ms) {
    json doc;
    doc["schema"] = "om-factor/1";
    doc["input"] = {{"polynomial", input.str()}, {"coefficients", coeff_strings(input)}};
    doc["prime"] = std::to_string(p);
    doc["squarefree_applied"] = squarefree_applied;
    json factors = json::array();
    for (const auto& rep : result.factors) factors.push_back(factor_to_json(rep));
    doc["factors"] = std::move(factors);
    json ind = json::array();
    for (const auto& v : result.ledger.per_order) ind.push_back(to_string(v));
    doc["ind_by_order"] = std::move(ind);
    doc["ind_total"] = to_string(result.ledger.total());
    doc["orders_used"] = std::to_string(result.orders_used);
    doc["timings"] = {{"total_ms", std::to_string(static_cast<long long>(elapsed_ms))}};
    return doc;
}

std::string report_to_text(const MontesResult& result, const IntPoly& input, long long p) {
    std::ostringstream os;
    os << "f = " << input.str() << "  over Q_" << p << "\n";
    os << result.factors.size() << " p-adic irreducible factor"
       << (result.factors.size() == 1 ? "" : "s") << ":\n";
    int idx = 0;
    for (const auto& rep : result.factors) {
        const OMType& t = rep.complete_type;
        os << "  [" << idx++ << "] degree " << rep.degree << "  e = " << to_string(rep.e)
           << "  f = " << to_string(rep.f_res) << "\n";
        os << "      psi_0 = " << t.tower().pstr(t.psi0());
        for (int i = 1; i <= t.order(); ++i) {
            const TypeLevel& lev = t.level(i);
            os << ";  level " << i << ": phi = " << lev.phi.str() << ", lambda = -" << lev.h << "/"
               << lev.e << ", psi = " << t.tower().pstr(lev.psi);
        }
        os << "\n";
        os << "      approximation " << rep.approx.str() << "  (v(phi(theta)) = "
           << rep.approx_quality.str() << (rep.exact ? ", exact factor" : "") << ")\n";
    }
    os << "ind(f) = " << to_string(result.ledger.total()) << "  by order:";
    for (size_t r = 0; r < result.ledger.per_order.size(); ++r)
        os << " ind_" << (r + 1) << " = " << to_string(result.ledger.per_order[r]);
    os << "\n";
    return os.str();
}

} // namespace omf
