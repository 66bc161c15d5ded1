#ifndef OMF_MONTES_HPP
#define OMF_MONTES_HPP

#include <iosfwd>
#include <vector>

#include "omf/omtypes.hpp"

namespace omf {

/// One p-adic irreducible factor of the input, described by its complete type.
struct FactorReport {
    long long degree = 0;
    Int e{1};      // ramification index e_1...e_R
    Int f_res{1};  // residual degree f_0...f_R
    IntPoly approx;          // phi_{R+1}, an approximation to the factor
    ValInf approx_quality;   // v(phi_{R+1}(theta)); infinite when exact
    bool exact = false;      // approx divides f exactly
    bool from_infinite_side = false; // emitted as phi_{R+1} at an incomplete node
    std::vector<Int> ind_contrib;    // this factor's own ind_s, s = 1..R
    OMType complete_type;            // the defining type of order R
};

struct IndexLedger {
    std::vector<Int> per_order; // ind_r(f), r = 1, 2, ...
    struct TypeEntry {          // ind_t(f) of one processed node
        int order = 0;          // the order r of the polygon it came from
        Int ind_t;
    };
    std::vector<TypeEntry> per_type;
    struct ResEntry { // pairwise Res contribution of two final factors
        size_t i = 0, j = 0;
        Int value;
    };
    std::vector<ResEntry> res_pairs;
    Int total() const {
        Int t(0);
        for (const auto& v : per_order) t += v;
        return t;
    }
};

struct MontesResult {
    std::vector<FactorReport> factors;
    IndexLedger ledger;
    int orders_used = 0;
};

/// Factor a monic separable integer polynomial over Q_p. Builds the tree of
/// types order by order, branches along polygon sides and residual factors,
/// and stops when every type is complete; the index theorem bounds the number
/// of orders by ind(f) + 1 (asserted). The returned ledger carries ind_r(f)
/// per order; reconciliation against the local-basis floor sums and pairwise
/// Res contributions is asserted on every run.
MontesResult montes_factor(const IntPoly& f, long long p, std::ostream* trace = nullptr);

/// ind_r(f) for explicitly given (incomplete) nodes of order r-1.
Int ind_at_order(const IntPoly& f, std::vector<OMType>& nodes);

/// Res_t(P, Q) at order r = t.order() + 1: f_0...f_{r-1} times the polygon
/// pairing sum over the sides of N_r^-(P) and N_r^-(Q); infinite exactly when
/// phi_r divides both.
ValInf res_t(const IntPoly& P, const IntPoly& Q, OMType t);

struct ResBreakdown {
    Int exact_resultant;
    Int valuation;              // v_p(Res(P, Q))
    std::vector<Int> per_order; // Res_r(P, Q), r = 1, 2, ...
};

/// Walks the shared types of two coprime monic polynomials (extending
/// complete types on demand) and accumulates Res_r until the types separate;
/// the resulting sum equals v_p(Res(P,Q)) and this is asserted against the
/// exact integer resultant.
ResBreakdown res_valuation(const IntPoly& P, const IntPoly& Q, long long p);

struct LocalBasisData {
    std::vector<Rat> nu;  // nu_s = v(phi_s(theta)), s = 1..R
    std::vector<long long> b; // b_0 = f_0, b_s = e_s f_s
    std::vector<std::pair<std::vector<long long>, Rat>> entries; // (j, nu_j)
    Int floor_sum_end2; // f_0 * sum over j with j_0 = 0 of floor(nu_j)
};

/// The local-basis exponents nu_j of a complete type, with floors; the end2
/// sum must reconcile with the factor's per-order index contributions.
LocalBasisData local_basis_exponents(const OMType& node, long long multiplicity);
LocalBasisData local_basis_exponents(const FactorReport& rep);

/// The pairwise Res contribution of two factors of one montes_factor run,
/// computed from their shared branch history.
Int pair_res_contribution(const FactorReport& a, const FactorReport& b);

} // namespace omf

#endif
