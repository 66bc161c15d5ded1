#ifndef OMF_OMTYPES_HPP
#define OMF_OMTYPES_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "omf/gftower.hpp"
#include "omf/intpoly.hpp"
#include "omf/polygons.hpp"

namespace omf {

/// One level (phi_i; lambda_i, psi_i) of a type, with its cached invariants.
struct TypeLevel {
    IntPoly phi;        // phi_i, monic of degree m
    long long h = 1;    // lambda_i = -h/e, h,e > 0 coprime
    long long e = 1;
    TowerPoly psi;      // psi_i, monic irreducible over F_i
    long long f = 1;    // deg psi_i
    long long m = 1;    // deg phi_i = m_i
    long long ell = 0;  // ell*h - ellp*e = 1 with 0 <= ell < e
    long long ellp = -1;
    Int V;              // v_i(phi_i), in the order-i scale
};

/// phi_r-adic development of a polynomial together with the attached points
/// and their principal polygon.
struct NewtonData {
    PrincipalPolygon polygon;
    std::vector<IntPoly> coeffs;   // a_0 .. a_n
    std::vector<PolyPoint> points; // (i, u_i); u_i infinite when a_i = 0
};

enum class RatFun { Phi, gamma, pi };

/// Exponent vector of a rational function p^(n_0) phi_1^(n_1) ... phi_k^(n_k).
struct ExponentVector {
    std::vector<Int> n; // n[0] belongs to p
};

struct ValueBound {
    Rat bound;
    bool exact = false;
};

/// Memoization of expansions, v_r values and order-r residual data for one
/// driver pass. Never shared between threads.
class Workspace {
public:
    struct ResData {
        long long s = 0; // initial abscissa of S_{r}(a)
        TowerPoly R;     // R_r(a)
    };
    std::map<std::pair<int, std::string>, std::vector<IntPoly>> expansions;
    std::map<std::pair<int, std::string>, Int> values;
    std::map<std::pair<int, std::string>, ResData> residuals;
};

/// A type of order k: levels (phi_i; lambda_i, psi_i) for i = 1..k over the
/// base datum psi_0, plus (optionally) a representative phi_{k+1}. Immutable
/// once the representative is set; all operations are pure.
class OMType {
public:
    /// An empty placeholder; every usable instance comes from order0/extended.
    OMType() = default;

    static OMType order0(long long p, const TowerPoly& psi0);

    /// Child type of order k+1 with level data (lambda = -h/e, psi); the
    /// representative of this type becomes phi_{k+1} of the child.
    OMType extended(long long h, long long e, const TowerPoly& psi) const;

    int order() const { return static_cast<int>(levels_.size()); }
    long long p() const { return p_; }
    const FieldTower& tower() const { return tower_; }
    const TowerPoly& psi0() const { return tower_.psi(0); }
    long long f0() const { return tower_.fdeg(0); }
    const TypeLevel& level(int i) const; // 1-based, 1 <= i <= order

    bool has_representative() const { return rep_.has_value(); }
    const IntPoly& representative() const;
    /// Validates and installs a caller-chosen representative.
    void set_representative(const IntPoly& phi);
    /// Builds the canonical representative if none is set, and returns it.
    const IntPoly& ensure_representative();

    /// m_r = deg phi_r, for 1 <= r <= order+1.
    long long m(int r) const;
    /// e_1 ... e_{r-1}
    Int e_prod(int r) const;
    /// f_0 ... f_{r-1}
    Int f_prod(int r) const;
    /// v_r(phi_r) (the value used for the polygon points at order r).
    Int v_phi(int r) const;
    const IntPoly& phi_at(int r) const;

    // --- the order-r computations; 1 <= r <= order+1 ---

    /// v_r(P); error on P = 0.
    Int v_order(const IntPoly& P, int r, Workspace* ws = nullptr) const;
    /// omega_r(P) = ord_{psi_{r-1}} R_{r-1}(P).
    long long omega(const IntPoly& P, int r, Workspace* ws = nullptr) const;
    /// N_r^-(P) plus development coefficients; asserts the shape lemma
    /// (length = omega_r(P), infinite length = ord_{phi_r} P).
    NewtonData newton_polygon(const IntPoly& P, int r, Workspace* ws = nullptr) const;
    /// t_{r-1}(a)_i, an integer by construction (checked).
    Int twist_exponent(const IntPoly& a, long long i, int r, Workspace* ws = nullptr) const;
    /// R_lambda(P) in F_r[y] for lambda = -h/e.
    TowerPoly residual(const IntPoly& P, int r, long long lambda_h, long long lambda_e,
                       Workspace* ws = nullptr) const;
    /// Residual polynomial relative to an arbitrary side T of slope lambda.
    TowerPoly residual_on_side(const IntPoly& P, int r, const PolySide& T,
                               Workspace* ws = nullptr) const;
    /// Exponent vector of Phi_i / gamma_i / pi_i.
    ExponentVector ratfun(RatFun kind, int i) const;
    /// v_r of a rational function given by its exponent vector.
    Int v_of_exponents(const ExponentVector& ev, int r) const;
    /// v_r(phi_j) by the closed recursion; cross-checked at construction.
    Int v_of_phi(int j, int r) const;
    /// Lower bound H/(e_1...e_{r-1}) for v(P(theta)) at roots theta of the
    /// factor attached to (t, lambda_r), with exactness certificate.
    ValueBound value_bound_at_root(const IntPoly& P, int r, long long lambda_h,
                                   long long lambda_e, const TowerPoly* psi_top = nullptr,
                                   Workspace* ws = nullptr) const;

    /// Count of construction-time invariant checks executed process-wide.
    static long long checks_run();

private:
    void validate_and_push_level(TypeLevel lev);
    void verify_value_formulas() const;
    void self_check() const;
    Workspace::ResData res_data(const IntPoly& a, int r, Workspace& ws) const;
    TowerElem residual_coeff(const IntPoly& a, const Int& u, int r, Workspace& ws) const;
    const std::vector<IntPoly>& expansion(const IntPoly& P, int r, Workspace& ws) const;
    IntPoly construct_p(int r, const Int& V, const TowerPoly& phi_y) const;

    long long p_ = 0;
    FieldTower tower_{2};
    std::vector<TypeLevel> levels_;
    std::optional<IntPoly> rep_;
    Int rep_v_; // v_{order+1}(rep)
};

/// Canonical monic lift of a polynomial over F_p to Z[x], coefficients in
/// {0, ..., p-1}.
IntPoly lift_to_z(const FieldTower& t, const TowerPoly& g);

} // namespace omf

#endif
