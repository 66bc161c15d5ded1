#ifndef OMF_ERRORS_HPP
#define OMF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace omf {

// Error codes for conditions that a caller can provoke with bad input.
enum class errc {
    not_prime,
    zero_polynomial,
    bad_key_polynomial,
    division_by_zero,
    level_mismatch,
    not_above_side,
    incomplete_type,
    not_monic,
    not_separable,
    no_finite_point,
    parse_error,
    not_univariate,
    level_out_of_range,
    common_factor,
    unsupported,
};

const char* errc_name(errc c);

/// Raised on invalid user input. Maps to CLI exit code 1.
class om_error : public std::runtime_error {
public:
    om_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

/// Raised when an internal invariant fails. Maps to CLI exit code 2.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what)
        : std::logic_error("internal invariant violated: " + what) {}
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::not_prime: return "NotPrime";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::bad_key_polynomial: return "BadKeyPolynomial";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::level_mismatch: return "LevelMismatch";
    case errc::not_above_side: return "NotAboveSide";
    case errc::incomplete_type: return "IncompleteType";
    case errc::not_monic: return "NotMonic";
    case errc::not_separable: return "NotSeparable";
    case errc::no_finite_point: return "NoFinitePoint";
    case errc::parse_error: return "ParseError";
    case errc::not_univariate: return "NotUnivariate";
    case errc::level_out_of_range: return "LevelOutOfRange";
    case errc::common_factor: return "CommonFactor";
    case errc::unsupported: return "Unsupported";
    }
    return "UnknownError";
}

// The const char* overloads keep the hot paths free of string construction;
// messages are materialized only on failure.
inline void require(bool cond, errc code, const char* msg) {
    if (!cond) throw om_error(code, msg);
}
inline void require(bool cond, errc code, const std::string& msg) {
    if (!cond) throw om_error(code, msg);
}

// Always-on internal check; these guard mathematical invariants and are kept
// in release builds.
inline void check_internal(bool cond, const char* msg) {
    if (!cond) throw internal_error(msg);
}
inline void check_internal(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

} // namespace omf

#endif
