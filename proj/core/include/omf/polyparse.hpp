#ifndef OMF_POLYPARSE_HPP
#define OMF_POLYPARSE_HPP

#include <string>

#include "omf/intpoly.hpp"

namespace omf {

/// Parse an integer polynomial in x. Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := INT | 'x' ('^' UINT)? | '(' expr ')'
/// The dense list form "[c0,c1,...,cn]" is accepted as well. Errors carry the
/// offending position; variables other than x raise NotUnivariate.
IntPoly parse_poly(const std::string& src);

/// Canonical rendering, re-parseable by parse_poly.
std::string render_poly(const IntPoly& P);

} // namespace omf

#endif
