#pragma once

#include <string>

#include "bicx/bicomplex.hpp"

namespace bicx {

/// Reads either view of an element:
///   Cartesian   "x+y*i+z*j+t*k"   (terms in any order, '*' optional,
///                                  coefficient 1 may be omitted)
///   idempotent  "[c1, c2]"        with components "a+b*i", "a+b*sqrt(D)"
///                                  or "a+b*i*sqrt(n)".
/// Throws ParseError with the offending position; mixing the views is an
/// error.
BicomplexElement parse_element(const std::string& text);

/// Cartesian form when the element has one, idempotent form otherwise.
/// parse_element inverts it.
std::string format_element(const BicomplexElement& w);

}  // namespace bicx
