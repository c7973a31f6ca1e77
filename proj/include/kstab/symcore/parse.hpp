#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kstab/symcore/multipoly.hpp"

namespace kstab {

/// Reads a polynomial such as "x^2 - 3/2*y + 4" over the named variables.
///
/// Terms are joined by '+' or '-'; a term is an optional coefficient "p" or
/// "p/q" followed by '*'-separated factors "name" or "name^k". Whitespace is
/// ignored. Empty input is the zero polynomial. Throws ParseError on a syntax
/// error or an undeclared variable.
MultiPoly parse_poly(std::string_view text,
                     const std::vector<std::string>& vars);

/// Canonical text form: terms in descending grevlex order, read back
/// exactly by parse_poly.
std::string to_string(const MultiPoly& f, const std::vector<std::string>& vars);

/// Default names x0, x1, ... for an nvars-variable ring.
std::vector<std::string> default_var_names(std::size_t nvars);

}  // namespace kstab
