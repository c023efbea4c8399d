#pragma once

#include "koszul/ideal.hpp"

#include <iosfwd>
#include <string>

namespace koszul {

// Text format shared by the library and the CLI:
//   n=4            header, fixes the variable count
//   x1^2*x2        one monomial per line, power-product form
//   [2,1,0,0]      ... or exponent-vector form
//   # comment      comments and blank lines are skipped
// Parse-then-print is idempotent on canonical files.

Monomial parse_monomial(const std::string& text, int n);

MonomialIdeal parse_ideal(std::istream& in);
MonomialIdeal parse_ideal_text(const std::string& text);
MonomialIdeal load_ideal(const std::string& path);

std::string format_ideal(const MonomialIdeal& I);

}  // namespace koszul
