#pragma once

// Textual polynomial format used in reports and JSON files.
//
//   poly   := "0" | term { ("+" | "-") term }      (leading sign allowed)
//   term   := coeff | [coeff "*"] factor { "*" factor }
//   coeff  := integer | integer "/" integer
//   factor := name [ "^" integer ]
//   name   := generator name from the table, e.g. X0(1,2), Xm1(2,1), T(1,1),
//             dX0(1,1), Gv(2,1)
//
// Factors are multiplied left to right with the Koszul sign rule, so any
// ordering of odd factors parses; printing always emits the normal form.
// Example: "-2 * X0(1,2)*Xm1(2,1) + 1/2 * Y0(1,1)^2".

#include "dcrit/super_poly.hpp"

#include <string>
#include <string_view>

namespace dcrit {

std::string format_poly(const SuperPoly& p);
SuperPoly parse_poly(const TablePtr& table, std::string_view text);

}  // namespace dcrit
