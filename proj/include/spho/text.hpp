#pragma once

#include <string>

#include "spho/order.hpp"
#include "spho/transforms.hpp"

namespace spho {

// Ordering grammar:
//   ordering  := component ( "+" component )* | "empty"
//   component := INT | "w" | "w*" | "z" | "Sh{" type ("," type)* "}"
//   type      := INT | INT ".." | "ap(" INT "," INT ")" | "w" | "w*" | "z"
// Whitespace is insignificant; INT >= 1.
SymbolicOrdering parse_ordering(const std::string& text);
std::string print_ordering(const SymbolicOrdering& o);

// T' model text: cells separated by whitespace, "R<INT>" or "S{...}" with
// color entries INT, "w", "w*"/"sw", "z".  The empty model is "empty".
TPrimeModel parse_model(const std::string& text);
std::string print_model(const TPrimeModel& m);

std::string print_color(const Color& c);
std::string print_colored(const ColoredOrdering& c);

}  // namespace spho
