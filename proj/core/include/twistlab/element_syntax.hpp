#pragma once

// Plain-text elements such as "x1*x2*sg(1,2;1)*y1 - 1/2*c^2*s(1,2;0)".
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power ('*' power)*
//   power  := atom ['^' integer]
//   atom   := number | number '/' number | symbol | 'x'k | 'y'k
//           | group token (1, s(i,j;e), t(i;e), sg(i,j;e), w(...)) | '(' expr ')'
//
// Symbols are looked up in a table; "i" (conductor divisible by 4) and
// "zeta" (the primitive root of the conductor) are predefined.

#include <map>
#include <stdexcept>
#include <string>

#include "twistlab/cherednik.hpp"

namespace twistlab {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using SymbolTable = std::map<std::string, CycloScalar>;

CherednikElement parse_element(const CherednikAlgebra& H, const std::string& text, const SymbolTable& symbols = {});

/// Group algebra elements only (no x or y letters).
GroupAlgebraElement parse_group_element(const ContextPtr& ctx, int m, int n, const std::string& text,
                                        const SymbolTable& symbols = {});

/// [x exponents, group token, y exponents, scalar] per term, in the
/// order of the sparse map.
std::string element_to_json(const CherednikElement& e, int n);

}  // namespace twistlab
