#pragma once

#include <string>

#include "uqlat/oqsl2.hpp"
#include "uqlat/word.hpp"

namespace uqlat {

// Grammar (whitespace-insensitive, '*' explicit, products left-associative):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' integer)?        integer may be negative or (..)
//   atom   := rational | q | qq | E<i> | F<i> | K[c1,...,cn] | '-' atom | '(' expr ')'
// In SL2 coordinate mode the atoms E/F/K are replaced by the letters a b c d.
WordElement parse_uq_expression(const std::string& text, const RootSystem& rs,
                                const QSpec& spec);

OqElement parse_oq_expression(const std::string& text, const QSpec& spec);

}  // namespace uqlat
