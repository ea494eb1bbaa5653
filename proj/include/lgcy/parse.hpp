#ifndef LGCY_PARSE_HPP
#define LGCY_PARSE_HPP

#include <string>
#include <vector>

#include "lgcy/errors.hpp"
#include "lgcy/polynomial.hpp"

namespace lgcy {

// Grammar (whitespace insignificant, no implicit multiplication):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := coefficient | var ('^' uint)?
//   coefficient := int ('/' uint)?
// Exponents above 2^31 are rejected.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables);

}  // namespace lgcy

#endif
