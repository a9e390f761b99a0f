#pragma once

#include <string>

#include "mlgf/ndfa.hpp"

namespace mlgf {

/// Builds an NDFA for a regular expression over the alphabet's letter names.
/// Syntax: juxtaposition for concatenation, `|` for union, postfix `*`,
/// parentheses, and the keywords `eps` (empty word) and `empty` (empty
/// language). Throws std::invalid_argument on parse errors.
Ndfa from_regex(const std::string& pattern, const Alphabet& alphabet);

}  // namespace mlgf
