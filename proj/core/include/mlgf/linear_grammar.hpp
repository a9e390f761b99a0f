#pragma once

#include <set>
#include <string>

#include "mlgf/ndfa.hpp"
#include "mlgf/semithue.hpp"

namespace mlgf {

/// Raised when a rule does not have the declared linear shape.
struct RuleShapeError : std::invalid_argument {
  explicit RuleShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

using LetterSet = std::set<Letter>;

bool is_right_linear(const SemiThueSystem& s, const LetterSet& nonterminals);
bool is_left_linear(const SemiThueSystem& s, const LetterSet& nonterminals);

/// Automaton for the derivation language of `start` in a right-linear system
/// (every rule V -> T* (V | eps)). The language follows the derivation
/// relation, so it contains the zero-step word `start` and every
/// intermediate word with a trailing nonterminal.
/// Throws RuleShapeError naming the offending rule if the shape is violated.
Ndfa from_right_linear(const SemiThueSystem& s, Letter start,
                       const LetterSet& nonterminals);

/// Mirror construction for left-linear systems (rules V -> (V | eps) T*).
Ndfa from_left_linear(const SemiThueSystem& s, Letter start,
                      const LetterSet& nonterminals);

/// Left-hand-side letters of the rules together with their converses; the
/// partition used when no explicit one is given.
LetterSet inferred_nonterminals(const SemiThueSystem& s);

}  // namespace mlgf
