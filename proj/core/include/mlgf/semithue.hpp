#pragma once

#include <set>
#include <string>
#include <vector>

#include "mlgf/alphabet.hpp"

namespace mlgf {

/// A context-free production rule: one letter rewrites to a word.
struct ProductionRule {
  Letter lhs;
  Word rhs;
  friend auto operator<=>(const ProductionRule&, const ProductionRule&) = default;
};

/// A context-free semi-Thue system over an alphabet with converse.
struct SemiThueSystem {
  Alphabet alphabet;
  std::vector<ProductionRule> rules;

  bool has_rule(const ProductionRule& r) const;
};

std::string rule_to_string(const Alphabet& a, const ProductionRule& r);

/// The smallest superset of S closed under converse: whenever u -> v is
/// present, so is converse(u) -> converse_word(v). Idempotent.
SemiThueSystem converse_closure(const SemiThueSystem& s);

bool is_converse_closed(const SemiThueSystem& s);

/// All words reachable from w by exactly one rewrite step.
std::set<Word> one_step_rewrites(const Word& w, const SemiThueSystem& s);

/// Bounded BFS over the derivation relation: true iff v is reachable from u
/// in at most step_bound rewrites, never visiting a word longer than
/// length_bound. A false answer only means "not found within the bounds".
bool derives_within(const SemiThueSystem& s, const Word& u, const Word& v,
                    int step_bound, int length_bound);

/// All words derivable from u within the bounds (the BFS frontier union);
/// the oracle behind derives_within, exposed for bounded enumeration.
std::set<Word> derivable_words(const SemiThueSystem& s, const Word& u,
                               int step_bound, int length_bound);

/// All words over the alphabet of length <= max_len, in length-lexicographic
/// order.
std::vector<Word> enumerate_words(const Alphabet& a, int max_len);

}  // namespace mlgf
