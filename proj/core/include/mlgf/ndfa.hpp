#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mlgf/alphabet.hpp"

namespace mlgf {

/// One transition; a missing label is an epsilon move.
struct NdfaTransition {
  int from = 0;
  std::optional<Letter> label;
  int to = 0;
  friend auto operator<=>(const NdfaTransition&, const NdfaTransition&) = default;
};

/// A nondeterministic finite automaton with epsilon transitions.
/// States are indices 0..state_count-1; state_names is optional display data.
struct Ndfa {
  int state_count = 0;
  int start = 0;
  std::vector<int> accepting;             // sorted, unique
  std::vector<NdfaTransition> transitions;
  std::vector<std::string> state_names;   // empty or size state_count

  std::string state_name(int q) const;
  void check_well_formed() const;         // throws std::invalid_argument
};

/// Epsilon closure of a state set.
std::set<int> epsilon_closure(const Ndfa& a, std::set<int> states);

/// Standard NDFA run with epsilon closure.
bool accepts(const Ndfa& a, const Word& w);

/// Adds a fresh accepting state reached by epsilon moves from the old
/// accepting states; the result has exactly one accepting state and the
/// same language. Applied even when the input already has one.
Ndfa normalize_single_accepting(const Ndfa& a);

/// Automaton for the converse language {converse_word(w) : w in L(a)}:
/// a fresh start state, flipped transitions with conversed labels, and the
/// old start as the only accepting state.
Ndfa mirror_automaton(const Ndfa& a, const Alphabet& alphabet);

/// Automaton size measure: states plus transitions.
int automaton_size(const Ndfa& a);

/// Total map letter -> automaton recognizing L_S(letter).
class AutomataMap {
 public:
  AutomataMap() = default;
  AutomataMap(Alphabet alphabet, std::vector<Ndfa> by_letter);

  const Alphabet& alphabet() const { return alphabet_; }
  const Ndfa& at(Letter l) const { return by_letter_.at(l.id); }
  void set(Letter l, Ndfa a) { by_letter_.at(l.id) = std::move(a); }

 private:
  Alphabet alphabet_;
  std::vector<Ndfa> by_letter_;  // indexed by letter id, total
};

}  // namespace mlgf
