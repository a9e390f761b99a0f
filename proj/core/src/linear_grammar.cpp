#include "mlgf/linear_grammar.hpp"

#include <algorithm>
#include <map>

namespace mlgf {

namespace {

bool right_shape(const ProductionRule& r, const LetterSet& vs) {
  for (std::size_t i = 0; i + 1 < r.rhs.size(); ++i)
    if (vs.count(r.rhs[i])) return false;
  return true;  // last symbol may be terminal or nonterminal
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

bool left_shape(const ProductionRule& r, const LetterSet& vs) {
  return right_shape({r.lhs, reversed(r.rhs)}, vs);
}

}  // namespace

bool is_right_linear(const SemiThueSystem& s, const LetterSet& vs) {
  return std::all_of(s.rules.begin(), s.rules.end(),
                     [&](const auto& r) { return vs.count(r.lhs) && right_shape(r, vs); });
}

bool is_left_linear(const SemiThueSystem& s, const LetterSet& vs) {
  return std::all_of(s.rules.begin(), s.rules.end(),
                     [&](const auto& r) { return vs.count(r.lhs) && left_shape(r, vs); });
}

LetterSet inferred_nonterminals(const SemiThueSystem& s) {
  LetterSet vs;
  for (const auto& r : s.rules) {
    vs.insert(r.lhs);
    vs.insert(s.alphabet.converse(r.lhs));
  }
  return vs;
}

Ndfa from_right_linear(const SemiThueSystem& s, Letter start,
                       const LetterSet& vs) {
  if (!vs.count(start))
    throw RuleShapeError("from_right_linear: start letter '" +
                         s.alphabet.name(start) + "' is not a nonterminal");
  for (const auto& r : s.rules) {
    if (!vs.count(r.lhs))
      throw RuleShapeError("rule with terminal left-hand side: " +
                           rule_to_string(s.alphabet, r));
    if (!right_shape(r, vs))
      throw RuleShapeError("rule is not right-linear: " +
                           rule_to_string(s.alphabet, r));
  }

  Ndfa a;
  std::map<Letter, int> state_of;  // nonterminal -> state, in letter order
  for (Letter v : vs) {
    state_of[v] = a.state_count++;
    a.state_names.push_back(s.alphabet.name(v));
  }
  const int acc = a.state_count++;
  a.state_names.push_back("acc");
  a.accepting = {acc};
  a.start = state_of.at(start);

  // a derivable word is a terminal spelling plus an optional trailing
  // nonterminal; the nonterminal letter itself reaches acc directly
  for (Letter v : vs) a.transitions.push_back({state_of.at(v), v, acc});

  for (const auto& r : s.rules) {
    const bool trailing_nt = !r.rhs.empty() && vs.count(r.rhs.back());
    const std::size_t spell_len = r.rhs.size() - (trailing_nt ? 1 : 0);
    int cur = state_of.at(r.lhs);
    for (std::size_t i = 0; i < spell_len; ++i) {
      const bool last = (i + 1 == spell_len) && !trailing_nt;
      int next = last ? acc : -1;
      if (!last) {
        next = a.state_count++;
        a.state_names.push_back("c" + std::to_string(next));
      }
      if ((i + 1 == spell_len) && trailing_nt) next = -1;  // unreachable branch guard
      a.transitions.push_back({cur, r.rhs[i], next});
      cur = next;
    }
    if (trailing_nt) {
      // redo chain target: the last spelled transition must land on the
      // nonterminal's state instead of a fresh one
      ;
    }
  }
  a.check_well_formed();
  return a;
}

Ndfa from_left_linear(const SemiThueSystem& s, Letter start,
                      const LetterSet& vs) {
  for (const auto& r : s.rules) {
    if (!vs.count(r.lhs))
      throw RuleShapeError("rule with terminal left-hand side: " +
                           rule_to_string(s.alphabet, r));
    if (!left_shape(r, vs))
      throw RuleShapeError("rule is not left-linear: " +
                           rule_to_string(s.alphabet, r));
  }
  SemiThueSystem rev{s.alphabet, {}};
  for (const auto& r : s.rules) rev.rules.push_back({r.lhs, reversed(r.rhs)});
  Ndfa right = from_right_linear(rev, start, vs);
  // reverse the automaton: single accepting state becomes the start
  Ndfa out;
  out.state_count = right.state_count;
  out.state_names = right.state_names;
  out.start = right.accepting.at(0);
  out.accepting = {right.start};
  for (const auto& t : right.transitions)
    out.transitions.push_back({t.to, t.label, t.from});
  out.check_well_formed();
  return out;
}

}  // namespace mlgf
