#include "mlgf/ndfa.hpp"

#include <algorithm>
#include <stdexcept>

namespace mlgf {

std::string Ndfa::state_name(int q) const {
  if (q >= 0 && q < static_cast<int>(state_names.size()) &&
      !state_names[static_cast<std::size_t>(q)].empty())
    return state_names[static_cast<std::size_t>(q)];
  return "s" + std::to_string(q);
}

void Ndfa::check_well_formed() const {
  auto in_range = [&](int q) { return q >= 0 && q < state_count; };
  if (!in_range(start)) throw std::invalid_argument("ndfa: start state out of range");
  for (int q : accepting)
    if (!in_range(q)) throw std::invalid_argument("ndfa: accepting state out of range");
  for (const auto& t : transitions)
    if (!in_range(t.from) || !in_range(t.to))
      throw std::invalid_argument("ndfa: transition endpoint out of range");
  if (!state_names.empty() &&
      static_cast<int>(state_names.size()) != state_count)
    throw std::invalid_argument("ndfa: state_names size mismatch");
}

std::set<int> epsilon_closure(const Ndfa& a, std::set<int> states) {
  std::vector<int> stack(states.begin(), states.end());
  while (!stack.empty()) {
    int q = stack.back();
    stack.pop_back();
    for (const auto& t : a.transitions) {
      if (t.from == q && !t.label && states.insert(t.to).second)
        stack.push_back(t.to);
    }
  }
  return states;
}

bool accepts(const Ndfa& a, const Word& w) {
  std::set<int> current = epsilon_closure(a, {a.start});
  for (Letter l : w) {
    std::set<int> next;
    for (const auto& t : a.transitions)
      if (t.label == l && current.count(t.from)) next.insert(t.to);
    current = epsilon_closure(a, std::move(next));
    if (current.empty()) return false;
  }
  for (int q : a.accepting)
    if (current.count(q)) return true;
  return false;
}

Ndfa normalize_single_accepting(const Ndfa& a) {
  Ndfa out = a;
  const int fresh = out.state_count;
  out.state_count += 1;
  if (!out.state_names.empty()) out.state_names.push_back("f" + std::to_string(fresh));
  for (int q : a.accepting) out.transitions.push_back({q, std::nullopt, fresh});
  out.accepting = {fresh};
  return out;
}

Ndfa mirror_automaton(const Ndfa& a, const Alphabet& alphabet) {
  Ndfa out;
  // state i of a keeps index i; the fresh start gets the last index
  out.state_count = a.state_count + 1;
  const int fresh = a.state_count;
  out.start = fresh;
  out.accepting = {a.start};
  for (const auto& t : a.transitions) {
    std::optional<Letter> label;
    if (t.label) label = alphabet.converse(*t.label);
    out.transitions.push_back({t.to, label, t.from});
  }
  for (int q : a.accepting) out.transitions.push_back({fresh, std::nullopt, q});
  if (!a.state_names.empty()) {
    out.state_names = a.state_names;
    out.state_names.push_back("m" + std::to_string(fresh));
  }
  return out;
}

int automaton_size(const Ndfa& a) {
  return a.state_count + static_cast<int>(a.transitions.size());
}

AutomataMap::AutomataMap(Alphabet alphabet, std::vector<Ndfa> by_letter)
    : alphabet_(std::move(alphabet)), by_letter_(std::move(by_letter)) {
  if (by_letter_.size() != alphabet_.size())
    throw std::invalid_argument("automata map must cover the whole alphabet");
  for (const auto& a : by_letter_) a.check_well_formed();
}

}  // namespace mlgf
