#include "mlgf/semithue.hpp"

#include <algorithm>
#include <deque>

namespace mlgf {

bool SemiThueSystem::has_rule(const ProductionRule& r) const {
  return std::find(rules.begin(), rules.end(), r) != rules.end();
}

std::string rule_to_string(const Alphabet& a, const ProductionRule& r) {
  std::string out = a.name(r.lhs) + " ->";
  for (Letter l : r.rhs) out += " " + a.name(l);
  return out;
}

SemiThueSystem converse_closure(const SemiThueSystem& s) {
  SemiThueSystem out = s;
  for (const auto& r : s.rules) {
    ProductionRule mirrored{s.alphabet.converse(r.lhs),
                            s.alphabet.converse_word(r.rhs)};
    if (!out.has_rule(mirrored)) out.rules.push_back(mirrored);
  }
  return out;
}

bool is_converse_closed(const SemiThueSystem& s) {
  for (const auto& r : s.rules) {
    ProductionRule mirrored{s.alphabet.converse(r.lhs),
                            s.alphabet.converse_word(r.rhs)};
    if (!s.has_rule(mirrored)) return false;
  }
  return true;
}

std::set<Word> one_step_rewrites(const Word& w, const SemiThueSystem& s) {
  std::set<Word> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (const auto& r : s.rules) {
      if (w[i] != r.lhs) continue;
      Word v;
      v.reserve(w.size() - 1 + r.rhs.size());
      v.insert(v.end(), w.begin(), w.begin() + static_cast<long>(i));
      v.insert(v.end(), r.rhs.begin(), r.rhs.end());
      v.insert(v.end(), w.begin() + static_cast<long>(i) + 1, w.end());
      out.insert(std::move(v));
    }
  }
  return out;
}

std::set<Word> derivable_words(const SemiThueSystem& s, const Word& u,
                               int step_bound, int length_bound) {
  std::set<Word> visited{u};
  std::deque<Word> frontier{u};
  for (int step = 0; step < step_bound && !frontier.empty(); ++step) {
    std::deque<Word> next;
    for (const auto& w : frontier) {
      for (auto& v : one_step_rewrites(w, s)) {
        if (static_cast<int>(v.size()) > length_bound) continue;
        if (visited.insert(v).second) next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  return visited;
}

bool derives_within(const SemiThueSystem& s, const Word& u, const Word& v,
                    int step_bound, int length_bound) {
  if (u == v) return true;
  std::set<Word> visited{u};
  std::deque<Word> frontier{u};
  for (int step = 0; step < step_bound && !frontier.empty(); ++step) {
    std::deque<Word> next;
    for (const auto& w : frontier) {
      for (auto& cand : one_step_rewrites(w, s)) {
        if (static_cast<int>(cand.size()) > length_bound) continue;
        if (cand == v) return true;
        if (visited.insert(cand).second) next.push_back(std::move(cand));
      }
    }
    frontier = std::move(next);
  }
  return false;
}

std::vector<Word> enumerate_words(const Alphabet& a, int max_len) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (Letter l : a.letters()) {
        Word w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace mlgf
