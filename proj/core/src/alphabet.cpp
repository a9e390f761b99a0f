#include "mlgf/alphabet.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mlgf {

Alphabet Alphabet::from_pairs(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  Alphabet a;
  std::set<std::string> seen;
  for (const auto& [fwd, bwd] : pairs) {
    if (fwd == bwd)
      throw std::invalid_argument("letter '" + fwd + "' paired with itself");
    if (!seen.insert(fwd).second)
      throw std::invalid_argument("duplicate letter name '" + fwd + "'");
    if (!seen.insert(bwd).second)
      throw std::invalid_argument("duplicate letter name '" + bwd + "'");
  }
  a.names_.reserve(pairs.size() * 2);
  for (const auto& p : pairs) a.names_.push_back(p.first);
  for (const auto& p : pairs) a.names_.push_back(p.second);
  return a;
}

Letter Alphabet::converse(Letter l) const {
  const auto n = static_cast<std::uint32_t>(forward_count());
  return Letter{l.id < n ? l.id + n : l.id - n};
}

std::optional<Letter> Alphabet::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return Letter{static_cast<std::uint32_t>(i)};
  return std::nullopt;
}

Word Alphabet::converse_word(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (!contains(*it)) throw std::invalid_argument("letter not in alphabet");
    out.push_back(converse(*it));
  }
  return out;
}

std::vector<Letter> Alphabet::letters() const {
  std::vector<Letter> out;
  out.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i)
    out.push_back(Letter{static_cast<std::uint32_t>(i)});
  return out;
}

}  // namespace mlgf
