#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mlgf {

/// A letter of a modal alphabet. Forward letters carry even history-free
/// ids 0..n-1, their converses n..2n-1; the pairing is id arithmetic.
struct Letter {
  std::uint32_t id = 0;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A finite word over the alphabet. The empty vector is epsilon.
using Word = std::vector<Letter>;

/// An alphabet split into forward letters and their converses.
///
/// Construction takes (forward, backward) name pairs; the involution
/// converse(converse(a)) == a and converse(a) != a hold by layout.
class Alphabet {
 public:
  Alphabet() = default;

  /// Builds an alphabet from forward/backward name pairs.
  /// Throws std::invalid_argument on duplicate names or a self-paired letter.
  static Alphabet from_pairs(
      const std::vector<std::pair<std::string, std::string>>& pairs);

  std::size_t size() const { return names_.size(); }   // forward + backward
  std::size_t forward_count() const { return names_.size() / 2; }

  bool is_forward(Letter l) const { return l.id < forward_count(); }
  bool contains(Letter l) const { return l.id < names_.size(); }

  Letter forward(std::size_t i) const { return Letter{static_cast<std::uint32_t>(i)}; }
  Letter converse(Letter l) const;

  /// The forward letter of the pair {l, converse(l)}.
  Letter forward_of(Letter l) const { return is_forward(l) ? l : converse(l); }

  const std::string& name(Letter l) const { return names_.at(l.id); }
  std::optional<Letter> find(const std::string& name) const;

  Word converse_word(const Word& w) const;

  /// All letters, forward first, in id order.
  std::vector<Letter> letters() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;  // [fwd 0..n-1, bwd n..2n-1]
};

}  // namespace mlgf
