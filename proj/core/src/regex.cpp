#include "mlgf/regex.hpp"

#include <cctype>
#include <stdexcept>

namespace mlgf {

namespace {

// Thompson fragments over a shared transition pool.
struct Builder {
  Ndfa a;
  int fresh() { return a.state_count++; }
  void edge(int from, std::optional<Letter> l, int to) {
    a.transitions.push_back({from, l, to});
  }
};

struct Frag {
  int in = 0;
  int out = 0;
  bool empty_language = false;
};

struct Parser {
  const std::string& text;
  const Alphabet& alphabet;
  std::size_t pos = 0;
  Builder& b;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  bool at_atom_start() {
    skip_ws();
    if (pos >= text.size()) return false;
    char c = text[pos];
    return c == '(' || c == '_' || std::isalnum(static_cast<unsigned char>(c));
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("regex: " + msg + " at offset " + std::to_string(pos));
  }

  Frag alt() {
    Frag f = cat();
    while (peek('|')) {
      ++pos;
      Frag g = cat();
      if (f.empty_language) { f = g; continue; }
      if (g.empty_language) continue;
      int in = b.fresh(), out = b.fresh();
      b.edge(in, std::nullopt, f.in);
      b.edge(in, std::nullopt, g.in);
      b.edge(f.out, std::nullopt, out);
      b.edge(g.out, std::nullopt, out);
      f = {in, out, false};
    }
    return f;
  }

  Frag cat() {
    Frag f = rep();
    while (at_atom_start()) {
      Frag g = rep();
      if (f.empty_language || g.empty_language) {
        f.empty_language = true;
        continue;
      }
      b.edge(f.out, std::nullopt, g.in);
      f = {f.in, g.out, false};
    }
    return f;
  }

  Frag rep() {
    Frag f = atom();
    while (peek('*')) {
      ++pos;
      int in = b.fresh(), out = b.fresh();
      if (!f.empty_language) {
        b.edge(in, std::nullopt, f.in);
        b.edge(f.out, std::nullopt, out);
        b.edge(f.out, std::nullopt, f.in);
      }
      b.edge(in, std::nullopt, out);  // empty* and L* both contain eps
      f = {in, out, false};
    }
    return f;
  }

  Frag atom() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of pattern");
    if (text[pos] == '(') {
      ++pos;
      Frag f = alt();
      if (!peek(')')) fail("expected ')'");
      ++pos;
      return f;
    }
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected letter, 'eps', 'empty' or '('");
    std::string ident = text.substr(start, pos - start);
    if (ident == "eps") {
      int in = b.fresh(), out = b.fresh();
      b.edge(in, std::nullopt, out);
      return {in, out, false};
    }
    if (ident == "empty") {
      return {0, 0, true};
    }
    auto l = alphabet.find(ident);
    if (!l) fail("unknown letter '" + ident + "'");
    int in = b.fresh(), out = b.fresh();
    b.edge(in, *l, out);
    return {in, out, false};
  }
};

}  // namespace

Ndfa from_regex(const std::string& pattern, const Alphabet& alphabet) {
  Builder b;
  Parser p{pattern, alphabet, 0, b};
  Frag f = p.alt();
  p.skip_ws();
  if (p.pos != pattern.size()) p.fail("trailing input");
  if (f.empty_language) {
    Ndfa a;
    a.state_count = 1;
    a.start = 0;
    return a;
  }
  b.a.start = f.in;
  b.a.accepting = {f.out};
  b.a.check_well_formed();
  return b.a;
}

}  // namespace mlgf
