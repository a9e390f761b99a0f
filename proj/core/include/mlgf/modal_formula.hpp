#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mlgf/alphabet.hpp"

namespace mlgf {

enum class MKind { Prop, Top, Bottom, Not, And, Or, Dia, Box, Nominal };

class ModalFormula;
using MF = std::shared_ptr<const ModalFormula>;

/// Immutable multimodal formula over an alphabet with converse.
/// Classical implication is parser-level sugar; it never appears here.
struct ModalFormula {
  MKind kind;
  std::string name;   // Prop / Nominal
  Letter letter{};    // Dia / Box
  MF lhs, rhs;        // children: unary ops use lhs only

  static MF prop(std::string p);
  static MF top();
  static MF bottom();
  static MF negate(MF f);
  static MF conj(MF l, MF r);
  static MF disj(MF l, MF r);
  static MF dia(Letter a, MF f);
  static MF box(Letter a, MF f);
  static MF nominal(std::string n);
};

/// Total structural order; 0 means structurally equal.
int compare(const MF& a, const MF& b);
inline bool equal(const MF& a, const MF& b) { return compare(a, b) == 0; }

struct ModalLess {
  bool operator()(const MF& a, const MF& b) const { return compare(a, b) < 0; }
};

/// Negation normal form: pushes negation down to Prop/Nominal leaves,
/// dualizing box/diamond, and/or, top/bottom. A fixed point on NNF input.
MF nnf(const MF& f);

/// True iff negation occurs only directly above Prop or Nominal leaves.
bool is_nnf(const MF& f);

/// Distinct box-subformulas in postorder: each entry precedes every formula
/// it is a subformula of. Duplicated occurrences share one entry.
std::vector<MF> box_subformulas_ordered(const MF& f);

/// Number of AST nodes; the size measure used for bounds.
int node_count(const MF& f);

std::string to_string(const MF& f, const Alphabet& a);

}  // namespace mlgf
