#include "mlgf/modal_formula.hpp"

#include <set>
#include <stdexcept>

namespace mlgf {

namespace {
MF node(MKind k, std::string name, Letter letter, MF l, MF r) {
  auto f = std::make_shared<ModalFormula>();
  f->kind = k;
  f->name = std::move(name);
  f->letter = letter;
  f->lhs = std::move(l);
  f->rhs = std::move(r);
  return f;
}
}  // namespace

MF ModalFormula::prop(std::string p) { return node(MKind::Prop, std::move(p), {}, nullptr, nullptr); }
MF ModalFormula::top() { return node(MKind::Top, {}, {}, nullptr, nullptr); }
MF ModalFormula::bottom() { return node(MKind::Bottom, {}, {}, nullptr, nullptr); }
MF ModalFormula::negate(MF f) { return node(MKind::Not, {}, {}, std::move(f), nullptr); }
MF ModalFormula::conj(MF l, MF r) { return node(MKind::And, {}, {}, std::move(l), std::move(r)); }
MF ModalFormula::disj(MF l, MF r) { return node(MKind::Or, {}, {}, std::move(l), std::move(r)); }
MF ModalFormula::dia(Letter a, MF f) { return node(MKind::Dia, {}, a, std::move(f), nullptr); }
MF ModalFormula::box(Letter a, MF f) { return node(MKind::Box, {}, a, std::move(f), nullptr); }
MF ModalFormula::nominal(std::string n) { return node(MKind::Nominal, std::move(n), {}, nullptr, nullptr); }

int compare(const MF& a, const MF& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
  if (a->letter != b->letter) return a->letter < b->letter ? -1 : 1;
  auto cmp_child = [](const MF& x, const MF& y) {
    if (!x && !y) return 0;
    if (!x) return -1;
    if (!y) return 1;
    return compare(x, y);
  };
  if (int c = cmp_child(a->lhs, b->lhs)) return c;
  return cmp_child(a->rhs, b->rhs);
}

namespace {
MF nnf_pos(const MF& f);
MF nnf_neg(const MF& f);

MF nnf_pos(const MF& f) {
  switch (f->kind) {
    case MKind::Prop:
    case MKind::Top:
    case MKind::Bottom:
    case MKind::Nominal:
      return f;
    case MKind::Not:
      return nnf_neg(f->lhs);
    case MKind::And:
      return ModalFormula::conj(nnf_pos(f->lhs), nnf_pos(f->rhs));
    case MKind::Or:
      return ModalFormula::disj(nnf_pos(f->lhs), nnf_pos(f->rhs));
    case MKind::Dia:
      return ModalFormula::dia(f->letter, nnf_pos(f->lhs));
    case MKind::Box:
      return ModalFormula::box(f->letter, nnf_pos(f->lhs));
  }
  throw std::logic_error("nnf: bad kind");
}

MF nnf_neg(const MF& f) {
  switch (f->kind) {
    case MKind::Prop:
    case MKind::Nominal:
      return ModalFormula::negate(f);
    case MKind::Top:
      return ModalFormula::bottom();
    case MKind::Bottom:
      return ModalFormula::top();
    case MKind::Not:
      return nnf_pos(f->lhs);
    case MKind::And:
      return ModalFormula::disj(nnf_neg(f->lhs), nnf_neg(f->rhs));
    case MKind::Or:
      return ModalFormula::conj(nnf_neg(f->lhs), nnf_neg(f->rhs));
    case MKind::Dia:
      return ModalFormula::box(f->letter, nnf_neg(f->lhs));
    case MKind::Box:
      return ModalFormula::dia(f->letter, nnf_neg(f->lhs));
  }
  throw std::logic_error("nnf: bad kind");
}
}  // namespace

MF nnf(const MF& f) { return nnf_pos(f); }

bool is_nnf(const MF& f) {
  switch (f->kind) {
    case MKind::Prop:
    case MKind::Top:
    case MKind::Bottom:
    case MKind::Nominal:
      return true;
    case MKind::Not:
      return f->lhs->kind == MKind::Prop || f->lhs->kind == MKind::Nominal;
    case MKind::And:
    case MKind::Or:
      return is_nnf(f->lhs) && is_nnf(f->rhs);
    case MKind::Dia:
    case MKind::Box:
      return is_nnf(f->lhs);
  }
  return false;
}

namespace {
void collect_boxes(const MF& f, std::vector<MF>& out,
                   std::set<MF, ModalLess>& seen) {
  if (f->lhs) collect_boxes(f->lhs, out, seen);
  if (f->rhs) collect_boxes(f->rhs, out, seen);
  if (f->kind == MKind::Box && seen.insert(f).second) out.push_back(f);
}
}  // namespace

std::vector<MF> box_subformulas_ordered(const MF& f) {
  std::vector<MF> out;
  std::set<MF, ModalLess> seen;
  collect_boxes(f, out, seen);
  return out;
}

int node_count(const MF& f) {
  int n = 1;
  if (f->lhs) n += node_count(f->lhs);
  if (f->rhs) n += node_count(f->rhs);
  return n;
}

namespace {
// precedence: atoms/unary bind tightest, then &, then |
int prec(MKind k) {
  switch (k) {
    case MKind::Or: return 1;
    case MKind::And: return 2;
    default: return 3;
  }
}

void print(const MF& f, const Alphabet& a, int parent_prec, std::string& out) {
  const int p = prec(f->kind);
  const bool paren = p < parent_prec;
  if (paren) out += "(";
  switch (f->kind) {
    case MKind::Prop: out += f->name; break;
    case MKind::Top: out += "true"; break;
    case MKind::Bottom: out += "false"; break;
    case MKind::Nominal: out += "@" + f->name; break;
    case MKind::Not:
      out += "~";
      print(f->lhs, a, 3, out);
      break;
    case MKind::And:
      print(f->lhs, a, p, out);
      out += " & ";
      print(f->rhs, a, p + 1, out);
      break;
    case MKind::Or:
      print(f->lhs, a, p, out);
      out += " | ";
      print(f->rhs, a, p + 1, out);
      break;
    case MKind::Dia:
      out += "<" + a.name(f->letter) + ">";
      print(f->lhs, a, 3, out);
      break;
    case MKind::Box:
      out += "[" + a.name(f->letter) + "]";
      print(f->lhs, a, 3, out);
      break;
  }
  if (paren) out += ")";
}
}  // namespace

std::string to_string(const MF& f, const Alphabet& a) {
  std::string out;
  print(f, a, 0, out);
  return out;
}

}  // namespace mlgf
