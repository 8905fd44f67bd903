#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace trilogic {

/// Node kinds of the abstract syntax. Declaration order doubles as the
/// constructor order used when formulas are sorted.
enum class NodeKind : unsigned char { atom, falsum, negation, conjunction, disjunction, implication };

constexpr bool is_binary(NodeKind k) noexcept {
  return k == NodeKind::conjunction || k == NodeKind::disjunction || k == NodeKind::implication;
}

/// Immutable formula tree with shared subterms. Copies are cheap.
///
/// Truth and bi-implication have no node kind of their own: `verum()` builds
/// ~F and `biimplication(a, b)` builds (a -> b) & (b -> a).
class Formula {
 public:
  static Formula atom(std::string name) { return Formula(make(NodeKind::atom, std::move(name), {}, {})); }
  static Formula falsum() {
    static const Formula f(make(NodeKind::falsum, {}, {}, {}));
    return f;
  }

  NodeKind kind() const noexcept { return node_->kind; }
  const std::string& name() const noexcept { return node_->name; }

  /// Operand of a negation, or left operand of a binary node.
  const Formula& left() const noexcept {
    assert(node_->kind == NodeKind::negation || is_binary(node_->kind));
    return *node_->left;
  }
  const Formula& right() const noexcept {
    assert(is_binary(node_->kind));
    return *node_->right;
  }
  const Formula& operand() const noexcept { return left(); }

  /// Number of nodes.
  std::size_t size() const noexcept { return node_->size; }
  std::size_t depth() const noexcept { return node_->depth; }

  static Formula unary(const Formula& a) { return Formula(make(NodeKind::negation, {}, &a, nullptr)); }
  static Formula binary(NodeKind kind, const Formula& a, const Formula& b) {
    assert(is_binary(kind));
    return Formula(make(kind, {}, &a, &b));
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.size() != b.size()) return false;
    switch (a.kind()) {
      case NodeKind::atom: return a.name() == b.name();
      case NodeKind::falsum: return true;
      case NodeKind::negation: return a.left() == b.left();
      default: return a.left() == b.left() && a.right() == b.right();
    }
  }

 private:
  struct Node;

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  struct Node {
    NodeKind kind;
    std::string name;
    std::unique_ptr<Formula> left;
    std::unique_ptr<Formula> right;
    std::size_t size = 1;
    std::size_t depth = 0;
  };

  static std::shared_ptr<const Node> make(NodeKind kind, std::string name, const Formula* l, const Formula* r) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->name = std::move(name);
    if (l) {
      n->left = std::make_unique<Formula>(*l);
      n->size += l->size();
      n->depth = l->depth() + 1;
    }
    if (r) {
      n->right = std::make_unique<Formula>(*r);
      n->size += r->size();
      n->depth = std::max(n->depth, r->depth() + 1);
    }
    return n;
  }

  std::shared_ptr<const Node> node_;
};

inline Formula atom(std::string name) { return Formula::atom(std::move(name)); }
inline Formula falsum() { return Formula::falsum(); }
inline Formula negation(const Formula& a) { return Formula::unary(a); }
inline Formula conjunction(const Formula& a, const Formula& b) {
  return Formula::binary(NodeKind::conjunction, a, b);
}
inline Formula disjunction(const Formula& a, const Formula& b) {
  return Formula::binary(NodeKind::disjunction, a, b);
}
inline Formula implication(const Formula& a, const Formula& b) {
  return Formula::binary(NodeKind::implication, a, b);
}

/// T abbreviates ~F.
inline Formula verum() { return negation(falsum()); }

/// a <-> b abbreviates (a -> b) & (b -> a).
inline Formula biimplication(const Formula& a, const Formula& b) {
  return conjunction(implication(a, b), implication(b, a));
}

inline Formula binary(NodeKind kind, const Formula& a, const Formula& b) { return Formula::binary(kind, a, b); }

namespace detail {
inline void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case NodeKind::atom: out.insert(f.name()); break;
    case NodeKind::falsum: break;
    case NodeKind::negation: collect_atoms(f.left(), out); break;
    default:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
  }
}
}  // namespace detail

/// Atom names occurring in `f`, sorted.
inline std::vector<std::string> atoms_of(const Formula& f) {
  std::set<std::string> s;
  detail::collect_atoms(f, s);
  return {s.begin(), s.end()};
}

/// Sorted union of the atoms of all given formulas.
template <class Range>
std::vector<std::string> atoms_of_all(const Range& formulas) {
  std::set<std::string> s;
  for (const Formula& f : formulas) detail::collect_atoms(f, s);
  return {s.begin(), s.end()};
}

/// Replaces atoms by formulas. Atoms without an entry are kept.
inline Formula substitute(const Formula& f, const std::map<std::string, Formula>& sub) {
  switch (f.kind()) {
    case NodeKind::atom: {
      auto it = sub.find(f.name());
      return it == sub.end() ? f : it->second;
    }
    case NodeKind::falsum: return f;
    case NodeKind::negation: return negation(substitute(f.left(), sub));
    default: return binary(f.kind(), substitute(f.left(), sub), substitute(f.right(), sub));
  }
}

/// Which node kinds occur in `f`, ignoring subterms without atoms.
/// A closed subterm only ever sees classical arguments, so it cannot tell
/// two family members apart.
inline std::set<NodeKind> open_connectives(const Formula& f) {
  std::set<NodeKind> out;
  auto walk = [&](auto& self, const Formula& g) -> bool {  // returns: g contains an atom
    switch (g.kind()) {
      case NodeKind::atom: return true;
      case NodeKind::falsum: return false;
      case NodeKind::negation: {
        bool open = self(self, g.left());
        if (open) out.insert(g.kind());
        return open;
      }
      default: {
        bool l = self(self, g.left());
        bool r = self(self, g.right());
        if (l || r) out.insert(g.kind());
        return l || r;
      }
    }
  };
  walk(walk, f);
  return out;
}

/// Total order: by size, then constructor order (atom < F < ~ < & < | < ->),
/// then atom name, then operands left to right.
inline int compare(const Formula& a, const Formula& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case NodeKind::atom: return a.name().compare(b.name()) < 0 ? -1 : (a.name() == b.name() ? 0 : 1);
    case NodeKind::falsum: return 0;
    case NodeKind::negation: return compare(a.left(), b.left());
    default:
      if (int c = compare(a.left(), b.left())) return c;
      return compare(a.right(), b.right());
  }
}

struct FormulaLess {
  bool operator()(const Formula& a, const Formula& b) const { return compare(a, b) < 0; }
};

namespace detail {
// Binding strength in the concrete syntax: ~ > & > | > ->.
inline int precedence(NodeKind k) {
  switch (k) {
    case NodeKind::implication: return 1;
    case NodeKind::disjunction: return 2;
    case NodeKind::conjunction: return 3;
    case NodeKind::negation: return 4;
    default: return 5;
  }
}

inline const char* symbol(NodeKind k) {
  switch (k) {
    case NodeKind::conjunction: return " & ";
    case NodeKind::disjunction: return " | ";
    case NodeKind::implication: return " -> ";
    default: return "";
  }
}

inline void print(std::ostream& os, const Formula& f) {
  auto operand = [&os](const Formula& g, bool parens) {
    if (parens) os << '(';
    print(os, g);
    if (parens) os << ')';
  };
  switch (f.kind()) {
    case NodeKind::atom: os << f.name(); return;
    case NodeKind::falsum: os << 'F'; return;
    case NodeKind::negation:
      os << '~';
      operand(f.left(), precedence(f.left().kind()) < precedence(NodeKind::negation));
      return;
    default: {
      const int p = precedence(f.kind());
      const bool right_assoc = f.kind() == NodeKind::implication;
      const int pl = precedence(f.left().kind());
      const int pr = precedence(f.right().kind());
      operand(f.left(), pl < p || (pl == p && right_assoc));
      os << symbol(f.kind());
      operand(f.right(), pr < p || (pr == p && !right_assoc));
    }
  }
}
}  // namespace detail

/// ASCII rendering in the parser's concrete syntax, with the fewest
/// parentheses that still parse back to the same tree.
inline std::string to_string(const Formula& f) {
  std::ostringstream os;
  detail::print(os, f);
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Formula& f) {
  detail::print(os, f);
  return os;
}

}  // namespace trilogic
