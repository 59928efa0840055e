#include "cutelim/formula.hpp"

#include <functional>

namespace cutelim {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::atom(std::string name) {
  bool ok = !name.empty() && name[0] >= 'a' && name[0] <= 'z' && name != "bot";
  for (char c : name) ok = ok && ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_');
  if (!ok) throw std::invalid_argument("bad atom name '" + name + "'");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->hash = mix(0x1234, std::hash<std::string>{}(name));
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::bottom() {
  static const Formula bot = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bottom;
    n->hash = 0xb07;
    return Formula(std::move(n));
  }();
  return bot;
}

Formula Formula::binary(Kind kind, Formula left, Formula right) {
  if (kind < Kind::And) throw std::invalid_argument("not a binary connective");
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->degree = 1 + left.degree() + right.degree();
  n->hasImp = kind == Kind::Imp || left.containsImplication() || right.containsImplication();
  n->hash = mix(mix(static_cast<std::size_t>(kind) * 31 + 7, left.hash()), right.hash());
  n->left = std::make_unique<Formula>(std::move(left));
  n->right = std::make_unique<Formula>(std::move(right));
  return Formula(std::move(n));
}

Formula Formula::conj(Formula l, Formula r) { return binary(Kind::And, std::move(l), std::move(r)); }
Formula Formula::disj(Formula l, Formula r) { return binary(Kind::Or, std::move(l), std::move(r)); }
Formula Formula::imp(Formula l, Formula r) { return binary(Kind::Imp, std::move(l), std::move(r)); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.degree() != b.degree()) return false;
  switch (a.kind()) {
    case Formula::Kind::Atom:
      return a.name() == b.name();
    case Formula::Kind::Bottom:
      return true;
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  switch (a.kind()) {
    case Formula::Kind::Atom:
      return a.name() < b.name();
    case Formula::Kind::Bottom:
      return false;
    default:
      if (a.left() != b.left()) return a.left() < b.left();
      return a.right() < b.right();
  }
}

std::string Formula::str() const {
  switch (kind()) {
    case Kind::Atom:
      return name();
    case Kind::Bottom:
      return "bot";
    case Kind::And:
      return "(" + left().str() + " & " + right().str() + ")";
    case Kind::Or:
      return "(" + left().str() + " | " + right().str() + ")";
    case Kind::Imp:
      return "(" + left().str() + " -> " + right().str() + ")";
  }
  return {};
}

std::string formulasStr(std::span<const Formula> fs) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    out += fs[i].str();
  }
  return out;
}

std::string Sequent::str() const {
  std::string ant = formulasStr(antecedent);
  return ant.empty() ? "|- " + succedent.str() : ant + " |- " + succedent.str();
}

std::vector<Formula> splice(std::span<const Formula> seq, std::size_t at,
                            std::span<const Formula> insert, std::size_t drop) {
  if (at > seq.size() || drop > seq.size() - at) {
    throw PositionError("splice at " + std::to_string(at) + " dropping " + std::to_string(drop) +
                        " exceeds antecedent of length " + std::to_string(seq.size()));
  }
  std::vector<Formula> out;
  out.reserve(seq.size() - drop + insert.size());
  out.insert(out.end(), seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(at));
  out.insert(out.end(), insert.begin(), insert.end());
  out.insert(out.end(), seq.begin() + static_cast<std::ptrdiff_t>(at + drop), seq.end());
  return out;
}

Sequent antecedent_splice(const Sequent& s, std::size_t at, std::span<const Formula> insert,
                          std::size_t drop) {
  return Sequent{splice(s.antecedent, at, insert, drop), s.succedent};
}

}  // namespace cutelim
