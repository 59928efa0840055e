#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cutelim {

/// Propositional formula over atoms, bottom, and the binary connectives
/// and/or/implies. Immutable; copies share structure. Equality is
/// syntactic.
class Formula {
 public:
  enum class Kind : std::uint8_t { Atom, Bottom, And, Or, Imp };

  static Formula atom(std::string name);
  static Formula bottom();
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);
  static Formula imp(Formula left, Formula right);
  static Formula binary(Kind kind, Formula left, Formula right);

  Kind kind() const { return node_->kind; }
  bool isAtom() const { return kind() == Kind::Atom; }
  bool isBottom() const { return kind() == Kind::Bottom; }
  bool isBinary() const { return kind() >= Kind::And; }

  // Only valid for atoms.
  const std::string& name() const { return node_->name; }
  // Only valid for binary formulas.
  const Formula& left() const { return *node_->left; }
  const Formula& right() const { return *node_->right; }

  /// Number of binary connectives.
  std::size_t degree() const { return node_->degree; }
  bool containsImplication() const { return node_->hasImp; }
  std::size_t hash() const { return node_->hash; }

  std::string str() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  // Total order (used to canonicalize formula sets); not semantically meaningful.
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::unique_ptr<Formula> left;
    std::unique_ptr<Formula> right;
    std::size_t degree = 0;
    std::size_t hash = 0;
    bool hasImp = false;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

inline std::size_t formula_degree(const Formula& f) { return f.degree(); }

/// Gamma |- A with a single succedent.
struct Sequent {
  std::vector<Formula> antecedent;
  Formula succedent;

  std::string str() const;
  friend bool operator==(const Sequent&, const Sequent&) = default;
};

std::string formulasStr(std::span<const Formula> fs);

class PositionError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Removes `drop` antecedent formulas at `at` and puts `insert` in their
/// place. Throws PositionError when at + drop exceeds the antecedent.
Sequent antecedent_splice(const Sequent& s, std::size_t at, std::span<const Formula> insert,
                          std::size_t drop);

// Same operation on a bare formula sequence.
std::vector<Formula> splice(std::span<const Formula> seq, std::size_t at,
                            std::span<const Formula> insert, std::size_t drop);

}  // namespace cutelim
