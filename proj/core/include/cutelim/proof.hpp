#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutelim/formula.hpp"

namespace cutelim {

enum class Rule : std::uint8_t { Ax, BotAx, C, W, K, Cut, AndL, AndR, OrL, OrR, ImpL, ImpR };

const char* ruleName(Rule r);

class ProofError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Path = std::vector<std::uint8_t>;

std::string pathStr(const Path& p);

/// Immutable proof tree of system G. Every node is checked when it is
/// built, so a Proof value is always a valid derivation; validate() redoes
/// the check from the leaves.
class Proof {
 public:
  static Proof ax(Formula f);
  static Proof botAx(Formula f);
  static Proof c(std::size_t pos, Proof sub);
  static Proof w(std::size_t pos, Proof sub);
  static Proof k(std::size_t pos, Formula f, Proof sub);
  static Proof cut(std::size_t pos, Proof left, Proof right);
  static Proof andL(std::size_t pos, int side, Formula other, Proof sub);
  static Proof andR(Proof left, Proof right);
  static Proof orL(std::size_t pos, Proof left, Proof right);
  static Proof orR(int side, Formula other, Proof sub);
  static Proof impL(std::size_t pos, Proof left, Proof right);
  static Proof impR(Proof sub);

  Rule rule() const { return n_->rule; }
  std::size_t pos() const { return n_->pos; }
  int side() const { return n_->side; }
  // Ax/BotAx formula, K inserted formula, AndL/OrR other conjunct/disjunct.
  const Formula& formula() const { return *n_->f; }

  std::size_t arity() const { return n_->kids.size(); }
  const Proof& child(std::size_t i) const { return n_->kids.at(i); }
  const Proof& sub() const { return child(0); }
  const Proof& left() const { return child(0); }
  const Proof& right() const { return child(1); }

  const Sequent& conclusion() const { return n_->concl; }
  const std::vector<Formula>& ant() const { return n_->concl.antecedent; }
  const Formula& succ() const { return n_->concl.succedent; }

  // Counts saturate at UINT64_MAX.
  std::uint64_t nodeCount() const { return n_->nodes; }
  std::uint64_t cutCount() const { return n_->cuts; }
  std::uint64_t count(Rule r) const;
  std::size_t degree() const { return n_->degree; }
  bool isCutFree() const { return n_->cuts == 0; }
  bool mentionsImplication() const { return n_->hasImp; }
  bool isAxiom() const { return rule() == Rule::Ax || rule() == Rule::BotAx; }

  // Cut formula of a Cut node.
  const Formula& cutFormula() const { return left().succ(); }

  const Proof& at(const Path& path) const;
  Proof replaceAt(const Path& path, const Proof& replacement) const;
  // Same rule and parameters, new children.
  Proof rebuild(std::vector<Proof> kids) const;

  bool sameNode(const Proof& o) const { return n_ == o.n_; }
  const void* id() const { return n_.get(); }
  friend bool operator==(const Proof& a, const Proof& b);
  friend bool operator!=(const Proof& a, const Proof& b) { return !(a == b); }

 private:
  struct Node {
    Rule rule;
    std::size_t pos = 0;
    int side = 0;
    std::optional<Formula> f;
    std::vector<Proof> kids;
    Sequent concl;
    std::uint64_t nodes = 1;
    std::uint64_t cuts = 0;
    std::size_t degree = 0;
    bool hasImp = false;
    std::uint64_t counts[12] = {};
  };
  explicit Proof(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  static Proof make(Rule r, std::size_t pos, int side, std::optional<Formula> f,
                    std::vector<Proof> kids);

  std::shared_ptr<const Node> n_;
};

/// Recomputes the conclusion a rule application yields from premise
/// sequents; throws ProofError naming the failed side condition.
Sequent conclude(Rule r, std::size_t pos, int side, const std::optional<Formula>& f,
                 const std::vector<const Sequent*>& premises);

/// Rechecks every node bottom-up against its cached conclusion.
const Proof& validate(const Proof& p);

// Left-to-right preorder paths to every Cut node.
std::vector<Path> cutPaths(const Proof& p);
// Leftmost cut with no cut above it.
std::optional<Path> leftmostTopmostCut(const Proof& p);

/// Chains of unary structural helpers, used by every rewriting engine.
Proof cs(Proof p, const std::vector<std::size_t>& positions);
Proof ws(Proof p, const std::vector<std::size_t>& positions);
// Moves the formula at `from` to `to` by adjacent interchanges.
Proof moveTo(Proof p, std::size_t from, std::size_t to);
// Inserts `fs` at `pos` by thinning (first element ends up at pos).
Proof ksAt(Proof p, std::size_t pos, const std::vector<Formula>& fs);

/// Derives target ⊢ succ from p using C, W, K only, provided every formula
/// of p's antecedent occurs in target. Occurrences are matched greedily
/// left to right; surplus copies are contracted.
Proof rearrange(const Proof& p, const std::vector<Formula>& target);

}  // namespace cutelim
