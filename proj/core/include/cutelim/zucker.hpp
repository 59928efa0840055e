#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cutelim/proof.hpp"
#include "cutelim/trace.hpp"

namespace cutelim {

/// Contraction indices for the antecedent of one node's conclusion.
struct ZNode {
  std::vector<std::uint64_t> ant;
  std::vector<std::shared_ptr<const ZNode>> kids;
};

/// Implication-free proof with contraction indices on every antecedent
/// occurrence. Indices are a function of the tree, so they are recomputed
/// whenever the tree changes.
class ZProof {
 public:
  const Proof& proof() const { return proof_; }
  const std::vector<std::uint64_t>& indices() const { return root_->ant; }
  const ZNode& annotation() const { return *root_; }
  const ZNode& at(const Path& path) const;

 private:
  friend ZProof to_zucker(const Proof& p);
  ZProof(Proof p, std::shared_ptr<const ZNode> r) : proof_(std::move(p)), root_(std::move(r)) {}
  Proof proof_;
  std::shared_ptr<const ZNode> root_;
};

class IndexOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Throws ProofError if an implication occurs anywhere in p.
ZProof to_zucker(const Proof& p);
Proof erase_indices(const ZProof& z);

struct ZMeasure {
  std::size_t d = 0;
  std::uint64_t z = 0;
  std::uint64_t r = 0;
  auto operator<=>(const ZMeasure&) const = default;
  std::string str() const;
};

ZMeasure z_measure(const ZProof& z);  // root must be a cut

struct ZStepResult {
  ZProof proof;
  std::string label;
};

struct ZOptions {
  std::size_t maxSteps = 200000;
  Trace* trace = nullptr;
};

struct ZStats {
  std::size_t steps = 0;
  std::size_t measureChecks = 0;
};

class MeasureViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One reduction on a cut at the root whose premises are cut-free. For
/// Z-3.4 the upper cut is eliminated before returning.
ZStepResult z_step(const ZProof& z, const ZOptions& opt = {}, ZStats* stats = nullptr);

/// Repeatedly rewrites the leftmost topmost cut. Every step is checked to
/// lower the measure of the cut it rewrites (MeasureViolation otherwise);
/// StepBudgetExceeded when maxSteps is reached.
ZProof eliminate_cut_z(const ZProof& z, const ZOptions& opt = {}, ZStats* stats = nullptr);

// True when the formulas agree and every index of `out` is at most the
// corresponding index of `in`.
bool indicesBounded(const ZProof& out, const ZProof& in);

}  // namespace cutelim
