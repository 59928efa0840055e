#include "cutelim/zucker.hpp"

#include <algorithm>
#include <unordered_map>

#include "cutelim/rank.hpp"
#include "reductions.hpp"

namespace cutelim {

namespace {

using Memo = std::unordered_map<const void*, std::shared_ptr<const ZNode>>;

std::uint64_t checkedMul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw IndexOverflow("contraction index overflow");
  return out;
}

std::uint64_t checkedAdd(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw IndexOverflow("contraction index overflow");
  return out;
}

std::shared_ptr<const ZNode> annotate(const Proof& p, Memo& memo) {
  if (auto it = memo.find(p.id()); it != memo.end()) return it->second;
  auto n = std::make_shared<ZNode>();
  for (std::size_t c = 0; c < p.arity(); ++c) n->kids.push_back(annotate(p.child(c), memo));
  auto& ant = n->ant;
  std::size_t pos = p.pos();
  auto at = [&](std::size_t i) -> const std::vector<std::uint64_t>& { return n->kids[i]->ant; };
  auto cut = [](const std::vector<std::uint64_t>& v, std::size_t a, std::size_t b) {
    return std::vector<std::uint64_t>(v.begin() + static_cast<std::ptrdiff_t>(a), v.begin() + static_cast<std::ptrdiff_t>(b));
  };
  switch (p.rule()) {
    case Rule::Ax:
    case Rule::BotAx:
      ant = {1};
      break;
    case Rule::C:
      ant = at(0);
      std::swap(ant[pos], ant[pos + 1]);
      break;
    case Rule::W:
      ant = at(0);
      ant[pos] = checkedAdd(ant[pos], ant[pos + 1]);
      ant.erase(ant.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
      break;
    case Rule::K:
      ant = at(0);
      ant.insert(ant.begin() + static_cast<std::ptrdiff_t>(pos), 1);
      break;
    case Rule::Cut: {
      const auto& l = at(0);
      const auto& r = at(1);
      std::uint64_t alpha = r[pos];
      ant = cut(r, 0, pos);
      for (std::uint64_t i : l) ant.push_back(checkedMul(i, alpha));
      auto tail = cut(r, pos + 1, r.size());
      ant.insert(ant.end(), tail.begin(), tail.end());
      break;
    }
    case Rule::AndL:
    case Rule::OrR:
      ant = at(0);
      break;
    case Rule::AndR:
    case Rule::OrL: {
      const auto& l = at(0);
      const auto& r = at(1);
      for (std::size_t i = 0; i < l.size(); ++i) ant.push_back(std::max(l[i], r[i]));
      break;
    }
    case Rule::ImpL:
    case Rule::ImpR:
      throw ProofError("implication found: no contraction indices for " + std::string(ruleName(p.rule())));
  }
  memo.emplace(p.id(), n);
  return n;
}

std::uint64_t rightIndex(const Proof& cut) {
  Memo memo;
  return annotate(cut.right(), memo)->ant.at(cut.pos());
}

ZMeasure measureOf(const Proof& cut) {
  return {cut.cutFormula().degree(), rightIndex(cut), cut_rank(cut).total};
}

class ZEngine {
 public:
  ZEngine(const ZOptions& opt, ZStats* stats) : opt_(opt), stats_(stats) {}

  Proof step(const Proof& cut, std::string& label) {
    ZMeasure before = measureOf(cut);
    CutRank cr = cut_rank(cut);
    std::optional<detail::Rewrite> rw;
    const detail::CutFn mk = detail::plainCut;
    if (cr.total == 2) {
      rw = detail::axiomCase(cut);
      if (!rw) rw = detail::principalLattice(cut, mk);
    } else if (cr.left > 1) {
      rw = detail::pushLeft(cut, mk);
    } else if (cut.right().rule() == Rule::W && cut.right().pos() == cut.pos()) {
      rw = contractionCase(cut, before);
    } else {
      rw = detail::pushRight(cut, mk);
    }
    if (!rw) throw std::logic_error("no reduction applies to cut " + cut.conclusion().str());
    label = "Z-" + rw->kase;
    for (const Path& c : cutPaths(rw->proof)) check(rw->proof.at(c), before, label);
    return rw->proof;
  }

  Proof eliminate(Proof p) {
    while (auto path = leftmostTopmostCut(p)) {
      if (steps_ >= opt_.maxSteps) throw StepBudgetExceeded("step budget of " + std::to_string(opt_.maxSteps) + " exceeded");
      ++steps_;
      if (stats_) ++stats_->steps;
      std::string label;
      Proof out = step(p.at(*path), label);
      p = p.replaceAt(*path, out);
      note(opt_.trace, "Z", label, p);
    }
    return p;
  }

 private:
  void check(const Proof& cut, const ZMeasure& before, const std::string& label) {
    ZMeasure after = measureOf(cut);
    if (stats_) ++stats_->measureChecks;
    if (!(after < before)) {
      throw MeasureViolation(label + ": measure " + after.str() + " not below " + before.str());
    }
  }

  // Z-3.4: the upper cut takes the left copy and is eliminated at once.
  std::optional<detail::Rewrite> contractionCase(const Proof& cut, const ZMeasure& before) {
    const Proof& pi = cut.left();
    std::size_t q = cut.pos();
    std::size_t n = pi.ant().size();
    Proof upper = Proof::cut(q, pi, cut.right().sub());
    check(upper, before, "Z-3.4");
    Proof done = eliminate(upper);
    Proof lower = Proof::cut(q + n, pi, done);
    return detail::Rewrite{detail::contractCopies(lower, q, n), "3.4"};
  }

  const ZOptions& opt_;
  ZStats* stats_;
  std::size_t steps_ = 0;
};

}  // namespace

const ZNode& ZProof::at(const Path& path) const {
  const ZNode* n = root_.get();
  for (auto i : path) n = n->kids.at(i).get();
  return *n;
}

ZProof to_zucker(const Proof& p) {
  if (p.mentionsImplication()) throw ProofError("implication found: proof is not implication-free");
  Memo memo;
  auto root = annotate(p, memo);
  return ZProof(p, root);
}

Proof erase_indices(const ZProof& z) { return z.proof(); }

std::string ZMeasure::str() const {
  return "<" + std::to_string(d) + ", " + std::to_string(z) + ", " + std::to_string(r) + ">";
}

ZMeasure z_measure(const ZProof& z) {
  if (z.proof().rule() != Rule::Cut) throw ProofError("z_measure: root is not a cut");
  return {z.proof().cutFormula().degree(), z.at({1}).ant.at(z.proof().pos()), cut_rank(z.proof()).total};
}

ZStepResult z_step(const ZProof& z, const ZOptions& opt, ZStats* stats) {
  const Proof& p = z.proof();
  if (p.rule() != Rule::Cut) throw ProofError("z_step: root is not a cut");
  if (!p.left().isCutFree() || !p.right().isCutFree()) throw ProofError("z_step: premises must be cut-free");
  ZEngine e(opt, stats);
  std::string label;
  Proof out = e.step(p, label);
  return {to_zucker(out), label};
}

ZProof eliminate_cut_z(const ZProof& z, const ZOptions& opt, ZStats* stats) {
  ZEngine e(opt, stats);
  return to_zucker(e.eliminate(z.proof()));
}

bool indicesBounded(const ZProof& out, const ZProof& in) {
  if (out.proof().conclusion() != in.proof().conclusion()) return false;
  const auto& a = out.indices();
  const auto& b = in.indices();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace cutelim
