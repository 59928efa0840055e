#include "cutelim/maximal.hpp"

#include <map>
#include <tuple>
#include <unordered_map>

#include "cutelim/ancestry.hpp"
#include "cutelim/zucker.hpp"
#include "reductions.hpp"

namespace cutelim {

namespace {

bool maximalNode(const Proof& cut) {
  return detail::leftPrincipal(cut) && detail::rightPrincipal(cut) && !cut.left().isAxiom() && !cut.right().isAxiom();
}

class Maximalizer {
 public:
  Maximalizer(const MaxOptions& opt, MaxStats* stats) : opt_(opt), stats_(stats) {}

  Proof run(const Proof& p) {
    if (p.isCutFree()) return p;
    if (auto it = memo_.find(p.id()); it != memo_.end()) return it->second;
    std::vector<Proof> kids;
    bool same = true;
    for (std::size_t i = 0; i < p.arity(); ++i) {
      kids.push_back(run(p.child(i)));
      same = same && kids.back().sameNode(p.child(i));
    }
    Proof q = same ? p : p.rebuild(std::move(kids));
    if (q.rule() == Rule::Cut) q = maxCut(q.pos(), q.left(), q.right(), std::nullopt);
    memo_.emplace(p.id(), q);
    return q;
  }

 private:
  // Premises are maximalized; returns a maximalized proof of the cut's
  // conclusion.
  Proof maxCut(std::size_t pos, const Proof& l, const Proof& r, std::optional<std::uint64_t> parentRank) {
    Proof cut = Proof::cut(pos, l, r);
    std::uint64_t rank = ranks_(cut).total;
    if (parentRank) {
      if (stats_) ++stats_->rankChecks;
      if (rank >= *parentRank) {
        throw MeasureViolation("maximalize: new cut of rank " + std::to_string(rank) + " from a cut of rank " +
                               std::to_string(*parentRank));
      }
    }
    if (maximalNode(cut)) return cut;
    // premises are shared after duplication, so the same cut recurs
    CutKey key{pos, l.id(), r.id()};
    if (auto it = cuts_.find(key); it != cuts_.end()) return it->second.out;
    if (++steps_ > opt_.maxSteps) throw StepBudgetExceeded("step budget of " + std::to_string(opt_.maxSteps) + " exceeded");
    if (stats_) ++stats_->steps;
    detail::CutFn mk = [this, rank](std::size_t p, const Proof& a, const Proof& b) { return maxCut(p, a, b, rank); };
    bool lp = detail::leftPrincipal(cut);
    bool rp = detail::rightPrincipal(cut);
    std::optional<detail::Rewrite> rw;
    if (lp && rp) {
      rw = detail::axiomCase(cut);
    } else if (!lp) {
      rw = l.rule() == Rule::Cut ? cutLeft(cut, mk) : detail::pushLeft(cut, mk);
    } else {
      rw = r.rule() == Rule::Cut ? cutRight(cut, mk) : detail::pushRight(cut, mk);
    }
    if (!rw) {
      throw MalformedInput("maximalize: no reduction for cut " + cut.conclusion().str() + " (is the proof W-normal?)");
    }
    std::string label = "M-" + rw->kase;
    if (stats_) ++stats_->labels[label];
    note(opt_.trace, "P2", label, rw->proof);
    cuts_.emplace(key, Done{l, r, rw->proof});
    return rw->proof;
  }

  // (2.4): the upper cut moves into the right premise.
  std::optional<detail::Rewrite> cutLeft(const Proof& cut, const detail::CutFn& mk) {
    const Proof& l = cut.left();
    Proof upper = mk(cut.pos(), l.right(), cut.right());
    return detail::Rewrite{lowerCut(cut.pos() + l.pos(), l.left(), upper, "2.4"), "2.4"};
  }

  // (3.7) when the cut formula comes from the left premise of the right
  // cut, (3.8) otherwise.
  std::optional<detail::Rewrite> cutRight(const Proof& cut, const detail::CutFn& mk) {
    const Proof& pi = cut.left();
    const Proof& r = cut.right();
    std::size_t pos = cut.pos();
    std::size_t q = r.pos();
    std::size_t d1 = r.left().ant().size();
    std::size_t n = pi.ant().size();
    if (pos >= q && pos < q + d1) {
      Proof upper = mk(pos - q, pi, r.left());
      return detail::Rewrite{lowerCut(q, upper, r.right(), "3.7"), "3.7"};
    }
    if (pos < q) {
      Proof upper = mk(pos, pi, r.right());
      return detail::Rewrite{lowerCut(q - 1 + n, r.left(), upper, "3.8"), "3.8"};
    }
    Proof upper = mk(pos - d1 + 1, pi, r.right());
    return detail::Rewrite{lowerCut(q, r.left(), upper, "3.8"), "3.8"};
  }

  Proof lowerCut(std::size_t pos, const Proof& l, const Proof& r, const char* kase) {
    Proof c = Proof::cut(pos, l, r);
    if (!maximalNode(c)) throw std::logic_error(std::string("M-") + kase + ": lower cut is not maximal");
    return c;
  }

  using CutKey = std::tuple<std::size_t, const void*, const void*>;
  struct Done {
    Proof l, r;  // pinned, keeps the key's addresses unique
    Proof out;
  };

  const MaxOptions& opt_;
  MaxStats* stats_;
  std::size_t steps_ = 0;
  std::unordered_map<const void*, Proof> memo_;
  std::map<CutKey, Done> cuts_;
  RankCache ranks_;
};

class DegreeReducer {
 public:
  DegreeReducer(const MaxOptions& opt, MaxStats* stats) : opt_(opt), stats_(stats) {}

  Proof run(const Proof& p) {
    if (p.isCutFree()) return p;
    if (auto it = memo_.find(p.id()); it != memo_.end()) return it->second;
    std::vector<Proof> kids;
    for (std::size_t i = 0; i < p.arity(); ++i) kids.push_back(run(p.child(i)));
    Proof q = p.rebuild(std::move(kids));
    if (q.rule() == Rule::Cut) q = reduce(q);
    memo_.emplace(p.id(), q);
    return q;
  }

 private:
  Proof reduce(const Proof& cut) {
    if (!maximalNode(cut)) throw MalformedInput("reduce_degree: cut " + cut.conclusion().str() + " is not maximal");
    if (++steps_ > opt_.maxSteps) throw StepBudgetExceeded("step budget of " + std::to_string(opt_.maxSteps) + " exceeded");
    if (stats_) ++stats_->steps;
    const Proof& l = cut.left();
    const Proof& r = cut.right();
    std::string label;
    std::optional<Proof> out;
    if (r.rule() == Rule::K) {
      out = ksAt(r.sub(), cut.pos(), l.ant());
      label = "D-K";
    } else if (l.rule() == Rule::ImpR) {
      // one cut on A feeding one cut on B
      Proof onA = Proof::cut(0, r.left(), l.sub());
      out = Proof::cut(r.pos(), onA, r.right());
      label = "D-→";
    } else if (auto rw = detail::principalLattice(cut, detail::plainCut)) {
      out = rw->proof;
      label = l.rule() == Rule::AndR ? "D-∧" : "D-∨";
    }
    if (!out) throw std::logic_error("reduce_degree: no principal reduction for " + cut.conclusion().str());
    if (stats_) ++stats_->labels[label];
    note(opt_.trace, "P3", label, *out);
    return *out;
  }

  const MaxOptions& opt_;
  MaxStats* stats_;
  std::size_t steps_ = 0;
  std::unordered_map<const void*, Proof> memo_;
};

}  // namespace

bool is_maximal_cut(const Proof& p, const Path& cut) {
  const Proof& c = p.at(cut);
  if (c.rule() != Rule::Cut) throw ProofError("path " + pathStr(cut) + " is not a cut");
  return cut_rank(c).total == 2 && !c.left().isAxiom() && !c.right().isAxiom();
}

std::vector<CutReport> maximality_report(const Proof& p) {
  std::vector<CutReport> out;
  for (const Path& path : cutPaths(p)) {
    const Proof& c = p.at(path);
    CutReport r{path, cut_rank(c), c.left().isAxiom(), c.right().isAxiom(), false};
    r.maximal = r.rank.total == 2 && !r.leftAxiom && !r.rightAxiom;
    out.push_back(std::move(r));
  }
  return out;
}

bool is_maximalized(const Proof& p) {
  for (const auto& r : maximality_report(p)) {
    if (!r.maximal) return false;
  }
  return true;
}

Proof maximalize(const Proof& p, const MaxOptions& opt, MaxStats* stats) {
  if (!is_w_normal(p)) throw MalformedInput("maximalize: proof is not W-normal");
  Maximalizer m(opt, stats);
  return m.run(p);
}

Proof reduce_degree(const Proof& p, const MaxOptions& opt, MaxStats* stats) {
  if (p.degree() == 0) throw MalformedInput("reduce_degree: proof degree is 0");
  DegreeReducer d(opt, stats);
  Proof out = d.run(p);
  if (out.degree() >= p.degree()) {
    throw MeasureViolation("reduce_degree: degree " + std::to_string(out.degree()) + " not below " +
                           std::to_string(p.degree()));
  }
  return out;
}

EliminationResult eliminate_cuts(const Proof& p, const EliminateOptions& opt) {
  EliminationResult res{p, 0, 0, {}, {}};
  auto left = [&]() {
    std::size_t used = res.wstats.steps + res.mstats.steps;
    if (used > opt.maxSteps) throw StepBudgetExceeded("step budget of " + std::to_string(opt.maxSteps) + " exceeded");
    return opt.maxSteps - used;
  };
  Proof cur = p;
  while (!cur.isCutFree()) {
    ++res.rounds;
    cur = w_normalize(cur, WNormOptions{left(), opt.trace}, &res.wstats);
    note(opt.trace, "P1", "P1", cur);
    cur = maximalize(cur, MaxOptions{left(), opt.trace}, &res.mstats);
    note(opt.trace, "P2", "P2", cur);
    if (cur.isCutFree()) break;
    cur = reduce_degree(cur, MaxOptions{left(), opt.trace}, &res.mstats);
    note(opt.trace, "P3", "P3", cur);
  }
  res.proof = cur;
  res.steps = res.wstats.steps + res.mstats.steps;
  return res;
}

}  // namespace cutelim
