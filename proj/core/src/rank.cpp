#include "cutelim/rank.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace cutelim {

namespace {

using Memo = std::unordered_map<const void*, std::shared_ptr<const RankNode>>;
using Keep = std::vector<Proof>;

std::vector<std::uint64_t> bumped(const std::vector<std::uint64_t>& v, std::size_t from, std::size_t to) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(v[i] + 1);
  return out;
}

std::shared_ptr<const RankNode> annotate(const Proof& p, Memo& memo, Keep* keep = nullptr) {
  if (auto it = memo.find(p.id()); it != memo.end()) return it->second;
  auto n = std::make_shared<RankNode>();
  for (std::size_t c = 0; c < p.arity(); ++c) n->kids.push_back(annotate(p.child(c), memo, keep));
  auto& ant = n->ant;
  std::size_t pos = p.pos();
  switch (p.rule()) {
    case Rule::Ax:
    case Rule::BotAx:
      ant = {1};
      n->succ = 1;
      break;
    case Rule::C: {
      const RankNode& s = *n->kids[0];
      ant = bumped(s.ant, 0, s.ant.size());
      std::swap(ant[pos], ant[pos + 1]);
      n->succ = s.succ + 1;
      break;
    }
    case Rule::W: {
      const RankNode& s = *n->kids[0];
      ant = bumped(s.ant, 0, s.ant.size());
      ant[pos] = std::max(s.ant[pos], s.ant[pos + 1]) + 1;
      ant.erase(ant.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
      n->succ = s.succ + 1;
      break;
    }
    case Rule::K: {
      const RankNode& s = *n->kids[0];
      ant = bumped(s.ant, 0, s.ant.size());
      ant.insert(ant.begin() + static_cast<std::ptrdiff_t>(pos), 1);
      n->succ = s.succ + 1;
      break;
    }
    case Rule::Cut:
    case Rule::ImpL: {
      const RankNode& l = *n->kids[0];
      const RankNode& r = *n->kids[1];
      ant = bumped(r.ant, 0, pos);
      auto mid = bumped(l.ant, 0, l.ant.size());
      ant.insert(ant.end(), mid.begin(), mid.end());
      if (p.rule() == Rule::ImpL) ant.push_back(1);
      auto tail = bumped(r.ant, pos + 1, r.ant.size());
      ant.insert(ant.end(), tail.begin(), tail.end());
      n->succ = r.succ + 1;
      break;
    }
    case Rule::AndL: {
      const RankNode& s = *n->kids[0];
      ant = bumped(s.ant, 0, s.ant.size());
      ant[pos] = 1;
      n->succ = s.succ + 1;
      break;
    }
    case Rule::AndR: {
      const RankNode& l = *n->kids[0];
      const RankNode& r = *n->kids[1];
      for (std::size_t i = 0; i < l.ant.size(); ++i) ant.push_back(std::max(l.ant[i], r.ant[i]) + 1);
      n->succ = 1;
      break;
    }
    case Rule::OrL: {
      const RankNode& l = *n->kids[0];
      const RankNode& r = *n->kids[1];
      for (std::size_t i = 0; i < l.ant.size(); ++i) ant.push_back(std::max(l.ant[i], r.ant[i]) + 1);
      ant[pos] = 1;
      n->succ = std::max(l.succ, r.succ) + 1;
      break;
    }
    case Rule::OrR: {
      const RankNode& s = *n->kids[0];
      ant = bumped(s.ant, 0, s.ant.size());
      n->succ = 1;
      break;
    }
    case Rule::ImpR: {
      const RankNode& s = *n->kids[0];
      ant = bumped(s.ant, 1, s.ant.size());
      n->succ = 1;
      break;
    }
  }
  memo.emplace(p.id(), n);
  if (keep) keep->push_back(p);
  return n;
}

}  // namespace

const RankNode& RankNode::at(const Path& path) const {
  const RankNode* n = this;
  for (auto i : path) n = n->kids.at(i).get();
  return *n;
}

std::uint64_t RankAnnotatedProof::index(const OccurrenceRef& o) const {
  checkOccurrence(proof, o);
  const RankNode& n = root->at(o.node);
  return o.succedent ? n.succ : n.ant.at(o.position);
}

RankAnnotatedProof annotate_ranks(const Proof& p) {
  Memo memo;
  return {p, annotate(p, memo)};
}

CutRank cut_rank(const Proof& c) {
  if (c.rule() != Rule::Cut) throw ProofError("cut_rank: node is not a cut");
  Memo memo;
  auto l = annotate(c.left(), memo);
  auto r = annotate(c.right(), memo);
  CutRank out{l->succ, r->ant.at(c.pos()), 0};
  out.total = out.left + out.right;
  return out;
}

CutRank cut_rank(const Proof& p, const Path& cut) { return cut_rank(p.at(cut)); }

struct RankCache::Impl {
  Memo memo;
  Keep keep;  // pins every annotated node so its address stays unique
};

RankCache::RankCache() : impl_(std::make_unique<Impl>()) {}
RankCache::~RankCache() = default;

CutRank RankCache::operator()(const Proof& c) {
  if (c.rule() != Rule::Cut) throw ProofError("cut_rank: node is not a cut");
  auto l = annotate(c.left(), impl_->memo, &impl_->keep);
  auto r = annotate(c.right(), impl_->memo, &impl_->keep);
  CutRank out{l->succ, r->ant.at(c.pos()), 0};
  out.total = out.left + out.right;
  return out;
}

std::uint64_t rank_by_ancestry(const Proof& p, const OccurrenceRef& o) { return AncestryRanker(p)(o); }

std::uint64_t AncestryRanker::operator()(const OccurrenceRef& o) {
  checkOccurrence(p_, o);
  return walk(p_.at(o.node), o.succedent, o.position);
}

std::uint64_t AncestryRanker::walk(const Proof& n, bool succ, std::size_t pos) {
  auto key = std::make_tuple(n.id(), succ, pos);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  std::uint64_t best = 0;
  for (const Ancestor& a : ancestorsOf(n, succ, pos)) best = std::max(best, walk(n.child(a.child), a.succedent, a.position));
  memo_.emplace(key, best + 1);
  return best + 1;
}

std::uint64_t maxCutRank(const Proof& p) {
  if (p.isCutFree()) return 0;
  Memo memo;
  std::uint64_t best = 0;
  for (const Path& c : cutPaths(p)) {
    const Proof& n = p.at(c);
    auto l = annotate(n.left(), memo);
    auto r = annotate(n.right(), memo);
    best = std::max(best, l->succ + r->ant[n.pos()]);
  }
  return best;
}

}  // namespace cutelim
