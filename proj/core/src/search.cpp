#include "cutelim/search.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>

namespace cutelim {

namespace {

using Ctx = std::vector<Formula>;  // sorted, no repeats

Ctx norm(Ctx c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

Ctx with(Ctx c, const Formula& f) {
  c.push_back(f);
  return norm(std::move(c));
}

Ctx without(const Ctx& c, const Formula& f) {
  Ctx out;
  for (const auto& g : c) {
    if (g != f) out.push_back(g);
  }
  return out;
}

bool has(const Ctx& c, const Formula& f) { return std::binary_search(c.begin(), c.end(), f); }

std::vector<Formula> distinctExcept(const std::vector<Formula>& a, const std::vector<Formula>& b,
                                    const std::optional<Formula>& skipA, const std::optional<Formula>& skipB) {
  std::vector<Formula> out;
  auto add = [&](const Formula& f) {
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  };
  for (const auto& f : a) {
    if (!skipA || f != *skipA) add(f);
  }
  for (const auto& f : b) {
    if (!skipB || f != *skipB) add(f);
  }
  return out;
}

std::vector<Formula> cons(const Formula& f, std::vector<Formula> rest) {
  rest.insert(rest.begin(), f);
  return rest;
}

// Proofs built here have antecedents drawn from the set context of the
// goal they answer, in no particular order or multiplicity.
class Searcher {
 public:
  std::optional<Proof> prove(const Ctx& g, const Formula& c, std::size_t depth) {
    if (depth == 0) return std::nullopt;
    auto key = std::make_pair(g, c);
    if (auto it = found_.find(key); it != found_.end() && it->second.second <= depth) {
      maxSeen_ = std::max(maxSeen_, it->second.second);
      return it->second.first;
    }
    if (onBranch_.count(key)) return std::nullopt;
    onBranch_.insert(key);
    std::size_t saved = maxSeen_;
    maxSeen_ = 0;
    auto r = attempt(g, c, depth);
    std::size_t h = maxSeen_ + 1;
    maxSeen_ = std::max(saved, h);
    onBranch_.erase(key);
    if (r) found_.insert_or_assign(key, std::make_pair(*r, h));
    return r;
  }

 private:
  std::optional<Proof> attempt(const Ctx& g, const Formula& c, std::size_t depth) {
    if (has(g, c)) return Proof::ax(c);
    if (has(g, Formula::bottom())) return Proof::botAx(c);
    std::size_t d = depth - 1;
    // invertible steps first
    for (const auto& f : g) {
      if (f.kind() != Formula::Kind::And) continue;
      auto sub = prove(with(with(without(g, f), f.left()), f.right()), c, d);
      if (!sub) return std::nullopt;
      std::vector<Formula> rest = distinctExcept(sub->ant(), {}, f.left(), std::nullopt);
      rest.erase(std::remove(rest.begin(), rest.end(), f.right()), rest.end());
      Proof q = rearrange(*sub, cons(f.left(), cons(f.right(), rest)));
      q = Proof::andL(0, 1, f.right(), q);
      q = Proof::andL(1, 2, f.left(), q);
      return Proof::w(0, q);
    }
    for (const auto& f : g) {
      if (f.kind() != Formula::Kind::Or) continue;
      Ctx base = without(g, f);
      auto l = prove(with(base, f.left()), c, d);
      if (!l) return std::nullopt;
      auto r = prove(with(base, f.right()), c, d);
      if (!r) return std::nullopt;
      auto rest = distinctExcept(l->ant(), r->ant(), f.left(), f.right());
      return Proof::orL(0, rearrange(*l, cons(f.left(), rest)), rearrange(*r, cons(f.right(), rest)));
    }
    if (c.kind() == Formula::Kind::Imp) {
      auto sub = prove(with(g, c.left()), c.right(), d);
      if (!sub) return std::nullopt;
      auto rest = distinctExcept(sub->ant(), {}, c.left(), std::nullopt);
      return Proof::impR(rearrange(*sub, cons(c.left(), rest)));
    }
    if (c.kind() == Formula::Kind::And) {
      auto l = prove(g, c.left(), d);
      if (!l) return std::nullopt;
      auto r = prove(g, c.right(), d);
      if (!r) return std::nullopt;
      auto rest = distinctExcept(l->ant(), r->ant(), std::nullopt, std::nullopt);
      return Proof::andR(rearrange(*l, rest), rearrange(*r, rest));
    }
    if (c.kind() == Formula::Kind::Or) {
      for (int side = 1; side <= 2; ++side) {
        auto sub = prove(g, side == 1 ? c.left() : c.right(), d);
        if (sub) return Proof::orR(side, side == 1 ? c.right() : c.left(), *sub);
      }
    }
    for (const auto& f : g) {
      if (f.kind() != Formula::Kind::Imp) continue;
      auto l = prove(g, f.left(), d);
      if (!l) continue;
      auto r = prove(with(g, f.right()), c, d);
      if (!r) continue;
      auto rest = distinctExcept(r->ant(), {}, f.right(), std::nullopt);
      return Proof::impL(0, *l, rearrange(*r, cons(f.right(), rest)));
    }
    return std::nullopt;
  }

  // Successes with the search height they needed.
  std::map<std::pair<Ctx, Formula>, std::pair<Proof, std::size_t>> found_;
  std::size_t maxSeen_ = 0;
  std::set<std::pair<Ctx, Formula>> onBranch_;
};

}  // namespace

std::optional<Proof> search_cutfree(const Sequent& s, std::size_t depth) {
  if (depth < 1) throw std::invalid_argument("search_cutfree: depth must be at least 1");
  Searcher searcher;
  auto p = searcher.prove(norm(s.antecedent), s.succedent, depth);
  if (!p) return std::nullopt;
  return rearrange(*p, s.antecedent);
}

}  // namespace cutelim
