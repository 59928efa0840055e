#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <memory>
#include <vector>

#include "cutelim/ancestry.hpp"
#include "cutelim/proof.hpp"

namespace cutelim {

/// Rank indices for one node's conclusion; children mirror the proof.
struct RankNode {
  std::vector<std::uint64_t> ant;
  std::uint64_t succ = 1;
  std::vector<std::shared_ptr<const RankNode>> kids;

  const RankNode& at(const Path& path) const;
};

struct RankAnnotatedProof {
  Proof proof;
  std::shared_ptr<const RankNode> root;

  std::uint64_t index(const OccurrenceRef& o) const;
};

RankAnnotatedProof annotate_ranks(const Proof& p);

struct CutRank {
  std::uint64_t left = 0;
  std::uint64_t right = 0;
  std::uint64_t total = 0;
  bool operator==(const CutRank&) const = default;
};

CutRank cut_rank(const Proof& p, const Path& cut);
// Rank of a Cut node given directly.
CutRank cut_rank(const Proof& cutNode);

// cut_rank over many cuts that share subproofs; annotations are kept
// for the cache's lifetime.
class RankCache {
 public:
  RankCache();
  ~RankCache();
  CutRank operator()(const Proof& cutNode);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::uint64_t rank_by_ancestry(const Proof& p, const OccurrenceRef& o);

// Same walk, remembering every occurrence it has seen; use one per proof
// when asking about many occurrences.
class AncestryRanker {
 public:
  explicit AncestryRanker(Proof p) : p_(std::move(p)) {}
  std::uint64_t operator()(const OccurrenceRef& o);

 private:
  std::uint64_t walk(const Proof& n, bool succ, std::size_t pos);
  Proof p_;
  std::map<std::tuple<const void*, bool, std::size_t>, std::uint64_t> memo_;
};

// Largest total rank over all cuts, 0 if cut-free.
std::uint64_t maxCutRank(const Proof& p);

}  // namespace cutelim
