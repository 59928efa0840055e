#pragma once

#include <optional>
#include <set>
#include <vector>

#include "cutelim/proof.hpp"

namespace cutelim {

struct OccurrenceRef {
  Path node;
  bool succedent = false;
  std::size_t position = 0;

  auto operator<=>(const OccurrenceRef&) const = default;
};

/// An occurrence in the conclusion of the child `child` of some node.
struct Ancestor {
  std::size_t child;
  bool succedent;
  std::size_t position;
  bool operator==(const Ancestor&) const = default;
};

// Where an antecedent occurrence of premise `child` ends up in the
// conclusion of `node`; nullopt when it is consumed (cut formula,
// principal side formula).
std::optional<std::size_t> antecedentDescendant(const Proof& node, std::size_t child, std::size_t pos);
bool succedentDescends(const Proof& node, std::size_t child);

/// Ancestors of one conclusion occurrence of `node` among its premises.
std::vector<Ancestor> ancestorsOf(const Proof& node, bool succedent, std::size_t pos);

// All conclusion occurrences of every node with their ancestors.
struct AncestryEntry {
  OccurrenceRef occ;
  std::vector<OccurrenceRef> ancestors;
};
std::vector<AncestryEntry> ancestry(const Proof& p);

void checkOccurrence(const Proof& p, const OccurrenceRef& o);

/// Upward closure of {g} under the ancestor relation.
std::set<OccurrenceRef> cluster_of(const Proof& p, const OccurrenceRef& g);

/// The chain of descendants of o, starting with o itself, until the
/// occurrence is consumed or reaches the endsequent.
std::vector<OccurrenceRef> descendants(const Proof& p, const OccurrenceRef& o);

struct ContractionStatus {
  enum class Kind { DirectlyEngaged, Engaged, Neutral } kind = Kind::Neutral;
  Path cut;  // for the engaged kinds

  bool engaged() const { return kind != Kind::Neutral; }
};

ContractionStatus classify_contraction(const Proof& p, const Path& w);
// Same answer, computed from clusters of right-premise cut formulas.
ContractionStatus classify_contraction_by_clusters(const Proof& p, const Path& w);

std::vector<Path> wPaths(const Proof& p);

/// Number of W applications tied to each endsequent antecedent occurrence.
std::vector<std::size_t> tieCounts(const Proof& p);
std::size_t tiedCount(const Proof& p, std::size_t endPos);
std::size_t engagedCount(const Proof& p);

bool is_w_normal(const Proof& p);
bool is_tailless(const Proof& p);

/// Splits a proof into its tail of W's and the rest.
struct Tail {
  Proof core;
  std::vector<std::size_t> ws;  // W positions, topmost first
};
Tail splitTail(const Proof& p);

}  // namespace cutelim
