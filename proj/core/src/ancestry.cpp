#include "cutelim/ancestry.hpp"

#include <deque>

namespace cutelim {

std::optional<std::size_t> antecedentDescendant(const Proof& n, std::size_t child, std::size_t p) {
  std::size_t pos = n.pos();
  switch (n.rule()) {
    case Rule::Ax:
    case Rule::BotAx:
      return std::nullopt;
    case Rule::C:
      if (p == pos) return pos + 1;
      if (p == pos + 1) return pos;
      return p;
    case Rule::W:
      if (p <= pos) return p;
      return p - 1;
    case Rule::K:
      return p < pos ? p : p + 1;
    case Rule::Cut: {
      if (child == 0) return pos + p;
      std::size_t delta = n.left().ant().size();
      if (p < pos) return p;
      if (p == pos) return std::nullopt;
      return p - 1 + delta;
    }
    case Rule::AndL:
    case Rule::OrL:
      if (p == pos) return std::nullopt;
      return p;
    case Rule::AndR:
    case Rule::OrR:
      return p;
    case Rule::ImpL: {
      if (child == 0) return pos + p;
      std::size_t delta = n.left().ant().size();
      if (p < pos) return p;
      if (p == pos) return std::nullopt;
      return p + delta;
    }
    case Rule::ImpR:
      if (p == 0) return std::nullopt;
      return p - 1;
  }
  return std::nullopt;
}

bool succedentDescends(const Proof& n, std::size_t child) {
  switch (n.rule()) {
    case Rule::C: case Rule::W: case Rule::K: case Rule::AndL: case Rule::OrL:
      return true;
    case Rule::Cut: case Rule::ImpL:
      return child == 1;
    default:
      return false;
  }
}

std::vector<Ancestor> ancestorsOf(const Proof& n, bool succedent, std::size_t pos) {
  std::vector<Ancestor> out;
  for (std::size_t c = 0; c < n.arity(); ++c) {
    if (succedent) {
      if (succedentDescends(n, c)) out.push_back({c, true, 0});
      continue;
    }
    const auto& ant = n.child(c).ant();
    for (std::size_t p = 0; p < ant.size(); ++p) {
      auto d = antecedentDescendant(n, c, p);
      if (d && *d == pos) out.push_back({c, false, p});
    }
  }
  return out;
}

namespace {

void ancestryRec(const Proof& p, Path& path, std::vector<AncestryEntry>& out) {
  auto childRef = [&](const Ancestor& a) {
    Path cp = path;
    cp.push_back(static_cast<std::uint8_t>(a.child));
    return OccurrenceRef{cp, a.succedent, a.position};
  };
  for (std::size_t i = 0; i <= p.ant().size(); ++i) {
    bool succ = i == p.ant().size();
    AncestryEntry e{{path, succ, succ ? 0 : i}, {}};
    for (const Ancestor& a : ancestorsOf(p, succ, succ ? 0 : i)) e.ancestors.push_back(childRef(a));
    out.push_back(std::move(e));
  }
  for (std::size_t c = 0; c < p.arity(); ++c) {
    path.push_back(static_cast<std::uint8_t>(c));
    ancestryRec(p.child(c), path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<AncestryEntry> ancestry(const Proof& p) {
  std::vector<AncestryEntry> out;
  Path path;
  ancestryRec(p, path, out);
  return out;
}

void checkOccurrence(const Proof& p, const OccurrenceRef& o) {
  const Proof& n = p.at(o.node);
  if (!o.succedent && o.position >= n.ant().size()) {
    throw ProofError("occurrence position " + std::to_string(o.position) + " out of range at " +
                     pathStr(o.node));
  }
}

std::set<OccurrenceRef> cluster_of(const Proof& p, const OccurrenceRef& g) {
  checkOccurrence(p, g);
  std::set<OccurrenceRef> seen{g};
  std::deque<OccurrenceRef> todo{g};
  while (!todo.empty()) {
    OccurrenceRef o = todo.front();
    todo.pop_front();
    const Proof& n = p.at(o.node);
    for (const Ancestor& a : ancestorsOf(n, o.succedent, o.position)) {
      Path cp = o.node;
      cp.push_back(static_cast<std::uint8_t>(a.child));
      OccurrenceRef r{cp, a.succedent, a.position};
      if (seen.insert(r).second) todo.push_back(r);
    }
  }
  return seen;
}

std::vector<OccurrenceRef> descendants(const Proof& p, const OccurrenceRef& o) {
  checkOccurrence(p, o);
  std::vector<OccurrenceRef> chain{o};
  OccurrenceRef cur = o;
  while (!cur.node.empty()) {
    std::size_t child = cur.node.back();
    Path parentPath(cur.node.begin(), cur.node.end() - 1);
    const Proof& parent = p.at(parentPath);
    if (cur.succedent) {
      if (!succedentDescends(parent, child)) break;
      cur = {parentPath, true, 0};
    } else {
      auto d = antecedentDescendant(parent, child, cur.position);
      if (!d) break;
      cur = {parentPath, false, *d};
    }
    chain.push_back(cur);
  }
  return chain;
}

namespace {

void needW(const Proof& p, const Path& w) {
  if (p.at(w).rule() != Rule::W) throw ProofError("path " + pathStr(w) + " does not address a W");
}

}  // namespace

ContractionStatus classify_contraction(const Proof& p, const Path& w) {
  needW(p, w);
  auto chain = descendants(p, {w, false, p.at(w).pos()});
  const OccurrenceRef& last = chain.back();
  if (last.node.empty()) return {};
  Path parentPath(last.node.begin(), last.node.end() - 1);
  const Proof& parent = p.at(parentPath);
  if (parent.rule() == Rule::Cut && last.node.back() == 1 && last.position == parent.pos()) {
    auto kind = chain.size() == 1 ? ContractionStatus::Kind::DirectlyEngaged : ContractionStatus::Kind::Engaged;
    return {kind, parentPath};
  }
  return {};
}

ContractionStatus classify_contraction_by_clusters(const Proof& p, const Path& w) {
  needW(p, w);
  OccurrenceRef principal{w, false, p.at(w).pos()};
  for (std::size_t d = w.size(); d-- > 0;) {
    Path c(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d));
    const Proof& n = p.at(c);
    if (n.rule() != Rule::Cut || w[d] != 1) continue;
    Path right = c;
    right.push_back(1);
    if (cluster_of(p, {right, false, n.pos()}).count(principal)) {
      auto kind = d + 1 == w.size() ? ContractionStatus::Kind::DirectlyEngaged : ContractionStatus::Kind::Engaged;
      return {kind, c};
    }
  }
  return {};
}

namespace {

void collectW(const Proof& p, Path& path, std::vector<Path>& out) {
  if (p.count(Rule::W) == 0) return;
  if (p.rule() == Rule::W) out.push_back(path);
  for (std::size_t c = 0; c < p.arity(); ++c) {
    path.push_back(static_cast<std::uint8_t>(c));
    collectW(p.child(c), path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<Path> wPaths(const Proof& p) {
  std::vector<Path> out;
  Path path;
  collectW(p, path, out);
  return out;
}

std::vector<std::size_t> tieCounts(const Proof& p) {
  std::vector<std::size_t> counts(p.ant().size(), 0);
  for (const Path& w : wPaths(p)) {
    auto chain = descendants(p, {w, false, p.at(w).pos()});
    if (chain.back().node.empty()) ++counts[chain.back().position];
  }
  return counts;
}

std::size_t tiedCount(const Proof& p, std::size_t endPos) { return tieCounts(p).at(endPos); }

std::size_t engagedCount(const Proof& p) {
  std::size_t n = 0;
  for (const Path& w : wPaths(p)) n += classify_contraction(p, w).engaged();
  return n;
}

namespace {

// Every W met here is outside the endsequent tail.
bool wNormalBody(const Proof& p) {
  if (p.count(Rule::W) == 0) return true;
  if (p.rule() == Rule::W) return false;
  if (p.rule() == Rule::ImpR) {
    const Proof* q = &p.sub();
    while (q->rule() == Rule::W) {
      if (q->pos() != 0) return false;
      q = &q->sub();
    }
    return wNormalBody(*q);
  }
  for (std::size_t c = 0; c < p.arity(); ++c) {
    if (!wNormalBody(p.child(c))) return false;
  }
  return true;
}

}  // namespace

bool is_w_normal(const Proof& p) {
  const Proof* q = &p;
  while (q->rule() == Rule::W) q = &q->sub();
  return wNormalBody(*q);
}

bool is_tailless(const Proof& p) {
  if (!is_w_normal(p)) throw ProofError("is_tailless: proof is not W-normal");
  return p.rule() != Rule::W;
}

Tail splitTail(const Proof& p) {
  std::vector<std::size_t> below;
  const Proof* q = &p;
  while (q->rule() == Rule::W) {
    below.push_back(q->pos());
    q = &q->sub();
  }
  return {*q, std::vector<std::size_t>(below.rbegin(), below.rend())};
}

}  // namespace cutelim
