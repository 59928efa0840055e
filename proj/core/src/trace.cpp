#include "cutelim/trace.hpp"

#include "cutelim/rank.hpp"

namespace cutelim {

void Trace::add(const std::string& phase, const std::string& label, const Proof& p) {
  TraceRecord r;
  r.step = recs_.size() + 1;
  r.phase = phase;
  r.label = label;
  r.endsequent = p.conclusion().str();
  r.nodes = p.nodeCount();
  r.cuts = p.cutCount();
  r.degree = p.degree();
  r.maxRank = maxCutRank(p);
  recs_.push_back(std::move(r));
}

std::size_t Trace::countLabel(const std::string& prefix) const {
  std::size_t n = 0;
  for (const auto& r : recs_) n += r.label.rfind(prefix, 0) == 0;
  return n;
}

}  // namespace cutelim
