#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutelim/proof.hpp"

namespace cutelim {

/// One line of a reduction trace.
struct TraceRecord {
  std::size_t step = 0;
  std::string phase;
  std::string label;
  std::string endsequent;
  std::uint64_t nodes = 0;
  std::uint64_t cuts = 0;
  std::size_t degree = 0;
  std::uint64_t maxRank = 0;
};

// Collects records and numbers them from 1. Engines accept a null Trace*.
class Trace {
 public:
  void add(const std::string& phase, const std::string& label, const Proof& p);
  const std::vector<TraceRecord>& records() const { return recs_; }
  std::size_t size() const { return recs_.size(); }
  std::size_t countLabel(const std::string& prefix) const;

 private:
  std::vector<TraceRecord> recs_;
};

inline void note(Trace* t, const std::string& phase, const std::string& label, const Proof& p) {
  if (t) t->add(phase, label, p);
}

class StepBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cutelim
