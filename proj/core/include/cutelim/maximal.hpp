#pragma once

#include <map>
#include <string>
#include <vector>

#include "cutelim/proof.hpp"
#include "cutelim/rank.hpp"
#include "cutelim/trace.hpp"
#include "cutelim/wnormal.hpp"

namespace cutelim {

/// Rank 2 and neither premise an axiom. Throws ProofError if `cut` does
/// not address a Cut node.
bool is_maximal_cut(const Proof& p, const Path& cut);

struct CutReport {
  Path path;
  CutRank rank;
  bool leftAxiom = false;
  bool rightAxiom = false;
  bool maximal = false;
};
std::vector<CutReport> maximality_report(const Proof& p);
bool is_maximalized(const Proof& p);

struct MaxOptions {
  std::size_t maxSteps = 2000000;
  Trace* trace = nullptr;
};

struct MaxStats {
  std::size_t steps = 0;
  std::size_t rankChecks = 0;
  std::map<std::string, std::size_t> labels;
};

/// Every cut of the result is maximal; the result stays W-normal. Throws
/// MalformedInput if p is not W-normal, MeasureViolation if a new cut
/// fails to lower the rank of the cut it came from.
Proof maximalize(const Proof& p, const MaxOptions& opt = {}, MaxStats* stats = nullptr);

/// One principal reduction per cut, from the top. Needs every cut maximal
/// and degree > 0; the result has strictly lower degree.
Proof reduce_degree(const Proof& p, const MaxOptions& opt = {}, MaxStats* stats = nullptr);

struct EliminateOptions {
  std::size_t maxSteps = 5000000;
  Trace* trace = nullptr;
};

struct EliminationResult {
  Proof proof;
  std::size_t rounds = 0;  // outer iterations of the three phases
  std::size_t steps = 0;
  WNormStats wstats;
  MaxStats mstats;
};

/// W-normalize, maximalize, stop when cut-free, else lower the degree and
/// start over. StepBudgetExceeded when the combined step count runs out.
EliminationResult eliminate_cuts(const Proof& p, const EliminateOptions& opt = {});

}  // namespace cutelim
