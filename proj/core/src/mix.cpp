#include "cutelim/mix.hpp"

#include <stdexcept>

#include "reductions.hpp"

namespace cutelim {

namespace {

std::vector<std::size_t> occurrences(const MixApp& m) {
  if (m.left.succ() != m.mixFormula) {
    throw std::invalid_argument("mix: left premise proves " + m.left.succ().str() + ", not " + m.mixFormula.str());
  }
  std::vector<std::size_t> at;
  const auto& d = m.right.ant();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == m.mixFormula) at.push_back(i);
  }
  if (at.empty()) throw std::invalid_argument("mix: " + m.mixFormula.str() + " does not occur in the right antecedent");
  return at;
}

}  // namespace

Sequent MixApp::conclusion() const {
  occurrences(*this);
  Sequent s{left.ant(), right.succ()};
  for (const auto& f : right.ant()) {
    if (f != mixFormula) s.antecedent.push_back(f);
  }
  return s;
}

Proof reconstruct_polytomic(const MixApp& m) {
  auto at = occurrences(m);
  std::size_t g = m.left.ant().size();
  Proof p = m.right;
  for (std::size_t i = 0; i < at.size(); ++i) {
    p = Proof::cut(0, m.left, moveTo(p, at[i], 0));
    // the moved occurrence was leftmost among those left, so every later
    // one sits to its right and shifts by g - 1
    for (std::size_t j = i + 1; j < at.size(); ++j) at[j] = at[j] + g - 1;
  }
  for (std::size_t i = 1; i < at.size(); ++i) p = detail::contractCopies(p, 0, g);
  return p;
}

Proof reconstruct_monotomic(const MixApp& m) {
  auto at = occurrences(m);
  Proof p = m.right;
  for (std::size_t i = 0; i < at.size(); ++i) p = moveTo(p, at[i], i);
  p = ws(p, std::vector<std::size_t>(at.size() - 1, 0));
  return Proof::cut(0, m.left, p);
}

ReconstructionStats reconstruction_stats(const Proof& p) {
  return {p.count(Rule::Cut), p.count(Rule::W), p.count(Rule::C), p.count(Rule::K), p.nodeCount()};
}

}  // namespace cutelim
