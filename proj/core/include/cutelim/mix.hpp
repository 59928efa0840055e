#pragma once

#include <cstdint>

#include "cutelim/proof.hpp"

namespace cutelim {

/// Premises of a mix: left proves Γ ⊢ A, right proves Δ ⊢ C with A in Δ.
struct MixApp {
  Proof left;
  Proof right;
  Formula mixFormula;

  // Γ, Δ* ⊢ C where Δ* drops every occurrence of A. Throws
  // std::invalid_argument if the premises do not fit.
  Sequent conclusion() const;
};

/// One cut per occurrence of A, leftmost first, each occurrence moved to
/// the front before its cut; then the copies of Γ are contracted.
Proof reconstruct_polytomic(const MixApp& m);

/// All occurrences of A gathered at the front and contracted, then one cut.
Proof reconstruct_monotomic(const MixApp& m);

struct ReconstructionStats {
  std::uint64_t cuts = 0;
  std::uint64_t w = 0;
  std::uint64_t c = 0;
  std::uint64_t k = 0;
  std::uint64_t nodes = 0;
  bool operator==(const ReconstructionStats&) const = default;
};

ReconstructionStats reconstruction_stats(const Proof& p);

}  // namespace cutelim
