#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cutelim/proof.hpp"

namespace cutelim {

struct GenOptions {
  std::vector<std::string> atoms{"p", "q", "r"};
  bool allowImp = true;
  std::size_t maxFormulaDepth = 2;
};

/// Deterministic pseudo-random proof with at most `budget` nodes.
Proof generate_proof(std::uint64_t seed, std::size_t budget, const GenOptions& opt = {});
Proof generate_proof(std::uint64_t seed, std::size_t budget, const std::vector<std::string>& atoms, bool allowImp);

// Same, but with at least one cut whenever budget allows.
Proof generate_proof_with_cut(std::uint64_t seed, std::size_t budget, const GenOptions& opt = {});

Formula random_formula(std::uint64_t seed, const GenOptions& opt);

}  // namespace cutelim
