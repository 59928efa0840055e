#pragma once

#include <optional>

#include "cutelim/proof.hpp"

namespace cutelim {

/// Bounded backward search for a cut-free proof of s. Depth counts rule
/// applications of the underlying set-context calculus along a branch.
std::optional<Proof> search_cutfree(const Sequent& s, std::size_t depth);

}  // namespace cutelim
