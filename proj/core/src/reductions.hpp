#pragma once

// Local cut rewrites shared by the implicationless eliminator, the
// maximalizer and the degree reducer. Every function takes a Cut node and
// returns the rewritten subproof plus the case number it applied. New cuts
// are built through `mk` so callers can recurse on them.

#include <functional>
#include <optional>
#include <string>

#include "cutelim/proof.hpp"

namespace cutelim::detail {

using CutFn = std::function<Proof(std::size_t pos, const Proof& left, const Proof& right)>;

Proof plainCut(std::size_t pos, const Proof& l, const Proof& r);

struct Rewrite {
  Proof proof;
  std::string kase;
};

bool leftPrincipal(const Proof& cut);
bool rightPrincipal(const Proof& cut);

// Cases 1.1 to 1.4: an axiom premise, or a right K inserting the cut formula.
std::optional<Rewrite> axiomCase(const Proof& cut);

// Cases 1.5 and 1.6; nullopt unless both premises introduce the cut formula.
std::optional<Rewrite> principalLattice(const Proof& cut, const CutFn& mk);

// Left premise ends in C, W, K, AndL (2.1), OrL (2.2) or ImpL (2.3).
std::optional<Rewrite> pushLeft(const Proof& cut, const CutFn& mk);

// Right premise ends in a rule not acting on the cut formula: unary
// structural, AndL, OrR (3.1), AndR (3.2), OrL (3.3), ImpL (3.5), or ImpR
// above a W-block on the discharged formula (3.6).
std::optional<Rewrite> pushRight(const Proof& cut, const CutFn& mk);

// Contraction block turning X, X into X at offset t, leftmost first.
Proof contractCopies(Proof p, std::size_t t, std::size_t n);

}  // namespace cutelim::detail
