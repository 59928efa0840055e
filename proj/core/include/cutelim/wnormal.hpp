#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "cutelim/proof.hpp"
#include "cutelim/trace.hpp"

namespace cutelim {

/// One unary rule application without its premise: C, W, K or AndL.
struct SOp {
  Rule rule = Rule::C;
  std::size_t pos = 0;
  int side = 0;
  std::optional<Formula> f;

  static SOp c(std::size_t pos) { return {Rule::C, pos, 0, std::nullopt}; }
  static SOp w(std::size_t pos) { return {Rule::W, pos, 0, std::nullopt}; }
  static SOp k(std::size_t pos, Formula f) { return {Rule::K, pos, 0, std::move(f)}; }
  static SOp andL(std::size_t pos, int side, Formula other) { return {Rule::AndL, pos, side, std::move(other)}; }
  bool operator==(const SOp&) const = default;
  std::string str() const;
};

// Applies ops to p, first element first (it ends up topmost).
Proof applyOps(Proof p, const std::vector<SOp>& ops);

/// A chain of W and C applications sitting on `top`.
struct StructuralSegment {
  Proof top;
  std::vector<SOp> ops;  // topmost first
  Proof bottom() const { return applyOps(top, ops); }
};

struct WNormStats {
  std::size_t l51a = 0;  // a W swapped with an overlapping C
  std::size_t l51b = 0;
  std::size_t l52a = 0;
  std::size_t l52b = 0;
  std::size_t l53 = 0;
  std::size_t l54 = 0;
  std::size_t nodes = 0;  // T5.5 records
  std::size_t steps = 0;
  std::size_t measureChecks = 0;
};

struct WNormOptions {
  std::size_t maxSteps = 2000000;
  Trace* trace = nullptr;
};

class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// W-block then C-block in, C-block then W-block out, same endpoints.
/// Every recursive call is checked to lower <W count, C count>.
StructuralSegment permute_W_below_C(const StructuralSegment& seg, const WNormOptions& opt = {},
                                    WNormStats* stats = nullptr);

// Any chain of C and W as C's followed by W's.
StructuralSegment normalizeStructural(const StructuralSegment& seg, const WNormOptions& opt = {},
                                      WNormStats* stats = nullptr);

/// One step of the layered description of a class member: a W applied to
/// what is above, or a cut with the fixed left proof followed by C's.
struct CClassLayer {
  enum class Kind { Cut, MobileW } kind = Kind::MobileW;
  std::size_t pos = 0;
  std::vector<std::size_t> cblock;

  static CClassLayer cut(std::size_t pos, std::vector<std::size_t> cs = {}) { return {Kind::Cut, pos, std::move(cs)}; }
  static CClassLayer mobileW(std::size_t pos) { return {Kind::MobileW, pos, {}}; }
  bool operator==(const CClassLayer&) const = default;
};

struct CClassWitness {
  Proof left;  // the tailless left premise shared by every cut
  Proof base;  // tailless
  std::vector<CClassLayer> layers;  // topmost first
  Proof realize() const;
};

struct WNormMeasure {
  std::size_t kappa = 0;   // engaged mobile W's
  std::size_t lambda = 0;  // summed heights of mobile W's
  auto operator<=>(const WNormMeasure&) const = default;
  std::string str() const;
};

WNormMeasure cclass_measure(const CClassWitness& w);

/// Pushes every mobile W below all cuts. The witness must realize p.
Proof normalize_cclass(const Proof& p, const CClassWitness& w, const WNormOptions& opt = {},
                       WNormStats* stats = nullptr);

/// OrL at `pos` on two W-normal premises. Tail W's tied to a context
/// occurrence come out as the max of the two premises.
Proof merge_orL(const Proof& left, const Proof& right, std::size_t pos, const WNormOptions& opt = {},
                WNormStats* stats = nullptr);

/// ImpL at `pos` on two W-normal premises; ties to Θ and Γ are kept.
Proof merge_impL(const Proof& left, const Proof& right, std::size_t pos, const WNormOptions& opt = {},
                 WNormStats* stats = nullptr);

/// Same endsequent, same degree, and is_w_normal holds.
Proof w_normalize(const Proof& p, const WNormOptions& opt = {}, WNormStats* stats = nullptr);

// Segment sizes of a W-block over an antecedent of length n: entry i is
// how many top occurrences merge into bottom occurrence i.
std::vector<std::size_t> wSegments(std::size_t n, const std::vector<std::size_t>& ws);
// The W-block for given segments, leftmost position first.
std::vector<std::size_t> canonicalWs(const std::vector<std::size_t>& seg);

}  // namespace cutelim
