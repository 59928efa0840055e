#include <gtest/gtest.h>

#include "cutelim/formula.hpp"
#include "support.hpp"

using namespace cutelim;
using cutelim::testing::F;
using cutelim::testing::S;

TEST(Formula, DegreeCountsBinaryConnectives) {
  EXPECT_EQ(formula_degree(F("p")), 0u);
  EXPECT_EQ(formula_degree(F("((p & q) -> r)")), 2u);
  EXPECT_EQ(formula_degree(F("(p -> bot)")), 1u);  // negation
  EXPECT_EQ(formula_degree(Formula::bottom()), 0u);
}

TEST(Formula, DegreeIsRecursiveSum) {
  for (const char* t : {"((p | q) & (r -> p))", "(p & (q & (r & p)))", "((bot -> p) | q)"}) {
    Formula f = F(t);
    EXPECT_EQ(f.degree(), 1 + f.left().degree() + f.right().degree()) << t;
  }
}

TEST(Formula, StructuralEquality) {
  EXPECT_EQ(F("(p & q)"), Formula::conj(Formula::atom("p"), Formula::atom("q")));
  EXPECT_NE(F("(p & q)"), F("(q & p)"));
  EXPECT_NE(F("(p -> bot)"), F("p"));
  EXPECT_NE(Formula::bottom(), Formula::atom("bot_"));
  EXPECT_TRUE(F("(p -> q)").containsImplication());
  EXPECT_FALSE(F("(p | (q & r))").containsImplication());
}

TEST(Splice, Deletion) {
  EXPECT_EQ(antecedent_splice(S("p, q |- r"), 1, {}, 1), S("p |- r"));
}

TEST(Splice, Insertion) {
  std::vector<Formula> qq{F("q"), F("q")};
  EXPECT_EQ(antecedent_splice(S("p |- r"), 0, qq, 0), S("q, q, p |- r"));
}

TEST(Splice, SwapByReplace) {
  std::vector<Formula> qp{F("q"), F("p")};
  EXPECT_EQ(antecedent_splice(S("p, q |- r"), 0, qp, 2), S("q, p |- r"));
}

TEST(Splice, LengthAndRange) {
  Sequent s = S("p, q, r |- r");
  std::vector<Formula> ins{F("p"), F("q")};
  for (std::size_t at = 0; at <= 3; ++at) {
    for (std::size_t drop = 0; at + drop <= 3; ++drop) {
      EXPECT_EQ(antecedent_splice(s, at, ins, drop).antecedent.size(), 3 - drop + 2);
    }
  }
  EXPECT_THROW(antecedent_splice(s, 2, ins, 2), PositionError);
  EXPECT_THROW(antecedent_splice(s, 4, {}, 0), PositionError);
}
