#include <gtest/gtest.h>

#include "cutelim/ancestry.hpp"
#include "cutelim/generate.hpp"
#include "cutelim/search.hpp"
#include "support.hpp"

using namespace cutelim;
using cutelim::testing::F;
using cutelim::testing::P;
using cutelim::testing::S;

namespace {
OccurrenceRef ant(Path node, std::size_t pos) { return {std::move(node), false, pos}; }
}

TEST(Validate, Axiom) {
  Proof p = Proof::ax(F("p"));
  EXPECT_NO_THROW(validate(p));
  EXPECT_EQ(p.conclusion(), S("p |- p"));
}

TEST(Validate, WOnShortAntecedent) {
  EXPECT_THROW(Proof::w(0, Proof::ax(F("p"))), ProofError);
}

TEST(Validate, CutOfAxioms) {
  Proof p = Proof::cut(0, Proof::ax(F("p")), Proof::ax(F("p")));
  EXPECT_EQ(validate(p).conclusion(), S("p |- p"));
  EXPECT_EQ(p.degree(), 0u);
}

TEST(Validate, SideConditions) {
  Proof ax = Proof::ax(F("p"));
  EXPECT_THROW(Proof::cut(0, Proof::ax(F("q")), ax), ProofError);
  EXPECT_THROW(Proof::andR(ax, Proof::ax(F("q"))), ProofError);
  EXPECT_THROW(Proof::impR(P("(impr (ax p))")), ProofError);
  EXPECT_THROW(Proof::c(0, ax), ProofError);
  EXPECT_THROW(Proof::andL(0, 3, F("q"), ax), ProofError);
}

TEST(Validate, DegreeIsMaxCutFormula) {
  Proof p = P("(cut 0 (andr (ax p) (ax p)) (andl 0 1 p (ax p)))");
  EXPECT_EQ(p.degree(), 1u);
  EXPECT_EQ(p.cutCount(), 1u);
}

TEST(Ancestry, WHasTwoAncestors) {
  Proof p = P("(w 0 (k 0 p (ax p)))");
  auto a = ancestorsOf(p, false, 0);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], (Ancestor{0, false, 0}));
  EXPECT_EQ(a[1], (Ancestor{0, false, 1}));
}

TEST(Ancestry, KInsertedIsNew) {
  Proof p = P("(k 0 q (ax p))");
  EXPECT_TRUE(ancestorsOf(p, false, 0).empty());
  EXPECT_EQ(ancestorsOf(p, false, 1), (std::vector<Ancestor>{{0, false, 0}}));
}

TEST(Ancestry, CSwaps) {
  Proof p = P("(c 0 (k 0 q (ax p)))");
  EXPECT_EQ(ancestorsOf(p, false, 0), (std::vector<Ancestor>{{0, false, 1}}));
  EXPECT_EQ(ancestorsOf(p, false, 1), (std::vector<Ancestor>{{0, false, 0}}));
}

TEST(Cluster, AxiomIsSingleton) {
  Proof p = P("(ax p)");
  auto c = cluster_of(p, ant({}, 0));
  EXPECT_EQ(c.size(), 1u);
}

TEST(Cluster, WPullsBothPremises) {
  Proof p = P("(w 0 (k 0 p (ax p)))");
  auto c = cluster_of(p, ant({}, 0));
  EXPECT_TRUE(c.count(ant({0}, 0)));
  EXPECT_TRUE(c.count(ant({0}, 1)));
  // no crossing through the axiom
  EXPECT_FALSE(c.count(OccurrenceRef{{0, 0}, true, 0}));
}

TEST(Cluster, WorkedExampleImplications) {
  Proof p = cutelim::testing::dataProof("s7.proof");
  // by hand: each a -> a is built by one impl and passes one cut
  for (std::size_t i : {1u, 2u}) {
    auto c = cluster_of(p, ant({}, i));
    EXPECT_EQ(c.size(), 2u) << i;
  }
  // the a in front goes back through the left impl to its axiom
  EXPECT_EQ(cluster_of(p, ant({}, 0)).size(), 3u);
}

TEST(Classify, DirectlyEngagedAboveCut) {
  // right premise contracts the cut formula just above the cut
  Proof p = P("(cut 0 (ax p) (w 0 (k 0 p (ax p))))");
  auto st = classify_contraction(p, {1});
  EXPECT_EQ(st.kind, ContractionStatus::Kind::DirectlyEngaged);
  EXPECT_EQ(st.cut, Path{});
  EXPECT_EQ(classify_contraction_by_clusters(p, {1}).kind, st.kind);
}

TEST(Classify, EngagedFartherUp) {
  Proof p = P("(cut 0 (ax p) (k 1 q (w 0 (k 0 p (ax p)))))");
  EXPECT_EQ(classify_contraction(p, {1, 0}).kind, ContractionStatus::Kind::Engaged);
}

TEST(Classify, NeutralWithoutCuts) {
  Proof p = P("(w 0 (k 0 p (ax p)))");
  EXPECT_EQ(classify_contraction(p, {}).kind, ContractionStatus::Kind::Neutral);
}

TEST(Classify, NeutralInsideLeftPremise) {
  Proof p = P("(cut 0 (w 0 (k 0 p (ax p))) (ax p))");
  EXPECT_EQ(classify_contraction(p, {0}).kind, ContractionStatus::Kind::Neutral);
  EXPECT_EQ(classify_contraction_by_clusters(p, {0}).kind, ContractionStatus::Kind::Neutral);
}

TEST(Classify, StableUnderTailW) {
  Proof base = P("(cut 1 (ax p) (k 2 q (k 2 q (w 0 (k 0 p (k 0 p (ax p)))))))");
  Proof tailed = Proof::w(2, base);
  EXPECT_EQ(classify_contraction(base, {1, 0, 0}).kind, classify_contraction(tailed, {0, 1, 0, 0}).kind);
}

TEST(WNormal, CutFreeWithoutW) { EXPECT_TRUE(is_w_normal(P("(andr (ax p) (ax p))"))); }

TEST(WNormal, WAboveAndL) {
  EXPECT_FALSE(is_w_normal(P("(andl 0 1 q (w 0 (k 0 p (ax p))))")));
}

TEST(WNormal, WAboveImpR) {
  EXPECT_TRUE(is_w_normal(P("(impr (w 0 (k 0 p (ax p))))")));
}

TEST(WNormal, TailAndChains) {
  EXPECT_TRUE(is_w_normal(P("(w 0 (w 0 (k 0 p (k 0 p (ax p)))))")));
  EXPECT_TRUE(is_w_normal(P("(w 0 (k 0 p (ax p)))")));
}

TEST(Tailless, Examples) {
  EXPECT_TRUE(is_tailless(P("(ax p)")));
  EXPECT_FALSE(is_tailless(P("(w 0 (k 0 p (ax p)))")));
  EXPECT_TRUE(is_tailless(P("(impr (w 0 (k 0 p (ax p))))")));
}

TEST(Generator, BudgetOneIsAxiom) {
  EXPECT_TRUE(generate_proof(1, 1).isAxiom());
}

TEST(Generator, SweepValidates) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    for (std::size_t n : {3u, 10u, 30u}) {
      Proof p = generate_proof(s, n);
      EXPECT_NO_THROW(validate(p));
      EXPECT_LE(p.nodeCount(), n);
    }
  }
}

TEST(Generator, NoImplication) {
  GenOptions o;
  o.allowImp = false;
  for (std::uint64_t s = 0; s < 200; ++s) {
    Proof p = generate_proof_with_cut(s, 30, o);
    EXPECT_FALSE(p.mentionsImplication()) << s;
    EXPECT_EQ(p.count(Rule::ImpL) + p.count(Rule::ImpR), 0u);
  }
}

TEST(Generator, Deterministic) {
  EXPECT_EQ(generate_proof(42, 25), generate_proof(42, 25));
}

TEST(Search, Axiom) {
  auto r = search_cutfree(S("p |- p"), 1);
  ASSERT_TRUE(r);
  EXPECT_TRUE(r->isAxiom());
}

TEST(Search, BareAtomUnprovable) {
  for (std::size_t d : {1u, 3u, 8u}) EXPECT_FALSE(search_cutfree(S("|- p"), d));
}

TEST(Search, AndCommutes) {
  auto r = search_cutfree(S("(p & q) |- (q & p)"), 6);
  ASSERT_TRUE(r);
  EXPECT_EQ(validate(*r).conclusion(), S("(p & q) |- (q & p)"));
  EXPECT_TRUE(r->isCutFree());
}

TEST(Search, Intuitionistic) {
  EXPECT_FALSE(search_cutfree(S("|- (p | (p -> bot))"), 8));
  EXPECT_FALSE(search_cutfree(S("((p -> q) -> p) |- p"), 8));
  auto r = search_cutfree(S("p, (p -> q), (q -> r) |- r"), 8);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->conclusion(), S("p, (p -> q), (q -> r) |- r"));
}
