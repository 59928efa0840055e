#include <gtest/gtest.h>

#include <random>

#include "cutelim/ancestry.hpp"
#include "cutelim/generate.hpp"
#include "cutelim/search.hpp"
#include "cutelim/wnormal.hpp"
#include "support.hpp"

using namespace cutelim;
using cutelim::testing::F;

namespace {

std::vector<Path> allPaths(const Proof& p, Path at = {}) {
  std::vector<Path> out{at};
  for (std::size_t i = 0; i < p.arity(); ++i) {
    Path q = at;
    q.push_back(static_cast<std::uint8_t>(i));
    auto sub = allPaths(p.child(i), q);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

// Extra copy of occurrence i, contracted straight away.
Proof addTie(const Proof& p, std::size_t i) { return Proof::w(i, Proof::k(i, p.ant()[i], p)); }

Proof randomTies(Proof p, std::mt19937_64& rng) {
  if (p.ant().empty()) return p;
  int n = static_cast<int>(rng() % 4);
  for (int j = 0; j < n; ++j) p = addTie(p, rng() % p.ant().size());
  return p;
}

}  // namespace

TEST(Props, AncestorShape) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Proof p = generate_proof_with_cut(s, 30);
    for (const Path& path : allPaths(p)) {
      const Proof& n = p.at(path);
      for (std::size_t i = 0; i < n.ant().size(); ++i) {
        auto as = ancestorsOf(n, false, i);
        for (const auto& a : as) {
          ASSERT_LT(a.child, n.arity());
          if (!a.succedent) ASSERT_LT(a.position, n.child(a.child).ant().size());
        }
        if (n.rule() == Rule::W && i == n.pos()) EXPECT_EQ(as.size(), 2u);
        if (n.rule() == Rule::K && i == n.pos()) EXPECT_TRUE(as.empty());
        if (n.rule() == Rule::C) ASSERT_EQ(as.size(), 1u);
      }
      if (n.rule() == Rule::C) {
        std::vector<bool> hit(n.ant().size(), false);
        for (std::size_t i = 0; i < n.ant().size(); ++i) hit[ancestorsOf(n, false, i)[0].position] = true;
        EXPECT_TRUE(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
      }
    }
  }
}

TEST(Props, ClassifyTwoWays) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    Proof p = generate_proof_with_cut(s, 30);
    for (const Path& w : wPaths(p)) {
      auto a = classify_contraction(p, w), b = classify_contraction_by_clusters(p, w);
      ASSERT_EQ(a.kind, b.kind) << s;
      if (a.engaged()) EXPECT_EQ(a.cut, b.cut);
    }
  }
}

TEST(Props, ClassifyStableUnderTail) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    Proof p = generate_proof_with_cut(s, 30);
    if (p.ant().empty()) continue;
    Proof q = addTie(p, 0);
    for (const Path& w : wPaths(p)) {
      Path under{0, 0};
      under.insert(under.end(), w.begin(), w.end());
      EXPECT_EQ(classify_contraction(p, w).kind, classify_contraction(q, under).kind) << s;
    }
  }
}

TEST(Props, TaillessLeftIsNeutral) {
  std::size_t checked = 0;
  for (std::uint64_t s = 0; s < 400; ++s) {
    Proof core = splitTail(w_normalize(generate_proof_with_cut(s, 20))).core;
    if (core.ant().empty()) continue;
    // W's on the head formula stay above the ->R
    Proof l = Proof::impR(w_normalize(addTie(addTie(core, 0), 0)));
    if (!is_w_normal(l) || !is_tailless(l)) continue;
    Proof r = Proof::k(0, l.succ(), generate_proof(s + 1, 15));
    Proof c = Proof::cut(0, l, r);
    for (const Path& w : wPaths(c)) {
      if (w[0] != 0) continue;
      ++checked;
      EXPECT_FALSE(classify_contraction(c, w).engaged()) << s;
    }
  }
  EXPECT_GT(checked, 20u);
}

TEST(Props, SearchIsCutFree) {
  for (std::uint64_t s = 0; s < 150; ++s) {
    Sequent e = generate_proof(s, 12).conclusion();
    auto r = search_cutfree(e, 6);
    if (r) {
      EXPECT_TRUE(r->isCutFree());
      EXPECT_EQ(validate(*r).conclusion(), e);
    }
  }
}

TEST(Props, PermutePreservesTies) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 300; ++round) {
    Proof top = Proof::ax(F("r"));
    std::size_t len = 3 + rng() % 4;
    for (std::size_t i = 0; i < len; ++i) top = Proof::k(rng() % (top.ant().size() + 1), F(rng() % 2 ? "p" : "q"), top);
    StructuralSegment seg{top, {}};
    Proof cur = top;
    for (int i = 0; i < 3; ++i) {
      std::vector<std::size_t> can;
      for (std::size_t j = 0; j + 1 < cur.ant().size(); ++j) {
        if (cur.ant()[j] == cur.ant()[j + 1]) can.push_back(j);
      }
      if (can.empty()) break;
      std::size_t j = can[rng() % can.size()];
      seg.ops.push_back(SOp::w(j));
      cur = Proof::w(j, cur);
    }
    for (int i = 0; i < 4 && cur.ant().size() > 1; ++i) {
      std::size_t j = rng() % (cur.ant().size() - 1);
      seg.ops.push_back(SOp::c(j));
      cur = Proof::c(j, cur);
    }
    WNormStats st;
    auto out = permute_W_below_C(seg, {}, &st);
    Proof b = out.bottom();
    ASSERT_EQ(b.conclusion(), cur.conclusion());
    EXPECT_EQ(b.count(Rule::W), cur.count(Rule::W));
    EXPECT_EQ(tieCounts(b), tieCounts(cur));
  }
}

TEST(Props, MergeOrLTiesAreMax) {
  std::mt19937_64 rng(11);
  std::size_t done = 0;
  for (std::uint64_t s = 0; s < 300; ++s) {
    Proof l0 = generate_proof(s, 12);
    if (l0.ant().empty()) continue;
    std::vector<Formula> gamma(l0.ant().begin() + 1, l0.ant().end());
    Proof r0 = ksAt(Proof::botAx(l0.succ()), 1, gamma);
    Proof l = w_normalize(randomTies(l0, rng)), r = w_normalize(randomTies(r0, rng));
    auto tl = tieCounts(l), tr = tieCounts(r);
    WNormStats st;
    Proof out = merge_orL(l, r, 0, {}, &st);
    ASSERT_TRUE(is_w_normal(out)) << s;
    ASSERT_NO_THROW(validate(out));
    auto to = tieCounts(out);
    for (std::size_t i = 1; i < to.size(); ++i) EXPECT_EQ(to[i], std::max(tl[i], tr[i])) << s << " at " << i;
    ++done;
  }
  EXPECT_GT(done, 100u);
}

TEST(Props, MergeImpLKeepsContextTies) {
  std::mt19937_64 rng(13);
  std::size_t done = 0;
  for (std::uint64_t s = 0; s < 300; ++s) {
    Proof r0 = generate_proof(s, 12);
    if (r0.ant().empty()) continue;
    std::size_t pos = rng() % r0.ant().size();
    Proof l = w_normalize(randomTies(generate_proof(s + 101, 10), rng));
    Proof r = w_normalize(randomTies(r0, rng));
    auto tr = tieCounts(r);
    Proof out = merge_impL(l, r, pos);
    ASSERT_TRUE(is_w_normal(out)) << s;
    std::vector<Formula> want = r.ant();
    want.erase(want.begin() + pos);
    want.insert(want.begin() + pos, Formula::imp(l.succ(), r.ant()[pos]));
    want.insert(want.begin() + pos, l.ant().begin(), l.ant().end());
    ASSERT_EQ(out.ant(), want);
    auto to = tieCounts(out);
    std::size_t d = l.ant().size();
    for (std::size_t i = 0; i < pos; ++i) EXPECT_EQ(to[i], tr[i]) << s;
    for (std::size_t i = pos + 1; i < tr.size(); ++i) EXPECT_EQ(to[i + d], tr[i]) << s;
    ++done;
  }
  EXPECT_GT(done, 100u);
}
