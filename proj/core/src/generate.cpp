#include "cutelim/generate.hpp"

#include <random>

namespace cutelim {

namespace {

enum class Pick { AndR, OrR, ImpR, Cut, AndL, OrL, ImpL, W, C, K };

class Gen {
 public:
  Gen(std::uint64_t seed, const GenOptions& opt) : rng_(seed), opt_(opt) {
    if (opt_.atoms.empty()) opt_.atoms = {"p"};
  }

  std::size_t pick(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }
  bool chance(unsigned pct) { return pick(100) < pct; }

  Formula formula(std::size_t depth) {
    if (depth == 0 || chance(45)) {
      if (chance(6)) return Formula::bottom();
      return Formula::atom(opt_.atoms[pick(opt_.atoms.size())]);
    }
    std::size_t kinds = opt_.allowImp ? 3 : 2;
    auto k = static_cast<Formula::Kind>(static_cast<std::size_t>(Formula::Kind::And) + pick(kinds));
    Formula l = formula(depth - 1);
    return Formula::binary(k, l, formula(depth - 1));
  }
  Formula formula() { return formula(opt_.maxFormulaDepth); }

  Proof leaf(const Formula& goal) { return chance(12) ? Proof::botAx(goal) : Proof::ax(goal); }

  // Some nonempty-antecedent proof; thins in a fresh formula if needed.
  Proof nonempty(Proof p) {
    if (p.ant().empty()) p = Proof::k(0, formula(), p);
    return p;
  }

  Proof gen(const Formula& goal, std::size_t budget, bool forceCut = false) {
    if (budget <= 1) return leaf(goal);
    std::vector<std::pair<Pick, unsigned>> menu;
    if (forceCut) {
      menu = {{Pick::Cut, 1}};
    } else {
      if (goal.kind() == Formula::Kind::And) menu.push_back({Pick::AndR, 4});
      if (goal.kind() == Formula::Kind::Or) menu.push_back({Pick::OrR, 4});
      if (goal.kind() == Formula::Kind::Imp) menu.push_back({Pick::ImpR, 4});
      menu.insert(menu.end(), {{Pick::Cut, 3}, {Pick::AndL, 2}, {Pick::OrL, 2}, {Pick::W, 3}, {Pick::C, 1}, {Pick::K, 1}});
      if (opt_.allowImp) menu.push_back({Pick::ImpL, 2});
    }
    unsigned total = 0;
    for (auto& m : menu) total += m.second;
    unsigned roll = static_cast<unsigned>(pick(total));
    Pick choice = menu.back().first;
    for (auto& m : menu) {
      if (roll < m.second) {
        choice = m.first;
        break;
      }
      roll -= m.second;
    }
    std::size_t rest = budget - 1;
    std::size_t b1 = 1 + pick(rest > 1 ? rest - 1 : 1);
    std::size_t b2 = rest > b1 ? rest - b1 : 1;
    Proof out = build(choice, goal, rest, b1, b2);
    if (out.nodeCount() > budget) return leaf(goal);
    return out;
  }

  Proof build(Pick choice, const Formula& goal, std::size_t rest, std::size_t b1, std::size_t b2) {
    switch (choice) {
      case Pick::AndR: {
        Proof l = gen(goal.left(), b1 * 2 / 3);
        Proof r = gen(goal.right(), b2 * 2 / 3);
        Proof l2 = ksAt(l, l.ant().size(), r.ant());
        return Proof::andR(l2, ksAt(r, 0, l.ant()));
      }
      case Pick::OrR: {
        int side = static_cast<int>(1 + pick(2));
        Proof sub = gen(side == 1 ? goal.left() : goal.right(), rest);
        return Proof::orR(side, side == 1 ? goal.right() : goal.left(), sub);
      }
      case Pick::ImpR: {
        Proof sub = gen(goal.right(), rest > 1 ? rest - 1 : 1);
        const auto& ant = sub.ant();
        for (std::size_t i = 0; i < ant.size(); ++i) {
          if (ant[i] == goal.left()) return Proof::impR(moveTo(sub, i, 0));
        }
        return Proof::impR(Proof::k(0, goal.left(), sub));
      }
      case Pick::Cut: {
        Proof r = gen(goal, b2);
        std::size_t pos;
        Formula d = formula();
        if (!r.ant().empty() && chance(70)) {
          pos = pick(r.ant().size());
          d = r.ant()[pos];
        } else {
          pos = pick(r.ant().size() + 1);
          r = Proof::k(pos, d, r);
        }
        if (chance(25)) r = Proof::w(pos, Proof::k(pos, d, r));
        Proof l = gen(d, b1);
        return Proof::cut(pos, l, r);
      }
      case Pick::AndL: {
        Proof sub = nonempty(gen(goal, rest));
        std::size_t pos = pick(sub.ant().size());
        return Proof::andL(pos, static_cast<int>(1 + pick(2)), formula(1), sub);
      }
      case Pick::OrL: {
        Proof l = nonempty(gen(goal, b1 * 2 / 3));
        Proof r = nonempty(gen(goal, b2 * 2 / 3));
        Proof l1 = moveTo(l, pick(l.ant().size()), 0);
        Proof r1 = moveTo(r, pick(r.ant().size()), 0);
        std::vector<Formula> tl(l1.ant().begin() + 1, l1.ant().end());
        std::vector<Formula> tr(r1.ant().begin() + 1, r1.ant().end());
        Proof l2 = ksAt(l1, l1.ant().size(), tr);
        Proof r2 = ksAt(r1, 1, tl);
        Proof o = Proof::orL(0, l2, r2);
        return o.ant().size() > 1 && chance(50) ? moveTo(o, 0, pick(o.ant().size())) : o;
      }
      case Pick::ImpL: {
        Proof r = nonempty(gen(goal, b2));
        std::size_t pos = pick(r.ant().size());
        Proof l = gen(formula(), b1);
        return Proof::impL(pos, l, r);
      }
      case Pick::W: {
        Proof sub = gen(goal, rest);
        const auto& a = sub.ant();
        for (std::size_t i = 0; i + 1 < a.size(); ++i) {
          if (a[i] == a[i + 1]) return Proof::w(i, sub);
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
          for (std::size_t j = i + 2; j < a.size(); ++j) {
            if (a[i] == a[j]) return Proof::w(i, moveTo(sub, j, i + 1));
          }
        }
        if (a.empty()) return sub;
        std::size_t i = pick(a.size());
        return Proof::w(i, Proof::k(i, a[i], sub));
      }
      case Pick::C: {
        Proof sub = gen(goal, rest);
        if (sub.ant().size() < 2) return sub;
        return Proof::c(pick(sub.ant().size() - 1), sub);
      }
      case Pick::K: {
        Proof sub = gen(goal, rest);
        return Proof::k(pick(sub.ant().size() + 1), formula(), sub);
      }
    }
    return leaf(goal);
  }

 private:
  std::mt19937_64 rng_;
  GenOptions opt_;
};

}  // namespace

Proof generate_proof(std::uint64_t seed, std::size_t budget, const GenOptions& opt) {
  if (budget < 1) throw std::invalid_argument("generate_proof: budget must be at least 1");
  Gen g(seed, opt);
  Formula goal = g.formula();
  return g.gen(goal, budget);
}

Proof generate_proof(std::uint64_t seed, std::size_t budget, const std::vector<std::string>& atoms, bool allowImp) {
  GenOptions opt;
  opt.atoms = atoms;
  opt.allowImp = allowImp;
  return generate_proof(seed, budget, opt);
}

Proof generate_proof_with_cut(std::uint64_t seed, std::size_t budget, const GenOptions& opt) {
  if (budget < 1) throw std::invalid_argument("generate_proof: budget must be at least 1");
  std::optional<Proof> last;
  for (std::uint64_t k = 0; k < 16; ++k) {
    Gen g(seed * 7919 + k, opt);
    Formula goal = g.formula();
    Proof p = g.gen(goal, budget, budget >= 3);
    if (p.cutCount() > 0) return p;
    last = p;
  }
  return *last;
}

Formula random_formula(std::uint64_t seed, const GenOptions& opt) { return Gen(seed, opt).formula(); }

}  // namespace cutelim
