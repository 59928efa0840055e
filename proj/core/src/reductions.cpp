#include "reductions.hpp"

namespace cutelim::detail {

Proof plainCut(std::size_t pos, const Proof& l, const Proof& r) { return Proof::cut(pos, l, r); }

bool leftPrincipal(const Proof& cut) {
  switch (cut.left().rule()) {
    case Rule::Ax: case Rule::BotAx: case Rule::AndR: case Rule::OrR: case Rule::ImpR:
      return true;
    default:
      return false;
  }
}

bool rightPrincipal(const Proof& cut) {
  const Proof& r = cut.right();
  std::size_t pos = cut.pos();
  switch (r.rule()) {
    case Rule::Ax: case Rule::BotAx:
      return true;
    case Rule::K: case Rule::AndL: case Rule::OrL:
      return r.pos() == pos;
    case Rule::ImpL:
      return r.pos() + r.left().ant().size() == pos;
    default:
      return false;
  }
}

std::optional<Rewrite> axiomCase(const Proof& cut) {
  const Proof& l = cut.left();
  const Proof& r = cut.right();
  std::size_t pos = cut.pos();
  if (l.rule() == Rule::Ax) return Rewrite{r, "1.1"};
  if (l.rule() == Rule::BotAx) {
    std::vector<Formula> theta(r.ant().begin(), r.ant().begin() + static_cast<std::ptrdiff_t>(pos));
    std::vector<Formula> gamma(r.ant().begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.ant().end());
    Proof p = ksAt(Proof::botAx(r.succ()), 0, theta);
    return Rewrite{ksAt(p, theta.size() + 1, gamma), "1.2"};
  }
  if (r.rule() == Rule::Ax) return Rewrite{l, "1.3"};
  if (r.rule() == Rule::K && r.pos() == pos) return Rewrite{ksAt(r.sub(), pos, l.ant()), "1.4"};
  return std::nullopt;
}

std::optional<Rewrite> principalLattice(const Proof& cut, const CutFn& mk) {
  const Proof& l = cut.left();
  const Proof& r = cut.right();
  std::size_t pos = cut.pos();
  if (l.rule() == Rule::AndR && r.rule() == Rule::AndL && r.pos() == pos) {
    const Proof& used = r.side() == 1 ? l.left() : l.right();
    return Rewrite{mk(pos, used, r.sub()), "1.5"};
  }
  if (l.rule() == Rule::OrR && r.rule() == Rule::OrL && r.pos() == pos) {
    const Proof& branch = l.side() == 1 ? r.left() : r.right();
    return Rewrite{mk(pos, l.sub(), branch), "1.6"};
  }
  return std::nullopt;
}

std::optional<Rewrite> pushLeft(const Proof& cut, const CutFn& mk) {
  const Proof& l = cut.left();
  const Proof& r = cut.right();
  std::size_t pos = cut.pos();
  switch (l.rule()) {
    case Rule::C:
      return Rewrite{Proof::c(l.pos() + pos, mk(pos, l.sub(), r)), "2.1"};
    case Rule::W:
      return Rewrite{Proof::w(l.pos() + pos, mk(pos, l.sub(), r)), "2.1"};
    case Rule::K:
      return Rewrite{Proof::k(l.pos() + pos, l.formula(), mk(pos, l.sub(), r)), "2.1"};
    case Rule::AndL:
      return Rewrite{Proof::andL(l.pos() + pos, l.side(), l.formula(), mk(pos, l.sub(), r)), "2.1"};
    case Rule::OrL: {
      Proof a = mk(pos, l.left(), r);
      return Rewrite{Proof::orL(l.pos() + pos, a, mk(pos, l.right(), r)), "2.2"};
    }
    case Rule::ImpL:
      return Rewrite{Proof::impL(l.pos() + pos, l.left(), mk(pos, l.right(), r)), "2.3"};
    default:
      return std::nullopt;
  }
}

namespace {

std::optional<Rewrite> pushRightUnary(const Proof& cut, const CutFn& mk) {
  const Proof& r = cut.right();
  std::size_t pos = cut.pos();
  std::size_t n = cut.left().ant().size();
  auto anc = [&]() -> std::optional<std::size_t> {
    switch (r.rule()) {
      case Rule::C:
        if (pos == r.pos()) return pos + 1;
        if (pos == r.pos() + 1) return pos - 1;
        return pos;
      case Rule::W:
        if (pos == r.pos()) return std::nullopt;
        return pos <= r.pos() ? pos : pos + 1;
      case Rule::K:
        if (pos == r.pos()) return std::nullopt;
        return pos < r.pos() ? pos : pos - 1;
      case Rule::AndL:
        if (pos == r.pos()) return std::nullopt;
        return pos;
      case Rule::OrR:
        return pos;
      default:
        return std::nullopt;
    }
  }();
  if (!anc) return std::nullopt;
  std::size_t pp = *anc;
  Proof up = mk(pp, cut.left(), r.sub());
  auto adj = [&](std::size_t x) { return x < pp ? x : x + n - 1; };
  switch (r.rule()) {
    case Rule::C: {
      std::size_t q = r.pos();
      if (pp == q) return Rewrite{moveTo(up, q + n, q), "3.1"};
      if (pp == q + 1) return Rewrite{moveTo(up, q, q + n), "3.1"};
      return Rewrite{Proof::c(adj(q), up), "3.1"};
    }
    case Rule::W:
      return Rewrite{Proof::w(adj(r.pos()), up), "3.1"};
    case Rule::K: {
      std::size_t q = r.pos();
      return Rewrite{Proof::k(q < pos ? q : q + n - 1, r.formula(), up), "3.1"};
    }
    case Rule::AndL:
      return Rewrite{Proof::andL(adj(r.pos()), r.side(), r.formula(), up), "3.1"};
    case Rule::OrR:
      return Rewrite{Proof::orR(r.side(), r.formula(), up), "3.1"};
    default:
      return std::nullopt;
  }
}

}  // namespace

std::optional<Rewrite> pushRight(const Proof& cut, const CutFn& mk) {
  const Proof& r = cut.right();
  const Proof& pi = cut.left();
  std::size_t pos = cut.pos();
  std::size_t n = pi.ant().size();
  switch (r.rule()) {
    case Rule::C: case Rule::W: case Rule::K: case Rule::AndL: case Rule::OrR:
      return pushRightUnary(cut, mk);
    case Rule::AndR: {
      Proof a = mk(pos, pi, r.left());
      return Rewrite{Proof::andR(a, mk(pos, pi, r.right())), "3.2"};
    }
    case Rule::OrL: {
      std::size_t q = r.pos();
      if (q == pos) return std::nullopt;
      Proof a = mk(pos, pi, r.left());
      Proof b = mk(pos, pi, r.right());
      return Rewrite{Proof::orL(q < pos ? q : q + n - 1, a, b), "3.3"};
    }
    case Rule::ImpL: {
      std::size_t q = r.pos();
      std::size_t d1 = r.left().ant().size();
      if (pos < q) return Rewrite{Proof::impL(q + n - 1, r.left(), mk(pos, pi, r.right())), "3.5"};
      if (pos < q + d1) return Rewrite{Proof::impL(q, mk(pos - q, pi, r.left()), r.right()), "3.5"};
      if (pos == q + d1) return std::nullopt;
      return Rewrite{Proof::impL(q, r.left(), mk(pos - d1, pi, r.right())), "3.5"};
    }
    case Rule::ImpR: {
      std::vector<std::size_t> block;
      const Proof* rho = &r.sub();
      while (rho->rule() == Rule::W && rho->pos() == 0) {
        block.push_back(0);
        rho = &rho->sub();
      }
      Proof up = mk(pos + 1 + block.size(), pi, *rho);
      return Rewrite{Proof::impR(ws(up, block)), "3.6"};
    }
    default:
      return std::nullopt;
  }
}

Proof contractCopies(Proof p, std::size_t t, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = t + n - 1; c > t + i; --c) p = Proof::c(c, std::move(p));
    p = Proof::w(t + i, std::move(p));
  }
  return p;
}

}  // namespace cutelim::detail
