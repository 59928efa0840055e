#include "cutelim/wnormal.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "cutelim/ancestry.hpp"
#include "cutelim/zucker.hpp"

namespace cutelim {

std::string SOp::str() const {
  std::string s = std::string(ruleName(rule)) + " " + std::to_string(pos);
  if (rule == Rule::AndL) s += " " + std::to_string(side);
  if (f) s += " " + f->str();
  return s;
}

Proof applyOps(Proof p, const std::vector<SOp>& ops) {
  for (const SOp& op : ops) {
    switch (op.rule) {
      case Rule::C: p = Proof::c(op.pos, std::move(p)); break;
      case Rule::W: p = Proof::w(op.pos, std::move(p)); break;
      case Rule::K: p = Proof::k(op.pos, *op.f, std::move(p)); break;
      case Rule::AndL: p = Proof::andL(op.pos, op.side, *op.f, std::move(p)); break;
      default: throw MalformedInput(std::string("not a unary structural op: ") + ruleName(op.rule));
    }
  }
  return p;
}

std::vector<std::size_t> wSegments(std::size_t n, const std::vector<std::size_t>& ws) {
  std::vector<std::size_t> seg(n, 1);
  for (std::size_t w : ws) {
    if (w + 1 >= seg.size()) throw MalformedInput("W at " + std::to_string(w) + " outside the antecedent");
    seg[w] += seg[w + 1];
    seg.erase(seg.begin() + static_cast<std::ptrdiff_t>(w) + 1);
  }
  return seg;
}

std::vector<std::size_t> canonicalWs(const std::vector<std::size_t>& seg) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < seg.size(); ++i) out.insert(out.end(), seg[i] - 1, i);
  return out;
}

std::string WNormMeasure::str() const {
  return "<" + std::to_string(kappa) + ", " + std::to_string(lambda) + ">";
}

Proof CClassWitness::realize() const {
  Proof p = base;
  for (const auto& l : layers) {
    if (l.kind == CClassLayer::Kind::MobileW) {
      p = Proof::w(l.pos, std::move(p));
    } else {
      p = cs(Proof::cut(l.pos, left, std::move(p)), l.cblock);
    }
  }
  return p;
}

WNormMeasure cclass_measure(const CClassWitness& w) {
  WNormMeasure m;
  std::size_t n = w.left.ant().size();
  const auto& ls = w.layers;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i].kind != CClassLayer::Kind::MobileW) continue;
    m.lambda += ls.size() - 1 - i;
    std::size_t p = ls[i].pos;
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      std::size_t q = ls[j].pos;
      if (ls[j].kind == CClassLayer::Kind::MobileW) {
        if (p > q) --p;
        continue;
      }
      if (p == q) {
        ++m.kappa;
        break;
      }
      if (p > q) p = p - 1 + n;
      for (std::size_t s : ls[j].cblock) {
        if (p == s) p = s + 1;
        else if (p == s + 1) p = s;
      }
    }
  }
  return m;
}

namespace {

std::vector<std::size_t> rep(std::size_t v, std::size_t n) { return std::vector<std::size_t>(n, v); }

Proof realize(const Tail& t) { return ws(t.core, t.ws); }

std::vector<SOp> cancelCs(const std::vector<SOp>& ops) {
  std::vector<SOp> out;
  for (const SOp& op : ops) {
    if (op.rule == Rule::C && !out.empty() && out.back() == op) out.pop_back();
    else out.push_back(op);
  }
  return out;
}

std::vector<SOp> contractCopiesOps(std::size_t t, std::size_t n) {
  std::vector<SOp> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = t + n - 1; c > t + i; --c) out.push_back(SOp::c(c));
    out.push_back(SOp::w(t + i));
  }
  return out;
}

// Inserts copies at the right end of each segment until it has target size.
Proof pad(Proof p, const std::vector<std::size_t>& seg, const std::vector<std::size_t>& target) {
  std::size_t off = 0;
  for (std::size_t i = 0; i < seg.size(); ++i) {
    off += seg[i];
    if (target[i] > seg[i]) {
      Formula f = p.ant()[off - 1];
      p = ksAt(std::move(p), off, std::vector<Formula>(target[i] - seg[i], f));
      off += target[i] - seg[i];
    }
  }
  return p;
}

struct Swap {
  std::vector<SOp> ops;
  std::size_t w;
  bool overlap = false;
};

// W at q followed by op, rewritten as op's then one W.
Swap swapWOp(std::size_t q, const SOp& op) {
  std::size_t s = op.pos;
  switch (op.rule) {
    case Rule::C:
      if (s == q) return {{SOp::c(q + 1), SOp::c(q)}, q + 1, true};
      if (s + 1 == q) return {{SOp::c(q - 1), SOp::c(q)}, q - 1, true};
      if (s < q) return {{op}, q, false};
      return {{SOp::c(s + 1)}, q, false};
    case Rule::K:
      if (s <= q) return {{op}, q + 1, false};
      return {{SOp::k(s + 1, *op.f)}, q, false};
    case Rule::AndL:
      if (s == q) return {{SOp::andL(q + 1, op.side, *op.f), SOp::andL(q, op.side, *op.f)}, q, true};
      if (s < q) return {{op}, q, false};
      return {{SOp::andL(s + 1, op.side, *op.f)}, q, false};
    default:
      throw MalformedInput(std::string("cannot move W past ") + ruleName(op.rule));
  }
}

struct Permuted {
  std::vector<SOp> ops;
  std::vector<std::size_t> ws;
};

class WNorm {
 public:
  WNorm(const WNormOptions& opt, WNormStats* stats) : opt_(opt), stats_(stats) {}

  // W-block ws followed by ops becomes ops' followed by a W-block.
  Permuted permute(const std::vector<std::size_t>& ws, const std::vector<SOp>& ops) {
    if (ops.empty()) return {{}, ws};
    if (ws.empty()) return {ops, {}};
    tick();
    std::pair<std::size_t, std::size_t> before{ws.size(), ops.size()};
    Swap sw = swapWOp(ws.back(), ops.front());
    if (ops.front().rule == Rule::C) {
      pending_.push_back(sw.overlap ? "L5.1a" : "L5.1b");
      if (stats_) ++(sw.overlap ? stats_->l51a : stats_->l51b);
    }
    std::vector<std::size_t> rest(ws.begin(), ws.end() - 1);
    checkPair({rest.size(), sw.ops.size()}, before, "L5.1");
    Permuted a = permute(rest, sw.ops);
    a.ws.push_back(sw.w);
    std::vector<SOp> tail(ops.begin() + 1, ops.end());
    checkPair({a.ws.size(), tail.size()}, before, "L5.1");
    Permuted b = permute(a.ws, tail);
    if (b.ws.size() != ws.size()) throw MeasureViolation("L5.1: W count changed");
    a.ops.insert(a.ops.end(), b.ops.begin(), b.ops.end());
    return {std::move(a.ops), std::move(b.ws)};
  }

  Permuted normalizeOps(const std::vector<SOp>& ops) {
    Permuted acc;
    for (const SOp& op : ops) {
      if (op.rule == Rule::W) {
        acc.ws.push_back(op.pos);
        continue;
      }
      Permuted p = permute(acc.ws, {op});
      acc.ops.insert(acc.ops.end(), p.ops.begin(), p.ops.end());
      acc.ws = std::move(p.ws);
    }
    return acc;
  }

  Tail cclass(CClassWitness wit) {
    auto& ls = wit.layers;
    std::size_t n = wit.left.ant().size();
    for (;;) {
      std::size_t i = 0;
      while (i + 1 < ls.size() &&
             !(ls[i].kind == CClassLayer::Kind::MobileW && ls[i + 1].kind == CClassLayer::Kind::Cut)) {
        ++i;
      }
      if (i + 1 >= ls.size()) break;
      tick();
      WNormMeasure before = cclass_measure(wit);
      std::size_t w = ls[i].pos;
      std::size_t q = ls[i + 1].pos;
      std::vector<SOp> below;
      std::vector<CClassLayer> repl;
      std::string label;
      if (w == q) {
        // directly engaged: one cut per copy, then contract the two Δ's
        below = contractCopiesOps(q, n);
        for (std::size_t s : ls[i + 1].cblock) below.push_back(SOp::c(s));
        Permuted r = normalizeOps(below);
        repl.push_back(CClassLayer::cut(q));
        repl.push_back(CClassLayer::cut(q + n, cBlock(r.ops)));
        for (std::size_t x : r.ws) repl.push_back(CClassLayer::mobileW(x));
        label = "L5.2a";
        if (stats_) ++stats_->l52a;
      } else {
        std::size_t q2 = q < w ? q : q + 1;
        below.push_back(SOp::w(q < w ? w - 1 + n : w));
        for (std::size_t s : ls[i + 1].cblock) below.push_back(SOp::c(s));
        Permuted r = normalizeOps(below);
        repl.push_back(CClassLayer::cut(q2, cBlock(r.ops)));
        for (std::size_t x : r.ws) repl.push_back(CClassLayer::mobileW(x));
        label = "L5.2b";
        if (stats_) ++stats_->l52b;
      }
      ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i), ls.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      ls.insert(ls.begin() + static_cast<std::ptrdiff_t>(i), repl.begin(), repl.end());
      WNormMeasure after = cclass_measure(wit);
      if (stats_) ++stats_->measureChecks;
      if (!(after < before)) throw MeasureViolation(label + ": measure " + after.str() + " not below " + before.str());
      if (opt_.trace) {
        Proof cur = wit.realize();
        flush(cur);
        note(opt_.trace, "P1", label, cur);
      } else {
        pending_.clear();
      }
    }
    std::size_t k = ls.size();
    while (k > 0 && ls[k - 1].kind == CClassLayer::Kind::MobileW) --k;
    Tail out{wit.base, {}};
    CClassWitness head{wit.left, wit.base, std::vector<CClassLayer>(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(k))};
    out.core = head.realize();
    for (std::size_t j = k; j < ls.size(); ++j) out.ws.push_back(ls[j].pos);
    return out;
  }

  Tail mergeOrL(const Tail& l, const Tail& r, std::size_t pos, std::optional<std::size_t> parent) {
    tick();
    Proof lb = realize(l);
    Proof rb = realize(r);
    if (lb.succ() != rb.succ()) throw MalformedInput("merge_orL: succedents differ");
    if (lb.ant().size() != rb.ant().size() || pos >= lb.ant().size()) {
      throw MalformedInput("merge_orL: premise antecedents do not line up");
    }
    for (std::size_t i = 0; i < lb.ant().size(); ++i) {
      if (i != pos && lb.ant()[i] != rb.ant()[i]) throw MalformedInput("merge_orL: contexts differ");
    }
    auto sl = wSegments(l.core.ant().size(), l.ws);
    auto sr = wSegments(r.core.ant().size(), r.ws);
    std::size_t meas = (sl[pos] - 1) + (sr[pos] - 1);
    if (parent) checkPair({meas, 0}, {*parent, 0}, "L5.3");
    if (stats_) ++stats_->l53;
    std::vector<std::size_t> m(sl.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = i == pos ? 1 : std::max(sl[i], sr[i]);
    auto ml = m;
    ml[pos] = sl[pos];
    auto mr = m;
    mr[pos] = sr[pos];
    std::size_t t = std::accumulate(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(pos), std::size_t{0});
    Tail in = aligned(pad(l.core, sl, ml), sl[pos] - 1, pad(r.core, sr, mr), sr[pos] - 1, t, meas);
    auto ctx = canonicalWs(m);
    in.ws.insert(in.ws.end(), ctx.begin(), ctx.end());
    Tail out = canonical(in);
    emit("L5.3", out);
    return out;
  }

  Tail mergeImpL(const Tail& l, const Tail& r, std::size_t s, std::optional<std::size_t> parent) {
    tick();
    Proof rb = realize(r);
    if (s >= rb.ant().size()) throw MalformedInput("merge_impL: position outside the right antecedent");
    auto sl = wSegments(l.core.ant().size(), l.ws);
    auto sr = wSegments(r.core.ant().size(), r.ws);
    std::size_t t = std::accumulate(sr.begin(), sr.begin() + static_cast<std::ptrdiff_t>(s), std::size_t{0});
    std::size_t n = sr[s] - 1;
    std::size_t d = l.core.ant().size();
    if (parent) checkPair({n, 0}, {*parent, 0}, "L5.4");
    if (stats_) ++stats_->l54;
    std::vector<std::size_t> seg(sr.begin(), sr.begin() + static_cast<std::ptrdiff_t>(s));
    seg.insert(seg.end(), sl.begin(), sl.end());
    seg.push_back(1);
    seg.insert(seg.end(), sr.begin() + static_cast<std::ptrdiff_t>(s) + 1, sr.end());
    Tail out{l.core, {}};
    if (n == 0) {
      out = Tail{Proof::impL(t, l.core, r.core), canonicalWs(seg)};
    } else {
      Tail inner = mergeImpL(Tail{l.core, {}}, Tail{r.core, rep(t + 1, n - 1)}, t, n);
      Tail outer = mergeImpL(Tail{l.core, {}}, inner, t + d + 1, n);
      std::vector<SOp> ops;
      for (std::size_t w : outer.ws) ops.push_back(SOp::w(w));
      auto fix = contractCopiesOps(t, d + 1);
      ops.insert(ops.end(), fix.begin(), fix.end());
      Permuted p = normalizeOps(ops);
      Proof core = applyOps(outer.core, cancelCs(p.ops));
      auto ctx = canonicalWs(seg);
      p.ws.insert(p.ws.end(), ctx.begin(), ctx.end());
      out = canonical(Tail{core, p.ws});
    }
    emit("L5.4", out);
    return out;
  }

  Tail norm(const Proof& p) {
    if (auto it = memo_.find(p.id()); it != memo_.end()) return it->second;
    Tail out{p, {}};
    switch (p.rule()) {
      case Rule::Ax:
      case Rule::BotAx:
        break;
      case Rule::W:
        out = norm(p.sub());
        out.ws.push_back(p.pos());
        break;
      case Rule::C:
      case Rule::K:
      case Rule::AndL: {
        Tail t = norm(p.sub());
        SOp op{p.rule(), p.pos(), p.side(), std::nullopt};
        if (p.rule() != Rule::C) op.f = p.formula();
        Permuted r = permute(t.ws, {op});
        out = Tail{applyOps(t.core, cancelCs(r.ops)), r.ws};
        break;
      }
      case Rule::OrR: {
        Tail t = norm(p.sub());
        out = Tail{Proof::orR(p.side(), p.formula(), t.core), t.ws};
        break;
      }
      case Rule::AndR: {
        Tail a = norm(p.left());
        Tail b = norm(p.right());
        auto sa = wSegments(a.core.ant().size(), a.ws);
        auto sb = wSegments(b.core.ant().size(), b.ws);
        std::vector<std::size_t> m(sa.size());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::max(sa[i], sb[i]);
        out = Tail{Proof::andR(pad(a.core, sa, m), pad(b.core, sb, m)), canonicalWs(m)};
        break;
      }
      case Rule::OrL:
        out = mergeOrL(norm(p.left()), norm(p.right()), p.pos(), std::nullopt);
        break;
      case Rule::ImpL:
        out = mergeImpL(norm(p.left()), norm(p.right()), p.pos(), std::nullopt);
        break;
      case Rule::ImpR: {
        Tail t = norm(p.sub());
        auto seg = wSegments(t.core.ant().size(), t.ws);
        Proof core = Proof::impR(ws(t.core, rep(0, seg[0] - 1)));
        out = Tail{core, canonicalWs(std::vector<std::size_t>(seg.begin() + 1, seg.end()))};
        break;
      }
      case Rule::Cut: {
        Tail l = norm(p.left());
        Tail r = norm(p.right());
        CClassWitness wit{l.core, r.core, {}};
        for (std::size_t w : r.ws) wit.layers.push_back(CClassLayer::mobileW(w));
        wit.layers.push_back(CClassLayer::cut(p.pos()));
        for (std::size_t w : l.ws) wit.layers.push_back(CClassLayer::mobileW(p.pos() + w));
        out = cclass(std::move(wit));
        break;
      }
    }
    if (stats_) ++stats_->nodes;
    emit(std::string("T5.5-") + ruleName(p.rule()), out);
    memo_.emplace(p.id(), out);
    return out;
  }

  Tail canonical(const Tail& t) { return Tail{t.core, canonicalWs(wSegments(t.core.ant().size(), t.ws))}; }

 private:
  static std::vector<std::size_t> cBlock(const std::vector<SOp>& ops) {
    std::vector<std::size_t> out;
    for (const SOp& op : cancelCs(ops)) {
      if (op.rule != Rule::C) throw std::logic_error("repair block holds a non-C op");
      out.push_back(op.pos);
    }
    return out;
  }

  Tail aligned(const Proof& l, std::size_t n, const Proof& r, std::size_t m, std::size_t t, std::size_t meas) {
    if (n + m == 0) return Tail{Proof::orL(t, l, r), {}};
    const Formula& a = l.ant()[t];
    const Formula& b = r.ant()[t];
    Formula ab = Formula::disj(a, b);
    Tail o{l, {}};
    if (n > 0) {
      Tail x = mergeOrL(Tail{l, rep(t, n - 1)}, Tail{Proof::k(t, a, r), rep(t + 1, m)}, t + 1, meas);
      Tail y{Proof::k(t + m + 1, ab, r), rep(t, m)};
      o = mergeOrL(x, y, t, meas);
    } else {
      Tail inner = mergeOrL(Tail{Proof::k(t + 1, b, l), {}}, Tail{r, rep(t, m - 1)}, t, meas);
      o = mergeOrL(Tail{Proof::k(t, ab, l), {}}, inner, t + 1, meas);
    }
    o.ws.push_back(t);
    return o;
  }

  void checkPair(std::pair<std::size_t, std::size_t> after, std::pair<std::size_t, std::size_t> before,
                 const std::string& label) {
    if (stats_) ++stats_->measureChecks;
    if (!(after < before)) {
      throw MeasureViolation(label + ": measure <" + std::to_string(after.first) + ", " + std::to_string(after.second) +
                             "> not below <" + std::to_string(before.first) + ", " + std::to_string(before.second) + ">");
    }
  }

  void tick() {
    if (stats_) ++stats_->steps;
    if (++steps_ > opt_.maxSteps) {
      throw StepBudgetExceeded("step budget of " + std::to_string(opt_.maxSteps) + " exceeded");
    }
  }

  void flush(const Proof& p) {
    for (const auto& l : pending_) note(opt_.trace, "P1", l, p);
    pending_.clear();
  }

  void emit(const std::string& label, const Tail& t) {
    if (!opt_.trace) {
      pending_.clear();
      return;
    }
    Proof p = realize(t);
    flush(p);
    note(opt_.trace, "P1", label, p);
  }

  const WNormOptions& opt_;
  WNormStats* stats_;
  std::size_t steps_ = 0;
  std::vector<std::string> pending_;
  std::unordered_map<const void*, Tail> memo_;
};

Tail tailOf(const Proof& p, const char* what) {
  if (!is_w_normal(p)) throw MalformedInput(std::string(what) + ": premise is not W-normal");
  return splitTail(p);
}

std::vector<SOp> checkedOps(const StructuralSegment& seg, bool wFirst) {
  bool seenC = false;
  for (const SOp& op : seg.ops) {
    if (op.rule != Rule::C && op.rule != Rule::W) throw MalformedInput("segment holds " + op.str());
    if (op.rule == Rule::C) seenC = true;
    else if (wFirst && seenC) throw MalformedInput("segment is not a W-block followed by a C-block");
  }
  try {
    seg.bottom();
  } catch (const ProofError& e) {
    throw MalformedInput(std::string("segment does not apply: ") + e.what());
  }
  return seg.ops;
}

StructuralSegment rebuildSegment(const Proof& top, const Permuted& p) {
  StructuralSegment out{top, p.ops};
  for (std::size_t w : p.ws) out.ops.push_back(SOp::w(w));
  return out;
}

}  // namespace

StructuralSegment permute_W_below_C(const StructuralSegment& seg, const WNormOptions& opt, WNormStats* stats) {
  auto ops = checkedOps(seg, true);
  std::vector<std::size_t> ws;
  std::vector<SOp> cs;
  for (const SOp& op : ops) {
    if (op.rule == Rule::W) ws.push_back(op.pos);
    else cs.push_back(op);
  }
  WNorm e(opt, stats);
  StructuralSegment out = rebuildSegment(seg.top, e.permute(ws, cs));
  note(opt.trace, "P1", "L5.1", out.bottom());
  return out;
}

StructuralSegment normalizeStructural(const StructuralSegment& seg, const WNormOptions& opt, WNormStats* stats) {
  auto ops = checkedOps(seg, false);
  WNorm e(opt, stats);
  return rebuildSegment(seg.top, e.normalizeOps(ops));
}

Proof normalize_cclass(const Proof& p, const CClassWitness& w, const WNormOptions& opt, WNormStats* stats) {
  bool ok = false;
  try {
    ok = is_tailless(w.left) && is_tailless(w.base) && w.realize() == p;
  } catch (const ProofError&) {
    ok = false;
  }
  if (!ok) throw MalformedInput("normalize_cclass: witness does not describe the proof");
  WNorm e(opt, stats);
  return realize(e.cclass(w));
}

Proof merge_orL(const Proof& left, const Proof& right, std::size_t pos, const WNormOptions& opt, WNormStats* stats) {
  Tail l = tailOf(left, "merge_orL");
  Tail r = tailOf(right, "merge_orL");
  WNorm e(opt, stats);
  return realize(e.mergeOrL(l, r, pos, std::nullopt));
}

Proof merge_impL(const Proof& left, const Proof& right, std::size_t pos, const WNormOptions& opt, WNormStats* stats) {
  Tail l = tailOf(left, "merge_impL");
  Tail r = tailOf(right, "merge_impL");
  WNorm e(opt, stats);
  return realize(e.mergeImpL(l, r, pos, std::nullopt));
}

Proof w_normalize(const Proof& p, const WNormOptions& opt, WNormStats* stats) {
  WNorm e(opt, stats);
  return realize(e.canonical(e.norm(p)));
}

}  // namespace cutelim
