#include "cutelim/proof.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace cutelim {

namespace {

std::uint64_t satAdd(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                           : a + b;
}

[[noreturn]] void fail(Rule r, const std::string& what) {
  throw ProofError(std::string(ruleName(r)) + ": " + what);
}

std::string num(std::size_t v) { return std::to_string(v); }

void needArity(Rule r, const std::vector<const Sequent*>& ps, std::size_t n) {
  if (ps.size() != n) fail(r, "expected " + num(n) + " premises, got " + num(ps.size()));
}

void needLen(Rule r, const Sequent& s, std::size_t need, const char* what) {
  if (s.antecedent.size() < need) {
    fail(r, std::string(what) + ": premise antecedent has length " + num(s.antecedent.size()));
  }
}

}  // namespace

const char* ruleName(Rule r) {
  switch (r) {
    case Rule::Ax: return "ax";
    case Rule::BotAx: return "botax";
    case Rule::C: return "c";
    case Rule::W: return "w";
    case Rule::K: return "k";
    case Rule::Cut: return "cut";
    case Rule::AndL: return "andl";
    case Rule::AndR: return "andr";
    case Rule::OrL: return "orl";
    case Rule::OrR: return "orr";
    case Rule::ImpL: return "impl";
    case Rule::ImpR: return "impr";
  }
  return "?";
}

std::string pathStr(const Path& p) {
  std::string s = "/";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += '/';
    s += std::to_string(p[i]);
  }
  return s;
}

Sequent conclude(Rule r, std::size_t pos, int side, const std::optional<Formula>& f,
                 const std::vector<const Sequent*>& ps) {
  auto needF = [&]() -> const Formula& {
    if (!f) fail(r, "missing formula parameter");
    return *f;
  };
  auto needSide = [&] {
    if (side != 1 && side != 2) fail(r, "side must be 1 or 2");
  };
  switch (r) {
    case Rule::Ax:
      needArity(r, ps, 0);
      return Sequent{{needF()}, needF()};
    case Rule::BotAx:
      needArity(r, ps, 0);
      return Sequent{{Formula::bottom()}, needF()};
    case Rule::C: {
      needArity(r, ps, 1);
      const Sequent& s = *ps[0];
      needLen(r, s, pos + 2, "C needs positions pos, pos+1");
      Sequent out = s;
      std::swap(out.antecedent[pos], out.antecedent[pos + 1]);
      return out;
    }
    case Rule::W: {
      needArity(r, ps, 1);
      const Sequent& s = *ps[0];
      needLen(r, s, pos + 2, "W needs positions pos, pos+1");
      if (s.antecedent[pos] != s.antecedent[pos + 1]) {
        fail(r, "W premise formulas at pos, pos+1 differ");
      }
      return antecedent_splice(s, pos + 1, {}, 1);
    }
    case Rule::K: {
      needArity(r, ps, 1);
      const Sequent& s = *ps[0];
      needLen(r, s, pos, "K position out of range");
      Formula g = needF();
      return antecedent_splice(s, pos, std::span<const Formula>(&g, 1), 0);
    }
    case Rule::Cut: {
      needArity(r, ps, 2);
      const Sequent& l = *ps[0];
      const Sequent& rt = *ps[1];
      needLen(r, rt, pos + 1, "cut position out of range in right premise");
      if (rt.antecedent[pos] != l.succedent) {
        fail(r, "cut formula differs: left succedent " + l.succedent.str() + ", right has " +
                    rt.antecedent[pos].str() + " at " + num(pos));
      }
      return antecedent_splice(rt, pos, l.antecedent, 1);
    }
    case Rule::AndL: {
      needArity(r, ps, 1);
      needSide();
      const Sequent& s = *ps[0];
      needLen(r, s, pos + 1, "AndL position out of range");
      Sequent out = s;
      const Formula& x = s.antecedent[pos];
      out.antecedent[pos] = side == 1 ? Formula::conj(x, needF()) : Formula::conj(needF(), x);
      return out;
    }
    case Rule::AndR: {
      needArity(r, ps, 2);
      if (ps[0]->antecedent != ps[1]->antecedent) fail(r, "AndR contexts differ");
      return Sequent{ps[0]->antecedent, Formula::conj(ps[0]->succedent, ps[1]->succedent)};
    }
    case Rule::OrL: {
      needArity(r, ps, 2);
      const Sequent& l = *ps[0];
      const Sequent& rt = *ps[1];
      needLen(r, l, pos + 1, "OrL position out of range in left premise");
      if (l.antecedent.size() != rt.antecedent.size()) fail(r, "OrL contexts differ in length");
      for (std::size_t i = 0; i < l.antecedent.size(); ++i) {
        if (i != pos && l.antecedent[i] != rt.antecedent[i]) fail(r, "OrL contexts differ at " + num(i));
      }
      if (l.succedent != rt.succedent) fail(r, "OrL succedents differ");
      Sequent out = l;
      out.antecedent[pos] = Formula::disj(l.antecedent[pos], rt.antecedent[pos]);
      return out;
    }
    case Rule::OrR: {
      needArity(r, ps, 1);
      needSide();
      Sequent out = *ps[0];
      out.succedent = side == 1 ? Formula::disj(out.succedent, needF()) : Formula::disj(needF(), out.succedent);
      return out;
    }
    case Rule::ImpL: {
      needArity(r, ps, 2);
      const Sequent& l = *ps[0];
      const Sequent& rt = *ps[1];
      needLen(r, rt, pos + 1, "ImpL position out of range in right premise");
      std::vector<Formula> ins = l.antecedent;
      ins.push_back(Formula::imp(l.succedent, rt.antecedent[pos]));
      return antecedent_splice(rt, pos, ins, 1);
    }
    case Rule::ImpR: {
      needArity(r, ps, 1);
      const Sequent& s = *ps[0];
      needLen(r, s, 1, "ImpR needs a discharged formula");
      return Sequent{std::vector<Formula>(s.antecedent.begin() + 1, s.antecedent.end()),
                     Formula::imp(s.antecedent[0], s.succedent)};
    }
  }
  fail(r, "unknown rule");
}

Proof Proof::make(Rule r, std::size_t pos, int side, std::optional<Formula> f, std::vector<Proof> kids) {
  std::vector<const Sequent*> ps;
  for (const Proof& k : kids) ps.push_back(&k.conclusion());
  auto n = std::make_shared<Node>(Node{r, pos, side, f, {}, conclude(r, pos, side, f, ps)});
  n->kids = std::move(kids);
  n->counts[static_cast<int>(r)] = 1;
  bool imp = false;
  for (const Formula& g : n->concl.antecedent) imp = imp || g.containsImplication();
  imp = imp || n->concl.succedent.containsImplication();
  for (const Proof& k : n->kids) {
    n->nodes = satAdd(n->nodes, k.nodeCount());
    n->cuts = satAdd(n->cuts, k.cutCount());
    n->degree = std::max(n->degree, k.degree());
    imp = imp || k.mentionsImplication();
    for (int i = 0; i < 12; ++i) n->counts[i] = satAdd(n->counts[i], k.n_->counts[i]);
  }
  if (r == Rule::Cut) {
    n->cuts = satAdd(n->cuts, 1);
    n->degree = std::max(n->degree, n->kids[0].succ().degree());
  }
  n->hasImp = imp;
  return Proof(std::move(n));
}

Proof Proof::ax(Formula f) { return make(Rule::Ax, 0, 0, std::move(f), {}); }
Proof Proof::botAx(Formula f) { return make(Rule::BotAx, 0, 0, std::move(f), {}); }
Proof Proof::c(std::size_t pos, Proof sub) { return make(Rule::C, pos, 0, std::nullopt, {std::move(sub)}); }
Proof Proof::w(std::size_t pos, Proof sub) { return make(Rule::W, pos, 0, std::nullopt, {std::move(sub)}); }
Proof Proof::k(std::size_t pos, Formula f, Proof sub) {
  return make(Rule::K, pos, 0, std::move(f), {std::move(sub)});
}
Proof Proof::cut(std::size_t pos, Proof l, Proof r) {
  return make(Rule::Cut, pos, 0, std::nullopt, {std::move(l), std::move(r)});
}
Proof Proof::andL(std::size_t pos, int side, Formula other, Proof sub) {
  return make(Rule::AndL, pos, side, std::move(other), {std::move(sub)});
}
Proof Proof::andR(Proof l, Proof r) { return make(Rule::AndR, 0, 0, std::nullopt, {std::move(l), std::move(r)}); }
Proof Proof::orL(std::size_t pos, Proof l, Proof r) {
  return make(Rule::OrL, pos, 0, std::nullopt, {std::move(l), std::move(r)});
}
Proof Proof::orR(int side, Formula other, Proof sub) {
  return make(Rule::OrR, 0, side, std::move(other), {std::move(sub)});
}
Proof Proof::impL(std::size_t pos, Proof l, Proof r) {
  return make(Rule::ImpL, pos, 0, std::nullopt, {std::move(l), std::move(r)});
}
Proof Proof::impR(Proof sub) { return make(Rule::ImpR, 0, 0, std::nullopt, {std::move(sub)}); }

std::uint64_t Proof::count(Rule r) const { return n_->counts[static_cast<int>(r)]; }

const Proof& Proof::at(const Path& path) const {
  const Proof* p = this;
  for (std::uint8_t i : path) {
    if (i >= p->arity()) throw ProofError("path " + pathStr(path) + " leaves the proof");
    p = &p->child(i);
  }
  return *p;
}

Proof Proof::rebuild(std::vector<Proof> kids) const {
  return make(rule(), pos(), side(), n_->f, std::move(kids));
}

namespace {

Proof replaceRec(const Proof& p, const Path& path, std::size_t depth, const Proof& repl) {
  if (depth == path.size()) return repl;
  std::uint8_t i = path[depth];
  if (i >= p.arity()) throw ProofError("path " + pathStr(path) + " leaves the proof");
  std::vector<Proof> kids;
  for (std::size_t j = 0; j < p.arity(); ++j) {
    kids.push_back(j == i ? replaceRec(p.child(j), path, depth + 1, repl) : p.child(j));
  }
  return p.rebuild(std::move(kids));
}

bool eqRec(const Proof& a, const Proof& b) {
  if (a.sameNode(b)) return true;
  if (a.rule() != b.rule() || a.pos() != b.pos() || a.side() != b.side() || a.arity() != b.arity() ||
      a.nodeCount() != b.nodeCount() || a.conclusion() != b.conclusion()) {
    return false;
  }
  switch (a.rule()) {
    case Rule::Ax: case Rule::BotAx: case Rule::K: case Rule::AndL: case Rule::OrR:
      if (a.formula() != b.formula()) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!eqRec(a.child(i), b.child(i))) return false;
  }
  return true;
}

}  // namespace

Proof Proof::replaceAt(const Path& path, const Proof& repl) const { return replaceRec(*this, path, 0, repl); }

bool operator==(const Proof& a, const Proof& b) { return eqRec(a, b); }

const Proof& validate(const Proof& p) {
  std::unordered_set<const void*> seen;
  std::vector<std::pair<const Proof*, Path>> stack{{&p, {}}};
  while (!stack.empty()) {
    auto [q, path] = stack.back();
    stack.pop_back();
    if (!seen.insert(q->id()).second) continue;
    std::vector<const Sequent*> ps;
    for (std::size_t i = 0; i < q->arity(); ++i) ps.push_back(&q->child(i).conclusion());
    std::optional<Formula> f;
    switch (q->rule()) {
      case Rule::Ax: case Rule::BotAx: case Rule::K: case Rule::AndL: case Rule::OrR:
        f = q->formula();
        break;
      default:
        break;
    }
    std::optional<Sequent> s;
    try {
      s = conclude(q->rule(), q->pos(), q->side(), f, ps);
    } catch (const ProofError& e) {
      throw ProofError("at " + pathStr(path) + ": " + e.what());
    }
    if (*s != q->conclusion()) throw ProofError("at " + pathStr(path) + ": cached conclusion differs");
    for (std::size_t i = 0; i < q->arity(); ++i) {
      Path cp = path;
      cp.push_back(static_cast<std::uint8_t>(i));
      stack.emplace_back(&q->child(i), std::move(cp));
    }
  }
  return p;
}

namespace {

void collectCuts(const Proof& p, Path& path, std::vector<Path>& out) {
  if (p.cutCount() == 0) return;
  if (p.rule() == Rule::Cut) out.push_back(path);
  for (std::size_t i = 0; i < p.arity(); ++i) {
    path.push_back(static_cast<std::uint8_t>(i));
    collectCuts(p.child(i), path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<Path> cutPaths(const Proof& p) {
  std::vector<Path> out;
  Path path;
  collectCuts(p, path, out);
  return out;
}

std::optional<Path> leftmostTopmostCut(const Proof& p) {
  if (p.cutCount() == 0) return std::nullopt;
  Path path;
  const Proof* q = &p;
  for (;;) {
    bool descended = false;
    for (std::size_t i = 0; i < q->arity(); ++i) {
      if (q->child(i).cutCount() > 0) {
        path.push_back(static_cast<std::uint8_t>(i));
        q = &q->child(i);
        descended = true;
        break;
      }
    }
    if (!descended) return path;
  }
}

Proof cs(Proof p, const std::vector<std::size_t>& positions) {
  for (std::size_t i : positions) p = Proof::c(i, std::move(p));
  return p;
}

Proof ws(Proof p, const std::vector<std::size_t>& positions) {
  for (std::size_t i : positions) p = Proof::w(i, std::move(p));
  return p;
}

Proof moveTo(Proof p, std::size_t from, std::size_t to) {
  if (from > to) {
    for (std::size_t i = from; i-- > to;) p = Proof::c(i, std::move(p));
  } else {
    for (std::size_t i = from; i < to; ++i) p = Proof::c(i, std::move(p));
  }
  return p;
}

Proof ksAt(Proof p, std::size_t pos, const std::vector<Formula>& fs) {
  for (std::size_t i = 0; i < fs.size(); ++i) p = Proof::k(pos + i, fs[i], std::move(p));
  return p;
}

Proof rearrange(const Proof& p, const std::vector<Formula>& target) {
  Proof q = p;
  // collapse repeated formulas onto their first occurrence
  for (std::size_t i = 0; i < q.ant().size(); ++i) {
    for (std::size_t j = i + 1; j < q.ant().size();) {
      if (q.ant()[j] == q.ant()[i]) {
        q = moveTo(q, j, i + 1);
        q = Proof::w(i, q);
      } else {
        ++j;
      }
    }
  }
  std::vector<bool> fromSource(q.ant().size(), true);
  for (std::size_t t = 0; t < target.size(); ++t) {
    const auto& cur = q.ant();
    std::size_t found = cur.size();
    for (std::size_t j = t; j < cur.size(); ++j) {
      if (fromSource[j] && cur[j] == target[t]) {
        found = j;
        break;
      }
    }
    bool alreadyPlaced = false;
    for (std::size_t j = 0; j < t; ++j) alreadyPlaced = alreadyPlaced || (fromSource[j] && cur[j] == target[t]);
    if (found < cur.size() && !alreadyPlaced) {
      q = moveTo(q, found, t);
      bool v = fromSource[found];
      fromSource.erase(fromSource.begin() + static_cast<std::ptrdiff_t>(found));
      fromSource.insert(fromSource.begin() + static_cast<std::ptrdiff_t>(t), v);
    } else {
      q = Proof::k(t, target[t], q);
      fromSource.insert(fromSource.begin() + static_cast<std::ptrdiff_t>(t), false);
    }
  }
  if (q.ant() != target) {
    throw ProofError("rearrange: " + p.conclusion().str() + " does not weaken to " + formulasStr(target));
  }
  return q;
}

}  // namespace cutelim
