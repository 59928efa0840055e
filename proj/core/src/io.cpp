#include "cutelim/io.hpp"

#include <cctype>
#include "json.hpp"

namespace cutelim {

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t col)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg), line_(line), col_(col) {}

namespace {

enum class Tok { LParen, RParen, Comma, Turnstile, And, Or, Arrow, Word, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) { advance(); }

  const Token& peek() const { return cur_; }
  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void bump() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void advance() {
    for (;;) {
      while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) bump();
      if (i_ < s_.size() && s_[i_] == ';') {
        while (i_ < s_.size() && s_[i_] != '\n') bump();
        continue;
      }
      break;
    }
    cur_ = {Tok::End, "", line_, col_};
    if (i_ >= s_.size()) return;
    char c = s_[i_];
    auto single = [&](Tok k, std::size_t len) {
      cur_.kind = k;
      cur_.text = std::string(s_.substr(i_, len));
      for (std::size_t j = 0; j < len; ++j) bump();
    };
    if (c == '(') return single(Tok::LParen, 1);
    if (c == ')') return single(Tok::RParen, 1);
    if (c == ',') return single(Tok::Comma, 1);
    if (c == '&') return single(Tok::And, 1);
    if (c == '|') return single(s_.substr(i_, 2) == "|-" ? Tok::Turnstile : Tok::Or, s_.substr(i_, 2) == "|-" ? 2 : 1);
    if (s_.substr(i_, 2) == "->") return single(Tok::Arrow, 2);
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_' || s_[j] == '-' ||
                               s_[j] == '.')) {
        if (s_[j] == '-' && j + 1 < s_.size() && s_[j + 1] == '>') break;
        ++j;
      }
      return single(Tok::Word, j - i_);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
  }

  std::string_view s_;
  std::size_t i_ = 0, line_ = 1, col_ = 1;
  Token cur_{Tok::End, "", 1, 1};
};

class Parser {
 public:
  explicit Parser(std::string_view s) : lx_(s) {}

  [[noreturn]] void error(const Token& t, const std::string& msg) { throw ParseError(msg, t.line, t.col); }

  Token expect(Tok k, const char* what) {
    Token t = lx_.next();
    if (t.kind != k) error(t, std::string("expected ") + what + (t.kind == Tok::End ? ", got end of input" : ", got '" + t.text + "'"));
    return t;
  }

  bool atEnd() const { return lx_.peek().kind == Tok::End; }
  const Token& peek() const { return lx_.peek(); }

  Formula formula() {
    Token t = lx_.next();
    if (t.kind == Tok::Word) {
      if (t.text == "bot") return Formula::bottom();
      try {
        return Formula::atom(t.text);
      } catch (const std::invalid_argument& e) {
        error(t, e.what());
      }
    }
    if (t.kind != Tok::LParen) error(t, "expected formula");
    Formula l = formula();
    Token op = lx_.next();
    Formula::Kind k;
    if (op.kind == Tok::And) k = Formula::Kind::And;
    else if (op.kind == Tok::Or) k = Formula::Kind::Or;
    else if (op.kind == Tok::Arrow) k = Formula::Kind::Imp;
    else error(op, "expected '&', '|' or '->'");
    Formula r = formula();
    expect(Tok::RParen, "')'");
    return Formula::binary(k, std::move(l), std::move(r));
  }

  Sequent sequent() {
    std::vector<Formula> ant;
    if (peek().kind != Tok::Turnstile) {
      ant.push_back(formula());
      while (peek().kind == Tok::Comma) {
        lx_.next();
        ant.push_back(formula());
      }
    }
    expect(Tok::Turnstile, "'|-'");
    Formula s = formula();
    return Sequent{std::move(ant), std::move(s)};
  }

  std::size_t number(const char* what) {
    Token t = expect(Tok::Word, what);
    if (t.text.empty() || t.text.size() > 9) error(t, std::string("expected ") + what);
    for (char c : t.text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) error(t, std::string("expected ") + what);
    }
    return std::stoul(t.text);
  }

  int side() {
    Token t = expect(Tok::Word, "side 1 or 2");
    if (t.text != "1" && t.text != "2") error(t, "side must be 1 or 2");
    return t.text[0] - '0';
  }

  // Called after '(' and the head word.
  Proof proofBody(const Token& head) {
    const std::string& h = head.text;
    try {
      Proof out = [&]() -> Proof {
        if (h == "ax") return Proof::ax(formula());
        if (h == "botax") return Proof::botAx(formula());
        if (h == "c") { auto p = number("position"); return Proof::c(p, proof()); }
        if (h == "w") { auto p = number("position"); return Proof::w(p, proof()); }
        if (h == "k") {
          auto p = number("position");
          Formula f = formula();
          return Proof::k(p, f, proof());
        }
        if (h == "cut") {
          auto p = number("position");
          Proof l = proof();
          return Proof::cut(p, l, proof());
        }
        if (h == "andl") {
          auto p = number("position");
          int s = side();
          Formula f = formula();
          return Proof::andL(p, s, f, proof());
        }
        if (h == "andr") { Proof l = proof(); return Proof::andR(l, proof()); }
        if (h == "orl") {
          auto p = number("position");
          Proof l = proof();
          return Proof::orL(p, l, proof());
        }
        if (h == "orr") {
          int s = side();
          Formula f = formula();
          return Proof::orR(s, f, proof());
        }
        if (h == "impl") {
          auto p = number("position");
          Proof l = proof();
          return Proof::impL(p, l, proof());
        }
        if (h == "impr") return Proof::impR(proof());
        error(head, "unknown rule '" + h + "'");
      }();
      expect(Tok::RParen, "')'");
      return out;
    } catch (const ProofError& e) {
      error(head, e.what());
    }
  }

  Proof proof() {
    expect(Tok::LParen, "'('");
    Token head = expect(Tok::Word, "rule name");
    return proofBody(head);
  }

  ProofDocument document() {
    std::optional<std::string> name;
    std::optional<Sequent> expectSeq;
    Token expectTok{Tok::End, "", 1, 1};
    for (;;) {
      expect(Tok::LParen, "'('");
      Token head = expect(Tok::Word, "rule name");
      if (head.text == "name") {
        if (name) error(head, "duplicate name");
        name = expect(Tok::Word, "name").text;
        expect(Tok::RParen, "')'");
        continue;
      }
      if (head.text == "expect") {
        if (expectSeq) error(head, "duplicate expect");
        expectTok = head;
        expectSeq = sequent();
        expect(Tok::RParen, "')'");
        continue;
      }
      Proof p = proofBody(head);
      if (!atEnd()) error(peek(), "trailing input after proof");
      if (expectSeq && *expectSeq != p.conclusion()) {
        error(expectTok, "proof concludes " + p.conclusion().str() + ", expected " + expectSeq->str());
      }
      return ProofDocument{std::move(name), std::move(expectSeq), std::move(p)};
    }
  }

 private:
  Lexer lx_;
};

void printRec(const Proof& p, std::size_t indent, std::string& out) {
  out += '(';
  out += ruleName(p.rule());
  auto num = [&](std::size_t v) { out += ' ' + std::to_string(v); };
  auto fml = [&](const Formula& f) { out += ' ' + f.str(); };
  switch (p.rule()) {
    case Rule::Ax: case Rule::BotAx: fml(p.formula()); break;
    case Rule::C: case Rule::W: case Rule::Cut: case Rule::OrL: case Rule::ImpL: num(p.pos()); break;
    case Rule::K: num(p.pos()); fml(p.formula()); break;
    case Rule::AndL: num(p.pos()); num(static_cast<std::size_t>(p.side())); fml(p.formula()); break;
    case Rule::OrR: num(static_cast<std::size_t>(p.side())); fml(p.formula()); break;
    case Rule::AndR: case Rule::ImpR: break;
  }
  for (std::size_t c = 0; c < p.arity(); ++c) {
    out += '\n';
    out.append(indent + 2, ' ');
    printRec(p.child(c), indent + 2, out);
  }
  out += ')';
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser ps(text);
  Formula f = ps.formula();
  if (!ps.atEnd()) ps.error(ps.peek(), "trailing input after formula");
  return f;
}

Sequent parse_sequent(std::string_view text) {
  Parser ps(text);
  Sequent s = ps.sequent();
  if (!ps.atEnd()) ps.error(ps.peek(), "trailing input after sequent");
  return s;
}

Proof parse_proof(std::string_view text) {
  Parser ps(text);
  Proof p = ps.proof();
  if (!ps.atEnd()) ps.error(ps.peek(), "trailing input after proof");
  return p;
}

ProofDocument parse_document(std::string_view text) { return Parser(text).document(); }

std::string print_proof(const Proof& p) {
  std::string out;
  printRec(p, 0, out);
  return out;
}

std::string print_document(const ProofDocument& d) {
  std::string out;
  if (d.name) out += "(name " + *d.name + ")\n";
  if (d.expect) out += "(expect " + d.expect->str() + ")\n";
  return out + print_proof(d.proof) + "\n";
}

std::string emit_trace(const std::vector<TraceRecord>& records, bool json) {
  std::string out;
  for (const auto& r : records) {
    if (json) {
      nlohmann::ordered_json j;
      j["step"] = r.step;
      j["phase"] = r.phase;
      j["label"] = r.label;
      j["endsequent"] = r.endsequent;
      j["nodes"] = r.nodes;
      j["cuts"] = r.cuts;
      j["degree"] = r.degree;
      j["max_rank"] = r.maxRank;
      out += j.dump();
    } else {
      out += std::to_string(r.step) + '\t' + r.phase + '\t' + r.label + '\t' + r.endsequent + '\t' +
             std::to_string(r.nodes) + '\t' + std::to_string(r.cuts) + '\t' + std::to_string(r.degree) + '\t' +
             std::to_string(r.maxRank);
    }
    out += '\n';
  }
  return out;
}

}  // namespace cutelim
