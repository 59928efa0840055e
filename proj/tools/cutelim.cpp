#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cutelim/generate.hpp"
#include "cutelim/io.hpp"
#include "cutelim/maximal.hpp"
#include "cutelim/mix.hpp"
#include "cutelim/rank.hpp"
#include "cutelim/wnormal.hpp"
#include "cutelim/zucker.hpp"

using namespace cutelim;

namespace {

struct Common {
  std::string trace;
  std::string out;
  bool json = false;
  std::size_t maxSteps = 5000000;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Proof load(const std::string& path) {
  try {
    return parse_document(slurp(path)).proof;
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + std::string(e.what()), e.line(), e.column());
  }
}

std::string proofText(const Proof& p) { return print_proof(p) + "\n"; }

void write(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw std::runtime_error("cannot write " + c.out);
  f << text;
}

void dumpTrace(const Common& c, const Trace& t) {
  if (c.trace.empty()) return;
  std::ofstream f(c.trace);
  if (!f) throw std::runtime_error("cannot write " + c.trace);
  f << emit_trace(t.records(), c.json);
}

std::string pathOrRoot(const Path& p) { return p.empty() ? "root" : pathStr(p); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cut elimination for the sequent systems G, Gr and Gz"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--trace", c.trace, "write the reduction trace here");
  app.add_option("--out", c.out, "write the resulting proof here instead of stdout");
  app.add_flag("--json", c.json, "JSON lines for traces and reports");
  app.add_option("--max-steps", c.maxSteps, "step budget")->check(CLI::PositiveNumber);

  std::string file, rightFile, formula, style = "poly";
  std::uint64_t seed = 0;
  std::size_t budget = 30;
  bool noImp = false, withCut = false, stats = false;

  auto* check = app.add_subcommand("check", "validate a proof and print its endsequent");
  auto* rank = app.add_subcommand("rank", "left, right and total rank of every cut");
  auto* wnormal = app.add_subcommand("wnormal", "phase 1: W-normal form");
  auto* maxim = app.add_subcommand("maximalize", "phase 2: make every cut maximal");
  auto* reduce = app.add_subcommand("reduce-degree", "phase 3: principal reductions on maximal cuts");
  auto* elim = app.add_subcommand("eliminate", "all three phases until cut-free");
  auto* zucker = app.add_subcommand("zucker", "implicationless elimination with contraction indices");
  auto* statsCmd = app.add_subcommand("stats", "rule counts");
  for (auto* s : {check, rank, wnormal, maxim, reduce, elim, zucker, statsCmd}) {
    s->add_option("file", file, "proof file, - for stdin")->required();
    s->fallthrough();
  }
  auto* mix = app.add_subcommand("mix", "rebuild a mix from cuts, interchanges and contractions");
  mix->add_option("left", file, "proof of the left premise")->required();
  mix->add_option("right", rightFile, "proof of the right premise")->required();
  mix->add_option("--formula", formula, "mix formula")->required();
  mix->add_option("--style", style, "poly or mono")->check(CLI::IsMember({"poly", "mono"}));
  mix->add_flag("--stats", stats, "print rule counts instead of the proof");
  mix->fallthrough();
  auto* gen = app.add_subcommand("gen", "random proof");
  gen->add_option("--seed", seed)->required();
  gen->add_option("--budget", budget)->required();
  gen->add_flag("--no-imp", noImp, "no implication anywhere");
  gen->add_flag("--with-cut", withCut, "force a cut at the root");
  gen->fallthrough();

  CLI11_PARSE(app, argc, argv);

  Trace trace;
  Trace* tp = c.trace.empty() ? nullptr : &trace;
  try {
    if (*check) {
      Proof p = load(file);
      validate(p);
      if (c.json) {
        nlohmann::ordered_json j;
        j["endsequent"] = p.conclusion().str();
        j["nodes"] = p.nodeCount();
        j["cuts"] = p.cutCount();
        j["degree"] = p.degree();
        write(c, j.dump() + "\n");
      } else {
        write(c, p.conclusion().str() + "\n");
      }
    } else if (*rank) {
      Proof p = load(file);
      std::string text;
      for (const auto& r : maximality_report(p)) {
        if (c.json) {
          nlohmann::ordered_json j;
          j["cut"] = pathOrRoot(r.path);
          j["left"] = r.rank.left;
          j["right"] = r.rank.right;
          j["total"] = r.rank.total;
          j["maximal"] = r.maximal;
          text += j.dump() + "\n";
        } else {
          text += pathOrRoot(r.path) + '\t' + std::to_string(r.rank.left) + '\t' + std::to_string(r.rank.right) + '\t' +
                  std::to_string(r.rank.total) + '\n';
        }
      }
      write(c, text);
    } else if (*wnormal) {
      write(c, proofText(w_normalize(load(file), {c.maxSteps, tp})));
    } else if (*maxim) {
      write(c, proofText(maximalize(load(file), {c.maxSteps, tp})));
    } else if (*reduce) {
      write(c, proofText(reduce_degree(load(file), {c.maxSteps, tp})));
    } else if (*elim) {
      write(c, proofText(eliminate_cuts(load(file), {c.maxSteps, tp}).proof));
    } else if (*zucker) {
      ZProof z = eliminate_cut_z(to_zucker(load(file)), {c.maxSteps, tp});
      write(c, proofText(erase_indices(z)));
    } else if (*statsCmd) {
      auto s = reconstruction_stats(load(file));
      if (c.json) {
        nlohmann::ordered_json j;
        j["cuts"] = s.cuts;
        j["w"] = s.w;
        j["c"] = s.c;
        j["k"] = s.k;
        j["nodes"] = s.nodes;
        write(c, j.dump() + "\n");
      } else {
        write(c, "cuts " + std::to_string(s.cuts) + "\nw " + std::to_string(s.w) + "\nc " + std::to_string(s.c) +
                     "\nk " + std::to_string(s.k) + "\nnodes " + std::to_string(s.nodes) + "\n");
      }
    } else if (*mix) {
      MixApp m{load(file), load(rightFile), parse_formula(formula)};
      Proof p = style == "mono" ? reconstruct_monotomic(m) : reconstruct_polytomic(m);
      if (stats) {
        auto s = reconstruction_stats(p);
        write(c, "cuts " + std::to_string(s.cuts) + "\nw " + std::to_string(s.w) + "\nc " + std::to_string(s.c) +
                     "\nk " + std::to_string(s.k) + "\nnodes " + std::to_string(s.nodes) + "\n");
      } else {
        write(c, proofText(p));
      }
    } else if (*gen) {
      GenOptions o;
      o.allowImp = !noImp;
      write(c, proofText(withCut ? generate_proof_with_cut(seed, budget, o) : generate_proof(seed, budget, o)));
    }
    dumpTrace(c, trace);
  } catch (const StepBudgetExceeded& e) {
    dumpTrace(c, trace);
    std::cerr << "cutelim: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "cutelim: " << e.what() << "\n";
    return 1;
  } catch (const ProofError& e) {
    std::cerr << "cutelim: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "cutelim: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "cutelim: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
