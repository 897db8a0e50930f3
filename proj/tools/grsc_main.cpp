// grsc: command-line front end for the graphical small cancellation toolkit.
//
// Exit codes: 0 = property holds / verdict reached, 1 = property fails,
// 2 = budget exhausted / unknown, 3 = input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "grsc/corpus.hpp"
#include "grsc/geometry.hpp"
#include "grsc/graph_io.hpp"
#include "grsc/report_json.hpp"

namespace grsc {
namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInputError = 3;

std::int64_t env_budget(const char* name, std::int64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoll(v);
  } catch (const std::exception&) {
    throw InputError(std::string(name) + ": not an integer: " + v);
  }
}

void emit(const std::string& subcommand, Json config, Json report) {
  std::cout << report_envelope(subcommand, std::move(config), std::move(report))
                   .dump(2)
            << "\n";
}

// Condition tag grammar: C<n>, Cp:<p/q>, Gr<n>, Grp:<p/q>.
ConditionReport run_condition(const PieceIndex& idx, const std::string& cond,
                              std::int64_t budget) {
  auto starts_with = [&](const std::string& p) {
    return cond.rfind(p, 0) == 0;
  };
  try {
    if (starts_with("Cp:"))
      return check_Cprime(idx, Rational::parse(cond.substr(3)), budget);
    if (starts_with("Grp:"))
      return check_Gr_prime(idx, Rational::parse(cond.substr(4)), budget);
    if (starts_with("Gr")) return check_Gr_n(idx, std::stoi(cond.substr(2)), budget);
    if (starts_with("C")) return check_Cn(idx, std::stoi(cond.substr(1)), budget);
  } catch (const std::invalid_argument&) {
  }
  throw InputError("unknown condition tag: " + cond);
}

CondTag solver_cond(const std::string& cond) {
  if (cond == "Gr7" || cond == "C7") return CondTag::Gr7;
  if (cond == "Gr6" || cond == "C6") return CondTag::Gr6;
  if (cond == "Grp:1/6" || cond == "Cp:1/6") return CondTag::Grp16;
  throw InputError("no verified area bound for condition tag: " + cond);
}

struct WordKey {
  bool operator()(const Word& a, const Word& b) const {
    return word_less(a, b);
  }
};

// All maximal piece words up to the length cap, with witness starts.
Json pieces_report(const LabelledGraph& g, bool essential, int max_len) {
  PieceIndex idx(g);
  std::set<Word, WordKey> all;
  std::vector<Word> frontier;
  for (int i = 0; i < g.alphabet().size(); ++i)
    for (int s : {-1, 1}) frontier.push_back({SignedLetter{i, s}});
  auto admits = [&](const Word& w) {
    PieceReport r = is_piece(idx, w);
    return essential ? r.essential : r.piece;
  };
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      if (!admits(w)) continue;
      all.insert(w);
      for (int i = 0; i < g.alphabet().size(); ++i)
        for (int s : {-1, 1}) {
          Word e = w;
          e.push_back({i, s});
          if (is_reduced(e)) next.push_back(std::move(e));
        }
    }
    frontier = std::move(next);
  }
  Json out = Json::array();
  for (const Word& w : all) {
    bool maximal = true;
    for (int i = 0; i < g.alphabet().size() && maximal; ++i)
      for (int s : {-1, 1}) {
        Word r = w;
        r.push_back({i, s});
        Word l = w;
        l.insert(l.begin(), SignedLetter{i, s});
        if ((is_reduced(r) && all.count(r)) || (is_reduced(l) && all.count(l)))
          maximal = false;
      }
    if (!maximal) continue;
    out.push_back(json_of(g.alphabet(), is_piece(idx, w)));
  }
  return Json{{"essential", essential}, {"max_len", max_len},
              {"maximal_pieces", out}};
}

int run(int argc, char** argv) {
  CLI::App app{"graphical small cancellation verification toolkit"};
  app.require_subcommand(1);
  int threads = 0;  // accepted for interface stability; runs are sequential
  app.add_option("--threads", threads,
                 "worker threads (results are identical for any value)");

  std::int64_t cycle_budget = env_budget("GRSC_BUDGET_CYCLES", 1000000);
  std::int64_t node_budget = env_budget("GRSC_BUDGET_NODES", 10000000);

  // check
  auto* check = app.add_subcommand("check", "verify a condition on a graph");
  std::string check_graph, check_cond;
  check->add_option("graph", check_graph)->required();
  check->add_option("--cond", check_cond, "C<n> | Cp:p/q | Gr<n> | Grp:p/q")
      ->required();
  check->add_option("--budget", cycle_budget);

  // pieces
  auto* pieces = app.add_subcommand("pieces", "list maximal pieces");
  std::string pieces_graph;
  bool pieces_essential = false;
  int pieces_maxlen = 8;
  pieces->add_option("graph", pieces_graph)->required();
  pieces->add_flag("--essential", pieces_essential);
  pieces->add_option("--max-len", pieces_maxlen);

  // present
  auto* present = app.add_subcommand("present", "extract a presentation");
  std::string present_graph, present_mode = "simple";
  present->add_option("graph", present_graph)->required();
  present->add_option("--mode", present_mode)
      ->check(CLI::IsMember({"simple", "pi1"}));

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "classify the group");
  std::string classify_graph;
  bool classify_witness = false;
  classify_cmd->add_option("graph", classify_graph)->required();
  classify_cmd->add_flag("--witness", classify_witness);
  classify_cmd->add_option("--budget", cycle_budget);

  // word
  auto* word_cmd = app.add_subcommand("word", "bounded word problem");
  std::string word_graph, word_cond, word_text, word_diagram_out;
  word_cmd->add_option("graph", word_graph)->required();
  word_cmd->add_option("--cond", word_cond)->required();
  word_cmd->add_option("--word", word_text)->required();
  word_cmd->add_option("--emit-diagram", word_diagram_out);
  word_cmd->add_option("--budget", node_budget);

  // diagram verify
  auto* diagram_cmd = app.add_subcommand("diagram", "diagram operations");
  auto* verify = diagram_cmd->add_subcommand("verify", "validate a diagram");
  std::string verify_file, verify_graph;
  bool verify_gr = false;
  verify->add_option("diagram", verify_file)->required();
  verify->add_option("--graph", verify_graph)->required();
  verify->add_flag("--gr", verify_gr);

  // embed
  auto* embed = app.add_subcommand("embed", "certified component embedding");
  std::string embed_graph, embed_component;
  int embed_radius = 0;
  embed->add_option("graph", embed_graph)->required();
  embed->add_option("--component", embed_component)->required();
  embed->add_option("--radius", embed_radius)->required();

  // lacunary
  auto* lacunary = app.add_subcommand("lacunary", "girth sparseness / selection");
  std::string lac_graph, lac_mode = "girth", lac_K = "3";
  lacunary->add_option("graph", lac_graph)->required();
  lacunary->add_option("--mode", lac_mode)
      ->check(CLI::IsMember({"girth", "search"}));
  lacunary->add_option("--K", lac_K, "gap ratio for the sparseness check");

  // gen
  auto* gen = app.add_subcommand("gen", "write a corpus graph");
  std::string gen_kind, gen_out, gen_alphabet = "a b c", gen_letter = "a";
  std::vector<std::string> gen_relators;
  int gen_k = 3, gen_p = 6, gen_n = 1;
  gen->add_option("kind", gen_kind)
      ->required()
      ->check(CLI::IsMember(
          {"figure1", "classical", "figure5", "cayley-cycle", "four-cycles"}));
  gen->add_option("-o,--out", gen_out)->required();
  gen->add_option("--alphabet", gen_alphabet, "classical: alphabet tokens");
  gen->add_option("--relator", gen_relators, "classical: relator word (repeat)");
  gen->add_option("--k", gen_k, "cayley-cycle: cycle length");
  gen->add_option("--letter", gen_letter, "cayley-cycle: edge letter");
  gen->add_option("--p", gen_p, "figure5: seed block count");
  gen->add_option("--n", gen_n, "figure5: family index");

  CLI11_PARSE(app, argc, argv);

  if (*check) {
    LabelledGraph g = load_graph_file(check_graph);
    PieceIndex idx(g);
    ConditionReport r = run_condition(idx, check_cond, cycle_budget);
    emit("check",
         Json{{"graph", check_graph}, {"cond", check_cond},
              {"budget", cycle_budget}},
         json_of(g.alphabet(), r));
    return r.holds ? kExitHolds : kExitFails;
  }

  if (*pieces) {
    LabelledGraph g = load_graph_file(pieces_graph);
    emit("pieces",
         Json{{"graph", pieces_graph}, {"essential", pieces_essential},
              {"max_len", pieces_maxlen}},
         pieces_report(g, pieces_essential, pieces_maxlen));
    return kExitHolds;
  }

  if (*present) {
    LabelledGraph g = load_graph_file(present_graph);
    Presentation p = present_mode == "pi1" ? relators_pi1(g)
                                           : relators_simple_cycles(g, cycle_budget);
    emit("present", Json{{"graph", present_graph}, {"mode", present_mode}},
         json_of(p));
    return kExitHolds;
  }

  if (*classify_cmd) {
    LabelledGraph g = load_graph_file(classify_graph);
    Classification c = classify(g, cycle_budget);
    Json j = json_of(g.alphabet(), c);
    if (!classify_witness) j.erase("witness");
    emit("classify",
         Json{{"graph", classify_graph}, {"witness", classify_witness},
              {"budget", cycle_budget}},
         std::move(j));
    return c.verdict == Verdict::Inconclusive ? kExitUnknown : kExitHolds;
  }

  if (*word_cmd) {
    LabelledGraph g = load_graph_file(word_graph);
    Presentation p = relators_simple_cycles(g, cycle_budget);
    Word w = free_reduce(parse_word(g.alphabet(), word_text));
    NontrivialityCertifier cert(p);
    SolveOptions opts;
    opts.node_budget = node_budget;
    opts.certifier = &cert;
    WordVerdict v = solve(w, p, solver_cond(word_cond), opts);
    if (!word_diagram_out.empty() && v.kind == WordVerdict::Kind::Trivial) {
      std::ofstream out(word_diagram_out);
      out << diagram_to_json(derivation_to_diagram(w, v.derivation, p)) << "\n";
    }
    emit("word",
         Json{{"graph", word_graph}, {"cond", word_cond}, {"word", word_text},
              {"budget", node_budget}},
         json_of(p, v));
    switch (v.kind) {
      case WordVerdict::Kind::Trivial:
        return kExitHolds;
      case WordVerdict::Kind::Nontrivial:
        return kExitFails;
      case WordVerdict::Kind::Unknown:
        return kExitUnknown;
    }
  }

  if (*verify) {
    LabelledGraph g = load_graph_file(verify_graph);
    std::ifstream in(verify_file);
    if (!in) throw InputError("cannot open diagram file: " + verify_file);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    Json config{{"diagram", verify_file}, {"graph", verify_graph},
                {"gr", verify_gr}};
    try {
      Diagram d = diagram_from_json(text);
      DiagramReport r = validate(d);
      PieceIndex idx(g);
      auto lifts = lift_faces(d, idx, verify_gr);
      Json j = json_of(r);
      j["faces_lift"] = static_cast<int>(lifts.size());
      j["boundary_word"] = word_str(d.alphabet, d.boundary_word());
      emit("diagram verify", std::move(config), std::move(j));
      return kExitHolds;
    } catch (const NotPlanar& e) {
      emit("diagram verify", std::move(config),
           Json{{"valid", false}, {"cause", "NotPlanar"}, {"detail", e.what()}});
      return kExitFails;
    } catch (const NotSimplyConnected& e) {
      emit("diagram verify", std::move(config),
           Json{{"valid", false},
                {"cause", "NotSimplyConnected"},
                {"detail", e.what()}});
      return kExitFails;
    } catch (const NoLift& e) {
      emit("diagram verify", std::move(config),
           Json{{"valid", false}, {"cause", "NoLift"}, {"detail", e.what()}});
      return kExitFails;
    }
  }

  if (*embed) {
    LabelledGraph g = load_graph_file(embed_graph);
    int comp = g.component_index(embed_component);
    if (comp < 0) throw InputError("no component named " + embed_component);
    Presentation p = relators_pi1(g);
    NontrivialityCertifier cert(p);
    EmbeddingReport r = embed_component_certified(g, comp, p, cert, embed_radius);
    emit("embed",
         Json{{"graph", embed_graph}, {"component", embed_component},
              {"radius", embed_radius}},
         json_of(r));
    if (!r.certified) return kExitUnknown;
    return r.injective && r.isometric ? kExitHolds : kExitFails;
  }

  if (*lacunary) {
    LabelledGraph g = load_graph_file(lac_graph);
    std::string mode = lac_mode == "girth" ? "girth-arith" : "word-search";
    SolveOptions opts;
    opts.node_budget = node_budget;
    LacunaryReport r = lacunary_select(g, mode, {}, opts);
    std::vector<std::int64_t> girths = r.girths;
    SparseCheckResult s = sparse_check(girths, Rational::parse(lac_K));
    Json j;
    j["selection"] = json_of(r);
    j["sparse_check"] = json_of(s);
    emit("lacunary",
         Json{{"graph", lac_graph}, {"mode", lac_mode}, {"K", lac_K}},
         std::move(j));
    return r.status == "all-selected" ? kExitHolds : kExitUnknown;
  }

  if (*gen) {
    LabelledGraph g = [&] {
      if (gen_kind == "figure1") return gen_figure1();
      if (gen_kind == "cayley-cycle") return gen_cayley_cycle(gen_k, gen_letter);
      if (gen_kind == "four-cycles") return gen_four_cycles();
      if (gen_kind == "figure5") {
        auto family = gen_figure5(gen_p, gen_n);
        return family.at(gen_n - 1).graph;
      }
      // classical
      std::istringstream toks(gen_alphabet);
      std::vector<std::string> letters{std::istream_iterator<std::string>(toks),
                                       std::istream_iterator<std::string>()};
      Alphabet a(letters);
      std::vector<Word> rels;
      for (const auto& r : gen_relators) rels.push_back(parse_word(a, r));
      if (rels.empty()) throw InputError("classical: at least one --relator");
      return gen_classical(a, rels);
    }();
    save_graph_file(g, gen_out);
    emit("gen",
         Json{{"kind", gen_kind}, {"out", gen_out}},
         Json{{"vertices", g.num_vertices()}, {"edges", g.num_edges()},
              {"components", g.num_components()}});
    return kExitHolds;
  }

  return kExitInputError;
}

}  // namespace
}  // namespace grsc

int main(int argc, char** argv) {
  try {
    return grsc::run(argc, argv);
  } catch (const grsc::BudgetExceeded& e) {
    std::cout << grsc::Json{{"error", "BudgetExceeded"}, {"detail", e.what()}}
                     .dump(2)
              << "\n";
    return 2;
  } catch (const grsc::Error& e) {
    std::cout << grsc::Json{{"error", "InputError"}, {"detail", e.what()}}.dump(2)
              << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cout << grsc::Json{{"error", "Internal"}, {"detail", e.what()}}.dump(2)
              << "\n";
    return 3;
  }
}
