#ifndef GRSC_TESTS_HELPERS_HPP
#define GRSC_TESTS_HELPERS_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "grsc/corpus.hpp"
#include "grsc/graph.hpp"
#include "grsc/graph_io.hpp"
#include "grsc/word.hpp"

namespace grsc_test {

using namespace grsc;

inline Word W(const Alphabet& a, const std::string& text) {
  return parse_word(a, text);
}

// All reduced paths from every start vertex, up to max_len, as
// (start, label) -> count; used by determinism oracles.
inline std::map<std::pair<int, std::string>, int> path_census(
    const LabelledGraph& g, int max_len) {
  std::map<std::pair<int, std::string>, int> census;
  struct Frame {
    int at;
    std::vector<Step> steps;
  };
  for (int s = 0; s < g.num_vertices(); ++s) {
    std::vector<Frame> stack{{s, {}}};
    while (!stack.empty()) {
      Frame f = stack.back();
      stack.pop_back();
      if (!f.steps.empty()) {
        PathRef p{s, f.steps};
        ++census[{s, word_str(g.alphabet(), g.label(p))}];
      }
      if (static_cast<int>(f.steps.size()) == max_len) continue;
      for (Step st : g.steps_at(f.at)) {
        if (!f.steps.empty()) {
          Step last = f.steps.back();
          if (st.edge == last.edge && st.forward != last.forward) continue;
        }
        Frame nf = f;
        nf.steps.push_back(st);
        nf.at = g.step_target(st);
        stack.push_back(nf);
      }
    }
  }
  return census;
}

// A small fixture: two disjoint cycles over distinct per-edge letters.
inline LabelledGraph distinct_letter_cycle(int n, const std::string& prefix) {
  std::vector<std::string> letters;
  for (int i = 0; i < n; ++i) letters.push_back(prefix + std::to_string(i));
  GraphBuilder b{Alphabet(letters)};
  b.begin_component(prefix);
  std::vector<int> vs(n);
  for (int i = 0; i < n; ++i) vs[i] = b.add_vertex();
  for (int i = 0; i < n; ++i) b.add_edge(vs[i], vs[(i + 1) % n], i);
  return b.build();
}

}  // namespace grsc_test

#endif
