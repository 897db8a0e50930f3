#include "grsc/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace grsc {

LabelledGraph parse_graph(std::istream& in) {
  Alphabet alphabet;
  bool have_alphabet = false;
  GraphBuilder* builder = nullptr;
  // Builder is created once the alphabet line is seen.
  std::optional<GraphBuilder> b;
  std::map<int, int> local_to_global;  // within the current component
  bool in_component = false;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    auto fail = [&](const std::string& msg) {
      throw InputError("line " + std::to_string(lineno) + ": " + msg);
    };

    if (kw == "alphabet") {
      if (have_alphabet) fail("duplicate alphabet line");
      std::vector<std::string> letters;
      std::string t;
      while (ls >> t) letters.push_back(t);
      if (letters.empty()) fail("empty alphabet");
      alphabet = Alphabet(letters);
      b.emplace(alphabet);
      builder = &*b;
      have_alphabet = true;
    } else if (kw == "component") {
      if (!have_alphabet) fail("component before alphabet");
      std::string name;
      ls >> name;
      builder->begin_component(name);
      local_to_global.clear();
      in_component = true;
    } else if (kw == "v") {
      if (!in_component) fail("vertex outside component");
      int id;
      if (!(ls >> id) || id < 0) fail("bad vertex id");
      if (local_to_global.count(id)) fail("duplicate vertex id");
      local_to_global[id] = builder->add_vertex();
    } else if (kw == "e") {
      if (!in_component) fail("edge outside component");
      int u, v;
      std::string letter;
      if (!(ls >> u >> v >> letter)) fail("bad edge line");
      auto iu = local_to_global.find(u), iv = local_to_global.find(v);
      if (iu == local_to_global.end() || iv == local_to_global.end())
        fail("edge endpoint not declared");
      if (alphabet.index(letter) < 0) fail("unknown letter: " + letter);
      builder->add_edge(iu->second, iv->second, letter);
    } else {
      fail("unknown directive: " + kw);
    }
  }
  if (!have_alphabet) throw InputError("missing alphabet line");
  return builder->build();
}

LabelledGraph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

LabelledGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file: " + path);
  return parse_graph(in);
}

std::string serialize_graph(const LabelledGraph& g) {
  std::ostringstream out;
  out << "alphabet";
  for (const auto& t : g.alphabet().tokens()) out << ' ' << t;
  out << '\n';
  for (int c = 0; c < g.num_components(); ++c) {
    out << "component " << g.component_name(c) << '\n';
    const auto& verts = g.component_vertices(c);
    std::map<int, int> local;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
      local[verts[i]] = i;
      out << "v " << i << '\n';
    }
    for (int e = 0; e < g.num_edges(); ++e) {
      const Edge& ed = g.edge(e);
      if (g.component_of(ed.src) != c) continue;
      out << "e " << local[ed.src] << ' ' << local[ed.dst] << ' '
          << g.alphabet().token(ed.letter) << '\n';
    }
  }
  return out.str();
}

void save_graph_file(const LabelledGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write graph file: " + path);
  out << serialize_graph(g);
}

}  // namespace grsc
