#ifndef GRSC_GRAPH_IO_HPP
#define GRSC_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "grsc/graph.hpp"

namespace grsc {

/// Line-oriented graph text format:
///   alphabet a b c
///   component K1
///   v 0
///   e 0 1 a    # directed edge, per-component vertex ids
/// '#' starts a comment. Vertex ids within a component must be declared
/// before use; they map to dense global ids in declaration order.
LabelledGraph parse_graph(std::istream& in);
LabelledGraph parse_graph_string(const std::string& text);
LabelledGraph load_graph_file(const std::string& path);

std::string serialize_graph(const LabelledGraph& g);
void save_graph_file(const LabelledGraph& g, const std::string& path);

}  // namespace grsc

#endif
