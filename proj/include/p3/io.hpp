#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "p3/graph.hpp"

namespace p3 {

/**
   Plain-text graph document:

     # comment lines and blank lines are ignored
     4                 vertex count, first content line
     0 1               one edge per line
     1 2
     order: 0 1 2 3    optional, a unit interval order
     labels: a b c d   optional, one label per vertex

   A stream of several documents separates them with a line "---".
 */
struct GraphDocument {
  Graph graph;
  std::optional<std::vector<Vertex>> order;
  std::vector<std::string> labels;  // empty or one per vertex

  bool operator==(const GraphDocument&) const = default;
};

// Throws ParseError (with the 1-based line number) on malformed lines,
// out-of-range vertices, self-loops, duplicate edges, a bad order line
// (including one that fails build_model) or a wrong label count.
GraphDocument parse_graph(std::string_view text);
std::vector<GraphDocument> parse_documents(std::string_view text);

// Edges in sorted order; parse_graph(serialize(d)) == d.
std::string serialize(const GraphDocument& doc);
std::string serialize_documents(const std::vector<GraphDocument>& docs);

std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// "v: w1 w2 ..." per vertex, one line each.
std::string adjacency_dump(const Graph& g);

}  // namespace p3
