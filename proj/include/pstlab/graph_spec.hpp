#pragma once

#include <string>

#include "pstlab/graph.hpp"

namespace pstlab {

/// Graph designator grammar shared by the CLI and tests:
///   name:<catalog key>   one of the thirteen plus w8
///   file:<path>          edge-list file
///   gp:<n>,<k>           generalized Petersen graph
///   hypercube:<k>        P2 Cartesian power
///   p3grid:<k>           P3 Cartesian power
///   path:<n> cycle:<n>   the elementary families
struct GraphSpec {
  enum class Scheme { name, file, gp, hypercube, p3grid, path, cycle };
  Scheme scheme;
  std::string text_payload;  // name / file path
  int a = 0, b = 0;          // numeric parameters
};

GraphSpec parse_graph_spec(const std::string& spec);
Graph resolve(const GraphSpec& spec);
Graph resolve_graph_spec(const std::string& spec);

}  // namespace pstlab
