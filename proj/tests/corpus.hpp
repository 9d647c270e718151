#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphpoly/graph.hpp"

namespace corpus {

struct NamedGraph {
  std::string name;
  graphpoly::Graph graph;
};

graphpoly::Graph triangle();
graphpoly::Graph bubble();  // 2 vertices, 2 parallel edges
graphpoly::Graph banana(std::uint32_t k);
graphpoly::Graph k4();  // the wheel with 3 spokes, same edge order as wheel(3)
graphpoly::Graph two_bubbles_at_vertex();

// Connected loopless multigraphs with 1..max_edges edges, one per
// isomorphism class.
std::vector<graphpoly::Graph> small_connected(std::size_t max_edges);

// Connected multigraphs with 1..max_edges edges from a fixed seed.
// Roughly one in eight carries a self-loop.
std::vector<graphpoly::Graph> random_connected(std::size_t count, std::size_t max_edges,
                                               std::uint64_t seed);

// small_connected(6) + random_connected(200, 10) + wheel(3..6).
std::vector<NamedGraph> standard();

// Members of standard() with at most max_edges edges.
std::vector<NamedGraph> standard_up_to(std::size_t max_edges);

}  // namespace corpus
