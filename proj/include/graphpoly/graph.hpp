#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace graphpoly {

inline constexpr std::size_t kMaxEdges = 128;

// Enumeration-based operations walk all 2^E edge subsets.
inline constexpr std::size_t kMaxEnumerationEdges = 24;

using EdgeSet = std::bitset<kMaxEdges>;

struct Edge {
  std::uint32_t tail = 0;
  std::uint32_t head = 0;

  bool is_self_loop() const { return tail == head; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Oriented multigraph. Edge i is labelled by its position and carries the
// polynomial variable with index i. Self-loops and parallel edges are allowed.
class Graph {
 public:
  Graph() = default;
  Graph(std::uint32_t vertex_count, std::vector<Edge> edges);

  std::uint32_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  EdgeSet all_edges() const;

  // "v=n; e0:(u,v); e1:(u,v); ..."
  std::string to_text() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::uint32_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// Edge subset of a parent graph. The parent must outlive the subgraph.
class Subgraph {
 public:
  Subgraph(const Graph& parent, EdgeSet edges);

  const Graph& parent() const { return *parent_; }
  const EdgeSet& edges() const { return edges_; }
  std::size_t size() const { return edges_.count(); }
  bool contains(std::size_t e) const { return edges_.test(e); }
  std::vector<std::size_t> edge_list() const;

  // Hex form of the bitmask, lowest edge in the lowest bit.
  std::string to_hex() const;

  friend bool operator==(const Subgraph& a, const Subgraph& b) {
    return a.parent_ == b.parent_ && a.edges_ == b.edges_;
  }

 private:
  const Graph* parent_;
  EdgeSet edges_;
};

Subgraph make_subgraph(const Graph& g, std::initializer_list<std::size_t> edges);
Subgraph make_subgraph(const Graph& g, std::uint64_t mask);

std::string edge_set_hex(const EdgeSet& s);

std::size_t loop_rank(const Graph& g);
std::size_t loop_rank(const Subgraph& s);
std::size_t component_count(const Graph& g);
// Components spanned by the subgraph's edges; the empty subgraph has none.
std::size_t component_count(const Subgraph& s);

// Loop rank of the edge set `mask` (bit i = edge i) of g, E <= 64.
std::size_t loop_rank_of_mask(const Graph& g, std::uint64_t mask);

bool is_connected(const Graph& g);

// All spanning forests in ascending bitmask order. Refuses E > 24.
std::vector<Subgraph> spanning_forests(const Graph& g);

// True iff `s` is a spanning forest: acyclic and meeting every component.
bool is_spanning_forest(const Subgraph& s);

// The spanning forest found by scanning edges in increasing order and
// keeping every edge that joins two different components.
Subgraph first_spanning_forest(const Graph& g);

// Old edge index -> new edge index after removing the edges of `removed`;
// removed edges map to nullopt.
std::vector<std::optional<std::size_t>> edge_compaction(const Graph& g,
                                                        const EdgeSet& removed);

// Gamma // G: each connected component of `s` collapses to one vertex.
// Remaining edges keep their relative order; new self-loops are kept.
Graph contract(const Graph& g, const Subgraph& s);

// Removes the edges of `s`, keeping every vertex.
Graph delete_edges(const Graph& g, const Subgraph& s);

// The graph on the same vertices with only the edges of `s`.
Graph restrict_to(const Graph& g, const Subgraph& s);

// Disjoint union and one-vertex join (vertex `a` of g1 glued to `b` of g2).
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph vertex_join(const Graph& g1, std::uint32_t a, const Graph& g2, std::uint32_t b);

// Same graph with edges permuted: new edge k is old edge order[k].
Graph permute_edges(const Graph& g, const std::vector<std::size_t>& order);

using IntMatrix = std::vector<std::vector<int>>;

// Fundamental cycles of the non-tree edges, in increasing edge order.
// Row i has +1 at its non-tree edge, 0 at the other non-tree edges, and
// follows the tree path back from head to tail.
IntMatrix cycle_basis(const Graph& g, const Subgraph& tree);

struct DivergenceWitness {
  EdgeSet subgraph;
  std::size_t edges = 0;
  std::size_t loops = 0;
  long defect = 0;  // 2 * loops - edges
};

enum class DivergenceMode {
  kExhaustive,   // every proper edge subset, E <= 24
  kVertexInduced // connected induced subgraphs and single-edge deletions
};

struct DivergenceResult {
  bool primitive = false;
  bool count_matches = false;  // E == 2 h1
  std::optional<DivergenceWitness> witness;
  std::string reason;
};

// Primitive log divergence: E = 2 h1 and every proper subgraph G with at
// least one edge has E_G > 2 h1(G). Rejects disconnected input.
DivergenceResult is_primitive_divergent(const Graph& g,
                                        DivergenceMode mode = DivergenceMode::kExhaustive);

}  // namespace graphpoly
