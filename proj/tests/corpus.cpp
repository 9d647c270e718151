#include "corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "graphpoly/families.hpp"

namespace corpus {

using graphpoly::Edge;
using graphpoly::Graph;

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {2, 0}}); }
Graph bubble() { return banana(2); }

Graph banana(std::uint32_t k) {
  std::vector<Edge> edges(k, Edge{0, 1});
  return Graph(2, edges);
}

Graph k4() { return graphpoly::wheel(3); }

Graph two_bubbles_at_vertex() { return Graph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}}); }

namespace {

using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

EdgeList canonical(std::uint32_t v, const EdgeList& edges) {
  std::vector<std::uint32_t> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best;
  bool first = true;
  do {
    EdgeList cur;
    for (auto [a, b] : edges) {
      std::uint32_t x = perm[a], y = perm[b];
      if (x > y) std::swap(x, y);
      cur.push_back({x, y});
    }
    std::sort(cur.begin(), cur.end());
    if (first || cur < best) best = cur;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph to_graph(std::uint32_t v, const EdgeList& edges) {
  std::vector<Edge> out;
  for (auto [a, b] : edges) out.push_back({a, b});
  return Graph(v, out);
}

}  // namespace

std::vector<Graph> small_connected(std::size_t max_edges) {
  // Every connected graph arises from a smaller one by adding an edge
  // between old vertices or to one new vertex.
  std::set<std::pair<std::uint32_t, EdgeList>> level{{1, {}}};
  std::vector<Graph> out;
  for (std::size_t k = 1; k <= max_edges; ++k) {
    std::set<std::pair<std::uint32_t, EdgeList>> next;
    for (const auto& [v, edges] : level) {
      for (std::uint32_t a = 0; a < v; ++a) {
        for (std::uint32_t b = a + 1; b <= v; ++b) {
          EdgeList e = edges;
          e.push_back({a, b});
          const std::uint32_t nv = b == v ? v + 1 : v;
          next.insert({nv, canonical(nv, e)});
        }
      }
    }
    for (const auto& [v, edges] : next) out.push_back(to_graph(v, edges));
    level = std::move(next);
  }
  return out;
}

std::vector<Graph> random_connected(std::size_t count, std::size_t max_edges, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto below = [&rng](std::uint64_t n) { return static_cast<std::uint32_t>(rng() % n); };
  std::vector<Graph> out;
  while (out.size() < count) {
    const std::size_t e_count = 1 + below(max_edges);
    const std::uint32_t v = 1 + below(std::min<std::size_t>(e_count, 7) + 1);
    std::vector<Edge> edges;
    // Random spanning tree first so the result is connected.
    for (std::uint32_t x = 1; x < v; ++x) edges.push_back({below(x), x});
    if (edges.size() > e_count) continue;
    const bool allow_loop = v == 1 || below(8) == 0;
    while (edges.size() < e_count) {
      const std::uint32_t a = below(v), b = below(v);
      if (a == b && !allow_loop) continue;
      edges.push_back({a, b});
    }
    // Shuffle edge order and flip orientations.
    for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[below(i)]);
    for (auto& e : edges) {
      if (below(2) == 1) std::swap(e.tail, e.head);
    }
    out.emplace_back(v, edges);
  }
  return out;
}

std::vector<NamedGraph> standard() {
  std::vector<NamedGraph> out;
  std::size_t i = 0;
  for (auto& g : small_connected(6)) out.push_back({"small" + std::to_string(i++), std::move(g)});
  i = 0;
  for (auto& g : random_connected(200, 10, 20241015)) out.push_back({"random" + std::to_string(i++), std::move(g)});
  for (std::uint32_t n = 3; n <= 6; ++n) out.push_back({"wheel" + std::to_string(n), graphpoly::wheel(n)});
  return out;
}

std::vector<NamedGraph> standard_up_to(std::size_t max_edges) {
  auto all = standard();
  std::erase_if(all, [max_edges](const NamedGraph& g) { return g.graph.edge_count() > max_edges; });
  return all;
}

}  // namespace corpus
