#include "graphpoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "graphpoly/errors.hpp"

namespace graphpoly {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

struct SpanStats {
  std::size_t vertices = 0;    // endpoints of included edges
  std::size_t components = 0;  // among those vertices
};

SpanStats span_stats(const Graph& g, const EdgeSet& s) {
  UnionFind uf(g.vertex_count());
  std::vector<bool> touched(g.vertex_count(), false);
  SpanStats st;
  std::size_t merges = 0;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (!s.test(i)) continue;
    const Edge& e = g.edge(i);
    for (auto v : {e.tail, e.head}) {
      if (!touched[v]) {
        touched[v] = true;
        ++st.vertices;
      }
    }
    if (uf.unite(e.tail, e.head)) ++merges;
  }
  st.components = st.vertices - merges;
  return st;
}

}  // namespace

Graph::Graph(std::uint32_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (edges_.size() > kMaxEdges) {
    throw ValidationError("graph has " + std::to_string(edges_.size()) + " edges; at most " +
                          std::to_string(kMaxEdges) + " supported");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].tail >= vertex_count_ || edges_[i].head >= vertex_count_) {
      throw ValidationError("edge " + std::to_string(i) + " has an endpoint out of range");
    }
  }
}

EdgeSet Graph::all_edges() const {
  EdgeSet s;
  for (std::size_t i = 0; i < edges_.size(); ++i) s.set(i);
  return s;
}

std::string Graph::to_text() const {
  std::ostringstream os;
  os << "v=" << vertex_count_;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    os << "; e" << i << ":(" << edges_[i].tail << "," << edges_[i].head << ")";
  }
  return os.str();
}

Subgraph::Subgraph(const Graph& parent, EdgeSet edges) : parent_(&parent), edges_(edges) {
  for (std::size_t i = parent.edge_count(); i < kMaxEdges; ++i) {
    if (edges_.test(i)) throw ValidationError("subgraph bit set beyond the parent's edges");
  }
}

std::vector<std::size_t> Subgraph::edge_list() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < parent_->edge_count(); ++i) {
    if (edges_.test(i)) out.push_back(i);
  }
  return out;
}

std::string Subgraph::to_hex() const { return edge_set_hex(edges_); }

std::string edge_set_hex(const EdgeSet& s) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  std::size_t top = kMaxEdges;
  while (top > 0 && !s.test(top - 1)) --top;
  if (top == 0) return "0x0";
  for (std::size_t nib = (top + 3) / 4; nib-- > 0;) {
    unsigned v = 0;
    for (unsigned b = 0; b < 4; ++b) {
      if (4 * nib + b < kMaxEdges && s.test(4 * nib + b)) v |= 1u << b;
    }
    out.push_back(digits[v]);
  }
  return "0x" + out;
}

Subgraph make_subgraph(const Graph& g, std::initializer_list<std::size_t> edges) {
  EdgeSet s;
  for (auto e : edges) {
    if (e >= g.edge_count()) throw ValidationError("edge index out of range");
    s.set(e);
  }
  return Subgraph(g, s);
}

Subgraph make_subgraph(const Graph& g, std::uint64_t mask) {
  return Subgraph(g, EdgeSet(mask));
}

std::size_t loop_rank(const Graph& g) {
  return g.edge_count() + component_count(g) - g.vertex_count();
}

std::size_t loop_rank(const Subgraph& s) {
  const SpanStats st = span_stats(s.parent(), s.edges());
  return s.size() + st.components - st.vertices;
}

std::size_t component_count(const Graph& g) {
  UnionFind uf(g.vertex_count());
  std::size_t c = g.vertex_count();
  for (const Edge& e : g.edges()) {
    if (uf.unite(e.tail, e.head)) --c;
  }
  return c;
}

std::size_t component_count(const Subgraph& s) { return span_stats(s.parent(), s.edges()).components; }

std::size_t loop_rank_of_mask(const Graph& g, std::uint64_t mask) {
  UnionFind uf(g.vertex_count());
  std::size_t h1 = 0;
  for (std::size_t i = 0; i < g.edge_count() && i < 64; ++i) {
    if ((mask >> i) & 1u) {
      if (!uf.unite(g.edge(i).tail, g.edge(i).head)) ++h1;
    }
  }
  return h1;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_spanning_forest(const Subgraph& s) {
  const Graph& g = s.parent();
  UnionFind uf(g.vertex_count());
  for (std::size_t i : s.edge_list()) {
    if (!uf.unite(g.edge(i).tail, g.edge(i).head)) return false;
  }
  // Every edge of g must now join vertices already in one component.
  for (const Edge& e : g.edges()) {
    if (uf.find(e.tail) != uf.find(e.head)) return false;
  }
  return true;
}

std::vector<Subgraph> spanning_forests(const Graph& g) {
  const std::size_t E = g.edge_count();
  if (E > kMaxEnumerationEdges) {
    throw ValidationError("spanning_forests enumerates subsets; graph has " + std::to_string(E) +
                          " edges (limit " + std::to_string(kMaxEnumerationEdges) + ")");
  }
  const std::size_t size = g.vertex_count() - component_count(g);
  std::vector<Subgraph> out;
  if (size == 0) {
    out.emplace_back(g, EdgeSet{});
    return out;
  }
  if (size > E) return out;
  // Gosper's hack walks the size-k subsets in ascending order.
  std::uint64_t mask = (std::uint64_t{1} << size) - 1;
  const std::uint64_t limit = std::uint64_t{1} << E;
  while (mask < limit) {
    UnionFind uf(g.vertex_count());
    bool acyclic = true;
    for (std::size_t i = 0; i < E && acyclic; ++i) {
      if ((mask >> i) & 1u) acyclic = uf.unite(g.edge(i).tail, g.edge(i).head);
    }
    if (acyclic) out.emplace_back(g, EdgeSet(mask));
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  return out;
}

Subgraph first_spanning_forest(const Graph& g) {
  UnionFind uf(g.vertex_count());
  EdgeSet s;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (uf.unite(g.edge(i).tail, g.edge(i).head)) s.set(i);
  }
  return Subgraph(g, s);
}

std::vector<std::optional<std::size_t>> edge_compaction(const Graph& g, const EdgeSet& removed) {
  std::vector<std::optional<std::size_t>> map(g.edge_count());
  std::size_t next = 0;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (!removed.test(i)) map[i] = next++;
  }
  return map;
}

Graph contract(const Graph& g, const Subgraph& s) {
  UnionFind uf(g.vertex_count());
  for (std::size_t i : s.edge_list()) uf.unite(g.edge(i).tail, g.edge(i).head);
  // New vertex ids in order of the smallest original vertex of each class.
  std::vector<std::uint32_t> id(g.vertex_count(), 0);
  std::vector<long> class_id(g.vertex_count(), -1);
  std::uint32_t next = 0;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    const std::size_t r = uf.find(v);
    if (class_id[r] < 0) class_id[r] = next++;
    id[v] = static_cast<std::uint32_t>(class_id[r]);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (s.contains(i)) continue;
    edges.push_back({id[g.edge(i).tail], id[g.edge(i).head]});
  }
  return Graph(next, std::move(edges));
}

Graph delete_edges(const Graph& g, const Subgraph& s) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (!s.contains(i)) edges.push_back(g.edge(i));
  }
  return Graph(g.vertex_count(), std::move(edges));
}

Graph restrict_to(const Graph& g, const Subgraph& s) {
  std::vector<Edge> edges;
  for (std::size_t i : s.edge_list()) edges.push_back(g.edge(i));
  return Graph(g.vertex_count(), std::move(edges));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) {
    edges.push_back({e.tail + g1.vertex_count(), e.head + g1.vertex_count()});
  }
  return Graph(g1.vertex_count() + g2.vertex_count(), std::move(edges));
}

Graph vertex_join(const Graph& g1, std::uint32_t a, const Graph& g2, std::uint32_t b) {
  if (a >= g1.vertex_count() || b >= g2.vertex_count()) {
    throw ValidationError("vertex_join: vertex out of range");
  }
  // g2's vertex b becomes g1's vertex a; the rest of g2 is shifted after g1.
  auto map2 = [&](std::uint32_t v) -> std::uint32_t {
    if (v == b) return a;
    return g1.vertex_count() + (v < b ? v : v - 1);
  };
  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) edges.push_back({map2(e.tail), map2(e.head)});
  return Graph(g1.vertex_count() + g2.vertex_count() - 1, std::move(edges));
}

Graph permute_edges(const Graph& g, const std::vector<std::size_t>& order) {
  if (order.size() != g.edge_count()) throw ValidationError("permute_edges: wrong order length");
  std::vector<bool> seen(order.size(), false);
  std::vector<Edge> edges;
  for (std::size_t k : order) {
    if (k >= order.size() || seen[k]) throw ValidationError("permute_edges: not a permutation");
    seen[k] = true;
    edges.push_back(g.edge(k));
  }
  return Graph(g.vertex_count(), std::move(edges));
}

IntMatrix cycle_basis(const Graph& g, const Subgraph& tree) {
  if (&tree.parent() != &g && !(tree.parent() == g)) {
    throw ValidationError("cycle_basis: tree belongs to another graph");
  }
  if (!is_spanning_forest(tree)) throw ValidationError("cycle_basis: not a spanning forest");
  const std::size_t V = g.vertex_count();
  const std::size_t E = g.edge_count();

  // Root every tree component and remember the edge to the parent.
  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> adj(V);
  for (std::size_t i : tree.edge_list()) {
    adj[g.edge(i).tail].push_back({g.edge(i).head, i});
    adj[g.edge(i).head].push_back({g.edge(i).tail, i});
  }
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_edge(V, kNone);
  std::vector<std::uint32_t> parent(V, 0);
  std::vector<bool> seen(V, false);
  for (std::uint32_t root = 0; root < V; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::vector<std::uint32_t> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::uint32_t x = queue[qi];
      for (auto [y, ei] : adj[x]) {
        if (seen[y]) continue;
        seen[y] = true;
        parent[y] = x;
        parent_edge[y] = ei;
        queue.push_back(y);
      }
    }
  }
  // Coefficients of the oriented path from v up to its root.
  auto add_path_to_root = [&](std::uint32_t v, int sign, std::vector<int>& row) {
    while (parent_edge[v] != kNone) {
      const std::size_t ei = parent_edge[v];
      const int dir = (g.edge(ei).tail == parent[v]) ? -1 : 1;  // walking v -> parent
      row[ei] += sign * dir;
      v = parent[v];
    }
  };

  IntMatrix rows;
  for (std::size_t i = 0; i < E; ++i) {
    if (tree.contains(i)) continue;
    std::vector<int> row(E, 0);
    row[i] = 1;
    if (!g.edge(i).is_self_loop()) {
      // tail -> head along edge i, then head -> root -> tail through the tree.
      add_path_to_root(g.edge(i).head, 1, row);
      add_path_to_root(g.edge(i).tail, -1, row);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

DivergenceWitness make_witness(const Graph& g, const EdgeSet& s) {
  DivergenceWitness w;
  w.subgraph = s;
  w.edges = s.count();
  w.loops = loop_rank(Subgraph(g, s));
  w.defect = 2 * static_cast<long>(w.loops) - static_cast<long>(w.edges);
  return w;
}

std::optional<DivergenceWitness> exhaustive_witness(const Graph& g) {
  const std::size_t E = g.edge_count();
  if (E > kMaxEnumerationEdges) {
    throw ValidationError("exhaustive divergence check limited to " +
                          std::to_string(kMaxEnumerationEdges) +
                          " edges; use the vertex-induced mode");
  }
  const std::uint64_t full = (std::uint64_t{1} << E) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    const long edges = std::popcount(mask);
    const long loops = static_cast<long>(loop_rank_of_mask(g, mask));
    if (edges <= 2 * loops) return make_witness(g, EdgeSet(mask));
  }
  return std::nullopt;
}

std::optional<DivergenceWitness> vertex_induced_witness(const Graph& g) {
  const std::size_t V = g.vertex_count();
  if (V > 30) throw ValidationError("vertex-induced divergence check limited to 30 vertices");
  const EdgeSet all = g.all_edges();
  // Connected violators on a proper vertex set are dominated by the induced
  // subgraph on that set; spanning ones by a single-edge deletion.
  for (std::uint64_t w = 1; w + 1 < (std::uint64_t{1} << V); ++w) {
    EdgeSet s;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edge(i);
      if (((w >> e.tail) & 1u) && ((w >> e.head) & 1u)) s.set(i);
    }
    if (s.none()) continue;
    Subgraph sub(g, s);
    if (component_count(sub) != 1) continue;
    const DivergenceWitness cand = make_witness(g, s);
    if (cand.defect >= 0) return cand;
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    EdgeSet s = all;
    s.reset(i);
    if (s.none()) continue;
    const DivergenceWitness cand = make_witness(g, s);
    if (cand.defect >= 0) return cand;
  }
  return std::nullopt;
}

}  // namespace

DivergenceResult is_primitive_divergent(const Graph& g, DivergenceMode mode) {
  if (!is_connected(g)) throw ValidationError("is_primitive_divergent: graph is disconnected");
  DivergenceResult r;
  const std::size_t h1 = loop_rank(g);
  r.count_matches = g.edge_count() == 2 * h1;
  if (!r.count_matches) {
    r.reason = "edge count " + std::to_string(g.edge_count()) + " != 2*h1 = " +
               std::to_string(2 * h1);
    return r;
  }
  r.witness = mode == DivergenceMode::kExhaustive ? exhaustive_witness(g) : vertex_induced_witness(g);
  r.primitive = !r.witness.has_value();
  if (r.witness) {
    r.reason = "subgraph " + edge_set_hex(r.witness->subgraph) + " has " +
               std::to_string(r.witness->edges) + " edges and " + std::to_string(r.witness->loops) +
               " loops";
  }
  return r;
}

}  // namespace graphpoly
