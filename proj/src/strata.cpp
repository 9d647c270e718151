#include "graphpoly/strata.hpp"

#include <algorithm>

#include "graphpoly/errors.hpp"
#include "graphpoly/graph_poly.hpp"

namespace graphpoly {
namespace {

bool subset(const EdgeSet& a, const EdgeSet& b) { return (a & b) == a; }

std::vector<std::optional<std::size_t>> inverse(const std::vector<std::optional<std::size_t>>& old_to_new,
                                                std::size_t new_count) {
  std::vector<std::optional<std::size_t>> back(new_count);
  for (std::size_t old = 0; old < old_to_new.size(); ++old) {
    if (old_to_new[old]) back[*old_to_new[old]] = old;
  }
  return back;
}

std::vector<EdgeSet> maximal_among(const std::vector<EdgeSet>& sets) {
  std::vector<EdgeSet> out;
  for (const auto& a : sets) {
    const bool dominated = std::any_of(sets.begin(), sets.end(),
                                       [&](const EdgeSet& b) { return a != b && subset(a, b); });
    if (!dominated) out.push_back(a);
  }
  return out;
}

}  // namespace

bool lands_in_hypersurface(const Graph& g, const Subgraph& s) {
  if (&s.parent() != &g && !(s.parent() == g)) throw ValidationError("subgraph of a different graph");
  if (s.size() == 0) throw ValidationError("lands_in_hypersurface needs a nonempty subgraph");
  return loop_rank(s) > 0;
}

bool every_monomial_meets(const MPoly& psi, const EdgeSet& s) {
  for (const auto& t : psi.terms()) {
    bool meets = false;
    for (std::size_t v = 0; v < psi.variable_count() && !meets; ++v) meets = t.mono.exp[v] != 0 && s.test(v);
    if (!meets) return false;
  }
  return true;
}

bool restriction_identity_check(const Graph& g, const Subgraph& s) {
  if (loop_rank(s) != 0) throw ValidationError("restriction identity needs a forest");
  const std::size_t E = g.edge_count();
  MPoly restricted = psi_determinant(g);
  for (std::size_t e : s.edge_list()) restricted = substitute(restricted, e, 0);
  const auto map = edge_compaction(g, s.edges());
  const MPoly quotient = psi_determinant(contract(g, s));
  return rename_variables(quotient, E, inverse(map, quotient.variable_count())) == restricted;
}

InitialForm initial_form_factorization(const Graph& g, const Subgraph& s) {
  if (loop_rank(s) == 0) throw ValidationError("initial form needs h1(s) > 0");
  const std::size_t E = g.edge_count();
  const MPoly psi = psi_determinant(g);
  auto s_degree = [&](const Monomial& m) {
    unsigned d = 0;
    for (std::size_t e = 0; e < E; ++e) {
      if (s.contains(e)) d += m.exp[e];
    }
    return d;
  };
  InitialForm out;
  out.order = ~0u;
  for (const auto& t : psi.terms()) out.order = std::min(out.order, s_degree(t.mono));
  std::vector<MPoly::Term> low;
  for (const auto& t : psi.terms()) {
    if (s_degree(t.mono) == out.order) low.push_back(t);
  }
  out.initial = MPoly::from_terms(E, std::move(low));

  const MPoly sub = psi_determinant(restrict_to(g, s));
  const auto sub_map = inverse(edge_compaction(g, ~s.edges() & g.all_edges()), sub.variable_count());
  out.subgraph_factor = rename_variables(sub, E, sub_map);
  const MPoly quo = psi_determinant(contract(g, s));
  out.quotient_factor = rename_variables(quo, E, inverse(edge_compaction(g, s.edges()), quo.variable_count()));
  out.factors = out.initial == out.subgraph_factor * out.quotient_factor;
  return out;
}

bool MotivicFamily::contains_whole_graph() const {
  return !members.empty() && members.back() == graph.all_edges();
}

MotivicFamily motivic_family(const Graph& g) {
  const std::size_t E = g.edge_count();
  if (E > kMaxEnumerationEdges) {
    throw ValidationError("motivic family enumerates subsets; limit is " +
                          std::to_string(kMaxEnumerationEdges) + " edges");
  }
  const std::uint64_t full = std::uint64_t{1} << E;
  std::vector<std::uint8_t> h1(full);
  for (std::uint64_t m = 0; m < full; ++m) h1[m] = static_cast<std::uint8_t>(loop_rank_of_mask(g, m));

  MotivicFamily fam;
  fam.graph = g;
  for (std::uint64_t m = 1; m < full; ++m) {
    bool ok = true;
    for (std::uint64_t rest = m; rest && ok; rest &= rest - 1) {
      const std::uint64_t bit = rest & (~rest + 1);
      ok = h1[m ^ bit] < h1[m];
    }
    if (ok) fam.members.emplace_back(m);
  }
  for (const auto& a : fam.members) {
    const bool minimal = std::none_of(fam.members.begin(), fam.members.end(),
                                      [&](const EdgeSet& b) { return b != a && subset(b, a); });
    if (minimal) fam.maximal_cycles.push_back(a);
  }
  return fam;
}

BlowupSequence blowup_sequence(const MotivicFamily& family) {
  std::vector<EdgeSet> remaining;
  for (const auto& m : family.members) {
    if (m != family.graph.all_edges()) remaining.push_back(m);
  }
  BlowupSequence out;
  std::vector<EdgeSet> emitted;
  while (!remaining.empty()) {
    std::vector<EdgeSet> round = maximal_among(remaining);
    for (std::size_t i = 0; i < round.size(); ++i) {
      for (std::size_t j = i + 1; j < round.size(); ++j) {
        const EdgeSet u = round[i] | round[j];
        if (std::find(emitted.begin(), emitted.end(), u) != emitted.end()) out.unions_avoid_earlier_rounds = false;
      }
    }
    std::erase_if(remaining, [&](const EdgeSet& m) { return std::find(round.begin(), round.end(), m) != round.end(); });
    emitted.insert(emitted.end(), round.begin(), round.end());
    out.rounds.push_back(std::move(round));
  }
  return out;
}

std::vector<std::vector<EdgeSet>> saturated_chains(const MotivicFamily& family, std::size_t max_chains) {
  const auto& members = family.members;
  const std::size_t n = members.size();
  // covers[i]: maximal members strictly inside member i.
  std::vector<std::vector<std::size_t>> covers(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> below;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && subset(members[j], members[i])) below.push_back(j);
    }
    for (std::size_t j : below) {
      const bool dominated = std::any_of(below.begin(), below.end(), [&](std::size_t k) {
        return k != j && subset(members[j], members[k]);
      });
      if (!dominated) covers[i].push_back(j);
    }
  }
  std::vector<std::size_t> tops;
  for (std::size_t i = 0; i < n; ++i) {
    const bool maximal = std::none_of(members.begin(), members.end(), [&](const EdgeSet& b) {
      return b != members[i] && subset(members[i], b);
    });
    if (maximal) tops.push_back(i);
  }

  std::vector<std::vector<EdgeSet>> chains;
  std::vector<EdgeSet> path;
  auto walk = [&](auto&& self, std::size_t i) -> void {
    path.push_back(members[i]);
    if (covers[i].empty()) {
      if (chains.size() >= max_chains) throw BudgetError("more than " + std::to_string(max_chains) + " chains");
      chains.push_back(path);
    }
    for (std::size_t j : covers[i]) self(self, j);
    path.pop_back();
  };
  for (std::size_t t : tops) walk(walk, t);
  return chains;
}

bool chain_law_holds(const Graph& g, const std::vector<EdgeSet>& chain) {
  if (chain.empty()) return false;
  const std::size_t top = loop_rank(Subgraph(g, chain.front()));
  for (std::size_t j = 0; j < chain.size(); ++j) {
    if (loop_rank(Subgraph(g, chain[j])) + j != top) return false;
  }
  return loop_rank(Subgraph(g, chain.back())) == 1;
}

}  // namespace graphpoly
