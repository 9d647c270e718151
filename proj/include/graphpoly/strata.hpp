#pragma once

#include <cstddef>
#include <vector>

#include "graphpoly/graph.hpp"
#include "graphpoly/mpoly.hpp"

namespace graphpoly {

// The coordinate space L(s) = {A_e = 0, e in s} lies in X_Gamma iff h1(s) > 0.
bool lands_in_hypersurface(const Graph& g, const Subgraph& s);

// Definitional form: every monomial of psi uses a variable of s.
bool every_monomial_meets(const MPoly& psi, const EdgeSet& s);

// For a forest s: Psi_Gamma with A_e = 0 on s equals Psi_{Gamma//s} after
// compacting variables. Throws if h1(s) > 0.
bool restriction_identity_check(const Graph& g, const Subgraph& s);

struct InitialForm {
  unsigned order = 0;       // least degree of a Psi monomial in the s-variables
  MPoly initial;            // the terms of that degree
  MPoly subgraph_factor;    // Psi_s in the s-variables
  MPoly quotient_factor;    // Psi_{Gamma//s} in the other variables
  bool factors = false;     // initial == subgraph_factor * quotient_factor
};

// Throws if h1(s) == 0.
InitialForm initial_form_factorization(const Graph& g, const Subgraph& s);

// Subgraphs G with h1(G - e) < h1(G) for every edge e of G: the coordinate
// spaces generated by the maximal ones inside X_Gamma. Larger subgraphs
// correspond to smaller linear spaces.
struct MotivicFamily {
  Graph graph;
  std::vector<EdgeSet> members;          // ascending bitmask order
  std::vector<EdgeSet> maximal_cycles;   // inclusion-minimal members

  bool contains_whole_graph() const;
};

// Refuses E > 24.
MotivicFamily motivic_family(const Graph& g);

struct BlowupSequence {
  std::vector<std::vector<EdgeSet>> rounds;
  // For every round, no union of two of its members lies in an earlier round.
  bool unions_avoid_earlier_rounds = true;
};

// Rounds of inclusion-maximal members among those not yet emitted; the whole
// graph is left out.
BlowupSequence blowup_sequence(const MotivicFamily& family);

// Maximal chains G_0 > G_1 > ... > G_r of members, listed from the top. G_0 is
// the whole graph when it is a member, otherwise each maximal member.
// Throws BudgetError beyond max_chains.
std::vector<std::vector<EdgeSet>> saturated_chains(const MotivicFamily& family,
                                                   std::size_t max_chains = 1000000);

// h1(G_j) = h1(G_0) - j and the bottom member has h1 = 1.
bool chain_law_holds(const Graph& g, const std::vector<EdgeSet>& chain);

}  // namespace graphpoly
