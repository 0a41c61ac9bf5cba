#pragma once

// Cayley graph construction Cay(S:G) for an inverse-closed connection set
// S not containing the identity, plus the structural checks tied to it.

#include <string>
#include <vector>

#include "sdcay/graph.hpp"
#include "sdcay/group.hpp"

namespace sdcay {

struct CayleySpec {
  FiniteGroup group;
  std::vector<int> connection_set;  // sorted element indices
};

// Throws std::invalid_argument naming the offending element when the
// identity is in S or S is not closed under inverse.
void validate_cayley_spec(const CayleySpec& spec);

// Vertex i ~ j iff g_i * g_j^-1 in S. Vertex order = element index order;
// vertex labels = element names. The result is |S|-regular and connected
// exactly when S generates the group.
Graph build_cayley(const CayleySpec& spec);

// For a proper subgroup H, builds S = G \ H and checks that Cay(S:G) is
// complete multipartite with parts exactly the cosets of H ([G:H] parts of
// size |H|). With the a*b^-1 adjacency rule the parts are right cosets Hg.
bool verify_coset_multipartite(const FiniteGroup& g, const std::vector<int>& h);

struct TripleComplementResult {
  bool n_even;
  TripleClass cls;
};

// For an inverse-closed excluded triple {a,b,c}, builds Cay(G\{e,a,b,c}:G)
// and classifies the subgraph induced on the triple.
TripleComplementResult triple_complement_class(const FiniteGroup& g,
                                               const std::vector<int>& excluded);

// Group spec strings: "cyclic:6", "dihedral:8", "Z6", "D8", ...
FiniteGroup parse_group_spec(const std::string& spec);

// Generator lists by element name or numeric index; names win ties.
// Commas inside parenthesised tuple names do not split.
std::vector<int> parse_generators(const FiniteGroup& g, const std::string& list);

// Combined spec "group:params:gens", e.g. "dihedral:8:s,rs,r2" or "Z6:1,5".
CayleySpec parse_cayley_spec(const std::string& spec);

}  // namespace sdcay
