#pragma once

// Signed dominating functions: a +-1 vertex labeling g with
// sum_{u in N[v]} g(u) > 0 at every vertex. gamma is the minimum weight.
//
// The exact solver works in negative-set space: a labeling is signed
// dominating iff |N[v] ^ Vminus| <= floor(deg(v)/2) for every v, so
// gamma = n - 2 * max|Vminus| under those per-vertex capacities.

#include <optional>
#include <string>
#include <vector>

#include "sdcay/graph.hpp"

namespace sdcay {

struct SignLabeling {
  std::vector<int> values;  // entries are +1 or -1

  int size() const { return static_cast<int>(values.size()); }
  int weight() const;
  std::vector<int> negatives() const;

  static SignLabeling all_positive(int n);
  static SignLabeling from_negatives(int n, const std::vector<int>& negatives);
};

enum class SolveMethod { Naive, BranchAndBound, Formula };
const char* solve_method_name(SolveMethod m);

struct GammaResult {
  int gamma = 0;
  SignLabeling labeling;      // signed dominating, weight == gamma
  int lower_bound_used = 0;   // gamma >= this; same parity as n
  long nodes_explored = 0;
  SolveMethod method = SolveMethod::BranchAndBound;
};

// sum of labels over N[v] = {v} plus neighbors.
int closed_neighborhood_sum(const Graph& g, const SignLabeling& lab, int v);

bool is_signed_dominating(const Graph& g, const SignLabeling& lab);

// Regular-graph lower bound: ceil(2n/(k+1)) for odd k, ceil(n/(k+1)) for
// even k, lifted to the next integer of n's parity (every weight has it).
int regular_lower_bound(int n, int k);

// Maximum-cardinality W with |N[v] ^ W| <= floor(deg(v)/2) for all v.
// Depth-first branch and bound in vertex index order, include branch first;
// the result is the lexicographically least maximum set under that order.
// budget, when given, must be a sound upper bound on |W|; the search stops
// early once it is attained. warm_start seeds the incumbent (it must itself
// satisfy the capacities) and is used for the warm-start sanity checks.
std::vector<int> max_negative_set(const Graph& g,
                                  std::optional<int> budget = std::nullopt,
                                  const std::vector<int>* warm_start = nullptr,
                                  long* nodes_explored = nullptr);

// Exact gamma via max_negative_set; the regular bound above prunes regular
// instances, irregular ones fall back to the trivial parity bound -n.
GammaResult gamma_exact(const Graph& g);
GammaResult gamma_exact(const Graph& g, const SignLabeling& warm_start);

// Exhaustive 2^n oracle, n <= 14.
GammaResult gamma_naive(const Graph& g);

enum class FormulaKind { Complete, Cycle };

// Closed forms: complete -> 1 (n odd) / 2 (n even); cycle -> n - 2*floor(n/3).
int gamma_formula(FormulaKind kind, int n);

// For max degree <= 3 and a signed dominating labeling: true iff every pair
// of -1 vertices is at distance >= 3. A false return is a counterexample
// certificate to that distance property, not an error.
bool check_negative_pair_distance(const Graph& g, const SignLabeling& lab);

// {"n","gamma","negatives","method","nodes"}
std::string gamma_result_to_json(const GammaResult& r);

}  // namespace sdcay
