#include "sdcay/domination.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace sdcay {

int SignLabeling::weight() const {
  return std::accumulate(values.begin(), values.end(), 0);
}

std::vector<int> SignLabeling::negatives() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (values[v] < 0) out.push_back(v);
  return out;
}

SignLabeling SignLabeling::all_positive(int n) {
  return SignLabeling{std::vector<int>(n, 1)};
}

SignLabeling SignLabeling::from_negatives(int n, const std::vector<int>& negatives) {
  SignLabeling lab = all_positive(n);
  for (int v : negatives) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("labeling: vertex out of range");
    lab.values[v] = -1;
  }
  return lab;
}

const char* solve_method_name(SolveMethod m) {
  switch (m) {
    case SolveMethod::Naive: return "naive";
    case SolveMethod::BranchAndBound: return "branch_and_bound";
    default: return "formula";
  }
}

int closed_neighborhood_sum(const Graph& g, const SignLabeling& lab, int v) {
  if (lab.size() != g.vertex_count())
    throw std::invalid_argument("labeling size does not match graph");
  int sum = lab.values[v];
  for (int u : g.neighbors(v)) sum += lab.values[u];
  return sum;
}

bool is_signed_dominating(const Graph& g, const SignLabeling& lab) {
  if (lab.size() != g.vertex_count())
    throw std::invalid_argument("labeling size does not match graph");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (closed_neighborhood_sum(g, lab, v) <= 0) return false;
  return true;
}

int regular_lower_bound(int n, int k) {
  if (k < 0 || k > n - 1)
    throw std::invalid_argument("regular_lower_bound: bad degree");
  int raw;
  if (k % 2 == 1)
    raw = (2 * n + k) / (k + 1);  // ceil(2n/(k+1))
  else
    raw = (n + k) / (k + 1);      // ceil(n/(k+1))
  if ((raw & 1) != (n & 1)) ++raw;
  return raw;
}

namespace {

struct NegativeSetSearch {
  const Graph& g;
  int n;
  std::vector<int> cap;      // floor(deg/2) per vertex
  std::vector<int> load;     // |N[v] ^ current| per vertex
  std::vector<int> current;
  std::vector<int> best;
  int target;                // stop as soon as best reaches this
  long nodes = 0;
  bool done = false;

  explicit NegativeSetSearch(const Graph& graph, int budget)
      : g(graph), n(graph.vertex_count()), target(budget) {
    cap.resize(n);
    for (int v = 0; v < n; ++v) cap[v] = g.degree(v) / 2;
    load.assign(n, 0);
  }

  bool addable(int v) const {
    if (load[v] >= cap[v]) return false;
    for (int u : g.neighbors(v))
      if (load[u] >= cap[u]) return false;
    return true;
  }

  void dfs(int v) {
    ++nodes;
    if (static_cast<int>(current.size()) > static_cast<int>(best.size())) {
      best = current;
      if (static_cast<int>(best.size()) >= target) {
        done = true;
        return;
      }
    }
    if (v == n) return;
    // loads only grow below this node, so vertices blocked now stay blocked
    int avail = 0;
    for (int u = v; u < n; ++u)
      if (addable(u)) ++avail;
    if (static_cast<int>(current.size()) + avail <= static_cast<int>(best.size()))
      return;

    if (addable(v)) {
      current.push_back(v);
      ++load[v];
      for (int u : g.neighbors(v)) ++load[u];
      dfs(v + 1);
      --load[v];
      for (int u : g.neighbors(v)) --load[u];
      current.pop_back();
      if (done) return;
    }
    dfs(v + 1);
  }
};

}  // namespace

std::vector<int> max_negative_set(const Graph& g, std::optional<int> budget,
                                  const std::vector<int>* warm_start,
                                  long* nodes_explored) {
  int n = g.vertex_count();
  NegativeSetSearch search(g, budget.value_or(n));
  if (warm_start) {
    for (int v : *warm_start) {
      ++search.load[v];
      for (int u : g.neighbors(v)) ++search.load[u];
    }
    for (int v = 0; v < n; ++v)
      if (search.load[v] > search.cap[v])
        throw std::invalid_argument("warm start violates vertex capacities");
    search.load.assign(n, 0);
    search.best = *warm_start;
    std::sort(search.best.begin(), search.best.end());
  }
  if (static_cast<int>(search.best.size()) < search.target) search.dfs(0);
  if (nodes_explored) *nodes_explored = search.nodes;
  return search.best;
}

namespace {

GammaResult solve_exact(const Graph& g, const SignLabeling* warm) {
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("gamma: graph must have a vertex");
  int lower;
  if (auto k = regular_degree(g))
    lower = regular_lower_bound(n, *k);
  else
    lower = -n;  // trivial bound of the right parity
  int budget = (n - lower) / 2;

  GammaResult res;
  res.method = SolveMethod::BranchAndBound;
  res.lower_bound_used = lower;
  std::vector<int> seed;
  if (warm) {
    if (!is_signed_dominating(g, *warm))
      throw std::invalid_argument("warm start labeling is not signed dominating");
    seed = warm->negatives();
  }
  std::vector<int> neg = max_negative_set(
      g, budget, warm ? &seed : nullptr, &res.nodes_explored);
  res.gamma = n - 2 * static_cast<int>(neg.size());
  res.labeling = SignLabeling::from_negatives(n, neg);
  if (!is_signed_dominating(g, res.labeling))
    throw std::logic_error("solver produced an invalid labeling");
  return res;
}

}  // namespace

GammaResult gamma_exact(const Graph& g) { return solve_exact(g, nullptr); }

GammaResult gamma_exact(const Graph& g, const SignLabeling& warm_start) {
  return solve_exact(g, &warm_start);
}

GammaResult gamma_naive(const Graph& g) {
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("gamma: graph must have a vertex");
  if (n > 14) throw std::invalid_argument("gamma_naive: capped at 14 vertices");

  GammaResult res;
  res.method = SolveMethod::Naive;
  res.lower_bound_used = -n;
  res.gamma = n + 1;  // sentinel above any weight
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    ++res.nodes_explored;
    SignLabeling lab = SignLabeling::all_positive(n);
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) lab.values[v] = -1;
    if (lab.weight() >= res.gamma) continue;
    if (is_signed_dominating(g, lab)) {
      res.gamma = lab.weight();
      res.labeling = std::move(lab);
    }
  }
  return res;
}

int gamma_formula(FormulaKind kind, int n) {
  switch (kind) {
    case FormulaKind::Complete:
      if (n < 1) throw std::invalid_argument("gamma_formula: complete needs n >= 1");
      return n % 2 == 1 ? 1 : 2;
    case FormulaKind::Cycle:
      if (n < 3) throw std::invalid_argument("gamma_formula: cycle needs n >= 3");
      return n - 2 * (n / 3);
  }
  throw std::invalid_argument("gamma_formula: unknown kind");
}

bool check_negative_pair_distance(const Graph& g, const SignLabeling& lab) {
  int max_deg = 0;
  for (int v = 0; v < g.vertex_count(); ++v) max_deg = std::max(max_deg, g.degree(v));
  if (max_deg > 3)
    throw std::invalid_argument("check_negative_pair_distance: max degree exceeds 3");
  if (!is_signed_dominating(g, lab))
    throw std::invalid_argument("check_negative_pair_distance: labeling is not signed dominating");
  auto neg = lab.negatives();
  auto dist = distance_matrix(g);
  for (size_t i = 0; i < neg.size(); ++i)
    for (size_t j = i + 1; j < neg.size(); ++j) {
      int d = dist[neg[i]][neg[j]];
      if (d != kUnreachable && d < 3) return false;
    }
  return true;
}

std::string gamma_result_to_json(const GammaResult& r) {
  nlohmann::ordered_json j;
  j["n"] = r.labeling.size();
  j["gamma"] = r.gamma;
  j["negatives"] = r.labeling.negatives();
  j["method"] = solve_method_name(r.method);
  j["nodes"] = r.nodes_explored;
  return j.dump() + "\n";
}

}  // namespace sdcay
