#pragma once

// Immutable simple-graph kernel: degrees, BFS distances, induced subgraphs,
// complement structure and the small detectors the rest of the toolkit uses.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sdcay {

// Distance sentinel for vertex pairs in different components.
constexpr int kUnreachable = -1;

class Graph {
 public:
  Graph() = default;
  // Builds a simple undirected graph. Throws std::invalid_argument on
  // out-of-range endpoints, self loops or duplicate edges.
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list);
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list,
        std::vector<std::string> vertex_labels);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const { return matrix_[u * n_ + v]; }

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(int v) const { return labels_[v]; }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;  // sorted neighbor lists
  std::vector<char> matrix_;           // n*n adjacency lookup
  std::vector<std::string> labels_;    // optional, empty if unset
};

// k if every vertex has degree k, absent otherwise.
std::optional<int> regular_degree(const Graph& g);

// BFS hop counts; kUnreachable marks disconnected pairs.
std::vector<std::vector<int>> distance_matrix(const Graph& g);

// Max finite distance; absent means the graph is disconnected (infinite).
std::optional<int> diameter(const Graph& g);

bool is_connected(const Graph& g);

// Connected components as sorted vertex sets, ordered by least vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Subgraph induced on W; vertices relabeled 0..|W|-1 in sorted W order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& w);

Graph complement(const Graph& g);

enum class TripleClass { K3, P3, Empty3, Other };

// Classifies a graph on exactly 3 vertices by edge count (3/2/0; 1 = Other).
TripleClass classify_triple(const Graph& g);

const char* triple_class_name(TripleClass c);

// If the complement of g is a disjoint union of cliques, the parts of the
// complete multipartite graph g as vertex sets (by least vertex); else absent.
std::optional<std::vector<std::vector<int>>> complete_multipartite_blocks(
    const Graph& g);

// Part sizes sorted descending, or absent if g is not complete multipartite.
std::optional<std::vector<int>> complete_multipartite_parts(const Graph& g);

enum class GraphKind { Cycle, Complete, Path };

// Canonical C_n (n >= 3), K_n (n >= 1) or P_n (n >= 1).
Graph standard_graph(GraphKind kind, int n);

// Text format: first line "n m", then one "u v" line per edge, 0-based,
// u < v, sorted. Round-trips exactly.
std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);

// DOT emission for rendering; uses vertex labels when present.
std::string graph_to_dot(const Graph& g, const std::string& name = "g");

}  // namespace sdcay
