#include "sdcay/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sdcay {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list)
    : Graph(n, edge_list, {}) {}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list,
             std::vector<std::string> vertex_labels)
    : n_(n), labels_(std::move(vertex_labels)) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
    throw std::invalid_argument("graph: label count does not match n");
  adj_.assign(n, {});
  matrix_.assign(static_cast<size_t>(n) * n, 0);
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: self loop");
    if (matrix_[u * n_ + v]) throw std::invalid_argument("graph: duplicate edge");
    matrix_[u * n_ + v] = matrix_[v * n_ + u] = 1;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++m_;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::optional<int> regular_degree(const Graph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  int k = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != k) return std::nullopt;
  return k;
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, kUnreachable));
  for (int s = 0; s < n; ++s) {
    auto& row = dist[s];
    row[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (row[v] == kUnreachable) {
          row[v] = row[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return dist;
}

std::optional<int> diameter(const Graph& g) {
  auto dist = distance_matrix(g);
  int best = 0;
  for (const auto& row : dist)
    for (int d : row) {
      if (d == kUnreachable) return std::nullopt;
      best = std::max(best, d);
    }
  return best;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || diameter(g).has_value();
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> block{s};
    comp[s] = static_cast<int>(out.size());
    for (size_t i = 0; i < block.size(); ++i)
      for (int v : g.neighbors(block[i]))
        if (comp[v] == -1) {
          comp[v] = comp[s];
          block.push_back(v);
        }
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& w) {
  std::vector<int> verts = w;
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
    throw std::invalid_argument("induced_subgraph: repeated vertex");
  for (int v : verts)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("induced_subgraph: vertex out of range");
  std::vector<std::pair<int, int>> edge_list;
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j]))
        edge_list.emplace_back(static_cast<int>(i), static_cast<int>(j));
  std::vector<std::string> labels;
  if (g.has_labels())
    for (int v : verts) labels.push_back(g.label(v));
  return Graph(static_cast<int>(verts.size()), edge_list, std::move(labels));
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> edge_list;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) edge_list.emplace_back(u, v);
  return Graph(n, edge_list);
}

TripleClass classify_triple(const Graph& g) {
  if (g.vertex_count() != 3)
    throw std::invalid_argument("classify_triple: graph must have 3 vertices");
  switch (g.edge_count()) {
    case 3: return TripleClass::K3;
    case 2: return TripleClass::P3;
    case 0: return TripleClass::Empty3;
    default: return TripleClass::Other;
  }
}

const char* triple_class_name(TripleClass c) {
  switch (c) {
    case TripleClass::K3: return "K3";
    case TripleClass::P3: return "P3";
    case TripleClass::Empty3: return "Empty3";
    default: return "Other";
  }
}

std::optional<std::vector<std::vector<int>>> complete_multipartite_blocks(
    const Graph& g) {
  Graph co = complement(g);
  auto blocks = connected_components(co);
  // Each complement component must be a clique; equivalently no edge of g
  // stays inside a block.
  for (const auto& block : blocks)
    for (size_t i = 0; i < block.size(); ++i)
      for (size_t j = i + 1; j < block.size(); ++j)
        if (!co.has_edge(block[i], block[j])) return std::nullopt;
  return blocks;
}

std::optional<std::vector<int>> complete_multipartite_parts(const Graph& g) {
  auto blocks = complete_multipartite_blocks(g);
  if (!blocks) return std::nullopt;
  std::vector<int> sizes;
  sizes.reserve(blocks->size());
  for (const auto& b : *blocks) sizes.push_back(static_cast<int>(b.size()));
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

Graph standard_graph(GraphKind kind, int n) {
  std::vector<std::pair<int, int>> edge_list;
  switch (kind) {
    case GraphKind::Cycle:
      if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
      for (int i = 0; i + 1 < n; ++i) edge_list.emplace_back(i, i + 1);
      if (n > 2) edge_list.emplace_back(0, n - 1);
      break;
    case GraphKind::Complete:
      if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edge_list.emplace_back(i, j);
      break;
    case GraphKind::Path:
      if (n < 1) throw std::invalid_argument("path needs n >= 1");
      for (int i = 0; i + 1 < n; ++i) edge_list.emplace_back(i, i + 1);
      break;
  }
  return Graph(n, edge_list);
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  int n = -1, m = -1;
  if (!(in >> n >> m)) throw std::invalid_argument("graph text: bad header");
  if (n < 0 || m < 0) throw std::invalid_argument("graph text: bad header");
  std::vector<std::pair<int, int>> edge_list;
  edge_list.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("graph text: truncated edge list");
    edge_list.emplace_back(u, v);
  }
  int extra;
  if (in >> extra) throw std::invalid_argument("graph text: trailing data");
  return Graph(n, edge_list);
}

std::string graph_to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (g.has_labels()) out << " [label=\"" << g.label(v) << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace sdcay
