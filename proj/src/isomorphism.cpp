#include "sdcay/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sdcay {

namespace {

// Iterated refinement: a vertex color starts from (degree, sorted distance
// profile) and is re-split by the multiset of neighbor colors until stable.
// Color ids are assigned by sorted key order, so they are canonical and can
// be compared across the two graphs.
std::vector<int> stable_colors(const Graph& g) {
  int n = g.vertex_count();
  auto dist = distance_matrix(g);

  using Key = std::pair<int, std::vector<int>>;
  std::vector<int> color(n);
  {
    std::map<Key, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) {
      std::vector<int> profile = dist[v];
      std::sort(profile.begin(), profile.end());
      classes[{g.degree(v), std::move(profile)}].push_back(v);
    }
    int next = 0;
    for (auto& [key, members] : classes) {
      for (int v : members) color[v] = next;
      ++next;
    }
  }

  for (;;) {
    std::map<Key, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) {
      std::vector<int> around;
      around.reserve(g.degree(v));
      for (int u : g.neighbors(v)) around.push_back(color[u]);
      std::sort(around.begin(), around.end());
      classes[{color[v], std::move(around)}].push_back(v);
    }
    std::vector<int> refined(n);
    int next = 0;
    for (auto& [key, members] : classes) {
      for (int v : members) refined[v] = next;
      ++next;
    }
    if (refined == color) return color;
    color = std::move(refined);
  }
}

std::vector<int> color_histogram(const std::vector<int>& color) {
  std::vector<int> hist;
  for (int c : color) {
    if (c >= static_cast<int>(hist.size())) hist.resize(c + 1, 0);
    ++hist[c];
  }
  return hist;
}

struct Matcher {
  const Graph& g1;
  const Graph& g2;
  const std::vector<int>& c1;
  const std::vector<int>& c2;
  std::vector<int> order;    // g1 vertices, most constrained first
  std::vector<int> mapping;  // g1 -> g2, -1 unset
  std::vector<char> used;    // g2 side

  bool extend(size_t pos) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int w = 0; w < g2.vertex_count(); ++w) {
      if (used[w] || c2[w] != c1[v]) continue;
      bool ok = true;
      for (size_t p = 0; p < pos && ok; ++p) {
        int a = order[p];
        ok = g1.has_edge(v, a) == g2.has_edge(w, mapping[a]);
      }
      if (!ok) continue;
      mapping[v] = w;
      used[w] = 1;
      if (extend(pos + 1)) return true;
      mapping[v] = -1;
      used[w] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const Graph& g1, const Graph& g2,
                                               int max_vertices) {
  if (g1.vertex_count() > max_vertices || g2.vertex_count() > max_vertices)
    throw std::invalid_argument("are_isomorphic: graph exceeds vertex cap");
  int n = g1.vertex_count();
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count())
    return std::nullopt;
  if (n == 0) return std::vector<int>{};

  auto c1 = stable_colors(g1);
  auto c2 = stable_colors(g2);
  auto h1 = color_histogram(c1);
  auto h2 = color_histogram(c2);
  if (h1 != h2) return std::nullopt;

  Matcher m{g1, g2, c1, c2, {}, std::vector<int>(n, -1),
            std::vector<char>(n, 0)};
  m.order.resize(n);
  for (int v = 0; v < n; ++v) m.order[v] = v;
  std::sort(m.order.begin(), m.order.end(), [&](int a, int b) {
    if (h1[c1[a]] != h1[c1[b]]) return h1[c1[a]] < h1[c1[b]];
    return a < b;
  });
  if (!m.extend(0)) return std::nullopt;
  return m.mapping;
}

}  // namespace sdcay
