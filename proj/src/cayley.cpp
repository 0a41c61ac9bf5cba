#include "sdcay/cayley.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdcay {

void validate_cayley_spec(const CayleySpec& spec) {
  const FiniteGroup& g = spec.group;
  std::vector<char> in(g.order, 0);
  for (int x : spec.connection_set) {
    if (x < 0 || x >= g.order)
      throw std::invalid_argument("connection set: index out of range");
    if (in[x]) throw std::invalid_argument("connection set: repeated element " + g.names[x]);
    in[x] = 1;
  }
  if (in[g.identity])
    throw std::invalid_argument("connection set contains the identity " +
                                g.names[g.identity]);
  for (int x : spec.connection_set)
    if (!in[g.inverse(x)])
      throw std::invalid_argument("connection set is not inverse-closed: " +
                                  g.names[x] + " lacks " +
                                  g.names[g.inverse(x)]);
}

Graph build_cayley(const CayleySpec& spec) {
  validate_cayley_spec(spec);
  const FiniteGroup& g = spec.group;
  std::vector<char> in(g.order, 0);
  for (int x : spec.connection_set) in[x] = 1;
  std::vector<std::pair<int, int>> edge_list;
  for (int a = 0; a < g.order; ++a) {
    for (int b = a + 1; b < g.order; ++b)
      if (in[g.mul(a, g.inverse(b))]) edge_list.emplace_back(a, b);
  }
  return Graph(g.order, edge_list, g.names);
}

bool verify_coset_multipartite(const FiniteGroup& g, const std::vector<int>& h) {
  if (!is_subgroup(g, h))
    throw std::invalid_argument("verify_coset_multipartite: h is not a subgroup");
  if (static_cast<int>(h.size()) == g.order)
    throw std::invalid_argument("verify_coset_multipartite: h must be proper");

  std::vector<char> in_h(g.order, 0);
  for (int x : h) in_h[x] = 1;
  CayleySpec spec{g, {}};
  for (int x = 0; x < g.order; ++x)
    if (!in_h[x]) spec.connection_set.push_back(x);

  Graph cay = build_cayley(spec);
  auto blocks = complete_multipartite_blocks(cay);
  if (!blocks) return false;

  // a ~ b iff a*b^-1 not in H, so non-adjacency classes are right cosets.
  auto cosets = right_cosets(g, h);
  std::sort(blocks->begin(), blocks->end());
  std::sort(cosets.begin(), cosets.end());
  return *blocks == cosets;
}

TripleComplementResult triple_complement_class(const FiniteGroup& g,
                                               const std::vector<int>& excluded) {
  if (excluded.size() != 3)
    throw std::invalid_argument("triple_complement_class: need exactly 3 elements");
  std::vector<int> ex = excluded;
  std::sort(ex.begin(), ex.end());
  if (std::adjacent_find(ex.begin(), ex.end()) != ex.end())
    throw std::invalid_argument("triple_complement_class: repeated element");
  for (int x : ex)
    if (x == g.identity)
      throw std::invalid_argument(
          "triple_complement_class: triple must avoid the identity");

  std::vector<char> drop(g.order, 0);
  drop[g.identity] = 1;
  for (int x : ex) drop[x] = 1;
  CayleySpec spec{g, {}};
  for (int x = 0; x < g.order; ++x)
    if (!drop[x]) spec.connection_set.push_back(x);
  // build_cayley rejects S != S^-1, which is exactly the precondition here.
  Graph cay = build_cayley(spec);
  Graph on_triple = induced_subgraph(cay, ex);
  return {g.order % 2 == 0, classify_triple(on_triple)};
}

FiniteGroup parse_group_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) return make_group(spec);
  std::string head = spec.substr(0, colon);
  std::string tail = spec.substr(colon + 1);
  try {
    size_t used = 0;
    int param = std::stoi(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("");
    return make_group(head, param);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad group spec '" + spec +
                                "', expected name or family:parameter");
  }
}

std::vector<int> parse_generators(const FiniteGroup& g, const std::string& list) {
  // split on commas at paren depth 0 so tuple names like (0,1) survive
  std::vector<std::string> items;
  std::string cur;
  int depth = 0;
  for (char c : list) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      items.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  items.push_back(cur);

  std::vector<int> out;
  for (const auto& raw : items) {
    if (raw.empty()) throw std::invalid_argument("empty generator entry");
    int idx = g.index_of(raw);
    if (idx < 0) {
      bool numeric = !raw.empty() &&
                     std::all_of(raw.begin(), raw.end(),
                                 [](char c) { return c >= '0' && c <= '9'; });
      if (numeric) idx = std::stoi(raw);
      if (idx < 0 || idx >= g.order)
        throw std::invalid_argument("unknown element '" + raw + "' in " +
                                    g.catalog_name);
    }
    out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CayleySpec parse_cayley_spec(const std::string& spec) {
  // group:params:gens with params optional: "dihedral:8:s,rs,r2" or "Z6:1,5"
  auto first = spec.find(':');
  if (first == std::string::npos)
    throw std::invalid_argument("cayley spec needs ':' separated generators");
  std::string head = spec.substr(0, first);
  std::string rest = spec.substr(first + 1);
  auto second = rest.find(':');
  FiniteGroup g;
  std::string gens;
  if (second != std::string::npos) {
    g = parse_group_spec(head + ":" + rest.substr(0, second));
    gens = rest.substr(second + 1);
  } else {
    g = parse_group_spec(head);
    gens = rest;
  }
  CayleySpec out{std::move(g), {}};
  out.connection_set = parse_generators(out.group, gens);
  return out;
}

}  // namespace sdcay
