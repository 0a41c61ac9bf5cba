#include "sdcay/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sdcay {

namespace {

constexpr int kMaxOrder = 24;

std::string cycle_notation(const std::vector<int>& perm) {
  // 1-based cycle notation; identity prints as "e".
  int m = static_cast<int>(perm.size());
  std::vector<char> seen(m, 0);
  std::string out;
  for (int start = 0; start < m; ++start) {
    if (seen[start] || perm[start] == start) continue;
    out += '(';
    int x = start;
    while (!seen[x]) {
      seen[x] = 1;
      out += std::to_string(x + 1);
      x = perm[x];
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

FiniteGroup from_permutations(std::vector<std::vector<int>> elements,
                              const std::string& tag) {
  std::sort(elements.begin(), elements.end());
  int n = static_cast<int>(elements.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[elements[i]] = i;

  FiniteGroup g;
  g.order = n;
  g.catalog_name = tag;
  g.table.assign(n, std::vector<int>(n, 0));
  int m = static_cast<int>(elements[0].size());
  for (int i = 0; i < n; ++i) {
    g.names.push_back(cycle_notation(elements[i]));
    for (int j = 0; j < n; ++j) {
      std::vector<int> prod(m);
      for (int x = 0; x < m; ++x) prod[x] = elements[i][elements[j][x]];
      auto it = index.find(prod);
      if (it == index.end())
        throw std::invalid_argument("permutation set is not closed");
      g.table[i][j] = it->second;
    }
  }
  std::vector<int> id(m);
  std::iota(id.begin(), id.end(), 0);
  g.identity = index.at(id);
  return g;
}

FiniteGroup cyclic(int n, const std::string& tag) {
  FiniteGroup g;
  g.order = n;
  g.identity = 0;
  g.catalog_name = tag;
  g.table.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    g.names.push_back(std::to_string(i));
    for (int j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
  }
  return g;
}

std::string rotation_name(int i) {
  if (i == 0) return "e";
  if (i == 1) return "r";
  return "r" + std::to_string(i);
}

FiniteGroup dihedral(int order, const std::string& tag) {
  if (order < 2 || order % 2 != 0)
    throw std::invalid_argument("dihedral order must be even and >= 2");
  int m = order / 2;
  FiniteGroup g;
  g.order = order;
  g.identity = 0;
  g.catalog_name = tag;
  g.table.assign(order, std::vector<int>(order, 0));
  // index i < m: rotation r^i; index m+i: reflection r^i s
  auto rot = [&](int i) { return ((i % m) + m) % m; };
  for (int i = 0; i < m; ++i) {
    g.names.push_back(rotation_name(i));
    for (int j = 0; j < m; ++j) {
      g.table[i][j] = rot(i + j);              // r^i r^j
      g.table[i][m + j] = m + rot(i + j);      // r^i (r^j s) = r^{i+j} s
      g.table[m + i][j] = m + rot(i - j);      // (r^i s) r^j = r^{i-j} s
      g.table[m + i][m + j] = rot(i - j);      // (r^i s)(r^j s) = r^{i-j}
    }
  }
  for (int i = 0; i < m; ++i)
    g.names.push_back(i == 0 ? "s" : rotation_name(i) + "s");
  return g;
}

FiniteGroup symmetric(int m, const std::string& tag) {
  std::vector<int> base(m);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> elements;
  do {
    elements.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return from_permutations(std::move(elements), tag);
}

bool is_even_permutation(const std::vector<int>& p) {
  int inversions = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

FiniteGroup alternating(int m, const std::string& tag) {
  std::vector<int> base(m);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> elements;
  do {
    if (is_even_permutation(base)) elements.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return from_permutations(std::move(elements), tag);
}

FiniteGroup quaternion8() {
  // Unit quaternions {1,-1,i,-i,j,-j,k,-k}; index 2u+s encodes sign s of
  // basis unit u in (1, i, j, k).
  FiniteGroup g;
  g.order = 8;
  g.identity = 0;
  g.catalog_name = "Q8";
  g.names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  // basis unit products and their signs: i*j = k, j*i = -k, i*i = -1, ...
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int neg[4][4] = {
      {0, 0, 0, 0},   // 1*1, 1*i, 1*j, 1*k
      {0, 1, 0, 1},   // i*1=i, i*i=-1, i*j=k, i*k=-j
      {0, 1, 1, 0},   // j*1=j, j*i=-k, j*j=-1, j*k=i
      {0, 0, 1, 1}};  // k*1=k, k*i=j, k*j=-i, k*k=-1
  g.table.assign(8, std::vector<int>(8, 0));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, sa = a % 2, ub = b / 2, sb = b % 2;
      int u = unit[ua][ub];
      int s = (sa + sb + neg[ua][ub]) % 2;
      g.table[a][b] = 2 * u + s;
    }
  return g;
}

FiniteGroup dicyclic12() {
  // Presentation a^4 = b^3 = e, a^-1 b a = b^-1; elements a^i b^j with
  // b^j a^k = a^k b^(j * (-1)^k). Index = 3i + j.
  FiniteGroup g;
  g.order = 12;
  g.identity = 0;
  g.catalog_name = "Dic3";
  g.table.assign(12, std::vector<int>(12, 0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j) {
      std::string nm = i == 0 ? "" : (i == 1 ? "a" : "a" + std::to_string(i));
      if (j == 1) nm += "b";
      if (j == 2) nm += "b2";
      g.names.push_back(nm.empty() ? "e" : nm);
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 3; ++l) {
          int sign = (k % 2 == 0) ? 1 : -1;
          int ii = (i + k) % 4;
          int jj = ((j * sign + l) % 3 + 3) % 3;
          g.table[3 * i + j][3 * k + l] = 3 * ii + jj;
        }
    }
  return g;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  try {
    out = std::stoi(s);
  } catch (...) {
    return false;
  }
  return true;
}

}  // namespace

int FiniteGroup::inverse(int a) const {
  for (int b = 0; b < order; ++b)
    if (table[a][b] == identity) return b;
  throw std::invalid_argument("element has no inverse");
}

int FiniteGroup::index_of(const std::string& name) const {
  for (int i = 0; i < order; ++i)
    if (names[i] == name) return i;
  return -1;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (table[a][b] != table[b][a]) return false;
  return true;
}

void validate_group(const FiniteGroup& g) {
  int n = g.order;
  if (n <= 0) throw std::invalid_argument("group: order must be positive");
  if (static_cast<int>(g.table.size()) != n)
    throw std::invalid_argument("group: table has wrong row count");
  for (const auto& row : g.table)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("group: table has wrong column count");
  if (static_cast<int>(g.names.size()) != n)
    throw std::invalid_argument("group: name list has wrong size");
  if (g.identity < 0 || g.identity >= n)
    throw std::invalid_argument("group: identity index out of range");

  for (int i = 0; i < n; ++i) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (int j = 0; j < n; ++j) {
      int rv = g.table[i][j], cv = g.table[j][i];
      if (rv < 0 || rv >= n || cv < 0 || cv >= n)
        throw std::invalid_argument("group: table entry out of range");
      if (row_seen[rv]++) throw std::invalid_argument("group: row is not a permutation");
      if (col_seen[cv]++) throw std::invalid_argument("group: column is not a permutation");
    }
  }
  int e = g.identity;
  for (int i = 0; i < n; ++i)
    if (g.table[e][i] != i || g.table[i][e] != i)
      throw std::invalid_argument("group: identity law fails");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
          throw std::invalid_argument("group: associativity fails");
  for (int a = 0; a < n; ++a) {
    int count = 0;
    for (int b = 0; b < n; ++b)
      if (g.table[a][b] == e && g.table[b][a] == e) ++count;
    if (count != 1) throw std::invalid_argument("group: inverse is not unique");
  }
}

FiniteGroup direct_product(const std::vector<FiniteGroup>& factors) {
  if (factors.empty()) throw std::invalid_argument("direct_product: no factors");
  FiniteGroup acc = factors[0];
  for (size_t f = 1; f < factors.size(); ++f) {
    const FiniteGroup& b = factors[f];
    FiniteGroup out;
    out.order = acc.order * b.order;
    if (out.order > kMaxOrder)
      throw std::invalid_argument("direct_product: order exceeds cap");
    out.identity = acc.identity * b.order + b.identity;
    out.catalog_name = acc.catalog_name + "x" + b.catalog_name;
    out.table.assign(out.order, std::vector<int>(out.order, 0));
    for (int i = 0; i < acc.order; ++i)
      for (int j = 0; j < b.order; ++j) {
        // strip one level of parens from the accumulated name to keep
        // products flat: (x,y) + z -> (x,y,z)
        std::string left = acc.names[i];
        if (left.size() >= 2 && left.front() == '(' && left.back() == ')')
          left = left.substr(1, left.size() - 2);
        out.names.push_back("(" + left + "," + b.names[j] + ")");
        for (int k = 0; k < acc.order; ++k)
          for (int l = 0; l < b.order; ++l)
            out.table[i * b.order + j][k * b.order + l] =
                acc.table[i][k] * b.order + b.table[j][l];
      }
    acc = std::move(out);
  }
  return acc;
}

FiniteGroup make_group(const std::string& name, std::optional<int> parameter) {
  auto need_param = [&](int lo, int hi) {
    if (!parameter)
      throw std::invalid_argument("family '" + name + "' needs a parameter");
    if (*parameter < lo || *parameter > hi)
      throw std::invalid_argument("parameter out of range for '" + name + "'");
    return *parameter;
  };
  auto no_param = [&]() {
    if (parameter)
      throw std::invalid_argument("'" + name + "' does not take a parameter");
  };

  if (name == "cyclic") {
    int n = need_param(1, kMaxOrder);
    return cyclic(n, "Z" + std::to_string(n));
  }
  if (name == "dihedral") {
    int n = need_param(2, kMaxOrder);
    return dihedral(n, "D" + std::to_string(n));
  }
  if (name == "symmetric") {
    int m = need_param(1, 4);  // m > 4 rejected: order would exceed 24
    return symmetric(m, "S" + std::to_string(m));
  }
  if (name == "alternating") {
    int m = need_param(1, 4);
    return alternating(m, "A" + std::to_string(m));
  }
  if (name == "quaternion8") {
    no_param();
    return quaternion8();
  }
  if (name == "dicyclic12") {
    no_param();
    return dicyclic12();
  }
  if (name == "direct_product")
    throw std::invalid_argument(
        "direct_product takes group factors, not an integer; "
        "use a tag such as Z2xZ4 or call direct_product()");

  // Fixed catalog tags.
  no_param();
  if (name == "Q8") return quaternion8();
  if (name == "Dic3") return dicyclic12();
  if (name.size() >= 2 && name[0] == 'S') {
    int m;
    if (parse_int(name.substr(1), m) && m >= 1 && m <= 4)
      return symmetric(m, name);
  }
  if (name.size() >= 2 && name[0] == 'A') {
    int m;
    if (parse_int(name.substr(1), m) && m >= 1 && m <= 4)
      return alternating(m, name);
  }
  if (name.size() >= 2 && name[0] == 'D') {
    int n;
    if (parse_int(name.substr(1), n) && n >= 2 && n % 2 == 0 && n <= kMaxOrder)
      return dihedral(n, name);
  }
  if (name.size() >= 2 && name[0] == 'Z') {
    auto pieces = split(name, 'x');
    std::vector<FiniteGroup> factors;
    bool ok = true;
    long total = 1;
    for (const auto& piece : pieces) {
      int n;
      if (piece.size() < 2 || piece[0] != 'Z' || !parse_int(piece.substr(1), n) ||
          n < 1) {
        ok = false;
        break;
      }
      total *= n;
      factors.push_back(cyclic(n, piece));
    }
    if (ok && total <= kMaxOrder) {
      if (factors.size() == 1) return factors[0];
      FiniteGroup g = direct_product(factors);
      g.catalog_name = name;
      return g;
    }
  }
  throw std::invalid_argument(
      "unknown group '" + name +
      "'; families: cyclic, dihedral, symmetric, alternating, quaternion8, "
      "dicyclic12; tags: Zn, ZaxZb.., Dn, Sm, Am, Q8, Dic3");
}

int element_order(const FiniteGroup& g, int element) {
  if (element < 0 || element >= g.order)
    throw std::invalid_argument("element_order: index out of range");
  int k = 1, x = element;
  while (x != g.identity) {
    x = g.mul(x, element);
    ++k;
  }
  return k;
}

std::vector<int> involutions(const FiniteGroup& g) {
  std::vector<int> out;
  for (int x = 0; x < g.order; ++x)
    if (x != g.identity && g.mul(x, x) == g.identity) out.push_back(x);
  return out;
}

bool is_generating(const FiniteGroup& g, const std::vector<int>& s) {
  std::vector<char> in(g.order, 0);
  std::vector<int> closure{g.identity};
  in[g.identity] = 1;
  for (int x : s) {
    if (x < 0 || x >= g.order)
      throw std::invalid_argument("is_generating: index out of range");
    if (!in[x]) {
      in[x] = 1;
      closure.push_back(x);
    }
  }
  for (size_t i = 0; i < closure.size(); ++i)
    for (size_t j = 0; j < closure.size(); ++j) {
      int p = g.mul(closure[i], closure[j]);
      if (!in[p]) {
        in[p] = 1;
        closure.push_back(p);
      }
    }
  return static_cast<int>(closure.size()) == g.order;
}

std::vector<std::vector<int>> inverse_closed_subsets(
    const FiniteGroup& g, std::optional<int> size_filter,
    bool require_generating) {
  // Units: an involution alone, or an {x, x^-1} pair taken together.
  std::vector<std::vector<int>> units;
  for (int x = 0; x < g.order; ++x) {
    if (x == g.identity) continue;
    int y = g.inverse(x);
    if (y == x)
      units.push_back({x});
    else if (x < y)
      units.push_back({x, y});
  }
  int u = static_cast<int>(units.size());
  if (u > 20) throw std::invalid_argument("inverse_closed_subsets: group too large");

  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << u); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < u; ++i)
      if (mask & (1u << i)) s.insert(s.end(), units[i].begin(), units[i].end());
    std::sort(s.begin(), s.end());
    if (size_filter && static_cast<int>(s.size()) != *size_filter) continue;
    if (require_generating && !is_generating(g, s)) continue;
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& h) {
  std::vector<char> in(g.order, 0);
  for (int x : h) {
    if (x < 0 || x >= g.order) return false;
    if (in[x]) return false;  // repeated element
    in[x] = 1;
  }
  if (!in[g.identity]) return false;
  for (int a : h)
    for (int b : h)
      if (!in[g.mul(a, b)]) return false;
  return true;  // finite and closed implies inverse-closed
}

namespace {

std::vector<std::vector<int>> cosets_impl(const FiniteGroup& g,
                                          const std::vector<int>& h, bool left) {
  if (!is_subgroup(g, h))
    throw std::invalid_argument("cosets: h is not a subgroup");
  std::vector<char> seen(g.order, 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < g.order; ++x) {
    if (seen[x]) continue;
    std::vector<int> block;
    for (int a : h) block.push_back(left ? g.mul(x, a) : g.mul(a, x));
    std::sort(block.begin(), block.end());
    for (int y : block) seen[y] = 1;
    out.push_back(std::move(block));
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> left_cosets(const FiniteGroup& g,
                                          const std::vector<int>& h) {
  return cosets_impl(g, h, true);
}

std::vector<std::vector<int>> right_cosets(const FiniteGroup& g,
                                           const std::vector<int>& h) {
  return cosets_impl(g, h, false);
}

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
  if (g.order > 16)
    throw std::invalid_argument("all_subgroups: exhaustive scan capped at order 16");
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << g.order); ++mask) {
    if (!(mask & (1u << g.identity))) continue;
    std::vector<int> h;
    for (int x = 0; x < g.order; ++x)
      if (mask & (1u << x)) h.push_back(x);
    if (g.order % static_cast<int>(h.size()) != 0) continue;  // Lagrange
    bool closed = true;
    for (int a : h) {
      for (int b : h)
        if (!(mask & (1u << g.mul(a, b)))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

std::vector<std::string> catalog_names_of_order(int n) {
  switch (n) {
    case 1: return {"Z1"};
    case 2: return {"Z2"};
    case 3: return {"Z3"};
    case 4: return {"Z4", "Z2xZ2"};
    case 5: return {"Z5"};
    case 6: return {"Z6", "S3"};
    case 7: return {"Z7"};
    case 8: return {"Z8", "Z2xZ4", "Z2xZ2xZ2", "D8", "Q8"};
    case 9: return {"Z9", "Z3xZ3"};
    case 10: return {"Z10", "D10"};
    case 11: return {"Z11"};
    case 12: return {"Z12", "Z2xZ6", "D12", "A4", "Dic3"};
    default:
      throw std::invalid_argument(
          "catalog covers orders 1..12 only; request parametric families "
          "explicitly for larger orders");
  }
}

std::vector<FiniteGroup> groups_of_order(int n) {
  std::vector<FiniteGroup> out;
  for (const auto& tag : catalog_names_of_order(n)) out.push_back(make_group(tag));
  return out;
}

std::string group_to_json(const FiniteGroup& g) {
  nlohmann::ordered_json j;
  j["name"] = g.catalog_name;
  j["order"] = g.order;
  j["identity"] = g.identity;
  j["names"] = g.names;
  j["table"] = g.table;
  return j.dump(2) + "\n";
}

FiniteGroup group_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("group json: ") + e.what());
  }
  FiniteGroup g;
  try {
    g.catalog_name = j.at("name").get<std::string>();
    g.order = j.at("order").get<int>();
    g.identity = j.at("identity").get<int>();
    g.names = j.at("names").get<std::vector<std::string>>();
    g.table = j.at("table").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("group json: ") + e.what());
  }
  validate_group(g);
  return g;
}

}  // namespace sdcay
