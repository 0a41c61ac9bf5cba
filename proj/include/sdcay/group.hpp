#pragma once

// Finite groups as explicit multiplication tables, plus the complete catalog
// of isomorphism classes of order 1..12 and the subset machinery built on it.
//
// Element naming is fixed per family so command-line inputs are reproducible:
//   cyclic Zn        "0".."n-1"
//   dihedral of order 2m   rotations "e","r","r2",..  reflections "s","rs","r2s",..
//   symmetric/alternating  1-based cycle notation, "e","(12)","(123)",...
//   quaternion Q8    "1","-1","i","-i","j","-j","k","-k"
//   dicyclic Dic3    "e","b","b2","a","ab",..,"a3b2"  (index = 3i+j for a^i b^j)
//   direct products  component tuples "(x,y)" / "(x,y,z)"

#include <optional>
#include <string>
#include <vector>

namespace sdcay {

struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> table;  // table[i][j] = index of g_i * g_j
  int identity = 0;
  std::vector<std::string> names;
  std::string catalog_name;

  int mul(int a, int b) const { return table[a][b]; }
  int inverse(int a) const;
  // Index of the named element, or -1.
  int index_of(const std::string& name) const;
  bool is_abelian() const;
};

// Full invariant check: Latin square, associativity (all triples), two-sided
// identity, unique inverses. Throws std::invalid_argument with a reason.
void validate_group(const FiniteGroup& g);

// Constructs a group from a family name ("cyclic", "dihedral", "symmetric",
// "alternating", "quaternion8", "dicyclic12") with its parameter, or from a
// fixed catalog tag ("Z6", "D8", "Q8", "A4", "Dic3", "Z2xZ6", ...).
// The dihedral parameter is the group ORDER (D8 has 8 elements).
// Orders are capped at 24.
FiniteGroup make_group(const std::string& name,
                       std::optional<int> parameter = std::nullopt);

FiniteGroup direct_product(const std::vector<FiniteGroup>& factors);

// Smallest k >= 1 with g^k = e.
int element_order(const FiniteGroup& g, int element);

std::vector<int> involutions(const FiniteGroup& g);

// Closure of S under multiplication; true iff it is all of G.
bool is_generating(const FiniteGroup& g, const std::vector<int>& s);

// Every S subset of G\{e} with S = S^-1, optionally filtered by exact size
// and/or generation. Built by combining involutions and inverse pairs as
// units; returned in lexicographic order of the sorted index lists.
std::vector<std::vector<int>> inverse_closed_subsets(
    const FiniteGroup& g, std::optional<int> size_filter = std::nullopt,
    bool require_generating = false);

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& h);

// Cosets as a partition of 0..n-1; blocks sorted, ordered by least element.
// Throws if h is not a subgroup.
std::vector<std::vector<int>> left_cosets(const FiniteGroup& g,
                                          const std::vector<int>& h);
std::vector<std::vector<int>> right_cosets(const FiniteGroup& g,
                                           const std::vector<int>& h);

// All subgroups of g, by exhaustive subset scan (order <= 12 intended).
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g);

// Canonical catalog tags per order, complete for 1 <= n <= 12.
std::vector<std::string> catalog_names_of_order(int n);

// One representative per isomorphism class of groups of order n <= 12.
std::vector<FiniteGroup> groups_of_order(int n);

// JSON group file {"name","order","identity","names","table"}; import
// validates every invariant before accepting.
std::string group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const std::string& text);

}  // namespace sdcay
