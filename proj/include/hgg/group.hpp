#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hgg/table.hpp"

namespace hgg {

inline constexpr int kDefaultEnumerationBound = 24;
inline constexpr int kMaxSpecOrder = 1024;

// A finite group on the dense element set 0..order-1.
//
// mul(i, j) is the element written i·j; for permutation groups this means
// "apply i first, then j" (see group_from_spec). The identity need not be
// element 0 for groups read from a Cayley table, but it is for every builtin
// family.
class FiniteGroup {
 public:
  int order() const noexcept { return table_.rows(); }
  Elem mul(Elem a, Elem b) const { return table_(a, b); }
  Elem identity() const noexcept { return identity_; }
  Elem inv(Elem a) const { return inverse_[a]; }
  const Table& table() const noexcept { return table_; }
  const std::vector<Elem>& inverses() const noexcept { return inverse_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  Elem power(Elem a, int k) const;
  int element_order(Elem a) const;
  bool is_abelian() const;

  // Structural equality: same table (names are ignored).
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  friend FiniteGroup group_from_cayley_table(const Table&, std::string);

  Table table_;
  Elem identity_ = 0;
  std::vector<Elem> inverse_;
  std::string name_;
};

struct Subgroup {
  std::vector<Elem> elements;  // sorted ascending, parent indices

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(Elem x) const;
  // Position of x in `elements`, or -1.
  int index_of(Elem x) const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

struct CosetDecomposition {
  Subgroup subgroup;
  std::vector<std::vector<Elem>> cosets;  // each sorted; identity's coset first
  std::vector<int> coset_of;              // element -> coset index
};

// Validates a Cayley table and derives identity and inverses. Throws
// NotClosed, NotAssociative, NoIdentity or NoInverse with a witness.
FiniteGroup group_from_cayley_table(const Table& table, std::string name = {});

// Builtin families: E, Zn, Sn (n <= 5), Dn (order 2n, n <= 8), Q8 and direct
// products joined by 'x' (e.g. "Z2xZ2", "Z2xS3").
//
// Element orderings:
//   Zn  residues 0..n-1.
//   Sn  permutations in lexicographic order of one-line notation; the product
//       p·q applies p first: (p·q)(x) = q(p(x)).
//   Dn  s^f r^k stored at index f*n + k, with r rotation, s reflection
//       (r s = s r^-1).
//   Q8  1, -1, i, -i, j, -j, k, -k.
//   AxB pair (a, b) at index a*|B| + b.
FiniteGroup group_from_spec(std::string_view spec);

// Spec strings of the builtin sweep list with order <= max_order, in a fixed
// order (by order, then as listed).
std::vector<std::string> builtin_group_specs(int max_order);

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<Elem>& generators);
// All subgroups, sorted by size then lexicographically by element list.
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, int bound = kDefaultEnumerationBound);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
CosetDecomposition right_cosets(const FiniteGroup& g, const Subgroup& h);
// Group on coset indices (as ordered by right_cosets). Throws NotNormal.
FiniteGroup quotient_group(const FiniteGroup& g, const Subgroup& h);
// The subgroup as a standalone group on 0..|H|-1 (index i <-> elements[i]).
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

// Greedy generating set: repeatedly adds the least element outside the span.
std::vector<Elem> greedy_generators(const FiniteGroup& g);
std::vector<int> order_profile(const FiniteGroup& g);  // sorted element orders

// Lexicographically first isomorphism g1 -> g2 as an image array.
std::optional<std::vector<Elem>> group_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2,
                                                   int bound = kDefaultEnumerationBound);
// All isomorphisms, lexicographic order.
std::vector<std::vector<Elem>> all_group_isomorphisms(const FiniteGroup& g1, const FiniteGroup& g2,
                                                      int bound = kDefaultEnumerationBound);
// All homomorphisms g1 -> g2, lexicographic order of generator images.
std::vector<std::vector<Elem>> all_group_homomorphisms(const FiniteGroup& g1, const FiniteGroup& g2);
bool is_homomorphism(const FiniteGroup& g1, const FiniteGroup& g2, const std::vector<Elem>& map);

// Text format: first line n, then n rows of n indices.
FiniteGroup parse_cayley_text(std::string_view text, std::string name = {});
std::string to_cayley_text(const FiniteGroup& g);

}  // namespace hgg
