#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hgg/group.hpp"
#include "hgg/table.hpp"

namespace hgg {

inline constexpr int kMaxPrime = 97;
inline constexpr int kMaxFieldOrder = 512;

// GF(p^m) as explicit tables. Element i is the polynomial sum c_k x^k with
// i = sum c_k p^k, so indices follow the lexicographic order of coefficient
// tuples (leading coefficient most significant): 0 is zero, 1 is one, and
// 0..p-1 is the prime subfield.
struct FiniteField {
  int p = 0;
  int m = 0;
  std::vector<int> modulus;  // low degree first, monic; empty when built from tables
  Table add_table;
  Table mul_table;
  Elem zero = 0;
  Elem one = 1;
  std::string name;

  int order() const noexcept { return add_table.rows(); }
  Elem add(Elem a, Elem b) const { return add_table(a, b); }
  Elem mul(Elem a, Elem b) const { return mul_table(a, b); }
  Elem neg(Elem a) const;
  Elem inv(Elem a) const;
  std::string element_to_string(Elem a) const;
};

FiniteField make_prime_field(int p);
// modulus: coefficients low degree first. Throws NotPrime, NotMonic,
// NotIrreducible (with a factor witness) or SizeLimitExceeded.
FiniteField make_extension_field(int p, const std::vector<int>& modulus);
// Least monic irreducible polynomial of degree m over GF(p), ordered like
// field elements (leading coefficients most significant).
std::vector<int> default_modulus(int p, int m);
// "GF(5)", "GF(4)", "GF(2^3)", "GF(4;x^2+x+1)".
FiniteField field_from_spec(std::string_view spec);
std::vector<int> parse_polynomial(std::string_view text, int p);
std::string polynomial_to_string(const std::vector<int>& coeffs);

// Nonzero elements under multiplication; group index i is field element i+1.
FiniteGroup multiplicative_group(const FiniteField& f);

struct FieldReport {
  bool ok = true;
  std::string failure;       // empty when ok
  std::vector<Elem> witness;
};

// Generic check on tables: additive abelian group with neutral `zero`,
// nonzero elements a cyclic commutative group with neutral `one`,
// distributivity. `commutative` = false relaxes the multiplicative group to
// an arbitrary group (division ring check).
FieldReport verify_field_tables(const Table& add, const Table& mul, Elem zero, Elem one, bool commutative = true);
FieldReport verify_field_axioms(const FiniteField& f);

// Field homomorphisms (all injective), lexicographic by image of the least
// multiplicative generator.
std::vector<std::vector<Elem>> field_embeddings(const FiniteField& from, const FiniteField& to);
std::optional<std::vector<Elem>> field_isomorphism(const FiniteField& a, const FiniteField& b);
bool is_field_homomorphism(const FiniteField& from, const FiniteField& to, const std::vector<Elem>& map);

}  // namespace hgg
