#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hgg/field.hpp"
#include "hgg/hypergroup.hpp"

namespace hgg {

inline constexpr int kIsomorphismBound = 24;
inline constexpr int kMaxVectorSpaceSize = 512;

// f = (f0, f1): f0 maps H-indices to H'-indices, f1 maps M-indices to
// M'-indices.
struct HgMorphism {
  std::vector<Elem> f0;
  std::vector<Elem> f1;
  std::shared_ptr<const HypergroupOverGroup> source;
  std::shared_ptr<const HypergroupOverGroup> target;
};

struct MorphismCheck {
  bool ok = true;
  std::string relation;  // "f0 homomorphism", "Phi", "Psi", "Xi" or "Lambda"
  std::vector<Elem> witness;
};

// Checks f0 is a homomorphism and the four relations
//   f1(a^alpha)  = f1(a)^f0(alpha)      f0(^a alpha) = ^f1(a) f0(alpha)
//   f1([a, b])   = [f1(a), f1(b)]        f0((a, b))   = (f1(a), f1(b))
// Throws ShapeMismatch when array sizes or entries do not fit.
MorphismCheck verify_morphism(const HypergroupOverGroup& source, const HypergroupOverGroup& target,
                              const std::vector<Elem>& f0, const std::vector<Elem>& f1);
MorphismCheck verify_morphism(const HgMorphism& m);

HgMorphism identity_morphism(std::shared_ptr<const HypergroupOverGroup> hg);
// Apply `first`, then `second`. Throws NotComposable unless first.target and
// second.source share the same structure.
HgMorphism compose(const HgMorphism& first, const HgMorphism& second);

// Deterministic first isomorphism: group isomorphisms H -> H' in
// lexicographic order, then backtracking over f1 with f1(o) = o' and
// propagation through Phi and Xi.
std::optional<HgMorphism> find_isomorphism(std::shared_ptr<const HypergroupOverGroup> a,
                                           std::shared_ptr<const HypergroupOverGroup> b, int bound = kIsomorphismBound);
std::optional<HgMorphism> find_isomorphism(const HypergroupOverGroup& a, const HypergroupOverGroup& b,
                                           int bound = kIsomorphismBound);

// Isomorphism invariant used to bucket candidates before a full search.
std::vector<long long> hypergroup_fingerprint(const HypergroupOverGroup& hg);

// Group functor: M |-> M_E with Xi the group table, everything else trivial.
HypergroupOverGroup functor_group(const FiniteGroup& m);
// (1_E, f1) for a group homomorphism f1. Throws NotAHomomorphism.
HgMorphism functor_group_map(const FiniteGroup& from, const FiniteGroup& to, const std::vector<Elem>& f1);

// Vector-space functor: M = k^dim (first coordinate most significant),
// H = k*, Phi scalar multiplication, Xi addition, Psi(a, alpha) = alpha,
// Lambda = epsilon.
HypergroupOverGroup functor_vector_space(const FiniteField& k, int dim);
// Index of a coordinate vector in functor_vector_space(k, dim) and back.
int vector_index(const FiniteField& k, const std::vector<Elem>& coords);
std::vector<Elem> vector_coords(const FiniteField& k, int dim, int index);
// (1_H, v |-> v A) for a dim_in x dim_out matrix A of field elements.
HgMorphism functor_vector_space_map(const FiniteField& k, int dim_in, int dim_out,
                                    const std::vector<std::vector<Elem>>& matrix);

// Field functor: M = F, H = F*, Phi multiplication, Xi addition.
HypergroupOverGroup functor_field(const FiniteField& f);
// (f restricted to F*, f) for a field homomorphism. Throws NotAHomomorphism.
HgMorphism functor_field_map(const FiniteField& from, const FiniteField& to, const std::vector<Elem>& map);

enum class FieldDiagnostic {
  Ok,
  PsiNotTrivial,
  LamNotTrivial,
  XiNotAbelianGroup,
  HNotAbelian,
  PhiNotEndomorphism,
  TNotInjective,
  NotAdditivelyClosed,
  NotAField,
};
std::string to_string(FieldDiagnostic d);

struct FieldReconstruction {
  FieldDiagnostic diagnostic = FieldDiagnostic::Ok;
  std::string detail;
  std::vector<Elem> witness;
  // Elements of k as endomorphisms of (M, Xi): index 0 is the zero
  // endomorphism zeta (a |-> o), index 1 is t(epsilon).
  std::vector<std::vector<Elem>> endomorphisms;
  std::optional<FiniteField> field;
  // The additive group of k is isomorphic to (M, Xi) through evaluation at a
  // nonzero element, i.e. M is one-dimensional over k.
  bool is_field_hypergroup = false;

  bool ok() const { return diagnostic == FieldDiagnostic::Ok; }
};

// Recovers the scalar field k = t(H) u {zeta}. With strict = false the
// abelian-H condition is skipped and the final check accepts a division ring.
FieldReconstruction reconstruct_field(const HypergroupOverGroup& hg, bool strict = true);

}  // namespace hgg
