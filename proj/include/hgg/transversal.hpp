#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "hgg/group.hpp"

namespace hgg {

struct Decomposition {
  Elem h_part;  // parent index, lies in H
  Elem m_part;  // parent index, lies in M
  int m_index;  // position of m_part in the transversal (= its coset index)

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// A right transversal: reps[i] is the chosen element of right coset i, with
// cosets ordered as in right_cosets (identity's coset first, so reps[0] is the
// element the hypergroup calls o).
class Transversal {
 public:
  // Throws NotATransversal when reps does not pick one element per coset.
  // Accepts the representatives in any order and sorts them by coset.
  Transversal(const FiniteGroup& g, const Subgroup& h, const std::vector<Elem>& reps);
  Transversal(std::shared_ptr<const FiniteGroup> g, std::shared_ptr<const CosetDecomposition> cosets,
              const std::vector<Elem>& reps);

  const FiniteGroup& group() const noexcept { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const noexcept { return group_; }
  const Subgroup& subgroup() const noexcept { return cosets_->subgroup; }
  const CosetDecomposition& cosets() const noexcept { return *cosets_; }
  const std::vector<Elem>& reps() const noexcept { return reps_; }
  int index() const noexcept { return static_cast<int>(reps_.size()); }

  // Unique x = alpha · a with alpha in H, a in M.
  Decomposition decompose(Elem x) const;

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::shared_ptr<const CosetDecomposition> cosets_;
  std::vector<Elem> reps_;
};

bool is_right_transversal(const FiniteGroup& g, const Subgroup& h, const std::vector<Elem>& candidate);
// The same property through the factorisation map H x M -> G.
bool is_right_complement(const FiniteGroup& g, const Subgroup& h, const std::vector<Elem>& candidate);
// The same property as the image of a section of the coset map.
bool is_section_image(const FiniteGroup& g, const Subgroup& h, const std::vector<Elem>& candidate);

// |H|^[G:H], saturating at UINT64_MAX.
std::uint64_t transversal_count(const FiniteGroup& g, const Subgroup& h);

// Transversal at position `rank` of the lexicographic enumeration (mixed radix
// over cosets, coset 0 most significant).
Transversal transversal_at(const FiniteGroup& g, const Subgroup& h, std::uint64_t rank);

// Lexicographic enumeration; stops after `limit` items when given.
std::vector<Transversal> enumerate_transversals(const FiniteGroup& g, const Subgroup& h,
                                                std::optional<std::uint64_t> limit = std::nullopt);

// Visits every transversal, or `cap` of them chosen uniformly without
// replacement (in enumeration order) from a generator seeded with `seed`.
void for_each_transversal(const FiniteGroup& g, const Subgroup& h, std::uint64_t cap, std::uint64_t seed,
                          const std::function<void(const Transversal&)>& visit);

struct NeutralDecomposition {
  Elem theta;  // parent index in H, theta = o^-1
  Elem o;      // parent index, reps()[0]
};
NeutralDecomposition neutral_decomposition(const Transversal& t);

// a^-1 = a^(-1) · a^[-1]
struct InverseDecomposition {
  Elem h_part;
  Elem m_part;
  int m_index;
};
InverseDecomposition inverse_decomposition(const Transversal& t, Elem a);

}  // namespace hgg
