#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "hgg/category.hpp"

namespace hgg {

struct CatalogEntry {
  HypergroupOverGroup hg;
  std::string provenance;
  int class_id = 0;
  // Isomorphism from the class representative to this entry.
  std::vector<Elem> cert_f0;
  std::vector<Elem> cert_f1;
};

struct ClassStats {
  int m_size;
  int h_order;
  bool xi_is_group;
  bool xi_commutative;
  int classes = 0;
  int entries = 0;
};

// Isomorphism classes in first-occurrence order.
class Catalog {
 public:
  // Returns the class id of the inserted entry.
  int insert(HypergroupOverGroup hg, std::string provenance);

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  // Entry index of each class representative, by class id.
  const std::vector<std::size_t>& class_reps() const noexcept { return reps_; }
  const CatalogEntry& representative(int class_id) const { return entries_[reps_[class_id]]; }
  int class_count() const noexcept { return static_cast<int>(reps_.size()); }
  // Sorted by (m_size, h_order, xi_is_group, xi_commutative).
  std::vector<ClassStats> stats() const;

 private:
  std::vector<CatalogEntry> entries_;
  std::vector<std::size_t> reps_;
  std::map<std::vector<long long>, std::vector<int>> buckets_;  // fingerprint -> class ids
};

inline constexpr int kMaxSweepOrder = 24;
inline constexpr int kMaxAbstractM = 3;
inline constexpr int kMaxAbstractH = 3;

// Standard constructions over every builtin group of order <= max_group_order,
// every subgroup and every transversal (sampled to transversal_cap with
// `seed`). Throws InternalInconsistency if a construction fails its axioms.
Catalog sweep_standard(int max_group_order, std::uint64_t transversal_cap = kTransversalSampleCap,
                       std::uint64_t seed = 0);
// Like sweep_standard for a single (G, H).
Catalog sweep_pair(const FiniteGroup& g, const Subgroup& h, std::uint64_t transversal_cap = kTransversalSampleCap,
                   std::uint64_t seed = 0);

// Every hypergroup over h with |M| = m_size satisfying P1-P4, up to
// isomorphism (the left neutral is normalised to 0).
Catalog enumerate_abstract(int m_size, const FiniteGroup& h);

struct UniversalityMatch {
  int abstract_class;
  bool matched;
  int standard_class = -1;  // when matched
};
struct UniversalityReport {
  std::vector<UniversalityMatch> matches;
  int unmatched() const;
};
UniversalityReport universality_probe(const Catalog& abstract, const Catalog& standard);

// Writes class_<id>_entry_<n>.json for every entry and summary.csv.
void export_catalog(const Catalog& catalog, const std::filesystem::path& dir);
std::string catalog_summary_csv(const Catalog& catalog);

}  // namespace hgg
