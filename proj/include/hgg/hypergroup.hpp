#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgg/group.hpp"
#include "hgg/table.hpp"
#include "hgg/transversal.hpp"

namespace hgg {

inline constexpr std::uint64_t kTransversalSampleCap = 10'000;

// Provenance of a standard construction: the triple (G, H, M) in parent
// indices. H-index i of the hypergroup is subgroup.elements[i]; M-index i is
// transversal[i].
struct Ambient {
  FiniteGroup group;
  Subgroup subgroup;
  std::vector<Elem> transversal;

  Transversal to_transversal() const { return Transversal(group, subgroup, transversal); }
};

// A right hypergroup over a group: a set M = {0..m_size-1}, a group H and the
// four structure maps
//   phi(a, alpha) = a^alpha        M x H -> M
//   psi(a, alpha) = ^a alpha       M x H -> H
//   xi(a, b)      = [a, b]         M x M -> M
//   lam(a, b)     = (a, b)         M x M -> H
// with left neutral o of xi.
struct HypergroupOverGroup {
  int m_size = 0;
  FiniteGroup h;
  Table phi;
  Table psi;
  Table xi;
  Table lam;
  Elem o = 0;
  std::optional<Ambient> ambient;

  int h_order() const noexcept { return h.order(); }

  // Compares the structure only; ambient provenance is ignored.
  bool same_structure(const HypergroupOverGroup& other) const;
};

enum class Axiom { P1, P2, P3, A1, A2, A3, A4, A5 };
inline constexpr std::array<Axiom, 8> kAllAxioms{Axiom::P1, Axiom::P2, Axiom::P3, Axiom::A1,
                                                 Axiom::A2, Axiom::A3, Axiom::A4, Axiom::A5};
std::string to_string(Axiom a);

// A failing argument tuple. `law` names the particular equation inside the
// axiom (P1 has "left-neutral" and "quasigroup", P2 has "unit" and "A0").
struct Witness {
  std::string law;
  std::vector<Elem> args;
  std::string detail;
};

struct AxiomStatus {
  Axiom axiom;
  bool pass = true;
  std::optional<Witness> witness;
};

struct AxiomReport {
  std::vector<AxiomStatus> statuses;  // in kAllAxioms order
  bool overall = true;

  const AxiomStatus& status(Axiom a) const;
};

// Tables from the unique factorisations a·alpha = ^a alpha · a^alpha and
// a·b = (a, b) · [a, b]. Throws NotATransversal.
HypergroupOverGroup standard_construction(const FiniteGroup& g, const Subgroup& h, const std::vector<Elem>& reps);
HypergroupOverGroup standard_construction(const Transversal& t);

// Throws MalformedTables on a wrong table shape or an out-of-range entry.
void check_shapes(const HypergroupOverGroup& hg);

// Throws MalformedTables when a table has the wrong shape or an entry out of
// range; otherwise checks every axiom exhaustively and records the
// lexicographically first failing tuple of each.
AxiomReport verify_axioms(const HypergroupOverGroup& hg);
// Re-evaluates the equation named by `w` at its arguments; true if it fails.
bool witness_reproduces(const HypergroupOverGroup& hg, Axiom axiom, const Witness& w);

// Unique x with [x, a] = b, by scanning column a.
Elem quasigroup_divide(const HypergroupOverGroup& hg, Elem a, Elem b);

struct LemmaSolution {
  Elem x;
  bool companion_holds;  // (x, a) · ^b(a^(-1)) · (b^(a^(-1)), a^[-1]) = epsilon
};
// x = [b^(a^(-1)), a^[-1]] using the ambient inverse decomposition of a.
LemmaSolution lemma_solve(const HypergroupOverGroup& hg, Elem a, Elem b);

// H-local inverse decomposition and neutral decomposition from the ambient
// triple: a^-1 = a^(-1) · a^[-1], e = theta · o.
struct AmbientData {
  Elem theta;                        // H-index
  std::vector<Elem> inv_h;           // a -> a^(-1), H-index
  std::vector<Elem> inv_m;           // a -> a^[-1], M-index
};
AmbientData ambient_data(const HypergroupOverGroup& hg);

struct IdentityStatus {
  std::string name;
  bool pass = true;
  std::vector<Elem> witness;
};
struct IdentityReport {
  std::vector<IdentityStatus> identities;
  bool overall = true;
};
IdentityReport check_derived_identities(const HypergroupOverGroup& hg);

// First (a, b, c) with [[a, b], c] != [a, [b, c]].
std::optional<std::array<Elem, 3>> xi_associativity_witness(const HypergroupOverGroup& hg);
// True iff xi is associative. Throws InternalInconsistency if it is
// associative but not a group (impossible under P1).
bool is_group_quasigroup(const HypergroupOverGroup& hg);
bool is_xi_commutative(const HypergroupOverGroup& hg);
// (M, Xi) as a group; requires is_group_quasigroup.
FiniteGroup xi_group(const HypergroupOverGroup& hg);

struct NormalCaseReport {
  std::uint64_t transversals_checked = 0;
  bool phi_trivial = true;
  bool xi_is_group = true;
  bool iso_to_quotient = true;
  bool pairwise_isomorphic = true;
  std::vector<std::string> failures;
  bool overall() const { return phi_trivial && xi_is_group && iso_to_quotient && pairwise_isomorphic; }
};
// Throws NotNormal.
NormalCaseReport check_normal_case(const FiniteGroup& g, const Subgroup& h, std::uint64_t cap = kTransversalSampleCap,
                                   std::uint64_t seed = 0);

}  // namespace hgg
