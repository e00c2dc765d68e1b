#include <algorithm>

#include "hgg/error.hpp"
#include "hgg/hypergroup.hpp"

namespace hgg {

AmbientData ambient_data(const HypergroupOverGroup& hg) {
  if (!hg.ambient) throw Error(ErrorCode::NoAmbient, "hypergroup carries no (G, H, M) provenance");
  const Ambient& amb = *hg.ambient;
  const Transversal t = amb.to_transversal();
  if (t.reps() != amb.transversal || static_cast<int>(amb.transversal.size()) != hg.m_size ||
      static_cast<int>(amb.subgroup.size()) != hg.h.order())
    throw Error(ErrorCode::MalformedTables, "ambient transversal does not match the M indexing");
  AmbientData data;
  data.theta = amb.subgroup.index_of(neutral_decomposition(t).theta);
  data.inv_h.resize(hg.m_size);
  data.inv_m.resize(hg.m_size);
  for (Elem a = 0; a < hg.m_size; ++a) {
    const auto inv = inverse_decomposition(t, amb.transversal[a]);
    data.inv_h[a] = amb.subgroup.index_of(inv.h_part);
    data.inv_m[a] = inv.m_index;
  }
  return data;
}

namespace {

LemmaSolution solve_with(const HypergroupOverGroup& hg, const AmbientData& ad, Elem a, Elem b) {
  const Elem ah = ad.inv_h[a];  // a^(-1)
  const Elem am = ad.inv_m[a];  // a^[-1]
  const Elem b_shift = hg.phi(b, ah);
  const Elem x = hg.xi(b_shift, am);
  const auto& H = hg.h;
  const Elem companion = H.mul(H.mul(hg.lam(x, a), hg.psi(b, ah)), hg.lam(b_shift, am));
  return {x, companion == H.identity()};
}

}  // namespace

LemmaSolution lemma_solve(const HypergroupOverGroup& hg, Elem a, Elem b) {
  if (a < 0 || a >= hg.m_size || b < 0 || b >= hg.m_size)
    throw Error(ErrorCode::IndexOutOfRange, "arguments must lie in [0, " + std::to_string(hg.m_size) + ")");
  return solve_with(hg, ambient_data(hg), a, b);
}

IdentityReport check_derived_identities(const HypergroupOverGroup& hg) {
  const AmbientData ad = ambient_data(hg);
  const auto& H = hg.h;
  const int m = hg.m_size, n = H.order();
  const Elem eps = H.identity();
  const Elem theta = ad.theta;
  const Elem theta_inv = H.inv(theta);
  const Elem o = hg.o;

  IdentityReport report;
  auto add = [&](std::string name, std::vector<Elem> witness) {
    const bool pass = witness.empty();
    report.overall = report.overall && pass;
    report.identities.push_back({std::move(name), pass, std::move(witness)});
  };
  auto first_a = [&](auto&& holds) -> std::vector<Elem> {
    for (Elem a = 0; a < m; ++a)
      if (!holds(a)) return {a};
    return {};
  };
  auto first_alpha = [&](auto&& holds) -> std::vector<Elem> {
    for (Elem al = 0; al < n; ++al)
      if (!holds(al)) return {al};
    return {};
  };

  add("inverse: [a^[-1], a] = o", first_a([&](Elem a) { return hg.xi(ad.inv_m[a], a) == o; }));
  add("inverse: a^(-1) . (a^[-1], a) = theta",
      first_a([&](Elem a) { return H.mul(ad.inv_h[a], hg.lam(ad.inv_m[a], a)) == theta; }));

  std::vector<Elem> companion, solution;
  for (Elem a = 0; a < m && (companion.empty() || solution.empty()); ++a)
    for (Elem b = 0; b < m; ++b) {
      const auto s = solve_with(hg, ad, a, b);
      if (!s.companion_holds && companion.empty()) companion = {a, b};
      if (hg.xi(s.x, a) != b && solution.empty()) solution = {a, b};
    }
  add("companion: ([b^a^(-1), a^[-1]], a) . ^b(a^(-1)) . (b^a^(-1), a^[-1]) = eps", companion);
  add("solution: [[b^a^(-1), a^[-1]], a] = b", solution);

  add("conjugation: ^o alpha = theta^-1 . alpha . theta",
      first_alpha([&](Elem al) { return hg.psi(o, al) == H.mul(H.mul(theta_inv, al), theta); }));
  add("[o, a] = a", first_a([&](Elem a) { return hg.xi(o, a) == a; }));
  add("o^alpha = o", first_alpha([&](Elem al) { return hg.phi(o, al) == o; }));
  add("a^eps = a", first_a([&](Elem a) { return hg.phi(a, eps) == a; }));
  add("^a eps = eps", first_a([&](Elem a) { return hg.psi(a, eps) == eps; }));
  add("[a, o] = a^(theta^-1)", first_a([&](Elem a) { return hg.xi(a, o) == hg.phi(a, theta_inv); }));
  add("(a, o) = ^a(theta^-1)", first_a([&](Elem a) { return hg.lam(a, o) == hg.psi(a, theta_inv); }));
  return report;
}

NormalCaseReport check_normal_case(const FiniteGroup& g, const Subgroup& h, std::uint64_t cap, std::uint64_t seed) {
  if (!is_normal(g, h)) throw Error(ErrorCode::NotNormal, "check_normal_case needs a normal subgroup");
  const FiniteGroup quotient = quotient_group(g, h);
  NormalCaseReport report;
  std::optional<FiniteGroup> first;
  auto fail = [&](std::string what) {
    if (report.failures.size() < 16) report.failures.push_back(std::move(what));
  };
  for_each_transversal(g, h, cap, seed, [&](const Transversal& t) {
    ++report.transversals_checked;
    const auto hg = standard_construction(t);
    std::string label = "M = {";
    for (std::size_t i = 0; i < t.reps().size(); ++i) label += (i ? "," : "") + std::to_string(t.reps()[i]);
    label += "}";
    for (Elem a = 0; a < hg.m_size; ++a)
      for (Elem al = 0; al < hg.h_order(); ++al)
        if (hg.phi(a, al) != a && report.phi_trivial) {
          report.phi_trivial = false;
          fail(label + ": phi(" + std::to_string(a) + ", " + std::to_string(al) + ") != " + std::to_string(a));
        }
    if (!is_group_quasigroup(hg)) {
      report.xi_is_group = false;
      fail(label + ": xi is not associative");
      return;
    }
    const FiniteGroup mx = xi_group(hg);
    if (!group_isomorphism(mx, quotient, std::max(kDefaultEnumerationBound, mx.order()))) {
      report.iso_to_quotient = false;
      fail(label + ": (M, Xi) is not isomorphic to G/H");
    }
    if (!first) {
      first = mx;
    } else if (!group_isomorphism(*first, mx, std::max(kDefaultEnumerationBound, mx.order()))) {
      report.pairwise_isomorphic = false;
      fail(label + ": (M, Xi) differs from the first transversal's group");
    }
  });
  return report;
}

}  // namespace hgg
