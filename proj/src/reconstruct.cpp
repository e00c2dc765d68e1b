#include <algorithm>
#include <map>

#include "hgg/category.hpp"
#include "hgg/error.hpp"

namespace hgg {

std::string to_string(FieldDiagnostic d) {
  switch (d) {
    case FieldDiagnostic::Ok: return "Ok";
    case FieldDiagnostic::PsiNotTrivial: return "PsiNotTrivial";
    case FieldDiagnostic::LamNotTrivial: return "LamNotTrivial";
    case FieldDiagnostic::XiNotAbelianGroup: return "XiNotAbelianGroup";
    case FieldDiagnostic::HNotAbelian: return "HNotAbelian";
    case FieldDiagnostic::PhiNotEndomorphism: return "PhiNotEndomorphism";
    case FieldDiagnostic::TNotInjective: return "TNotInjective";
    case FieldDiagnostic::NotAdditivelyClosed: return "NotAdditivelyClosed";
    case FieldDiagnostic::NotAField: return "NotAField";
  }
  return "?";
}

FieldReconstruction reconstruct_field(const HypergroupOverGroup& hg, bool strict) {
  FieldReconstruction r;
  auto fail = [&](FieldDiagnostic d, std::string detail, std::vector<Elem> witness) {
    r.diagnostic = d;
    r.detail = std::move(detail);
    r.witness = std::move(witness);
    return r;
  };
  const int m = hg.m_size, n = hg.h_order();
  const auto& H = hg.h;

  // (i) Psi and Lambda trivial
  for (Elem a = 0; a < m; ++a)
    for (Elem al = 0; al < n; ++al)
      if (hg.psi(a, al) != al) return fail(FieldDiagnostic::PsiNotTrivial, "^a alpha != alpha", {a, al});
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      if (hg.lam(a, b) != H.identity()) return fail(FieldDiagnostic::LamNotTrivial, "(a, b) != epsilon", {a, b});

  // (ii) (M, Xi) abelian group with neutral o
  for (Elem a = 0; a < m; ++a) {
    if (hg.xi(a, hg.o) != a || hg.xi(hg.o, a) != a)
      return fail(FieldDiagnostic::XiNotAbelianGroup, "o is not two-sided neutral", {a});
    bool has_inverse = false;
    for (Elem b = 0; b < m; ++b) {
      if (hg.xi(a, b) != hg.xi(b, a)) return fail(FieldDiagnostic::XiNotAbelianGroup, "Xi is not commutative", {a, b});
      has_inverse = has_inverse || hg.xi(a, b) == hg.o;
    }
    if (!has_inverse) return fail(FieldDiagnostic::XiNotAbelianGroup, "no inverse", {a});
  }
  if (auto w = xi_associativity_witness(hg))
    return fail(FieldDiagnostic::XiNotAbelianGroup, "Xi is not associative", {(*w)[0], (*w)[1], (*w)[2]});

  // (iii) H abelian, t: H -> End(M, Xi) injective
  if (strict && !H.is_abelian()) {
    for (Elem al = 0; al < n; ++al)
      for (Elem be = 0; be < n; ++be)
        if (H.mul(al, be) != H.mul(be, al)) return fail(FieldDiagnostic::HNotAbelian, "H is not abelian", {al, be});
  }
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(m));
  for (Elem al = 0; al < n; ++al)
    for (Elem a = 0; a < m; ++a) t[al][a] = hg.phi(a, al);
  for (Elem al = 0; al < n; ++al)
    for (Elem a = 0; a < m; ++a)
      for (Elem b = 0; b < m; ++b)
        if (t[al][hg.xi(a, b)] != hg.xi(t[al][a], t[al][b]))
          return fail(FieldDiagnostic::PhiNotEndomorphism, "Phi_alpha does not preserve Xi", {al, a, b});
  for (Elem al = 0; al < n; ++al)
    for (Elem be = al + 1; be < n; ++be)
      if (t[al] == t[be]) return fail(FieldDiagnostic::TNotInjective, "t(alpha) = t(beta)", {al, be});

  // k = t(H) u {zeta}: zeta first, then t(epsilon), then the rest of H
  const std::vector<Elem> zeta(m, hg.o);
  std::vector<Elem> h_order_of_k{H.identity()};
  for (Elem al = 0; al < n; ++al)
    if (al != H.identity()) h_order_of_k.push_back(al);
  r.endomorphisms.push_back(zeta);
  std::map<std::vector<Elem>, Elem> index_of{{zeta, 0}};
  std::vector<Elem> k_of_h(n, 0);
  for (Elem al : h_order_of_k) {
    auto [it, inserted] = index_of.emplace(t[al], static_cast<Elem>(r.endomorphisms.size()));
    if (inserted) r.endomorphisms.push_back(t[al]);
    k_of_h[al] = it->second;
  }
  const int q = static_cast<int>(r.endomorphisms.size());

  Table add(q, q), mul(q, q, 0);
  std::vector<Elem> sum(m);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      for (Elem a = 0; a < m; ++a) sum[a] = hg.xi(r.endomorphisms[i][a], r.endomorphisms[j][a]);
      auto it = index_of.find(sum);
      if (it == index_of.end())
        return fail(FieldDiagnostic::NotAdditivelyClosed, "sum of k elements leaves t(H) u {zeta}", {i, j});
      add(i, j) = it->second;
    }
  for (Elem al = 0; al < n; ++al)
    for (Elem be = 0; be < n; ++be) {
      const Elem cell = k_of_h[H.mul(al, be)];
      Elem& slot = mul(k_of_h[al], k_of_h[be]);
      slot = cell;
    }
  // t(alpha) = zeta only happens when |M| = 1; zeta then stays absorbing
  for (int i = 0; i < q; ++i) mul(0, i) = mul(i, 0) = 0;

  if (q < 2) return fail(FieldDiagnostic::NotAField, "k has a single element", {});
  const FieldReport fr = verify_field_tables(add, mul, 0, 1, strict);
  if (!fr.ok) return fail(FieldDiagnostic::NotAField, fr.failure, fr.witness);

  FiniteField field;
  field.add_table = add;
  field.mul_table = mul;
  field.zero = 0;
  field.one = 1;
  int p = 1;
  for (Elem x = 1; x != 0; x = add(x, 1)) ++p;
  field.p = p;
  field.m = 0;
  for (int rest = q; rest > 1 && rest % p == 0; rest /= p) ++field.m;
  field.name = "k(" + std::to_string(q) + ")";
  r.field = std::move(field);

  // M one-dimensional over k: evaluation at a nonzero element is bijective
  if (q == m) {
    Elem a = 0;
    while (a < m && a == hg.o) ++a;
    if (a < m) {
      std::vector<bool> hit(m, false);
      bool bijective = true;
      for (const auto& phi : r.endomorphisms) {
        if (hit[phi[a]]) bijective = false;
        hit[phi[a]] = true;
      }
      r.is_field_hypergroup = bijective;
    }
  }
  return r;
}

}  // namespace hgg
