#include <algorithm>
#include <deque>
#include <functional>

#include "hgg/category.hpp"
#include "hgg/error.hpp"

namespace hgg {

namespace {

void check_map(const std::vector<Elem>& map, int from, int to, const char* name) {
  if (static_cast<int>(map.size()) != from)
    throw Error(ErrorCode::ShapeMismatch, std::string(name) + " has " + std::to_string(map.size()) + " entries, expected " +
                                              std::to_string(from));
  for (std::size_t i = 0; i < map.size(); ++i)
    if (map[i] < 0 || map[i] >= to)
      throw Error(ErrorCode::ShapeMismatch, std::string(name) + "[" + std::to_string(i) + "] = " + std::to_string(map[i]) +
                                                " is out of range");
}

// Cycle type of the permutation x |-> [x, a], as sorted cycle lengths.
std::vector<int> column_cycle_type(const HypergroupOverGroup& hg, Elem a) {
  std::vector<bool> seen(hg.m_size, false);
  std::vector<int> lengths;
  for (Elem x = 0; x < hg.m_size; ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (Elem y = x; !seen[y]; y = hg.xi(y, a)) {
      seen[y] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

int phi_orbit_size(const HypergroupOverGroup& hg, Elem a) {
  std::vector<bool> seen(hg.m_size, false);
  for (Elem al = 0; al < hg.h_order(); ++al) seen[hg.phi(a, al)] = true;
  return static_cast<int>(std::count(seen.begin(), seen.end(), true));
}

std::vector<long long> element_signature(const HypergroupOverGroup& hg, Elem a) {
  std::vector<long long> sig{a == hg.o ? 1 : 0, phi_orbit_size(hg, a)};
  for (int len : column_cycle_type(hg, a)) sig.push_back(len);
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const HypergroupOverGroup& a, const HypergroupOverGroup& b, const std::vector<Elem>& f0)
      : a_(a), b_(b), f0_(f0), m_(a.m_size) {
    sig_a_.resize(m_);
    sig_b_.resize(m_);
    for (Elem x = 0; x < m_; ++x) {
      sig_a_[x] = element_signature(a, x);
      sig_b_[x] = element_signature(b, x);
    }
  }

  std::optional<std::vector<Elem>> run() {
    std::vector<Elem> f1(m_, -1), used(m_, -1);
    if (!assign(f1, used, a_.o, b_.o)) return std::nullopt;
    if (search(f1, used)) return f1;
    return std::nullopt;
  }

 private:
  bool search(std::vector<Elem>& f1, std::vector<Elem>& used) {
    const auto next = std::find(f1.begin(), f1.end(), -1);
    if (next == f1.end()) return true;
    const Elem x = static_cast<Elem>(next - f1.begin());
    for (Elem y = 0; y < m_; ++y) {
      if (used[y] >= 0 || sig_a_[x] != sig_b_[y]) continue;
      auto f1_copy = f1;
      auto used_copy = used;
      if (assign(f1_copy, used_copy, x, y) && search(f1_copy, used_copy)) {
        f1 = std::move(f1_copy);
        used = std::move(used_copy);
        return true;
      }
    }
    return false;
  }

  // Sets f1(x) = y and propagates every value forced by Phi and Xi; checks
  // Psi and Lambda on the assigned part.
  bool assign(std::vector<Elem>& f1, std::vector<Elem>& used, Elem x, Elem y) {
    std::deque<std::pair<Elem, Elem>> pending{{x, y}};
    std::vector<Elem> assigned;
    for (Elem z = 0; z < m_; ++z)
      if (f1[z] >= 0) assigned.push_back(z);
    auto force = [&](Elem src, Elem img) {
      if (f1[src] >= 0) return f1[src] == img;
      if (used[img] >= 0) return false;
      pending.emplace_back(src, img);
      return true;
    };
    while (!pending.empty()) {
      auto [s, t] = pending.front();
      pending.pop_front();
      if (f1[s] >= 0) {
        if (f1[s] != t) return false;
        continue;
      }
      if (used[t] >= 0 || sig_a_[s] != sig_b_[t]) return false;
      f1[s] = t;
      used[t] = s;
      assigned.push_back(s);
      const int n = a_.h_order();
      for (Elem al = 0; al < n; ++al) {
        if (f0_[a_.psi(s, al)] != b_.psi(t, f0_[al])) return false;
        if (!force(a_.phi(s, al), b_.phi(t, f0_[al]))) return false;
      }
      for (Elem u : assigned) {
        const Elem fu = f1[u];
        if (f0_[a_.lam(s, u)] != b_.lam(t, fu) || f0_[a_.lam(u, s)] != b_.lam(fu, t)) return false;
        if (!force(a_.xi(s, u), b_.xi(t, fu)) || !force(a_.xi(u, s), b_.xi(fu, t))) return false;
      }
    }
    return true;
  }

  const HypergroupOverGroup& a_;
  const HypergroupOverGroup& b_;
  const std::vector<Elem>& f0_;
  int m_;
  std::vector<std::vector<long long>> sig_a_, sig_b_;
};

}  // namespace

MorphismCheck verify_morphism(const HypergroupOverGroup& s, const HypergroupOverGroup& t, const std::vector<Elem>& f0,
                              const std::vector<Elem>& f1) {
  check_map(f0, s.h_order(), t.h_order(), "f0");
  check_map(f1, s.m_size, t.m_size, "f1");
  for (Elem al = 0; al < s.h_order(); ++al)
    for (Elem be = 0; be < s.h_order(); ++be)
      if (f0[s.h.mul(al, be)] != t.h.mul(f0[al], f0[be])) return {false, "f0 homomorphism", {al, be}};
  for (Elem a = 0; a < s.m_size; ++a)
    for (Elem al = 0; al < s.h_order(); ++al) {
      if (f1[s.phi(a, al)] != t.phi(f1[a], f0[al])) return {false, "Phi", {a, al}};
      if (f0[s.psi(a, al)] != t.psi(f1[a], f0[al])) return {false, "Psi", {a, al}};
    }
  for (Elem a = 0; a < s.m_size; ++a)
    for (Elem b = 0; b < s.m_size; ++b) {
      if (f1[s.xi(a, b)] != t.xi(f1[a], f1[b])) return {false, "Xi", {a, b}};
      if (f0[s.lam(a, b)] != t.lam(f1[a], f1[b])) return {false, "Lambda", {a, b}};
    }
  return {};
}

MorphismCheck verify_morphism(const HgMorphism& m) {
  if (!m.source || !m.target) throw Error(ErrorCode::ShapeMismatch, "morphism has no source or target");
  return verify_morphism(*m.source, *m.target, m.f0, m.f1);
}

HgMorphism identity_morphism(std::shared_ptr<const HypergroupOverGroup> hg) {
  HgMorphism id;
  for (Elem al = 0; al < hg->h_order(); ++al) id.f0.push_back(al);
  for (Elem a = 0; a < hg->m_size; ++a) id.f1.push_back(a);
  id.source = hg;
  id.target = std::move(hg);
  return id;
}

HgMorphism compose(const HgMorphism& first, const HgMorphism& second) {
  const HgMorphism& g = first;
  const HgMorphism& f = second;
  if (!g.target || !f.source || (g.target != f.source && !g.target->same_structure(*f.source)))
    throw Error(ErrorCode::NotComposable, "target of the first morphism is not the source of the second");
  check_map(g.f0, g.source ? g.source->h_order() : static_cast<int>(g.f0.size()),
            static_cast<int>(f.f0.size()), "g.f0");
  check_map(g.f1, g.source ? g.source->m_size : static_cast<int>(g.f1.size()),
            static_cast<int>(f.f1.size()), "g.f1");
  HgMorphism out;
  out.source = g.source;
  out.target = f.target;
  for (Elem v : g.f0) out.f0.push_back(f.f0[v]);
  for (Elem v : g.f1) out.f1.push_back(f.f1[v]);
  return out;
}

std::vector<long long> hypergroup_fingerprint(const HypergroupOverGroup& hg) {
  std::vector<long long> fp{hg.m_size, hg.h_order()};
  for (int o : order_profile(hg.h)) fp.push_back(o);
  fp.push_back(xi_associativity_witness(hg) ? 0 : 1);
  fp.push_back(is_xi_commutative(hg) ? 1 : 0);
  long long lam_trivial = 0, psi_fixed = 0;
  for (Elem a = 0; a < hg.m_size; ++a) {
    for (Elem b = 0; b < hg.m_size; ++b) lam_trivial += hg.lam(a, b) == hg.h.identity();
    for (Elem al = 0; al < hg.h_order(); ++al) psi_fixed += hg.psi(a, al) == al;
  }
  fp.push_back(lam_trivial);
  fp.push_back(psi_fixed);
  std::vector<std::vector<long long>> sigs;
  for (Elem a = 0; a < hg.m_size; ++a) sigs.push_back(element_signature(hg, a));
  std::sort(sigs.begin(), sigs.end());
  for (const auto& s : sigs) {
    fp.push_back(-1);
    fp.insert(fp.end(), s.begin(), s.end());
  }
  return fp;
}

std::optional<HgMorphism> find_isomorphism(std::shared_ptr<const HypergroupOverGroup> a,
                                           std::shared_ptr<const HypergroupOverGroup> b, int bound) {
  if (a->m_size != b->m_size || a->h_order() != b->h_order()) return std::nullopt;
  if (a->m_size > bound || a->h_order() > bound)
    throw Error(ErrorCode::SizeLimitExceeded, "isomorphism search is bounded to size " + std::to_string(bound));
  if (hypergroup_fingerprint(*a) != hypergroup_fingerprint(*b)) return std::nullopt;
  for (const auto& f0 : all_group_isomorphisms(a->h, b->h, bound)) {
    if (auto f1 = IsoSearch(*a, *b, f0).run()) {
      if (!verify_morphism(*a, *b, f0, *f1).ok)
        throw Error(ErrorCode::InternalInconsistency, "isomorphism search returned a non-morphism");
      return HgMorphism{f0, std::move(*f1), std::move(a), std::move(b)};
    }
  }
  return std::nullopt;
}

std::optional<HgMorphism> find_isomorphism(const HypergroupOverGroup& a, const HypergroupOverGroup& b, int bound) {
  return find_isomorphism(std::make_shared<const HypergroupOverGroup>(a), std::make_shared<const HypergroupOverGroup>(b),
                          bound);
}

}  // namespace hgg
