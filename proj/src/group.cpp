#include "hgg/group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "hgg/error.hpp"

namespace hgg {

namespace {

std::string triple(int a, int b, int c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

void require_bound(const FiniteGroup& g, int bound) {
  if (g.order() > bound)
    throw Error(ErrorCode::SizeLimitExceeded,
                "group order " + std::to_string(g.order()) + " exceeds bound " + std::to_string(bound));
}

// Extends a generator-image assignment to a full map. Returns false when the
// images are inconsistent with the relations of g1.
bool extend_from_generators(const FiniteGroup& g1, const FiniteGroup& g2, const std::vector<Elem>& gens,
                            const std::vector<Elem>& images, std::vector<Elem>& map) {
  map.assign(g1.order(), -1);
  map[g1.identity()] = g2.identity();
  std::deque<Elem> queue{g1.identity()};
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Elem y = g1.mul(x, gens[i]);
      const Elem img = g2.mul(map[x], images[i]);
      if (map[y] < 0) {
        map[y] = img;
        queue.push_back(y);
      } else if (map[y] != img) {
        return false;
      }
    }
  }
  return is_homomorphism(g1, g2, map);
}

// Visits generator-image tuples in lexicographic order; `visit` returns false
// to stop.
void for_each_generator_map(const FiniteGroup& g1, const FiniteGroup& g2, bool bijective,
                            const std::function<bool(const std::vector<Elem>&)>& visit) {
  const auto gens = greedy_generators(g1);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int ord = g1.element_order(gens[i]);
    for (Elem y = 0; y < g2.order(); ++y) {
      const int oy = g2.element_order(y);
      if (bijective ? oy == ord : ord % oy == 0) candidates[i].push_back(y);
    }
  }
  std::vector<Elem> images(gens.size());
  std::vector<Elem> map;
  std::function<bool(std::size_t)> rec = [&](std::size_t depth) -> bool {
    if (depth == gens.size()) {
      if (!extend_from_generators(g1, g2, gens, images, map)) return true;
      if (bijective) {
        std::vector<bool> seen(g2.order(), false);
        for (Elem v : map) {
          if (seen[v]) return true;
          seen[v] = true;
        }
      }
      return visit(map);
    }
    for (Elem y : candidates[depth]) {
      images[depth] = y;
      if (!rec(depth + 1)) return false;
    }
    return true;
  };
  rec(0);
}

}  // namespace

FiniteGroup group_from_cayley_table(const Table& table, std::string name) {
  const int n = table.rows();
  if (n == 0 || table.cols() != n)
    throw Error(ErrorCode::ShapeMismatch, "Cayley table must be square and non-empty");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table(i, j) < 0 || table(i, j) >= n)
        throw Error(ErrorCode::NotClosed, "entry at (" + std::to_string(i) + ", " + std::to_string(j) +
                                              ") = " + std::to_string(table(i, j)) + " is outside [0, " +
                                              std::to_string(n) + ")");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table(table(a, b), c) != table(a, table(b, c)))
          throw Error(ErrorCode::NotAssociative, "witness " + triple(a, b, c));

  Elem identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table(e, x) == x && table(x, e) == x;
    if (ok) identity = e;
  }
  if (identity < 0) throw Error(ErrorCode::NoIdentity, "no two-sided neutral element");

  std::vector<Elem> inverse(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table(a, b) == identity && table(b, a) == identity) {
        inverse[a] = b;
        break;
      }
    if (inverse[a] < 0) throw Error(ErrorCode::NoInverse, "element " + std::to_string(a) + " has no inverse");
  }

  FiniteGroup g;
  g.table_ = table;
  g.identity_ = identity;
  g.inverse_ = std::move(inverse);
  g.name_ = std::move(name);
  return g;
}

Elem FiniteGroup::power(Elem a, int k) const {
  Elem r = identity_;
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::element_order(Elem a) const {
  int k = 1;
  for (Elem x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool Subgroup::contains(Elem x) const { return std::binary_search(elements.begin(), elements.end(), x); }

int Subgroup::index_of(Elem x) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), x);
  if (it == elements.end() || *it != x) return -1;
  return static_cast<int>(it - elements.begin());
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup{{g.identity()}}; }

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s;
  for (Elem x = 0; x < g.order(); ++x) s.elements.push_back(x);
  return s;
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<Elem>& generators) {
  for (Elem x : generators)
    if (x < 0 || x >= g.order())
      throw Error(ErrorCode::IndexOutOfRange, "generator " + std::to_string(x) + " is not an element of a group of order " +
                                                  std::to_string(g.order()));
  // In a finite group the submonoid generated by a set is already a subgroup.
  std::vector<bool> in(g.order(), false);
  std::deque<Elem> queue{g.identity()};
  in[g.identity()] = true;
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    for (Elem s : generators) {
      const Elem y = g.mul(x, s);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  Subgroup h;
  for (Elem x = 0; x < g.order(); ++x)
    if (in[x]) h.elements.push_back(x);
  return h;
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, int bound) {
  require_bound(g, bound);
  // Every subgroup is reached by adjoining one generator at a time.
  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> frontier{trivial_subgroup(g).elements};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<std::vector<Elem>> next;
    for (const auto& s : frontier) {
      if (static_cast<int>(s.size()) == g.order()) continue;
      std::vector<bool> in(g.order(), false);
      for (Elem x : s) in[x] = true;
      for (Elem x = 0; x < g.order(); ++x) {
        if (in[x]) continue;
        std::vector<Elem> gens = s;
        gens.push_back(x);
        auto closed = subgroup_closure(g, gens).elements;
        if (seen.insert(closed).second) next.push_back(std::move(closed));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.push_back(Subgroup{s});
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements < b.elements;
  });
  return out;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem a : h.elements)
      if (!h.contains(g.mul(g.mul(x, a), g.inv(x)))) return false;
  return true;
}

CosetDecomposition right_cosets(const FiniteGroup& g, const Subgroup& h) {
  CosetDecomposition d;
  d.subgroup = h;
  d.coset_of.assign(g.order(), -1);
  auto add_coset = [&](Elem a) {
    std::vector<Elem> coset;
    for (Elem x : h.elements) coset.push_back(g.mul(x, a));
    std::sort(coset.begin(), coset.end());
    const int idx = static_cast<int>(d.cosets.size());
    for (Elem y : coset) d.coset_of[y] = idx;
    d.cosets.push_back(std::move(coset));
  };
  add_coset(g.identity());
  for (Elem a = 0; a < g.order(); ++a)
    if (d.coset_of[a] < 0) add_coset(a);
  return d;
}

FiniteGroup quotient_group(const FiniteGroup& g, const Subgroup& h) {
  if (!is_normal(g, h)) throw Error(ErrorCode::NotNormal, "subgroup of order " + std::to_string(h.size()) + " is not normal");
  const auto d = right_cosets(g, h);
  const int k = static_cast<int>(d.cosets.size());
  Table t(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int c = d.coset_of[g.mul(d.cosets[i].front(), d.cosets[j].front())];
      for (Elem x : d.cosets[i])
        for (Elem y : d.cosets[j])
          if (d.coset_of[g.mul(x, y)] != c)
            throw Error(ErrorCode::InternalInconsistency, "coset product depends on representatives");
      t(i, j) = c;
    }
  return group_from_cayley_table(t, g.name() + "/H");
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  const int k = static_cast<int>(h.size());
  Table t(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int idx = h.index_of(g.mul(h.elements[i], h.elements[j]));
      if (idx < 0) throw Error(ErrorCode::NotClosed, "subset is not closed under the product");
      t(i, j) = idx;
    }
  return group_from_cayley_table(t, "H");
}

std::vector<Elem> greedy_generators(const FiniteGroup& g) {
  std::vector<Elem> gens;
  Subgroup span = trivial_subgroup(g);
  for (Elem x = 0; x < g.order(); ++x) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = subgroup_closure(g, gens);
  }
  return gens;
}

std::vector<int> order_profile(const FiniteGroup& g) {
  std::vector<int> out;
  for (Elem x = 0; x < g.order(); ++x) out.push_back(g.element_order(x));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_homomorphism(const FiniteGroup& g1, const FiniteGroup& g2, const std::vector<Elem>& map) {
  if (static_cast<int>(map.size()) != g1.order()) return false;
  for (Elem v : map)
    if (v < 0 || v >= g2.order()) return false;
  for (Elem a = 0; a < g1.order(); ++a)
    for (Elem b = 0; b < g1.order(); ++b)
      if (map[g1.mul(a, b)] != g2.mul(map[a], map[b])) return false;
  return true;
}

std::optional<std::vector<Elem>> group_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2, int bound) {
  require_bound(g1, bound);
  require_bound(g2, bound);
  if (g1.order() != g2.order() || order_profile(g1) != order_profile(g2)) return std::nullopt;
  std::optional<std::vector<Elem>> found;
  for_each_generator_map(g1, g2, true, [&](const std::vector<Elem>& m) {
    found = m;
    return false;
  });
  return found;
}

std::vector<std::vector<Elem>> all_group_isomorphisms(const FiniteGroup& g1, const FiniteGroup& g2, int bound) {
  require_bound(g1, bound);
  require_bound(g2, bound);
  std::vector<std::vector<Elem>> out;
  if (g1.order() != g2.order() || order_profile(g1) != order_profile(g2)) return out;
  for_each_generator_map(g1, g2, true, [&](const std::vector<Elem>& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::vector<std::vector<Elem>> all_group_homomorphisms(const FiniteGroup& g1, const FiniteGroup& g2) {
  std::vector<std::vector<Elem>> out;
  for_each_generator_map(g1, g2, false, [&](const std::vector<Elem>& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace hgg
