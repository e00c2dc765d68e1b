#include "hgg/category.hpp"
#include "hgg/error.hpp"

namespace hgg {

namespace {

FiniteGroup trivial_group() { return group_from_cayley_table(Table(1, 1, 0), "E"); }

// Psi(a, alpha) = alpha, Lambda = epsilon.
void set_trivial_psi_lam(HypergroupOverGroup& hg) {
  hg.psi = Table(hg.m_size, hg.h_order());
  for (Elem a = 0; a < hg.m_size; ++a)
    for (Elem al = 0; al < hg.h_order(); ++al) hg.psi(a, al) = al;
  hg.lam = Table(hg.m_size, hg.m_size, hg.h.identity());
}

}  // namespace

HypergroupOverGroup functor_group(const FiniteGroup& m) {
  HypergroupOverGroup hg;
  hg.m_size = m.order();
  hg.h = trivial_group();
  hg.phi = Table(hg.m_size, 1);
  for (Elem a = 0; a < hg.m_size; ++a) hg.phi(a, 0) = a;
  hg.xi = m.table();
  hg.o = m.identity();
  set_trivial_psi_lam(hg);
  return hg;
}

HgMorphism functor_group_map(const FiniteGroup& from, const FiniteGroup& to, const std::vector<Elem>& f1) {
  if (!is_homomorphism(from, to, f1))
    throw Error(ErrorCode::NotAHomomorphism, "f1 is not a group homomorphism " + from.name() + " -> " + to.name());
  return HgMorphism{{0}, f1, std::make_shared<const HypergroupOverGroup>(functor_group(from)),
                    std::make_shared<const HypergroupOverGroup>(functor_group(to))};
}

int vector_index(const FiniteField& k, const std::vector<Elem>& coords) {
  int index = 0;
  for (Elem c : coords) index = index * k.order() + c;
  return index;
}

std::vector<Elem> vector_coords(const FiniteField& k, int dim, int index) {
  std::vector<Elem> coords(dim);
  for (int i = dim; i-- > 0; index /= k.order()) coords[i] = index % k.order();
  return coords;
}

HypergroupOverGroup functor_vector_space(const FiniteField& k, int dim) {
  if (dim < 1) throw Error(ErrorCode::ShapeMismatch, "dimension must be positive");
  long long size = 1;
  for (int i = 0; i < dim; ++i) {
    size *= k.order();
    if (size > kMaxVectorSpaceSize)
      throw Error(ErrorCode::SizeLimitExceeded, "|k|^dim exceeds " + std::to_string(kMaxVectorSpaceSize));
  }
  HypergroupOverGroup hg;
  hg.m_size = static_cast<int>(size);
  hg.h = multiplicative_group(k);
  const int n = hg.h_order();
  hg.phi = Table(hg.m_size, n);
  hg.xi = Table(hg.m_size, hg.m_size);
  std::vector<std::vector<Elem>> vecs(hg.m_size);
  for (int v = 0; v < hg.m_size; ++v) vecs[v] = vector_coords(k, dim, v);
  std::vector<Elem> w(dim);
  for (int v = 0; v < hg.m_size; ++v) {
    for (Elem al = 0; al < n; ++al) {
      for (int i = 0; i < dim; ++i) w[i] = k.mul(vecs[v][i], al + 1);
      hg.phi(v, al) = vector_index(k, w);
    }
    for (int u = 0; u < hg.m_size; ++u) {
      for (int i = 0; i < dim; ++i) w[i] = k.add(vecs[v][i], vecs[u][i]);
      hg.xi(v, u) = vector_index(k, w);
    }
  }
  hg.o = 0;
  set_trivial_psi_lam(hg);
  return hg;
}

HgMorphism functor_vector_space_map(const FiniteField& k, int dim_in, int dim_out,
                                    const std::vector<std::vector<Elem>>& matrix) {
  if (static_cast<int>(matrix.size()) != dim_in)
    throw Error(ErrorCode::ShapeMismatch, "matrix needs " + std::to_string(dim_in) + " rows");
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != dim_out)
      throw Error(ErrorCode::ShapeMismatch, "matrix rows need " + std::to_string(dim_out) + " entries");
    for (Elem c : row)
      if (c < 0 || c >= k.order()) throw Error(ErrorCode::ShapeMismatch, "matrix entry outside the field");
  }
  auto source = std::make_shared<const HypergroupOverGroup>(functor_vector_space(k, dim_in));
  auto target = std::make_shared<const HypergroupOverGroup>(functor_vector_space(k, dim_out));
  HgMorphism f;
  for (Elem al = 0; al < source->h_order(); ++al) f.f0.push_back(al);
  for (int v = 0; v < source->m_size; ++v) {
    const auto x = vector_coords(k, dim_in, v);
    std::vector<Elem> y(dim_out, k.zero);
    for (int j = 0; j < dim_out; ++j)
      for (int i = 0; i < dim_in; ++i) y[j] = k.add(y[j], k.mul(x[i], matrix[i][j]));
    f.f1.push_back(vector_index(k, y));
  }
  f.source = std::move(source);
  f.target = std::move(target);
  return f;
}

HypergroupOverGroup functor_field(const FiniteField& f) {
  HypergroupOverGroup hg;
  hg.m_size = f.order();
  hg.h = multiplicative_group(f);
  hg.phi = Table(hg.m_size, hg.h_order());
  for (Elem a = 0; a < hg.m_size; ++a)
    for (Elem al = 0; al < hg.h_order(); ++al) hg.phi(a, al) = f.mul(a, al + 1);
  hg.xi = f.add_table;
  hg.o = f.zero;
  set_trivial_psi_lam(hg);
  return hg;
}

HgMorphism functor_field_map(const FiniteField& from, const FiniteField& to, const std::vector<Elem>& map) {
  if (!is_field_homomorphism(from, to, map))
    throw Error(ErrorCode::NotAHomomorphism, "map is not a field homomorphism " + from.name + " -> " + to.name);
  HgMorphism f;
  for (Elem al = 0; al + 1 < from.order(); ++al) f.f0.push_back(map[al + 1] - 1);
  f.f1 = map;
  f.source = std::make_shared<const HypergroupOverGroup>(functor_field(from));
  f.target = std::make_shared<const HypergroupOverGroup>(functor_field(to));
  return f;
}

}  // namespace hgg
