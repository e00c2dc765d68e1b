#include "hgg/classify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "hgg/error.hpp"
#include "hgg/io.hpp"

namespace hgg {

namespace {

std::string join(const std::vector<Elem>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Every table rows x cols over 0..bound-1 passing `keep`, in lexicographic
// order of the row-major entries.
std::vector<Table> all_tables(int rows, int cols, int bound, const std::function<bool(const Table&)>& keep) {
  std::vector<Table> out;
  Table t(rows, cols, 0);
  const int cells = rows * cols;
  while (true) {
    if (keep(t)) out.push_back(t);
    int k = cells;
    while (k-- > 0) {
      Elem& v = t(k / cols, k % cols);
      if (++v < bound) break;
      v = 0;
    }
    if (k < 0) return out;
  }
}

// Right quasigroups on 0..m-1 with left neutral 0: each column a is a
// permutation sending 0 to a.
std::vector<Table> quasigroups_with_left_neutral(int m) {
  std::vector<std::vector<std::vector<Elem>>> columns(m);
  std::vector<Elem> p(m);
  std::iota(p.begin(), p.end(), 0);
  do {
    columns[p[0]].push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<Table> out;
  std::vector<std::size_t> pick(m, 0);
  while (true) {
    Table t(m, m);
    for (Elem a = 0; a < m; ++a)
      for (Elem x = 0; x < m; ++x) t(x, a) = columns[a][pick[a]][x];
    out.push_back(t);
    int k = m;
    while (k-- > 0) {
      if (++pick[k] < columns[k].size()) break;
      pick[k] = 0;
    }
    if (k < 0) return out;
  }
}

}  // namespace

int Catalog::insert(HypergroupOverGroup hg, std::string provenance) {
  const auto fp = hypergroup_fingerprint(hg);
  auto& bucket = buckets_[fp];
  for (int id : bucket) {
    const auto& rep = entries_[reps_[id]].hg;
    std::optional<HgMorphism> iso;
    if (rep.same_structure(hg)) {
      iso = HgMorphism{};
      for (Elem al = 0; al < hg.h_order(); ++al) iso->f0.push_back(al);
      for (Elem a = 0; a < hg.m_size; ++a) iso->f1.push_back(a);
    } else {
      iso = find_isomorphism(rep, hg);
    }
    if (iso) {
      entries_.push_back({std::move(hg), std::move(provenance), id, std::move(iso->f0), std::move(iso->f1)});
      return id;
    }
  }
  const int id = static_cast<int>(reps_.size());
  std::vector<Elem> f0(hg.h_order()), f1(hg.m_size);
  std::iota(f0.begin(), f0.end(), 0);
  std::iota(f1.begin(), f1.end(), 0);
  reps_.push_back(entries_.size());
  bucket.push_back(id);
  entries_.push_back({std::move(hg), std::move(provenance), id, std::move(f0), std::move(f1)});
  return id;
}

std::vector<ClassStats> Catalog::stats() const {
  std::map<std::tuple<int, int, bool, bool>, ClassStats> by_key;
  std::vector<std::tuple<int, int, bool, bool>> class_key(reps_.size());
  for (std::size_t id = 0; id < reps_.size(); ++id) {
    const auto& hg = entries_[reps_[id]].hg;
    class_key[id] = {hg.m_size, hg.h_order(), !xi_associativity_witness(hg).has_value(), is_xi_commutative(hg)};
    auto [m, n, g, c] = class_key[id];
    auto [it, inserted] = by_key.try_emplace(class_key[id], ClassStats{m, n, g, c});
    ++it->second.classes;
  }
  for (const auto& e : entries_) ++by_key.at(class_key[e.class_id]).entries;
  std::vector<ClassStats> out;
  for (auto& [key, s] : by_key) out.push_back(s);
  return out;
}

namespace {

void sweep_into(Catalog& catalog, const FiniteGroup& g, const Subgroup& h, const std::string& label,
                std::uint64_t cap, std::uint64_t seed) {
  const std::string prefix = label + ";H=" + join(h.elements) + ";M=";
  for_each_transversal(g, h, cap, seed, [&](const Transversal& t) {
    HypergroupOverGroup hg = standard_construction(t);
    hg.ambient = Ambient{g, h, t.reps()};
    if (!verify_axioms(hg).overall)
      throw Error(ErrorCode::InternalInconsistency, "standard construction fails its axioms: " + prefix + join(t.reps()));
    catalog.insert(std::move(hg), prefix + join(t.reps()));
  });
}

}  // namespace

Catalog sweep_pair(const FiniteGroup& g, const Subgroup& h, std::uint64_t transversal_cap, std::uint64_t seed) {
  Catalog catalog;
  sweep_into(catalog, g, h, g.name().empty() ? "G" : g.name(), transversal_cap, seed);
  return catalog;
}

Catalog sweep_standard(int max_group_order, std::uint64_t transversal_cap, std::uint64_t seed) {
  if (max_group_order > kMaxSweepOrder)
    throw Error(ErrorCode::SizeLimitExceeded, "sweep bound is " + std::to_string(kMaxSweepOrder));
  Catalog catalog;
  for (const auto& spec : builtin_group_specs(max_group_order)) {
    const FiniteGroup g = group_from_spec(spec);
    for (const auto& h : enumerate_subgroups(g)) sweep_into(catalog, g, h, spec, transversal_cap, seed);
  }
  return catalog;
}

Catalog enumerate_abstract(int m, const FiniteGroup& h) {
  if (m < 1 || m > kMaxAbstractM || h.order() > kMaxAbstractH)
    throw Error(ErrorCode::SizeLimitExceeded, "abstract enumeration is bounded to |M| <= " +
                                                  std::to_string(kMaxAbstractM) + ", |H| <= " +
                                                  std::to_string(kMaxAbstractH));
  const int n = h.order();
  const Elem eps = h.identity();
  const Elem o = 0;

  // Phi: right actions of H on M
  const auto actions = all_tables(m, n, m, [&](const Table& phi) {
    for (Elem a = 0; a < m; ++a) {
      if (phi(a, eps) != a) return false;
      for (Elem al = 0; al < n; ++al)
        for (Elem be = 0; be < n; ++be)
          if (phi(phi(a, al), be) != phi(a, h.mul(al, be))) return false;
    }
    return true;
  });
  const auto quasigroups = quasigroups_with_left_neutral(m);

  Catalog catalog;
  int candidate = 0;
  for (const auto& xi : quasigroups) {
    for (const auto& phi : actions) {
      // Psi: A1 cocycle condition and P3 surjectivity of alpha -> ^o alpha,
      // then A2 linking Phi, Psi and Xi
      const auto psis = all_tables(m, n, n, [&](const Table& psi) {
        for (Elem a = 0; a < m; ++a)
          for (Elem al = 0; al < n; ++al)
            for (Elem be = 0; be < n; ++be)
              if (psi(a, h.mul(al, be)) != h.mul(psi(a, al), psi(phi(a, al), be))) return false;
        std::vector<bool> hit(n, false);
        for (Elem al = 0; al < n; ++al) hit[psi(o, al)] = true;
        if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
        for (Elem a = 0; a < m; ++a)
          for (Elem b = 0; b < m; ++b)
            for (Elem al = 0; al < n; ++al)
              if (phi(xi(a, b), al) != xi(phi(a, psi(b, al)), phi(b, al))) return false;
        return true;
      });
      for (const auto& psi : psis) {
        const auto lams = all_tables(m, m, n, [&](const Table& lam) {
          for (Elem a = 0; a < m; ++a)
            for (Elem b = 0; b < m; ++b)
              for (Elem c = 0; c < m; ++c)
                if (xi(xi(a, b), c) != xi(phi(a, lam(b, c)), xi(b, c))) return false;
          for (Elem a = 0; a < m; ++a)
            for (Elem b = 0; b < m; ++b)
              for (Elem al = 0; al < n; ++al) {
                const Elem bal = psi(b, al);
                if (h.mul(lam(a, b), psi(xi(a, b), al)) != h.mul(psi(a, bal), lam(phi(a, bal), phi(b, al))))
                  return false;
              }
          for (Elem a = 0; a < m; ++a)
            for (Elem b = 0; b < m; ++b)
              for (Elem c = 0; c < m; ++c) {
                const Elem bc = lam(b, c);
                if (h.mul(lam(a, b), lam(xi(a, b), c)) != h.mul(psi(a, bc), lam(phi(a, bc), xi(b, c))))
                  return false;
              }
          return true;
        });
        for (const auto& lam : lams) {
          HypergroupOverGroup hg;
          hg.m_size = m;
          hg.h = h;
          hg.phi = phi;
          hg.psi = psi;
          hg.xi = xi;
          hg.lam = lam;
          hg.o = o;
          if (!verify_axioms(hg).overall)
            throw Error(ErrorCode::InternalInconsistency, "abstract candidate passed the filters but not verify_axioms");
          catalog.insert(std::move(hg), "abstract;m=" + std::to_string(m) + ";H=" + h.name() + ";#" +
                                            std::to_string(candidate));
          ++candidate;
        }
      }
    }
  }
  return catalog;
}

int UniversalityReport::unmatched() const {
  return static_cast<int>(std::count_if(matches.begin(), matches.end(), [](const auto& x) { return !x.matched; }));
}

UniversalityReport universality_probe(const Catalog& abstract, const Catalog& standard) {
  UniversalityReport report;
  for (int id = 0; id < abstract.class_count(); ++id) {
    UniversalityMatch match{id, false, -1};
    const auto& a = abstract.representative(id).hg;
    for (int sid = 0; sid < standard.class_count() && !match.matched; ++sid) {
      const auto& s = standard.representative(sid).hg;
      if (s.m_size != a.m_size || s.h_order() != a.h_order()) continue;
      if (find_isomorphism(a, s)) {
        match.matched = true;
        match.standard_class = sid;
      }
    }
    report.matches.push_back(match);
  }
  return report;
}

std::string catalog_summary_csv(const Catalog& catalog) {
  std::ostringstream out;
  out << "class_id,m_size,h_order,xi_is_group,xi_commutative,provenance\n";
  for (const auto& e : catalog.entries()) {
    out << e.class_id << ',' << e.hg.m_size << ',' << e.hg.h_order() << ','
        << (xi_associativity_witness(e.hg) ? 0 : 1) << ',' << (is_xi_commutative(e.hg) ? 1 : 0) << ','
        << e.provenance << '\n';
  }
  return out.str();
}

void export_catalog(const Catalog& catalog, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<int> per_class(catalog.class_count(), 0);
  for (const auto& e : catalog.entries()) {
    Json j = to_json(e.hg);
    j["class_id"] = e.class_id;
    j["provenance"] = e.provenance;
    j["certificate"] = morphism_to_json(e.cert_f0, e.cert_f1);
    const auto name = "class_" + std::to_string(e.class_id) + "_entry_" + std::to_string(per_class[e.class_id]++) + ".json";
    save_text_file(dir / name, dump(j));
  }
  save_text_file(dir / "summary.csv", catalog_summary_csv(catalog));
}

}  // namespace hgg
