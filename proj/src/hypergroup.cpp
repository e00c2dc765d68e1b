#include "hgg/hypergroup.hpp"

#include <algorithm>
#include <sstream>

#include "hgg/error.hpp"

namespace hgg {

namespace {

enum class Law { LeftNeutral, Quasigroup, Unit, A0, P3, A1, A2, A3, A4, A5 };

struct LawInfo {
  Law law;
  Axiom axiom;
  const char* name;
};

constexpr std::array<LawInfo, 10> kLaws{{
    {Law::LeftNeutral, Axiom::P1, "left-neutral"},
    {Law::Quasigroup, Axiom::P1, "quasigroup"},
    {Law::Unit, Axiom::P2, "unit"},
    {Law::A0, Axiom::P2, "A0"},
    {Law::P3, Axiom::P3, "P3"},
    {Law::A1, Axiom::A1, "A1"},
    {Law::A2, Axiom::A2, "A2"},
    {Law::A3, Axiom::A3, "A3"},
    {Law::A4, Axiom::A4, "A4"},
    {Law::A5, Axiom::A5, "A5"},
}};

const LawInfo& info(Law law) { return kLaws[static_cast<std::size_t>(law)]; }

std::size_t arity(Law law) {
  switch (law) {
    case Law::Unit:
    case Law::P3: return 1;
    case Law::LeftNeutral: return 2;
    default: return 3;
  }
}

void check_table(const Table& t, int rows, int cols, int bound, const char* name) {
  if (t.rows() != rows || t.cols() != cols)
    throw Error(ErrorCode::MalformedTables, std::string(name) + " has shape " + std::to_string(t.rows()) + "x" +
                                                std::to_string(t.cols()) + ", expected " + std::to_string(rows) +
                                                "x" + std::to_string(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (t(r, c) < 0 || t(r, c) >= bound)
        throw Error(ErrorCode::MalformedTables, std::string(name) + "[" + std::to_string(r) + "][" + std::to_string(c) +
                                                    "] = " + std::to_string(t(r, c)) + " is out of range");
}


// Evaluates one named equation at `args`; returns the two sides as a string
// when they differ, nullopt when the law holds.
std::optional<std::string> law_violation(const HypergroupOverGroup& hg, Law law, const std::vector<Elem>& args) {
  const auto& H = hg.h;
  const auto& phi = hg.phi;
  const auto& psi = hg.psi;
  const auto& xi = hg.xi;
  const auto& lam = hg.lam;
  auto differ = [](Elem lhs, Elem rhs) -> std::optional<std::string> {
    if (lhs == rhs) return std::nullopt;
    return "lhs = " + std::to_string(lhs) + ", rhs = " + std::to_string(rhs);
  };
  if (law == Law::LeftNeutral) {  // [o, a] = a
    return differ(xi(args[0], args[1]), args[1]);
  }
  if (law == Law::Quasigroup) {  // column a: rows x < y collide
    const Elem a = args[0], x = args[1], y = args[2];
    if (x != y && xi(x, a) == xi(y, a))
      return "[" + std::to_string(x) + ", " + std::to_string(a) + "] = [" + std::to_string(y) + ", " +
             std::to_string(a) + "] = " + std::to_string(xi(x, a));
    return std::nullopt;
  }
  if (law == Law::Unit) {  // a^eps = a
    return differ(phi(args[0], H.identity()), args[0]);
  }
  if (law == Law::A0) {  // (a^alpha)^beta = a^(alpha·beta)
    const Elem a = args[0], al = args[1], be = args[2];
    return differ(phi(phi(a, al), be), phi(a, H.mul(al, be)));
  }
  if (law == Law::P3) {  // beta lies in the image of alpha -> ^o alpha
    for (Elem al = 0; al < H.order(); ++al)
      if (psi(hg.o, al) == args[0]) return std::nullopt;
    return "no alpha with ^o alpha = " + std::to_string(args[0]);
  }
  if (law == Law::A1) {  // ^a(alpha·beta) = ^a alpha · ^(a^alpha) beta
    const Elem a = args[0], al = args[1], be = args[2];
    return differ(psi(a, H.mul(al, be)), H.mul(psi(a, al), psi(phi(a, al), be)));
  }
  if (law == Law::A2) {  // [a, b]^alpha = [a^(^b alpha), b^alpha]
    const Elem a = args[0], b = args[1], al = args[2];
    return differ(phi(xi(a, b), al), xi(phi(a, psi(b, al)), phi(b, al)));
  }
  if (law == Law::A3) {  // (a, b) · ^[a,b] alpha = ^a(^b alpha) · (a^(^b alpha), b^alpha)
    const Elem a = args[0], b = args[1], al = args[2];
    const Elem bal = psi(b, al);
    return differ(H.mul(lam(a, b), psi(xi(a, b), al)), H.mul(psi(a, bal), lam(phi(a, bal), phi(b, al))));
  }
  if (law == Law::A4) {  // [[a, b], c] = [a^(b,c), [b, c]]
    const Elem a = args[0], b = args[1], c = args[2];
    return differ(xi(xi(a, b), c), xi(phi(a, lam(b, c)), xi(b, c)));
  }
  if (law == Law::A5) {  // (a, b) · ([a, b], c) = ^a(b, c) · (a^(b,c), [b, c])
    const Elem a = args[0], b = args[1], c = args[2];
    const Elem bc = lam(b, c);
    return differ(H.mul(lam(a, b), lam(xi(a, b), c)), H.mul(psi(a, bc), lam(phi(a, bc), xi(b, c))));
  }
  throw Error(ErrorCode::InternalInconsistency, "unknown law");
}

// Scans args over the product of the given ranges in lexicographic order.
std::optional<Witness> first_violation(const HypergroupOverGroup& hg, Law law, const std::vector<int>& ranges) {
  std::vector<Elem> args(ranges.size(), 0);
  if (std::any_of(ranges.begin(), ranges.end(), [](int r) { return r <= 0; })) return std::nullopt;
  while (true) {
    if (auto why = law_violation(hg, law, args)) return Witness{info(law).name, args, *why};
    std::size_t k = args.size();
    while (k-- > 0) {
      if (++args[k] < ranges[k]) break;
      args[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) return std::nullopt;
  }
}

std::optional<Witness> quasigroup_violation(const HypergroupOverGroup& hg) {
  const int m = hg.m_size;
  for (Elem a = 0; a < m; ++a)
    for (Elem x = 0; x < m; ++x)
      for (Elem y = x + 1; y < m; ++y)
        if (auto why = law_violation(hg, Law::Quasigroup, {a, x, y})) return Witness{"quasigroup", {a, x, y}, *why};
  return std::nullopt;
}

}  // namespace

void check_shapes(const HypergroupOverGroup& hg) {
  if (hg.m_size < 1) throw Error(ErrorCode::MalformedTables, "m_size must be positive");
  const int m = hg.m_size, n = hg.h.order();
  if (n < 1) throw Error(ErrorCode::MalformedTables, "H is empty");
  check_table(hg.phi, m, n, m, "phi");
  check_table(hg.psi, m, n, n, "psi");
  check_table(hg.xi, m, m, m, "xi");
  check_table(hg.lam, m, m, n, "lam");
  if (hg.o < 0 || hg.o >= m) throw Error(ErrorCode::MalformedTables, "o = " + std::to_string(hg.o) + " is out of range");
}

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::P1: return "P1";
    case Axiom::P2: return "P2";
    case Axiom::P3: return "P3";
    case Axiom::A1: return "A1";
    case Axiom::A2: return "A2";
    case Axiom::A3: return "A3";
    case Axiom::A4: return "A4";
    case Axiom::A5: return "A5";
  }
  return "?";
}

bool HypergroupOverGroup::same_structure(const HypergroupOverGroup& other) const {
  return m_size == other.m_size && h == other.h && phi == other.phi && psi == other.psi && xi == other.xi &&
         lam == other.lam && o == other.o;
}

const AxiomStatus& AxiomReport::status(Axiom a) const {
  for (const auto& s : statuses)
    if (s.axiom == a) return s;
  throw Error(ErrorCode::InternalInconsistency, "axiom missing from report");
}

HypergroupOverGroup standard_construction(const FiniteGroup& g, const Subgroup& h, const std::vector<Elem>& reps) {
  return standard_construction(Transversal(g, h, reps));
}

HypergroupOverGroup standard_construction(const Transversal& t) {
  const FiniteGroup& g = t.group();
  const Subgroup& sub = t.subgroup();
  HypergroupOverGroup hg;
  hg.m_size = t.index();
  hg.h = subgroup_as_group(g, sub);
  const int m = hg.m_size, n = hg.h.order();
  hg.phi = Table(m, n);
  hg.psi = Table(m, n);
  hg.xi = Table(m, m);
  hg.lam = Table(m, m);
  const auto& reps = t.reps();
  for (int a = 0; a < m; ++a) {
    for (int al = 0; al < n; ++al) {
      const auto d = t.decompose(g.mul(reps[a], sub.elements[al]));
      hg.psi(a, al) = sub.index_of(d.h_part);
      hg.phi(a, al) = d.m_index;
    }
    for (int b = 0; b < m; ++b) {
      const auto d = t.decompose(g.mul(reps[a], reps[b]));
      hg.lam(a, b) = sub.index_of(d.h_part);
      hg.xi(a, b) = d.m_index;
    }
  }
  const auto nd = neutral_decomposition(t);
  hg.o = t.decompose(nd.o).m_index;
  hg.ambient = Ambient{g, sub, reps};
  return hg;
}

AxiomReport verify_axioms(const HypergroupOverGroup& hg) {
  check_shapes(hg);
  const int m = hg.m_size, n = hg.h.order();
  AxiomReport report;
  auto record = [&](Axiom axiom, std::optional<Witness> w) {
    AxiomStatus s{axiom, !w.has_value(), std::move(w)};
    report.overall = report.overall && s.pass;
    report.statuses.push_back(std::move(s));
  };

  std::optional<Witness> p1;
  for (Elem a = 0; a < m && !p1; ++a)
    if (auto why = law_violation(hg, Law::LeftNeutral, {hg.o, a})) p1 = Witness{"left-neutral", {hg.o, a}, *why};
  if (!p1) p1 = quasigroup_violation(hg);
  record(Axiom::P1, std::move(p1));

  auto p2 = first_violation(hg, Law::Unit, {m});
  if (!p2) p2 = first_violation(hg, Law::A0, {m, n, n});
  record(Axiom::P2, std::move(p2));

  record(Axiom::P3, first_violation(hg, Law::P3, {n}));
  record(Axiom::A1, first_violation(hg, Law::A1, {m, n, n}));
  record(Axiom::A2, first_violation(hg, Law::A2, {m, m, n}));
  record(Axiom::A3, first_violation(hg, Law::A3, {m, m, n}));
  record(Axiom::A4, first_violation(hg, Law::A4, {m, m, m}));
  record(Axiom::A5, first_violation(hg, Law::A5, {m, m, m}));
  return report;
}

bool witness_reproduces(const HypergroupOverGroup& hg, Axiom axiom, const Witness& w) {
  check_shapes(hg);
  for (const auto& li : kLaws) {
    if (li.axiom != axiom || w.law != li.name) continue;
    if (w.args.size() != arity(li.law)) return false;
    if (li.law == Law::LeftNeutral && w.args[0] != hg.o) return false;
    const int n = hg.h.order(), m = hg.m_size;
    // argument kinds: H-valued slots are the trailing ones of A0/A1, the last of A2/A3, P3's only slot
    std::vector<int> bounds(w.args.size(), m);
    if (li.law == Law::A0 || li.law == Law::A1) bounds[1] = bounds[2] = n;
    if (li.law == Law::A2 || li.law == Law::A3) bounds[2] = n;
    if (li.law == Law::P3) bounds[0] = n;
    for (std::size_t i = 0; i < w.args.size(); ++i)
      if (w.args[i] < 0 || w.args[i] >= bounds[i]) return false;
    return law_violation(hg, li.law, w.args).has_value();
  }
  return false;
}

Elem quasigroup_divide(const HypergroupOverGroup& hg, Elem a, Elem b) {
  if (a < 0 || a >= hg.m_size || b < 0 || b >= hg.m_size)
    throw Error(ErrorCode::IndexOutOfRange, "arguments must lie in [0, " + std::to_string(hg.m_size) + ")");
  Elem solution = -1;
  for (Elem x = 0; x < hg.m_size; ++x) {
    if (hg.xi(x, a) != b) continue;
    if (solution >= 0)
      throw Error(ErrorCode::MultipleSolutions, "[x, " + std::to_string(a) + "] = " + std::to_string(b) + " for x = " +
                                                    std::to_string(solution) + " and x = " + std::to_string(x));
    solution = x;
  }
  if (solution < 0)
    throw Error(ErrorCode::NoSolution, "[x, " + std::to_string(a) + "] = " + std::to_string(b) + " has no solution");
  return solution;
}

std::optional<std::array<Elem, 3>> xi_associativity_witness(const HypergroupOverGroup& hg) {
  const int m = hg.m_size;
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      for (Elem c = 0; c < m; ++c)
        if (hg.xi(hg.xi(a, b), c) != hg.xi(a, hg.xi(b, c))) return std::array<Elem, 3>{a, b, c};
  return std::nullopt;
}

bool is_group_quasigroup(const HypergroupOverGroup& hg) {
  if (xi_associativity_witness(hg)) return false;
  for (Elem a = 0; a < hg.m_size; ++a) {
    if (hg.xi(a, hg.o) != a || hg.xi(hg.o, a) != a)
      throw Error(ErrorCode::InternalInconsistency, "associative xi without two-sided neutral at " + std::to_string(a));
    bool has_inverse = false;
    for (Elem b = 0; b < hg.m_size && !has_inverse; ++b) has_inverse = hg.xi(a, b) == hg.o && hg.xi(b, a) == hg.o;
    if (!has_inverse) throw Error(ErrorCode::InternalInconsistency, "associative xi without inverse of " + std::to_string(a));
  }
  return true;
}

bool is_xi_commutative(const HypergroupOverGroup& hg) {
  for (Elem a = 0; a < hg.m_size; ++a)
    for (Elem b = a + 1; b < hg.m_size; ++b)
      if (hg.xi(a, b) != hg.xi(b, a)) return false;
  return true;
}

FiniteGroup xi_group(const HypergroupOverGroup& hg) { return group_from_cayley_table(hg.xi, "(M,Xi)"); }

}  // namespace hgg
