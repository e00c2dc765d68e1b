#include "hgg/transversal.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "hgg/error.hpp"

namespace hgg {

namespace {

std::vector<Elem> order_by_coset(const CosetDecomposition& d, const std::vector<Elem>& reps, int group_order) {
  std::vector<Elem> ordered(d.cosets.size(), -1);
  if (reps.size() != d.cosets.size())
    throw Error(ErrorCode::NotATransversal, std::to_string(reps.size()) + " representatives for " +
                                                std::to_string(d.cosets.size()) + " cosets");
  for (Elem r : reps) {
    if (r < 0 || r >= group_order) throw Error(ErrorCode::IndexOutOfRange, "element " + std::to_string(r));
    const int c = d.coset_of[r];
    if (ordered[c] >= 0)
      throw Error(ErrorCode::NotATransversal, "elements " + std::to_string(ordered[c]) + " and " + std::to_string(r) +
                                                  " lie in the same right coset");
    ordered[c] = r;
  }
  return ordered;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::vector<Elem> reps_at(const CosetDecomposition& d, std::uint64_t rank) {
  const std::uint64_t h = d.subgroup.size();
  std::vector<Elem> reps(d.cosets.size());
  for (std::size_t i = d.cosets.size(); i-- > 0;) {
    reps[i] = d.cosets[i][rank % h];
    rank /= h;
  }
  return reps;
}

}  // namespace

Transversal::Transversal(const FiniteGroup& g, const Subgroup& h, const std::vector<Elem>& reps)
    : Transversal(std::make_shared<const FiniteGroup>(g), std::make_shared<const CosetDecomposition>(right_cosets(g, h)),
                  reps) {}

Transversal::Transversal(std::shared_ptr<const FiniteGroup> g, std::shared_ptr<const CosetDecomposition> cosets,
                         const std::vector<Elem>& reps)
    : group_(std::move(g)), cosets_(std::move(cosets)), reps_(order_by_coset(*cosets_, reps, group_->order())) {}

Decomposition Transversal::decompose(Elem x) const {
  const int c = cosets_->coset_of.at(x);
  const Elem a = reps_[c];
  const Elem alpha = group_->mul(x, group_->inv(a));
  if (!cosets_->subgroup.contains(alpha))
    throw Error(ErrorCode::InternalInconsistency, "decomposition of " + std::to_string(x) + " left H");
  return {alpha, a, c};
}

bool is_right_transversal(const FiniteGroup& g, const Subgroup& h, const std::vector<Elem>& candidate) {
  const auto d = right_cosets(g, h);
  std::vector<int> hits(d.cosets.size(), 0);
  for (Elem x : candidate) {
    if (x < 0 || x >= g.order()) return false;
    ++hits[d.coset_of[x]];
  }
  return std::all_of(hits.begin(), hits.end(), [](int k) { return k == 1; });
}

bool is_right_complement(const FiniteGroup& g, const Subgroup& h, const std::vector<Elem>& candidate) {
  if (h.size() * candidate.size() != static_cast<std::size_t>(g.order())) return false;
  std::vector<bool> hit(g.order(), false);
  for (Elem a : candidate) {
    if (a < 0 || a >= g.order()) return false;
    for (Elem alpha : h.elements) {
      const Elem x = g.mul(alpha, a);
      if (hit[x]) return false;
      hit[x] = true;
    }
  }
  return true;
}

bool is_section_image(const FiniteGroup& g, const Subgroup& h, const std::vector<Elem>& candidate) {
  const auto d = right_cosets(g, h);
  std::vector<Elem> sigma(d.cosets.size(), -1);
  for (Elem a : candidate) {
    if (a < 0 || a >= g.order()) return false;
    Elem& slot = sigma[d.coset_of[a]];
    if (slot >= 0 && slot != a) return false;  // sigma would not be a function
    slot = a;
  }
  for (std::size_t c = 0; c < sigma.size(); ++c)
    if (sigma[c] < 0 || d.coset_of[sigma[c]] != static_cast<int>(c)) return false;
  const std::set<Elem> image(sigma.begin(), sigma.end());
  const std::set<Elem> cand(candidate.begin(), candidate.end());
  return image == cand && cand.size() == candidate.size();
}

std::uint64_t transversal_count(const FiniteGroup& g, const Subgroup& h) {
  const std::uint64_t index = g.order() / h.size();
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < index; ++i) total = saturating_mul(total, h.size());
  return total;
}

Transversal transversal_at(const FiniteGroup& g, const Subgroup& h, std::uint64_t rank) {
  auto d = std::make_shared<const CosetDecomposition>(right_cosets(g, h));
  auto reps = reps_at(*d, rank);
  return Transversal(std::make_shared<const FiniteGroup>(g), std::move(d), reps);
}

std::vector<Transversal> enumerate_transversals(const FiniteGroup& g, const Subgroup& h,
                                                std::optional<std::uint64_t> limit) {
  const std::uint64_t total = transversal_count(g, h);
  const std::uint64_t n = limit ? std::min(*limit, total) : total;
  if (n == std::numeric_limits<std::uint64_t>::max())
    throw Error(ErrorCode::SizeLimitExceeded, "transversal count overflows; pass a limit");
  auto gp = std::make_shared<const FiniteGroup>(g);
  auto d = std::make_shared<const CosetDecomposition>(right_cosets(g, h));
  std::vector<Transversal> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::uint64_t r = 0; r < n; ++r) out.emplace_back(gp, d, reps_at(*d, r));
  return out;
}

void for_each_transversal(const FiniteGroup& g, const Subgroup& h, std::uint64_t cap, std::uint64_t seed,
                          const std::function<void(const Transversal&)>& visit) {
  const std::uint64_t total = transversal_count(g, h);
  if (total == std::numeric_limits<std::uint64_t>::max())
    throw Error(ErrorCode::SizeLimitExceeded, "transversal count overflows 64 bits");
  auto gp = std::make_shared<const FiniteGroup>(g);
  auto d = std::make_shared<const CosetDecomposition>(right_cosets(g, h));
  if (total <= cap) {
    for (std::uint64_t r = 0; r < total; ++r) visit(Transversal(gp, d, reps_at(*d, r)));
    return;
  }
  // Floyd's sampling of `cap` distinct ranks.
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> ranks;
  for (std::uint64_t j = total - cap; j < total; ++j) {
    const std::uint64_t t = std::uniform_int_distribution<std::uint64_t>(0, j)(rng);
    if (!ranks.insert(t).second) ranks.insert(j);
  }
  for (std::uint64_t r : ranks) visit(Transversal(gp, d, reps_at(*d, r)));
}

NeutralDecomposition neutral_decomposition(const Transversal& t) {
  const auto dec = t.decompose(t.group().identity());
  return {dec.h_part, dec.m_part};
}

InverseDecomposition inverse_decomposition(const Transversal& t, Elem a) {
  if (std::find(t.reps().begin(), t.reps().end(), a) == t.reps().end())
    throw Error(ErrorCode::IndexOutOfRange, "element " + std::to_string(a) + " is not in the transversal");
  const auto dec = t.decompose(t.group().inv(a));
  return {dec.h_part, dec.m_part, dec.m_index};
}

}  // namespace hgg
