#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "hgg/error.hpp"
#include "hgg/group.hpp"

namespace hgg {

namespace {

Table cyclic_table(int n) {
  Table t(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t(i, j) = (i + j) % n;
  return t;
}

Table symmetric_table(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;

  const int order = static_cast<int>(perms.size());
  Table t(order, order);
  std::vector<int> composed(n);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      // left factor applied first
      for (int x = 0; x < n; ++x) composed[x] = perms[j][perms[i][x]];
      t(i, j) = index.at(composed);
    }
  return t;
}

Table dihedral_table(int n) {
  // s^f1 r^k1 · s^f2 r^k2 = s^(f1+f2) r^((-1)^f2 k1 + k2)
  const int order = 2 * n;
  Table t(order, order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const int f1 = a / n, k1 = a % n, f2 = b / n, k2 = b % n;
      const int k = ((f2 ? -k1 : k1) + k2 + 2 * n) % n;
      t(a, b) = ((f1 + f2) % 2) * n + k;
    }
  return t;
}

Table quaternion_table() {
  // unit u in {1, i, j, k} with sign; index = 2*u + (negative ? 1 : 0)
  static constexpr std::array<std::array<int, 4>, 4> unit_prod{{
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  }};
  static constexpr std::array<std::array<int, 4>, 4> unit_sign{{
      {1, 1, 1, 1},
      {1, -1, 1, -1},
      {1, -1, -1, 1},
      {1, 1, -1, -1},
  }};
  Table t(8, 8);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, ub = b / 2;
      int sign = unit_sign[ua][ub] * (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1);
      t(a, b) = 2 * unit_prod[ua][ub] + (sign < 0 ? 1 : 0);
    }
  return t;
}

Table direct_product(const Table& a, const Table& b) {
  const int na = a.rows(), nb = b.rows();
  Table t(na * nb, na * nb);
  for (int x = 0; x < na * nb; ++x)
    for (int y = 0; y < na * nb; ++y) t(x, y) = a(x / nb, y / nb) * nb + b(x % nb, y % nb);
  return t;
}

std::string trim(std::string_view s) {
  auto begin = s.find_first_not_of(" \t");
  if (begin == std::string_view::npos) return {};
  auto end = s.find_last_not_of(" \t");
  return std::string(s.substr(begin, end - begin + 1));
}

int parse_parameter(const std::string& token, std::size_t prefix) {
  const std::string digits = token.substr(prefix);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw Error(ErrorCode::UnknownSpec, "cannot parse group factor '" + token + "'");
  if (digits.size() > 4) throw Error(ErrorCode::SizeLimitExceeded, "parameter of '" + token + "' is too large");
  return std::stoi(digits);
}

std::pair<Table, std::string> factor_table(const std::string& token) {
  if (token == "E" || token == "Z1" || token == "C1") return {cyclic_table(1), "E"};
  if (token == "Q8") return {quaternion_table(), "Q8"};
  if (token.empty()) throw Error(ErrorCode::UnknownSpec, "empty group factor");
  const char family = token[0];
  if (family == 'Z' || family == 'C') {
    const int n = parse_parameter(token, 1);
    if (n < 1) throw Error(ErrorCode::UnknownSpec, "Z0 is not a group");
    if (n > kMaxSpecOrder) throw Error(ErrorCode::SizeLimitExceeded, token + " exceeds order " + std::to_string(kMaxSpecOrder));
    return {cyclic_table(n), n == 1 ? "E" : "Z" + std::to_string(n)};
  }
  if (family == 'S') {
    const int n = parse_parameter(token, 1);
    if (n < 1) throw Error(ErrorCode::UnknownSpec, "S0 is not supported");
    if (n > 5) throw Error(ErrorCode::SizeLimitExceeded, "symmetric groups are limited to n <= 5");
    return {symmetric_table(n), "S" + std::to_string(n)};
  }
  if (family == 'D') {
    const int n = parse_parameter(token, 1);
    if (n < 1) throw Error(ErrorCode::UnknownSpec, "D0 is not a group");
    if (n > 8) throw Error(ErrorCode::SizeLimitExceeded, "dihedral groups are limited to n <= 8");
    return {dihedral_table(n), "D" + std::to_string(n)};
  }
  throw Error(ErrorCode::UnknownSpec, "unknown group family '" + token + "'");
}

}  // namespace

FiniteGroup group_from_spec(std::string_view spec) {
  std::string s(spec);
  // accept the multiplication sign as a product separator
  for (std::size_t pos; (pos = s.find("\xC3\x97")) != std::string::npos;) s.replace(pos, 2, "x");
  std::vector<std::string> factors;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find('x', start);
    factors.push_back(trim(std::string_view(s).substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }

  Table product = cyclic_table(1);
  std::string name;
  long long order = 1;
  for (const auto& f : factors) {
    auto [t, n] = factor_table(f);
    order *= t.rows();
    if (order > kMaxSpecOrder)
      throw Error(ErrorCode::SizeLimitExceeded, "'" + s + "' exceeds order " + std::to_string(kMaxSpecOrder));
    product = direct_product(product, t);
    name += (name.empty() ? "" : "x") + n;
  }
  return group_from_cayley_table(product, name);
}

std::vector<std::string> builtin_group_specs(int max_order) {
  static const std::vector<std::string> kList = {
      "E",        "Z2",       "Z3",         "Z4",           "Z2xZ2",        "Z5",      "Z6",      "S3",
      "Z7",       "Z8",       "Z2xZ4",      "Z2xZ2xZ2",     "D4",           "Q8",      "Z9",      "Z3xZ3",
      "Z10",      "D5",       "Z11",        "Z12",          "Z2xZ6",        "D6",      "Z13",     "Z14",
      "D7",       "Z15",      "Z16",        "Z2xZ8",        "Z4xZ4",        "Z2xZ2xZ4", "Z2xZ2xZ2xZ2", "D8",
      "Z2xD4",    "Z2xQ8",    "Z17",        "Z18",          "Z3xZ6",        "Z3xS3",   "Z19",     "Z20",
      "Z2xZ10",   "Z21",      "Z22",        "Z23",          "Z24",          "Z2xZ12",  "Z2xZ2xZ6", "S4",
      "Z3xD4",    "Z3xQ8",    "Z4xS3",      "Z2xD6",
  };
  std::vector<std::pair<int, std::string>> keyed;
  for (std::size_t i = 0; i < kList.size(); ++i) {
    const int order = group_from_spec(kList[i]).order();
    if (order <= max_order) keyed.emplace_back(order, kList[i]);
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::string> out;
  for (auto& [o, s] : keyed) out.push_back(std::move(s));
  return out;
}

FiniteGroup parse_cayley_text(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  int n = 0;
  if (!(in >> n) || n <= 0) throw Error(ErrorCode::ParseError, "expected a positive order on the first line");
  if (n > kMaxSpecOrder) throw Error(ErrorCode::SizeLimitExceeded, "order " + std::to_string(n) + " is too large");
  Table t(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> t(i, j)))
        throw Error(ErrorCode::ParseError, "missing entry at row " + std::to_string(i) + ", column " + std::to_string(j));
  std::string rest;
  if (in >> rest) throw Error(ErrorCode::ParseError, "trailing data after the table");
  return group_from_cayley_table(t, std::move(name));
}

std::string to_cayley_text(const FiniteGroup& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) os << (j ? " " : "") << g.mul(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace hgg
