#include "hgg/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hgg/error.hpp"

namespace hgg {

namespace {

using Poly = std::vector<int>;  // low degree first

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void trim_poly(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_of_index(int index, int p, int m) {
  Poly out(m, 0);
  for (int k = 0; k < m; ++k, index /= p) out[k] = index % p;
  return out;
}

int index_of_poly(const Poly& a, int p) {
  int index = 0;
  for (std::size_t k = a.size(); k-- > 0;) index = index * p + a[k];
  return index;
}

int inverse_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  return 0;
}

// Remainder of a modulo b (b nonzero) over GF(p).
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim_poly(a);
  const int db = static_cast<int>(b.size()) - 1;
  const int lead_inv = inverse_mod(b.back(), p);
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int factor = a.back() * lead_inv % p;
    for (int k = 0; k <= db; ++k) a[shift + k] = ((a[shift + k] - factor * b[k]) % p + p) % p;
    trim_poly(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  trim_poly(out);
  return out;
}

// Least monic factor of degree 1..deg/2, if any.
std::optional<Poly> find_factor(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int k = 0; k < d; ++k) count *= p;
    for (int low = 0; low < count; ++low) {
      Poly g = poly_of_index(low, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return g;
    }
  }
  return std::nullopt;
}

std::string term(int coeff, int power) {
  std::string c = coeff == 1 && power > 0 ? "" : std::to_string(coeff);
  if (power == 0) return c;
  return c + (power == 1 ? "x" : "x^" + std::to_string(power));
}

FiniteField build_field(int p, const Poly& modulus) {
  const int m = static_cast<int>(modulus.size()) - 1;
  int q = 1;
  for (int k = 0; k < m; ++k) q *= p;
  FiniteField f;
  f.p = p;
  f.m = m;
  f.modulus = modulus;
  f.add_table = Table(q, q);
  f.mul_table = Table(q, q);
  std::vector<Poly> polys(q);
  for (int i = 0; i < q; ++i) polys[i] = poly_of_index(i, p, m);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      Poly s(m);
      for (int k = 0; k < m; ++k) s[k] = (polys[i][k] + polys[j][k]) % p;
      f.add_table(i, j) = index_of_poly(s, p);
      Poly prod = poly_mod(poly_mul(polys[i], polys[j], p), modulus, p);
      f.mul_table(i, j) = index_of_poly(prod, p);
    }
  f.name = m == 1 ? "GF(" + std::to_string(p) + ")"
                  : "GF(" + std::to_string(q) + ";" + polynomial_to_string(modulus) + ")";
  return f;
}

[[noreturn]] void parse_fail(std::string_view spec, const std::string& why) {
  throw Error(ErrorCode::ParseError, "field spec '" + std::string(spec) + "': " + why);
}

}  // namespace

Elem FiniteField::neg(Elem a) const {
  for (Elem b = 0; b < order(); ++b)
    if (add(a, b) == zero) return b;
  throw Error(ErrorCode::InternalInconsistency, "no additive inverse");
}

Elem FiniteField::inv(Elem a) const {
  if (a == zero) throw Error(ErrorCode::NoInverse, "zero has no multiplicative inverse");
  for (Elem b = 0; b < order(); ++b)
    if (mul(a, b) == one) return b;
  throw Error(ErrorCode::InternalInconsistency, "no multiplicative inverse");
}

std::string FiniteField::element_to_string(Elem a) const {
  if (m <= 1 || modulus.empty()) return std::to_string(a);
  return polynomial_to_string(poly_of_index(a, p, m));
}

FiniteField make_prime_field(int p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p > kMaxPrime) throw Error(ErrorCode::SizeLimitExceeded, "prime fields are limited to p <= " + std::to_string(kMaxPrime));
  return build_field(p, {0, 1});
}

FiniteField make_extension_field(int p, const std::vector<int>& modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  for (int c : modulus)
    if (c < 0 || c >= p) throw Error(ErrorCode::ParseError, "coefficient " + std::to_string(c) + " is not reduced mod p");
  Poly f = modulus;
  trim_poly(f);
  if (f.size() < 2) throw Error(ErrorCode::NotIrreducible, "modulus must have degree at least 1");
  if (f.back() != 1) throw Error(ErrorCode::NotMonic, polynomial_to_string(f) + " is not monic");
  long long q = 1;
  for (std::size_t k = 1; k < f.size(); ++k) {
    q *= p;
    if (q > kMaxFieldOrder)
      throw Error(ErrorCode::SizeLimitExceeded, "field order exceeds " + std::to_string(kMaxFieldOrder));
  }
  if (auto factor = find_factor(f, p))
    throw Error(ErrorCode::NotIrreducible,
                polynomial_to_string(f) + " has the factor " + polynomial_to_string(*factor));
  return build_field(p, f);
}

std::vector<int> default_modulus(int p, int m) {
  int count = 1;
  for (int k = 0; k < m; ++k) count *= p;
  for (int low = 0; low < count; ++low) {
    Poly g = poly_of_index(low, p, m);
    g.push_back(1);
    if (!find_factor(g, p)) return g;
  }
  throw Error(ErrorCode::InternalInconsistency, "no irreducible polynomial found");
}

std::vector<int> parse_polynomial(std::string_view text, int p) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty polynomial");
  Poly out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t next = std::min(s.find('+', pos), s.size());
    const std::string t = s.substr(pos, next - pos);
    if (t.empty()) throw Error(ErrorCode::ParseError, "empty term in '" + std::string(text) + "'");
    int coeff = 1, power = 0;
    const std::size_t x = t.find('x');
    std::string c = t.substr(0, x == std::string::npos ? t.size() : x);
    if (!c.empty() && c.back() == '*') c.pop_back();
    if (!c.empty()) {
      if (!std::all_of(c.begin(), c.end(), [](unsigned char ch) { return std::isdigit(ch); }))
        throw Error(ErrorCode::ParseError, "bad coefficient '" + c + "'");
      coeff = std::stoi(c);
    } else if (x == std::string::npos) {
      throw Error(ErrorCode::ParseError, "bad term '" + t + "'");
    }
    if (x != std::string::npos) {
      const std::string rest = t.substr(x + 1);
      if (rest.empty()) {
        power = 1;
      } else if (rest[0] == '^' && rest.size() > 1 &&
                 std::all_of(rest.begin() + 1, rest.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
        power = std::stoi(rest.substr(1));
      } else {
        throw Error(ErrorCode::ParseError, "bad exponent in '" + t + "'");
      }
    }
    if (power > 64) throw Error(ErrorCode::SizeLimitExceeded, "degree too large");
    if (static_cast<int>(out.size()) <= power) out.resize(power + 1, 0);
    out[power] = (out[power] + coeff) % p;
    pos = next + 1;
  }
  trim_poly(out);
  return out;
}

std::string polynomial_to_string(const std::vector<int>& coeffs) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k] == 0) continue;
    if (!out.empty()) out += "+";
    out += term(coeffs[k], static_cast<int>(k));
  }
  return out.empty() ? "0" : out;
}

FiniteField field_from_spec(std::string_view spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.rfind("GF(", 0) != 0 || s.back() != ')') parse_fail(spec, "expected GF(q) or GF(q;modulus)");
  const std::string body = s.substr(3, s.size() - 4);
  const std::size_t semi = body.find(';');
  const std::string order_text = body.substr(0, semi);
  long long q = 0;
  const std::size_t caret = order_text.find('^');
  auto parse_int = [&](const std::string& t) {
    if (t.empty() || t.size() > 6 || !std::all_of(t.begin(), t.end(), [](unsigned char ch) { return std::isdigit(ch); }))
      parse_fail(spec, "bad integer '" + t + "'");
    return std::stoll(t);
  };
  if (caret != std::string::npos) {
    const long long base = parse_int(order_text.substr(0, caret));
    const long long exp = parse_int(order_text.substr(caret + 1));
    q = 1;
    for (long long k = 0; k < exp && q <= kMaxFieldOrder; ++k) q *= base;
  } else {
    q = parse_int(order_text);
  }
  if (q > kMaxFieldOrder) throw Error(ErrorCode::SizeLimitExceeded, "field order exceeds " + std::to_string(kMaxFieldOrder));
  int p = 0, m = 0;
  for (int d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  long long rest = q;
  while (p != 0 && rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (p == 0 || rest != 1) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
  if (semi != std::string::npos) {
    const auto modulus = parse_polynomial(body.substr(semi + 1), p);
    if (static_cast<int>(modulus.size()) - 1 != m)
      parse_fail(spec, "modulus degree does not match the field order");
    return make_extension_field(p, modulus);
  }
  if (m == 1) return make_prime_field(p);
  return make_extension_field(p, default_modulus(p, m));
}

FiniteGroup multiplicative_group(const FiniteField& f) {
  const int n = f.order() - 1;
  if (n < 1 || f.zero != 0 || f.one != 1)
    throw Error(ErrorCode::InternalInconsistency, "multiplicative group needs zero = 0, one = 1");
  Table t(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t(i, j) = f.mul(i + 1, j + 1) - 1;
  auto g = group_from_cayley_table(t, f.name + "*");
  bool cyclic = false;
  for (Elem x = 0; x < n && !cyclic; ++x) cyclic = g.element_order(x) == n;
  if (!cyclic) throw Error(ErrorCode::InternalInconsistency, f.name + "* is not cyclic");
  return g;
}

FieldReport verify_field_tables(const Table& add, const Table& mul, Elem zero, Elem one, bool commutative) {
  const int q = add.rows();
  auto fail = [](std::string why, std::vector<Elem> w) { return FieldReport{false, std::move(why), std::move(w)}; };
  if (q < 2 || add.cols() != q || mul.rows() != q || mul.cols() != q) return fail("tables are not square of order >= 2", {});
  if (zero == one) return fail("one equals zero", {zero});
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      if (add(a, b) < 0 || add(a, b) >= q || mul(a, b) < 0 || mul(a, b) >= q) return fail("entry out of range", {a, b});
  for (int a = 0; a < q; ++a) {
    if (add(zero, a) != a || add(a, zero) != a) return fail("zero is not additively neutral", {a});
    if (mul(one, a) != a || mul(a, one) != a) return fail("one is not multiplicatively neutral", {a});
  }
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (add(a, b) != add(b, a)) return fail("addition is not commutative", {a, b});
      if (commutative && mul(a, b) != mul(b, a)) return fail("multiplication is not commutative", {a, b});
    }
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) return fail("addition is not associative", {a, b, c});
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return fail("multiplication is not associative", {a, b, c});
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)) || mul(add(b, c), a) != add(mul(b, a), mul(c, a)))
          return fail("distributivity fails", {a, b, c});
      }
  for (int a = 0; a < q; ++a) {
    bool has_neg = false, has_inv = a == zero;
    for (int b = 0; b < q; ++b) {
      has_neg = has_neg || add(a, b) == zero;
      has_inv = has_inv || (mul(a, b) == one && mul(b, a) == one);
    }
    if (!has_neg) return fail("no additive inverse", {a});
    if (!has_inv) return fail("no multiplicative inverse", {a});
  }
  for (int a = 0; a < q; ++a)
    if (a != zero)
      for (int b = 0; b < q; ++b)
        if (b != zero && mul(a, b) == zero) return fail("zero divisors", {a, b});
  if (commutative) {
    bool cyclic = false;
    for (int g = 0; g < q && !cyclic; ++g) {
      if (g == zero) continue;
      int k = 1;
      for (Elem x = g; x != one; x = mul(x, g)) ++k;
      cyclic = k == q - 1;
    }
    if (!cyclic) return fail("multiplicative group is not cyclic", {});
  }
  return {};
}

FieldReport verify_field_axioms(const FiniteField& f) {
  return verify_field_tables(f.add_table, f.mul_table, f.zero, f.one, true);
}

bool is_field_homomorphism(const FiniteField& from, const FiniteField& to, const std::vector<Elem>& map) {
  if (static_cast<int>(map.size()) != from.order()) return false;
  if (map[from.one] != to.one) return false;
  for (int a = 0; a < from.order(); ++a)
    for (int b = 0; b < from.order(); ++b)
      if (map[from.add(a, b)] != to.add(map[a], map[b]) || map[from.mul(a, b)] != to.mul(map[a], map[b]))
        return false;
  return true;
}

std::vector<std::vector<Elem>> field_embeddings(const FiniteField& from, const FiniteField& to) {
  std::vector<std::vector<Elem>> out;
  const int n = from.order() - 1;
  auto mult_order = [](const FiniteField& f, Elem x) {
    int k = 1;
    for (Elem y = x; y != f.one; y = f.mul(y, x)) ++k;
    return k;
  };
  Elem gen = -1;
  for (Elem x = 0; x < from.order() && gen < 0; ++x)
    if (x != from.zero && mult_order(from, x) == n) gen = x;
  if (gen < 0) return out;
  for (Elem h = 0; h < to.order(); ++h) {
    if (h == to.zero || mult_order(to, h) != n) continue;
    std::vector<Elem> map(from.order(), -1);
    map[from.zero] = to.zero;
    Elem x = from.one, y = to.one;
    for (int k = 0; k < n; ++k, x = from.mul(x, gen), y = to.mul(y, h)) map[x] = y;
    if (is_field_homomorphism(from, to, map)) out.push_back(std::move(map));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Elem>> field_isomorphism(const FiniteField& a, const FiniteField& b) {
  if (a.order() != b.order()) return std::nullopt;
  auto all = field_embeddings(a, b);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace hgg
