#include <gtest/gtest.h>

#include "hgg/error.hpp"
#include "hgg/group.hpp"
#include "oracles.hpp"

using namespace hgg;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InternalInconsistency;
}

// S3 by composing one-line permutations, left factor applied first.
std::vector<std::vector<int>> s3_oracle_table() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::vector<int> r(3);
      for (int x = 0; x < 3; ++x) r[x] = perms[j][perms[i][x]];
      t[i][j] = static_cast<int>(std::find(perms.begin(), perms.end(), r) - perms.begin());
    }
  return t;
}

}  // namespace

TEST(GroupFromTable, TrivialAndZ2) {
  const auto e = group_from_cayley_table(Table(1, 1, 0));
  EXPECT_EQ(e.order(), 1);
  EXPECT_EQ(e.identity(), 0);
  const auto z2 = group_from_cayley_table(Table::from_rows({{0, 1}, {1, 0}}));
  EXPECT_EQ(z2.inv(1), 1);
}

TEST(GroupFromTable, RejectsNonAssociativeWithWitness) {
  const std::vector<std::vector<int>> rows{{0, 1, 2}, {1, 2, 0}, {2, 1, 0}};
  ASSERT_FALSE(oracle::associative(rows));
  try {
    group_from_cayley_table(Table::from_rows(rows));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAssociative);
    EXPECT_NE(std::string(e.what()).find('('), std::string::npos);
  }
}

TEST(GroupFromTable, RejectsBadTables) {
  EXPECT_EQ(code_of([] { group_from_cayley_table(Table::from_rows({{0, 2}, {1, 0}})); }), ErrorCode::NotClosed);
  EXPECT_EQ(code_of([] { group_from_cayley_table(Table::from_rows({{1, 1}, {1, 1}})); }), ErrorCode::NoIdentity);
  EXPECT_EQ(code_of([] { group_from_cayley_table(Table::from_rows({{0, 1}, {1, 1}})); }), ErrorCode::NoInverse);
  EXPECT_EQ(code_of([] { Table::from_rows({{0, 1}, {1}}); }), ErrorCode::ShapeMismatch);
}

TEST(GroupFromSpec, Families) {
  const auto z6 = group_from_spec("Z6");
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) EXPECT_EQ(z6.mul(i, j), (i + j) % 6);
  const auto s3 = group_from_spec("S3");
  EXPECT_FALSE(s3.is_abelian());
  EXPECT_EQ(s3.table().to_rows(), s3_oracle_table());
  EXPECT_EQ(group_from_spec("E").order(), 1);
  EXPECT_EQ(group_from_spec("Q8").order(), 8);
  EXPECT_EQ(group_from_spec("D4").order(), 8);
  EXPECT_EQ(group_from_spec("Z2xS3").order(), 12);
  EXPECT_EQ(code_of([] { group_from_spec("Foo"); }), ErrorCode::UnknownSpec);
  EXPECT_EQ(code_of([] { group_from_spec("S9"); }), ErrorCode::SizeLimitExceeded);
  EXPECT_EQ(code_of([] { group_from_spec("Z2000"); }), ErrorCode::SizeLimitExceeded);
}

TEST(GroupFromSpec, BuiltinsAreGroupsWithDocumentedOrders) {
  for (const auto& spec : builtin_group_specs(24)) {
    const auto g = group_from_spec(spec);
    EXPECT_LE(g.order(), 24) << spec;
    EXPECT_EQ(oracle::identity_of(g), g.identity()) << spec;
    EXPECT_TRUE(oracle::associative(g.table().to_rows())) << spec;
  }
}

TEST(Subgroups, ClosureExamples) {
  const auto z6 = group_from_spec("Z6");
  EXPECT_EQ(subgroup_closure(z6, {}).elements, (std::vector<Elem>{0}));
  EXPECT_EQ(subgroup_closure(z6, {3}).elements, (std::vector<Elem>{0, 3}));
  const auto s3 = group_from_spec("S3");
  EXPECT_EQ(subgroup_closure(s3, {1}).size(), 2u);
  EXPECT_EQ(code_of([&] { subgroup_closure(z6, {7}); }), ErrorCode::IndexOutOfRange);
}

TEST(Subgroups, EnumerationMatchesSubsetOracle) {
  for (const auto& spec : builtin_group_specs(12)) {
    const auto g = group_from_spec(spec);
    const auto subs = enumerate_subgroups(g);
    std::set<std::vector<Elem>> got;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      got.insert(subs[i].elements);
      EXPECT_EQ(g.order() % subs[i].size(), 0u);
      if (i > 0) {
        const auto& a = subs[i - 1].elements;
        const auto& b = subs[i].elements;
        EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b)) << spec;
      }
    }
    EXPECT_EQ(got.size(), subs.size()) << spec;
    EXPECT_EQ(got, oracle::subgroups(g)) << spec;
  }
  EXPECT_EQ(enumerate_subgroups(group_from_spec("Z6")).size(), 4u);
  EXPECT_EQ(enumerate_subgroups(group_from_spec("S3")).size(), 6u);
  EXPECT_EQ(enumerate_subgroups(group_from_spec("E")).size(), 1u);
}

TEST(Normality, ExamplesAndConjugationOracle) {
  const auto z6 = group_from_spec("Z6");
  EXPECT_TRUE(is_normal(z6, Subgroup{{0, 3}}));
  const auto s3 = group_from_spec("S3");
  EXPECT_FALSE(is_normal(s3, subgroup_closure(s3, {1})));
  for (const auto& spec : builtin_group_specs(16)) {
    const auto g = group_from_spec(spec);
    for (const auto& h : enumerate_subgroups(g)) {
      bool conj = true;
      for (Elem x = 0; x < g.order(); ++x)
        for (Elem a : h.elements) conj = conj && h.contains(g.mul(g.mul(x, a), g.inv(x)));
      EXPECT_EQ(is_normal(g, h), conj) << spec;
      if (2 * h.size() == static_cast<std::size_t>(g.order())) EXPECT_TRUE(is_normal(g, h)) << spec;
    }
  }
}

TEST(Cosets, PartitionAndOrder) {
  const auto z6 = group_from_spec("Z6");
  const auto c = right_cosets(z6, Subgroup{{0, 3}});
  EXPECT_EQ(c.cosets, (std::vector<std::vector<Elem>>{{0, 3}, {1, 4}, {2, 5}}));
  const auto s3 = group_from_spec("S3");
  const auto c3 = right_cosets(s3, subgroup_closure(s3, {3}));
  EXPECT_EQ(c3.cosets.size(), 2u);
  const auto whole = right_cosets(s3, whole_group(s3));
  EXPECT_EQ(whole.cosets.size(), 1u);
  for (const auto& spec : builtin_group_specs(12)) {
    const auto g = group_from_spec(spec);
    for (const auto& h : enumerate_subgroups(g)) {
      const auto d = right_cosets(g, h);
      EXPECT_EQ(d.cosets.size() * h.size(), static_cast<std::size_t>(g.order()));
      EXPECT_TRUE(std::binary_search(d.cosets[0].begin(), d.cosets[0].end(), g.identity()));
      for (std::size_t i = 0; i < d.cosets.size(); ++i)
        for (Elem x : d.cosets[i]) {
          EXPECT_EQ(d.coset_of[x], static_cast<int>(i));
          EXPECT_EQ(oracle::right_coset(g, h.elements, x), d.cosets[i]);
        }
    }
  }
}

TEST(Quotient, Examples) {
  const auto z6 = group_from_spec("Z6");
  const auto q = quotient_group(z6, Subgroup{{0, 3}});
  EXPECT_FALSE(oracle::group_isos(q, group_from_spec("Z3")).empty());
  const auto s3 = group_from_spec("S3");
  EXPECT_EQ(code_of([&] { quotient_group(s3, subgroup_closure(s3, {1})); }), ErrorCode::NotNormal);
  for (const auto& spec : builtin_group_specs(16)) {
    const auto g = group_from_spec(spec);
    EXPECT_TRUE(group_isomorphism(quotient_group(g, trivial_subgroup(g)), g).has_value()) << spec;
  }
}

TEST(Isomorphism, ExamplesAgainstBijectionScan) {
  const auto z6 = group_from_spec("Z6");
  auto id = group_isomorphism(z6, z6);
  ASSERT_TRUE(id);
  EXPECT_EQ(*id, (std::vector<Elem>{0, 1, 2, 3, 4, 5}));
  EXPECT_FALSE(group_isomorphism(group_from_spec("Z4"), group_from_spec("Z2xZ2")));
  const auto s3 = group_from_spec("S3"), d3 = group_from_spec("D3");
  auto f = group_isomorphism(s3, d3);
  ASSERT_TRUE(f);
  const auto all = oracle::group_isos(s3, d3);
  EXPECT_EQ(*f, all.front());
  EXPECT_EQ(all_group_isomorphisms(s3, d3), all);
}

TEST(Isomorphism, SymmetricOnBuiltins) {
  const auto specs = builtin_group_specs(8);
  for (const auto& a : specs)
    for (const auto& b : specs) {
      const auto ga = group_from_spec(a), gb = group_from_spec(b);
      const bool ab = group_isomorphism(ga, gb).has_value();
      EXPECT_EQ(ab, group_isomorphism(gb, ga).has_value()) << a << " " << b;
      EXPECT_EQ(ab, !oracle::group_isos(ga, gb).empty()) << a << " " << b;
    }
}

TEST(Homomorphisms, CountMatchesScan) {
  const auto z6 = group_from_spec("Z6"), z3 = group_from_spec("Z3");
  const auto homs = all_group_homomorphisms(z6, z3);
  int count = 0;
  for (int i = 0; i < 729; ++i) {
    std::vector<Elem> f(6);
    for (int k = 0, r = i; k < 6; ++k, r /= 3) f[k] = r % 3;
    count += is_homomorphism(z6, z3, f);
  }
  EXPECT_EQ(static_cast<int>(homs.size()), count);
}

TEST(CayleyText, RoundTrip) {
  const auto d4 = group_from_spec("D4");
  const auto back = parse_cayley_text(to_cayley_text(d4));
  EXPECT_EQ(back, d4);
  EXPECT_EQ(code_of([] { parse_cayley_text("2\n0 1\n1"); }), ErrorCode::ParseError);
}
