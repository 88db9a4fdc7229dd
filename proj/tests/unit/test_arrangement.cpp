#include "doctest.h"

#include "eigenstrata/arrangement.hpp"

using namespace eigenstrata;

namespace {
Partition P(const char* s) { return Partition::parse(s); }
RationalUniPoly poly(std::vector<Rational> c) { return RationalUniPoly(std::move(c)); }
}  // namespace

TEST_CASE("block assignments") {
  BlockAssignment b({{3}, {1, 2}});
  CHECK(b.str() == "12|3");
  CHECK(b.shape() == P("2,1"));
  CHECK(b.labels() == std::vector<std::size_t>{0, 0, 1});
  CHECK(b.point({Rational(4), Rational(-1)}) == ExactVector{4, 4, -1});
  CHECK(BlockAssignment({{1, 2}, {3}}) == b);
  std::vector<std::vector<int>> ten;
  for (int i = 1; i <= 10; ++i) ten.push_back({i});
  CHECK(BlockAssignment(ten).str() == "1|2|3|4|5|6|7|8|9|10");
  CHECK(BlockAssignment({{1, 10}, {2, 3, 4, 5, 6, 7, 8, 9}}).str() == "1,10|2,3,4,5,6,7,8,9");
  CHECK_THROWS(BlockAssignment({{1, 1}}));
}

TEST_CASE("subspace enumeration") {
  const auto s = enumerate_subspaces(P("2,2"));
  REQUIRE(s.size() == 3);
  CHECK(s[0].str() == "12|34");
  CHECK(s[1].str() == "13|24");
  CHECK(s[2].str() == "14|23");
  for (int n = 1; n <= 7; ++n)
    for (const auto& l : partitions_of(n)) {
      const auto all = enumerate_subspaces(l);
      CHECK(all.size() == count_distinct_subspaces(l));
      for (const auto& a : all) CHECK(a.shape() == l);
    }
  CHECK_THROWS_AS(enumerate_subspaces(P("7,6")), SizeGuardError);
}

TEST_CASE("derksen formula on small arrangements") {
  // three planes through a line in 3-space: a cubic surface
  CHECK(derksen_hilbert({1, 1, 1}, 3).poly == poly({0, 3}));
  // two lines through the origin
  CHECK(derksen_hilbert({2, 2}, 3).poly == poly({2}));
  // one hyperplane in 4-space
  CHECK(derksen_hilbert({1}, 4).poly == binomial_in_t(2));
  CHECK(binomial_in_t(1) == poly({1, 1}));
  CHECK(binomial_in_t(2) == poly({1, Rational(3, 2), Rational(1, 2)}));
}

TEST_CASE("closed form hilbert polynomial") {
  CHECK(paper_hilbert(P("2,1")).poly == poly({0, 3}));
  CHECK(paper_hilbert(P("3")).poly == poly({1}));
  CHECK(paper_hilbert(P("3,1")).poly == poly({4, 4}));
  CHECK_THROWS_AS(paper_hilbert(P("1,1,1")), DegenerateError);
  // closed form and general inclusion-exclusion agree
  for (const char* s : {"2,1", "3,1", "2,2", "3,2", "2,1,1", "3,2,1"}) {
    const Partition l = P(s);
    std::vector<int> codims(multinomial(l), l.n() - l.m());
    CHECK(paper_hilbert(l).poly == derksen_hilbert(codims, l.n()).poly);
  }
}

TEST_CASE("hilbert function oracle") {
  const std::vector<std::size_t> want{1, 3, 6, 9, 12, 15};
  for (unsigned t = 0; t < want.size(); ++t) CHECK(hilbert_function_oracle(P("2,1"), t, 1) == want[t]);
  // one line: HF = 1 in every degree
  for (unsigned t = 0; t < 5; ++t) CHECK(hilbert_function_oracle(P("2"), t, 1) == 1);
  // both oracles see the cone structure: HF(t) = Σ_{j≤t} HF_section(j)
  std::size_t acc = 0;
  for (unsigned t = 0; t < 5; ++t) {
    acc += section_hilbert_function(P("2,2"), t, 1);
    CHECK(hilbert_function_oracle(P("2,2"), t, 1) == acc);
  }
}

TEST_CASE("interpolation of values") {
  CHECK(interpolate_values({0, 1, 2}, {1, 3, 5}) == poly({1, 2}));
  CHECK(interpolate_values({1, 2, 3}, {1, 4, 9}) == poly({0, 0, 1}));
}

TEST_CASE("geometric degree") {
  CHECK_THROWS_AS(arrangement_degree(P("2"), 1), DimensionError);
  for (const char* s : {"2,1", "3,1", "3,2"}) {
    const auto r = arrangement_degree(P(s), 1);
    REQUIRE(r.geometric.has_value());
    CHECK(*r.geometric == r.formula_degree);
  }
  const auto r = arrangement_degree(P("2,2"), 1);
  REQUIRE(r.geometric.has_value());
  CHECK(*r.geometric == 3);
  CHECK(r.distinct_subspaces == 3);
  CHECK(r.formula_degree == 6);
}
