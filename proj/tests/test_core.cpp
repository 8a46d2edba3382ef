#include <gtest/gtest.h>

#include "oalg/core.hpp"

using namespace oalg;

namespace {

FinitePoset n5() {
  return poset_from_covers({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "1"}, {"c", "1"}});
}

}  // namespace

TEST(Poset, ClosureFromCovers) {
  const FinitePoset p = n5();
  EXPECT_TRUE(p.leq(p.index_of("0"), p.index_of("1")));
  EXPECT_TRUE(p.leq(p.index_of("a"), p.index_of("1")));
  EXPECT_FALSE(p.comparable(p.index_of("b"), p.index_of("c")));
  EXPECT_TRUE(p.less(0, 4));
  EXPECT_FALSE(p.less(2, 2));
}

TEST(Poset, CoversRoundTrip) {
  const FinitePoset p = n5();
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [a, b] : p.covers()) edges.emplace_back(p.name(a), p.name(b));
  EXPECT_EQ(edges.size(), 5u);
  EXPECT_EQ(poset_from_covers(p.names(), edges), p);
}

TEST(Poset, RejectsCycles) {
  try {
    poset_from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CycleDetected);
  }
}

TEST(Poset, RejectsBadRelations) {
  EXPECT_THROW(FinitePoset::from_relation({"a", "b"}, {1, 1, 1, 1}), Error);
  EXPECT_THROW(FinitePoset::from_relation({"a", "b"}, {0, 0, 0, 1}), Error);
  EXPECT_THROW(FinitePoset::from_relation({"a", "b", "c"}, {1, 1, 0, 0, 1, 1, 0, 0, 1}), Error);
}

TEST(Poset, NameValidation) {
  EXPECT_THROW(poset_from_covers({"a", "a"}, {}), Error);
  EXPECT_THROW(poset_from_covers({"a", "b"}, {{"a", "z"}}), Error);
}

TEST(Poset, BoundsAndCones) {
  const FinitePoset p = n5();
  const Bounds b = bounds(p);
  ASSERT_TRUE(b.bottom && b.top);
  EXPECT_EQ(p.name(*b.bottom), "0");
  EXPECT_EQ(p.name(*b.top), "1");
  const ConePair c = cones(p, "b", "c");
  EXPECT_EQ(c.upper, std::vector<Elem>{4});
  EXPECT_EQ(c.lower, std::vector<Elem>{0});

  const FinitePoset anti = poset_from_covers({"x", "y"}, {});
  EXPECT_FALSE(bounds(anti).bottom);
  EXPECT_TRUE(cones(anti, "x", "y").upper.empty());
}

TEST(Tables, ValueRange) {
  EXPECT_THROW(UnaryTable({0, 2}), Error);
  EXPECT_THROW(BinaryTable(2, {0, 1, 1}), Error);
  EXPECT_THROW(BinaryTable(2, {0, 1, 1, 5}), Error);
  BinaryTable t(3);
  t.set(1, 2, 2);
  EXPECT_EQ(t(1, 2), 2u);
  EXPECT_EQ(t(2, 1), 0u);
}

TEST(Tables, UnaryProperties) {
  const FinitePoset p = n5();
  const UnaryProperties ortho = unary_properties(p, UnaryTable({4, 1, 2, 1, 0}));
  EXPECT_FALSE(ortho.involution.holds);
  EXPECT_EQ(ortho.involution.witness, std::vector<Elem>{3});
  EXPECT_FALSE(ortho.surjective.holds);
  EXPECT_EQ(ortho.surjective.witness, std::vector<Elem>{3});

  const UnaryProperties id = unary_properties(p, UnaryTable({0, 1, 2, 3, 4}));
  EXPECT_TRUE(id.involution.holds);
  EXPECT_TRUE(id.surjective.holds);
  EXPECT_FALSE(id.antitone.holds);
  EXPECT_EQ(id.antitone.witness, (std::vector<Elem>{0, 1}));
}
