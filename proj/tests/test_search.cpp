#include <gtest/gtest.h>

#include "oalg/fixtures.hpp"
#include "oalg/search.hpp"

using namespace oalg;

TEST(Generate, PosetCounts) {
  const std::vector<std::size_t> want{1, 1, 2, 5, 16, 63};
  for (std::size_t n = 0; n < want.size(); ++n) EXPECT_EQ(posets_up_to_iso(n).size(), want[n]) << n;
}

TEST(Generate, LatticeCounts) {
  const std::vector<std::size_t> want{1, 1, 1, 2, 5, 15, 53, 222};
  for (std::size_t n = 1; n <= want.size(); ++n) EXPECT_EQ(lattices_up_to_iso(n).size(), want[n - 1]) << n;
}

TEST(Generate, OrthomodularLattices) {
  const auto oml = orthomodular_lattices(10);
  std::vector<std::size_t> sizes;
  for (const auto& a : oml) {
    sizes.push_back(a.size());
    EXPECT_TRUE(lattice_flags(a).at("orthomodular").holds) << a.name();
  }
  EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 4, 6, 8, 8, 10, 10}));
  std::size_t modular = 0;
  for (const auto& a : oml) modular += lattice_flags(a).at("modular").holds ? 1 : 0;
  EXPECT_EQ(modular, 6u);  // all but the horizontal sum of 2^2 and 2^3
}

TEST(Generate, UnaryOperations) {
  UnaryFilter comp;
  comp.complementation = true;
  EXPECT_EQ(enumerate_unary_ops(n5_lattice('a'), comp).size(), 2u);
  EXPECT_EQ(enumerate_unary_ops(fixture("fig1"), comp).size(), 6561u);
  UnaryFilter inv = comp;
  inv.involution = true;
  EXPECT_EQ(enumerate_unary_ops(fixture("fig1"), inv).size(), 9u);
  EXPECT_EQ(enumerate_unary_ops(chain_lattice(3), UnaryFilter{}).size(), 27u);
  UnaryFilter anti;
  anti.antitone = true;
  EXPECT_EQ(enumerate_unary_ops(chain_lattice(3), anti).size(), 10u);
  UnaryFilter surj;
  surj.surjective = true;
  EXPECT_EQ(enumerate_unary_ops(chain_lattice(4), surj).size(), 24u);
  EXPECT_EQ(enumerate_unary_ops(chain_lattice(4), parse_unary_filter({"involution"})).size(), 10u);
  EXPECT_EQ(enumerate_unary_ops(chain_lattice(4), UnaryFilter{}, 5).size(), 5u);
  EXPECT_THROW(parse_unary_filter({"sparkly"}), Error);
}

TEST(Generate, Completions) {
  EXPECT_EQ(count_lambda_completions(*fixture("fig4").order()), 20736u);
  EXPECT_EQ(count_lambda_completions(*fixture("fig5_ex1").order()), 531441u);
  EXPECT_EQ(count_lambda_completions(*fixture("mo2").order()), 1u);
  const auto some = enumerate_lambda_completions(*fixture("fig7").order());
  EXPECT_TRUE(some.exhausted);
  EXPECT_EQ(some.algebras.size(), 9u);
  const auto capped = enumerate_lambda_completions(*fixture("fig4").order(), 7);
  EXPECT_FALSE(capped.exhausted);
  EXPECT_EQ(capped.algebras.size(), 7u);
  EXPECT_THROW(completion_spec(poset_from_covers({"a", "b"}, {})), Error);
}

TEST(Generate, Pseudorings) {
  std::size_t total = 0;
  for (const auto& l : lattices_up_to_iso(6)) {
    for_each_pseudoring_on(l, [&](const Algebra& r) {
      EXPECT_TRUE(check_pseudoring(r).holds);
      ++total;
      return true;
    });
  }
  EXPECT_EQ(total, 3u);  // the three orthocomplementations of MO2
}

TEST(Generate, SemiringReducts) {
  EXPECT_EQ(semiring_reducts(1).size(), 1u);
  for (const auto& [p, t] : semiring_reducts(3)) {
    EXPECT_EQ(p(0, 2), 2u);
    EXPECT_EQ(t(0, 2), 0u);
  }
}

TEST(Falsify, Registry) {
  EXPECT_GE(conjecture_registry().size(), 20u);
  EXPECT_THROW(find_conjecture("th99"), Error);
  try {
    falsify("th4_b1_a1", 9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BoundTooLarge);
  }
}

TEST(Falsify, SmallSweepsAreEmpty) {
  for (const char* name : {"th4_b1_a1", "th4_b2_a2", "prop7_complemented", "prop8_om", "th5", "final_s4"}) {
    const SearchResult r = falsify(name, 5);
    EXPECT_EQ(r.hit_count, 0u) << name;
    EXPECT_TRUE(r.exhausted) << name;
    EXPECT_GT(r.models_examined, 0u) << name;
  }
}

TEST(Falsify, FindsCounterexamples) {
  SearchOptions opts;
  opts.max_hits = 2;
  const SearchResult r = falsify("sanity_inverted", 4, opts);
  EXPECT_EQ(r.hit_count, r.hypothesis_models);
  EXPECT_GT(r.hit_count, 0u);
  EXPECT_LE(r.hits.size(), 2u);
  EXPECT_FALSE(r.hits[0].verdicts.empty());
}

TEST(Falsify, DeterministicAcrossThreads) {
  SearchOptions one, many;
  one.threads = 1;
  many.threads = 4;
  const SearchResult a = falsify("lemma_necessity_lambda_top", 5, one);
  const SearchResult b = falsify("lemma_necessity_lambda_top", 5, many);
  EXPECT_EQ(a.models_examined, b.models_examined);
  EXPECT_EQ(a.hypothesis_models, b.hypothesis_models);
}
