#include <gtest/gtest.h>

#include "oalg/fixtures.hpp"

using namespace oalg;

namespace {

void expect_syntax(const std::string& text, std::size_t line, std::size_t column) {
  try {
    parse_algebra_file(text);
    FAIL() << text;
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

}  // namespace

TEST(Format, ParsesMinimalLattice) {
  const Algebra a = parse_algebra("algebra c3\nkind lattice\nelements 0 m 1  # a chain\ncovers 0<m m<1\n");
  EXPECT_EQ(a.name(), "c3");
  EXPECT_EQ(a.kind(), Kind::Lattice);
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ(a.element(*a.top()), "1");
}

TEST(Format, SyntaxErrors) {
  expect_syntax("algebra x\nkind lattice\nelements\n", 3, 1);
  expect_syntax("algebra x\nkind widget\n", 2, 6);
  expect_syntax("kind lattice\nelements 0 1\ncovers 0<1 1<q\n", 3, 12);
  expect_syntax("kind lattice\nelements 0 1\ncovers 0-1\n", 3, 8);
  expect_syntax("kind poset\nelements a b\nfrobnicate\n", 3, 1);
  expect_syntax("kind semiring\nelements 0 1\nbinop plus:\nrow 0: 0 1\nrow 1: 1\n", 5, 1);
  expect_syntax("kind lattice\nelements 0 1\ncovers 0<1\nunary neg: 0=1\n", 4, 7);
  EXPECT_THROW(parse_algebra("elements a\n"), SyntaxError);
}

TEST(Format, ValidationErrors) {
  try {
    load_algebra(std::string(OALG_TEST_DATA) + "/fig5_as_lattice.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ValidationError);
    EXPECT_EQ(e.witness(), (std::vector<std::string>{"a", "b"}));
  }
  EXPECT_THROW(parse_algebra("kind poset\nelements a b\ncovers a<b b<a\n"), Error);
  EXPECT_THROW(load_algebra("/nonexistent/file.txt"), Error);
  // a v b has no least upper bound and no choice is given
  EXPECT_THROW(parse_algebra("kind lambda\nelements 0 a b c d 1\n"
                             "covers 0<a 0<b a<c a<d b<c b<d c<1 d<1\ncomplete-from-order\n"),
               Error);
}

TEST(Format, RoundTripAllFixtures) {
  for (const auto& f : fixture_list()) {
    const AlgebraFile orig = fixture_file(f.id);
    const std::string text = dump_algebra(orig.algebra, orig.expect);
    const AlgebraFile again = parse_algebra_file(text);
    EXPECT_TRUE(again.algebra == orig.algebra) << f.id;
    EXPECT_EQ(again.expect, orig.expect) << f.id;
    EXPECT_EQ(dump_algebra(again.algebra, again.expect), text) << f.id;
  }
}

TEST(Fixtures, SelfValidate) {
  for (const auto& f : fixture_list()) {
    const AlgebraFile file = fixture_file(f.id);
    EXPECT_FALSE(file.expect.empty()) << f.id;
    EXPECT_EQ(validate_fixture(file), std::vector<std::string>{}) << f.id;
  }
}

TEST(Fixtures, Registry) {
  EXPECT_EQ(fixture("fig7").name(), "fig7_ex2");
  EXPECT_EQ(fixture("fig4").kind(), Kind::Poset);
  EXPECT_EQ(fixture("boolean_ring_4").size(), 16u);
  try {
    fixture("fig9");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownFixture);
  }
}

TEST(Fixtures, Fig4Transcription) {
  const Algebra a = fixture("fig4");
  const auto c = a.order()->covers();
  EXPECT_EQ(c.size(), 4u + 10u + 4u);
  EXPECT_EQ(format_covers(*a.order()).substr(0, 8), " 0<a 0<b");
}
