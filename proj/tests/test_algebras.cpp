#include <gtest/gtest.h>

#include "oalg/builders.hpp"
#include "oalg/fixtures.hpp"

using namespace oalg;

TEST(Lattice, FromPoset) {
  const Algebra n5 = n5_lattice('a');
  const BinaryTable& join = *n5.binary("join");
  const BinaryTable& meet = *n5.binary("meet");
  EXPECT_EQ(n5.element(join(n5.index_of("b"), n5.index_of("c"))), "1");
  EXPECT_EQ(n5.element(meet(n5.index_of("b"), n5.index_of("c"))), "0");
  EXPECT_NO_THROW(validate(n5));
}

TEST(Lattice, NotALatticeWitness) {
  const Algebra fig5 = fixture("fig5_ex1");
  try {
    lattice_from_poset(*fig5.order());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotALattice);
    EXPECT_EQ(e.witness(), (std::vector<std::string>{"a", "b"}));
  }
}

TEST(Lattice, Flags) {
  const VerdictMap mo2 = lattice_flags(fixture("mo2"));
  EXPECT_TRUE(mo2.at("modular").holds);
  EXPECT_FALSE(mo2.at("distributive").holds);
  EXPECT_TRUE(mo2.at("orthomodular").holds);

  const VerdictMap fig1 = lattice_flags(fixture("fig1"));
  EXPECT_TRUE(fig1.at("modular").holds);
  EXPECT_TRUE(fig1.at("complemented").holds);
  EXPECT_FALSE(fig1.at("orthomodular").holds);

  const VerdictMap o6 = lattice_flags(o6_lattice());
  EXPECT_FALSE(o6.at("modular").holds);
  EXPECT_FALSE(o6.at("orthomodular").holds);
  EXPECT_TRUE(o6.at("complemented").holds);

  const VerdictMap b3 = lattice_flags(boolean_lattice(3));
  EXPECT_TRUE(b3.at("distributive").holds);
  EXPECT_TRUE(b3.at("pseudocomplemented").holds);
  EXPECT_TRUE(b3.at("dually_pseudocomplemented").holds);

  EXPECT_THROW(lattice_flags(chain_lattice(3)), Error);
}

TEST(Lambda, Fig7IsNotALattice) {
  const Algebra a = fixture("fig7");
  EXPECT_EQ(a.kind(), Kind::Lambda);
  EXPECT_TRUE(check_lambda_axioms(a.size(), *a.binary("lsup"), *a.binary("linf")).holds);
  const Verdict lat = is_lattice_lambda(a);
  EXPECT_FALSE(lat.holds);
  EXPECT_EQ(induced_order(a), *a.order());
}

TEST(Lambda, RejectsBadTables) {
  const Algebra a = fixture("fig7");
  BinaryTable sup = *a.binary("lsup");
  sup.set(1, 2, 4);  // a v b = d, but b v a stays 1
  EXPECT_FALSE(check_lambda_axioms(a.size(), sup, *a.binary("linf")).holds);
  EXPECT_THROW(make_lambda("bad", a.elements(), sup, *a.binary("linf")), Error);
}

TEST(Lambda, FanoAxioms) {
  const Algebra f = build_fano_lambda();
  EXPECT_EQ(f.size(), 16u);
  EXPECT_FALSE(is_lattice_lambda(f).holds);
  ConditionContext ctx(f);
  EXPECT_TRUE(ctx.holds("involution"));
  EXPECT_TRUE(ctx.holds("complemented"));
}

TEST(Semiring, BooleanRings) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const Algebra r = build_boolean_ring(k);
    EXPECT_EQ(r.size(), std::size_t{1} << k);
    EXPECT_TRUE(check_semiring(r).holds) << k;
  }
  EXPECT_THROW(build_boolean_ring(0), Error);
  EXPECT_THROW(build_boolean_ring(5), Error);
  EXPECT_EQ(subset_names(2), (std::vector<std::string>{"{}", "{1}", "{2}", "{1,2}"}));
}

TEST(Pseudoring, TranslationOfMo2) {
  const Algebra ring = oml_to_pseudoring(fixture("mo2"));
  const Algebra printed = fixture("pseudoring6");
  EXPECT_TRUE(check_pseudoring(ring).holds);
  EXPECT_EQ(*ring.binary("plus"), *printed.binary("plus"));
  EXPECT_EQ(*ring.binary("times"), *printed.binary("times"));
  EXPECT_EQ(*ring.prime(), *printed.prime());

  const Algebra back = pseudoring_to_oml(printed);
  const Algebra mo2 = fixture("mo2");
  EXPECT_EQ(*back.binary("join"), *mo2.binary("join"));
  EXPECT_EQ(*back.binary("meet"), *mo2.binary("meet"));
  EXPECT_EQ(*back.unary("neg"), *mo2.unary("neg"));
  EXPECT_EQ(*back.order(), *mo2.order());
}

TEST(Pseudoring, Rejections) {
  EXPECT_THROW(oml_to_pseudoring(fixture("fig1")), Error);
  Algebra broken = fixture("pseudoring6");
  BinaryTable plus = *broken.binary("plus");
  plus.set(1, 1, 1);
  broken.set_binary("plus", plus);
  EXPECT_FALSE(check_pseudoring(broken).holds);
  EXPECT_THROW(pseudoring_to_oml(broken), Error);
}

TEST(Constructions, DirectProduct) {
  const Algebra c2 = with_unary(chain_lattice(2), UnaryTable({1, 0}));
  const Algebra sq = direct_product(c2, c2);
  EXPECT_EQ(sq.size(), 4u);
  EXPECT_EQ(sq.element(1), "0.1");
  EXPECT_TRUE(lattice_flags(sq).at("orthomodular").holds);

  const Algebra f7 = fixture("fig7");
  const Algebra f49 = direct_product(f7, f7);
  EXPECT_EQ(f49.size(), 36u);
  EXPECT_EQ(f49.kind(), Kind::Lambda);
  EXPECT_FALSE(is_lattice_lambda(f49).holds);
}

TEST(Constructions, Subalgebra) {
  const Algebra mo2 = fixture("mo2");
  const Algebra s = subalgebra_generated(mo2, std::vector<std::string>{"a"});
  EXPECT_EQ(s.elements(), (std::vector<std::string>{"0", "a", "c", "1"}));
  EXPECT_TRUE(lattice_flags(s).at("distributive").holds);
  EXPECT_EQ(subalgebra_generated(mo2, std::vector<std::string>{"a", "b"}).size(), 6u);
  EXPECT_THROW(subalgebra_generated(mo2, std::vector<std::string>{"z"}), Error);
}

TEST(Constructions, MoLattices) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Algebra m = mo_lattice(n);
    EXPECT_EQ(m.size(), 2 * n + 2);
    EXPECT_TRUE(lattice_flags(m).at("orthomodular").holds) << n;
  }
}
