#pragma once

// Built-in fixtures with their expected verdicts.

#include <string>
#include <string_view>
#include <vector>

#include "oalg/builders.hpp"
#include "oalg/conditions.hpp"
#include "oalg/io.hpp"

namespace oalg {

struct FixtureInfo {
  std::string id;
  std::string description;
};

namespace detail {

inline constexpr std::string_view kFig1 = R"(algebra fig1
kind lattice
elements 0 a b c d e f g h i j 1
covers 0<a 0<b 0<c 0<d 0<e a<f b<f c<f d<f e<g e<h e<i e<j
covers a<g b<h c<i d<j f<1 g<1 h<1 i<1 j<1
unary neg: 0=1 a=h b=i c=j d=g e=f f=e g=b h=c i=d j=a 1=0
expect B1=true B2=true A1=true A2=true adjoint=true modular=true complemented=true
expect orthomodular=false involution=false
)";

inline constexpr std::string_view kN5a = R"(algebra n5_bprime_a
kind lattice
elements 0 a b c 1
covers 0<a 0<b a<c b<1 c<1
unary neg: 0=1 a=b b=a c=b 1=0
expect B1=false B2=false A1=false A2=false modular=false involution=false complemented=true
)";

inline constexpr std::string_view kN5c = R"(algebra n5_bprime_c
kind lattice
elements 0 a b c 1
covers 0<a 0<b a<c b<1 c<1
unary neg: 0=1 a=b b=c c=b 1=0
expect B1=true B2=false A1=true A2=false modular=false involution=false
)";

inline constexpr std::string_view kFig3 = R"(algebra fig3
kind lambda
elements 0 a b c d 1
covers 0<a 0<b a<c a<d b<c b<d c<1 d<1
complete-from-order
choice join a b = d
choice meet c d = b
unary neg: 0=1 a=1 b=1 c=d d=c 1=0
expect A1=true A2=false D1=true E1=true lattice=false
)";

inline constexpr std::string_view kFig4 = R"(algebra fig4
kind poset
elements 0 a b c d d' c' b' a' 1
covers 0<a 0<b 0<c 0<d
covers a<d' a<c' a<b' b<d' b<a' c<d' c<a' d<c' d<b' d<a'
covers d'<1 c'<1 b'<1 a'<1
unary neg: 0=1 a=a' b=b' c=c' d=d' d'=d c'=c b'=b a'=a 1=0
expect antitone=true involution=true bounded=true
)";

inline constexpr std::string_view kFig5 = R"(algebra fig5_ex1
kind lambda
elements 0 a b c d d' c' b' a' 1
covers 0<a 0<b 0<c 0<d
covers a<d' a<c' a<b' b<d' b<c' b<a' c<d' c<b' c<a' d<c' d<b' d<a'
covers d'<1 c'<1 b'<1 a'<1
complete-from-order
choice join a b = d'
choice join a c = d'
choice join a d = c'
choice join b c = d'
choice join b d = c'
choice join c d = b'
choice meet d' c' = 0
choice meet d' b' = 0
choice meet d' a' = 0
choice meet c' b' = 0
choice meet c' a' = 0
choice meet b' a' = 0
unary neg: 0=1 a=a' b=b' c=c' d=d' d'=d c'=c b'=b a'=a 1=0
expect A2=true A1=false C2=false top_complement=true bottom_complement=true
expect antitone=true involution=true lattice=false
)";

inline constexpr std::string_view kFig7 = R"(algebra fig7_ex2
kind lambda
elements 0 a b c d 1
covers 0<a 0<b a<c a<d b<c b<d c<1 d<1
complete-from-order
choice join a b = 1
choice meet c d = 0
unary neg: 0=1 a=b b=a c=d d=c 1=0
expect A1=true A2=true adjoint=true C1=false C2=false D1=true D2=true
expect E1=true E2=true F1=true F2=true lattice=false
)";

inline constexpr std::string_view kPseudoring6 = R"(algebra pseudoring6
kind pseudoring
elements 0 a b c d 1
binop plus:
row 0: 0 a b c d 1
row a: a 0 0 1 0 c
row b: b 0 0 0 1 d
row c: c 1 0 0 0 a
row d: d 0 1 0 0 b
row 1: 1 c d a b 0
binop times:
row 0: 0 0 0 0 0 0
row a: 0 a 0 0 0 a
row b: 0 0 b 0 0 b
row c: 0 0 0 c 0 c
row d: 0 0 0 0 d d
row 1: 0 a b c d 1
const zero 0
const one 1
expect pseudoring=true A1=true A2=true adjoint=true
)";

inline constexpr std::string_view kMo2 = R"(algebra mo2
kind lattice
elements 0 a b c d 1
covers 0<a 0<b 0<c 0<d a<1 b<1 c<1 d<1
unary neg: 0=1 a=c b=d c=a d=b 1=0
expect orthomodular=true modular=true adjoint=true B1=true B2=true
)";

inline AlgebraFile with_expect(Algebra a, Expectations e) { return {std::move(a), std::move(e)}; }

}  // namespace detail

inline const std::vector<FixtureInfo>& fixture_list() {
  static const std::vector<FixtureInfo> list = {
      {"fig1", "complemented modular lattice M4 x 2 with a non-involutive complementation"},
      {"n5_bprime_a", "N5 with b' = a"},
      {"n5_bprime_c", "N5 with b' = c"},
      {"fig3", "six-element lambda-lattice with a v b = d and c ^ d = b"},
      {"fig4", "bounded poset with involution on four atoms and four coatoms"},
      {"fig5_ex1", "lambda-lattice on the four-atom poset satisfying A2 but not A1"},
      {"fano", "sixteen-element lambda-lattice of the Fano plane"},
      {"fig7_ex2", "six-element lambda-lattice with an adjoint pair, not a lattice"},
      {"boolean_ring_1", "Boolean ring on the subsets of a 1-set"},
      {"boolean_ring_2", "Boolean ring on the subsets of a 2-set"},
      {"boolean_ring_3", "Boolean ring on the subsets of a 3-set"},
      {"boolean_ring_4", "Boolean ring on the subsets of a 4-set"},
      {"pseudoring6", "six-element orthomodular pseudoring"},
      {"mo2", "orthomodular lattice MO2"},
      {"o6", "benzene ring O6, an ortholattice that is not orthomodular"},
      {"mo4", "orthomodular lattice MO4"},
  };
  return list;
}

inline AlgebraFile fixture_file(std::string_view id) {
  using detail::with_expect;
  if (id == "fig1") return parse_algebra_file(detail::kFig1);
  if (id == "n5_bprime_a") return parse_algebra_file(detail::kN5a);
  if (id == "n5_bprime_c") return parse_algebra_file(detail::kN5c);
  if (id == "fig3") return parse_algebra_file(detail::kFig3);
  if (id == "fig4") return parse_algebra_file(detail::kFig4);
  if (id == "fig5_ex1") return parse_algebra_file(detail::kFig5);
  if (id == "fig7_ex2" || id == "fig7") {
    return parse_algebra_file(detail::kFig7);
  }
  if (id == "pseudoring6") return parse_algebra_file(detail::kPseudoring6);
  if (id == "mo2") return parse_algebra_file(detail::kMo2);
  if (id == "fano") {
    return with_expect(build_fano_lambda(), {{"C1", true},
                                             {"C2", true},
                                             {"E1", false},
                                             {"A1", false},
                                             {"A2", false},
                                             {"lattice", false},
                                             {"involution", true},
                                             {"antitone", true},
                                             {"complemented", true},
                                             {"de_morgan_join", true},
                                             {"de_morgan_meet", true}});
  }
  if (id.substr(0, 13) == "boolean_ring_" && id.size() == 14) {
    const int k = id[13] - '0';
    if (k >= 1 && k <= 4) {
      return with_expect(build_boolean_ring(static_cast<std::size_t>(k)), {{"semiring", true},
                                                                          {"c3", true},
                                                                          {"c4", true},
                                                                          {"c5", true},
                                                                          {"c6", true},
                                                                          {"adjoint", true}});
    }
  }
  if (id == "o6") {
    return with_expect(o6_lattice(), {{"complemented", true},
                                      {"involution", true},
                                      {"antitone", true},
                                      {"orthomodular", false},
                                      {"A2", false}});
  }
  if (id == "mo4") {
    Algebra a = mo_lattice(4);
    a.set_name("mo4");
    return with_expect(std::move(a), {{"orthomodular", true}, {"adjoint", true}});
  }
  throw Error(Errc::UnknownFixture, std::string(id));
}

inline Algebra fixture(std::string_view id) { return fixture_file(id).algebra; }

/// Expected verdicts that disagree with freshly computed ones, as "NAME expected X".
inline std::vector<std::string> validate_fixture(const AlgebraFile& f) {
  std::vector<std::string> bad;
  ConditionContext ctx(f.algebra);
  for (const auto& [cond, want] : f.expect) {
    const bool got = ctx.holds(cond);
    if (got != want) bad.push_back(cond + " expected " + (want ? "true" : "false"));
  }
  return bad;
}

}  // namespace oalg
