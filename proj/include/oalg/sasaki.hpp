#pragma once

// Sasaki operation pairs, adjointness and residuals, and the named law catalogue.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oalg/algebras.hpp"

namespace oalg {

enum class Scheme { S1, S2, S3, S4 };

inline const char* scheme_name(Scheme s) noexcept {
  switch (s) {
    case Scheme::S1: return "S1";
    case Scheme::S2: return "S2";
    case Scheme::S3: return "S3";
    case Scheme::S4: return "S4";
  }
  return "?";
}

inline std::optional<Scheme> parse_scheme(std::string_view s) {
  for (Scheme k : {Scheme::S1, Scheme::S2, Scheme::S3, Scheme::S4}) {
    if (s == scheme_name(k)) return k;
  }
  return std::nullopt;
}

inline Kind scheme_kind(Scheme s) noexcept {
  switch (s) {
    case Scheme::S1: return Kind::Lattice;
    case Scheme::S2: return Kind::Lambda;
    case Scheme::S3: return Kind::Semiring;
    case Scheme::S4: return Kind::Pseudoring;
  }
  return Kind::Lattice;
}

inline std::optional<Scheme> scheme_for(Kind k) noexcept {
  switch (k) {
    case Kind::Lattice: return Scheme::S1;
    case Kind::Lambda: return Scheme::S2;
    case Kind::Semiring: return Scheme::S3;
    case Kind::Pseudoring: return Scheme::S4;
    case Kind::Poset: break;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Named laws

struct NamedLaw {
  const char* name;
  const char* text;
};

inline const std::vector<NamedLaw>& law_catalogue() {
  static const std::vector<NamedLaw> laws = {
      {"A1", "(x o y) <= z => x <= (y -> z)"},
      {"A2", "x <= (y -> z) => (x o y) <= z"},
      {"B1", "y' v ((x v y') ^ y) = x v y'"},
      {"B2", "(x' v (x ^ y)) ^ x = x ^ y"},
      {"C1", "y' v ((x v y') ^ y) = x v y'"},
      {"C2", "(x' v (x ^ y)) ^ x = x ^ y"},
      {"D1", "x v y' <= y' v ((x v y') ^ y)"},
      {"D2", "(x' v (x ^ y)) ^ x <= x ^ y"},
      {"E1", "x <= y => z' v (z ^ x) <= z' v (z ^ y)"},
      {"E2", "x <= y => (x v z') ^ z <= (y v z') ^ z"},
      {"F1", "(x o y) <= z => y' v (y ^ (x o y)) <= y' v (y ^ z)"},
      {"F2", "x <= (y -> z) => (x v y') ^ y <= ((y -> z) v y') ^ y"},
      {"c3", "x <= y' + x * y * y"},
      {"c4", "x <= y => z' + z * x <= z' + z * y"},
      {"c5", "x <= y => x * z <= y * z"},
      {"c6", "x * y <= x"},
      {"OM", "x v ((x v y) ^ x') = x v y"},
      {"modular", "x <= z => x v (y ^ z) = (x v y) ^ z"},
      {"distributive", "x ^ (y v z) = (x ^ y) v (x ^ z)"},
      {"weakly_orthomodular", "x = (x ^ y) v (x ^ (x ^ y)')"},
      {"dually_weakly_orthomodular", "x = (x v y) ^ (x v (x v y)')"},
      {"top_complement", "x v x' = 1"},
      {"bottom_complement", "x ^ x' = 0"},
      {"involution", "x'' = x"},
      {"antitone", "x <= y => y' <= x'"},
      {"de_morgan_join", "(x v y)' = x' ^ y'"},
      {"de_morgan_meet", "(x ^ y)' = x' v y'"},
      {"sup_monotone", "x <= y => x v z <= y v z"},
      {"inf_monotone", "x <= y => x ^ z <= y ^ z"},
      {"odot_monotone_first", "x <= y => (x o z) <= (y o z)"},
      {"imp_monotone_second", "x <= y => (z -> x) <= (z -> y)"},
      {"lemma1_f", "x <= (y -> (x o y))"},
      {"lemma1_g", "((y -> z) o y) <= z"},
  };
  return laws;
}

/// Compiled catalogue law, or nullptr for unknown names.
inline const CompiledLaw* named_law(std::string_view name) {
  static const std::map<std::string, CompiledLaw, std::less<>> compiled = [] {
    std::map<std::string, CompiledLaw, std::less<>> m;
    for (const auto& l : law_catalogue()) m.emplace(l.name, CompiledLaw(parse_law(l.text), l.name));
    return m;
  }();
  auto it = compiled.find(name);
  return it == compiled.end() ? nullptr : &it->second;
}

inline const char* law_text(std::string_view name) {
  for (const auto& l : law_catalogue()) {
    if (name == l.name) return l.text;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Derivation

struct SasakiPair {
  BinaryTable odot;
  BinaryTable imp;
  Scheme scheme = Scheme::S1;
  std::string source;
};

inline std::pair<const char*, const char*> scheme_polynomials(Scheme s) noexcept {
  switch (s) {
    case Scheme::S1:
    case Scheme::S2: return {"(x v y') ^ y", "x' v (x ^ y)"};
    case Scheme::S3: return {"(x + y') * y", "x' + x * y"};
    case Scheme::S4: return {"(1 + (1 + x) * y) * y", "1 + x * (1 + x * y)"};
  }
  return {"", ""};
}

/// Evaluates the scheme's two polynomials at every (x, y).
inline std::pair<BinaryTable, BinaryTable> sasaki_tables(const OpsView& v, Scheme s) {
  static const auto compiled = [] {
    std::vector<std::pair<CompiledTerm, CompiledTerm>> out;
    const std::vector<std::string> slots{"x", "y"};
    for (Scheme k : {Scheme::S1, Scheme::S2, Scheme::S3, Scheme::S4}) {
      const auto [f, g] = scheme_polynomials(k);
      out.emplace_back(CompiledTerm(parse_term(f), slots), CompiledTerm(parse_term(g), slots));
    }
    return out;
  }();
  const auto& [f, g] = compiled[static_cast<std::size_t>(s)];
  require(v, f.requirements());
  require(v, g.requirements());
  const auto n = static_cast<Elem>(v.n);
  BinaryTable odot(n), imp(n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem xy[2] = {x, y};
      odot.set(x, y, f.eval(v, xy));
      imp.set(x, y, g.eval(v, xy));
    }
  }
  return {std::move(odot), std::move(imp)};
}

inline SasakiPair derive_sasaki(const Algebra& a, Scheme s) {
  if (scheme_kind(s) != a.kind()) {
    throw Error(Errc::SchemeKindMismatch,
                std::string(scheme_name(s)) + " does not apply to a " + kind_name(a.kind()));
  }
  auto [odot, imp] = sasaki_tables(a.view(), s);
  return {std::move(odot), std::move(imp), s, a.name()};
}

/// The order the scheme's adjointness refers to.
inline FinitePoset scheme_order(const Algebra& a) {
  if (a.order()) return *a.order();
  if (a.kind() == Kind::Pseudoring) return ring_order(a);
  throw Error(Errc::MissingOperation, "the algebra carries no order");
}

/// The algebra with the pair attached as binop tables "odot" and "imp";
/// pseudorings also get their order xy = x attached.
inline Algebra with_pair(Algebra a, const SasakiPair& p) {
  a.set_binary("odot", p.odot);
  a.set_binary("imp", p.imp);
  if (!a.order() && a.kind() == Kind::Pseudoring) a.set_order(ring_order(a));
  return a;
}

// ---------------------------------------------------------------------------
// Adjointness

struct AdjointnessReport {
  Verdict a1;
  Verdict a2;
  bool adjoint() const noexcept { return a1.holds && a2.holds; }
};

/// `v` must carry the order and the odot/imp connectives.
inline AdjointnessReport check_adjointness(const OpsView& v) {
  return {named_law("A1")->check(v), named_law("A2")->check(v)};
}

namespace detail {

inline OpsView pair_view(const FinitePoset& order, const BinaryTable& odot, const BinaryTable& imp) {
  if (odot.size() != order.size() || imp.size() != order.size()) {
    throw Error(Errc::KindMismatch, "tables do not match the order's universe");
  }
  OpsView v;
  v.n = order.size();
  v.leq = order.relation().data();
  v.set(Connective::Odot, odot.data());
  v.set(Connective::Imp, imp.data());
  return v;
}

}  // namespace detail

inline AdjointnessReport check_adjointness(const FinitePoset& order, const BinaryTable& odot, const BinaryTable& imp) {
  return check_adjointness(detail::pair_view(order, odot, imp));
}

inline VerdictMap adjointness_consequences(const FinitePoset& order, const BinaryTable& odot, const BinaryTable& imp) {
  const OpsView v = detail::pair_view(order, odot, imp);
  VerdictMap out;
  for (const char* n : {"odot_monotone_first", "imp_monotone_second", "lemma1_f", "lemma1_g"}) {
    out[n] = named_law(n)->check(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Residuals

/// Either a reconstructed table or the least cell where no extremal element exists.
struct Residual {
  std::optional<BinaryTable> table;
  std::vector<Elem> witness;

  bool ok() const noexcept { return table.has_value(); }
};

/// imp(y, z) = greatest x with odot(x, y) <= z.
inline Residual residual_imp_from_odot(const FinitePoset& order, const BinaryTable& odot) {
  const auto n = static_cast<Elem>(order.size());
  BinaryTable out(n);
  for (Elem y = 0; y < n; ++y) {
    for (Elem z = 0; z < n; ++z) {
      std::vector<Elem> set;
      for (Elem x = 0; x < n; ++x) {
        if (order.leq(odot(x, y), z)) set.push_back(x);
      }
      std::optional<Elem> greatest;
      for (Elem c : set) {
        if (std::all_of(set.begin(), set.end(), [&](Elem w) { return order.leq(w, c); })) greatest = c;
      }
      if (!greatest) return {std::nullopt, {y, z}};
      out.set(y, z, *greatest);
    }
  }
  return {std::move(out), {}};
}

/// odot(x, y) = least z with x <= imp(y, z).
inline Residual residual_odot_from_imp(const FinitePoset& order, const BinaryTable& imp) {
  const auto n = static_cast<Elem>(order.size());
  BinaryTable out(n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      std::vector<Elem> set;
      for (Elem z = 0; z < n; ++z) {
        if (order.leq(x, imp(y, z))) set.push_back(z);
      }
      std::optional<Elem> least;
      for (Elem c : set) {
        if (std::all_of(set.begin(), set.end(), [&](Elem w) { return order.leq(c, w); })) least = c;
      }
      if (!least) return {std::nullopt, {x, y}};
      out.set(x, y, *least);
    }
  }
  return {std::move(out), {}};
}

// ---------------------------------------------------------------------------
// Condition batteries

inline std::vector<std::string> battery_names(Scheme s) {
  switch (s) {
    case Scheme::S1: return {"B1", "B2"};
    case Scheme::S2: return {"C1", "C2", "D1", "D2", "E1", "E2", "F1", "F2"};
    case Scheme::S3: return {"c3", "c4", "c5", "c6"};
    case Scheme::S4: return {};
  }
  return {};
}

inline VerdictMap condition_battery(const Algebra& a, Scheme s) {
  if (scheme_kind(s) != a.kind()) {
    throw Error(Errc::SchemeKindMismatch,
                std::string(scheme_name(s)) + " does not apply to a " + kind_name(a.kind()));
  }
  VerdictMap out;
  const auto names = battery_names(s);
  if (names.empty()) return out;
  const Algebra full = with_pair(a, derive_sasaki(a, s));
  const OpsView v = full.view();
  for (const auto& n : names) out[n] = named_law(n)->check(v);
  return out;
}

/// top_law: A1 implies x v x' = 1; bottom_law: A2 implies x ^ x' = 0.
inline VerdictMap bounded_necessity(const Algebra& a, const SasakiPair& pair) {
  const Algebra full = with_pair(a, pair);
  const OpsView v = full.view();
  if (!v.zero || !v.one || v.leq == nullptr) throw Error(Errc::UnboundedAlgebra, a.name() + " is not bounded");
  const AdjointnessReport adj = check_adjointness(v);
  VerdictMap out;
  auto implication = [](const Verdict& hyp, Verdict concl, const char* name) {
    Verdict r;
    r.law = name;
    r.checked_count = hyp.checked_count + concl.checked_count;
    r.holds = !hyp.holds || concl.holds;
    if (!r.holds) r.witness = std::move(concl.witness);
    return r;
  };
  out["top_law"] = implication(adj.a1, named_law("top_complement")->check(v), "top_law");
  out["bottom_law"] = implication(adj.a2, named_law("bottom_complement")->check(v), "bottom_law");
  return out;
}

}  // namespace oalg
