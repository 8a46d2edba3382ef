#pragma once

// Axiom suites, flags and constructions for lattices, lambda-lattices,
// ordered semirings and orthomodular pseudorings.

#include <algorithm>
#include <array>
#include <deque>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oalg/algebra.hpp"

namespace oalg {

namespace detail {

struct LawSpec {
  const char* name;
  const char* text;
};

inline std::vector<CompiledLaw> compile_all(std::initializer_list<LawSpec> specs) {
  std::vector<CompiledLaw> out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.emplace_back(parse_law(s.text), s.name);
  return out;
}

/// Checks laws in order; the result carries the first failure and the total count.
inline Verdict check_suite(const OpsView& v, const std::vector<CompiledLaw>& laws, std::string name) {
  Verdict total;
  total.law = std::move(name);
  for (const auto& law : laws) {
    Verdict r = law.check(v);
    total.checked_count += r.checked_count;
    if (!r.holds) {
      total.holds = false;
      total.witness = std::move(r.witness);
      total.law = r.law;
      return total;
    }
  }
  return total;
}

inline Verdict failed(std::string law, std::vector<std::pair<std::string, Elem>> witness = {}) {
  Verdict v;
  v.holds = false;
  v.law = std::move(law);
  v.witness = std::move(witness);
  return v;
}

inline OpsView lambda_view(std::size_t n, const BinaryTable& lsup, const BinaryTable& linf) {
  OpsView v;
  v.n = n;
  v.set(Connective::Join, lsup.data());
  v.set(Connective::Meet, linf.data());
  return v;
}

[[noreturn]] inline void throw_validation(const std::vector<std::string>& names, const Verdict& v) {
  throw Error(Errc::ValidationError, "axiom " + v.law + " fails", witness_names(names, v));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Lattices

/// Reads join and meet off the order. Throws NotALattice with the least pair lacking a lub or glb.
inline Algebra lattice_from_poset(const FinitePoset& p, std::string name = "lattice") {
  const auto n = static_cast<Elem>(p.size());
  BinaryTable join(n), meet(n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const ConePair c = cones(p, x, y);
      std::optional<Elem> lub, glb;
      for (Elem u : c.upper) {
        if (std::all_of(c.upper.begin(), c.upper.end(), [&](Elem w) { return p.leq(u, w); })) lub = u;
      }
      for (Elem l : c.lower) {
        if (std::all_of(c.lower.begin(), c.lower.end(), [&](Elem w) { return p.leq(w, l); })) glb = l;
      }
      if (!lub || !glb) {
        throw Error(Errc::NotALattice,
                    std::string("pair has no ") + (!lub ? "least upper bound" : "greatest lower bound"),
                    {p.name(x), p.name(y)});
      }
      join.set(x, y, *lub);
      meet.set(x, y, *glb);
    }
  }
  Algebra a(Kind::Lattice, std::move(name), p.names());
  a.set_order(p);
  a.set_binary("join", std::move(join));
  a.set_binary("meet", std::move(meet));
  return a;
}

inline Algebra with_unary(Algebra a, UnaryTable neg) {
  a.set_unary("neg", std::move(neg));
  return a;
}

inline UnaryTable unary_from_names(const Algebra& a, const std::vector<std::string>& images) {
  std::vector<Elem> m;
  for (const auto& s : images) m.push_back(a.index_of(s));
  return UnaryTable(std::move(m));
}

/// x' = c for every x.
inline UnaryTable make_constant_unary(const Algebra& a, std::string_view c) {
  return UnaryTable(std::vector<Elem>(a.size(), a.index_of(c)));
}

inline Verdict pseudocomplemented(const OpsView& v, bool dual) {
  const char* name = dual ? "dually_pseudocomplemented" : "pseudocomplemented";
  const auto bound = dual ? v.one : v.zero;
  const Elem* op = v.op(dual ? Connective::Join : Connective::Meet);
  if (!bound) return detail::failed(name);
  if (op == nullptr || v.leq == nullptr) throw Error(Errc::MissingOperation, "lattice operations and order");
  Verdict out;
  out.law = name;
  const auto n = static_cast<Elem>(v.n);
  for (Elem x = 0; x < n; ++x) {
    std::vector<Elem> cands;
    for (Elem y = 0; y < n; ++y) {
      if (op[x * n + y] == *bound) cands.push_back(y);
    }
    out.checked_count += n;
    bool found = false;
    for (Elem c : cands) {
      const bool extremal = std::all_of(cands.begin(), cands.end(), [&](Elem w) {
        return dual ? v.leq[c * n + w] != 0 : v.leq[w * n + c] != 0;
      });
      found = found || extremal;
    }
    if (!found) return detail::failed(name, {{"x", x}});
  }
  return out;
}

/// Lattice flags over a view with join, meet, order and (for the '-flags) a unary operation.
inline VerdictMap lattice_flags(const OpsView& v) {
  static const auto modular = detail::compile_all({{"modular", "x <= z => x v (y ^ z) = (x v y) ^ z"}});
  static const auto distributive = detail::compile_all({{"distributive", "x ^ (y v z) = (x ^ y) v (x ^ z)"}});
  static const auto complemented = detail::compile_all({{"top_complement", "x v x' = 1"}, {"bottom_complement", "x ^ x' = 0"}});
  static const auto orthomodular = detail::compile_all({{"antitone", "x <= y => y' <= x'"},
                                                        {"involution", "x'' = x"},
                                                        {"om_law", "x v ((x v y) ^ x') = x v y"}});
  static const auto weak = detail::compile_all({{"weakly_orthomodular", "x = (x ^ y) v (x ^ (x ^ y)')"}});
  static const auto dual_weak = detail::compile_all({{"dually_weakly_orthomodular", "x = (x v y) ^ (x v (x v y)')"}});

  if (v.neg == nullptr) throw Error(Errc::MissingOperation, "lattice flags need the unary operation");
  VerdictMap out;
  out["modular"] = detail::check_suite(v, modular, "modular");
  out["distributive"] = detail::check_suite(v, distributive, "distributive");
  Verdict comp = (v.zero && v.one) ? detail::check_suite(v, complemented, "complemented") : detail::failed("bounded");
  out["complemented"] = comp;
  if (comp.holds) {
    out["orthomodular"] = detail::check_suite(v, orthomodular, "orthomodular");
  } else {
    out["orthomodular"] = comp;
  }
  out["weakly_orthomodular"] = detail::check_suite(v, weak, "weakly_orthomodular");
  out["dually_weakly_orthomodular"] = detail::check_suite(v, dual_weak, "dually_weakly_orthomodular");
  out["pseudocomplemented"] = pseudocomplemented(v, false);
  out["dually_pseudocomplemented"] = pseudocomplemented(v, true);
  return out;
}

inline VerdictMap lattice_flags(const Algebra& a) {
  if (a.kind() != Kind::Lattice) throw Error(Errc::KindMismatch, "lattice flags need a lattice");
  return lattice_flags(a.view());
}

/// Checks that a lattice-kind algebra's tables are the lub/glb of its order.
inline void validate_lattice(const Algebra& a) {
  if (!a.order()) throw Error(Errc::ValidationError, "lattice without an order");
  const Algebra ref = lattice_from_poset(*a.order());
  for (const char* op : {"join", "meet"}) {
    const BinaryTable* t = a.binary(op);
    if (!t) throw Error(Errc::MissingOperation, std::string(op));
    const auto n = static_cast<Elem>(a.size());
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if ((*t)(x, y) != (*ref.binary(op))(x, y)) {
          throw Error(Errc::ValidationError, std::string("axiom ") + op + "_matches_order fails",
                      {a.element(x), a.element(y)});
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Lambda-lattices

inline Verdict check_lambda_axioms(std::size_t n, const BinaryTable& lsup, const BinaryTable& linf) {
  static const auto axioms = detail::compile_all({
      {"sup_commutative", "x v y = y v x"},
      {"inf_commutative", "x ^ y = y ^ x"},
      {"sup_weak_associative", "x v ((x v y) v z) = (x v y) v z"},
      {"inf_weak_associative", "x ^ ((x ^ y) ^ z) = (x ^ y) ^ z"},
      {"sup_absorption", "x v (x ^ y) = x"},
      {"inf_absorption", "x ^ (x v y) = x"},
      {"sup_idempotent", "x v x = x"},
      {"inf_idempotent", "x ^ x = x"},
  });
  if (lsup.size() != n || linf.size() != n) throw Error(Errc::KindMismatch, "table size differs from universe");
  return detail::check_suite(detail::lambda_view(n, lsup, linf), axioms, "lambda_axioms");
}

/// x <= y iff x v y = y; throws InducedOrderMismatch when x ^ y = x disagrees.
inline FinitePoset induced_order(const std::vector<std::string>& names, const BinaryTable& lsup,
                                 const BinaryTable& linf) {
  const auto n = static_cast<Elem>(names.size());
  std::vector<std::uint8_t> leq(std::size_t{n} * n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const bool by_sup = lsup(x, y) == y;
      const bool by_inf = linf(x, y) == x;
      if (by_sup != by_inf) throw Error(Errc::InducedOrderMismatch, "sup and inf disagree", {names[x], names[y]});
      leq[x * n + y] = by_sup;
    }
  }
  return FinitePoset::from_relation(names, std::move(leq));
}

inline FinitePoset induced_order(const Algebra& a) {
  if (a.kind() != Kind::Lambda) throw Error(Errc::KindMismatch, "induced order needs a lambda-lattice");
  return induced_order(a.elements(), *a.binary("lsup"), *a.binary("linf"));
}

/// Lambda-lattice from its tables; the order is always derived.
inline Algebra make_lambda(std::string name, std::vector<std::string> elements, BinaryTable lsup, BinaryTable linf) {
  Verdict ax = check_lambda_axioms(elements.size(), lsup, linf);
  if (!ax.holds) detail::throw_validation(elements, ax);
  FinitePoset order = induced_order(elements, lsup, linf);
  Algebra a(Kind::Lambda, std::move(name), std::move(elements));
  a.set_binary("lsup", std::move(lsup));
  a.set_binary("linf", std::move(linf));
  a.set_order(std::move(order));
  return a;
}

/// Monotonicity of both operations in the induced order; as a verdict over (x, y, z).
inline Verdict is_lattice_lambda(const OpsView& v) {
  static const auto laws = detail::compile_all({{"sup_monotone", "x <= y => x v z <= y v z"},
                                                {"inf_monotone", "x <= y => x ^ z <= y ^ z"}});
  return detail::check_suite(v, laws, "lattice");
}

inline Verdict is_lattice_lambda(const Algebra& a) {
  if (a.kind() != Kind::Lambda) throw Error(Errc::KindMismatch, "expected a lambda-lattice");
  return is_lattice_lambda(a.view());
}

// ---------------------------------------------------------------------------
// Ordered semirings and orthomodular pseudorings

inline Verdict check_semiring(const OpsView& v) {
  static const auto laws = detail::compile_all({
      {"plus_commutative", "x + y = y + x"},
      {"plus_associative", "(x + y) + z = x + (y + z)"},
      {"plus_neutral", "x + 0 = x"},
      {"times_commutative", "x * y = y * x"},
      {"times_associative", "(x * y) * z = x * (y * z)"},
      {"times_zero", "x * 0 = 0"},
      {"distributive", "x * (y + z) = (x * y) + (x * z)"},
      {"complement_product", "x * x' = 0"},
  });
  if (v.leq == nullptr) throw Error(Errc::MissingOperation, "an ordered semiring needs an order");
  return detail::check_suite(v, laws, "semiring");
}

inline Verdict check_semiring(const Algebra& a) {
  if (a.kind() != Kind::Semiring) throw Error(Errc::KindMismatch, "expected a semiring");
  return check_semiring(a.view());
}

inline Verdict check_pseudoring(const OpsView& v) {
  static const auto laws = detail::compile_all({
      {"plus_commutative", "x + y = y + x"},
      {"plus_neutral", "x + 0 = x"},
      {"times_commutative", "x * y = y * x"},
      {"times_associative", "(x * y) * z = x * (y * z)"},
      {"times_idempotent", "x * x = x"},
      {"times_neutral", "x * 1 = x"},
      {"identity_1", "x + x = 0"},
      {"identity_2", "x * 0 = 0"},
      {"identity_3", "(x + 1) + y = x + (1 + y)"},
      {"identity_4", "(1 + x * y) * x = x + x * y * x"},
      {"identity_5", "(1 + x) * (1 + x * y) = 1 + x"},
      {"identity_6", "(1 + x * (1 + y)) * (1 + y * (1 + x)) = 1 + (x + y)"},
      {"identity_7", "(x + x * y) + x * y = x"},
  });
  return detail::check_suite(v, laws, "pseudoring");
}

inline Verdict check_pseudoring(const Algebra& a) {
  if (a.kind() != Kind::Pseudoring) throw Error(Errc::KindMismatch, "expected a pseudoring");
  return check_pseudoring(a.view());
}

/// x+y = (x ^ y') v (x' ^ y), xy = x ^ y.
inline Algebra oml_to_pseudoring(const Algebra& l, std::string name = {}) {
  if (l.kind() != Kind::Lattice) throw Error(Errc::KindMismatch, "expected a lattice");
  const VerdictMap flags = lattice_flags(l);
  if (!flags.at("orthomodular").holds) throw Error(Errc::NotOrthomodular, l.name() + ": " + flags.at("orthomodular").law);
  const auto n = static_cast<Elem>(l.size());
  const BinaryTable& join = *l.binary("join");
  const BinaryTable& meet = *l.binary("meet");
  const UnaryTable& neg = *l.unary("neg");
  BinaryTable plus(n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) plus.set(x, y, join(meet(x, neg(y)), meet(neg(x), y)));
  }
  Algebra r(Kind::Pseudoring, name.empty() ? l.name() + "_ring" : std::move(name), l.elements());
  r.set_binary("plus", std::move(plus));
  r.set_binary("times", meet);
  r.set_constant("zero", *l.bottom());
  r.set_constant("one", *l.top());
  return r;
}

/// x <= y iff xy = x.
inline FinitePoset ring_order(const Algebra& r) {
  const BinaryTable* times = r.binary("times");
  if (!times) throw Error(Errc::MissingOperation, "times");
  const auto n = static_cast<Elem>(r.size());
  std::vector<std::uint8_t> leq(std::size_t{n} * n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) leq[x * n + y] = (*times)(x, y) == x;
  }
  return FinitePoset::from_relation(r.elements(), std::move(leq));
}

/// x v y = 1+(1+x)(1+y), x ^ y = xy, x' = 1+x; the order is x <= y iff xy = x.
inline Algebra pseudoring_to_oml(const Algebra& r, std::string name = {}) {
  if (r.kind() != Kind::Pseudoring) throw Error(Errc::KindMismatch, "expected a pseudoring");
  const Verdict ok = check_pseudoring(r);
  if (!ok.holds) throw Error(Errc::NotAPseudoring, "axiom " + ok.law + " fails", witness_names(r.elements(), ok));
  const auto n = static_cast<Elem>(r.size());
  const BinaryTable& plus = *r.binary("plus");
  const BinaryTable& times = *r.binary("times");
  const Elem one = *r.constant("one");
  BinaryTable join(n);
  std::vector<Elem> neg(n);
  for (Elem x = 0; x < n; ++x) {
    neg[x] = plus(one, x);
    for (Elem y = 0; y < n; ++y) join.set(x, y, plus(one, times(plus(one, x), plus(one, y))));
  }
  Algebra l(Kind::Lattice, name.empty() ? r.name() + "_lattice" : std::move(name), r.elements());
  l.set_order(ring_order(r));
  l.set_binary("join", std::move(join));
  l.set_binary("meet", times);
  l.set_unary("neg", UnaryTable(std::move(neg)));
  validate_lattice(l);
  return l;
}

// ---------------------------------------------------------------------------
// Products and subalgebras

/// Componentwise tables, constants and order; elements named "x.y" in lexicographic order.
inline Algebra direct_product(const Algebra& a, const Algebra& b, std::string name = {}) {
  if (a.kind() != b.kind()) throw Error(Errc::KindMismatch, "factors have different kinds");
  auto keys = [](const auto& m) {
    std::vector<std::string> k;
    for (const auto& [n, _] : m) k.push_back(n);
    return k;
  };
  if (keys(a.binaries()) != keys(b.binaries()) || keys(a.unaries()) != keys(b.unaries()) ||
      keys(a.constants()) != keys(b.constants())) {
    throw Error(Errc::KindMismatch, "factors have different signatures");
  }
  const auto na = static_cast<Elem>(a.size());
  const auto nb = static_cast<Elem>(b.size());
  const Elem n = na * nb;
  auto pair = [&](Elem x, Elem y) { return x * nb + y; };
  std::vector<std::string> names;
  for (Elem x = 0; x < na; ++x) {
    for (Elem y = 0; y < nb; ++y) names.push_back(a.element(x) + "." + b.element(y));
  }
  Algebra p(a.kind(), name.empty() ? a.name() + "_x_" + b.name() : std::move(name), names);
  for (const auto& [op, ta] : a.binaries()) {
    const BinaryTable& tb = *b.binary(op);
    BinaryTable t(n);
    for (Elem u = 0; u < n; ++u) {
      for (Elem w = 0; w < n; ++w) t.set(u, w, pair(ta(u / nb, w / nb), tb(u % nb, w % nb)));
    }
    p.set_binary(op, std::move(t));
  }
  for (const auto& [op, ua] : a.unaries()) {
    const UnaryTable& ub = *b.unary(op);
    std::vector<Elem> m(n);
    for (Elem u = 0; u < n; ++u) m[u] = pair(ua(u / nb), ub(u % nb));
    p.set_unary(op, UnaryTable(std::move(m)));
  }
  for (const auto& [c, ea] : a.constants()) p.set_constant(c, pair(ea, *b.constant(c)));
  if (a.kind() == Kind::Lambda) {
    p.set_order(induced_order(p));
  } else if (a.order() && b.order()) {
    std::vector<std::uint8_t> leq(std::size_t{n} * n, 0);
    for (Elem u = 0; u < n; ++u) {
      for (Elem w = 0; w < n; ++w) leq[u * n + w] = a.order()->leq(u / nb, w / nb) && b.order()->leq(u % nb, w % nb);
    }
    p.set_order(FinitePoset::from_relation(names, std::move(leq)));
  }
  return p;
}

/// Closure of `seed` under every table and constant; tables and order restricted.
inline Algebra subalgebra_generated(const Algebra& a, const std::vector<Elem>& seed, std::string name = {}) {
  const auto n = static_cast<Elem>(a.size());
  std::vector<std::uint8_t> in(n, 0);
  std::deque<Elem> work;
  auto add = [&](Elem e) {
    if (!in[e]) {
      in[e] = 1;
      work.push_back(e);
    }
  };
  for (Elem e : seed) {
    if (e >= n) throw Error(Errc::UnknownName, "seed element out of range");
    add(e);
  }
  for (const auto& [c, e] : a.constants()) add(e);
  while (!work.empty()) {
    const Elem e = work.front();
    work.pop_front();
    for (const auto& [op, u] : a.unaries()) add(u(e));
    for (const auto& [op, t] : a.binaries()) {
      for (Elem f = 0; f < n; ++f) {
        if (!in[f]) continue;
        add(t(e, f));
        add(t(f, e));
      }
    }
  }
  std::vector<Elem> members;
  std::vector<Elem> pos(n, 0);
  for (Elem e = 0; e < n; ++e) {
    if (in[e]) {
      pos[e] = static_cast<Elem>(members.size());
      members.push_back(e);
    }
  }
  if (members.empty()) throw Error(Errc::SizeOutOfRange, "empty subalgebra");
  const auto m = static_cast<Elem>(members.size());
  std::vector<std::string> names;
  for (Elem e : members) names.push_back(a.element(e));
  Algebra s(a.kind(), name.empty() ? a.name() + "_sub" : std::move(name), names);
  for (const auto& [op, t] : a.binaries()) {
    BinaryTable r(m);
    for (Elem i = 0; i < m; ++i) {
      for (Elem j = 0; j < m; ++j) r.set(i, j, pos[t(members[i], members[j])]);
    }
    s.set_binary(op, std::move(r));
  }
  for (const auto& [op, u] : a.unaries()) {
    std::vector<Elem> r(m);
    for (Elem i = 0; i < m; ++i) r[i] = pos[u(members[i])];
    s.set_unary(op, UnaryTable(std::move(r)));
  }
  for (const auto& [c, e] : a.constants()) s.set_constant(c, pos[e]);
  if (a.kind() == Kind::Lambda) {
    s.set_order(induced_order(s));
  } else if (a.order()) {
    std::vector<std::uint8_t> leq(std::size_t{m} * m, 0);
    for (Elem i = 0; i < m; ++i) {
      for (Elem j = 0; j < m; ++j) leq[i * m + j] = a.order()->leq(members[i], members[j]);
    }
    s.set_order(FinitePoset::from_relation(names, std::move(leq)));
  }
  return s;
}

inline Algebra subalgebra_generated(const Algebra& a, const std::vector<std::string>& seed, std::string name = {}) {
  std::vector<Elem> s;
  for (const auto& e : seed) s.push_back(a.index_of(e));
  return subalgebra_generated(a, s, std::move(name));
}

// ---------------------------------------------------------------------------
// Validation of kind invariants

inline void validate(const Algebra& a) {
  const auto& names = a.elements();
  switch (a.kind()) {
    case Kind::Poset:
      if (!a.order()) throw Error(Errc::ValidationError, "poset without an order");
      break;
    case Kind::Lattice:
      validate_lattice(a);
      break;
    case Kind::Lambda: {
      const BinaryTable* s = a.binary("lsup");
      const BinaryTable* i = a.binary("linf");
      if (!s || !i) throw Error(Errc::MissingOperation, "lambda-lattice needs lsup and linf");
      Verdict ax = check_lambda_axioms(a.size(), *s, *i);
      if (!ax.holds) detail::throw_validation(names, ax);
      if (!a.order() || !(*a.order() == induced_order(a))) {
        throw Error(Errc::ValidationError, "order differs from the induced order");
      }
      break;
    }
    case Kind::Semiring: {
      if (!a.binary("plus") || !a.binary("times") || !a.unary("neg") || !a.constant("zero")) {
        throw Error(Errc::MissingOperation, "semiring needs plus, times, neg and zero");
      }
      Verdict v = check_semiring(a);
      if (!v.holds) detail::throw_validation(names, v);
      break;
    }
    case Kind::Pseudoring: {
      if (!a.binary("plus") || !a.binary("times") || !a.constant("zero") || !a.constant("one")) {
        throw Error(Errc::MissingOperation, "pseudoring needs plus, times, zero and one");
      }
      Verdict v = check_pseudoring(a);
      if (!v.holds) detail::throw_validation(names, v);
      break;
    }
  }
}

}  // namespace oalg
