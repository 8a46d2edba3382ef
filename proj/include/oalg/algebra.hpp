#pragma once

// The Algebra value type: a universe, named tables, constants and an optional order.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oalg/core.hpp"
#include "oalg/engine.hpp"

namespace oalg {

enum class Kind { Poset, Lattice, Lambda, Semiring, Pseudoring };

inline const char* kind_name(Kind k) noexcept {
  switch (k) {
    case Kind::Poset: return "poset";
    case Kind::Lattice: return "lattice";
    case Kind::Lambda: return "lambda";
    case Kind::Semiring: return "semiring";
    case Kind::Pseudoring: return "pseudoring";
  }
  return "?";
}

inline std::optional<Kind> parse_kind(std::string_view s) {
  for (Kind k : {Kind::Poset, Kind::Lattice, Kind::Lambda, Kind::Semiring, Kind::Pseudoring}) {
    if (s == kind_name(k)) return k;
  }
  return std::nullopt;
}

/// Table names the kind uses for the two lattice-like connectives.
inline std::pair<const char*, const char*> join_meet_names(Kind k) noexcept {
  return k == Kind::Lambda ? std::pair{"lsup", "linf"} : std::pair{"join", "meet"};
}

class Algebra {
 public:
  Algebra() = default;
  Algebra(Kind kind, std::string name, std::vector<std::string> elements)
      : kind_(kind), name_(std::move(name)), elements_(std::move(elements)) {
    detail::validate_names(elements_);
    if (elements_.empty()) throw Error(Errc::InvalidName, "an algebra needs at least one element");
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], static_cast<Elem>(i));
  }

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const std::string& element(Elem e) const { return elements_.at(e); }
  const std::map<std::string, Elem>& element_map() const noexcept { return index_; }

  std::optional<Elem> find(std::string_view n) const {
    auto it = index_.find(std::string(n));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Elem index_of(std::string_view n) const {
    auto e = find(n);
    if (!e) throw Error(Errc::UnknownName, std::string(n));
    return *e;
  }

  const FinitePoset* order() const noexcept { return order_ ? &*order_ : nullptr; }
  void set_order(FinitePoset p) {
    if (p.names() != elements_) throw Error(Errc::KindMismatch, "order universe differs from algebra universe");
    bounds_ = bounds(p);
    order_ = std::move(p);
  }

  const BinaryTable* binary(std::string_view n) const {
    auto it = binary_.find(std::string(n));
    return it == binary_.end() ? nullptr : &it->second;
  }
  void set_binary(const std::string& n, BinaryTable t) {
    if (t.size() != size()) throw Error(Errc::KindMismatch, "table '" + n + "' has the wrong size");
    binary_.insert_or_assign(n, std::move(t));
    refresh_derived();
  }
  void erase_binary(const std::string& n) {
    binary_.erase(n);
    refresh_derived();
  }
  const std::map<std::string, BinaryTable>& binaries() const noexcept { return binary_; }

  const UnaryTable* unary(std::string_view n) const {
    auto it = unary_.find(std::string(n));
    return it == unary_.end() ? nullptr : &it->second;
  }
  void set_unary(const std::string& n, UnaryTable t) {
    if (t.size() != size()) throw Error(Errc::KindMismatch, "table '" + n + "' has the wrong size");
    unary_.insert_or_assign(n, std::move(t));
  }
  const std::map<std::string, UnaryTable>& unaries() const noexcept { return unary_; }

  std::optional<Elem> constant(std::string_view n) const {
    auto it = constants_.find(std::string(n));
    if (it == constants_.end()) return std::nullopt;
    return it->second;
  }
  void set_constant(const std::string& n, Elem e) {
    if (e >= size()) throw Error(Errc::UnknownName, "constant out of range");
    constants_.insert_or_assign(n, e);
    refresh_derived();
  }
  const std::map<std::string, Elem>& constants() const noexcept { return constants_; }

  /// The element 0/1 resolves to: declared constants first, then the order's bounds.
  std::optional<Elem> bottom() const {
    if (auto z = constant("zero")) return z;
    if (order_ && (kind_ == Kind::Poset || kind_ == Kind::Lattice || kind_ == Kind::Lambda)) return bounds_.bottom;
    return std::nullopt;
  }
  std::optional<Elem> top() const {
    if (auto o = constant("one")) return o;
    if (order_ && (kind_ == Kind::Poset || kind_ == Kind::Lattice || kind_ == Kind::Lambda)) return bounds_.top;
    return std::nullopt;
  }

  /// Unary ' of the term language. Pseudorings have no unary symbol; ' means 1+x there.
  const UnaryTable* prime() const {
    if (auto* u = unary("neg")) return u;
    if (kind_ == Kind::Pseudoring && derived_neg_) return &*derived_neg_;
    return nullptr;
  }

  /// The view stays valid while this algebra is alive and unmodified.
  OpsView view() const {
    OpsView v;
    v.n = size();
    const auto [jn, mn] = join_meet_names(kind_);
    auto bind = [&](Connective c, const char* n) {
      if (auto* t = binary(n)) v.set(c, t->data());
    };
    bind(Connective::Join, jn);
    bind(Connective::Meet, mn);
    bind(Connective::Plus, "plus");
    bind(Connective::Times, "times");
    bind(Connective::Odot, "odot");
    bind(Connective::Imp, "imp");
    if (auto* p = prime()) v.neg = p->data();
    if (order_) v.leq = order_->relation().data();
    v.zero = bottom();
    v.one = top();
    return v;
  }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.kind_ == b.kind_ && a.elements_ == b.elements_ && a.binary_ == b.binary_ && a.unary_ == b.unary_ &&
           a.constants_ == b.constants_ && a.order_ == b.order_;
  }

 private:
  void refresh_derived() {
    derived_neg_.reset();
    if (kind_ != Kind::Pseudoring) return;
    auto* plus = binary("plus");
    auto one = constant("one");
    if (!plus || !one) return;
    std::vector<Elem> m(size());
    for (Elem x = 0; x < size(); ++x) m[x] = (*plus)(*one, x);
    derived_neg_ = UnaryTable(std::move(m));
  }

  Kind kind_ = Kind::Poset;
  std::string name_;
  std::vector<std::string> elements_;
  std::map<std::string, Elem> index_;
  std::optional<FinitePoset> order_;
  Bounds bounds_;
  std::map<std::string, BinaryTable> binary_;
  std::map<std::string, UnaryTable> unary_;
  std::map<std::string, Elem> constants_;
  std::optional<UnaryTable> derived_neg_;
};

/// Evaluates a term; identifiers not in `assignment` resolve to element names.
inline Elem eval_term(const Algebra& a, const Term& t, const std::map<std::string, Elem>& assignment = {}) {
  return eval_term(a.view(), t, assignment, a.element_map());
}

inline Verdict check_law(const Algebra& a, const Law& law, EngineOptions opts = {}) {
  return check_law(a.view(), law, opts);
}

inline Verdict check_law(const Algebra& a, std::string_view law_text, EngineOptions opts = {}) {
  return check_law(a.view(), parse_law(law_text), opts);
}

/// Witness rendered as "x=c y=b".
inline std::string format_witness(const std::vector<std::string>& names, const Verdict& v) {
  std::string s;
  for (const auto& [var, e] : v.witness) {
    if (!s.empty()) s += ' ';
    s += var + "=" + names.at(e);
  }
  return s;
}

inline std::vector<std::string> witness_names(const std::vector<std::string>& names, const Verdict& v) {
  std::vector<std::string> out;
  for (const auto& [var, e] : v.witness) out.push_back(names.at(e));
  return out;
}

/// Element names for generated structures: "0", letters (skipping the operator
/// letters o and v), "1".
inline std::vector<std::string> bounded_names(std::size_t n) {
  static constexpr std::string_view kLetters = "abcdefghijklmnpqrstuwxyz";
  std::vector<std::string> out;
  if (n == 0) return out;
  out.emplace_back("0");
  if (n == 1) return out;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    out.push_back(i < kLetters.size() ? std::string(1, kLetters[i]) : "e" + std::to_string(i));
  }
  out.emplace_back("1");
  return out;
}

}  // namespace oalg
