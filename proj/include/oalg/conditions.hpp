#pragma once

// Named conditions evaluated lazily against one algebra, with the Sasaki pair
// derived on first use.

#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "oalg/sasaki.hpp"

namespace oalg {

inline const std::vector<std::string>& derived_condition_names() {
  static const std::vector<std::string> names = {
      "adjoint", "complemented", "orthomodular", "surjective", "pseudocomplemented", "dually_pseudocomplemented",
      "lattice", "has_top", "has_bottom", "bounded", "lambda_axioms", "semiring", "pseudoring"};
  return names;
}

/// Evaluates catalogue laws and derived conditions by name; "!NAME" negates.
/// A borrowed view must outlive the context.
class ConditionContext {
 public:
  ConditionContext(Kind kind, const OpsView& base) : kind_(kind), v_(base) { derive_order(); }

  /// Borrows `a`, which must outlive the context.
  explicit ConditionContext(const Algebra& a) : ConditionContext(a.kind(), a.view()) {}

  /// Takes ownership of a temporary algebra.
  explicit ConditionContext(Algebra&& a)
      : owned_(std::make_unique<const Algebra>(std::move(a))), kind_(owned_->kind()), v_(owned_->view()) {
    derive_order();
  }

  ConditionContext(const ConditionContext&) = delete;
  ConditionContext& operator=(const ConditionContext&) = delete;

  Kind kind() const noexcept { return kind_; }

  Verdict eval(std::string_view name) {
    if (!name.empty() && name.front() == '!') {
      Verdict v = eval(name.substr(1));
      Verdict r;
      r.holds = !v.holds;
      r.law = std::string(name);
      r.checked_count = v.checked_count;
      return r;
    }
    if (auto it = cache_.find(name); it != cache_.end()) return it->second;
    Verdict v = compute(name);
    v.law = std::string(name);
    cache_.emplace(std::string(name), v);
    return v;
  }

  bool holds(std::string_view name) { return eval(name).holds; }

  /// The base view extended with the Sasaki pair of the kind's scheme.
  const OpsView& pair_view() {
    if (!pair_) {
      auto [odot, imp] = sasaki_tables(v_, *scheme_for(kind_));
      odot_ = std::move(odot);
      imp_ = std::move(imp);
      v_.set(Connective::Odot, odot_.data());
      v_.set(Connective::Imp, imp_.data());
      pair_ = true;
    }
    return v_;
  }

  const BinaryTable& odot() {
    pair_view();
    return odot_;
  }
  const BinaryTable& imp() {
    pair_view();
    return imp_;
  }

 private:
  void derive_order() {
    if (v_.leq != nullptr || kind_ != Kind::Pseudoring || v_.op(Connective::Times) == nullptr) return;
    const auto n = static_cast<Elem>(v_.n);
    const Elem* times = v_.op(Connective::Times);
    leq_.assign(std::size_t{n} * n, 0);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) leq_[x * n + y] = times[x * n + y] == x;
    }
    v_.leq = leq_.data();
  }

  static bool uses_pair(std::string_view name) {
    return name == "A1" || name == "A2" || name == "F1" || name == "F2" || name == "odot_monotone_first" ||
           name == "imp_monotone_second" || name == "lemma1_f" || name == "lemma1_g";
  }

  Verdict conj(std::initializer_list<const char*> parts) {
    Verdict out;
    for (const char* p : parts) {
      Verdict v = eval(p);
      out.checked_count += v.checked_count;
      if (!v.holds) {
        out.holds = false;
        out.witness = std::move(v.witness);
        return out;
      }
    }
    return out;
  }

  Verdict compute(std::string_view name) {
    if (const CompiledLaw* law = named_law(name)) {
      if (uses_pair(name)) return law->check(pair_view());
      return law->check(v_);
    }
    Verdict out;
    if (name == "adjoint") return conj({"A1", "A2"});
    if (name == "has_top") {
      out.holds = v_.one.has_value();
      return out;
    }
    if (name == "has_bottom") {
      out.holds = v_.zero.has_value();
      return out;
    }
    if (name == "bounded") {
      out.holds = v_.zero && v_.one;
      return out;
    }
    if (name == "complemented") {
      if (!v_.zero || !v_.one) {
        out.holds = false;
        return out;
      }
      return conj({"top_complement", "bottom_complement"});
    }
    if (name == "orthomodular") return conj({"complemented", "antitone", "involution", "OM"});
    if (name == "surjective") {
      if (v_.neg == nullptr) throw Error(Errc::MissingOperation, "unary operation ' is not defined");
      std::vector<std::uint8_t> hit(v_.n, 0);
      for (std::size_t x = 0; x < v_.n; ++x) hit[v_.neg[x]] = 1;
      out.checked_count = v_.n;
      for (Elem y = 0; y < v_.n; ++y) {
        if (!hit[y]) {
          out.holds = false;
          out.witness = {{"x", y}};
          break;
        }
      }
      return out;
    }
    if (name == "pseudocomplemented") return pseudocomplemented(v_, false);
    if (name == "dually_pseudocomplemented") return pseudocomplemented(v_, true);
    if (name == "lattice") {
      if (kind_ == Kind::Lattice) return out;
      if (kind_ == Kind::Lambda) return is_lattice_lambda(v_);
      throw Error(Errc::KindMismatch, "'lattice' applies to lattices and lambda-lattices");
    }
    if (name == "lambda_axioms") {
      const Elem* s = v_.op(Connective::Join);
      const Elem* i = v_.op(Connective::Meet);
      if (!s || !i) throw Error(Errc::MissingOperation, "join and meet");
      BinaryTable ts(v_.n, std::vector<Elem>(s, s + v_.n * v_.n));
      BinaryTable ti(v_.n, std::vector<Elem>(i, i + v_.n * v_.n));
      return check_lambda_axioms(v_.n, ts, ti);
    }
    if (name == "semiring") return check_semiring(v_);
    if (name == "pseudoring") return check_pseudoring(v_);
    throw Error(Errc::UnknownCondition, std::string(name));
  }

  std::unique_ptr<const Algebra> owned_;
  Kind kind_;
  OpsView v_;
  std::vector<std::uint8_t> leq_;
  BinaryTable odot_;
  BinaryTable imp_;
  bool pair_ = false;
  std::map<std::string, Verdict, std::less<>> cache_;
};

/// True for catalogue laws, derived conditions and their "!" negations.
inline bool is_condition_name(std::string_view name) {
  if (!name.empty() && name.front() == '!') name.remove_prefix(1);
  if (named_law(name)) return true;
  for (const auto& n : derived_condition_names()) {
    if (n == name) return true;
  }
  return false;
}

}  // namespace oalg
