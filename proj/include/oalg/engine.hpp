#pragma once

// Exhaustive evaluation of terms and laws over a finite signature view.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oalg/core.hpp"
#include "oalg/terms.hpp"

namespace oalg {

/// Non-owning view of the operations an algebra provides to the term engine.
/// `binary[Join]` is the lattice join or the lambda-sup, depending on the algebra kind.
struct OpsView {
  std::size_t n = 0;
  std::array<const Elem*, kConnectiveCount> binary{};
  const Elem* neg = nullptr;
  const std::uint8_t* leq = nullptr;
  std::optional<Elem> zero;
  std::optional<Elem> one;

  const Elem* op(Connective c) const noexcept { return binary[static_cast<std::size_t>(c)]; }
  void set(Connective c, const Elem* table) noexcept { binary[static_cast<std::size_t>(c)] = table; }
};

struct Verdict {
  bool holds = true;
  /// Least violating assignment (variables in alphabetical order) when `holds` is false.
  std::vector<std::pair<std::string, Elem>> witness;
  std::uint64_t checked_count = 0;
  /// Name of the law or condition this verdict is about; for aggregates, the failing part.
  std::string law;
};

using VerdictMap = std::map<std::string, Verdict>;

struct EngineOptions {
  std::size_t max_variables = 4;
};

namespace detail {

enum class OpCode : std::uint8_t { Var, Elem, Zero, One, Neg, Bin };

struct Instr {
  OpCode code;
  std::uint32_t arg;
};

struct Requirements {
  std::uint8_t connectives = 0;  // bitmask over Connective
  bool neg = false;
  bool zero = false;
  bool one = false;
  bool order = false;
};

}  // namespace detail

/// A term flattened to postfix code. Variables refer to slots of an assignment vector.
class CompiledTerm {
 public:
  CompiledTerm() = default;

  /// `slots` gives the variable order; identifiers missing from it resolve through
  /// `constants` (element names) or raise UnboundVariable.
  CompiledTerm(const Term& t, const std::vector<std::string>& slots,
               const std::map<std::string, Elem>& constants = {}) {
    emit(t, slots, constants, 0);
  }

  Elem eval(const OpsView& v, const Elem* vars) const {
    std::array<Elem, 64> fixed{};
    std::vector<Elem> heap;
    Elem* stack = fixed.data();
    if (depth_ > fixed.size()) {
      heap.resize(depth_);
      stack = heap.data();
    }
    std::size_t sp = 0;
    for (const auto& in : code_) {
      switch (in.code) {
        case detail::OpCode::Var: stack[sp++] = vars[in.arg]; break;
        case detail::OpCode::Elem: stack[sp++] = in.arg; break;
        case detail::OpCode::Zero: stack[sp++] = *v.zero; break;
        case detail::OpCode::One: stack[sp++] = *v.one; break;
        case detail::OpCode::Neg: stack[sp - 1] = v.neg[stack[sp - 1]]; break;
        case detail::OpCode::Bin: {
          const Elem r = stack[--sp];
          const Elem l = stack[sp - 1];
          stack[sp - 1] = v.binary[in.arg][l * v.n + r];
          break;
        }
      }
    }
    return stack[0];
  }

  const detail::Requirements& requirements() const noexcept { return req_; }

 private:
  std::size_t emit(const Term& t, const std::vector<std::string>& slots,
                   const std::map<std::string, Elem>& constants, std::size_t height) {
    std::size_t peak = height + 1;
    switch (t.tag) {
      case Term::Tag::Variable: {
        std::size_t slot = slots.size();
        for (std::size_t i = 0; i < slots.size(); ++i) {
          if (slots[i] == t.name) slot = i;
        }
        if (slot < slots.size()) {
          code_.push_back({detail::OpCode::Var, static_cast<std::uint32_t>(slot)});
        } else if (auto it = constants.find(t.name); it != constants.end()) {
          code_.push_back({detail::OpCode::Elem, it->second});
        } else {
          throw Error(Errc::UnboundVariable, t.name);
        }
        break;
      }
      case Term::Tag::Constant:
        code_.push_back({t.constant ? detail::OpCode::One : detail::OpCode::Zero, 0});
        (t.constant ? req_.one : req_.zero) = true;
        break;
      case Term::Tag::Unary:
        peak = emit(t.args[0], slots, constants, height);
        code_.push_back({detail::OpCode::Neg, 0});
        req_.neg = true;
        break;
      case Term::Tag::Binary: {
        const std::size_t a = emit(t.args[0], slots, constants, height);
        const std::size_t b = emit(t.args[1], slots, constants, height + 1);
        peak = std::max(a, b);
        code_.push_back({detail::OpCode::Bin, static_cast<std::uint32_t>(t.op)});
        req_.connectives |= static_cast<std::uint8_t>(1u << static_cast<unsigned>(t.op));
        break;
      }
    }
    depth_ = std::max(depth_, peak);
    return peak;
  }

  std::vector<detail::Instr> code_;
  std::size_t depth_ = 0;
  detail::Requirements req_;
};

inline const char* connective_role(Connective c) noexcept {
  switch (c) {
    case Connective::Join: return "join";
    case Connective::Meet: return "meet";
    case Connective::Plus: return "plus";
    case Connective::Times: return "times";
    case Connective::Odot: return "odot";
    case Connective::Imp: return "imp";
  }
  return "?";
}

inline void require(const OpsView& v, const detail::Requirements& r) {
  for (std::size_t c = 0; c < kConnectiveCount; ++c) {
    if ((r.connectives >> c & 1u) && v.binary[c] == nullptr) {
      const auto conn = static_cast<Connective>(c);
      throw Error(Errc::MissingOperation, std::string("binary operation '") + connective_symbol(conn) +
                                              "' (" + connective_role(conn) + ") is not defined");
    }
  }
  if (r.neg && v.neg == nullptr) throw Error(Errc::MissingOperation, "unary operation ' is not defined");
  if (r.zero && !v.zero) throw Error(Errc::MissingOperation, "constant 0 is not defined");
  if (r.one && !v.one) throw Error(Errc::MissingOperation, "constant 1 is not defined");
  if (r.order && v.leq == nullptr) throw Error(Errc::MissingOperation, "the algebra carries no order");
}

/// A law compiled against its own variable list (alphabetical).
class CompiledLaw {
 public:
  CompiledLaw() = default;

  explicit CompiledLaw(const Law& law, std::string name = {}, EngineOptions opts = {})
      : name_(std::move(name)), vars_(oalg::variables(law)) {
    if (vars_.size() > opts.max_variables || vars_.size() > 16) {
      throw Error(Errc::TooManyVariables, std::to_string(vars_.size()) + " variables exceed the cap of " +
                                              std::to_string(opts.max_variables));
    }
    for (const auto& p : law.premises) premises_.push_back(compile_atom(p));
    conclusion_ = compile_atom(law.conclusion);
    if (name_.empty()) name_ = to_string(law);
  }

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& variables() const noexcept { return vars_; }

  void require_on(const OpsView& v) const {
    for (const auto& p : premises_) check_atom(v, p);
    check_atom(v, conclusion_);
  }

  /// True when the premises hold at `vars` and the conclusion fails.
  bool violated_at(const OpsView& v, const Elem* vars) const {
    for (const auto& p : premises_) {
      if (!holds(v, p, vars)) return false;
    }
    return !holds(v, conclusion_, vars);
  }

  Verdict check(const OpsView& v) const {
    require_on(v);
    Verdict out;
    out.law = name_;
    const std::size_t k = vars_.size();
    std::array<Elem, 16> slots{};
    std::uint64_t count = 0;
    if (v.n == 0) return out;
    for (;;) {
      ++count;
      if (violated_at(v, slots.data())) {
        out.holds = false;
        for (std::size_t i = 0; i < k; ++i) out.witness.emplace_back(vars_[i], slots[i]);
        break;
      }
      bool done = true;
      for (std::size_t i = k; i-- > 0;) {
        if (++slots[i] < v.n) {
          done = false;
          break;
        }
        slots[i] = 0;
      }
      if (done) break;
    }
    out.checked_count = count;
    return out;
  }

 private:
  struct CompiledAtom {
    Relation rel;
    CompiledTerm lhs;
    CompiledTerm rhs;
  };

  CompiledAtom compile_atom(const Atom& a) const { return {a.rel, CompiledTerm(a.lhs, vars_), CompiledTerm(a.rhs, vars_)}; }

  static void check_atom(const OpsView& v, const CompiledAtom& a) {
    require(v, a.lhs.requirements());
    require(v, a.rhs.requirements());
    if (a.rel == Relation::LessEq && v.leq == nullptr) {
      throw Error(Errc::MissingOperation, "inequality needs an order");
    }
  }

  static bool holds(const OpsView& v, const CompiledAtom& a, const Elem* vars) {
    const Elem l = a.lhs.eval(v, vars);
    const Elem r = a.rhs.eval(v, vars);
    return a.rel == Relation::Equal ? l == r : v.leq[l * v.n + r] != 0;
  }

  std::string name_;
  std::vector<std::string> vars_;
  std::vector<CompiledAtom> premises_;
  CompiledAtom conclusion_{};
};

inline Verdict check_law(const OpsView& v, const Law& law, EngineOptions opts = {}) {
  return CompiledLaw(law, {}, opts).check(v);
}

/// Evaluates `t` at `assignment`; identifiers not assigned resolve through `constants`.
inline Elem eval_term(const OpsView& v, const Term& t, const std::map<std::string, Elem>& assignment,
                      const std::map<std::string, Elem>& constants = {}) {
  std::vector<std::string> slots;
  std::vector<Elem> values;
  for (const auto& [name, e] : assignment) {
    if (e >= v.n) throw Error(Errc::UnknownName, "assigned element out of range for " + name);
    slots.push_back(name);
    values.push_back(e);
  }
  CompiledTerm c(t, slots, constants);
  require(v, c.requirements());
  return c.eval(v, values.data());
}

}  // namespace oalg
