#pragma once

// Term language: abstract syntax, parser and printer.
//
// Surface syntax (ASCII):
//   v  join / lambda-sup     ^  meet / lambda-inf
//   +  plus                  *  times
//   o  Sasaki product        -> Sasaki implication
//   '  postfix unary         0, 1  bottom/zero and top/one
//   =  identity              <= inequality
//   &  between premises      => before the conclusion

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oalg/error.hpp"

namespace oalg {

enum class Connective : std::uint8_t { Join, Meet, Plus, Times, Odot, Imp };
inline constexpr std::size_t kConnectiveCount = 6;

inline const char* connective_symbol(Connective c) noexcept {
  switch (c) {
    case Connective::Join: return "v";
    case Connective::Meet: return "^";
    case Connective::Plus: return "+";
    case Connective::Times: return "*";
    case Connective::Odot: return "o";
    case Connective::Imp: return "->";
  }
  return "?";
}

struct Term {
  enum class Tag : std::uint8_t { Variable, Constant, Unary, Binary };

  Tag tag = Tag::Constant;
  std::string name;  // Variable
  int constant = 0;  // Constant: 0 or 1
  Connective op = Connective::Join;
  std::vector<Term> args;  // Unary: 1, Binary: 2

  static Term var(std::string n) {
    Term t;
    t.tag = Tag::Variable;
    t.name = std::move(n);
    return t;
  }
  static Term zero() { return Term{}; }
  static Term one() {
    Term t;
    t.constant = 1;
    return t;
  }
  static Term prime(Term a) {
    Term t;
    t.tag = Tag::Unary;
    t.args.push_back(std::move(a));
    return t;
  }
  static Term binary(Connective c, Term l, Term r) {
    Term t;
    t.tag = Tag::Binary;
    t.op = c;
    t.args.push_back(std::move(l));
    t.args.push_back(std::move(r));
    return t;
  }

  friend bool operator==(const Term& a, const Term& b) {
    if (a.tag != b.tag) return false;
    switch (a.tag) {
      case Tag::Variable: return a.name == b.name;
      case Tag::Constant: return a.constant == b.constant;
      case Tag::Unary: return a.args == b.args;
      case Tag::Binary: return a.op == b.op && a.args == b.args;
    }
    return false;
  }
};

enum class Relation : std::uint8_t { Equal, LessEq };

struct Atom {
  Relation rel = Relation::Equal;
  Term lhs;
  Term rhs;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Identity, inequality, or quasi-identity (premises non-empty).
struct Law {
  std::vector<Atom> premises;
  Atom conclusion;

  bool is_quasi() const noexcept { return !premises.empty(); }
  friend bool operator==(const Law&, const Law&) = default;
};

inline void collect_variables(const Term& t, std::set<std::string>& out) {
  if (t.tag == Term::Tag::Variable) out.insert(t.name);
  for (const auto& a : t.args) collect_variables(a, out);
}

/// Distinct variables in alphabetical order; this is the assignment order used by check_law.
inline std::vector<std::string> variables(const Law& law) {
  std::set<std::string> s;
  for (const auto& p : law.premises) {
    collect_variables(p.lhs, s);
    collect_variables(p.rhs, s);
  }
  collect_variables(law.conclusion.lhs, s);
  collect_variables(law.conclusion.rhs, s);
  return {s.begin(), s.end()};
}

inline std::vector<std::string> variables(const Term& t) {
  std::set<std::string> s;
  collect_variables(t, s);
  return {s.begin(), s.end()};
}

inline bool mentions(const Term& t, Connective c) {
  if (t.tag == Term::Tag::Binary && t.op == c) return true;
  for (const auto& a : t.args) {
    if (mentions(a, c)) return true;
  }
  return false;
}

inline bool uses_order(const Law& law) {
  if (law.conclusion.rel == Relation::LessEq) return true;
  for (const auto& p : law.premises) {
    if (p.rel == Relation::LessEq) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Printing. Binary subterms are always parenthesised, so parse(print(t)) == t.

inline void print_term(const Term& t, std::string& out, bool top) {
  switch (t.tag) {
    case Term::Tag::Variable: out += t.name; break;
    case Term::Tag::Constant: out += t.constant ? '1' : '0'; break;
    case Term::Tag::Unary:
      print_term(t.args[0], out, false);
      out += '\'';
      break;
    case Term::Tag::Binary:
      if (!top) out += '(';
      print_term(t.args[0], out, false);
      out += ' ';
      out += connective_symbol(t.op);
      out += ' ';
      print_term(t.args[1], out, false);
      if (!top) out += ')';
      break;
  }
}

inline std::string to_string(const Term& t) {
  std::string s;
  print_term(t, s, true);
  return s;
}

inline std::string to_string(const Atom& a) {
  return to_string(a.lhs) + (a.rel == Relation::Equal ? " = " : " <= ") + to_string(a.rhs);
}

inline std::string to_string(const Law& law) {
  std::string s;
  for (std::size_t i = 0; i < law.premises.size(); ++i) {
    if (i) s += " & ";
    s += to_string(law.premises[i]);
  }
  if (!law.premises.empty()) s += " => ";
  s += to_string(law.conclusion);
  return s;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

enum class Tok : std::uint8_t {
  Ident, Zero, One, LParen, RParen, Prime, Plus, Star, Caret, Vee, Odot, Arrow,
  Leq, Eq, Amp, Implies, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto at = [&](std::size_t k) { return k < src.size() ? src[k] : '\0'; };
  while (i < src.size()) {
    const char ch = src[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      std::string word(src.substr(i, j - i));
      Tok k = Tok::Ident;
      if (word == "v") k = Tok::Vee;
      if (word == "o") k = Tok::Odot;
      out.push_back({k, std::move(word), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (std::isalnum(static_cast<unsigned char>(at(i + 1))) || (ch != '0' && ch != '1')) {
        throw SyntaxError(1, col, "only the constants 0 and 1 may start with a digit");
      }
      out.push_back({ch == '0' ? Tok::Zero : Tok::One, std::string(1, ch), col});
      ++i;
      continue;
    }
    switch (ch) {
      case '(': out.push_back({Tok::LParen, "(", col}); ++i; continue;
      case ')': out.push_back({Tok::RParen, ")", col}); ++i; continue;
      case '\'': out.push_back({Tok::Prime, "'", col}); ++i; continue;
      case '+': out.push_back({Tok::Plus, "+", col}); ++i; continue;
      case '*': out.push_back({Tok::Star, "*", col}); ++i; continue;
      case '^': out.push_back({Tok::Caret, "^", col}); ++i; continue;
      case '&': out.push_back({Tok::Amp, "&", col}); ++i; continue;
      case '-':
        if (at(i + 1) == '>') {
          out.push_back({Tok::Arrow, "->", col});
          i += 2;
          continue;
        }
        break;
      case '<':
        if (at(i + 1) == '=') {
          out.push_back({Tok::Leq, "<=", col});
          i += 2;
          continue;
        }
        break;
      case '=':
        if (at(i + 1) == '>') {
          out.push_back({Tok::Implies, "=>", col});
          i += 2;
        } else {
          out.push_back({Tok::Eq, "=", col});
          ++i;
        }
        continue;
      default: break;
    }
    throw SyntaxError(1, col, std::string("unexpected character '") + ch + "'");
  }
  out.push_back({Tok::End, "", src.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Term parse_term_only() {
    Term t = term();
    expect_end();
    return t;
  }

  Law parse_law_only() {
    Law law;
    Atom first = atom();
    if (peek().kind == Tok::End) {
      law.conclusion = std::move(first);
      return law;
    }
    law.premises.push_back(std::move(first));
    while (peek().kind == Tok::Amp) {
      ++pos_;
      law.premises.push_back(atom());
    }
    if (peek().kind != Tok::Implies) fail("expected '&' or '=>'");
    ++pos_;
    law.conclusion = atom();
    expect_end();
    return law;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    const auto& t = peek();
    throw SyntaxError(1, t.column, msg + (t.kind == Tok::End ? " at end of input" : " near '" + t.text + "'"));
  }

  void expect_end() const {
    if (peek().kind != Tok::End) fail("unexpected trailing input");
  }

  Atom atom() {
    Atom a;
    a.lhs = term();
    if (peek().kind == Tok::Eq) {
      a.rel = Relation::Equal;
    } else if (peek().kind == Tok::Leq) {
      a.rel = Relation::LessEq;
    } else {
      fail("expected '=' or '<='");
    }
    ++pos_;
    a.rhs = term();
    return a;
  }

  Term term() { return imp(); }

  Term imp() {
    Term t = add();
    while (peek().kind == Tok::Arrow) {
      ++pos_;
      t = Term::binary(Connective::Imp, std::move(t), add());
    }
    return t;
  }

  Term add() {
    Term t = mul();
    for (;;) {
      Connective c;
      switch (peek().kind) {
        case Tok::Plus: c = Connective::Plus; break;
        case Tok::Vee: c = Connective::Join; break;
        case Tok::Odot: c = Connective::Odot; break;
        default: return t;
      }
      ++pos_;
      t = Term::binary(c, std::move(t), mul());
    }
  }

  Term mul() {
    Term t = post();
    for (;;) {
      Connective c;
      switch (peek().kind) {
        case Tok::Star: c = Connective::Times; break;
        case Tok::Caret: c = Connective::Meet; break;
        default: return t;
      }
      ++pos_;
      t = Term::binary(c, std::move(t), post());
    }
  }

  Term post() {
    Term t = primary();
    while (peek().kind == Tok::Prime) {
      ++pos_;
      t = Term::prime(std::move(t));
    }
    return t;
  }

  Term primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: ++pos_; return Term::var(t.text);
      case Tok::Zero: ++pos_; return Term::zero();
      case Tok::One: ++pos_; return Term::one();
      case Tok::LParen: {
        ++pos_;
        Term inner = term();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        ++pos_;
        return inner;
      }
      default: fail("expected a term");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Term parse_term(std::string_view src) { return detail::Parser(src).parse_term_only(); }
inline Law parse_law(std::string_view src) { return detail::Parser(src).parse_law_only(); }

}  // namespace oalg
