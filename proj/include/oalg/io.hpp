#pragma once

// Line-oriented algebra files.
//
//   algebra NAME
//   kind poset|lattice|lambda|semiring|pseudoring
//   elements E1 E2 ...
//   covers A<B C<D ...            order (poset, lattice, lambda)
//   order covers A<B ...          order (semiring)
//   unary neg: A=B C=D ...
//   binop NAME:                   followed by one "row E: V1 ... Vn" per element
//   const zero E | const one E
//   complete-from-order           lambda: fill lsup/linf from the order
//   choice join A B = C           lambda: value for an incomparable pair
//   choice meet A B = C
//   expect COND=true|false ...
//
// '#' starts a comment.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oalg/algebras.hpp"

namespace oalg {

using Expectations = std::vector<std::pair<std::string, bool>>;

struct AlgebraFile {
  Algebra algebra;
  Expectations expect;
};

namespace detail {

struct Word {
  std::string text;
  std::size_t column;
};

inline std::vector<Word> split_words(std::string_view line) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({std::string(line.substr(i, j - i)), i + 1});
    i = j;
  }
  return out;
}

class FileParser {
 public:
  explicit FileParser(std::string_view text) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      lines_.push_back(split_words(line));
      start = end + 1;
    }
  }

  AlgebraFile parse() {
    for (line_ = 0; line_ < lines_.size(); ++line_) {
      const auto& w = lines_[line_];
      if (w.empty()) continue;
      const std::string& key = w[0].text;
      if (key == "algebra") {
        want(w, 2, "algebra NAME");
        name_ = w[1].text;
      } else if (key == "kind") {
        want(w, 2, "kind KIND");
        kind_ = parse_kind(w[1].text);
        if (!kind_) fail(w[1], "unknown kind '" + w[1].text + "'");
      } else if (key == "elements") {
        if (w.size() < 2) fail(w[0], "empty elements line");
        elements_.clear();
        for (std::size_t i = 1; i < w.size(); ++i) elements_.push_back(w[i].text);
        elements_line_ = line_;
      } else if (key == "covers") {
        read_covers(w, 1);
      } else if (key == "order") {
        if (w.size() < 2 || w[1].text != "covers") fail(w[0], "expected 'order covers'");
        read_covers(w, 2);
      } else if (key == "unary") {
        read_unary(w);
      } else if (key == "binop") {
        read_binop(w);
      } else if (key == "const") {
        want(w, 3, "const zero|one E");
        if (w[1].text != "zero" && w[1].text != "one") fail(w[1], "constant must be zero or one");
        consts_.push_back({w[1].text, w[2]});
      } else if (key == "complete-from-order") {
        want(w, 1, "complete-from-order");
        complete_ = true;
      } else if (key == "choice") {
        want(w, 6, "choice join|meet A B = C");
        if (w[1].text != "join" && w[1].text != "meet") fail(w[1], "choice must be join or meet");
        if (w[4].text != "=") fail(w[4], "expected '='");
        choices_.push_back({w[1].text == "join", w[2], w[3], w[5]});
      } else if (key == "expect") {
        for (std::size_t i = 1; i < w.size(); ++i) {
          const auto eq = w[i].text.find('=');
          if (eq == std::string::npos) fail(w[i], "expected COND=true|false");
          const std::string val = w[i].text.substr(eq + 1);
          if (val != "true" && val != "false") fail(w[i], "expected true or false");
          expect_.emplace_back(w[i].text.substr(0, eq), val == "true");
        }
      } else {
        fail(w[0], "unknown directive '" + key + "'");
      }
    }
    return build();
  }

 private:
  struct Choice {
    bool join;
    Word a, b, value;
  };
  struct Const {
    std::string which;
    Word value;
  };
  struct Table {
    std::size_t line;
    Word head;
    std::vector<std::vector<Word>> rows;
  };

  [[noreturn]] void fail(const Word& w, const std::string& msg) const { throw SyntaxError(line_ + 1, w.column, msg); }
  [[noreturn]] void fail_at(std::size_t line, const Word& w, const std::string& msg) const {
    throw SyntaxError(line + 1, w.column, msg);
  }

  void want(const std::vector<Word>& w, std::size_t n, const std::string& form) const {
    if (w.size() != n) fail(w[std::min(n, w.size() - 1)], "expected '" + form + "'");
  }

  void read_covers(const std::vector<Word>& w, std::size_t from) {
    have_covers_ = true;
    for (std::size_t i = from; i < w.size(); ++i) {
      const auto lt = w[i].text.find('<');
      if (lt == std::string::npos || lt == 0 || lt + 1 == w[i].text.size()) fail(w[i], "expected A<B");
      covers_.push_back({line_, w[i], w[i].text.substr(0, lt), w[i].text.substr(lt + 1)});
    }
  }

  void read_unary(const std::vector<Word>& w) {
    if (w.size() < 2 || w[1].text.size() < 2 || w[1].text.back() != ':') fail(w[0], "expected 'unary NAME: A=B ...'");
    Table t{line_, w[1], {}};
    t.rows.emplace_back(w.begin() + 2, w.end());
    unaries_.push_back(std::move(t));
  }

  void read_binop(const std::vector<Word>& w) {
    if (w.size() != 2 || w[1].text.size() < 2 || w[1].text.back() != ':') fail(w[0], "expected 'binop NAME:'");
    Table t{line_, w[1], {}};
    while (line_ + 1 < lines_.size()) {
      const auto& next = lines_[line_ + 1];
      if (next.empty()) {
        ++line_;
        continue;
      }
      if (next[0].text != "row") break;
      ++line_;
      t.rows.push_back(next);
    }
    binops_.push_back(std::move(t));
  }

  Elem elem(const Algebra& a, std::size_t line, const Word& w, const std::string& name) const {
    auto e = a.find(name);
    if (!e) fail_at(line, w, "unknown element '" + name + "'");
    return *e;
  }

  AlgebraFile build() {
    const Word origin{"", 1};
    if (!kind_) throw SyntaxError(1, 1, "missing 'kind' line");
    if (elements_.empty()) throw SyntaxError(1, 1, "missing 'elements' line");
    line_ = elements_line_;
    std::optional<Algebra> made;
    try {
      made.emplace(*kind_, name_.empty() ? "algebra" : name_, elements_);
    } catch (const Error& e) {
      fail(lines_[elements_line_][0], e.what());
    }
    Algebra& a = *made;

    std::optional<FinitePoset> order;
    if (have_covers_) {
      std::vector<std::pair<std::string, std::string>> pairs;
      for (const auto& c : covers_) {
        elem(a, c.line, c.word, c.lo);
        elem(a, c.line, c.word, c.hi);
        pairs.emplace_back(c.lo, c.hi);
      }
      order = poset_from_covers(elements_, pairs);
    }

    for (const auto& t : unaries_) {
      const std::string op = t.head.text.substr(0, t.head.text.size() - 1);
      std::vector<std::optional<Elem>> map(a.size());
      for (const auto& w : t.rows[0]) {
        const auto eq = w.text.find('=');
        if (eq == std::string::npos) fail_at(t.line, w, "expected A=B");
        const Elem x = elem(a, t.line, w, w.text.substr(0, eq));
        const Elem y = elem(a, t.line, w, w.text.substr(eq + 1));
        if (map[x]) fail_at(t.line, w, "duplicate entry for '" + a.element(x) + "'");
        map[x] = y;
      }
      std::vector<Elem> values;
      for (Elem x = 0; x < a.size(); ++x) {
        if (!map[x]) fail_at(t.line, t.head, "unary '" + op + "' is not total: missing '" + a.element(x) + "'");
        values.push_back(*map[x]);
      }
      a.set_unary(op, UnaryTable(std::move(values)));
    }

    for (const auto& t : binops_) {
      const std::string op = t.head.text.substr(0, t.head.text.size() - 1);
      if (t.rows.size() != a.size()) fail_at(t.line, t.head, "binop '" + op + "' needs one row per element");
      BinaryTable tab(a.size());
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        const std::size_t line = t.line + 1 + r;
        if (row.size() < 2 || row[1].text != a.element(static_cast<Elem>(r)) + ":") {
          fail_at(line, row[0], "expected 'row " + a.element(static_cast<Elem>(r)) + ":'");
        }
        if (row.size() != a.size() + 2) fail_at(line, row[0], "row needs " + std::to_string(a.size()) + " values");
        for (std::size_t c = 0; c < a.size(); ++c) {
          tab.set(static_cast<Elem>(r), static_cast<Elem>(c), elem(a, line, row[c + 2], row[c + 2].text));
        }
      }
      a.set_binary(op, std::move(tab));
    }

    for (const auto& c : consts_) a.set_constant(c.which, elem(a, line_, c.value, c.value.text));

    switch (*kind_) {
      case Kind::Poset:
      case Kind::Semiring:
        if (order) a.set_order(*order);
        break;
      case Kind::Lattice:
        if (!order) throw Error(Errc::ValidationError, "lattice file needs a covers line");
        if (!a.binary("join") || !a.binary("meet")) {
          try {
            const Algebra l = lattice_from_poset(*order);
            if (!a.binary("join")) a.set_binary("join", *l.binary("join"));
            if (!a.binary("meet")) a.set_binary("meet", *l.binary("meet"));
          } catch (const Error& e) {
            if (e.code() != Errc::NotALattice) throw;
            throw Error(Errc::ValidationError, "axiom NotALattice fails", e.witness());
          }
        }
        a.set_order(*order);
        break;
      case Kind::Lambda:
        if (complete_) {
          if (!order) throw Error(Errc::ValidationError, "complete-from-order needs a covers line");
          complete_lambda(a, *order);
        }
        if (!a.binary("lsup") || !a.binary("linf")) throw Error(Errc::MissingOperation, "lambda-lattice needs lsup and linf");
        {
          Verdict ax = check_lambda_axioms(a.size(), *a.binary("lsup"), *a.binary("linf"));
          if (!ax.holds) throw Error(Errc::ValidationError, "axiom " + ax.law + " fails", witness_names(a.elements(), ax));
        }
        try {
          a.set_order(induced_order(a));
        } catch (const Error& e) {
          throw Error(Errc::ValidationError, std::string("axiom induced_order fails: ") + e.what(), e.witness());
        }
        if (order && !(*order == *a.order())) throw Error(Errc::ValidationError, "covers differ from the induced order");
        break;
      case Kind::Pseudoring:
        break;
    }
    validate(a);
    return {std::move(a), std::move(expect_)};
  }

  void complete_lambda(Algebra& a, const FinitePoset& p) {
    const auto n = static_cast<Elem>(a.size());
    std::vector<std::optional<Elem>> sup(std::size_t{n} * n), inf(std::size_t{n} * n);
    for (const auto& c : choices_) {
      const Elem x = elem(a, line_, c.a, c.a.text);
      const Elem y = elem(a, line_, c.b, c.b.text);
      const Elem v = elem(a, line_, c.value, c.value.text);
      if (p.comparable(x, y)) throw Error(Errc::ValidationError, "choice for comparable pair", {c.a.text, c.b.text});
      const ConePair cone = cones(p, x, y);
      const auto& allowed = c.join ? cone.upper : cone.lower;
      if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
        throw Error(Errc::ValidationError, std::string("choice outside the ") + (c.join ? "upper" : "lower") + " cone",
                    {c.a.text, c.b.text});
      }
      auto& t = c.join ? sup : inf;
      t[x * n + y] = v;
      t[y * n + x] = v;
    }
    BinaryTable s(n), m(n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (p.leq(x, y)) {
          s.set(x, y, y);
          m.set(x, y, x);
          continue;
        }
        if (p.leq(y, x)) {
          s.set(x, y, x);
          m.set(x, y, y);
          continue;
        }
        const ConePair cone = cones(p, x, y);
        auto pick = [&](const std::optional<Elem>& chosen, const std::vector<Elem>& set, bool least) -> Elem {
          if (chosen) return *chosen;
          if (set.empty()) throw Error(Errc::NoBounds, "pair has an empty cone", {a.element(x), a.element(y)});
          for (Elem c : set) {
            if (std::all_of(set.begin(), set.end(), [&](Elem w) { return least ? p.leq(c, w) : p.leq(w, c); })) {
              return c;
            }
          }
          throw Error(Errc::ValidationError, std::string("no choice given for ") + (least ? "join" : "meet"),
                      {a.element(x), a.element(y)});
        };
        s.set(x, y, pick(sup[x * n + y], cone.upper, true));
        m.set(x, y, pick(inf[x * n + y], cone.lower, false));
      }
    }
    a.set_binary("lsup", std::move(s));
    a.set_binary("linf", std::move(m));
  }

  struct Cover {
    std::size_t line;
    Word word;
    std::string lo, hi;
  };

  std::vector<std::vector<Word>> lines_;
  std::size_t line_ = 0;
  std::string name_;
  std::optional<Kind> kind_;
  std::vector<std::string> elements_;
  std::size_t elements_line_ = 0;
  bool have_covers_ = false;
  std::vector<Cover> covers_;
  std::vector<Table> unaries_;
  std::vector<Table> binops_;
  std::vector<Const> consts_;
  bool complete_ = false;
  std::vector<Choice> choices_;
  Expectations expect_;
};

}  // namespace detail

inline AlgebraFile parse_algebra_file(std::string_view text) { return detail::FileParser(text).parse(); }

inline Algebra parse_algebra(std::string_view text) { return parse_algebra_file(text).algebra; }

inline AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra_file(ss.str());
}

inline Algebra load_algebra(const std::string& path) { return load_algebra_file(path).algebra; }

inline std::string format_covers(const FinitePoset& p) {
  std::string s;
  for (const auto& [lo, hi] : p.covers()) s += " " + p.name(lo) + "<" + p.name(hi);
  return s;
}

inline std::string format_table(const std::string& op, const std::vector<std::string>& names, const BinaryTable& t) {
  std::string s = "binop " + op + ":\n";
  for (Elem x = 0; x < names.size(); ++x) {
    s += "row " + names[x] + ":";
    for (Elem y = 0; y < names.size(); ++y) s += " " + names[t(x, y)];
    s += "\n";
  }
  return s;
}

/// Canonical text; lambda-lattices are written with full tables.
inline std::string dump_algebra(const Algebra& a, const Expectations& expect = {}) {
  std::string s = "algebra " + a.name() + "\n";
  s += std::string("kind ") + kind_name(a.kind()) + "\n";
  s += "elements";
  for (const auto& e : a.elements()) s += " " + e;
  s += "\n";
  if (a.order()) {
    switch (a.kind()) {
      case Kind::Poset:
      case Kind::Lattice: s += "covers" + format_covers(*a.order()) + "\n"; break;
      case Kind::Semiring: s += "order covers" + format_covers(*a.order()) + "\n"; break;
      case Kind::Lambda:
      case Kind::Pseudoring: break;
    }
  }
  for (const auto& [op, u] : a.unaries()) {
    s += "unary " + op + ":";
    for (Elem x = 0; x < a.size(); ++x) s += " " + a.element(x) + "=" + a.element(u(x));
    s += "\n";
  }
  for (const auto& [op, t] : a.binaries()) s += format_table(op, a.elements(), t);
  for (const auto& [c, e] : a.constants()) s += "const " + c + " " + a.element(e) + "\n";
  if (!expect.empty()) {
    s += "expect";
    for (const auto& [c, v] : expect) s += " " + c + "=" + (v ? "true" : "false");
    s += "\n";
  }
  return s;
}

}  // namespace oalg
