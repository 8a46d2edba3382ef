#pragma once

// Command-line front end. Exit codes: 0 success, 1 failed check or hits, 2 usage
// or input errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "oalg/fixtures.hpp"
#include "oalg/search.hpp"

namespace oalg {

namespace detail {

using ojson = nlohmann::ordered_json;

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

/// "fixture:ID" or a file path.
inline AlgebraFile resolve_algebra(const std::string& ref) {
  if (ref.rfind("fixture:", 0) == 0) return fixture_file(ref.substr(8));
  return load_algebra_file(ref);
}

class Reporter {
 public:
  Reporter(std::ostream& out, bool json) : out_(out), json_(json) {}

  bool json() const noexcept { return json_; }

  void verdict(const std::vector<std::string>& names, const std::string& name, const Verdict& v) {
    if (json_) {
      ojson j;
      j["name"] = name;
      j["holds"] = v.holds;
      j["witness"] = witness_names(names, v);
      j["checked_count"] = v.checked_count;
      out_ << j.dump() << "\n";
      return;
    }
    out_ << name << (v.holds ? " holds" : " fails");
    if (!v.holds && !v.witness.empty()) out_ << " at " << format_witness(names, v);
    out_ << " (checked " << v.checked_count << ")\n";
  }

  void record(const ojson& j, const std::string& text) {
    if (json_) {
      out_ << j.dump() << "\n";
    } else {
      out_ << text;
    }
  }

 private:
  std::ostream& out_;
  bool json_;
};

inline Scheme scheme_or_default(const std::string& flag, const Algebra& a) {
  if (flag.empty()) {
    auto s = scheme_for(a.kind());
    if (!s) throw Error(Errc::SchemeKindMismatch, std::string("no scheme applies to a ") + kind_name(a.kind()));
    return *s;
  }
  auto s = parse_scheme(flag);
  if (!s) throw Error(Errc::InvalidName, "unknown scheme '" + flag + "'");
  if (scheme_kind(*s) != a.kind()) {
    throw Error(Errc::SchemeKindMismatch, flag + " does not apply to a " + kind_name(a.kind()));
  }
  return *s;
}

inline std::string unary_line(const Algebra& a, const std::vector<Elem>& u) {
  std::string s = "neg:";
  for (Elem x = 0; x < a.size(); ++x) s += " " + a.element(x) + "=" + a.element(u[x]);
  return s;
}

inline bool same_table(const BinaryTable& a, const BinaryTable& b) {
  return a.size() == b.size() && std::equal(a.data(), a.data() + a.size() * a.size(), b.data());
}

}  // namespace detail

/// Runs one command line (without the program name).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::ojson;
  CLI::App app{"Sasaki operations and adjointness checks on finite ordered algebras", "oalg"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text or json-lines")->check(CLI::IsMember({"text", "json-lines"}));

  std::string alg_ref, alg_ref2, scheme, conditions, generators, filter, conj_name;
  std::size_t bound = 0, limit = 0, threads = 0, max_hits = 64;
  bool print_tables = false, expect_empty = false, validate_flag = false, list_flag = false;

  auto* check = app.add_subcommand("check", "evaluate named conditions");
  check->add_option("algebra", alg_ref, "fixture:ID or file")->required();
  check->add_option("--scheme", scheme, "S1|S2|S3|S4");
  check->add_option("--conditions", conditions, "comma-separated condition names");

  auto* derive = app.add_subcommand("derive", "derive the Sasaki pair");
  derive->add_option("algebra", alg_ref, "fixture:ID or file")->required();
  derive->add_option("--scheme", scheme, "S1|S2|S3|S4");
  derive->add_flag("--print-tables", print_tables, "print the odot and imp tables");

  auto* residual = app.add_subcommand("residual", "rebuild each operation of the pair from the other");
  residual->add_option("algebra", alg_ref, "fixture:ID or file")->required();
  residual->add_option("--scheme", scheme, "S1|S2|S3|S4");

  auto* translate = app.add_subcommand("translate", "orthomodular lattice <-> orthomodular pseudoring");
  translate->add_option("algebra", alg_ref, "fixture:ID or file")->required();

  auto* product = app.add_subcommand("product", "direct product of two algebras");
  product->add_option("left", alg_ref, "fixture:ID or file")->required();
  product->add_option("right", alg_ref2, "fixture:ID or file")->required();
  product->add_option("--conditions", conditions, "conditions to check on the product");

  auto* sub = app.add_subcommand("subalgebra", "subalgebra generated by a set of elements");
  sub->add_option("algebra", alg_ref, "fixture:ID or file")->required();
  sub->add_option("--generators", generators, "comma-separated element names")->required();

  auto* enumerate = app.add_subcommand("enumerate", "enumerate unary operations or lambda-completions");
  enumerate->require_subcommand(1);
  auto* en_unary = enumerate->add_subcommand("unary", "unary operations on an algebra");
  en_unary->add_option("algebra", alg_ref, "fixture:ID or file")->required();
  en_unary->add_option("--filter", filter, "complementation,involution,antitone,surjective,orthocomplementation");
  en_unary->add_option("--limit", limit, "stop after this many");
  auto* en_comp = enumerate->add_subcommand("completions", "lambda-completions of a bounded poset");
  en_comp->add_option("algebra", alg_ref, "fixture:ID or file")->required();
  en_comp->add_option("--limit", limit, "stop after this many");
  en_comp->add_option("--conditions", conditions, "count completions satisfying each condition");
  en_comp->add_flag("--print-tables", print_tables, "dump every completion");

  auto* falsify_cmd = app.add_subcommand("falsify", "search for counterexamples to a registered conjecture");
  falsify_cmd->add_option("conjecture", conj_name, "registry name");
  falsify_cmd->add_option("--bound", bound, "largest universe size");
  falsify_cmd->add_flag("--expect-empty", expect_empty, "exit 1 when a counterexample is found");
  falsify_cmd->add_option("--threads", threads, "worker threads, 0 for all cores");
  falsify_cmd->add_option("--max-hits", max_hits, "counterexamples to report");
  falsify_cmd->add_flag("--list", list_flag, "list registered conjectures");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "list built-in fixtures");
  fixtures_cmd->add_flag("--validate", validate_flag, "recompute every stored verdict");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  detail::Reporter rep(out, format == "json-lines");
  try {
    if (*check) {
      const Algebra a = detail::resolve_algebra(alg_ref).algebra;
      std::vector<std::string> names = detail::split_list(conditions);
      if (!scheme.empty() || names.empty()) {
        const Scheme s = detail::scheme_or_default(scheme, a);
        if (names.empty()) {
          names = {"A1", "A2"};
          for (auto& b : battery_names(s)) names.push_back(b);
        }
      }
      ConditionContext ctx(a);
      bool all = true;
      for (const auto& n : names) {
        if (!is_condition_name(n)) throw Error(Errc::UnknownCondition, n);
        const Verdict v = ctx.eval(n);
        rep.verdict(a.elements(), n, v);
        all = all && v.holds;
      }
      return all ? 0 : 1;
    }

    if (*derive) {
      const Algebra a = detail::resolve_algebra(alg_ref).algebra;
      const Scheme s = detail::scheme_or_default(scheme, a);
      const SasakiPair p = derive_sasaki(a, s);
      if (print_tables) {
        ojson j;
        j["scheme"] = scheme_name(s);
        j["odot"] = format_table("odot", a.elements(), p.odot);
        j["imp"] = format_table("imp", a.elements(), p.imp);
        rep.record(j, format_table("odot", a.elements(), p.odot) + format_table("imp", a.elements(), p.imp));
      }
      const AdjointnessReport r = check_adjointness(scheme_order(a), p.odot, p.imp);
      if (!print_tables || rep.json()) {
        rep.verdict(a.elements(), "A1", r.a1);
        rep.verdict(a.elements(), "A2", r.a2);
      }
      return 0;
    }

    if (*residual) {
      const Algebra a = detail::resolve_algebra(alg_ref).algebra;
      const Scheme s = detail::scheme_or_default(scheme, a);
      const SasakiPair p = derive_sasaki(a, s);
      const FinitePoset order = scheme_order(a);
      bool all = true;
      auto report = [&](const char* name, const Residual& r, const BinaryTable& expected) {
        ojson j;
        j["name"] = name;
        std::string text = std::string(name) + " ";
        if (!r.ok()) {
          j["status"] = "fails";
          j["witness"] = {a.element(r.witness[0]), a.element(r.witness[1])};
          text += "fails at (" + a.element(r.witness[0]) + ", " + a.element(r.witness[1]) + ")\n";
          all = false;
        } else if (detail::same_table(*r.table, expected)) {
          j["status"] = "reproduces";
          text += "reproduces the derived table\n";
        } else {
          j["status"] = "differs";
          text += "differs from the derived table\n";
          all = false;
        }
        rep.record(j, text);
      };
      report("imp_from_odot", residual_imp_from_odot(order, p.odot), p.imp);
      report("odot_from_imp", residual_odot_from_imp(order, p.imp), p.odot);
      return all ? 0 : 1;
    }

    if (*translate) {
      const Algebra a = detail::resolve_algebra(alg_ref).algebra;
      if (a.kind() == Kind::Lattice) {
        out << dump_algebra(oml_to_pseudoring(a));
      } else if (a.kind() == Kind::Pseudoring) {
        out << dump_algebra(pseudoring_to_oml(a));
      } else {
        throw Error(Errc::KindMismatch, "translate takes a lattice or a pseudoring");
      }
      return 0;
    }

    if (*product) {
      const Algebra p = direct_product(detail::resolve_algebra(alg_ref).algebra, detail::resolve_algebra(alg_ref2).algebra);
      const auto names = detail::split_list(conditions);
      if (names.empty()) {
        out << dump_algebra(p);
        return 0;
      }
      ConditionContext ctx(p);
      bool all = true;
      for (const auto& n : names) {
        if (!is_condition_name(n)) throw Error(Errc::UnknownCondition, n);
        const Verdict v = ctx.eval(n);
        rep.verdict(p.elements(), n, v);
        all = all && v.holds;
      }
      return all ? 0 : 1;
    }

    if (*sub) {
      const Algebra a = detail::resolve_algebra(alg_ref).algebra;
      out << dump_algebra(subalgebra_generated(a, detail::split_list(generators)));
      return 0;
    }

    if (*en_unary) {
      const Algebra a = detail::resolve_algebra(alg_ref).algebra;
      const UnaryFilter f = parse_unary_filter(detail::split_list(filter));
      std::uint64_t count = 0;
      const bool exhausted = for_each_unary_op(a.view(), f, [&](const std::vector<Elem>& u) {
        ++count;
        ojson j;
        j["neg"] = ojson::array();
        for (Elem x : u) j["neg"].push_back(a.element(x));
        rep.record(j, detail::unary_line(a, u) + "\n");
        return limit == 0 || count < limit;
      });
      ojson j;
      j["count"] = count;
      j["exhausted"] = exhausted;
      rep.record(j, "count " + std::to_string(count) + (exhausted ? "" : " (stopped)") + "\n");
      return 0;
    }

    if (*en_comp) {
      const Algebra a = detail::resolve_algebra(alg_ref).algebra;
      if (!a.order()) throw Error(Errc::MissingOperation, "the algebra carries no order");
      const auto names = detail::split_list(conditions);
      for (const auto& n : names) {
        if (!is_condition_name(n)) throw Error(Errc::UnknownCondition, n);
      }
      std::vector<std::uint64_t> holding(names.size(), 0);
      const UnaryTable* neg = a.unary("neg");
      const CompletionCount c = for_each_lambda_completion(*a.order(), limit, [&](const Algebra& l) {
        Algebra m = l;
        if (neg) m.set_unary("neg", *neg);
        if (print_tables) out << dump_algebra(m);
        if (!names.empty()) {
          ConditionContext ctx(m);
          for (std::size_t i = 0; i < names.size(); ++i) holding[i] += ctx.holds(names[i]) ? 1 : 0;
        }
        return true;
      }, a.name());
      ojson j;
      j["completions"] = c.yielded;
      j["exhausted"] = c.exhausted;
      for (std::size_t i = 0; i < names.size(); ++i) j["holding"][names[i]] = holding[i];
      std::string text = "completions " + std::to_string(c.yielded) + (c.exhausted ? " exhausted" : " (stopped)") + "\n";
      for (std::size_t i = 0; i < names.size(); ++i) text += names[i] + " holds in " + std::to_string(holding[i]) + "\n";
      rep.record(j, text);
      return 0;
    }

    if (*falsify_cmd) {
      if (list_flag) {
        for (const auto& c : conjecture_registry()) {
          ojson j;
          j["name"] = c.name;
          j["kind"] = kind_name(c.kind);
          j["default_bound"] = c.default_bound;
          j["statement"] = c.statement;
          rep.record(j, c.name + " (" + kind_name(c.kind) + ", bound " + std::to_string(c.default_bound) + "): " +
                            c.statement + "\n");
        }
        return 0;
      }
      if (conj_name.empty()) throw Error(Errc::UnknownConjecture, "no conjecture given");
      SearchOptions opts;
      opts.threads = threads;
      opts.max_hits = max_hits;
      const SearchResult r = falsify(conj_name, bound ? std::optional<std::size_t>(bound) : std::nullopt, opts);
      for (const auto& h : r.hits) {
        ojson j;
        j["hit"] = h.description;
        std::string text = "hit " + h.description + "\n";
        for (const auto& [name, v] : h.verdicts) {
          j["verdicts"][name] = v.holds;
          text += "  " + name + (v.holds ? " holds" : " fails");
          if (!v.holds && !v.witness.empty()) text += " at " + format_witness(h.algebra.elements(), v);
          text += "\n";
        }
        rep.record(j, text);
      }
      ojson j;
      j["conjecture"] = r.conjecture;
      j["bound"] = r.bound;
      j["models_examined"] = r.models_examined;
      j["hypothesis_models"] = r.hypothesis_models;
      j["hits"] = r.hit_count;
      j["exhausted"] = r.exhausted;
      rep.record(j, r.conjecture + " bound " + std::to_string(r.bound) + ": examined " +
                        std::to_string(r.models_examined) + ", hypotheses hold in " +
                        std::to_string(r.hypothesis_models) + ", hits " + std::to_string(r.hit_count) +
                        (r.exhausted ? ", exhausted" : ", not exhausted") + "\n");
      return expect_empty && r.hit_count > 0 ? 1 : 0;
    }

    if (*fixtures_cmd) {
      bool all = true;
      for (const auto& f : fixture_list()) {
        ojson j;
        j["id"] = f.id;
        std::string text = f.id;
        if (validate_flag) {
          const auto bad = validate_fixture(fixture_file(f.id));
          j["ok"] = bad.empty();
          j["mismatches"] = bad;
          text += bad.empty() ? " ok" : " MISMATCH";
          for (const auto& b : bad) text += " [" + b + "]";
          all = all && bad.empty();
        } else {
          j["description"] = f.description;
          text += "  " + f.description;
        }
        rep.record(j, text + "\n");
      }
      return all ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace oalg
