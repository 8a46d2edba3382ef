// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oalg/cli.hpp"

using namespace oalg;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(OALG_TEST_DATA) + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string cli(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  const int c = run_cli(args, out, err);
  if (code) *code = c;
  return out.str() + err.str();
}

/// Cell-by-cell comparison of two "binop" dumps; returns matching cells.
std::size_t matching_cells(const std::string& got, const std::string& want, std::size_t* total) {
  const auto g = lines_of(got), w = lines_of(want);
  std::size_t same = 0;
  *total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].rfind("row ", 0) != 0) continue;
    std::istringstream ws(w[i]), gs(i < g.size() ? g[i] : "");
    std::vector<std::string> wt, gt;
    for (std::string t; ws >> t;) wt.push_back(t);
    for (std::string t; gs >> t;) gt.push_back(t);
    for (std::size_t k = 2; k < wt.size(); ++k) {
      ++*total;
      if (k < gt.size() && gt[k] == wt[k]) ++same;
    }
  }
  return same;
}

Elem at(const Algebra& a, const std::string& n) { return a.index_of(n); }

/// Evaluates a quasi-identity's premises and conclusion at one assignment.
bool violated_at(const Algebra& a, const std::string& law, const std::map<std::string, Elem>& asg) {
  const Law l = parse_law(law);
  auto sat = [&](const Atom& t) {
    const Elem x = eval_term(a, t.lhs, asg), y = eval_term(a, t.rhs, asg);
    return t.rel == Relation::Equal ? x == y : a.order()->leq(x, y);
  };
  for (const auto& p : l.premises) {
    if (!sat(p)) return false;
  }
  return !sat(l.conclusion);
}

std::string wit(const Algebra& a, const Verdict& v) { return "(" + format_witness(a.elements(), v) + ")"; }

bool same_relation(const FinitePoset& p, const Algebra& a) {
  return detail::canonical_code(std::vector<std::uint8_t>(p.relation().begin(), p.relation().end()), p.size()) ==
         detail::canonical_code(std::vector<std::uint8_t>(a.order()->relation().begin(), a.order()->relation().end()),
                                a.size());
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  struct Case {
    const char* ref;
    const char* scheme;
    const char* file;
  };
  for (const Case& c : {Case{"fixture:fig7", "S2", "fig7_s2_tables.txt"},
                        Case{"fixture:pseudoring6", "S4", "pseudoring6_s4_tables.txt"}}) {
    int code = 0;
    const std::string got = cli({"derive", c.ref, "--scheme", c.scheme, "--print-tables"}, &code);
    std::size_t total = 0;
    const std::size_t same = matching_cells(got, slurp(c.file), &total);
    o.require(code == 0 && total == 72 && same == total && got == slurp(c.file),
              std::string(c.ref) + " " + c.scheme + " tables differ");
    o.note(std::string(c.ref) + " " + c.scheme + ": " + std::to_string(same) + "/" + std::to_string(total) +
           " cells match");
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  {
    ConditionContext ctx(fixture("fig1"));
    o.require(ctx.holds("modular") && ctx.holds("complemented") && ctx.holds("adjoint"), "fig1 adjoint");
  }
  const auto oml = orthomodular_lattices(10);
  std::size_t adjoint = 0;
  for (const auto& a : oml) {
    ConditionContext ctx(a);
    if (ctx.holds("adjoint")) ++adjoint;
  }
  o.require(adjoint == oml.size(), "every orthomodular lattice up to 10 elements is adjoint");
  o.note(std::to_string(adjoint) + "/" + std::to_string(oml.size()) + " orthomodular lattices (<= 10 elements) adjoint");

  const std::vector<std::pair<std::string, Algebra>> required = {
      {"2", chain_lattice(2)},          {"2^2", boolean_lattice(2)}, {"2^3", boolean_lattice(3)},
      {"MO2", mo_lattice(2)},           {"MO3", mo_lattice(3)},      {"MO4", mo_lattice(4)}};
  for (const auto& [label, want] : required) {
    bool found = false;
    for (const auto& a : oml) found = found || (a.size() == want.size() && same_relation(*want.order(), a));
    o.require(found, label + " in the enumeration");
  }
  o.note("enumeration contains 2, 2^2, 2^3, MO2, MO3, MO4");

  try {
    lattice_from_poset(*fixture("fig5_ex1").order());
    o.require(false, "fig5 order unexpectedly a lattice");
  } catch (const Error& e) {
    o.note(std::string("fig5 order is not a lattice (") + e.what() + "); MO4 built directly");
  }

  const Algebra o6 = o6_lattice();
  ConditionContext ctx(o6);
  const Verdict a2 = ctx.eval("A2");
  o.require(!ctx.holds("orthomodular") && !a2.holds, "O6 behaves as a non-orthomodular ortholattice");
  o.note("O6 is an ortholattice but not orthomodular; its S1 pair is not adjoint, A2 fails at " + wit(o6, a2));
  return o;
}

Outcome criterion3() {
  Outcome o;
  {
    const Algebra a = fixture("n5_bprime_a");
    ConditionContext ctx(a);
    const Verdict a1 = ctx.eval("A1"), a2 = ctx.eval("A2");
    o.require(!a1.holds && format_witness(a.elements(), a1) == "x=c y=b z=0", "n5_bprime_a A1 witness");
    o.require(!a2.holds && format_witness(a.elements(), a2) == "x=a y=c z=a", "n5_bprime_a A2 witness");
    o.note("n5_bprime_a: A1 fails at " + wit(a, a1) + ", A2 fails at " + wit(a, a2));
  }
  {
    const Algebra a = fixture("fig5_ex1");
    ConditionContext ctx(a);
    const Verdict a1 = ctx.eval("A1");
    o.require(ctx.holds("A2"), "fig5_ex1 A2");
    o.require(!a1.holds, "fig5_ex1 A1 fails");
    const Algebra full = with_pair(a, derive_sasaki(a, Scheme::S2));
    const bool printed = violated_at(full, law_text("A1"), {{"x", at(a, "a")}, {"y", at(a, "c'")}, {"z", at(a, "0")}});
    o.require(printed, "fig5_ex1 A1 at (a, c', 0)");
    const bool c2 = violated_at(full, law_text("C2"), {{"x", at(a, "a'")}, {"y", at(a, "b")}});
    o.require(c2, "fig5_ex1 C2 at (a', b)");
    o.note("fig5_ex1: A2 holds; A1 least witness " + wit(a, a1) + ", (a, c', 0) verified by evaluation");
  }
  {
    const Algebra a = fixture("fano");
    ConditionContext ctx(a);
    o.require(ctx.holds("C1") && ctx.holds("C2"), "fano C1 and C2");
    const Algebra full = with_pair(a, derive_sasaki(a, Scheme::S2));
    struct Case {
      const char* law;
      std::vector<std::pair<const char*, const char*>> asg;
    };
    const std::vector<Case> cases = {{"E1", {{"x", "a"}, {"y", "b'"}, {"z", "d'"}}},
                                     {"A1", {{"x", "a'"}, {"y", "b'"}, {"z", "d'"}}},
                                     {"A2", {{"x", "d"}, {"y", "a'"}, {"z", "b"}}}};
    for (const auto& c : cases) {
      const Verdict v = ctx.eval(c.law);
      std::map<std::string, Elem> asg;
      std::string ref;
      for (const auto& [var, el] : c.asg) {
        asg[var] = at(a, el);
        ref += std::string(ref.empty() ? "" : " ") + var + "=" + el;
      }
      const bool least = format_witness(a.elements(), v) == ref;
      o.require(!v.holds, std::string("fano ") + c.law + " fails");
      o.require(violated_at(full, law_text(c.law), asg), std::string("fano ") + c.law + " at (" + ref + ")");
      o.note(std::string("fano ") + c.law + ": least witness " + wit(a, v) +
             (least ? ", equal to the reference witness" : ", reference (" + ref + ") verified by evaluation"));
    }
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  const std::vector<std::string> names = {
      "th4_b1_a1",  "th4_b2_a2", "prop7_top",  "prop7_bottom", "prop7_complemented",   "prop8_weak",
      "prop8_dual", "prop8_om",  "prop1_a1",   "prop1_a2",     "th3_adj_e",            "th3_e_f",
      "th3_f_adj",  "th3_e_adj", "th1_a1",     "th1_a2",       "lemma_necessity_top", "lemma_necessity_bottom",
      "lemma_necessity_lambda_top", "lemma_necessity_lambda_bottom", "th5"};
  for (const auto& n : names) {
    const auto t0 = std::chrono::steady_clock::now();
    const Conjecture& c = find_conjecture(n);
    const std::size_t bound = n == "th5" ? 6 : c.default_bound;
    const SearchResult r = falsify(c, bound);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(r.hit_count == 0 && r.exhausted, n + " sweep");
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << n << " bound " << bound << ": " << r.models_examined << " models, " << r.hypothesis_models
         << " satisfy the hypotheses, " << r.hit_count << " hits, " << (r.exhausted ? "exhausted" : "not exhausted")
         << " (" << s << "s)";
    o.note(line.str());
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t ok = 0;
  const auto oml = orthomodular_lattices(10);
  for (const auto& l : oml) {
    const Algebra r = oml_to_pseudoring(l);
    const bool ring = check_pseudoring(r).holds;
    const Algebra back = pseudoring_to_oml(r);
    const bool tables = *back.binary("join") == *l.binary("join") && *back.binary("meet") == *l.binary("meet") &&
                        *back.unary("neg") == *l.unary("neg") && *back.order() == *l.order();
    const SasakiPair s4 = derive_sasaki(r, Scheme::S4);
    const SasakiPair s1 = derive_sasaki(l, Scheme::S1);
    const bool pair = s4.odot == s1.odot && s4.imp == s1.imp;
    o.require(ring && tables && pair, l.name() + " round trip");
    ok += ring && tables && pair;
  }
  {
    const Algebra r = oml_to_pseudoring(fixture("mo2"));
    const Algebra p = fixture("pseudoring6");
    o.require(*r.binary("plus") == *p.binary("plus") && *r.binary("times") == *p.binary("times"),
              "mo2 translates to pseudoring6");
  }
  o.note(std::to_string(ok) + "/" + std::to_string(oml.size()) + " orthomodular lattices round-trip; mo2 -> pseudoring6");
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::vector<Algebra> adjoint;
  for (const char* id : {"fig1", "fig7", "boolean_ring_1", "boolean_ring_2", "boolean_ring_3", "boolean_ring_4",
                         "pseudoring6"}) {
    adjoint.push_back(fixture(id));
  }
  for (auto& a : orthomodular_lattices(10)) adjoint.push_back(std::move(a));
  std::size_t ok = 0;
  for (const auto& a : adjoint) {
    const SasakiPair p = derive_sasaki(a, *scheme_for(a.kind()));
    const FinitePoset order = scheme_order(a);
    const Residual imp = residual_imp_from_odot(order, p.odot);
    const Residual odot = residual_odot_from_imp(order, p.imp);
    const bool good = imp.ok() && odot.ok() && *imp.table == p.imp && *odot.table == p.odot;
    o.require(good, a.name() + " residual reconstruction");
    ok += good;
  }
  o.note(std::to_string(ok) + "/" + std::to_string(adjoint.size()) + " adjoint pairs reconstructed in both directions");
  for (const char* id : {"fig5_ex1", "fano"}) {
    const Algebra a = fixture(id);
    const SasakiPair p = derive_sasaki(a, Scheme::S2);
    const Residual imp = residual_imp_from_odot(*a.order(), p.odot);
    const Residual odot = residual_odot_from_imp(*a.order(), p.imp);
    o.require(!imp.ok() && !odot.ok(), std::string(id) + " reconstruction fails");
    if (!imp.ok() && !odot.ok()) {
      o.note(std::string(id) + ": imp from odot fails at (" + a.element(imp.witness[0]) + ", " +
             a.element(imp.witness[1]) + "), odot from imp fails at (" + a.element(odot.witness[0]) + ", " +
             a.element(odot.witness[1]) + ")");
    }
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const Algebra fig4 = fixture("fig4");
  const UnaryTable& neg = *fig4.unary("neg");
  std::uint64_t adjoint = 0, a1_fail = 0, a2_fail = 0;
  const CompletionCount c = for_each_lambda_completion(*fig4.order(), 0, [&](const Algebra& l) {
    Algebra m = l;
    m.set_unary("neg", neg);
    ConditionContext ctx(m);
    const bool a1 = ctx.holds("A1"), a2 = ctx.holds("A2");
    a1_fail += !a1;
    a2_fail += !a2;
    adjoint += a1 && a2;
    return true;
  });
  o.require(c.exhausted && c.yielded == 20736, "fig4 completions enumerated exhaustively");
  o.require(adjoint == 0, "no fig4 completion is adjoint");
  o.note(std::to_string(c.yielded) + " completions, exhausted; A1 fails in " + std::to_string(a1_fail) +
         ", A2 fails in " + std::to_string(a2_fail) + ", adjoint in " + std::to_string(adjoint));
  return o;
}

Outcome criterion8() {
  Outcome o;
  const Algebra f = fixture("fig7");
  const Algebra sq = direct_product(f, f);
  ConditionContext ctx(sq);
  const bool a1 = ctx.holds("A1"), a2 = ctx.holds("A2"), lat = ctx.holds("lattice");
  o.require(sq.size() == 36 && a1 && a2 && !lat, "fig7 squared");
  o.note("fig7^2: " + std::to_string(sq.size()) + " elements, A1 " + (a1 ? "holds" : "fails") + ", A2 " +
         (a2 ? "holds" : "fails") + ", lattice " + (lat ? "true" : "false"));
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& l : lattices_up_to_iso(n)) {
      const Algebra top = with_unary(l, make_constant_unary(l, "1"));
      const Algebra bottom = with_unary(l, make_constant_unary(l, "0"));
      ConditionContext t(top), b(bottom);
      const std::map<std::string, Elem> w{{"x", *l.top()}, {"y", *l.bottom()}};
      const bool top_ok = t.holds("B1") && !t.holds("B2") && violated_at(top, law_text("B2"), w);
      const bool bottom_ok = b.holds("B2") && !b.holds("B1") && violated_at(bottom, law_text("B1"), w);
      o.require(top_ok && bottom_ok, l.name() + " independence");
      ++checked;
    }
  }
  o.note(std::to_string(checked) +
         " bounded lattices (2..6 elements): x' = 1 gives B1 and not B2, x' = 0 gives B2 and not B1, both failing at "
         "(x, y) = (1, 0)");
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::size_t stable = 0, valid = 0;
  for (const auto& f : fixture_list()) {
    const AlgebraFile orig = fixture_file(f.id);
    const std::string text = dump_algebra(orig.algebra, orig.expect);
    const AlgebraFile again = parse_algebra_file(text);
    const bool same = again.algebra == orig.algebra && again.expect == orig.expect &&
                      dump_algebra(again.algebra, again.expect) == text;
    o.require(same, f.id + " round trip");
    stable += same;
    const auto bad = validate_fixture(orig);
    o.require(bad.empty(), f.id + " expected verdicts");
    for (const auto& b : bad) o.note(f.id + ": " + b);
    valid += bad.empty();
  }
  o.note(std::to_string(stable) + "/" + std::to_string(fixture_list().size()) + " fixtures round-trip, " +
         std::to_string(valid) + " match their stored verdicts");
  return o;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> entries = {
      {1, "fixture tables", 1, criterion1},
      {2, "adjointness on orthomodular lattices", 10, criterion2},
      {3, "negative examples and witnesses", 5, criterion3},
      {4, "implication sweeps", 600, criterion4},
      {5, "lattice/pseudoring round trip", 10, criterion5},
      {6, "residual reconstruction", 5, criterion6},
      {7, "fig4 completions", 60, criterion7},
      {8, "direct square of fig7", 30, criterion8},
      {9, "independence of B1 and B2", 1, criterion9},
      {10, "format round trip and registry", 5, criterion10},
  };
  int failures = 0;
  for (const auto& e : entries) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + ex.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s < e.limit;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::cout.precision(2);
    std::cout << std::fixed << "criterion " << e.id << " " << (pass ? "PASS" : "FAIL") << " " << e.title << " ("
              << s << "s, limit " << e.limit << "s)\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    if (!in_time) std::cout << "    FAILED: over the time limit\n";
    std::cout.flush();
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
  return failures == 0 ? 0 : 1;
}
