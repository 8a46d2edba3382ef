#pragma once

// Exhaustive generators (posets, lattices, orthomodular lattices, unary
// operations, lambda-completions, ordered semirings, pseudorings) and the
// falsification sweeps built on them.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "oalg/builders.hpp"
#include "oalg/conditions.hpp"
#include "oalg/io.hpp"

namespace oalg {

// ---------------------------------------------------------------------------
// Posets up to isomorphism

namespace detail {

using Relation = std::vector<std::uint8_t>;  // n*n, leq[a*n+b]

/// Least relation bit string over all relabellings that respect (down-set, up-set) sizes.
inline std::vector<std::uint8_t> canonical_code(const Relation& r, std::size_t n) {
  std::vector<std::pair<std::pair<int, int>, std::size_t>> inv;
  for (std::size_t a = 0; a < n; ++a) {
    int down = 0, up = 0;
    for (std::size_t b = 0; b < n; ++b) {
      down += r[b * n + a];
      up += r[a * n + b];
    }
    inv.push_back({{down, -up}, a});
  }
  std::sort(inv.begin(), inv.end());
  std::vector<std::size_t> block_start(n);
  for (std::size_t i = 0; i < n; ++i) {
    block_start[i] = (i > 0 && inv[i].first == inv[i - 1].first) ? block_start[i - 1] : i;
  }
  std::vector<std::uint8_t> best;
  std::vector<std::size_t> perm(n);  // position -> element
  std::vector<std::uint8_t> used(n, 0);
  std::vector<std::uint8_t> code(n * n);
  std::function<void(std::size_t)> go = [&](std::size_t pos) {
    if (pos == n) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) code[i * n + j] = r[perm[i] * n + perm[j]];
      }
      if (best.empty() || code < best) best = code;
      return;
    }
    std::size_t end = pos;
    while (end < n && block_start[end] == block_start[pos]) ++end;
    for (std::size_t k = block_start[pos]; k < end; ++k) {
      const std::size_t e = inv[k].second;
      if (used[e]) continue;
      used[e] = 1;
      perm[pos] = e;
      go(pos + 1);
      used[e] = 0;
    }
  };
  go(0);
  return best;
}

/// One representative per isomorphism class; every representative lists elements
/// in a linear extension of its order.
inline std::vector<Relation> posets_iso(std::size_t n) {
  static std::map<std::size_t, std::vector<Relation>> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<Relation> out;
  if (n == 0) {
    out.push_back({});
  } else {
    std::vector<Relation> smaller;
    {
      std::vector<Relation> level{{}};
      for (std::size_t m = 1; m < n; ++m) {
        std::vector<Relation> next;
        std::set<std::vector<std::uint8_t>> seen;
        for (const auto& r : level) {
          const std::size_t k = m - 1;
          for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            bool ideal = true;
            for (std::size_t a = 0; a < k && ideal; ++a) {
              if (!(mask >> a & 1)) continue;
              for (std::size_t b = 0; b < k; ++b) {
                if (r[b * k + a] && !(mask >> b & 1)) ideal = false;
              }
            }
            if (!ideal) continue;
            Relation e(m * m, 0);
            for (std::size_t a = 0; a < k; ++a) {
              for (std::size_t b = 0; b < k; ++b) e[a * m + b] = r[a * k + b];
              e[a * m + k] = mask >> a & 1;
            }
            e[k * m + k] = 1;
            if (seen.insert(canonical_code(e, m)).second) next.push_back(std::move(e));
          }
        }
        level = std::move(next);
      }
      smaller = std::move(level);
    }
    const std::size_t k = n - 1;
    std::set<std::vector<std::uint8_t>> seen;
    for (const auto& r : smaller) {
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        bool ideal = true;
        for (std::size_t a = 0; a < k && ideal; ++a) {
          if (!(mask >> a & 1)) continue;
          for (std::size_t b = 0; b < k; ++b) {
            if (r[b * k + a] && !(mask >> b & 1)) ideal = false;
          }
        }
        if (!ideal) continue;
        Relation e(n * n, 0);
        for (std::size_t a = 0; a < k; ++a) {
          for (std::size_t b = 0; b < k; ++b) e[a * n + b] = r[a * k + b];
          e[a * n + k] = mask >> a & 1;
        }
        e[k * n + k] = 1;
        if (seen.insert(canonical_code(e, n)).second) out.push_back(std::move(e));
      }
    }
  }
  memo.emplace(n, out);
  return out;
}

}  // namespace detail

/// Posets on n elements up to isomorphism, elements named p0, p1, ...
inline std::vector<FinitePoset> posets_up_to_iso(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  std::vector<FinitePoset> out;
  for (auto& r : detail::posets_iso(n)) out.push_back(FinitePoset::from_relation(names, r));
  return out;
}

/// Bounded posets on n elements up to isomorphism: 0, an arbitrary poset, 1.
inline std::vector<FinitePoset> bounded_posets_up_to_iso(std::size_t n) {
  std::vector<FinitePoset> out;
  if (n == 0) return out;
  const auto names = bounded_names(n);
  if (n == 1) {
    out.push_back(FinitePoset::from_relation(names, {1}));
    return out;
  }
  const std::size_t k = n - 2;
  for (const auto& inner : detail::posets_iso(k)) {
    std::vector<std::uint8_t> leq(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      leq[0 * n + a] = 1;
      leq[a * n + (n - 1)] = 1;
    }
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) leq[(a + 1) * n + (b + 1)] = inner[a * k + b];
    }
    out.push_back(FinitePoset::from_relation(names, std::move(leq)));
  }
  return out;
}

/// Lattices on n elements up to isomorphism.
inline std::vector<Algebra> lattices_up_to_iso(std::size_t n) {
  std::vector<Algebra> out;
  std::size_t i = 0;
  for (const auto& p : bounded_posets_up_to_iso(n)) {
    try {
      out.push_back(lattice_from_poset(p, "lattice" + std::to_string(n) + "_" + std::to_string(i)));
      ++i;
    } catch (const Error& e) {
      if (e.code() != Errc::NotALattice) throw;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orthomodular lattices

/// Orthomodular lattices with at most max_n elements (at least two), up to isomorphism.
/// Elements are 0, a, a', b, b', ..., 1 with x' the paired element.
inline std::vector<Algebra> orthomodular_lattices(std::size_t max_n) {
  std::vector<Algebra> out;
  for (std::size_t n = 2; n <= max_n; n += 2) {
    const std::size_t m = n / 2 - 1;  // orbits other than {0, 1}
    std::vector<std::string> names{"0"};
    static constexpr std::string_view kLetters = "abcdefghijklmnpqrstuwxyz";
    for (std::size_t i = 0; i < m; ++i) {
      names.emplace_back(1, kLetters[i]);
      names.push_back(std::string(1, kLetters[i]) + "'");
    }
    names.emplace_back("1");
    auto el = [](std::size_t orbit, bool primed) { return 1 + 2 * orbit + (primed ? 1 : 0); };
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    }
    std::size_t combos = 1;
    for (std::size_t p = 0; p < pairs.size(); ++p) combos *= 5;
    // Orbit relabellings with swaps, for the canonical form.
    std::vector<std::vector<std::size_t>> relabel;
    {
      std::vector<std::size_t> orbit_perm(m);
      for (std::size_t i = 0; i < m; ++i) orbit_perm[i] = i;
      do {
        for (std::uint32_t swaps = 0; swaps < (1u << m); ++swaps) {
          std::vector<std::size_t> map(n);
          map[0] = 0;
          map[n - 1] = n - 1;
          for (std::size_t i = 0; i < m; ++i) {
            const bool s = swaps >> i & 1;
            map[el(i, false)] = el(orbit_perm[i], s);
            map[el(i, true)] = el(orbit_perm[i], !s);
          }
          relabel.push_back(std::move(map));
        }
      } while (std::next_permutation(orbit_perm.begin(), orbit_perm.end()));
    }
    std::set<std::vector<std::uint8_t>> seen;
    std::vector<Elem> neg(n);
    neg[0] = static_cast<Elem>(n - 1);
    neg[n - 1] = 0;
    for (std::size_t i = 0; i < m; ++i) {
      neg[el(i, false)] = static_cast<Elem>(el(i, true));
      neg[el(i, true)] = static_cast<Elem>(el(i, false));
    }
    for (std::size_t code = 0; code < combos; ++code) {
      std::vector<std::uint8_t> leq(n * n, 0);
      for (std::size_t a = 0; a < n; ++a) {
        leq[a * n + a] = 1;
        leq[0 * n + a] = 1;
        leq[a * n + (n - 1)] = 1;
      }
      auto rel = [&](std::size_t x, std::size_t y) {
        leq[x * n + y] = 1;
        leq[neg[y] * n + neg[x]] = 1;
      };
      std::size_t c = code;
      for (const auto& [i, j] : pairs) {
        switch (c % 5) {
          case 1: rel(el(i, false), el(j, false)); break;
          case 2: rel(el(j, false), el(i, false)); break;
          case 3: rel(el(i, false), el(j, true)); break;
          case 4: rel(el(i, true), el(j, false)); break;
          default: break;
        }
        c /= 5;
      }
      bool transitive = true;
      for (std::size_t a = 0; a < n && transitive; ++a) {
        for (std::size_t b = 0; b < n && transitive; ++b) {
          if (!leq[a * n + b]) continue;
          for (std::size_t d = 0; d < n; ++d) {
            if (leq[b * n + d] && !leq[a * n + d]) {
              transitive = false;
              break;
            }
          }
        }
      }
      if (!transitive) continue;
      bool antisym = true;
      for (std::size_t a = 0; a < n && antisym; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (a != b && leq[a * n + b] && leq[b * n + a]) antisym = false;
        }
      }
      if (!antisym) continue;
      std::vector<std::uint8_t> best;
      for (const auto& map : relabel) {
        std::vector<std::uint8_t> img(n * n);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) img[map[a] * n + map[b]] = leq[a * n + b];
        }
        if (best.empty() || img < best) best = img;
      }
      if (seen.count(best)) continue;
      std::optional<Algebra> lat;
      try {
        lat = lattice_from_poset(FinitePoset::from_relation(names, leq), "oml" + std::to_string(n));
      } catch (const Error& e) {
        if (e.code() != Errc::NotALattice) throw;
        continue;
      }
      lat->set_unary("neg", UnaryTable(neg));
      if (!lattice_flags(*lat).at("orthomodular").holds) continue;
      seen.insert(best);
      lat->set_name("oml" + std::to_string(n) + "_" + std::to_string(seen.size() - 1));
      out.push_back(std::move(*lat));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Unary operations

struct UnaryFilter {
  bool complementation = false;
  bool involution = false;
  bool antitone = false;
  bool surjective = false;
};

inline UnaryFilter parse_unary_filter(const std::vector<std::string>& names) {
  UnaryFilter f;
  for (const auto& n : names) {
    if (n == "complementation" || n == "complemented") {
      f.complementation = true;
    } else if (n == "involution") {
      f.involution = true;
    } else if (n == "antitone") {
      f.antitone = true;
    } else if (n == "surjective") {
      f.surjective = true;
    } else if (n == "orthocomplementation") {
      f.complementation = f.involution = f.antitone = true;
    } else {
      throw Error(Errc::UnknownCondition, "unknown unary filter '" + n + "'");
    }
  }
  return f;
}

/// Calls fn on every unary table passing the filter, in lexicographic order of
/// the value vector; fn returns false to stop. Returns false if stopped early.
/// The view needs join, meet and bounds for complementation and the order for antitone.
inline bool for_each_unary_op(const OpsView& v, const UnaryFilter& f,
                              const std::function<bool(const std::vector<Elem>&)>& fn) {
  const auto n = static_cast<Elem>(v.n);
  std::vector<std::vector<Elem>> cand(n);
  if (f.complementation) {
    const Elem* join = v.op(Connective::Join);
    const Elem* meet = v.op(Connective::Meet);
    if (!join || !meet) throw Error(Errc::MissingOperation, "complementation filter needs join and meet");
    if (!v.zero || !v.one) throw Error(Errc::UnboundedAlgebra, "complementation filter needs bounds");
  }
  if (f.antitone && v.leq == nullptr) throw Error(Errc::MissingOperation, "antitone filter needs an order");
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (f.complementation && (v.op(Connective::Join)[x * n + y] != *v.one || v.op(Connective::Meet)[x * n + y] != *v.zero)) {
        continue;
      }
      cand[x].push_back(y);
    }
  }
  std::vector<Elem> u(n, 0);
  std::vector<std::uint8_t> set(n, 0);
  std::vector<std::uint32_t> hits(n, 0);
  bool stopped = false;
  std::function<void(Elem)> go = [&](Elem x) {
    if (stopped) return;
    if (x == n) {
      if (f.surjective && std::find(hits.begin(), hits.end(), 0u) != hits.end()) return;
      if (!fn(u)) stopped = true;
      return;
    }
    for (Elem y : cand[x]) {
      if (f.antitone) {
        bool ok = true;
        for (Elem w = 0; w < x && ok; ++w) {
          if (v.leq[w * n + x] && !v.leq[y * n + u[w]]) ok = false;
          if (v.leq[x * n + w] && !v.leq[u[w] * n + y]) ok = false;
        }
        if (!ok) continue;
      }
      if (f.surjective) {
        // remaining positions must be able to cover the missing values
        std::size_t missing = 0;
        for (Elem w = 0; w < n; ++w) missing += (hits[w] == 0 && w != y) ? 1 : 0;
        if (missing > n - x - 1) continue;
      }
      u[x] = y;
      ++hits[y];
      go(x + 1);
      --hits[y];
      if (stopped) return;
    }
  };
  if (f.involution) {
    std::function<void(Elem)> inv = [&](Elem x) {
      if (stopped) return;
      if (x == n) {
        if (f.surjective && std::find(hits.begin(), hits.end(), 0u) != hits.end()) return;
        if (!fn(u)) stopped = true;
        return;
      }
      // Positions already fixed by an earlier partner keep their value.
      if (set[x]) {
        const Elem y = u[x];
        if (std::find(cand[x].begin(), cand[x].end(), y) == cand[x].end()) return;
        if (f.antitone) {
          for (Elem w = 0; w < x; ++w) {
            if (v.leq[w * n + x] && !v.leq[y * n + u[w]]) return;
            if (v.leq[x * n + w] && !v.leq[u[w] * n + y]) return;
          }
        }
        inv(x + 1);
        return;
      }
      for (Elem y : cand[x]) {
        if (y < x) continue;  // smaller positions are fixed already
        if (y > x && (set[y] || std::find(cand[y].begin(), cand[y].end(), x) == cand[y].end())) continue;
        if (f.antitone) {
          bool ok = true;
          for (Elem w = 0; w < x && ok; ++w) {
            if (v.leq[w * n + x] && !v.leq[y * n + u[w]]) ok = false;
            if (v.leq[x * n + w] && !v.leq[u[w] * n + y]) ok = false;
          }
          if (!ok) continue;
        }
        u[x] = y;
        set[x] = 1;
        ++hits[y];
        if (y != x) {
          u[y] = x;
          set[y] = 1;
          ++hits[x];
        }
        inv(x + 1);
        if (y != x) {
          set[y] = 0;
          --hits[x];
        }
        set[x] = 0;
        --hits[y];
        if (stopped) return;
      }
    };
    inv(0);
  } else {
    go(0);
  }
  return !stopped;
}

inline std::vector<UnaryTable> enumerate_unary_ops(const Algebra& a, const UnaryFilter& f, std::size_t cap = 0) {
  std::vector<UnaryTable> out;
  for_each_unary_op(a.view(), f, [&](const std::vector<Elem>& u) {
    out.emplace_back(u);
    return cap == 0 || out.size() < cap;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Lambda-completions

struct CompletionSpec {
  FinitePoset poset;
  std::vector<std::pair<Elem, Elem>> pairs;  // incomparable, a < b by index
  std::vector<std::vector<Elem>> join_candidates;
  std::vector<std::vector<Elem>> meet_candidates;
};

inline CompletionSpec completion_spec(const FinitePoset& p) {
  CompletionSpec s{p, {}, {}, {}};
  const auto n = static_cast<Elem>(p.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (p.comparable(a, b)) continue;
      const ConePair c = cones(p, a, b);
      if (c.upper.empty() || c.lower.empty()) {
        throw Error(Errc::NoBounds, "pair has an empty cone", {p.name(a), p.name(b)});
      }
      s.pairs.emplace_back(a, b);
      s.join_candidates.push_back(c.upper);
      s.meet_candidates.push_back(c.lower);
    }
  }
  return s;
}

struct CompletionCount {
  std::uint64_t yielded = 0;
  bool exhausted = true;
};

namespace detail {

/// All choices for one operation (join or meet) passing its weak associativity law.
inline std::vector<BinaryTable> valid_operations(const CompletionSpec& s, bool join) {
  const FinitePoset& p = s.poset;
  const auto n = static_cast<Elem>(p.size());
  BinaryTable base(n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (p.leq(x, y)) base.set(x, y, join ? y : x);
      if (p.leq(y, x)) base.set(x, y, join ? x : y);
    }
  }
  const auto& cands = join ? s.join_candidates : s.meet_candidates;
  static const CompiledLaw sup_law(parse_law("x v ((x v y) v z) = (x v y) v z"), "sup_weak_associative");
  static const CompiledLaw inf_law(parse_law("x ^ ((x ^ y) ^ z) = (x ^ y) ^ z"), "inf_weak_associative");
  std::vector<BinaryTable> out;
  std::vector<std::size_t> idx(s.pairs.size(), 0);
  for (;;) {
    BinaryTable t = base;
    for (std::size_t i = 0; i < s.pairs.size(); ++i) {
      const auto [a, b] = s.pairs[i];
      t.set(a, b, cands[i][idx[i]]);
      t.set(b, a, cands[i][idx[i]]);
    }
    OpsView v;
    v.n = n;
    v.set(join ? Connective::Join : Connective::Meet, t.data());
    if ((join ? sup_law : inf_law).check(v).holds) out.push_back(std::move(t));
    std::size_t i = s.pairs.size();
    while (i > 0) {
      --i;
      if (++idx[i] < cands[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (s.pairs.empty()) return out;
  }
}

}  // namespace detail

/// Every lambda-lattice whose induced order is p, joins varying slowest; fn returns
/// false to stop. Stops after `cap` yields when cap > 0.
inline CompletionCount for_each_lambda_completion(const FinitePoset& p, std::size_t cap,
                                                  const std::function<bool(const Algebra&)>& fn,
                                                  std::string name = "completion") {
  const CompletionSpec s = completion_spec(p);
  const auto sups = detail::valid_operations(s, true);
  const auto infs = detail::valid_operations(s, false);
  CompletionCount c;
  for (const auto& sup : sups) {
    for (const auto& inf : infs) {
      if (cap && c.yielded >= cap) {
        c.exhausted = false;
        return c;
      }
      Algebra a = make_lambda(name + "_" + std::to_string(c.yielded), p.names(), sup, inf);
      ++c.yielded;
      if (!fn(a)) {
        c.exhausted = false;
        return c;
      }
    }
  }
  return c;
}

struct LambdaCompletions {
  std::vector<Algebra> algebras;
  bool exhausted = true;
};

inline LambdaCompletions enumerate_lambda_completions(const FinitePoset& p, std::size_t cap = 0) {
  LambdaCompletions out;
  const CompletionCount c = for_each_lambda_completion(p, cap, [&](const Algebra& a) {
    out.algebras.push_back(a);
    return true;
  });
  out.exhausted = c.exhausted;
  return out;
}

/// Number of completions without materialising them.
inline std::uint64_t count_lambda_completions(const FinitePoset& p) {
  const CompletionSpec s = completion_spec(p);
  return static_cast<std::uint64_t>(detail::valid_operations(s, true).size()) *
         detail::valid_operations(s, false).size();
}

// ---------------------------------------------------------------------------
// Ordered semirings

namespace detail {

/// Symmetric tables with a fixed row 0, passing `keep`.
inline void symmetric_tables(Elem n, const std::function<Elem(Elem)>& row0,
                             const std::function<bool(const BinaryTable&)>& keep,
                             std::vector<BinaryTable>& out) {
  std::vector<std::pair<Elem, Elem>> cells;
  for (Elem x = 1; x < n; ++x) {
    for (Elem y = x; y < n; ++y) cells.emplace_back(x, y);
  }
  BinaryTable t(n);
  for (Elem y = 0; y < n; ++y) {
    t.set(0, y, row0(y));
    t.set(y, 0, row0(y));
  }
  std::vector<Elem> idx(cells.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      t.set(cells[i].first, cells[i].second, idx[i]);
      t.set(cells[i].second, cells[i].first, idx[i]);
    }
    if (keep(t)) out.push_back(t);
    std::size_t i = cells.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++idx[i] < n) {
        done = false;
        break;
      }
      idx[i] = 0;
    }
    if (done) return;
  }
}

inline bool associative(const BinaryTable& t) {
  const auto n = static_cast<Elem>(t.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (t(t(x, y), z) != t(x, t(y, z))) return false;
      }
    }
  }
  return true;
}

/// All partial orders on n labelled elements.
inline std::vector<Relation> labelled_orders(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b) off.emplace_back(a, b);
    }
  }
  std::vector<Relation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
    Relation r(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) r[a * n + a] = 1;
    for (std::size_t i = 0; i < off.size(); ++i) {
      if (mask >> i & 1) r[off[i].first * n + off[i].second] = 1;
    }
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (a != b && r[a * n + b] && r[b * n + a]) ok = false;
        if (!r[a * n + b]) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (r[b * n + c] && !r[a * n + c]) {
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

/// Commutative semirings (0 = element 0) with a distributive product, as (plus, times) pairs.
inline std::vector<std::pair<BinaryTable, BinaryTable>> semiring_reducts(std::size_t n) {
  std::vector<std::pair<BinaryTable, BinaryTable>> out;
  if (n == 0) return out;
  const auto m = static_cast<Elem>(n);
  std::vector<BinaryTable> pluses, timeses;
  detail::symmetric_tables(m, [](Elem y) { return y; }, detail::associative, pluses);
  detail::symmetric_tables(m, [](Elem) { return Elem{0}; }, detail::associative, timeses);
  for (const auto& p : pluses) {
    for (const auto& t : timeses) {
      bool dist = true;
      for (Elem x = 0; x < m && dist; ++x) {
        for (Elem y = 0; y < m && dist; ++y) {
          for (Elem z = 0; z < m; ++z) {
            if (t(x, p(y, z)) != p(t(x, y), t(x, z))) {
              dist = false;
              break;
            }
          }
        }
      }
      if (dist) out.emplace_back(p, t);
    }
  }
  return out;
}

inline std::vector<std::string> plain_names(std::size_t n) {
  std::vector<std::string> names{"0"};
  static constexpr std::string_view kLetters = "abcdefghijklmnpqrstuwxyz";
  for (std::size_t i = 1; i < n; ++i) names.emplace_back(1, kLetters[i - 1]);
  return names;
}

/// Every ordered semiring with a unary operation on n labelled elements built
/// from the given reduct: all x' with x x' = 0, all partial orders.
inline bool for_each_ordered_semiring(const BinaryTable& plus, const BinaryTable& times,
                                      const std::function<bool(const Algebra&)>& fn) {
  const auto n = static_cast<Elem>(plus.size());
  static std::map<std::size_t, std::vector<detail::Relation>> orders_memo;
  static std::mutex mu;
  const std::vector<detail::Relation>* orders;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = orders_memo.find(n);
    if (it == orders_memo.end()) it = orders_memo.emplace(n, detail::labelled_orders(n)).first;
    orders = &it->second;
  }
  const auto names = plain_names(n);
  std::vector<std::vector<Elem>> cand(n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (times(x, y) == 0) cand[x].push_back(y);
    }
  }
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    std::vector<Elem> neg(n);
    for (Elem x = 0; x < n; ++x) neg[x] = cand[x][idx[x]];
    for (const auto& r : *orders) {
      Algebra a(Kind::Semiring, "semiring", names);
      a.set_binary("plus", plus);
      a.set_binary("times", times);
      a.set_unary("neg", UnaryTable(neg));
      a.set_constant("zero", 0);
      a.set_order(FinitePoset::from_relation(names, r));
      if (!fn(a)) return false;
    }
    Elem i = n;
    bool done = true;
    while (i > 0) {
      --i;
      if (++idx[i] < cand[i].size()) {
        done = false;
        break;
      }
      idx[i] = 0;
    }
    if (done) return true;
  }
}

// ---------------------------------------------------------------------------
// Orthomodular pseudorings

/// Pseudorings whose product is the meet of `lattice`: 1 + x is an involution
/// swapping 0 and 1, and x + y = 1 + (1 + x(1 + y))(1 + y(1 + x)).
inline bool for_each_pseudoring_on(const Algebra& lattice, const std::function<bool(const Algebra&)>& fn) {
  const auto n = static_cast<Elem>(lattice.size());
  const BinaryTable& meet = *lattice.binary("meet");
  const Elem zero = *lattice.bottom();
  const Elem one = *lattice.top();
  std::vector<Elem> inner;
  for (Elem x = 0; x < n; ++x) {
    if (x != zero && x != one) inner.push_back(x);
  }
  std::vector<Elem> c(n, 0);  // c[x] = 1 + x
  c[zero] = one;
  c[one] = zero;
  std::vector<std::uint8_t> set(n, 0);
  set[zero] = set[one] = 1;
  bool stopped = false;
  std::uint64_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (stopped) return;
    while (i < inner.size() && set[inner[i]]) ++i;
    if (i == inner.size()) {
      BinaryTable plus(n);
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x) {
        for (Elem y = 0; y < n; ++y) {
          const Elem v = c[meet(c[meet(x, c[y])], c[meet(y, c[x])])];
          plus.set(x, y, v);
        }
      }
      Algebra r(Kind::Pseudoring, lattice.name() + "_ring" + std::to_string(count++), lattice.elements());
      r.set_binary("plus", std::move(plus));
      r.set_binary("times", meet);
      r.set_constant("zero", zero);
      r.set_constant("one", one);
      if (check_pseudoring(r).holds && !fn(r)) stopped = true;
      return;
    }
    const Elem x = inner[i];
    for (Elem y : inner) {
      if (set[y] && y != x) continue;
      if (meet(x, y) != zero) continue;
      c[x] = y;
      c[y] = x;
      set[x] = set[y] = 1;
      go(i + 1);
      set[x] = 0;
      set[y] = 0;
      if (stopped) return;
    }
  };
  if (n == 1) {
    Algebra r(Kind::Pseudoring, lattice.name() + "_ring0", lattice.elements());
    r.set_binary("plus", BinaryTable(1));
    r.set_binary("times", meet);
    r.set_constant("zero", 0);
    r.set_constant("one", 0);
    return !check_pseudoring(r).holds || fn(r);
  }
  go(0);
  return !stopped;
}

// ---------------------------------------------------------------------------
// Falsification

struct Conjecture {
  std::string name;
  Kind kind;
  std::vector<std::string> hypotheses;
  std::vector<std::string> conclusions;  // empty: census of hypothesis models
  std::size_t default_bound;
  std::string statement;
};

inline const std::vector<Conjecture>& conjecture_registry() {
  static const std::vector<Conjecture> reg = {
      {"th4_b1_a1", Kind::Lattice, {"B1"}, {"A1"}, 6, "B1 implies A1 on lattices with a unary operation"},
      {"th4_b2_a2", Kind::Lattice, {"B2"}, {"A2"}, 6, "B2 implies A2 on lattices with a unary operation"},
      {"prop7_top", Kind::Lattice, {"modular", "has_top", "top_complement"}, {"B1", "A1"}, 6,
       "modular with x v x' = 1 implies B1 and A1"},
      {"prop7_bottom", Kind::Lattice, {"modular", "has_bottom", "bottom_complement"}, {"B2", "A2"}, 6,
       "modular with x ^ x' = 0 implies B2 and A2"},
      {"prop7_complemented", Kind::Lattice, {"modular", "complemented"}, {"adjoint"}, 6,
       "modular complemented implies adjoint"},
      {"prop8_weak", Kind::Lattice, {"involution", "weakly_orthomodular"}, {"B1", "A1"}, 6,
       "weakly orthomodular with an involution implies B1 and A1"},
      {"prop8_dual", Kind::Lattice, {"dually_weakly_orthomodular"}, {"B2", "A2"}, 6,
       "dually weakly orthomodular implies B2 and A2"},
      {"prop8_om", Kind::Lattice, {"orthomodular"}, {"adjoint"}, 8, "orthomodular implies adjoint"},
      {"lemma_necessity_top", Kind::Lattice, {"has_top", "A1"}, {"top_complement"}, 6,
       "A1 with a top implies x v x' = 1"},
      {"lemma_necessity_bottom", Kind::Lattice, {"has_bottom", "A2"}, {"bottom_complement"}, 6,
       "A2 with a bottom implies x ^ x' = 0"},
      {"lemma_necessity_lambda_top", Kind::Lambda, {"has_top", "A1"}, {"top_complement"}, 6,
       "A1 with a top implies x v x' = 1 on lambda-lattices"},
      {"lemma_necessity_lambda_bottom", Kind::Lambda, {"has_bottom", "A2"}, {"bottom_complement"}, 6,
       "A2 with a bottom implies x ^ x' = 0 on lambda-lattices"},
      {"prop1_a1", Kind::Lambda, {"D1", "F1"}, {"A1"}, 6, "D1 and F1 imply A1"},
      {"prop1_a2", Kind::Lambda, {"D2", "F2"}, {"A2"}, 6, "D2 and F2 imply A2"},
      {"th3_adj_e", Kind::Lambda, {"D1", "D2", "adjoint"}, {"E1", "E2"}, 6, "under D1 and D2, adjoint implies E1 and E2"},
      {"th3_e_f", Kind::Lambda, {"D1", "D2", "E1", "E2"}, {"F1", "F2"}, 6, "under D1 and D2, E1 and E2 imply F1 and F2"},
      {"th3_f_adj", Kind::Lambda, {"D1", "D2", "F1", "F2"}, {"adjoint"}, 6, "under D1 and D2, F1 and F2 imply adjoint"},
      {"th3_e_adj", Kind::Lambda, {"D1", "D2", "E1", "E2"}, {"adjoint"}, 6, "under D1 and D2, E1 and E2 imply adjoint"},
      {"th1_a1", Kind::Semiring, {"c3", "c4"}, {"A1"}, 4, "c3 and c4 imply A1"},
      {"th1_a2", Kind::Semiring, {"c5", "c6"}, {"A2"}, 4, "c5 and c6 imply A2"},
      {"th5", Kind::Lambda, {"surjective", "C1", "C2", "adjoint"}, {"lattice"}, 6,
       "surjective ' with C1, C2 and an adjoint pair implies a lattice"},
      {"final_s4", Kind::Pseudoring, {"pseudoring"}, {"adjoint"}, 6, "the S4 pair of a pseudoring is adjoint"},
      {"open_c1c2", Kind::Lambda, {"!lattice", "C1", "C2", "adjoint"}, {}, 6,
       "census of non-lattice lambda-lattices with C1, C2 and an adjoint pair"},
      {"sanity_inverted", Kind::Lattice, {"orthomodular"}, {"!A1"}, 5,
       "deliberately false: orthomodular implies A1 fails"},
  };
  return reg;
}

inline const Conjecture& find_conjecture(std::string_view name) {
  for (const auto& c : conjecture_registry()) {
    if (c.name == name) return c;
  }
  throw Error(Errc::UnknownConjecture, std::string(name));
}

inline std::size_t bound_guard(Kind k) noexcept {
  switch (k) {
    case Kind::Lattice:
    case Kind::Lambda:
    case Kind::Poset: return 8;
    case Kind::Semiring: return 5;
    case Kind::Pseudoring: return 8;
  }
  return 8;
}

struct SearchHit {
  std::string description;
  Algebra algebra;
  VerdictMap verdicts;
};

struct SearchResult {
  std::string conjecture;
  std::size_t bound = 0;
  std::uint64_t models_examined = 0;
  std::uint64_t hypothesis_models = 0;
  std::uint64_t hit_count = 0;
  std::vector<SearchHit> hits;  // the first max_hits, in enumeration order
  bool exhausted = true;
};

struct SearchOptions {
  std::size_t threads = 0;  // 0: hardware concurrency
  std::size_t max_hits = 64;
  std::optional<std::chrono::milliseconds> time_limit;
  std::optional<std::size_t> guard;  // overrides bound_guard
};

namespace detail {

struct UnitResult {
  std::uint64_t examined = 0;
  std::uint64_t hypothesis_models = 0;
  std::uint64_t hit_count = 0;
  std::vector<SearchHit> hits;
  bool finished = false;
};

inline std::string describe(const Algebra& a) {
  std::string s = std::string(kind_name(a.kind())) + " " + a.name() + " [";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? " " : "") + a.element(static_cast<Elem>(i));
  s += "]";
  if (a.order()) s += " covers" + format_covers(*a.order());
  if (const UnaryTable* u = a.unary("neg")) {
    s += " neg:";
    for (Elem x = 0; x < a.size(); ++x) s += " " + a.element(x) + "=" + a.element((*u)(x));
  }
  return s;
}

}  // namespace detail

/// Evaluates one model; returns true when it is a hit.
inline bool evaluate_conjecture(const Conjecture& c, const Algebra& a, VerdictMap* verdicts,
                                bool* hypothesis_holds = nullptr) {
  ConditionContext ctx(a);
  if (hypothesis_holds) *hypothesis_holds = false;
  for (const auto& h : c.hypotheses) {
    if (!ctx.holds(h)) return false;
  }
  if (hypothesis_holds) *hypothesis_holds = true;
  bool hit = c.conclusions.empty();
  for (const auto& k : c.conclusions) {
    if (!ctx.holds(k)) hit = true;
  }
  if (hit && verdicts) {
    for (const auto& h : c.hypotheses) (*verdicts)[h] = ctx.eval(h);
    for (const auto& k : c.conclusions) (*verdicts)[k] = ctx.eval(k);
  }
  return hit;
}

inline UnaryFilter hypothesis_filter(const Conjecture& c) {
  UnaryFilter f;
  for (const auto& h : c.hypotheses) {
    if (h == "complemented") f.complementation = true;
    if (h == "orthomodular") f.complementation = f.involution = f.antitone = true;
    if (h == "involution") f.involution = true;
    if (h == "antitone") f.antitone = true;
    if (h == "surjective") f.surjective = true;
  }
  return f;
}

inline SearchResult falsify(const Conjecture& c, std::size_t bound, const SearchOptions& opts = {}) {
  const std::size_t guard = opts.guard.value_or(bound_guard(c.kind));
  if (bound > guard) {
    throw Error(Errc::BoundTooLarge, "bound " + std::to_string(bound) + " exceeds the guard " + std::to_string(guard) +
                                         " for " + kind_name(c.kind));
  }
  const auto start = std::chrono::steady_clock::now();
  std::atomic<bool> expired{false};
  auto check_time = [&] {
    if (!opts.time_limit) return false;
    if (expired.load()) return true;
    if (std::chrono::steady_clock::now() - start > *opts.time_limit) expired = true;
    return expired.load();
  };

  // Work units: each unit is a base structure whose models are examined by one worker.
  std::vector<std::function<void(detail::UnitResult&)>> units;
  const UnaryFilter filter = hypothesis_filter(c);
  auto visit = [&c, &opts, &check_time](detail::UnitResult& r, const Algebra& a) {
    if (check_time()) return false;
    ++r.examined;
    VerdictMap verdicts;
    bool hyp = false;
    if (evaluate_conjecture(c, a, &verdicts, &hyp)) {
      ++r.hit_count;
      if (r.hits.size() < opts.max_hits) r.hits.push_back({detail::describe(a), a, std::move(verdicts)});
    }
    if (hyp) ++r.hypothesis_models;
    return true;
  };
  auto with_unaries = [filter, visit](const Algebra& base) {
    return [filter, visit, base](detail::UnitResult& r) {
      Algebra a = base;
      r.finished = for_each_unary_op(base.view(), filter, [&](const std::vector<Elem>& u) {
        a.set_unary("neg", UnaryTable(u));
        return visit(r, a);
      });
    };
  };

  switch (c.kind) {
    case Kind::Lattice:
      for (std::size_t n = 1; n <= bound; ++n) {
        for (auto& l : lattices_up_to_iso(n)) units.push_back(with_unaries(l));
      }
      break;
    case Kind::Lambda:
      for (std::size_t n = 1; n <= bound; ++n) {
        std::size_t i = 0;
        for (const auto& p : bounded_posets_up_to_iso(n)) {
          for_each_lambda_completion(
              p, 0,
              [&](const Algebra& a) {
                units.push_back(with_unaries(a));
                return true;
              },
              "lambda" + std::to_string(n) + "_" + std::to_string(i++));
        }
      }
      break;
    case Kind::Semiring:
      for (std::size_t n = 1; n <= bound; ++n) {
        for (auto& [plus, times] : semiring_reducts(n)) {
          units.push_back([plus, times, visit](detail::UnitResult& r) {
            r.finished = for_each_ordered_semiring(plus, times, [&](const Algebra& a) { return visit(r, a); });
          });
        }
      }
      for (std::size_t k = 1; k <= 3; ++k) {
        units.push_back([k, visit](detail::UnitResult& r) { r.finished = visit(r, build_boolean_ring(k)); });
      }
      break;
    case Kind::Pseudoring:
      for (std::size_t n = 1; n <= bound; ++n) {
        for (auto& l : lattices_up_to_iso(n)) {
          units.push_back([l, visit](detail::UnitResult& r) {
            r.finished = for_each_pseudoring_on(l, [&](const Algebra& a) { return visit(r, a); });
          });
        }
      }
      break;
    case Kind::Poset:
      throw Error(Errc::KindMismatch, "conjectures are stated for algebras, not posets");
  }

  std::vector<detail::UnitResult> results(units.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= units.size()) return;
      if (check_time()) return;
      units[i](results[i]);
    }
  };
  std::size_t threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(1, units.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SearchResult out;
  out.conjecture = c.name;
  out.bound = bound;
  for (auto& r : results) {
    out.models_examined += r.examined;
    out.hypothesis_models += r.hypothesis_models;
    out.hit_count += r.hit_count;
    for (auto& h : r.hits) {
      if (out.hits.size() < opts.max_hits) out.hits.push_back(std::move(h));
    }
    if (!r.finished) out.exhausted = false;
  }
  return out;
}

inline SearchResult falsify(std::string_view name, std::optional<std::size_t> bound = std::nullopt,
                            const SearchOptions& opts = {}) {
  const Conjecture& c = find_conjecture(name);
  return falsify(c, bound.value_or(c.default_bound), opts);
}

}  // namespace oalg
